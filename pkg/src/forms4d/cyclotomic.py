"""Exact arithmetic in rings of cyclotomic integers.

Elements of Z[zeta_n] live in the power basis {1, zeta, ..., zeta^(phi(n)-1)}
modulo the n-th cyclotomic polynomial. Traces are exact regular-representation
traces; the floating-point conjugate sum exists only as an independent test
oracle and never feeds the implementation.
"""

from __future__ import annotations

import functools
import os
from dataclasses import dataclass
from math import gcd
from typing import Sequence

import mpmath

from .exactla import IntMatrix

DEFAULT_ORACLE_DIGITS = 30
PRECISION_ENV_VAR = "FORMS4D_PRECISION"


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial, constant term first; () is the zero polynomial."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero (use from_coeffs)")

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int]) -> "IntPolynomial":
        data = list(coeffs)
        while data and data[-1] == 0:
            data.pop()
        return cls(tuple(data))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return IntPolynomial.from_coeffs([x + y for x, y in zip(a, b)])

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c:
                for j, d in enumerate(other.coeffs):
                    out[i + j] += c * d
        return IntPolynomial.from_coeffs(out)

    def __divmod__(self, divisor: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Quotient and remainder over Z; leading-term divisions must be exact."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = divisor.coeffs
        quo = [0] * max(len(rem) - len(d) + 1, 0)
        while len(rem) >= len(d) and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) < len(d):
                break
            lead, r = divmod(rem[-1], d[-1])
            if r:
                raise ValueError("division is not exact over the integers")
            shift = len(rem) - len(d)
            quo[shift] += lead
            for i, c in enumerate(d):
                rem[shift + i] -= lead * c
        return IntPolynomial.from_coeffs(quo), IntPolynomial.from_coeffs(rem)

    def __floordiv__(self, divisor: "IntPolynomial") -> "IntPolynomial":
        quo, rem = divmod(self, divisor)
        if not rem.is_zero:
            raise ValueError("polynomial division left a remainder")
        return quo

    def __mod__(self, divisor: "IntPolynomial") -> "IntPolynomial":
        return divmod(self, divisor)[1]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            term = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if i > 0 and abs(c) != 1:
                term = f"{abs(c)}{term}"
            elif i == 0:
                term = f"{abs(c)}"
            parts.append(("- " if c < 0 else "+ ") + term)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _x_power_minus_one(n: int) -> IntPolynomial:
    return IntPolynomial.from_coeffs([-1] + [0] * (n - 1) + [1])


@functools.lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("phi is defined for positive integers")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            result -= result // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        result -= result // m
    return result


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial, by exact division of x^n - 1.

    Divides out the cyclotomic polynomials of all proper divisors of n;
    the result is monic of degree phi(n).
    """
    if n < 1:
        raise ValueError("cyclotomic polynomial needs n >= 1")
    poly = _x_power_minus_one(n)
    for d in range(1, n):
        if n % d == 0:
            poly = poly // cyclotomic_polynomial(d)
    if poly.degree != euler_phi(n) or not poly.is_monic:
        raise AssertionError(f"cyclotomic polynomial for n={n} failed its shape check")
    return poly


@dataclass(frozen=True)
class CyclotomicElement:
    """Element of Z[zeta_n] as phi(n) power-basis coordinates."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("conductor must be >= 1")
        if len(self.coeffs) != euler_phi(self.n):
            raise ValueError(
                f"need {euler_phi(self.n)} coefficients for conductor {self.n}, "
                f"got {len(self.coeffs)}"
            )

    @classmethod
    def from_coeffs(cls, n: int, coeffs: Sequence[int]) -> "CyclotomicElement":
        return cls(n, tuple(int(c) for c in coeffs))

    @classmethod
    def from_polynomial(cls, n: int, poly: IntPolynomial) -> "CyclotomicElement":
        rem = poly % cyclotomic_polynomial(n)
        deg = euler_phi(n)
        padded = list(rem.coeffs) + [0] * (deg - len(rem.coeffs))
        return cls(n, tuple(padded))

    @classmethod
    def zero(cls, n: int) -> "CyclotomicElement":
        return cls(n, (0,) * euler_phi(n))

    @classmethod
    def one(cls, n: int) -> "CyclotomicElement":
        return cls.from_polynomial(n, IntPolynomial((1,)))

    @classmethod
    def zeta(cls, n: int) -> "CyclotomicElement":
        return cls.from_polynomial(n, IntPolynomial.from_coeffs([0, 1]))

    def to_polynomial(self) -> IntPolynomial:
        return IntPolynomial.from_coeffs(self.coeffs)

    def __add__(self, other: "CyclotomicElement") -> "CyclotomicElement":
        if self.n != other.n:
            raise ValueError("mismatched conductors")
        return CyclotomicElement(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CyclotomicElement") -> "CyclotomicElement":
        if self.n != other.n:
            raise ValueError("mismatched conductors")
        return CyclotomicElement(self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CyclotomicElement":
        return CyclotomicElement(self.n, tuple(-c for c in self.coeffs))

    def __mul__(self, other: "CyclotomicElement") -> "CyclotomicElement":
        return cyc_mul(self, other)

    def scaled(self, k: int) -> "CyclotomicElement":
        return CyclotomicElement(self.n, tuple(k * c for c in self.coeffs))


def cyc_mul(a: CyclotomicElement, b: CyclotomicElement) -> CyclotomicElement:
    """Product in Z[zeta_n], reduced modulo the cyclotomic polynomial."""
    if a.n != b.n:
        raise ValueError(f"mismatched conductors: {a.n} vs {b.n}")
    return CyclotomicElement.from_polynomial(a.n, a.to_polynomial() * b.to_polynomial())


def cyc_trace(a: CyclotomicElement) -> int:
    """Trace of multiplication-by-a on the power basis of Q(zeta_n).

    Column j of the multiplication matrix is a * zeta^j; only its j-th
    coordinate contributes to the trace, so the matrix is never stored.
    """
    deg = euler_phi(a.n)
    z = CyclotomicElement.zeta(a.n)
    cur = a
    total = 0
    for j in range(deg):
        total += cur.coeffs[j]
        if j + 1 < deg:
            cur = cyc_mul(cur, z)
    return total


def trace_form_gram(n: int) -> IntMatrix:
    """Gram matrix tr(zeta^(i+j)) of the trace form on the power basis of Z[zeta_n]."""
    if n < 1:
        raise ValueError("conductor must be >= 1")
    deg = euler_phi(n)
    z = CyclotomicElement.zeta(n)
    powers = [CyclotomicElement.one(n)]
    for _ in range(2 * deg - 2):
        powers.append(cyc_mul(powers[-1], z))
    traces = [cyc_trace(p) for p in powers]
    gram = IntMatrix.from_rows([[traces[i + j] for j in range(deg)] for i in range(deg)])
    if not gram.is_symmetric():
        raise AssertionError("trace form Gram must be symmetric")
    return gram


def embedding_trace_oracle(a: CyclotomicElement, precision: int | None = None) -> float:
    """Sum of a over all primitive n-th roots of unity, in high-precision floats.

    Test oracle only: cross-checks cyc_trace numerically. Digits come from the
    argument, else the FORMS4D_PRECISION environment variable, else 30.
    """
    if precision is None:
        precision = int(os.environ.get(PRECISION_ENV_VAR, str(DEFAULT_ORACLE_DIGITS)))
    n = a.n
    coeffs_high_first = list(reversed(a.coeffs))
    with mpmath.workdps(precision):
        total = mpmath.mpc(0)
        for k in range(1, n + 1):
            if gcd(k, n) == 1:
                omega = mpmath.expjpi(mpmath.mpf(2 * k) / n)
                total += mpmath.polyval(coeffs_high_first, omega)
        return float(mpmath.re(total))
