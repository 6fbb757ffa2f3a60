"""Exact integer and rational linear algebra.

Smith normal form, fraction-free determinants, congruence diagonalization and
signatures. All arithmetic is exact: matrices hold Python's arbitrary-precision
ints or `fractions.Fraction`; no floating point appears anywhere in this
module. Matrices are immutable values and every operation returns a new one,
so everything here is safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Row-major matrix of exact integers."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix must be non-empty")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        for e in self.entries:
            # bool is an int subclass; reject it so JSON true/false can't sneak in
            if not isinstance(e, int) or isinstance(e, bool):
                raise ValueError("entries must be exact integers")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        data = [list(r) for r in rows]
        if not data or not data[0]:
            raise ValueError("matrix must be non-empty")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise ValueError("rows must all have the same length")
        return cls(len(data), width, tuple(x for r in data for x in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c : (i + 1) * c]) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def negated(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        a, b = self.to_rows(), other.to_rows()
        out = [
            sum(a[i][k] * b[k][j] for k in range(self.cols))
            for i in range(self.rows)
            for j in range(other.cols)
        ]
        return IntMatrix(self.rows, other.cols, tuple(out))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self.at(i, j) == self.at(j, i)
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )


@dataclass(frozen=True)
class RatMatrix:
    """Row-major matrix of exact rationals."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix must be non-empty")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RatMatrix":
        data = [[Fraction(x) for x in r] for r in rows]
        if not data or not data[0]:
            raise ValueError("matrix must be non-empty")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise ValueError("rows must all have the same length")
        return cls(len(data), width, tuple(x for r in data for x in r))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    @classmethod
    def from_int_matrix(cls, m: IntMatrix) -> "RatMatrix":
        return cls(m.rows, m.cols, tuple(Fraction(x) for x in m.entries))

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[Fraction]]:
        c = self.cols
        return [list(self.entries[i * c : (i + 1) * c]) for i in range(self.rows)]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(
            self.cols,
            self.rows,
            tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        a, b = self.to_rows(), other.to_rows()
        out = [
            sum((a[i][k] * b[k][j] for k in range(self.cols)), Fraction(0))
            for i in range(self.rows)
            for j in range(other.cols)
        ]
        return RatMatrix(self.rows, other.cols, tuple(out))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self.at(i, j) == self.at(j, i)
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def determinant(self) -> Fraction:
        """Exact determinant by fraction Gaussian elimination."""
        if not self.is_square:
            raise ValueError("determinant requires a square matrix")
        n = self.rows
        a = self.to_rows()
        det = Fraction(1)
        for k in range(n):
            pivot = next((i for i in range(k, n) if a[i][k] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != k:
                a[k], a[pivot] = a[pivot], a[k]
                det = -det
            det *= a[k][k]
            inv = 1 / a[k][k]
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    f = a[i][k] * inv
                    a[i] = [x - f * y for x, y in zip(a[i], a[k])]
        return det

    @property
    def diagonal(self) -> tuple[Fraction, ...]:
        return tuple(self.at(i, i) for i in range(min(self.rows, self.cols)))


@dataclass(frozen=True)
class SNFResult:
    """Smith normal form S = U·A·V with unimodular U, V.

    The diagonal d_1, ..., d_r (r = min shape) is non-negative, satisfies
    d_i | d_{i+1}, and trailing zeros follow all nonzero entries. S is the
    canonical invariant of A; U and V are one deterministic witness pair.
    """

    S: IntMatrix
    U: IntMatrix
    V: IntMatrix
    diagonal: tuple[int, ...]


def snf(A: IntMatrix) -> SNFResult:
    """Smith normal form over the integers.

    Pivot choice is the smallest nonzero absolute value in the remaining
    block, scanned row-major (first hit wins on ties), which makes U and V
    reproducible run to run. S stays small; the witness entries of U and V
    can grow quickly on large dense inputs, the usual price of exact
    elementary transforms (fine at desk scale, roughly 32x32 and below).
    """
    m, n = A.rows, A.cols
    s = A.to_rows()
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i: int, j: int) -> None:
        if i != j:
            s[i], s[j] = s[j], s[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        if i != j:
            for r in s:
                r[i], r[j] = r[j], r[i]
            for r in v:
                r[i], r[j] = r[j], r[i]

    def add_row(src: int, dst: int, c: int) -> None:
        s[dst] = [a + c * b for a, b in zip(s[dst], s[src])]
        u[dst] = [a + c * b for a, b in zip(u[dst], u[src])]

    def add_col(src: int, dst: int, c: int) -> None:
        for r in s:
            r[dst] += c * r[src]
        for r in v:
            r[dst] += c * r[src]

    def negate_row(i: int) -> None:
        s[i] = [-x for x in s[i]]
        u[i] = [-x for x in u[i]]

    def smallest_pivot(t: int) -> tuple[int, int] | None:
        best = None
        pos = None
        for i in range(t, m):
            for j in range(t, n):
                val = s[i][j]
                if val != 0 and (best is None or abs(val) < best):
                    best = abs(val)
                    pos = (i, j)
        return pos

    def balanced_quotient(a: int, p: int) -> int:
        # nearest quotient: remainder lands in [-p/2, p/2], which keeps the
        # multipliers (and hence U, V) from blowing up exponentially
        q, r = divmod(a, p)
        return q + 1 if 2 * r > p else q

    def clear_at(t: int) -> None:
        # Euclidean sweep: kill row t and column t beyond the pivot. Any
        # nonzero remainder is strictly smaller in absolute value than the
        # pivot and gets swapped into the pivot position, so the loop
        # terminates.
        while True:
            if s[t][t] < 0:
                negate_row(t)
            p = s[t][t]
            restart = False
            for i in range(t + 1, m):
                if s[i][t]:
                    q = balanced_quotient(s[i][t], p)
                    if q:
                        add_row(t, i, -q)
                    if s[i][t]:
                        swap_rows(t, i)
                        restart = True
                        break
            if restart:
                continue
            for j in range(t + 1, n):
                if s[t][j]:
                    q = balanced_quotient(s[t][j], p)
                    if q:
                        add_col(t, j, -q)
                    if s[t][j]:
                        swap_cols(t, j)
                        restart = True
                        break
            if restart:
                continue
            return

    r = min(m, n)
    for t in range(r):
        pos = smallest_pivot(t)
        if pos is None:
            break  # remaining block is zero; trailing diagonal stays zero
        swap_rows(t, pos[0])
        swap_cols(t, pos[1])
        clear_at(t)

    for i in range(r):
        if s[i][i] < 0:
            negate_row(i)

    # Enforce the divisibility chain. Folding column i+1 into column i puts
    # (a, b) side by side in row i; re-clearing replaces the 2x2 block
    # diag(a, b) by diag(gcd, lcm). Each fix strictly shrinks the first
    # violating entry, so the passes terminate.
    while True:
        violation = None
        for i in range(r - 1):
            a, b = s[i][i], s[i + 1][i + 1]
            if a == 0:
                if b != 0:
                    raise AssertionError("zero before nonzero on SNF diagonal")
                continue
            if b % a != 0:
                violation = i
                break
        if violation is None:
            break
        add_col(violation + 1, violation, 1)
        clear_at(violation)
        for k in (violation, violation + 1):
            if s[k][k] < 0:
                negate_row(k)

    S = IntMatrix.from_rows(s)
    return SNFResult(
        S=S,
        U=IntMatrix.from_rows(u),
        V=IntMatrix.from_rows(v),
        diagonal=tuple(s[i][i] for i in range(r)),
    )


def determinant(A: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    if not A.is_square:
        raise ValueError("determinant requires a square matrix")
    n = A.rows
    a = A.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Bareiss update: the division by the previous pivot is exact
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class RatDiagonalization:
    """Congruence diagonalization P^T · G · P = D over the rationals."""

    D: RatMatrix
    P: RatMatrix


def congruent_diagonalize(G: IntMatrix) -> RatDiagonalization:
    """Diagonalize a symmetric integer matrix by a rational congruence.

    Zero pivots with a nonzero entry in their row are repaired by folding
    that row/column pair into the pivot (adding or subtracting; one of the
    two always produces a nonzero pivot).
    """
    if not G.is_symmetric():
        raise ValueError("congruence diagonalization requires a symmetric matrix")
    n = G.rows
    mat = [[Fraction(x) for x in row] for row in G.to_rows()]
    p = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    def fold(src: int, dst: int, c: Fraction) -> None:
        # col dst += c * col src, then the mirrored row op; P tracks col ops only
        for r in range(n):
            mat[r][dst] += c * mat[r][src]
        for r in range(n):
            p[r][dst] += c * p[r][src]
        mat[dst] = [a + c * b for a, b in zip(mat[dst], mat[src])]

    for k in range(n):
        if mat[k][k] == 0:
            j = next((j for j in range(k + 1, n) if mat[k][j] != 0), None)
            if j is None:
                continue  # row k is zero in the trailing block: radical direction
            for sign in (1, -1):
                if 2 * sign * mat[k][j] + mat[j][j] != 0:
                    fold(j, k, Fraction(sign))
                    break
        pivot = mat[k][k]
        if pivot == 0:
            raise AssertionError("zero pivot survived the fold step")
        for i in range(k + 1, n):
            if mat[k][i] != 0:
                fold(k, i, -mat[k][i] / pivot)

    return RatDiagonalization(
        D=RatMatrix.from_rows(mat),
        P=RatMatrix.from_rows(p),
    )


def signature(G: IntMatrix) -> tuple[int, int, int]:
    """Inertia (n+, n-, n0) of a symmetric integer matrix.

    Well-defined by Sylvester's law: the sign counts of any rational
    congruence diagonalization.
    """
    diag = congruent_diagonalize(G).D.diagonal
    pos = sum(1 for d in diag if d > 0)
    neg = sum(1 for d in diag if d < 0)
    return (pos, neg, len(diag) - pos - neg)
