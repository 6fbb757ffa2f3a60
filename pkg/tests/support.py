"""Shared test helpers: independent oracles and random generators.

The determinant oracle is plain cofactor expansion and the minor-gcd oracle
enumerates minors directly, so neither shares any code path with the library
routines they check.
"""

from __future__ import annotations

import random
from itertools import combinations
from math import gcd

from forms4d.exactla import IntMatrix
from forms4d.quadform import BilinearForm


def det_cofactor(rows: list[list[int]]) -> int:
    """Determinant by cofactor expansion with memoization on column subsets."""
    n = len(rows)
    memo: dict[tuple[int, tuple[int, ...]], int] = {}

    def rec(r: int, cols: tuple[int, ...]) -> int:
        if not cols:
            return 1
        key = (r, cols)
        if key in memo:
            return memo[key]
        total = 0
        for idx, c in enumerate(cols):
            a = rows[r][c]
            if a:
                sign = 1 if idx % 2 == 0 else -1
                total += sign * a * rec(r + 1, cols[:idx] + cols[idx + 1 :])
        memo[key] = total
        return total

    return rec(0, tuple(range(n)))


def minor_gcd(m: IntMatrix, k: int) -> int:
    """gcd of all k-by-k minors (0 when every minor vanishes)."""
    rows = m.to_rows()
    out = 0
    for ri in combinations(range(m.rows), k):
        for ci in combinations(range(m.cols), k):
            sub = [[rows[i][j] for j in ci] for i in ri]
            out = gcd(out, det_cofactor(sub))
    return out


def random_int_matrix(rng: random.Random, rows: int, cols: int, bound: int = 9) -> IntMatrix:
    return IntMatrix.from_rows(
        [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]
    )


def random_unimodular(rng: random.Random, n: int, ops: int = 10, bound: int = 3) -> IntMatrix:
    """Product of up to `ops` random elementary matrices with small entries."""
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(rng.randint(1, ops)):
        kind = rng.randrange(3)
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if kind == 0 and i != j:
            c = rng.choice([x for x in range(-bound, bound + 1) if x])
            rows[j] = [a + c * b for a, b in zip(rows[j], rows[i])]
        elif kind == 1 and i != j:
            rows[i], rows[j] = rows[j], rows[i]
        else:
            rows[i] = [-x for x in rows[i]]
    return IntMatrix.from_rows(rows)


def conjugated(form: BilinearForm, p: IntMatrix) -> BilinearForm:
    return BilinearForm(p.transpose() @ form.gram @ p)
