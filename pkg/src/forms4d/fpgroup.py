"""Finitely presented groups: abelianization and automorphism-group reports.

Abelianization goes through the relator exponent-sum matrix and its Smith
normal form. Automorphism groups of finite abelian groups are enumerated by
brute force (the oracle of record); the product-of-totients formula is a
separate operation that refuses non-coprime input rather than extrapolate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .cyclotomic import euler_phi
from .errors import CapExceededError
from .exactla import IntMatrix, snf
from .groupring import FiniteGroup, abelian_group

AUT_BRUTEFORCE_ORDER_CAP = 200
_AUT_CANDIDATE_BUDGET = 2_000_000


@dataclass(frozen=True)
class GroupPresentation:
    """Presentation by generator count and relator words.

    A relator is a sequence of signed 1-based generator indices; negative
    means the inverse, so a^2 b^-3 is (1, 1, -2, -2, -2).
    """

    generators: int
    relators: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.generators < 0:
            raise ValueError("generator count must be non-negative")
        for word in self.relators:
            for letter in word:
                if letter == 0 or abs(letter) > self.generators:
                    raise ValueError(f"relator letter {letter} out of range")

    @classmethod
    def from_lists(cls, generators: int, relators: Sequence[Sequence[int]]) -> "GroupPresentation":
        return cls(int(generators), tuple(tuple(int(x) for x in w) for w in relators))


@dataclass(frozen=True)
class AbelianizationResult:
    """H_1 of a presentation: free rank plus the torsion invariant chain."""

    free_rank: int
    torsion: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        for i, t in enumerate(self.torsion):
            if t < 2:
                raise ValueError("torsion invariants must be >= 2")
            if i and t % self.torsion[i - 1]:
                raise ValueError("torsion invariants must form a divisibility chain")

    @property
    def torsion_order(self) -> int:
        out = 1
        for t in self.torsion:
            out *= t
        return out

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0


def exponent_matrix(p: GroupPresentation) -> IntMatrix | None:
    """Relators-by-generators exponent sums; None when there is nothing to sum."""
    if p.generators == 0 or not p.relators:
        return None
    rows = []
    for word in p.relators:
        row = [0] * p.generators
        for letter in word:
            row[abs(letter) - 1] += 1 if letter > 0 else -1
        rows.append(row)
    return IntMatrix.from_rows(rows)


def abelianize(p: GroupPresentation) -> AbelianizationResult:
    """First homology of the presented group, via Smith normal form."""
    mat = exponent_matrix(p)
    if mat is None:
        return AbelianizationResult(free_rank=p.generators, torsion=())
    diag = snf(mat).diagonal
    nonzero = sum(1 for d in diag if d)
    return AbelianizationResult(
        free_rank=p.generators - nonzero,
        torsion=tuple(d for d in diag if d > 1),
    )


@dataclass(frozen=True)
class AutReport:
    """Automorphism-group report for Z^k + torsion.

    torsion_aut_order and is_abelian describe the computed part; for free
    rank 1 the order-2 sign-flip factor is folded into the verdict and the
    note, for free rank >= 2 the note flags the infinite nonabelian factor.
    """

    torsion_aut_order: int
    is_abelian: bool
    free_rank_note: str | None = None


def _abelian_basis(group: FiniteGroup) -> tuple[list[int], list[int]]:
    """Generator indices and their orders for an invariants-built group."""
    invs = group.abelian_invariants
    assert invs is not None
    k = len(invs)
    strides = [1] * k
    for i in range(k - 2, -1, -1):
        strides[i] = strides[i + 1] * invs[i + 1]
    return strides, list(invs)


def _greedy_generators(group: FiniteGroup) -> list[int]:
    gens: list[int] = []
    span = {0}
    while len(span) < group.order:
        g = min(x for x in range(group.order) if x not in span)
        gens.append(g)
        frontier = set(span)
        frontier.add(g)
        closed = False
        while not closed:
            new = {group.mul(a, b) for a in frontier for b in frontier} | frontier
            closed = new == frontier
            frontier = new
        span = frontier
    return gens


def aut_bruteforce(group: FiniteGroup) -> AutReport:
    """|Aut| and its commutativity for an abelian group, by exhaustion.

    Candidate maps send each generator to an element of compatible order;
    bijective homomorphisms are counted and composed pairwise (two
    homomorphisms agree iff they agree on the generators).
    """
    if group.order > AUT_BRUTEFORCE_ORDER_CAP:
        raise CapExceededError(
            f"automorphism brute force capped at order {AUT_BRUTEFORCE_ORDER_CAP}, "
            f"got {group.order}"
        )
    if not group.is_abelian():
        raise ValueError("automorphism brute force requires an abelian group")

    n = group.order
    element_orders = [group.element_order(g) for g in range(n)]

    if group.abelian_invariants is not None:
        strides, orders = _abelian_basis(group)
        gens = strides
        candidate_sets = [
            [x for x in range(n) if orders[i] % element_orders[x] == 0]
            for i in range(len(gens))
        ]
        verify_pairs = False  # basis relations are exactly the cyclic ones
    else:
        gens = _greedy_generators(group)
        candidate_sets = [
            [x for x in range(n) if element_orders[gen] % element_orders[x] == 0]
            for gen in gens
        ]
        verify_pairs = True

    budget = 1
    for s in candidate_sets:
        budget *= len(s)
    if budget > _AUT_CANDIDATE_BUDGET:
        raise CapExceededError(
            f"automorphism enumeration needs {budget} candidate maps, over the "
            f"budget {_AUT_CANDIDATE_BUDGET}"
        )

    # Express every element over the generators once, so a candidate map can be
    # evaluated everywhere: walk the group breadth-first multiplying by gens.
    parent: list[tuple[int, int] | None] = [None] * n  # element -> (parent, gen slot)
    bfs_order = [0]
    frontier = [0]
    seen = {0}
    while frontier:
        nxt = []
        for e in frontier:
            for slot, g in enumerate(gens):
                t = group.mul(e, g)
                if t not in seen:
                    seen.add(t)
                    parent[t] = (e, slot)
                    nxt.append(t)
                    bfs_order.append(t)
        frontier = nxt

    automorphisms: list[tuple[int, ...]] = []
    for images in itertools.product(*candidate_sets):
        phi = [-1] * n
        phi[0] = 0
        ok = True
        for e in bfs_order[1:]:
            pe, slot = parent[e]  # type: ignore[misc]
            phi[e] = group.mul(phi[pe], images[slot])
        if len(set(phi)) != n:
            continue
        if verify_pairs:
            for a in range(n):
                row = group.table[a]
                pa = phi[a]
                if any(phi[row[b]] != group.mul(pa, phi[b]) for b in range(n)):
                    ok = False
                    break
        if ok:
            automorphisms.append(tuple(phi))

    gen_indices = gens
    abelian = all(
        s[t[g]] == t[s[g]]
        for i, s in enumerate(automorphisms)
        for t in automorphisms[i + 1 :]
        for g in gen_indices
    )
    return AutReport(torsion_aut_order=len(automorphisms), is_abelian=abelian)


def aut_coprime_formula(moduli: Sequence[int]) -> AutReport:
    """Product-of-totients count for pairwise coprime cyclic factors.

    |Aut| of the direct sum splits over coprime orders, and each cyclic factor
    contributes its abelian unit group. Non-coprime input is refused: the
    splitting hypothesis fails there, so no number is produced.
    """
    ms = [int(m) for m in moduli]
    if any(m < 2 for m in ms):
        raise ValueError("moduli must be >= 2")
    for i in range(len(ms)):
        for j in range(i + 1, len(ms)):
            if gcd(ms[i], ms[j]) != 1:
                raise ValueError(
                    f"moduli {ms[i]} and {ms[j]} are not coprime; the splitting "
                    "formula does not apply"
                )
    order = 1
    for m in ms:
        order *= euler_phi(m)
    return AutReport(torsion_aut_order=order, is_abelian=True)


def _primary_split(m: int) -> list[int]:
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            q = 1
            while m % p == 0:
                q *= p
                m //= p
            out.append(q)
        p += 1
    if m > 1:
        out.append(m)
    return out


def galois_surrogate(p: GroupPresentation) -> AutReport:
    """Automorphism report of H_1 of a presentation, free and torsion parts.

    Torsion automorphisms come from brute force (or, for cyclic torsion past
    the brute-force cap, the coprime formula on the prime-power split). The
    free part is annotated: rank 1 contributes the order-2 sign flip, rank 2
    and up is flagged infinite nonabelian. The two parts are reported as a
    direct-sum decomposition; maps mixing them are not counted.
    """
    h1 = abelianize(p)
    torsion_order = h1.torsion_order
    if torsion_order == 1:
        torsion_report = AutReport(torsion_aut_order=1, is_abelian=True)
    elif torsion_order <= AUT_BRUTEFORCE_ORDER_CAP:
        torsion_report = aut_bruteforce(abelian_group(h1.torsion))
    elif len(h1.torsion) == 1:
        torsion_report = aut_coprime_formula(_primary_split(h1.torsion[0]))
    else:
        raise CapExceededError(
            f"torsion order {torsion_order} is over the brute-force cap "
            f"{AUT_BRUTEFORCE_ORDER_CAP} and the torsion is not cyclic"
        )

    k = h1.free_rank
    if k == 0:
        note = None
        abelian = torsion_report.is_abelian
    elif k == 1:
        note = (
            "free rank 1: the infinite cyclic factor contributes Aut(Z) = {+-1} "
            "= Z/2 (order 2, abelian); combined with the torsion factor as a "
            "direct sum, maps mixing the factors not counted"
        )
        abelian = torsion_report.is_abelian
    else:
        note = (
            f"free rank {k}: the free factor contributes GL_{k}(Z) -- infinite, "
            "nonabelian; direct-sum decomposition only, mixing maps not counted"
        )
        abelian = False
    return AutReport(
        torsion_aut_order=torsion_report.torsion_aut_order,
        is_abelian=abelian,
        free_rank_note=note,
    )
