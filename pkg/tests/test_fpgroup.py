import random

import pytest

from forms4d.cyclotomic import euler_phi
from forms4d.errors import CapExceededError
from forms4d.fpgroup import (
    AbelianizationResult,
    GroupPresentation,
    abelianize,
    aut_bruteforce,
    aut_coprime_formula,
    galois_surrogate,
)
from forms4d.groupring import abelian_group, symmetric_group_s3

TREFOIL = GroupPresentation.from_lists(2, [[1, 1, -2, -2, -2]])
KLEIN_BOTTLE = GroupPresentation.from_lists(2, [[1, 2, 1, -2]])
Z5 = GroupPresentation.from_lists(1, [[1, 1, 1, 1, 1]])


def test_presentation_validation():
    with pytest.raises(ValueError):
        GroupPresentation.from_lists(2, [[0]])
    with pytest.raises(ValueError):
        GroupPresentation.from_lists(2, [[3]])
    with pytest.raises(ValueError):
        GroupPresentation.from_lists(-1, [])


def test_abelianize_golden_cases():
    free = abelianize(GroupPresentation.from_lists(2, []))
    assert (free.free_rank, free.torsion) == (2, ())

    trefoil = abelianize(TREFOIL)
    assert (trefoil.free_rank, trefoil.torsion) == (1, ())

    klein = abelianize(KLEIN_BOTTLE)
    assert (klein.free_rank, klein.torsion) == (1, (2,))

    z5 = abelianize(Z5)
    assert (z5.free_rank, z5.torsion) == (0, (5,))
    assert z5.is_finite and z5.torsion_order == 5


def test_abelianize_trivial_presentations():
    empty = abelianize(GroupPresentation.from_lists(0, []))
    assert (empty.free_rank, empty.torsion) == (0, ())
    killed = abelianize(GroupPresentation.from_lists(1, [[1]]))
    assert (killed.free_rank, killed.torsion) == (0, ())


def test_abelianize_is_presentation_order_independent():
    rng = random.Random(12)
    base = GroupPresentation.from_lists(
        3, [[1, 1, -2], [3, 3, 3, 2], [1, -3, 1, -3]]
    )
    expected = abelianize(base)
    for _ in range(10):
        relators = list(base.relators)
        rng.shuffle(relators)
        perm = list(range(1, 4))
        rng.shuffle(perm)
        relabeled = [
            [int(perm[abs(x) - 1] * (1 if x > 0 else -1)) for x in word]
            for word in relators
        ]
        shuffled = GroupPresentation.from_lists(3, relabeled)
        assert abelianize(shuffled) == expected


def test_abelianize_ignores_consequence_relators():
    base = GroupPresentation.from_lists(2, [[1, 1, 2], [2, 2]])
    expected = abelianize(base)
    # w r1 w^-1 r2 is a consequence of r1 and r2; exponent sums add up
    conjugator = [1, -2]
    consequence = conjugator + [1, 1, 2] + [-x for x in reversed(conjugator)] + [2, 2]
    extended = GroupPresentation.from_lists(2, list(base.relators) + [consequence])
    assert abelianize(extended) == expected


def test_abelianization_result_validation():
    with pytest.raises(ValueError):
        AbelianizationResult(free_rank=0, torsion=(3, 5))  # not a divisibility chain
    with pytest.raises(ValueError):
        AbelianizationResult(free_rank=0, torsion=(1,))


def test_aut_bruteforce_cyclic_and_klein_four():
    assert aut_bruteforce(abelian_group([5])).torsion_aut_order == 4
    assert aut_bruteforce(abelian_group([5])).is_abelian
    klein_four = aut_bruteforce(abelian_group([2, 2]))
    assert klein_four.torsion_aut_order == 6
    assert not klein_four.is_abelian
    trivial = aut_bruteforce(abelian_group([]))
    assert trivial.torsion_aut_order == 1 and trivial.is_abelian


def test_aut_bruteforce_on_explicit_cayley_table():
    from forms4d.groupring import FiniteGroup

    z6 = FiniteGroup.from_cayley_table(
        [[(i + j) % 6 for j in range(6)] for i in range(6)]
    )
    report = aut_bruteforce(z6)
    assert report.torsion_aut_order == 2 and report.is_abelian


def test_aut_bruteforce_caps():
    with pytest.raises(CapExceededError):
        aut_bruteforce(abelian_group([201]))
    with pytest.raises(ValueError):
        aut_bruteforce(symmetric_group_s3())
    # order 128 is under the order cap but the candidate space explodes
    with pytest.raises(CapExceededError):
        aut_bruteforce(abelian_group([2] * 7))


def test_aut_bruteforce_cyclic_is_abelian():
    for m in range(2, 51):
        report = aut_bruteforce(abelian_group([m]))
        assert report.is_abelian, m
        assert report.torsion_aut_order == euler_phi(m)


def test_aut_coprime_formula():
    assert aut_coprime_formula([3, 5]).torsion_aut_order == 8
    assert aut_coprime_formula([7]).torsion_aut_order == 6
    assert aut_coprime_formula([3, 5]).is_abelian
    with pytest.raises(ValueError):
        aut_coprime_formula([2, 2])
    with pytest.raises(ValueError):
        aut_coprime_formula([1, 3])


def test_formula_matches_bruteforce_on_coprime_lists():
    for moduli in ([2], [3], [2, 3], [4, 9], [5, 8], [3, 5], [2, 9, 5]):
        brute = aut_bruteforce(abelian_group(moduli))
        formula = aut_coprime_formula(moduli)
        assert brute.torsion_aut_order == formula.torsion_aut_order, moduli
        assert brute.is_abelian, moduli


def test_galois_surrogate_finite_cases():
    z5 = galois_surrogate(Z5)
    assert z5.torsion_aut_order == 4 and z5.is_abelian and z5.free_rank_note is None

    klein_four = galois_surrogate(
        GroupPresentation.from_lists(2, [[1, 1], [2, 2], [1, 2, 1, 2]])
    )
    assert klein_four.torsion_aut_order == 6
    assert not klein_four.is_abelian


def test_galois_surrogate_infinite_h1():
    trefoil = galois_surrogate(TREFOIL)
    assert trefoil.torsion_aut_order == 1
    assert trefoil.is_abelian
    assert trefoil.free_rank_note is not None and "Z/2" in trefoil.free_rank_note

    free2 = galois_surrogate(GroupPresentation.from_lists(2, []))
    assert not free2.is_abelian
    assert "GL_2" in free2.free_rank_note


def test_galois_surrogate_mixed_free_and_torsion():
    pres = GroupPresentation.from_lists(3, [[3, 3]])
    report = galois_surrogate(pres)
    assert report.torsion_aut_order == 1  # Aut(Z/2) is trivial
    assert not report.is_abelian
    assert "GL_2" in report.free_rank_note


def test_galois_surrogate_large_cyclic_torsion_uses_formula():
    # torsion order 500 is over the brute-force cap but cyclic
    big = galois_surrogate(GroupPresentation.from_lists(1, [[1] * 500]))
    assert big.torsion_aut_order == euler_phi(500)
    assert big.is_abelian


def test_galois_surrogate_large_noncyclic_torsion_refuses():
    # Z/256 + Z/256: torsion order 65536, not cyclic
    pres = GroupPresentation.from_lists(2, [[1] * 256, [2] * 256])
    with pytest.raises(CapExceededError):
        galois_surrogate(pres)
