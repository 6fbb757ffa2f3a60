"""Abelianization of finitely presented groups and automorphism reports.

H_1 of a presentation is the cokernel of the relator exponent matrix,
computed through Smith normal form. The automorphism group of the result is
then sized by brute force (the ground truth) or, for coprime cyclic pieces,
by the product-of-totients formula. Knot-group style presentations with
H_1 = Z show how an abelian, finite automorphism report coexists with an
infinite H_1.
"""

from forms4d import GroupPresentation, abelianize, aut_bruteforce, galois_surrogate
from forms4d.groupring import abelian_group

examples = {
    "trefoil <a,b | a^2 b^-3>": GroupPresentation.from_lists(2, [[1, 1, -2, -2, -2]]),
    "Klein bottle <a,b | abab^-1>": GroupPresentation.from_lists(2, [[1, 2, 1, -2]]),
    "cyclic <a | a^5>": GroupPresentation.from_lists(1, [[1] * 5]),
    "<a,b | a^2, b^2, (ab)^2>": GroupPresentation.from_lists(
        2, [[1, 1], [2, 2], [1, 2, 1, 2]]
    ),
}

for name, pres in examples.items():
    h1 = abelianize(pres)
    pieces = ["Z"] * h1.free_rank + [f"Z/{t}" for t in h1.torsion]
    print(f"{name}:  H_1 = {' + '.join(pieces) if pieces else 'trivial'}")
    report = galois_surrogate(pres)
    print(
        f"   automorphisms: torsion part order {report.torsion_aut_order}, "
        f"abelian={report.is_abelian}"
    )
    if report.free_rank_note:
        print("   note:", report.free_rank_note)

# The formula Aut(G + H) = Aut(G) + Aut(H) needs coprime orders; Z/2 + Z/2
# is the standard counterexample and brute force exposes it.
klein_four = aut_bruteforce(abelian_group([2, 2]))
print(
    f"\nZ/2 + Z/2: |Aut| = {klein_four.torsion_aut_order} "
    f"(abelian={klein_four.is_abelian}) -- the coprime splitting does not apply"
)
