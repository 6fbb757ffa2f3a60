"""Group rings, the trace pairing, and cyclotomic decompositions.

Z[G] pairs elements by Q(x, y) = trace of left multiplication by x*y. The
Gram matrix is |G| wherever g*h is the identity, Q is non-degenerate, and it
satisfies the associativity-style identity Q(xy, z) = Q(x, yz). For abelian G
the rational group algebra splits into cyclotomic fields Q(zeta_d), one
packet per divisor d of the exponent; the census below counts them and
contrasts the shorter one-field-per-cyclic-factor list.
"""

import random

from forms4d import (
    GroupRingElement,
    abelian_group,
    frobenius_form,
    gr_mul,
    symmetric_group_s3,
    wedderburn_decompose,
)
from forms4d.quadform import bilinear_value

z6 = abelian_group([6])
form = frobenius_form(z6)
print("Frobenius Gram of Z[Z/6]:")
for row in form.gram.to_rows():
    print("   ", row)

rng = random.Random(0)
x, y, z = (
    GroupRingElement.from_coeffs(z6, [rng.randint(-3, 3) for _ in range(6)])
    for _ in range(3)
)
print(
    "Q(xy, z) == Q(x, yz):",
    bilinear_value(form.gram, gr_mul(x, y).coeffs, z.coeffs)
    == bilinear_value(form.gram, x.coeffs, gr_mul(y, z).coeffs),
)

s3 = symmetric_group_s3()
print(
    "\nS3 is nonabelian, yet its pairing Gram is symmetric "
    "(gh = e exactly when hg = e):",
    frobenius_form(s3).gram.is_symmetric(),
)

print("\ncyclotomic censuses (divisor, multiplicity):")
for invs in ([3], [3, 5], [2, 2]):
    census = wedderburn_decompose(abelian_group(invs))
    print(f"  Z/{'+Z/'.join(map(str, invs))}: census={census.pairs}"
          f"  per-factor list={census.primary_fields}")
    for note in census.notes:
        print("     note:", note)
