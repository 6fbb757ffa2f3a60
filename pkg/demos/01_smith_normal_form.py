"""Smith normal form walkthrough.

Every integer matrix A factors as U*A*V = S with unimodular U, V and a
diagonal S whose entries d_1 | d_2 | ... are canonical. The diagonal entries
are what classify finitely generated abelian groups: the cokernel of A is
Z^(free) + Z/d_1 + Z/d_2 + ...
"""

from forms4d import IntMatrix, determinant, snf

a = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
print("A =")
for row in a.to_rows():
    print("   ", row)

result = snf(a)
print("\ndiagonal:", result.diagonal)
print("S =")
for row in result.S.to_rows():
    print("   ", row)

print("\nwitnesses are unimodular: det U =", determinant(result.U),
      " det V =", determinant(result.V))
print("U*A*V == S:", result.U @ a @ result.V == result.S)

# The diagonal reads off the cokernel: here Z^3 / A Z^3 = Z/2 + Z/6 + Z/12.
print("\ncokernel of A:", " + ".join(f"Z/{d}" for d in result.diagonal if d))

# A relation matrix with a zero column leaves a free summand behind.
b = IntMatrix.from_rows([[2, 0], [0, 0]])
print("\ndiagonal of [[2,0],[0,0]]:", snf(b).diagonal, " (cokernel Z/2 + Z)")
