"""Minors of Toeplitz matrices as skew Schur polynomials.

Walks through the Littlewood-Richardson expansion of (5,3)/(1), the
dictionary between minors of A_c and (k,c)-legal shapes, the inverse
Littlewood-Richardson decomposition, and a few random Toeplitz matrices
whose k-th Smith entry does not depend on c.
"""

from __future__ import annotations

from lefschetz import schur
from lefschetz.schur import SkewShape

s = SkewShape((5, 3), (1,))
print(f"S{s} =", " + ".join(f"S{p}" for p in schur.lr_expand(s)))
print(f"     = {schur.jacobi_trudi(s)!r}")

n, c = 7, 3
print(f"\nA_{c} for n={n} has h-indices:")
for row in schur.ac_index_matrix(n, c):
    print("   ", row)
shape = schur.minor_shape_correspondence(n, c, [1, 5], [1, 3])
print(f"rows (1,5), cols (1,3) -> {shape}; legal: {schur.is_legal(shape, 2, c, n)}")
print("witness for (6,3)/(1):", schur.minor_for_shape(shape, c, n))

bad = SkewShape((3, 2), (1,))
print(f"\n{bad} for k=2, c=3, n=6:", schur.legality_conditions(bad, 2, 3, 6))
print(f"its determinant is {schur.jacobi_trudi(bad)!r}, which needs h_0 in a corner")

for nu, k, c, n in [((5, 2), 2, 3, 6), ((6, 2), 2, 3, 7), ((4, 4, 3), 3, 3, 6)]:
    combo = schur.inverse_lr_decompose(nu, k, c, n)
    terms = " ".join(f"{'+' if v > 0 else '-'} {abs(v)}*S{sh}" for sh, v in combo.items())
    print(f"S{nu} = {terms}   (k={k}, c={c}, n={n})")

print("\ncut-and-rotate on (11,9,8,7,5) with width 2:", schur.cut_and_rotate((11, 9, 8, 7, 5), 2))

for rep in schur.random_toeplitz_trials(5, seed=3):
    print(rep.dumps("text").splitlines()[0])
