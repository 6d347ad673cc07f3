"""Smith forms of the up-maps of k[x,y,z]/(x^4, y^4, z^4).

Prints the Hilbert function, the Smith entries of every U_r up to the
middle, and the small binomial matrices M_r that carry the same non-unit
entries.  Then checks the closed forms for the 1 x 1 and 2 x 2 Carlitz
matrices.
"""

from __future__ import annotations

from lefschetz import rings
from lefschetz import snf_theorems as st
from lefschetz.linalg import snf

caps = (4, 4, 4)
spec = rings.RingSpec(caps)
print("Hilbert function", rings.hilbert_function(spec))

for r in range(spec.middle + 1):
    res = st.up_snf(spec, r)
    line = f"U_{r}: {len(res.entries)} entries, non-units {list(res.non_units)}"
    if r >= caps[0] - 1:
        mr = st.build_mr(*caps, r)
        line += f"; M_{r} = {mr.to_rows()} with Smith form {list(snf(mr).entries)}"
    print(line)

print()
print("Carlitz matrices (binom(a+b, b+i-j)) for c = 1, 2:")
for a in range(1, 5):
    for b in range(1, 5):
        got = [snf(st.carlitz_matrix(a, b, c)).entries for c in (1, 2)]
        want = [st.carlitz_closed_forms(a, b, c) for c in (1, 2)]
        print(f"  a={a} b={b}: {got}  closed forms agree: {got == want}")
