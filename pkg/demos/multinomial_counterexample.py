"""The n-variable analogue of the reduction, and where it stops behaving.

For four variables with caps 4 the non-unit Smith entries of U_r grow as
multisets with r.  For five variables the entry 70 shows up at r = 6 and
is gone at r = 7.
"""

from __future__ import annotations

from lefschetz import rings
from lefschetz import snf_theorems as st
from lefschetz.linalg import snf

for n in (4, 5):
    caps = (4,) * n
    spec = rings.RingSpec(caps)
    print(f"caps {caps}: Hilbert function {rings.hilbert_function(spec)}")
    for r in range(caps[0] - 1, spec.middle + 1):
        nu = list(st.up_snf(spec, r).non_units)
        mr = list(snf(st.build_multinomial_mr(caps, r)).non_units)
        print(f"  U_{r}: non-units {nu}  (multinomial M_{r} agrees: {nu == mr})")
    print()
