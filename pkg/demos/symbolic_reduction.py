"""Pivoting U_r with y and z kept symbolic.

Each 1 of U_r is replaced by the variable that turns the column monomial
into the row monomial.  After using every column not divisible by
x^(A-1) as a pivot, the block left over is a matrix of single terms whose
coefficients are +-binom(A, ...), i.e. M_r up to sign.
"""

from __future__ import annotations

from lefschetz import snf_theorems as st

for A, B, C, r in [(2, 2, 2, 1), (4, 4, 4, 3), (4, 4, 4, 4), (5, 4, 3, 4)]:
    block = st.symbolic_reduction(A, B, C, r)
    print(f"caps {(A, B, C)}, r={r}:")
    for row in block:
        print("   ", "  ".join(f"{str(t):>12}" for t in row))
    print("    matches closed form:", block == st.expected_terminal_block(A, B, C, r))
