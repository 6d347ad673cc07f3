"""Reduced binomial matrices for the up-maps and checks of their Smith forms.

For caps A >= B >= C and A - 1 <= r <= floor((e - 1) / 2) the non-unit
Smith entries of U_r agree with those of the much smaller matrix

    M_r(A, B, C) = ( binom(A, r - B + i - j + 2) ),

of size (B + C - r - 2) x (r - A + 2).  :func:`symbolic_reduction` runs the
pivoting that produces it with y and z kept as formal variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial, gcd
from typing import Sequence

from . import rings
from .linalg import ExactMatrix, snf
from .reports import VerificationReport


class PreconditionError(ValueError):
    pass


class ReductionError(ArithmeticError):
    """The tracked block stopped being a matrix of single terms."""


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero when k is outside [0, n]."""
    if k < 0 or k > n or n < 0:
        return 0
    return comb(n, k)


def _check_sorted_range(A: int, B: int, C: int, r: int) -> None:
    if not A >= B >= C >= 1:
        raise PreconditionError(f"need A >= B >= C >= 1, got {(A, B, C)}")
    top = (A + B + C - 4) // 2
    if not A - 1 <= r <= top:
        raise PreconditionError(f"r={r} outside [{A - 1}, {top}] for caps {(A, B, C)}")


def build_mr(A: int, B: int, C: int, r: int, strict: bool = True) -> ExactMatrix:
    """The matrix M_r(A, B, C).

    With ``strict=False`` the cap ordering is not enforced, which is what
    the box substitution (a+b, a+c, b+c) needs; the shape must still be
    nonnegative.
    """
    if strict:
        _check_sorted_range(A, B, C, r)
    nrows, ncols = B + C - r - 2, r - A + 2
    if nrows < 0 or ncols < 0:
        raise PreconditionError(f"M_{r}{(A, B, C)} would have shape {(nrows, ncols)}")
    return ExactMatrix.from_rows(
        [[binom(A, r - B + i - j + 2) for j in range(1, ncols + 1)] for i in range(1, nrows + 1)],
        ncols,
    )


def carlitz_matrix(a: int, b: int, c: int) -> ExactMatrix:
    """c x c matrix (binom(a+b, b+i-j)), the middle M_r for the a x b x c box."""
    return build_mr(a + b, a + c, b + c, a + b + c - 2, strict=False)


def build_multinomial_mr(caps: Sequence[int], r: int) -> ExactMatrix:
    """n-variable analogue of M_r with multinomial entries.

    Rows are monomials of degree r + 1 in x2..xn, columns monomials of
    degree r - A1 + 1 in x2..xn (both below the caps, lex-descending).
    The entry is A1! / (i2! ... in!) when row / column = x2^i2 ... xn^in.
    """
    caps = tuple(caps)
    if list(caps) != sorted(caps, reverse=True) or not caps or caps[-1] < 1:
        raise PreconditionError(f"caps must be positive and descending, got {caps}")
    n, a1 = len(caps), caps[0]
    if not (a1 - 1 <= r and 2 * r <= sum(caps) - n):
        raise PreconditionError(f"r={r} outside the range for caps {caps}")
    rest = rings.RingSpec(caps[1:]) if n > 1 else None
    if rest is None:
        return ExactMatrix.zeros(0, 1 if r == a1 - 1 else 0)
    rows = rings.graded_basis(rest, r + 1)
    cols = rings.graded_basis(rest, r - a1 + 1)
    out = []
    for beta in rows:
        row = []
        for alpha in cols:
            diff = [b - a for b, a in zip(beta, alpha)]
            if min(diff) < 0:
                row.append(0)
            else:
                den = 1
                for d in diff:
                    den *= factorial(d)
                row.append(factorial(a1) // den)
        out.append(row)
    return ExactMatrix.from_rows(out, len(cols))


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def carlitz_closed_forms(a: int, b: int, c: int) -> tuple[int, ...] | None:
    """Known Smith entries of the c x c Carlitz matrix, or None for c >= 3."""
    if c == 1:
        return (binom(a + b, b),)
    if c == 2:
        if a == b:
            return (catalan(a), binom(2 * a + 1, a + 1))
        lo, mid, hi = binom(a + b, b - 1), binom(a + b, b), binom(a + b, b + 1)
        s1 = gcd(lo, mid, hi)
        return (s1, (mid * mid - lo * hi) // s1)
    return None


def carlitz_transform(a: int) -> tuple[ExactMatrix, ExactMatrix]:
    """Explicit unimodular P, Q diagonalising the 2 x 2 Carlitz matrix with a = b."""
    P = ExactMatrix.from_rows([[1, -1], [-1 - 3 * a, 2 + 3 * a]])
    Q = ExactMatrix.from_rows([[2, 1], [1, 1]])
    return P, Q


# -- symbolic elimination ----------------------------------------------------

@dataclass(frozen=True)
class BivariateTerm:
    """c * y^ypow * z^zpow."""

    coefficient: int
    ypow: int = 0
    zpow: int = 0

    def at_one(self) -> int:
        return self.coefficient

    def __str__(self):
        if self.coefficient == 0:
            return "0"
        mono = rings.monomial_str((self.ypow, self.zpow), "yz")
        if mono == "1":
            return str(self.coefficient)
        return f"{self.coefficient}*{mono}"


Poly = dict  # (ypow, zpow) -> coefficient


def _poly_mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for (a, b), c in p.items():
        for (d, e), f in q.items():
            key = (a + d, b + e)
            out[key] = out.get(key, 0) + c * f
    return {k: v for k, v in out.items() if v}


def _poly_sub(p: Poly, q: Poly) -> Poly:
    out = dict(p)
    for k, v in q.items():
        out[k] = out.get(k, 0) - v
    return {k: v for k, v in out.items() if v}


def _as_term(p: Poly) -> BivariateTerm:
    if not p:
        return BivariateTerm(0)
    if len(p) != 1:
        raise ReductionError(f"entry {p} is not a single term")
    (ypow, zpow), c = next(iter(p.items()))
    return BivariateTerm(c, ypow, zpow)


def symbolic_reduction(A: int, B: int, C: int, r: int) -> list[list[BivariateTerm]]:
    """Pivot U_r(y, z) down to its (B+C-r-2) x (r-A+2) terminal block.

    U_r(y, z) is U_r with each 1 replaced by the variable (1, y or z) that
    the row monomial divided by the column monomial equals.  Columns
    divisible by x^(A-1) are moved to the right; then every other column
    is used once as a unit pivot against its x-multiple row.  Entries of
    the moved columns are checked to stay single terms after each pivot.
    """
    _check_sorted_range(A, B, C, r)
    spec = rings.RingSpec((A, B, C))
    cols = rings.graded_basis(spec, r)
    rows = rings.graded_basis(spec, r + 1)
    cols = [m for m in cols if m[0] < A - 1] + [m for m in cols if m[0] == A - 1]
    n_pivots = sum(1 for m in cols if m[0] < A - 1)
    n_moved = len(cols) - n_pivots

    var = {0: {(0, 0): 1}, 1: {(1, 0): 1}, 2: {(0, 1): 1}}
    M: list[list[Poly]] = []
    for row in rows:
        line = []
        for col in cols:
            diff = [a - b for a, b in zip(row, col)]
            if sorted(diff) == [0, 0, 1]:
                line.append(dict(var[diff.index(1)]))
            else:
                line.append({})
        M.append(line)

    for t in range(n_pivots):
        if M[t][t] != {(0, 0): 1}:
            raise ReductionError(f"pivot {t} is {M[t][t]}, expected 1")
        Y = M[t]
        for i in range(t + 1, len(M)):
            X = M[i][t]
            if not X:
                continue
            row = M[i]
            for j in range(t + 1, len(cols)):
                if Y[j]:
                    row[j] = _poly_sub(row[j], _poly_mul(X, Y[j]))
            row[t] = {}
        for i in range(t + 1, len(M)):
            for j in range(n_pivots, len(cols)):
                _as_term(M[i][j])

    block = [row[n_pivots:] for row in M[n_pivots:]]
    if len(block) != B + C - r - 2 or (block and len(block[0]) != n_moved):
        raise ReductionError("terminal block has the wrong shape")
    return [[_as_term(p) for p in row] for row in block]


def expected_terminal_block(A: int, B: int, C: int, r: int) -> list[list[BivariateTerm]]:
    """Closed form (-1)^(A-1) binom(A, r-B+i-j+2) y^(A+B-r-i+j-2) z^(r-B+i-j+2)."""
    _check_sorted_range(A, B, C, r)
    sign = -1 if (A - 1) % 2 else 1
    out = []
    for i in range(1, B + C - r - 1):
        row = []
        for j in range(1, r - A + 3):
            c = sign * binom(A, r - B + i - j + 2)
            row.append(BivariateTerm(c, A + B - r - i + j - 2, r - B + i - j + 2) if c else BivariateTerm(0))
        out.append(row)
    return out


# -- verification -----------------------------------------------------------

def up_snf(spec, r: int):
    return snf(rings.up_map_matrix(spec, r))


def verify_snf_theorem(part: str, spec) -> VerificationReport:
    """Check one part of the Smith-form theorem for all relevant degrees.

    part "i": U_r is all ones for 0 <= r <= A - 2.
    part "ii": for A - 1 <= r <= m the non-units of U_r and M_r agree and
    number at most r - A + 2.
    part "iii": non-units of U_{m-s} equal the non-units among the first
    h(m) - s Smith entries of U_m.
    """
    spec = spec if isinstance(spec, rings.RingSpec) else rings.RingSpec(spec)
    if spec.n != 3:
        raise PreconditionError("the Smith-form theorem is stated for three variables")
    A, B, C = spec.caps
    if not A >= B >= C:
        raise PreconditionError(f"caps must be descending, got {spec.caps}")
    m = spec.middle
    rep = VerificationReport(f"thm1-{part}", {"caps": list(spec.caps)})
    if part == "i":
        for r in range(0, min(A - 2, spec.top_degree - 1) + 1):
            h = len(rings.graded_basis(spec, r))
            rep.add([1] * h, list(up_snf(spec, r).entries), r=r)
    elif part == "ii":
        for r in range(A - 1, m + 1):
            nu = list(up_snf(spec, r).non_units)
            rep.add(list(snf(build_mr(A, B, C, r)).non_units), nu, r=r)
            rep.add(True, len(nu) <= r - A + 2, r=r, check="count<=r-A+2")
    elif part == "iii":
        if m < 0:
            return rep
        top = up_snf(spec, m).entries
        hm = len(top)
        for s in range(0, m + 1):
            head = top[: max(0, hm - s)]
            rep.add([e for e in head if e != 1], list(up_snf(spec, m - s).non_units), s=s, r=m - s)
    else:
        raise ValueError(f"unknown part {part!r}")
    return rep


def nonunit_containment(caps: Sequence[int], r: int) -> tuple[bool, list[int], list[int]]:
    """Is the non-unit multiset of SNF(U_r) contained in that of SNF(U_{r+1})?"""
    lo = list(up_snf(caps, r).non_units)
    hi = list(up_snf(caps, r + 1).non_units)
    pool = list(hi)
    for v in lo:
        if v in pool:
            pool.remove(v)
        else:
            return False, lo, hi
    return True, lo, hi
