"""Monomial complete intersections k[x1..xn]/(x1^A1, ..., xn^An).

Monomials are exponent tuples.  Graded bases are listed in lexicographic
order with earlier variables dominating, i.e. descending tuple order, so
for caps (4, 4, 4) in degree 4 the basis starts x^3y, x^3z, x^2y^2, ...

The up-map U_r is multiplication by the sum of the variables from degree
r to degree r + 1, written with rows indexed by the degree r + 1 basis
and columns by the degree r basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .linalg import DimensionError, ExactMatrix

Monomial = tuple[int, ...]


class ConstraintError(ValueError):
    """A group action was requested on a ring it does not act on."""


@dataclass(frozen=True)
class RingSpec:
    caps: tuple[int, ...]

    def __init__(self, caps: Sequence[int]):
        caps = tuple(int(c) for c in caps)
        if not caps or any(c < 1 for c in caps):
            raise ValueError(f"caps must be a nonempty sequence of positive ints, got {caps}")
        object.__setattr__(self, "caps", caps)

    @property
    def n(self) -> int:
        return len(self.caps)

    @property
    def top_degree(self) -> int:
        """Socle degree e = sum(caps) - n."""
        return sum(self.caps) - self.n

    @property
    def middle(self) -> int:
        """m = floor((e - 1) / 2)."""
        return (self.top_degree - 1) // 2

    def complement(self, mono: Monomial) -> Monomial:
        return tuple(c - 1 - e for c, e in zip(self.caps, mono))


def _as_spec(spec) -> RingSpec:
    return spec if isinstance(spec, RingSpec) else RingSpec(spec)


@lru_cache(maxsize=None)
def _basis(caps: tuple[int, ...], r: int) -> tuple[Monomial, ...]:
    if not caps:
        return ((),) if r == 0 else ()
    out = []
    head, rest = caps[0], caps[1:]
    rest_max = sum(rest) - len(rest)
    for i in range(min(head - 1, r), -1, -1):
        if r - i > rest_max:
            break
        out.extend((i,) + tail for tail in _basis(rest, r - i))
    return tuple(out)


def graded_basis(spec, r: int) -> list[Monomial]:
    """Monomials of degree r that are nonzero in R, lex-descending.

    Degrees outside [0, e] give an empty list.
    """
    spec = _as_spec(spec)
    if r < 0 or r > spec.top_degree:
        return []
    return list(_basis(spec.caps, r))


def hilbert_function(spec) -> list[int]:
    spec = _as_spec(spec)
    return [len(_basis(spec.caps, r)) for r in range(spec.top_degree + 1)]


def monomial_str(mono: Monomial, names: str | Sequence[str] | None = None) -> str:
    if names is None:
        names = "xyz" if len(mono) <= 3 else [f"x{i + 1}" for i in range(len(mono))]
    parts = []
    for v, e in zip(names, mono):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts) if parts else "1"


def up_map_matrix(spec, r: int) -> ExactMatrix:
    """0/1 matrix of multiplication by x1 + ... + xn from R_r to R_{r+1}."""
    spec = _as_spec(spec)
    if r < 0 or r >= spec.top_degree:
        raise DimensionError(f"up-map degree {r} outside [0, {spec.top_degree})")
    cols = graded_basis(spec, r)
    rows = graded_basis(spec, r + 1)
    row_index = {mono: i for i, mono in enumerate(rows)}
    entries = [0] * (len(rows) * len(cols))
    for j, mono in enumerate(cols):
        for v in range(spec.n):
            if mono[v] + 1 < spec.caps[v]:
                up = mono[:v] + (mono[v] + 1,) + mono[v + 1:]
                entries[row_index[up] * len(cols) + j] = 1
    return ExactMatrix(len(rows), len(cols), tuple(entries))


def labelled_up_map(spec, r: int) -> dict:
    """JSON-ready up-map with its row and column monomials attached."""
    spec = _as_spec(spec)
    mat = up_map_matrix(spec, r)
    out = mat.to_json()
    out["row_labels"] = [list(m) for m in graded_basis(spec, r + 1)]
    out["col_labels"] = [list(m) for m in graded_basis(spec, r)]
    return out


# -- group actions ---------------------------------------------------------

# permutations of variable positions: new[i] = old[perm[i]]
_ID = (0, 1, 2)
_RHO = (2, 0, 1)  # x -> y -> z -> x on monomials: x^i y^j z^k -> y^i z^j x^k
_RHO2 = (1, 2, 0)
_SWAP = (0, 2, 1)
_S3 = [
    (_ID, 1), (_RHO, 1), (_RHO2, 1),
    ((0, 2, 1), -1), ((2, 1, 0), -1), ((1, 0, 2), -1),
]

ACTION_KINDS = ("cycle3", "swap_yz", "cycle3_swap_yz")


@dataclass(frozen=True)
class GroupAction:
    """A permutation action on three variables with a sign character.

    ``cycle3`` cycles x, y, z; ``swap_yz`` exchanges y and z;
    ``cycle3_swap_yz`` is the full symmetric group they generate.  With
    ``sign="minus"`` the odd permutations act by -1 (the 3-cycle has no
    nontrivial sign over the integers, so cycle3/minus is refused).
    """

    kind: str
    sign: str = "plus"

    def __post_init__(self):
        if self.kind not in ACTION_KINDS:
            raise ValueError(f"unknown action kind {self.kind!r}")
        if self.sign not in ("plus", "minus"):
            raise ValueError(f"unknown sign {self.sign!r}")
        if self.kind == "cycle3" and self.sign == "minus":
            raise ConstraintError("cycle3 has no anti-invariant part over the integers")

    def elements(self) -> list[tuple[tuple[int, int, int], int]]:
        """Group elements as (permutation, character value)."""
        minus = self.sign == "minus"
        if self.kind == "cycle3":
            return [(_ID, 1), (_RHO, 1), (_RHO2, 1)]
        if self.kind == "swap_yz":
            return [(_ID, 1), (_SWAP, -1 if minus else 1)]
        return [(p, s if minus else 1) for p, s in _S3]

    def check(self, spec: RingSpec) -> None:
        if spec.n != 3:
            raise ConstraintError("group actions are defined for three variables only")
        A, B, C = spec.caps
        if self.kind in ("cycle3", "cycle3_swap_yz") and not A == B == C:
            raise ConstraintError(f"{self.kind} needs equal caps, got {spec.caps}")
        if self.kind == "swap_yz" and B != C:
            raise ConstraintError(f"swap_yz needs B == C, got {spec.caps}")


def _apply(perm, mono: Monomial) -> Monomial:
    return tuple(mono[p] for p in perm)


@dataclass(frozen=True)
class SignedBasisElement:
    orbit: Monomial
    terms: tuple[tuple[Monomial, int], ...]

    def as_dict(self) -> dict[Monomial, int]:
        return dict(self.terms)


def _signed_orbit(mono: Monomial, action: GroupAction) -> SignedBasisElement | None:
    seen: dict[Monomial, int] = {}
    for perm, chi in action.elements():
        img = _apply(perm, mono)
        if img in seen:
            if seen[img] != chi:
                # stabiliser contains an element with character -1
                return None
        else:
            seen[img] = chi
    rep = max(seen)
    # renormalise so the representative carries +1
    s = seen[rep]
    terms = tuple(sorted(((m, c * s) for m, c in seen.items()), reverse=True))
    return SignedBasisElement(rep, terms)


def invariant_basis(spec, r: int, action: GroupAction) -> list[SignedBasisElement]:
    """Basis of the (anti-)invariant part of R_r, by descending representative."""
    spec = _as_spec(spec)
    action.check(spec)
    out = {}
    for mono in graded_basis(spec, r):
        if mono in out:
            continue
        el = _signed_orbit(mono, action)
        if el is not None and el.orbit == mono:
            out[mono] = el
    return [out[k] for k in sorted(out, reverse=True)]


def fixed_monomials(spec, r: int, action: GroupAction) -> list[Monomial]:
    """Monomials of degree r fixed by every element of the action."""
    spec = _as_spec(spec)
    action.check(spec)
    return [
        mono for mono in graded_basis(spec, r)
        if all(_apply(p, mono) == mono for p, _ in action.elements())
    ]


def multiply_by_sum(spec, poly: dict[Monomial, int]) -> dict[Monomial, int]:
    """(x1 + ... + xn) * poly in R, as a monomial -> coefficient dict."""
    spec = _as_spec(spec)
    out: dict[Monomial, int] = {}
    for mono, c in poly.items():
        for v in range(spec.n):
            if mono[v] + 1 < spec.caps[v]:
                up = mono[:v] + (mono[v] + 1,) + mono[v + 1:]
                out[up] = out.get(up, 0) + c
    return {m: c for m, c in out.items() if c}


def restricted_up_map(spec, r: int, action: GroupAction) -> ExactMatrix:
    """Up-map restricted to the (anti-)invariant submodule, in signed bases."""
    spec = _as_spec(spec)
    src = invariant_basis(spec, r, action)
    dst = invariant_basis(spec, r + 1, action)
    row_of = {el.orbit: i for i, el in enumerate(dst)}
    entries = [[0] * len(src) for _ in dst]
    for j, el in enumerate(src):
        image = multiply_by_sum(spec, el.as_dict())
        # read coordinates off the representatives, then check the rest
        recon: dict[Monomial, int] = {}
        for mono, c in image.items():
            i = row_of.get(mono)
            if i is not None:
                entries[i][j] = c
                for m2, c2 in dst[i].terms:
                    recon[m2] = recon.get(m2, 0) + c * c2
        if {m: c for m, c in recon.items() if c} != image:
            raise ArithmeticError("image left the invariant submodule")
    return ExactMatrix.from_rows(entries, len(src))
