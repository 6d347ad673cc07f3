"""Plane partitions in a box, lozenge tilings and perfect matchings.

A plane partition in an a x b x c box is kept as its set of unit cubes
(row i < a, column j < b, level k < c), an order ideal of the product
order.  The matrix form pi[i][j] = number of cubes in stack (i, j) is
derived.

The hexagon graph of the box is the bipartite graph between the middle
monomials B_m and B_{m+1} of k[x, y, z]/(x^A, y^B, z^C) with
(A, B, C) = (a + b, a + c, b + c); its biadjacency matrix is U_m.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from . import rings
from .linalg import CapacityError, ExactMatrix, determinant, permanent
from .reports import VerificationReport

Cube = tuple[int, int, int]
Monomial = rings.Monomial

ENUMERATION_LIMIT = 64


class BoxConstraintError(ValueError):
    """Box dimensions incompatible with the requested symmetry or action."""


@dataclass(frozen=True)
class BoxSpec:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 1:
            raise ValueError(f"box sides must be positive, got {(self.a, self.b, self.c)}")

    @property
    def caps(self) -> tuple[int, int, int]:
        return (self.a + self.b, self.a + self.c, self.b + self.c)

    @property
    def ring(self) -> rings.RingSpec:
        return rings.RingSpec(self.caps)

    @property
    def middle(self) -> int:
        return self.a + self.b + self.c - 2

    @property
    def cells(self) -> int:
        return self.a * self.b * self.c

    def all_cubes(self) -> frozenset[Cube]:
        return frozenset(itertools.product(range(self.a), range(self.b), range(self.c)))


def _box(box) -> BoxSpec:
    return box if isinstance(box, BoxSpec) else BoxSpec(*box)


@dataclass(frozen=True)
class PlanePartition:
    box: BoxSpec
    cubes: frozenset[Cube]

    @classmethod
    def from_matrix(cls, box, rows: Sequence[Sequence[int]]) -> PlanePartition:
        box = _box(box)
        cubes = set()
        for i, row in enumerate(rows):
            for j, h in enumerate(row):
                cubes.update((i, j, k) for k in range(h))
        pp = cls(box, frozenset(cubes))
        if not pp.is_valid() or pp.matrix() != tuple(tuple(r) for r in _pad(rows, box)):
            raise ValueError(f"{rows} is not a plane partition in {box}")
        return pp

    def matrix(self) -> tuple[tuple[int, ...], ...]:
        h = [[0] * self.box.b for _ in range(self.box.a)]
        for i, j, _ in self.cubes:
            h[i][j] += 1
        return tuple(tuple(r) for r in h)

    def is_valid(self) -> bool:
        a, b, c = self.box.a, self.box.b, self.box.c
        for i, j, k in self.cubes:
            if not (0 <= i < a and 0 <= j < b and 0 <= k < c):
                return False
            for d in ((i - 1, j, k), (i, j - 1, k), (i, j, k - 1)):
                if min(d) >= 0 and d not in self.cubes:
                    return False
        return True

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.matrix()]


def _pad(rows, box: BoxSpec) -> list[list[int]]:
    out = [list(r) + [0] * (box.b - len(r)) for r in rows]
    return out + [[0] * box.b for _ in range(box.a - len(out))]


def iter_box_pp(box) -> Iterator[PlanePartition]:
    """Plane partitions in the box, lexicographically by row-major entries."""
    box = _box(box)
    a, b, c = box.a, box.b, box.c
    grid = [[0] * b for _ in range(a)]

    def rec(pos: int):
        if pos == a * b:
            cubes = frozenset((i, j, k) for i in range(a) for j in range(b) for k in range(grid[i][j]))
            yield PlanePartition(box, cubes)
            return
        i, j = divmod(pos, b)
        hi = c
        if i > 0:
            hi = min(hi, grid[i - 1][j])
        if j > 0:
            hi = min(hi, grid[i][j - 1])
        for v in range(hi + 1):
            grid[i][j] = v
            yield from rec(pos + 1)
        grid[i][j] = 0

    yield from rec(0)


def enumerate_box_pp(box, limit: int = ENUMERATION_LIMIT) -> list[PlanePartition]:
    box = _box(box)
    if box.cells > limit:
        raise CapacityError(f"box {box.a}x{box.b}x{box.c} has {box.cells} cells, limit is {limit}")
    return list(iter_box_pp(box))


def macmahon_count(box) -> int:
    """Product of (i+j+k-1)/(i+j+k-2) over the box, in exact rationals."""
    box = _box(box)
    q = Fraction(1)
    for i in range(1, box.a + 1):
        for j in range(1, box.b + 1):
            for k in range(1, box.c + 1):
                q *= Fraction(i + j + k - 1, i + j + k - 2)
    if q.denominator != 1:
        raise ArithmeticError(f"MacMahon product is not an integer: {q}")
    return q.numerator


# -- hexagon graph and matchings ----------------------------------------------

@dataclass(frozen=True)
class HexGraph:
    """Bipartite multigraph; ``edges[(i, j)]`` is the multiplicity of left i -- right j."""

    left: tuple
    right: tuple
    edges: dict = field(hash=False, compare=False)

    def biadjacency(self) -> ExactMatrix:
        """Rows are right vertices, columns left vertices (the orientation of U_r)."""
        rows = [[0] * len(self.left) for _ in self.right]
        for (i, j), w in self.edges.items():
            rows[j][i] = w
        return ExactMatrix.from_rows(rows, len(self.left))

    def neighbours(self, i: int) -> list[tuple[int, int]]:
        return sorted((j, w) for (l, j), w in self.edges.items() if l == i)


@dataclass(frozen=True)
class Matching:
    """Perfect matching as (left vertex, right vertex) pairs; weight multiplies edge multiplicities."""

    pairs: tuple
    weight: int = 1

    def to_json(self) -> list:
        return [[list(l), list(r)] if isinstance(l, tuple) else [l, r] for l, r in self.pairs]


def _divides(lo: Monomial, hi: Monomial) -> bool:
    return all(x <= y for x, y in zip(lo, hi))


def build_hex_graph(box) -> HexGraph:
    box = _box(box)
    spec = box.ring
    if sum(spec.caps) % 2:
        raise BoxConstraintError("need A + B + C even")
    left = tuple(rings.graded_basis(spec, box.middle))
    right = tuple(rings.graded_basis(spec, box.middle + 1))
    edges = {}
    for i, lo in enumerate(left):
        for j, hi in enumerate(right):
            if _divides(lo, hi):
                edges[(i, j)] = 1
    return HexGraph(left, right, edges)


def enumerate_matchings(g: HexGraph) -> list[Matching]:
    """All perfect matchings; left vertices in order, right choices ascending."""
    if len(g.left) != len(g.right):
        return []
    adj = [g.neighbours(i) for i in range(len(g.left))]
    used = [False] * len(g.right)
    chosen: list[int] = []
    out = []

    def rec(i: int, w: int):
        if i == len(g.left):
            out.append(Matching(tuple((g.left[l], g.right[r]) for l, r in enumerate(chosen)), w))
            return
        for j, mult in adj[i]:
            if not used[j]:
                used[j] = True
                chosen.append(j)
                rec(i + 1, w * mult)
                chosen.pop()
                used[j] = False

    rec(0, 1)
    return out


def matching_count(g: HexGraph) -> int:
    return sum(m.weight for m in enumerate_matchings(g))


# Lozenges.  Lattice points of the box are (X, Y, Z) = (level, column, row).
# The projection beta below sends them to the hexagon's vertices, written as
# exponent triples summing to a + b + c; a unit face of the stepped surface
# then covers exactly one edge of the hexagon graph.

def _beta(box: BoxSpec, X: int, Y: int, Z: int) -> tuple[int, int, int]:
    return (box.b + Z - Y, box.a + X - Z, box.c + Y - X)


_FACE = {  # face normal -> (offset from beta to the lower monomial, variable index)
    "X": ((-1, -1, 0), 0),
    "Y": ((0, -1, -1), 1),
    "Z": ((-1, 0, -1), 2),
}


def _face_edge(box: BoxSpec, kind: str, P: tuple[int, int, int]) -> tuple[Monomial, Monomial]:
    off, v = _FACE[kind]
    q = _beta(box, *P)
    lo = tuple(x + d for x, d in zip(q, off))
    hi = tuple(x + (1 if t == v else 0) for t, x in enumerate(lo))
    return lo, hi


def pp_to_matching(pp: PlanePartition) -> Matching:
    box = pp.box
    pi = pp.matrix()
    pairs = []
    for Z in range(box.a):
        for Y in range(box.b):
            pairs.append(_face_edge(box, "X", (pi[Z][Y], Y, Z)))
    for Z in range(box.a):
        for X in range(box.c):
            Y = sum(1 for col in range(box.b) if pi[Z][col] > X)
            pairs.append(_face_edge(box, "Y", (X, Y, Z)))
    for Y in range(box.b):
        for X in range(box.c):
            Z = sum(1 for row in range(box.a) if pi[row][Y] > X)
            pairs.append(_face_edge(box, "Z", (X, Y, Z)))
    return Matching(tuple(sorted(pairs, reverse=True)))


def _canonical(m: Matching, g: HexGraph) -> Matching:
    order = {v: i for i, v in enumerate(g.left)}
    return Matching(tuple(sorted(m.pairs, key=lambda p: order[p[0]])), m.weight)


def matching_to_pp(box, m: Matching) -> PlanePartition:
    """Read the stack heights off the x-edges of a perfect matching.

    An x-edge with lower end D is the top face of stack (Z, Y) at height
    pi with beta = D + (1, 1, 0), which fixes Z - Y and pi - Z.  Along a
    diagonal Z - Y = d the quantity pi - Z strictly decreases, so sorting
    the x-edges of each diagonal recovers the stacks.
    """
    box = _box(box)
    spec = box.ring
    lefts = {l for l, _ in m.pairs}
    rights = {r for _, r in m.pairs}
    if (len(m.pairs) != len(lefts) or lefts != set(rings.graded_basis(spec, box.middle))
            or rights != set(rings.graded_basis(spec, box.middle + 1))):
        raise ValueError("not a perfect matching of the hexagon graph")
    by_diag: dict[int, list[int]] = {}
    for lo, hi in m.pairs:
        step = tuple(h - l for h, l in zip(hi, lo))
        if sorted(step) != [0, 0, 1] or min(step) < 0:
            raise ValueError(f"{lo} -- {hi} is not an edge")
        if step == (1, 0, 0):
            d0, d1 = lo[0] + 1 - box.b, lo[1] + 1 - box.a
            by_diag.setdefault(d0, []).append(d1)
    pi = [[0] * box.b for _ in range(box.a)]
    for d0, vals in by_diag.items():
        cells = [(Y + d0, Y) for Y in range(box.b) if 0 <= Y + d0 < box.a]
        if len(cells) != len(vals):
            raise ValueError("matching does not come from a tiling")
        for (Z, Y), d1 in zip(cells, sorted(vals, reverse=True)):
            pi[Z][Y] = d1 + Z
    try:
        pp = PlanePartition.from_matrix(box, pi)
    except ValueError as exc:
        raise ValueError("matching does not come from a tiling") from exc
    if set(pp_to_matching(pp).pairs) != set(m.pairs):
        raise ValueError("matching does not come from a tiling")
    return pp


def matching_sign(g: HexGraph, m: Matching) -> int:
    """Sign of the permutation of the biadjacency matrix selected by m."""
    col = {v: i for i, v in enumerate(g.left)}
    row = {v: i for i, v in enumerate(g.right)}
    perm = [0] * len(g.left)
    for l, r in m.pairs:
        perm[col[l]] = row[r]
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length and length % 2 == 0:
            sign = -sign
    return sign


# -- symmetry classes ----------------------------------------------------------

def rho(box: BoxSpec, cubes: frozenset[Cube]) -> frozenset[Cube]:
    if not box.a == box.b == box.c:
        raise BoxConstraintError("rho needs a = b = c")
    return frozenset((j, k, i) for i, j, k in cubes)


def tau(box: BoxSpec, cubes: frozenset[Cube]) -> frozenset[Cube]:
    if box.a != box.b:
        raise BoxConstraintError("tau needs a = b")
    return frozenset((j, i, k) for i, j, k in cubes)


def kappa(box: BoxSpec, cubes: frozenset[Cube]) -> frozenset[Cube]:
    a, b, c = box.a, box.b, box.c
    return frozenset((a - 1 - i, b - 1 - j, c - 1 - k) for i, j, k in box.all_cubes() - cubes)


_MOVES = {"rho": rho, "tau": tau, "kappa": kappa}


def apply_word(box: BoxSpec, word: Sequence[str], cubes: frozenset[Cube]) -> frozenset[Cube]:
    """Apply a composite like ("tau", "kappa"), rightmost first."""
    for name in reversed(word):
        cubes = _MOVES[name](box, cubes)
    return cubes


@dataclass(frozen=True)
class SymmetryClass:
    id: int
    name: str
    generators: tuple[tuple[str, ...], ...]

    def check(self, box: BoxSpec) -> None:
        names = {n for w in self.generators for n in w}
        if "rho" in names and not box.a == box.b == box.c:
            raise BoxConstraintError(f"{self.name} needs a = b = c")
        if "tau" in names and box.a != box.b:
            raise BoxConstraintError(f"{self.name} needs a = b")

    def fixes(self, pp: PlanePartition) -> bool:
        return all(apply_word(pp.box, w, pp.cubes) == pp.cubes for w in self.generators)


SYMMETRY_CLASSES = {
    1: SymmetryClass(1, "PP", ()),
    2: SymmetryClass(2, "SPP", (("tau",),)),
    3: SymmetryClass(3, "CSPP", (("rho",),)),
    4: SymmetryClass(4, "TSPP", (("rho",), ("tau",))),
    5: SymmetryClass(5, "SCPP", (("kappa",),)),
    6: SymmetryClass(6, "TCPP", (("tau", "kappa"),)),
    7: SymmetryClass(7, "SSCPP", (("tau",), ("kappa",))),
    8: SymmetryClass(8, "CSTCPP", (("rho",), ("tau", "kappa"))),
    9: SymmetryClass(9, "CSSCPP", (("rho",), ("kappa",))),
    10: SymmetryClass(10, "TSSCPP", (("rho",), ("tau",), ("kappa",))),
}


def symmetry_class(cls) -> SymmetryClass:
    if isinstance(cls, SymmetryClass):
        return cls
    if isinstance(cls, str):
        for sc in SYMMETRY_CLASSES.values():
            if sc.name.lower() == cls.lower():
                return sc
        if cls.isdigit():
            cls = int(cls)
        else:
            raise ValueError(f"unknown symmetry class {cls!r}")
    try:
        return SYMMETRY_CLASSES[cls]
    except KeyError:
        raise ValueError(f"unknown symmetry class {cls!r}") from None


def symmetry_count(box, cls, limit: int = ENUMERATION_LIMIT) -> int:
    """Brute-force number of plane partitions fixed by every generator of the class."""
    box, sc = _box(box), symmetry_class(cls)
    sc.check(box)
    if box.cells > limit:
        raise CapacityError(f"box {box.a}x{box.b}x{box.c} has {box.cells} cells, limit is {limit}")
    return sum(1 for pp in iter_box_pp(box) if sc.fixes(pp))


# -- quotients and restricted determinants --------------------------------------

_CLASS_ACTION = {
    3: rings.GroupAction("cycle3", "plus"),
    6: rings.GroupAction("swap_yz", "minus"),
    8: rings.GroupAction("cycle3_swap_yz", "minus"),
}


def quotient_structures(box, action: rings.GroupAction) -> HexGraph:
    """The graph whose weighted matchings the restricted up-map counts.

    cycle3: vertices are orbits of B_m and B_{m+1} (keyed by their largest
    monomial); the multiplicity of [L] -- [R] is the number of monomials
    in the orbit of L dividing R.  swap_yz: the hexagon graph with every
    monomial x^i y^j z^k, j <= k, removed (the y = z axis and its mirror
    half).
    """
    box = _box(box)
    spec = box.ring
    action.check(spec)
    m = box.middle
    if action.kind == "cycle3":
        left = [el.orbit for el in rings.invariant_basis(spec, m, action)]
        right = [el.orbit for el in rings.invariant_basis(spec, m + 1, action)]
        orbit = {el.orbit: [t for t, _ in el.terms] for el in rings.invariant_basis(spec, m, action)}
        edges = {}
        for i, lo in enumerate(left):
            for j, hi in enumerate(right):
                w = sum(1 for t in orbit[lo] if _divides(t, hi))
                if w:
                    edges[(i, j)] = w
        return HexGraph(tuple(left), tuple(right), edges)
    if action.kind == "swap_yz":
        g = build_hex_graph(box)
        keep_l = [i for i, v in enumerate(g.left) if v[1] > v[2]]
        keep_r = [j for j, v in enumerate(g.right) if v[1] > v[2]]
        li = {old: new for new, old in enumerate(keep_l)}
        ri = {old: new for new, old in enumerate(keep_r)}
        edges = {(li[i], ri[j]): w for (i, j), w in g.edges.items() if i in li and j in ri}
        return HexGraph(tuple(g.left[i] for i in keep_l), tuple(g.right[j] for j in keep_r), edges)
    raise BoxConstraintError(f"no quotient graph for action {action.kind}")


def restricted_determinant(box, cls) -> int:
    box, sc = _box(box), symmetry_class(cls)
    if sc.id == 1:
        return determinant(rings.up_map_matrix(box.ring, box.middle))
    if sc.id not in _CLASS_ACTION:
        raise ValueError(f"no determinant formula for class {sc.name}")
    sc.check(box)
    mat = rings.restricted_up_map(box.ring, box.middle, _CLASS_ACTION[sc.id])
    if mat.rows != mat.cols:
        raise ArithmeticError(f"restricted map is {mat.rows}x{mat.cols}")
    return determinant(mat)


def verify_det_identity(box, cls) -> VerificationReport:
    box, sc = _box(box), symmetry_class(cls)
    rep = VerificationReport(f"det-{sc.name.lower()}", {"box": [box.a, box.b, box.c], "class": sc.id})
    if sc.id == 1:
        u = rings.up_map_matrix(box.ring, box.middle)
        d, p = abs(determinant(u)), permanent(u)
        target = macmahon_count(box)
        rep.add(target, d, check="|det|=macmahon")
        rep.add(target, p, check="perm=macmahon")
        if box.cells <= ENUMERATION_LIMIT:
            rep.add(target, matching_count(build_hex_graph(box)), check="matchings=macmahon")
            rep.add(target, sum(1 for _ in iter_box_pp(box)), check="brute=macmahon")
        return rep
    if sc.id not in _CLASS_ACTION:
        raise ValueError(f"no determinant identity for class {sc.name}")
    sc.check(box)
    rep.add(symmetry_count(box, sc), abs(restricted_determinant(box, sc)), check="|det|=brute")
    return rep


def count(cls, box, method: str = "det") -> int:
    """Number of plane partitions in the class, by the chosen method."""
    box, sc = _box(box), symmetry_class(cls)
    sc.check(box)
    if method == "brute":
        return symmetry_count(box, sc)
    if method == "formula":
        if sc.id != 1:
            raise ValueError(f"no product formula implemented for {sc.name}")
        return macmahon_count(box)
    if method == "det":
        return abs(restricted_determinant(box, sc))
    if method == "perm":
        if sc.id == 1:
            return permanent(rings.up_map_matrix(box.ring, box.middle))
        if sc.id in (3, 6):
            return permanent(quotient_structures(box, _CLASS_ACTION[sc.id]).biadjacency())
        raise ValueError(f"no permanent method for {sc.name}")
    raise ValueError(f"unknown method {method!r}")


def box_sign_rigidity(box) -> set[int]:
    """Set of permutation signs over all perfect matchings (a singleton when rigid)."""
    g = build_hex_graph(box)
    return {matching_sign(g, m) for m in enumerate_matchings(g)}


def all_boxes(max_side: int) -> Iterable[BoxSpec]:
    for a, b, c in itertools.product(range(1, max_side + 1), repeat=3):
        yield BoxSpec(a, b, c)
