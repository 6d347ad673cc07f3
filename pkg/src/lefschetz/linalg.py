"""Exact integer linear algebra.

Everything here works on Python ints, so entries never overflow.  The
main entry points are :func:`snf`, :func:`determinant`,
:func:`permanent` and :func:`gcd_of_minors`.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence


class DimensionError(ValueError):
    """Raised when a matrix has the wrong shape for an operation."""


class CapacityError(RuntimeError):
    """Raised when an exact computation would exceed its configured size."""


@dataclass(frozen=True)
class ExactMatrix:
    """Dense row-major matrix of arbitrary-precision integers."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative dimension")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> ExactMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionError("ragged rows")
        return cls(len(rows), cols, tuple(int(v) for r in rows for v in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> ExactMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def transpose(self) -> ExactMatrix:
        return ExactMatrix.from_rows(
            [[self[i, j] for i in range(self.rows)] for j in range(self.cols)], self.rows
        )

    def submatrix(self, row_idx: Iterable[int], col_idx: Iterable[int]) -> ExactMatrix:
        row_idx, col_idx = list(row_idx), list(col_idx)
        return ExactMatrix.from_rows(
            [[self[i, j] for j in col_idx] for i in row_idx], len(col_idx)
        )

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        a, b = self.to_rows(), other.to_rows()
        out = [
            [sum(a[i][k] * b[k][j] for k in range(self.cols)) for j in range(other.cols)]
            for i in range(self.rows)
        ]
        return ExactMatrix.from_rows(out, other.cols)

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": [str(v) for v in self.entries]}

    @classmethod
    def from_json(cls, obj: dict | str) -> ExactMatrix:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(int(obj["rows"]), int(obj["cols"]), tuple(int(v) for v in obj["entries"]))

    def __repr__(self):
        return f"ExactMatrix({self.to_rows()!r})"


@dataclass(frozen=True)
class SnfResult:
    """Diagonal of a Smith normal form, ascending in divisibility order.

    ``left`` and ``right`` are only filled in when :func:`snf` is asked to
    record transforms; then ``left @ m @ right`` is the diagonal matrix.
    """

    entries: tuple[int, ...]
    rank: int
    left: ExactMatrix | None = field(default=None, compare=False, repr=False)
    right: ExactMatrix | None = field(default=None, compare=False, repr=False)

    @property
    def non_units(self) -> tuple[int, ...]:
        return tuple(e for e in self.entries if e != 1)

    def is_chain(self) -> bool:
        # 0 divides only 0, so zeros are forced to the tail
        return all(
            (b == 0) if a == 0 else (b % a == 0)
            for a, b in zip(self.entries, self.entries[1:])
        )


def _as_rows(m) -> list[list[int]]:
    if isinstance(m, ExactMatrix):
        return m.to_rows()
    return [[int(v) for v in r] for r in m]


def _as_matrix(m) -> ExactMatrix:
    return m if isinstance(m, ExactMatrix) else ExactMatrix.from_rows(m)


class _Eliminator:
    """Row/column operations on a working copy, optionally tracking P and Q."""

    def __init__(self, a: list[list[int]], ncols: int, record: bool):
        self.a = a
        self.nr = len(a)
        self.nc = ncols
        self.p = [[int(i == j) for j in range(self.nr)] for i in range(self.nr)] if record else None
        self.q = [[int(i == j) for j in range(self.nc)] for i in range(self.nc)] if record else None

    def swap_rows(self, i, j):
        if i != j:
            self.a[i], self.a[j] = self.a[j], self.a[i]
            if self.p is not None:
                self.p[i], self.p[j] = self.p[j], self.p[i]

    def swap_cols(self, i, j):
        if i != j:
            for row in self.a:
                row[i], row[j] = row[j], row[i]
            if self.q is not None:
                for row in self.q:
                    row[i], row[j] = row[j], row[i]

    def add_row(self, dst, src, k):
        # row[dst] += k * row[src]
        rs, rd = self.a[src], self.a[dst]
        for j in range(self.nc):
            if rs[j]:
                rd[j] += k * rs[j]
        if self.p is not None:
            ps, pd = self.p[src], self.p[dst]
            for j in range(self.nr):
                pd[j] += k * ps[j]

    def add_col(self, dst, src, k):
        for row in self.a:
            if row[src]:
                row[dst] += k * row[src]
        if self.q is not None:
            for row in self.q:
                row[dst] += k * row[src]

    def negate_row(self, i):
        self.a[i] = [-v for v in self.a[i]]
        if self.p is not None:
            self.p[i] = [-v for v in self.p[i]]

    def reduce_pivot(self, t: int, rows: Sequence[int], cols: Sequence[int]) -> None:
        """Clear row ``t`` and column ``t`` inside the active index sets.

        The pivot position (t, t) must already hold a nonzero entry.
        """
        a = self.a
        while True:
            p = a[t][t]
            dirty = False
            for i in rows:
                if i != t and a[i][t]:
                    self.add_row(i, t, -(a[i][t] // p))
                    dirty = dirty or a[i][t] != 0
            for j in cols:
                if j != t and a[t][j]:
                    self.add_col(j, t, -(a[t][j] // p))
                    dirty = dirty or a[t][j] != 0
            if not dirty:
                return
            # a remainder smaller than |p| survived: it becomes the pivot
            best = None
            for i in rows:
                if i != t and a[i][t] and (best is None or abs(a[i][t]) < best[0]):
                    best = (abs(a[i][t]), "r", i)
            for j in cols:
                if j != t and a[t][j] and (best is None or abs(a[t][j]) < best[0]):
                    best = (abs(a[t][j]), "c", j)
            if best[1] == "r":
                self.swap_rows(t, best[2])
            else:
                self.swap_cols(t, best[2])


def snf(m, record_transforms: bool = False) -> SnfResult:
    """Smith normal form of an integer matrix.

    Elimination always pivots on an entry of smallest absolute value; the
    resulting diagonal is then repaired pairwise until each entry divides
    the next.  Entries are nonnegative and zeros come last.

    Examples
    --------
    >>> snf([[6, 4], [4, 6]]).entries
    (2, 10)
    """
    mat = _as_matrix(m)
    nr, nc = mat.shape
    k = min(nr, nc)
    el = _Eliminator(mat.to_rows(), nc, record_transforms)
    a = el.a

    for t in range(k):
        best = None
        for i in range(t, nr):
            row = a[i]
            for j in range(t, nc):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        el.swap_rows(t, best[1])
        el.swap_cols(t, best[2])
        el.reduce_pivot(t, range(t, nr), range(t, nc))

    for t in range(k):
        if a[t][t] < 0:
            el.negate_row(t)

    # divisibility repair on adjacent diagonal pairs
    changed = True
    while changed:
        changed = False
        for t in range(k - 1):
            x, y = a[t][t], a[t + 1][t + 1]
            if x == 0 and y != 0:
                el.swap_rows(t, t + 1)
                el.swap_cols(t, t + 1)
                changed = True
            elif x != 0 and y % x != 0:
                el.add_row(t, t + 1, 1)
                el.reduce_pivot(t, (t, t + 1), (t, t + 1))
                for s in (t, t + 1):
                    if a[s][s] < 0:
                        el.negate_row(s)
                changed = True

    entries = tuple(a[t][t] for t in range(k))
    rank = sum(1 for e in entries if e)
    left = right = None
    if record_transforms:
        left = ExactMatrix.from_rows(el.p, nr)
        right = ExactMatrix.from_rows(el.q, nc)
    return SnfResult(entries, rank, left, right)


def determinant(m) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = _as_rows(m)
    n = len(a)
    if isinstance(m, ExactMatrix):
        if m.rows != m.cols:
            raise DimensionError(f"determinant of non-square {m.shape} matrix")
    elif any(len(r) != n for r in a):
        raise DimensionError("determinant of non-square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


RYSER_MAX_COLS = 34
DP_MAX_STATES = 2_000_000


def _permanent_ryser(a: list[list[int]]) -> int:
    n = len(a)
    if n > RYSER_MAX_COLS:
        raise CapacityError(f"Ryser permanent is capped at {RYSER_MAX_COLS} columns, got {n}")
    cols = [[a[i][j] for i in range(n)] for j in range(n)]
    sums = [0] * n
    total = 0
    in_set = [False] * n
    size = 0
    # Gray code: step g flips bit (trailing zeros of g)
    for g in range(1, 1 << n):
        j = (g & -g).bit_length() - 1
        col = cols[j]
        if in_set[j]:
            for i in range(n):
                sums[i] -= col[i]
            size -= 1
        else:
            for i in range(n):
                sums[i] += col[i]
            size += 1
        in_set[j] = not in_set[j]
        prod = 1
        for s in sums:
            if not s:
                prod = 0
                break
            prod *= s
        if prod:
            total += -prod if size & 1 else prod
    return total if n % 2 == 0 else -total


def _permanent_dp(a: list[list[int]]) -> int:
    # row-by-row expansion memoised on the set of used columns
    states = {0: 1}
    for row in a:
        support = [(j, v) for j, v in enumerate(row) if v]
        nxt: dict[int, int] = {}
        for mask, w in states.items():
            for j, v in support:
                bit = 1 << j
                if not mask & bit:
                    key = mask | bit
                    nxt[key] = nxt.get(key, 0) + w * v
        states = nxt
        if len(states) > DP_MAX_STATES:
            raise CapacityError("permanent expansion exceeded the state budget")
        if not states:
            return 0
    return sum(states.values())


def permanent(m, method: str = "auto") -> int:
    """Exact permanent.

    ``method`` is ``"ryser"`` (inclusion-exclusion over column subsets in
    Gray-code order), ``"dp"`` (row expansion memoised on used columns,
    fast on sparse banded matrices such as the up-maps) or ``"auto"``,
    which picks ``"dp"`` when rows carry at most four nonzeros on average.
    """
    mat = _as_matrix(m)
    if mat.rows != mat.cols:
        raise DimensionError(f"permanent of non-square {mat.shape} matrix")
    n = mat.rows
    if n == 0:
        return 1
    a = mat.to_rows()
    if method == "auto":
        nnz = sum(1 for v in mat.entries if v)
        method = "dp" if nnz <= 4 * n else "ryser"
    if method == "ryser":
        return _permanent_ryser(a)
    if method == "dp":
        return _permanent_dp(a)
    raise ValueError(f"unknown permanent method {method!r}")


def gcd_of_minors(m, k: int) -> int:
    """gcd of all k x k minors (0 when they all vanish)."""
    mat = _as_matrix(m)
    if not 1 <= k <= min(mat.shape):
        raise DimensionError(f"minor size {k} out of range for {mat.shape} matrix")
    a = mat.to_rows()
    g = 0
    for rs in itertools.combinations(range(mat.rows), k):
        sub = [a[i] for i in rs]
        for cs in itertools.combinations(range(mat.cols), k):
            g = gcd(g, determinant([[r[j] for j in cs] for r in sub]))
            if g == 1:
                return 1
    return g


def snf_from_minors(m) -> tuple[int, ...]:
    """SNF diagonal computed as ratios of successive minor gcds.

    Exponential in the matrix size; meant as an independent check of
    :func:`snf` on small inputs.
    """
    mat = _as_matrix(m)
    out = []
    prev = 1
    for k in range(1, min(mat.shape) + 1):
        g = gcd_of_minors(mat, k)
        if g == 0:
            out.extend([0] * (min(mat.shape) - k + 1))
            break
        out.append(g // prev)
        prev = g
    return tuple(out)
