"""Skew Schur polynomials as Toeplitz minors.

Polynomials live in the formal variables h_1, h_2, ... (h_0 = 1 and h_j = 0
for j < 0), which is enough because h_1..h_n are algebraically
independent.  A skew shape lambda/mu with k rows is identified with its
Jacobi-Trudi determinant det(h_{lambda_i - mu_j - i + j}).

The lower triangular Toeplitz matrix here has h_n on the diagonal and h_1
in the bottom-left corner; A_c is the block on columns 1..c and rows
c..n, so its (p, q) entry (1-based within A_c) is h_{n - c + 1 - p + q}.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .linalg import determinant, snf
from .reports import VerificationReport

Partition = tuple[int, ...]


class ConstructionError(ArithmeticError):
    """An inverse Littlewood-Richardson step violated its contract."""


def partition(parts: Iterable[int]) -> Partition:
    """Validate and strip trailing zeros."""
    p = tuple(int(v) for v in parts)
    if any(a < b for a, b in zip(p, p[1:])) or any(v < 0 for v in p):
        raise ValueError(f"{p} is not a partition")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition

    def __init__(self, outer: Iterable[int], inner: Iterable[int] = ()):
        lam = partition(outer)
        mu = tuple(int(v) for v in inner)
        if any(a < b for a, b in zip(mu, mu[1:])) or any(v < 0 for v in mu):
            raise ValueError(f"{mu} is not a partition")
        if len(mu) > len(lam) and any(mu[len(lam):]):
            raise ValueError(f"{mu} is not contained in {lam}")
        mu = (mu + (0,) * len(lam))[: len(lam)]
        if any(m > l for m, l in zip(mu, lam)):
            raise ValueError(f"{mu} is not contained in {lam}")
        object.__setattr__(self, "outer", lam)
        object.__setattr__(self, "inner", mu)

    @property
    def k(self) -> int:
        return len(self.outer)

    @property
    def is_skew(self) -> bool:
        return any(self.inner)

    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def to_json(self) -> dict:
        return {"outer": list(self.outer), "inner": list(self.inner)}

    @classmethod
    def from_json(cls, obj: Mapping) -> SkewShape:
        return cls(obj["outer"], obj.get("inner", ()))

    def __str__(self):
        if not self.is_skew:
            return str(self.outer)
        return f"{self.outer}/{self.inner}"


def _shape(s) -> SkewShape:
    if isinstance(s, SkewShape):
        return s
    return SkewShape(s)


# -- formal polynomials in h ---------------------------------------------------

class HPolynomial:
    """Integer polynomial in formal h_1, h_2, ...

    Terms are keyed by the multiset of h-indices, stored as a descending
    tuple; the empty tuple is the constant term.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None):
        self.terms = {tuple(sorted(k, reverse=True)): int(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def h(cls, j: int) -> HPolynomial:
        if j < 0:
            return cls()
        if j == 0:
            return cls({(): 1})
        return cls({(j,): 1})

    def __add__(self, other: HPolynomial) -> HPolynomial:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return HPolynomial(out)

    def __neg__(self) -> HPolynomial:
        return HPolynomial({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: HPolynomial) -> HPolynomial:
        return self + (-other)

    def __mul__(self, other) -> HPolynomial:
        if isinstance(other, int):
            return HPolynomial({k: v * other for k, v in self.terms.items()})
        out: dict[tuple[int, ...], int] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                key = tuple(sorted(k1 + k2, reverse=True))
                out[key] = out.get(key, 0) + v1 * v2
        return HPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, HPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def max_index(self) -> int:
        return max((k[0] for k in self.terms if k), default=0)

    def evaluate(self, values: Mapping[int, int] | Sequence[int]) -> int:
        """Substitute integers; ``values[j]`` is h_j (sequences are 1-based via index j-1)."""
        get = values.__getitem__ if isinstance(values, Mapping) else (lambda j: values[j - 1])
        total = 0
        for key, c in self.terms.items():
            t = c
            for j in key:
                t *= get(j)
            total += t
        return total

    def to_json(self) -> list[dict]:
        return [{"indices": list(k), "coeff": str(v)} for k, v in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, rows: Iterable[Mapping]) -> HPolynomial:
        return cls({tuple(r["indices"]): int(r["coeff"]) for r in rows})

    def __repr__(self):
        if not self.terms:
            return "0"
        out = ""
        for k, v in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"h{j}" for j in k)
            mag = abs(v)
            body = (f"{mag}*{mono}" if mag != 1 else mono) if mono else str(mag)
            sign = "-" if v < 0 else "+"
            out += (f"-{body}" if sign == "-" else body) if not out else f" {sign} {body}"
        return out


def _perm_sign(perm: Sequence[int]) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def hdet(indices: Sequence[Sequence[int]]) -> HPolynomial:
    """Formal determinant of a square matrix whose (i, j) entry is h_{indices[i][j]}."""
    k = len(indices)
    total: dict[tuple[int, ...], int] = {}
    for perm in itertools.permutations(range(k)):
        key = []
        for i, j in enumerate(perm):
            idx = indices[i][j]
            if idx < 0:
                break
            if idx > 0:
                key.append(idx)
        else:
            key = tuple(sorted(key, reverse=True))
            total[key] = total.get(key, 0) + _perm_sign(perm)
    return HPolynomial(total)


def jt_indices(shape) -> list[list[int]]:
    s = _shape(shape)
    lam, mu = s.outer, s.inner
    return [[lam[i] - mu[j] - i + j for j in range(s.k)] for i in range(s.k)]


@lru_cache(maxsize=None)
def _jt_cached(shape: SkewShape) -> HPolynomial:
    return hdet(jt_indices(shape))


def jacobi_trudi(shape, n: int | None = None) -> HPolynomial:
    """Jacobi-Trudi determinant det(h_{lambda_i - mu_j - i + j}).

    If ``n`` is given, an index above n raises ValueError; with ``n=None``
    every h_j is a free variable.
    """
    s = _shape(shape)
    if n is not None:
        top = max((v for row in jt_indices(s) for v in row), default=0)
        if top > n:
            raise ValueError(f"{s} needs h_{top}, beyond n={n}")
    return _jt_cached(s)


def jacobi_trudi_value(shape, values: Sequence[int]) -> int:
    """Jacobi-Trudi determinant with h_j := values[j - 1] (h_0 = 1, h_<0 = 0)."""
    def h(j):
        if j < 0:
            return 0
        if j == 0:
            return 1
        return values[j - 1]
    return determinant([[h(v) for v in row] for row in jt_indices(shape)])


# -- Littlewood-Richardson ------------------------------------------------------

def lr_tableaux(shape) -> Iterable[dict[tuple[int, int], int]]:
    """Yield every Littlewood-Richardson labelling of a skew shape.

    Rows weakly increase to the right, columns strictly increase
    downwards, and the right-to-left, top-to-bottom reading word is a
    lattice word.
    """
    s = _shape(shape)
    lam, mu, k = s.outer, s.inner, s.k
    cells = [(i, j) for i in range(k) for j in range(lam[i] - 1, mu[i] - 1, -1)]
    label: dict[tuple[int, int], int] = {}
    counts = [0] * (k + 2)

    def rec(idx: int):
        if idx == len(cells):
            yield dict(label)
            return
        i, j = cells[idx]
        hi = k
        if j + 1 < lam[i]:
            hi = min(hi, label[(i, j + 1)])
        lo = 1
        if i > 0 and mu[i - 1] <= j < lam[i - 1]:
            lo = label[(i - 1, j)] + 1
        for v in range(lo, hi + 1):
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            label[(i, j)] = v
            counts[v] += 1
            yield from rec(idx + 1)
            counts[v] -= 1
            del label[(i, j)]

    yield from rec(0)


def lr_expand(shape) -> Counter:
    """Multiset of partitions pi with S_{lambda/mu} = sum S_pi."""
    s = _shape(shape)
    out: Counter = Counter()
    for lab in lr_tableaux(s):
        c = Counter(lab.values())
        out[partition(c[v] for v in range(1, s.k + 1))] += 1
    return out


# -- legality -----------------------------------------------------------------

def legality_conditions(shape, k: int, c: int, n: int) -> dict[str, bool]:
    """The inequalities that decide whether a shape is a k x k minor of A_c.

    The first five are the usual list; ``corner`` (lambda_k - mu_1 >= k)
    is also needed, because every entry of A_c is some h_j with j >= 1 and
    the bottom-left Jacobi-Trudi entry is h_{lambda_k - mu_1 - k + 1}.  It
    implies ``diagonal``.
    """
    s = _shape(shape)
    if s.k != k:
        raise ValueError(f"{s} has {s.k} parts, expected {k}")
    lam, mu = s.outer, s.inner
    return {
        "first_row": lam[0] <= n - k + 1,
        "last_row": lam[-1] >= k,
        "inner": mu[0] <= c - k,
        "diagonal": all(l - m >= k for l, m in zip(lam, mu)),
        "spread": lam[0] - lam[-1] <= n - c - k + 1,
        "corner": lam[-1] - mu[0] >= k,
    }


def is_legal(shape, k: int, c: int, n: int) -> bool:
    """Whether S_{lambda/mu} equals some k x k minor of A_c (inner part mu_k = 0)."""
    s = _shape(shape)
    if s.inner and s.inner[-1] != 0:
        return False
    return all(legality_conditions(s, k, c, n).values())


def minor_shape_correspondence(n: int, c: int, row_indices: Sequence[int], col_indices: Sequence[int]) -> SkewShape:
    """Skew shape whose Jacobi-Trudi determinant is the given minor of A_c.

    Indices are 1-based and local to A_c: rows 1..n-c+1, columns 1..c.
    """
    rows, cols = list(row_indices), list(col_indices)
    k = len(rows)
    if k == 0 or len(cols) != k:
        raise ValueError("row and column index sets must be nonempty and the same size")
    if any(a >= b for a, b in zip(rows, rows[1:])) or any(a >= b for a, b in zip(cols, cols[1:])):
        raise ValueError("indices must be strictly increasing")
    if not (1 <= c <= n and rows[0] >= 1 and rows[-1] <= n - c + 1 and cols[0] >= 1 and cols[-1] <= c):
        raise ValueError(f"indices out of range for A_{c} with n={n}")
    qk = cols[-1]
    lam = [s + n - c + 1 - rows[s - 1] + qk - k for s in range(1, k + 1)]
    mu = [qk - cols[t - 1] - (k - t) for t in range(1, k + 1)]
    return SkewShape(lam, mu)


def minor_for_shape(shape, c: int, n: int) -> tuple[list[int], list[int]]:
    """A witness (rows, cols) in A_c whose minor is S_shape; inverse of the above."""
    s = _shape(shape)
    k = s.k
    if not is_legal(s, k, c, n):
        raise ValueError(f"{s} is not ({k},{c})-legal for n={n}")
    lam, mu = s.outer, s.inner
    qk = max(mu[0] + k, lam[0] + k + c - n - 1)
    cols = [qk - mu[t - 1] - (k - t) for t in range(1, k + 1)]
    rows = [t + n - c + 1 + qk - k - lam[t - 1] for t in range(1, k + 1)]
    return rows, cols


def ac_index_matrix(n: int, c: int) -> list[list[int]]:
    """h-indices of A_c: entry (p, q) is n - c + 1 - p + q (0-based p, q shifted)."""
    return [[n - c + 1 - p + q for q in range(1, c + 1)] for p in range(1, n - c + 2)]


def minor_polynomial(n: int, c: int, rows: Sequence[int], cols: Sequence[int]) -> HPolynomial:
    idx = ac_index_matrix(n, c)
    return hdet([[idx[p - 1][q - 1] for q in cols] for p in rows])


# -- spreads and the inverse rule --------------------------------------------

@dataclass(frozen=True, order=True)
class Spread:
    """(lambda_1 - lambda_k, ..., lambda_{k-1} - lambda_k), ordered lexicographically."""

    deltas: tuple[int, ...]


def spread_of(p: Iterable[int], k: int | None = None) -> Spread:
    lam = partition(p)
    if k is not None and len(lam) != k:
        raise ValueError(f"{lam} has {len(lam)} parts, expected {k}")
    return Spread(tuple(v - lam[-1] for v in lam[:-1]))


def _nonskew_legal(nu: Partition, k: int, c: int, n: int) -> bool:
    return len(nu) == k and is_legal(SkewShape(nu), k, c, n)


def _check_decomposition_input(nu: Partition, k: int, c: int, n: int) -> None:
    if not k <= c <= n // 2:
        raise ValueError(f"need k <= c <= n/2, got k={k}, c={c}, n={n}")
    if not _nonskew_legal(nu, k, k, n):
        raise ValueError(f"{nu} is not ({k},{k})-legal for n={n}")


def cut_and_rotate(nu: Iterable[int], width: int) -> SkewShape:
    """Cut nu at column nu_k + width and reattach the overhang rotated by 180 degrees.

    With e_i = max(0, nu_i - nu_k - width) the result is
    lambda_j = e_1 + min(nu_j, nu_k + width), mu_1 = e_1 and
    mu_j = e_1 - e_{k+1-j}.
    """
    nu = partition(nu)
    k = len(nu)
    cut = nu[-1] + width
    excess = [max(0, v - cut) for v in nu]
    shift = excess[0]
    lam = [shift + min(v, cut) for v in nu]
    mu = [shift] + [shift - excess[k - 1 - t] for t in range(1, k)]
    return SkewShape(lam, mu)


def inverse_lr_step(nu: Iterable[int], k: int, c: int, n: int) -> SkewShape:
    """Skew shape whose LR expansion is nu plus terms of smaller spread.

    The part of each row of nu sticking out beyond nu_k + (n - c - k + 1)
    is cut off; the cut-off piece is turned 180 degrees and attached to the
    bottom left.  The result is (k, c)-legal, and its LR expansion
    contains nu exactly once with every other term of strictly smaller
    spread.  Both facts are checked before returning.
    """
    nu = partition(nu)
    _check_decomposition_input(nu, k, c, n)
    if _nonskew_legal(nu, k, c, n):
        raise ValueError(f"{nu} is already ({k},{c})-legal")
    shape = cut_and_rotate(nu, n - c - k + 1)

    if not is_legal(shape, k, c, n):
        raise ConstructionError(f"{shape} built from {nu} is not ({k},{c})-legal")
    expansion = lr_expand(shape)
    if expansion.get(nu) != 1:
        raise ConstructionError(f"{nu} occurs {expansion.get(nu, 0)} times in the expansion of {shape}")
    top = spread_of(nu, k)
    for pi in expansion:
        if pi != nu and not spread_of(pi, k) < top:
            raise ConstructionError(f"{pi} in the expansion of {shape} does not have smaller spread than {nu}")
    return shape


def inverse_lr_decompose(nu: Iterable[int], k: int, c: int, n: int) -> dict[SkewShape, int]:
    """Write S_nu as an integer combination of (k, c)-legal skew Schur polynomials."""
    nu = partition(nu)
    _check_decomposition_input(nu, k, c, n)
    return dict(_decompose(nu, k, c, n))


@lru_cache(maxsize=None)
def _decompose(nu: Partition, k: int, c: int, n: int) -> tuple[tuple[SkewShape, int], ...]:
    if _nonskew_legal(nu, k, c, n):
        return ((SkewShape(nu), 1),)
    shape = inverse_lr_step(nu, k, c, n)
    acc: Counter = Counter({shape: 1})
    for pi, mult in lr_expand(shape).items():
        if pi == nu:
            continue
        if not _nonskew_legal(pi, k, k, n):
            raise ConstructionError(f"{pi} from {shape} is not ({k},{k})-legal")
        for s, coeff in _decompose(pi, k, c, n):
            acc[s] -= mult * coeff
    return tuple((s, v) for s, v in sorted(acc.items(), key=lambda kv: (kv[0].outer, kv[0].inner)) if v)


def combination_polynomial(combo: Mapping[SkewShape, int]) -> HPolynomial:
    total = HPolynomial()
    for s, coeff in combo.items():
        total = total + jacobi_trudi(s) * coeff
    return total


def combination_value(combo: Mapping[SkewShape, int], values: Sequence[int]) -> int:
    return sum(coeff * jacobi_trudi_value(s, values) for s, coeff in combo.items())


def legal_nonskew(k: int, n: int) -> list[Partition]:
    """All (k, k)-legal partitions: k parts, nu_1 <= n - k + 1, nu_k >= k."""
    out = []
    for p in itertools.combinations_with_replacement(range(n - k + 1, k - 1, -1), k):
        out.append(tuple(p))
    return sorted(set(out), reverse=True)


# -- Toeplitz Smith forms -------------------------------------------------------

def toeplitz_matrix(h: Sequence[int]) -> list[list[int]]:
    """n x n lower triangular Toeplitz matrix with h_n on the diagonal, h_1 bottom-left."""
    n = len(h)
    return [[h[n - i + j - 1] if i >= j else 0 for j in range(n)] for i in range(n)]


def toeplitz_block(h: Sequence[int], c: int) -> list[list[int]]:
    """A_c: columns 1..c and rows c..n of the Toeplitz matrix."""
    t = toeplitz_matrix(h)
    return [row[:c] for row in t[c - 1:]]


def verify_toeplitz_lemma(h: Sequence[int]) -> VerificationReport:
    """k-th Smith entry of A_c is the same for every k <= c <= n/2."""
    h = [int(v) for v in h]
    n = len(h)
    if n < 2:
        raise ValueError("need n >= 2")
    rep = VerificationReport("toeplitz", {"h": [str(v) for v in h]})
    half = n // 2
    forms = {c: snf(toeplitz_block(h, c)).entries for c in range(1, half + 1)}
    for k in range(1, half + 1):
        for c in range(k + 1, half + 1):
            rep.add(forms[k][k - 1], forms[c][k - 1], k=k, c=c)
    return rep


def random_toeplitz_trials(trials: int, seed: int, max_n: int = 10, bound: int = 20) -> list[VerificationReport]:
    rng = random.Random(seed)
    out = []
    for _ in range(trials):
        n = rng.randint(2, max_n)
        h = [rng.randint(-bound, bound) for _ in range(n)]
        out.append(verify_toeplitz_lemma(h))
    return out
