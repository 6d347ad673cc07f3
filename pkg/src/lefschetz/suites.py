"""Named verification sweeps.  Each suite returns a list of reports and is
deterministic given its seed."""

from __future__ import annotations

import itertools
import random
from typing import Callable

from . import plane_partitions as pp
from . import rings, schur
from . import snf_theorems as st
from .linalg import CapacityError, ExactMatrix, snf
from .reports import VerificationReport

DEFAULT_SEED = 1729


def sorted_caps(lo: int = 1, hi: int = 5):
    for A in range(lo, hi + 1):
        for B in range(lo, A + 1):
            for C in range(lo, B + 1):
                yield (A, B, C)


def thm1_grid(parts: str = "i ii iii", lo: int = 1, hi: int = 5) -> list[VerificationReport]:
    out = []
    for caps in sorted_caps(lo, hi):
        for part in parts.split():
            out.append(st.verify_snf_theorem(part, caps))
    return out


def symbolic_grid(lo: int = 2, hi: int = 5) -> list[VerificationReport]:
    """Terminal block of the symbolic elimination against its closed form."""
    out = []
    for A, B, C in sorted_caps(lo, hi):
        spec = rings.RingSpec((A, B, C))
        rep = VerificationReport("symbolic-reduction", {"caps": [A, B, C]})
        for r in range(A - 1, spec.middle + 1):
            try:
                got = st.symbolic_reduction(A, B, C, r)
            except st.ReductionError as exc:
                rep.errors.append(f"r={r}: {exc}")
                continue
            want = st.expected_terminal_block(A, B, C, r)
            rep.add([[str(t) for t in row] for row in want], [[str(t) for t in row] for row in got], r=r)
        out.append(rep)
    return out


def nullity_grid(primes=(2, 3, 5, 7, 11, 13), lo: int = 1, hi: int = 5) -> list[VerificationReport]:
    """Number of Smith entries of U_r divisible by p is at most r - A + 2."""
    out = []
    for caps in sorted_caps(lo, hi):
        spec = rings.RingSpec(caps)
        rep = VerificationReport("nullity", {"caps": list(caps)})
        for r in range(caps[0] - 1, spec.middle + 1):
            ent = st.up_snf(spec, r).entries
            for p in primes:
                k = sum(1 for e in ent if e % p == 0)
                rep.add(True, k <= r - caps[0] + 2, r=r, p=p, divisible=k)
        out.append(rep)
    return out


def carlitz_suite(max_side: int = 6) -> list[VerificationReport]:
    rep = VerificationReport("carlitz", {"max_side": max_side})
    for a in range(1, max_side + 1):
        for b in range(1, max_side + 1):
            for c in (1, 2):
                rep.add(list(st.carlitz_closed_forms(a, b, c)), list(snf(st.carlitz_matrix(a, b, c)).entries), a=a, b=b, c=c)
    for a in range(1, max_side + 1):
        P, Q = st.carlitz_transform(a)
        want = st.carlitz_closed_forms(a, a, 2)
        got = (P @ st.carlitz_matrix(a, a, 2) @ Q).to_rows()
        rep.add([[want[0], 0], [0, want[1]]], got, a=a, check="transform")
        rep.add(1, abs(P[0, 0] * P[1, 1] - P[0, 1] * P[1, 0]) * abs(Q[0, 0] * Q[1, 1] - Q[0, 1] * Q[1, 0]), a=a, check="unimodular")
    return [rep]


def pp_grid(max_side: int = 3) -> list[VerificationReport]:
    return [pp.verify_det_identity(box, 1) for box in pp.all_boxes(max_side)]


SYMMETRY_CASES = [
    ((1, 1, 1), 3), ((2, 2, 2), 3), ((3, 3, 3), 3),
    ((1, 1, 2), 6), ((2, 2, 1), 6), ((2, 2, 2), 6),
    ((2, 2, 2), 8),
]


def symmetry_grid() -> list[VerificationReport]:
    return [pp.verify_det_identity(box, cls) for box, cls in SYMMETRY_CASES]


def quotient_grid(max_side: int = 3) -> list[VerificationReport]:
    """Weighted matchings of the quotient graphs against the restricted determinants."""
    out = []
    for a in range(1, max_side + 1):
        box = pp.BoxSpec(a, a, a)
        for cls, action in ((3, rings.GroupAction("cycle3")), (6, rings.GroupAction("swap_yz", "minus"))):
            q = pp.quotient_structures(box, action)
            rep = VerificationReport(f"quotient-{action.kind}", {"box": [a, a, a]})
            rep.add(abs(pp.restricted_determinant(box, cls)), pp.matching_count(q), check="matchings=|det|")
            rep.add(rings.restricted_up_map(box.ring, box.middle, action).to_rows(), q.biadjacency().to_rows(), check="biadjacency")
            if action.kind == "cycle3":
                doubles = sorted((q.left[i], q.right[j]) for (i, j), w in q.edges.items() if w == 2)
                rep.add([((a, a - 1, a - 1), (a, a, a - 1))], doubles, check="double edge")
            out.append(rep)
    return out


def bijection_suite(max_side: int = 2) -> list[VerificationReport]:
    out = []
    for box in pp.all_boxes(max_side):
        out.append(verify_bijection(box))
    return out


def verify_bijection(box) -> VerificationReport:
    box = pp._box(box)
    g = pp.build_hex_graph(box)
    rep = VerificationReport("bijection", {"box": [box.a, box.b, box.c]})
    matchings = pp.enumerate_matchings(g)
    images = []
    for idx, m in enumerate(matchings):
        try:
            p = pp.matching_to_pp(box, m)
        except ValueError as exc:
            rep.errors.append(f"matching {idx}: {exc}")
            continue
        images.append(p)
        rep.add(sorted(m.pairs), sorted(pp.pp_to_matching(p).pairs), matching=idx, check="round trip")
    rep.add(len(matchings), len(set(images)), check="injective")
    rep.add(sorted(p.matrix() for p in pp.enumerate_box_pp(box)), sorted(p.matrix() for p in images), check="onto")
    signs = sorted({pp.matching_sign(g, m) for m in matchings})
    rep.add(1, len(signs), check="one sign")
    return rep


def toeplitz_random(seed: int = DEFAULT_SEED, trials: int = 100, max_n: int = 10, bound: int = 20) -> list[VerificationReport]:
    return schur.random_toeplitz_trials(trials, seed, max_n, bound)


def toeplitz_binomial(caps=(4, 4, 4)) -> VerificationReport:
    """The binomial Toeplitz blocks reproduce M_r and the non-units of U_r."""
    A, B, C = caps
    spec = rings.RingSpec(caps)
    rep = VerificationReport("toeplitz-binomial", {"caps": list(caps)})
    # h_t = binom(A, C - t) on an n x n matrix with n = B + C - A - 1 makes A_c = M_{A-2+c}
    n = B + C - A - 1
    if n < 1:
        return rep
    h = [st.binom(A, C - t) for t in range(1, n + 1)]
    for c in range(1, min(n, spec.middle - A + 2) + 1):
        r = A - 2 + c
        block = ExactMatrix.from_rows(schur.toeplitz_block(h, c), c)
        rep.add(st.build_mr(A, B, C, r).to_rows(), block.to_rows(), c=c, r=r, check="A_c = M_r")
        rep.add(list(st.up_snf(spec, r).non_units), list(snf(block).non_units), c=c, r=r, check="non-units")
    return rep


def lr_suite(seed: int = DEFAULT_SEED, max_part: int = 6, max_rows: int = 4, max_n: int = 8, points: int = 5) -> list[VerificationReport]:
    out = []
    fig = VerificationReport("lr-figure", {"shape": {"outer": [5, 3], "inner": [1, 0]}})
    s = schur.SkewShape((5, 3), (1,))
    fig.add([[[4, 3], 1], [[5, 2], 1]], sorted([list(p), m] for p, m in schur.lr_expand(s).items()), check="expansion")
    fig.add(repr(schur.jacobi_trudi((5, 2)) + schur.jacobi_trudi((4, 3))), repr(schur.jacobi_trudi(s)), check="polynomial")
    out.append(fig)

    sweep = VerificationReport("lr-jacobi-trudi", {"max_part": max_part, "max_rows": max_rows})
    for k in range(1, max_rows + 1):
        shapes = bad = 0
        for lam in itertools.combinations_with_replacement(range(max_part, 0, -1), k):
            for mu in itertools.combinations_with_replacement(range(max_part, -1, -1), k):
                if any(m > l for m, l in zip(mu, lam)):
                    continue
                shape = schur.SkewShape(lam, mu)
                total = schur.HPolynomial()
                for p, mult in schur.lr_expand(shape).items():
                    total = total + schur.jacobi_trudi(p) * mult
                shapes += 1
                if total != schur.jacobi_trudi(shape):
                    bad += 1
                    sweep.add(repr(schur.jacobi_trudi(shape)), repr(total), shape=shape.to_json())
        sweep.add(0, bad, k=k, shapes=shapes, check="mismatches")
    out.append(sweep)

    minor = VerificationReport("minor-identity", {"n": 7})
    lhs = schur.hdet([[6, 7], [1, 2]])
    rhs = schur.hdet([[5, 7], [1, 3]]) - schur.hdet([[5, 6], [2, 3]])
    minor.add(repr(lhs), repr(rhs), check="|h6 h7; h1 h2| = |h5 h7; h1 h3| - |h5 h6; h2 h3|")
    minor.add(repr(lhs), repr(schur.minor_polynomial(7, 2, [1, 6], [1, 2])), check="entry in A_2")
    minor.add(repr(lhs), repr(schur.jacobi_trudi(schur.minor_shape_correspondence(7, 2, [1, 6], [1, 2]))), check="shape")
    out.append(minor)

    out.append(legality_suite(max_n=max_n))
    out.append(inverse_lr_suite(seed, max_n, points))
    return out


def legality_suite(max_n: int = 8) -> VerificationReport:
    """Every minor of every A_c has a legal shape, and every legal shape has a witness minor."""
    rep = VerificationReport("legality", {"max_n": max_n})
    for n in range(2, max_n + 1):
        for c in range(1, n + 1):
            seen = set()
            minors = bad = 0
            for k in range(1, min(c, n - c + 1) + 1):
                for rows in itertools.combinations(range(1, n - c + 2), k):
                    for cols in itertools.combinations(range(1, c + 1), k):
                        shape = schur.minor_shape_correspondence(n, c, rows, cols)
                        minors += 1
                        ok = schur.is_legal(shape, k, c, n) and schur.jacobi_trudi(shape) == schur.minor_polynomial(n, c, rows, cols)
                        bad += not ok
                        seen.add(shape)
            witnesses = wbad = 0
            for k in range(1, min(c, n - c + 1) + 1):
                for lam in itertools.combinations_with_replacement(range(n - k + 1, k - 1, -1), k):
                    for mu in itertools.combinations_with_replacement(range(c - k, -1, -1), k):
                        if mu[-1] != 0 or any(m > l for m, l in zip(mu, lam)):
                            continue
                        shape = schur.SkewShape(lam, mu)
                        if not schur.is_legal(shape, k, c, n):
                            continue
                        witnesses += 1
                        rows, cols = schur.minor_for_shape(shape, c, n)
                        wbad += schur.minor_shape_correspondence(n, c, rows, cols) != shape or shape not in seen
            rep.add((0, 0), (bad, wbad), n=n, c=c, minors=minors, legal_shapes=witnesses)
    return rep


def inverse_lr_suite(seed: int = DEFAULT_SEED, max_n: int = 8, points: int = 5, formal_up_to: int = 6) -> VerificationReport:
    rep = VerificationReport("inverse-lr", {"max_n": max_n, "seed": seed})
    rng = random.Random(seed)
    for n in range(2, max_n + 1):
        for k in range(1, n // 2 + 1):
            for c in range(k, n // 2 + 1):
                for nu in schur.legal_nonskew(k, n):
                    try:
                        combo = schur.inverse_lr_decompose(nu, k, c, n)
                    except schur.ConstructionError as exc:
                        rep.errors.append(f"nu={nu} k={k} c={c} n={n}: {exc}")
                        continue
                    case = {"nu": list(nu), "k": k, "c": c, "n": n}
                    rep.add(True, all(schur.is_legal(s, k, c, n) for s in combo), **case, check="legal")
                    if n <= formal_up_to:
                        rep.add(repr(schur.jacobi_trudi(nu)), repr(schur.combination_polynomial(combo)), **case, check="formal")
                    else:
                        for pt in range(points):
                            vals = [rng.randint(-10, 10) for _ in range(n)]
                            rep.add(schur.jacobi_trudi_value(nu, vals), schur.combination_value(combo, vals), **case, point=pt, check="evaluation")
    return rep


def slow_n5() -> list[VerificationReport]:
    rep5 = VerificationReport("multinomial-n5", {"caps": [4] * 5})
    caps5 = (4,) * 5
    nu6 = list(st.up_snf(caps5, 6).non_units)
    nu7 = list(st.up_snf(caps5, 7).non_units)
    rep5.add(True, 70 in nu6, r=6, check="70 in SNF(U_6)")
    rep5.add(False, 70 in nu7, r=7, check="70 in SNF(U_7)")
    for r, nu in ((6, nu6), (7, nu7)):
        rep5.add(nu, list(snf(st.build_multinomial_mr(caps5, r)).non_units), r=r, check="multinomial M_r")
    ok, lo, hi = st.nonunit_containment(caps5, 6)
    rep5.add(False, ok, r=6, check="containment fails")

    rep4 = VerificationReport("multinomial-n4", {"caps": [4] * 4})
    caps4 = (4,) * 4
    spec4 = rings.RingSpec(caps4)
    for r in range(caps4[0] - 1, spec4.middle):
        ok, lo, hi = st.nonunit_containment(caps4, r)
        rep4.add(True, ok, r=r, lower=[str(v) for v in lo], upper=[str(v) for v in hi])
    for r in range(caps4[0] - 1, spec4.middle + 1):
        rep4.add(list(st.up_snf(caps4, r).non_units), list(snf(st.build_multinomial_mr(caps4, r)).non_units), r=r, check="multinomial M_r")
    return [rep5, rep4]


SUITES: dict[str, Callable[..., list[VerificationReport]]] = {
    "thm1-grid": lambda seed, trials: (thm1_grid() + symbolic_grid() + nullity_grid() + carlitz_suite()
                                       + [toeplitz_binomial(caps) for caps in sorted_caps(1, 5)]),
    "pp-grid": lambda seed, trials: pp_grid(),
    "symmetry-grid": lambda seed, trials: symmetry_grid() + quotient_grid(),
    "toeplitz-random": lambda seed, trials: toeplitz_random(seed, trials),
    "lr-suite": lambda seed, trials: lr_suite(seed),
    "bijection": lambda seed, trials: bijection_suite(),
    "slow-n5": lambda seed, trials: slow_n5(),
}


def run_suite(name: str, seed: int = DEFAULT_SEED, trials: int = 100) -> list[VerificationReport]:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}") from None
    try:
        return fn(seed, trials)
    except CapacityError as exc:
        rep = VerificationReport(name, {})
        rep.errors.append(str(exc))
        return [rep]
