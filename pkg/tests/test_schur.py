from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lefschetz import schur
from lefschetz.schur import HPolynomial, SkewShape
from lefschetz.linalg import snf


def h(*idx):
    return HPolynomial({tuple(idx): 1})


def test_jacobi_trudi_examples():
    assert schur.jacobi_trudi(SkewShape((2, 1), (1,)), 3) == h(1, 1)
    for k in range(1, 6):
        assert schur.jacobi_trudi((k,)) == h(k)
    assert schur.jacobi_trudi(SkewShape((5, 3), (1,)), 7) == schur.jacobi_trudi((5, 2)) + schur.jacobi_trudi((4, 3))
    with pytest.raises(ValueError):
        schur.jacobi_trudi((5, 3), 4)


def test_lr_examples():
    assert schur.lr_expand(SkewShape((5, 3), (1,))) == {(5, 2): 1, (4, 3): 1}
    assert schur.lr_expand((4, 2, 1)) == {(4, 2, 1): 1}
    assert schur.lr_expand(SkewShape((2, 1), (1,))) == {(2,): 1, (1, 1): 1}
    # a shape with a multiplicity: s_{21} * s_{21} contains s_{321} twice
    assert schur.lr_expand(SkewShape((4, 3, 2, 1), (2, 2)))[(3, 2, 1)] == 2


def test_legality_examples():
    assert schur.is_legal(SkewShape((6, 3), (1,)), 2, 3, 7)
    assert schur.is_legal(SkewShape((6, 2)), 2, 2, 7)
    assert not schur.is_legal(SkewShape((7, 2)), 2, 2, 7)
    with pytest.raises(ValueError):
        schur.is_legal(SkewShape((6, 2)), 3, 3, 7)


def test_five_conditions_alone_are_not_enough():
    # (3,2)/(1) passes the usual five inequalities but its determinant h2^2 - h4
    # has an h0 corner, which no minor of A_3 can produce.
    shape = SkewShape((3, 2), (1,))
    conds = schur.legality_conditions(shape, 2, 3, 6)
    assert all(v for k, v in conds.items() if k != "corner")
    assert not conds["corner"]
    assert schur.jacobi_trudi(shape) == h(2, 2) - h(4)
    minors = {
        schur.minor_shape_correspondence(6, 3, rows, cols)
        for rows in [(p, q) for p in range(1, 5) for q in range(p + 1, 5)]
        for cols in [(1, 2), (1, 3), (2, 3)]
    }
    assert shape not in minors


def test_minor_correspondence_examples():
    assert schur.minor_shape_correspondence(7, 3, [1, 5], [1, 3]) == SkewShape((6, 3), (1,))
    assert schur.minor_polynomial(7, 3, [1, 5], [1, 3]) == schur.hdet([[5, 7], [1, 3]])
    assert schur.minor_shape_correspondence(7, 1, [4], [1]) == SkewShape((4,))
    # |h6 h7; h1 h2| sits in A_2 and corresponds to the non-skew (6, 2)
    assert schur.minor_shape_correspondence(7, 2, [1, 6], [1, 2]) == SkewShape((6, 2))
    lhs = schur.hdet([[6, 7], [1, 2]])
    assert lhs == schur.hdet([[5, 7], [1, 3]]) - schur.hdet([[5, 6], [2, 3]])
    assert lhs == schur.jacobi_trudi((6, 2))


def test_witness_round_trip():
    for n in range(2, 8):
        for c in range(1, n + 1):
            for k in range(1, min(c, n - c + 1) + 1):
                for lam in schur.legal_nonskew(k, n):
                    s = SkewShape(lam)
                    if schur.is_legal(s, k, c, n):
                        rows, cols = schur.minor_for_shape(s, c, n)
                        assert schur.minor_shape_correspondence(n, c, rows, cols) == s
                        assert schur.minor_polynomial(n, c, rows, cols) == schur.jacobi_trudi(s)


def test_spread_examples():
    assert schur.spread_of((11, 9, 8, 7, 5)).deltas == (6, 4, 3, 2)
    assert schur.spread_of((3, 3, 3)).deltas == (0, 0)
    assert schur.spread_of((5, 2), 2).deltas == (3,)
    assert schur.spread_of((4, 3)) < schur.spread_of((5, 2))
    assert schur.spread_of((5, 1, 1)) < schur.spread_of((5, 2, 1))
    with pytest.raises(ValueError):
        schur.spread_of((5, 2), 3)


def test_cut_and_rotate_figure_shape():
    s = schur.cut_and_rotate((11, 9, 8, 7, 5), 2)
    assert s == SkewShape((11, 11, 11, 11, 9), (4, 4, 3, 2, 0))
    exp = schur.lr_expand(s)
    assert exp[(11, 9, 8, 7, 5)] == 1
    top = schur.spread_of((11, 9, 8, 7, 5))
    assert all(schur.spread_of(p) < top for p in exp if p != (11, 9, 8, 7, 5))


def test_inverse_lr_examples():
    assert schur.inverse_lr_step((5, 2), 2, 3, 6) == SkewShape((5, 3), (1,))
    assert schur.inverse_lr_decompose((5, 2), 2, 3, 6) == {SkewShape((5, 3), (1,)): 1, SkewShape((4, 3)): -1}
    s = schur.inverse_lr_step((6, 2), 2, 3, 7)
    assert schur.is_legal(s, 2, 3, 7)
    assert schur.lr_expand(s)[(6, 2)] == 1
    assert schur.inverse_lr_decompose((4, 3), 2, 3, 6) == {SkewShape((4, 3)): 1}
    with pytest.raises(ValueError):
        schur.inverse_lr_step((4, 3), 2, 3, 6)


def test_inverse_lr_n8_c4_random_points():
    rng = random.Random(8)
    for nu in schur.legal_nonskew(2, 8):
        combo = schur.inverse_lr_decompose(nu, 2, 4, 8)
        for _ in range(5):
            vals = [rng.randint(-10, 10) for _ in range(8)]
            assert schur.combination_value(combo, vals) == schur.jacobi_trudi_value(nu, vals)


def test_toeplitz_examples():
    rep = schur.verify_toeplitz_lemma([1, 2, 3, 4])
    assert rep.passed
    assert schur.toeplitz_block([1, 2, 3, 4], 1) == [[4], [3], [2], [1]]
    assert snf(schur.toeplitz_block([1, 2, 3, 4], 1)).entries == (1,)
    assert snf(schur.toeplitz_block([1, 2, 3, 4], 2)).entries == (1, 1)


@settings(max_examples=60, deadline=None, derandomize=True)
@given(st.lists(st.integers(-20, 20), min_size=2, max_size=9))
def test_toeplitz_lemma_property(hs):
    assert schur.verify_toeplitz_lemma(hs).passed


@settings(max_examples=80, deadline=None, derandomize=True)
@given(st.lists(st.integers(0, 5), min_size=1, max_size=3), st.lists(st.integers(0, 3), max_size=3), st.data())
def test_lr_matches_jacobi_trudi_numerically(outer, inner, data):
    lam = tuple(sorted(outer, reverse=True))
    mu = tuple(sorted(inner, reverse=True))[: len(lam)]
    mu = tuple(min(m, l) for m, l in zip(mu, lam))
    mu = tuple(sorted(mu, reverse=True))
    if any(m > l for m, l in zip(mu, lam)) or not any(lam):
        return
    s = SkewShape(lam, mu)
    vals = data.draw(st.lists(st.integers(-6, 6), min_size=20, max_size=20))
    total = sum(m * schur.jacobi_trudi_value(p, vals) for p, m in schur.lr_expand(s).items())
    assert total == schur.jacobi_trudi_value(s, vals)


def test_serialisation_round_trip():
    s = SkewShape((5, 3), (1,))
    assert SkewShape.from_json(s.to_json()) == s
    p = schur.jacobi_trudi(s)
    assert HPolynomial.from_json(p.to_json()) == p
    assert p.to_json()[0]["coeff"] in {"1", "-1"}
