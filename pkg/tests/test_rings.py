from __future__ import annotations

import itertools

import pytest

from lefschetz import rings
from lefschetz.linalg import DimensionError, determinant
from lefschetz.rings import ConstraintError, GroupAction, RingSpec


def mono(s):
    """'x^2yz' style -> exponent triple."""
    out = [0, 0, 0]
    i = 0
    while i < len(s):
        v = "xyz".index(s[i])
        i += 1
        e = 1
        if i < len(s) and s[i] == "^":
            e = int(s[i + 1])
            i += 2
        out[v] += e
    return tuple(out)


def test_graded_basis_examples():
    b = rings.graded_basis((4, 4, 4), 4)
    assert len(b) == 12
    assert b[:6] == [mono(s) for s in ("x^3y", "x^3z", "x^2y^2", "x^2yz", "x^2z^2", "xy^3")]
    assert rings.graded_basis((2, 2, 2), 1) == [mono("x"), mono("y"), mono("z")]
    assert rings.graded_basis((2, 2, 2), 2) == [mono("xy"), mono("xz"), mono("yz")]
    assert rings.graded_basis((2, 2, 2), 4) == []
    assert rings.graded_basis((2, 2, 2), -1) == []


def test_hilbert_examples():
    assert rings.hilbert_function((2, 2, 2)) == [1, 3, 3, 1]
    assert rings.hilbert_function((4, 4, 4)) == [1, 3, 6, 10, 12, 12, 10, 6, 3, 1]
    assert rings.hilbert_function((1, 1, 1)) == [1]


def test_hilbert_symmetric_unimodal():
    for n in (1, 2, 3, 4):
        for caps in itertools.product(range(1, 6), repeat=n):
            h = rings.hilbert_function(caps)
            assert h == h[::-1]
            peak = h.index(max(h))
            assert all(a <= b for a, b in zip(h[:peak], h[1:peak + 1]))
            assert all(a >= b for a, b in zip(h[peak:], h[peak + 1:]))


def test_up_map_examples():
    assert rings.up_map_matrix((2, 2, 2), 1).to_rows() == [[1, 1, 0], [1, 0, 1], [0, 1, 1]]
    assert rings.up_map_matrix((2, 1, 1), 0).to_rows() == [[1]]
    u = rings.up_map_matrix((4, 4, 4), 4)
    assert u.shape == (12, 12)
    assert max(sum(r) for r in u.to_rows()) <= 3
    with pytest.raises(DimensionError):
        rings.up_map_matrix((2, 2, 2), 3)


def test_complement_duality():
    for caps in itertools.product(range(1, 6), repeat=3):
        spec = RingSpec(caps)
        e = spec.top_degree
        for r in range(e):
            u = rings.up_map_matrix(spec, r)
            v = rings.up_map_matrix(spec, e - 1 - r)
            rows, cols = rings.graded_basis(spec, r + 1), rings.graded_basis(spec, r)
            vrow = {m: i for i, m in enumerate(rings.graded_basis(spec, e - r))}
            vcol = {m: i for i, m in enumerate(rings.graded_basis(spec, e - 1 - r))}
            for i, lam in enumerate(rows):
                for j, mu in enumerate(cols):
                    assert u[i, j] == v[vrow[spec.complement(mu)], vcol[spec.complement(lam)]]


def test_row_and_column_weights():
    for caps in [(3, 3, 3), (5, 4, 2), (3, 3, 3, 3)]:
        spec = RingSpec(caps)
        for r in range(spec.top_degree):
            rows = rings.up_map_matrix(spec, r).to_rows()
            assert all(sum(row) <= spec.n for row in rows)
            assert all(sum(col) <= spec.n for col in zip(*rows)) if rows else True


def test_invariant_basis_examples():
    b = rings.invariant_basis((2, 2, 2), 1, GroupAction("cycle3"))
    assert [dict(el.terms) for el in b] == [{mono("x"): 1, mono("y"): 1, mono("z"): 1}]
    b = rings.invariant_basis((2, 2, 2), 2, GroupAction("cycle3"))
    assert [dict(el.terms) for el in b] == [{mono("xy"): 1, mono("yz"): 1, mono("xz"): 1}]
    b = rings.invariant_basis((2, 3, 3), 2, GroupAction("swap_yz", "minus"))
    assert {frozenset(el.terms) for el in b} == {
        frozenset({(mono("y^2"), 1), (mono("z^2"), -1)}),
        frozenset({(mono("xy"), 1), (mono("xz"), -1)}),
    }


def test_restricted_up_map_examples():
    assert rings.restricted_up_map((2, 2, 2), 1, GroupAction("cycle3")).to_rows() == [[2]]
    m = rings.restricted_up_map((2, 3, 3), 2, GroupAction("swap_yz", "minus"))
    # basis order here is (xy - xz, y^2 - z^2); swapping the columns gives [[1, 1], [1, 0]]
    assert m.to_rows() == [[1, 1], [0, 1]]
    assert [row[::-1] for row in m.to_rows()] == [[1, 1], [1, 0]]
    assert abs(determinant(m)) == 1
    m = rings.restricted_up_map((4, 4, 4), 4, GroupAction("cycle3"))
    assert m.shape == (4, 4)
    twos = [(i, j) for i, row in enumerate(m.to_rows()) for j, v in enumerate(row) if v == 2]
    rows = [el.orbit for el in rings.invariant_basis((4, 4, 4), 5, GroupAction("cycle3"))]
    cols = [el.orbit for el in rings.invariant_basis((4, 4, 4), 4, GroupAction("cycle3"))]
    assert [(rows[i], cols[j]) for i, j in twos] == [((2, 2, 1), (2, 1, 1))]
    assert set(v for row in m.to_rows() for v in row) <= {0, 1, 2}


def test_cycle3_has_no_fixed_monomials_in_the_middle():
    for a in (1, 2, 3, 4):
        caps = (2 * a,) * 3
        spec = RingSpec(caps)
        m = spec.middle
        for r in (m, m + 1):
            assert rings.fixed_monomials(spec, r, GroupAction("cycle3")) == []
            assert 3 * len(rings.invariant_basis(spec, r, GroupAction("cycle3"))) == len(rings.graded_basis(spec, r))


def test_swap_dimension_bookkeeping():
    for caps in [(2, 3, 3), (4, 4, 4), (5, 3, 3), (3, 4, 4)]:
        spec = RingSpec(caps)
        for r in range(spec.top_degree + 1):
            plus = len(rings.invariant_basis(spec, r, GroupAction("swap_yz", "plus")))
            minus = len(rings.invariant_basis(spec, r, GroupAction("swap_yz", "minus")))
            fixed = len(rings.fixed_monomials(spec, r, GroupAction("swap_yz")))
            assert plus - fixed == minus
            assert plus + minus == len(rings.graded_basis(spec, r))


def test_action_constraints():
    with pytest.raises(ConstraintError):
        rings.invariant_basis((4, 3, 3), 2, GroupAction("cycle3"))
    with pytest.raises(ConstraintError):
        rings.invariant_basis((4, 4, 3), 2, GroupAction("swap_yz", "minus"))
    with pytest.raises(ConstraintError):
        GroupAction("cycle3", "minus")
