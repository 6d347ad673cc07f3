from __future__ import annotations

import pytest

from lefschetz import snf_theorems as st
from lefschetz.linalg import snf
from lefschetz.snf_theorems import BivariateTerm, PreconditionError


def test_build_mr_examples():
    assert st.build_mr(4, 4, 4, 4).to_rows() == [[6, 4], [4, 6]]
    assert st.build_mr(4, 4, 4, 3).to_rows() == [[4], [6], [4]]
    assert st.carlitz_matrix(1, 1, 1).to_rows() == [[2]]
    with pytest.raises(PreconditionError):
        st.build_mr(3, 4, 4, 3)
    with pytest.raises(PreconditionError):
        st.build_mr(4, 4, 4, 5)


def test_carlitz_shape_identity():
    for a in range(1, 5):
        for b in range(1, 5):
            for c in range(1, 5):
                want = [[st.binom(a + b, b + i - j) for j in range(c)] for i in range(c)]
                assert st.carlitz_matrix(a, b, c).to_rows() == want


def test_multinomial_examples():
    three = st.build_multinomial_mr((4, 4, 4), 4)
    assert sorted(map(sorted, three.to_rows())) == sorted(map(sorted, st.build_mr(4, 4, 4, 4).to_rows()))
    assert snf(three).entries == (2, 10)
    assert st.build_multinomial_mr((2, 2), 1).shape == (0, 1)


def test_carlitz_closed_form_examples():
    assert st.carlitz_closed_forms(3, 2, 1) == (10,)
    assert st.carlitz_closed_forms(2, 2, 2) == (2, 10)
    assert st.carlitz_closed_forms(3, 2, 2) == (5, 10)
    assert st.carlitz_closed_forms(3, 3, 3) is None


def test_symbolic_reduction_examples():
    assert st.symbolic_reduction(2, 2, 2, 1) == [[BivariateTerm(-2, 1, 1)]]
    block = st.symbolic_reduction(4, 4, 4, 3)
    assert block == [[BivariateTerm(-4, 3, 1)], [BivariateTerm(-6, 2, 2)], [BivariateTerm(-4, 1, 3)]]
    at_one = [[t.at_one() for t in row] for row in st.symbolic_reduction(4, 4, 4, 4)]
    assert at_one == [[-6, -4], [-4, -6]]


def test_symbolic_reduction_grid():
    for A in range(2, 6):
        for B in range(2, A + 1):
            for C in range(2, B + 1):
                top = (A + B + C - 4) // 2
                for r in range(A - 1, top + 1):
                    got = st.symbolic_reduction(A, B, C, r)
                    assert got == st.expected_terminal_block(A, B, C, r)
                    sign = -1 if (A - 1) % 2 else 1
                    assert [[sign * t.coefficient for t in row] for row in got] == st.build_mr(A, B, C, r).to_rows()


def test_verify_examples_for_444():
    r1 = st.verify_snf_theorem("i", (4, 4, 4))
    assert r1.passed
    assert [c["actual"] for c in r1.cases] == [[1], [1, 1, 1], [1] * 6]
    r2 = st.verify_snf_theorem("ii", (4, 4, 4))
    assert r2.passed
    assert [c["actual"] for c in r2.cases if "check" not in c] == [[2], [2, 10]]
    r3 = st.verify_snf_theorem("iii", (4, 4, 4))
    assert r3.passed
    assert r3.cases[1]["actual"] == [2]


def test_carlitz_transform():
    for a in range(1, 7):
        p, q = st.carlitz_transform(a)
        d = (p @ st.carlitz_matrix(a, a, 2) @ q).to_rows()
        assert d == [[st.catalan(a), 0], [0, st.binom(2 * a + 1, a + 1)]]


def test_n4_containment():
    for r in (3, 4):
        assert st.nonunit_containment((4, 4, 4, 4), r)[0]


def test_reports_serialise_big_ints_as_strings():
    rep = st.verify_snf_theorem("ii", (4, 4, 4))
    js = rep.to_json()
    assert js["cases"][2]["actual"] == ["2", "10"]
    assert js["passed"] is True
