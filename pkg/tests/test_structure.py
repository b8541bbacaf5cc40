import pytest

from qtriangular.structure import (
    CheckReport,
    SUITES,
    _m_bb,
    _m_diag,
    _m_offdiag,
    check_antipode,
    check_bialgebra,
    check_point_product,
    negative_controls,
    negative_controls_report,
)


@pytest.mark.parametrize("name", sorted(SUITES))
@pytest.mark.parametrize("n", [2, 3])
def test_suites_pass(name, n):
    rep = SUITES[name](n)
    assert rep.passed, rep.line()
    assert rep.witness is None
    assert rep.n == n


def test_report_invariant():
    with pytest.raises(ValueError):
        CheckReport("x", 2, True, ("label", "l", "r"))
    with pytest.raises(ValueError):
        CheckReport("x", 2, False, None)
    rep = CheckReport("x", 2, False, ("label", "l", "r"))
    assert "FAIL" in rep.line() and "label" in rep.line()


def test_m_tables_spot_values():
    assert _m_diag(2, 1, 3) == 2
    assert _m_diag(1, 1, 2) == 1
    assert _m_diag(4, 2, 3) == 0
    assert _m_offdiag(1, 2, 1, 2) == 2
    assert _m_offdiag(1, 2, 2, 3) == 1  # l = i
    assert _m_offdiag(3, 4, 1, 2) == 0  # k > j
    assert _m_bb(2, 3, 1, 4) == 2  # i<k<l<j
    assert _m_bb(1, 2, 1, 3) == 1  # k=i<l<j
    assert _m_bb(1, 3, 1, 2) == -1  # i=k<j<l
    assert _m_bb(1, 4, 2, 3) == -2  # k<i<j<l
    assert _m_bb(1, 2, 1, 2) == 0


def test_mutated_coproduct_fails():
    rep = check_bialgebra(2, _mutate_a12_grouplike=True)
    assert not rep.passed
    assert rep.witness is not None
    label, lhs, rhs = rep.witness
    assert lhs != rhs


def test_mutated_antipode_fails_at_offdiagonal():
    rep = check_antipode(2, _flip_b12_sign=True)
    assert not rep.passed
    assert "b[1,k]a[k,2]" in rep.witness[0]
    assert rep.witness[1] != "0"


def test_mutated_point_product_fails():
    rep = check_point_product(2, _mutate_swap_images=True)
    assert not rep.passed
    assert rep.witness is not None


def test_negative_controls_all_fail():
    reports = negative_controls(2)
    assert len(reports) == 3
    for rep in reports:
        assert not rep.passed
        assert rep.witness
    assert negative_controls_report(2).passed


def test_suites_are_deterministic():
    a = check_bialgebra(3)
    b = check_bialgebra(3)
    assert a == b
