from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qtriangular.coeff import GaussianRational, I, ONE, Q, ScalarQ, ZERO, qpow

fracs = st.fractions(min_value=-4, max_value=4, max_denominator=6)
gaussians = st.builds(GaussianRational, fracs, fracs)
scalars = st.builds(ScalarQ, st.dictionaries(st.integers(-4, 4), gaussians, max_size=4))


def test_add_examples():
    assert Q + (-Q) == ZERO
    assert (ONE + Q) + qpow(-1) == ScalarQ({-1: 1, 0: 1, 1: 1})
    assert ScalarQ.constant(GaussianRational(2, 3)) + ScalarQ.constant(GaussianRational(-2, -3)) == ZERO


def test_mul_examples():
    assert Q * qpow(-1) == ONE
    assert (ONE - Q) * (ONE + Q) == ONE - Q * Q
    assert ScalarQ.constant(I) * ScalarQ.constant(I) == ScalarQ.constant(-1)


def test_conj_examples():
    assert qpow(1, I).conjugate() == qpow(1, -I)
    assert (Q * Q).conjugate() == Q * Q
    mixed = ScalarQ({0: GaussianRational(1, 1), 1: GaussianRational(1, -1)})
    assert mixed.conjugate() == ScalarQ({0: GaussianRational(1, -1), 1: GaussianRational(1, 1)})


def test_eval_examples():
    assert (Q * Q - ONE).eval_at(2) == GaussianRational(3)
    assert qpow(-1).eval_at(Fraction(1, 2)) == GaussianRational(2)
    assert ZERO.eval_at(7) == GaussianRational(0)
    with pytest.raises(ValueError):
        Q.eval_at(0)


def test_canonical_form():
    assert ScalarQ({2: 0, 1: 1}) == Q
    assert not ScalarQ({0: Fraction(1, 2) - Fraction(1, 2)})
    assert ScalarQ({1: 1, 0: 2}).terms == {1: GaussianRational(1), 0: GaussianRational(2)}


def test_units_and_inverse():
    s = qpow(-3, GaussianRational(2, 1))
    assert s.is_unit
    assert s * s.inverse() == ONE
    assert not (ONE + Q).is_unit
    with pytest.raises(ValueError):
        (ONE + Q).inverse()
    assert Q**-2 == qpow(-2)


def test_gaussian_arithmetic():
    x = GaussianRational(Fraction(1, 2), Fraction(-1, 3))
    assert x * x.inverse() == GaussianRational(1)
    assert (x / x) == GaussianRational(1)
    assert x**-2 == (x * x).inverse()
    with pytest.raises(ZeroDivisionError):
        GaussianRational(0).inverse()


def test_divexact():
    a = (ONE + Q) * (ONE - Q) * qpow(-2, Fraction(3, 4))
    assert a.divexact(ONE + Q) == (ONE - Q) * qpow(-2, Fraction(3, 4))
    assert a.divexact(qpow(-2, Fraction(3, 4))) == (ONE + Q) * (ONE - Q)
    assert ZERO.divexact(ONE + Q) == ZERO
    with pytest.raises(ValueError):
        (ONE + Q).divexact(ONE + Q * Q)
    with pytest.raises(ZeroDivisionError):
        ONE.divexact(ZERO)


def test_json_roundtrip():
    s = ScalarQ({-2: GaussianRational(Fraction(1, 3), 2), 5: GaussianRational(-1)})
    assert ScalarQ.from_json(s.to_json()) == s


@given(scalars, scalars, scalars)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@given(scalars, scalars)
def test_conjugation_is_ring_involution(a, b):
    assert a.conjugate().conjugate() == a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()


@given(scalars, scalars)
def test_eval_is_ring_homomorphism(a, b):
    q0 = GaussianRational(Fraction(3, 2))
    assert (a * b).eval_at(q0) == a.eval_at(q0) * b.eval_at(q0)
    assert (a + b).eval_at(q0) == a.eval_at(q0) + b.eval_at(q0)


@given(scalars, scalars)
def test_divexact_inverts_multiplication(a, b):
    if b:
        assert (a * b).divexact(b) == a
