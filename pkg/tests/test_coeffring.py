from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qmat2.coeffring import QCoeff, q_power, qc_add, qc_from_v_power, qc_mul, qc_specialize, render_q, render_v
from strategies import qcoeffs

v = qc_from_v_power(1)
vi = qc_from_v_power(-1)


def test_from_v_power():
    assert qc_from_v_power(0) == QCoeff(1)
    assert qc_from_v_power(2) == q_power(1)
    assert qc_from_v_power(2).terms == {2: 1}
    assert qc_from_v_power(-1).terms == {-1: 1}


def test_add_examples():
    assert qc_add(v + 1, QCoeff(-1)) == v
    assert qc_add(v, -v) == QCoeff()
    assert qc_add(qc_from_v_power(2) + qc_from_v_power(-2), QCoeff(2)).terms == {2: 1, 0: 2, -2: 1}


def test_mul_examples():
    assert qc_mul(v, vi) == QCoeff(1)
    # (v - 1/v)^2 expanded by hand: v^2 - 2 + v^-2
    assert qc_mul(v - vi, v - vi).terms == {2: 1, 0: -2, -2: 1}
    assert qc_mul(QCoeff(), v + 7) == QCoeff()


def test_zero_is_pruned():
    x = (v + 1) - v
    assert x.terms == {0: 1}
    assert QCoeff({3: 0, 1: 2}).terms == {1: 2}


def test_specialize_examples():
    assert qc_specialize(q_power(1) - q_power(-1), 1) == 0
    assert qc_specialize(qc_from_v_power(2), 2) == 4
    for k in range(-5, 6):
        assert qc_specialize(qc_from_v_power(k), 1) == 1
    assert qc_specialize(v + vi, Fraction(1, 2)) == Fraction(5, 2)


def test_specialize_at_zero():
    with pytest.raises(ZeroDivisionError):
        qc_specialize(v, 0)


def test_rendering():
    assert render_v(v * v - 2 + vi * vi) == "v^2 - 2 + v^-2"
    assert render_v(QCoeff()) == "0"
    assert render_v(-v) == "-v"
    assert render_q(q_power(1) - q_power(-1)) == "q - q^-1"
    assert render_q(vi) == "q^-1/2"
    assert render_q(v, latex=True) == "q^{\\frac{1}{2}}"
    assert render_q(QCoeff({-3: 2}), latex=True) == "2q^{-\\frac{3}{2}}"


def test_json_round_trip():
    x = QCoeff({2: 1, 0: -2, -2: 10**30})
    assert x.to_json() == [[2, "1"], [0, "-2"], [-2, str(10**30)]]
    assert QCoeff.from_json(x.to_json()) == x


@given(qcoeffs, qcoeffs, qcoeffs)
def test_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + 0 == x
    assert x * 1 == x
    assert x - x == QCoeff()


@given(qcoeffs, qcoeffs, st.sampled_from([Fraction(1), Fraction(2), Fraction(1, 2)]))
def test_specialize_is_homomorphism(x, y, t):
    assert qc_specialize(x * y, t) == qc_specialize(x, t) * qc_specialize(y, t)
    assert qc_specialize(x + y, t) == qc_specialize(x, t) + qc_specialize(y, t)


@given(st.integers(-20, 20), st.integers(-20, 20))
def test_v_powers_add(j, k):
    assert qc_from_v_power(j) * qc_from_v_power(k) == qc_from_v_power(j + k)


@given(qcoeffs)
def test_equal_values_hash_equal(x):
    y = QCoeff(dict(x.terms))
    assert x == y and hash(x) == hash(y)
