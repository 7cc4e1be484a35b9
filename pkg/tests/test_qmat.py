from hypothesis import given, settings, strategies as st

from qmat2.algebra import A, B, C, D, ONE, ZERO, straighten_word
from qmat2.coeffring import q_power, qc_from_v_power
from qmat2.qmat import (
    GENERIC, IDENTITY, QMatrix2, c_matrix, hat_invariants, mat_mul, mat_pow, qadjoint, qdet, qdet_alt,
    tau, tau_prime,
)
from strategies import elements

q, qi = q_power(1), q_power(-1)
delta = qdet(GENERIC)


def test_identity_product():
    assert mat_mul(IDENTITY, GENERIC) == GENERIC
    assert mat_mul(GENERIC, IDENTITY) == GENERIC


def test_adjoint_product_is_delta():
    target = QMatrix2(delta, 0, 0, delta)
    assert mat_mul(GENERIC, qadjoint(GENERIC)) == target
    assert mat_mul(qadjoint(GENERIC), GENERIC) == target


def test_square_entries_against_word_reducer():
    sq = mat_mul(GENERIC, GENERIC)
    assert sq.e11 == straighten_word("aa") + straighten_word("bc")
    assert sq.e12 == straighten_word("ab") + straighten_word("bd")
    assert sq.e21 == straighten_word("ca") + straighten_word("dc")
    assert sq.e22 == straighten_word("cb") + straighten_word("dd")
    assert sq.e12 == A * B + B * D
    assert sq.e21 == (A * C + C * D).scale(qi)


def test_mat_pow_small():
    assert mat_pow(GENERIC, 0) == IDENTITY
    assert mat_pow(GENERIC, 1) == GENERIC
    sq = mat_pow(GENERIC, 2)
    assert sq.entries == (A * A + B * C, A * B + B * D, (A * C + C * D).scale(qi), B * C + D * D)


def test_power_addition():
    for m in range(7):
        for n in range(7):
            assert mat_pow(GENERIC, m + n) == mat_mul(mat_pow(GENERIC, m), mat_pow(GENERIC, n))


def test_qdet():
    assert delta == A * D - (B * C).scale(q)
    assert qdet_alt(GENERIC) == delta
    assert qdet(IDENTITY) == ONE
    for g in GENERIC.entries:
        assert g * delta == delta * g


def test_qadjoint():
    assert qadjoint(GENERIC).entries == (D, B.scale(-qi), C.scale(-q), A)
    assert qadjoint(IDENTITY) == IDENTITY
    # the map is defined for q-matrices; applied twice it rescales the off-diagonal
    assert qadjoint(qadjoint(GENERIC)) == QMatrix2(A, B.scale(q_power(-2)), C.scale(q_power(2)), D)


def test_c_matrix():
    assert c_matrix(0) == IDENTITY
    half = qc_from_v_power(1)
    assert c_matrix(1) == QMatrix2(ONE.scale(half), ZERO, ZERO, ONE.scale(qc_from_v_power(-1)))
    assert c_matrix(-2) == QMatrix2(ONE.scale(qi), ZERO, ZERO, ONE.scale(q))
    for j in range(-3, 4):
        for k in range(-3, 4):
            assert mat_mul(c_matrix(j), c_matrix(k)) == c_matrix(j + k)


def test_traces():
    assert tau(GENERIC) == A.scale(qc_from_v_power(1)) + D.scale(qc_from_v_power(-1))
    assert tau_prime(GENERIC) == A.scale(qc_from_v_power(-1)) + D.scale(qc_from_v_power(1))
    assert tau(GENERIC).specialize(1) == (A + D).specialize(1)
    assert tau_prime(GENERIC).specialize(1) == (A + D).specialize(1)


def test_hat_invariants():
    th, tph, dh = hat_invariants(GENERIC)
    assert th == tau(GENERIC)
    assert tph == tau_prime(GENERIC)
    assert dh == delta


def test_adjoint_is_inverse_q_matrix():
    a, b, c, d = qadjoint(GENERIC).entries
    assert a * b == (b * a).scale(qi)
    assert a * c == (c * a).scale(qi)
    assert a * d - d * a == (b * c).scale(qi - q)
    assert b * c == c * b
    assert b * d == (d * b).scale(qi)
    assert c * d == (d * c).scale(qi)


@settings(max_examples=25, deadline=None)
@given(st.lists(elements(max_degree=1, max_terms=2), min_size=12, max_size=12))
def test_mat_mul_associative(es):
    X, Y, Z = QMatrix2(*es[:4]), QMatrix2(*es[4:8]), QMatrix2(*es[8:])
    assert mat_mul(mat_mul(X, Y), Z) == mat_mul(X, mat_mul(Y, Z))


def test_json_round_trip():
    M = mat_pow(GENERIC, 3)
    data = M.to_json()
    assert set(data) == {"e11", "e12", "e21", "e22"}
    assert QMatrix2.from_json(data) == M
    assert QMatrix2.from_json(data).to_json() == data
