import pytest

from qmat2.algebra import A, B, C, D, ONE
from qmat2.closedform import (
    adjoint_d_right_as_printed, adjoint_power_closed, entries_alt, entries_closed, power_ch1, power_ch2,
)
from qmat2.coeffring import q_power, qc_from_v_power
from qmat2.qmat import GENERIC, IDENTITY, c_matrix, mat_mul, mat_pow, qadjoint, qdet, tau, tau_prime

q, qi = q_power(1), q_power(-1)


def test_power_formulas_base_cases():
    assert power_ch1(GENERIC, 1) == GENERIC
    assert power_ch2(GENERIC, 1) == GENERIC
    t, tp, d = tau(GENERIC), tau_prime(GENERIC), qdet(GENERIC)
    sq = mat_pow(GENERIC, 2)
    assert power_ch1(GENERIC, 2) == (GENERIC @ c_matrix(-1)) * t - c_matrix(-2) * d == sq
    assert power_ch2(GENERIC, 2) == tp * (c_matrix(1) @ GENERIC) - d * c_matrix(2) == sq


@pytest.mark.parametrize("n", range(1, 9))
def test_power_formulas(n):
    P = mat_pow(GENERIC, n)
    assert power_ch1(GENERIC, n) == P
    assert power_ch2(GENERIC, n) == P


@pytest.mark.parametrize("n", range(1, 6))
def test_power_formulas_identity_matrix(n):
    assert power_ch1(IDENTITY, n) == IDENTITY
    assert power_ch2(IDENTITY, n) == IDENTITY


def test_power_formulas_domain():
    with pytest.raises(ValueError):
        power_ch1(GENERIC, 0)
    with pytest.raises(ValueError):
        power_ch2(GENERIC, 0)


def test_entries_examples():
    for variant in ("left", "right"):
        assert entries_closed(1, variant) == (A, B, C, D)
    a2, b2, _, _ = entries_closed(2, "left")
    assert b2 == A * B + B * D
    assert a2 == A * A + B * C
    assert (B * tau(GENERIC)).scale(qc_from_v_power(1)) == A * B + B * D
    with pytest.raises(ValueError):
        entries_closed(2, "middle")


@pytest.mark.parametrize("n", range(1, 9))
@pytest.mark.parametrize("variant", ["left", "right"])
def test_entries_match_brute_force(n, variant):
    assert entries_closed(n, variant) == mat_pow(GENERIC, n).entries


def test_entries_alt_examples():
    for variant in ("left", "right"):
        assert entries_alt(0, variant) == (ONE, ONE)
        assert entries_alt(1, variant) == (A, D)
    a3, d3 = entries_alt(3, "left")
    P = mat_pow(GENERIC, 3)
    assert (a3, d3) == (P.e11, P.e22)


@pytest.mark.parametrize("n", range(0, 9))
def test_entries_alt_match(n):
    P = mat_pow(GENERIC, n)
    assert entries_alt(n, "left") == entries_alt(n, "right") == (P.e11, P.e22)


def test_adjoint_examples():
    assert adjoint_power_closed(1) == qadjoint(GENERIC)
    H2 = adjoint_power_closed(2)
    assert H2.e12 == (A * B + B * D).scale(-q_power(-2))
    assert H2.e11 == B * C + D * D
    assert H2 == mat_mul(qadjoint(GENERIC), qadjoint(GENERIC))


@pytest.mark.parametrize("m", range(1, 9))
def test_adjoint_powers(m):
    H = mat_pow(qadjoint(GENERIC), m)
    P = mat_pow(GENERIC, m)
    assert adjoint_power_closed(m, "left") == H
    assert adjoint_power_closed(m, "right") == H
    assert H.e11 == P.e22
    assert H.e12 == P.e12.scale(-q_power(-m))
    assert H.e21 == P.e21.scale(-q_power(m))
    assert H.e22 == P.e11


def test_printed_dhat_right_form_only_holds_at_one():
    assert adjoint_d_right_as_printed(1) == A
    for m in range(2, 6):
        assert adjoint_d_right_as_printed(m) != mat_pow(qadjoint(GENERIC), m).e22
