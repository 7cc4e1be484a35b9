"""Closed forms for powers of the generic quantum matrix.

With tau = q^(1/2) a + q^(-1/2) d, tau' = q^(-1/2) a + q^(1/2) d, delta the
quantum determinant and f_n = f_n(., delta):

    A^n = A C^(1-n) f_{n-1}(tau) - C^(-n) delta f_{n-2}(tau)
        = f_{n-1}(tau') C^(n-1) A - f_{n-2}(tau') delta C^n

All half-integer powers of q are integer powers of v.
"""

from __future__ import annotations

from .algebra import A, B, C, D, AlgebraElement, active_relations
from .chebpoly import f_eval_sequence
from .coeffring import qc_from_v_power as vp
from .qmat import GENERIC, QMatrix2, c_matrix, qadjoint, qdet, tau, tau_prime

LEFT = "left"
RIGHT = "right"


def _check_variant(variant: str) -> None:
    if variant not in (LEFT, RIGHT):
        raise ValueError(f"variant must be 'left' or 'right', got {variant!r}")


def _f_values(M: QMatrix2, n: int, primed: bool):
    """f_{-1}..f_n evaluated at (tau or tau', delta) of M."""
    t = tau_prime(M) if primed else tau(M)
    return f_eval_sequence(n, t, qdet(M))


def _generic_f(n: int, primed: bool):
    return active_relations().memo(("f", n, primed), lambda: tuple(_f_values(GENERIC, n, primed)))


def _f(M: QMatrix2, primed: bool, upto: int):
    if M is GENERIC:
        return _generic_f(upto, primed)
    return _f_values(M, upto, primed)


def power_ch1(M: QMatrix2 = GENERIC, n: int = 1) -> QMatrix2:
    """A C^(1-n) f_{n-1}(tau) - C^(-n) delta f_{n-2}(tau)."""
    if n < 1:
        raise ValueError("power_ch1 is stated for n >= 1")
    f = _f(M, False, n - 1)
    f_nm1, f_nm2 = f[n], f[n - 1]
    delta = qdet(M)
    return (M @ c_matrix(1 - n)) * f_nm1 - c_matrix(-n) * delta * f_nm2


def power_ch2(M: QMatrix2 = GENERIC, n: int = 1) -> QMatrix2:
    """f_{n-1}(tau') C^(n-1) A - f_{n-2}(tau') delta C^n."""
    if n < 1:
        raise ValueError("power_ch2 is stated for n >= 1")
    f = _f(M, True, n - 1)
    f_nm1, f_nm2 = f[n], f[n - 1]
    delta = qdet(M)
    return f_nm1 * (c_matrix(n - 1) @ M) - (f_nm2 * delta) * c_matrix(n)


def entries_closed(n: int, variant: str = LEFT) -> tuple[AlgebraElement, ...]:
    """(a_n, b_n, c_n, d_n) of the generic matrix from the entry formulas.

    ``left`` puts generators to the left of f_{n-1}(tau); ``right`` puts
    f_{n-1}(tau') to the left of the generators.
    """
    _check_variant(variant)
    if n < 1:
        raise ValueError("entry formulas are stated for n >= 1")
    delta = qdet(GENERIC)
    if variant == LEFT:
        f = _generic_f(n - 1, False)
        f1, f2 = f[n], f[n - 1]
        return (
            (A * f1).scale(vp(1 - n)) - (delta * f2).scale(vp(-n)),
            (B * f1).scale(vp(n - 1)),
            (C * f1).scale(vp(1 - n)),
            (D * f1).scale(vp(n - 1)) - (delta * f2).scale(vp(n)),
        )
    f = _generic_f(n - 1, True)
    f1, f2 = f[n], f[n - 1]
    return (
        (f1 * A).scale(vp(n - 1)) - (delta * f2).scale(vp(n)),
        (f1 * B).scale(vp(n - 1)),
        (f1 * C).scale(vp(1 - n)),
        (f1 * D).scale(vp(1 - n)) - (delta * f2).scale(vp(-n)),
    )


def entries_alt(n: int, variant: str = LEFT) -> tuple[AlgebraElement, AlgebraElement]:
    """(a_n, d_n) written with f_n and f_{n-1} only; valid from n = 0."""
    _check_variant(variant)
    if n < 0:
        raise ValueError("entries_alt needs n >= 0")
    if variant == LEFT:
        f = _generic_f(n, False)
        fn, fn1 = f[n + 1], f[n]
        return (
            fn.scale(vp(-n)) - (D * fn1).scale(vp(-n - 1)),
            fn.scale(vp(n)) - (A * fn1).scale(vp(n + 1)),
        )
    f = _generic_f(n, True)
    fn, fn1 = f[n + 1], f[n]
    return (
        fn.scale(vp(n)) - (fn1 * D).scale(vp(n + 1)),
        fn.scale(vp(-n)) - (fn1 * A).scale(vp(-n - 1)),
    )


def adjoint_power_closed(m: int, variant: str = LEFT) -> QMatrix2:
    """Entries of (adjoint A)^m from the hat-generator formulas.

    The adjoint is a q^-1 quantum matrix with the same tau, tau' and delta,
    so the entry formulas apply with q replaced by 1/q.
    """
    _check_variant(variant)
    if m < 1:
        raise ValueError("adjoint power formulas are stated for m >= 1")
    H = qadjoint(GENERIC)
    delta = qdet(GENERIC)
    primed = variant == RIGHT
    f = _generic_f(m - 1, primed)
    f1, f2 = f[m], f[m - 1]
    if variant == LEFT:
        return QMatrix2(
            (H.e11 * f1).scale(vp(m - 1)) - (delta * f2).scale(vp(m)),
            (H.e12 * f1).scale(vp(1 - m)),
            (H.e21 * f1).scale(vp(m - 1)),
            (H.e22 * f1).scale(vp(1 - m)) - (delta * f2).scale(vp(-m)),
        )
    return QMatrix2(
        (f1 * H.e11).scale(vp(1 - m)) - (delta * f2).scale(vp(-m)),
        (f1 * H.e12).scale(vp(1 - m)),
        (f1 * H.e21).scale(vp(m - 1)),
        # +(m-1)/2 and +m/2 here: this entry equals a_m in its tau' form
        (f1 * H.e22).scale(vp(m - 1)) - (delta * f2).scale(vp(m)),
    )


def adjoint_d_right_as_printed(m: int) -> AlgebraElement:
    """The d-hat right form with exponents -(m-1)/2 and -m/2.

    Kept only so the discrepancy with the true entry can be demonstrated; it
    disagrees with (adjoint A)^m from m = 2 on.
    """
    if m < 1:
        raise ValueError("m >= 1 required")
    H = qadjoint(GENERIC)
    f = _generic_f(m - 1, True)
    return (f[m] * H.e22).scale(vp(1 - m)) - (qdet(GENERIC) * f[m - 1]).scale(vp(-m))
