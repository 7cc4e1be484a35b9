"""Mechanical checks of the power formulas and the relations they imply.

Each ``check_*`` function returns a :class:`CheckReport`.  A failing report
carries a witness: the first monomial (graded-lex order) at which the two
sides of the offending relation differ, with the coefficient difference.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import closedform
from .algebra import GENERATORS, AlgebraElement, Relations, active_relations, gen, using_relations
from .chebpoly import NonCommutingError, f_eval, f_eval_sequence, f_rec, f_sum
from .coeffring import q_power, qc_from_v_power as vp
from .qmat import (
    GENERIC,
    IDENTITY,
    QMatrix2,
    c_matrix,
    hat_invariants,
    mat_mul,
    qadjoint,
    qdet,
    qdet_alt,
    tau,
    tau_prime,
)


@dataclass(frozen=True)
class Witness:
    relation: str
    monomial: tuple[int, int, int, int] | None
    difference: str

    def __str__(self):
        where = f" at {list(self.monomial)}" if self.monomial is not None else ""
        return f"{self.relation}{where}: lhs - rhs = {self.difference}"

    def to_json(self) -> dict:
        return {
            "relation": self.relation,
            "monomial": list(self.monomial) if self.monomial is not None else None,
            "difference": self.difference,
        }


@dataclass(frozen=True)
class CheckReport:
    name: str
    params: tuple[int, ...]
    passed: bool
    witness: Witness | None = None
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.passed != (self.witness is None):
            raise ValueError("a report passes exactly when it has no witness")

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        params = ",".join(str(p) for p in self.params)
        out = f"{status} {self.name}({params})"
        if self.witness is not None:
            out += f" [{self.witness}]"
        return out

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "params": list(self.params),
            "passed": self.passed,
            "witness": self.witness.to_json() if self.witness else None,
            "notes": list(self.notes),
        }


def difference_witness(label: str, lhs, rhs) -> Witness | None:
    """None if ``lhs == rhs``, otherwise the leading differing monomial."""
    diff = AlgebraElement.coerce(lhs) - AlgebraElement.coerce(rhs)
    if diff.is_zero():
        return None
    m, c = diff.items()[0]
    return Witness(label, tuple(m), str(c))


def _run(name: str, params: Sequence[int], pairs: Iterable, notes: Sequence[str] = ()) -> CheckReport:
    """Evaluate (label, lhs, rhs) triples lazily, stopping at the first mismatch."""
    try:
        for label, lhs, rhs in pairs:
            w = difference_witness(label, lhs, rhs)
            if w is not None:
                return CheckReport(name, tuple(params), False, w, tuple(notes))
    except NonCommutingError as exc:
        w = difference_witness("f_n arguments commute", exc.xy, exc.yx)
        return CheckReport(name, tuple(params), False, w, tuple(notes))
    return CheckReport(name, tuple(params), True, None, tuple(notes))


def _matrix_pairs(label: str, X: QMatrix2, Y: QMatrix2):
    for pos, x, y in zip(("11", "12", "21", "22"), X.entries, Y.entries):
        yield f"{label}[{pos}]", x, y


def power(n: int) -> QMatrix2:
    """Brute-force A^n of the generic matrix, cached per rule set."""
    rel = active_relations()

    def compute():
        return GENERIC if n == 1 else mat_mul(GENERIC, power(n - 1)) if n > 0 else IDENTITY

    return rel.memo(("A^n", n), compute)


def adjoint_power(m: int) -> QMatrix2:
    rel = active_relations()
    H = qadjoint(GENERIC)

    def compute():
        return IDENTITY if m == 0 else mat_mul(H, adjoint_power(m - 1))

    return rel.memo(("Ahat^m", m), compute)


def _delta() -> AlgebraElement:
    return qdet(GENERIC)


def _delta_pow(k: int) -> AlgebraElement:
    return active_relations().memo(("delta^k", k), lambda: _delta() ** k)


# ---------------------------------------------------------------------------
# defining relations


def rq_pairs(M: QMatrix2, p: int):
    """The six relations of R_{q^p} as (label, lhs, rhs) triples."""
    x11, x12, x21, x22 = M.entries
    qp = q_power(p)
    yield "ab=q^p ba", x11 * x12, (x12 * x11).scale(qp)
    yield "ac=q^p ca", x11 * x21, (x21 * x11).scale(qp)
    yield "ad-da=(q^p-q^-p)bc", x11 * x22 - x22 * x11, (x12 * x21).scale(qp - q_power(-p))
    yield "bc=cb", x12 * x21, x21 * x12
    yield "bd=q^p db", x12 * x22, (x22 * x12).scale(qp)
    yield "cd=q^p dc", x21 * x22, (x22 * x21).scale(qp)


def check_rq(M: QMatrix2, p: int, name: str = "rq", params: Sequence[int] | None = None) -> CheckReport:
    """Do the entries of M satisfy the q^p quantum-matrix relations?"""
    return _run(name, params if params is not None else (p,), rq_pairs(M, p))


def check_central_delta(x: AlgebraElement | None = None) -> CheckReport:
    """Does ``x`` (default: delta) commute with a, b, c, d?

    For the default, the two expressions of delta are also compared.
    """
    def pairs():
        if x is None:
            yield "ad-q bc = da-q^-1 bc", qdet(GENERIC), qdet_alt(GENERIC)
        el = _delta() if x is None else x
        for g in GENERATORS:
            yield f"x{g}={g}x", el * gen(g), gen(g) * el

    return _run("central_delta" if x is None else "central", (), pairs())


def check_a_hat_a(M: QMatrix2 = GENERIC) -> CheckReport:
    """A Ahat = Ahat A = delta E."""
    H = qadjoint(M)
    d = qdet(M)
    target = QMatrix2(d, 0, 0, d)

    def pairs():
        yield from _matrix_pairs("A Ahat", mat_mul(M, H), target)
        yield from _matrix_pairs("Ahat A", mat_mul(H, M), target)

    return _run("a_hat_a", (), pairs())


def check_qch(M: QMatrix2 = GENERIC) -> CheckReport:
    """A^2 = A C^-1 tau - C^-2 delta = tau' C A - delta C^2."""
    t, tp, d = tau(M), tau_prime(M), qdet(M)
    sq = mat_mul(M, M)

    def pairs():
        yield from _matrix_pairs("A^2=AC^-1 tau-C^-2 delta", sq, (M @ c_matrix(-1)) * t - c_matrix(-2) * d)
        yield from _matrix_pairs("A^2=tau' CA-delta C^2", sq, tp * (c_matrix(1) @ M) - d * c_matrix(2))

    return _run("qch", (), pairs())


def check_hat_invariants() -> CheckReport:
    """tau-hat = tau, tau'-hat = tau', delta-hat = delta, and Ahat obeys R_{1/q}."""
    th, tph, dh = hat_invariants(GENERIC)

    def pairs():
        yield "tau_hat=tau", th, tau(GENERIC)
        yield "tau'_hat=tau'", tph, tau_prime(GENERIC)
        yield "delta_hat=delta", dh, _delta()
        yield from rq_pairs(qadjoint(GENERIC), -1)

    return _run("hat_invariants", (), pairs())


# ---------------------------------------------------------------------------
# powers


def check_power_formulas(n: int) -> CheckReport:
    P = power(n)

    def pairs():
        yield from _matrix_pairs("ch1", closedform.power_ch1(GENERIC, n), P)
        yield from _matrix_pairs("ch2", closedform.power_ch2(GENERIC, n), P)

    return _run("power_formulas", (n,), pairs())


def check_entry_formulas(n: int) -> CheckReport:
    P = power(n)

    def pairs():
        for variant in (closedform.LEFT, closedform.RIGHT):
            for sym, x, y in zip("abcd", closedform.entries_closed(n, variant), P.entries):
                yield f"{sym}_n[{variant}]", x, y

    return _run("entry_formulas", (n,), pairs())


def check_entries_alt(n: int) -> CheckReport:
    P = power(n)

    def pairs():
        for variant in (closedform.LEFT, closedform.RIGHT):
            a_n, d_n = closedform.entries_alt(n, variant)
            yield f"a_n alt[{variant}]", a_n, P.e11
            yield f"d_n alt[{variant}]", d_n, P.e22

    return _run("entries_alt", (n,), pairs())


def check_adjoint_powers(m: int) -> CheckReport:
    """Closed forms for (Ahat)^m plus the cross-identities with A^m.

    At m = 0 only the cross-identities apply (the closed forms need m >= 1).
    """
    H = adjoint_power(m)
    P = power(m)

    def pairs():
        if m >= 1:
            for variant in (closedform.LEFT, closedform.RIGHT):
                yield from _matrix_pairs(f"Ahat^m[{variant}]", closedform.adjoint_power_closed(m, variant), H)
        yield "ahat_m=d_m", H.e11, P.e22
        yield "bhat_m=-q^-m b_m", H.e12, P.e12.scale(-q_power(-m))
        yield "chat_m=-q^m c_m", H.e21, P.e21.scale(-q_power(m))
        yield "dhat_m=a_m", H.e22, P.e11

    notes = ()
    if m >= 1:
        notes = ("dhat_m right form uses q^{(m-1)/2}, q^{m/2}; the printed negative exponents do not hold",)
    return _run("adjoint_powers", (m,), pairs(), notes)


def check_power_rq(n: int) -> CheckReport:
    """A^n is a q^n quantum matrix."""
    return check_rq(power(n), n, name="power_rq", params=(n,))


def check_qdet_power(n: int) -> CheckReport:
    """a_n d_n - q^n b_n c_n = d_n a_n - q^-n b_n c_n = delta^n."""
    P = power(n)
    target = _delta_pow(n)

    def pairs():
        yield "a_n d_n - q^n b_n c_n = delta^n", P.e11 * P.e22 - (P.e12 * P.e21).scale(q_power(n)), target
        yield "d_n a_n - q^-n b_n c_n = delta^n", P.e22 * P.e11 - (P.e12 * P.e21).scale(q_power(-n)), target

    return _run("qdet_power", (n,), pairs())


# ---------------------------------------------------------------------------
# mixed powers


def vzw_pairs(m: int, n: int, rel3_as_printed: bool = False):
    """Both stated forms of the five mixed-power relations against their case branch."""
    a_n, b_n, c_n, d_n = power(n).entries
    a_m, b_m, c_m, d_m = power(m).entries
    qm, qmi = q_power(m), q_power(-m)
    if m < n:
        lo = power(n - m).entries
        dm = _delta_pow(m)
        rhs = [dm * lo[0], dm * lo[1], dm * lo[2], dm * lo[3]]
        branch = "m<n"
    else:
        hi = power(m - n).entries
        dn = _delta_pow(n)
        rel3_exp = (n - m) if rel3_as_printed else (m - n)
        rhs = [
            dn * hi[3],
            (dn * hi[1]).scale(-q_power(n - m)),
            (dn * hi[2]).scale(-q_power(rel3_exp)),
            dn * hi[0],
        ]
        branch = "m>=n"
    forms = [
        ("rel1", d_m * a_n - (b_m * c_n).scale(qmi), a_n * d_m - (b_n * c_m).scale(qm)),
        ("rel2", d_m * b_n - (b_m * d_n).scale(qmi), -(a_n * b_m).scale(qmi) + b_n * a_m),
        ("rel3", -(c_m * a_n).scale(qm) + a_m * c_n, c_n * d_m - (d_n * c_m).scale(qm)),
        ("rel4", -(c_m * b_n).scale(qm) + a_m * d_n, -(c_n * b_m).scale(qmi) + d_n * a_m),
    ]
    for (label, first, second), target in zip(forms, rhs):
        yield f"{label}.1 [{branch}]", first, target
        yield f"{label}.2 [{branch}]", second, target
    yield "rel5", b_n * c_m - (c_n * b_m).scale(q_power(n - m)), 0


def check_vzw(m: int, n: int) -> CheckReport:
    if m < 0 or n < 0:
        raise ValueError("m and n must be non-negative")
    notes = [f"branch {'m<n' if m < n else 'm>=n'}"]
    if m > n:
        notes.append("rel3 m>=n branch uses -q^{m-n}, as read off Ahat^{m-n}; the printed -q^{n-m} fails for m>n")
    return _run("vzw", (m, n), vzw_pairs(m, n), notes)


def vzw_family_verdicts(m: int, n: int) -> dict[str, Witness | None]:
    """First witness (or None) for each of rel1..rel5 separately."""
    out: dict[str, Witness | None] = {}
    for label, lhs, rhs in vzw_pairs(m, n):
        family = label.split(".")[0].split(" ")[0]
        if out.get(family) is None:
            out[family] = difference_witness(label, lhs, rhs)
    return out


def check_vzw_products(m: int, n: int) -> CheckReport:
    """Ahat^m A^n and A^n Ahat^m both equal delta^m A^(n-m) or delta^n Ahat^(m-n)."""
    H, P = adjoint_power(m), power(n)
    if m < n:
        target = power(n - m) * _delta_pow(m)
    else:
        target = adjoint_power(m - n) * _delta_pow(n)

    def pairs():
        yield from _matrix_pairs("Ahat^m A^n", mat_mul(H, P), target)
        yield from _matrix_pairs("A^n Ahat^m", mat_mul(P, H), target)

    return _run("vzw_products", (m, n), pairs())


# ---------------------------------------------------------------------------
# traces


TRACE_NOTES = (
    "tau_n is read as q^{n/2} a_n + q^{-n/2} d_n (trace of A^n C^n), not ... + q^{-n/2} b_n",
    "tau_0 is not asserted: the trace of A^0 C^0 is 2 while f_0 = 1",
)


def trace_power(n: int, primed: bool = False) -> AlgebraElement:
    """q^{n/2} a_n + q^{-n/2} d_n (or the primed twist)."""
    P = power(n)
    s = -1 if primed else 1
    return P.e11.scale(vp(s * n)) + P.e22.scale(vp(-s * n))


def check_tau_trace(n: int) -> CheckReport:
    """tau_n = f_n(tau), tau'_n = f_n(tau'), and the three-term recurrences.

    The recurrences hold with tau_0 = trace = 2.  The closed form
    tau_n = f_n(tau) itself only holds for n = 1; see :func:`check_trace_lucas`.
    """
    if n < 1:
        raise ValueError("the trace identity is checked for n >= 1")
    d = _delta()
    t, tp = tau(GENERIC), tau_prime(GENERIC)

    def pairs():
        yield "tau_n=f_n(tau)", trace_power(n), f_eval(n, t, d)
        yield "tau'_n=f_n(tau')", trace_power(n, True), f_eval(n, tp, d)
        yield "tau_{n+1}=tau_n tau-tau_{n-1} delta", trace_power(n + 1), trace_power(n) * t - trace_power(n - 1) * d
        yield (
            "tau'_{n+1}=tau'_n tau'-tau'_{n-1} delta",
            trace_power(n + 1, True),
            trace_power(n, True) * tp - trace_power(n - 1, True) * d,
        )

    return _run("tau_trace", (n,), pairs(), TRACE_NOTES)


def check_trace_lucas(n: int) -> CheckReport:
    """tau_n = f_n(tau) - delta f_{n-2}(tau), and the primed analogue."""
    if n < 1:
        raise ValueError("n >= 1 required")
    d = _delta()

    def pairs():
        for primed, t in ((False, tau(GENERIC)), (True, tau_prime(GENERIC))):
            seq = f_eval_sequence(n, t, d)
            f_n, f_nm2 = seq[n + 1], seq[n - 1]
            label = "tau'_n" if primed else "tau_n"
            yield f"{label}=f_n-delta f_(n-2)", trace_power(n, primed), f_n - d * f_nm2

    return _run("trace_lucas", (n,), pairs())


# ---------------------------------------------------------------------------
# Chebyshev layer


def check_fpoly(n: int) -> CheckReport:
    """Binomial sum equals recurrence, and the result is weighted homogeneous."""
    s, r = f_sum(n), f_rec(n)
    name, params = "fpoly", (n,)
    if s != r:
        return CheckReport(name, params, False, Witness("f_sum=f_rec", None, f"{s} vs {r}"))
    if not s.is_weighted_homogeneous(n):
        return CheckReport(name, params, False, Witness("weight(x)+2 weight(y)=n", None, str(s)))
    return CheckReport(name, params, True)


def check_f_eval_recurrence(n: int) -> CheckReport:
    """f_{n+1}(tau) = tau f_n(tau) - delta f_{n-1}(tau), plus agreement with term-wise substitution."""
    t, d = tau(GENERIC), _delta()

    def pairs():
        seq = f_eval_sequence(n + 1, t, d)
        yield "f_{n+1}=x f_n - y f_{n-1}", seq[n + 2], t * seq[n + 1] - d * seq[n]
        yield "recurrence=substitution", seq[n + 1], f_sum(n).evaluate(t, d)

    return _run("f_eval_recurrence", (n,), pairs())


# ---------------------------------------------------------------------------
# classical limit


def _numeric_power(M, n):
    out = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
    for _ in range(n):
        out = [
            [M[r][0] * out[0][col] + M[r][1] * out[1][col] for col in range(2)]
            for r in range(2)
        ]
    return out


def classical_formula(n: int, values) -> list[list[Fraction]]:
    """a f_{n-1}(tr) - det f_{n-2}(tr), b f_{n-1}(tr), ... for a commutative 2x2 matrix."""
    a, b, c, d = (Fraction(x) for x in values)
    tr, det = a + d, a * d - b * c
    f1 = f_sum(n - 1).evaluate(tr, det)
    f2 = f_sum(n - 2).evaluate(tr, det) if n >= 1 else Fraction(0)
    return [[a * f1 - det * f2, b * f1], [c * f1, d * f1 - det * f2]]


def check_classical_limit(n: int, assignment: Sequence) -> CheckReport:
    """At v = 1 and numeric a, b, c, d, A^n matches the rational matrix power."""
    values = dict(zip(GENERATORS, (Fraction(x) for x in assignment)))
    symbolic = power(n).specialize(1, values)
    numeric = _numeric_power([[values["a"], values["b"]], [values["c"], values["d"]]], n)
    formula = classical_formula(n, assignment)
    params = (n,)
    for r in range(2):
        for col in range(2):
            pos = f"{r + 1}{col + 1}"
            for label, other in (("numeric power", numeric), ("classical formula", formula)):
                if symbolic[r][col] != other[r][col]:
                    w = Witness(f"entry {pos} vs {label}", None, str(symbolic[r][col] - other[r][col]))
                    return CheckReport("classical_limit", params, False, w, (f"assignment {list(map(str, values.values()))}",))
    return CheckReport("classical_limit", params, True, None, (f"assignment {[str(v) for v in values.values()]}",))


def random_assignments(count: int, seed: int = 0) -> list[tuple[Fraction, ...]]:
    rng = random.Random(seed)
    return [
        tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(4))
        for _ in range(count)
    ]


# ---------------------------------------------------------------------------
# suite


def suite_plan(max_n: int) -> list[tuple[Callable[[], CheckReport], str]]:
    """The ordered list of checks run by :func:`run_suite`."""
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    plan: list = [
        (lambda: check_rq(GENERIC, 1), "rq generic"),
        (lambda: check_rq(qadjoint(GENERIC), -1, name="rq_adjoint", params=(-1,)), "rq adjoint"),
        (check_central_delta, "central delta"),
        (check_a_hat_a, "A Ahat"),
        (check_qch, "qch"),
        (check_hat_invariants, "hat invariants"),
    ]
    for n in range(-1, max_n + 1):
        plan.append((lambda n=n: check_fpoly(n), "fpoly"))
    for n in range(0, max_n + 1):
        plan.append((lambda n=n: check_f_eval_recurrence(n), "f_eval"))
    for n in range(1, max_n + 1):
        plan.append((lambda n=n: check_power_formulas(n), "powers"))
        plan.append((lambda n=n: check_entry_formulas(n), "entries"))
    for n in range(0, max_n + 1):
        plan.append((lambda n=n: check_entries_alt(n), "entries alt"))
        plan.append((lambda n=n: check_adjoint_powers(n), "adjoint powers"))
        plan.append((lambda n=n: check_power_rq(n), "power rq"))
        plan.append((lambda n=n: check_qdet_power(n), "qdet power"))
    for n in range(1, max_n + 1):
        plan.append((lambda n=n: check_tau_trace(n), "tau trace"))
        plan.append((lambda n=n: check_trace_lucas(n), "trace lucas"))
    for m in range(0, max_n + 1):
        for n in range(0, max_n + 1):
            plan.append((lambda m=m, n=n: check_vzw(m, n), "vzw"))
            plan.append((lambda m=m, n=n: check_vzw_products(m, n), "vzw products"))
    for values in random_assignments(3):
        for n in range(1, max_n + 1):
            plan.append((lambda n=n, v=values: check_classical_limit(n, v), "classical"))
    return plan


def run_suite(max_n: int, relations: Relations | None = None) -> list[CheckReport]:
    """Run every check up to ``max_n``; ``relations`` swaps in another rule set."""
    plan = suite_plan(max_n)
    if relations is None:
        return [check() for check, _ in plan]
    with using_relations(relations):
        return [check() for check, _ in plan]
