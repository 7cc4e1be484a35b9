"""Exact Laurent polynomials in ``v = q**(1/2)`` with integer coefficients.

Every scalar that shows up next to a quantum matrix (``q``, ``q**(-1/2)``,
``q - 1/q``, binomial multiples of those) lives in ``Z[v, 1/v]``.  Using the
square root of ``q`` as the variable keeps all exponents integral.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def _add_into(acc: dict, other: dict, scale: int = 1) -> None:
    for e, c in other.items():
        s = acc.get(e, 0) + scale * c
        if s:
            acc[e] = s
        else:
            acc.pop(e, None)


def _convolve(x: dict, y: dict) -> dict:
    out: dict = {}
    for e1, c1 in x.items():
        for e2, c2 in y.items():
            e = e1 + e2
            s = out.get(e, 0) + c1 * c2
            if s:
                out[e] = s
            else:
                del out[e]
    return out


class QCoeff:
    """An element of ``Z[v, 1/v]``, stored as ``{v_exponent: int}``.

    Zero coefficients are never stored, so two values are equal exactly when
    their dictionaries are.  Instances are treated as immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            self._terms = {}
        elif isinstance(terms, int):
            self._terms = {0: terms} if terms else {}
        else:
            self._terms = {int(e): int(c) for e, c in dict(terms).items() if c}
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> "QCoeff":
        # trusted constructor: terms already canonical
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def coerce(cls, x) -> "QCoeff":
        if isinstance(x, QCoeff):
            return x
        if isinstance(x, int):
            return cls(x)
        raise TypeError(f"cannot interpret {x!r} as a Laurent coefficient")

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """(exponent, coefficient) pairs in decreasing exponent order."""
        return sorted(self._terms.items(), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def degree_range(self) -> tuple[int, int]:
        if not self._terms:
            raise ValueError("zero has no degree")
        return min(self._terms), max(self._terms)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        try:
            other = QCoeff.coerce(other)
        except TypeError:
            return NotImplemented
        acc = dict(self._terms)
        _add_into(acc, other._terms)
        return QCoeff._wrap(acc)

    __radd__ = __add__

    def __neg__(self):
        return QCoeff._wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = QCoeff.coerce(other)
        except TypeError:
            return NotImplemented
        acc = dict(self._terms)
        _add_into(acc, other._terms, -1)
        return QCoeff._wrap(acc)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = QCoeff.coerce(other)
        except TypeError:
            return NotImplemented
        return QCoeff._wrap(_convolve(self._terms, other._terms))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial() or abs(next(iter(self._terms.values()))) != 1:
                raise ValueError("only unit monomials have inverses")
            (e, c), = self._terms.items()
            return QCoeff._wrap({e * n: c ** (-n)})
        out = QCoeff(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "QCoeff":
        """Multiply by ``v**k``."""
        return QCoeff._wrap({e + k: c for e, c in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = QCoeff(other)
        if not isinstance(other, QCoeff):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def specialize(self, t) -> Fraction:
        return qc_specialize(self, t)

    # rendering ------------------------------------------------------------

    def __str__(self):
        return render_v(self)

    def __repr__(self):
        return f"QCoeff({render_v(self)!r})"

    def to_json(self) -> list:
        return [[e, str(c)] for e, c in self.items()]

    @classmethod
    def from_json(cls, data) -> "QCoeff":
        return cls({int(e): int(c) for e, c in data})


def qc_from_v_power(k: int) -> QCoeff:
    """``v**k``, i.e. ``q**(k/2)``."""
    return QCoeff._wrap({k: 1})


def q_power(p: int) -> QCoeff:
    """``q**p`` for integer ``p``."""
    return QCoeff._wrap({2 * p: 1})


def qc_add(x: QCoeff, y: QCoeff) -> QCoeff:
    return x + y


def qc_mul(x: QCoeff, y: QCoeff) -> QCoeff:
    return x * y


def qc_specialize(x: QCoeff, t) -> Fraction:
    """Substitute ``v = t`` (a nonzero rational) and return the exact value."""
    if not isinstance(t, Rational):
        raise TypeError("specialization point must be an exact rational")
    t = Fraction(t)
    if t == 0:
        raise ZeroDivisionError("cannot specialize a Laurent polynomial at v = 0")
    return sum((c * t ** e for e, c in x._terms.items()), Fraction(0))


def _monomial_text(e: int, var: str) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


def render_v(x: QCoeff) -> str:
    """Text in ``v``, highest power first: ``v^2 - 2 + v^-2``."""
    if not x._terms:
        return "0"
    parts = []
    for e, c in x.items():
        mono = _monomial_text(e, "v")
        mag = abs(c)
        body = mono if (mag == 1 and mono) else f"{mag}{mono}"
        parts.append(("-" if c < 0 else "+", body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _q_exponent_text(e: int) -> str:
    # v**e == q**(e/2)
    if e % 2 == 0:
        return str(e // 2)
    return f"{e}/2"


def _q_exponent_latex(e: int) -> str:
    if e % 2 == 0:
        return str(e // 2)
    sign = "-" if e < 0 else ""
    return f"{sign}\\frac{{{abs(e)}}}{{2}}"


def render_q(x: QCoeff, latex: bool = False) -> str:
    """Text in half-integer powers of ``q``: ``q - q^-1``, ``q^{\\frac{1}{2}}``."""
    if not x._terms:
        return "0"
    pieces = []
    for e, c in x.items():
        if e == 0:
            mono = ""
        elif e == 2:
            mono = "q"
        elif latex:
            mono = f"q^{{{_q_exponent_latex(e)}}}"
        else:
            mono = f"q^{_q_exponent_text(e)}"
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}{' ' if not latex else ''}{mono}"
        pieces.append(("-" if c < 0 else "+", body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


ZERO = QCoeff()
ONE = QCoeff(1)
Q = q_power(1)
Q_INV = q_power(-1)
