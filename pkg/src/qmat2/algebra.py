"""The quantum matrix algebra on generators a, b, c, d, kept in PBW normal form.

Relations (q central)::

    ab = q ba    ac = q ca    ad - da = (q - 1/q) bc
    bc = cb      bd = q db    cd = q dc

Every element is a combination of ordered words ``a^i b^j c^k d^l`` with
coefficients in ``Z[v, 1/v]``.  Products are straightened by the rewrite rules
below, read left to right::

    ba -> q^-1 ab     ca -> q^-1 ac     cb -> bc
    db -> q^-1 bd     dc -> q^-1 cd     da -> ad - (q - q^-1) bc
"""

from __future__ import annotations

import contextlib
import contextvars
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from .coeffring import QCoeff, _add_into, _convolve, q_power, render_q

GENERATORS = "abcd"


class PBWMonomial(NamedTuple):
    """Exponents of the ordered word ``a^i b^j c^k d^l``."""

    i: int = 0
    j: int = 0
    k: int = 0
    l: int = 0

    @property
    def degree(self) -> int:
        return self.i + self.j + self.k + self.l

    def word(self) -> str:
        return "a" * self.i + "b" * self.j + "c" * self.k + "d" * self.l


UNIT = PBWMonomial(0, 0, 0, 0)
_GEN_MONO = {
    "a": PBWMonomial(1, 0, 0, 0),
    "b": PBWMonomial(0, 1, 0, 0),
    "c": PBWMonomial(0, 0, 1, 0),
    "d": PBWMonomial(0, 0, 0, 1),
}


def order_key(m: PBWMonomial):
    """Sort key giving graded-lex order, highest first, when used ascending."""
    return (-m.degree, -m.i, -m.j, -m.k, -m.l)


# ---------------------------------------------------------------------------
# rewrite rules


@dataclass(eq=False)
class Relations:
    """Coefficients of the six rewrite rules.

    ``swap[(x, y)]`` is the scalar in ``yx -> swap * xy`` for ``x < y``; the
    pair ``("a", "d")`` additionally produces ``da_extra * bc``.  Straightening
    caches live on the instance, so distinct rule sets never share results.
    """

    name: str
    swap: Mapping[tuple[str, str], QCoeff]
    da_extra: QCoeff
    _d_cache: dict = field(default_factory=dict, repr=False)
    _pow_cache: dict = field(default_factory=dict, repr=False)

    def memo(self, key, compute):
        """Cache ``compute()`` under ``key`` for this rule set."""
        key = ("memo", key)
        try:
            return self._d_cache[key]
        except KeyError:
            value = self._d_cache[key] = compute()
            return value

    def power(self, pair: tuple[str, str], n: int) -> dict:
        key = (pair, n)
        hit = self._pow_cache.get(key)
        if hit is None:
            hit = (self.swap[pair] ** n)._terms
            self._pow_cache[key] = hit
        return hit


def _standard_relations() -> Relations:
    qi = q_power(-1)
    return Relations(
        name="R_q",
        swap={
            ("a", "b"): qi,
            ("a", "c"): qi,
            ("a", "d"): QCoeff(1),
            ("b", "c"): QCoeff(1),
            ("b", "d"): qi,
            ("c", "d"): qi,
        },
        da_extra=-(q_power(1) - q_power(-1)),
    )


def corrupted_relations() -> Relations:
    """A deliberately wrong rule set (``dc -> cd``), used as a negative control."""
    rel = _standard_relations()
    swap = dict(rel.swap)
    swap[("c", "d")] = QCoeff(1)
    return Relations(name="corrupted", swap=swap, da_extra=rel.da_extra)


STANDARD = _standard_relations()
_active: contextvars.ContextVar[Relations] = contextvars.ContextVar(
    "qmat2_relations", default=STANDARD
)


def active_relations() -> Relations:
    return _active.get()


@contextlib.contextmanager
def using_relations(rel: Relations):
    """Run the enclosed block with ``rel`` as the multiplication rules."""
    token = _active.set(rel)
    try:
        yield rel
    finally:
        _active.reset(token)


def _shift_mul(coeff: dict, factors: Iterable[dict]) -> dict:
    out = coeff
    for f in factors:
        if len(f) == 1:
            (e, c), = f.items()
            if c == 1:
                out = {k + e: v for k, v in out.items()}
            else:
                out = {k + e: v * c for k, v in out.items()}
        else:
            out = _convolve(out, f)
    return out


def _right_gen(m: PBWMonomial, g: str, rel: Relations) -> dict:
    """Normal form of ``m * g`` as ``{monomial: laurent dict}``."""
    i, j, k, l = m
    if g == "d":
        return {PBWMonomial(i, j, k, l + 1): {0: 1}}
    if g == "c":
        return {PBWMonomial(i, j, k + 1, l): dict(rel.power(("c", "d"), l))}
    if g == "b":
        f = _convolve(rel.power(("b", "d"), l), rel.power(("b", "c"), k))
        return {PBWMonomial(i, j + 1, k, l): f}
    if g != "a":
        raise ValueError(f"unknown generator {g!r}")
    key = ("ra", m)
    hit = rel._d_cache.get(key)
    if hit is not None:
        return hit
    if l == 0:
        f = _convolve(rel.power(("a", "b"), j), rel.power(("a", "c"), k))
        out = {PBWMonomial(i + 1, j, k, 0): f}
    else:
        # m a = m' (d a) = m' (ad) * s + m' (bc) * extra
        prev = PBWMonomial(i, j, k, l - 1)
        out: dict = {}
        s = rel.swap[("a", "d")]._terms
        for mm, cc in _right_gen(prev, "a", rel).items():
            for m2, c2 in _right_gen(mm, "d", rel).items():
                _acc_term(out, m2, _convolve(_convolve(cc, c2), s))
        extra = rel.da_extra._terms
        if extra:
            for mm, cc in _right_gen(prev, "b", rel).items():
                for m2, c2 in _right_gen(mm, "c", rel).items():
                    _acc_term(out, m2, _convolve(_convolve(cc, c2), extra))
    rel._d_cache[key] = out
    return out


def _acc_term(acc: dict, m: PBWMonomial, coeff: dict) -> None:
    cur = acc.get(m)
    if cur is None:
        if coeff:
            acc[m] = dict(coeff)
        return
    _add_into(cur, coeff)
    if not cur:
        del acc[m]


def d_power_a_power(l: int, i: int, rel: Relations | None = None) -> dict:
    """Normal form of ``d^l a^i``, built one ``a`` at a time."""
    rel = rel or active_relations()
    key = ("da", l, i)
    hit = rel._d_cache.get(key)
    if hit is not None:
        return hit
    if i == 0:
        out = {PBWMonomial(0, 0, 0, l): {0: 1}}
    else:
        out = {}
        for m, c in d_power_a_power(l, i - 1, rel).items():
            for m2, c2 in _right_gen(m, "a", rel).items():
                _acc_term(out, m2, _convolve(c, c2))
    rel._d_cache[key] = out
    return out


def mono_mul(m1: PBWMonomial, m2: PBWMonomial, rel: Relations | None = None) -> dict:
    """Normal form of ``m1 * m2`` as ``{monomial: laurent dict}``.

    Only the middle ``d^l a^i`` needs real straightening; everything else is a
    block of scalar swaps applied in bulk.
    """
    rel = rel or active_relations()
    i, j, k, l = m1
    i2, j2, k2, l2 = m2
    out: dict = {}
    for (x, y, w, z), kappa in d_power_a_power(l, i2, rel).items():
        # b^j c^k a^x: move a^x left; c^k b^y: move b^y left; d^z b^j2 c^k2: move right block left
        factors = (
            rel.power(("a", "b"), j * x),
            rel.power(("a", "c"), k * x),
            rel.power(("b", "c"), k * y + (k + w) * j2),
            rel.power(("b", "d"), z * j2),
            rel.power(("c", "d"), z * k2),
        )
        coeff = _shift_mul(kappa, factors)
        _acc_term(out, PBWMonomial(i + x, j + y + j2, k + w + k2, z + l2), coeff)
    return out


# ---------------------------------------------------------------------------
# elements


class AlgebraElement:
    """A finite sum of PBW monomials with ``QCoeff`` coefficients.

    Supports ``+ - *`` with other elements, ``QCoeff`` values and ints.
    Equality is equality of normal forms.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        self._terms: dict[PBWMonomial, QCoeff] = {}
        for m, c in (terms or {}).items():
            c = QCoeff.coerce(c)
            if c:
                self._terms[PBWMonomial(*m)] = c
        self._hash = None

    @classmethod
    def _from_raw(cls, raw: dict) -> "AlgebraElement":
        obj = cls.__new__(cls)
        obj._terms = {m: QCoeff._wrap(c) for m, c in raw.items() if c}
        obj._hash = None
        return obj

    def _raw(self) -> dict:
        return {m: dict(c._terms) for m, c in self._terms.items()}

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """(monomial, coefficient) pairs in graded-lex order."""
        return sorted(self._terms.items(), key=lambda t: order_key(t[0]))

    def coefficient(self, m) -> QCoeff:
        return self._terms.get(PBWMonomial(*m), QCoeff())

    def is_zero(self) -> bool:
        return not self._terms

    def is_scalar(self) -> bool:
        return all(m == UNIT for m in self._terms)

    def degree(self) -> int:
        return max((m.degree for m in self._terms), default=-1)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    @staticmethod
    def coerce(x) -> "AlgebraElement":
        if isinstance(x, AlgebraElement):
            return x
        if isinstance(x, (int, QCoeff)):
            return embed(QCoeff.coerce(x))
        raise TypeError(f"cannot interpret {x!r} as an algebra element")

    def __add__(self, other):
        try:
            other = AlgebraElement.coerce(other)
        except TypeError:
            return NotImplemented
        raw = self._raw()
        for m, c in other._terms.items():
            _acc_term(raw, m, c._terms)
        return AlgebraElement._from_raw(raw)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement._from_raw({m: (-c)._terms for m, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = AlgebraElement.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "AlgebraElement":
        c = QCoeff.coerce(c)
        return AlgebraElement._from_raw(
            {m: _convolve(x._terms, c._terms) for m, x in self._terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, (int, QCoeff)):
            return self.scale(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return alg_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, QCoeff)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined")
        out = embed(QCoeff(1))
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, QCoeff)):
            other = AlgebraElement.coerce(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def commutes_with(self, other: "AlgebraElement") -> bool:
        return self * other == other * self

    def specialize(self, t=1, values: Mapping[str, Fraction] | None = None) -> "Fraction | dict":
        """Set ``v = t``.

        With ``values`` (rationals for a, b, c, d) the result is a number;
        without, a dict mapping monomials to rationals.
        """
        if values is None:
            out = {}
            for m, c in self._terms.items():
                val = c.specialize(t)
                if val:
                    out[m] = val
            return out
        va, vb, vc, vd = (Fraction(values[g]) for g in GENERATORS)
        total = Fraction(0)
        for m, c in self._terms.items():
            total += c.specialize(t) * va ** m.i * vb ** m.j * vc ** m.k * vd ** m.l
        return total

    # rendering -----------------------------------------------------------

    def __str__(self):
        return render_element(self)

    def __repr__(self):
        return f"AlgebraElement({render_element(self)!r})"

    def to_json(self) -> dict:
        return {"terms": [{"m": list(m), "c": c.to_json()} for m, c in self.items()]}

    @classmethod
    def from_json(cls, data) -> "AlgebraElement":
        return cls({tuple(t["m"]): QCoeff.from_json(t["c"]) for t in data["terms"]})

    def latex(self) -> str:
        return render_element(self, latex=True)


def gen(name: str) -> AlgebraElement:
    try:
        m = _GEN_MONO[name]
    except KeyError:
        raise ValueError(f"unknown generator {name!r}; expected one of a, b, c, d") from None
    return AlgebraElement._from_raw({m: {0: 1}})


def embed(c) -> AlgebraElement:
    c = QCoeff.coerce(c)
    return AlgebraElement._from_raw({UNIT: dict(c._terms)} if c else {})


def alg_add(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x + y


def alg_mul(x: AlgebraElement, y: AlgebraElement, rel: Relations | None = None) -> AlgebraElement:
    """Product of two elements, reduced to normal form."""
    rel = rel or active_relations()
    acc: dict = {}
    for m1, c1 in x._terms.items():
        r1 = c1._terms
        for m2, c2 in y._terms.items():
            c12 = _convolve(r1, c2._terms)
            for m, f in mono_mul(m1, m2, rel).items():
                _acc_term(acc, m, _convolve(c12, f))
    return AlgebraElement._from_raw(acc)


# ---------------------------------------------------------------------------
# reference reducer


def straighten_word(word: str, rel: Relations | None = None) -> AlgebraElement:
    """Normal form of a word in a, b, c, d by naive adjacent rewriting.

    Always rewrites the leftmost out-of-order pair.  Slow, but shares no code
    with :func:`mono_mul`, so it serves as an independent check on it.
    """
    rel = rel or active_relations()
    for ch in word:
        if ch not in GENERATORS:
            raise ValueError(f"unknown generator {ch!r}")
    pending: dict[str, QCoeff] = {word: QCoeff(1)}
    done: dict[PBWMonomial, QCoeff] = {}
    while pending:
        w, c = pending.popitem()
        for p in range(len(w) - 1):
            if w[p] > w[p + 1]:
                break
        else:
            m = PBWMonomial(w.count("a"), w.count("b"), w.count("c"), w.count("d"))
            done[m] = done.get(m, QCoeff()) + c
            continue
        y, x = w[p], w[p + 1]
        head, tail = w[:p], w[p + 2:]
        new = [(head + x + y + tail, c * rel.swap[(x, y)])]
        if (x, y) == ("a", "d") and rel.da_extra:
            new.append((head + "bc" + tail, c * rel.da_extra))
        for nw, nc in new:
            total = pending.get(nw, QCoeff()) + nc
            if total:
                pending[nw] = total
            else:
                pending.pop(nw, None)
    return AlgebraElement(done)


# ---------------------------------------------------------------------------
# rendering


def _monomial_text(m: PBWMonomial, latex: bool) -> str:
    parts = []
    for g, e in zip(GENERATORS, m):
        if e == 1:
            parts.append(g)
        elif e > 1:
            parts.append(f"{g}^{{{e}}}" if latex else f"{g}^{e}")
    return "".join(parts)


def render_element(x: AlgebraElement, latex: bool = False) -> str:
    """``a^2 + bc``, ``q^-1 ac + q^-1 cd``, ``(q - q^-1) bc``."""
    if not x._terms:
        return "0"
    chunks = []
    for m, c in x.items():
        mono = _monomial_text(m, latex)
        sign = "+"
        if c.is_monomial():
            (e, n), = c._terms.items()
            if n < 0:
                sign, c = "-", -c
            coeff = render_q(c, latex)
            if mono:
                body = mono if coeff == "1" else (coeff + ("" if latex else " ") + mono)
            else:
                body = coeff
        else:
            coeff = render_q(c, latex)
            body = f"({coeff})" + ((("" if latex else " ") + mono) if mono else "")
        chunks.append((sign, body))
    first_sign, first = chunks[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in chunks[1:]:
        out += f" {sign} {body}"
    return out


def parse_monomial_word(word: str) -> PBWMonomial:
    """Exponents of a word that is already ordered, e.g. ``"abbd"``."""
    m = PBWMonomial(*(word.count(g) for g in GENERATORS))
    if m.word() != word:
        raise ValueError(f"{word!r} is not an ordered PBW word")
    return m


A = gen("a")
B = gen("b")
C = gen("c")
D = gen("d")
ONE = embed(1)
ZERO = AlgebraElement()
