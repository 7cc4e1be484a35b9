"""The two-variable Chebyshev family f_n(x, y).

    f_n(x, y) = sum_{l=0}^{n//2} (-1)^l C(n-l, l) x^(n-2l) y^l,   f_{-1} = 0,

equivalently f_{n+1} = x f_n - y f_{n-1} with f_0 = 1.  At y = 1 this is
the second-kind Chebyshev family in the normalization
U_n(x) = sum (-1)^l C(n-l, l) x^(n-2l).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping

from .algebra import AlgebraElement, embed


class NonCommutingError(ValueError):
    """Raised when f_n is evaluated at arguments that do not commute."""

    def __init__(self, xy: AlgebraElement, yx: AlgebraElement):
        super().__init__("f_n(x, y) needs commuting arguments")
        self.xy = xy
        self.yx = yx


class FPoly:
    """Commutative polynomial in x, y with integer coefficients.

    ``coeffs`` maps ``(x_exponent, y_exponent)`` to a nonzero int.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None):
        self.coeffs = {(int(a), int(b)): int(c) for (a, b), c in (coeffs or {}).items() if c}

    def __eq__(self, other):
        return isinstance(other, FPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out.get(key, 0) + c
        return FPoly(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c: int) -> "FPoly":
        return FPoly({key: c * v for key, v in self.coeffs.items()})

    def shift(self, dx: int, dy: int) -> "FPoly":
        """Multiply by x^dx y^dy."""
        return FPoly({(a + dx, b + dy): c for (a, b), c in self.coeffs.items()})

    def is_weighted_homogeneous(self, n: int) -> bool:
        """Every term has x-degree + 2 * y-degree == n."""
        return all(a + 2 * b == n for a, b in self.coeffs)

    def evaluate(self, x, y):
        """Plug in commuting values (numbers or algebra elements) term by term."""
        total = None
        for (a, b), c in self.coeffs.items():
            term = c * x ** a * y ** b
            total = term if total is None else total + term
        if total is None:
            return 0 * x ** 0
        return total

    def items(self):
        return sorted(self.coeffs.items(), key=lambda t: (-t[0][0], t[0][1]))

    def __str__(self):
        return render_fpoly(self)

    def __repr__(self):
        return f"FPoly({render_fpoly(self)!r})"

    def latex(self) -> str:
        return render_fpoly(self, latex=True)


@lru_cache(maxsize=None)
def binomial(n: int, k: int) -> int:
    """Binomial coefficient via Pascal's rule."""
    if k < 0 or k > n:
        return 0
    if k == 0 or k == n:
        return 1
    return binomial(n - 1, k - 1) + binomial(n - 1, k)


def f_sum(n: int) -> FPoly:
    if n < -1:
        raise ValueError(f"f_n is defined for n >= -1, got {n}")
    if n == -1:
        return FPoly()
    return FPoly({(n - 2 * l, l): (-1) ** l * binomial(n - l, l) for l in range(n // 2 + 1)})


def f_rec(n: int) -> FPoly:
    if n < -1:
        raise ValueError(f"f_n is defined for n >= -1, got {n}")
    prev, cur = FPoly(), FPoly({(0, 0): 1})
    if n == -1:
        return prev
    for _ in range(n):
        prev, cur = cur, cur.shift(1, 0) - prev.shift(0, 1)
    return cur


def f_eval_sequence(n: int, x: AlgebraElement, y: AlgebraElement, check: bool = True):
    """[f_{-1}(x, y), f_0(x, y), ..., f_n(x, y)] evaluated in the algebra.

    Uses the three-term recurrence; ``x`` and ``y`` must commute.
    """
    if n < -1:
        raise ValueError(f"f_n is defined for n >= -1, got {n}")
    x = AlgebraElement.coerce(x)
    y = AlgebraElement.coerce(y)
    if check:
        xy, yx = x * y, y * x
        if xy != yx:
            raise NonCommutingError(xy, yx)
    seq = [embed(0), embed(1)]
    for _ in range(n):
        seq.append(x * seq[-1] - y * seq[-2])
    return seq[: n + 2]


def f_eval(n: int, x, y, check: bool = True) -> AlgebraElement:
    return f_eval_sequence(n, x, y, check)[-1]


def render_fpoly(p: FPoly, latex: bool = False) -> str:
    """Decreasing x-degree, e.g. ``x^4 - 3x^2 y + y^2``."""
    if not p.coeffs:
        return "0"
    out = ""
    for idx, ((a, b), c) in enumerate(p.items()):
        factors = []
        for var, e in (("x", a), ("y", b)):
            if e == 1:
                factors.append(var)
            elif e > 1:
                factors.append(f"{var}^{{{e}}}" if latex else f"{var}^{e}")
        mono = ("" if latex else " ").join(factors)
        mag = abs(c)
        body = mono if (mag == 1 and mono) else f"{mag}{mono}"
        if idx == 0:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out
