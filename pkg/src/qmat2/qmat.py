"""2x2 matrices with entries in the quantum matrix algebra."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import A, B, C, D, ONE, ZERO, AlgebraElement, embed
from .coeffring import QCoeff, q_power, qc_from_v_power


@dataclass(frozen=True)
class QMatrix2:
    e11: AlgebraElement
    e12: AlgebraElement
    e21: AlgebraElement
    e22: AlgebraElement

    def __post_init__(self):
        for name in ("e11", "e12", "e21", "e22"):
            object.__setattr__(self, name, AlgebraElement.coerce(getattr(self, name)))

    @property
    def entries(self) -> tuple[AlgebraElement, ...]:
        return (self.e11, self.e12, self.e21, self.e22)

    def __matmul__(self, other: "QMatrix2") -> "QMatrix2":
        return mat_mul(self, other)

    def __add__(self, other: "QMatrix2") -> "QMatrix2":
        return QMatrix2(*(x + y for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other: "QMatrix2") -> "QMatrix2":
        return QMatrix2(*(x - y for x, y in zip(self.entries, other.entries)))

    def __neg__(self) -> "QMatrix2":
        return QMatrix2(*(-x for x in self.entries))

    def __mul__(self, x) -> "QMatrix2":
        """Right multiplication of every entry by a scalar or algebra element."""
        return QMatrix2(*(e * AlgebraElement.coerce(x) for e in self.entries))

    def __rmul__(self, x) -> "QMatrix2":
        """Left multiplication of every entry."""
        x = AlgebraElement.coerce(x)
        return QMatrix2(*(x * e for e in self.entries))

    def to_json(self) -> dict:
        return {name: e.to_json() for name, e in zip(("e11", "e12", "e21", "e22"), self.entries)}

    @classmethod
    def from_json(cls, data) -> "QMatrix2":
        return cls(*(AlgebraElement.from_json(data[n]) for n in ("e11", "e12", "e21", "e22")))

    def specialize(self, t=1, values=None):
        return [[e.specialize(t, values) for e in row] for row in ((self.e11, self.e12), (self.e21, self.e22))]


GENERIC = QMatrix2(A, B, C, D)
IDENTITY = QMatrix2(ONE, ZERO, ZERO, ONE)


def mat_mul(X: QMatrix2, Y: QMatrix2) -> QMatrix2:
    return QMatrix2(
        X.e11 * Y.e11 + X.e12 * Y.e21,
        X.e11 * Y.e12 + X.e12 * Y.e22,
        X.e21 * Y.e11 + X.e22 * Y.e21,
        X.e21 * Y.e12 + X.e22 * Y.e22,
    )


def mat_pow(M: QMatrix2, n: int) -> QMatrix2:
    """``M^n`` by repeated left multiplication, ``M * M^(n-1)``."""
    if n < 0:
        raise ValueError("matrix power needs n >= 0")
    out = IDENTITY
    for _ in range(n):
        out = mat_mul(M, out)
    return out


def qdet(M: QMatrix2) -> AlgebraElement:
    """Quantum determinant ``e11 e22 - q e12 e21``."""
    return M.e11 * M.e22 - (M.e12 * M.e21).scale(q_power(1))


def qdet_alt(M: QMatrix2) -> AlgebraElement:
    """The other ordering, ``e22 e11 - q^-1 e12 e21``."""
    return M.e22 * M.e11 - (M.e12 * M.e21).scale(q_power(-1))


def qadjoint(M: QMatrix2) -> QMatrix2:
    return QMatrix2(M.e22, M.e12.scale(-q_power(-1)), M.e21.scale(-q_power(1)), M.e11)


def c_matrix(k: int) -> QMatrix2:
    """``diag(q^(k/2), q^(-k/2))``, i.e. the k-th power of diag(v, 1/v)."""
    return QMatrix2(embed(qc_from_v_power(k)), ZERO, ZERO, embed(qc_from_v_power(-k)))


def scalar_matrix(x) -> QMatrix2:
    x = AlgebraElement.coerce(x)
    return QMatrix2(x, ZERO, ZERO, x)


def tau(M: QMatrix2) -> AlgebraElement:
    """Twisted trace tr(M C) = q^(1/2) e11 + q^(-1/2) e22."""
    return M.e11.scale(qc_from_v_power(1)) + M.e22.scale(qc_from_v_power(-1))


def tau_prime(M: QMatrix2) -> AlgebraElement:
    """Twisted trace tr(C^-1 M) = q^(-1/2) e11 + q^(1/2) e22."""
    return M.e11.scale(qc_from_v_power(-1)) + M.e22.scale(qc_from_v_power(1))


def hat_invariants(M: QMatrix2) -> tuple[AlgebraElement, AlgebraElement, AlgebraElement]:
    """Traces and determinant of the adjoint, read as a q^-1 quantum matrix."""
    H = qadjoint(M)
    t_hat = H.e11.scale(qc_from_v_power(-1)) + H.e22.scale(qc_from_v_power(1))
    tp_hat = H.e11.scale(qc_from_v_power(1)) + H.e22.scale(qc_from_v_power(-1))
    d_hat = H.e11 * H.e22 - (H.e12 * H.e21).scale(q_power(-1))
    return t_hat, tp_hat, d_hat


__all__ = [
    "QMatrix2", "GENERIC", "IDENTITY", "mat_mul", "mat_pow", "qdet", "qdet_alt",
    "qadjoint", "c_matrix", "scalar_matrix", "tau", "tau_prime", "hat_invariants", "QCoeff",
]
