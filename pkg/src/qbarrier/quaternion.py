"""Quaternion arithmetic in the symplectic complex-pair representation.

A quaternion q = a + b*i + c*j + d*k is stored as the ordered pair of
complex numbers (z, w) with

    q = z + j*w,    z = a + i*b,    w = c - i*d.

Everything follows from the anticommutation rule j*z = conj(z)*j, which
closes the pair representation under the Hamilton product:

    (z1 + j*w1)(z2 + j*w2) = (z1*z2 - conj(w1)*w2) + j*(conj(z1)*w2 + z2*w1)

The sign convention is pinned by i*j = +k (see the unit constants below).

>>> qmul(I, J) == K
True
>>> qmul(Quaternion(1, 1), Quaternion(1, -1))
Quaternion(z=(2+0j), w=0j)
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Quaternion:
    """Value z + j*w with complex z (the 1,i part) and complex w (the j,k part)."""

    z: complex
    w: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "z", complex(self.z))
        object.__setattr__(self, "w", complex(self.w))

    @classmethod
    def from_components(cls, a: float, b: float, c: float, d: float) -> "Quaternion":
        """Build a + b*i + c*j + d*k from four real components."""
        return cls(complex(a, b), complex(c, -d))

    def as_components(self) -> tuple[float, float, float, float]:
        """Real components (a, b, c, d) of a + b*i + c*j + d*k."""
        return (self.z.real, self.z.imag, self.w.real, -self.w.imag)

    @classmethod
    def from_complex(cls, z: complex) -> "Quaternion":
        return cls(complex(z), 0j)

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.z.conjugate(), -self.w)

    def norm(self) -> float:
        return math.hypot(abs(self.z), abs(self.w))

    def scalar_part(self) -> float:
        """Real (1-component) part: (q + conj(q)) / 2."""
        return self.z.real

    def __abs__(self) -> float:
        return self.norm()

    def __add__(self, other: "Quaternion") -> "Quaternion":
        other = _promote(other)
        return Quaternion(self.z + other.z, self.w + other.w)

    __radd__ = __add__

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        other = _promote(other)
        return Quaternion(self.z - other.z, self.w - other.w)

    def __rsub__(self, other) -> "Quaternion":
        return _promote(other) - self

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.z, -self.w)

    def __mul__(self, other) -> "Quaternion":
        other = _promote(other)
        return Quaternion(
            self.z * other.z - self.w.conjugate() * other.w,
            self.z.conjugate() * other.w + other.z * self.w,
        )

    def __rmul__(self, other) -> "Quaternion":
        # Multiplication does not commute: evaluate other * self.
        return _promote(other) * self


def _promote(value) -> Quaternion:
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, (int, float, complex)):
        return Quaternion(complex(value), 0j)
    raise TypeError(f"cannot interpret {type(value).__name__} as a quaternion")


def qmul(q1: Quaternion, q2: Quaternion) -> Quaternion:
    """Hamilton product in the pair representation (i*j = +k convention)."""
    return q1 * q2


def qconj(q: Quaternion) -> Quaternion:
    """Quaternionic conjugate: negates the i, j and k parts."""
    return q.conjugate()


def qnorm(q: Quaternion) -> float:
    """Euclidean norm; satisfies qnorm(q)**2 == qmul(qconj(q), q).z exactly in math."""
    return q.norm()


ONE = Quaternion(1.0, 0j)
I = Quaternion(1j, 0j)
J = Quaternion(0j, 1.0)
K = Quaternion(0j, -1j)
