"""Scalar arithmetic in the quaternion division ring.

A quaternion is written ``w + x*i + y*j + z*k`` with real components and
imaginary units obeying ``i*i = j*j = k*k = -1`` and ``i*j = -j*i = k``,
``j*k = -k*j = i``, ``k*i = -i*k = j``.  Products are associative but not
commutative; real quaternions (``x = y = z = 0``) commute with everything.

The text form shared by every file format and the command line is four
decimal reals separated by single spaces, ``w x y z``; scientific notation
is accepted on input.
"""

from __future__ import annotations

import math
import numbers

DEFAULT_TOL = 1e-10


class ParseError(ValueError):
    """Malformed text input; carries the offending location when known."""

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        prefix = ""
        if path is not None:
            prefix += f"{path}:"
        if line is not None:
            prefix += f"{line}:"
        super().__init__(f"{prefix} {message}" if prefix else message)


class Quaternion:
    """An element of the quaternion algebra with float64 components.

    Instances are treated as immutable values.  ``==`` compares components
    exactly (useful for reproducibility checks); numerical comparisons go
    through :meth:`isclose`.
    """

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w=0.0, x=0.0, y=0.0, z=0.0):
        self.w = float(w)
        self.x = float(x)
        self.y = float(y)
        self.z = float(z)

    @classmethod
    def from_pair(cls, a: complex, b: complex) -> "Quaternion":
        """Build from the complex pair decomposition q = a + b*j."""
        return cls(a.real, a.imag, b.real, b.imag)

    def to_pair(self) -> tuple[complex, complex]:
        return complex(self.w, self.x), complex(self.y, self.z)

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w + other.w, self.x + other.x,
                              self.y + other.y, self.z + other.z)
        if isinstance(other, numbers.Real):
            return Quaternion(self.w + other, self.x, self.y, self.z)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w - other.w, self.x - other.x,
                              self.y - other.y, self.z - other.z)
        if isinstance(other, numbers.Real):
            return Quaternion(self.w - other, self.x, self.y, self.z)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, numbers.Real):
            return Quaternion(other - self.w, -self.x, -self.y, -self.z)
        return NotImplemented

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            w1, x1, y1, z1 = self.w, self.x, self.y, self.z
            w2, x2, y2, z2 = other.w, other.x, other.y, other.z
            return Quaternion(
                w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
                w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
                w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
                w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
            )
        if isinstance(other, numbers.Real):
            return Quaternion(self.w * other, self.x * other,
                              self.y * other, self.z * other)
        return NotImplemented

    def __rmul__(self, other):
        # real scalars commute, so left and right products agree here
        if isinstance(other, numbers.Real):
            return Quaternion(self.w * other, self.x * other,
                              self.y * other, self.z * other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Quaternion):
            return self * other.inverse()
        if isinstance(other, numbers.Real):
            return Quaternion(self.w / other, self.x / other,
                              self.y / other, self.z / other)
        return NotImplemented

    # -- involutions and magnitude ---------------------------------------

    def conj(self) -> "Quaternion":
        """Quaternionic conjugate; an anti-homomorphism of the product."""
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm_sq(self) -> float:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def __abs__(self) -> float:
        return math.sqrt(self.norm_sq())

    def inverse(self) -> "Quaternion":
        """Two-sided multiplicative inverse conj(q) / |q|^2."""
        n2 = self.norm_sq()
        if n2 == 0.0:
            raise ZeroDivisionError("zero quaternion has no inverse")
        return Quaternion(self.w / n2, -self.x / n2, -self.y / n2, -self.z / n2)

    # -- predicates and comparisons --------------------------------------

    def is_real(self, tol: float = DEFAULT_TOL) -> bool:
        return abs(self.x) <= tol and abs(self.y) <= tol and abs(self.z) <= tol

    def imag_norm(self) -> float:
        """Magnitude of the i, j, k part; zero exactly for real quaternions."""
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def isclose(self, other, tol: float = DEFAULT_TOL) -> bool:
        other = _coerce(other)
        return (abs(self.w - other.w) <= tol and abs(self.x - other.x) <= tol
                and abs(self.y - other.y) <= tol and abs(self.z - other.z) <= tol)

    def __eq__(self, other):
        if isinstance(other, numbers.Real):
            other = Quaternion(other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return (self.w == other.w and self.x == other.x
                and self.y == other.y and self.z == other.z)

    def __hash__(self):
        return hash((self.w, self.x, self.y, self.z))

    def __repr__(self):
        return f"Quaternion({self.w!r}, {self.x!r}, {self.y!r}, {self.z!r})"

    def __str__(self):
        return format_quaternion(self)


def _coerce(value) -> Quaternion:
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, numbers.Real):
        return Quaternion(value)
    raise TypeError(f"cannot interpret {value!r} as a quaternion")


ZERO = Quaternion()
ONE = Quaternion(1.0)
I = Quaternion(0.0, 1.0)
J = Quaternion(0.0, 0.0, 1.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def format_real(value: float) -> str:
    """17 significant digits; round-trips float64 exactly."""
    return format(float(value), ".17g")


def format_quaternion(q: Quaternion) -> str:
    return " ".join(format_real(c) for c in (q.w, q.x, q.y, q.z))


def parse_reals(text: str, path=None, line=None) -> list[float]:
    values = []
    for token in text.split():
        try:
            values.append(float(token))
        except ValueError:
            raise ParseError(f"expected a real number, got {token!r}", path, line) from None
    return values


def parse_quaternion(text: str, path=None, line=None) -> Quaternion:
    values = parse_reals(text, path, line)
    if len(values) != 4:
        raise ParseError(f"expected 4 components, got {len(values)}", path, line)
    return Quaternion(*values)
