"""Vectors of the left quaternionic Hilbert space H^n.

Scalars act from the left only: (q f)_k = q f_k.  The inner product is

    <f|g> = sum_k f_k * conj(g_k),

left linear in the first slot (<q f|g> = q <f|g>) and conjugate right
linear in the second (<f|q g> = <f|g> conj(q)).  Right scalar action on
vectors is intentionally not exposed.
"""

from __future__ import annotations

import numbers
from collections.abc import Sequence

import numpy as np

from . import _cpair
from .quaternion import DEFAULT_TOL, ParseError, Quaternion, format_real, parse_reals


class DimensionMismatch(ValueError):
    """Operands live in spaces of different dimension."""


def _check_same_dim(f: "QVector", g: "QVector"):
    if f.dimension != g.dimension:
        raise DimensionMismatch(f"dimensions differ: {f.dimension} vs {g.dimension}")


class QVector:
    """Immutable element of H^n, stored as the complex pair (a, b)."""

    __slots__ = ("a", "b")

    def __init__(self, a, b):
        a = np.ascontiguousarray(a, dtype=np.complex128)
        b = np.ascontiguousarray(b, dtype=np.complex128)
        if a.ndim != 1 or a.shape != b.shape:
            raise DimensionMismatch("component arrays must be equal-length 1-d")
        if a.shape[0] < 1:
            raise DimensionMismatch("vectors need dimension >= 1")
        a.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):
        raise AttributeError("QVector is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_quaternions(cls, components: Sequence[Quaternion]) -> "QVector":
        pairs = [q.to_pair() for q in components]
        return cls([p[0] for p in pairs], [p[1] for p in pairs])

    @classmethod
    def from_real_array(cls, parts) -> "QVector":
        """Build from an (n, 4) array of (w, x, y, z) components."""
        return cls(*_cpair.from_real_components(parts))

    @classmethod
    def from_reals(cls, values: Sequence[float]) -> "QVector":
        """Build from a flat list of 4n reals."""
        values = np.asarray(values, dtype=np.float64)
        if values.ndim != 1 or values.size % 4 != 0 or values.size == 0:
            raise DimensionMismatch("expected a flat list of 4n reals")
        return cls.from_real_array(values.reshape(-1, 4))

    @classmethod
    def zero(cls, n: int) -> "QVector":
        return cls(np.zeros(n), np.zeros(n))

    @classmethod
    def basis(cls, n: int, k: int) -> "QVector":
        a = np.zeros(n, dtype=np.complex128)
        a[k] = 1.0
        return cls(a, np.zeros(n))

    # -- structure ----------------------------------------------------------

    @property
    def dimension(self) -> int:
        return self.a.shape[0]

    def __len__(self):
        return self.dimension

    def __getitem__(self, k: int) -> Quaternion:
        return Quaternion.from_pair(self.a[k], self.b[k])

    def __iter__(self):
        for k in range(self.dimension):
            yield self[k]

    def quaternions(self) -> list[Quaternion]:
        return list(self)

    def to_reals(self) -> list[float]:
        return [float(v) for v in _cpair.to_real_components(self.a, self.b).ravel()]

    # -- module operations ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QVector):
            return NotImplemented
        _check_same_dim(self, other)
        return QVector(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        if not isinstance(other, QVector):
            return NotImplemented
        _check_same_dim(self, other)
        return QVector(self.a - other.a, self.b - other.b)

    def __neg__(self):
        return QVector(-self.a, -self.b)

    def __rmul__(self, scalar):
        # left scalar action q * v; reals commute so they may also appear here
        if isinstance(scalar, Quaternion):
            sa, sb = scalar.to_pair()
            return QVector(*_cpair.mul(sa, sb, self.a, self.b))
        if isinstance(scalar, numbers.Real):
            return QVector(self.a * scalar, self.b * scalar)
        return NotImplemented

    def __mul__(self, scalar):
        if isinstance(scalar, numbers.Real):
            return QVector(self.a * scalar, self.b * scalar)
        return NotImplemented

    def __truediv__(self, scalar):
        if isinstance(scalar, numbers.Real):
            return QVector(self.a / scalar, self.b / scalar)
        return NotImplemented

    def inner(self, other: "QVector") -> Quaternion:
        _check_same_dim(self, other)
        oa, ob = np.conj(other.a), -other.b
        a = self.a * oa - self.b * np.conj(ob)
        b = self.a * ob + self.b * np.conj(oa)
        return Quaternion.from_pair(complex(a.sum()), complex(b.sum()))

    def norm_sq(self) -> float:
        return float(_cpair.abs2(self.a, self.b).sum())

    def norm(self) -> float:
        return float(np.sqrt(self.norm_sq()))

    # -- comparisons ----------------------------------------------------------

    def isclose(self, other: "QVector", tol: float = DEFAULT_TOL) -> bool:
        if not isinstance(other, QVector) or other.dimension != self.dimension:
            return False
        return (np.abs(self.a - other.a).max() <= tol
                and np.abs(self.b - other.b).max() <= tol)

    def __eq__(self, other):
        if not isinstance(other, QVector):
            return NotImplemented
        return (self.dimension == other.dimension
                and bool(np.array_equal(self.a, other.a))
                and bool(np.array_equal(self.b, other.b)))

    __hash__ = None

    def __repr__(self):
        inside = ", ".join(repr(q) for q in self)
        return f"QVector([{inside}])"

    def __str__(self):
        return format_vector(self)


def inner(f: QVector, g: QVector) -> Quaternion:
    """<f|g> = sum_k f_k conj(g_k)."""
    return f.inner(g)


def norm(f: QVector) -> float:
    return f.norm()


def left_scale(q: Quaternion, f: QVector) -> QVector:
    """Componentwise left product (q f)_k = q f_k."""
    return q * f


def format_vector(v: QVector) -> str:
    """One line of 4n space-separated reals."""
    return " ".join(format_real(c) for c in v.to_reals())


def parse_vector(text: str, dim: int | None = None, path=None, line=None) -> QVector:
    values = parse_reals(text, path, line)
    if not values or len(values) % 4 != 0:
        raise ParseError(f"expected 4n reals, got {len(values)}", path, line)
    if dim is not None and len(values) != 4 * dim:
        raise ParseError(f"expected {4 * dim} reals, got {len(values)}", path, line)
    return QVector.from_reals(values)


def read_vector(path) -> QVector:
    """Read a single vector from a text file; '#' lines and blanks ignored."""
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            stripped = raw.strip()
            if not stripped or stripped.startswith("#"):
                continue
            return parse_vector(stripped, path=path, line=lineno)
    raise ParseError("no vector data found", path)
