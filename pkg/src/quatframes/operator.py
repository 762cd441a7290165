"""Left-linear operators on H^n as square quaternion matrices.

Action convention (fixed throughout the package): vectors are rows and
components multiply matrix entries from the left,

    (T f)_i = sum_j f_j * A_ji,

so row index = input component, column index = output component.  This is
what makes T(q f) = q T(f) hold despite noncommutativity; the familiar
matrix-times-column action would break it.

Under this convention the adjoint is still the conjugate transpose, and
``A @ B`` denotes operator composition "apply B first, then A", which is
the product written AB in operator notation.  Internally that composition
multiplies the stored matrices in reverse order; all code should therefore
compose operators with ``@`` and never multiply raw matrices by hand.
"""

from __future__ import annotations

import numbers
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from . import _cpair, embed
from .hilbert import DimensionMismatch, QVector
from .quaternion import DEFAULT_TOL, ParseError, Quaternion, format_real, parse_reals

PIVOT_RTOL = 1e-12


class Singular(ArithmeticError):
    """No usable pivot: the operator has a nontrivial kernel."""


class NotPositive(ValueError):
    """Operation requires a positive (semi-definite, self-adjoint) operator."""


class QOperator:
    """Immutable n x n quaternion matrix acting on row vectors."""

    __slots__ = ("a", "b")

    def __init__(self, a, b):
        a = np.ascontiguousarray(a, dtype=np.complex128)
        b = np.ascontiguousarray(b, dtype=np.complex128)
        if a.ndim != 2 or a.shape != b.shape or a.shape[0] != a.shape[1]:
            raise DimensionMismatch("operator entries must form equal square matrices")
        if a.shape[0] < 1:
            raise DimensionMismatch("operators need dimension >= 1")
        a.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):
        raise AttributeError("QOperator is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_quaternions(cls, rows: Sequence[Sequence[Quaternion]]) -> "QOperator":
        n = len(rows)
        a = np.empty((n, n), dtype=np.complex128)
        b = np.empty((n, n), dtype=np.complex128)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise DimensionMismatch("operator rows must all have length n")
            for j, q in enumerate(row):
                a[i, j], b[i, j] = q.to_pair()
        return cls(a, b)

    @classmethod
    def from_real_array(cls, parts) -> "QOperator":
        """Build from an (n, n, 4) array of (w, x, y, z) components."""
        return cls(*_cpair.from_real_components(parts))

    @classmethod
    def identity(cls, n: int) -> "QOperator":
        return cls(np.eye(n), np.zeros((n, n)))

    @classmethod
    def zero(cls, n: int) -> "QOperator":
        return cls(np.zeros((n, n)), np.zeros((n, n)))

    @classmethod
    def diagonal(cls, values: Sequence[float]) -> "QOperator":
        values = np.asarray(values, dtype=np.float64)
        return cls(np.diag(values).astype(np.complex128), np.zeros((values.size, values.size)))

    # -- structure ---------------------------------------------------------

    @property
    def dimension(self) -> int:
        return self.a.shape[0]

    def entry(self, i: int, j: int) -> Quaternion:
        return Quaternion.from_pair(self.a[i, j], self.b[i, j])

    def __getitem__(self, key) -> Quaternion:
        i, j = key
        return self.entry(i, j)

    def rows(self) -> list[list[Quaternion]]:
        n = self.dimension
        return [[self.entry(i, j) for j in range(n)] for i in range(n)]

    def max_abs(self) -> float:
        """Largest entry magnitude (the max norm used for entrywise checks)."""
        return _cpair.max_abs(self.a, self.b)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QOperator):
            return NotImplemented
        self._check_dim(other)
        return QOperator(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        if not isinstance(other, QOperator):
            return NotImplemented
        self._check_dim(other)
        return QOperator(self.a - other.a, self.b - other.b)

    def __neg__(self):
        return QOperator(-self.a, -self.b)

    def __mul__(self, scalar):
        if isinstance(scalar, numbers.Real):
            return QOperator(self.a * scalar, self.b * scalar)
        return NotImplemented

    __rmul__ = __mul__

    def __matmul__(self, other):
        """Operator composition: (A @ B)(f) = A(B(f))."""
        if not isinstance(other, QOperator):
            return NotImplemented
        self._check_dim(other)
        # row action composes through the matrix product in reverse order
        return QOperator(*_cpair.matmul(other.a, other.b, self.a, self.b))

    def _check_dim(self, other):
        if self.dimension != other.dimension:
            raise DimensionMismatch(
                f"operator dimensions differ: {self.dimension} vs {other.dimension}")

    # -- action and adjoint ----------------------------------------------------

    def apply(self, f: QVector) -> QVector:
        if f.dimension != self.dimension:
            raise DimensionMismatch(
                f"vector dimension {f.dimension} does not match operator {self.dimension}")
        a, b = _cpair.matmul(f.a[None, :], f.b[None, :], self.a, self.b)
        return QVector(a[0], b[0])

    def adjoint(self) -> "QOperator":
        """Conjugate transpose; satisfies <psi|T phi> = <adj(T) psi|phi>."""
        return QOperator(*_cpair.herm_t(self.a, self.b))

    # -- predicates --------------------------------------------------------------

    def is_self_adjoint(self, tol: float = DEFAULT_TOL) -> bool:
        ha, hb = _cpair.herm_t(self.a, self.b)
        return _cpair.max_abs(self.a - ha, self.b - hb) <= tol

    def is_positive(self, tol: float = DEFAULT_TOL) -> bool:
        """Self-adjoint with spectrum bounded below by -tol."""
        if not self.is_self_adjoint(tol):
            return False
        return float(embed.spectrum_self_adjoint(self)[0]) >= -tol

    def in_gl(self, tol: float = DEFAULT_TOL) -> bool:
        """Invertible with margin: smallest singular value above tol."""
        return float(embed.singular_values(self)[-1]) > tol

    def in_gl_plus(self, tol: float = DEFAULT_TOL) -> bool:
        return self.in_gl(tol) and self.is_positive(tol)

    # -- inverse, square root, norm ------------------------------------------------

    def inverse(self) -> "QOperator":
        """Gauss-Jordan elimination with quaternionic pivots.

        Rows are rescaled by left division with the pivot; the pivot
        threshold scales with the largest entry magnitude, so Singular is
        raised exactly when the kernel is nontrivial at working precision.
        """
        n = self.dimension
        work = self.rows()
        for i in range(n):
            work[i].extend(Quaternion(1.0 if j == i else 0.0) for j in range(n))
        pivot_tol = PIVOT_RTOL * self.max_abs()
        for col in range(n):
            pivot_row = max(range(col, n), key=lambda r: work[r][col].norm_sq())
            pivot = work[pivot_row][col]
            if abs(pivot) <= pivot_tol:
                raise Singular(f"no pivot in column {col}: operator not invertible")
            work[col], work[pivot_row] = work[pivot_row], work[col]
            inv_pivot = pivot.inverse()
            work[col] = [inv_pivot * entry for entry in work[col]]
            for r in range(n):
                if r == col:
                    continue
                factor = work[r][col]
                if factor.norm_sq() == 0.0:
                    continue
                row = work[r]
                lead = work[col]
                work[r] = [row[j] - factor * lead[j] for j in range(2 * n)]
        return QOperator.from_quaternions([row[n:] for row in work])

    def sqrt_psd(self, tol: float = DEFAULT_TOL) -> "QOperator":
        """The unique positive square root of a positive operator.

        Computed spectrally on the complex image and pulled back; the
        pullback must retain the quaternionic block symmetry, which is
        re-checked to catch convention bugs.
        """
        if not self.is_positive(tol):
            raise NotPositive("square root requires a positive operator")
        x = _cpair.chi(self.a, self.b)
        x = (x + x.conj().T) / 2.0
        values, vectors = np.linalg.eigh(x)
        values = np.clip(values, 0.0, None)
        top = values.max(initial=0.0)
        # exact zeros keep degenerate kernel pairs symmetric under sqrt
        values[values < top * 1e-12] = 0.0
        root = (vectors * np.sqrt(values)) @ vectors.conj().T
        root = (root + root.conj().T) / 2.0
        a, b, residual = _cpair.unchi(root)
        scale = float(np.abs(root).max()) if root.size else 0.0
        if residual > 1e-6 * (1.0 + scale):
            raise ArithmeticError(
                f"square root left the quaternionic subalgebra (residual {residual:.3e})")
        return QOperator(*_cpair.hermitize(a, b))

    def op_norm(self) -> float:
        """Largest singular value; for self-adjoint T the max |spectral value|."""
        return float(embed.singular_values(self)[0])

    # -- comparisons ------------------------------------------------------------------

    def isclose(self, other: "QOperator", tol: float = DEFAULT_TOL) -> bool:
        if not isinstance(other, QOperator) or other.dimension != self.dimension:
            return False
        return _cpair.max_abs(self.a - other.a, self.b - other.b) <= tol

    def __eq__(self, other):
        if not isinstance(other, QOperator):
            return NotImplemented
        return (self.dimension == other.dimension
                and bool(np.array_equal(self.a, other.a))
                and bool(np.array_equal(self.b, other.b)))

    __hash__ = None

    def __repr__(self):
        return f"QOperator(dimension={self.dimension})"


def commutator_norm(s: QOperator, t: QOperator) -> float:
    """Operator norm of ST - TS."""
    return (s @ t - t @ s).op_norm()


@dataclass(frozen=True)
class GLPlusConsistency:
    """Cross-checks tying together the equivalent descriptions of a
    positive invertible operator: two-sided spectral bounds on the
    quadratic form, the same bounds for the square root's norm, and a
    self-adjoint invertible square root that squares back.
    """

    in_gl_plus: bool
    lower: float
    upper: float
    quad_form_residual: float
    root_norm_residual: float
    root_in_gl: bool
    root_self_adjoint_residual: float
    root_square_residual: float

    def max_residual(self) -> float:
        return max(self.quad_form_residual, self.root_norm_residual,
                   self.root_self_adjoint_residual, self.root_square_residual)

    def consistent(self, tol: float = 1e-9) -> bool:
        return self.in_gl_plus and self.root_in_gl and self.max_residual() <= tol


def positive_invertible_consistency(op: QOperator, samples: int = 128,
                                    rng=None, tol: float = DEFAULT_TOL) -> GLPlusConsistency:
    """Evaluate the equivalent characterisations of membership in GL+ on
    one operator, reporting worst-case relative residuals over sampled
    vectors."""
    if rng is None:
        rng = np.random.default_rng(0)
    in_plus = op.in_gl_plus(tol)
    spectrum = embed.spectrum_self_adjoint(op) if op.is_self_adjoint(1e-8 * (1 + op.max_abs())) \
        else np.array([np.nan])
    lower = float(spectrum[0])
    upper = float(spectrum[-1])
    root = op.sqrt_psd(tol) if in_plus else None

    quad_res = 0.0
    root_norm_res = 0.0
    if in_plus:
        n = op.dimension
        for _ in range(samples):
            f = QVector.from_real_array(rng.uniform(-1.0, 1.0, size=(n, 4)))
            nf2 = f.norm_sq()
            if nf2 < 1e-12:
                continue
            form = f.inner(op.apply(f)).w
            slack = max(lower * nf2 - form, form - upper * nf2, 0.0)
            quad_res = max(quad_res, slack / (upper * nf2))
            rooted = root.apply(f).norm_sq()
            slack = max(lower * nf2 - rooted, rooted - upper * nf2, 0.0)
            root_norm_res = max(root_norm_res, slack / (upper * nf2))

    sq_res = 0.0
    sa_res = 0.0
    root_in_gl = False
    if root is not None:
        scale = 1.0 + op.max_abs()
        sq_res = ((root @ root) - op).max_abs() / scale
        sa_res = (root - root.adjoint()).max_abs() / (1.0 + root.max_abs())
        root_in_gl = root.in_gl(tol)

    return GLPlusConsistency(
        in_gl_plus=in_plus, lower=lower, upper=upper,
        quad_form_residual=quad_res, root_norm_residual=root_norm_res,
        root_in_gl=root_in_gl, root_self_adjoint_residual=sa_res,
        root_square_residual=sq_res)


# -- text format -------------------------------------------------------------
#
# First line "n n"; then n lines of 4n reals.  File row index = input
# component j, column index = output component i, matching the row action.

def format_operator(op: QOperator) -> str:
    n = op.dimension
    lines = [f"{n} {n}"]
    parts = _cpair.to_real_components(op.a, op.b)
    for i in range(n):
        lines.append(" ".join(format_real(c) for c in parts[i].ravel()))
    return "\n".join(lines) + "\n"


def write_operator(op: QOperator, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_operator(op))


def parse_operator(text: str, path=None) -> QOperator:
    data = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        data.append((lineno, stripped))
    if not data:
        raise ParseError("empty operator file", path)
    lineno, header = data[0]
    fields = header.split()
    if len(fields) != 2:
        raise ParseError("header must be 'n n'", path, lineno)
    try:
        rows, cols = int(fields[0]), int(fields[1])
    except ValueError:
        raise ParseError("header must be 'n n'", path, lineno) from None
    if rows != cols or rows < 1:
        raise ParseError(f"expected a square operator, got {rows} x {cols}", path, lineno)
    if len(data) - 1 != rows:
        raise ParseError(f"expected {rows} entry lines, found {len(data) - 1}", path, lineno)
    parts = np.empty((rows, cols, 4), dtype=np.float64)
    for i, (entry_line, content) in enumerate(data[1:]):
        values = parse_reals(content, path, entry_line)
        if len(values) != 4 * cols:
            raise ParseError(f"expected {4 * cols} reals, got {len(values)}",
                             path, entry_line)
        parts[i] = np.asarray(values).reshape(cols, 4)
    return QOperator.from_real_array(parts)


def read_operator(path) -> QOperator:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_operator(handle.read(), path)
