"""Frames in H^n: synthesis, analysis, frame operator, duals.

A finite family {phi_k} (k = 1..m) is a frame when there are constants
0 < A <= B with

    A |psi|^2 <= sum_k |<psi|phi_k>|^2 <= B |psi|^2   for every psi.

The synthesis map sends coefficients {q_k} to sum_k q_k phi_k, analysis
sends psi to {<psi|phi_k>}, and their composition is the frame operator

    S psi = sum_k <psi|phi_k> phi_k,

always self-adjoint and positive; its spectral extremes are the optimal
frame bounds, and the family spans H^n exactly when the lower one is
positive.  The canonical dual {S^-1 phi_k} gives the reconstruction

    psi = sum_k <psi|S^-1 phi_k> phi_k = sum_k <psi|phi_k> S^-1 phi_k.

Frame files (".qhf") are text: line 1 is "n m", then m lines of 4n reals
(one vector per line); '#' lines are comments.  Values print with 17
significant digits, which round-trips float64 exactly.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from . import _cpair, embed
from .hilbert import DimensionMismatch, QVector
from .operator import QOperator
from .quaternion import ParseError, Quaternion, format_real, parse_reals

FRAME_TOL = 1e-10

# Coefficient sequences are plain lists of quaternions, one per frame vector.
CoefficientSeq = Sequence[Quaternion]


class NotAFrame(ValueError):
    """The family does not span: its lower frame bound is numerically zero."""


class Frame:
    """Finite indexed family of vectors with eagerly cached frame data.

    Construction computes the frame operator and its spectral extremes
    once; every downstream check needs them.  Families that fail to span
    are still representable (their lower bound is ~0 and is_frame() is
    False); only dual construction refuses them.
    """

    __slots__ = ("_fa", "_fb", "_operator", "_bounds")

    def __init__(self, vectors: Sequence[QVector]):
        if len(vectors) == 0:
            raise DimensionMismatch("a frame needs at least one vector")
        n = vectors[0].dimension
        for v in vectors:
            if v.dimension != n:
                raise DimensionMismatch("frame vectors must share one dimension")
        fa = np.stack([v.a for v in vectors])
        fb = np.stack([v.b for v in vectors])
        self._init_from_rows(fa, fb)

    @classmethod
    def _from_rows(cls, fa, fb) -> "Frame":
        frame = object.__new__(cls)
        frame._init_from_rows(np.ascontiguousarray(fa, dtype=np.complex128),
                              np.ascontiguousarray(fb, dtype=np.complex128))
        return frame

    def _init_from_rows(self, fa, fb):
        fa.setflags(write=False)
        fb.setflags(write=False)
        object.__setattr__(self, "_fa", fa)
        object.__setattr__(self, "_fb", fb)
        ha, hb = _cpair.herm_t(fa, fb)
        sa, sb = _cpair.matmul(ha, hb, fa, fb)
        op = QOperator(*_cpair.hermitize(sa, sb))
        object.__setattr__(self, "_operator", op)
        spectrum = embed.spectrum_self_adjoint(op)
        object.__setattr__(self, "_bounds", (float(spectrum[0]), float(spectrum[-1])))

    def __setattr__(self, name, value):
        raise AttributeError("Frame is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_real_array(cls, parts) -> "Frame":
        """Build from an (m, n, 4) array of components."""
        fa, fb = _cpair.from_real_components(np.asarray(parts, dtype=np.float64))
        if fa.ndim != 2:
            raise DimensionMismatch("expected an (m, n, 4) component array")
        return cls._from_rows(fa, fb)

    @classmethod
    def standard_basis(cls, n: int) -> "Frame":
        return cls._from_rows(np.eye(n, dtype=np.complex128),
                              np.zeros((n, n), dtype=np.complex128))

    # -- structure ------------------------------------------------------------

    @property
    def dimension(self) -> int:
        return self._fa.shape[1]

    def __len__(self):
        return self._fa.shape[0]

    @property
    def vectors(self) -> tuple[QVector, ...]:
        return tuple(QVector(self._fa[k], self._fb[k]) for k in range(len(self)))

    def __getitem__(self, k: int) -> QVector:
        return QVector(self._fa[k], self._fb[k])

    @property
    def arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """The (m, n) complex-pair synthesis rows."""
        return self._fa, self._fb

    @property
    def operator(self) -> QOperator:
        """The cached frame operator S."""
        return self._operator

    @property
    def bounds(self) -> tuple[float, float]:
        """Optimal (lower, upper) frame bounds: spectral extremes of S."""
        return self._bounds

    @property
    def lower_bound(self) -> float:
        return self._bounds[0]

    @property
    def upper_bound(self) -> float:
        return self._bounds[1]

    def is_frame(self, tol: float = FRAME_TOL) -> bool:
        return self._bounds[0] > tol

    def is_normalized(self, tol: float = FRAME_TOL) -> bool:
        """Whether every frame vector has unit norm."""
        norms = _cpair.abs2(self._fa, self._fb).sum(axis=1)
        return bool(np.abs(norms - 1.0).max() <= tol)

    # -- the three frame maps ----------------------------------------------------

    def synthesis(self, coefficients: CoefficientSeq) -> QVector:
        """sum_k q_k phi_k with left scalars."""
        if len(coefficients) != len(self):
            raise DimensionMismatch(
                f"expected {len(self)} coefficients, got {len(coefficients)}")
        pairs = [q.to_pair() if isinstance(q, Quaternion) else Quaternion(q).to_pair()
                 for q in coefficients]
        ca = np.array([p[0] for p in pairs], dtype=np.complex128)[None, :]
        cb = np.array([p[1] for p in pairs], dtype=np.complex128)[None, :]
        out_a, out_b = _cpair.matmul(ca, cb, self._fa, self._fb)
        return QVector(out_a[0], out_b[0])

    def analysis(self, psi: QVector) -> list[Quaternion]:
        """{<psi|phi_k>}_k as a coefficient sequence."""
        ca, cb = self.coefficient_arrays(psi.a[None, :], psi.b[None, :])
        return [Quaternion.from_pair(ca[0, k], cb[0, k]) for k in range(len(self))]

    def coefficient_arrays(self, psi_a, psi_b):
        """Batched analysis: rows of psi pairs -> rows of coefficients."""
        if psi_a.shape[-1] != self.dimension:
            raise DimensionMismatch(
                f"vector dimension {psi_a.shape[-1]} does not match frame {self.dimension}")
        ha, hb = _cpair.herm_t(self._fa, self._fb)
        return _cpair.matmul(psi_a, psi_b, ha, hb)

    # -- duals ----------------------------------------------------------------------

    def canonical_dual(self, tol: float = FRAME_TOL) -> "Frame":
        """The dual family {S^-1 phi_k}; its frame operator is S^-1."""
        if not self.is_frame(tol):
            raise NotAFrame(
                f"lower frame bound {self._bounds[0]:.3e} is not above {tol:.1e}")
        inv = self._operator.inverse()
        da, db = _cpair.matmul(self._fa, self._fb, inv.a, inv.b)
        return Frame._from_rows(da, db)

    def scaled(self, factors) -> "Frame":
        """The family {c_k phi_k} for real factors c_k."""
        factors = np.asarray(factors, dtype=np.float64)
        if factors.shape != (len(self),):
            raise DimensionMismatch(
                f"expected {len(self)} scale factors, got {factors.shape}")
        return Frame._from_rows(self._fa * factors[:, None], self._fb * factors[:, None])

    # -- comparisons -------------------------------------------------------------------

    def isclose(self, other: "Frame", tol: float = FRAME_TOL) -> bool:
        if len(other) != len(self) or other.dimension != self.dimension:
            return False
        oa, ob = other.arrays
        return _cpair.max_abs(self._fa - oa, self._fb - ob) <= tol

    def __eq__(self, other):
        if not isinstance(other, Frame):
            return NotImplemented
        oa, ob = other.arrays
        return (len(self) == len(other) and self.dimension == other.dimension
                and bool(np.array_equal(self._fa, oa))
                and bool(np.array_equal(self._fb, ob)))

    __hash__ = None

    def __repr__(self):
        return f"Frame(dimension={self.dimension}, size={len(self)})"


# -- functional aliases --------------------------------------------------------

def synthesis(frame: Frame, coefficients: CoefficientSeq) -> QVector:
    return frame.synthesis(coefficients)


def analysis(frame: Frame, psi: QVector) -> list[Quaternion]:
    return frame.analysis(psi)


def frame_operator(frame: Frame) -> QOperator:
    return frame.operator


def optimal_bounds(frame: Frame) -> tuple[float, float]:
    return frame.bounds


def canonical_dual(frame: Frame) -> Frame:
    return frame.canonical_dual()


# -- .qhf text format ------------------------------------------------------------

def format_frame(frame: Frame) -> str:
    fa, fb = frame.arrays
    parts = _cpair.to_real_components(fa, fb)
    lines = [f"{frame.dimension} {len(frame)}"]
    for k in range(len(frame)):
        lines.append(" ".join(format_real(c) for c in parts[k].ravel()))
    return "\n".join(lines) + "\n"


def write_frame(frame: Frame, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_frame(frame))


def parse_frame(text: str, path=None) -> Frame:
    data = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        data.append((lineno, stripped))
    if not data:
        raise ParseError("empty frame file", path)
    lineno, header = data[0]
    fields = header.split()
    if len(fields) != 2:
        raise ParseError("header must be 'n m'", path, lineno)
    try:
        n, m = int(fields[0]), int(fields[1])
    except ValueError:
        raise ParseError("header must be 'n m'", path, lineno) from None
    if n < 1 or m < 1:
        raise ParseError(f"dimensions must be positive, got n={n} m={m}", path, lineno)
    if len(data) - 1 != m:
        raise ParseError(f"expected {m} vector lines, found {len(data) - 1}", path, lineno)
    parts = np.empty((m, n, 4), dtype=np.float64)
    for k, (vec_line, content) in enumerate(data[1:]):
        values = parse_reals(content, path, vec_line)
        if len(values) != 4 * n:
            raise ParseError(f"expected {4 * n} reals, got {len(values)}", path, vec_line)
        parts[k] = np.asarray(values).reshape(n, 4)
    return Frame.from_real_array(parts)


def read_frame(path) -> Frame:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_frame(handle.read(), path)
