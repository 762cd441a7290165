"""Weighted frames and frame multipliers.

A symbol m = {m_k} turns a pair of equal-size frames Phi = {phi_k} and
Psi = {psi_k} into the multiplier

    M(h) = sum_k m_k <h|psi_k> phi_k,

with the symbol multiplying from the left.  Weights are real by default;
the quaternion-valued variant is supported in the apply path only, since
left multiplication by a non-real quaternion is not left linear and hence
has no matrix in the row-action convention.

For a single frame and a positive semi-normalized symbol the multiplier
is exactly the frame operator of {sqrt(m_k) phi_k}, giving positivity,
self-adjointness and invertibility; negative symbols flip the sign.

Symbol files hold one real per line; '#' lines are comments.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _cpair
from .frames import FRAME_TOL, Frame
from .hilbert import DimensionMismatch, QVector
from .operator import QOperator
from .quaternion import ParseError, Quaternion


class CardinalityMismatch(ValueError):
    """Index sets of the two families (or the symbol) differ in size."""


class NonPositiveWeights(ValueError):
    """Weight sequences must be strictly positive."""


class MixedSignSymbol(ValueError):
    """The symbol must be of one strict sign for this identity."""


@dataclass(frozen=True)
class Symbol:
    """A finite multiplier symbol; real-valued unless flagged quaternionic."""

    values: tuple = ()
    quaternionic: bool = False

    def __init__(self, values, quaternionic: bool | None = None):
        values = tuple(values)
        if quaternionic is None:
            quaternionic = any(isinstance(v, Quaternion) for v in values)
        if quaternionic:
            values = tuple(v if isinstance(v, Quaternion) else Quaternion(v)
                           for v in values)
        else:
            values = tuple(float(v) for v in values)
        if not values:
            raise CardinalityMismatch("a symbol needs at least one entry")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "quaternionic", bool(quaternionic))

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, k):
        return self.values[k]

    def array(self) -> np.ndarray:
        if self.quaternionic:
            raise TypeError("quaternionic symbol has no real array form")
        return np.asarray(self.values, dtype=np.float64)

    def magnitudes(self) -> np.ndarray:
        if self.quaternionic:
            return np.asarray([abs(v) for v in self.values])
        return np.abs(self.array())

    def is_positive(self) -> bool:
        return not self.quaternionic and bool((self.array() > 0.0).all())

    def is_negative(self) -> bool:
        return not self.quaternionic and bool((self.array() < 0.0).all())

    def semi_normalized_bounds(self) -> tuple[float, float] | None:
        """Tightest (a, b) with a <= |m_k| <= b, or None when some |m_k| = 0."""
        mags = self.magnitudes()
        low = float(mags.min())
        if low <= 0.0:
            return None
        return low, float(mags.max())


def is_semi_normalized(symbol: Symbol) -> tuple[float, float] | None:
    return symbol.semi_normalized_bounds()


def _as_symbol(values) -> Symbol:
    return values if isinstance(values, Symbol) else Symbol(values)


def _check_cardinality(symbol: Symbol, frame: Frame):
    if len(symbol) != len(frame):
        raise CardinalityMismatch(
            f"symbol length {len(symbol)} does not match frame size {len(frame)}")


@dataclass(frozen=True)
class WeightedFrameBounds:
    lower: float
    upper: float
    is_weighted_frame: bool


def weighted_frame_bounds(frame: Frame, weights, tol: float = FRAME_TOL) -> WeightedFrameBounds:
    """Tight constants pinching sum_k w_k |<psi|phi_k>|^2, i.e. the optimal
    bounds of the rescaled family {sqrt(w_k) phi_k}."""
    weights = _as_symbol(weights)
    _check_cardinality(weights, frame)
    if not weights.is_positive():
        raise NonPositiveWeights("weights must be strictly positive reals")
    scaled = frame.scaled(np.sqrt(weights.array()))
    lower, upper = scaled.bounds
    return WeightedFrameBounds(lower=lower, upper=upper, is_weighted_frame=lower > tol)


def multiplier_apply(symbol, phi: Frame, psi: Frame, h: QVector) -> QVector:
    """M(h) = sum_k m_k <h|psi_k> phi_k; symbol entries act on the left."""
    symbol = _as_symbol(symbol)
    if len(phi) != len(psi):
        raise CardinalityMismatch(
            f"families differ in size: {len(phi)} vs {len(psi)}")
    _check_cardinality(symbol, phi)
    if h.dimension != psi.dimension:
        raise DimensionMismatch(
            f"vector dimension {h.dimension} does not match analysis frame "
            f"{psi.dimension}")
    coef_a, coef_b = psi.coefficient_arrays(h.a[None, :], h.b[None, :])
    if symbol.quaternionic:
        pairs = [q.to_pair() for q in symbol.values]
        ma = np.asarray([p[0] for p in pairs])[None, :]
        mb = np.asarray([p[1] for p in pairs])[None, :]
        coef_a, coef_b = _cpair.mul(ma, mb, coef_a, coef_b)
    else:
        weights = symbol.array()[None, :]
        coef_a = coef_a * weights
        coef_b = coef_b * weights
    fa, fb = phi.arrays
    out_a, out_b = _cpair.matmul(coef_a, coef_b, fa, fb)
    return QVector(out_a[0], out_b[0])


def multiplier_operator(symbol, phi: Frame, psi: Frame | None = None) -> QOperator:
    """Matrix realization of the multiplier for real symbols on equal spaces."""
    symbol = _as_symbol(symbol)
    if psi is None:
        psi = phi
    if len(phi) != len(psi):
        raise CardinalityMismatch(
            f"families differ in size: {len(phi)} vs {len(psi)}")
    _check_cardinality(symbol, phi)
    if symbol.quaternionic:
        raise ValueError("quaternionic symbols are not left linear; "
                         "use multiplier_apply")
    if phi.dimension != psi.dimension:
        raise DimensionMismatch(
            "matrix form needs both families in one space; "
            "use multiplier_apply for the rectangular map")
    pa, pb = psi.arrays
    ha, hb = _cpair.herm_t(pa, pb)
    weights = symbol.array()[None, :]
    sa, sb = _cpair.matmul(ha * weights, hb * weights, *phi.arrays)
    return QOperator(sa, sb)


@dataclass(frozen=True)
class ScaledFrameBoundsReport:
    """Bounds of {w_k phi_k} against the guaranteed window [a^2 A, b^2 B]."""

    weight_lower: float
    weight_upper: float
    base_lower: float
    base_upper: float
    scaled_lower: float
    scaled_upper: float
    contained: bool


def verify_scaled_frame_bounds(frame: Frame, weights, tol: float = 1e-9) -> ScaledFrameBoundsReport:
    """Rescaling a frame by a semi-normalized sequence keeps it a frame,
    with bounds inside [a^2 A, b^2 B]; the window is checked with relative
    slack tol."""
    weights = _as_symbol(weights)
    _check_cardinality(weights, frame)
    if weights.quaternionic:
        raise ValueError("the scaled-bounds check takes real weights")
    bounds = weights.semi_normalized_bounds()
    if bounds is None:
        raise ValueError("weights must be semi-normalized (no zero entries)")
    a, b = bounds
    base_lower, base_upper = frame.bounds
    scaled_lower, scaled_upper = frame.scaled(weights.array()).bounds
    floor = a * a * base_lower
    ceil = b * b * base_upper
    contained = (scaled_lower >= floor - tol * max(floor, 1.0)
                 and scaled_upper <= ceil + tol * max(ceil, 1.0))
    return ScaledFrameBoundsReport(
        weight_lower=a, weight_upper=b, base_lower=base_lower,
        base_upper=base_upper, scaled_lower=scaled_lower,
        scaled_upper=scaled_upper, contained=contained)


@dataclass(frozen=True)
class MultiplierFrameOperatorReport:
    """How the one-frame multiplier compares against +/- the frame operator
    of {sqrt(|m_k|) phi_k}."""

    sign: int
    match_residual: float           # |M -+ S_scaled| / scale, entrywise
    self_adjoint_residual: float
    definite: bool                  # positive for sign +1, negative for -1
    invertible: bool

    def passed(self, tol: float = 1e-10) -> bool:
        return (self.definite and self.invertible
                and max(self.match_residual, self.self_adjoint_residual) <= tol)


def verify_multiplier_frame_operator(frame: Frame, symbol) -> MultiplierFrameOperatorReport:
    """For a semi-normalized one-sign symbol, the multiplier equals
    sign(m) times the frame operator of {sqrt(|m_k|) phi_k} and inherits
    its definiteness and invertibility."""
    symbol = _as_symbol(symbol)
    _check_cardinality(symbol, frame)
    if symbol.quaternionic or not (symbol.is_positive() or symbol.is_negative()):
        raise MixedSignSymbol("symbol must be real with one strict sign")
    if symbol.semi_normalized_bounds() is None:
        raise MixedSignSymbol("symbol must be semi-normalized")
    sign = 1 if symbol.is_positive() else -1
    m_op = multiplier_operator(symbol, frame)
    rescaled = frame.scaled(np.sqrt(symbol.magnitudes()))
    reference = rescaled.operator if sign == 1 else -rescaled.operator
    scale = 1.0 + reference.max_abs()
    match = (m_op - reference).max_abs() / scale
    self_adjoint = (m_op - m_op.adjoint()).max_abs() / scale
    signed = m_op if sign == 1 else -m_op
    definite = signed.is_positive(FRAME_TOL)
    invertible = m_op.in_gl(FRAME_TOL)
    return MultiplierFrameOperatorReport(
        sign=sign, match_residual=match, self_adjoint_residual=self_adjoint,
        definite=definite, invertible=invertible)


@dataclass(frozen=True)
class WeightedFrameEquivalence:
    """Five descriptions of the same property, evaluated independently."""

    is_frame: bool                      # the family spans
    multiplier_positive_invertible: bool
    weighted_bounds_exist: bool
    sqrt_scaled_is_frame: bool          # {sqrt(w_k) phi_k}
    scaled_is_frame: bool               # {w_k phi_k}

    def conditions(self) -> tuple[bool, bool, bool, bool, bool]:
        return (self.is_frame, self.multiplier_positive_invertible,
                self.weighted_bounds_exist, self.sqrt_scaled_is_frame,
                self.scaled_is_frame)

    def all_agree(self) -> bool:
        values = self.conditions()
        return all(v == values[0] for v in values)


def verify_weighted_frame_equivalence(family: Frame, weights,
                                      tol: float = FRAME_TOL) -> WeightedFrameEquivalence:
    """Evaluate, each along its own spectral path, the five equivalent
    statements tying a family and a positive semi-normalized weight
    sequence together; they must agree even for non-spanning families."""
    weights = _as_symbol(weights)
    _check_cardinality(weights, family)
    if not weights.is_positive():
        raise NonPositiveWeights("weights must be strictly positive reals")
    if weights.semi_normalized_bounds() is None:
        raise ValueError("weights must be semi-normalized")
    w = weights.array()
    m_op = multiplier_operator(weights, family)
    return WeightedFrameEquivalence(
        is_frame=family.is_frame(tol),
        multiplier_positive_invertible=m_op.in_gl_plus(tol),
        weighted_bounds_exist=weighted_frame_bounds(family, weights, tol).is_weighted_frame,
        sqrt_scaled_is_frame=family.scaled(np.sqrt(w)).is_frame(tol),
        scaled_is_frame=family.scaled(w).is_frame(tol))


@dataclass(frozen=True)
class DiagonalControllerReport:
    """A diagonal controller on a repeated-basis frame, reconstructed as a
    dual-frame multiplier with its eigenvalue sequence as symbol."""

    weights: tuple[float, ...]
    weight_bounds: tuple[float, float]
    weights_positive: bool
    weights_in_eigenvalue_range: bool
    relation_residual: float        # |C phi_k - w_k phi_k| per vector, worst
    reconstruction_residual: float  # |C - M| / |C|, operator norm

    def passed(self, tol: float = 1e-9) -> bool:
        return (self.weights_positive and self.weights_in_eigenvalue_range
                and max(self.relation_residual, self.reconstruction_residual) <= tol)


def verify_diagonal_controller_multiplier(seed: int, dim: int | None = None) -> DiagonalControllerReport:
    """Build an eigen-compatible instance and check it: a positive diagonal
    controller acting on a frame of repeated basis vectors satisfies
    C phi_k = w_k phi_k with positive semi-normalized w, and equals the
    multiplier with symbol w, output family the canonical dual, input
    family the frame itself."""
    rng = np.random.default_rng(seed)
    n = int(dim) if dim is not None else int(rng.integers(2, 5))
    eigenvalues = rng.uniform(0.5, 3.0, size=n)
    repeats = rng.integers(1, 4, size=n)
    controller = QOperator.diagonal(eigenvalues)

    basis_index = [i for i in range(n) for _ in range(int(repeats[i]))]
    frame = Frame([QVector.basis(n, i) for i in basis_index])

    # extract the eigenvalue sequence from the relation C phi_k = w_k phi_k
    weights = []
    relation_residual = 0.0
    for vector in frame.vectors:
        image = controller.apply(vector)
        w_k = vector.inner(image).w / vector.norm_sq()
        weights.append(w_k)
        relation_residual = max(relation_residual,
                                (image - w_k * vector).norm() / vector.norm())
    symbol = Symbol(weights)
    bounds = symbol.semi_normalized_bounds() or (0.0, 0.0)
    in_range = bool(bounds[0] >= eigenvalues.min() - 1e-12
                    and bounds[1] <= eigenvalues.max() + 1e-12)

    dual = frame.canonical_dual()
    m_op = multiplier_operator(symbol, dual, frame)
    reconstruction = (m_op - controller).op_norm() / max(controller.op_norm(), 1e-30)

    return DiagonalControllerReport(
        weights=tuple(weights), weight_bounds=bounds,
        weights_positive=symbol.is_positive(),
        weights_in_eigenvalue_range=in_range,
        relation_residual=relation_residual,
        reconstruction_residual=reconstruction)


def read_symbol(path) -> Symbol:
    """One real per line; '#' lines and blanks ignored."""
    values = []
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            stripped = raw.strip()
            if not stripped or stripped.startswith("#"):
                continue
            try:
                values.append(float(stripped))
            except ValueError:
                raise ParseError(f"expected one real, got {stripped!r}",
                                 path, lineno) from None
    if not values:
        raise ParseError("no symbol entries found", path)
    return Symbol(values)
