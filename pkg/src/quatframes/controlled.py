"""Controlled frames: frame families filtered through an invertible operator.

For an invertible controller C, a family {phi_k} is a C-controlled frame
when the mixed quadratic form

    sum_k <psi|phi_k> <C phi_k|psi>

is pinched between positive multiples of |psi|^2.  The associated
controlled frame operator is

    S_C psi = sum_k <psi|phi_k> C phi_k = C(S psi),

and the pinching holds exactly when S_C is positive and invertible.  Two
consequences are checked here on concrete instances: every controlled
family is already a frame with C S = S adj(C), and for self-adjoint C the
controlled property is equivalent to "frame + C positive + C commutes
with S".
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _cpair, embed
from .frames import FRAME_TOL, Frame
from .hilbert import DimensionMismatch
from .operator import QOperator


class ControllerNotInGL(ValueError):
    """The controller is not invertible with margin."""


class NotSelfAdjoint(ValueError):
    """The controller must be self-adjoint for this equivalence."""


def _default_rng():
    return np.random.default_rng(0x5EED)


def _sample_rows(rng, count, n):
    parts = rng.uniform(-1.0, 1.0, size=(count, n, 4))
    a, b = _cpair.from_real_components(parts)
    for _ in range(8):  # redraw pathologically small rows
        small = _cpair.abs2(a, b).sum(axis=1) < 1e-4
        if not small.any():
            break
        ra, rb = _cpair.from_real_components(
            rng.uniform(-1.0, 1.0, size=(int(small.sum()), n, 4)))
        a, b = a.copy(), b.copy()
        a[small], b[small] = ra, rb
    return a, b


def controlled_frame_operator(frame: Frame, controller: QOperator) -> QOperator:
    """S_C = C composed after the frame operator."""
    if controller.dimension != frame.dimension:
        raise DimensionMismatch(
            f"controller dimension {controller.dimension} does not match frame "
            f"{frame.dimension}")
    return controller @ frame.operator


@dataclass(frozen=True)
class ControlledCheck:
    """Outcome of the controlled-frame test for one (frame, controller) pair."""

    is_controlled: bool
    lower: float
    upper: float
    sum_is_real: bool
    max_imag: float          # worst imaginary magnitude of the sum, / |psi|^2
    bound_violation: float   # worst escape of the sum from [A, B] |psi|^2, relative


def check_controlled(frame: Frame, controller: QOperator, tol: float = 1e-9,
                     samples: int = 64, rng=None) -> ControlledCheck:
    """Decide whether the family is controlled by the operator.

    The verdict is spectral (S_C positive and invertible with margin tol);
    the defining sum is additionally sampled on random vectors and must be
    real and inside the reported bounds.
    """
    if not controller.in_gl(tol):
        raise ControllerNotInGL("controller must be invertible with margin")
    if rng is None:
        rng = _default_rng()
    s_c = controlled_frame_operator(frame, controller)
    controlled = s_c.in_gl_plus(tol)
    if controlled:
        spectrum = embed.spectrum_self_adjoint(s_c)
        lower, upper = float(spectrum[0]), float(spectrum[-1])
    else:
        sv = embed.singular_values(s_c)
        lower, upper = float(sv[-1]), float(sv[0])

    psi_a, psi_b = _sample_rows(rng, samples, frame.dimension)
    (sum_a, sum_b), norms2 = _controlled_sums(frame, controller, psi_a, psi_b)
    imag_mag = np.sqrt(sum_a.imag ** 2 + sum_b.real ** 2 + sum_b.imag ** 2)
    max_imag = float((imag_mag / norms2).max())
    violation = 0.0
    if controlled:
        values = sum_a.real
        slack = np.maximum(lower * norms2 - values, values - upper * norms2)
        violation = float((np.maximum(slack, 0.0) / (norms2 * max(upper, 1e-30))).max())
    return ControlledCheck(is_controlled=controlled, lower=lower, upper=upper,
                           sum_is_real=max_imag <= tol, max_imag=max_imag,
                           bound_violation=violation)


def _controlled_sums(frame, controller, psi_a, psi_b):
    """sum_k <psi|phi_k><C phi_k|psi> per sampled row, with |psi|^2."""
    fa, fb = frame.arrays
    cfa, cfb = _cpair.matmul(fa, fb, controller.a, controller.b)  # rows C phi_k
    coef_a, coef_b = frame.coefficient_arrays(psi_a, psi_b)       # <psi|phi_k>
    ha, hb = _cpair.herm_t(cfa, cfb)
    mixed_a, mixed_b = _cpair.matmul(psi_a, psi_b, ha, hb)        # <psi|C phi_k>
    mixed_a, mixed_b = _cpair.conj(mixed_a, mixed_b)              # <C phi_k|psi>
    prod_a, prod_b = _cpair.mul(coef_a, coef_b, mixed_a, mixed_b)
    norms2 = _cpair.abs2(psi_a, psi_b).sum(axis=1)
    return (prod_a.sum(axis=1), prod_b.sum(axis=1)), norms2


@dataclass(frozen=True)
class ControlledIdentityReport:
    """Residuals for the structural identities of a controlled family."""

    is_frame: bool
    frame_lower_bound: float
    operator_identity_residual: float   # |C S - S adj(C)| / |S|, operator norms
    sum_identity_residual: float        # the two rewritings of S_C psi, relative
    recovery_residual: float            # |C^-1 S_C - S| / |S|

    def max_residual(self) -> float:
        return max(self.operator_identity_residual, self.sum_identity_residual,
                   self.recovery_residual)

    def passed(self, tol: float = 1e-9) -> bool:
        return self.is_frame and self.max_residual() <= tol


def verify_controlled_identities(frame: Frame, controller: QOperator,
                                 samples: int = 64, rng=None,
                                 tol: float = FRAME_TOL) -> ControlledIdentityReport:
    """Measure, on one instance, the identities every controlled frame obeys:
    the base family spans, C S = S adj(C), the two expansions of S_C agree,
    and C^-1 S_C recovers the frame operator."""
    if rng is None:
        rng = _default_rng()
    s = frame.operator
    s_norm = s.op_norm()
    s_c = controlled_frame_operator(frame, controller)

    op_res = ((controller @ s) - (s @ controller.adjoint())).op_norm() / max(s_norm, 1e-30)
    recovery = ((controller.inverse() @ s_c) - s).op_norm() / max(s_norm, 1e-30)

    fa, fb = frame.arrays
    cfa, cfb = _cpair.matmul(fa, fb, controller.a, controller.b)  # rows C phi_k
    psi_a, psi_b = _sample_rows(rng, samples, frame.dimension)
    coef_a, coef_b = frame.coefficient_arrays(psi_a, psi_b)
    # sum_k <psi|phi_k> C phi_k
    lhs_a, lhs_b = _cpair.matmul(coef_a, coef_b, cfa, cfb)
    # sum_k <psi|C phi_k> phi_k
    ha, hb = _cpair.herm_t(cfa, cfb)
    ccoef_a, ccoef_b = _cpair.matmul(psi_a, psi_b, ha, hb)
    rhs_a, rhs_b = _cpair.matmul(ccoef_a, ccoef_b, fa, fb)
    diff = np.sqrt(_cpair.abs2(lhs_a - rhs_a, lhs_b - rhs_b).sum(axis=1))
    scale = 1.0 + np.sqrt(np.maximum(_cpair.abs2(lhs_a, lhs_b).sum(axis=1),
                                     _cpair.abs2(rhs_a, rhs_b).sum(axis=1)))
    sum_res = float((diff / scale).max())

    return ControlledIdentityReport(
        is_frame=frame.is_frame(tol), frame_lower_bound=frame.lower_bound,
        operator_identity_residual=op_res, sum_identity_residual=sum_res,
        recovery_residual=recovery)


@dataclass(frozen=True)
class ControlledEquivalence:
    """Both directions of the self-adjoint controller equivalence."""

    is_controlled: bool
    is_frame: bool
    controller_positive: bool
    commutation_residual: float
    commutes: bool
    forward: bool    # controlled  =>  frame and positive and commuting
    backward: bool   # frame and positive and commuting  =>  controlled

    def consistent(self) -> bool:
        return self.forward and self.backward


def verify_controlled_equivalence(frame: Frame, controller: QOperator,
                                  tol: float = 1e-9, samples: int = 64,
                                  rng=None) -> ControlledEquivalence:
    """Evaluate independently, for a self-adjoint controller, whether the
    family is controlled and whether it is a frame with a positive
    commuting controller; both implications are reported."""
    if not controller.is_self_adjoint(max(tol, 1e-10)):
        raise NotSelfAdjoint("the equivalence requires a self-adjoint controller")
    check = check_controlled(frame, controller, tol=tol, samples=samples, rng=rng)
    s = frame.operator
    comm = ((controller @ s) - (s @ controller)).op_norm() / max(s.op_norm(), 1e-30)
    commutes = comm <= tol
    positive = controller.is_positive(tol)
    framed = frame.is_frame(max(tol, FRAME_TOL))
    hypothesis = framed and positive and commutes
    return ControlledEquivalence(
        is_controlled=check.is_controlled, is_frame=framed,
        controller_positive=positive, commutation_residual=comm,
        commutes=commutes,
        forward=(not check.is_controlled) or hypothesis,
        backward=(not hypothesis) or check.is_controlled)


def commuting_positive(frame: Frame, coefficients) -> QOperator:
    """c0 I + c1 S + c2 S^2: self-adjoint, commutes with S, positive for
    nonnegative coefficients (not all zero) on a frame."""
    c0, c1, c2 = (float(c) for c in coefficients)
    s = frame.operator
    n = frame.dimension
    return (c0 * QOperator.identity(n)) + (c1 * s) + (c2 * (s @ s))


def random_commuting_positive(frame: Frame, seed: int) -> QOperator:
    """Random positive polynomial in the frame operator; coefficients are
    drawn uniformly from [0.1, 2.0]."""
    rng = np.random.default_rng(seed)
    return commuting_positive(frame, rng.uniform(0.1, 2.0, size=3))


def random_noncommuting_positive(frame: Frame, seed: int,
                                 min_gap: float = 1e-3,
                                 attempts: int = 64) -> QOperator:
    """Random positive operator that visibly fails to commute with the
    frame operator; used to exercise the necessity direction of the
    controlled-frame equivalence.  Needs dimension >= 2."""
    n = frame.dimension
    if n < 2:
        raise ValueError("no noncommuting positive operator exists in dimension 1")
    rng = np.random.default_rng(seed)
    s = frame.operator
    scale = max(s.op_norm(), 1e-30)
    for _ in range(attempts):
        candidate = QOperator.diagonal(rng.uniform(0.5, 2.0, size=n))
        if ((candidate @ s) - (s @ candidate)).op_norm() / scale >= min_gap:
            return candidate
        # diagonal candidates commute when S is nearly diagonal; mix instead
        g = QOperator.from_real_array(rng.uniform(-1.0, 1.0, size=(n, n, 4)))
        candidate = (g.adjoint() @ g) + (0.1 * QOperator.identity(n))
        if ((candidate @ s) - (s @ candidate)).op_norm() / scale >= min_gap:
            return candidate
    raise RuntimeError("could not find a noncommuting positive operator")
