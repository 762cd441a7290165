"""Frames, controlled frames and frame multipliers on finite-dimensional
left quaternionic Hilbert spaces, with a randomized verification harness."""

from .quaternion import (Quaternion, ParseError, format_quaternion,
                         format_real, parse_quaternion)
from .hilbert import (QVector, DimensionMismatch, inner, norm, left_scale,
                      format_vector, parse_vector, read_vector)
from .operator import (QOperator, Singular, NotPositive, GLPlusConsistency,
                       commutator_norm, positive_invertible_consistency,
                       read_operator, write_operator)
from .embed import (PairingFailure, to_complex, from_complex,
                    spectrum_self_adjoint, eig_self_adjoint, singular_values)
from .frames import (Frame, NotAFrame, CoefficientSeq, synthesis, analysis,
                     frame_operator, optimal_bounds, canonical_dual,
                     read_frame, write_frame, format_frame)
from .controlled import (ControlledCheck, ControlledIdentityReport,
                         ControlledEquivalence, ControllerNotInGL,
                         NotSelfAdjoint, controlled_frame_operator,
                         check_controlled, verify_controlled_identities,
                         verify_controlled_equivalence, commuting_positive,
                         random_commuting_positive,
                         random_noncommuting_positive)
from .multiplier import (Symbol, CardinalityMismatch, NonPositiveWeights,
                         MixedSignSymbol, WeightedFrameBounds,
                         is_semi_normalized, weighted_frame_bounds,
                         multiplier_apply, multiplier_operator,
                         verify_scaled_frame_bounds,
                         verify_multiplier_frame_operator,
                         verify_weighted_frame_equivalence,
                         verify_diagonal_controller_multiplier, read_symbol)
from .harness import (TrialConfig, StatementRecord, VerificationReport,
                      GenerationExhausted, SUITES, gen_frame, run_suite,
                      run_trial, run_verification, merge_reports, trial_seed)

__version__ = "0.1.0"

__all__ = [
    "Quaternion", "ParseError", "format_quaternion", "format_real",
    "parse_quaternion",
    "QVector", "DimensionMismatch", "inner", "norm", "left_scale",
    "format_vector", "parse_vector", "read_vector",
    "QOperator", "Singular", "NotPositive", "GLPlusConsistency",
    "commutator_norm", "positive_invertible_consistency",
    "read_operator", "write_operator",
    "PairingFailure", "to_complex", "from_complex", "spectrum_self_adjoint",
    "eig_self_adjoint", "singular_values",
    "Frame", "NotAFrame", "CoefficientSeq", "synthesis", "analysis",
    "frame_operator", "optimal_bounds", "canonical_dual", "read_frame",
    "write_frame", "format_frame",
    "ControlledCheck", "ControlledIdentityReport", "ControlledEquivalence",
    "ControllerNotInGL", "NotSelfAdjoint", "controlled_frame_operator",
    "check_controlled", "verify_controlled_identities",
    "verify_controlled_equivalence", "commuting_positive",
    "random_commuting_positive", "random_noncommuting_positive",
    "Symbol", "CardinalityMismatch", "NonPositiveWeights", "MixedSignSymbol",
    "WeightedFrameBounds", "is_semi_normalized", "weighted_frame_bounds",
    "multiplier_apply", "multiplier_operator", "verify_scaled_frame_bounds",
    "verify_multiplier_frame_operator", "verify_weighted_frame_equivalence",
    "verify_diagonal_controller_multiplier", "read_symbol",
    "TrialConfig", "StatementRecord", "VerificationReport",
    "GenerationExhausted", "SUITES", "gen_frame", "run_suite", "run_trial",
    "run_verification", "merge_reports", "trial_seed",
]
