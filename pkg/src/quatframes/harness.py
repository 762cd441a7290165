"""Deterministic randomized verification of the library's identities.

Each trial draws one instance (vectors, operators, a frame, controllers,
symbols) and measures a normalized residual per named statement; a
statement fails when its residual exceeds the run tolerance times a fixed
per-statement factor.  Residuals are relative to the natural scale of the
quantities involved, so tolerances are meaningful across instance sizes.

Seeding contract: the per-trial sub-seed is splitmix64 applied to
``master_seed + (trial + 1) * 0x9E3779B97F4A7C15`` (all mod 2^64), and
the in-trial generator is numpy's PCG64 seeded with that value.  Every
record stores the worst trial's sub-seed, dimension and vector count, so
any failure replays bit-for-bit with :func:`run_trial`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import Callable, Optional

import numpy as np

from . import _cpair, embed
from .controlled import (check_controlled, random_commuting_positive,
                         random_noncommuting_positive,
                         verify_controlled_equivalence,
                         verify_controlled_identities)
from .frames import Frame
from .hilbert import QVector
from .multiplier import (Symbol, verify_diagonal_controller_multiplier,
                         verify_multiplier_frame_operator,
                         verify_scaled_frame_bounds,
                         verify_weighted_frame_equivalence,
                         weighted_frame_bounds)
from .operator import QOperator
from .quaternion import Quaternion

SUITES = ("axioms", "frames", "controlled", "multipliers", "all")

# statements whose stated tolerance differs from the run tolerance
TOL_SCALE = {
    "frame.bounds_attained": 1e3,
    "frame.coefficient_energy": 0.1,
    "frame.double_dual": 10.0,
    "controlled.sum_real": 0.1,
    "multiplier.weighted_bounds_path": 1e-3,
    "multiplier.frame_operator_match": 0.1,
    "multiplier.negative_symbol_match": 0.1,
    "multiplier.real_symbol_self_adjoint": 0.1,
}

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class GenerationExhausted(RuntimeError):
    """The frame generator ran out of retries without a spanning family."""


@dataclass(frozen=True)
class TrialConfig:
    """Shape and budget of one verification run."""

    dim: int
    count: int
    trials: int
    master_seed: int
    tol: float = 1e-9
    samples: int = 64

    def __post_init__(self):
        if not 1 <= self.dim <= 8:
            raise ValueError(f"dim must be in [1, 8], got {self.dim}")
        if not self.dim <= self.count <= 24:
            raise ValueError(
                f"count must be in [{self.dim}, 24], got {self.count}")
        if self.trials < 1:
            raise ValueError("trials must be positive")
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.samples < 1:
            raise ValueError("samples must be positive")


def trial_seed(master_seed: int, trial: int) -> int:
    """splitmix64 mix of the master seed and the trial index."""
    x = (int(master_seed) + (int(trial) + 1) * _GAMMA) & _MASK64
    x ^= x >> 30
    x = (x * 0xBF58476D1CE4E5B9) & _MASK64
    x ^= x >> 27
    x = (x * 0x94D049BB133111EB) & _MASK64
    x ^= x >> 31
    return x


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


# -- instance generators ------------------------------------------------------

def random_quaternion(rng) -> Quaternion:
    return Quaternion(*rng.uniform(-1.0, 1.0, size=4))


def random_vector(rng, n: int) -> QVector:
    for _ in range(16):
        v = QVector.from_real_array(rng.uniform(-1.0, 1.0, size=(n, 4)))
        if v.norm_sq() > 1e-4:
            return v
    return v


def random_operator(rng, n: int) -> QOperator:
    return QOperator.from_real_array(rng.uniform(-1.0, 1.0, size=(n, n, 4)))


def _sample_rows(rng, count: int, n: int):
    a, b = _cpair.from_real_components(rng.uniform(-1.0, 1.0, size=(count, n, 4)))
    for _ in range(8):
        small = _cpair.abs2(a, b).sum(axis=1) < 1e-4
        if not small.any():
            break
        ra, rb = _cpair.from_real_components(
            rng.uniform(-1.0, 1.0, size=(int(small.sum()), n, 4)))
        a, b = a.copy(), b.copy()
        a[small], b[small] = ra, rb
    return a, b


def _random_frame(rng, n: int, m: int, min_lower: float = 1e-6,
                  retries: int = 16) -> Frame:
    candidate = None
    for _ in range(retries):
        candidate = Frame.from_real_array(rng.uniform(-1.0, 1.0, size=(m, n, 4)))
        if candidate.lower_bound > min_lower:
            return candidate
    raise GenerationExhausted(
        f"no family with lower bound above {min_lower:g} in {retries} draws "
        f"(n={n}, m={m})")


def gen_frame(cfg: TrialConfig, trial: int, min_lower: float = 1e-6) -> Frame:
    """The frame a given trial of cfg works on; deterministic in
    (master_seed, trial) bit-for-bit."""
    rng = _rng(trial_seed(cfg.master_seed, trial))
    return _random_frame(rng, cfg.dim, cfg.count, min_lower=min_lower)


def _default_frame_source(cfg: TrialConfig, rng) -> Frame:
    return _random_frame(rng, cfg.dim, cfg.count)


# -- per-suite trial bodies ----------------------------------------------------

def _axioms_trial(cfg, rng, frame_source):
    n = cfg.dim
    f = random_vector(rng, n)
    g = random_vector(rng, n)
    h = random_vector(rng, n)
    q = random_quaternion(rng)
    t = random_operator(rng, n)

    res = {}
    fg = f.inner(g)
    fh = f.inner(h)
    res["inner.conjugate_symmetry"] = abs(fg.conj() - g.inner(f)) / (1.0 + abs(fg))
    ff = f.inner(f)
    res["inner.positivity"] = (ff.imag_norm() + max(0.0, -ff.w)) / (1.0 + ff.w)
    res["inner.additivity"] = abs(f.inner(g + h) - (fg + fh)) / (1.0 + abs(fg) + abs(fh))
    res["inner.left_homogeneity"] = (abs((q * f).inner(g) - q * fg)
                                     / (1.0 + abs(q) * abs(fg)))
    res["inner.right_conjugate_homogeneity"] = (abs(f.inner(q * g) - fg * q.conj())
                                                / (1.0 + abs(q) * abs(fg)))
    res["inner.cauchy_schwarz"] = (max(0.0, abs(fg) - f.norm() * g.norm())
                                   / (1.0 + f.norm() * g.norm()))
    lhs = (f + g).norm_sq() + (f - g).norm_sq()
    rhs = 2.0 * f.norm_sq() + 2.0 * g.norm_sq()
    res["inner.parallelogram"] = abs(lhs - rhs) / (1.0 + rhs)

    tf = t.apply(f)
    lhs_q = g.inner(tf)
    rhs_q = t.adjoint().apply(g).inner(f)
    res["operator.adjoint_identity"] = abs(lhs_q - rhs_q) / (1.0 + abs(lhs_q))
    res["operator.left_linearity"] = ((t.apply(q * f) - q * tf).norm()
                                      / (1.0 + abs(q) * tf.norm()))
    return res


def _frames_trial(cfg, rng, frame_source):
    frame = frame_source(cfg, rng)
    fa, fb = frame.arrays
    s = frame.operator
    lower, upper = frame.bounds

    res = {}
    res["frame.operator_self_adjoint"] = ((s - s.adjoint()).max_abs()
                                          / (1.0 + s.max_abs()))
    spectrum = embed.spectrum_self_adjoint(s)
    res["frame.operator_positive"] = (max(0.0, -float(spectrum[0]))
                                      / (1.0 + float(spectrum[-1])))

    pa, pb = _sample_rows(rng, cfg.samples, frame.dimension)
    norms2 = _cpair.abs2(pa, pb).sum(axis=1)
    ca, cb = frame.coefficient_arrays(pa, pb)
    energies = _cpair.abs2(ca, cb).sum(axis=1)
    slack = np.maximum(lower * norms2 - energies, energies - upper * norms2)
    res["frame.inequality_optimal_bounds"] = float(
        (np.maximum(slack, 0.0) / (norms2 * max(upper, 1e-30))).max())

    spa, spb = _cpair.matmul(pa, pb, s.a, s.b)
    form_a, _ = _cpair.inner_rows(spa, spb, pa, pb)
    res["frame.coefficient_energy"] = float(
        (np.abs(form_a.real - energies) / (1.0 + energies)).max())

    values, vectors = embed.eig_self_adjoint(s)
    witness = 0.0
    for index, target in ((0, lower), (-1, upper)):
        v = vectors[index]
        va, vb = frame.coefficient_arrays(v.a[None, :], v.b[None, :])
        energy = float(_cpair.abs2(va, vb).sum())
        witness = max(witness, abs(energy - target * v.norm_sq())
                      / max(target * v.norm_sq(), 1e-30))
    res["frame.bounds_attained"] = witness

    dual = frame.canonical_dual()
    da, db = dual.arrays
    dca, dcb = dual.coefficient_arrays(pa, pb)
    rec1a, rec1b = _cpair.matmul(dca, dcb, fa, fb)
    rec2a, rec2b = _cpair.matmul(ca, cb, da, db)
    err1 = np.sqrt(_cpair.abs2(rec1a - pa, rec1b - pb).sum(axis=1))
    err2 = np.sqrt(_cpair.abs2(rec2a - pa, rec2b - pb).sum(axis=1))
    res["frame.reconstruction"] = float(
        (np.maximum(err1, err2) / np.sqrt(norms2)).max())

    ha, hb = _cpair.herm_t(fa, fb)
    comp_a, comp_b = _cpair.matmul(ha, hb, fa, fb)
    res["frame.operator_composition"] = (_cpair.max_abs(s.a - comp_a, s.b - comp_b)
                                         / (1.0 + s.max_abs()))

    s_inv = s.inverse()
    res["frame.dual_operator_inverse"] = ((dual.operator - s_inv).max_abs()
                                          / (1.0 + s_inv.max_abs()))

    dda, ddb = dual.canonical_dual().arrays
    res["frame.double_dual"] = (_cpair.max_abs(dda - fa, ddb - fb)
                                / (1.0 + _cpair.max_abs(fa, fb)))
    return res


def _controlled_trial(cfg, rng, frame_source):
    frame = frame_source(cfg, rng)
    s = frame.operator
    controller = random_commuting_positive(frame, int(rng.integers(2 ** 63)))

    res = {}
    check = check_controlled(frame, controller, tol=cfg.tol,
                             samples=cfg.samples, rng=rng)
    res["controlled.commuting_accepted"] = 0.0 if check.is_controlled else 1.0
    res["controlled.sum_real"] = check.max_imag / (1.0 + max(check.upper, 0.0))

    ident = verify_controlled_identities(frame, controller,
                                         samples=cfg.samples, rng=rng)
    res["controlled.base_is_frame"] = 0.0 if ident.is_frame else 1.0
    res["controlled.operator_identity"] = ident.operator_identity_residual
    res["controlled.sum_identity"] = ident.sum_identity_residual
    res["controlled.frame_operator_recovery"] = ident.recovery_residual

    inv_check = check_controlled(frame, s.inverse(), tol=cfg.tol,
                                 samples=8, rng=rng)
    if inv_check.is_controlled:
        res["controlled.inverse_controller_bounds"] = max(
            abs(inv_check.lower - 1.0), abs(inv_check.upper - 1.0))
    else:
        res["controlled.inverse_controller_bounds"] = 1.0

    consistent = True
    eq = verify_controlled_equivalence(frame, controller, tol=cfg.tol,
                                       samples=8, rng=rng)
    consistent &= eq.forward and eq.backward and eq.is_controlled
    if frame.dimension >= 2:
        bad = random_noncommuting_positive(frame, int(rng.integers(2 ** 63)))
        bad_check = check_controlled(frame, bad, tol=cfg.tol, samples=8, rng=rng)
        res["controlled.noncommuting_rejected"] = (
            1.0 if bad_check.is_controlled else 0.0)
        bad_eq = verify_controlled_equivalence(frame, bad, tol=cfg.tol,
                                               samples=8, rng=rng)
        consistent &= bad_eq.forward and bad_eq.backward
        consistent &= not (bad_eq.is_controlled and bad_eq.commutes)
    res["controlled.equivalence_consistent"] = 0.0 if consistent else 1.0
    return res


def _multipliers_trial(cfg, rng, frame_source):
    frame = frame_source(cfg, rng)
    m = len(frame)
    res = {}

    weights = Symbol(rng.uniform(0.3, 2.5, size=m))
    wfb = weighted_frame_bounds(frame, weights)
    path = frame.scaled(np.sqrt(weights.array())).bounds
    res["multiplier.weighted_bounds_path"] = max(
        abs(wfb.lower - path[0]), abs(wfb.upper - path[1])) / (1.0 + path[1])

    signs = rng.choice([-1.0, 1.0], size=m)
    mixed = Symbol(weights.array() * signs)
    report = verify_scaled_frame_bounds(frame, mixed, tol=cfg.tol)
    floor = report.weight_lower ** 2 * report.base_lower
    ceil = report.weight_upper ** 2 * report.base_upper
    res["multiplier.scaled_bounds_contained"] = max(
        (floor - report.scaled_lower) / max(floor, 1e-30),
        (report.scaled_upper - ceil) / max(ceil, 1e-30), 0.0)

    doubled = verify_scaled_frame_bounds(frame, Symbol([2.0] * m), tol=cfg.tol)
    res["multiplier.constant_weight_scaling"] = max(
        abs(doubled.scaled_lower - 4.0 * doubled.base_lower)
        / max(4.0 * doubled.base_lower, 1e-30),
        abs(doubled.scaled_upper - 4.0 * doubled.base_upper)
        / max(4.0 * doubled.base_upper, 1e-30))

    positive = verify_multiplier_frame_operator(frame, weights)
    res["multiplier.frame_operator_match"] = positive.match_residual + (
        0.0 if positive.definite and positive.invertible else 1.0)
    res["multiplier.real_symbol_self_adjoint"] = positive.self_adjoint_residual
    negative = verify_multiplier_frame_operator(frame, Symbol(-weights.array()))
    res["multiplier.negative_symbol_match"] = negative.match_residual + (
        0.0 if negative.definite and negative.invertible else 1.0)

    agree = verify_weighted_frame_equivalence(frame, weights).all_agree()
    deficient = _rank_deficient_family(rng, frame.dimension, m)
    def_report = verify_weighted_frame_equivalence(deficient, weights)
    agree &= def_report.all_agree() and not def_report.is_frame
    res["multiplier.five_way_agreement"] = 0.0 if agree else 1.0

    diag = verify_diagonal_controller_multiplier(int(rng.integers(2 ** 63)))
    penalty = 0.0 if (diag.weights_positive and diag.weights_in_eigenvalue_range) else 1.0
    res["multiplier.diagonal_controller"] = penalty + max(
        diag.relation_residual, diag.reconstruction_residual)
    return res


def _rank_deficient_family(rng, n: int, m: int) -> Frame:
    """A family that cannot span: repeated scaled copies of one direction
    (or zero vectors in dimension one)."""
    if n == 1:
        return Frame([QVector.zero(1) for _ in range(m)])
    direction = random_vector(rng, n)
    return Frame([float(rng.uniform(0.5, 1.5)) * direction for _ in range(m)])


_TRIALS: dict[str, Callable] = {
    "axioms": _axioms_trial,
    "frames": _frames_trial,
    "controlled": _controlled_trial,
    "multipliers": _multipliers_trial,
}


def run_trial(suite: str, cfg: TrialConfig, seed: int,
              frame_source: Optional[Callable] = None) -> dict[str, float]:
    """Replay one trial from its sub-seed; returns residuals by statement."""
    if suite == "all":
        merged = {}
        for name in ("axioms", "frames", "controlled", "multipliers"):
            merged.update(run_trial(name, cfg, seed, frame_source))
        return merged
    if suite not in _TRIALS:
        raise ValueError(f"unknown suite {suite!r}")
    source = frame_source if frame_source is not None else _default_frame_source
    return _TRIALS[suite](cfg, _rng(seed), source)


# -- reports ---------------------------------------------------------------------

@dataclass(frozen=True)
class StatementRecord:
    statement: str
    trials: int
    failures: int
    max_residual: float
    witness_seed: int
    witness_dim: int
    witness_count: int

    def to_line(self) -> str:
        return (f"{self.statement} {self.trials} {self.failures} "
                f"{self.max_residual:.6e} {self.witness_seed}")


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    tol: float
    records: tuple[StatementRecord, ...]

    @property
    def total_failures(self) -> int:
        return sum(record.failures for record in self.records)

    def ok(self) -> bool:
        return self.total_failures == 0

    def to_lines(self) -> list[str]:
        return [record.to_line() for record in self.records]

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "tol": self.tol,
            "total_failures": self.total_failures,
            "records": [vars(record) for record in self.records],
        }

    def write_json(self, path) -> None:
        with open(path, "w", encoding="utf-8") as handle:
            json.dump(self.to_dict(), handle, indent=2)
            handle.write("\n")


def threshold(statement: str, tol: float) -> float:
    return tol * TOL_SCALE.get(statement, 1.0)


class _Tracker:
    __slots__ = ("trials", "failures", "max_residual", "seed", "dim", "count")

    def __init__(self):
        self.trials = 0
        self.failures = 0
        self.max_residual = -1.0
        self.seed = 0
        self.dim = 0
        self.count = 0


def run_suite(cfg: TrialConfig, suite: str,
              frame_source: Optional[Callable] = None,
              trial_indices=None) -> VerificationReport:
    """Run one suite at a fixed instance shape and aggregate per statement.

    Failures are data, not errors: the report carries them and the caller
    decides.  trial_indices overrides range(cfg.trials) so several runs at
    different shapes can share one master seed without colliding.
    """
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES}")
    if suite == "all":
        parts = [run_suite(cfg, name, frame_source, trial_indices)
                 for name in ("axioms", "frames", "controlled", "multipliers")]
        return merge_reports(parts, suite="all")
    indices = range(cfg.trials) if trial_indices is None else trial_indices
    trackers: dict[str, _Tracker] = {}
    for trial in indices:
        seed = trial_seed(cfg.master_seed, trial)
        residuals = run_trial(suite, cfg, seed, frame_source)
        for statement, value in residuals.items():
            tracker = trackers.setdefault(statement, _Tracker())
            tracker.trials += 1
            if value > threshold(statement, cfg.tol):
                tracker.failures += 1
            if value > tracker.max_residual:
                tracker.max_residual = value
                tracker.seed = seed
                tracker.dim = cfg.dim
                tracker.count = cfg.count
    records = tuple(
        StatementRecord(statement=statement, trials=tracker.trials,
                        failures=tracker.failures,
                        max_residual=max(tracker.max_residual, 0.0),
                        witness_seed=tracker.seed, witness_dim=tracker.dim,
                        witness_count=tracker.count)
        for statement, tracker in trackers.items())
    return VerificationReport(suite=suite, tol=cfg.tol, records=records)


def merge_reports(reports, suite: Optional[str] = None) -> VerificationReport:
    """Combine reports aggregated over different shapes or sub-suites."""
    reports = list(reports)
    if not reports:
        raise ValueError("nothing to merge")
    tol = reports[0].tol
    merged: dict[str, StatementRecord] = {}
    for report in reports:
        for record in report.records:
            held = merged.get(record.statement)
            if held is None:
                merged[record.statement] = record
            else:
                better = record if record.max_residual > held.max_residual else held
                merged[record.statement] = replace(
                    better, trials=held.trials + record.trials,
                    failures=held.failures + record.failures)
    return VerificationReport(suite=suite or reports[0].suite, tol=tol,
                              records=tuple(merged.values()))


def default_count(dim: int) -> int:
    """Vector count used by multi-shape runs: redundancy three, capped."""
    return min(3 * dim, 24)


def run_verification(suite: str, trials: int, master_seed: int,
                     dims=(2, 3, 4, 6, 8), tol: float = 1e-9,
                     samples: int = 64,
                     frame_source: Optional[Callable] = None) -> VerificationReport:
    """Rotate trials across instance dimensions and merge the reports.

    Trial t runs at dims[t % len(dims)] with its global index feeding the
    sub-seed, so records stay reproducible regardless of the rotation.
    """
    dims = tuple(int(d) for d in dims)
    if not dims:
        raise ValueError("dims must not be empty")
    groups: dict[int, list[int]] = {d: [] for d in dims}
    for trial in range(trials):
        groups[dims[trial % len(dims)]].append(trial)
    parts = []
    for dim, indices in groups.items():
        if not indices:
            continue
        cfg = TrialConfig(dim=dim, count=default_count(dim), trials=len(indices),
                          master_seed=master_seed, tol=tol, samples=samples)
        parts.append(run_suite(cfg, suite, frame_source, trial_indices=indices))
    return merge_reports(parts, suite=suite)
