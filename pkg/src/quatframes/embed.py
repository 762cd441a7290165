"""Spectral back end: complex images of quaternion matrices.

Every n x n quaternion matrix T maps to a 2n x 2n complex matrix chi(T)
by replacing each entry q = a + b*j with the block

    [[a, b], [-conj(b), conj(a)]].

chi preserves products, conjugate transposes and the identity, so
self-adjoint T give Hermitian chi(T), whose real eigenvalues carry even
multiplicity: each spectral value of T shows up exactly twice.  All
spectra and singular values are computed on chi(T) and paired back down.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np

from . import _cpair
from .hilbert import QVector

if TYPE_CHECKING:
    from .operator import QOperator

PAIR_RTOL = 1e-8


class PairingFailure(ArithmeticError):
    """Eigenvalues of chi(T) failed to pair up; suspect a convention bug."""


def to_complex(op: "QOperator") -> np.ndarray:
    """chi(T), the 2n x 2n complex image of T."""
    return _cpair.chi(op.a, op.b)


def from_complex(x: np.ndarray, tol: float = 1e-10) -> "QOperator":
    """Pull a chi-structured matrix back; rejects matrices without the
    block symmetry (residual above tol relative to the matrix scale)."""
    from .operator import QOperator

    x = np.asarray(x, dtype=np.complex128)
    if x.ndim != 2 or x.shape[0] != x.shape[1] or x.shape[0] % 2 != 0:
        raise ValueError("expected a square even-dimensional complex matrix")
    a, b, residual = _cpair.unchi(x)
    scale = float(np.abs(x).max()) if x.size else 0.0
    if residual > tol * (1.0 + scale):
        raise ValueError(
            f"matrix lacks the quaternionic block symmetry (residual {residual:.3e})")
    return QOperator(a, b)


def _require_self_adjoint(op) -> None:
    ha, hb = _cpair.herm_t(op.a, op.b)
    defect = _cpair.max_abs(op.a - ha, op.b - hb)
    scale = _cpair.max_abs(op.a, op.b)
    if defect > 1e-8 * (1.0 + scale):
        raise ValueError(f"operator is not self-adjoint (defect {defect:.3e})")


def _paired(values: np.ndarray, rtol: float = PAIR_RTOL) -> np.ndarray:
    """Collapse 2n values (sorted ascending) into n pair means."""
    if values.size % 2 != 0:
        raise PairingFailure(f"odd value count {values.size}")
    lo = values[0::2]
    hi = values[1::2]
    means = (lo + hi) / 2.0
    gaps = np.abs(hi - lo)
    limit = rtol * (1.0 + np.abs(means))
    if np.any(gaps > limit):
        worst = float(gaps.max())
        raise PairingFailure(
            f"eigenvalues do not pair up (worst gap {worst:.3e})")
    return means


def spectrum_self_adjoint(op: "QOperator") -> np.ndarray:
    """The n real spectral values of a self-adjoint operator, ascending.

    Raises PairingFailure when the 2n eigenvalues of chi(T) do not carry
    even multiplicity within the clustering tolerance.
    """
    _require_self_adjoint(op)
    x = _cpair.chi(op.a, op.b)
    x = (x + x.conj().T) / 2.0
    values = np.linalg.eigvalsh(x)
    return _paired(np.sort(values))


def eig_self_adjoint(op: "QOperator") -> tuple[np.ndarray, list[QVector]]:
    """Spectral values with one quaternionic eigenvector witness each.

    The witnesses v satisfy the row action v T = lambda v, so the
    quadratic form <Tv|v> equals lambda * |v|^2.
    """
    _require_self_adjoint(op)
    x = _cpair.chi(op.a, op.b)
    x = (x + x.conj().T) / 2.0
    values, columns = np.linalg.eigh(x)
    paired = _paired(np.sort(values))
    order = np.argsort(values, kind="stable")
    vectors = []
    for pair_index in range(paired.size):
        column = columns[:, order[2 * pair_index]]
        row = np.conj(column)  # left eigenvector of the Hermitian image
        vectors.append(QVector(row[0::2], row[1::2]))
    return paired, vectors


def singular_values(op: "QOperator") -> np.ndarray:
    """The n singular values, descending; the largest is the operator norm."""
    x = _cpair.chi(op.a, op.b)
    values = np.linalg.svd(x, compute_uv=False)
    return _paired(np.sort(values))[::-1]
