"""Complex-pair kernels for arrays of quaternions.

A quaternion w + x*i + y*j + z*k is stored as the complex pair
(a, b) = (w + x*i, y + z*i), so that q = a + b*j.  Arrays of quaternions
are pairs of equal-shape complex128 arrays.  The formulas below follow
from j*c = conj(c)*j for complex c and j*j = -1.
"""

from __future__ import annotations

import numpy as np


def from_real_components(parts) -> tuple[np.ndarray, np.ndarray]:
    """(..., 4) real components (w, x, y, z) -> pair of complex arrays."""
    parts = np.asarray(parts, dtype=np.float64)
    a = parts[..., 0] + 1j * parts[..., 1]
    b = parts[..., 2] + 1j * parts[..., 3]
    return a, b


def to_real_components(a, b) -> np.ndarray:
    out = np.empty(a.shape + (4,), dtype=np.float64)
    out[..., 0] = a.real
    out[..., 1] = a.imag
    out[..., 2] = b.real
    out[..., 3] = b.imag
    return out


def mul(a1, b1, a2, b2):
    """Elementwise quaternion product (a1 + b1 j)(a2 + b2 j)."""
    return a1 * a2 - b1 * np.conj(b2), a1 * b2 + b1 * np.conj(a2)


def conj(a, b):
    return np.conj(a), -b


def matmul(a1, b1, a2, b2):
    """Quaternion matrix product; rows of the left factor hit columns of the right."""
    return a1 @ a2 - b1 @ np.conj(b2), a1 @ b2 + b1 @ np.conj(a2)


def herm_t(a, b):
    """Conjugate transpose (the quaternionic adjoint of a matrix)."""
    return np.conj(a).swapaxes(-1, -2), (-b).swapaxes(-1, -2)


def abs2(a, b) -> np.ndarray:
    """Elementwise squared quaternion magnitude."""
    return a.real * a.real + a.imag * a.imag + b.real * b.real + b.imag * b.imag


def inner_rows(ua, ub, va, vb):
    """Row-wise inner product sum_k u_k conj(v_k) as a complex pair."""
    pa, pb = mul(ua, ub, *conj(va, vb))
    return pa.sum(axis=-1), pb.sum(axis=-1)


def max_abs(a, b) -> float:
    if a.size == 0:
        return 0.0
    return float(np.sqrt(abs2(a, b).max()))


def hermitize(a, b):
    """Project onto the self-adjoint part: a Hermitian, b antisymmetric."""
    return (a + np.conj(a).T) / 2.0, (b - b.T) / 2.0


def chi(a, b) -> np.ndarray:
    """Complex 2n x 2m image of an n x m quaternion matrix.

    Each entry becomes the block [[a, b], [-conj(b), conj(a)]].  The map
    preserves matrix products, conjugate transposes and the identity.
    """
    n, m = a.shape
    out = np.empty((2 * n, 2 * m), dtype=np.complex128)
    out[0::2, 0::2] = a
    out[0::2, 1::2] = b
    out[1::2, 0::2] = -np.conj(b)
    out[1::2, 1::2] = np.conj(a)
    return out


def unchi(x) -> tuple[np.ndarray, np.ndarray, float]:
    """Pull a chi-structured complex matrix back to quaternion pair form.

    Returns (a, b, symmetry_residual) where the residual measures how far
    x is from the exact block structure; a and b average the two copies.
    """
    a0 = x[0::2, 0::2]
    b0 = x[0::2, 1::2]
    a1 = np.conj(x[1::2, 1::2])
    b1 = -np.conj(x[1::2, 0::2])
    residual = 0.0
    if a0.size:
        residual = float(max(np.abs(a0 - a1).max(), np.abs(b0 - b1).max()))
    return (a0 + a1) / 2.0, (b0 + b1) / 2.0, residual
