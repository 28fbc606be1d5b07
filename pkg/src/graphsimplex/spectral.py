"""Eigendecomposition of the Laplacian with the zero mode removed, and the
spectral pseudoinverse built from it."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import SpectralError

__all__ = [
    "SpectralDecomposition",
    "eigendecompose",
    "pseudoinverse",
    "zero_threshold",
    "canonicalize_signs",
]

# mu < N * mu_max * 2**-45 counts as zero
ZERO_EXPONENT = -45


def zero_threshold(n: int, mu_max: float) -> float:
    return n * max(mu_max, 0.0) * 2.0**ZERO_EXPONENT


def canonicalize_signs(z: np.ndarray) -> np.ndarray:
    """Flip columns so the largest-magnitude entry (lowest index on ties) is positive."""
    z = np.array(z, dtype=float, copy=True)
    mags = np.abs(z)
    peak = mags.max(axis=0, keepdims=True)
    # near-ties go to the lowest index; exact float equality is too brittle here
    lead = np.argmax(mags >= peak * (1.0 - 1e-9), axis=0)
    signs = np.sign(z[lead, np.arange(z.shape[1])])
    signs[signs == 0] = 1.0
    return z * signs


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    """Nonzero Laplacian spectrum ``mu_1 >= ... >= mu_{N-1} > 0`` and the
    matching orthonormal eigenvectors as the columns of ``eigenvectors``
    (shape ``(N, N-1)``).
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    laplacian: np.ndarray

    @property
    def n_nodes(self) -> int:
        return self.eigenvectors.shape[0]

    def reconstruct(self) -> np.ndarray:
        z, mu = self.eigenvectors, self.eigenvalues
        return (z * mu) @ z.T


def eigendecompose(q) -> SpectralDecomposition:
    """Decompose a connected graph's Laplacian.

    Eigenvalues come back in descending order. Exactly one eigenvalue must
    fall below :func:`zero_threshold`; it and its eigenvector are dropped.

    Raises
    ------
    SpectralError
        If the number of zero eigenvalues is not exactly one.
    """
    q = np.asarray(q, dtype=float)
    n = q.shape[0]
    w, v = np.linalg.eigh(q)
    order = np.argsort(w, kind="stable")[::-1]
    w, v = w[order], v[:, order]
    tol = zero_threshold(n, w[0])
    is_zero = np.abs(w) < tol
    if is_zero.sum() != 1:
        raise SpectralError(
            f"expected exactly one zero eigenvalue, found {int(is_zero.sum())} "
            f"(threshold {tol:.3e})"
        )
    if np.any(w[~is_zero] < 0):
        raise SpectralError(f"matrix is not positive semidefinite (min eigenvalue {w.min():.3e})")
    keep = ~is_zero
    mu = w[keep]
    z = canonicalize_signs(v[:, keep])
    mu.flags.writeable = False
    z.flags.writeable = False
    q = q.copy()
    q.flags.writeable = False
    return SpectralDecomposition(mu, z, q)


def pseudoinverse(d: SpectralDecomposition) -> np.ndarray:
    """``Z M^{-1} Z^T``; annihilates the all-ones vector."""
    z = d.eigenvectors
    return (z / d.eigenvalues) @ z.T
