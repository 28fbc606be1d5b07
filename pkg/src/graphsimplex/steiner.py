"""Steiner circumscribed ellipsoid, simplex and ellipsoid volumes, and the
spanning-tree count that ties them together."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .exceptions import GraphValidationError
from .graph import WeightedGraph, laplacian
from .simplex import Kind, SimplexEmbedding, embed
from .spectral import SpectralDecomposition, eigendecompose

__all__ = [
    "SteinerEllipsoid",
    "VolumeReport",
    "steiner_ellipsoid",
    "ellipsoid_form",
    "spanning_tree_count",
    "report_tree_count",
    "gamma_half_integer",
    "volumes",
    "simplex_volume_det",
    "ellipsoid_volume_from_axes",
    "ellipsoid_to_simplex_ratio",
    "ellipsoid_to_simplex_ratio_closed_form",
    "CospectralReport",
    "cospectral_co_steiner_check",
]

INTEGRALITY_TOL = 1e-6


def gamma_half_integer(x: float) -> float:
    """Gamma at a positive integer or half-integer, by exact recursion from
    Gamma(1) = 1 and Gamma(1/2) = sqrt(pi)."""
    twice = 2 * x
    if twice <= 0 or abs(twice - round(twice)) > 0:
        raise ValueError(f"gamma_half_integer needs a positive (half-)integer, got {x!r}")
    k = int(round(twice))
    if k % 2 == 0:
        return float(math.factorial(k // 2 - 1))
    value, t = math.sqrt(math.pi), 0.5
    while t < x:
        value *= t
        t += 1.0
    return value


@dataclass(frozen=True, eq=False)
class SteinerEllipsoid:
    """Semi-axes stored as the columns of ``semi_axes`` (shape ``(N-1, N-1)``)."""

    semi_axes: np.ndarray
    source: SpectralDecomposition

    @property
    def lengths(self) -> np.ndarray:
        return np.linalg.norm(self.semi_axes, axis=0)


def steiner_ellipsoid(d: SpectralDecomposition, orig: SimplexEmbedding) -> SteinerEllipsoid:
    """Semi-axes ``eps_k = S z_k sqrt((N-1)/N)`` of the minimal circumscribed ellipsoid."""
    if orig.kind is not Kind.ORIGINAL or orig.source is not d:
        raise ValueError("steiner_ellipsoid needs the original embedding of the same decomposition")
    n = d.n_nodes
    axes = orig.vertices @ d.eigenvectors * math.sqrt((n - 1) / n)
    return SteinerEllipsoid(axes, d)


def ellipsoid_form(inv: SimplexEmbedding) -> np.ndarray:
    """Matrix ``A`` such that the Steiner ellipsoid is ``{p : p^T A p = (N-1)/N}``."""
    return inv.vertices @ inv.vertices.T


def spanning_tree_count(d: SpectralDecomposition) -> float:
    """Weighted spanning-tree count, ``prod(mu_k) / N``."""
    return float(np.prod(d.eigenvalues) / d.n_nodes)


def report_tree_count(xi: float, unweighted: bool):
    """Round ``xi`` to an int for unweighted graphs when it is within 1e-6
    (relative) of one; otherwise return it unchanged, warning on drift."""
    if not unweighted:
        return xi
    nearest = round(xi)
    if abs(xi - nearest) <= INTEGRALITY_TOL * max(1.0, abs(xi)):
        return int(nearest)
    warnings.warn(f"spanning-tree count {xi!r} of an unweighted graph is not integral", RuntimeWarning)
    return xi


@dataclass(frozen=True)
class VolumeReport:
    tree_count: float
    simplex_volume: float
    inverse_simplex_volume: float
    ellipsoid_volume: float

    @property
    def ellipsoid_to_simplex(self) -> float:
        return self.ellipsoid_volume / self.simplex_volume


def volumes(d: SpectralDecomposition, xi: float | None = None) -> VolumeReport:
    """Volumes of both simplices and of the Steiner ellipsoid from the tree count."""
    n = d.n_nodes
    if xi is None:
        xi = spanning_tree_count(d)
    g_n = gamma_half_integer(n)
    return VolumeReport(
        tree_count=xi,
        simplex_volume=n * math.sqrt(xi) / g_n,
        inverse_simplex_volume=1.0 / (g_n * math.sqrt(xi)),
        ellipsoid_volume=((n - 1) * math.pi / n) ** ((n - 1) / 2)
        * math.sqrt(n * xi)
        / gamma_half_integer((n + 1) / 2),
    )


def simplex_volume_det(e: SimplexEmbedding) -> float:
    """``|det[s_2 - s_1, ..., s_N - s_1]| / (N-1)!`` straight from the vertices."""
    s = e.vertices
    edges = s[:, 1:] - s[:, :1]
    return abs(float(np.linalg.det(edges))) / math.factorial(e.dim)


def ellipsoid_volume_from_axes(lengths) -> float:
    """Volume of an ellipsoid in ``len(lengths)`` dimensions with the given semi-axis lengths."""
    lengths = np.asarray(lengths, dtype=float)
    m = lengths.size
    return math.pi ** (m / 2) / gamma_half_integer(m / 2 + 1) * float(np.prod(lengths))


def ellipsoid_to_simplex_ratio(n: int) -> float:
    """Steiner-ellipsoid volume over simplex volume in ``n - 1`` dimensions.

    Taken as the quotient of the two volume formulas; depends on ``n`` only.
    """
    return (
        ((n - 1) * math.pi) ** ((n - 1) / 2)
        * gamma_half_integer(n)
        / (n ** (n / 2) * gamma_half_integer((n + 1) / 2))
    )


def ellipsoid_to_simplex_ratio_closed_form(n: int) -> float:
    """An alternative closed form for the same ratio, kept for comparison.

    It is smaller than :func:`ellipsoid_to_simplex_ratio` by a factor
    ``sqrt(n)``; at ``n = 2`` the segment and its ellipsoid coincide, so the
    true ratio is 1 while this expression gives ``1/sqrt(2)``. Not used for
    any computation.
    """
    return (
        ((n - 1) * math.pi) ** ((n - 1) / 2)
        / n ** ((n + 1) / 2)
        * gamma_half_integer(n)
        / gamma_half_integer(n / 2 + 0.5)
    )


@dataclass(frozen=True)
class CospectralReport:
    cospectral: bool
    co_steiner: bool
    spectrum_1: tuple
    spectrum_2: tuple
    semi_axes_1: tuple
    semi_axes_2: tuple


def cospectral_co_steiner_check(g1: WeightedGraph, g2: WeightedGraph, tol: float = 1e-9) -> CospectralReport:
    """Compare Laplacian spectra and Steiner semi-axis lengths of two graphs.

    Raises ``AssertionError`` if the graphs are cospectral but their
    ellipsoids differ.
    """
    if g1.n_nodes != g2.n_nodes:
        raise GraphValidationError(f"size mismatch: {g1.n_nodes} vs {g2.n_nodes} nodes")
    out = []
    for g in (g1, g2):
        d = eigendecompose(laplacian(g))
        ell = steiner_ellipsoid(d, embed(d, Kind.ORIGINAL))
        out.append((np.sort(d.eigenvalues)[::-1], np.sort(ell.lengths)[::-1]))
    (mu1, ax1), (mu2, ax2) = out
    scale = max(1.0, float(mu1[0]), float(mu2[0]))
    cospectral = bool(np.all(np.abs(mu1 - mu2) <= tol * scale))
    co_steiner = bool(np.all(np.abs(ax1 - ax2) <= tol * max(1.0, float(ax1[0]), float(ax2[0]))))
    if cospectral and not co_steiner:
        raise AssertionError("cospectral graphs must share a Steiner ellipsoid")
    return CospectralReport(
        cospectral, co_steiner, tuple(mu1.tolist()), tuple(mu2.tolist()), tuple(ax1.tolist()), tuple(ax2.tolist())
    )
