"""Identities tying cuts, degrees and resistances of a graph to lengths,
inner products and angles of its simplices.

Each function computes the combinatorial side from :mod:`graphsimplex.graph`
and the geometric side from :mod:`graphsimplex.simplex` without sharing
intermediates, so comparing the two is a real check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import SubsetError
from .graph import VertexSubset, WeightedGraph, as_subset, cut_size, laplacian
from .simplex import (
    Kind,
    SimplexEmbedding,
    altitude,
    face_centroid,
    facet_normal,
)
from .spectral import eigendecompose, pseudoinverse

__all__ = [
    "CutReport",
    "cut_report",
    "centroid_inner_product",
    "inverse_altitude_inner_product",
    "quadratic_form_bound",
    "duality_inequality",
    "effective_resistance",
    "resistance_matrix",
    "facet_angle",
    "facet_angle_geometric",
]


@dataclass(frozen=True)
class CutReport:
    subset: VertexSubset
    cut_size: float
    dual_quadratic: float
    centroid_sqnorm: float
    inverse_centroid_sqnorm: float
    altitude_sqlen_inverse: float
    altitude_sqlen_original: float

    def residuals(self) -> dict[str, float]:
        """Relative residuals of the three identities this record carries."""
        v2 = self.subset.size**2
        return {
            "centroid_vs_cut": _rel(self.centroid_sqnorm * v2, self.cut_size),
            "inverse_altitude_vs_cut": _rel(self.altitude_sqlen_inverse * self.cut_size, 1.0),
            "inverse_centroid_vs_dual_quadratic": _rel(self.inverse_centroid_sqnorm * v2, self.dual_quadratic),
        }


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(1.0, abs(b))


def _check_index(n: int, *idx):
    for i in idx:
        if not 0 <= i < n:
            raise IndexError(f"node {i} outside 0..{n - 1}")


def cut_report(g: WeightedGraph, orig: SimplexEmbedding, inv: SimplexEmbedding, v) -> CutReport:
    v = as_subset(v, g.n_nodes)
    u = v.indicator
    c = face_centroid(orig, v)
    c_plus = face_centroid(inv, v)
    a_plus = altitude(orig, inv, v, Kind.INVERSE)
    a = altitude(orig, inv, v, Kind.ORIGINAL)
    return CutReport(
        subset=v,
        cut_size=cut_size(g, v),
        dual_quadratic=float(u @ (inv.vertices.T @ (inv.vertices @ u))),
        centroid_sqnorm=float(c @ c),
        inverse_centroid_sqnorm=float(c_plus @ c_plus),
        altitude_sqlen_inverse=float(a_plus @ a_plus),
        altitude_sqlen_original=float(a @ a),
    )


def centroid_inner_product(orig: SimplexEmbedding, v1, v2) -> float:
    """``c_V1^T c_V2`` for disjoint ``v1``, ``v2``.

    Equals ``-|cut(V1, V2)| / (V1 V2)``, the weight between the two sets
    scaled down by their sizes.
    """
    a = as_subset(v1, orig.n_nodes)
    b = as_subset(v2, orig.n_nodes)
    if a.members & b.members:
        raise SubsetError(f"subsets overlap on {sorted(a.members & b.members)}")
    return float(face_centroid(orig, a) @ face_centroid(orig, b))


def inverse_altitude_inner_product(orig: SimplexEmbedding, inv: SimplexEmbedding, v1, v2) -> float:
    """``a+_V1^T a+_V2``; equals ``-|cut(V1, V2)| / (|cut V1| |cut V2|)``."""
    a = as_subset(v1, orig.n_nodes)
    b = as_subset(v2, orig.n_nodes)
    if a.members & b.members:
        raise SubsetError(f"subsets overlap on {sorted(a.members & b.members)}")
    return float(altitude(orig, inv, a, Kind.INVERSE) @ altitude(orig, inv, b, Kind.INVERSE))


def quadratic_form_bound(g: WeightedGraph, y, q=None, q_pinv=None, tol: float = 1e-9):
    """Evaluate the 1-norm lower bound on the Laplacian quadratic form.

    For ``y`` orthogonal to the all-ones vector::

        y^T Q y  >=  ||y/2||_1**2 / (u_Vy^T Q^+ u_Vy),   Vy = {i : y_i >= 0}

    Returns ``(lhs, rhs, holds)``. Zero entries of ``y`` count as
    non-negative. A 2-D ``y`` is treated as one vector per row and gives
    arrays back. ``q`` and ``q_pinv`` may be passed to skip recomputation.
    """
    y = np.asarray(y, dtype=float)
    single = y.ndim == 1
    y = np.atleast_2d(y)
    if y.shape[1] != g.n_nodes:
        raise ValueError(f"y must have length {g.n_nodes}")
    l1 = np.abs(y).sum(axis=1)
    if np.any(np.abs(y.sum(axis=1)) > 1e-10 * np.maximum(1.0, l1)):
        raise ValueError("y is not orthogonal to the all-ones vector")
    if np.any(l1 == 0):
        raise ValueError("y must be nonzero")
    if q is None:
        q = laplacian(g)
    if q_pinv is None:
        q_pinv = pseudoinverse(eigendecompose(q))
    uv = (y >= 0).astype(float)
    lhs = np.einsum("ij,jk,ik->i", y, q, y)
    rhs = (0.5 * l1) ** 2 / np.einsum("ij,jk,ik->i", uv, q_pinv, uv)
    holds = lhs >= rhs - tol
    if single:
        return float(lhs[0]), float(rhs[0]), bool(holds[0])
    return lhs, rhs, holds


def duality_inequality(g: WeightedGraph, inv: SimplexEmbedding, v, tol: float = 1e-9):
    """Cut size times its inverse-simplex analogue against ``(V(N-V)/N)**2``.

    Returns ``(product, bound, holds)``.
    """
    v = as_subset(v, g.n_nodes)
    n, k = g.n_nodes, v.size
    u = v.indicator
    product = cut_size(g, v) * float(np.sum((inv.vertices @ u) ** 2))
    bound = (k * (n - k) / n) ** 2
    return product, bound, product >= bound - tol


def effective_resistance(inv: SimplexEmbedding, i: int, j: int) -> float:
    """Squared distance between inverse-simplex vertices ``i`` and ``j``."""
    _check_index(inv.n_nodes, i, j)
    if i == j:
        raise IndexError("effective resistance needs two distinct nodes")
    diff = inv.vertices[:, i] - inv.vertices[:, j]
    return float(diff @ diff)


def resistance_matrix(inv: SimplexEmbedding) -> np.ndarray:
    """All pairwise squared distances of the inverse simplex (zero diagonal)."""
    s = inv.vertices
    sq = np.sum(s * s, axis=0)
    omega = sq[:, None] + sq[None, :] - 2.0 * (s.T @ s)
    np.fill_diagonal(omega, 0.0)
    return np.maximum(omega, 0.0)


def facet_angle(g: WeightedGraph, i: int, j: int) -> float:
    """Angle between the inverse-simplex facets opposite ``i`` and ``j``.

    ``cos phi = w_ij / sqrt(d_i d_j)``. For ``N = 2`` the facets are points
    and the formula still evaluates (to 0); no geometric meaning is implied.
    """
    _check_index(g.n_nodes, i, j)
    if i == j:
        raise IndexError("facet angle needs two distinct nodes")
    d_i = sum(w for a, b, w in g.edges if i in (a, b))
    d_j = sum(w for a, b, w in g.edges if j in (a, b))
    cos = g.weight(i, j) / math.sqrt(d_i * d_j)
    return math.acos(min(1.0, max(-1.0, cos)))


def facet_angle_geometric(inv: SimplexEmbedding, i: int, j: int) -> float:
    """Same angle measured on the inverse simplex: pi minus the angle between
    the inner facet normals, each found from the vertices alone."""
    _check_index(inv.n_nodes, i, j)
    if i == j:
        raise IndexError("facet angle needs two distinct nodes")
    cos = -float(facet_normal(inv, i) @ facet_normal(inv, j))
    return math.acos(min(1.0, max(-1.0, cos)))
