"""Vertex matrices of the original and inverse simplex of a graph, and the
barycentric geometry on top of them (points, membership, faces, centroids,
altitudes).

Vertex matrices are ``(N-1, N)``: column ``i`` is the vertex of node ``i``.
Only gauge-invariant quantities (Gram matrices, norms, inner products) are
reproducible across runs with degenerate spectra.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .exceptions import BarycentricError, EmbeddingMismatchError, SubsetError
from .graph import as_subset, indicator_matrix
from .spectral import SpectralDecomposition

__all__ = [
    "Kind",
    "SimplexEmbedding",
    "embed",
    "embed_pair",
    "gram",
    "dual_pairing",
    "check_barycentric",
    "random_barycentric",
    "point_from_barycentric",
    "contains",
    "face_centroid",
    "face_centroids",
    "altitude",
    "altitudes",
    "altitude_by_projection",
    "face_distances",
    "facet_normal",
    "MEMBERSHIP_TOL",
    "BARYCENTRIC_TOL",
]

MEMBERSHIP_TOL = 1e-9
BARYCENTRIC_TOL = 1e-12


class Kind(str, Enum):
    ORIGINAL = "original"
    INVERSE = "inverse"


@dataclass(frozen=True, eq=False)
class SimplexEmbedding:
    kind: Kind
    vertices: np.ndarray
    source: SpectralDecomposition

    @property
    def n_nodes(self) -> int:
        return self.vertices.shape[1]

    @property
    def dim(self) -> int:
        return self.vertices.shape[0]

    def vertex(self, i: int) -> np.ndarray:
        return self.vertices[:, i]


def embed(d: SpectralDecomposition, kind="original") -> SimplexEmbedding:
    """Vertex matrix with ``(s_i)_k = (z_k)_i * sqrt(mu_k)`` (original) or
    ``(z_k)_i / sqrt(mu_k)`` (inverse)."""
    kind = Kind(kind)
    root = np.sqrt(d.eigenvalues)
    scale = root if kind is Kind.ORIGINAL else 1.0 / root
    s = scale[:, None] * d.eigenvectors.T
    s.flags.writeable = False
    return SimplexEmbedding(kind, s, d)


def embed_pair(d: SpectralDecomposition) -> tuple[SimplexEmbedding, SimplexEmbedding]:
    return embed(d, Kind.ORIGINAL), embed(d, Kind.INVERSE)


def gram(e: SimplexEmbedding) -> np.ndarray:
    return e.vertices.T @ e.vertices


def _check_pair(orig: SimplexEmbedding, inv: SimplexEmbedding):
    if orig.kind is not Kind.ORIGINAL or inv.kind is not Kind.INVERSE:
        raise EmbeddingMismatchError(
            f"expected (original, inverse) embeddings, got ({orig.kind.value}, {inv.kind.value})"
        )
    if orig.source is not inv.source:
        raise EmbeddingMismatchError("embeddings come from different decompositions")


def dual_pairing(orig: SimplexEmbedding, inv: SimplexEmbedding) -> np.ndarray:
    """Matrix of inner products ``s_i^T s+_j``; equals ``I - J/N``."""
    _check_pair(orig, inv)
    return orig.vertices.T @ inv.vertices


def check_barycentric(x, n_nodes: int) -> np.ndarray:
    """Validate a barycentric coordinate; never renormalizes."""
    x = np.asarray(x, dtype=float)
    if x.shape != (n_nodes,):
        raise BarycentricError(f"expected {n_nodes} weights, got shape {x.shape}")
    if not np.all(np.isfinite(x)):
        raise BarycentricError("weights must be finite")
    if np.any(x < 0):
        raise BarycentricError(f"negative weight {x.min()!r}")
    if abs(x.sum() - 1.0) > BARYCENTRIC_TOL:
        raise BarycentricError(f"weights sum to {x.sum()!r}, not 1")
    return x


def random_barycentric(rng: np.random.Generator, n_nodes: int, support=None) -> np.ndarray:
    """Uniform point on the simplex (or on the face spanned by ``support``)."""
    x = np.zeros(n_nodes)
    idx = np.arange(n_nodes) if support is None else np.array(sorted(support))
    g = rng.exponential(size=idx.size)
    x[idx] = g / g.sum()
    return x


def point_from_barycentric(e: SimplexEmbedding, x) -> np.ndarray:
    return e.vertices @ check_barycentric(x, e.n_nodes)


def contains(orig: SimplexEmbedding, inv: SimplexEmbedding, p, tol: float = MEMBERSHIP_TOL) -> bool:
    """Halfspace membership test: ``p^T s+_i >= -1/N`` for every facet normal."""
    _check_pair(orig, inv)
    p = np.asarray(p, dtype=float)
    return bool(np.all(p @ inv.vertices >= -1.0 / orig.n_nodes - tol))


def face_centroid(e: SimplexEmbedding, v) -> np.ndarray:
    v = as_subset(v, e.n_nodes)
    return e.vertices @ v.indicator / v.size


def altitude(orig: SimplexEmbedding, inv: SimplexEmbedding, v, target_kind="inverse") -> np.ndarray:
    """Altitude between the faces on ``v`` and its complement.

    Uses the closed form: the altitude of one simplex is the complementary
    centroid of the other, scaled by ``(N - V)`` over the quadratic form
    ``u_V^T G u_V`` of the other simplex's Gram matrix ``G``. The vector
    points from the face on ``v`` toward the face on the complement.
    """
    _check_pair(orig, inv)
    v = as_subset(v, orig.n_nodes)
    other = orig if Kind(target_kind) is Kind.INVERSE else inv
    u = v.indicator
    quad = float(np.sum((other.vertices @ u) ** 2))
    return (orig.n_nodes - v.size) / quad * face_centroid(other, v.complement())


def face_centroids(e: SimplexEmbedding, masks) -> np.ndarray:
    """Centroids of many faces at once; column ``k`` belongs to ``masks[k]``."""
    u = indicator_matrix(masks, e.n_nodes)
    return e.vertices @ (u / u.sum(axis=1, keepdims=True)).T


def altitudes(orig: SimplexEmbedding, inv: SimplexEmbedding, masks, target_kind="inverse") -> np.ndarray:
    """:func:`altitude` for many subsets at once (one column per mask)."""
    _check_pair(orig, inv)
    other = orig if Kind(target_kind) is Kind.INVERSE else inv
    n = orig.n_nodes
    u = indicator_matrix(masks, n)
    sizes = u.sum(axis=1)
    quad = np.sum((other.vertices @ u.T) ** 2, axis=0)
    comp = 1.0 - u
    c_comp = other.vertices @ (comp / (n - sizes)[:, None]).T
    return c_comp * ((n - sizes) / quad)


def _null_direction(diffs: np.ndarray, dim: int) -> np.ndarray:
    if diffs.shape[0] == 0:
        return np.eye(dim)[0]
    _, _, vh = np.linalg.svd(diffs, full_matrices=True)
    return vh[-1]


def altitude_by_projection(e: SimplexEmbedding, v) -> np.ndarray:
    """Altitude between complementary faces found from the vertices alone.

    The edge directions of both faces span a hyperplane; its normal is the
    altitude direction and the length is the offset of the two faces along
    it. Independent of the graph and of the dual simplex.
    """
    v = as_subset(v, e.n_nodes)
    a_idx = v.sorted_members()
    b_idx = v.complement().sorted_members()
    s = e.vertices
    diffs = [s[:, k] - s[:, a_idx[0]] for k in a_idx[1:]]
    diffs += [s[:, k] - s[:, b_idx[0]] for k in b_idx[1:]]
    d = np.array(diffs).reshape(len(diffs), e.dim)
    n = _null_direction(d, e.dim)
    gap = s[:, b_idx[0]] - s[:, a_idx[0]]
    return n * float(n @ gap)


def face_distances(e: SimplexEmbedding, masks) -> np.ndarray:
    """Lengths of :func:`altitude_by_projection` for many subsets at once."""
    s = e.vertices
    u = indicator_matrix(masks, e.n_nodes).astype(bool)
    out = np.empty(u.shape[0])
    if e.n_nodes == 2:
        out[:] = np.linalg.norm(s[:, 1] - s[:, 0])
        return out
    for row, members in enumerate(u):
        inside = np.flatnonzero(members)
        outside = np.flatnonzero(~members)
        diffs = np.concatenate(
            [(s[:, inside[1:]] - s[:, inside[:1]]).T, (s[:, outside[1:]] - s[:, outside[:1]]).T]
        )
        normal = np.linalg.svd(diffs, full_matrices=True)[2][-1]
        out[row] = abs(normal @ (s[:, outside[0]] - s[:, inside[0]]))
    return out


def facet_normal(e: SimplexEmbedding, i: int) -> np.ndarray:
    """Unit inner normal of the facet opposite vertex ``i``, from the vertices alone."""
    if not 0 <= i < e.n_nodes:
        raise SubsetError(f"vertex {i} outside 0..{e.n_nodes - 1}")
    rest = [k for k in range(e.n_nodes) if k != i]
    s = e.vertices
    d = np.array([s[:, k] - s[:, rest[0]] for k in rest[1:]]).reshape(len(rest) - 1, e.dim)
    n = _null_direction(d, e.dim)
    if n @ (s[:, i] - s[:, rest[0]]) < 0:
        n = -n
    return n / np.linalg.norm(n)
