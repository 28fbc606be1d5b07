"""Run every graph/simplex identity on one graph and collect residuals.

Each check reports a non-negative residual; it passes when the residual is
at most the tolerance. Residuals are absolute for order-one quantities and
relative (``|a - b| / max(1, |b|)``) otherwise. Inequalities report their
violation, clipped at zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cuts import facet_angle, facet_angle_geometric, resistance_matrix, quadratic_form_bound
from .graph import (
    WeightedGraph,
    cut_intersection_size,
    cut_sizes,
    degree_vector,
    indicator_matrix,
    laplacian,
    subset_masks,
)
from .oracles import (
    TREE_GUARD,
    max_cut_bruteforce,
    min_altitude_cut,
    resistance_oracle,
    spanning_tree_oracle,
)
from .simplex import altitude, altitudes, embed_pair, face_centroid, face_centroids, face_distances
from .spectral import eigendecompose, pseudoinverse
from .steiner import (
    ellipsoid_form,
    ellipsoid_volume_from_axes,
    gamma_half_integer,
    simplex_volume_det,
    spanning_tree_count,
    steiner_ellipsoid,
    volumes,
)

__all__ = ["Check", "verify_graph", "DEFAULT_TOLERANCE"]

DEFAULT_TOLERANCE = 1e-9
EXHAUSTIVE_SUBSETS = 12
MAXCUT_LIMIT = 14
SAMPLED_SUBSETS = 512


@dataclass(frozen=True)
class Check:
    name: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.residual <= self.tolerance)


def _rel(a, b) -> float:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a - b) / np.maximum(1.0, np.abs(b))))


def _masks(n: int, rng: np.random.Generator) -> np.ndarray:
    if n <= EXHAUSTIVE_SUBSETS:
        return subset_masks(n)
    return np.unique(rng.integers(1, (1 << n) - 1, size=SAMPLED_SUBSETS, dtype=np.int64))


def _disjoint_pairs(n: int, rng: np.random.Generator, count: int):
    pairs = [(1 << i, 1 << j) for i in range(n) for j in range(i + 1, n)]
    for _ in range(count):
        labels = rng.integers(0, 3, size=n)
        a = sum(1 << i for i in range(n) if labels[i] == 1)
        b = sum(1 << i for i in range(n) if labels[i] == 2)
        if a and b:
            pairs.append((a, b))
    return pairs


def _mask_members(mask: int, n: int):
    return [i for i in range(n) if mask >> i & 1]


def verify_graph(
    g: WeightedGraph,
    tolerance: float = DEFAULT_TOLERANCE,
    seed: int = 0,
    n_random: int = 1000,
) -> list[Check]:
    """All identity checks for ``g``, in a fixed order."""
    rng = np.random.default_rng(seed)
    n = g.n_nodes
    checks: list[Check] = []

    def add(name, residual):
        checks.append(Check(name, float(residual), tolerance))

    q = laplacian(g)
    d = eigendecompose(q)
    q_pinv = pseudoinverse(d)
    orig, inv = embed_pair(d)
    s, sp = orig.vertices, inv.vertices
    mu = d.eigenvalues
    scale = max(1.0, float(mu[0]))
    proj = np.eye(n) - 1.0 / n
    deg = degree_vector(g)
    adj = g.adjacency()

    add("spectral.reconstruction", np.max(np.abs(d.reconstruct() - q)) / scale)
    add("spectral.pseudoinverse_relation", np.max(np.abs(q @ q_pinv - proj)))
    add("embedding.gram_original", np.max(np.abs(s.T @ s - q)) / scale)
    add("embedding.gram_inverse", np.max(np.abs(sp.T @ sp - q_pinv)))
    add("embedding.dual_pairing", np.max(np.abs(s.T @ sp - proj)))
    add("embedding.centroid_at_origin", max(np.linalg.norm(s.sum(axis=1)), np.linalg.norm(sp.sum(axis=1))))

    off = ~np.eye(n, dtype=bool)
    add("embedding.adjacency", np.max(np.abs((s.T @ s + adj)[off])) / scale if n > 1 else 0.0)
    add("embedding.degree", _rel(np.sum(s * s, axis=0), deg))

    # facet orthogonality: s+_i is normal to every edge of the facet opposite i
    worst = 0.0
    for i in range(n):
        rest = [k for k in range(n) if k != i]
        edges = s[:, rest[1:]] - s[:, rest[:1]]
        if edges.size:
            worst = max(worst, float(np.max(np.abs(sp[:, i] @ edges))))
    add("embedding.facet_orthogonality", worst)

    # halfspace test vs convex hull: interior points in, reflections through a vertex out
    x = rng.dirichlet(np.ones(n), size=100)
    pts = x @ s.T
    inside = np.all(pts @ sp >= -1.0 / n - 1e-9, axis=1)
    vertex_in = np.all(s.T @ sp >= -1.0 / n - 1e-9, axis=1)
    far = np.argmax(x, axis=1)
    # barycentric coordinates of 2 s_i - p are 2 e_i - x: negative off i, so exterior
    refl = 2.0 * s[:, far].T - pts
    outside = ~np.all(refl @ sp >= -1.0 / n - 1e-9, axis=1)
    add("embedding.halfspace_membership", np.sum(~inside) + np.sum(~vertex_in) + np.sum(~outside))

    masks = _masks(n, rng)
    u = indicator_matrix(masks, n)
    sizes = u.sum(axis=1)
    cuts = cut_sizes(g, masks)
    c = face_centroids(orig, masks)
    c_bar = face_centroids(orig, ((1 << n) - 1) ^ masks)
    cp = face_centroids(inv, masks)
    dual_quad = np.einsum("ij,jk,ik->i", u, q_pinv, u)
    a_plus = altitudes(orig, inv, masks, "inverse")
    a_orig = altitudes(orig, inv, masks, "original")

    add("cuts.complementary_centroids", np.max(np.linalg.norm(c * sizes + c_bar * (n - sizes), axis=0)))
    add("cuts.centroid_cut", _rel(np.sum(c * c, axis=0) * sizes**2, cuts))
    add("cuts.inverse_centroid", _rel(np.sum(cp * cp, axis=0) * sizes**2, dual_quad))
    add("cuts.inverse_altitude", _rel(np.sum(a_plus * a_plus, axis=0) * cuts, np.ones_like(cuts)))
    add("cuts.original_altitude", _rel(np.sum(a_orig * a_orig, axis=0) * dual_quad, np.ones_like(cuts)))

    sample = masks if masks.size <= 64 else rng.choice(masks, size=64, replace=False)
    worst = 0.0
    for mask in sample:
        members = _mask_members(int(mask), n)
        for emb, target in ((orig, "original"), (inv, "inverse")):
            closed = altitude(orig, inv, members, target)
            measured = face_distances(emb, np.array([mask]))[0]
            worst = max(worst, abs(np.linalg.norm(closed) - measured) / max(1.0, measured))
            # orthogonal to both faces
            comp = [k for k in range(n) if k not in members]
            for face in (members, comp):
                e = emb.vertices[:, face[1:]] - emb.vertices[:, face[:1]]
                if e.size:
                    worst = max(worst, float(np.max(np.abs(closed @ e))) / max(1.0, np.linalg.norm(closed)))
    add("cuts.altitude_closed_form", worst)

    worst_c = worst_a = 0.0
    for m1, m2 in _disjoint_pairs(n, rng, 50):
        v1, v2 = _mask_members(m1, n), _mask_members(m2, n)
        between = cut_intersection_size(g, v1, v2)
        lhs = float(face_centroid(orig, v1) @ face_centroid(orig, v2))
        worst_c = max(worst_c, _rel(lhs, -between / (len(v1) * len(v2))))
        cut1 = _cut_of(g, m1)
        cut2 = _cut_of(g, m2)
        lhs_a = float(altitude(orig, inv, v1) @ altitude(orig, inv, v2))
        worst_a = max(worst_a, _rel(lhs_a, -between / (cut1 * cut2)))
    add("cuts.centroid_inner_product", worst_c)
    add("cuts.altitude_inner_product", worst_a)

    # altitude is the shortest vector between complementary faces
    worst = 0.0
    for mask in masks[rng.integers(0, masks.size, size=min(200, masks.size))]:
        members = _mask_members(int(mask), n)
        comp = [k for k in range(n) if k not in members]
        alt = np.linalg.norm(altitude(orig, inv, members, "original"))
        xs = np.zeros((10, n))
        xs[:, comp] = rng.dirichlet(np.ones(len(comp)), size=10)
        ys = np.zeros((10, n))
        ys[:, members] = rng.dirichlet(np.ones(len(members)), size=10)
        gaps = np.linalg.norm(s @ (xs - ys).T, axis=0)
        worst = max(worst, float(np.max(alt - gaps)))
    add("cuts.altitude_minimality", max(0.0, worst))

    y = rng.standard_normal((n_random, n))
    y -= y.mean(axis=1, keepdims=True)
    lhs, rhs, _ = quadratic_form_bound(g, y, q, q_pinv)
    add("cuts.quadratic_form_bound", max(0.0, float(np.max((rhs - lhs) / np.maximum(1.0, rhs)))))

    product = cuts * dual_quad
    bound = (sizes * (n - sizes) / n) ** 2
    add("cuts.duality_inequality", max(0.0, float(np.max((bound - product) / np.maximum(1.0, bound)))))

    ell = steiner_ellipsoid(d, orig)
    form = ellipsoid_form(inv)
    target = (n - 1) / n
    add("steiner.vertex_membership", np.max(np.abs(np.einsum("ki,kl,li->i", s, form, s) - target)))
    eps = ell.semi_axes
    add("steiner.semi_axis_endpoints", np.max(np.abs(np.einsum("ki,kl,li->i", eps, form, eps) - target)))
    cross = eps.T @ eps
    add("steiner.semi_axes_orthogonal", np.max(np.abs(cross - np.diag(np.diag(cross)))) / scale)
    add("steiner.semi_axis_lengths", _rel(np.sum(eps * eps, axis=0), mu * target))
    grad = form @ s
    # sine of the angle via the rejection of one unit vector from the other;
    # sqrt(1 - cos^2) would lose half the digits near zero
    gh = grad / np.linalg.norm(grad, axis=0)
    sh = sp / np.linalg.norm(sp, axis=0)
    rejection = gh - np.sum(gh * sh, axis=0) * sh
    add("steiner.tangency", float(np.max(np.linalg.norm(rejection, axis=0))))

    xi = spanning_tree_count(d)
    vol = volumes(d, xi)
    if n <= TREE_GUARD:
        add("volumes.tree_count_oracle", _rel(xi, spanning_tree_oracle(g)))
    add("volumes.simplex", _rel(vol.simplex_volume, simplex_volume_det(orig)))
    add("volumes.inverse_simplex", _rel(vol.inverse_simplex_volume, simplex_volume_det(inv)))
    add(
        "volumes.product",
        _rel(vol.simplex_volume * vol.inverse_simplex_volume, n / gamma_half_integer(n) ** 2),
    )
    add("volumes.ellipsoid", _rel(vol.ellipsoid_volume, ellipsoid_volume_from_axes(ell.lengths)))

    omega = resistance_matrix(inv)
    diag = np.diag(q_pinv)
    add("resistance.pseudoinverse", _rel(omega, diag[:, None] + diag[None, :] - 2 * q_pinv))
    if n <= TREE_GUARD:
        ref = np.array([[resistance_oracle(g, i, j) if i != j else 0.0 for j in range(n)] for i in range(n)])
        add("resistance.oracle", _rel(omega, ref))
    viol = 0.0
    for k in range(n):
        viol = max(viol, float(np.max(omega - omega[:, k][:, None] - omega[k, :][None, :])))
    add("resistance.triangle_inequality", max(0.0, viol))

    worst = obtuse = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            phi = facet_angle(g, i, j)
            worst = max(worst, abs(phi - facet_angle_geometric(inv, i, j)))
            obtuse = max(obtuse, phi - math.pi / 2)
    add("facet_angle.geometric", worst)
    add("facet_angle.non_obtuse", max(0.0, obtuse))

    if n <= MAXCUT_LIMIT:
        best = max_cut_bruteforce(g)
        alt = min_altitude_cut(inv)
        mismatch = float(best.best_subset != alt.best_subset)
        add("maxcut.altitude_argmax", mismatch)
        add("maxcut.altitude_value", _rel(alt.best_value**2 * best.best_value, 1.0))

    return checks


def _cut_of(g: WeightedGraph, mask: int) -> float:
    return float(cut_sizes(g, np.array([mask]))[0])
