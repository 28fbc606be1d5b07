"""Brute-force ground truth at desk scale.

Exhaustive Max-Cut, the matching minimum-altitude search on the inverse
simplex, spanning trees by deletion-contraction, resistance by contraction,
and small-graph enumeration. All size guards are hard errors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .exceptions import SizeGuardError
from .graph import VertexSubset, WeightedGraph, is_connected
from .simplex import SimplexEmbedding, face_distances

__all__ = [
    "CutSearchResult",
    "max_cut_bruteforce",
    "min_altitude_cut",
    "spanning_tree_oracle",
    "resistance_oracle",
    "enumerate_connected_graphs",
    "unlabeled_connected_graphs",
    "find_cospectral_pair",
    "MAX_CUT_GUARD",
    "TREE_GUARD",
    "ENUM_GUARD",
]

MAX_CUT_GUARD = 24
TREE_GUARD = 10
ENUM_GUARD = 8
# candidates within this relative distance of the optimum count as tied
TIE_RTOL = 1e-9
_CHUNK = 1 << 16


@dataclass(frozen=True)
class CutSearchResult:
    best_subset: VertexSubset
    best_value: float
    evaluated_count: int


def _guard(n: int, limit: int, what: str):
    if n > limit:
        raise SizeGuardError(f"{what} is limited to N <= {limit}, got N = {n}")


def _masks(n: int, start: int, stop: int) -> np.ndarray:
    # every mask has node 0 set, so each complementary pair appears once
    return (np.arange(start, stop, dtype=np.int64) << 1) | 1


def _bits(masks: np.ndarray, n: int) -> np.ndarray:
    return ((masks[:, None] >> np.arange(n, dtype=np.int64)) & 1).astype(bool)


def _select(values_iter, n: int, maximize: bool) -> tuple[int, float, int]:
    """Pick the smallest bitmask whose value ties the optimum (relative TIE_RTOL)."""
    masks_all, vals_all = [], []
    for masks, vals in values_iter:
        masks_all.append(masks)
        vals_all.append(vals)
    masks = np.concatenate(masks_all)
    vals = np.concatenate(vals_all)
    best = vals.max() if maximize else vals.min()
    slack = TIE_RTOL * max(1.0, abs(float(best)))
    tied = vals >= best - slack if maximize else vals <= best + slack
    pick = int(np.argmin(np.where(tied, masks, np.iinfo(np.int64).max)))
    return int(masks[pick]), float(vals[pick]), int(masks.size)


def _mask_chunks(n: int):
    total = (1 << (n - 1)) - 1  # drop the full node set
    for start in range(0, total, _CHUNK):
        yield _masks(n, start, min(total, start + _CHUNK))


def max_cut_bruteforce(g: WeightedGraph) -> CutSearchResult:
    """Maximum cut by visiting every complementary pair once.

    Ties (within a relative 1e-9) go to the smallest indicator bitmask, where
    node ``i`` is bit ``i``.
    """
    n = g.n_nodes
    _guard(n, MAX_CUT_GUARD, "max_cut_bruteforce")
    ii = np.array([e[0] for e in g.edges])
    jj = np.array([e[1] for e in g.edges])
    ww = np.array([e[2] for e in g.edges])

    def values():
        for masks in _mask_chunks(n):
            b = _bits(masks, n)
            yield masks, (b[:, ii] != b[:, jj]) @ ww

    mask, value, count = _select(values(), n, maximize=True)
    return CutSearchResult(VertexSubset.from_mask(mask, n), value, count)


def _dual_altitudes(s: np.ndarray, masks: np.ndarray) -> np.ndarray:
    # facet normals of S+ form its dual basis pinv(S+)^T; altitude^2 = 1/|S_dual u_V|^2
    dual = np.linalg.pinv(s).T
    g = dual.T @ dual
    b = _bits(masks, s.shape[1]).astype(float)
    quad = np.einsum("ij,jk,ik->i", b, g, b)
    return 1.0 / np.sqrt(quad)


def min_altitude_cut(inv: SimplexEmbedding, method: str = "projection") -> CutSearchResult:
    """Subset whose inverse-simplex altitude is shortest, searched geometrically.

    ``method="projection"`` measures the gap between complementary faces
    directly from the vertices; ``method="dual"`` reads it off the dual basis
    of the vertex matrix and is vectorized (useful past N ~ 14). Neither
    touches the graph. Tie-breaking matches :func:`max_cut_bruteforce`.
    """
    n = inv.n_nodes
    _guard(n, MAX_CUT_GUARD, "min_altitude_cut")
    if method not in ("projection", "dual"):
        raise ValueError(f"unknown method {method!r}")

    def values():
        for masks in _mask_chunks(n):
            if method == "projection":
                yield masks, face_distances(inv, masks)
            else:
                yield masks, _dual_altitudes(np.asarray(inv.vertices), masks)

    mask, value, count = _select(values(), n, maximize=False)
    return CutSearchResult(VertexSubset.from_mask(mask, n), value, count)


# --- spanning trees by deletion-contraction ---------------------------------


def _canonical(nodes, edges: dict) -> tuple:
    label = {v: k for k, v in enumerate(sorted(nodes))}
    return len(label), tuple(sorted((label[a], label[b], w) for (a, b), w in edges.items()))


@lru_cache(maxsize=1 << 18)
def _tree_weight(n: int, edges: tuple) -> float:
    """Sum over spanning trees of the product of edge weights, for a
    multigraph given with merged parallel edges on nodes ``0..n-1``."""
    if n == 1:
        return 1.0
    if not is_connected(n, ((a, b) for a, b, _ in edges)):
        return 0.0
    incident = [[] for _ in range(n)]
    for k, (a, b, _) in enumerate(edges):
        incident[a].append(k)
        incident[b].append(k)
    for v in range(n):
        if len(incident[v]) == 1:
            # a pendant edge belongs to every spanning tree
            a, b, w = edges[incident[v][0]]
            rest = {(x, y): ww for x, y, ww in edges if v not in (x, y)}
            return w * _tree_weight(*_canonical(set(range(n)) - {v}, rest))
    # branch on an edge at the lowest-degree node to keep subproblems small
    v = min(range(n), key=lambda x: len(incident[x]))
    a, b, w = edges[incident[v][0]]
    deleted = {(x, y): ww for x, y, ww in edges if (x, y) != (a, b)}
    return _tree_weight(*_canonical(range(n), deleted)) + w * _tree_weight(
        *_canonical(set(range(n)) - {b}, _contract(edges, a, b))
    )


def _contract(edges, keep: int, drop: int) -> dict:
    """Identify ``drop`` with ``keep``; loops vanish and parallel weights add."""
    merged: dict = {}
    for x, y, w in edges:
        x = keep if x == drop else x
        y = keep if y == drop else y
        if x == y:
            continue
        key = (min(x, y), max(x, y))
        merged[key] = merged.get(key, 0.0) + w
    return merged


def spanning_tree_oracle(g: WeightedGraph) -> float:
    """Weighted spanning-tree count by deletion-contraction.

    Each tree contributes the product of its edge weights, the convention
    under which the eigenvalue formula holds for weighted graphs. For
    unweighted graphs the result is the exact integer count.
    """
    _guard(g.n_nodes, TREE_GUARD, "spanning_tree_oracle")
    return _tree_weight(*_canonical(range(g.n_nodes), {(i, j): w for i, j, w in g.edges}))


def resistance_oracle(g: WeightedGraph, i: int, j: int) -> float:
    """Effective resistance as ``xi(G with i, j identified) / xi(G)``."""
    n = g.n_nodes
    _guard(n, TREE_GUARD, "resistance_oracle")
    if not (0 <= i < n and 0 <= j < n) or i == j:
        raise IndexError(f"need two distinct nodes in 0..{n - 1}, got ({i}, {j})")
    merged = _contract(g.edges, min(i, j), max(i, j))
    num = _tree_weight(*_canonical(set(range(n)) - {max(i, j)}, merged))
    return num / spanning_tree_oracle(g)


# --- graph enumeration -------------------------------------------------------


def enumerate_connected_graphs(n: int) -> Iterator[WeightedGraph]:
    """Every connected simple unweighted graph on ``n`` labeled nodes, once
    each, in increasing order of edge bitmask (bit ``k`` is the ``k``-th pair
    of ``itertools.combinations(range(n), 2)``)."""
    _guard(n, ENUM_GUARD, "enumerate_connected_graphs")
    if n < 2:
        raise ValueError("graphs need at least 2 nodes")
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1, 1 << len(pairs)):
        if mask.bit_count() < n - 1:
            continue
        chosen = [p for k, p in enumerate(pairs) if mask >> k & 1]
        if is_connected(n, chosen):
            yield WeightedGraph(n, tuple((a, b, 1.0) for a, b in chosen))


def unlabeled_connected_graphs(n: int) -> list[WeightedGraph]:
    """One representative per isomorphism class of connected graphs on ``n``
    nodes (``n <= 7``), in graph-atlas order."""
    import networkx as nx

    if not 2 <= n <= 7:
        raise SizeGuardError(f"the graph atlas covers 2 <= n <= 7, got {n}")
    out = []
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() == n and nx.is_connected(h):
            out.append(WeightedGraph(n, tuple((int(a), int(b), 1.0) for a, b in h.edges())))
    return out


def _to_nx(g: WeightedGraph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n_nodes))
    h.add_weighted_edges_from(g.edges)
    return h


def find_cospectral_pair(max_n: int = 7, tol: float = 1e-8):
    """First pair of non-isomorphic connected graphs with equal Laplacian
    spectra, scanning isomorphism classes by node count then atlas order.

    Returns ``(g1, g2)`` or ``None``.
    """
    import networkx as nx

    for n in range(2, max_n + 1):
        seen: list[tuple[np.ndarray, WeightedGraph]] = []
        for g in unlabeled_connected_graphs(n):
            q = np.diag(g.adjacency().sum(axis=1)) - g.adjacency()
            spec = np.linalg.eigvalsh(q)
            for spec0, g0 in seen:
                if np.all(np.abs(spec - spec0) <= tol * max(1.0, spec[-1])):
                    if not nx.is_isomorphic(_to_nx(g0), _to_nx(g)):
                        return g0, g
            seen.append((spec, g))
    return None
