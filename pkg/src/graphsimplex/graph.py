"""Weighted undirected graphs, edge-list ingestion, Laplacians and cut sizes.

Node ids are dense 0-based integers ``0..n_nodes-1``. Everything here is
purely combinatorial: no eigenvalues, no tolerances.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from typing import Iterable, TextIO

import numpy as np

from .exceptions import (
    ConnectivityError,
    EdgeListParseError,
    GraphValidationError,
    SubsetError,
)

__all__ = [
    "WeightedGraph",
    "VertexSubset",
    "parse_edge_list",
    "read_edge_list",
    "format_edge_list",
    "laplacian",
    "degree_vector",
    "cut_size",
    "cut_intersection_size",
    "is_connected",
    "subset_masks",
    "indicator_matrix",
    "cut_sizes",
]


def _find(parent, i):
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


def is_connected(n_nodes: int, pairs: Iterable[tuple[int, int]]) -> bool:
    """Union-find connectivity test on ``n_nodes`` nodes."""
    parent = list(range(n_nodes))
    components = n_nodes
    for i, j in pairs:
        ri, rj = _find(parent, i), _find(parent, j)
        if ri != rj:
            parent[ri] = rj
            components -= 1
    return components == 1


@dataclass(frozen=True)
class WeightedGraph:
    """Connected, simple, positively weighted undirected graph.

    Edges are stored as ``(i, j, w)`` with ``i < j``, sorted, so two graphs
    with the same edge set compare equal whatever the input order.
    Construction validates everything and raises on the first problem.
    """

    n_nodes: int
    edges: tuple[tuple[int, int, float], ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        n = self.n_nodes
        if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 2:
            raise GraphValidationError(f"need an integer node count >= 2, got {n!r}")
        normalized = []
        index = {}
        for edge in self.edges:
            if len(edge) == 2:
                i, j = edge
                w = 1.0
            elif len(edge) == 3:
                i, j, w = edge
            else:
                raise GraphValidationError(f"edge must be (i, j) or (i, j, w), got {edge!r}")
            i, j, w = int(i), int(j), float(w)
            if not (0 <= i < n and 0 <= j < n):
                raise GraphValidationError(f"edge ({i}, {j}) has a node id outside 0..{n - 1}")
            if i == j:
                raise GraphValidationError(f"self-loop on node {i}")
            if not (math.isfinite(w) and w > 0.0):
                raise GraphValidationError(f"edge ({i}, {j}) has non-positive or non-finite weight {w!r}")
            key = (min(i, j), max(i, j))
            if key in index:
                raise GraphValidationError(f"duplicate edge {key}")
            index[key] = w
            normalized.append((key[0], key[1], w))
        if not is_connected(n, index):
            raise ConnectivityError(f"graph on {n} nodes with {len(index)} edges is disconnected")
        object.__setattr__(self, "n_nodes", int(n))
        object.__setattr__(self, "edges", tuple(sorted(normalized)))
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_adjacency(cls, adjacency) -> "WeightedGraph":
        """Build from a symmetric non-negative weight matrix (zero = no edge)."""
        a = np.asarray(adjacency, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise GraphValidationError(f"adjacency must be square, got shape {a.shape}")
        if not np.array_equal(a, a.T):
            raise GraphValidationError("adjacency matrix is not symmetric")
        if np.any(np.diag(a) != 0):
            raise GraphValidationError("adjacency matrix has self-loops on the diagonal")
        if np.any(a < 0):
            raise GraphValidationError("adjacency matrix has negative entries")
        iu, ju = np.nonzero(np.triu(a, 1))
        return cls(a.shape[0], tuple((int(i), int(j), float(a[i, j])) for i, j in zip(iu, ju)))

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def is_unweighted(self) -> bool:
        return all(w == 1.0 for _, _, w in self.edges)

    def weight(self, i: int, j: int) -> float:
        """Weight of edge ``{i, j}``, or 0.0 when absent."""
        return self._index.get((min(i, j), max(i, j)), 0.0)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self._index

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n_nodes, self.n_nodes))
        for i, j, w in self.edges:
            a[i, j] = a[j, i] = w
        return a

    def relabel(self, perm) -> "WeightedGraph":
        """Graph with node ``i`` renamed to ``perm[i]``."""
        perm = [int(p) for p in perm]
        if sorted(perm) != list(range(self.n_nodes)):
            raise GraphValidationError("relabeling must be a permutation of the node ids")
        return WeightedGraph(self.n_nodes, tuple((perm[i], perm[j], w) for i, j, w in self.edges))


@dataclass(frozen=True)
class VertexSubset:
    """Nonempty proper subset of the nodes ``0..n_nodes-1``."""

    members: frozenset
    n_nodes: int

    def __post_init__(self):
        members = frozenset(int(m) for m in self.members)
        if not members:
            raise SubsetError("vertex subset is empty")
        bad = [m for m in members if not 0 <= m < self.n_nodes]
        if bad:
            raise SubsetError(f"subset members {sorted(bad)} outside 0..{self.n_nodes - 1}")
        if len(members) == self.n_nodes:
            raise SubsetError("vertex subset must be proper (its complement is empty)")
        object.__setattr__(self, "members", members)

    @classmethod
    def from_mask(cls, mask: int, n_nodes: int) -> "VertexSubset":
        """Subset whose bit ``i`` (value ``1 << i``) marks node ``i``."""
        return cls(frozenset(i for i in range(n_nodes) if mask >> i & 1), n_nodes)

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def mask(self) -> int:
        return sum(1 << i for i in self.members)

    @property
    def indicator(self) -> np.ndarray:
        u = np.zeros(self.n_nodes)
        u[list(self.members)] = 1.0
        return u

    def complement(self) -> "VertexSubset":
        return VertexSubset(frozenset(range(self.n_nodes)) - self.members, self.n_nodes)

    def sorted_members(self) -> list[int]:
        return sorted(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)


def as_subset(v, n_nodes: int) -> VertexSubset:
    """Coerce an iterable of node ids (or a ``VertexSubset``) for a graph of size ``n_nodes``."""
    if isinstance(v, VertexSubset):
        if v.n_nodes != n_nodes:
            raise SubsetError(f"subset is over {v.n_nodes} nodes, expected {n_nodes}")
        return v
    if isinstance(v, (int, np.integer)):
        v = (v,)
    return VertexSubset(frozenset(v), n_nodes)


def parse_edge_list(text: str | TextIO) -> WeightedGraph:
    """Parse whitespace-separated ``i j [w]`` lines into a validated graph.

    ``#`` starts a comment; blank lines are skipped; ``w`` defaults to 1.0.
    The node count is one more than the largest id mentioned.
    """
    stream = io.StringIO(text) if isinstance(text, str) else text
    edges = []
    max_id = -1
    for lineno, raw in enumerate(stream, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) not in (2, 3):
            raise EdgeListParseError(f"expected 'i j [w]', got {line!r}", lineno)
        try:
            i, j = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListParseError(f"node ids must be integers, got {line!r}", lineno) from None
        if i < 0 or j < 0:
            raise EdgeListParseError(f"node ids must be non-negative, got {line!r}", lineno)
        if len(tokens) == 3:
            try:
                w = float(tokens[2])
            except ValueError:
                raise EdgeListParseError(f"weight must be a number, got {tokens[2]!r}", lineno) from None
        else:
            w = 1.0
        edges.append((i, j, w))
        max_id = max(max_id, i, j)
    if not edges:
        raise EdgeListParseError("no edges found")
    return WeightedGraph(max_id + 1, tuple(edges))


def read_edge_list(path) -> WeightedGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh)


def format_edge_list(g: WeightedGraph) -> str:
    lines = []
    for i, j, w in g.edges:
        lines.append(f"{i} {j}" if w == 1.0 else f"{i} {j} {w!r}")
    return "\n".join(lines) + "\n"


def laplacian(g: WeightedGraph) -> np.ndarray:
    """Weighted Laplacian: degrees on the diagonal, ``-w_ij`` off it."""
    q = np.zeros((g.n_nodes, g.n_nodes))
    for i, j, w in g.edges:
        q[i, j] -= w
        q[j, i] -= w
        q[i, i] += w
        q[j, j] += w
    return q


def degree_vector(g: WeightedGraph) -> np.ndarray:
    d = np.zeros(g.n_nodes)
    for i, j, w in g.edges:
        d[i] += w
        d[j] += w
    return d


def cut_size(g: WeightedGraph, v) -> float:
    """Total weight of edges with exactly one endpoint in ``v``.

    Computed by edge enumeration; the quadratic form ``u_V^T Q u_V`` gives the
    same number and is what the geometric side of the package relies on.
    """
    members = as_subset(v, g.n_nodes).members
    return float(sum(w for i, j, w in g.edges if (i in members) != (j in members)))


def cut_intersection_size(g: WeightedGraph, v1, v2) -> float:
    """Total weight of edges running between the disjoint sets ``v1`` and ``v2``."""
    a = as_subset(v1, g.n_nodes).members
    b = as_subset(v2, g.n_nodes).members
    if a & b:
        raise SubsetError(f"subsets overlap on {sorted(a & b)}")
    return float(sum(w for i, j, w in g.edges if (i in a and j in b) or (i in b and j in a)))


def subset_masks(n_nodes: int, complement_free: bool = False) -> np.ndarray:
    """Bitmasks of all nonempty proper subsets, ascending.

    With ``complement_free`` only masks containing node 0 are returned, one
    per complementary pair.
    """
    masks = np.arange(1, (1 << n_nodes) - 1, dtype=np.int64)
    if complement_free:
        masks = masks[(masks & 1) == 1]
    return masks


def indicator_matrix(masks, n_nodes: int) -> np.ndarray:
    """Rows are the 0/1 indicator vectors of ``masks``."""
    masks = np.asarray(masks, dtype=np.int64)
    return ((masks[:, None] >> np.arange(n_nodes, dtype=np.int64)) & 1).astype(float)


def cut_sizes(g: WeightedGraph, masks) -> np.ndarray:
    """:func:`cut_size` for many subsets at once, by edge enumeration."""
    u = indicator_matrix(masks, g.n_nodes).astype(bool)
    ii = np.array([e[0] for e in g.edges])
    jj = np.array([e[1] for e in g.edges])
    ww = np.array([e[2] for e in g.edges])
    return (u[:, ii] != u[:, jj]).astype(float) @ ww
