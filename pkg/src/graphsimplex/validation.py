"""Input coercion shared by the estimator and the CLI."""

from __future__ import annotations

import os

import numpy as np

from .exceptions import BarycentricError, GraphValidationError
from .graph import WeightedGraph, parse_edge_list, read_edge_list


def check_graph(X) -> WeightedGraph:
    """Accept a graph in any of the supported forms and return a ``WeightedGraph``.

    Supported: ``WeightedGraph``; a square symmetric weight matrix; a sequence
    of ``(i, j)`` / ``(i, j, w)`` tuples; edge-list text; a path to an
    edge-list file; a ``networkx.Graph`` with integer nodes ``0..N-1``.
    """
    if isinstance(X, WeightedGraph):
        return X
    if isinstance(X, os.PathLike):
        return read_edge_list(X)
    if isinstance(X, str):
        if "\n" not in X and os.path.isfile(X):
            return read_edge_list(X)
        return parse_edge_list(X)
    if hasattr(X, "edges") and hasattr(X, "number_of_nodes"):
        n = X.number_of_nodes()
        if sorted(X.nodes()) != list(range(n)):
            raise GraphValidationError("networkx graph nodes must be the integers 0..N-1")
        return WeightedGraph(n, tuple((a, b, data.get("weight", 1.0)) for a, b, data in X.edges(data=True)))
    try:
        arr = np.asarray(X, dtype=float)
    except (TypeError, ValueError) as exc:
        raise GraphValidationError(f"cannot interpret {type(X).__name__} as a graph") from exc
    if arr.ndim == 2 and arr.shape[0] == arr.shape[1] >= 2:
        if np.array_equal(arr, arr.T) and np.all(np.diag(arr) == 0):
            return WeightedGraph.from_adjacency(arr)
    if arr.ndim == 2 and arr.shape[1] in (2, 3) and arr.shape[0] > 0:
        edges = tuple(tuple(row) for row in arr.tolist())
        return WeightedGraph(int(arr[:, :2].max()) + 1, edges)
    raise GraphValidationError(f"cannot interpret {type(X).__name__} as a graph")


def check_barycentric_rows(X, n_nodes: int, tol: float = 1e-12) -> np.ndarray:
    """2-D array of barycentric coordinates, one point per row."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    if X.shape[1] != n_nodes:
        raise BarycentricError(f"expected {n_nodes} columns, got {X.shape[1]}")
    if np.any(X < 0) or not np.all(np.isfinite(X)):
        raise BarycentricError("barycentric coordinates must be finite and non-negative")
    bad = np.abs(X.sum(axis=1) - 1.0) > tol
    if np.any(bad):
        raise BarycentricError(f"rows {np.flatnonzero(bad).tolist()} do not sum to 1")
    return X
