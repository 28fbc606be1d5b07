"""scikit-learn style front end for the graph-simplex embedding."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .graph import laplacian
from .simplex import Kind, embed_pair
from .spectral import eigendecompose, pseudoinverse
from .validation import check_barycentric_rows, check_graph


class GraphSimplexEmbedding(TransformerMixin, BaseEstimator):
    """Embed the nodes of a connected weighted graph as simplex vertices.

    ``fit`` takes one graph (``WeightedGraph``, weight matrix, edge tuples,
    edge-list text or path, or a networkx graph). After fitting, rows of
    ``embedding_`` are the vertex coordinates of the chosen simplex, so
    ``embedding_ @ embedding_.T`` is the Laplacian (``kind="original"``) or
    its pseudoinverse (``kind="inverse"``).

    ``transform`` maps barycentric coordinates (rows summing to one, one
    column per node) to points; ``inverse_transform`` maps points back.

    Parameters
    ----------
    kind : {"original", "inverse"}
        Which simplex ``embedding_`` and ``transform`` refer to.

    Attributes
    ----------
    graph_ : WeightedGraph
    laplacian_ : ndarray of shape (n_nodes, n_nodes)
    pseudoinverse_ : ndarray of shape (n_nodes, n_nodes)
    eigenvalues_ : ndarray of shape (n_nodes - 1,)
        Nonzero Laplacian eigenvalues, descending.
    decomposition_ : SpectralDecomposition
    original_ : SimplexEmbedding
    inverse_ : SimplexEmbedding
    embedding_ : ndarray of shape (n_nodes, n_nodes - 1)
    n_nodes_ : int
    """

    def __init__(self, kind="original"):
        self.kind = kind

    def fit(self, X, y=None):
        kind = Kind(self.kind)
        g = check_graph(X)
        q = laplacian(g)
        d = eigendecompose(q)
        self.graph_ = g
        self.laplacian_ = q
        self.decomposition_ = d
        self.eigenvalues_ = d.eigenvalues
        self.pseudoinverse_ = pseudoinverse(d)
        self.original_, self.inverse_ = embed_pair(d)
        self.embedding_ = np.array((self.original_ if kind is Kind.ORIGINAL else self.inverse_).vertices.T)
        self.n_nodes_ = g.n_nodes
        return self

    def fit_transform(self, X, y=None):
        return self.fit(X).embedding_

    def _simplex(self):
        check_is_fitted(self, "embedding_")
        return self.original_ if Kind(self.kind) is Kind.ORIGINAL else self.inverse_

    def _dual(self):
        return self.inverse_ if Kind(self.kind) is Kind.ORIGINAL else self.original_

    def transform(self, X):
        """Points ``S x`` for each barycentric row ``x`` of ``X``."""
        s = self._simplex()
        X = check_barycentric_rows(X, self.n_nodes_)
        return X @ s.vertices.T

    def inverse_transform(self, P):
        """Barycentric coordinates of points, ``x = S_dual^T p + 1/N``.

        Exact for points of the simplex's affine hull; entries go negative
        outside the simplex.
        """
        s = self._simplex()
        P = np.atleast_2d(np.asarray(P, dtype=float))
        if P.shape[1] != s.dim:
            raise ValueError(f"expected points with {s.dim} coordinates, got {P.shape[1]}")
        return P @ self._dual().vertices + 1.0 / self.n_nodes_

    def contains(self, P, tol=1e-9):
        """Halfspace membership of each point (rows of ``P``)."""
        self._simplex()
        P = np.atleast_2d(np.asarray(P, dtype=float))
        return np.all(P @ self._dual().vertices >= -1.0 / self.n_nodes_ - tol, axis=1)

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "embedding_")
        return np.array([f"{Kind(self.kind).value}{k}" for k in range(self.n_nodes_ - 1)], dtype=object)
