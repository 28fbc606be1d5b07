"""Graphs as simplices.

A connected weighted graph on N nodes is embedded as an (N-1)-dimensional
simplex whose Gram matrix is the Laplacian, together with an inverse simplex
whose Gram matrix is the Laplacian pseudoinverse. Cuts, resistances, tree
counts and the circumscribed ellipsoid all become geometry on these two
objects.
"""

__version__ = "0.1.0"

from .cuts import (
    CutReport,
    centroid_inner_product,
    cut_report,
    duality_inequality,
    effective_resistance,
    facet_angle,
    facet_angle_geometric,
    inverse_altitude_inner_product,
    quadratic_form_bound,
    resistance_matrix,
)
from .estimator import GraphSimplexEmbedding
from .exceptions import (
    BarycentricError,
    ConnectivityError,
    EdgeListParseError,
    EmbeddingMismatchError,
    GraphSimplexError,
    GraphValidationError,
    SizeGuardError,
    SpectralError,
    SubsetError,
)
from .graph import (
    VertexSubset,
    WeightedGraph,
    cut_intersection_size,
    cut_size,
    degree_vector,
    format_edge_list,
    laplacian,
    parse_edge_list,
    read_edge_list,
)
from .oracles import (
    CutSearchResult,
    enumerate_connected_graphs,
    find_cospectral_pair,
    max_cut_bruteforce,
    min_altitude_cut,
    resistance_oracle,
    spanning_tree_oracle,
    unlabeled_connected_graphs,
)
from .simplex import (
    Kind,
    SimplexEmbedding,
    altitude,
    check_barycentric,
    contains,
    dual_pairing,
    embed,
    embed_pair,
    face_centroid,
    gram,
    point_from_barycentric,
)
from .spectral import SpectralDecomposition, eigendecompose, pseudoinverse
from .steiner import (
    SteinerEllipsoid,
    VolumeReport,
    cospectral_co_steiner_check,
    ellipsoid_to_simplex_ratio,
    spanning_tree_count,
    steiner_ellipsoid,
    volumes,
)
from .verify import Check, verify_graph

__all__ = [
    "BarycentricError",
    "Check",
    "ConnectivityError",
    "CutReport",
    "CutSearchResult",
    "EdgeListParseError",
    "EmbeddingMismatchError",
    "GraphSimplexEmbedding",
    "GraphSimplexError",
    "GraphValidationError",
    "Kind",
    "SimplexEmbedding",
    "SizeGuardError",
    "SpectralDecomposition",
    "SpectralError",
    "SteinerEllipsoid",
    "SubsetError",
    "VertexSubset",
    "VolumeReport",
    "WeightedGraph",
    "altitude",
    "centroid_inner_product",
    "check_barycentric",
    "contains",
    "cospectral_co_steiner_check",
    "cut_intersection_size",
    "cut_report",
    "cut_size",
    "degree_vector",
    "dual_pairing",
    "duality_inequality",
    "effective_resistance",
    "eigendecompose",
    "ellipsoid_to_simplex_ratio",
    "embed",
    "embed_pair",
    "enumerate_connected_graphs",
    "face_centroid",
    "facet_angle",
    "facet_angle_geometric",
    "find_cospectral_pair",
    "format_edge_list",
    "gram",
    "inverse_altitude_inner_product",
    "laplacian",
    "max_cut_bruteforce",
    "min_altitude_cut",
    "parse_edge_list",
    "point_from_barycentric",
    "pseudoinverse",
    "quadratic_form_bound",
    "read_edge_list",
    "resistance_matrix",
    "resistance_oracle",
    "spanning_tree_count",
    "spanning_tree_oracle",
    "steiner_ellipsoid",
    "unlabeled_connected_graphs",
    "verify_graph",
    "volumes",
]
