"""Assemble the report document and serialize it deterministically."""

from __future__ import annotations

import json
import math

import numpy as np

from .cuts import cut_report, facet_angle, resistance_matrix
from .exceptions import SizeGuardError
from .graph import WeightedGraph, degree_vector, laplacian, subset_masks, VertexSubset
from .simplex import embed_pair, gram
from .spectral import eigendecompose, pseudoinverse
from .steiner import (
    ellipsoid_to_simplex_ratio,
    ellipsoid_to_simplex_ratio_closed_form,
    report_tree_count,
    spanning_tree_count,
    steiner_ellipsoid,
    volumes,
)
from .verify import DEFAULT_TOLERANCE, Check, verify_graph

EXHAUSTIVE_CUTS_GUARD = 20
SIGNIFICANT_DIGITS = 12


def _clean(obj):
    """Recursively convert to plain JSON types, rounding floats to 12 significant digits."""
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _clean(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if not math.isfinite(x):
            return None
        x = float(f"{x:.{SIGNIFICANT_DIGITS}g}")
        return 0.0 if x == 0 else x
    return obj


def dumps(doc) -> str:
    return json.dumps(_clean(doc), sort_keys=True, indent=2) + "\n"


def verdicts(checks: list[Check]) -> dict:
    return {
        "tolerance": checks[0].tolerance if checks else DEFAULT_TOLERANCE,
        "all_passed": all(c.passed for c in checks),
        "checks": {c.name: {"max_residual": c.residual, "passed": c.passed} for c in checks},
    }


def _cut_entry(rep) -> dict:
    return {
        "subset": rep.subset.sorted_members(),
        "cut_size": rep.cut_size,
        "dual_quadratic": rep.dual_quadratic,
        "centroid_sqnorm": rep.centroid_sqnorm,
        "inverse_centroid_sqnorm": rep.inverse_centroid_sqnorm,
        "altitude_sqlen_inverse": rep.altitude_sqlen_inverse,
        "altitude_sqlen_original": rep.altitude_sqlen_original,
    }


def build_report(g: WeightedGraph, exhaustive_cuts: bool = False, tolerance: float = DEFAULT_TOLERANCE) -> dict:
    """Everything the package computes about ``g``, as a plain dict."""
    n = g.n_nodes
    if exhaustive_cuts and n > EXHAUSTIVE_CUTS_GUARD:
        raise SizeGuardError(f"--exhaustive-cuts is limited to N <= {EXHAUSTIVE_CUTS_GUARD}, got N = {n}")
    d = eigendecompose(laplacian(g))
    orig, inv = embed_pair(d)
    if exhaustive_cuts:
        subsets = [VertexSubset.from_mask(int(m), n) for m in subset_masks(n, complement_free=True)]
    else:
        subsets = [VertexSubset(frozenset({i}), n) for i in range(n)]
    angles = [[None if i == j else facet_angle(g, i, j) for j in range(n)] for i in range(n)]
    ell = steiner_ellipsoid(d, orig)
    vol = volumes(d, spanning_tree_count(d))
    checks = verify_graph(g, tolerance=tolerance)
    return {
        "graph": {
            "n_nodes": n,
            "n_edges": g.n_edges,
            "degrees": degree_vector(g),
            "unweighted": g.is_unweighted,
        },
        "spectrum": {"eigenvalues": d.eigenvalues, "order": "descending"},
        "embedding": {"gram_original": gram(orig), "gram_inverse": gram(inv)},
        "pseudoinverse": pseudoinverse(d),
        "cuts": {
            "exhaustive": exhaustive_cuts,
            "reports": [_cut_entry(cut_report(g, orig, inv, v)) for v in subsets],
        },
        "resistance": resistance_matrix(inv),
        "facet_angles": angles,
        "steiner": {
            "semi_axis_lengths": ell.lengths,
            "semi_axis_sqlengths": ell.lengths**2,
        },
        "volumes": {
            "tree_count": report_tree_count(vol.tree_count, g.is_unweighted),
            "simplex_volume": vol.simplex_volume,
            "inverse_simplex_volume": vol.inverse_simplex_volume,
            "ellipsoid_volume": vol.ellipsoid_volume,
            "ellipsoid_to_simplex_ratio": ellipsoid_to_simplex_ratio(n),
            "ellipsoid_to_simplex_ratio_closed_form": ellipsoid_to_simplex_ratio_closed_form(n),
        },
        "verification": verdicts(checks),
    }
