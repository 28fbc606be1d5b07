import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complete_graph, random_weighted_graph
from graphsimplex import (
    SubsetError,
    centroid_inner_product,
    cut_intersection_size,
    cut_report,
    cut_size,
    duality_inequality,
    effective_resistance,
    eigendecompose,
    embed_pair,
    facet_angle,
    facet_angle_geometric,
    inverse_altitude_inner_product,
    laplacian,
    quadratic_form_bound,
    resistance_matrix,
)


def pair(g):
    return embed_pair(eigendecompose(laplacian(g)))


class TestCutReport:
    def test_p4(self, p4):
        s, sp = pair(p4)
        r = cut_report(p4, s, sp, {0, 1})
        assert r.cut_size == 1
        assert r.centroid_sqnorm == pytest.approx(0.25, rel=1e-12)
        assert r.altitude_sqlen_inverse == pytest.approx(1.0, rel=1e-12)
        assert max(r.residuals().values()) < 1e-12

    def test_singletons_give_degrees(self, p4):
        s, sp = pair(p4)
        for i, d in enumerate([1, 2, 2, 1]):
            assert cut_report(p4, s, sp, {i}).centroid_sqnorm == pytest.approx(d, rel=1e-12)

    def test_k4(self, k4):
        s, sp = pair(k4)
        r = cut_report(k4, s, sp, {0, 1})
        assert r.cut_size == 4
        assert r.centroid_sqnorm == pytest.approx(1.0, rel=1e-12)

    def test_bad_subset(self, p4):
        s, sp = pair(p4)
        with pytest.raises(SubsetError):
            cut_report(p4, s, sp, set())


class TestInnerProducts:
    @pytest.mark.parametrize("v1, v2, expected", [({0}, {1}, -1.0), ({0}, {2}, 0.0)])
    def test_p4_centroids(self, p4, v1, v2, expected):
        s, _ = pair(p4)
        assert centroid_inner_product(s, v1, v2) == pytest.approx(expected, abs=1e-12)

    def test_k4_centroids(self, k4):
        s, _ = pair(k4)
        assert centroid_inner_product(s, {0, 1}, {2, 3}) == pytest.approx(-1.0, rel=1e-12)

    def test_overlap(self, p4):
        s, sp = pair(p4)
        with pytest.raises(SubsetError):
            centroid_inner_product(s, {0, 1}, {1})
        with pytest.raises(SubsetError):
            inverse_altitude_inner_product(s, sp, {0, 1}, {1})

    def test_altitudes(self, p4):
        s, sp = pair(p4)
        # -|cut(V1,V2)| / (|cut V1| |cut V2|)
        assert inverse_altitude_inner_product(s, sp, {0}, {1}) == pytest.approx(-1 / 2, rel=1e-12)
        assert inverse_altitude_inner_product(s, sp, {0, 1}, {2}) == pytest.approx(-1 / 2, rel=1e-12)
        assert inverse_altitude_inner_product(s, sp, {0}, {3}) == pytest.approx(0.0, abs=1e-12)


class TestQuadraticFormBound:
    def test_p4(self, p4):
        lhs, rhs, holds = quadratic_form_bound(p4, [1, -1, 0, 0])
        assert holds
        assert lhs == pytest.approx(5.0)  # (1+1)^2 + (-1-0)^2
        assert lhs >= rhs

    def test_k2_equality(self, k2):
        lhs, rhs, holds = quadratic_form_bound(k2, [1, -1])
        assert holds
        assert lhs == pytest.approx(4.0, abs=1e-12)
        assert rhs == pytest.approx(4.0, abs=1e-12)

    def test_non_orthogonal(self, p4):
        with pytest.raises(ValueError, match="orthogonal"):
            quadratic_form_bound(p4, [1, 0, 0, 0])

    def test_zero(self, p4):
        with pytest.raises(ValueError):
            quadratic_form_bound(p4, [0, 0, 0, 0])

    def test_wrong_length(self, p4):
        with pytest.raises(ValueError):
            quadratic_form_bound(p4, [1, -1])

    def test_batch(self, p4):
        y = np.array([[1, -1, 0, 0], [3, -1, -1, -1.0]])
        lhs, rhs, holds = quadratic_form_bound(p4, y)
        assert lhs.shape == (2,) and holds.all()

    def test_indicator_choice_gives_duality_inequality(self, p4):
        # y = u_V / V - u_Vbar / (N - V) turns the bound into the cut duality inequality
        s, sp = pair(p4)
        for v in ({0}, {0, 1}, {1, 2}, {0, 2}):
            k = len(v)
            u = np.array([1.0 if i in v else 0.0 for i in range(4)])
            y = u / k - (1 - u) / (4 - k)
            lhs, rhs, _ = quadratic_form_bound(p4, y)
            product, bound, _ = duality_inequality(p4, sp, v)
            assert lhs == pytest.approx(cut_size(p4, v) * (1 / k + 1 / (4 - k)) ** 2)
            assert lhs / rhs == pytest.approx(product / bound, rel=1e-12)


class TestDuality:
    def test_k2_equality(self, k2):
        _, sp = pair(k2)
        product, bound, holds = duality_inequality(k2, sp, {0})
        assert holds
        assert abs(product - 0.25) <= 1e-12
        assert abs(bound - 0.25) <= 1e-12

    def test_p4(self, p4):
        _, sp = pair(p4)
        assert duality_inequality(p4, sp, {0, 1})[2]

    def test_singletons(self, p4):
        _, sp = pair(p4)
        for i in range(4):
            product, bound, holds = duality_inequality(p4, sp, {i})
            assert holds and bound == pytest.approx((3 / 4) ** 2)


class TestResistance:
    def test_p4(self, p4):
        _, sp = pair(p4)
        assert effective_resistance(sp, 0, 3) == pytest.approx(3.0, rel=1e-12)
        assert effective_resistance(sp, 1, 2) == pytest.approx(1.0, rel=1e-12)

    def test_k3(self, k3):
        _, sp = pair(k3)
        for i, j in [(0, 1), (0, 2), (1, 2)]:
            assert effective_resistance(sp, i, j) == pytest.approx(2 / 3, rel=1e-12)

    def test_k2(self, k2):
        _, sp = pair(k2)
        assert effective_resistance(sp, 0, 1) == pytest.approx(1.0, rel=1e-14)
        np.testing.assert_allclose(resistance_matrix(sp), [[0, 1], [1, 0]], atol=1e-14)

    def test_index_errors(self, p4):
        _, sp = pair(p4)
        with pytest.raises(IndexError):
            effective_resistance(sp, 0, 4)
        with pytest.raises(IndexError):
            effective_resistance(sp, 1, 1)

    def test_matrix_matches_pairs(self, p4):
        _, sp = pair(p4)
        omega = resistance_matrix(sp)
        for i in range(4):
            for j in range(4):
                if i != j:
                    assert omega[i, j] == pytest.approx(effective_resistance(sp, i, j), rel=1e-12)


class TestFacetAngle:
    def test_k4(self, k4):
        _, sp = pair(k4)
        for i, j in [(0, 1), (2, 3)]:
            assert facet_angle(k4, i, j) == pytest.approx(math.acos(1 / 3))
            assert facet_angle_geometric(sp, i, j) == pytest.approx(math.acos(1 / 3), abs=1e-12)

    def test_p4(self, p4):
        _, sp = pair(p4)
        assert facet_angle(p4, 0, 2) == pytest.approx(math.pi / 2)
        assert facet_angle_geometric(sp, 0, 2) == pytest.approx(math.pi / 2, abs=1e-12)

    def test_k2_degenerate(self, k2):
        assert facet_angle(k2, 0, 1) == 0.0

    def test_index_errors(self, p4):
        with pytest.raises(IndexError):
            facet_angle(p4, 0, 0)
        with pytest.raises(IndexError):
            facet_angle(p4, 0, 9)


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 8), st.integers(0, 2**32 - 1))
def test_cut_identities_random(n, seed):
    rng = np.random.default_rng(seed)
    g = random_weighted_graph(rng, n, p=0.5)
    s, sp = pair(g)
    for _ in range(10):
        k = int(rng.integers(1, n))
        v = set(rng.choice(n, size=k, replace=False).tolist())
        r = cut_report(g, s, sp, v)
        assert max(r.residuals().values()) <= 1e-9
        assert r.altitude_sqlen_original * r.dual_quadratic == pytest.approx(1.0, rel=1e-9)
        assert duality_inequality(g, sp, v)[2]
        rest = [i for i in range(n) if i not in v]
        w = set(rng.choice(rest, size=int(rng.integers(1, len(rest) + 1)), replace=False).tolist())
        between = cut_intersection_size(g, v, w)
        assert centroid_inner_product(s, v, w) == pytest.approx(-between / (len(v) * len(w)), abs=1e-9)
        expected = -between / (cut_size(g, v) * cut_size(g, w))
        assert inverse_altitude_inner_product(s, sp, v, w) == pytest.approx(expected, abs=1e-9)
    y = rng.standard_normal((200, n))
    y -= y.mean(axis=1, keepdims=True)
    assert quadratic_form_bound(g, y)[2].all()
    omega = resistance_matrix(sp)
    for k in range(n):
        assert np.all(omega <= omega[:, [k]] + omega[[k], :] + 1e-12)
    for i in range(n):
        for j in range(i + 1, n):
            assert facet_angle(g, i, j) <= math.pi / 2 + 1e-12


def test_complete_graph_resistance():
    for n in range(2, 8):
        _, sp = pair(complete_graph(n))
        omega = resistance_matrix(sp)
        off = omega[~np.eye(n, dtype=bool)]
        np.testing.assert_allclose(off, 2 / n, rtol=1e-12)
