import numpy as np
import pytest

from graphsimplex import WeightedGraph, parse_edge_list

ACCEPTANCE_LINES: list[str] = []


def path_graph(n):
    return WeightedGraph(n, tuple((i, i + 1, 1.0) for i in range(n - 1)))


def complete_graph(n):
    return WeightedGraph(n, tuple((i, j, 1.0) for i in range(n) for j in range(i + 1, n)))


def cycle_graph(n):
    return WeightedGraph(n, tuple((i, (i + 1) % n, 1.0) for i in range(n)))


def random_weighted_graph(rng, n, p=0.5, low=0.1, high=5.0):
    """Random spanning tree plus extra edges with probability ``p``."""
    order = rng.permutation(n)
    edges = {}
    for k in range(1, n):
        a, b = int(order[k]), int(order[rng.integers(0, k)])
        edges[(min(a, b), max(a, b))] = float(rng.uniform(low, high))
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) not in edges and rng.random() < p:
                edges[(i, j)] = float(rng.uniform(low, high))
    return WeightedGraph(n, tuple((i, j, w) for (i, j), w in edges.items()))


@pytest.fixture
def p4():
    return parse_edge_list("0 1\n1 2\n2 3")


@pytest.fixture
def k2():
    return complete_graph(2)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
