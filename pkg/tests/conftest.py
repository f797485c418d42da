import pytest

from bidisearch.domains.graph import GraphDomain, symmetric_example
from bidisearch.domains.maze import maze_instances
from bidisearch.domains.puzzle import random_puzzle_instances
from bidisearch.utils.oracle import uniform_cost


@pytest.fixture(scope="session")
def eight_puzzles():
    return random_puzzle_instances(6, size=3, seed=11)


@pytest.fixture(scope="session")
def mazes():
    return maze_instances(4, 12, 12, seed=3, min_h=6)


@pytest.fixture(scope="session")
def oracle_costs():
    """uniform_cost per domain, computed once per session"""
    cache = {}

    def cost(domain):
        key = id(domain)
        if key not in cache:
            cache[key] = uniform_cost(domain)
        return cache[key]

    return cost


@pytest.fixture
def symmetric():
    return symmetric_example()


@pytest.fixture
def asymmetric():
    """Five dead ends at s, a bare chain of cost 4 from s to t, h = 0"""
    edges = [("s", f"d{i}", 1) for i in range(1, 6)]
    edges += [("s", "m1", 1), ("m1", "m2", 1), ("m2", "m3", 1), ("m3", "t", 1)]
    return GraphDomain.from_edges(edges, "s", "t", name="asymmetric")


@pytest.fixture
def disconnected():
    return GraphDomain.from_edges([("s", "a", 1), ("b", "t", 1)], "s", "t", name="disconnected")
