import pytest

from bidisearch.domains.graph import GraphDomain
from bidisearch.domains.puzzle import SlidingTilePuzzle, goal_state, random_puzzle_instances
from bidisearch.search.bidi_traditional import bhpa, bsstar, cardinality_choose
from bidisearch.search.core import Direction


def test_cardinality_criterion():
    assert cardinality_choose(3, 3) is Direction.FORWARD
    assert cardinality_choose(2, 5) is Direction.FORWARD
    assert cardinality_choose(4, 3) is Direction.BACKWARD


@pytest.mark.parametrize("engine", [bhpa, bsstar])
def test_optimal_on_puzzles_and_mazes(engine, eight_puzzles, mazes, oracle_costs):
    for domain in eight_puzzles + mazes:
        result = engine(domain)
        assert result.cost == oracle_costs(domain)
        result.solution.validate(domain)


def test_bhpa_on_symmetric_graph(symmetric):
    result = bhpa(symmetric)
    assert result.cost == 12
    assert result.solution.path == ["s", "p1", "q1", "t"]
    assert result.stats.nodes_expanded == 5


@pytest.mark.parametrize("engine", [bhpa, bsstar])
def test_trivial_instance(engine):
    domain = SlidingTilePuzzle(goal_state(3))
    result = engine(domain)
    assert result.cost == 0
    assert result.solution.path == [domain.start]
    assert result.stats.nodes_generated == 0


@pytest.mark.parametrize("engine", [bhpa, bsstar])
def test_unreachable_goal(engine, disconnected):
    assert engine(disconnected).solution is None


def test_bsstar_solution_statistics(eight_puzzles):
    for domain in eight_puzzles:
        stats = bsstar(domain).stats
        first_nodes, first_cost = stats.first_solution
        assert first_nodes <= stats.optimal_found_at <= stats.nodes_generated
        assert first_cost >= stats.l_min_history[-1][1]


def test_bsstar_nips_and_prunes_a_constructed_meeting():
    # backward closes m first; forward later selects m and must nip it
    edges = [("s", "m", 3), ("m", "t", 1), ("s", "d1", 1), ("s", "d2", 1),
             ("t", "e1", 2), ("m", "f1", 1), ("m", "f2", 1)]
    domain = GraphDomain.from_edges(edges, "s", "t", name="nipping")
    result = bsstar(domain)
    assert result.cost == 4
    assert result.solution.path == ["s", "m", "t"]
    stats = result.stats
    assert stats.extra.get("nipped") == 1
    assert stats.extra.get("pruned") == 2
    assert stats.extra.get("screened") == 1
    assert stats.extra.get("trimmed", 0) == 0
    assert stats.nodes_generated == 11
    assert stats.nodes_expanded == 5
    assert stats.first_solution == (5, 4)


@pytest.fixture(scope="module")
def hundred_puzzle_runs():
    return [bsstar(domain) for domain in random_puzzle_instances(100, size=3, seed=1)]


@pytest.mark.slow
def test_bsstar_frontiers_meet_early(hundred_puzzle_runs):
    first_nodes = sum(result.stats.first_solution[0] for result in hundred_puzzle_runs)
    total_nodes = sum(result.stats.nodes_generated for result in hundred_puzzle_runs)
    assert first_nodes / total_nodes < 0.5
    gaps = [(result.stats.first_solution[1] - result.cost) / result.cost for result in hundred_puzzle_runs]
    assert sum(gaps) / len(gaps) < 0.15


@pytest.mark.slow
def test_bsstar_uses_all_four_reductions(hundred_puzzle_runs):
    for counter in ("trimmed", "screened", "nipped", "pruned"):
        assert sum(result.stats.extra.get(counter, 0) for result in hundred_puzzle_runs) > 0
