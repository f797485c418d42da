import pytest

from bidisearch.exceptions import UsageError
from bidisearch.search.bidi_sequential import (
    baa,
    bai,
    bai_initial_threshold,
    frontier_reach_gate,
    idastar_probing,
    probe_direction,
    reverse_idastar,
    run_first_phase,
)
from bidisearch.search.core import Direction
from bidisearch.search.stats import SearchStats
from bidisearch.search.unisearch import astar, idastar
from bidisearch.utils.oracle import distances_to


def test_probe_prefers_the_cheaper_direction(asymmetric):
    stats = SearchStats()
    probe = probe_direction(asymmetric, 3, stats=stats)
    assert probe.direction is Direction.BACKWARD
    assert probe.generated == {Direction.FORWARD: 34, Direction.BACKWARD: 9}
    assert probe.solution is None
    assert stats.probe_generated == 43


def test_probe_tie_goes_forward(symmetric):
    probe = probe_direction(symmetric, 3)
    assert probe.direction is Direction.FORWARD
    assert probe.generated[Direction.FORWARD] == probe.generated[Direction.BACKWARD]


def test_probe_needs_an_iteration(symmetric):
    with pytest.raises(UsageError):
        probe_direction(symmetric, 0)


def test_probe_compared_with_the_better_direction(eight_puzzles):
    probe = probe_direction(eight_puzzles[0], 2, compare=True)
    if probe.solution is None:
        assert probe.oracle_ratio >= 1.0


def test_idastar_probing(asymmetric):
    result = idastar_probing(asymmetric)
    assert result.cost == 4
    assert result.stats.direction_assignment is Direction.BACKWARD
    assert result.stats.probe_generated == 43
    assert result.stats.nodes_generated > 43


def test_gates():
    assert frontier_reach_gate("x", 4, 4)
    assert not frontier_reach_gate("x", 5, 4)
    assert bai_initial_threshold(3, 7) == 7
    assert bai_initial_threshold(9, 7) == 9


def test_first_phase_settles_small_instances(symmetric):
    settled, phase = run_first_phase(symmetric, 1000, SearchStats(), direction=Direction.FORWARD)
    assert phase is None
    assert settled.cost == 12


def test_first_phase_keeps_open_and_closed(symmetric):
    settled, phase = run_first_phase(symmetric, 2, SearchStats())
    assert settled is None
    assert set(phase.closed) == {"t"}
    assert {node.state for node in phase.frontier} == {"q1", "q2"}
    assert phase.fmin == 1
    assert phase.hit("t").nip
    assert not phase.hit("q1").nip
    assert phase.hit("s") is None


def test_bai_uses_the_probed_direction(asymmetric):
    result = bai(asymmetric, 2)
    assert result.cost == 4
    assert result.stats.direction_assignment is Direction.BACKWARD
    result.solution.validate(asymmetric)


def test_bai_without_limit_is_forward_astar(eight_puzzles):
    domain = eight_puzzles[0]
    result = bai(domain, None)
    assert result.stats.probe_generated == 0
    assert result.stats.nodes_generated == astar(domain).stats.nodes_generated


@pytest.mark.parametrize("tt_capacity", [0, 2048])
def test_bai_is_optimal(tt_capacity, eight_puzzles, mazes, oracle_costs):
    for domain in eight_puzzles + mazes:
        result = bai(domain, 300, tt_capacity)
        assert result.cost == oracle_costs(domain)
        result.solution.validate(domain)
        assert result.stats.algorithm == ("bai_trans" if tt_capacity else "bai")


@pytest.mark.parametrize("budget", [50, 500])
def test_baa_is_optimal(budget, eight_puzzles, mazes, oracle_costs):
    for domain in eight_puzzles + mazes:
        result = baa(domain, budget)
        assert result.cost == oracle_costs(domain)
        result.solution.validate(domain)


def test_baa_with_empty_first_phase_is_astar(eight_puzzles):
    for domain in eight_puzzles:
        plain = astar(domain).stats
        stats = baa(domain, 0).stats
        assert stats.nodes_generated == plain.nodes_generated
        assert stats.nodes_expanded == plain.nodes_expanded


def _stored_phases(domains, budget):
    for domain in domains:
        _, phase = run_first_phase(domain, budget, SearchStats())
        if phase is not None:
            yield domain, phase


def test_reach_gate_never_hides_a_stored_state(eight_puzzles, mazes):
    for domain, phase in _stored_phases(eight_puzzles + mazes, 300):
        stored = list(phase.closed) + [node.state for node in phase.frontier]
        for state in stored:
            assert frontier_reach_gate(state, domain.heuristic(state, Direction.FORWARD), phase.max_frontier_g)


def test_bai_thresholds_follow_the_idastar_sequence(eight_puzzles, oracle_costs):
    checked = 0
    for domain, phase in _stored_phases(eight_puzzles, 300):
        stats = SearchStats("bai")
        reverse_idastar(domain, phase, stats)
        thresholds = stats.threshold_sequence
        plain = idastar(domain, Direction.FORWARD).stats.threshold_sequence
        assert thresholds == sorted(set(thresholds))
        assert set(thresholds) <= set(plain)
        assert len(thresholds) <= len(plain)
        assert thresholds[-1] <= oracle_costs(domain)
        checked += 1
    assert checked


def test_nipping_at_closed_states_keeps_the_optimum(eight_puzzles, mazes, oracle_costs):
    for domain in eight_puzzles + mazes:
        stats = SearchStats("bai")
        _, phase = run_first_phase(domain, 300, stats)
        if phase is None:
            continue
        exact = distances_to(domain, Direction.FORWARD)
        for state, node in phase.closed.items():
            assert node.g == exact[state]
        result = reverse_idastar(domain, phase, stats)
        best = oracle_costs(domain)
        assert result.cost == best
        assert all(cost >= best for _, cost in result.solution.l_min_history)
        result.solution.validate(domain)
