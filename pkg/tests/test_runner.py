import pytest

from bidisearch.bench import runner
from bidisearch.bench.report import emit_report
from bidisearch.bench.runner import BenchConfig, ratio, run_benchmark, run_instance
from bidisearch.exceptions import SearchTimeout, UsageError


def small_maze_config(**overrides):
    settings = dict(algorithm="astar", domain="maze", instances=3, seed=7, maze_width=15, maze_height=15)
    settings.update(overrides)
    return BenchConfig(**settings)


def test_config_validation():
    with pytest.raises(UsageError):
        small_maze_config(algorithm="dfs").validate()
    with pytest.raises(UsageError):
        small_maze_config(domain="rubik").validate()
    with pytest.raises(UsageError):
        small_maze_config(baseline="dfs").validate()
    with pytest.raises(UsageError):
        small_maze_config(workers=0).validate()
    config = small_maze_config(memory_nodes=1000)
    config.validate()
    assert config.first_phase_budget == 500


def test_from_settings_rederives_the_first_phase_budget():
    settings = {"memory_nodes": 200000, "first_phase_budget": 100000, "seed": 3}
    config = BenchConfig.from_settings(settings, memory_nodes=80, seed=None)
    assert config.first_phase_budget == 40
    assert config.seed == 3


def test_ratio():
    assert ratio(5, 5) == 1.0
    assert ratio(0, 0) == 1.0
    assert ratio(3, 0) == float("inf")
    assert ratio(1, 4) == 0.25


def test_run_is_deterministic():
    config = small_maze_config()
    first = emit_report(run_benchmark(config))
    second = emit_report(run_benchmark(config))
    assert first == second
    assert "wall_time" not in first


def test_rows_are_ordered_and_complete():
    rows = run_benchmark(small_maze_config(algorithm="bsstar"))
    assert [row["instance"] for row in rows] == [1, 2, 3]
    assert all(row["status"] == "ok" and row["solved"] == 1 for row in rows)


def test_baseline_self_comparison_is_exactly_one():
    rows = run_benchmark(small_maze_config(baseline="astar", timing=True))
    assert all(row["nodes_ratio"] == 1.0 for row in rows)
    assert all(row["time_ratio"] == 1.0 for row in rows)


def test_baseline_normalizes_node_counts():
    rows = run_benchmark(small_maze_config(algorithm="idastar", baseline="astar"))
    for row in rows:
        assert row["nodes_ratio"] == row["nodes_generated"] / row["baseline_nodes_generated"]


def test_timeout_is_flagged_and_excluded(monkeypatch, mazes):
    def expired(name, domain, config):
        raise SearchTimeout("deadline exceeded")

    monkeypatch.setattr(runner, "_run_algorithm", expired)
    row = run_instance(1, mazes[0], small_maze_config())
    assert row["status"] == "timeout"
    assert "nodes_generated" not in row


def test_parallel_rows_match_serial_rows():
    serial = run_benchmark(small_maze_config(algorithm="baa", first_phase_budget=50))
    parallel = run_benchmark(small_maze_config(algorithm="baa", first_phase_budget=50, workers=2))
    assert serial == parallel


@pytest.mark.parametrize("algorithm", sorted(runner.hooks.algorithms))
def test_every_registered_algorithm_runs(algorithm):
    config = small_maze_config(algorithm=algorithm, instances=2, memory_nodes=100, tt_nodes=256,
                               perimeter_depth=2)
    rows = run_benchmark(config)
    assert all(row["status"] == "ok" for row in rows)
    astar_rows = run_benchmark(small_maze_config(instances=2))
    assert [row["cost"] for row in rows] == [row["cost"] for row in astar_rows]
