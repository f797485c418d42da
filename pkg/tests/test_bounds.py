import pytest

from bidisearch.bench import bounds
from bidisearch.bench.bounds import below_optimum, verify_bounds
from bidisearch.domains.puzzle import SlidingTilePuzzle, goal_state


def test_symmetric_instance_residual(symmetric):
    report = verify_bounds(symmetric)
    assert report.cost == 12
    assert (report.a_star_fwd, report.a_star_bwd, report.bhpa_expansions) == (4, 4, 5)
    assert (report.X1, report.X2) == (4, 4)
    assert report.symmetric and report.distinct
    assert report.delta == 3
    assert report.delta_ok
    assert report.cost_ok
    assert report.passed


def test_bounds_hold_on_puzzles_and_mazes(eight_puzzles, mazes):
    for domain in eight_puzzles + mazes:
        report = verify_bounds(domain)
        assert report.excluded is None
        assert report.upper_ok, report
        assert report.lower_ok, report


def test_trivial_and_unsolvable_instances_are_excluded(disconnected):
    assert verify_bounds(SlidingTilePuzzle(goal_state(3))).excluded == "trivial"
    report = verify_bounds(disconnected)
    assert report.excluded == "unsolvable"
    assert report.passed


@pytest.mark.parametrize("histogram, expected", [({3: 2, 5: 1, 7: 4}, 3), ({}, 0), ({7: 1}, 0)])
def test_below_optimum(histogram, expected):
    assert below_optimum(histogram, 7) == expected


def test_cost_mismatch_fails_the_report(symmetric, monkeypatch):
    real_bhpa = bounds.bhpa

    def suboptimal(domain):
        result = real_bhpa(domain)
        result.solution.cost += 2
        return result

    monkeypatch.setattr(bounds, "bhpa", suboptimal)
    report = verify_bounds(symmetric)
    assert not report.cost_ok
    assert report.upper_ok and report.lower_ok
    assert not report.passed
