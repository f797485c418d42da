import pytest

from bidisearch.domains.graph import GraphDomain
from bidisearch.domains.maze import MazeDomain, maze_from_walls
from bidisearch.exceptions import InvariantViolation, SearchTimeout, StructuralFault
from bidisearch.search.core import (
    INF,
    ClosedSet,
    Direction,
    Frontier,
    SearchNode,
    Solution,
    check_consistency,
    check_deadline,
    deadline,
    reconstruct_path,
    termination_met,
)
from bidisearch.search.unisearch import astar


def node(state, g, h=0, parent=None, direction=Direction.FORWARD):
    n = SearchNode(state, g, parent, direction, h)
    n.key = n.f
    return n


def test_direction_reverse_and_label():
    assert Direction.FORWARD.reverse() is Direction.BACKWARD
    assert Direction.BACKWARD.reverse() is Direction.FORWARD
    assert Direction.BACKWARD.label == "backward"


def test_frontier_orders_by_f_then_larger_g():
    frontier = Frontier()
    frontier.push(node("a", 1, 4))
    frontier.push(node("b", 3, 2))
    frontier.push(node("c", 0, 3))
    assert frontier.fmin == 3
    assert [frontier.pop().state for _ in range(3)] == ["c", "b", "a"]
    assert frontier.fmin == INF


def test_frontier_replacement_is_lazy():
    frontier = Frontier()
    frontier.push(node("a", 5, 1))
    frontier.push(node("a", 2, 1))
    assert len(frontier) == 1
    assert frontier.pop().g == 2
    assert not frontier


def test_frontier_remove_and_empty_pop():
    frontier = Frontier()
    frontier.push(node("a", 1))
    assert frontier.remove("a").state == "a"
    assert "a" not in frontier
    with pytest.raises(StructuralFault):
        frontier.pop()


def test_termination_rule():
    assert termination_met(10, 10, 3)
    assert termination_met(10, 4, 12)
    assert not termination_met(10, 9, 9)
    assert not termination_met(INF, 9, 9)
    assert termination_met(INF, INF, 0)


def test_reconstruct_path_joins_halves():
    s = node("s", 0)
    a = node("a", 1, parent=s)
    t = node("t", 0, direction=Direction.BACKWARD)
    b = node("b", 2, parent=t, direction=Direction.BACKWARD)
    m_backward = node("m", 3, parent=b, direction=Direction.BACKWARD)
    forward = ClosedSet()
    forward.add(node("m", 2, parent=a))
    solution = reconstruct_path("m", forward, m_backward)
    assert solution.path == ["s", "a", "m", "b", "t"]
    assert solution.cost == 5


def test_reconstruct_path_requires_meeting_state():
    with pytest.raises(StructuralFault):
        reconstruct_path("m", ClosedSet(), ClosedSet())


def test_solution_validate(symmetric):
    Solution(["s", "p1", "q1", "t"], 12).validate(symmetric)
    with pytest.raises(InvariantViolation):
        Solution(["s", "p1", "q1", "t"], 11).validate(symmetric)
    with pytest.raises(InvariantViolation):
        Solution(["s", "q1", "t"], 11).validate(symmetric)


def test_consistency_holds_on_open_grid():
    maze = maze_from_walls(5, 4, [[0] * 5 for _ in range(4)])
    domain = MazeDomain(maze)
    states = [(r, c) for r in range(4) for c in range(5)]
    assert check_consistency(domain, states) == []


def test_consistency_reports_inflated_state():
    maze = maze_from_walls(5, 4, [[0] * 5 for _ in range(4)])
    domain = MazeDomain(maze)
    states = [(r, c) for r in range(4) for c in range(5)]

    def inflated(state, direction):
        return domain.heuristic(state, direction) + (2 if state == (1, 1) else 0)

    violations = check_consistency(domain, states, heuristic=inflated, directions=[Direction.FORWARD])
    assert violations
    assert all(v.state == (1, 1) for v in violations)


def test_shorter_path_to_closed_state_is_an_invariant_violation():
    edges = [("s", "a", 5), ("s", "b", 1), ("b", "a", 1), ("a", "t", 100)]
    domain = GraphDomain.from_edges(edges, "s", "t", h_forward={"b": 10})
    with pytest.raises(InvariantViolation):
        astar(domain)


def test_deadline_is_scoped():
    with deadline(-1):
        with pytest.raises(SearchTimeout):
            check_deadline()
    check_deadline()
    with deadline(None):
        check_deadline()
