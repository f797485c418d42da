import networkx as nx
import numpy as np
import pytest

from bidisearch.domains.graph import GraphDomain
from bidisearch.domains.maze import (
    MazeDomain,
    generate_maze,
    maze_from_walls,
    maze_instances,
    maze_neighbors,
    validate_maze_dimensions,
)
from bidisearch.domains.puzzle import (
    SlidingTilePuzzle,
    goal_state,
    is_solvable,
    manhattan,
    puzzle_successors,
    random_puzzle_instances,
    validate_puzzle_state,
)
from bidisearch.exceptions import DomainFault
from bidisearch.search.core import Direction
from bidisearch.utils.oracle import maze_graph


def test_puzzle_state_validation():
    assert validate_puzzle_state([1, 0, 2, 3]) == (1, 0, 2, 3)
    with pytest.raises(DomainFault, match="repeated tile"):
        validate_puzzle_state([1, 1, 2, 3, 4, 5, 6, 7, 8])
    with pytest.raises(DomainFault):
        validate_puzzle_state([0, 1, 2])


def test_puzzle_parity():
    goal = goal_state(3)
    swapped = (0, 2, 1, 3, 4, 5, 6, 7, 8)
    assert not is_solvable(swapped, goal)
    with pytest.raises(DomainFault, match="parity"):
        SlidingTilePuzzle(swapped)
    assert is_solvable((1, 0, 2, 3, 4, 5, 6, 7, 8), goal)
    # even width: the blank row enters the invariant
    assert is_solvable((4, 1, 2, 3, 0, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15), goal_state(4))


def test_puzzle_moves():
    corner = goal_state(3)
    assert len(puzzle_successors(corner)) == 2
    center = (1, 2, 3, 4, 0, 5, 6, 7, 8)
    assert len(puzzle_successors(center)) == 4
    assert all(cost == 1 for _, cost in puzzle_successors(center))


def test_manhattan():
    goal = goal_state(3)
    assert manhattan(goal, goal) == 0
    assert manhattan((1, 0, 2, 3, 4, 5, 6, 7, 8), goal) == 1
    assert manhattan((8, 1, 2, 3, 4, 5, 6, 7, 0), goal) == 4


def test_puzzle_heuristics_vanish_at_their_targets():
    domain = SlidingTilePuzzle((3, 1, 2, 0, 4, 5, 6, 7, 8))
    assert domain.heuristic(domain.goal, Direction.FORWARD) == 0
    assert domain.heuristic(domain.start, Direction.BACKWARD) == 0
    assert domain.heuristic(domain.start, Direction.FORWARD) == 1


def test_random_puzzles_are_seeded_and_solvable():
    first = random_puzzle_instances(5, size=3, seed=4)
    again = random_puzzle_instances(5, size=3, seed=4)
    assert [d.start for d in first] == [d.start for d in again]
    assert all(is_solvable(d.start, d.goal) and d.start != d.goal for d in first)
    assert [d.start for d in random_puzzle_instances(5, size=3, seed=5)] != [d.start for d in first]


def test_maze_dimensions():
    validate_maze_dimensions(2, 2)
    with pytest.raises(DomainFault):
        validate_maze_dimensions(1, 5)
    with pytest.raises(DomainFault):
        generate_maze(5, 5, 1, wall_skip_percent=150)


def test_maze_generation_is_a_function_of_its_parameters():
    assert generate_maze(20, 15, 7) == generate_maze(20, 15, 7)
    assert generate_maze(20, 15, 7) != generate_maze(20, 15, 8)


def test_perfect_maze_is_a_spanning_tree():
    maze = generate_maze(12, 9, 3, wall_skip_percent=0)
    graph = maze_graph(maze)
    assert nx.is_tree(graph)
    assert graph.number_of_nodes() == 12 * 9


def test_skipped_walls_add_cycles():
    maze = generate_maze(30, 30, 3, wall_skip_percent=30)
    graph = maze_graph(maze)
    assert nx.is_connected(graph)
    assert graph.number_of_edges() > 30 * 30 - 1


def test_maze_walls_and_moves():
    maze = maze_from_walls(3, 2, [[1, 0, 0], [0, 0, 0]], goal=(1, 2))
    assert ((0, 1), 1) not in maze_neighbors(maze, (0, 0))
    assert ((1, 0), 1) in maze_neighbors(maze, (0, 0))
    assert maze.wall_digits()[0, 0] == 1
    # the border is always closed
    assert np.all(maze.east[:, -1]) and np.all(maze.south[-1, :])
    domain = MazeDomain(maze)
    assert domain.heuristic((0, 0), Direction.FORWARD) == 3
    assert domain.heuristic((0, 0), Direction.BACKWARD) == 0


def test_maze_instances_respect_min_h():
    mazes = maze_instances(5, 10, 10, seed=2, min_h=9)
    assert len(mazes) == 5
    assert all(d.heuristic(d.start, Direction.FORWARD) >= 9 for d in mazes)
    with pytest.raises(DomainFault):
        maze_instances(1, 4, 4, min_h=100)


def test_graph_domain_validation():
    with pytest.raises(DomainFault):
        GraphDomain.from_edges([("s", "t", 0)], "s", "t")
    with pytest.raises(DomainFault):
        GraphDomain.from_edges([("s", "t", 1)], "s", "x")


def test_directed_graph_predecessors():
    domain = GraphDomain.from_edges([("s", "a", 2), ("a", "t", 3)], "s", "t", directed=True)
    assert domain.successors("a") == [("t", 3)]
    assert domain.predecessors("a") == [("s", 2)]
    assert domain.neighbors("t", Direction.BACKWARD) == [("a", 3)]
