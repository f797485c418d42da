# bidisearch/domains/maze.py
"""
Randomized grid mazes with the Manhattan distance heuristic

A maze is carved as a randomized depth-first spanning tree; afterwards every
remaining inner wall is left out with probability wall_skip_percent / 100,
which opens cycles (transpositions). Everything, endpoints included, is drawn
from one numpy generator seeded with the maze seed.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from bidisearch.exceptions import DomainFault
from bidisearch.search.core import Direction, Domain

log = logging.getLogger(__name__)

MazeState = tuple

WALL_EAST = 1
WALL_SOUTH = 2
DEFAULT_WALL_SKIP_PERCENT = 3


def validate_maze_dimensions(width: int, height: int) -> None:
    if int(width) != width or int(height) != height or width < 2 or height < 2:
        raise DomainFault(f"maze dimensions must be integers >= 2, got {width}x{height}")


def validate_cell(width: int, height: int, cell) -> MazeState:
    row, col = (int(v) for v in cell)
    if not (0 <= row < height and 0 <= col < width):
        raise DomainFault(f"cell {cell} lies outside the {width}x{height} grid")
    return (row, col)


@dataclass(eq=False)
class Maze:
    """east[r, c]: wall between (r, c) and (r, c + 1); south[r, c]: between (r, c) and (r + 1, c)"""

    width: int
    height: int
    seed: int
    wall_skip_percent: float
    east: np.ndarray = field(repr=False)
    south: np.ndarray = field(repr=False)
    start: MazeState = (0, 0)
    goal: MazeState = (0, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Maze):
            return NotImplemented
        return (
            (self.width, self.height, self.seed, self.wall_skip_percent, self.start, self.goal)
            == (other.width, other.height, other.seed, other.wall_skip_percent, other.start, other.goal)
            and np.array_equal(self.east, other.east)
            and np.array_equal(self.south, other.south)
        )

    def wall_digits(self) -> np.ndarray:
        return self.east.astype(np.int8) * WALL_EAST + self.south.astype(np.int8) * WALL_SOUTH

    def with_endpoints(self, start, goal) -> "Maze":
        return Maze(self.width, self.height, self.seed, self.wall_skip_percent, self.east, self.south,
                    validate_cell(self.width, self.height, start), validate_cell(self.width, self.height, goal))


def _carve(width: int, height: int, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    east = np.ones((height, width), dtype=bool)
    south = np.ones((height, width), dtype=bool)
    visited = np.zeros((height, width), dtype=bool)
    row, col = int(rng.integers(height)), int(rng.integers(width))
    visited[row, col] = True
    stack = [(row, col)]
    while stack:
        row, col = stack[-1]
        options = []
        if row > 0 and not visited[row - 1, col]:
            options.append((row - 1, col))
        if row < height - 1 and not visited[row + 1, col]:
            options.append((row + 1, col))
        if col > 0 and not visited[row, col - 1]:
            options.append((row, col - 1))
        if col < width - 1 and not visited[row, col + 1]:
            options.append((row, col + 1))
        if not options:
            stack.pop()
            continue
        nrow, ncol = options[int(rng.integers(len(options)))]
        if nrow == row:
            east[row, min(col, ncol)] = False
        else:
            south[min(row, nrow), col] = False
        visited[nrow, ncol] = True
        stack.append((nrow, ncol))
    return east, south


def generate_maze(width: int, height: int, seed: int, wall_skip_percent: float = DEFAULT_WALL_SKIP_PERCENT,
                  start: Optional[MazeState] = None, goal: Optional[MazeState] = None) -> Maze:
    """Pure function of (width, height, seed, wall_skip_percent)"""
    validate_maze_dimensions(width, height)
    if not 0 <= wall_skip_percent <= 100:
        raise DomainFault(f"wall_skip_percent must lie in [0, 100], got {wall_skip_percent}")
    rng = np.random.default_rng(seed)
    east, south = _carve(width, height, rng)
    skip_east = rng.random((height, width)) < wall_skip_percent / 100
    skip_south = rng.random((height, width)) < wall_skip_percent / 100
    # the outer border stays closed
    skip_east[:, width - 1] = False
    skip_south[height - 1, :] = False
    east &= ~skip_east
    south &= ~skip_south
    drawn_start = (int(rng.integers(height)), int(rng.integers(width)))
    drawn_goal = (int(rng.integers(height)), int(rng.integers(width)))
    start = drawn_start if start is None else validate_cell(width, height, start)
    goal = drawn_goal if goal is None else validate_cell(width, height, goal)
    return Maze(width, height, seed, wall_skip_percent, east, south, start, goal)


def maze_from_walls(width: int, height: int, digits, seed: int = 0, wall_skip_percent: float = 0,
                    start: MazeState = (0, 0), goal: Optional[MazeState] = None) -> Maze:
    """A maze from explicit wall digits (1 = east wall, 2 = south wall, 3 = both)"""
    validate_maze_dimensions(width, height)
    digits = np.asarray(digits, dtype=np.int8)
    if digits.shape != (height, width):
        raise DomainFault(f"wall rows have shape {digits.shape}, expected {(height, width)}")
    east = (digits & WALL_EAST).astype(bool)
    south = (digits & WALL_SOUTH).astype(bool)
    east[:, width - 1] = True
    south[height - 1, :] = True
    goal = (height - 1, width - 1) if goal is None else goal
    return Maze(width, height, seed, wall_skip_percent, east, south,
                validate_cell(width, height, start), validate_cell(width, height, goal))


def maze_neighbors(maze: Maze, state: MazeState) -> list:
    """4-connected moves not blocked by a wall, every arc of cost 1"""
    row, col = state
    neighbors = []
    if row > 0 and not maze.south[row - 1, col]:
        neighbors.append(((row - 1, col), 1))
    if row < maze.height - 1 and not maze.south[row, col]:
        neighbors.append(((row + 1, col), 1))
    if col > 0 and not maze.east[row, col - 1]:
        neighbors.append(((row, col - 1), 1))
    if col < maze.width - 1 and not maze.east[row, col]:
        neighbors.append(((row, col + 1), 1))
    return neighbors


def cell_distance(a: MazeState, b: MazeState) -> int:
    return abs(a[0] - b[0]) + abs(a[1] - b[1])


class MazeDomain(Domain):
    def __init__(self, maze: Maze, name: str = ""):
        super().__init__(maze.start, maze.goal)
        self.maze = maze
        self.name = name or f"maze{maze.width}x{maze.height}-{maze.seed}"
        self._adjacency = {
            (row, col): maze_neighbors(maze, (row, col))
            for row in range(maze.height) for col in range(maze.width)
        }

    def successors(self, state):
        return self._adjacency[state]

    def heuristic(self, state, direction):
        return cell_distance(state, self.goal if direction is Direction.FORWARD else self.start)

    def pair_heuristic(self, a, b):
        return cell_distance(a, b)

    def __repr__(self) -> str:
        return f"MazeDomain({self.name}, {self.start}->{self.goal})"


def maze_instances(count: int, width: int, height: int, seed: int = 1, min_h: int = 0,
                   wall_skip_percent: float = DEFAULT_WALL_SKIP_PERCENT,
                   max_attempts: Optional[int] = None) -> list[MazeDomain]:
    """Mazes from seeds seed, seed + 1, ... whose endpoints lie >= min_h apart"""
    validate_maze_dimensions(width, height)
    if min_h > (width - 1) + (height - 1):
        raise DomainFault(f"min_h {min_h} exceeds the largest distance on a {width}x{height} grid")
    max_attempts = max_attempts if max_attempts is not None else 1000 * max(1, count)
    instances = []
    candidate = seed
    while len(instances) < count:
        if candidate - seed >= max_attempts:
            raise DomainFault(f"only {len(instances)} of {count} mazes reached min_h {min_h} "
                              f"after {max_attempts} seeds")
        maze = generate_maze(width, height, candidate, wall_skip_percent)
        if cell_distance(maze.start, maze.goal) >= max(min_h, 1):
            instances.append(MazeDomain(maze))
        candidate += 1
    return instances
