# bidisearch/domains/puzzle.py
"""
Sliding-tile puzzles (Eight, Fifteen) with the Manhattan distance heuristic

States are tuples listing the tile on every board position, row-major from
the top-left, 0 for the blank.
"""

from __future__ import annotations

import logging
import math
from functools import lru_cache

import numpy as np

from bidisearch.exceptions import DomainFault
from bidisearch.search.core import Direction, Domain

log = logging.getLogger(__name__)

PuzzleState = tuple


def board_size(tiles) -> int:
    size = math.isqrt(len(tiles))
    if size < 2 or size * size != len(tiles):
        raise DomainFault(f"{len(tiles)} tiles do not fill a square board of side >= 2")
    return size


def validate_puzzle_state(tiles, size: int = None) -> PuzzleState:
    """Return tiles as a PuzzleState or raise DomainFault naming the problem"""
    state = tuple(int(tile) for tile in tiles)
    side = board_size(state)
    if size is not None and side != size:
        raise DomainFault(f"expected a {size}x{size} board, got {side}x{side}")
    if sorted(state) != list(range(side * side)):
        seen, repeated = set(), []
        for tile in state:
            if tile in seen:
                repeated.append(tile)
            seen.add(tile)
        detail = f"repeated tile(s) {sorted(set(repeated))}" if repeated else "tiles outside 0..N*N-1"
        raise DomainFault(f"not a permutation of 0..{side * side - 1}: {detail}")
    return state


def goal_state(size: int) -> PuzzleState:
    return tuple(range(size * size))


def permutation_parity(state: PuzzleState) -> int:
    """Parity invariant under moves: inversions, plus the blank row on even-width boards"""
    size = board_size(state)
    tiles = [tile for tile in state if tile]
    inversions = sum(1 for i, a in enumerate(tiles) for b in tiles[i + 1:] if a > b)
    if size % 2 == 0:
        inversions += state.index(0) // size
    return inversions % 2


def is_solvable(start: PuzzleState, goal: PuzzleState) -> bool:
    return len(start) == len(goal) and permutation_parity(start) == permutation_parity(goal)


@lru_cache(maxsize=None)
def _blank_moves(size: int) -> tuple:
    moves = []
    for pos in range(size * size):
        row, col = divmod(pos, size)
        targets = []
        if row > 0:
            targets.append(pos - size)
        if row < size - 1:
            targets.append(pos + size)
        if col > 0:
            targets.append(pos - 1)
        if col < size - 1:
            targets.append(pos + 1)
        moves.append(tuple(targets))
    return tuple(moves)


def puzzle_successors(state: PuzzleState) -> list:
    """One successor per legal blank move, every arc of cost 1"""
    size = math.isqrt(len(state))
    blank = state.index(0)
    successors = []
    for target in _blank_moves(size)[blank]:
        tiles = list(state)
        tiles[blank], tiles[target] = tiles[target], 0
        successors.append((tuple(tiles), 1))
    return successors


@lru_cache(maxsize=64)
def _distance_table(target_state: PuzzleState) -> tuple:
    """table[tile][pos]: Manhattan distance of tile at pos from its place in target_state"""
    size = math.isqrt(len(target_state))
    rows, cols = np.divmod(np.arange(size * size), size)
    table = []
    for tile in range(size * size):
        if tile == 0:
            table.append((0,) * (size * size))
            continue
        home = target_state.index(tile)
        distance = np.abs(rows - home // size) + np.abs(cols - home % size)
        table.append(tuple(int(d) for d in distance))
    return tuple(table)


def manhattan(state: PuzzleState, target_state: PuzzleState) -> int:
    table = _distance_table(target_state)
    return sum(table[tile][pos] for pos, tile in enumerate(state))


class SlidingTilePuzzle(Domain):
    def __init__(self, start, goal=None, name: str = ""):
        start = validate_puzzle_state(start)
        size = board_size(start)
        goal = goal_state(size) if goal is None else validate_puzzle_state(goal, size)
        if not is_solvable(start, goal):
            raise DomainFault(f"start {start} cannot reach goal {goal}: parity differs")
        super().__init__(start, goal)
        self.size = size
        self.name = name

    def successors(self, state):
        return puzzle_successors(state)

    def heuristic(self, state, direction):
        if direction is Direction.FORWARD:
            return manhattan(state, self.goal)
        return manhattan(state, self.start)

    def pair_heuristic(self, a, b):
        return manhattan(a, b)

    def __repr__(self) -> str:
        return f"SlidingTilePuzzle({self.name or self.start})"


def random_puzzle_instances(count: int, size: int = 3, seed: int = 1) -> list[SlidingTilePuzzle]:
    """Seeded uniformly random start states that can reach the standard goal"""
    rng = np.random.default_rng(seed)
    goal = goal_state(size)
    instances = []
    while len(instances) < count:
        start = tuple(int(tile) for tile in rng.permutation(size * size))
        if start == goal or not is_solvable(start, goal):
            continue
        instances.append(SlidingTilePuzzle(start, goal, name=f"puzzle{size * size - 1}-{seed}-{len(instances) + 1}"))
    log.debug("generated %d random %dx%d instances from seed %d", count, size, size, seed)
    return instances
