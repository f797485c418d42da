# bidisearch/search/perimeter.py
"""
Perimeter search: a fixed-radius uniform-cost search around t is stored and
a forward engine (A* or IDA*) targets the whole perimeter with front-to-front
evaluations.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Optional

from bidisearch.exceptions import DomainFault, UsageError
from bidisearch.search.core import (
    BestMeeting,
    Cost,
    DirectionalSearch,
    Direction,
    Domain,
    SearchNode,
    Solution,
    State,
)
from bidisearch.search.stats import SearchResult, SearchStats
from bidisearch.search.unisearch import IterativeDeepening, StoredHit

log = logging.getLogger(__name__)

PERIMETER_ENGINES = ("astar", "idastar")


@dataclass
class Perimeter:
    depth: Cost
    nodes: dict = field(default_factory=dict)
    interior: dict = field(default_factory=dict)
    generated: int = 0

    @property
    def size(self) -> int:
        return len(self.nodes) + len(self.interior)

    def stored(self, state: State) -> Optional[SearchNode]:
        node = self.nodes.get(state)
        return node if node is not None else self.interior.get(state)

    def continuation(self, state: State) -> list:
        """States from a stored state down to t"""
        return list(reversed(self.stored(state).path()))


def build_perimeter(domain: Domain, depth: Cost, *, stats: Optional[SearchStats] = None) -> Perimeter:
    """Backward uniform-cost search from t, expanding every node nearer than depth"""
    if depth < 0:
        raise DomainFault(f"perimeter depth must be >= 0, got {depth}")
    stats = stats if stats is not None else SearchStats("perimeter")
    before = stats.nodes_generated
    search = DirectionalSearch(domain, Direction.BACKWARD, stats, heuristic=lambda state: 0)
    while search.frontier and search.frontier.fmin < depth:
        node = search.frontier.pop()
        for child in search.expand(node):
            search.offer(child)
    perimeter = Perimeter(
        depth=depth,
        nodes={node.state: node for node in search.frontier},
        interior=dict(search.closed.items()),
        generated=stats.nodes_generated - before,
    )
    log.debug("perimeter depth %s: %d nodes, %d interior", depth, len(perimeter.nodes), len(perimeter.interior))
    return perimeter


def front_to_front_h(state: State, perimeter: Perimeter, h_between: Callable[[State, State], Cost]) -> Cost:
    """min over perimeter nodes B of h_between(state, B) + g2*(B)"""
    if not perimeter.nodes:
        raise DomainFault("empty perimeter: the backward search exhausted the space")
    return min(h_between(state, b) + node.g for b, node in perimeter.nodes.items())


def perimeter_search(domain: Domain, perimeter: Perimeter, engine: str = "astar", *,
                     stats: Optional[SearchStats] = None) -> SearchResult:
    if engine not in PERIMETER_ENGINES:
        raise UsageError(f"unknown perimeter engine {engine!r}, expected one of {PERIMETER_ENGINES}")
    own = stats is None
    stats = stats if stats is not None else SearchStats(f"perimeter_{engine}")
    stats.direction_assignment = Direction.FORWARD
    stats.setup_generated += perimeter.generated
    stats.nodes_generated += perimeter.generated
    stats.extra["perimeter_nodes"] = perimeter.size
    with stats.timed(own):
        result = _run_perimeter(domain, perimeter, engine, stats)
    # the stored perimeter counts against the memory of the run
    stats.memory_peak += perimeter.size
    return result


def _run_perimeter(domain, perimeter, engine, stats) -> SearchResult:
    stored = perimeter.stored(domain.start)
    if stored is not None:
        stats.improved(stored.g)
        solution = Solution(path=perimeter.continuation(domain.start), cost=stored.g,
                            l_min_history=list(stats.l_min_history))
        return SearchResult(solution, stats)
    if not perimeter.nodes:
        # the interior is the whole component of t and s is not in it
        return SearchResult(None, stats)

    def heuristic(state):
        return front_to_front_h(state, perimeter, domain.pair_heuristic)

    if engine == "astar":
        return SearchResult(_perimeter_astar(domain, perimeter, heuristic, stats), stats)
    return SearchResult(_perimeter_idastar(domain, perimeter, heuristic, stats), stats)


def _perimeter_astar(domain, perimeter, heuristic, stats) -> Optional[Solution]:
    search = DirectionalSearch(domain, Direction.FORWARD, stats, heuristic=heuristic)
    best = BestMeeting(stats)
    while search.frontier and search.frontier.fmin < best.cost:
        node = search.frontier.pop()
        for child in search.expand(node):
            stored = perimeter.stored(child.state)
            if stored is not None:
                best.offer(Direction.FORWARD, child, stored)
                continue
            search.offer(child)
    return best.solution()


def _perimeter_idastar(domain, perimeter, heuristic, stats) -> Optional[Solution]:
    def lookup(state, g):
        stored = perimeter.stored(state)
        if stored is None:
            return None
        return StoredHit(remaining=stored.g, nip=True, continuation=perimeter.continuation(state))

    engine = IterativeDeepening(domain, Direction.FORWARD, stats, estimate=lambda state, g: heuristic(state),
                                lookup=lookup, accept_after_iteration=True)
    return engine.run()
