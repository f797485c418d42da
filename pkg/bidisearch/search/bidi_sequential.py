# bidisearch/search/bidi_sequential.py
"""
Sequential bidirectional search: a best-first phase in one direction builds
a stored structure, then a reverse search evaluates front-to-end and meets
that structure. Instantiated as BAI (A* then IDA*), BAI-Trans and BAA
(A* then A*), plus the probing that assigns the search directions.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import chain
from typing import Callable, Optional

from bidisearch.exceptions import UsageError
from bidisearch.search.core import (
    BestMeeting,
    ClosedSet,
    Cost,
    DirectionalSearch,
    Direction,
    Domain,
    Frontier,
    SearchNode,
    Solution,
    State,
)
from bidisearch.search.stats import SearchResult, SearchStats
from bidisearch.search.unisearch import (
    IterativeDeepening,
    StoredHit,
    TranspositionTable,
    astar,
    idastar,
)

log = logging.getLogger(__name__)

DEFAULT_PROBE_ITERATIONS = 3


@dataclass
class FirstPhaseResult:
    """OPEN and CLOSED of a best-first phase stopped on its budget"""

    direction: Direction
    closed: ClosedSet
    frontier: Frontier
    fmin: Cost
    max_frontier_g: Cost

    @classmethod
    def from_search(cls, search: DirectionalSearch) -> "FirstPhaseResult":
        max_g = max((node.g for node in chain(search.frontier, search.closed.values())), default=0)
        return cls(
            direction=search.direction,
            closed=search.closed,
            frontier=search.frontier,
            fmin=search.frontier.min_f(),
            max_frontier_g=max_g,
        )

    @property
    def size(self) -> int:
        return len(self.closed) + len(self.frontier)

    def lookup(self, state: State) -> Optional[SearchNode]:
        node = self.closed.get(state)
        return node if node is not None else self.frontier.get(state)

    def hit(self, state: State) -> Optional[StoredHit]:
        """Closed states end a branch (nip); open ones only offer a candidate"""
        node = self.closed.get(state)
        nip = node is not None
        if node is None:
            node = self.frontier.get(state)
            if node is None:
                return None
        return StoredHit(remaining=node.g, nip=nip, continuation=list(reversed(node.path())))


@dataclass
class ProbeResult:
    direction: Direction
    generated: dict = field(default_factory=dict)
    solution: Optional[Solution] = None
    oracle_ratio: Optional[float] = None


def frontier_reach_gate(state: State, h_toward_frontier: Cost, max_frontier_g: Cost) -> bool:
    """False proves state is not stored: an admissible h never exceeds the stored g"""
    return h_toward_frontier <= max_frontier_g


def bai_initial_threshold(root_estimate: Cost, phase_fmin: Cost) -> Cost:
    return max(root_estimate, phase_fmin)


def probe_direction(domain: Domain, iterations: int = DEFAULT_PROBE_ITERATIONS, *,
                    stats: Optional[SearchStats] = None, compare: bool = False) -> ProbeResult:
    """
    Run the first iterations of IDA* from both ends and return the direction
    that generated fewer nodes (ties go forward) for the depth-first phase
    """
    if iterations < 1:
        raise UsageError(f"probe needs at least one iteration, got {iterations}")
    generated = {}
    for direction in Direction:
        probe_stats = SearchStats("probe")
        solution = IterativeDeepening(domain, direction, probe_stats).run(max_iterations=iterations)
        if stats is not None:
            stats.absorb(probe_stats, as_probe=True)
        generated[direction] = probe_stats.nodes_generated
        if solution is not None:
            log.debug("probe %s solved the instance at cost %s", direction.label, solution.cost)
            return ProbeResult(direction, generated, solution)
    choice = Direction.FORWARD if generated[Direction.FORWARD] <= generated[Direction.BACKWARD] else Direction.BACKWARD
    result = ProbeResult(choice, generated)
    if compare:
        full = {d: idastar(domain, d).stats.nodes_generated for d in Direction}
        result.oracle_ratio = full[choice] / max(1, min(full.values()))
    log.debug("probe: forward %d, backward %d generated -> %s",
              generated[Direction.FORWARD], generated[Direction.BACKWARD], choice.label)
    return result


def idastar_probing(domain: Domain, iterations: int = DEFAULT_PROBE_ITERATIONS) -> SearchResult:
    """IDA* in the direction the probe assigns"""
    stats = SearchStats("idastar_probing")
    with stats.timed():
        probe = probe_direction(domain, iterations, stats=stats)
        stats.direction_assignment = probe.direction
        if probe.solution is not None:
            return SearchResult(probe.solution, stats)
        return idastar(domain, probe.direction, stats=stats)


def run_first_phase(domain: Domain, budget: Optional[int], stats: SearchStats, *,
                    direction: Direction = Direction.BACKWARD,
                    key: Optional[Callable[[SearchNode], Cost]] = None):
    """
    A* around the origin of direction for at most budget generations

    Returns (result, None) when the phase settles the instance on its own
    (solved, or OPEN emptied) and (None, FirstPhaseResult) otherwise.
    """
    result = astar(domain, direction, budget, stats=stats, key=key)
    if result.exhausted is None:
        return result, None
    phase = FirstPhaseResult.from_search(result.exhausted.search)
    log.info("first phase %s: %d stored, fmin %s, max g %s", direction.label,
             phase.size, phase.fmin, phase.max_frontier_g)
    return None, phase


def reverse_idastar(domain: Domain, phase: FirstPhaseResult, stats: SearchStats, *,
                    tt_capacity: int = 0,
                    estimate: Optional[Callable[[State, Cost], Cost]] = None) -> SearchResult:
    """IDA* toward a stored first phase, nipping at its closed states"""
    direction = phase.direction.reverse()

    def lookup(state, g):
        if not frontier_reach_gate(state, domain.heuristic(state, direction), phase.max_frontier_g):
            stats.count("gate_skips")
            return None
        return phase.hit(state)

    table = TranspositionTable(tt_capacity)
    engine = IterativeDeepening(domain, direction, stats, estimate=estimate, lookup=lookup,
                                table=table, accept_after_iteration=True)
    threshold = bai_initial_threshold(engine.root_estimate(), phase.fmin)
    log.info("IDA* phase %s from threshold %s", direction.label, threshold)
    solution = engine.run(threshold)
    if tt_capacity:
        stats.extra.update(tt_entries=len(table), tt_stores=table.stores, tt_replacements=table.replacements)
    stats.observe_memory(phase.size + len(table))
    return SearchResult(solution, stats)


def reverse_astar(domain: Domain, phase: FirstPhaseResult, stats: SearchStats, *,
                  heuristic: Optional[Callable[[State], Cost]] = None) -> SearchResult:
    """A* toward a stored first phase; stops when the selected f reaches L_min"""
    direction = phase.direction.reverse()
    search = DirectionalSearch(domain, direction, stats, heuristic=heuristic)
    best = BestMeeting(stats)
    stored = phase.lookup(search.root_state)
    if stored is not None:
        best.offer(direction, search.root, stored)
    while search.frontier and search.frontier.fmin < best.cost:
        node = search.frontier.pop()
        for child in search.expand(node):
            stored = phase.lookup(child.state)
            if stored is not None:
                best.offer(direction, child, stored)
                if child.state in phase.closed:
                    stats.count("nipped")
                    continue
            search.offer(child)
    stats.observe_memory(phase.size + search.size)
    return SearchResult(best.solution(), stats)


def bai(domain: Domain, astar_node_limit: Optional[int], tt_capacity: int = 0, *,
        probe_iterations: int = DEFAULT_PROBE_ITERATIONS) -> SearchResult:
    """
    Bidirectional A* - IDA*

    Without a node limit no probe runs and A* solves forward on its own.
    """
    stats = SearchStats("bai_trans" if tt_capacity else "bai")
    with stats.timed():
        if astar_node_limit is None:
            ida_direction = Direction.BACKWARD
        else:
            probe = probe_direction(domain, probe_iterations, stats=stats)
            if probe.solution is not None:
                stats.direction_assignment = probe.direction
                return SearchResult(probe.solution, stats)
            ida_direction = probe.direction
        stats.direction_assignment = ida_direction
        settled, phase = run_first_phase(domain, astar_node_limit, stats, direction=ida_direction.reverse())
        if settled is not None:
            return settled
        return reverse_idastar(domain, phase, stats, tt_capacity=tt_capacity)


def baa(domain: Domain, first_phase_node_budget: Optional[int]) -> SearchResult:
    """Bidirectional A* - A*: the direction changes exactly once"""
    stats = SearchStats("baa")
    with stats.timed():
        stats.direction_assignment = Direction.FORWARD
        settled, phase = run_first_phase(domain, first_phase_node_budget, stats)
        if settled is not None:
            return settled
        return reverse_astar(domain, phase, stats)
