# bidisearch/search/diffheur.py
"""
Difference heuristics learned from a stored first phase around t

The Add method raises h1 by the constant Mindiff1 = min(g2 - h1) over the
stored fringe; the Max method uses fmin2 - h2 whenever it beats h1. Both are
admissible outside the stored region; only the Add estimate stays consistent.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from bidisearch.exceptions import DomainFault
from bidisearch.search.bidi_sequential import FirstPhaseResult, reverse_astar, reverse_idastar, run_first_phase
from bidisearch.search.core import INF, Cost, Direction, Domain, SearchNode, Solution, State
from bidisearch.search.stats import SearchResult, SearchStats
from bidisearch.search.unisearch import IterativeDeepening

log = logging.getLogger(__name__)

Heuristic = Callable[[State], Cost]


@dataclass(frozen=True)
class FringeEntry:
    state: State
    g_star: Cost
    h_opposite: Cost
    h_own: Cost


@dataclass(frozen=True)
class DiffValues:
    diff1_star: Cost
    diff2: Cost


@dataclass(frozen=True)
class DiffContext:
    mindiff: Cost
    fmin2: Cost
    hmax: Cost
    fringe: tuple = field(default_factory=tuple, repr=False)

    @classmethod
    def from_phase(cls, domain: Domain, phase: FirstPhaseResult) -> "DiffContext":
        """
        Difference quantities over the OPEN fringe of the first phase

        Every path entering the stored region crosses an OPEN node reached
        optimally, so the minima over OPEN bound every outside state.
        """
        own, far = phase.direction, phase.direction.reverse()
        fringe = tuple(
            FringeEntry(node.state, node.g, domain.heuristic(node.state, far), domain.heuristic(node.state, own))
            for node in phase.frontier
        )
        pairs = [(entry.state, entry.g_star) for entry in fringe]
        h_opposite = {entry.state: entry.h_opposite for entry in fringe}
        h_own = {entry.state: entry.h_own for entry in fringe}
        context = cls(
            mindiff=compute_mindiff(pairs, h_opposite.__getitem__),
            fmin2=compute_fmin2(pairs, h_own.__getitem__),
            hmax=max(h_opposite.values()),
            fringe=fringe,
        )
        log.info("difference context: mindiff %s, fmin2 %s, hmax %s over %d fringe nodes",
                 context.mindiff, context.fmin2, context.hmax, len(fringe))
        return context


def _require(fringe) -> list:
    fringe = list(fringe)
    if not fringe:
        raise DomainFault("empty fringe")
    return fringe


def compute_mindiff(fringe: Iterable[tuple[State, Cost]], h1: Heuristic) -> Cost:
    """min over (state, g2*) of g2* - h1(state)"""
    return min(g - h1(state) for state, g in _require(fringe))


def compute_fmin2(fringe: Iterable[tuple[State, Cost]], h2: Heuristic) -> Cost:
    """min over (state, g2*) of g2* + h2(state)"""
    return min(g + h2(state) for state, g in _require(fringe))


def diff_values(domain: Domain, state: State, g1: Cost, g2: Cost) -> DiffValues:
    return DiffValues(
        diff1_star=g2 - domain.heuristic(state, Direction.FORWARD),
        diff2=g1 - domain.heuristic(state, Direction.BACKWARD),
    )


def add_heuristic(h1: Heuristic, mindiff: Cost) -> Heuristic:
    def estimate(state):
        return h1(state) + mindiff
    return estimate


def max_heuristic(h1: Heuristic, h2: Heuristic, fmin2: Cost) -> Heuristic:
    def estimate(state):
        return max(h1(state), fmin2 - h2(state))
    return estimate


def _toward(domain: Domain, direction: Direction) -> Heuristic:
    return lambda state: domain.heuristic(state, direction)


def _add_phase(domain: Domain, phase: FirstPhaseResult, stats: SearchStats, use_mindiff: bool) -> SearchResult:
    context = DiffContext.from_phase(domain, phase)
    stats.extra["mindiff"] = context.mindiff
    mindiff = context.mindiff if use_mindiff else 0
    heuristic = add_heuristic(_toward(domain, phase.direction.reverse()), mindiff)
    return reverse_astar(domain, phase, stats, heuristic=heuristic)


def add_baa(domain: Domain, first_phase_node_budget: Optional[int], *, use_mindiff: bool = True) -> SearchResult:
    """BAA whose reverse A* adds Mindiff1 to h1"""
    stats = SearchStats("add_baa")
    with stats.timed():
        stats.direction_assignment = Direction.FORWARD
        settled, phase = run_first_phase(domain, first_phase_node_budget, stats)
        if settled is not None:
            return settled
        return _add_phase(domain, phase, stats, use_mindiff)


def add_bda(domain: Domain, first_phase_node_budget: Optional[int], *, use_mindiff: bool = True) -> SearchResult:
    """Add-BAA whose first phase expands by minimal g2 - h1"""
    stats = SearchStats("add_bda")
    h1 = _toward(domain, Direction.FORWARD)

    def diff_key(node: SearchNode) -> Cost:
        return node.g - h1(node.state)

    with stats.timed():
        stats.direction_assignment = Direction.FORWARD
        settled, phase = run_first_phase(domain, first_phase_node_budget, stats, key=diff_key)
        if settled is not None:
            return settled
        return _add_phase(domain, phase, stats, use_mindiff)


def max_bai(domain: Domain, astar_node_limit: Optional[int], tt_capacity: int = 0) -> SearchResult:
    """BAI with A* around t and max(h1, fmin2 - h2) in the IDA* phase"""
    stats = SearchStats("max_bai_trans" if tt_capacity else "max_bai")
    with stats.timed():
        stats.direction_assignment = Direction.FORWARD
        settled, phase = run_first_phase(domain, astar_node_limit, stats)
        if settled is not None:
            return settled
        context = DiffContext.from_phase(domain, phase)
        stats.extra["fmin2"] = context.fmin2
        heuristic = max_heuristic(_toward(domain, Direction.FORWARD), _toward(domain, Direction.BACKWARD),
                                  context.fmin2)
        return reverse_idastar(domain, phase, stats, tt_capacity=tt_capacity,
                               estimate=lambda state, g: heuristic(state))


class IterationFringe:
    """
    What one Max-IDA* iteration leaves for the next one

    Cut-off nodes fall in two groups. Those whose static g + h exceeded the
    threshold feed fmin, and so does the target when reached beyond it. Those
    cut only because the difference estimate raised them feed fmin_raised
    with their raised g + h. Expanded nodes are summarized by hmax and by
    the set of (h toward the next target, h toward the next root) pairs they
    carry; a state outside both was not expanded.
    """

    def __init__(self, domain: Domain, direction: Direction, *, audit: bool = False):
        self.domain = domain
        self.direction = direction
        self.fmin: Cost = INF
        self.fmin_raised: Cost = INF
        root = domain.origin(direction)
        self.hmax: Cost = domain.heuristic(root, direction.reverse())
        self.signatures: set = {self._signature(root)}
        self.expanded: Optional[set] = {root} if audit else None
        self.bound: Cost = INF

    def _signature(self, state: State) -> tuple:
        return (self.domain.heuristic(state, self.direction.reverse()),
                self.domain.heuristic(state, self.direction))

    def __call__(self, state: State, g: Cost, h: Cost, cut: bool) -> None:
        if cut:
            f_static = g + self.domain.heuristic(state, self.direction)
            if f_static > self.bound:
                self.fmin = min(self.fmin, f_static)
            else:
                self.fmin_raised = min(self.fmin_raised, g + h)
            return
        signature = self._signature(state)
        self.signatures.add(signature)
        if signature[0] > self.hmax:
            self.hmax = signature[0]
        if self.expanded is not None:
            self.expanded.add(state)

    def outside(self, h_next: Cost, h_root: Cost) -> bool:
        """True proves a state with these heuristic values was not expanded"""
        return hmax_gate(h_next, self.hmax) or (h_next, h_root) not in self.signatures

    def lower_bound(self, h_root: Cost, g_next: Cost) -> Cost:
        """
        Cost from this iteration's root to a state it did not expand

        The first cut node on the optimal path either had a static f of at
        least fmin (then h consistent gives fmin - h_root) or a raised f of at
        least fmin_raised (then the next iteration's g closes the triangle).
        """
        return min(self.fmin - h_root, self.fmin_raised - g_next)


def hmax_gate(h: Cost, hmax: Cost) -> bool:
    """True proves the state was not expanded by the previous iteration"""
    return h > hmax


def _difference_estimate(domain: Domain, direction: Direction, previous: Optional[IterationFringe],
                         stats: SearchStats):
    if previous is None:
        return None

    def estimate(state, g):
        h = domain.heuristic(state, direction)
        h_root = domain.heuristic(state, previous.direction)
        if not previous.outside(h, h_root):
            return h
        if previous.expanded is not None and state in previous.expanded:
            stats.count("gate_violations")
        return max(h, previous.lower_bound(h_root, g))

    return estimate


def max_ida(domain: Domain, *, audit: bool = False) -> SearchResult:
    """
    IDA* alternating direction after every iteration

    Each iteration evaluates with the difference estimate of the one before
    it, gated by what that iteration expanded; the threshold carried over is
    the best lower bound on the solution cost found so far in either
    direction.
    """
    stats = SearchStats("max_ida")
    with stats.timed():
        stats.direction_assignment = Direction.FORWARD
        direction = Direction.FORWARD
        previous: Optional[IterationFringe] = None
        lower_bound: Cost = 0
        while True:
            fringe = IterationFringe(domain, direction, audit=audit)
            engine = IterativeDeepening(domain, direction, stats, observe=fringe,
                                        estimate=_difference_estimate(domain, direction, previous, stats))
            fringe.bound = max(lower_bound, engine.root_estimate())
            solution: Optional[Solution] = engine.run(fringe.bound, max_iterations=1)
            if solution is not None:
                return SearchResult(solution, stats)
            if engine.next_threshold == INF:
                return SearchResult(None, stats)
            lower_bound = engine.next_threshold
            log.debug("max_ida %s at %s: fmin %s, raised %s, hmax %s, %d signatures", direction.label,
                      fringe.bound, fringe.fmin, fringe.fmin_raised, fringe.hmax, len(fringe.signatures))
            previous = fringe
            direction = direction.reverse()
