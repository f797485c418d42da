# bidisearch/search/unisearch.py
"""
Unidirectional engines: A*, IDA* and Trans (IDA* with a transposition
table), each runnable forward or backward.

IterativeDeepening is the depth-first engine shared with the sequential
bidirectional algorithms; they plug a stored structure into it through the
lookup hook and replace the heuristic through the estimate hook.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Optional

from bidisearch.search.core import (
    INF,
    Cost,
    DirectionalSearch,
    Direction,
    Domain,
    Solution,
    State,
    solution_from_path,
)
from bidisearch.search.stats import SearchResult, SearchStats

log = logging.getLogger(__name__)

TT_BUCKET_SIZE = 4


@dataclass
class MemoryExhausted:
    """A* stopped on its node budget; the search keeps its OPEN/CLOSED intact"""

    search: DirectionalSearch

    @property
    def frontier(self):
        return self.search.frontier

    @property
    def closed(self):
        return self.search.closed

    @property
    def fmin(self) -> Cost:
        return self.search.frontier.min_f()


def astar(domain: Domain, direction: Direction = Direction.FORWARD, node_limit: Optional[int] = None, *,
          stats: Optional[SearchStats] = None,
          heuristic: Optional[Callable[[State], Cost]] = None,
          key=None) -> SearchResult:
    """
    Best-first search selecting a node of minimum f (or of minimum key)

    node_limit bounds the nodes generated by this call; when it runs out
    before the target is selected the result carries a MemoryExhausted.
    """
    own = stats is None
    stats = stats if stats is not None else SearchStats("astar")
    if stats.direction_assignment is None:
        stats.direction_assignment = direction
    with stats.timed(own):
        search = DirectionalSearch(domain, direction, stats, heuristic=heuristic, key=key)
        budget_start = stats.nodes_generated
        while search.frontier:
            node = search.frontier.peek()
            if node.state == search.target:
                search.frontier.pop()
                stats.improved(node.g)
                solution = solution_from_path(node.path(), direction, node.g)
                solution.l_min_history = list(stats.l_min_history)
                return SearchResult(solution, stats)
            if node_limit is not None and stats.nodes_generated - budget_start >= node_limit:
                log.debug("A* %s stopped after %d generated, fmin %s",
                          direction.label, stats.nodes_generated - budget_start, search.frontier.min_f())
                return SearchResult(None, stats, exhausted=MemoryExhausted(search))
            search.frontier.pop()
            for child in search.expand(node):
                search.offer(child)
        return SearchResult(None, stats)


@dataclass(slots=True)
class TranspositionEntry:
    state: State
    cached_h: Cost
    depth_g: Cost
    static_h: Cost
    iteration: int = 0

    @property
    def improvement(self) -> Cost:
        return self.cached_h - self.static_h


class TranspositionTable:
    """
    Bucketed table of backed-up heuristic values

    A full bucket gives up the entry with the smallest improvement over its
    static h (ties: the shallower one), and only to an entry that is at least
    as good by the same measure.
    """

    def __init__(self, capacity: int, bucket_size: int = TT_BUCKET_SIZE):
        self.capacity = max(0, int(capacity))
        if self.capacity:
            self.slots = min(bucket_size, self.capacity)
            self._buckets = [[] for _ in range(self.capacity // self.slots)]
        else:
            self.slots = 0
            self._buckets = []
        self.size = 0
        self.stores = 0
        self.replacements = 0

    def _bucket(self, state) -> list:
        return self._buckets[hash(state) % len(self._buckets)]

    def get(self, state: State) -> Optional[TranspositionEntry]:
        if not self._buckets:
            return None
        for entry in self._bucket(state):
            if entry.state == state:
                return entry
        return None

    def store(self, state: State, cached_h: Cost, depth_g: Cost, static_h: Cost, iteration: int = 0) -> None:
        if not self._buckets:
            return
        self.stores += 1
        bucket = self._bucket(state)
        for entry in bucket:
            if entry.state == state:
                entry.cached_h = max(entry.cached_h, cached_h)
                if entry.iteration != iteration:
                    entry.depth_g, entry.iteration = depth_g, iteration
                else:
                    entry.depth_g = min(entry.depth_g, depth_g)
                return
        fresh = TranspositionEntry(state, max(cached_h, static_h), depth_g, static_h, iteration)
        if len(bucket) < self.slots:
            bucket.append(fresh)
            self.size += 1
            return
        victim = min(range(len(bucket)), key=lambda i: (bucket[i].improvement, bucket[i].depth_g))
        if (fresh.improvement, fresh.depth_g) >= (bucket[victim].improvement, bucket[victim].depth_g):
            bucket[victim] = fresh
            self.replacements += 1

    def __len__(self) -> int:
        return self.size

    def __iter__(self):
        for bucket in self._buckets:
            yield from bucket


@dataclass
class StoredHit:
    """A generated state found in a stored structure of the opposite direction"""

    remaining: Cost
    nip: bool
    continuation: list = field(default_factory=list)


@dataclass(slots=True)
class _Frame:
    state: State
    g: Cost
    h: Cost
    children: list = field(default_factory=list)
    index: int = 0
    backed: Cost = INF


class IterativeDeepening:
    """
    IDA* with an explicit stack

    Children are visited in increasing f (stable), states on the current path
    are not re-entered, the target is tested when generated. Optional hooks:

    - estimate(state, g): heuristic replacing the static one
    - lookup(state, g): StoredHit for states held by another search
    - observe(state, g, h, cut): called for every evaluated child with its
      estimate, and for the target when it lies beyond the threshold
    - table: TranspositionTable of backed-up values (Trans)

    With accept_after_iteration the best candidate is accepted once an
    iteration ends with a next threshold >= L_min; otherwise (plain IDA*)
    the run goes on until a path within the threshold is found.
    """

    def __init__(self, domain: Domain, direction: Direction, stats: SearchStats, *,
                 estimate: Optional[Callable[[State, Cost], Cost]] = None,
                 lookup: Optional[Callable[[State, Cost], Optional[StoredHit]]] = None,
                 observe: Optional[Callable[[State, Cost, Cost, bool], None]] = None,
                 table: Optional[TranspositionTable] = None,
                 accept_after_iteration: bool = False):
        self.domain = domain
        self.direction = direction
        self.stats = stats
        self.root = domain.origin(direction)
        self.target = domain.target(direction)
        self._estimate = estimate or (lambda state, g: domain.heuristic(state, direction))
        self._lookup = lookup
        self._observe = observe
        self.table = table if table is not None and table.capacity else None
        self.accept_after_iteration = accept_after_iteration
        self.l_min: Cost = INF
        self.iterations = 0
        self._best: Optional[list] = None
        self._next: Cost = INF
        self._on_path: set = set()

    def static_h(self, state: State) -> Cost:
        return self.domain.heuristic(state, self.direction)

    def root_estimate(self) -> Cost:
        return self._estimate(self.root, 0)

    def _candidate(self, cost: Cost, states: list) -> None:
        if cost < self.l_min:
            self.l_min = cost
            self._best = list(states)
            self.stats.improved(cost)
            log.debug("IDA* %s candidate %s", self.direction.label, cost)

    def solution(self) -> Optional[Solution]:
        if self._best is None:
            return None
        solution = solution_from_path(self._best, self.direction, self.l_min)
        solution.l_min_history = list(self.stats.l_min_history)
        return solution

    def run(self, threshold: Optional[Cost] = None, max_iterations: Optional[int] = None) -> Optional[Solution]:
        stats = self.stats
        bound = self.root_estimate() if threshold is None else threshold
        if self.root == self.target:
            stats.threshold_sequence.append(bound)
            stats.iteration_generated.append(0)
            self._candidate(0, [self.root])
            return self.solution()
        if self._lookup is not None:
            hit = self._lookup(self.root, 0)
            if hit is not None:
                self._candidate(hit.remaining, hit.continuation)
                if hit.nip:
                    return self.solution()
        while True:
            self.iterations += 1
            stats.threshold_sequence.append(bound)
            before = stats.nodes_generated
            found = self._iterate(bound)
            stats.iteration_generated.append(stats.nodes_generated - before)
            log.debug("IDA* %s threshold %s: %d generated, next %s, L_min %s", self.direction.label,
                      bound, stats.nodes_generated - before, self._next, self.l_min)
            if found:
                return self.solution()
            if self.accept_after_iteration and self.l_min <= self._next:
                return self.solution()
            if self._next == INF:
                return None
            if max_iterations is not None and self.iterations >= max_iterations:
                return None
            bound = self._next

    @property
    def next_threshold(self) -> Cost:
        return self._next

    def _open(self, state: State, g: Cost, h: Cost, bound: Cost, path: list) -> Optional[_Frame]:
        """Expand state at the end of path; None means an acceptable solution turned up"""
        stats = self.stats
        stats.expanded(g + h, self.direction)
        stats.observe_memory(len(path) + (len(self.table) if self.table is not None else 0))
        frame = _Frame(state, g, h)
        children = []
        for order, (child, cost) in enumerate(self.domain.neighbors(state, self.direction)):
            stats.generated()
            g2 = g + cost
            if child in self._on_path:
                if self.table is not None:
                    frame.backed = min(frame.backed, g2 + self.static_h(child))
                continue
            if child == self.target:
                if g2 <= bound or self.accept_after_iteration:
                    self._candidate(g2, path + [child])
                if self.l_min <= bound:
                    return None
                frame.backed = min(frame.backed, g2)
                self._next = min(self._next, g2)
                if self._observe is not None:
                    self._observe(child, g2, 0, True)
                continue
            if self._lookup is not None:
                hit = self._lookup(child, g2)
                if hit is not None:
                    total = g2 + hit.remaining
                    self._candidate(total, path + hit.continuation)
                    if self.l_min <= bound:
                        return None
                    if hit.nip:
                        stats.count("nipped")
                        frame.backed = min(frame.backed, total)
                        self._next = min(self._next, total)
                        continue
            h2 = self._estimate(child, g2)
            if self._observe is not None:
                self._observe(child, g2, h2, g2 + h2 > bound)
            children.append((g2 + h2, order, child, cost, h2))
        children.sort()
        frame.children = children
        return frame

    def _iterate(self, bound: Cost) -> bool:
        self._next = INF
        self._on_path = {self.root}
        path = [self.root]
        table = self.table
        iteration = self.iterations
        root_frame = self._open(self.root, 0, self.root_estimate(), bound, path)
        if root_frame is None:
            return True
        stack = [root_frame]
        while stack:
            frame = stack[-1]
            if frame.index < len(frame.children):
                f2, _, child, cost, h2 = frame.children[frame.index]
                frame.index += 1
                g2 = frame.g + cost
                if f2 > bound:
                    frame.backed = min(frame.backed, f2)
                    self._next = min(self._next, f2)
                    continue
                if table is not None:
                    entry = table.get(child)
                    if entry is not None:
                        h2 = max(h2, entry.cached_h)
                        if entry.iteration == iteration and entry.depth_g < g2:
                            # already searched this iteration with more budget left
                            frame.backed = min(frame.backed, g2 + h2)
                            self.stats.count("tt_transposition_cuts")
                            continue
                        if g2 + h2 > bound:
                            frame.backed = min(frame.backed, g2 + h2)
                            self._next = min(self._next, g2 + h2)
                            self.stats.count("tt_value_cuts")
                            continue
                path.append(child)
                self._on_path.add(child)
                opened = self._open(child, g2, h2, bound, path)
                if opened is None:
                    return True
                stack.append(opened)
                continue
            stack.pop()
            if table is not None:
                table.store(frame.state, max(frame.h, frame.backed - frame.g), frame.g,
                            self.static_h(frame.state), iteration)
            path.pop()
            self._on_path.discard(frame.state)
            if stack:
                stack[-1].backed = min(stack[-1].backed, frame.backed)
        return False


def idastar(domain: Domain, direction: Direction = Direction.FORWARD,
            initial_threshold: Optional[Cost] = None, *, stats: Optional[SearchStats] = None) -> SearchResult:
    return _iterative(domain, direction, initial_threshold, stats, None, "idastar")


def trans(domain: Domain, direction: Direction = Direction.FORWARD, tt_capacity: int = 0, *,
          initial_threshold: Optional[Cost] = None, stats: Optional[SearchStats] = None) -> SearchResult:
    table = TranspositionTable(tt_capacity)
    result = _iterative(domain, direction, initial_threshold, stats, table, "trans")
    result.stats.extra.update(tt_entries=len(table), tt_stores=table.stores, tt_replacements=table.replacements)
    return result


def _iterative(domain, direction, initial_threshold, stats, table, name) -> SearchResult:
    own = stats is None
    stats = stats if stats is not None else SearchStats(name)
    if stats.direction_assignment is None:
        stats.direction_assignment = direction
    with stats.timed(own):
        engine = IterativeDeepening(domain, direction, stats, table=table)
        solution = engine.run(initial_threshold)
    return SearchResult(solution, stats)
