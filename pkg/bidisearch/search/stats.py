# bidisearch/search/stats.py
"""Per-run counters and the result record every engine returns"""

from __future__ import annotations

import time
from collections import Counter
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Optional

from bidisearch.search.core import INF, Cost, Direction, Solution, check_deadline

DEADLINE_CHECK_MASK = 1023


def _histograms():
    return {Direction.FORWARD: Counter(), Direction.BACKWARD: Counter()}


@dataclass
class SearchStats:
    algorithm: str = ""
    nodes_generated: int = 0
    nodes_expanded: int = 0
    f_histogram: dict = field(default_factory=_histograms)
    first_solution: Optional[tuple[int, Cost]] = None
    optimal_found_at: Optional[int] = None
    wall_time: float = 0.0
    direction_assignment: Optional[Direction] = None
    threshold_sequence: list = field(default_factory=list)
    iteration_generated: list = field(default_factory=list)
    memory_peak: int = 0
    probe_generated: int = 0
    setup_generated: int = 0
    l_min_history: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    def generated(self, count: int = 1) -> None:
        self.nodes_generated += count

    def expanded(self, f: Cost, direction: Direction) -> None:
        self.nodes_expanded += 1
        self.f_histogram[direction][f] += 1
        if not self.nodes_expanded & DEADLINE_CHECK_MASK:
            check_deadline()

    def observe_memory(self, nodes: int) -> None:
        if nodes > self.memory_peak:
            self.memory_peak = nodes

    def improved(self, cost: Cost) -> None:
        """A complete path cheaper than every earlier one (new L_min)"""
        if self.first_solution is None:
            self.first_solution = (self.nodes_generated, cost)
        self.optimal_found_at = self.nodes_generated
        self.l_min_history.append((self.nodes_generated, cost))

    def count(self, name: str, amount: int = 1) -> None:
        self.extra[name] = self.extra.get(name, 0) + amount

    def absorb(self, other: "SearchStats", *, as_probe: bool = False) -> None:
        """Fold the counters of a helper run (a probe) into this one"""
        self.nodes_generated += other.nodes_generated
        self.nodes_expanded += other.nodes_expanded
        for direction, histogram in other.f_histogram.items():
            self.f_histogram[direction].update(histogram)
        self.memory_peak = max(self.memory_peak, other.memory_peak)
        if as_probe:
            self.probe_generated += other.nodes_generated

    def expansions(self, direction: Direction) -> int:
        return sum(self.f_histogram[direction].values())

    @contextmanager
    def timed(self, enabled: bool = True):
        if not enabled:
            yield self
            return
        started = time.perf_counter()
        try:
            yield self
        finally:
            self.wall_time += time.perf_counter() - started

    def as_row(self) -> dict[str, Any]:
        first_nodes, first_cost = self.first_solution or (None, None)
        return {
            "nodes_generated": self.nodes_generated,
            "nodes_expanded": self.nodes_expanded,
            "first_solution_nodes": first_nodes,
            "first_solution_cost": first_cost,
            "optimal_found_at": self.optimal_found_at,
            "memory_peak": self.memory_peak,
            "probe_generated": self.probe_generated,
            "setup_generated": self.setup_generated,
            "iterations": len(self.threshold_sequence),
            "direction": self.direction_assignment.label if self.direction_assignment else "",
        }


@dataclass
class SearchResult:
    solution: Optional[Solution]
    stats: SearchStats
    exhausted: Any = None

    @property
    def solved(self) -> bool:
        return self.solution is not None

    @property
    def cost(self) -> Cost:
        return INF if self.solution is None else self.solution.cost
