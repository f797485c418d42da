# bidisearch/bench/bounds.py
"""
Expansion-count bounds of BHPA against unidirectional A* run in each
direction on the same instance:

    #(BHPA) < #(A*)_1 + #(A*)_2                (upper)
    min(X_1, X_2) + 1 <= #(BHPA)               (lower)

X_d is the number of A* expansions in direction d with f < C*. When both
A* runs expand the same number of nodes for every f-value and every
f-value occurs once per direction, #(BHPA) = 2 * #(A*) - delta with
1 <= delta <= 3.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass
from typing import Optional

from bidisearch.search.bidi_traditional import bhpa
from bidisearch.search.core import Direction
from bidisearch.search.unisearch import astar

log = logging.getLogger(__name__)

DELTA_RANGE = (1, 3)


@dataclass
class BoundsReport:
    name: str
    cost: Optional[int] = None
    bhpa_expansions: int = 0
    a_star_fwd: int = 0
    a_star_bwd: int = 0
    X1: int = 0
    X2: int = 0
    cost_ok: bool = False
    upper_ok: bool = False
    lower_ok: bool = False
    symmetric: bool = False
    distinct: bool = False
    delta: Optional[int] = None
    delta_ok: Optional[bool] = None
    excluded: Optional[str] = None

    @property
    def passed(self) -> bool:
        if self.excluded:
            return True
        return self.cost_ok and self.upper_ok and self.lower_ok and self.delta_ok is not False

    def as_row(self) -> dict:
        return asdict(self)


def below_optimum(histogram, cost) -> int:
    """X_d: expansions whose f-value is below C*"""
    return sum(count for f, count in histogram.items() if f < cost)


def verify_bounds(domain, name: str = "") -> BoundsReport:
    report = BoundsReport(name=name or getattr(domain, "name", ""))
    if domain.start == domain.goal:
        report.excluded = "trivial"
        return report

    forward = astar(domain, Direction.FORWARD)
    if not forward.solved:
        report.excluded = "unsolvable"
        log.info("%s: no path, excluded from the bound checks", report.name)
        return report
    backward = astar(domain, Direction.BACKWARD)
    bidirectional = bhpa(domain)

    cost = forward.cost
    report.cost_ok = backward.cost == cost and bidirectional.cost == cost
    if not report.cost_ok:
        log.error("%s: cost mismatch A*1=%s A*2=%s BHPA=%s", report.name, cost, backward.cost,
                  bidirectional.cost)
    fwd_hist = forward.stats.f_histogram[Direction.FORWARD]
    bwd_hist = backward.stats.f_histogram[Direction.BACKWARD]

    report.cost = cost
    report.bhpa_expansions = bidirectional.stats.nodes_expanded
    report.a_star_fwd = forward.stats.nodes_expanded
    report.a_star_bwd = backward.stats.nodes_expanded
    report.X1 = below_optimum(fwd_hist, cost)
    report.X2 = below_optimum(bwd_hist, cost)
    report.upper_ok = report.bhpa_expansions < report.a_star_fwd + report.a_star_bwd
    report.lower_ok = min(report.X1, report.X2) + 1 <= report.bhpa_expansions
    report.symmetric = +fwd_hist == +bwd_hist
    report.distinct = all(count == 1 for count in fwd_hist.values()) and all(
        count == 1 for count in bwd_hist.values())
    if report.symmetric and report.distinct:
        report.delta = 2 * report.a_star_fwd - report.bhpa_expansions
        report.delta_ok = DELTA_RANGE[0] <= report.delta <= DELTA_RANGE[1]

    log.debug("%s: BHPA %d, A*1 %d, A*2 %d, X %d/%d", report.name, report.bhpa_expansions,
              report.a_star_fwd, report.a_star_bwd, report.X1, report.X2)
    return report
