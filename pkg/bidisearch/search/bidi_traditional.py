# bidisearch/search/bidi_traditional.py
"""
Traditional bidirectional engines: BHPA and BS*

Both alternate two A*-type searches by the cardinality criterion and detect
a meeting when a generated state is already known to the opposite
direction (OPEN or CLOSED).
"""

from __future__ import annotations

import logging
from typing import Optional

from bidisearch.search.core import (
    BestMeeting,
    DirectionalSearch,
    Direction,
    Domain,
    Solution,
    termination_met,
)
from bidisearch.search.stats import SearchResult, SearchStats

log = logging.getLogger(__name__)


def cardinality_choose(open1_size: int, open2_size: int) -> Direction:
    """Pohl's rule: expand forward while |OPEN1| <= |OPEN2|"""
    return Direction.FORWARD if open1_size <= open2_size else Direction.BACKWARD


def _trivial(domain: Domain, stats: SearchStats) -> Optional[SearchResult]:
    if domain.start != domain.goal:
        return None
    stats.improved(0)
    return SearchResult(Solution(path=[domain.start], cost=0, l_min_history=[(0, 0)]), stats)


def _pick(searches: dict) -> Direction:
    forward, backward = searches[Direction.FORWARD], searches[Direction.BACKWARD]
    direction = cardinality_choose(len(forward.frontier), len(backward.frontier))
    if not searches[direction].frontier:
        direction = direction.reverse()
    return direction


def _meet(best: BestMeeting, direction: Direction, child, opposite: DirectionalSearch) -> None:
    match = opposite.lookup(child.state)
    if match is not None:
        best.offer(direction, child, match)


def bhpa(domain: Domain, *, stats: Optional[SearchStats] = None) -> SearchResult:
    own = stats is None
    stats = stats if stats is not None else SearchStats("bhpa")
    with stats.timed(own):
        trivial = _trivial(domain, stats)
        if trivial is not None:
            return trivial
        searches = {d: DirectionalSearch(domain, d, stats) for d in Direction}
        best = BestMeeting(stats)
        while not termination_met(best.cost,
                                  searches[Direction.FORWARD].frontier.fmin,
                                  searches[Direction.BACKWARD].frontier.fmin):
            direction = _pick(searches)
            search, opposite = searches[direction], searches[direction.reverse()]
            node = search.frontier.pop()
            for child in search.expand(node):
                _meet(best, direction, child, opposite)
                search.offer(child)
        log.debug("BHPA done: L_min %s, %d generated", best.cost, stats.nodes_generated)
        return SearchResult(best.solution(), stats)


def _trim(search: DirectionalSearch, l_min, stats: SearchStats) -> None:
    frontier = search.frontier
    while frontier and frontier.fmin >= l_min:
        search.remove(frontier.peek().state)
        stats.count("trimmed")


def bsstar(domain: Domain, *, stats: Optional[SearchStats] = None) -> SearchResult:
    """BHPA plus trimming, screening, nipping and pruning"""
    own = stats is None
    stats = stats if stats is not None else SearchStats("bsstar")
    with stats.timed(own):
        trivial = _trivial(domain, stats)
        if trivial is not None:
            return trivial
        searches = {d: DirectionalSearch(domain, d, stats, track_children=True) for d in Direction}
        best = BestMeeting(stats)
        while True:
            for search in searches.values():
                _trim(search, best.cost, stats)
            if not searches[Direction.FORWARD].frontier or not searches[Direction.BACKWARD].frontier:
                break
            direction = _pick(searches)
            search, opposite = searches[direction], searches[direction.reverse()]
            node = search.frontier.pop()
            match = opposite.closed.get(node.state)
            if match is not None:
                best.offer(direction, node, match)
                search.closed.add(node)
                stats.count("nipped")
                for state in opposite.open_descendants(node.state):
                    opposite.remove(state)
                    stats.count("pruned")
                continue
            for child in search.expand(node):
                _meet(best, direction, child, opposite)
                if child.f >= best.cost:
                    stats.count("screened")
                    continue
                search.offer(child)
        log.debug("BS* done: L_min %s, %d generated", best.cost, stats.nodes_generated)
        return SearchResult(best.solution(), stats)
