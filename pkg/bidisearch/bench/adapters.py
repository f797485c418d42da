# bidisearch/bench/adapters.py
"""
Uniform runner(domain, config) -> SearchResult wrappers registered in
hooks.algorithms
"""

from bidisearch.search.bidi_sequential import baa, bai, idastar_probing
from bidisearch.search.bidi_traditional import bhpa, bsstar
from bidisearch.search.core import Direction
from bidisearch.search.diffheur import add_baa, add_bda, max_bai, max_ida
from bidisearch.search.perimeter import build_perimeter, perimeter_search
from bidisearch.search.stats import SearchStats
from bidisearch.search.unisearch import astar, idastar, trans


def run_astar(domain, config):
    return astar(domain, Direction.FORWARD)


def run_idastar(domain, config):
    return idastar(domain, Direction.FORWARD)


def run_idastar_probing(domain, config):
    return idastar_probing(domain, config.probe_iterations)


def run_trans(domain, config):
    return trans(domain, Direction.FORWARD, config.tt_nodes)


def run_bhpa(domain, config):
    return bhpa(domain)


def run_bsstar(domain, config):
    return bsstar(domain)


def _run_perimeter(domain, config, engine):
    setup = SearchStats("perimeter")
    with setup.timed():
        perimeter = build_perimeter(domain, config.perimeter_depth, stats=setup)
    result = perimeter_search(domain, perimeter, engine)
    result.stats.wall_time += setup.wall_time
    return result


def run_perimeter_astar(domain, config):
    return _run_perimeter(domain, config, "astar")


def run_perimeter_idastar(domain, config):
    return _run_perimeter(domain, config, "idastar")


def run_bai(domain, config):
    return bai(domain, config.first_phase_budget, 0, probe_iterations=config.probe_iterations)


def run_bai_trans(domain, config):
    return bai(domain, config.first_phase_budget, config.tt_nodes, probe_iterations=config.probe_iterations)


def run_baa(domain, config):
    return baa(domain, config.first_phase_budget)


def run_add_baa(domain, config):
    return add_baa(domain, config.first_phase_budget)


def run_add_bda(domain, config):
    return add_bda(domain, config.first_phase_budget)


def run_max_bai(domain, config):
    return max_bai(domain, config.first_phase_budget, 0)


def run_max_bai_trans(domain, config):
    return max_bai(domain, config.first_phase_budget, config.tt_nodes)


def run_max_ida(domain, config):
    return max_ida(domain)
