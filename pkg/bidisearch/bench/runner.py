# bidisearch/bench/runner.py
"""
Benchmark driver: one row per instance, optionally normalized against a
baseline algorithm run on the same instance
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from typing import Optional

from tqdm import tqdm

from bidisearch import hooks
from bidisearch.bench.instances import build_instances
from bidisearch.config.settings import load_settings
from bidisearch.exceptions import DomainFault, SearchTimeout, UsageError
from bidisearch.search.core import INF, deadline
from bidisearch.utils import resolve_hook

log = logging.getLogger(__name__)

STATUS_OK = "ok"
STATUS_TIMEOUT = "timeout"
STATUS_ERROR = "error"


@dataclass
class BenchConfig:
    algorithm: str = "astar"
    domain: str = "maze"
    instances: Optional[int] = 10
    seed: int = 1
    memory_nodes: int = 200000
    tt_nodes: int = 100000
    perimeter_depth: int = 3
    first_phase_budget: Optional[int] = None
    probe_iterations: int = 3
    timeout_secs: Optional[float] = 60.0
    wall_skip_percent: float = 3.0
    maze_width: int = 50
    maze_height: int = 50
    puzzle_size: int = 3
    min_h: int = 0
    workers: int = 1
    baseline: Optional[str] = None
    format: str = "csv"
    instance_file: Optional[str] = None
    instance_format: Optional[str] = None
    timing: bool = False
    progress: bool = False

    @classmethod
    def from_settings(cls, settings: Optional[dict] = None, **overrides) -> "BenchConfig":
        settings = dict(load_settings() if settings is None else settings)
        if overrides.get("memory_nodes") is not None and overrides.get("first_phase_budget") is None:
            settings["first_phase_budget"] = None
        settings.update({key: value for key, value in overrides.items() if value is not None})
        known = {f.name for f in fields(cls)}
        config = cls(**{key: value for key, value in settings.items() if key in known})
        config.validate()
        return config

    def validate(self) -> None:
        if self.algorithm not in hooks.algorithms:
            raise UsageError(f"unknown algorithm {self.algorithm!r}; choose from {', '.join(sorted(hooks.algorithms))}")
        if self.baseline is not None and self.baseline not in hooks.algorithms:
            raise UsageError(f"unknown baseline {self.baseline!r}")
        if self.instance_file is None and self.domain not in hooks.domains:
            raise UsageError(f"unknown domain {self.domain!r}; choose from {', '.join(sorted(hooks.domains))}")
        if self.format not in hooks.report_formats:
            raise UsageError(f"unknown report format {self.format!r}")
        if self.workers < 1:
            raise UsageError("workers must be >= 1")
        if self.perimeter_depth < 0 or self.memory_nodes < 0 or self.tt_nodes < 0:
            raise UsageError("perimeter depth and node budgets must be >= 0")
        if self.first_phase_budget is None:
            self.first_phase_budget = self.memory_nodes // 2


def ratio(value, baseline) -> float:
    """value / baseline, with 0 / 0 = 1"""
    if baseline == 0:
        return 1.0 if value == 0 else math.inf
    return value / baseline


def _run_algorithm(name, domain, config):
    runner = resolve_hook(hooks.algorithms, name)
    with deadline(config.timeout_secs):
        result = runner(domain, config)
    if result.solution is not None:
        result.solution.validate(domain)
    return result


def run_instance(index: int, domain, config: BenchConfig) -> dict:
    row = {
        "instance": index,
        "name": getattr(domain, "name", "") or repr(domain),
        "algorithm": config.algorithm,
        "status": STATUS_OK,
    }
    try:
        result = _run_algorithm(config.algorithm, domain, config)
        row["solved"] = int(result.solved)
        row["cost"] = None if result.cost == INF else result.cost
        row.update(result.stats.as_row())
        if config.timing:
            row["wall_time"] = result.stats.wall_time
        if config.baseline:
            base = result if config.baseline == config.algorithm else _run_algorithm(config.baseline, domain, config)
            row["baseline_nodes_generated"] = base.stats.nodes_generated
            row["nodes_ratio"] = ratio(result.stats.nodes_generated, base.stats.nodes_generated)
            if config.timing:
                row["time_ratio"] = ratio(result.stats.wall_time, base.stats.wall_time)
    except SearchTimeout:
        log.warning("⏱️ instance %d (%s) timed out after %ss", index, row["name"], config.timeout_secs)
        row["status"] = STATUS_TIMEOUT
    except DomainFault as exc:
        log.warning("❌ instance %d (%s) failed: %s", index, row["name"], exc)
        row["status"] = STATUS_ERROR
    return row


def _run_job(job):
    return run_instance(*job)


def run_benchmark(config: BenchConfig, instances: Optional[list] = None) -> list[dict]:
    """Rows in instance order (1-based), whatever the worker count"""
    config.validate()
    instances = build_instances(config) if instances is None else instances
    log.info("Loaded %d instances for %s", len(instances), config.algorithm)
    jobs = [(index, domain, config) for index, domain in enumerate(instances, start=1)]
    progress = dict(total=len(jobs), desc=config.algorithm, disable=not config.progress, unit="inst")
    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            rows = list(tqdm(pool.map(_run_job, jobs), **progress))
    else:
        rows = [_run_job(job) for job in tqdm(jobs, **progress)]
    flagged = sum(1 for row in rows if row["status"] != STATUS_OK)
    log.info("Processed %d/%d instances, %d flagged", len(rows) - flagged, len(rows), flagged)
    return rows


def config_summary(config: BenchConfig) -> dict:
    return asdict(config)
