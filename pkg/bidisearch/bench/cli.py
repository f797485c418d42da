# bidisearch/bench/cli.py
"""
bidisearch command line: run | verify-bounds | gen-maze | oracle

Exit codes: 0 success, 1 usage error, 2 instance file I/O or format error,
3 internal invariant violation (including a failed bound check).
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from bidisearch import __version__, hooks
from bidisearch.bench.bounds import verify_bounds
from bidisearch.bench.instances import build_instances, format_maze
from bidisearch.bench.report import emit_report, emit_table
from bidisearch.bench.runner import BenchConfig, config_summary, run_benchmark
from bidisearch.config.settings import load_settings
from bidisearch.domains.maze import MazeDomain, maze_instances
from bidisearch.exceptions import (
    ConfigError,
    DomainFault,
    InstanceFormatError,
    InvariantViolation,
    StructuralFault,
    UsageError,
)
from bidisearch.utils.oracle import maze_cost, uniform_cost

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_INVARIANT = 3


class ArgumentParser(argparse.ArgumentParser):
    """argparse that raises UsageError instead of exiting"""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _common_options() -> argparse.ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON settings file (default: $BIDISEARCH_CONFIG)")
    common.add_argument("--domain", choices=sorted(hooks.domains), help="Instance family")
    common.add_argument("--instances", type=int, help="Number of instances")
    common.add_argument("--seed", type=int, help="First generator seed")
    common.add_argument("--instance-file", help="Read instances from this file")
    common.add_argument("--instance-format", choices=sorted(hooks.instance_formats),
                        help="Format of --instance-file (default: from --domain)")
    common.add_argument("--maze-width", type=int)
    common.add_argument("--maze-height", type=int)
    common.add_argument("--wall-skip-percent", type=float, help="Share of extra walls removed after carving")
    common.add_argument("--min-h", type=int, help="Keep mazes whose endpoints are at least this far apart")
    common.add_argument("--puzzle-size", type=int, help="Board side for generated puzzles")
    common.add_argument("--format", choices=sorted(hooks.report_formats), help="Report format")
    common.add_argument("--output", help="Write the report here instead of stdout")
    common.add_argument("-v", "--verbose", action="count", default=0, help="More logging (repeatable)")
    common.add_argument("--quiet", action="store_true", help="Warnings only, no progress bar")
    return common


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog=hooks.app_name, description=f"{hooks.app_title}: {hooks.app_description}")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _common_options()

    run = subparsers.add_parser("run", parents=[common], help="Benchmark one algorithm")
    run.add_argument("--algorithm", choices=sorted(hooks.algorithms), help="Algorithm to run")
    run.add_argument("--memory-nodes", type=int, help="Node budget of memory-bounded engines")
    run.add_argument("--tt-nodes", type=int, help="Transposition table entries")
    run.add_argument("--perimeter-depth", type=int, help="Perimeter depth d")
    run.add_argument("--first-phase-budget", type=int, help="Nodes generated by the first A* phase")
    run.add_argument("--probe-iterations", type=int, help="IDA* iterations per probe")
    run.add_argument("--baseline", choices=sorted(hooks.algorithms), help="Normalize against this algorithm")
    run.add_argument("--timeout-secs", type=float, help="Per-instance deadline")
    run.add_argument("--workers", type=int, help="Worker processes")
    run.add_argument("--timing", action="store_true", help="Add wall time columns")
    run.set_defaults(handler=cmd_run)

    bounds = subparsers.add_parser("verify-bounds", parents=[common],
                                   help="Check BHPA expansion counts against A* in both directions")
    bounds.set_defaults(handler=cmd_verify_bounds)

    gen = subparsers.add_parser("gen-maze", parents=[common], help="Write a maze instance file")
    gen.add_argument("--explicit", action="store_true", help="Include the wall rows")
    gen.set_defaults(handler=cmd_gen_maze)

    oracle = subparsers.add_parser("oracle", parents=[common], help="Optimal costs by uniform-cost search")
    oracle.set_defaults(handler=cmd_oracle)
    return parser


def configure_logging(verbose: int = 0, quiet: bool = False) -> None:
    if quiet:
        level = logging.WARNING
    else:
        level = logging.DEBUG if verbose > 1 else logging.INFO if verbose else logging.WARNING
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


OPTION_KEYS = (
    "algorithm", "domain", "instances", "seed", "memory_nodes", "tt_nodes", "perimeter_depth",
    "first_phase_budget", "probe_iterations", "timeout_secs", "wall_skip_percent", "maze_width",
    "maze_height", "puzzle_size", "min_h", "workers", "baseline", "format", "instance_file",
    "instance_format",
)


def config_from_args(args) -> BenchConfig:
    settings = load_settings(args.config)
    overrides = {key: getattr(args, key, None) for key in OPTION_KEYS}
    overrides["timing"] = getattr(args, "timing", False) or None
    overrides["progress"] = (not args.quiet and sys.stderr.isatty()) or None
    config = BenchConfig.from_settings(settings, **overrides)
    if args.instance_file and args.instances is None:
        config.instances = None
    return config


def write_output(text: str, output=None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
        log.info("Report written to %s", output)
    else:
        sys.stdout.write(text)


def cmd_run(args) -> int:
    config = config_from_args(args)
    log.debug("settings: %s", config_summary(config))
    rows = run_benchmark(config)
    write_output(emit_report(rows, config.format), args.output)
    return EXIT_OK


def cmd_verify_bounds(args) -> int:
    config = config_from_args(args)
    reports = []
    for index, domain in enumerate(build_instances(config), start=1):
        report = verify_bounds(domain, name=getattr(domain, "name", "") or f"instance-{index}")
        if not report.passed:
            log.error("bound check failed on %s: %s", report.name, report)
        reports.append(report)
    write_output(emit_table([report.as_row() for report in reports], config.format), args.output)
    failed = sum(1 for report in reports if not report.passed)
    excluded = sum(1 for report in reports if report.excluded)
    log.info("Checked %d instances, %d excluded, %d failed", len(reports), excluded, failed)
    return EXIT_INVARIANT if failed else EXIT_OK


def cmd_gen_maze(args) -> int:
    config = config_from_args(args)
    mazes = maze_instances(config.instances, config.maze_width, config.maze_height, config.seed,
                           min_h=config.min_h, wall_skip_percent=config.wall_skip_percent)
    text = "".join(format_maze(domain.maze, explicit=args.explicit) for domain in mazes)
    write_output(text, args.output)
    return EXIT_OK


def cmd_oracle(args) -> int:
    config = config_from_args(args)
    rows = []
    for index, domain in enumerate(build_instances(config), start=1):
        cost = maze_cost(domain.maze) if isinstance(domain, MazeDomain) else uniform_cost(domain)
        rows.append({"instance": index, "name": getattr(domain, "name", ""), "cost": cost})
    write_output(emit_table(rows, config.format), args.output)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        configure_logging(args.verbose, args.quiet)
        return args.handler(args)
    except ConfigError as exc:
        log.error("config file: %s", exc)
        return EXIT_USAGE
    except UsageError as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    except (InstanceFormatError, OSError) as exc:
        log.error("instance input: %s", exc)
        return EXIT_IO
    except DomainFault as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    except (InvariantViolation, StructuralFault) as exc:
        log.error("internal invariant violated: %s", exc)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
