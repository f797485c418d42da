# bidisearch/bench/instances.py
"""
Instance sources for the benchmark: Korf-style puzzle files, maze files and
seeded generators
"""

from __future__ import annotations

import logging
import math
from pathlib import Path

from bidisearch import hooks
from bidisearch.domains.graph import symmetric_example
from bidisearch.domains.maze import (
    MazeDomain,
    generate_maze,
    maze_from_walls,
    maze_instances,
)
from bidisearch.domains.puzzle import SlidingTilePuzzle, random_puzzle_instances
from bidisearch.exceptions import DomainFault, InstanceFormatError
from bidisearch.search.core import Direction
from bidisearch.utils import resolve_hook

log = logging.getLogger(__name__)

KORF_TILES = 16


def parse_korf_line(line: str, line_no: int, path="<string>") -> SlidingTilePuzzle:
    """16 tiles, row-major, blank = 0; an optional leading instance number is allowed"""
    fields = line.split()
    try:
        numbers = [int(field) for field in fields]
    except ValueError as exc:
        raise InstanceFormatError(path, line_no, f"non-integer field: {exc}") from exc
    if len(numbers) == KORF_TILES + 1:
        numbers = numbers[1:]
    if len(numbers) != KORF_TILES:
        raise InstanceFormatError(path, line_no, f"expected {KORF_TILES} tiles, found {len(numbers)}")
    try:
        return SlidingTilePuzzle(numbers, name=f"korf-{line_no}")
    except DomainFault as exc:
        raise InstanceFormatError(path, line_no, str(exc)) from exc


def load_korf_file(path) -> list[SlidingTilePuzzle]:
    instances = []
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            instances.append(parse_korf_line(line, line_no, path))
    log.info("Loaded %d puzzle instances from %s", len(instances), path)
    return instances


def _parse_header(fields, line_no, path):
    if len(fields) not in (4, 8):
        raise InstanceFormatError(path, line_no, "maze header must read 'W H seed skip%' [sr sc gr gc]")
    try:
        width, height, seed = (int(v) for v in fields[:3])
        skip = float(fields[3])
        endpoints = [int(v) for v in fields[4:]]
    except ValueError as exc:
        raise InstanceFormatError(path, line_no, f"bad maze header: {exc}") from exc
    start = goal = None
    if endpoints:
        start, goal = tuple(endpoints[:2]), tuple(endpoints[2:])
    return width, height, seed, skip, start, goal


def parse_maze_text(text: str, path="<string>") -> list[MazeDomain]:
    """
    Header lines 'W H seed skip%' (optionally followed by the endpoints
    'sr sc gr gc'), each optionally followed by H rows of W wall digits
    (1 = east wall, 2 = south wall). Seed-only blocks regenerate the maze.
    """
    lines = [(no, line.strip()) for no, line in enumerate(text.splitlines(), start=1)]
    lines = [(no, line) for no, line in lines if line and not line.startswith("#")]
    instances = []
    index = 0
    while index < len(lines):
        line_no, line = lines[index]
        width, height, seed, skip, start, goal = _parse_header(line.split(), line_no, path)
        index += 1
        rows = []
        while index < len(lines) and len(rows) < height and " " not in lines[index][1]:
            row_no, row = lines[index]
            if len(row) != width or not row.isdigit() or any(int(c) > 3 for c in row):
                raise InstanceFormatError(path, row_no, f"wall row must hold {width} digits 0-3")
            rows.append([int(c) for c in row])
            index += 1
        try:
            if rows:
                if len(rows) != height:
                    raise InstanceFormatError(path, line_no, f"expected {height} wall rows, found {len(rows)}")
                maze = maze_from_walls(width, height, rows, seed, skip, start or (0, 0), goal)
            else:
                maze = generate_maze(width, height, seed, skip, start, goal)
        except DomainFault as exc:
            raise InstanceFormatError(path, line_no, str(exc)) from exc
        instances.append(MazeDomain(maze))
    return instances


def load_maze_file(path) -> list[MazeDomain]:
    instances = parse_maze_text(Path(path).read_text(encoding="utf-8"), path)
    log.info("Loaded %d mazes from %s", len(instances), path)
    return instances


def format_maze(maze, explicit: bool = False) -> str:
    header = (f"{maze.width} {maze.height} {maze.seed} {maze.wall_skip_percent:g} "
              f"{maze.start[0]} {maze.start[1]} {maze.goal[0]} {maze.goal[1]}")
    if not explicit:
        return header + "\n"
    rows = ["".join(str(int(d)) for d in row) for row in maze.wall_digits()]
    return "\n".join([header, *rows]) + "\n"


def load_instances(path, format: str) -> list:
    """Ordered instances of a file in one of the registered formats"""
    loader = resolve_hook(hooks.instance_formats, format, kind="instance format")
    return loader(path)


def build_puzzle_instances(config) -> list:
    size = config.puzzle_size
    return random_puzzle_instances(config.instances, size, config.seed)


def build_maze_instances(config) -> list:
    return maze_instances(config.instances, config.maze_width, config.maze_height, config.seed,
                          min_h=config.min_h, wall_skip_percent=config.wall_skip_percent)


def build_symmetric_instances(config) -> list:
    return [symmetric_example() for _ in range(max(1, config.instances))]


def build_instances(config) -> list:
    """Instances from config.instance_file when given, else from the seeded generator"""
    if config.instance_file:
        fmt = config.instance_format or ("korf15" if config.domain == "puzzle" else config.domain)
        instances = load_instances(config.instance_file, fmt)
        return instances[: config.instances] if config.instances else instances
    builder = resolve_hook(hooks.domains, config.domain, kind="domain")
    return builder(config)


def mean_start_h(instances) -> float:
    """Average h1(s) over an instance list (NaN when empty)"""
    if not instances:
        return math.nan
    return sum(domain.heuristic(domain.start, Direction.FORWARD) for domain in instances) / len(instances)
