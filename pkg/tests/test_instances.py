import pytest

from bidisearch.bench.instances import (
    build_instances,
    format_maze,
    load_instances,
    load_korf_file,
    mean_start_h,
    parse_korf_line,
    parse_maze_text,
)
from bidisearch.bench.runner import BenchConfig
from bidisearch.domains.maze import generate_maze
from bidisearch.domains.puzzle import goal_state, manhattan, random_puzzle_instances
from bidisearch.exceptions import InstanceFormatError, UsageError
from bidisearch.search.core import Direction

KORF_1 = "1 14 13 15 7 11 12 9 5 6 0 2 1 4 8 10 3"
KORF_2 = "2 13 5 4 10 9 12 8 14 2 3 7 1 0 15 11 6"


def test_korf_line_with_and_without_number():
    numbered = parse_korf_line(KORF_1, 1)
    bare = parse_korf_line(KORF_1.split(" ", 1)[1], 1)
    assert numbered.start == bare.start
    assert numbered.start[0] == 14
    assert numbered.heuristic(numbered.start, Direction.FORWARD) == manhattan(numbered.start, numbered.goal)


def test_korf_file(tmp_path):
    path = tmp_path / "korf.txt"
    path.write_text(f"# two instances\n{KORF_1}\n\n{KORF_2}\n")
    instances = load_korf_file(path)
    assert len(instances) == 2
    assert instances[1].start[0] == 13
    assert mean_start_h(instances) == sum(d.heuristic(d.start, Direction.FORWARD) for d in instances) / 2


def test_korf_start_heuristics_match_published_values():
    first = parse_korf_line(KORF_1, 1)
    second = parse_korf_line(KORF_2, 2)
    assert first.heuristic(first.start, Direction.FORWARD) == 41
    assert second.heuristic(second.start, Direction.FORWARD) == 43


def test_hundred_line_korf_file(tmp_path):
    starts = [domain.start for domain in random_puzzle_instances(100, size=4, seed=5)]
    path = tmp_path / "korf100.txt"
    path.write_text("".join(f"{n} {' '.join(map(str, start))}\n" for n, start in enumerate(starts, 1)))
    instances = load_korf_file(path)
    assert len(instances) == 100
    assert [d.start for d in instances] == starts
    expected = sum(manhattan(start, goal_state(4)) for start in starts) / 100
    assert mean_start_h(instances) == pytest.approx(expected)


def test_empty_korf_file(tmp_path):
    path = tmp_path / "empty.txt"
    path.write_text("")
    assert load_korf_file(path) == []
    assert mean_start_h([]) != mean_start_h([])


def test_korf_errors_name_the_line(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text(f"{KORF_1}\n3 1 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15\n")
    with pytest.raises(InstanceFormatError, match=r"bad.txt:2: .*repeated"):
        load_korf_file(path)
    with pytest.raises(InstanceFormatError, match="expected 16 tiles"):
        parse_korf_line("1 2 3", 7)
    with pytest.raises(InstanceFormatError, match="non-integer"):
        parse_korf_line("a " * 16, 7)


def test_maze_text_round_trip():
    maze = generate_maze(9, 7, 21)
    explicit = parse_maze_text(format_maze(maze, explicit=True))
    regenerated = parse_maze_text(format_maze(maze))
    assert explicit[0].maze == maze
    assert regenerated[0].maze == maze


def test_maze_text_several_blocks():
    text = "# mazes\n4 3 1 0\n5 5 2 3 0 0 4 4\n3 2 0 0 0 0 1 2\n100\n000\n"
    mazes = parse_maze_text(text)
    assert [d.maze.width for d in mazes] == [4, 5, 3]
    assert mazes[1].start == (0, 0) and mazes[1].goal == (4, 4)
    assert mazes[2].maze.east[0, 0]


def test_maze_text_errors():
    with pytest.raises(InstanceFormatError, match="<string>:1:"):
        parse_maze_text("4 3 1\n")
    with pytest.raises(InstanceFormatError, match="<string>:2:"):
        parse_maze_text("3 2 0 0 0 0 1 2\n10\n000\n")
    with pytest.raises(InstanceFormatError):
        parse_maze_text("3 2 0 0 0 0 1 2\n000\n")


def test_load_instances_formats(tmp_path):
    path = tmp_path / "mazes.txt"
    path.write_text(format_maze(generate_maze(6, 6, 2)))
    assert len(load_instances(path, "maze")) == 1
    with pytest.raises(UsageError):
        load_instances(path, "xml")


def test_build_instances_from_file(tmp_path):
    path = tmp_path / "korf.txt"
    path.write_text(f"{KORF_1}\n{KORF_2}\n")
    config = BenchConfig(domain="puzzle", instance_file=str(path), instances=1)
    assert len(build_instances(config)) == 1
    config.instances = None
    assert len(build_instances(config)) == 2


def test_build_instances_from_generators():
    assert len(build_instances(BenchConfig(domain="puzzle", instances=3))) == 3
    mazes = build_instances(BenchConfig(domain="maze", instances=2, maze_width=8, maze_height=6))
    assert [(d.maze.width, d.maze.height) for d in mazes] == [(8, 6), (8, 6)]
    assert build_instances(BenchConfig(domain="symmetric", instances=1))[0].name == "symmetric"
