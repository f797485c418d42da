"""
Admissible unidirectional and bidirectional heuristic search

A library and benchmark CLI covering A*, IDA*, Trans, BHPA, BS*, perimeter
search, the sequential bidirectional algorithms (BAI, BAI-Trans, BAA) and the
difference-based dynamic heuristics (Add and Max methods) over sliding-tile
puzzles and randomized mazes.
"""

__version__ = "0.1.0"
