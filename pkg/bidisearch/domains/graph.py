# bidisearch/domains/graph.py
"""Explicit graphs (networkx) with per-direction heuristic tables"""

from __future__ import annotations

from typing import Iterable, Mapping, Optional

import networkx as nx

from bidisearch.exceptions import DomainFault
from bidisearch.search.core import Direction, Domain


class GraphDomain(Domain):
    """
    A networkx Graph or DiGraph searched from start to goal

    Arc costs come from the weight attribute (default 1). Missing heuristic
    entries count as 0.
    """

    def __init__(self, graph: nx.Graph, start, goal, *,
                 h_forward: Optional[Mapping] = None, h_backward: Optional[Mapping] = None,
                 weight: str = "weight", name: str = ""):
        for label, state in (("start", start), ("goal", goal)):
            if state not in graph:
                raise DomainFault(f"{label} {state!r} is not a node of the graph")
        for a, b, cost in graph.edges(data=weight, default=1):
            if cost <= 0:
                raise DomainFault(f"arc {a!r} -> {b!r} has non-positive cost {cost}")
        super().__init__(start, goal)
        self.graph = graph
        self.weight = weight
        self.name = name
        self.h_forward = dict(h_forward or {})
        self.h_backward = dict(h_backward or {})

    @classmethod
    def from_edges(cls, edges: Iterable[tuple], start, goal, *, directed: bool = False, **kwargs) -> "GraphDomain":
        graph = nx.DiGraph() if directed else nx.Graph()
        graph.add_weighted_edges_from(edges)
        return cls(graph, start, goal, **kwargs)

    def successors(self, state):
        return [(other, data.get(self.weight, 1)) for other, data in self.graph.adj[state].items()]

    def predecessors(self, state):
        if not self.graph.is_directed():
            return self.successors(state)
        return [(other, data.get(self.weight, 1)) for other, data in self.graph.pred[state].items()]

    def heuristic(self, state, direction):
        table = self.h_forward if direction is Direction.FORWARD else self.h_backward
        return table.get(state, 0)

    def pair_heuristic(self, a, b):
        return 0

    def __repr__(self) -> str:
        return f"GraphDomain({self.name or self.graph.number_of_nodes()}, {self.start!r}->{self.goal!r})"


def symmetric_example() -> GraphDomain:
    """
    Two disjoint s-t routes of cost 12 and 16 under h = 0

    A* expands the f-values 0, 1, 3, 11 in both directions, so the searches
    are symmetric with distinct f-values.
    """
    edges = [
        ("s", "p1", 1), ("s", "p2", 3),
        ("t", "q1", 1), ("t", "q2", 3),
        ("p1", "q1", 10), ("p2", "q2", 10),
    ]
    return GraphDomain.from_edges(edges, "s", "t", name="symmetric")
