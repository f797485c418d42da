# bidisearch/search/core.py
"""
Direction-aware state-space abstraction and the node bookkeeping shared by
every engine: OPEN (Frontier), CLOSED (ClosedSet), the termination rule of
the traditional bidirectional algorithms and path reconstruction.
"""

from __future__ import annotations

import heapq
import itertools
import logging
import math
import time
from abc import ABC, abstractmethod
from collections.abc import Hashable, Iterable, Mapping
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional, Union

from bidisearch.exceptions import DomainFault, InvariantViolation, SearchTimeout, StructuralFault

log = logging.getLogger(__name__)

# Absorbing under addition and strictly above every finite cost
INF = math.inf

State = Hashable
Cost = Union[int, float]


class Direction(Enum):
    """Search direction: forward from s toward t (d = 1), backward from t toward s (d = 2)"""

    FORWARD = 1
    BACKWARD = 2

    def reverse(self) -> "Direction":
        return Direction.BACKWARD if self is Direction.FORWARD else Direction.FORWARD

    @property
    def label(self) -> str:
        return self.name.lower()


class Domain(ABC):
    """
    A state space with a start s and a goal t

    Subclasses provide successors and the two front-to-end heuristics:
    heuristic(n, FORWARD) estimates the cost from n to t (h1),
    heuristic(n, BACKWARD) the cost from s to n (h2). Arc costs are positive
    and predecessors(n) reports, for every parent p, the cost successors(p)
    reports for n.
    """

    def __init__(self, start: State, goal: State):
        self.start = start
        self.goal = goal

    @abstractmethod
    def successors(self, state: State) -> list[tuple[State, Cost]]:
        ...

    def predecessors(self, state: State) -> list[tuple[State, Cost]]:
        # undirected spaces; directed domains override
        return self.successors(state)

    @abstractmethod
    def heuristic(self, state: State, direction: Direction) -> Cost:
        ...

    def pair_heuristic(self, a: State, b: State) -> Cost:
        """Estimate of the cost between two arbitrary states (front-to-front)"""
        raise DomainFault(f"{type(self).__name__} has no pairwise heuristic")

    def neighbors(self, state: State, direction: Direction) -> list[tuple[State, Cost]]:
        if direction is Direction.FORWARD:
            return self.successors(state)
        return self.predecessors(state)

    def origin(self, direction: Direction) -> State:
        return self.start if direction is Direction.FORWARD else self.goal

    def target(self, direction: Direction) -> State:
        return self.goal if direction is Direction.FORWARD else self.start


@dataclass(eq=False, slots=True)
class SearchNode:
    state: State
    g: Cost
    parent: Optional["SearchNode"] = None
    direction: Direction = Direction.FORWARD
    h: Cost = 0
    key: Cost = 0

    @property
    def f(self) -> Cost:
        return self.g + self.h

    def path(self) -> list:
        """States from the search root down to this node"""
        states = []
        node = self
        while node is not None:
            states.append(node.state)
            node = node.parent
        states.reverse()
        return states


class Frontier:
    """
    OPEN_d: nodes ordered by key (f unless the engine says otherwise)

    Among equal keys the node with the larger g wins, then insertion order.
    Replaced or removed nodes are dropped lazily when they reach the head.
    """

    def __init__(self):
        self._heap = []
        self._live: dict = {}
        self._seq = itertools.count()

    def push(self, node: SearchNode) -> None:
        self._live[node.state] = node
        heapq.heappush(self._heap, (node.key, -node.g, next(self._seq), node))

    def _settle(self) -> None:
        heap = self._heap
        while heap and self._live.get(heap[0][3].state) is not heap[0][3]:
            heapq.heappop(heap)

    def peek(self) -> Optional[SearchNode]:
        self._settle()
        return self._heap[0][3] if self._heap else None

    def pop(self) -> SearchNode:
        self._settle()
        if not self._heap:
            raise StructuralFault("pop from an empty frontier")
        node = heapq.heappop(self._heap)[3]
        del self._live[node.state]
        return node

    def remove(self, state: State) -> Optional[SearchNode]:
        return self._live.pop(state, None)

    def get(self, state: State) -> Optional[SearchNode]:
        return self._live.get(state)

    @property
    def fmin(self) -> Cost:
        head = self.peek()
        return INF if head is None else head.key

    def min_f(self) -> Cost:
        """Minimum g + h over the live nodes, whatever the ordering key"""
        return min((node.f for node in self._live.values()), default=INF)

    def __contains__(self, state) -> bool:
        return state in self._live

    def __len__(self) -> int:
        return len(self._live)

    def __iter__(self):
        return iter(list(self._live.values()))


class ClosedSet(Mapping):
    """CLOSED_d: at most one node per state"""

    def __init__(self):
        self._nodes: dict = {}

    def add(self, node: SearchNode) -> None:
        self._nodes[node.state] = node

    def __getitem__(self, state) -> SearchNode:
        return self._nodes[state]

    def __contains__(self, state) -> bool:
        return state in self._nodes

    def __iter__(self):
        return iter(self._nodes)

    def __len__(self) -> int:
        return len(self._nodes)


@dataclass
class Solution:
    path: list
    cost: Cost
    optimal: bool = True
    l_min_history: list = field(default_factory=list)

    def validate(self, domain: Domain) -> None:
        """Raise InvariantViolation unless the path runs s..t over domain arcs summing to cost"""
        if not self.path or self.path[0] != domain.start or self.path[-1] != domain.goal:
            raise InvariantViolation(f"solution path does not run from s to t: {self.path[:1]}..{self.path[-1:]}")
        total = 0
        for a, b in zip(self.path, self.path[1:]):
            costs = [cost for state, cost in domain.successors(a) if state == b]
            if not costs:
                raise InvariantViolation(f"no arc {a!r} -> {b!r}")
            total += min(costs)
        if total != self.cost:
            raise InvariantViolation(f"path cost {total} differs from reported cost {self.cost}")


def termination_met(l_min: Cost, fmin1: Cost, fmin2: Cost) -> bool:
    """Stopping rule of the alternating bidirectional search: L_min <= max(fmin1, fmin2)"""
    return l_min <= max(fmin1, fmin2)


def solution_from_halves(forward_states: list, backward_states: list, cost: Cost) -> Solution:
    """Join s..m with t..m into s..t"""
    if forward_states[-1] != backward_states[-1]:
        raise StructuralFault(
            f"halves do not meet: {forward_states[-1]!r} vs {backward_states[-1]!r}"
        )
    return Solution(path=forward_states + backward_states[-2::-1], cost=cost)


def solution_from_path(states: list, direction: Direction, cost: Cost) -> Solution:
    """A complete path listed in search order (origin first)"""
    path = list(states) if direction is Direction.FORWARD else list(reversed(states))
    return Solution(path=path, cost=cost)


def _resolve(side, state, label) -> SearchNode:
    if isinstance(side, SearchNode):
        if side.state != state:
            raise StructuralFault(f"{label} node holds {side.state!r}, not the meeting state {state!r}")
        return side
    node = side.get(state) if side is not None else None
    if node is None:
        raise StructuralFault(f"meeting state {state!r} absent from the {label} structure")
    return node


def reconstruct_path(meeting_state: State, forward, backward) -> Solution:
    """
    Build the s..t path through meeting_state

    forward/backward are either the SearchNode reaching the meeting state in
    that direction or any mapping state -> SearchNode (a ClosedSet, a
    Frontier, a dict of stored nodes).
    """
    fnode = _resolve(forward, meeting_state, "forward")
    bnode = _resolve(backward, meeting_state, "backward")
    return solution_from_halves(fnode.path(), bnode.path(), fnode.g + bnode.g)


@dataclass(frozen=True)
class Violation:
    direction: Direction
    state: State
    neighbor: State
    cost: Cost
    h_state: Cost
    h_neighbor: Cost


def check_consistency(
    domain: Domain,
    states: Iterable,
    heuristic: Optional[Callable[[State, Direction], Cost]] = None,
    include: Optional[Callable[[State], bool]] = None,
    directions: Iterable[Direction] = (Direction.FORWARD, Direction.BACKWARD),
) -> list[Violation]:
    """
    Check h_d(m) <= h_d(n) + k_d(m, n) on every arc leaving the given states

    heuristic defaults to domain.heuristic; include restricts the check to
    arcs whose both ends satisfy it.
    """
    h = heuristic or domain.heuristic
    directions = tuple(directions)
    violations = []
    for state in states:
        if include is not None and not include(state):
            continue
        for direction in directions:
            h_state = h(state, direction)
            for neighbor, cost in domain.neighbors(state, direction):
                if include is not None and not include(neighbor):
                    continue
                h_neighbor = h(neighbor, direction)
                if h_state > h_neighbor + cost:
                    violations.append(Violation(direction, state, neighbor, cost, h_state, h_neighbor))
    return violations


_deadline: ContextVar[Optional[float]] = ContextVar("bidisearch_deadline", default=None)


@contextmanager
def deadline(seconds: Optional[float]):
    """Cooperative time limit for every engine run inside the block"""
    token = _deadline.set(None if seconds is None else time.monotonic() + seconds)
    try:
        yield
    finally:
        _deadline.reset(token)


def check_deadline() -> None:
    limit = _deadline.get()
    if limit is not None and time.monotonic() > limit:
        raise SearchTimeout("deadline exceeded")


class DirectionalSearch:
    """
    One best-first search direction: OPEN_d, CLOSED_d and the search tree

    Engines drive it node by node; it never re-opens closed states. With a
    consistent heuristic a shorter path to a closed state cannot appear, and
    if it does an InvariantViolation is raised.
    """

    def __init__(self, domain: Domain, direction: Direction, stats, *,
                 heuristic: Optional[Callable[[State], Cost]] = None,
                 key: Optional[Callable[[SearchNode], Cost]] = None,
                 track_children: bool = False):
        self.domain = domain
        self.direction = direction
        self.stats = stats
        self.root_state = domain.origin(direction)
        self.target = domain.target(direction)
        self._h = heuristic or (lambda state: domain.heuristic(state, direction))
        self._key = key
        self.frontier = Frontier()
        self.closed = ClosedSet()
        self.children: Optional[dict] = {} if track_children else None
        self.root = self.make_node(self.root_state, 0, None)
        self.frontier.push(self.root)

    def make_node(self, state: State, g: Cost, parent: Optional[SearchNode]) -> SearchNode:
        node = SearchNode(state, g, parent, self.direction, self._h(state))
        node.key = node.f if self._key is None else self._key(node)
        return node

    @property
    def size(self) -> int:
        return len(self.frontier) + len(self.closed)

    def lookup(self, state: State) -> Optional[SearchNode]:
        node = self.closed.get(state)
        return node if node is not None else self.frontier.get(state)

    def expand(self, node: SearchNode) -> list[SearchNode]:
        """Close node and build a fresh SearchNode for every successor"""
        self.closed.add(node)
        self.stats.expanded(node.f, self.direction)
        children = []
        for state, cost in self.domain.neighbors(node.state, self.direction):
            self.stats.generated()
            children.append(self.make_node(state, node.g + cost, node))
        self.stats.observe_memory(self.size + len(children))
        return children

    def offer(self, child: SearchNode) -> bool:
        """Insert child into OPEN unless an equal or cheaper path is already known"""
        closed = self.closed.get(child.state)
        if closed is not None:
            if child.g < closed.g:
                raise InvariantViolation(
                    f"shorter path ({child.g} < {closed.g}) to closed state {child.state!r}; "
                    "heuristic is not consistent"
                )
            return False
        current = self.frontier.get(child.state)
        if current is not None and current.g <= child.g:
            return False
        self.frontier.push(child)
        if self.children is not None:
            if current is not None and current.parent is not None:
                self.children.get(current.parent.state, set()).discard(child.state)
            if child.parent is not None:
                self.children.setdefault(child.parent.state, set()).add(child.state)
        return True

    def open_descendants(self, state: State) -> list[State]:
        """OPEN states below state in this direction's search tree"""
        if self.children is None:
            raise StructuralFault("search tree is not tracked for this direction")
        found = []
        pending = [state]
        seen = {state}
        while pending:
            parent = pending.pop()
            for child in self.children.get(parent, ()):
                node = self.lookup(child)
                if child in seen or node is None or node.parent is None or node.parent.state != parent:
                    continue
                seen.add(child)
                if child in self.frontier:
                    found.append(child)
                pending.append(child)
        return found

    def remove(self, state: State) -> Optional[SearchNode]:
        node = self.frontier.remove(state)
        if node is not None and self.children is not None and node.parent is not None:
            self.children.get(node.parent.state, set()).discard(state)
        return node


class BestMeeting:
    """L_min bookkeeping for engines whose candidates are forward/backward node pairs"""

    def __init__(self, stats):
        self.stats = stats
        self.cost: Cost = INF
        self.forward: Optional[SearchNode] = None
        self.backward: Optional[SearchNode] = None

    def offer(self, direction: Direction, node: SearchNode, opposite: SearchNode) -> bool:
        cost = node.g + opposite.g
        if cost >= self.cost:
            return False
        if direction is Direction.FORWARD:
            self.forward, self.backward = node, opposite
        else:
            self.forward, self.backward = opposite, node
        self.cost = cost
        self.stats.improved(cost)
        log.debug("L_min improved to %s at %d generated", cost, self.stats.nodes_generated)
        return True

    def solution(self) -> Optional[Solution]:
        if self.forward is None:
            return None
        solution = reconstruct_path(self.forward.state, self.forward, self.backward)
        solution.l_min_history = list(self.stats.l_min_history)
        return solution
