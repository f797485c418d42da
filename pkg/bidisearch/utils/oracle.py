# bidisearch/utils/oracle.py
"""
Reference costs that share no code with the engines: a heapq uniform-cost
search, exhaustive distance maps and a networkx shortest path for mazes
"""

import heapq
import itertools

import networkx as nx

from bidisearch.domains.maze import Maze, maze_neighbors
from bidisearch.search.core import INF, Direction


def uniform_cost(domain):
    """Optimal s-t cost, INF when t is unreachable"""
    return distances_from(domain, Direction.FORWARD, stop_at=domain.goal).get(domain.goal, INF)


def distances_from(domain, direction=Direction.FORWARD, stop_at=None):
    """Costs from the origin of direction to every reachable state"""
    origin = domain.origin(direction)
    distance = {origin: 0}
    counter = itertools.count()
    heap = [(0, next(counter), origin)]
    settled = set()
    while heap:
        cost, _, state = heapq.heappop(heap)
        if state in settled:
            continue
        settled.add(state)
        if state == stop_at:
            break
        for neighbor, arc in domain.neighbors(state, direction):
            candidate = cost + arc
            if candidate < distance.get(neighbor, INF):
                distance[neighbor] = candidate
                heapq.heappush(heap, (candidate, next(counter), neighbor))
    return {state: distance[state] for state in settled}


def distances_to(domain, direction=Direction.FORWARD):
    """
    Exact remaining cost toward the target of direction for every state that
    reaches it (h1* for FORWARD, h2* for BACKWARD)
    """
    return distances_from(domain, direction.reverse())


def maze_graph(maze: Maze) -> nx.Graph:
    graph = nx.Graph()
    for row in range(maze.height):
        for col in range(maze.width):
            graph.add_node((row, col))
            for neighbor, _ in maze_neighbors(maze, (row, col)):
                graph.add_edge((row, col), neighbor)
    return graph


def maze_cost(maze: Maze):
    try:
        return nx.shortest_path_length(maze_graph(maze), maze.start, maze.goal)
    except nx.NetworkXNoPath:
        return INF
