"""
Minimum barrier computation

The fewest extra cells whose protection separates the fire from everything
outside a clip diamond, as a minimum vertex cut. Each cuttable cell is split
into an in/out node pair joined by a unit-capacity arc; lattice adjacencies
become uncapacitated arcs, so networkx's max-flow/min-cut gives the answer.
"""

import logging
from collections import deque

import networkx as nx

from firegrid.engine import GameState
from firegrid.errors import ClipTooSmall
from firegrid.lattice import diamond_cells, l1_distance, neighbors

logger = logging.getLogger(__name__)

SOURCE = "fire"
SINK = "outside"


def _check_clip(s: GameState, clip_radius: int) -> None:
    reach = max(l1_distance(c, s.ignition) for c in s.burning)
    if reach >= clip_radius:
        raise ClipTooSmall(f"fire reaches distance {reach}, clip radius {clip_radius} is too small")


def barrier_graph(s: GameState, clip_radius: int) -> nx.DiGraph:
    """Node-split flow network over the free cells inside the clip"""
    graph = nx.DiGraph()
    graph.add_node(SOURCE)
    graph.add_node(SINK)
    for c in diamond_cells(s.ignition, clip_radius):
        if c in s.burning or c in s.protected:
            continue
        graph.add_edge((c, "in"), (c, "out"), capacity=1)
        for n in neighbors(c):
            if n in s.protected:
                continue
            if n in s.burning:
                graph.add_edge(SOURCE, (c, "in"))
            elif l1_distance(n, s.ignition) > clip_radius:
                graph.add_edge((c, "out"), SINK)
            else:
                graph.add_edge((c, "out"), (n, "in"))
    return graph


def min_barrier(s: GameState, clip_radius: int) -> int:
    """
    Minimum number of additional protected cells that disconnect the fire
    from the outside of the clip diamond.

    Args:
        s: game state (burning cells are sources, protected cells are walls)
        clip_radius: radius of the diamond around the ignition that bounds the cut

    Returns:
        Size of a minimum vertex cut; 0 when the fire is already enclosed

    Raises:
        ClipTooSmall: a burning cell touches the clip boundary
    """
    _check_clip(s, clip_radius)
    graph = barrier_graph(s, clip_radius)
    if not graph.has_node(SINK) or graph.in_degree(SINK) == 0 or graph.out_degree(SOURCE) == 0:
        return 0
    value = nx.minimum_cut_value(graph, SOURCE, SINK)
    return int(value)


def fire_enclosed(s: GameState, clip_radius: int) -> bool:
    """Whether no unprotected path leads from the fire to outside the clip"""
    _check_clip(s, clip_radius)
    seen = set(s.burning)
    queue = deque(s.burning)
    while queue:
        c = queue.popleft()
        for n in neighbors(c):
            if n in seen or n in s.protected:
                continue
            if l1_distance(n, s.ignition) > clip_radius:
                return False
            seen.add(n)
            queue.append(n)
    return True


def verified_min_barrier(s: GameState, clip_radius: int) -> int:
    """min_barrier re-checked at clip_radius + 2; returns the smaller (sound) value"""
    first = min_barrier(s, clip_radius)
    second = min_barrier(s, clip_radius + 2)
    if second < first:
        logger.warning(f"⚠️ barrier shrank from {first} to {second} when the clip grew to {clip_radius + 2}")
    return min(first, second)
