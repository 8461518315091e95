from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .data_structures.bucket_queue import BucketQueue
from .data_structures.hypergraph import Hypergraph
from .errors import InputError

ScalarFunction = Mapping[str, int]


@dataclass(frozen=True)
class DegeneracyWitness:
    """Removal order when strictly degenerate, otherwise the maximal stuck core."""

    removal_order: Optional[tuple[str, ...]] = None
    core: Optional[frozenset[str]] = None

    @property
    def is_degenerate(self) -> bool:
        return self.removal_order is not None

    def __bool__(self) -> bool:
        return self.is_degenerate


def constant(graph: Hypergraph, value: int) -> dict[str, int]:
    return dict.fromkeys(graph.vertices, value)


def _delete_and_update(
    graph: Hypergraph,
    vertex: str,
    removed: set[str],
    dead_edges: set[str],
    degrees: dict[str, int],
) -> list[str]:
    # H - v: every edge through v disappears
    touched = []
    removed.add(vertex)
    for edge in graph.incident_edges(vertex):
        if edge.name in dead_edges:
            continue
        dead_edges.add(edge.name)
        for u in edge.members:
            if u not in removed:
                degrees[u] -= 1
                touched.append(u)
    return touched


def is_strictly_degenerate(graph: Hypergraph, h: ScalarFunction) -> DegeneracyWitness:
    """Peel vertices with current degree below h(v), smallest identifier first."""
    for v in graph.vertices:
        if v not in h:
            raise InputError(f"h is not defined at {v!r}")
        if h[v] < 0:
            raise InputError(f"h({v}) is negative")

    degrees = {v: graph.degree(v) for v in graph.vertices}
    # key 0 means "removable now"; keys only ever decrease
    queue = BucketQueue()
    for v in graph.vertices:
        queue.insert(max(0, degrees[v] - h[v] + 1), v, rank=graph.position[v])

    removed: set[str] = set()
    dead_edges: set[str] = set()
    order: list[str] = []
    while queue.min_key() == 0:
        _, v = queue.extract_min()
        order.append(v)
        for u in _delete_and_update(graph, v, removed, dead_edges, degrees):
            queue.decrease_key(u, max(0, degrees[u] - h[u] + 1))

    if len(order) == graph.order:
        return DegeneracyWitness(removal_order=tuple(order))
    return DegeneracyWitness(core=graph.vertex_set - removed)


def degeneracy_order(graph: Hypergraph) -> tuple[tuple[str, ...], int]:
    """Min-degree removal sequence and the coloring number col(H)."""
    degrees = {v: graph.degree(v) for v in graph.vertices}
    queue = BucketQueue()
    for v in graph.vertices:
        queue.insert(degrees[v], v, rank=graph.position[v])

    removed: set[str] = set()
    dead_edges: set[str] = set()
    order: list[str] = []
    worst = -1
    while len(queue):
        key, v = queue.extract_min()
        worst = max(worst, key)
        order.append(v)
        for u in _delete_and_update(graph, v, removed, dead_edges, degrees):
            queue.decrease_key(u, degrees[u])
    return tuple(order), worst + 1


def col(graph: Hypergraph) -> int:
    return degeneracy_order(graph)[1]
