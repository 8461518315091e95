from __future__ import annotations

import random
from collections import Counter
from itertools import combinations
from typing import Optional

import networkx as nx

from .data_structures.hypergraph import Edge, Hypergraph, sort_names
from .errors import InputError


def merge(first: Hypergraph, v1: str, second: Hypergraph, v2: str, vstar: str) -> Hypergraph:
    """Glue two disjoint hypergraphs by identifying v1 and v2 into vstar."""
    if v1 not in first or v2 not in second:
        raise InputError("merge points must be vertices of their operands")
    if first.vertex_set & second.vertex_set:
        raise InputError("merge operands share a vertex identifier")
    if {e.name for e in first.edges} & {e.name for e in second.edges}:
        raise InputError("merge operands share an edge identifier")
    others = (first.vertex_set | second.vertex_set) - {v1, v2}
    if vstar in others:
        raise InputError(f"merged vertex {vstar!r} collides with an existing vertex")

    def rename(edge: Edge) -> Edge:
        if v1 in edge.members or v2 in edge.members:
            return Edge(edge.name, frozenset(vstar if v in (v1, v2) else v for v in edge.members))
        return edge

    return Hypergraph(
        list(others) + [vstar],
        [rename(e) for e in first.edges + second.edges],
    )


def disjoint_union(first: Hypergraph, second: Hypergraph) -> Hypergraph:
    if first.vertex_set & second.vertex_set:
        raise InputError("operands share a vertex identifier")
    return Hypergraph(first.vertices + second.vertices, first.edges + second.edges)


def relabel(graph: Hypergraph, mapping: dict[str, str]) -> Hypergraph:
    """Rename vertices; vertices missing from the mapping keep their name."""
    names = [mapping.get(v, v) for v in graph.vertices]
    if len(set(names)) != len(names):
        raise InputError("relabelling maps two vertices to the same identifier")
    return Hypergraph(
        names,
        [(e.name, [mapping.get(v, v) for v in e.members]) for e in graph.edges],
    )


def prefixed(graph: Hypergraph, prefix: str) -> Hypergraph:
    """Copy of the hypergraph with every vertex and edge identifier prefixed."""
    return Hypergraph(
        [prefix + v for v in graph.vertices],
        [(prefix + e.name, [prefix + v for v in e.members]) for e in graph.edges],
    )


def underlying_simple(graph: Hypergraph) -> Hypergraph:
    """Replace every class of parallel edges by its first edge."""
    kept: dict[frozenset[str], Edge] = {}
    for edge in graph.edges:
        kept.setdefault(edge.members, edge)
    return Hypergraph(graph.vertices, kept.values())


def from_networkx(graph: nx.Graph) -> Hypergraph:
    """Ordinary (multi)graph as a 2-uniform hypergraph; nodes become strings."""
    edges = [(f"e{i}", (str(u), str(v))) for i, (u, v) in enumerate(graph.edges())]
    return Hypergraph([str(n) for n in graph.nodes()], edges)


def _names(n: int) -> list[str]:
    return [f"v{i}" for i in range(n)]


def complete_uniform(n: int, q: int) -> Hypergraph:
    """K_n^q: every q-subset of n vertices is an edge."""
    if n < 2 or not 2 <= q <= n:
        raise InputError(f"complete_uniform needs 2 <= q <= n, got n={n}, q={q}")
    vertices = _names(n)
    return Hypergraph(vertices, [(f"e{i}", c) for i, c in enumerate(combinations(vertices, q))])


def complete(n: int) -> Hypergraph:
    if n < 1:
        raise InputError("complete graph needs n >= 1")
    return Hypergraph(_names(1)) if n == 1 else complete_uniform(n, 2)


def cycle(n: int) -> Hypergraph:
    if n < 3:
        raise InputError(f"cycle needs n >= 3, got {n}")
    vertices = _names(n)
    return Hypergraph(vertices, [(f"e{i}", (vertices[i], vertices[(i + 1) % n])) for i in range(n)])


def path(n: int) -> Hypergraph:
    if n < 1:
        raise InputError(f"path needs n >= 1, got {n}")
    vertices = _names(n)
    return Hypergraph(vertices, [(f"e{i}", (vertices[i], vertices[i + 1])) for i in range(n - 1)])


def t_fold(graph: Hypergraph, t: int) -> Hypergraph:
    """tH: every edge replaced by t parallel copies named <edge>.<k>."""
    if t < 1:
        raise InputError(f"t_fold needs t >= 1, got {t}")
    if t == 1:
        return graph
    return Hypergraph(
        graph.vertices,
        [(f"{e.name}.{k}", e.members) for e in graph.edges for k in range(1, t + 1)],
    )


def random_hypergraph(
    n: int,
    m: int,
    max_arity: int = 3,
    max_mult: int = 1,
    seed: Optional[int] = None,
    connected: bool = False,
) -> Hypergraph:
    """Seeded random multihypergraph.

    Draws edges of arity 2..max_arity, each repeated 1..max_mult times, until m
    edges exist. With `connected`, components are stitched together by ordinary
    edges between random vertices, which can push the size above m.
    """
    if n < 1 or m < 0 or max_arity < 2 or max_mult < 1:
        raise InputError("random_hypergraph needs n >= 1, m >= 0, max_arity >= 2, max_mult >= 1")
    if m > 0 and n < 2:
        raise InputError("edges need at least two vertices")
    rng = random.Random(seed)
    vertices = _names(n)
    edges: list[tuple[str, list[str]]] = []
    while len(edges) < m:
        arity = rng.randint(2, min(max_arity, n))
        members = rng.sample(vertices, arity)
        for _ in range(rng.randint(1, max_mult)):
            if len(edges) < m:
                edges.append((f"e{len(edges)}", members))

    graph = Hypergraph(vertices, edges)
    if not connected:
        return graph

    components = sorted(
        (sort_names(c) for c in nx.connected_components(graph.skeleton())),
        key=lambda c: graph.position[c[0]],
    )
    main_component = list(components[0])
    for comp in components[1:]:
        # Select one random node from the main component
        node_from_main = rng.choice(main_component)
        node_from_other = rng.choice(comp)
        edges.append((f"e{len(edges)}", [node_from_main, node_from_other]))
        main_component.extend(comp)
    return Hypergraph(vertices, edges)


def as_multi_complete(graph: Hypergraph) -> Optional[int]:
    """t if the hypergraph is tK_n (n >= 1), otherwise None."""
    n = graph.order
    if n == 0:
        return None
    if n == 1:
        return 1
    if not graph.is_graph():
        return None
    counts = Counter(e.members for e in graph.edges)
    if len(counts) != n * (n - 1) // 2 or len(set(counts.values())) != 1:
        return None
    return next(iter(counts.values()))


def as_multi_cycle(graph: Hypergraph) -> Optional[tuple[int, int]]:
    """(t, n) if the hypergraph is tC_n (n >= 3), otherwise None."""
    n = graph.order
    if n < 3 or not graph.is_graph():
        return None
    counts = Counter(e.members for e in graph.edges)
    if len(counts) != n or len(set(counts.values())) != 1:
        return None
    simple = nx.Graph(tuple(sort_names(pair)) for pair in counts)
    if simple.number_of_nodes() != n or any(d != 2 for _, d in simple.degree()):
        return None
    if not nx.is_connected(simple):
        return None
    return next(iter(counts.values())), n
