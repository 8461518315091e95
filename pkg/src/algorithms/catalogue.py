"""Named instances used by the tests, the census and `cli gen`."""

from __future__ import annotations

from typing import Callable, Optional, Sequence

import networkx as nx

from .coloring import ListAssignment
from .data_structures.hypergraph import Hypergraph
from .data_structures.vector_function import VectorFunction
from .errors import InputError
from .hypercore import complete, cycle, from_networkx, relabel, t_fold


def _parallel(name: str, u: str, v: str, t: int) -> list[tuple[str, tuple[str, str]]]:
    if t == 1:
        return [(name, (u, v))]
    return [(f"{name}.{k}", (u, v)) for k in range(1, t + 1)]


def twin_hexagon() -> tuple[Hypergraph, VectorFunction]:
    """Monoblock on a doubled outer hexagon and an inner hexagon, with three hyperedges.

    Outer vertices have degree 6 and inner vertices degree 4; f = d * e_1, p = 2.
    """
    outer = [f"u{i}" for i in range(1, 7)]
    inner = [f"w{i}" for i in range(1, 7)]
    edges: list[tuple[str, Sequence[str]]] = []
    for i in range(6):
        edges += _parallel(f"o{i + 1}", outer[i], outer[(i + 1) % 6], 2)
        edges.append((f"s{i + 1}", (inner[i], outer[i])))
    for name, (a, b) in enumerate([(1, 6), (1, 4), (2, 3), (2, 5), (3, 6), (4, 5)], start=1):
        edges.append((f"i{name}", (f"w{a}", f"w{b}")))
    edges += [
        ("h1", ("u1", "u2", "w1", "w2")),
        ("h2", ("u4", "u5", "w4", "w5")),
        ("h3", ("u3", "w3", "w6", "u6")),
    ]
    graph = Hypergraph(outer + inner, edges)
    return graph, VectorFunction({v: (graph.degree(v), 0) for v in graph.vertices}, 2)


def doubled_k4() -> tuple[Hypergraph, VectorFunction]:
    graph = t_fold(complete(4), 2)
    return graph, VectorFunction.constant(graph.vertices, (0, 4, 2))


def tripled_c5() -> tuple[Hypergraph, VectorFunction]:
    graph = t_fold(cycle(5), 3)
    return graph, VectorFunction.constant(graph.vertices, (3, 3, 0))


def degree_six_graph() -> Hypergraph:
    """Eleven vertices, three hyperedges, maximum degree 6 (at u1 and u3)."""
    vertices = ["v1", "v2", "v3"] + [f"w{i}" for i in range(1, 5)] + [f"u{i}" for i in range(1, 5)]
    pairs = [
        ("v1", "w1"), ("v1", "w2"), ("v1", "w3"), ("v1", "w4"),
        ("v2", "u1"), ("v2", "u2"), ("v2", "u3"),
        ("v3", "u1"), ("v3", "u3"), ("v3", "u4"),
        ("u1", "u4"), ("u1", "w1"), ("u1", "w2"),
        ("u2", "u3"), ("u2", "w2"), ("u2", "w3"),
        ("u3", "w3"), ("u3", "w4"),
        ("u4", "w4"), ("u4", "w1"),
    ]  # fmt: skip
    edges: list[tuple[str, Sequence[str]]] = [(f"e{i}", pair) for i, pair in enumerate(pairs, start=1)]
    edges += [
        ("h1", ("v1", "w1", "w2", "w3", "w4")),
        ("h2", ("v2", "u2", "u1")),
        ("h3", ("v3", "u4", "u3")),
    ]
    return Hypergraph(vertices, edges)


def list_instance() -> tuple[Hypergraph, ListAssignment]:
    """Eight vertices, three hyperedges and lists drawn from the colors 1..4."""
    vertices = [f"v{i}" for i in range(1, 5)] + [f"u{i}" for i in range(1, 5)]
    pairs = [
        ("v1", "v2"), ("v1", "u1"), ("v2", "u2"), ("v2", "v3"), ("v3", "u3"),
        ("v3", "v4"), ("v4", "u3"), ("v4", "u4"), ("v4", "v1"),
        ("u1", "u2"), ("u2", "u3"), ("u3", "u4"), ("u4", "u1"),
    ]  # fmt: skip
    edges: list[tuple[str, Sequence[str]]] = [(f"e{i}", pair) for i, pair in enumerate(pairs, start=1)]
    edges += [
        ("h1", ("v1", "v2", "u1")),
        ("h2", ("v2", "u2", "v3")),
        ("h3", ("v3", "v4", "u3", "u4")),
    ]
    lists = ListAssignment.of(
        {
            "v1": "124",
            "v2": "13",
            "v3": "24",
            "v4": "34",
            "u1": "134",
            "u2": "23",
            "u3": "14",
            "u4": "234",
        }
    )
    return Hypergraph(vertices, edges), lists


def block_chain(length: int = 5, multiplicities: Optional[Sequence[int]] = None) -> Hypergraph:
    """A K_4 block B_1 closed into one block by a chain of multi-edges u_1 ... u_{length-1}, u_0.

    Links are B_2 .. B_length with B_i = t_i K_2 on {u_{i-1}, u_i}, reading u_length as u_0.
    """
    if length < 4:
        raise InputError(f"block_chain needs length >= 4, got {length}")
    links = list(multiplicities) if multiplicities is not None else [1] * (length - 1)
    if len(links) != length - 1 or any(t < 1 for t in links):
        raise InputError("block_chain needs one positive multiplicity per link")
    base = relabel(complete(4), {"v0": "u0", "v1": "u1", "v2": "x1", "v3": "x2"})
    chain = [f"u{i}" for i in range(2, length)]
    edges: list[tuple[str, Sequence[str]]] = [(e.name, tuple(e.members)) for e in base.edges]
    for i, t in enumerate(links, start=2):
        tail = f"u{i - 1}"
        head = f"u{i}" if i < length else "u0"
        edges += _parallel(f"l{i}", tail, head, t)
    return Hypergraph(list(base.vertices) + chain, edges)


def petersen() -> Hypergraph:
    return from_networkx(nx.petersen_graph())


NAMED: dict[str, Callable[[], object]] = {
    "twin-hexagon": twin_hexagon,
    "doubled-k4": doubled_k4,
    "tripled-c5": tripled_c5,
    "degree-six": degree_six_graph,
    "lists": list_instance,
    "block-chain": block_chain,
    "petersen": petersen,
}
