from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

import networkx as nx

from ..errors import InputError

_DIGITS = re.compile(r"(\d+)")


def natural_key(name: str) -> tuple:
    """Sort key comparing digit runs numerically, so that v2 < v10."""
    return tuple(
        (0, int(chunk), chunk) if chunk.isdigit() else (1, 0, chunk)
        for chunk in _DIGITS.split(name)
        if chunk
    )


def sort_names(names: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(names, key=natural_key))


class EdgeKind(Enum):
    ORDINARY = "ordinary"
    HYPEREDGE = "hyperedge"

    @classmethod
    def of_arity(cls, arity: int) -> EdgeKind:
        return cls.ORDINARY if arity == 2 else cls.HYPEREDGE


@dataclass(frozen=True)
class Edge:
    name: str
    members: frozenset[str]

    @property
    def arity(self) -> int:
        return len(self.members)

    @property
    def kind(self) -> EdgeKind:
        return EdgeKind.of_arity(len(self.members))


EdgeLike = Edge | tuple[str, Iterable[str]]


class Hypergraph:
    """Finite multihypergraph with named vertices and named edges.

    Values are immutable: every operator returns a new Hypergraph. Vertices and
    edges are kept in natural order of their identifiers, so two hypergraphs with
    the same vertices and the same edge records compare equal.
    """

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable[EdgeLike] = ()) -> None:
        vertex_list = [str(v) for v in vertices]
        vertex_set = frozenset(vertex_list)
        if len(vertex_set) != len(vertex_list):
            raise InputError("duplicate vertex identifier")

        edge_list: list[Edge] = []
        seen: set[str] = set()
        for item in edges:
            if isinstance(item, Edge):
                name, members = item.name, list(item.members)
            else:
                name, raw = item
                members = [str(v) for v in raw]
            if name in seen:
                raise InputError(f"duplicate edge identifier {name!r}")
            seen.add(name)
            if len(set(members)) != len(members):
                raise InputError(f"edge {name!r} is a loop (repeated vertex)")
            if len(members) < 2:
                raise InputError(f"edge {name!r} has arity {len(members)} < 2")
            unknown = set(members) - vertex_set
            if unknown:
                raise InputError(f"edge {name!r} uses unknown vertex {sort_names(unknown)[0]!r}")
            edge_list.append(item if isinstance(item, Edge) else Edge(name, frozenset(members)))

        self._vertices = sort_names(vertex_list)
        self._edges = tuple(sorted(edge_list, key=lambda e: natural_key(e.name)))

    @classmethod
    def _trusted(cls, vertices: tuple[str, ...], edges: tuple[Edge, ...]) -> Hypergraph:
        # operands are already validated and in natural order
        graph = cls.__new__(cls)
        graph._vertices = vertices
        graph._edges = edges
        return graph

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def order(self) -> int:
        return len(self._vertices)

    @property
    def size(self) -> int:
        return len(self._edges)

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self) -> Iterator[str]:
        return iter(self._vertices)

    def __contains__(self, vertex: object) -> bool:
        return vertex in self.vertex_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, self._edges))

    def __repr__(self) -> str:
        return f"Hypergraph(order={self.order}, size={self.size})"

    @cached_property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self._vertices)

    @cached_property
    def position(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self._vertices)}

    @cached_property
    def _incidence(self) -> dict[str, tuple[Edge, ...]]:
        incident: dict[str, list[Edge]] = {v: [] for v in self._vertices}
        for edge in self._edges:
            for v in edge.members:
                incident[v].append(edge)
        return {v: tuple(es) for v, es in incident.items()}

    @cached_property
    def _by_name(self) -> dict[str, Edge]:
        return {e.name: e for e in self._edges}

    def _require(self, vertex: str) -> None:
        if vertex not in self.vertex_set:
            raise InputError(f"unknown vertex {vertex!r}")

    def _subset(self, vertices: Iterable[str] | str) -> frozenset[str]:
        chosen = frozenset([vertices]) if isinstance(vertices, str) else frozenset(vertices)
        unknown = chosen - self.vertex_set
        if unknown:
            raise InputError(f"vertex set is not contained in V(H): {sort_names(unknown)[0]!r}")
        return chosen

    def edge(self, name: str) -> Edge:
        try:
            return self._by_name[name]
        except KeyError:
            raise InputError(f"unknown edge {name!r}") from None

    def incident_edges(self, vertex: str) -> tuple[Edge, ...]:
        self._require(vertex)
        return self._incidence[vertex]

    def degree(self, vertex: str) -> int:
        """d_H(v): number of edges containing v, parallel edges counted separately."""
        return len(self.incident_edges(vertex))

    def multiplicity(self, u: str, v: str) -> int:
        """Number of ordinary edges whose incidence set is exactly {u, v}."""
        if u == v:
            raise InputError("multiplicity needs two distinct vertices")
        self._require(v)
        pair = frozenset((u, v))
        return sum(1 for e in self.incident_edges(u) if e.members == pair)

    def neighbours(self, vertex: str) -> frozenset[str]:
        found: set[str] = set()
        for edge in self.incident_edges(vertex):
            found |= edge.members
        found.discard(vertex)
        return frozenset(found)

    def max_degree(self) -> int:
        return max((len(es) for es in self._incidence.values()), default=0)

    def is_simple(self) -> bool:
        return len({e.members for e in self._edges}) == len(self._edges)

    def is_graph(self) -> bool:
        return all(e.arity == 2 for e in self._edges)

    def induced(self, vertices: Iterable[str] | str) -> Hypergraph:
        """H[X]: keep the edges whose whole incidence set lies in X."""
        keep = self._subset(vertices)
        return Hypergraph._trusted(
            tuple(v for v in self._vertices if v in keep),
            tuple(e for e in self._edges if e.members <= keep),
        )

    def shrink(self, vertices: Iterable[str] | str) -> Hypergraph:
        """H(X): keep the edges meeting X in at least two vertices, truncated to X."""
        keep = self._subset(vertices)
        edges = []
        for edge in self._edges:
            inside = edge.members & keep
            if len(inside) >= 2:
                edges.append(edge if len(inside) == edge.arity else Edge(edge.name, inside))
        return Hypergraph._trusted(tuple(v for v in self._vertices if v in keep), tuple(edges))

    def delete(self, vertices: Iterable[str] | str) -> Hypergraph:
        """H - X."""
        return self.induced(self.vertex_set - self._subset(vertices))

    def shrink_out(self, vertices: Iterable[str] | str) -> Hypergraph:
        """H ÷ X."""
        return self.shrink(self.vertex_set - self._subset(vertices))

    def delete_vertex(self, vertex: str) -> Hypergraph:
        self._require(vertex)
        return self.delete({vertex})

    def shrink_vertex(self, vertex: str) -> Hypergraph:
        self._require(vertex)
        return self.shrink_out({vertex})

    def skeleton(self) -> nx.Graph:
        """Simple graph on V(H) with every incidence set replaced by a clique."""
        graph = nx.Graph()
        graph.add_nodes_from(self._vertices)
        for edge in self._edges:
            graph.add_edges_from(combinations(sort_names(edge.members), 2))
        return graph
