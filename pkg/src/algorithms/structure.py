from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from .data_structures.hypergraph import Hypergraph, sort_names
from .errors import InputError


@dataclass(frozen=True)
class BlockTree:
    """Blocks of a connected hypergraph and the bipartite block graph T.

    `tree_edges` holds (block index, separating vertex) pairs.
    """

    blocks: tuple[frozenset[str], ...]
    cut_vertices: frozenset[str]
    tree_edges: tuple[tuple[int, str], ...]

    @cached_property
    def _cuts_by_block(self) -> dict[int, tuple[str, ...]]:
        found: dict[int, list[str]] = {i: [] for i in range(len(self.blocks))}
        for i, v in self.tree_edges:
            found[i].append(v)
        return {i: tuple(vs) for i, vs in found.items()}

    def cut_vertices_of(self, index: int) -> tuple[str, ...]:
        return self._cuts_by_block[index]

    def blocks_containing(self, vertex: str) -> list[int]:
        return [i for i, block in enumerate(self.blocks) if vertex in block]

    def end_blocks(self) -> list[int]:
        return [i for i in range(len(self.blocks)) if len(self._cuts_by_block[i]) <= 1]

    def graph(self) -> nx.Graph:
        tree = nx.Graph()
        tree.add_nodes_from(("block", i) for i in range(len(self.blocks)))
        tree.add_nodes_from(("cut", v) for v in sort_names(self.cut_vertices))
        tree.add_edges_from((("block", i), ("cut", v)) for i, v in self.tree_edges)
        return tree


def components(graph: Hypergraph) -> list[frozenset[str]]:
    found = [frozenset(c) for c in nx.connected_components(graph.skeleton())]
    return sorted(found, key=lambda c: min(graph.position[v] for v in c))


def is_connected(graph: Hypergraph) -> bool:
    return len(components(graph)) <= 1


def separating_vertices(graph: Hypergraph) -> frozenset[str]:
    # H ÷ v has the skeleton S(H) - v, so these are the articulation points of S(H)
    return frozenset(nx.articulation_points(graph.skeleton()))


def blocks(graph: Hypergraph) -> BlockTree:
    if graph.order == 0:
        raise InputError("the empty hypergraph has no blocks")
    if not is_connected(graph):
        raise InputError("blocks() needs a connected hypergraph; iterate over components")
    if graph.order == 1:
        return BlockTree((graph.vertex_set,), frozenset(), ())

    skeleton = graph.skeleton()
    position = graph.position
    found = sorted(
        (frozenset(c) for c in nx.biconnected_components(skeleton)),
        key=lambda b: sorted(position[v] for v in b),
    )
    cuts = frozenset(nx.articulation_points(skeleton))
    tree_edges = tuple(
        (i, v) for i, block in enumerate(found) for v in sort_names(block & cuts)
    )
    return BlockTree(tuple(found), cuts, tree_edges)


def end_blocks(graph: Hypergraph) -> list[int]:
    return blocks(graph).end_blocks()


def block_hypergraphs(graph: Hypergraph, tree: BlockTree | None = None) -> list[Hypergraph]:
    tree = tree or blocks(graph)
    return [graph.induced(b) for b in tree.blocks]


def is_block(graph: Hypergraph) -> bool:
    return graph.order > 0 and is_connected(graph) and not separating_vertices(graph)
