"""Coloring results expressed as partition problems."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Literal, Mapping, Optional

from .data_structures.hypergraph import Hypergraph, sort_names
from .data_structures.vector_function import VectorFunction
from .degeneracy import col, constant, is_strictly_degenerate
from .errors import InputError, PreconditionError, SizeGuardError, SolverError
from .hardpair import HardPairCertificate
from .hypercore import as_multi_complete, as_multi_cycle
from .partition import Partition, enforce_degree_bounds, exhaustive_partition, solve
from .structure import components, is_block, is_connected, separating_vertices

logger = logging.getLogger(__name__)

CHOOSABILITY_MAX_VERTICES = 10
MAX_LIST_SYSTEMS = 2_000_000

Convention = Literal["strict", "lick-white"]


@dataclass(frozen=True)
class ListAssignment:
    lists: Mapping[str, frozenset[str]]

    @classmethod
    def of(cls, lists: Mapping[str, Iterable[str]]) -> ListAssignment:
        return cls({v: frozenset(str(c) for c in lists[v]) for v in sort_names(lists)})

    @classmethod
    def uniform(cls, vertices: Iterable[str], colors: Iterable[str]) -> ListAssignment:
        palette = frozenset(str(c) for c in colors)
        return cls({v: palette for v in sort_names(vertices)})

    @property
    def palette(self) -> tuple[str, ...]:
        return sort_names(set().union(*self.lists.values()))

    def __getitem__(self, vertex: str) -> frozenset[str]:
        return self.lists[vertex]

    def check_domain(self, graph: Hypergraph) -> None:
        missing = graph.vertex_set - self.lists.keys()
        if missing:
            raise InputError(f"no list for vertex {sort_names(missing)[0]!r}")


@dataclass(frozen=True)
class Coloring:
    assignment: Mapping[str, str]

    def is_proper(self, graph: Hypergraph) -> bool:
        if set(self.assignment) != graph.vertex_set:
            return False
        return all(len({self.assignment[v] for v in e.members}) > 1 for e in graph.edges)

    def classes_degenerate(self, graph: Hypergraph, s: int = 1) -> bool:
        """Every color class induces a strictly s-degenerate hypergraph; s = 1 is `is_proper`."""
        if set(self.assignment) != graph.vertex_set:
            return False
        for color in set(self.assignment.values()):
            part = graph.induced([v for v, c in self.assignment.items() if c == color])
            if not is_strictly_degenerate(part, constant(part, s)):
                return False
        return True

    def respects(self, lists: ListAssignment) -> bool:
        return all(color in lists[v] for v, color in self.assignment.items())


@dataclass(frozen=True)
class ColoringResult:
    coloring: Optional[Coloring] = None
    certificates: Mapping[frozenset[str], HardPairCertificate] = field(default_factory=dict)
    palette: tuple[str, ...] = ()
    s: int = 1

    @property
    def is_colorable(self) -> bool:
        return self.coloring is not None


@dataclass(frozen=True)
class PointPartitionResult:
    value: int
    partition: Optional[Partition]
    convention: Convention
    refuted: tuple[tuple[int, Mapping[frozenset[str], HardPairCertificate]], ...] = ()


def list_to_vector(graph: Hypergraph, lists: ListAssignment, s: int = 1) -> VectorFunction:
    """f_i(v) = s if the i-th color (sorted) is in L(v), otherwise 0."""
    if s < 1:
        raise PreconditionError(f"s must be positive, got {s}")
    lists.check_domain(graph)
    palette = lists.palette
    # an instance with no colors at all still needs one (all-zero) coordinate
    p = max(1, len(palette))
    return VectorFunction(
        {v: [s if c in lists[v] else 0 for c in palette] or [0] for v in graph.vertices}, p
    )


def _coloring_from(partition: Partition, palette: tuple[str, ...]) -> Coloring:
    return Coloring({v: palette[i - 1] for v, i in partition.assignment.items()})


def list_color(graph: Hypergraph, lists: ListAssignment, exhaustive: bool = False) -> ColoringResult:
    """Proper L-coloring, or hard-pair certificates when |L(v)| >= d(v) and none exists.

    With `exhaustive`, instances outside the degree hypothesis are decided by
    the guarded backtracking search and never carry a certificate.
    """
    f = list_to_vector(graph, lists, 1)
    palette = lists.palette
    short = [v for v in graph.vertices if len(lists[v]) < graph.degree(v)]
    if not short:
        result = solve(graph, f)
        if result.partition is not None:
            return ColoringResult(_coloring_from(result.partition, palette), palette=palette)
        return ColoringResult(certificates=result.certificates, palette=palette)

    if not exhaustive:
        v = short[0]
        raise PreconditionError(
            f"vertex {v!r}: |L(v)| = {len(lists[v])} is below d_H(v) = {graph.degree(v)}"
        )
    partition = exhaustive_partition(graph, f) if palette else None
    if partition is None:
        return ColoringResult(palette=palette)
    return ColoringResult(_coloring_from(partition, palette), palette=palette)


def degree_constrained_partition(graph: Hypergraph, k: Iterable[int]) -> Partition:
    """Partition with col(H_i) <= k_i and Delta(H_i) <= k_i."""
    k = tuple(k)
    if graph.order == 0 or not is_connected(graph):
        raise PreconditionError("degree_constrained_partition needs a connected hypergraph")
    if len(k) < 2 or any(x < 1 for x in k):
        raise PreconditionError(f"need p >= 2 and every k_i >= 1, got {k}")
    if sum(k) < graph.max_degree():
        raise PreconditionError(f"k_1+...+k_p = {sum(k)} is below the maximum degree {graph.max_degree()}")
    t = as_multi_complete(graph)
    if t is not None:
        raise PreconditionError(f"excluded shape: H is {t}K_{graph.order}")
    shape = as_multi_cycle(graph)
    if shape is not None and shape[1] % 2 == 1:
        raise PreconditionError(f"excluded shape: H is {shape[0]}C_{shape[1]} with an odd cycle")

    f = VectorFunction.constant(graph.vertices, k)
    result = solve(graph, f)
    if result.partition is None:
        raise SolverError("degree-constrained instance reported hard")
    return enforce_degree_bounds(graph, f, result.partition)


def point_partition_number(graph: Hypergraph, s: int, convention: Convention = "strict") -> PointPartitionResult:
    """Least k such that V(H) splits into k classes that are degenerate at level s.

    "strict" asks for strictly s-degenerate classes; "lick-white" asks for
    s-degenerate classes, which are the strictly (s+1)-degenerate ones, so
    s = 0 there gives the chromatic number.
    """
    if convention not in ("strict", "lick-white"):
        raise InputError(f"unknown degeneracy convention {convention!r}")
    level = s if convention == "strict" else s + 1
    if level < 1:
        raise PreconditionError(f"s = {s} is below the smallest level of the {convention} convention")
    if graph.order == 0:
        return PointPartitionResult(0, None, convention)

    refuted = []
    for k in range(1, graph.order + 1):
        f = VectorFunction.constant(graph.vertices, [level] * k)
        if k * level >= graph.max_degree():
            result = solve(graph, f)
            if result.partition is not None:
                return PointPartitionResult(k, result.partition, convention, tuple(refuted))
            refuted.append((k, result.certificates))
        elif k == 1:
            # a single class is the whole vertex set, so peeling decides it
            if is_strictly_degenerate(graph, constant(graph, level)):
                single = Partition(dict.fromkeys(graph.vertices, 1), 1)
                return PointPartitionResult(1, single, convention, tuple(refuted))
            refuted.append((1, {}))
        else:
            partition = exhaustive_partition(graph, f)
            if partition is not None:
                return PointPartitionResult(k, partition, convention, tuple(refuted))
            refuted.append((k, {}))
    raise SolverError("no point partition found with one vertex per class")  # pragma: no cover


def is_Lxs_choosable(graph: Hypergraph, lists: ListAssignment, s: int, exhaustive: bool = False) -> ColoringResult:
    """L-coloring whose color classes are strictly s-degenerate, or certificates.

    As in `list_color`, `exhaustive` decides instances with s*|L(v)| < d_H(v)
    by the guarded search, without certificates.
    """
    f = list_to_vector(graph, lists, s)
    palette = lists.palette
    short = [v for v in graph.vertices if s * len(lists[v]) < graph.degree(v)]
    if short and not exhaustive:
        v = short[0]
        raise PreconditionError(
            f"vertex {v!r}: s*|L(v)| = {s * len(lists[v])} is below d_H(v) = {graph.degree(v)}"
        )
    if short:
        partition = exhaustive_partition(graph, f) if palette else None
        if partition is None:
            return ColoringResult(palette=palette, s=s)
        return ColoringResult(_coloring_from(partition, palette), palette=palette, s=s)

    result = solve(graph, f)
    if result.partition is not None:
        return ColoringResult(_coloring_from(result.partition, palette), palette=palette, s=s)
    return ColoringResult(certificates=result.certificates, palette=palette, s=s)


def chromatic_number(graph: Hypergraph) -> tuple[int, Optional[Coloring]]:
    if graph.order == 0:
        return 0, Coloring({})
    for k in range(1, graph.order + 1):
        lists = ListAssignment.uniform(graph.vertices, [str(c) for c in range(1, k + 1)])
        result = list_color(graph, lists, exhaustive=True)
        if result.coloring is not None:
            return k, result.coloring
    raise SolverError("no proper coloring with one color per vertex")  # pragma: no cover


# --- choosability ---------------------------------------------------------------


def _colorable(graph: Hypergraph, lists: Mapping[str, Iterable[int]]) -> bool:
    assignment = ListAssignment.of({v: [str(c) for c in lists[v]] for v in graph.vertices})
    return list_color(graph, assignment, exhaustive=True).is_colorable


def _bfs_order(graph: Hypergraph) -> list[str]:
    start = graph.vertices[0]
    seen = {start}
    order = []
    queue = deque([start])
    while queue:
        v = queue.popleft()
        order.append(v)
        for u in sort_names(graph.neighbours(v)):
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return order


def _component_choosable(graph: Hypergraph, k: int, budget: list[int]) -> bool:
    """k-choosability of a connected stuck core, by canonical list systems."""
    tight = all(graph.degree(v) <= k for v in graph.vertices)
    if tight and is_block(graph):
        # on a block with |L| >= d, an uncolorable L gives equal lists along every edge
        return _colorable(graph, {v: range(k) for v in graph.vertices})

    order = _bfs_order(graph)
    position = {v: i for i, v in enumerate(order)}
    ready: dict[int, list[frozenset[str]]] = {}
    for edge in graph.edges:
        ready.setdefault(max(position[v] for v in edge.members), []).append(edge.members)
    free = graph.vertex_set - separating_vertices(graph)
    lists: list[frozenset[int]] = [frozenset()] * len(order)

    def settled(index: int) -> bool:
        # a non-separating vertex holding a color some edge-mate lacks can take it
        for members in ready.get(index, ()):
            for u in members & free:
                if any(not lists[position[u]] <= lists[position[w]] for w in members if w != u):
                    return True
        return False

    def extend(index: int, used: int) -> bool:
        if index == len(order):
            budget[0] -= 1
            if budget[0] < 0:
                raise SizeGuardError("list system budget exhausted")
            return _colorable(graph, {v: lists[position[v]] for v in order})
        for fresh in range(0, k + 1):
            if k - fresh > used:
                continue
            for old in combinations(range(used), k - fresh):
                lists[index] = frozenset(old) | frozenset(range(used, used + fresh))
                if tight and settled(index):
                    continue
                if not extend(index + 1, used + fresh):
                    return False
        return True

    return extend(0, 0)


def is_k_choosable(graph: Hypergraph, k: int, max_list_systems: int = MAX_LIST_SYSTEMS) -> bool:
    if k <= 0:
        return graph.order == 0
    witness = is_strictly_degenerate(graph, constant(graph, k))
    if witness.is_degenerate:
        return True
    # peeled vertices always keep a free color, so only the core matters
    core = graph.induced(witness.core)
    budget = [max_list_systems]
    return all(_component_choosable(core.induced(c), k, budget) for c in components(core))


def list_chromatic_number(
    graph: Hypergraph,
    max_vertices: int = CHOOSABILITY_MAX_VERTICES,
    max_list_systems: int = MAX_LIST_SYSTEMS,
) -> int:
    if graph.order > max_vertices:
        raise SizeGuardError(f"list-chromatic number refused: {graph.order} vertices > {max_vertices}")
    if graph.order == 0:
        return 0
    lower, _ = chromatic_number(graph)
    upper = col(graph)
    for k in range(lower, upper):
        if is_k_choosable(graph, k, max_list_systems):
            return k
    return upper


def is_brooks_extremal(graph: Hypergraph) -> bool:
    """True iff the list-chromatic number reaches max degree + 1."""
    return not is_k_choosable(graph, graph.max_degree())


def chi_and_chi_list(graph: Hypergraph, bound: int = CHOOSABILITY_MAX_VERTICES) -> tuple[int, int]:
    if graph.order > bound:
        raise SizeGuardError(f"chi_and_chi_list refused: {graph.order} vertices > {bound}")
    chi, _ = chromatic_number(graph)
    return chi, list_chromatic_number(graph, max_vertices=bound)
