from __future__ import annotations

import dataclasses
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Optional

from .data_structures.hypergraph import Hypergraph, sort_names
from .data_structures.vector_function import VectorFunction
from .degeneracy import is_strictly_degenerate
from .errors import InputError, PreconditionError, SizeGuardError, SolverError
from .hardpair import HardPairCertificate, is_hard
from .structure import components, separating_vertices

logger = logging.getLogger(__name__)

EXHAUSTIVE_MAX_VERTICES = 16


@dataclass(frozen=True)
class Partition:
    """Total map vertex -> class index in 1..p."""

    assignment: Mapping[str, int]
    p: int

    def __post_init__(self) -> None:
        bad = [v for v, i in self.assignment.items() if not 1 <= i <= self.p]
        if bad:
            raise InputError(f"class index of {sort_names(bad)[0]!r} is outside 1..{self.p}")
        object.__setattr__(self, "assignment", {v: self.assignment[v] for v in sort_names(self.assignment)})

    def members(self, i: int) -> frozenset[str]:
        return frozenset(v for v, c in self.assignment.items() if c == i)

    def classes(self) -> list[frozenset[str]]:
        return [self.members(i) for i in range(1, self.p + 1)]

    def class_of(self, vertex: str) -> int:
        return self.assignment[vertex]

    def moved(self, vertex: str, target: int) -> Partition:
        return Partition({**self.assignment, vertex: target}, self.p)


@dataclass(frozen=True)
class SolveResult:
    partition: Optional[Partition] = None
    certificates: Mapping[frozenset[str], HardPairCertificate] = field(default_factory=dict)

    @property
    def is_partitionable(self) -> bool:
        return self.partition is not None


@dataclass
class SolverStats:
    searches: int = 0
    branches: int = 0
    pruned: int = 0
    memo_hits: int = 0
    fallbacks: int = 0


_STATS = SolverStats()


def solver_stats() -> SolverStats:
    return dataclasses.replace(_STATS)


def reset_solver_stats() -> None:
    global _STATS
    _STATS = SolverStats()


def check_degree_hypothesis(graph: Hypergraph, f: VectorFunction) -> None:
    for v in graph.vertices:
        if f.total(v) < graph.degree(v):
            raise PreconditionError(
                f"vertex {v!r}: f_1+...+f_p = {f.total(v)} is below d_H(v) = {graph.degree(v)}"
            )


def _ordinary_partners(graph: Hypergraph, z: str) -> Counter[str]:
    partners: Counter[str] = Counter()
    for edge in graph.incident_edges(z):
        if edge.arity == 2:
            (other,) = edge.members - {z}
            partners[other] += 1
    return partners


def reduce_pair(graph: Hypergraph, f: VectorFunction, z: str, j: int) -> tuple[Hypergraph, VectorFunction]:
    """(H, f)/(z, j): shrink z away and lower f_j by the multiplicity towards z."""
    if not 1 <= j <= f.p:
        raise InputError(f"coordinate {j} outside 1..{f.p}")
    reduced = graph.shrink_vertex(z)
    mu = _ordinary_partners(graph, z)
    values = {}
    for v in reduced.vertices:
        vector = list(f[v])
        vector[j - 1] = max(0, vector[j - 1] - mu[v])
        values[v] = vector
    return reduced, VectorFunction(values, f.p)


def _class_is_degenerate(graph: Hypergraph, members: set[str] | frozenset[str], f: VectorFunction, i: int) -> bool:
    sub = graph.induced(members)
    return is_strictly_degenerate(sub, {v: f.value(v, i) for v in sub.vertices}).is_degenerate


def verify_partition(graph: Hypergraph, f: VectorFunction, partition: Partition) -> bool:
    try:
        if partition.p != f.p or set(partition.assignment) != graph.vertex_set:
            return False
        f.check_domain(graph)
        return all(
            _class_is_degenerate(graph, partition.members(i), f, i) for i in range(1, f.p + 1)
        )
    except InputError:
        return False


def exhaustive_partition(
    graph: Hypergraph, f: VectorFunction, max_vertices: Optional[int] = EXHAUSTIVE_MAX_VERTICES
) -> Optional[Partition]:
    """Backtracking search for an f-partition; no degree hypothesis needed."""
    if max_vertices is not None and graph.order > max_vertices:
        raise SizeGuardError(
            f"exhaustive partition search refused: {graph.order} vertices > {max_vertices}"
        )
    # strict degeneracy is hereditary, so a class that fails can be pruned at once
    order = sorted(graph.vertices, key=lambda v: (-graph.degree(v), graph.position[v]))
    classes: list[set[str]] = [set() for _ in range(f.p)]
    assignment: dict[str, int] = {}

    def extend(index: int) -> bool:
        if index == len(order):
            return True
        v = order[index]
        for i in range(1, f.p + 1):
            if f.value(v, i) == 0:
                continue
            classes[i - 1].add(v)
            if _class_is_degenerate(graph, classes[i - 1], f, i):
                assignment[v] = i
                if extend(index + 1):
                    return True
            classes[i - 1].discard(v)
        return False

    if not extend(0):
        return None
    return Partition(assignment, f.p)


def _search(
    graph: Hypergraph, f: VectorFunction, memo: set[tuple]
) -> Optional[dict[str, int]]:
    """Reduction search on a connected pair that is known not to be hard."""
    if graph.order == 1:
        (v,) = graph.vertices
        for j in range(1, f.p + 1):
            if f.value(v, j) >= 1:
                return {v: j}
        return None

    key = (graph.vertex_set, tuple(f[v] for v in graph.vertices))
    if key in memo:
        _STATS.memo_hits += 1
        logger.debug("memo hit on a state of order %d", graph.order)
        return None

    cuts = separating_vertices(graph)
    candidates = sorted(
        (v for v in graph.vertices if v not in cuts),
        key=lambda v: (0 if f.total(v) > graph.degree(v) else 1, graph.position[v]),
    )
    for z in candidates:
        coordinates = sorted(
            (j for j in range(1, f.p + 1) if f.value(z, j) > 0),
            key=lambda j: (-f.value(z, j), j),
        )
        for j in coordinates:
            _STATS.branches += 1
            reduced, reduced_f = reduce_pair(graph, f, z, j)
            parts = [reduced.induced(c) for c in components(reduced)]
            pairs = [(part, reduced_f.restrict(part.vertices)) for part in parts]
            if any(is_hard(part, part_f) for part, part_f in pairs):
                _STATS.pruned += 1
                logger.debug("pruned branch z=%s j=%d: reduction has a hard component", z, j)
                continue
            combined: dict[str, int] = {}
            for part, part_f in pairs:
                found = _search(part, part_f, memo)
                if found is None:
                    break
                combined.update(found)
            else:
                # H_j + z stays strictly f_j-degenerate
                combined[z] = j
                return combined

    memo.add(key)
    return None


def solve(graph: Hypergraph, f: VectorFunction) -> SolveResult:
    """An f-partition of H, or a hard-pair certificate for every hard component."""
    f.check_domain(graph)
    check_degree_hypothesis(graph, f)
    _STATS.searches += 1

    memo: set[tuple] = set()
    certificates: dict[frozenset[str], HardPairCertificate] = {}
    assignment: dict[str, int] = {}
    for component in components(graph):
        sub = graph.induced(component)
        sub_f = f.restrict(sub.vertices)
        certificate = is_hard(sub, sub_f)
        if certificate is not None:
            certificates[component] = certificate
            continue
        if certificates:
            continue

        found = _search(sub, sub_f, memo)
        if found is None:
            _STATS.fallbacks += 1
            logger.warning(
                "reduction search exhausted on a component of order %d and size %d; "
                "falling back to exhaustive assignment",
                sub.order,
                sub.size,
            )
            fallback = exhaustive_partition(sub, sub_f, max_vertices=None)
            if fallback is None:
                raise SolverError("no f-partition found for a pair that is not hard")
            found = dict(fallback.assignment)
        assignment.update(found)

    if certificates:
        return SolveResult(certificates=certificates)
    partition = Partition(assignment, f.p)
    if not verify_partition(graph, f, partition):
        raise SolverError("constructed partition failed re-verification")
    return SolveResult(partition=partition)


# --- degree bounds ------------------------------------------------------------


@dataclass(frozen=True)
class Move:
    vertex: str
    source: int
    target: int
    weight_before: int
    weight_after: int


def class_degree(graph: Hypergraph, members: set[str] | frozenset[str], vertex: str) -> int:
    """Degree of `vertex` in H[members + vertex]."""
    return sum(1 for e in graph.incident_edges(vertex) if all(u == vertex or u in members for u in e.members))


def partition_weight(graph: Hypergraph, f: VectorFunction, partition: Partition) -> int:
    weight = 0
    for i, members in enumerate(partition.classes(), start=1):
        weight += sum(1 for e in graph.edges if e.members <= members)
        weight -= sum(f.value(v, i) for v in members)
    return weight


def degree_bound_moves(
    graph: Hypergraph, f: VectorFunction, partition: Partition
) -> Iterator[tuple[Move, Partition]]:
    """Shift vertices that exceed their class bound until none does."""
    current = partition
    while True:
        classes = {i: current.members(i) for i in range(1, f.p + 1)}
        offender = next(
            (
                v
                for v in graph.vertices
                if class_degree(graph, classes[current.class_of(v)], v) > f.value(v, current.class_of(v))
            ),
            None,
        )
        if offender is None:
            return
        source = current.class_of(offender)
        target = next(
            (
                j
                for j in range(1, f.p + 1)
                if j != source and class_degree(graph, classes[j], offender) < f.value(offender, j)
            ),
            None,
        )
        if target is None:
            raise SolverError(f"no class can take {offender!r}; is the degree hypothesis violated?")

        before = partition_weight(graph, f, current)
        current = current.moved(offender, target)
        after = partition_weight(graph, f, current)
        logger.debug("moved %s from class %d to %d, weight %d -> %d", offender, source, target, before, after)
        yield Move(offender, source, target, before, after), current


def enforce_degree_bounds(graph: Hypergraph, f: VectorFunction, partition: Partition) -> Partition:
    f.check_domain(graph)
    check_degree_hypothesis(graph, f)
    if not verify_partition(graph, f, partition):
        raise InputError("enforce_degree_bounds needs an f-partition")
    result = partition
    for _, result in degree_bound_moves(graph, f, partition):
        pass
    return result
