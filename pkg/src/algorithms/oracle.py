"""Naive reference answers for small instances.

Nothing here uses the peeling, block or hard-pair code: degeneracy is checked
over every vertex subset, partitions over every class assignment.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Mapping, Optional

from .data_structures.hypergraph import Hypergraph
from .data_structures.vector_function import VectorFunction
from .errors import InputError, SizeGuardError
from .partition import Partition

MAX_DEGENERACY_VERTICES = 12
MAX_PARTITION_VERTICES = 10
MAX_ASSIGNMENTS = 10**7


@dataclass(frozen=True)
class OracleVerdict:
    partitionable: bool
    witness: Optional[Partition] = None


def _masks(graph: Hypergraph) -> tuple[list[int], list[list[int]]]:
    index = {v: i for i, v in enumerate(graph.vertices)}
    edge_masks = [sum(1 << index[v] for v in e.members) for e in graph.edges]
    incident = [[m for m in edge_masks if m >> i & 1] for i in range(graph.order)]
    return edge_masks, incident


def _subset_ok(mask: int, incident: list[list[int]], h: list[int]) -> bool:
    """Every non-empty subset of `mask` has a vertex of degree below h."""
    sub = mask
    while sub:
        ok = False
        bits = sub
        while bits:
            low = bits & -bits
            i = low.bit_length() - 1
            bits ^= low
            if sum(1 for m in incident[i] if m & sub == m) < h[i]:
                ok = True
                break
        if not ok:
            return False
        sub = (sub - 1) & mask
    return True


def brute_strictly_degenerate(graph: Hypergraph, h: Mapping[str, int]) -> bool:
    if graph.order > MAX_DEGENERACY_VERTICES:
        raise SizeGuardError(f"oracle refused: {graph.order} vertices > {MAX_DEGENERACY_VERTICES}")
    missing = [v for v in graph.vertices if v not in h]
    if missing:
        raise InputError(f"h is not defined at {missing[0]!r}")
    _, incident = _masks(graph)
    full = (1 << graph.order) - 1
    return _subset_ok(full, incident, [h[v] for v in graph.vertices])


def brute_partitionable(graph: Hypergraph, f: VectorFunction) -> OracleVerdict:
    """First valid assignment in lexicographic order over (vertex, class)."""
    n, p = graph.order, f.p
    if n > MAX_PARTITION_VERTICES or p**n > MAX_ASSIGNMENTS:
        raise SizeGuardError(f"oracle refused: {p}^{n} assignments over {n} vertices")
    f.check_domain(graph)
    _, incident = _masks(graph)
    h = [[f.value(v, i) for v in graph.vertices] for i in range(1, p + 1)]
    cache: dict[tuple[int, int], bool] = {}

    def class_ok(i: int, mask: int) -> bool:
        key = (i, mask)
        if key not in cache:
            cache[key] = _subset_ok(mask, incident, h[i])
        return cache[key]

    for assignment in product(range(p), repeat=n):
        masks = [0] * p
        for index, c in enumerate(assignment):
            masks[c] |= 1 << index
        if all(class_ok(i, masks[i]) for i in range(p)):
            witness = Partition({v: c + 1 for v, c in zip(graph.vertices, assignment)}, p)
            return OracleVerdict(True, witness)
    return OracleVerdict(False)
