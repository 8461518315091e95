"""Seeded sweeps that cross-check the library against the oracle and known theorems."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from itertools import product
from math import prod
from typing import Iterator, Optional, Sequence

import networkx as nx

from .coloring import is_brooks_extremal, is_k_choosable
from .data_structures.hypergraph import Hypergraph
from .data_structures.vector_function import VectorFunction
from .hardpair import is_hard, make_hard, random_plan, verify_certificate
from .hypercore import as_multi_complete, as_multi_cycle, from_networkx, random_hypergraph, underlying_simple
from .oracle import brute_partitionable
from .partition import reset_solver_stats, solve, solver_stats, verify_partition

logger = logging.getLogger(__name__)

DEFAULT_SAMPLES = 2000
MAX_FUNCTIONS_PER_INSTANCE = 24
MAX_BUMPS_PER_PLAN = 64
BASEPATH = "output/census"


@dataclass
class SweepRow:
    order: int
    instances: int = 0
    hard: int = 0
    partitionable: int = 0


@dataclass
class SweepReport:
    rows: dict[int, SweepRow] = field(default_factory=dict)
    disagreements: list[str] = field(default_factory=list)
    fallbacks: int = 0

    def row(self, order: int) -> SweepRow:
        return self.rows.setdefault(order, SweepRow(order))

    @property
    def instances(self) -> int:
        return sum(r.instances for r in self.rows.values())

    @property
    def hard(self) -> int:
        return sum(r.hard for r in self.rows.values())


@dataclass
class ClosureReport:
    plans: int = 0
    bumps: int = 0
    failures: list[str] = field(default_factory=list)


@dataclass
class BrooksRow:
    order: int
    graphs: int = 0
    extremal: int = 0


@dataclass
class BrooksReport:
    rows: dict[int, BrooksRow] = field(default_factory=dict)
    hypergraphs: int = 0
    exceptions: list[str] = field(default_factory=list)

    def row(self, order: int) -> BrooksRow:
        return self.rows.setdefault(order, BrooksRow(order))


def _describe(graph: Hypergraph, f: Optional[VectorFunction] = None) -> str:
    edges = " ".join("{" + ",".join(sorted(e.members)) + "}" for e in graph.edges)
    text = f"V={','.join(graph.vertices)} E={edges}"
    if f is not None:
        text += " f=" + " ".join(f"{v}:{f[v]}" for v in f)
    return text


def _compositions(total: int, parts: int, cap: int) -> list[tuple[int, ...]]:
    return [c for c in product(range(min(total, cap) + 1), repeat=parts) if sum(c) == total]


def tight_functions(
    graph: Hypergraph, p: int, rng: random.Random, cap: int = MAX_FUNCTIONS_PER_INSTANCE, max_value: int = 3
) -> list[VectorFunction]:
    """Functions with f_1 + ... + f_p = d_H at every vertex and every f_i <= max_value."""
    choices = [_compositions(graph.degree(v), p, max_value) for v in graph.vertices]
    if any(not c for c in choices):
        return []
    if prod(len(c) for c in choices) <= cap:
        picks = list(product(*choices))
    else:
        seen: set[tuple] = set()
        while len(seen) < cap:
            seen.add(tuple(rng.choice(c) for c in choices))
        picks = sorted(seen)
    return [VectorFunction(dict(zip(graph.vertices, pick)), p) for pick in picks]


def sample_instances(max_n: int, samples: int, seed: int, max_edges: int = 8) -> Iterator[Hypergraph]:
    """Connected hypergraphs with arity <= 3 and multiplicity <= 2."""
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(1, max_n)
        m = 0 if n == 1 else rng.randint(1, max(1, max_edges - n + 1))
        yield random_hypergraph(n, m, max_arity=3, max_mult=2, seed=rng.randrange(2**32), connected=True)


def equivalence_sweep(
    max_n: int = 5,
    p_values: Sequence[int] = (2, 3),
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    max_functions: int = MAX_FUNCTIONS_PER_INSTANCE,
) -> SweepReport:
    """Hard-pair recognition against the oracle on tight instances; solve on the rest."""
    report = SweepReport()
    rng = random.Random(seed)
    reset_solver_stats()
    for index, graph in enumerate(sample_instances(max_n, samples, seed)):
        if index and index % 500 == 0:
            logger.info("equivalence sweep: %d of %d hypergraphs", index, samples)
        for p in p_values:
            for f in tight_functions(graph, p, rng, max_functions):
                row = report.row(graph.order)
                row.instances += 1
                certificate = is_hard(graph, f)
                verdict = brute_partitionable(graph, f)
                if (certificate is not None) == verdict.partitionable:
                    report.disagreements.append(f"hard={certificate is not None} oracle={verdict.partitionable} {_describe(graph, f)}")
                    continue
                if certificate is not None:
                    row.hard += 1
                    if not verify_certificate(graph, f, certificate):
                        report.disagreements.append(f"certificate fails verification {_describe(graph, f)}")
                    continue
                row.partitionable += 1
                result = solve(graph, f)
                if result.partition is None or not verify_partition(graph, f, result.partition):
                    report.disagreements.append(f"solve missed a partition {_describe(graph, f)}")
    report.fallbacks = solver_stats().fallbacks
    return report


def closure_sweep(
    samples: int = 500, max_blocks: int = 4, max_p: int = 4, seed: int = 0, max_bumps: int = MAX_BUMPS_PER_PLAN
) -> ClosureReport:
    """Generated hard pairs are recognised; one extra unit anywhere makes them solvable.

    Every (vertex, coordinate) bump is tried when a plan has at most
    `max_bumps` of them, otherwise a seeded sample of that many.
    """
    report = ClosureReport()
    rng = random.Random(seed)
    for _ in range(samples):
        p = rng.randint(1, max_p)
        graph, f = make_hard(random_plan(rng, max_blocks, p), seed=rng.randrange(2**32))
        report.plans += 1
        certificate = is_hard(graph, f)
        if certificate is None or not verify_certificate(graph, f, certificate):
            report.failures.append(f"generated pair not recognised {_describe(graph, f)}")
            continue
        bumps = list(product(graph.vertices, range(p)))
        if len(bumps) > max_bumps:
            bumps = sorted(rng.sample(bumps, max_bumps))
        for v, i in bumps:
            report.bumps += 1
            bumped = f.replace({v: [x + (k == i) for k, x in enumerate(f[v])]})
            if is_hard(graph, bumped) is not None:
                report.failures.append(f"bumped pair still hard at {v}, f_{i + 1} {_describe(graph, bumped)}")
                continue
            result = solve(graph, bumped)
            if result.partition is None or not verify_partition(graph, bumped, result.partition):
                report.failures.append(f"bumped pair not solved at {v}, f_{i + 1} {_describe(graph, bumped)}")
    return report


def _expected_extremal(graph: Hypergraph) -> bool:
    if as_multi_complete(graph) == 1:
        return True
    shape = as_multi_cycle(graph)
    if shape is not None and shape[0] == 1 and shape[1] % 2 == 1:
        return True
    return graph.size == 1


def brooks_census(max_n: int = 7, hyper_samples: int = 300, hyper_max_n: int = 5, seed: int = 0) -> BrooksReport:
    """List-chromatic number reaches max degree + 1 exactly on the known shapes."""
    report = BrooksReport()
    for nx_graph in nx.graph_atlas_g():
        n = nx_graph.number_of_nodes()
        if n == 0 or n > max_n or not nx.is_connected(nx_graph):
            continue
        graph = from_networkx(nx_graph)
        row = report.row(n)
        row.graphs += 1
        _check_brooks(graph, report, row)

    rng = random.Random(seed)
    for graph in sample_instances(hyper_max_n, hyper_samples, rng.randrange(2**32)):
        graph = underlying_simple(graph)
        report.hypergraphs += 1
        _check_brooks(graph, report, None)
    return report


def _check_brooks(graph: Hypergraph, report: BrooksReport, row: Optional[BrooksRow]) -> None:
    delta = graph.max_degree()
    if not is_k_choosable(graph, delta + 1):
        report.exceptions.append(f"not (max degree + 1)-choosable {_describe(graph)}")
        return
    extremal = is_brooks_extremal(graph)
    if row is not None and extremal:
        row.extremal += 1
    if extremal != _expected_extremal(graph):
        report.exceptions.append(f"extremal={extremal} {_describe(graph)}")
