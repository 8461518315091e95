"""Hard pairs: recognition, certificates and generation.

A hard pair is built from three kinds of blocks (monoblocks, multi-complete
blocks and odd multi-cycles) glued together at single vertices, with the
function values of the glued vertices added up.
"""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass
from typing import ClassVar, Iterator, Literal, Optional, Union

from .data_structures.hypergraph import Hypergraph
from .data_structures.vector_function import VectorFunction
from .errors import InputError
from .hypercore import as_multi_complete, as_multi_cycle, complete, cycle, merge, prefixed, random_hypergraph, t_fold
from .structure import blocks, is_block, is_connected

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MonoTag:
    j: int
    kind: ClassVar[str] = "M"


@dataclass(frozen=True)
class CompleteTag:
    t: int
    counts: tuple[int, ...]
    kind: ClassVar[str] = "K"

    @property
    def n(self) -> int:
        return sum(self.counts) + 1


@dataclass(frozen=True)
class CycleTag:
    t: int
    n: int
    k: int
    l: int  # noqa: E741
    kind: ClassVar[str] = "C"


BlockTypeTag = Union[MonoTag, CompleteTag, CycleTag]


@dataclass(frozen=True)
class BlockCertificate:
    vertices: frozenset[str]
    tag: BlockTypeTag
    function: VectorFunction


@dataclass(frozen=True)
class HardPairCertificate:
    """One entry per block of H, in block order."""

    blocks: tuple[BlockCertificate, ...]
    p: int

    def __iter__(self) -> Iterator[BlockCertificate]:
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)


def _unit(p: int, i: int, scale: int = 1) -> tuple[int, ...]:
    return tuple(scale if k == i else 0 for k in range(1, p + 1))


def _tag_holds(block: Hypergraph, fb: VectorFunction, tag: BlockTypeTag) -> bool:
    """Check the defining equations of a block type; `block` must already be a block."""
    p = fb.p
    if set(fb) != block.vertex_set:
        return False

    if isinstance(tag, MonoTag):
        if not 1 <= tag.j <= p:
            return False
        return all(fb[v] == _unit(p, tag.j, block.degree(v)) for v in block.vertices)

    if isinstance(tag, CompleteTag):
        n = block.order
        if len(tag.counts) != p or tag.t < 1 or n < 3 or tag.n != n:
            return False
        if sum(1 for c in tag.counts if c) < 2 or any(c < 0 for c in tag.counts):
            return False
        if as_multi_complete(block) != tag.t:
            return False
        expected = tuple(tag.t * c for c in tag.counts)
        return all(fb[v] == expected for v in block.vertices)

    if isinstance(tag, CycleTag):
        if tag.k == tag.l or not (1 <= tag.k <= p and 1 <= tag.l <= p):
            return False
        if tag.n < 5 or tag.n % 2 == 0 or as_multi_cycle(block) != (tag.t, tag.n):
            return False
        expected = tuple(a + b for a, b in zip(_unit(p, tag.k, tag.t), _unit(p, tag.l, tag.t)))
        return all(fb[v] == expected for v in block.vertices)

    return False


def _classify(block: Hypergraph, fb: VectorFunction) -> Optional[BlockTypeTag]:
    first = block.vertices[0]
    vector = fb[first]
    support = [i + 1 for i, x in enumerate(vector) if x]

    if block.order == 1:
        # an isolated vertex is a monoblock exactly when f vanishes there
        return MonoTag(1) if not support else None

    if len(support) == 1:
        tag = MonoTag(support[0])
        if _tag_holds(block, fb, tag):
            return tag

    t = as_multi_complete(block)
    if t is not None and block.order >= 3 and all(x % t == 0 for x in vector):
        tag = CompleteTag(t, tuple(x // t for x in vector))
        if _tag_holds(block, fb, tag):
            return tag

    shape = as_multi_cycle(block)
    if shape is not None and len(support) == 2:
        t, n = shape
        tag = CycleTag(t, n, support[0], support[1])
        if _tag_holds(block, fb, tag):
            return tag
    return None


def classify_block(block: Hypergraph, fb: VectorFunction) -> Optional[BlockTypeTag]:
    if not is_block(block):
        raise InputError("classify_block needs a block (connected, no separating vertex)")
    fb.check_domain(block)
    return _classify(block, fb)


def _leaf_function(
    block: Hypergraph, attachment: str, residual: dict[str, tuple[int, ...]], p: int
) -> tuple[Optional[BlockTypeTag], Optional[VectorFunction]]:
    """Pin f_B of a leaf block from a vertex other than its attachment."""
    others = {v: residual[v] for v in block.vertices if v != attachment}
    reference = others[next(v for v in block.vertices if v != attachment)]
    candidates = [reference]
    support = [i + 1 for i, x in enumerate(reference) if x]
    if len(support) == 1:
        candidates.append(_unit(p, support[0], block.degree(attachment)))
    for candidate in dict.fromkeys(candidates):
        fb = VectorFunction({**others, attachment: candidate}, p)
        tag = _classify(block, fb)
        if tag is not None:
            return tag, fb
    return None, None


def is_hard(graph: Hypergraph, f: VectorFunction) -> Optional[HardPairCertificate]:
    """Certificate if (H, f) is a hard pair, otherwise None.

    Strips end-blocks one at a time; the value of f_B at the block's attachment
    vertex is subtracted from the residual there.
    """
    f.check_domain(graph)
    if not is_connected(graph) or graph.order == 0:
        raise InputError("is_hard needs a non-empty connected hypergraph")
    for v in graph.vertices:
        if f.total(v) != graph.degree(v):
            return None

    tree = blocks(graph)
    p = f.p
    residual = {v: f[v] for v in graph.vertices}
    live_blocks = {c: len(tree.blocks_containing(c)) for c in tree.cut_vertices}
    remaining = set(range(len(tree.blocks)))
    found: dict[int, BlockCertificate] = {}

    while remaining:
        leaf, attachment = None, None
        for i in sorted(remaining):
            shared = [c for c in tree.cut_vertices_of(i) if live_blocks[c] >= 2]
            if len(shared) <= 1:
                leaf, attachment = i, (shared[0] if shared else None)
                break
        if leaf is None:
            raise InputError("block tree has no leaf")  # pragma: no cover

        block = graph.induced(tree.blocks[leaf])
        if attachment is None:
            fb = VectorFunction({v: residual[v] for v in block.vertices}, p)
            tag = _classify(block, fb)
        else:
            tag, fb = _leaf_function(block, attachment, residual, p)
        if tag is None:
            return None

        if attachment is not None:
            rest = tuple(a - b for a, b in zip(residual[attachment], fb[attachment]))
            if any(x < 0 for x in rest):
                return None
            residual[attachment] = rest
            live_blocks[attachment] -= 1
        found[leaf] = BlockCertificate(tree.blocks[leaf], tag, fb)
        remaining.remove(leaf)

    return HardPairCertificate(tuple(found[i] for i in range(len(tree.blocks))), p)


def verify_certificate(graph: Hypergraph, f: VectorFunction, certificate: HardPairCertificate) -> bool:
    """Re-check a certificate against the definition, independently of is_hard."""
    try:
        f.check_domain(graph)
        if graph.order == 0 or not is_connected(graph) or certificate.p != f.p:
            return False
        tree = blocks(graph)
        claimed = [entry.vertices for entry in certificate.blocks]
        if len(claimed) != len(tree.blocks) or set(claimed) != set(tree.blocks):
            return False

        sums = {v: [0] * f.p for v in graph.vertices}
        for entry in certificate.blocks:
            block = graph.induced(entry.vertices)
            if entry.function.p != f.p or not _tag_holds(block, entry.function, entry.tag):
                return False
            for v in entry.vertices:
                for i, x in enumerate(entry.function[v]):
                    sums[v][i] += x

        for v in graph.vertices:
            if tuple(sums[v]) != f[v]:
                return False
        return True
    except InputError:
        return False


# --- generation ---------------------------------------------------------------


@dataclass(frozen=True)
class BlockPlan:
    """One base block. `base` is only read for monoblocks; None draws a random block."""

    kind: Literal["M", "K", "C"]
    p: int
    j: int = 1
    base: Optional[Hypergraph] = None
    t: int = 1
    counts: tuple[int, ...] = ()
    n: int = 5
    k: int = 1
    l: int = 2  # noqa: E741


@dataclass(frozen=True)
class MergePlan:
    """Merge two sub-plans; vertices are indices into each side's vertex order."""

    left: Plan
    right: Plan
    left_vertex: Optional[int] = None
    right_vertex: Optional[int] = None


Plan = Union[BlockPlan, MergePlan]


def _random_block(rng: random.Random) -> Hypergraph:
    n = rng.randint(2, 5)
    graph = random_hypergraph(
        n, rng.randint(1, 6), max_arity=3, max_mult=2, seed=rng.randrange(2**32), connected=True
    )
    largest = max(blocks(graph).blocks, key=len)
    return graph.induced(largest)


def _build_block(plan: BlockPlan, rng: random.Random) -> tuple[Hypergraph, VectorFunction]:
    p = plan.p
    if p < 1:
        raise InputError("malformed plan: p must be at least 1")

    if plan.kind == "M":
        if not 1 <= plan.j <= p:
            raise InputError(f"malformed plan: monoblock coordinate {plan.j} outside 1..{p}")
        block = plan.base if plan.base is not None else _random_block(rng)
        if not is_block(block):
            raise InputError("malformed plan: monoblock base is not a block")
        f = VectorFunction({v: _unit(p, plan.j, block.degree(v)) for v in block.vertices}, p)
        return block, f

    if plan.kind == "K":
        n = sum(plan.counts) + 1
        if len(plan.counts) != p or n < 3 or sum(1 for c in plan.counts if c) < 2 or plan.t < 1:
            raise InputError(f"malformed plan: K block with counts {plan.counts} and t={plan.t}")
        block = t_fold(complete(n), plan.t)
        return block, VectorFunction.constant(block.vertices, [plan.t * c for c in plan.counts])

    if plan.kind == "C":
        if plan.n < 5 or plan.n % 2 == 0 or plan.t < 1:
            raise InputError(f"malformed plan: C block needs odd n >= 5, got n={plan.n}")
        if plan.k == plan.l or not (1 <= plan.k <= p and 1 <= plan.l <= p):
            raise InputError(f"malformed plan: C block coordinates {plan.k}, {plan.l}")
        block = t_fold(cycle(plan.n), plan.t)
        vector = [a + b for a, b in zip(_unit(p, plan.k, plan.t), _unit(p, plan.l, plan.t))]
        return block, VectorFunction.constant(block.vertices, vector)

    raise InputError(f"malformed plan: unknown block kind {plan.kind!r}")


def _build(plan: Plan, rng: random.Random, counter: Iterator[int]) -> tuple[Hypergraph, VectorFunction]:
    if isinstance(plan, BlockPlan):
        block, f = _build_block(plan, rng)
        prefix = f"b{next(counter)}_"
        return prefixed(block, prefix), VectorFunction({prefix + v: f[v] for v in f}, f.p)

    if not isinstance(plan, MergePlan):
        raise InputError(f"malformed plan: {plan!r}")
    first, f1 = _build(plan.left, rng, counter)
    second, f2 = _build(plan.right, rng, counter)
    if f1.p != f2.p:
        raise InputError("malformed plan: merged parts disagree on p")

    def pick(graph: Hypergraph, index: Optional[int]) -> str:
        if index is None:
            return rng.choice(graph.vertices)
        if not 0 <= index < graph.order:
            raise InputError(f"malformed plan: merge vertex index {index} out of range")
        return graph.vertices[index]

    v1, v2 = pick(first, plan.left_vertex), pick(second, plan.right_vertex)
    merged = merge(first, v1, second, v2, v1)
    values = {v: f1[v] for v in first.vertices}
    values.update({v: f2[v] for v in second.vertices if v != v2})
    values[v1] = tuple(a + b for a, b in zip(f1[v1], f2[v2]))
    return merged, VectorFunction(values, f1.p)


def make_hard(plan: Plan, seed: Optional[int] = None) -> tuple[Hypergraph, VectorFunction]:
    """Build a hard pair from a plan; random choices in the plan are drawn from `seed`."""
    graph, f = _build(plan, random.Random(seed), itertools.count())
    logger.debug("built hard pair of order %d and size %d", graph.order, graph.size)
    return graph, f


def random_plan(rng: random.Random, max_blocks: int, p: int) -> Plan:
    if max_blocks < 1 or p < 1:
        raise InputError("random_plan needs max_blocks >= 1 and p >= 1")
    kinds = ["M"] if p == 1 else ["M", "K", "C"]
    parts: list[BlockPlan] = []
    for _ in range(rng.randint(1, max_blocks)):
        kind = rng.choice(kinds)
        if kind == "M":
            parts.append(BlockPlan("M", p, j=rng.randint(1, p)))
        elif kind == "K":
            n = rng.randint(3, 5)
            counts = [0] * p
            for i in rng.sample(range(p), 2):
                counts[i] += 1
            for _ in range(n - 3):
                counts[rng.randrange(p)] += 1
            parts.append(BlockPlan("K", p, t=rng.randint(1, 2), counts=tuple(counts)))
        else:
            k, l = rng.sample(range(1, p + 1), 2)  # noqa: E741
            parts.append(BlockPlan("C", p, t=rng.randint(1, 2), n=rng.choice([5, 7]), k=k, l=l))

    plan: Plan = parts[0]
    for part in parts[1:]:
        plan = MergePlan(plan, part)
    return plan
