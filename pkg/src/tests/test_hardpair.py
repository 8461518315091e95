import dataclasses
import random

import pytest
from hypothesis import given, settings, strategies as st

from algorithms.catalogue import doubled_k4, tripled_c5, twin_hexagon
from algorithms.data_structures.hypergraph import Hypergraph
from algorithms.data_structures.vector_function import VectorFunction
from algorithms.errors import InputError
from algorithms.hardpair import (
    BlockPlan,
    CompleteTag,
    CycleTag,
    MergePlan,
    MonoTag,
    classify_block,
    is_hard,
    make_hard,
    random_plan,
    verify_certificate,
)
from algorithms.hypercore import complete, cycle, t_fold
from algorithms.oracle import brute_partitionable
from algorithms.structure import blocks, separating_vertices

from .utils import create_arbitrary_hypergraph, path_abc, single_hyperedge


def test_classify_catalogue_blocks():
    graph, f = doubled_k4()
    assert classify_block(graph, f) == CompleteTag(2, (0, 2, 1))
    graph, f = tripled_c5()
    assert classify_block(graph, f) == CycleTag(3, 5, 1, 2)
    graph, f = twin_hexagon()
    assert classify_block(graph, f) == MonoTag(1)
    assert {f[v] for v in graph.vertices} == {(6, 0), (4, 0)}


def test_classify_monoblock_and_misses():
    graph = single_hyperedge()
    f = VectorFunction({v: (0, 1) for v in graph.vertices})
    assert classify_block(graph, f) == MonoTag(2)
    assert classify_block(cycle(4), VectorFunction.constant(cycle(4).vertices, (1, 1))) is None
    # a tripled triangle is a complete block, never a cycle
    triangle = t_fold(cycle(3), 3)
    assert classify_block(triangle, VectorFunction.constant(triangle.vertices, (3, 3))) == CompleteTag(3, (1, 1))


def test_classify_rejects_non_blocks():
    with pytest.raises(InputError):
        classify_block(path_abc(), VectorFunction.constant("abc", (1, 1)))


def test_isolated_vertex_with_zero_function_is_hard():
    graph = Hypergraph("a")
    certificate = is_hard(graph, VectorFunction({"a": (0, 0)}))
    assert certificate is not None
    assert certificate.blocks[0].tag == MonoTag(1)
    assert is_hard(graph, VectorFunction({"a": (0, 1)})) is None


def test_is_hard_examples():
    c5 = cycle(5)
    certificate = is_hard(c5, VectorFunction.constant(c5.vertices, (1, 1)))
    assert [entry.tag for entry in certificate] == [CycleTag(1, 5, 1, 2)]

    k4 = complete(4)
    certificate = is_hard(k4, VectorFunction.constant(k4.vertices, (1, 1, 1)))
    assert [entry.tag for entry in certificate] == [CompleteTag(1, (1, 1, 1))]

    assert is_hard(path_abc(), VectorFunction.constant("abc", (1, 1))) is None


def test_is_hard_rejects_disconnected_input():
    graph = Hypergraph("abcd", [("x", "ab"), ("y", "cd")])
    with pytest.raises(InputError):
        is_hard(graph, VectorFunction.constant("abcd", (1,)))


def test_merged_monoblocks_are_hard():
    plan = MergePlan(
        BlockPlan("M", 2, j=1, base=complete(3)),
        BlockPlan("M", 2, j=2, base=cycle(4)),
        left_vertex=0,
        right_vertex=0,
    )
    graph, f = make_hard(plan)
    assert graph.order == 6
    star = "b0_v0"
    assert f[star] == (2, 2)
    certificate = is_hard(graph, f)
    assert certificate is not None and verify_certificate(graph, f, certificate)
    assert sorted(entry.tag.kind for entry in certificate) == ["M", "M"]
    assert separating_vertices(graph) == {star}


def test_single_cycle_plan():
    graph, f = make_hard(BlockPlan("C", 2, t=1, n=5, k=1, l=2))
    assert graph.order == 5 and graph.size == 5
    assert set(f.values()) == {(1, 1)}


@pytest.mark.parametrize(
    "plan",
    [
        BlockPlan("K", 2, counts=(3, 0)),
        BlockPlan("C", 2, n=4),
        BlockPlan("C", 2, k=1, l=1),
        BlockPlan("M", 2, j=3),
        BlockPlan("M", 2, base=Hypergraph("abc", [("x", "ab"), ("y", "bc")])),
        MergePlan(BlockPlan("M", 2), BlockPlan("M", 3)),
        MergePlan(BlockPlan("M", 2), BlockPlan("M", 2), left_vertex=40),
    ],
)
def test_make_hard_rejects_malformed_plans(plan):
    with pytest.raises(InputError):
        make_hard(plan, seed=0)


def test_make_hard_is_reproducible():
    plan = random_plan(random.Random(5), 4, 3)
    assert make_hard(plan, seed=11) == make_hard(plan, seed=11)


@settings(max_examples=500, deadline=None)
@given(
    st.integers(min_value=0, max_value=2**32 - 1),
    st.integers(min_value=1, max_value=4),
    st.integers(min_value=1, max_value=4),
)
def test_generated_pairs_are_recognised(seed, max_blocks, p):
    rng = random.Random(seed)
    graph, f = make_hard(random_plan(rng, max_blocks, p), seed=rng.randrange(2**32))
    certificate = is_hard(graph, f)
    assert certificate is not None
    assert verify_certificate(graph, f, certificate)
    if graph.order <= 8 and p ** graph.order <= 10**6:
        assert not brute_partitionable(graph, f).partitionable


def test_perturbed_certificate_fails():
    graph, f = doubled_k4()
    certificate = is_hard(graph, f)
    entry = certificate.blocks[0]
    v = graph.vertices[0]
    bumped = entry.function.replace({v: [x + (i == 1) for i, x in enumerate(entry.function[v])]})
    broken = dataclasses.replace(certificate, blocks=(dataclasses.replace(entry, function=bumped),))
    assert not verify_certificate(graph, f, broken)


def test_cycle_claim_on_even_cycle_fails():
    graph = cycle(6)
    f = VectorFunction.constant(graph.vertices, (1, 1))
    c5, c5f = make_hard(BlockPlan("C", 2, n=5))
    certificate = is_hard(c5, c5f)
    entry = certificate.blocks[0]
    forged = dataclasses.replace(
        certificate,
        blocks=(dataclasses.replace(entry, vertices=graph.vertex_set, tag=CycleTag(1, 6, 1, 2), function=f),),
    )
    assert not verify_certificate(graph, f, forged)


def test_certificate_sums_and_non_separating_values():
    rng = random.Random(2024)
    for _ in range(50):
        graph, f = make_hard(random_plan(rng, 4, 3), seed=rng.randrange(2**32))
        certificate = is_hard(graph, f)
        cuts = separating_vertices(graph)
        for v in graph.vertices:
            total = [0] * f.p
            for entry in certificate:
                if v in entry.vertices:
                    total = [a + b for a, b in zip(total, entry.function[v])]
                    if v not in cuts:
                        assert entry.function[v] == f[v]
            assert tuple(total) == f[v]


def _tight_pairs(seed, p):
    rng = random.Random(seed)
    graph = create_arbitrary_hypergraph(rng.randint(1, 5), rng.randrange(2**32))
    values = {}
    for v in graph.vertices:
        vector = [0] * p
        for _ in range(graph.degree(v)):
            vector[rng.randrange(p)] += 1
        values[v] = vector
    return graph, VectorFunction(values, p)


@settings(max_examples=400, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1), st.sampled_from([2, 3]))
def test_hard_iff_not_partitionable(seed, p):
    graph, f = _tight_pairs(seed, p)
    certificate = is_hard(graph, f)
    verdict = brute_partitionable(graph, f)
    assert (certificate is not None) == (not verdict.partitionable)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1), st.sampled_from([2, 3]))
def test_hard_pair_properties(seed, p):
    graph, f = _tight_pairs(seed, p)
    if is_hard(graph, f) is None:
        return
    cuts = separating_vertices(graph)
    for block in blocks(graph).blocks:
        free = [v for v in block if v not in cuts]
        for u in free:
            for w in free:
                supports = sum(1 for i in range(p) if f[u][i] or f[w][i])
                assert f[u] == f[w] or supports <= 1
    for z in graph.vertices:
        if z in cuts:
            continue
        for j in range(1, p + 1):
            if f.value(z, j):
                for v in graph.vertices:
                    if v != z:
                        assert f.value(v, j) >= graph.multiplicity(z, v)
