import random

import pytest
from hypothesis import given, settings, strategies as st

from algorithms.data_structures.hypergraph import Hypergraph
from algorithms.data_structures.vector_function import VectorFunction
from algorithms.errors import InputError, SizeGuardError
from algorithms.hardpair import make_hard, random_plan
from algorithms.hypercore import complete, cycle
from algorithms.oracle import brute_partitionable, brute_strictly_degenerate
from algorithms.partition import verify_partition

from .utils import add_random_function, create_arbitrary_hypergraph


def test_brute_strictly_degenerate_examples():
    c5 = cycle(5)
    assert not brute_strictly_degenerate(c5, dict.fromkeys(c5.vertices, 2))
    edgeless = Hypergraph("abcd")
    assert brute_strictly_degenerate(edgeless, dict.fromkeys("abcd", 1))
    with pytest.raises(InputError):
        brute_strictly_degenerate(edgeless, {"a": 1})


def test_brute_partitionable_examples():
    k4 = complete(4)
    assert not brute_partitionable(k4, VectorFunction.constant(k4.vertices, (1, 1, 1))).partitionable
    c4 = cycle(4)
    verdict = brute_partitionable(c4, VectorFunction.constant(c4.vertices, (1, 1)))
    assert verdict.partitionable
    # first valid assignment in lexicographic order
    assert verdict.witness.assignment == {"v0": 1, "v1": 2, "v2": 1, "v3": 2}


def test_guards():
    big = cycle(13)
    with pytest.raises(SizeGuardError):
        brute_strictly_degenerate(big, dict.fromkeys(big.vertices, 2))
    eleven = cycle(11)
    with pytest.raises(SizeGuardError):
        brute_partitionable(eleven, VectorFunction.constant(eleven.vertices, (1, 1)))
    nine = cycle(9)
    with pytest.raises(SizeGuardError):
        brute_partitionable(nine, VectorFunction.constant(nine.vertices, (1,) * 7))


def test_generated_hard_pairs_are_not_partitionable():
    rng = random.Random(17)
    checked = 0
    while checked < 60:
        p = rng.randint(1, 3)
        graph, f = make_hard(random_plan(rng, 3, p), seed=rng.randrange(2**32))
        if graph.order > 8:
            continue
        checked += 1
        assert not brute_partitionable(graph, f).partitionable


@settings(max_examples=150, deadline=None)
@given(
    st.integers(min_value=1, max_value=6),
    st.integers(min_value=0, max_value=2**32 - 1),
    st.integers(min_value=1, max_value=3),
)
def test_witness_passes_verification(n, seed, p):
    graph = create_arbitrary_hypergraph(n, seed)
    f = add_random_function(graph, p, seed, slack=1)
    verdict = brute_partitionable(graph, f)
    assert verdict.partitionable
    assert verify_partition(graph, f, verdict.witness)
