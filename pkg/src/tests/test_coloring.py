import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from algorithms.catalogue import degree_six_graph, list_instance, petersen
from algorithms.coloring import (
    Coloring,
    ListAssignment,
    chi_and_chi_list,
    chromatic_number,
    degree_constrained_partition,
    is_brooks_extremal,
    is_k_choosable,
    is_Lxs_choosable,
    list_chromatic_number,
    list_color,
    list_to_vector,
    point_partition_number,
)
from algorithms.data_structures.hypergraph import Hypergraph
from algorithms.degeneracy import col, constant, is_strictly_degenerate
from algorithms.errors import InputError, PreconditionError, SizeGuardError
from algorithms.hardpair import CompleteTag, MonoTag, verify_certificate
from algorithms.hypercore import as_multi_complete, as_multi_cycle, complete, cycle, from_networkx, path, t_fold
from algorithms.oracle import brute_partitionable

from .utils import create_arbitrary_hypergraph, single_hyperedge


def test_list_to_vector():
    c5 = cycle(5)
    f = list_to_vector(c5, ListAssignment.uniform(c5.vertices, "12"), 1)
    assert set(f.values()) == {(1, 1)}

    graph, lists = list_instance()
    assert list_to_vector(graph, lists)["v1"] == (1, 1, 0, 1)

    pair = Hypergraph("ab")
    f = list_to_vector(pair, ListAssignment.of({"a": "12", "b": "3"}), s=2)
    assert f["b"] == (0, 0, 2)

    with pytest.raises(PreconditionError):
        list_to_vector(pair, ListAssignment.of({"a": "1", "b": "1"}), s=0)
    with pytest.raises(InputError):
        list_to_vector(pair, ListAssignment.of({"a": "1"}))


def test_list_color_examples():
    c5 = cycle(5)
    result = list_color(c5, ListAssignment.uniform(c5.vertices, "12"))
    assert not result.is_colorable and len(result.certificates) == 1

    c4 = cycle(4)
    lists = ListAssignment.uniform(c4.vertices, "12")
    result = list_color(c4, lists)
    assert result.coloring.is_proper(c4) and result.coloring.respects(lists)

    edge = single_hyperedge()
    result = list_color(edge, ListAssignment.uniform(edge.vertices, "1"))
    (certificate,) = result.certificates.values()
    assert [entry.tag for entry in certificate] == [MonoTag(1)]


def test_list_color_needs_long_lists_unless_exhaustive():
    graph, lists = list_instance()
    with pytest.raises(PreconditionError):
        list_color(graph, lists)
    result = list_color(graph, lists, exhaustive=True)
    assert not result.certificates
    verdict = brute_partitionable(graph, list_to_vector(graph, lists))
    assert result.is_colorable == verdict.partitionable
    if result.is_colorable:
        assert result.coloring.is_proper(graph) and result.coloring.respects(lists)


def test_coloring_checks():
    graph = path(3)
    assert Coloring({"v0": "a", "v1": "b", "v2": "a"}).is_proper(graph)
    assert not Coloring({"v0": "a", "v1": "a", "v2": "b"}).is_proper(graph)
    assert not Coloring({"v0": "a", "v1": "b"}).is_proper(graph)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=6), st.integers(min_value=0, max_value=2**32 - 1))
def test_list_color_outcomes(n, seed):
    rng = random.Random(seed)
    graph = create_arbitrary_hypergraph(n, seed)
    colours = [str(c) for c in range(1, graph.max_degree() + 1)]
    lists = ListAssignment.of({v: rng.sample(colours, graph.degree(v)) for v in graph.vertices})
    result = list_color(graph, lists)
    if result.is_colorable:
        assert result.coloring.is_proper(graph) and result.coloring.respects(lists)
        return
    f = list_to_vector(graph, lists)
    for component, certificate in result.certificates.items():
        assert verify_certificate(graph.induced(component), f.restrict(component), certificate)
        for entry in certificate:
            block = graph.induced(entry.vertices)
            shape = as_multi_cycle(block)
            assert (
                as_multi_complete(block) == 1
                or (shape is not None and shape[0] == 1 and shape[1] % 2 == 1)
                or block.size <= 1
            )


# --- degree-constrained partitions ----------------------------------------------


def test_degree_six_graph():
    graph = degree_six_graph()
    partition = degree_constrained_partition(graph, (3, 3))
    for i in (1, 2):
        part = graph.induced(partition.members(i))
        assert part.max_degree() <= 3 and col(part) <= 3


def test_petersen_splits_into_independent_set_and_forest():
    graph = petersen()
    partition = degree_constrained_partition(graph, (1, 2))
    independent = graph.induced(partition.members(1))
    forest = graph.induced(partition.members(2))
    assert independent.size == 0
    assert nx.is_forest(forest.skeleton())
    assert forest.max_degree() <= 2


@pytest.mark.parametrize(
    "graph, k",
    [
        (complete(5), (2, 2)),
        (t_fold(complete(3), 2), (2, 2)),
        (cycle(5), (1, 1)),
        (t_fold(cycle(7), 2), (2, 2)),
        (cycle(6), (1,)),
        (cycle(6), (1, 0)),
        (complete(5), (1, 1, 1)),
        (Hypergraph("abcd", [("x", "ab"), ("y", "cd")]), (1, 1)),
    ],
)
def test_degree_constrained_preconditions(graph, k):
    with pytest.raises(PreconditionError):
        degree_constrained_partition(graph, k)


# --- point partitions and L x s choosability -------------------------------------


def test_point_partition_number_of_k5():
    graph = complete(5)
    result = point_partition_number(graph, 2)
    assert result.value == 3
    refuted = dict(result.refuted)
    (certificate,) = refuted[2].values()
    assert [entry.tag for entry in certificate] == [CompleteTag(1, (2, 2))]
    for i in range(1, 4):
        members = result.partition.members(i)
        assert is_strictly_degenerate(graph.induced(members), constant(graph.induced(members), 2))


def test_point_partition_conventions():
    c5 = cycle(5)
    assert point_partition_number(c5, 0, "lick-white").value == 3
    assert point_partition_number(c5, 1, "strict").value == 3
    assert point_partition_number(c5, 1, "lick-white").value == 2
    assert point_partition_number(Hypergraph(), 1).value == 0
    with pytest.raises(PreconditionError):
        point_partition_number(c5, 0, "strict")
    with pytest.raises(InputError):
        point_partition_number(c5, 1, "loose")


def test_single_class_is_decided_by_peeling_beyond_the_search_guard():
    star = from_networkx(nx.star_graph(20))
    result = point_partition_number(star, 2)
    assert result.value == 1
    assert result.partition.members(1) == star.vertex_set
    # one class at level 1 fails, two classes stay under the degree and need the search
    with pytest.raises(SizeGuardError):
        point_partition_number(star, 1)


def test_regular_block_with_singleton_lists_is_refuted():
    c5 = cycle(5)
    result = is_Lxs_choosable(c5, ListAssignment.uniform(c5.vertices, "1"), 2)
    (certificate,) = result.certificates.values()
    assert [entry.tag for entry in certificate] == [MonoTag(1)]


def test_lxs_choosable_petersen():
    graph = petersen()
    rng = random.Random(35)
    for _ in range(10):
        lists = ListAssignment.of({v: rng.sample("123", 2) for v in graph.vertices})
        result = is_Lxs_choosable(graph, lists, 2)
        assert result.coloring.respects(lists)
        for colour in lists.palette:
            members = [v for v, c in result.coloring.assignment.items() if c == colour]
            part = graph.induced(members)
            assert is_strictly_degenerate(part, constant(part, 2))


def test_lxs_precondition():
    c5 = cycle(5)
    with pytest.raises(PreconditionError):
        is_Lxs_choosable(c5, ListAssignment.uniform(c5.vertices, "1"), 1)


def test_lxs_exhaustive_decides_short_lists():
    c5 = cycle(5)
    refuted = is_Lxs_choosable(c5, ListAssignment.uniform(c5.vertices, "1"), 1, exhaustive=True)
    assert refuted.coloring is None and refuted.certificates == {}

    star = from_networkx(nx.star_graph(3))
    lists = ListAssignment.uniform(star.vertices, "1")
    with pytest.raises(PreconditionError):
        is_Lxs_choosable(star, lists, 2)
    result = is_Lxs_choosable(star, lists, 2, exhaustive=True)
    assert result.s == 2
    assert result.coloring.classes_degenerate(star, 2)
    assert not result.coloring.is_proper(star)


def test_classes_degenerate_at_level_one_is_properness():
    c4 = cycle(4)
    proper = Coloring({v: str(i % 2) for i, v in enumerate(c4.vertices)})
    assert proper.classes_degenerate(c4) and proper.is_proper(c4)
    single = Coloring(dict.fromkeys(c4.vertices, "0"))
    assert not single.classes_degenerate(c4)
    assert not single.classes_degenerate(c4, 2)
    assert single.classes_degenerate(path(4), 2)
    assert not Coloring({}).classes_degenerate(c4, 2)


# --- chromatic and list-chromatic numbers ---------------------------------------


@pytest.mark.parametrize(
    "graph, chi, chi_list",
    [
        (cycle(5), 3, 3),
        (cycle(4), 2, 2),
        (complete(4), 4, 4),
        (single_hyperedge(), 2, 2),
        (path(1), 1, 1),
        (from_networkx(nx.complete_bipartite_graph(2, 3)), 2, 2),
        (petersen(), 3, 3),
    ],
)
def test_chi_and_chi_list(graph, chi, chi_list):
    assert chi_and_chi_list(graph) == (chi, chi_list)
    assert chi_list <= col(graph) <= graph.max_degree() + 1


@pytest.mark.slow
def test_k24_is_not_2_choosable():
    graph = from_networkx(nx.complete_bipartite_graph(2, 4))
    assert not is_k_choosable(graph, 2)
    assert chi_and_chi_list(graph) == (2, 3)


def test_chromatic_number_colouring_is_proper():
    graph = t_fold(cycle(7), 3)
    k, colouring = chromatic_number(graph)
    assert k == 3 and colouring.is_proper(graph)
    assert chromatic_number(Hypergraph()) == (0, Coloring({}))


def test_size_guards():
    with pytest.raises(SizeGuardError):
        list_chromatic_number(cycle(12))
    with pytest.raises(SizeGuardError):
        chi_and_chi_list(cycle(12))


@pytest.mark.parametrize(
    "graph, extremal",
    [
        (complete(4), True),
        (cycle(5), True),
        (single_hyperedge(), True),
        (complete(1), True),
        (cycle(4), False),
        (path(4), False),
        (petersen(), False),
        (t_fold(cycle(5), 2), False),
    ],
)
def test_brooks_extremal(graph, extremal):
    assert is_brooks_extremal(graph) == extremal
