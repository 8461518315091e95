import random

import networkx as nx

from algorithms.data_structures.hypergraph import Hypergraph
from algorithms.data_structures.vector_function import VectorFunction
from algorithms.hardpair import is_hard, verify_certificate
from algorithms.hypercore import from_networkx, random_hypergraph
from algorithms.oracle import brute_partitionable, brute_strictly_degenerate
from algorithms.partition import solve, verify_partition


def create_connected_random_graph(n, p, seed):
    rng = random.Random(seed)
    G = nx.gnp_random_graph(n, p, seed=rng.randrange(2**32))

    # check connectedness
    if nx.is_connected(G):
        return from_networkx(G)

    # Stitching the components together
    components = list(nx.connected_components(G))
    main_component = list(components[0])

    for comp in components[1:]:
        # Select one random node from the main component
        node_from_main = rng.choice(main_component)
        node_from_other = rng.choice(sorted(comp))
        G.add_edge(node_from_main, node_from_other)
        main_component.extend(list(comp))

    return from_networkx(G)


def create_arbitrary_hypergraph(n, seed, max_edges=8, max_arity=3, max_mult=2):
    rng = random.Random(seed)
    m = 0 if n == 1 else rng.randint(1, max(1, max_edges - n + 1))
    return random_hypergraph(n, m, max_arity, max_mult, seed=rng.randrange(2**32), connected=True)


def add_random_function(graph, p, seed, slack=0):
    """Split d_H(v) + slack over p coordinates at random."""
    rng = random.Random(seed)
    values = {}
    for v in graph.vertices:
        vector = [0] * p
        for _ in range(graph.degree(v) + slack):
            vector[rng.randrange(p)] += 1
        values[v] = vector
    return VectorFunction(values, p)


def brute_col(graph):
    k = 0
    while not brute_strictly_degenerate(graph, dict.fromkeys(graph.vertices, k)):
        k += 1
    return k


def compare_partition_results(graph, f):
    """This function compares solve and is_hard against the brute-force oracle on a connected pair"""

    verdict = brute_partitionable(graph, f)
    certificate = is_hard(graph, f)
    result = solve(graph, f)

    if verdict.partitionable:
        return (
            certificate is None
            and result.partition is not None
            and verify_partition(graph, f, result.partition)
            and verify_partition(graph, f, verdict.witness)
        )

    return (
        certificate is not None
        and verify_certificate(graph, f, certificate)
        and result.partition is None
        and len(result.certificates) == 1
    )


def single_hyperedge():
    return Hypergraph("abc", [("e", "abc")])


def path_abc():
    return Hypergraph("abc", [("e1", "ab"), ("e2", "bc")])
