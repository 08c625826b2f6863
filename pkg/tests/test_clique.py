import random
from itertools import combinations

import networkx as nx
import pytest

from moranspec.clique import adjacency_from_edges, clique_number, has_clique, maximum_clique


def random_graph(n, density, seed):
    rng = random.Random(seed)
    return [(u, v) for u, v in combinations(range(n), 2) if rng.random() < density]


def brute_lex_max_clique(n, edges):
    es = set(edges) | {(v, u) for u, v in edges}
    for k in range(n, 0, -1):
        for combo in combinations(range(n), k):
            if all((a, b) in es for a, b in combinations(combo, 2)):
                return list(combo)
    return []


def test_empty_and_trivial():
    assert maximum_clique([]) == []
    assert maximum_clique([0]) == [0]
    assert maximum_clique(adjacency_from_edges(3, [])) == [0]
    assert clique_number(adjacency_from_edges(4, [(0, 1), (1, 2), (0, 2)])) == 3


@pytest.mark.parametrize("seed", range(25))
def test_lexicographic_least_matches_brute_force(seed):
    n = 11
    edges = random_graph(n, 0.55, seed)
    assert maximum_clique(adjacency_from_edges(n, edges)) == brute_lex_max_clique(n, edges)


@pytest.mark.parametrize("seed", range(6))
def test_clique_number_matches_networkx(seed):
    n = 70
    edges = random_graph(n, 0.5, 100 + seed)
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    omega = max(len(c) for c in nx.find_cliques(g))
    adj = adjacency_from_edges(n, edges)
    assert clique_number(adj) == omega
    clique = maximum_clique(adj)
    assert len(clique) == omega
    assert all(g.has_edge(u, v) for u, v in combinations(clique, 2))
    assert has_clique(adj, omega) and not has_clique(adj, omega + 1)


def test_self_loop_rejected():
    with pytest.raises(ValueError):
        adjacency_from_edges(2, [(1, 1)])
