import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphweight.colorings import chi3, chi3_bruteforce, chi3_of_rows, subset_chi3
from graphweight.graphs import Graph, spanning_subgraph
from graphweight.verify import enumerate_labeled_graphs, random_graph

from conftest import complete, cycle, disjoint_union, empty, graphs, path, permute


# ---------------------------------------------------------------------------
# the brute-force oracle itself, on values checkable by hand
# ---------------------------------------------------------------------------


def test_bruteforce_spot_values():
    assert chi3_bruteforce(empty(0)) == 1
    assert chi3_bruteforce(empty(4)) == 81
    assert chi3_bruteforce(complete(3)) == 6  # 3 * 2 * 1
    assert chi3_bruteforce(complete(4)) == 0
    assert chi3_bruteforce(cycle(4)) == 18
    assert chi3_bruteforce(cycle(5)) == 30


def test_bruteforce_size_guard():
    with pytest.raises(ValueError):
        chi3_bruteforce(empty(11))


# ---------------------------------------------------------------------------
# production counter vs oracle
# ---------------------------------------------------------------------------


def test_chi3_spot_values():
    assert chi3(empty(0)) == 1
    assert chi3(empty(5)) == 243
    assert chi3(complete(3)) == 6
    assert chi3(complete(4)) == 0
    assert chi3(cycle(4)) == 18
    assert chi3(cycle(5)) == 30
    assert chi3(path(6)) == 3 * 2 ** 5


def test_chi3_matches_bruteforce_exhaustive_small():
    for n in range(5):
        for g in enumerate_labeled_graphs(n):
            assert chi3(g) == chi3_bruteforce(g)


def test_chi3_matches_bruteforce_200_random():
    from fractions import Fraction

    for seed in range(200):
        n = 5 + seed % 6
        g = random_graph(n, Fraction(1 + seed % 3, 4), seed=900 + seed)
        assert chi3(g) == chi3_bruteforce(g), seed


def test_chi3_structured_shapes():
    # tree, unicyclic, bicyclic, and a disconnected mix, against the oracle
    tree = Graph.from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)])
    assert chi3(tree) == chi3_bruteforce(tree)
    unicyclic = Graph.from_edges(7, [(0, 1), (1, 2), (2, 0), (1, 3), (3, 4), (2, 5)])
    assert chi3(unicyclic) == chi3_bruteforce(unicyclic)
    bicyclic = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (4, 5)])
    assert chi3(bicyclic) == chi3_bruteforce(bicyclic)
    mixed = disjoint_union(cycle(4), path(3))
    assert chi3(mixed) == chi3_bruteforce(mixed)


def test_chi3_petersen_matches_oracle():
    petersen = Graph.from_edges(
        10,
        [(i, (i + 1) % 5) for i in range(5)]
        + [(i, i + 5) for i in range(5)]
        + [(5 + i, 5 + (i + 2) % 5) for i in range(5)],
    )
    assert chi3(petersen) == chi3_bruteforce(petersen)


# ---------------------------------------------------------------------------
# properties
# ---------------------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=5), graphs(max_n=5))
def test_chi3_multiplicative_over_disjoint_union(g1, g2):
    assert chi3(disjoint_union(g1, g2)) == chi3(g1) * chi3(g2)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7), st.randoms(use_true_random=False))
def test_chi3_relabel_invariant(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    assert chi3(permute(g, perm)) == chi3(g)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=6))
def test_chi3_edge_removal_monotone(g):
    base = chi3(g)
    assert 0 <= base <= 3 ** g.n
    for t in range(len(g.edges)):
        sub = spanning_subgraph(g, ((1 << len(g.edges)) - 1) ^ (1 << t))
        assert chi3(sub) >= base


# ---------------------------------------------------------------------------
# the subset engine exactly as the invariant sum drives it
# ---------------------------------------------------------------------------


@settings(max_examples=25, deadline=None)
@given(graphs(min_n=1, max_n=6))
def test_subset_engine_against_oracle_over_all_subsets(g):
    n, m = g.n, len(g.edges)
    einc = [0] * n
    for t, (u, v) in enumerate(g.edges):
        einc[u] |= 1 << t
        einc[v] |= 1 << t
    adj = [0] * n
    deg = [0] * n
    live = 0
    emask = 0
    memo = {}
    assert subset_chi3(adj, deg, live, n, einc, emask, memo) == 3 ** n
    for t in range(1, 1 << m):
        ebit = t & -t
        u, v = g.edges[ebit.bit_length() - 1]
        bu, bv = 1 << u, 1 << v
        emask ^= ebit
        if adj[u] & bv:
            adj[u] ^= bv
            adj[v] ^= bu
            deg[u] -= 1
            deg[v] -= 1
            if not deg[u]:
                live ^= bu
            if not deg[v]:
                live ^= bv
        else:
            adj[u] |= bv
            adj[v] |= bu
            if not deg[u]:
                live |= bu
            if not deg[v]:
                live |= bv
            deg[u] += 1
            deg[v] += 1
        got = subset_chi3(adj, deg, live, n, einc, emask, memo)
        assert got == chi3_bruteforce(spanning_subgraph(g, emask))


def test_chi3_of_rows_matches_chi3():
    g = cycle(6)
    assert chi3_of_rows(g.adj, g.n) == chi3(g)
