from hypothesis import strategies as st

from graphweight.graphs import Graph


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def empty(n: int) -> Graph:
    return Graph.from_edges(n, [])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shifted = [(u + g1.n, v + g1.n) for u, v in g2.edges]
    return Graph.from_edges(g1.n + g2.n, list(g1.edges) + shifted)


def permute(g: Graph, perm: list[int]) -> Graph:
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges])


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    npairs = n * (n - 1) // 2
    mask = draw(st.integers(min_value=0, max_value=(1 << npairs) - 1))
    return Graph.from_edge_mask(n, mask)


@st.composite
def graphs_with_subset(draw, min_n=0, max_n=7):
    g = draw(graphs(min_n=min_n, max_n=max_n))
    u = draw(st.integers(min_value=0, max_value=(1 << g.n) - 1))
    return g, u
