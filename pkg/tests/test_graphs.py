import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphweight.graphs import (
    Graph,
    GraphFormatError,
    UnsupportedSizeError,
    all_pairs,
    cut_size,
    degree_in,
    encode_graph6,
    induced_subgraph,
    is_eulerian_induced,
    parse_edge_list,
    parse_graph6,
    spanning_subgraph,
)

from conftest import complete, cycle, empty, graphs, graphs_with_subset

K3 = complete(3)
C4 = cycle(4)


# ---------------------------------------------------------------------------
# graph6 codec
# ---------------------------------------------------------------------------


def test_parse_graph6_empty_on_three():
    g = parse_graph6("B?")
    assert g.n == 3 and g.edges == ()


def test_parse_graph6_k3():
    g = parse_graph6("Bw")
    assert g.n == 3 and g.edges == ((0, 1), (0, 2), (1, 2))


def test_parse_graph6_single_vertex():
    g = parse_graph6("@")
    assert g.n == 1 and g.edges == ()


def test_parse_graph6_zero_vertices():
    assert parse_graph6("?").n == 0


def test_encode_graph6_examples():
    assert encode_graph6(empty(3)) == "B?"
    assert encode_graph6(K3) == "Bw"
    assert encode_graph6(empty(1)) == "@"


def test_parse_graph6_rejects_bad_bytes():
    with pytest.raises(GraphFormatError):
        parse_graph6("B>")
    with pytest.raises(GraphFormatError):
        parse_graph6("B\x1f")
    with pytest.raises(GraphFormatError):
        parse_graph6("Bé")  # non-ascii must not alias to '?'


def test_parse_graph6_rejects_wrong_length():
    with pytest.raises(GraphFormatError):
        parse_graph6("B")
    with pytest.raises(GraphFormatError):
        parse_graph6("B??")


def test_parse_graph6_rejects_nonzero_padding():
    # n=3 uses 3 of 6 bits; 63 + 0b000111 sets padding bits
    with pytest.raises(GraphFormatError, match="padding"):
        parse_graph6("B" + chr(63 + 7))


def test_parse_graph6_rejects_extended_header():
    with pytest.raises(UnsupportedSizeError, match="unsupported size"):
        parse_graph6("~??")


def test_encode_graph6_rejects_large():
    with pytest.raises(UnsupportedSizeError):
        encode_graph6(empty(63))


def test_graph6_round_trip_62_vertices():
    g = empty(62)
    assert parse_graph6(encode_graph6(g)) == g


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=13))
def test_graph6_round_trip(g):
    s = encode_graph6(g)
    assert parse_graph6(s) == g
    assert encode_graph6(parse_graph6(s)) == s


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=10))
def test_graph6_matches_networkx(g):
    nx = pytest.importorskip("networkx")
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    assert nx.to_graph6_bytes(h, header=False).decode().strip() == encode_graph6(g)


# ---------------------------------------------------------------------------
# edge-list format
# ---------------------------------------------------------------------------


def test_parse_edge_list_k2():
    g = parse_edge_list("n 2\n0 1")
    assert g.n == 2 and g.edges == ((0, 1),)


def test_parse_edge_list_duplicates_collapse():
    g = parse_edge_list("n 3\n0 1\n1 0")
    assert g.n == 3 and g.edges == ((0, 1),)


def test_parse_edge_list_rejects_loop():
    with pytest.raises(GraphFormatError, match="loop"):
        parse_edge_list("n 1\n0 0")


def test_parse_edge_list_rejects_out_of_range():
    with pytest.raises(GraphFormatError):
        parse_edge_list("n 2\n0 2")


def test_parse_edge_list_rejects_malformed():
    with pytest.raises(GraphFormatError):
        parse_edge_list("vertices 2\n0 1")
    with pytest.raises(GraphFormatError):
        parse_edge_list("n 2\n0 1 2")
    with pytest.raises(GraphFormatError):
        parse_edge_list("n x")
    with pytest.raises(GraphFormatError):
        parse_edge_list("")


def test_parse_edge_list_isolated_vertices():
    g = parse_edge_list("n 4\n1 2")
    assert g.n == 4 and g.edges == ((1, 2),)


# ---------------------------------------------------------------------------
# Graph construction and invariants
# ---------------------------------------------------------------------------


def test_graph_rejects_asymmetric_adjacency():
    with pytest.raises(ValueError, match="asymmetric"):
        Graph(2, (0b10, 0b00), ((0, 1),))


def test_graph_rejects_loop_bit():
    with pytest.raises(ValueError, match="loop"):
        Graph(1, (0b1,), ())


def test_graph_rejects_inconsistent_edges():
    with pytest.raises(ValueError, match="edge list"):
        Graph(2, (0b10, 0b01), ())


def test_from_edges_rejects_loop_and_range():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 5)])


def test_all_pairs_order():
    assert all_pairs(4) == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def test_from_edge_mask():
    g = Graph.from_edge_mask(3, 0b111)
    assert g == K3
    with pytest.raises(ValueError):
        Graph.from_edge_mask(3, 0b1000)


# ---------------------------------------------------------------------------
# subgraphs
# ---------------------------------------------------------------------------


def test_induced_subgraph_k3_pair():
    assert induced_subgraph(K3, 0b011) == complete(2)


def test_induced_subgraph_empty_subset():
    assert induced_subgraph(K3, 0) == empty(0)


def test_induced_subgraph_c4_triple():
    # C4 retains edges 01 and 12 on {0,1,2}: a path
    g = induced_subgraph(C4, 0b0111)
    assert g.n == 3 and g.edges == ((0, 1), (1, 2))


def test_induced_relabels_in_order():
    g = induced_subgraph(C4, 0b1010)  # vertices 1, 3 not adjacent in C4
    assert g.n == 2 and g.edges == ()


def test_spanning_subgraph_cases():
    assert spanning_subgraph(K3, 0) == empty(3)
    assert spanning_subgraph(K3, 0b111) == K3
    one = spanning_subgraph(K3, 0b001)
    assert one.n == 3 and one.edges == ((0, 1),)


def test_mask_validation():
    with pytest.raises(ValueError):
        induced_subgraph(K3, 0b1000)
    with pytest.raises(ValueError):
        spanning_subgraph(K3, 0b1000)
    with pytest.raises(ValueError):
        cut_size(K3, -1)


# ---------------------------------------------------------------------------
# cut, degree, eulerian predicates
# ---------------------------------------------------------------------------


def test_cut_size_examples():
    assert cut_size(K3, 0b001) == 2
    assert cut_size(K3, 0) == 0
    assert cut_size(C4, 0b0101) == 4


def test_degree_in_examples():
    assert degree_in(K3, 0, 0b110) == 2
    assert degree_in(K3, 0, 0) == 0
    assert degree_in(C4, 0, 0b1010) == 2


def test_is_eulerian_induced_examples():
    assert is_eulerian_induced(K3, 0)
    assert is_eulerian_induced(K3, 0b111)
    assert not is_eulerian_induced(K3, 0b011)


@settings(max_examples=120, deadline=None)
@given(graphs_with_subset())
def test_cut_complement_symmetry(gu):
    g, u = gu
    assert cut_size(g, u) == cut_size(g, g.full_vertex_mask() & ~u)


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_handshake(g):
    full = g.full_vertex_mask()
    assert sum(degree_in(g, i, full) for i in range(g.n)) == 2 * len(g.edges)


@settings(max_examples=120, deadline=None)
@given(graphs_with_subset())
def test_edge_contribution_identity(gu):
    # sum of degrees into U = twice the induced edges plus the cut
    g, u = gu
    total = sum(degree_in(g, i, u) for i in range(g.n))
    assert total == 2 * len(induced_subgraph(g, u).edges) + cut_size(g, u)


@settings(max_examples=100, deadline=None)
@given(graphs_with_subset())
def test_eulerian_matches_degree_parity(gu):
    g, u = gu
    expected = all(
        degree_in(g, i, u) % 2 == 0 for i in range(g.n) if u >> i & 1
    )
    assert is_eulerian_induced(g, u) == expected


@settings(max_examples=80, deadline=None)
@given(graphs_with_subset())
def test_subgraphs_satisfy_graph_invariants(gu):
    # Graph.__post_init__ re-checks all structural invariants
    g, u = gu
    induced_subgraph(g, u)
    if g.edges:
        spanning_subgraph(g, u & ((1 << len(g.edges)) - 1))
