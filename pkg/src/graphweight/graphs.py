"""Simple undirected labeled graphs with bitmask adjacency.

Vertices are 0..n-1.  Adjacency is stored as one Python int per vertex,
bit j of adj[i] set iff {i, j} is an edge.  Vertex subsets and edge
subsets are plain int bitmasks (``VertexMask`` / ``EdgeMask``); a vertex
mask selects vertices by bit position, an edge mask selects edges by
their index in the graph's sorted edge list.

Python ints are arbitrary width, so there is no hard cap on n for
programmatic construction; graph6 text input is limited to n <= 62
(single-byte size form only).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

VertexMask = int
EdgeMask = int


class GraphFormatError(ValueError):
    """Malformed graph input text (graph6 or edge list)."""


class UnsupportedSizeError(GraphFormatError):
    """graph6 input uses the extended size header (n > 62)."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    Invariants (checked on construction): adjacency is symmetric with no
    loops, ``edges`` is the lexicographically sorted list of (i, j) pairs
    with i < j, consistent with ``adj``.
    """

    n: int
    adj: tuple[int, ...]
    edges: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {i} has bits beyond vertex {self.n - 1}")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
        expected = []
        for i in range(self.n):
            row = self.adj[i] >> (i + 1) << (i + 1)
            while row:
                b = row & -row
                row ^= b
                j = b.bit_length() - 1
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency at ({i}, {j})")
                expected.append((i, j))
        expected.sort()
        if list(self.edges) != expected:
            raise ValueError("edge list inconsistent with adjacency")

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from unordered vertex pairs.

        Duplicate pairs (in either orientation) collapse to one edge;
        loops are rejected.
        """
        adj = [0] * n
        for u, v in pairs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"vertex out of range in edge ({u}, {v})")
            if u == v:
                raise ValueError(f"loop edge ({u}, {v}) not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), _edges_of_adj(n, adj))

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> "Graph":
        """Build a graph by selecting potential edges of the complete graph.

        Bit t of ``mask`` selects the t-th pair of ``all_pairs(n)``.
        """
        pairs = all_pairs(n)
        if mask >> len(pairs):
            raise ValueError("edge mask has bits beyond the last potential edge")
        adj = [0] * n
        edges = []
        m = mask
        while m:
            b = m & -m
            m ^= b
            u, v = pairs[b.bit_length() - 1]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            edges.append((u, v))
        return cls(n, tuple(adj), tuple(edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def full_vertex_mask(self) -> VertexMask:
        return (1 << self.n) - 1

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()


def all_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """All C(n,2) vertex pairs (i, j) with i < j, lexicographically sorted."""
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


def _edges_of_adj(n: int, adj: list[int]) -> tuple[tuple[int, int], ...]:
    edges = []
    for i in range(n):
        row = adj[i] >> (i + 1) << (i + 1)
        while row:
            b = row & -row
            row ^= b
            edges.append((i, b.bit_length() - 1))
    edges.sort()
    return tuple(edges)


def check_vertex_mask(g: Graph, mask: VertexMask) -> None:
    if mask < 0 or mask >> g.n:
        raise ValueError(f"vertex mask {mask:#x} selects vertices outside 0..{g.n - 1}")


def check_edge_mask(g: Graph, mask: EdgeMask) -> None:
    if mask < 0 or mask >> len(g.edges):
        raise ValueError(f"edge mask {mask:#x} selects edges outside the edge list")


# ---------------------------------------------------------------------------
# graph6 text format (single-byte size form, n <= 62)
#
# Byte 0 is n + 63.  The remaining ceil(n(n-1)/2 / 6) bytes pack the upper
# triangle of the adjacency matrix in column order (0,1),(0,2),(1,2),(0,3),...
# six bits per byte, first bit in the most significant of the six, byte value
# = bits + 63.  Unused trailing bits must be zero.
# ---------------------------------------------------------------------------


def _column_order_pairs(n: int) -> Iterator[tuple[int, int]]:
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a Graph.

    Rejects extended size headers (n > 62) with UnsupportedSizeError and
    any other malformed input with GraphFormatError.
    """
    s = text.strip()
    if not s:
        raise GraphFormatError("empty graph6 string")
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError:
        raise GraphFormatError("invalid graph6 byte (non-ascii)") from None
    for byte in data:
        if byte < 63 or byte > 126:
            raise GraphFormatError(f"invalid graph6 byte {byte}")
    if data[0] == 126:
        raise UnsupportedSizeError("unsupported size: extended graph6 header (n > 62)")
    n = data[0] - 63
    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    if len(data) != 1 + nbytes:
        raise GraphFormatError(
            f"graph6 length mismatch: expected {1 + nbytes} bytes for n={n}, got {len(data)}"
        )
    adj = [0] * n
    t = 0
    for i, j in _column_order_pairs(n):
        byte = data[1 + t // 6] - 63
        if byte >> (5 - t % 6) & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        t += 1
    # trailing pad bits must be zero
    if npairs % 6:
        pad = data[-1] - 63 & (1 << (6 - npairs % 6)) - 1
        if pad:
            raise GraphFormatError("nonzero padding bits in graph6 data")
    return Graph(n, tuple(adj), _edges_of_adj(n, adj))


def encode_graph6(g: Graph) -> str:
    """Encode a graph as a single graph6 line (inverse of parse_graph6)."""
    if g.n > 62:
        raise UnsupportedSizeError(f"cannot encode n={g.n} > 62 in single-byte graph6")
    out = [g.n + 63]
    acc = 0
    nbits = 0
    for i, j in _column_order_pairs(g.n):
        acc = acc << 1 | (g.adj[i] >> j & 1)
        nbits += 1
        if nbits == 6:
            out.append(acc + 63)
            acc = 0
            nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out).decode("ascii")


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: first line ``n <count>``, then ``u v`` lines.

    Duplicate edges collapse silently; loops and out-of-range vertices are
    errors.  Blank lines are ignored.
    """
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise GraphFormatError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise GraphFormatError(f"malformed header line: {lines[0]!r}")
    try:
        n = int(head[1])
    except ValueError:
        raise GraphFormatError(f"malformed vertex count: {head[1]!r}") from None
    if n < 0:
        raise GraphFormatError("vertex count must be nonnegative")
    pairs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"malformed edge line: {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"malformed edge line: {ln!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range in edge line: {ln!r}")
        if u == v:
            raise GraphFormatError(f"loop edge not allowed: {ln!r}")
        pairs.append((u, v))
    return Graph.from_edges(n, pairs)


# ---------------------------------------------------------------------------
# Subgraphs and subset predicates
# ---------------------------------------------------------------------------


def mask_vertices(mask: VertexMask) -> list[int]:
    """Set bit positions of a mask, ascending."""
    out = []
    while mask:
        b = mask & -mask
        mask ^= b
        out.append(b.bit_length() - 1)
    return out


def induced_subgraph(g: Graph, u: VertexMask) -> Graph:
    """Subgraph induced by the vertex subset ``u``.

    Vertices are relabeled 0..|u|-1 in increasing original-index order.
    """
    check_vertex_mask(g, u)
    verts = mask_vertices(u)
    pos = {v: a for a, v in enumerate(verts)}
    adj = [0] * len(verts)
    for a, v in enumerate(verts):
        row = g.adj[v] & u
        while row:
            b = row & -row
            row ^= b
            adj[a] |= 1 << pos[b.bit_length() - 1]
    return Graph(len(verts), tuple(adj), _edges_of_adj(len(verts), adj))


def spanning_subgraph(g: Graph, ep: EdgeMask) -> Graph:
    """Subgraph on the same vertex set keeping only the selected edges."""
    check_edge_mask(g, ep)
    adj = [0] * g.n
    edges = []
    m = ep
    while m:
        b = m & -m
        m ^= b
        u, v = g.edges[b.bit_length() - 1]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        edges.append((u, v))
    return Graph(g.n, tuple(adj), tuple(edges))


def cut_size(g: Graph, u: VertexMask) -> int:
    """Number of edges with exactly one endpoint in ``u``."""
    check_vertex_mask(g, u)
    total = 0
    rest = u
    while rest:
        b = rest & -rest
        rest ^= b
        total += (g.adj[b.bit_length() - 1] & ~u).bit_count()
    return total


def degree_in(g: Graph, i: int, u: VertexMask) -> int:
    """Number of neighbors of vertex ``i`` inside the subset ``u``."""
    check_vertex_mask(g, u)
    return (g.adj[i] & u).bit_count()


def is_eulerian_induced(g: Graph, u: VertexMask) -> bool:
    """True iff every vertex of ``u`` has an even number of neighbors in ``u``.

    Connectivity is not required; the empty subset qualifies.
    """
    check_vertex_mask(g, u)
    rest = u
    while rest:
        b = rest & -rest
        rest ^= b
        if (g.adj[b.bit_length() - 1] & u).bit_count() & 1:
            return False
    return True
