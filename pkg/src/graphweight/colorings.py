"""Exact counting of proper 3-colorings.

The public counter factors over connected components and counts inside
each component; a plain 3**n brute-force evaluator is kept as an
independent test oracle.

``subset_chi3`` is the engine used by the invariant sums, which count
colorings of millions of spanning subgraphs per graph.  Each degree-1
vertex contributes an exact factor 2, so components are peeled to their
2-core first:

  tree               3 * 2**(k-1)
  cycle core         (2**c + 2*(-1)**c) * 2**(k-c)
  multicyclic core   backtracking over a connected vertex order with the
                     first color fixed (times 3), memoized by the
                     component's edge-index bitmask

The closed forms are what the backtracking computes on those shapes;
the test suite cross-checks the whole engine against the brute-force
oracle.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .graphs import Graph

# Multicyclic memo entries only bound memory; correctness never depends
# on a hit.
_MEMO_CAP = 2_000_000


def _count_first_color_fixed(emasks: list[int]) -> int:
    """Colorings of a connected graph with vertex 0 pinned to color 0.

    ``emasks[i]`` is the bitmask of neighbors of vertex i that come
    earlier in the vertex order.
    """
    k = len(emasks)

    def rec(i: int, c0: int, c1: int, c2: int) -> int:
        if i == k:
            return 1
        m = emasks[i]
        bit = 1 << i
        total = 0
        if not c0 & m:
            total = rec(i + 1, c0 | bit, c1, c2)
        if not c1 & m:
            total += rec(i + 1, c0, c1 | bit, c2)
        if not c2 & m:
            total += rec(i + 1, c0, c1, c2 | bit)
        return total

    return rec(1, 1, 0, 0)


def _core_count(adj: Sequence[int], core: int, order: list[int], pos: list[int]) -> int:
    """Backtracking count for a connected 2-core with >= 2 independent cycles.

    ``order`` is a connected vertex order of the core; ``pos`` is an
    n-sized scratch list.
    """
    k = len(order)
    for i, v in enumerate(order):
        pos[v] = i
    emasks = [0] * k
    for i, v in enumerate(order):
        row = adj[v] & core
        m = 0
        while row:
            b = row & -row
            row ^= b
            j = pos[b.bit_length() - 1]
            if j < i:
                m |= 1 << j
        emasks[i] = m
    return 3 * _count_first_color_fixed(emasks)


def _peel_to_core(adj: Sequence[int], comp: int, deg: Sequence[int], dscratch: list[int]) -> int:
    """Strip degree-1 vertices repeatedly; return the 2-core mask."""
    stack = []
    x = comp
    while x:
        b = x & -x
        x ^= b
        v = b.bit_length() - 1
        d = deg[v]
        dscratch[v] = d
        if d == 1:
            stack.append(v)
    alive = comp
    while stack:
        v = stack.pop()
        alive ^= 1 << v
        row = adj[v] & alive
        while row:
            b = row & -row
            row ^= b
            w = b.bit_length() - 1
            dscratch[w] -= 1
            if dscratch[w] == 1:
                stack.append(w)
    return alive


def subset_chi3(
    adj: Sequence[int],
    deg: Sequence[int],
    live: int,
    n: int,
    einc: Sequence[int] | None = None,
    emask: int = 0,
    memo: dict | None = None,
) -> int:
    """3-coloring count of the graph given by adjacency rows.

    ``live`` is the mask of non-isolated vertices and ``deg`` the degree
    array, both maintained by the caller.  When ``einc`` (per-vertex
    incident-edge-index masks) and ``emask`` (current edge subset) are
    supplied, non-tree components are memoized under their edge
    configuration, which identifies the component exactly.
    """
    total = 3 ** (n - live.bit_count())
    rem = live
    scratch: list[int] | None = None
    while rem:
        comp = rem & -rem
        frontier = comp
        k = 0
        esum = 0
        order: list[int] = []
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                v = b.bit_length() - 1
                k += 1
                esum += deg[v]
                order.append(v)
                nxt |= adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        rem &= ~comp
        edges = esum >> 1
        if edges == k - 1:
            total *= 3 << (k - 1)
            continue
        # non-tree component
        if memo is not None and einc is not None:
            cfg = 0
            x = comp
            while x:
                b = x & -x
                x ^= b
                cfg |= einc[b.bit_length() - 1]
            cfg &= emask
            cnt = memo.get(cfg)
            if cnt is None:
                if scratch is None:
                    scratch = [0] * n
                cnt = _component_count(adj, comp, deg, k, edges, order, scratch)
                if len(memo) < _MEMO_CAP:
                    memo[cfg] = cnt
        else:
            if scratch is None:
                scratch = [0] * n
            cnt = _component_count(adj, comp, deg, k, edges, order, scratch)
        if cnt == 0:
            return 0
        total *= cnt
    return total


def _component_count(
    adj: Sequence[int],
    comp: int,
    deg: Sequence[int],
    k: int,
    edges: int,
    order: list[int],
    scratch: list[int],
) -> int:
    """Coloring count of one connected non-tree component via core peeling.

    ``order`` is the component's BFS vertex order; restricted to the
    2-core it stays a connected order (pendant trees attach to the core
    at a single vertex), so the backtracking can reuse it.
    """
    core = _peel_to_core(adj, comp, deg, scratch)
    core_k = core.bit_count()
    peeled = k - core_k
    core_edges = edges - peeled  # each peel removes exactly one edge
    if core_edges == core_k:
        # core is a single cycle of length core_k
        cyc = (1 << core_k) + 2 if core_k % 2 == 0 else (1 << core_k) - 2
        return cyc << peeled
    if peeled:
        order = [v for v in order if core >> v & 1]
    return _core_count(adj, core, order, scratch) << peeled


def chi3_of_rows(adj: Sequence[int], n: int) -> int:
    """3-coloring count from raw adjacency rows."""
    live = 0
    deg = [0] * n
    for i in range(n):
        row = adj[i]
        if row:
            live |= 1 << i
            deg[i] = row.bit_count()
    return subset_chi3(adj, deg, live, n)


def chi3(g: Graph) -> int:
    """Number of proper colorings of g in three colors."""
    return chi3_of_rows(g.adj, g.n)


def chi3_bruteforce(g: Graph) -> int:
    """Oracle: enumerate all 3**n color assignments (n <= 10)."""
    if g.n > 10:
        raise ValueError(f"brute-force oracle limited to n <= 10, got n={g.n}")
    count = 0
    edges = g.edges
    for coloring in product((0, 1, 2), repeat=g.n):
        for u, v in edges:
            if coloring[u] == coloring[v]:
                break
        else:
            count += 1
    return count
