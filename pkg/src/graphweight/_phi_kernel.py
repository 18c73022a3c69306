"""Optional compiled kernel for the edge-subset sum.

Mirrors the pure-Python enumeration in ``invariants.phi_definition``
(Gray-code walk, component closed forms, 2-core peeling, memoized
multicyclic backtracking) in an int64 numba kernel.  Exactness is kept
by flushing the running partial sum into a block array before an int64
could overflow; the caller reduces the blocks with Python bigints.

The kernel only runs when every possible term times the block length
provably fits in int64 (3**n * 2**(m + block_bits) < 2**63); otherwise
``accumulate`` returns None and the caller falls back to pure Python.
Importing this module requires numba; the import failure is handled by
the caller.
"""

from __future__ import annotations

import numpy as np
from numba import njit, types
from numba.typed import Dict

from .graphs import Graph

_MEMO_CAP = 2_000_000


@njit(cache=True)
def _popcount(x):
    x = x - ((x >> 1) & 0x5555555555555555)
    x = (x & 0x3333333333333333) + ((x >> 2) & 0x3333333333333333)
    x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0F
    return (x * 0x0101010101010101) >> 56


@njit(cache=True)
def _phi_blocks(n, m, eu, ev, pow3, block_bits):
    adj = np.zeros(n, np.int64)
    deg = np.zeros(n, np.int64)
    einc = np.zeros(n, np.int64)
    for t in range(m):
        einc[eu[t]] |= 1 << t
        einc[ev[t]] |= 1 << t
    order = np.empty(n, np.int64)
    corder = np.empty(n, np.int64)
    pos = np.empty(n, np.int64)
    emk = np.empty(n, np.int64)
    dscr = np.empty(n, np.int64)
    peelst = np.empty(n, np.int64)
    sti = np.empty(2 * n + 8, np.int64)
    st0 = np.empty(2 * n + 8, np.int64)
    st1 = np.empty(2 * n + 8, np.int64)
    st2 = np.empty(2 * n + 8, np.int64)
    memo = Dict.empty(types.int64, types.int64)

    total_steps = 1 << m
    block_mask = (1 << block_bits) - 1
    blocks = np.zeros((total_steps >> block_bits) + 2, np.int64)
    bi = 0
    partial = pow3[n]  # empty-subset term
    live = 0
    emask = 0
    size = 0
    for t in range(1, total_steps):
        low = t & -t
        e = _popcount(low - 1)
        u = eu[e]
        v = ev[e]
        bu = 1 << u
        bv = 1 << v
        emask ^= low
        if adj[u] & bv:
            adj[u] ^= bv
            adj[v] ^= bu
            size -= 1
            deg[u] -= 1
            deg[v] -= 1
            if deg[u] == 0:
                live ^= bu
            if deg[v] == 0:
                live ^= bv
        else:
            adj[u] |= bv
            adj[v] |= bu
            size += 1
            if deg[u] == 0:
                live |= bu
            if deg[v] == 0:
                live |= bv
            deg[u] += 1
            deg[v] += 1

        # chi3 of the current spanning subgraph
        cnt = pow3[n - _popcount(live)]
        rem = live
        while rem:
            comp = rem & -rem
            frontier = comp
            k = 0
            esum = 0
            osz = 0
            while frontier:
                nf = 0
                f = frontier
                while f:
                    b = f & -f
                    f ^= b
                    vv = _popcount(b - 1)
                    k += 1
                    esum += deg[vv]
                    order[osz] = vv
                    osz += 1
                    nf |= adj[vv]
                frontier = nf & ~comp
                comp |= frontier
            rem &= ~comp
            edges_c = esum >> 1
            if edges_c == k - 1:
                cnt *= 3 << (k - 1)
                continue
            cfg = 0
            x = comp
            while x:
                b = x & -x
                x ^= b
                cfg |= einc[_popcount(b - 1)]
            cfg &= emask
            if cfg in memo:
                cval = memo[cfg]
            else:
                # peel degree-1 vertices down to the 2-core
                sp = 0
                x = comp
                while x:
                    b = x & -x
                    x ^= b
                    vv = _popcount(b - 1)
                    dv = deg[vv]
                    dscr[vv] = dv
                    if dv == 1:
                        peelst[sp] = vv
                        sp += 1
                alive = comp
                while sp:
                    sp -= 1
                    vv = peelst[sp]
                    alive ^= 1 << vv
                    row = adj[vv] & alive
                    while row:
                        b = row & -row
                        row ^= b
                        w = _popcount(b - 1)
                        dscr[w] -= 1
                        if dscr[w] == 1:
                            peelst[sp] = w
                            sp += 1
                core_k = _popcount(alive)
                peeled = k - core_k
                core_edges = edges_c - peeled
                if core_edges == core_k:
                    if core_k & 1:
                        cval = ((1 << core_k) - 2) << peeled
                    else:
                        cval = ((1 << core_k) + 2) << peeled
                else:
                    # backtracking over the core in component BFS order
                    ck = 0
                    for oi in range(osz):
                        vv = order[oi]
                        if alive >> vv & 1:
                            pos[vv] = ck
                            corder[ck] = vv
                            ck += 1
                    for oi in range(ck):
                        vv = corder[oi]
                        row = adj[vv] & alive
                        mm = 0
                        while row:
                            b = row & -row
                            row ^= b
                            j = pos[_popcount(b - 1)]
                            if j < oi:
                                mm |= 1 << j
                        emk[oi] = mm
                    tot = 0
                    sti[0] = 1
                    st0[0] = 1
                    st1[0] = 0
                    st2[0] = 0
                    ssp = 1
                    while ssp:
                        ssp -= 1
                        ii = sti[ssp]
                        a0 = st0[ssp]
                        a1 = st1[ssp]
                        a2 = st2[ssp]
                        if ii == ck:
                            tot += 1
                            continue
                        mm = emk[ii]
                        bit = 1 << ii
                        if not a0 & mm:
                            sti[ssp] = ii + 1
                            st0[ssp] = a0 | bit
                            st1[ssp] = a1
                            st2[ssp] = a2
                            ssp += 1
                        if not a1 & mm:
                            sti[ssp] = ii + 1
                            st0[ssp] = a0
                            st1[ssp] = a1 | bit
                            st2[ssp] = a2
                            ssp += 1
                        if not a2 & mm:
                            sti[ssp] = ii + 1
                            st0[ssp] = a0
                            st1[ssp] = a1
                            st2[ssp] = a2 | bit
                            ssp += 1
                    cval = (3 * tot) << peeled
                if len(memo) < _MEMO_CAP:
                    memo[cfg] = cval
            if cval == 0:
                cnt = 0
                break
            cnt *= cval

        if cnt:
            term = cnt << size
            if size & 1:
                partial -= term
            else:
                partial += term
        if t & block_mask == 0:
            blocks[bi] = partial
            bi += 1
            partial = 0
    blocks[bi] = partial
    return blocks


def accumulate(g: Graph) -> int | None:
    """Exact integer sum of (-2)**|E'| * chi3(G|E') over all edge subsets,
    or None when the graph is outside the kernel's int64-safe range.
    """
    n, m = g.n, len(g.edges)
    if n == 0 or m == 0 or n > 24:
        return None
    # every term is bounded by 3**n * 2**m; a block of 2**block_bits terms
    # must stay below 2**63
    headroom = 62 - (3 ** n * (1 << m)).bit_length()
    block_bits = min(16, headroom)
    if block_bits < 2:
        return None
    eu = np.fromiter((e[0] for e in g.edges), np.int64, m)
    ev = np.fromiter((e[1] for e in g.edges), np.int64, m)
    pow3 = np.array([3 ** i for i in range(n + 1)], np.int64)
    blocks = _phi_blocks(n, m, eu, ev, pow3, block_bits)
    return sum(int(b) for b in blocks)
