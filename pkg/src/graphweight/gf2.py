"""Dense linear algebra over GF(2) with bit-packed rows.

Matrices are square, rows stored as Python ints (bit j of rows[i] is the
entry at row i, column j).  Rank uses Gaussian elimination with XOR row
operations; elimination always works on a copy, so matrices behave as
immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, VertexMask, check_vertex_mask, mask_vertices


@dataclass(frozen=True)
class Gf2Matrix:
    """Square GF(2) matrix; rows as bit vectors."""

    dim: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("dimension must be nonnegative")
        if len(self.rows) != self.dim:
            raise ValueError("row count does not match dim")
        for i, row in enumerate(self.rows):
            if row < 0 or row >> self.dim:
                raise ValueError(f"row {i} has bits beyond column {self.dim - 1}")


@dataclass(frozen=True)
class Gf2Vector:
    """GF(2) column vector of fixed width; bits as one int."""

    width: int
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.width:
            raise ValueError("vector has bits beyond its width")


def adjacency_matrix(g: Graph, u: VertexMask) -> Gf2Matrix:
    """GF(2) adjacency matrix of the subgraph induced by ``u``.

    Entry (a, b) is 1 iff the a-th and b-th smallest vertices of ``u``
    are adjacent in ``g``.  With ``u`` the full vertex set this is the
    adjacency matrix of ``g`` itself.  The result is symmetric with zero
    diagonal by construction.
    """
    check_vertex_mask(g, u)
    verts = mask_vertices(u)
    dim = len(verts)
    rows = []
    for v in verts:
        sel = g.adj[v] & u
        row = 0
        for b, w in enumerate(verts):
            row |= (sel >> w & 1) << b
        rows.append(row)
    return Gf2Matrix(dim, tuple(rows))


def rank_of_rows(rows, width: int) -> int:
    """GF(2) rank of the given row bit-vectors.

    Pivots are searched column by column from bit 0 upward, taking the
    first remaining row with a set bit; the input sequence is not
    modified.
    """
    work = [r for r in rows if r]
    rank = 0
    for col in range(width):
        cb = 1 << col
        pivot = -1
        for i in range(rank, len(work)):
            if work[i] & cb:
                pivot = i
                break
        if pivot < 0:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        prow = work[rank]
        for i in range(rank + 1, len(work)):
            if work[i] & cb:
                work[i] ^= prow
        rank += 1
        if rank == len(work):
            break
    return rank


def rank(m: Gf2Matrix) -> int:
    """Row rank of the matrix over GF(2)."""
    return rank_of_rows(m.rows, m.dim)


def corank(m: Gf2Matrix) -> int:
    """dim minus rank: the dimension of the kernel."""
    return m.dim - rank(m)


def kernel_count(m: Gf2Matrix) -> int:
    """Number of vectors x with m @ x = 0, i.e. 2**corank(m)."""
    return 1 << corank(m)


def mat_vec(m: Gf2Matrix, x: Gf2Vector) -> Gf2Vector:
    """Matrix-vector product over GF(2)."""
    if x.width != m.dim:
        raise ValueError("vector width does not match matrix dimension")
    out = 0
    for i, row in enumerate(m.rows):
        out |= ((row & x.bits).bit_count() & 1) << i
    return Gf2Vector(m.dim, out)


def support(x: Gf2Vector) -> VertexMask:
    """Mask of coordinates where the vector is 1."""
    return x.bits


def zero_set(m: Gf2Matrix, x: Gf2Vector) -> VertexMask:
    """Mask of coordinates where (m @ x) vanishes."""
    return ~support(mat_vec(m, x)) & (1 << m.dim) - 1
