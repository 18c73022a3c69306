"""The invariant computed three ways, exactly.

All three sums are accumulated as exact integers at the common scale
2**(3n) and normalized once at the end, so cross-formula equality is a
plain integer comparison:

  definition   2**(-3n) * sum over edge subsets E' of (-2)**|E'| * chi3(G|E')
  eulerian     2**(-3n) * sum over vertex subsets U with all induced degrees
               even of (-1)**cut(U) * 2**|U|
  corank       2**(-2n) * sum over vertex subsets U of (-1/2)**(n-|U|) *
               2**corank(A(G|U)), rewritten at scale 2**(3n) as
               sum of (-1)**(n-|U|) * 2**(|U| + corank)

The eulerian and definition sums walk their subset lattices in Gray-code
order, maintaining degree parities, cut sizes and spanning-subgraph
adjacency under single-element toggles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import gf2
from .colorings import subset_chi3
from .graphs import Graph, VertexMask, check_vertex_mask, cut_size

_KERNEL_UNSET = object()
_kernel_mod = _KERNEL_UNSET


def _kernel():
    """Load the optional compiled kernel on first use (numba import is slow)."""
    global _kernel_mod
    if _kernel_mod is _KERNEL_UNSET:
        try:
            from . import _phi_kernel

            _kernel_mod = _phi_kernel
        except ImportError:  # numba not installed; the pure path is canonical
            _kernel_mod = None
    return _kernel_mod

DEFAULT_EDGE_BUDGET = 24
DEFAULT_VERTEX_BUDGET = 30

FORMULA_TAGS: tuple[str, ...] = ("definition", "eulerian", "corank")


class BudgetExceededError(ValueError):
    """Input larger than the configured enumeration budget."""

    def __init__(self, kind: str, limit: int, actual: int):
        self.kind = kind
        self.limit = limit
        self.actual = actual
        super().__init__(f"{kind} budget exceeded: limit {limit}, got {actual}")


@dataclass(frozen=True)
class DyadicRational:
    """Exact value num * 2**(-k), normalized so num is odd or zero."""

    num: int
    k: int = 0

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("exponent must be nonnegative")
        num, k = self.num, self.k
        if num == 0:
            k = 0
        else:
            shift = min((num & -num).bit_length() - 1, k)
            num >>= shift
            k -= shift
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "k", k)

    def __add__(self, other: "DyadicRational") -> "DyadicRational":
        k = max(self.k, other.k)
        return DyadicRational(
            (self.num << (k - self.k)) + (other.num << (k - other.k)), k
        )

    def __sub__(self, other: "DyadicRational") -> "DyadicRational":
        return self + (-other)

    def __neg__(self) -> "DyadicRational":
        return DyadicRational(-self.num, self.k)

    def __mul__(self, other: "DyadicRational") -> "DyadicRational":
        return DyadicRational(self.num * other.num, self.k + other.k)

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, 1 << self.k)

    def exact_str(self) -> str:
        """Serialized exact form, e.g. ``15/2^9``."""
        return f"{self.num}/2^{self.k}"

    def approx(self) -> float:
        """Correctly rounded float approximation."""
        return self.num / (1 << self.k)


@dataclass(frozen=True)
class InvariantValue:
    """One formula's result plus enumeration counters.

    ``terms_scanned`` counts subsets visited; ``terms_evaluated`` counts
    subsets that contributed a term (for the eulerian sum only subsets
    with all induced degrees even contribute; for the other two formulas
    the counts coincide).
    """

    value: DyadicRational
    formula: str
    terms_evaluated: int
    terms_scanned: int


def phi_definition(g: Graph, edge_budget: int = DEFAULT_EDGE_BUDGET) -> InvariantValue:
    """Edge-subset expansion over spanning subgraphs.

    Enumerates all 2**|E| edge subsets in Gray-code order, maintaining
    the spanning subgraph's adjacency rows under single-edge toggles, and
    accumulates (-2)**|E'| * chi3(G|E') exactly at scale 2**(3n).
    """
    m = len(g.edges)
    if m > edge_budget:
        raise BudgetExceededError("edge", edge_budget, m)
    if m >= 10:  # below ~2**10 subsets the pure loop beats the kernel call
        kernel = _kernel()
        if kernel is not None:
            acc = kernel.accumulate(g)
            if acc is not None:
                return InvariantValue(
                    DyadicRational(acc, 3 * g.n), "definition", 1 << m, 1 << m
                )
    return _phi_definition_pure(g)


def _phi_definition_pure(g: Graph) -> InvariantValue:
    """Pure-Python edge-subset enumeration (canonical path, any size)."""
    m = len(g.edges)
    n = g.n
    adj = [0] * n
    deg = [0] * n
    einc = [0] * n
    for t, (u, v) in enumerate(g.edges):
        einc[u] |= 1 << t
        einc[v] |= 1 << t
    live = 0
    emask = 0
    size = 0
    memo: dict = {}
    acc = 3 ** n  # E' = {} term: chi3 of the empty spanning subgraph
    edges = g.edges
    for t in range(1, 1 << m):
        ebit = t & -t
        u, v = edges[ebit.bit_length() - 1]
        bu = 1 << u
        bv = 1 << v
        emask ^= ebit
        if adj[u] & bv:
            adj[u] ^= bv
            adj[v] ^= bu
            size -= 1
            deg[u] -= 1
            deg[v] -= 1
            if not deg[u]:
                live ^= bu
            if not deg[v]:
                live ^= bv
        else:
            adj[u] |= bv
            adj[v] |= bu
            size += 1
            if not deg[u]:
                live |= bu
            if not deg[v]:
                live |= bv
            deg[u] += 1
            deg[v] += 1
        cnt = subset_chi3(adj, deg, live, n, einc, emask, memo)
        if cnt:
            if size & 1:
                acc -= cnt << size
            else:
                acc += cnt << size
    return InvariantValue(DyadicRational(acc, 3 * n), "definition", 1 << m, 1 << m)


def phi_eulerian(g: Graph, vertex_budget: int = DEFAULT_VERTEX_BUDGET) -> InvariantValue:
    """Vertex-subset sum restricted to subsets inducing all-even degrees.

    Gray-code walk over vertex subsets; each toggle of vertex v flips the
    degree parity of v's neighbors and shifts the cut by
    deg(v) - 2 * deg_U(v).  Subsets whose induced degrees are all even
    contribute (-1)**cut * 2**|U|.
    """
    n = g.n
    if n > vertex_budget:
        raise BudgetExceededError("vertex", vertex_budget, n)
    adj = g.adj
    full_deg = [row.bit_count() for row in adj]
    u = 0
    odd = 0  # parity mask of deg_U over all vertices
    cut = 0
    acc = 1  # U = {} contributes (+1) * 2**0
    contributing = 1
    for t in range(1, 1 << n):
        v = (t & -t).bit_length() - 1
        bv = 1 << v
        row = adj[v]
        delta = full_deg[v] - 2 * (row & u).bit_count()
        if u & bv:
            cut -= delta
            u ^= bv
        else:
            cut += delta
            u ^= bv
        odd ^= row
        if not odd & u:
            contributing += 1
            if cut & 1:
                acc -= 1 << u.bit_count()
            else:
                acc += 1 << u.bit_count()
    return InvariantValue(DyadicRational(acc, 3 * n), "eulerian", contributing, 1 << n)


def psi_corank(g: Graph, vertex_budget: int = DEFAULT_VERTEX_BUDGET) -> InvariantValue:
    """Corank sum over all induced subgraphs.

    For each vertex subset U the induced GF(2) adjacency matrix
    contributes (-1)**(n-|U|) * 2**(|U| + corank) at scale 2**(3n).
    """
    n = g.n
    if n > vertex_budget:
        raise BudgetExceededError("vertex", vertex_budget, n)
    acc = 0
    for u in range(1 << n):
        c = gf2.corank(gf2.adjacency_matrix(g, u))
        k = u.bit_count()
        term = 1 << (k + c)
        if (n - k) & 1:
            acc -= term
        else:
            acc += term
    return InvariantValue(DyadicRational(acc, 3 * n), "corank", 1 << n, 1 << n)


def constrained_vector_count(g: Graph, u: VertexMask) -> int:
    """Number of GF(2) vectors x with supp(x) inside U and U inside the
    zero set of A(G) * x.

    Direct enumeration of the 2**|U| vectors supported in U.
    """
    check_vertex_mask(g, u)
    a = gf2.adjacency_matrix(g, g.full_vertex_mask())
    count = 0
    x = u
    while True:
        vec = gf2.Gf2Vector(g.n, x)
        if not u & ~gf2.zero_set(a, vec):
            count += 1
        if not x:
            return count
        x = (x - 1) & u


def parity_witness(g: Graph, u: VertexMask) -> tuple[int, int]:
    """(number of vertices with odd degree into U, cut size of U).

    The two components are always congruent mod 2; they are returned
    separately so tests can assert the congruence externally.
    """
    check_vertex_mask(g, u)
    a = gf2.adjacency_matrix(g, g.full_vertex_mask())
    odd = gf2.support(gf2.mat_vec(a, gf2.Gf2Vector(g.n, u))).bit_count()
    return odd, cut_size(g, u)


def even_set(g: Graph, u: VertexMask) -> VertexMask:
    """Mask of vertices whose degree into U is even.

    U is contained in its own even set exactly when the induced subgraph
    has all degrees even.
    """
    check_vertex_mask(g, u)
    a = gf2.adjacency_matrix(g, g.full_vertex_mask())
    return gf2.zero_set(a, gf2.Gf2Vector(g.n, u))
