"""Verification harness: corpora of graphs, identity checks, reports.

The central check is that all three formulas return the identical exact
dyadic value on every graph; any disagreement is an implementation bug
and is surfaced as a mismatch.  Alongside it the harness can test, per
vertex subset, the kernel-counting equality (constrained vectors vs
2**corank) and the parity congruence (odd-degree count vs cut size).

Randomness is a SplitMix64 counter stream: value(seed, i) mixes
seed + (i+1) * 0x9E3779B97F4A7C15 through the standard SplitMix64
finalizer, so every draw is a pure function of (seed, index) and results
are reproducible across platforms and worker pools.
"""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from . import gf2
from .graphs import Graph, all_pairs, encode_graph6
from .invariants import (
    DEFAULT_EDGE_BUDGET,
    DEFAULT_VERTEX_BUDGET,
    FORMULA_TAGS,
    BudgetExceededError,
    InvariantValue,
    constrained_vector_count,
    parity_witness,
    phi_definition,
    phi_eulerian,
    psi_corank,
)

_M64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15

EXHAUSTIVE_LIMIT = 8  # 2**28 graphs at n=8 is the hard ceiling


def splitmix64(seed: int, index: int) -> int:
    """Element ``index`` of the SplitMix64 stream started at ``seed``."""
    z = (seed + (index + 1) * _GOLDEN) & _M64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return z ^ (z >> 31)


def _fnv1a(data: bytes) -> int:
    h = 0xCBF29CE484222325
    for byte in data:
        h = ((h ^ byte) * 0x100000001B3) & _M64
    return h


def random_graph(n: int, p: Fraction, seed: int) -> Graph:
    """Erdos-Renyi draw: edge t is present iff splitmix64(seed, t),
    read as a uniform 64-bit value, falls below p (exact rational
    comparison, no floating point).
    """
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    num, den = p.numerator, p.denominator
    threshold = num << 64
    adj = [0] * n
    edges = []
    for t, (i, j) in enumerate(all_pairs(n)):
        if splitmix64(seed, t) * den < threshold:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
            edges.append((i, j))
    return Graph(n, tuple(adj), tuple(edges))


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2**C(n,2) labeled graphs on n vertices, in edge-mask order."""
    if n > EXHAUSTIVE_LIMIT:
        raise ValueError(f"exhaustive enumeration limited to n <= {EXHAUSTIVE_LIMIT}")
    npairs = n * (n - 1) // 2
    for mask in range(1 << npairs):
        yield Graph.from_edge_mask(n, mask)


@dataclass(frozen=True)
class RunConfig:
    """Parameters of one verification campaign."""

    mode: str = "exhaustive"  # exhaustive | random | file
    n: int = 5
    p: Fraction = Fraction(1, 2)
    count: int = 1
    seed: int = 0
    edge_budget: int = DEFAULT_EDGE_BUDGET
    vertex_budget: int = DEFAULT_VERTEX_BUDGET
    formulas: tuple[str, ...] = FORMULA_TAGS
    check_identities: bool = False
    identity_exhaustive_max: int = 6  # check all 2**n subsets up to here
    identity_samples: int = 256  # sampled subsets per graph above it
    threads: int = 1

    def __post_init__(self):
        if self.mode not in ("exhaustive", "random", "file"):
            raise ValueError(f"unknown mode {self.mode!r}")
        p = Fraction(self.p)
        if not 0 <= p <= 1:
            raise ValueError("edge probability must be in [0, 1]")
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if self.mode == "exhaustive" and self.n > EXHAUSTIVE_LIMIT:
            raise ValueError(
                f"exhaustive enumeration limited to n <= {EXHAUSTIVE_LIMIT}"
            )
        if self.mode == "random" and self.count < 1:
            raise ValueError("random mode needs count >= 1")
        for tag in self.formulas:
            if tag not in FORMULA_TAGS:
                raise ValueError(f"unknown formula {tag!r}")
        if not self.formulas:
            raise ValueError("at least one formula must be selected")


@dataclass
class VerificationReport:
    """Per-graph outcome: the formula values, equality, identity counters."""

    graph_id: str
    n: int
    m: int
    values: dict[str, InvariantValue]
    skipped: dict[str, str]
    all_equal: bool
    claim_checked: int = 0
    claim_failures: int = 0
    parity_checked: int = 0
    parity_failures: int = 0
    elapsed: dict[str, float] = field(default_factory=dict)

    @property
    def identity_failures(self) -> int:
        return self.claim_failures + self.parity_failures


@dataclass
class RunSummary:
    graphs_checked: int = 0
    mismatches: int = 0
    identities_checked: int = 0
    identity_violations: int = 0
    formula_skips: int = 0
    elapsed_total: float = 0.0

    @property
    def failed(self) -> bool:
        return self.mismatches > 0 or self.identity_violations > 0

    def update(self, report: VerificationReport) -> None:
        self.graphs_checked += 1
        if not report.all_equal:
            self.mismatches += 1
        self.identities_checked += report.claim_checked + report.parity_checked
        self.identity_violations += report.identity_failures
        self.formula_skips += len(report.skipped)


def _graph_label(g: Graph) -> str:
    if g.n <= 62:
        return encode_graph6(g)
    return f"n={g.n},m={len(g.edges)}"


def _identity_subsets(g: Graph, cfg: RunConfig, label: str) -> Iterator[int]:
    if g.n <= cfg.identity_exhaustive_max:
        yield from range(1 << g.n)
    else:
        sub_seed = splitmix64(cfg.seed, _fnv1a(label.encode("ascii")))
        full = (1 << g.n) - 1
        for j in range(cfg.identity_samples):
            yield splitmix64(sub_seed, j) & full


def verify_graph(g: Graph, cfg: RunConfig) -> VerificationReport:
    """Compute every selected formula within budget and compare.

    Formulas over budget are recorded in ``skipped``; equality considers
    only computed formulas.  Raises BudgetExceededError only when no
    formula at all is computable.
    """
    label = _graph_label(g)
    m = len(g.edges)
    values: dict[str, InvariantValue] = {}
    skipped: dict[str, str] = {}
    elapsed: dict[str, float] = {}
    for tag in cfg.formulas:
        if tag == "definition" and m > cfg.edge_budget:
            skipped[tag] = f"budget: |E|={m} exceeds edge budget {cfg.edge_budget}"
            continue
        if tag in ("eulerian", "corank") and g.n > cfg.vertex_budget:
            skipped[tag] = f"budget: n={g.n} exceeds vertex budget {cfg.vertex_budget}"
            continue
        start = time.perf_counter()
        if tag == "definition":
            values[tag] = phi_definition(g, cfg.edge_budget)
        elif tag == "eulerian":
            values[tag] = phi_eulerian(g, cfg.vertex_budget)
        else:
            values[tag] = psi_corank(g, cfg.vertex_budget)
        elapsed[tag] = time.perf_counter() - start
    if not values:
        raise BudgetExceededError(
            "all formulas", max(cfg.edge_budget, cfg.vertex_budget), max(m, g.n)
        )
    results = [iv.value for iv in values.values()]
    all_equal = all(r == results[0] for r in results)
    report = VerificationReport(
        graph_id=label,
        n=g.n,
        m=m,
        values=values,
        skipped=skipped,
        all_equal=all_equal,
        elapsed=elapsed,
    )
    if cfg.check_identities:
        for u in _identity_subsets(g, cfg, label):
            mat = gf2.adjacency_matrix(g, u)
            report.claim_checked += 1
            if constrained_vector_count(g, u) != gf2.kernel_count(mat):
                report.claim_failures += 1
            report.parity_checked += 1
            odd, cut = parity_witness(g, u)
            if (odd - cut) & 1:
                report.parity_failures += 1
    return report


def _graph_seed(seed: int, index: int) -> int:
    return splitmix64(seed, index)


def _work_items(cfg: RunConfig, graphs: Iterable[Graph] | None):
    if cfg.mode == "exhaustive":
        npairs = cfg.n * (cfg.n - 1) // 2
        return (("mask", cfg.n, mask, cfg) for mask in range(1 << npairs))
    if cfg.mode == "random":
        return (
            ("random", cfg.n, _graph_seed(cfg.seed, i), cfg) for i in range(cfg.count)
        )
    if graphs is None:
        raise ValueError("file mode needs an iterable of graphs")
    return (("graph", g, None, cfg) for g in graphs)


def _run_item(item) -> VerificationReport:
    kind, a, b, cfg = item
    if kind == "mask":
        g = Graph.from_edge_mask(a, b)
    elif kind == "random":
        g = random_graph(a, cfg.p, b)
    else:
        g = a
    return verify_graph(g, cfg)


def iter_reports(
    cfg: RunConfig, graphs: Iterable[Graph] | None = None
) -> Iterator[VerificationReport]:
    """Stream one report per graph, in input order.

    With threads > 1 the graphs are distributed over a process pool;
    ordered reassembly keeps the stream deterministic.
    """
    items = _work_items(cfg, graphs)
    if cfg.threads <= 1:
        for item in items:
            yield _run_item(item)
        return
    chunk = 64 if cfg.mode == "exhaustive" else 1
    with multiprocessing.Pool(cfg.threads) as pool:
        yield from pool.imap(_run_item, items, chunksize=chunk)


def run(
    cfg: RunConfig, graphs: Iterable[Graph] | None = None
) -> tuple[list[VerificationReport], RunSummary]:
    """Collect the full report stream plus a summary."""
    start = time.perf_counter()
    summary = RunSummary()
    reports = []
    for report in iter_reports(cfg, graphs):
        summary.update(report)
        reports.append(report)
    summary.elapsed_total = time.perf_counter() - start
    return reports, summary
