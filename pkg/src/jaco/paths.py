"""Shortest paths from v_1: distances, path counts, and the scanner
for the open non-repetitiveness conjecture at order 1.

Distances follow the forward recursion dist[i] = dist[c[i]] + 1 (the
lowest in-neighbor always lies on a shortest path).  Path counts come in
two independent flavors: the standard DAG dynamic program over
in-neighbor windows, and, for order 1 only, the Fibonacci-window
recursion paired with the "out-degree is a Fibonacci number" uniqueness
criterion.  Out-degrees here are always the infinite-graph out-degrees
dplus[j]; the finite graph would give the last vertex out-degree 0 and
trivialize every criterion.
"""

from __future__ import annotations

from bisect import bisect_left
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .graph import JacoGraph, build
from .sequences import SequenceTable, liz_terms


class UnsupportedOrderError(ValueError):
    """Raised when an order-1-only operation is called with a != 1."""

    def __init__(self, a: int, what: str):
        super().__init__(f"{what} is defined for order a = 1 only, got a = {a}")


@dataclass(frozen=True)
class PathTable:
    """Distances from v_1 and shortest-path counts, index 0 unused."""

    a: int
    n: int
    dist: tuple[int, ...]
    psi: tuple[int, ...]


@dataclass(frozen=True)
class DistanceRootSet:
    """Vertex indices that are Liz numbers below n, plus n itself."""

    a: int
    n: int
    indices: tuple[int, ...]


@dataclass(frozen=True)
class UniquenessReport:
    """Per-vertex comparison of path uniqueness with the degree criterion.

    unique[j] is whether v_j has exactly one shortest path from v_1;
    criterion[j] is whether dplus[j] is a Fibonacci number; mismatches
    lists every j where the two disagree.
    """

    unique: tuple[bool, ...]
    criterion: tuple[bool, ...]
    mismatches: tuple[int, ...]

    @property
    def agree(self) -> bool:
        return not self.mismatches


@dataclass(frozen=True)
class ConjectureReport:
    """Scan of the non-repetitiveness biconditional for 7 <= k <= n_max - 1.

    Each row is (k, dplus triple, psi triple, forward ok, converse ok);
    forward is "dplus non-repetitive implies psi non-repetitive" and
    converse the reverse implication.  Nothing is asserted: violations
    are report content.
    """

    n_max: int
    rows: tuple[tuple[int, tuple[int, int, int], tuple[int, int, int], bool, bool], ...]

    @property
    def violations(self) -> int:
        return sum((not fwd) + (not conv) for _, _, _, fwd, conv in self.rows)


def distances(g: JacoGraph) -> tuple[int, ...]:
    """dist[i] = hops from v_1 to v_i; dist[1] = 0, dist[i] = dist[c[i]] + 1."""
    dist = [0] * (g.n + 1)
    c = g.seq.c
    for i in range(2, g.n + 1):
        dist[i] = dist[c[i]] + 1
    return tuple(dist)


def psi_oracle(g: JacoGraph) -> tuple[int, ...]:
    """Shortest-path counts by the standard DAG dynamic program.

    psi[j] sums psi over in-neighbors one hop closer to v_1; the
    in-neighbor window [c[j], j-1] is scanned directly, with no reliance
    on any structure of the dist array.
    """
    dist = distances(g)
    psi = [0] * (g.n + 1)
    psi[1] = 1
    c = g.seq.c
    for j in range(2, g.n + 1):
        d = dist[j]
        psi[j] = sum(psi[i] for i in range(c[j], j) if dist[i] + 1 == d)
    return tuple(psi)


def _psi_fast(seq: SequenceTable, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(dist, psi) in O(n) via prefix sums over distance strata.

    Exploits that dist is non-decreasing in the vertex index, so the
    in-neighbors one hop closer form a contiguous subwindow; the
    monotonicity is checked and a plain window scan is the fallback.
    Cross-checked against psi_oracle in the verification suite.
    """
    c = seq.c
    dist = [0] * (n + 1)
    monotone = True
    for i in range(2, n + 1):
        dist[i] = dist[c[i]] + 1
        if dist[i] < dist[i - 1]:
            monotone = False
    psi = [0] * (n + 1)
    psi[1] = 1
    if not monotone:
        for j in range(2, n + 1):
            d = dist[j]
            psi[j] = sum(psi[i] for i in range(c[j], j) if dist[i] + 1 == d)
        return tuple(dist), tuple(psi)
    first: dict[int, int] = {0: 1}
    for i in range(2, n + 1):
        if dist[i] != dist[i - 1]:
            first[dist[i]] = i
    prefix = [0] * (n + 2)  # prefix[i+1] = psi[1] + ... + psi[i]
    prefix[2] = 1
    for j in range(2, n + 1):
        d = dist[j]
        lo = max(c[j], first[d - 1])
        hi = min(j - 1, first.get(d, n + 1) - 1)
        if lo <= hi:
            psi[j] = prefix[hi + 1] - prefix[lo]
        prefix[j + 1] = prefix[j] + psi[j]
    return tuple(dist), tuple(psi)


def path_table(g: JacoGraph) -> PathTable:
    """Distances plus path counts for any order, using the fast count."""
    dist, psi = _psi_fast(g.seq, g.n)
    return PathTable(g.a, g.n, dist, psi)


def _fib_below(limit: int) -> list[int]:
    """Positive Fibonacci numbers 1, 2, 3, 5, 8, ... up to limit."""
    fibs = [1, 2]
    while fibs[-1] <= limit:
        fibs.append(fibs[-1] + fibs[-2])
    return [f for f in fibs if f <= limit]


def psi_recursive(g: JacoGraph) -> tuple[int, ...]:
    """Order-1 path counts by the Fibonacci-window recursion.

    For vertices whose out-degree is a Fibonacci number the shortest path
    is unique (count 1); otherwise the count sums the counts over the
    window from the lowest in-neighbor up to the largest Fibonacci number
    below the vertex index.
    """
    if g.a != 1:
        raise UnsupportedOrderError(g.a, "the Fibonacci-window recursion")
    c = g.seq.c
    dplus = g.seq.dplus
    fibs = _fib_below(max(g.n, 2))
    fibset = set(fibs)
    psi = [0] * (g.n + 1)
    psi[1] = 1
    for j in range(2, g.n + 1):
        if dplus[j] in fibset:
            psi[j] = 1
        else:
            f_t = fibs[bisect_left(fibs, j) - 1]  # largest Fibonacci < j
            psi[j] = sum(psi[i] for i in range(c[j], f_t + 1))
    return tuple(psi)


def uniqueness_check(g: JacoGraph) -> UniquenessReport:
    """Compare path uniqueness with the Fibonacci out-degree criterion."""
    if g.a != 1:
        raise UnsupportedOrderError(g.a, "the uniqueness criterion")
    psi = psi_oracle(g)
    fibset = set(_fib_below(g.seq.dplus[g.n] + 1))
    unique = [False] + [psi[j] == 1 for j in range(1, g.n + 1)]
    criterion = [False] + [g.seq.dplus[j] in fibset for j in range(1, g.n + 1)]
    mismatches = tuple(j for j in range(1, g.n + 1) if unique[j] != criterion[j])
    return UniquenessReport(tuple(unique), tuple(criterion), mismatches)


def distance_roots(g: JacoGraph) -> DistanceRootSet:
    """Liz-number indices strictly below n, plus n itself."""
    indices = {g.n}
    m = 2
    liz = liz_terms(g.a, max(2, m))
    terms = list(liz.terms)
    while terms[-1] < g.n:
        terms.append(g.a * terms[-1] + terms[-2])
    for b in terms[2:]:
        if b < g.n:
            indices.add(b)
    return DistanceRootSet(g.a, g.n, tuple(sorted(indices)))


def _non_repetitive(x: int, y: int, z: int) -> bool:
    return x != y and y != z


def conjecture_scan(n_max: int, jobs: int = 1) -> ConjectureReport:
    """Scan the order-1 non-repetitiveness biconditional up to n_max - 1.

    For each k the out-degree triple at (k-1, k, k+1) and the path-count
    triple are classified as repetitive or not, and both implication
    directions are recorded.  The row computation is pure, so sharding
    the k-range across workers cannot change the merged report.
    """
    if n_max < 9:
        raise ValueError(f"n_max must be >= 9, got {n_max}")
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    g = build(1, n_max)
    dplus = g.seq.dplus
    _, psi = _psi_fast(g.seq, n_max)

    def row(k: int) -> tuple[int, tuple[int, int, int], tuple[int, int, int], bool, bool]:
        dtriple = (dplus[k - 1], dplus[k], dplus[k + 1])
        ptriple = (psi[k - 1], psi[k], psi[k + 1])
        d_nr = _non_repetitive(*dtriple)
        p_nr = _non_repetitive(*ptriple)
        forward = p_nr if d_nr else True
        converse = d_nr if p_nr else True
        return (k, dtriple, ptriple, forward, converse)

    ks = range(7, n_max)
    if jobs == 1:
        rows = tuple(row(k) for k in ks)
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = tuple(pool.map(row, ks))
    return ConjectureReport(n_max, rows)


def render_conjecture(report: ConjectureReport) -> str:
    """Line-oriented text form of a conjecture scan."""
    lines = []
    for k, dtriple, ptriple, forward, converse in report.rows:
        lines.append(
            "k={} dplus=({},{},{}) psi=({},{},{}) forward={} converse={}".format(
                k, *dtriple, *ptriple,
                "OK" if forward else "VIOLATION",
                "OK" if converse else "VIOLATION",
            )
        )
    lines.append(
        f"SUMMARY scanned=7..{report.n_max - 1} violations={report.violations}"
    )
    return "\n".join(lines) + "\n"
