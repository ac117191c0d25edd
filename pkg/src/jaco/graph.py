"""Finite Jaco graphs J_n(a) built on top of the sequence table.

Arcs are never stored: both neighborhoods of a vertex are contiguous
index intervals, so a graph is just (a, n) plus the sequence table.  The
out-neighbors of v_i are [i+1, min(reach[i], n)] and the in-neighbors of
v_j are [c[j], j-1].  Vertex indexing is 1-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .sequences import SequenceTable, c_series, check_order


@dataclass(frozen=True)
class JacoGraph:
    """A finite Jaco graph of order a on vertices v_1..v_n."""

    a: int
    n: int
    seq: SequenceTable


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex degrees, index 0 unused.

    d_out_finite truncates the infinite out-degree at the vertex cap n;
    d_total is the degree in the underlying undirected simple graph.
    """

    d_in: tuple[int, ...]
    d_out_finite: tuple[int, ...]
    d_total: tuple[int, ...]


@dataclass(frozen=True)
class JaconianInfo:
    """Maximum degree and the vertices attaining it.

    prime_index is the lowest index attaining delta; hope_range is the
    (always complete) induced subgraph above it, empty when prime = n.
    """

    delta: int
    jaconian_set: tuple[int, ...]
    prime_index: int
    hope_range: range


def build(a: int, n: int) -> JacoGraph:
    """Construct J_n(a) in O(n): the sequence table is the whole graph."""
    check_order(a)
    if n < 1:
        raise ValueError(f"vertex count n must be >= 1, got {n}")
    return JacoGraph(a, n, c_series(a, n))


def _check_vertex(g: JacoGraph, i: int) -> None:
    if not 1 <= i <= g.n:
        raise IndexError(f"vertex index {i} out of range 1..{g.n}")


def out_neighbors(g: JacoGraph, i: int) -> range:
    """Heads of arcs leaving v_i: the interval [i+1, min(reach[i], n)]."""
    _check_vertex(g, i)
    return range(i + 1, min(g.seq.reach[i], g.n) + 1)


def in_neighbors(g: JacoGraph, j: int) -> range:
    """Tails of arcs entering v_j: the interval [c[j], j-1], empty for v_1."""
    _check_vertex(g, j)
    return range(g.seq.c[j], j)


def arcs(g: JacoGraph) -> Iterator[tuple[int, int]]:
    """All arcs (tail, head) in lexicographic order."""
    for i in range(1, g.n + 1):
        for j in out_neighbors(g, i):
            yield (i, j)


def degree_profile(g: JacoGraph) -> DegreeProfile:
    """In-, finite out- and total degree of every vertex of J_n(a)."""
    seq = g.seq
    n = g.n
    d_in = [0] * (n + 1)
    d_out = [0] * (n + 1)
    d_tot = [0] * (n + 1)
    for i in range(1, n + 1):
        d_in[i] = i - seq.c[i]
        d_out[i] = min(seq.reach[i], n) - i
        d_tot[i] = d_in[i] + d_out[i]
    return DegreeProfile(tuple(d_in), tuple(d_out), tuple(d_tot))


def jaconian(g: JacoGraph) -> JaconianInfo:
    """Maximum total degree, the vertices attaining it, and the Hope range."""
    d_tot = degree_profile(g).d_total
    delta = max(d_tot[1:])
    jset = tuple(i for i in range(1, g.n + 1) if d_tot[i] == delta)
    prime = jset[0]
    return JaconianInfo(delta, jset, prime, range(prime + 1, g.n + 1))


def hope_is_complete(g: JacoGraph) -> tuple[bool, tuple[int, int] | None]:
    """Whether the subgraph above the prime index is complete.

    Returns (True, None) or (False, first missing pair).  Vacuously true
    for Hope ranges with fewer than two vertices.
    """
    hope = jaconian(g).hope_range
    if len(hope) < 2:
        return True, None
    for i in hope:
        last = min(g.seq.reach[i], g.n)
        if last < g.n and i < g.n:
            return False, (i, last + 1)
    return True, None
