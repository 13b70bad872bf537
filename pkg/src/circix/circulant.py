"""Circulant graphs and their basic graph theory.

A circulant graph on n vertices is determined by a connection set
S contained in {1, ..., floor(n/2)}: vertices are the integers mod n and
{i, j} is an edge exactly when the circular distance of i and j lies in S.
All graphs here are immutable; operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import FrozenSet, Iterable

from .bitsets import bits


def circ_distance(k: int, n: int) -> int:
    """Circular distance of k on the n-cycle: min(|k mod n|, n - |k mod n|)."""
    if n < 1:
        raise ValueError(f"vertex count must be >= 1, got {n}")
    r = k % n
    return min(r, n - r)


@dataclass(frozen=True)
class CirculantGraph:
    """Immutable circulant graph; build with :func:`build`."""

    n: int
    conn: FrozenSet[int]
    # neighbor bitmask per vertex, derived once at construction
    neighbor_masks: tuple = field(compare=False, repr=False, default=())

    @property
    def sbar(self) -> FrozenSet[int]:
        return complement_set(self)

    def has_edge(self, i: int, j: int) -> bool:
        return circ_distance(j - i, self.n) in self.conn

    def degree(self) -> int:
        return self.neighbor_masks[0].bit_count()

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.neighbor_masks) // 2

    def __str__(self) -> str:
        return f"C_{self.n}({','.join(map(str, sorted(self.conn)))})"


def build(n: int, conn: Iterable[int]) -> CirculantGraph:
    """Construct C_n(S).  Every element of S must lie in {1, ..., floor(n/2)}."""
    if n < 1:
        raise ValueError(f"vertex count must be >= 1, got {n}")
    cset = frozenset(conn)
    for s in cset:
        if not 1 <= s <= n // 2:
            raise ValueError(f"connection element {s} outside 1..{n // 2} for n={n}")
    masks = []
    for v in range(n):
        m = 0
        for s in cset:
            m |= 1 << ((v + s) % n)
            m |= 1 << ((v - s) % n)
        masks.append(m)
    return CirculantGraph(n=n, conn=cset, neighbor_masks=tuple(masks))


def canonical_connection(n: int, values: Iterable[int]) -> FrozenSet[int]:
    """Reduce arbitrary integers to canonical distances in {1, ..., floor(n/2)}.

    Zero distances (multiples of n) are rejected: they would be self-loops.
    """
    out = set()
    for k in values:
        d = circ_distance(k, n)
        if d == 0:
            raise ValueError(f"{k} is 0 mod {n}; self-loops are not allowed")
        out.add(d)
    return frozenset(out)


def complement_set(g: CirculantGraph) -> FrozenSet[int]:
    """The connection set of the complement graph: {1,...,floor(n/2)} minus conn."""
    return frozenset(range(1, g.n // 2 + 1)) - g.conn


def complement_graph(g: CirculantGraph) -> CirculantGraph:
    return build(g.n, complement_set(g))


def family_complement_set(m: int) -> FrozenSet[int]:
    """The excluded-distance set {1, 2, 4, ..., 2^m, 2^m - 1} of the n = 3*2^m family."""
    if m < 3:
        raise ValueError(f"family requires m >= 3, got {m}")
    return frozenset({2 ** i for i in range(m + 1)} | {2 ** m - 1})


def family_graph(m: int) -> CirculantGraph:
    """Member m of the infinite family on n = 3*2^m vertices.

    The connection set is everything in {1, ..., n/2} except
    {1, 2, 4, ..., 2^m, 2^m - 1}.
    """
    if m < 3:
        raise ValueError(f"family requires m >= 3, got {m}")
    n = 3 * 2 ** m
    sbar = family_complement_set(m)
    return build(n, frozenset(range(1, n // 2 + 1)) - sbar)


def _connected_on(masks: tuple, alive: int) -> bool:
    """Is the induced subgraph on the ``alive`` bitmask connected?

    Empty and one-vertex graphs count as connected.
    """
    if alive == 0:
        return True
    start = alive & -alive
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= masks[v]
        nxt &= alive & ~seen
        seen |= nxt
        frontier = nxt
    return seen == alive


def is_connected(g: CirculantGraph) -> bool:
    return _connected_on(g.neighbor_masks, (1 << g.n) - 1)


def is_l_connected(g: CirculantGraph, l: int) -> bool:
    """True when removing any vertex subset of size < l leaves the graph connected.

    Exhaustive over all removal subsets; meant for desk-scale n.
    """
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")
    full = (1 << g.n) - 1
    for k in range(l):
        for removed in combinations(range(g.n), k):
            alive = full
            for v in removed:
                alive &= ~(1 << v)
            if not _connected_on(g.neighbor_masks, alive):
                return False
    return True
