"""Vertex decomposability and shedding certificates.

The recursive test follows the definition for pure complexes: a complex is
vertex decomposable when it is the empty-set complex, a single simplex, or
some vertex has a vertex-decomposable link and deletion with the deletion's
facets still facets of the original complex.  Dimensions 0 and 1 short-cut
(every 0-dimensional complex qualifies; a 1-dimensional complex qualifies
exactly when it is connected).

For pure connected 2-dimensional complexes an order of n-3 vertex deletions
certifies decomposability when every step has a connected 1-dimensional
link and a triangle remains at the end.  The walk-based verifier and the
backtracking searcher below implement that characterization; certificates
replay from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .bitsets import bits
from .complexes import (
    SimplicialComplex,
    canonical_key,
    deletion,
    faces,
    is_connected,
    link,
)

_VD_CACHE: Dict[Tuple, bool] = {}


def clear_caches() -> None:
    _VD_CACHE.clear()


def is_vd_recursive(c: SimplicialComplex) -> bool:
    """Recursive vertex-decomposability test for a pure complex."""
    if not c.is_void and not c.is_pure:
        raise ValueError("vertex decomposability is defined here for pure complexes")
    return _vd(c)


def _vd(c: SimplicialComplex) -> bool:
    if c.is_void or c.is_empty_complex:
        return True
    if len(c.facets) == 1:
        return True  # a simplex on its support
    if not c.is_pure:
        return False  # cannot occur along valid shedding branches
    d = c.dim
    if d == 0:
        return True
    if not is_connected(c):
        return False  # shedding can never merge components
    if d == 1:
        return True
    key = canonical_key(c)
    hit = _VD_CACHE.get(key)
    if hit is not None:
        return hit
    result = False
    facet_set = set(c.facets)
    for x in bits(c.support):
        dl = deletion(c, x)
        if not all(f in facet_set for f in dl.facets):
            continue
        if _vd(link(c, 1 << x)) and _vd(dl):
            result = True
            break
    _VD_CACHE[key] = result
    return result


@dataclass(frozen=True)
class ShedStep:
    """Link summary for one deletion step of a shedding walk."""

    vertex: int
    link_vertices: int
    link_edges: int
    connected: bool


@dataclass(frozen=True)
class SheddingCertificate:
    order: Tuple[int, ...]
    steps: Tuple[ShedStep, ...]
    terminal: Tuple[int, int, int]
    nonpure_steps: Tuple[int, ...]  # 1-based steps after which purity was lost


@dataclass(frozen=True)
class SheddingFailure:
    step: int                  # 1-based failing step; len(order)+1 for the terminal check
    vertex: Optional[int]
    reason: str
    steps: Tuple[ShedStep, ...]


ShedOutcome = Union[SheddingCertificate, SheddingFailure]


def _link_summary(lk: SimplicialComplex, v: int) -> ShedStep:
    edges = len(faces(lk, 1))
    return ShedStep(
        vertex=v,
        link_vertices=lk.support.bit_count(),
        link_edges=edges,
        connected=is_connected(lk),
    )


def _is_triangle(c: SimplicialComplex) -> bool:
    return len(c.facets) == 1 and c.facets[0].bit_count() == 3


def verify_shedding_sequence(c: SimplicialComplex, order: Sequence[int]) -> ShedOutcome:
    """Replay a candidate shedding order on a pure connected 2-dim complex.

    Each step must delete a vertex whose current link is 1-dimensional and
    connected; after all deletions a single triangle must remain.  Failures
    report the first violated step.  Purity losses along the walk are
    recorded on the certificate, not treated as failures.
    """
    if c.is_void or c.dim != 2 or not c.is_pure:
        raise ValueError("shedding verification needs a pure 2-dimensional complex")
    if not is_connected(c):
        raise ValueError("shedding verification needs a connected complex")
    n = c.support.bit_count()
    order = list(order)
    if len(order) != n - 3:
        raise ValueError(f"order must list {n - 3} vertices, got {len(order)}")
    if len(set(order)) != len(order):
        raise ValueError("order must not repeat vertices")
    sup = c.support
    for v in order:
        if not (0 <= v and (sup >> v) & 1):
            raise ValueError(f"vertex {v} is not a vertex of the complex")

    cur = c
    steps: List[ShedStep] = []
    nonpure: List[int] = []
    for i, v in enumerate(order, start=1):
        vb = 1 << v
        if not cur.has_face(vb):
            return SheddingFailure(i, v, "vertex no longer in the complex", tuple(steps))
        lk = link(cur, vb)
        step = _link_summary(lk, v)
        steps.append(step)
        if lk.is_void or lk.is_empty_complex or lk.dim != 1:
            return SheddingFailure(i, v, "link is not 1-dimensional", tuple(steps))
        if not step.connected:
            return SheddingFailure(i, v, "link is disconnected", tuple(steps))
        cur = deletion(cur, v)
        if not cur.is_pure:
            nonpure.append(i)
    if not _is_triangle(cur):
        return SheddingFailure(len(order) + 1, None, "terminal complex is not a triangle", tuple(steps))
    terminal = tuple(bits(cur.facets[0]))
    assert cur.facets[0] in c.facets, "terminal triangle must be a facet of the input"
    return SheddingCertificate(
        order=tuple(order),
        steps=tuple(steps),
        terminal=terminal,  # type: ignore[arg-type]
        nonpure_steps=tuple(nonpure),
    )


def theorem1_sequence(m: int) -> List[int]:
    """The canonical shedding order for the n = 3*2^m family: all of
    1..n-1 except 2^m and 2^(m+1)."""
    if m < 3:
        raise ValueError(f"family requires m >= 3, got {m}")
    n = 3 * 2 ** m
    skip = {2 ** m, 2 ** (m + 1)}
    return [v for v in range(1, n) if v not in skip]


def find_shedding_sequence(c: SimplicialComplex) -> Optional[List[int]]:
    """Backtracking search for a shedding order; None when none exists.

    Candidate vertices are tried in ascending label order, so the result
    is deterministic.  Dead sub-complexes are memoized up to rotation and
    reflection.
    """
    if c.is_void or c.dim != 2 or not c.is_pure:
        raise ValueError("shedding search needs a pure 2-dimensional complex")
    if not is_connected(c):
        raise ValueError("shedding search needs a connected complex")

    dead: set = set()

    def dfs(cur: SimplicialComplex, acc: List[int]) -> Optional[List[int]]:
        if _is_triangle(cur):
            return acc
        key = canonical_key(cur)
        if key in dead:
            return None
        for v in bits(cur.support):
            lk = link(cur, 1 << v)
            if lk.is_void or lk.is_empty_complex or lk.dim != 1 or not is_connected(lk):
                continue
            found = dfs(deletion(cur, v), acc + [v])
            if found is not None:
                return found
        dead.add(key)
        return None

    return dfs(c, [])
