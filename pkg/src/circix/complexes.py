"""Simplicial complexes as facet lists over bitmask vertex sets.

A complex stores only its maximal faces (facets).  Two degenerate complexes
are distinguished: the complex whose sole face is the empty set (facet list
``(0,)``) and the void complex with no faces at all (facet list ``()``).
The distinction matters for reduced homology, where the empty-set complex
has a nonzero Betti number in degree -1.

The independence complex of a graph is the clique complex of its complement;
facets are enumerated with pivoting Bron-Kerbosch over neighbor bitmasks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Iterable, List, Set, Tuple

from .bitsets import bits, from_bits, reflect, rotate
from .circulant import CirculantGraph, build, circ_distance, complement_set


@dataclass(frozen=True)
class SimplicialComplex:
    """Facet-represented complex on the vertex universe {0, ..., n_vertices-1}.

    The facet tuple is sorted and forms an antichain under containment.
    Vertices of the universe need not appear in any facet (deletions shrink
    the support, never the universe).
    """

    n_vertices: int
    facets: Tuple[int, ...]

    def __post_init__(self):
        fs = self.facets
        for i, f in enumerate(fs):
            for j, g in enumerate(fs):
                if i != j and f & g == f:
                    raise ValueError(
                        f"facet {sorted(bits(f))} contained in {sorted(bits(g))}"
                    )

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty_complex(self) -> bool:
        """True for the complex {emptyset} (one facet, the empty face)."""
        return self.facets == (0,)

    @property
    def support(self) -> int:
        m = 0
        for f in self.facets:
            m |= f
        return m

    @property
    def dim(self) -> int:
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(f.bit_count() for f in self.facets) - 1

    @property
    def is_pure(self) -> bool:
        sizes = {f.bit_count() for f in self.facets}
        return len(sizes) <= 1

    def has_face(self, face: int) -> bool:
        return any(face & f == face for f in self.facets)

    def vertex_list(self) -> List[int]:
        return list(bits(self.support))

    def __str__(self) -> str:
        return f"Complex(n={self.n_vertices}, {len(self.facets)} facets, dim={'void' if self.is_void else self.dim})"


def _maximalize(masks: Iterable[int]) -> Tuple[int, ...]:
    """Drop duplicates and faces contained in another face."""
    uniq = sorted(set(masks), key=lambda m: (m.bit_count(), m), reverse=True)
    keep: List[int] = []
    for m in uniq:
        if not any(m & k == m for k in keep):
            keep.append(m)
    return tuple(sorted(keep))


def make_complex(n_vertices: int, faces: Iterable[int]) -> SimplicialComplex:
    """Build a complex from generating faces, keeping only the maximal ones."""
    return SimplicialComplex(n_vertices, _maximalize(faces))


def independence_complex(g: CirculantGraph) -> SimplicialComplex:
    """The complex of independent vertex sets of g.

    Equals the clique complex of the complement graph, so facets are the
    maximal cliques of C_n(sbar), found by Bron-Kerbosch with pivoting.
    """
    comp = build(g.n, complement_set(g))
    adj = comp.neighbor_masks
    out: List[int] = []
    full = (1 << g.n) - 1

    def bk(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        # pivot: vertex of p|x with most neighbors inside p
        pivot, best = -1, -1
        for u in bits(p | x):
            c = (p & adj[u]).bit_count()
            if c > best:
                pivot, best = u, c
        for v in bits(p & ~adj[pivot]):
            vb = 1 << v
            bk(r | vb, p & adj[v], x & adj[v])
            p &= ~vb
            x |= vb

    bk(0, full, 0)
    return SimplicialComplex(g.n, tuple(sorted(out)))


def faces(c: SimplicialComplex, k: int) -> Set[int]:
    """All faces of dimension k as bitmasks; k = -1 gives {emptyset}.

    Out-of-range k returns the empty set rather than raising.
    """
    if c.is_void:
        return set()
    if k == -1:
        return {0}
    if k < -1:
        return set()
    out: Set[int] = set()
    size = k + 1
    for f in c.facets:
        if f.bit_count() < size:
            continue
        vs = list(bits(f))
        for comb in combinations(vs, size):
            out.add(from_bits(comb))
    return out


def face_counts(c: SimplicialComplex) -> List[int]:
    """The counts (f_-1, f_0, ..., f_{dim}) by direct enumeration."""
    if c.is_void:
        raise ValueError("void complex has no face vector")
    return [1] + [len(faces(c, k)) for k in range(0, c.dim + 1)]


@dataclass(frozen=True)
class FHProfile:
    """f-vector, h-vector and reduced Euler characteristic of a complex."""

    f: Tuple[int, ...]   # (f_-1, f_0, ..., f_{d-1})
    h: Tuple[int, ...]   # (h_0, ..., h_d)
    chi: int

    @property
    def dim(self) -> int:
        return len(self.f) - 2


def fh_profile(c: SimplicialComplex) -> FHProfile:
    """Count faces, apply the binomial transform for h, and cross-check chi.

    The transform is h_k = sum_i (-1)^(k-i) C(d-i, k-i) f_{i-1} with
    d = dim + 1; the top entry satisfies h_d = (-1)^(d-1) chi.
    """
    if c.is_void:
        raise ValueError("void complex has no f-vector")
    f = face_counts(c)          # f[i] = f_{i-1}
    d = c.dim + 1
    h = []
    for k in range(d + 1):
        h_k = sum((-1) ** (k - i) * math.comb(d - i, k - i) * f[i] for i in range(k + 1))
        h.append(h_k)
    chi = sum((1 if i % 2 == 0 else -1) * f[i + 1] for i in range(-1, d))
    assert (1 if (d - 1) % 2 == 0 else -1) * h[d] == chi, "h/chi consistency failed"
    return FHProfile(f=tuple(f), h=tuple(h), chi=chi)


def link(c: SimplicialComplex, face: int) -> SimplicialComplex:
    """Faces disjoint from ``face`` whose union with it is again a face."""
    if not c.has_face(face):
        raise ValueError(f"{sorted(bits(face))} is not a face of the complex")
    return make_complex(c.n_vertices, (f & ~face for f in c.facets if f & face == face))


def deletion(c: SimplicialComplex, v: int) -> SimplicialComplex:
    """Faces avoiding vertex v, re-maximalized."""
    vb = 1 << v
    return make_complex(c.n_vertices, (f & ~vb for f in c.facets))


def restriction(c: SimplicialComplex, sigma: int) -> SimplicialComplex:
    """Faces contained in the vertex set ``sigma``, re-maximalized."""
    return make_complex(c.n_vertices, (f & sigma for f in c.facets))


def component_count(c: SimplicialComplex) -> int:
    """Number of connected components of the support, through shared facets."""
    sup = c.support
    if sup == 0:
        return 0
    parent = {v: v for v in bits(sup)}

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for f in c.facets:
        vs = list(bits(f))
        for a, b in zip(vs, vs[1:]):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    return len({find(v) for v in bits(sup)})


def is_connected(c: SimplicialComplex) -> bool:
    """Complexes with at most one support vertex count as connected."""
    return component_count(c) <= 1


def canonical_key(c: SimplicialComplex) -> Tuple[int, Tuple[int, ...]]:
    """Dihedral-minimal facet tuple, for memo tables.

    Rotations and the mirror of the ambient cycle are simplicial
    isomorphisms, so homology, Cohen-Macaulayness and vertex
    decomposability are constant on each key class.
    """
    n = c.n_vertices
    base = c.facets
    best = None
    for mirrored in (False, True):
        fs = tuple(reflect(f, n) for f in base) if mirrored else base
        for shift in range(n):
            cand = tuple(sorted(rotate(f, shift, n) for f in fs))
            if best is None or cand < best:
                best = cand
    return (n, best)


# ---------------------------------------------------------------------------
# Structural criteria for 2-dimensional pure complexes of circulants
# ---------------------------------------------------------------------------

def _validate_sbar(n: int, sbar: Iterable[int]) -> FrozenSet[int]:
    s = frozenset(sbar)
    for a in s:
        if not 1 <= a <= n // 2:
            raise ValueError(f"distance {a} outside 1..{n // 2} for n={n}")
    return s


def check_pure2_criterion(n: int, sbar: Iterable[int]) -> bool:
    """Arithmetic test for "independence complex is pure of dimension 2".

    With sbar the allowed clique distances, the test requires for every
    distance a in sbar that (1) some vertex b forms a triangle {0, a, b}
    and (2) no two such vertices b, c are themselves at an allowed
    distance, which would create a 3-face {0, a, b, c}.
    """
    s = _validate_sbar(n, sbar)
    if not s:
        raise ValueError("sbar must be nonempty (complete graphs are excluded)")

    def dist_ok(k: int) -> bool:
        return circ_distance(k, n) in s

    for a in sorted(s):
        partners = [b for b in range(1, n) if dist_ok(b) and dist_ok(b - a)]
        if not partners:
            return False
        for b, c in combinations(partners, 2):
            if dist_ok(b - c):
                return False
    return True


def facet_orbit_split(n: int, sbar: Iterable[int]) -> Tuple[Set[Tuple[int, int, int]], Set[Tuple[int, int, int]]]:
    """Triangles through vertex 0, split into scalene and equilateral parts.

    Returns (T, Te) where Te holds the triangles whose three pairwise
    circular distances coincide.  Sanity conditions checked here: |T| is a
    multiple of 3 and |Te| is 1 exactly when n = 3k with k in sbar.
    """
    s = _validate_sbar(n, sbar)
    if not check_pure2_criterion(n, s):
        raise ValueError("facet orbit split requires a pure 2-dimensional complex")

    def d(k: int) -> int:
        return circ_distance(k, n)

    t_set: Set[Tuple[int, int, int]] = set()
    te_set: Set[Tuple[int, int, int]] = set()
    for a in range(1, n):
        if d(a) not in s:
            continue
        for b in range(a + 1, n):
            if d(b) in s and d(b - a) in s:
                tri = (0, a, b)
                if d(a) == d(b) == d(b - a):
                    te_set.add(tri)
                else:
                    t_set.add(tri)
    assert len(t_set) % 3 == 0, f"|T|={len(t_set)} not divisible by 3"
    expect_te = 1 if (n % 3 == 0 and n // 3 in s) else 0
    assert len(te_set) == expect_te, f"|Te|={len(te_set)}, expected {expect_te}"
    return t_set, te_set


def h3_formula(n: int, sbar: Iterable[int], t: int, has_te: bool) -> int:
    """Closed form for the last h-vector entry of a pure 2-dim complex.

    t is one third of the scalene triangle count through a fixed vertex;
    when n = 3k with k an allowed distance, the lone equilateral triangle
    contributes an extra k.
    """
    s = len(frozenset(sbar))
    value = -1 + n * (t - s + 1)
    if has_te:
        value += n // 3
    return value
