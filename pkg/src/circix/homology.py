"""Exact reduced simplicial homology and the Reisner-style ring criteria.

Betti numbers come from exact ranks of boundary matrices, over the
rationals by default or over GF(p) on request.  Complexes that split as
joins (detected through the non-coface graph and verified against the
facet product structure) are handled by the Kunneth rule for joins, which
collapses cones, simplices and cross-polytope-like complexes without any
matrix work.

Cohen-Macaulayness follows the link-vanishing criterion: every face,
including the empty one, must have a link with no reduced homology below
its dimension.  Buchsbaumness asks the same of every vertex link.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

from .bitsets import bits
from .complexes import (
    SimplicialComplex,
    canonical_key,
    faces,
    link,
)
from .exactrank import DEFAULT_PRIME, rank_mod_p, rank_over_q

FieldSpec = Union[str, int]

RATIONALS = "rationals"


def field_key(field: FieldSpec) -> Union[str, int]:
    """Normalize a coefficient-field descriptor: 'rationals'/'q' or a prime."""
    if isinstance(field, str):
        if field.lower() in ("q", "rationals", "rational"):
            return "Q"
        if field.isdigit():
            field = int(field)
        else:
            raise ValueError(f"unknown coefficient field {field!r}")
    if isinstance(field, int):
        if field < 2 or any(field % d == 0 for d in range(2, min(field, 1000)) if d * d <= field):
            raise ValueError(f"field characteristic must be prime, got {field}")
        return field
    raise ValueError(f"unknown coefficient field {field!r}")


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced Betti numbers (b_-1, b_0, ..., b_dim) over a fixed field."""

    field: FieldSpec
    betti: Tuple[int, ...]

    def b(self, i: int) -> int:
        """Betti number in degree i (i >= -1); zero outside the stored range."""
        j = i + 1
        return self.betti[j] if 0 <= j < len(self.betti) else 0


def _sorted_faces(c: SimplicialComplex, k: int) -> List[int]:
    return sorted(faces(c, k))


def boundary_matrix(c: SimplicialComplex, i: int) -> List[List[int]]:
    """Dense matrix of the i-th boundary map, (i-1)-faces by i-faces.

    Columns follow ascending-bitmask order of the i-faces, rows of the
    (i-1)-faces; orientation comes from ascending vertex order.  The 0-th
    matrix is the augmentation row onto the empty face.
    """
    if c.is_void:
        raise ValueError("void complex has no boundary maps")
    if not 0 <= i <= c.dim:
        raise ValueError(f"boundary index {i} outside 0..{c.dim}")
    high = _sorted_faces(c, i)
    low = _sorted_faces(c, i - 1)
    low_index = {f: r for r, f in enumerate(low)}
    mat = [[0] * len(high) for _ in low]
    for col, f in enumerate(high):
        for j, v in enumerate(bits(f)):
            mat[low_index[f & ~(1 << v)]][col] += (-1) ** j
    return mat


def _boundary_sparse_rows(high: List[int], low_index: Dict[int, int]) -> List[Dict[int, int]]:
    rows: List[Dict[int, int]] = [dict() for _ in range(len(low_index))]
    for col, f in enumerate(high):
        for j, v in enumerate(bits(f)):
            rows[low_index[f & ~(1 << v)]][col] = (-1) ** j
    return rows


def _rank(rows: List[Dict[int, int]], fk: Union[str, int]) -> int:
    return rank_over_q(rows) if fk == "Q" else rank_mod_p(rows, fk)


def _betti_by_matrices(c: SimplicialComplex, fk: Union[str, int]) -> Tuple[int, ...]:
    d = c.dim
    layers = [_sorted_faces(c, k) for k in range(-1, d + 1)]
    counts = [len(layer) for layer in layers]      # counts[k+1] = f_k
    ranks = [0] * (d + 2)                          # ranks[i] = rank of boundary_i; entry d+1 stays 0
    for i in range(0, d + 1):
        low_index = {f: r for r, f in enumerate(layers[i])}
        rows = _boundary_sparse_rows(layers[i + 1], low_index)
        ranks[i] = _rank(rows, fk)
    betti = []
    for i in range(-1, d + 1):
        # b_i = nullity(boundary_i) - rank(boundary_{i+1}); boundary_{-1} is the zero map
        r_here = ranks[i] if i >= 0 else 0
        betti.append(counts[i + 1] - r_here - ranks[i + 1])
    sign = lambda i: 1 if i % 2 == 0 else -1
    chi = sum(sign(i) * counts[i + 1] for i in range(-1, d + 1))
    assert sum(sign(i) * b for i, b in zip(range(-1, d + 1), betti)) == chi, \
        "alternating Betti sum disagrees with the Euler characteristic"
    return tuple(betti)


def join_factors(c: SimplicialComplex) -> Optional[List[SimplicialComplex]]:
    """Split c as a join along the components of its non-coface graph.

    Returns None when c is join-indecomposable or when the candidate split
    fails the facet product check (the check makes the decomposition safe
    for arbitrary complexes, not only clique complexes).
    """
    sup = c.support
    if sup == 0 or len(c.facets) <= 1:
        return None
    cofacial = {v: 0 for v in bits(sup)}
    for f in c.facets:
        for v in bits(f):
            cofacial[v] |= f
    components: List[int] = []
    todo = sup
    while todo:
        start = todo & -todo
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= sup & ~cofacial[v]
            nxt &= ~comp
            comp |= nxt
            frontier = nxt
        components.append(comp)
        todo &= ~comp
    if len(components) <= 1:
        return None
    parts: List[SimplicialComplex] = []
    total = 1
    for comp in components:
        masks = {f & comp for f in c.facets}
        total *= len(masks)
        try:
            parts.append(SimplicialComplex(c.n_vertices, tuple(sorted(masks))))
        except ValueError:
            return None
    if total != len(c.facets):
        return None
    return parts


def _kunneth_join(b1: Tuple[int, ...], b2: Tuple[int, ...]) -> Tuple[int, ...]:
    """Betti numbers of a join from those of the factors (field coefficients).

    Arrays start in degree -1, and joining shifts degrees by
    deg = deg1 + deg2 + 1, so array indices simply add.
    """
    out = [0] * (len(b1) + len(b2) - 1)
    for i, x in enumerate(b1):
        if x:
            for j, y in enumerate(b2):
                if y:
                    out[i + j] += x * y
    return tuple(out)


_HOMOLOGY_CACHE: Dict[Tuple, Tuple[int, ...]] = {}
_CM_CACHE: Dict[Tuple, bool] = {}


def clear_caches() -> None:
    _HOMOLOGY_CACHE.clear()
    _CM_CACHE.clear()


def _betti(c: SimplicialComplex, fk: Union[str, int]) -> Tuple[int, ...]:
    if c.is_void:
        return (0,)
    if c.is_empty_complex:
        return (1,)
    key = (canonical_key(c), fk)
    hit = _HOMOLOGY_CACHE.get(key)
    if hit is not None:
        return hit
    parts = join_factors(c)
    if parts:
        acc = _betti(parts[0], fk)
        for p in parts[1:]:
            acc = _kunneth_join(acc, _betti(p, fk))
    else:
        acc = _betti_by_matrices(c, fk)
    _HOMOLOGY_CACHE[key] = acc
    return acc


def reduced_homology(c: SimplicialComplex, field: FieldSpec = RATIONALS) -> HomologyProfile:
    """Reduced Betti numbers of c over the requested coefficient field."""
    fk = field_key(field)
    return HomologyProfile(field=field, betti=_betti(c, fk))


def _link_vanishes_below_dim(lk: SimplicialComplex, fk: Union[str, int]) -> bool:
    if lk.is_void or lk.is_empty_complex:
        return True
    d = lk.dim
    if d <= 0:
        return True  # only degree -1 is below, and a nonvoid non-{0} complex has b_-1 = 0
    betti = _betti(lk, fk)
    return all(b == 0 for b in betti[: d + 1])


def is_cohen_macaulay(c: SimplicialComplex, field: FieldSpec = RATIONALS) -> bool:
    """Link-vanishing criterion over the given field, every face checked.

    Join factors are tested independently; over a field the join is
    Cohen-Macaulay exactly when all factors are.
    """
    fk = field_key(field)
    return _is_cm(c, fk)


def _is_cm(c: SimplicialComplex, fk: Union[str, int]) -> bool:
    if c.is_void or c.is_empty_complex:
        return True
    key = (canonical_key(c), fk)
    hit = _CM_CACHE.get(key)
    if hit is not None:
        return hit
    result = _is_cm_uncached(c, fk)
    _CM_CACHE[key] = result
    return result


def _is_cm_uncached(c: SimplicialComplex, fk: Union[str, int]) -> bool:
    parts = join_factors(c)
    if parts:
        return all(_is_cm(p, fk) for p in parts)
    d = c.dim
    if d <= 0:
        return True
    if not _link_vanishes_below_dim(c, fk):   # the empty face
        return False
    # faces of dimension up to d-2; links of larger faces have dimension
    # at most 0 and pass automatically
    for k in range(0, d - 1):
        for face in sorted(faces(c, k)):
            if not _link_vanishes_below_dim(link(c, face), fk):
                return False
    return True


def is_buchsbaum(c: SimplicialComplex, field: FieldSpec = RATIONALS) -> bool:
    """True when the link of every vertex is Cohen-Macaulay."""
    fk = field_key(field)
    if c.is_void or c.is_empty_complex:
        return True
    return all(_is_cm(link(c, 1 << v), fk) for v in bits(c.support))
