"""Exact matrix ranks over the rationals and over prime fields.

Boundary matrices of simplicial complexes are sparse with entries +-1, so
rank over Q is computed by sparse integer elimination that prefers unit
pivots (no entry growth, no division).  If a nonzero submatrix without unit
entries remains, the leftover core falls back to exact Fraction elimination;
for boundary-style matrices the core is almost always empty.

GF(p) ranks use dense vectorized elimination; with p < 2^15 all products
stay inside int64.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Sequence

import numpy as np

DEFAULT_PRIME = 32003


def rank_over_q(rows: Iterable[Dict[int, int]]) -> int:
    """Rank of an integer matrix given as sparse rows {col: value}."""
    work: List[Dict[int, int]] = [dict(r) for r in rows if r]
    rank = 0
    while work:
        # pick a unit pivot in the sparsest row that has one
        pick = -1
        pick_len = None
        for idx, row in enumerate(work):
            if any(v in (1, -1) for v in row.values()):
                if pick_len is None or len(row) < pick_len:
                    pick, pick_len = idx, len(row)
        if pick < 0:
            break
        row = work.pop(pick)
        col = next(c for c, v in row.items() if v in (1, -1))
        piv = row[col]
        rank += 1
        nxt: List[Dict[int, int]] = []
        for other in work:
            v = other.get(col)
            if v:
                mult = v * piv  # piv in {1,-1}: other - (v/piv) * row
                for c, w in row.items():
                    nv = other.get(c, 0) - mult * w
                    if nv:
                        other[c] = nv
                    else:
                        other.pop(c, None)
            if other:
                nxt.append(other)
        work = nxt
    if work:
        rank += _rank_fractions(work)
    return rank


def _rank_fractions(rows: List[Dict[int, int]]) -> int:
    """Dense exact elimination for the rare unit-pivot-free leftover."""
    cols = sorted({c for r in rows for c in r})
    pos = {c: i for i, c in enumerate(cols)}
    mat = [[Fraction(0)] * len(cols) for _ in rows]
    for i, r in enumerate(rows):
        for c, v in r.items():
            mat[i][pos[c]] = Fraction(v)
    rank = 0
    rix = 0
    for j in range(len(cols)):
        piv = None
        for i in range(rix, len(mat)):
            if mat[i][j]:
                piv = i
                break
        if piv is None:
            continue
        mat[rix], mat[piv] = mat[piv], mat[rix]
        pr = mat[rix]
        for i in range(rix + 1, len(mat)):
            if mat[i][j]:
                factor = mat[i][j] / pr[j]
                mat[i] = [a - factor * b for a, b in zip(mat[i], pr)]
        rank += 1
        rix += 1
        if rix == len(mat):
            break
    return rank


def rank_mod_p(rows: Iterable[Dict[int, int]], p: int = DEFAULT_PRIME) -> int:
    """Rank over GF(p) by dense elimination on int64 arrays."""
    rows = [r for r in rows if r]
    if not rows:
        return 0
    cols = sorted({c for r in rows for c in r})
    pos = {c: i for i, c in enumerate(cols)}
    a = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for i, r in enumerate(rows):
        for c, v in r.items():
            a[i, pos[c]] = v % p
    rank = 0
    rix = 0
    for j in range(a.shape[1]):
        nz = np.nonzero(a[rix:, j])[0]
        if nz.size == 0:
            continue
        piv = rix + nz[0]
        if piv != rix:
            a[[rix, piv]] = a[[piv, rix]]
        inv = pow(int(a[rix, j]), p - 2, p)
        a[rix] = (a[rix] * inv) % p
        col = a[rix + 1:, j]
        hit = np.nonzero(col)[0]
        if hit.size:
            a[rix + 1 + hit] = (a[rix + 1 + hit] - np.outer(col[hit], a[rix])) % p
        rank += 1
        rix += 1
        if rix == a.shape[0]:
            break
    return rank


def dense_to_sparse(matrix: Sequence[Sequence[int]]) -> List[Dict[int, int]]:
    return [{j: v for j, v in enumerate(row) if v} for row in matrix]
