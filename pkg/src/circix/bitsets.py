"""Vertex sets as integer bitmasks.

Every face, facet and vertex neighborhood in this package is an int whose
bit i stands for vertex i.  Python ints are unbounded, so nothing here caps
the vertex count; practical use stays well under 64 vertices.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_bits(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def rotate(mask: int, shift: int, n: int) -> int:
    """Rotate a bitmask on the vertex universe {0,...,n-1}: bit i -> bit i+shift mod n."""
    shift %= n
    if shift == 0:
        return mask
    full = (1 << n) - 1
    return ((mask << shift) | (mask >> (n - shift))) & full


def reflect(mask: int, n: int) -> int:
    """Send bit i to bit -i mod n (the mirror symmetry of the cycle)."""
    out = 0
    for i in bits(mask):
        out |= 1 << ((n - i) % n)
    return out
