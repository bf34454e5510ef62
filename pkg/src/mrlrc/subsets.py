"""Bitmask subsets of a ground set {0, ..., n-1}, n <= 64.

A subset is a plain int whose set bits are the member indices.  All set
algebra is the usual &, |, ^, ~ restricted to the ground mask.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

MAX_GROUND = 64


def full_mask(n: int) -> int:
    if not 0 <= n <= MAX_GROUND:
        raise ValueError(f"ground size must be in [0, {MAX_GROUND}], got {n}")
    return (1 << n) - 1


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def bits_of(mask: int) -> list[int]:
    """Member indices in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return mask.bit_count()


def lowest_bits(mask: int, t: int) -> int:
    """Mask of the t smallest members of mask."""
    out = 0
    while t > 0:
        if not mask:
            raise ValueError("mask has fewer members than requested")
        low = mask & -mask
        out |= low
        mask ^= low
        t -= 1
    return out


def submasks(mask: int) -> list[int]:
    """All submasks of mask, ascending by numeric value."""
    subs = []
    s = 0
    while True:
        subs.append(s)
        if s == mask:
            break
        s = (s - mask) & mask
    subs.sort()
    return subs


def masks_of_size(mask: int, t: int):
    """Yield all size-t submasks of mask (order: combinations of ascending bits)."""
    els = bits_of(mask)
    for comb in combinations(els, t):
        m = 0
        for i in comb:
            m |= 1 << i
        yield m


def format_indices(mask: int) -> str:
    return ",".join(str(i) for i in bits_of(mask))


def parse_indices(text: str) -> int:
    text = text.strip()
    if not text:
        return 0
    return mask_of(int(tok) for tok in text.split(","))


# SWAR popcount for uint64 numpy arrays (no np.bitwise_count dependency).
_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)


def popcount_array(a: np.ndarray) -> np.ndarray:
    """Popcount of each entry; returns int64 array."""
    x = a.astype(np.uint64)
    x = x - ((x >> np.uint64(1)) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    with np.errstate(over="ignore"):
        x = (x * _H01) >> np.uint64(56)
    return x.astype(np.int64)
