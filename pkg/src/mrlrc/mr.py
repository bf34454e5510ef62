"""Closed-form matroid of an (n, k, r) maximally recoverable LRC.

The code has length n, dimension k, locality r, g = n/(r+1) disjoint
repair sets of size r+1 each, and h = g*r - k heavy parities.  The rank of
a subset A is min(k, |A| - #{i : R_i contained in A}); equivalently the
truncation at k of the direct sum of the per-repair-set uniform ranks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterError, SizeRefusal
from .matroid import Matroid
from .subsets import (
    format_indices,
    full_mask,
    mask_of,
    parse_indices,
    popcount,
    popcount_array,
)

_MR_FLATS_LIMIT = 24


@dataclass(frozen=True)
class MrParams:
    """Validated (n, k, r) with the repair-set partition (as masks)."""

    n: int
    k: int
    r: int
    repair_sets: tuple[int, ...]

    @property
    def g(self) -> int:
        return self.n // (self.r + 1)

    @property
    def h(self) -> int:
        return self.g * self.r - self.k

    def to_text(self) -> str:
        base = f"{self.n},{self.k},{self.r}"
        if self.repair_sets != _contiguous_partition(self.n, self.r):
            base += ":" + ";".join(format_indices(b) for b in self.repair_sets)
        return base


def _contiguous_partition(n: int, r: int) -> tuple[int, ...]:
    size = r + 1
    return tuple(mask_of(range(i, i + size)) for i in range(0, n, size))


def make_params(n: int, k: int, r: int, partition=None) -> MrParams:
    if n <= 0:
        raise ParameterError(f"code length must be positive, got n={n}")
    if r < 1:
        raise ParameterError(f"locality must be at least 1, got r={r}")
    if n % (r + 1) != 0:
        raise ParameterError(f"divisibility failure: (r+1)={r + 1} does not divide n={n}")
    g = n // (r + 1)
    if k <= r:
        raise ParameterError(f"dimension must exceed locality: need k > r, got k={k}, r={r}")
    if k > g * r:
        raise ParameterError(f"dimension too large: need k <= g*r = {g * r}, got k={k}")
    if partition is None:
        blocks = _contiguous_partition(n, r)
    else:
        blocks = tuple(int(b) for b in partition)
        if len(blocks) != g:
            raise ParameterError(f"malformed partition: expected {g} repair sets, got {len(blocks)}")
        union = 0
        for b in blocks:
            if popcount(b) != r + 1:
                raise ParameterError(
                    f"malformed partition: repair set {format_indices(b)} has size {popcount(b)}, expected {r + 1}"
                )
            if union & b:
                raise ParameterError("malformed partition: repair sets overlap")
            union |= b
        if union != full_mask(n):
            raise ParameterError("malformed partition: repair sets do not cover the ground set")
    return MrParams(n, k, r, blocks)


def parse_params(text: str) -> MrParams:
    """Parse "n,k,r" or "n,k,r:0,1,2,3;4,5,6,7" (semicolon-separated blocks)."""
    text = text.strip()
    if ":" in text:
        head, part = text.split(":", 1)
        partition = [parse_indices(p) for p in part.split(";")]
    else:
        head, partition = text, None
    fields = head.split(",")
    if len(fields) != 3:
        raise ValueError(f"expected 'n,k,r[:partition]', got {text!r}")
    try:
        n, k, r = (int(f) for f in fields)
    except ValueError as exc:
        raise ValueError(f"non-integer parameter in {text!r}") from exc
    return make_params(n, k, r, partition)


class MrMatroid(Matroid):
    """Rank oracle of the (n, k, r)-MR matroid."""

    def __init__(self, params: MrParams):
        if params.n > 64:
            raise ParameterError(f"matroid ground sets are limited to 64 elements, got n={params.n}")
        self.params = params
        self.width = params.n
        self.ground = full_mask(params.n)

    def rank(self, x: int) -> int:
        self._check_subset(x)
        full = sum(1 for b in self.params.repair_sets if x & b == b)
        return min(self.params.k, popcount(x) - full)

    def rank_array(self, masks: np.ndarray) -> np.ndarray:
        full = np.zeros(len(masks), dtype=np.int64)
        for b in self.params.repair_sets:
            bb = np.int64(b)
            full += (masks & bb) == bb
        return np.minimum(self.params.k, popcount_array(masks) - full)

    def rank_direct_sum(self, x: int) -> int:
        """Alternate form: truncation at k of per-repair-set uniform ranks."""
        self._check_subset(x)
        total = sum(min(popcount(x & b), self.params.r) for b in self.params.repair_sets)
        return min(self.params.k, total)


def make_mr(n: int, k: int, r: int, partition=None) -> MrMatroid:
    return MrMatroid(make_params(n, k, r, partition))


def mr_flats(m: MrMatroid, chunk: int = 1 << 20) -> list[int]:
    """Flats from the closed-form characterization, sorted by (size, mask).

    F != E is a flat iff no repair set meets F in exactly r elements and
    |F| - #{full repair sets inside F} < k.  Must agree with the
    closure-scan flats of the generic machinery.
    """
    p = m.params
    if p.n > _MR_FLATS_LIMIT:
        raise SizeRefusal(f"mr_flats enumerates 2^{p.n} subsets; limit is n <= {_MR_FLATS_LIMIT}")
    out = []
    total = 1 << p.n
    for lo in range(0, total, chunk):
        masks = np.arange(lo, min(lo + chunk, total), dtype=np.int64)
        full = np.zeros(len(masks), dtype=np.int64)
        bad = np.zeros(len(masks), dtype=bool)
        for b in p.repair_sets:
            inter = popcount_array(masks & np.int64(b))
            full += inter == p.r + 1
            bad |= inter == p.r
        keep = ~bad & (popcount_array(masks) - full < p.k)
        out.extend(int(s) for s in masks[keep])
    e = m.ground
    if e not in out:
        out.append(e)
    out.sort(key=lambda s: (popcount(s), s))
    return out


def mr_flat_rank(m: MrMatroid, f: int) -> int:
    """Rank of a proper flat: |F| minus the number of repair sets inside it."""
    p = m.params
    m._check_subset(f)
    if f == m.ground:
        raise ParameterError("flat rank formula applies to proper flats only")
    full = 0
    for b in p.repair_sets:
        inter = popcount(f & b)
        if inter == p.r + 1:
            full += 1
        elif inter == p.r:
            raise ParameterError(f"{format_indices(f)} is not a flat: meets a repair set in r elements")
    if popcount(f) - full >= p.k:
        raise ParameterError(f"{format_indices(f)} is not a proper flat: rank formula reaches k")
    return popcount(f) - full


def valid_param_triples(n_max: int):
    """All valid (n, k, r) with n <= n_max, ascending."""
    out = []
    for n in range(2, n_max + 1):
        for r in range(1, n):
            if n % (r + 1) != 0:
                continue
            g = n // (r + 1)
            for k in range(r + 1, g * r + 1):
                out.append((n, k, r))
    return out
