"""Generic matroid machinery over bitmask ground sets.

A matroid is a rank oracle on subsets of a ground mask.  The ground set is
not required to be {0..n-1}: minor views keep their parent's element
labels, so `ground` is an arbitrary mask inside a mask space of `width`
bits.  Enumerative operations (axiom checking, flats, uniformity) walk the
submasks of `ground` and refuse above their stated size limits.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ParameterError, SizeRefusal
from .subsets import (
    bits_of,
    full_mask,
    masks_of_size,
    popcount,
    popcount_array,
    submasks,
)

_AXIOM_LIMIT = 14
_FLATS_LIMIT = 24


class Matroid:
    """Base rank oracle.  Subclasses implement rank(mask)."""

    width: int  # number of bits in the mask space
    ground: int  # mask of the ground set

    @property
    def ground_size(self) -> int:
        return popcount(self.ground)

    def rank(self, x: int) -> int:
        raise NotImplementedError

    def rank_array(self, masks: np.ndarray) -> np.ndarray:
        """Vectorized rank; default falls back to the scalar oracle."""
        return np.fromiter(
            (self.rank(int(m)) for m in masks), dtype=np.int64, count=len(masks)
        )

    def full_rank(self) -> int:
        return self.rank(self.ground)

    def _check_subset(self, x: int) -> None:
        if x & ~self.ground:
            raise ValueError(
                f"mask {x:#x} has elements outside the ground set {self.ground:#x}"
            )


class TableMatroid(Matroid):
    """Explicit rank table on ground {0..n-1}; no axiom validation on input."""

    def __init__(self, n: int, table):
        self.width = n
        self.ground = full_mask(n)
        self._table = np.asarray(table, dtype=np.int64)
        if len(self._table) != 1 << n:
            raise ValueError("rank table must have 2^n entries")

    def rank(self, x: int) -> int:
        self._check_subset(x)
        return int(self._table[x])

    def rank_array(self, masks: np.ndarray) -> np.ndarray:
        return self._table[masks]


def uniform_matroid(n: int, k: int) -> TableMatroid:
    """U_n^k as an explicit table."""
    if not 0 <= k <= n:
        raise ParameterError(f"uniform matroid needs 0 <= k <= n, got k={k}, n={n}")
    masks = np.arange(1 << n, dtype=np.int64)
    return TableMatroid(n, np.minimum(popcount_array(masks), k))


class MemoMatroid(Matroid):
    """Caching wrapper for expensive rank oracles (e.g. linear matroids)."""

    def __init__(self, base: Matroid):
        self.base = base
        self.width = base.width
        self.ground = base.ground
        self._cache: dict[int, int] = {}

    def rank(self, x: int) -> int:
        r = self._cache.get(x)
        if r is None:
            r = self.base.rank(x)
            self._cache[x] = r
        return r


class MinorView(Matroid):
    """Minor of a base matroid: contract a set, keep a disjoint set.

    Elements keep their labels in the base matroid's mask space; the view's
    ground set is exactly `keep`.
    """

    def __init__(self, base: Matroid, contract: int, keep: int):
        base._check_subset(contract | keep)
        if contract & keep:
            raise ParameterError("contract and keep sets must be disjoint")
        # flatten nested views so rank evaluation stays one level deep
        if isinstance(base, MinorView):
            contract = contract | base.contract
            base = base.base
        self.base = base
        self.contract = contract
        self.keep = keep
        self.width = base.width
        self.ground = keep
        self._r0 = base.rank(contract)

    def rank(self, x: int) -> int:
        self._check_subset(x)
        return self.base.rank(x | self.contract) - self._r0

    def rank_array(self, masks: np.ndarray) -> np.ndarray:
        return self.base.rank_array(masks | np.int64(self.contract)) - self._r0


def contract(m: Matroid, x: int) -> MinorView:
    m._check_subset(x)
    return MinorView(m, x, m.ground & ~x)


def restrict(m: Matroid, y: int) -> MinorView:
    m._check_subset(y)
    return MinorView(m, 0, y)


def delete(m: Matroid, y: int) -> MinorView:
    m._check_subset(y)
    return MinorView(m, 0, m.ground & ~y)


def minor(m: Matroid, contract_x: int, delete_y: int) -> MinorView:
    if contract_x & delete_y:
        raise ParameterError("contract and delete sets overlap")
    m._check_subset(contract_x | delete_y)
    return MinorView(m, contract_x, m.ground & ~contract_x & ~delete_y)


def rank_vector(m: Matroid, masks: np.ndarray, chunk: int = 1 << 18) -> np.ndarray:
    """rank_array in chunks (keeps memory bounded for big enumerations)."""
    out = np.empty(len(masks), dtype=np.int64)
    for i in range(0, len(masks), chunk):
        out[i : i + chunk] = m.rank_array(masks[i : i + chunk])
    return out


def _ground_submasks(m: Matroid) -> np.ndarray:
    if m.ground == full_mask(m.width):
        return np.arange(1 << m.width, dtype=np.int64)
    return np.array(submasks(m.ground), dtype=np.int64)


@dataclass
class AxiomReport:
    r1_ok: bool
    r2_ok: bool
    r3_ok: bool
    counterexamples: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.r1_ok and self.r2_ok and self.r3_ok


def check_axioms(m: Matroid, chunk: int = 256) -> AxiomReport:
    """Exhaustive check of (R.1) bounds, (R.2) monotonicity, (R.3) submodularity.

    Enumerates all 4^t subset pairs; refuses when the ground set has more
    than 14 elements.  On failure the report carries the first violating
    (X, Y) pair in ascending mask order.
    """
    t = m.ground_size
    if t > _AXIOM_LIMIT:
        raise SizeRefusal(
            f"axiom check enumerates 4^{t} pairs; limit is ground size {_AXIOM_LIMIT}"
        )
    subs = _ground_submasks(m)
    rk = rank_vector(m, subs)
    table = np.full(1 << m.width, -1, dtype=np.int64)
    table[subs] = rk

    report = AxiomReport(True, True, True)

    bad1 = (rk < 0) | (rk > popcount_array(subs))
    if bad1.any():
        i = int(np.argmax(bad1))
        report.r1_ok = False
        report.counterexamples["R1"] = (int(subs[i]), int(subs[i]))

    for lo in range(0, len(subs), chunk):
        xs = subs[lo : lo + chunk]
        rx = rk[lo : lo + chunk][:, None]
        xs2 = xs[:, None]
        ys = subs[None, :]
        ry = rk[None, :]
        if report.r2_ok:
            bad2 = ((xs2 & ~ys) == 0) & (rx > ry)
            if bad2.any():
                i, j = np.argwhere(bad2)[0]
                report.r2_ok = False
                report.counterexamples["R2"] = (int(xs[i]), int(subs[j]))
        if report.r3_ok:
            bad3 = rx + ry < table[xs2 | ys] + table[xs2 & ys]
            if bad3.any():
                i, j = np.argwhere(bad3)[0]
                report.r3_ok = False
                report.counterexamples["R3"] = (int(xs[i]), int(subs[j]))
        if not (report.r2_ok or report.r3_ok):
            break
    return report


def closure(m: Matroid, x: int) -> int:
    """cl(x) = x together with every element whose addition keeps the rank."""
    m._check_subset(x)
    r = m.rank(x)
    out = x
    rest = m.ground & ~x
    for e in bits_of(rest):
        if m.rank(x | (1 << e)) == r:
            out |= 1 << e
    return out


def is_flat(m: Matroid, f: int) -> bool:
    return closure(m, f) == f


def flats(m: Matroid) -> list[int]:
    """All flats, sorted by (cardinality, mask value).  Refuses above 24 elements."""
    t = m.ground_size
    if t > _FLATS_LIMIT:
        raise SizeRefusal(
            f"flat enumeration walks 2^{t} subsets; limit is ground size {_FLATS_LIMIT}"
        )
    subs = _ground_submasks(m)
    rk = rank_vector(m, subs)
    table = np.full(1 << m.width, -1, dtype=np.int64)
    table[subs] = rk
    flat = np.ones(len(subs), dtype=bool)
    for e in bits_of(m.ground):
        bit = np.int64(1 << e)
        has_e = (subs & bit) != 0
        flat &= has_e | (table[subs | bit] > rk)
    out = [int(s) for s in subs[flat]]
    out.sort(key=lambda s: (popcount(s), s))
    return out


def flats_of_minor_check(m: Matroid, f: int, x: int) -> bool:
    """Check both minor-flat identities against direct closure scans.

    Contraction by the flat f: flats of M/f must be exactly the sets A in
    E-f with A|f a flat of M.  Deletion of x: flats of M\\x must be exactly
    {F - x : F a flat of M}.
    """
    m._check_subset(f | x)
    if not is_flat(m, f):
        raise ParameterError("contraction set must be a flat of the matroid")
    direct_c = set(flats(contract(m, f)))
    via_m = {
        int(a) for a in submasks(m.ground & ~f) if is_flat(m, a | f)
    }
    if direct_c != via_m:
        return False
    direct_d = set(flats(delete(m, x)))
    via_m2 = {fl & ~x for fl in flats(m)}
    return direct_d == via_m2


def is_uniform(m: Matroid, chunk: int = 1 << 16):
    """Return (ground_size, k) if m is the uniform matroid of its rank, else None.

    Uses the standard reduction: m is uniform iff every subset of size
    rank(E) has full rank.
    """
    t = m.ground_size
    k = m.full_rank()
    if k == 0:
        return (t, 0)
    buf = []
    for mask in masks_of_size(m.ground, k):
        buf.append(mask)
        if len(buf) >= chunk:
            if not _all_rank(m, buf, k):
                return None
            buf = []
    if buf and not _all_rank(m, buf, k):
        return None
    return (t, k)


def _all_rank(m: Matroid, masks: list[int], k: int) -> bool:
    arr = np.array(masks, dtype=np.int64)
    return bool((m.rank_array(arr) == k).all())


def is_uniform_by_definition(m: Matroid):
    """Definition-level check: rank(X) = min(|X|, rank(E)) for every subset.

    Independent cross-check for is_uniform; walks all 2^t subsets.
    """
    t = m.ground_size
    if t > _FLATS_LIMIT:
        raise SizeRefusal(f"definition-level uniformity check limited to {_FLATS_LIMIT}")
    k = m.full_rank()
    subs = _ground_submasks(m)
    rk = rank_vector(m, subs)
    if (rk == np.minimum(popcount_array(subs), k)).all():
        return (t, k)
    return None
