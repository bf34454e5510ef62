"""Uniform minors of MR matroids: constructive witnesses and an exhaustive oracle.

A witness is a (contract-flat F, delete-set X) pair together with the
target rank k' and the size n' of the resulting minor.  Constructors build
the witness for each of the four size formulas; the oracle searches all
contract-flats of the right rank (sufficient by the Scum theorem) together
with arbitrary deletions, sharing nothing with the constructors beyond the
rank oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations

from .errors import ParameterError, SizeRefusal
from .matroid import (
    Matroid,
    closure,
    contract,
    flats as generic_flats,
    is_uniform,
    minor,
)
from .mr import MrMatroid, mr_flats
from .subsets import bits_of, format_indices, lowest_bits, parse_indices, popcount

_ORACLE_LIMIT = 15


@dataclass(frozen=True)
class MinorWitness:
    """Certificate that minor(m, contract_flat, delete_set) = U_{claimed_size}^{target_rank}."""

    contract_flat: int
    delete_set: int
    target_rank: int
    claimed_size: int
    verified: bool = False
    boundary_case: bool = False
    formula_size: int | None = None

    def to_line(self) -> str:
        return (
            f"F={format_indices(self.contract_flat)}; "
            f"X={format_indices(self.delete_set)}; "
            f"k'={self.target_rank}; n'={self.claimed_size}; "
            f"verified={str(self.verified).lower()}; "
            f"boundary={str(self.boundary_case).lower()}"
        )

    @classmethod
    def from_line(cls, line: str) -> "MinorWitness":
        parts = {}
        for tok in line.split(";"):
            key, _, val = tok.strip().partition("=")
            parts[key] = val
        try:
            return cls(
                contract_flat=parse_indices(parts["F"]),
                delete_set=parse_indices(parts["X"]),
                target_rank=int(parts["k'"]),
                claimed_size=int(parts["n'"]),
                verified=parts.get("verified", "false") == "true",
                boundary_case=parts.get("boundary", "false") == "true",
            )
        except KeyError as exc:
            raise ValueError(f"malformed witness line: {line!r}") from exc


def verify_witness(m: Matroid, w: MinorWitness) -> bool:
    """Re-derive the certificate: flat, disjointness, size, and uniformity."""
    if w.contract_flat & w.delete_set:
        return False
    if (w.contract_flat | w.delete_set) & ~m.ground:
        return False
    if w.claimed_size != m.ground_size - popcount(w.contract_flat) - popcount(w.delete_set):
        return False
    if closure(m, w.contract_flat) != w.contract_flat:
        return False
    view = minor(m, w.contract_flat, w.delete_set)
    return is_uniform(view) == (w.claimed_size, w.target_rank)


def _verified(m: Matroid, w: MinorWitness) -> MinorWitness:
    w = replace(w, verified=verify_witness(m, w))
    if not w.verified:
        raise RuntimeError(f"constructed witness failed verification: {w.to_line()}")
    return w


def witness_eq1(m: MrMatroid) -> MinorWitness:
    """Delete one element per repair set: a U_{n-g}^{k} minor."""
    p = m.params
    x = 0
    for b in p.repair_sets:
        x |= b & -b
    w = MinorWitness(0, x, p.k, p.n - p.g, formula_size=p.n - p.g)
    return _verified(m, w)


def witness_eq2(m: MrMatroid) -> MinorWitness:
    """Rank-r uniform minor of size n - k + r - ceil(k/r) + 1.

    If r | k, contract k/r - 1 whole repair sets.  Otherwise contract
    floor(k/r) - 1 whole sets plus a partial block completing the rank to
    k - r, and delete one leftover element of that block.
    """
    p = m.params
    n, k, r = p.n, p.k, p.r
    kr = k // r
    if k % r == 0:
        f = 0
        for b in p.repair_sets[: kr - 1]:
            f |= b
        x = 0
    else:
        f = 0
        for b in p.repair_sets[: kr - 1]:
            f |= b
        rho_f1 = (kr - 1) * r
        block = p.repair_sets[kr - 1]
        bpart = lowest_bits(block, k - r - rho_f1)
        f |= bpart
        x = (block & ~bpart) & -(block & ~bpart)
    size = n - k + r - -(-k // r) + 1
    w = MinorWitness(f, x, r, size, formula_size=size)
    return _verified(m, w)


def eq3_formula(p, k_prime: int) -> tuple[int, int]:
    """(formula size, j) for the rank-k' proposition; floor is toward -infinity."""
    j = (-p.h) // k_prime + p.g
    return p.n - p.k + k_prime - max(j, 0), j


def witness_eq3(m: MrMatroid, k_prime: int) -> MinorWitness:
    """Rank-k' uniform minor for 2 <= k' <= r-1, X empty.

    Contract j whole repair sets (j minimal such that the remaining
    k - k' - j*r rank can be spread with at most r - k' elements per
    remaining block) plus that spread.  When the strict-inequality j of
    the closed formula exceeds this minimal j (exact-fit boundary), the
    verified minor is larger than the formula value and the witness is
    flagged as a boundary case.
    """
    p = m.params
    n, k, r, g = p.n, p.k, p.r, p.g
    if not 2 <= k_prime <= r - 1:
        raise ParameterError(f"rank target must satisfy 2 <= k' <= r-1, got k'={k_prime}, r={r}")
    formula_size, _ = eq3_formula(p, k_prime)

    cap = r - k_prime
    need_total = k - k_prime
    j = None
    for jp in range(g):
        if need_total - jp * r <= (g - jp) * cap:
            j = jp
            break
    if j is None or need_total - j * r < 0:
        return _bounded_search_fallback(m, k_prime, formula_size)

    f = 0
    for b in p.repair_sets[:j]:
        f |= b
    need = need_total - j * r
    for b in p.repair_sets[j:]:
        if need <= 0:
            break
        take = min(need, cap)
        f |= lowest_bits(b, take)
        need -= take
    if need > 0:
        return _bounded_search_fallback(m, k_prime, formula_size)

    size = n - popcount(f)
    w = MinorWitness(
        f, 0, k_prime, size,
        boundary_case=size != formula_size,
        formula_size=formula_size,
    )
    return _verified(m, w)


def _bounded_search_fallback(m: MrMatroid, k_prime: int, formula_size: int) -> MinorWitness:
    # only reachable if the constructive build is inapplicable; Scum-compliant search
    size, w = oracle_max_uniform(m, k_prime)
    if size < formula_size:
        raise RuntimeError(
            f"no uniform minor of the formula size {formula_size} found for k'={k_prime}"
        )
    return replace(w, boundary_case=True, formula_size=formula_size)


def witness_eq4(m: MrMatroid, k_prime: int) -> MinorWitness:
    """Rank-k' uniform minor for r < k' < k, of size n - g - k + k'.

    Delete one element per repair set, then contract a (k-k')-set that is
    independent and a flat (at most r-1 elements per block).  When the
    spread capacity g*(r-1) is short, whole repair sets join the contract
    side instead; the size formula is unchanged.
    """
    p = m.params
    n, k, r, g = p.n, p.k, p.r, p.g
    if not r < k_prime < k:
        raise ParameterError(f"rank target must satisfy r < k' < k, got k'={k_prime}")
    need_total = k - k_prime
    j = None
    for jp in range(g):
        if need_total - jp * r <= (g - jp) * (r - 1):
            j = jp
            break
    if j is None or need_total - j * r < 0:
        raise RuntimeError("no repair-set split reaches the required contraction rank")

    f = 0
    for b in p.repair_sets[:j]:
        f |= b
    need = need_total - j * r
    for b in p.repair_sets[j:]:
        if need <= 0:
            break
        take = min(need, r - 1)
        f |= lowest_bits(b, take)
        need -= take

    x = 0
    for b in p.repair_sets:
        if f & b == b:
            continue
        rest = b & ~f
        x |= rest & -rest
    size = n - g - k + k_prime
    w = MinorWitness(f, x, k_prime, size, formula_size=size)
    return _verified(m, w)


def _rank_flats(m: Matroid, target_rank: int) -> list[int]:
    if isinstance(m, MrMatroid):
        all_flats = mr_flats(m)
    else:
        all_flats = generic_flats(m)
    return [f for f in all_flats if m.rank(f) == target_rank]


def _small_circuits(view: Matroid, k_prime: int) -> list[int]:
    """Minimal dependent sets of size <= k' in the view."""
    circuits: list[int] = []
    els = bits_of(view.ground)
    for size in range(1, k_prime + 1):
        for comb in combinations(els, size):
            mask = 0
            for e in comb:
                mask |= 1 << e
            if any(c & mask == c for c in circuits):
                continue
            if view.rank(mask) < size:
                circuits.append(mask)
    return circuits


def _max_circuit_free(ground: int, circuits: list[int]) -> int:
    """Largest submask of ground containing no circuit (branch and bound)."""
    best = [0, 0]
    seen = set()

    def rec(cur: int) -> None:
        if popcount(cur) <= best[0]:
            return
        if cur in seen:
            return
        seen.add(cur)
        for c in circuits:
            if c & cur == c:
                for e in bits_of(c):
                    rec(cur & ~(1 << e))
                return
        best[0] = popcount(cur)
        best[1] = cur

    rec(ground)
    return best[1]


def oracle_max_uniform(m: Matroid, k_prime: int) -> tuple[int, MinorWitness | None]:
    """Largest uniform minor of rank k', by exhaustive search over contract-flats.

    By the Scum theorem it suffices to contract flats of rank
    rank(E) - k'; deletions are then chosen to kill every dependent set of
    size <= k' in the contracted matroid.
    """
    t = m.ground_size
    if t > _ORACLE_LIMIT:
        raise SizeRefusal(f"oracle search limited to ground size {_ORACLE_LIMIT}, got {t}")
    k0 = m.full_rank()
    if not 2 <= k_prime <= k0:
        raise ParameterError(f"oracle rank target must satisfy 2 <= k' <= rank(E)={k0}")
    best_size = 0
    best: MinorWitness | None = None
    for f in _rank_flats(m, k0 - k_prime):
        ground = m.ground & ~f
        if popcount(ground) <= best_size or popcount(ground) < k_prime:
            continue
        view = contract(m, f)
        circuits = _small_circuits(view, k_prime)
        keep = _max_circuit_free(ground, circuits)
        size = popcount(keep)
        if size < k_prime or size <= best_size:
            continue
        w = MinorWitness(f, ground & ~keep, k_prime, size, verified=True)
        if verify_witness(m, w):
            best_size = size
            best = w
    return best_size, best


def oracle_max_uniform_all(m: Matroid) -> dict[int, int]:
    """Table k' -> largest uniform-minor size, for 2 <= k' <= rank(E)."""
    k0 = m.full_rank()
    return {kp: oracle_max_uniform(m, kp)[0] for kp in range(2, k0 + 1)}


def unrestricted_max_uniform(m: Matroid, k_prime: int) -> int:
    """Like the oracle but contracting arbitrary sets, not just flats.

    Used to confirm that restricting the search to flats loses nothing.
    """
    t = m.ground_size
    if t > 10:
        raise SizeRefusal("unrestricted search limited to ground size 10")
    k0 = m.full_rank()
    if not 2 <= k_prime <= k0:
        raise ParameterError(f"rank target must satisfy 2 <= k' <= rank(E)={k0}")
    best = 0
    from .subsets import submasks

    for c in submasks(m.ground):
        if m.rank(c) != k0 - k_prime:
            continue
        ground = m.ground & ~c
        if popcount(ground) <= best or popcount(ground) < k_prime:
            continue
        view = contract(m, c)
        keep = _max_circuit_free(ground, _small_circuits(view, k_prime))
        size = popcount(keep)
        if size >= k_prime:
            best = max(best, size)
    return best
