"""Closed-form uniform-minor sizes and field-size lower bounds.

Everything here is exact integer or rational arithmetic; floors of
negative quantities round toward minus infinity (Python's //).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterError
from .mr import MrParams


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def eq1_size(p: MrParams) -> int:
    """Size of the rank-k minor obtained by deleting one element per repair set."""
    return p.n - p.g


def eq2_size(p: MrParams) -> int:
    """Size of the rank-r minor."""
    return p.n - p.k + p.r - _ceil_div(p.k, p.r) + 1


def eq3_size(p: MrParams, k_prime: int) -> int:
    """Formula size of the rank-k' minor, 2 <= k' <= r-1."""
    if not 2 <= k_prime <= p.r - 1:
        raise ParameterError(f"need 2 <= k' <= r-1, got k'={k_prime}, r={p.r}")
    j = (-p.h) // k_prime + p.g
    return p.n - p.k + k_prime - max(j, 0)


def eq4_size(p: MrParams, k_prime: int) -> int:
    """Formula size of the rank-k' minor, r < k' < k."""
    if not p.r < k_prime < p.k:
        raise ParameterError(f"need r < k' < k, got k'={k_prime}")
    return p.n - p.g - p.k + k_prime


def eq3_range(p: MrParams) -> range:
    return range(2, p.r)


def eq4_range(p: MrParams) -> range:
    return range(p.r + 1, p.k)


def largest_uniform_size(p: MrParams) -> int:
    """Largest size over all uniform-minor families.

    r >= 3: n - min(g, k - r + 1).  r <= 2: n - min(g, k - r + ceil(k/r) - 1),
    which is exactly max of the rank-k and rank-r sizes (the rank range
    2..r-1 is empty there).
    """
    if p.r >= 3:
        deficit = p.k - p.r + 1
    else:
        deficit = p.k - p.r + _ceil_div(p.k, p.r) - 1
    return p.n - min(p.g, deficit)


def q_lower_gopalan(p: MrParams) -> int:
    """Baseline lower bound from the punctured MDS code: k + 1."""
    return p.k + 1


def q_lower_unconditional(p: MrParams) -> int:
    """Field-size bound not relying on the MDS conjecture, clamped at 2.

    r = 2: n - k - ceil(k/r) + 2.  r >= 3: n - k + 1 - max(j, 0) with
    j = floor(-h/2) + g.  r = 1 has no rank-2 minor family; the best
    available MDS length bound comes from the rank-k minor of size n - g.
    """
    if p.r == 1:
        val = p.n - p.g - p.k + 1
    elif p.r == 2:
        val = p.n - p.k - _ceil_div(p.k, p.r) + 2
    else:
        j = (-p.h) // 2 + p.g
        val = p.n - p.k + 1 - max(j, 0)
    return max(val, 2)


def q_unconditional_is_vacuous(p: MrParams) -> bool:
    """True when the raw formula value fell below 2 and was clamped."""
    if p.r == 1:
        raw = p.n - p.g - p.k + 1
    elif p.r == 2:
        raw = p.n - p.k - _ceil_div(p.k, p.r) + 2
    else:
        raw = p.n - p.k + 1 - max((-p.h) // 2 + p.g, 0)
    return raw < 2


def achieving_ranks(p: MrParams) -> list[int]:
    """Ranks k' whose formula size attains largest_uniform_size, ascending."""
    best = largest_uniform_size(p)
    ranks = set()
    if eq1_size(p) == best:
        ranks.add(p.k)
    if eq2_size(p) == best:
        ranks.add(p.r)
    for kp in eq3_range(p):
        if eq3_size(p, kp) == best:
            ranks.add(kp)
    return sorted(ranks)


@dataclass(frozen=True)
class ConjecturalBound:
    """MDS-conjecture-based bound: n' - 1, with the even-q exceptional cases flagged."""

    value: int
    safe_value: int
    exception_possible: bool
    achiever_ranks: tuple[int, ...]
    vacuous: bool


def q_lower_conjectural(p: MrParams) -> ConjecturalBound:
    """Largest uniform-minor size minus one, assuming the MDS conjecture.

    The conjecture's exceptions (q even with dimension 3 or q-1) cannot be
    ruled out from (n, k, r) alone, so the bound is reported as a pair:
    the optimistic n'-1 and the safe n'-2, with a flag whenever some
    achieving rank could hit an exceptional case.
    """
    best = largest_uniform_size(p)
    ranks = tuple(achieving_ranks(p))
    # exceptional dimensions for q = best - 1: dimension 3, or dimension q - 1
    exc = any(kp == 3 or kp == best - 2 for kp in ranks)
    return ConjecturalBound(
        value=max(best - 1, 2),
        safe_value=max(best - 2, 2),
        exception_possible=exc,
        achiever_ranks=ranks,
        vacuous=best - 1 < 2,
    )


def gopi_alpha(p: MrParams) -> Fraction | None:
    """Exponent of the asymptotic bound, exact rational; None when h = 0.

    Informational only: the asymptotic statement carries no constant, so
    nothing is asserted numerically from it.
    """
    if p.h == 0:
        return None
    hg = _ceil_div(p.h, p.g)
    return Fraction(min(1, p.h - 2 * hg), hg)


def rate_threshold(r: int) -> Fraction:
    """Rate below which the unconditional bound beats k + 1 (asymptotic fractions)."""
    if r <= 2:
        return Fraction(2, 5)
    if r == 3:
        return Fraction(9, 20)
    if r == 4:
        return Fraction(12, 25)
    return Fraction(1, 2)


@dataclass(frozen=True)
class ThresholdReport:
    rate: Fraction
    threshold: Fraction
    q_unconditional: int
    q_gopalan: int
    improves: bool
    predicted_improves: bool
    consistent: bool
    near_boundary: bool


def threshold_report(p: MrParams) -> ThresholdReport:
    """Compare the unconditional bound against k + 1 and the rate threshold.

    Empirically (integer grid n <= 200) the prediction is exact for r >= 2
    except at rate == threshold, where the two bounds tie; those rows (and
    all of r = 1, outside the threshold statements) are marked
    near_boundary and should be reported, not asserted.
    """
    rate = Fraction(p.k, p.n)
    thr = rate_threshold(p.r)
    qu = q_lower_unconditional(p)
    qg = q_lower_gopalan(p)
    improves = qu > qg
    predicted = rate <= thr
    return ThresholdReport(
        rate=rate,
        threshold=thr,
        q_unconditional=qu,
        q_gopalan=qg,
        improves=improves,
        predicted_improves=predicted,
        consistent=improves == predicted,
        near_boundary=rate == thr or p.r == 1,
    )


@dataclass(frozen=True)
class BoundsReport:
    """All bound and size values for one parameter triple."""

    params: MrParams
    eq1_size: int
    eq2_size: int
    eq3_sizes: dict
    eq4_sizes: dict
    largest_uniform: int
    q_unconditional: int
    q_unconditional_vacuous: bool
    q_conjectural: ConjecturalBound
    q_gopalan: int
    gopi_alpha: Fraction | None

    def to_text(self) -> str:
        p = self.params
        lines = [
            f"n={p.n}",
            f"k={p.k}",
            f"r={p.r}",
            f"g={p.g}",
            f"h={p.h}",
            f"eq1={self.eq1_size}",
            f"eq2={self.eq2_size}",
        ]
        for kp, v in sorted(self.eq3_sizes.items()):
            lines.append(f"eq3[{kp}]={v}")
        for kp, v in sorted(self.eq4_sizes.items()):
            lines.append(f"eq4[{kp}]={v}")
        lines += [
            f"largest_uniform={self.largest_uniform}",
            f"q_unconditional={self.q_unconditional}",
            f"q_unconditional_vacuous={str(self.q_unconditional_vacuous).lower()}",
            f"q_conjectural={self.q_conjectural.value}",
            f"q_conjectural_safe={self.q_conjectural.safe_value}",
            f"q_conjectural_exception_possible={str(self.q_conjectural.exception_possible).lower()}",
            f"achiever_ranks={','.join(str(x) for x in self.q_conjectural.achiever_ranks)}",
            f"q_gopalan={self.q_gopalan}",
            f"gopi_alpha={self.gopi_alpha if self.gopi_alpha is not None else 'undefined'}",
        ]
        return "\n".join(lines)


def compute_bounds(p: MrParams) -> BoundsReport:
    eq3s = {kp: eq3_size(p, kp) for kp in eq3_range(p)}
    eq4s = {kp: eq4_size(p, kp) for kp in eq4_range(p)}
    best = largest_uniform_size(p)
    candidates = [eq1_size(p), eq2_size(p), *eq3s.values()]
    if best != max(candidates):
        raise RuntimeError(
            f"theorem consistency violated for {p.to_text()}: {best} vs {max(candidates)}"
        )
    return BoundsReport(
        params=p,
        eq1_size=eq1_size(p),
        eq2_size=eq2_size(p),
        eq3_sizes=eq3s,
        eq4_sizes=eq4s,
        largest_uniform=best,
        q_unconditional=q_lower_unconditional(p),
        q_unconditional_vacuous=q_unconditional_is_vacuous(p),
        q_conjectural=q_lower_conjectural(p),
        q_gopalan=q_lower_gopalan(p),
        gopi_alpha=gopi_alpha(p),
    )


SWEEP_HEADER = "n,g,h,eq1,eq2,eq3_kprime,eq3,thm,q_uncond,q_conj,q_gopalan"


@dataclass(frozen=True)
class SweepRow:
    n: int
    g: int
    h: int
    eq1: int
    eq2: int
    eq3_kprime: int | None
    eq3: int | None
    thm: int
    q_uncond: int
    q_conj: int
    q_gopalan: int

    def to_csv(self) -> str:
        kp = "" if self.eq3_kprime is None else str(self.eq3_kprime)
        e3 = "" if self.eq3 is None else str(self.eq3)
        return (
            f"{self.n},{self.g},{self.h},{self.eq1},{self.eq2},{kp},{e3},"
            f"{self.thm},{self.q_uncond},{self.q_conj},{self.q_gopalan}"
        )


def sweep(k: int, r: int, n_min: int, n_max: int) -> list[SweepRow]:
    """One row per valid n in [n_min, n_max] for fixed k and r."""
    from .mr import make_params

    rows = []
    for n in range(n_min, n_max + 1):
        if n % (r + 1) != 0:
            continue
        g = n // (r + 1)
        if not (r < k <= g * r):
            continue
        p = make_params(n, k, r)
        rep = compute_bounds(p)
        if rep.eq3_sizes:
            best_kp = max(rep.eq3_sizes, key=lambda kp: (rep.eq3_sizes[kp], -kp))
            e3_kp, e3 = best_kp, rep.eq3_sizes[best_kp]
        else:
            e3_kp, e3 = None, None
        rows.append(
            SweepRow(
                n=n, g=g, h=p.h,
                eq1=rep.eq1_size, eq2=rep.eq2_size,
                eq3_kprime=e3_kp, eq3=e3,
                thm=rep.largest_uniform,
                q_uncond=rep.q_unconditional,
                q_conj=rep.q_conjectural.value,
                q_gopalan=rep.q_gopalan,
            )
        )
    return rows
