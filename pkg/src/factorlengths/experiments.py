"""Empirical verification drivers for the length-statistics theory.

Each driver compares exact data from the counting core against a predicted
behavior: convergence of mean/median ratios to their closed-form constants,
the exact mode recurrence under the trade element, arithmetic-progression
structure of length sets with bounded end gaps, eventual quasilinearity of
the median, and the shape of multi-generator histograms.  Every verdict
carries its window and thresholds so a run is reproducible from its output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .asymptotics import asymptotic_mean, asymptotic_median
from .exactnum import QuadNumber
from .factorization import LengthMultiset, length_multiset, min_max_length
from .invariants import mean_length, median_length, mode
from .semigroup import (
    NotInSemigroup,
    Semigroup,
    membership_table,
    trade_data,
)


@dataclass(frozen=True)
class ConvergenceRow:
    """One sweep sample: exact ratios, errors both exact and as decimals."""

    n: int
    mean_ratio: Fraction
    median_ratio: Fraction
    mean_err_exact: Fraction
    median_err_exact: QuadNumber
    mean_err: float
    median_err: float


@dataclass(frozen=True)
class SweepResult:
    semigroup: Semigroup
    mean_constant: Fraction
    median_constant: QuadNumber
    rows: tuple[ConvergenceRow, ...]
    skipped: tuple[int, ...]


def default_grid(S: Semigroup, targets: Sequence[int] = (100, 1_000, 10_000, 100_000)) -> list[int]:
    """Geometric sample points snapped to the nearest semigroup element."""
    hi = max(targets) + max(S.gens) + 1
    table = membership_table(S, hi)
    grid = []
    for target in targets:
        for offset in range(hi):
            for cand in (target - offset, target + offset):
                if 0 <= cand <= hi and table[cand]:
                    break
            else:
                continue
            break
        if cand not in grid:
            grid.append(cand)
    return sorted(grid)


def _sweep_point(job: tuple[tuple[int, ...], int]):
    """One sweep sample; top-level so process pools can pickle it."""
    gens, n = job
    S = Semigroup(gens)
    try:
        ms = length_multiset(S, n)
    except NotInSemigroup:
        return n, None, None
    return n, mean_length(ms), median_length(ms)


def convergence_sweep(S: Semigroup, n_points: Sequence[int], jobs: int = 1) -> SweepResult:
    """Exact mean/median ratios at the sampled elements, with decimal errors
    against the asymptotic constants.  Points outside S are skipped and
    reported, not fatal.  jobs > 1 computes samples in parallel; the ordered
    aggregation keeps output identical to a sequential run."""
    mean_c = asymptotic_mean(S)
    median_c = asymptotic_median(S)
    median_c_approx = median_c.approx_fraction(40)
    batches = [(S.gens, n) for n in n_points if n > 0]
    skipped = [n for n in n_points if n <= 0]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            samples = list(pool.map(_sweep_point, batches))
    else:
        samples = [_sweep_point(job) for job in batches]
    rows = []
    for n, mean, median in samples:
        if mean is None:
            skipped.append(n)
            continue
        mean_ratio = mean / n
        median_ratio = median / n
        median_err_exact = median_c - median_ratio
        if median_err_exact.sign() < 0:
            median_err_exact = -median_err_exact
        rows.append(
            ConvergenceRow(
                n=n,
                mean_ratio=mean_ratio,
                median_ratio=median_ratio,
                mean_err_exact=abs(mean_ratio - mean_c),
                median_err_exact=median_err_exact,
                mean_err=float(abs(mean_ratio - mean_c)),
                median_err=float(abs(median_ratio - median_c_approx)),
            )
        )
    return SweepResult(
        semigroup=S,
        mean_constant=mean_c,
        median_constant=median_c,
        rows=tuple(rows),
        skipped=tuple(skipped),
    )


@dataclass(frozen=True)
class ModeTheoremReport:
    """Exact check of the mode recurrence under one trade element.

    For every n in S up to n_max: the mode frequency grows by exactly 1 from
    n to n + element, and the mode length set shifts by element/n2.  The
    residual mode frequency minus n/element is tabulated per residue class
    and must be constant on each class.
    """

    semigroup: Semigroup
    period: int
    shift: int
    n_max: int
    checked: int
    failures: tuple[tuple[int, str], ...]
    residuals: dict[int, Fraction] = field(repr=False)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "semigroup": list(self.semigroup.gens),
            "period": self.period,
            "mode_shift": self.shift,
            "n_max": self.n_max,
            "checked": self.checked,
            "failures": [list(f) for f in self.failures],
            "residual_classes": len(self.residuals),
            "ok": self.ok,
        }


def verify_mode_theorem(S: Semigroup, n_max: int) -> ModeTheoremReport:
    if S.k != 3:
        raise ValueError("mode recurrence check requires 3 generators")
    trade = trade_data(S)
    t = trade.element
    shift = t // S.gens[1]
    table = membership_table(S, n_max + t)
    failures: list[tuple[int, str]] = []
    residuals: dict[int, Fraction] = {}
    checked = 0
    for n in range(n_max + 1):
        if not table[n]:
            continue
        checked += 1
        lengths, freq = mode(length_multiset(S, n))
        lengths_next, freq_next = mode(length_multiset(S, n + t))
        if freq_next != freq + 1:
            failures.append((n, f"frequency {freq} -> {freq_next}, expected +1"))
        if lengths_next != tuple(ell + shift for ell in lengths):
            failures.append((n, f"mode set {lengths} did not shift by {shift}"))
        residual = freq - Fraction(n, t)
        previous = residuals.get(n % t)
        if previous is None:
            residuals[n % t] = residual
        elif previous != residual:
            failures.append((n, f"residual {residual} != {previous} in class {n % t}"))
    return ModeTheoremReport(
        semigroup=S,
        period=t,
        shift=shift,
        n_max=n_max,
        checked=checked,
        failures=tuple(failures),
        residuals=residuals,
    )


def end_gaps(S: Semigroup, n: int) -> tuple[list[int], list[int]]:
    """Missing lengths of the arithmetic progression, split low end / high end."""
    delta = trade_data(S).delta if S.k == 3 else S.delta
    ms = length_multiset(S, n)
    lo, hi = ms.min_length, ms.max_length
    progression = range(lo, hi + 1, delta)
    present = ms.entries
    count = len(progression)
    low_missing, high_missing = [], []
    for idx, ell in enumerate(progression):
        if ell not in present:
            (low_missing if idx < count / 2 else high_missing).append(ell)
    return low_missing, high_missing


@dataclass(frozen=True)
class StructureReport:
    """Window check that length sets are progressions minus bounded end gaps."""

    semigroup: Semigroup
    delta: int
    window: tuple[int, int]
    checked: int
    max_low_extent: int
    max_high_extent: int
    bounded: bool
    violations: tuple[tuple[int, str], ...]

    @property
    def ok(self) -> bool:
        return self.bounded and not self.violations

    def to_json(self) -> dict:
        return {
            "semigroup": list(self.semigroup.gens),
            "delta": self.delta,
            "window": list(self.window),
            "checked": self.checked,
            "max_low_extent": self.max_low_extent,
            "max_high_extent": self.max_high_extent,
            "bounded": self.bounded,
            "violations": [list(v) for v in self.violations],
            "ok": self.ok,
        }


def verify_structure_theorem(S: Semigroup, n_lo: int, n_hi: int) -> StructureReport:
    """For each n in the window: all lengths lie on the step-delta progression
    through the extremes, missing lengths cluster at the ends, and the end-gap
    extent seen in the second half of the window never exceeds the first half."""
    if S.k != 3:
        raise ValueError("structure check requires 3 generators")
    delta = trade_data(S).delta
    table = membership_table(S, n_hi)
    violations: list[tuple[int, str]] = []
    extents: list[tuple[int, int]] = []
    checked = 0
    for n in range(n_lo, n_hi + 1):
        if not table[n]:
            continue
        checked += 1
        ms = length_multiset(S, n)
        lo, hi = ms.min_length, ms.max_length
        off_grid = [ell for ell in ms.support() if (ell - lo) % delta]
        if off_grid:
            violations.append((n, f"lengths off the delta grid: {off_grid[:4]}"))
        progression = range(lo, hi + 1, delta)
        count = len(progression)
        low_ext = high_ext = 0
        for idx, ell in enumerate(progression):
            if ell not in ms.entries:
                if idx < count / 2:
                    low_ext = max(low_ext, idx + 1)
                else:
                    high_ext = max(high_ext, count - idx)
        extents.append((low_ext, high_ext))
    half = len(extents) // 2
    bounded = bool(extents) and (
        max((e[0] for e in extents[half:]), default=0)
        <= max((e[0] for e in extents[:half]), default=0)
        and max((e[1] for e in extents[half:]), default=0)
        <= max((e[1] for e in extents[:half]), default=0)
    )
    return StructureReport(
        semigroup=S,
        delta=delta,
        window=(n_lo, n_hi),
        checked=checked,
        max_low_extent=max((e[0] for e in extents), default=0),
        max_high_extent=max((e[1] for e in extents), default=0),
        bounded=bounded,
        violations=tuple(violations),
    )


@dataclass(frozen=True)
class PeriodProbe:
    period: int
    window: tuple[int, int]
    checked: int
    witness: Optional[int]
    window_exhausted: bool


@dataclass(frozen=True)
class QuasilinearityVerdict:
    """Three-valued empirical verdict on eventual quasilinearity of the median.

    quasilinear: some tested period shows a constant median increment across
    every semigroup element of its whole window.  not_quasilinear: every
    tested period exhibited a concrete witness where the increment deviates.
    inconclusive: anything else (typically a budget-exhausted window).
    A finite window can never prove the "eventually" part; the window and
    check budget are recorded so the verdict is reproducible.
    """

    semigroup: Semigroup
    verdict: str
    period_tested: Optional[int]
    window: tuple[int, int]
    witness: Optional[int]
    start_threshold: int
    max_checks: int
    probes: tuple[PeriodProbe, ...]

    def to_json(self) -> dict:
        return {
            "semigroup": list(self.semigroup.gens),
            "verdict": self.verdict,
            "period_tested": self.period_tested,
            "window": list(self.window),
            "witness": self.witness,
            "start_threshold": self.start_threshold,
            "max_checks": self.max_checks,
            "probes": [
                {
                    "period": p.period,
                    "window": list(p.window),
                    "checked": p.checked,
                    "witness": p.witness,
                    "window_exhausted": p.window_exhausted,
                }
                for p in self.probes
            ],
        }


def _median_at(S: Semigroup, n: int) -> Optional[Fraction]:
    try:
        return median_length(length_multiset(S, n))
    except NotInSemigroup:
        return None


def candidate_periods(S: Semigroup) -> list[int]:
    """Default period ladder: trade element, generator product, full scale."""
    trade = trade_data(S)
    n1, n2, n3 = S.gens
    ladder = [trade.element, n1 * n2 * n3, trade.delta * trade.element * n1 * n2 * n3]
    out = []
    for p in ladder:
        if p not in out:
            out.append(p)
    return out


def probe_median_quasilinearity(
    S: Semigroup,
    periods: Optional[Sequence[int]] = None,
    start: Optional[int] = None,
    window_periods: int = 3,
    max_checks: int = 4000,
) -> QuasilinearityVerdict:
    """Test candidate periods in increasing order over [start, start + 3P].

    The default start is 4*n3**2, past the empirically chaotic range of
    small elements.  Each period scans the semigroup elements of its window
    in order: the first deviating median increment is that period's witness;
    a window exhausted without deviation concludes quasilinear at that
    period; exceeding max_checks leaves the period undecided.
    """
    if S.k != 3:
        raise ValueError("median quasilinearity probe requires 3 generators")
    if periods is None:
        periods = candidate_periods(S)
    if start is None:
        start = 4 * S.gens[2] ** 2
    if window_periods < 3:
        raise ValueError("window must cover at least 3 periods")
    probes: list[PeriodProbe] = []
    for period in periods:
        hi = start + window_periods * period
        increment = None
        witness = None
        checked = 0
        n = start
        while n <= hi and checked < max_checks:
            here = _median_at(S, n)
            if here is not None:
                there = _median_at(S, n + period)
                if there is None:  # only possible for a period outside S
                    n += 1
                    continue
                checked += 1
                diff = there - here
                if increment is None:
                    increment = diff
                elif diff != increment:
                    witness = n
                    break
            n += 1
        exhausted = witness is None and n > hi
        probes.append(
            PeriodProbe(
                period=period,
                window=(start, hi),
                checked=checked,
                witness=witness,
                window_exhausted=exhausted,
            )
        )
        if exhausted:
            return QuasilinearityVerdict(
                semigroup=S,
                verdict="quasilinear",
                period_tested=period,
                window=(start, hi),
                witness=None,
                start_threshold=start,
                max_checks=max_checks,
                probes=tuple(probes),
            )
    if all(p.witness is not None for p in probes):
        last = probes[-1]
        return QuasilinearityVerdict(
            semigroup=S,
            verdict="not_quasilinear",
            period_tested=last.period,
            window=last.window,
            witness=last.witness,
            start_threshold=start,
            max_checks=max_checks,
            probes=tuple(probes),
        )
    undecided = next(p for p in probes if p.witness is None)
    return QuasilinearityVerdict(
        semigroup=S,
        verdict="inconclusive",
        period_tested=undecided.period,
        window=undecided.window,
        witness=None,
        start_threshold=start,
        max_checks=max_checks,
        probes=tuple(probes),
    )


@dataclass(frozen=True)
class HistogramExploration:
    """Histogram of one element of a many-generator semigroup, with the
    lengths where the discrete second difference changes sign (curvature
    flips happen between adjacent grid lengths, so both ends of each flip
    are candidates) and the peak of the multiplicity function."""

    semigroup: Semigroup
    n: int
    multiset: LengthMultiset
    grid_step: int
    inflection_candidates: tuple[int, ...]
    peak_lengths: tuple[int, ...]
    peak_multiplicity: int

    def to_json(self) -> dict:
        return {
            "semigroup": list(self.semigroup.gens),
            "n": self.n,
            "num_factorizations": self.multiset.total,
            "min": self.multiset.min_length,
            "max": self.multiset.max_length,
            "grid_step": self.grid_step,
            "inflection_candidates": list(self.inflection_candidates),
            "peak_lengths": list(self.peak_lengths),
            "peak_multiplicity": self.peak_multiplicity,
        }


def multi_generator_histogram(S: Semigroup, n: int) -> HistogramExploration:
    """Full histogram plus second-difference inflection scan for k >= 4."""
    if S.k < 4:
        raise ValueError("multi-generator exploration requires at least 4 generators")
    ms = length_multiset(S, n)
    step = S.delta
    lo, hi = ms.min_length, ms.max_length
    candidates: list[int] = []
    prev_sign = 0
    prev_length = None
    zeros: list[int] = []
    for ell in range(lo + step, hi - step + 1, step):
        d2 = (
            ms.multiplicity(ell + step)
            - 2 * ms.multiplicity(ell)
            + ms.multiplicity(ell - step)
        )
        sign = (d2 > 0) - (d2 < 0)
        if sign == 0:
            zeros.append(ell)
            continue
        if prev_sign and sign != prev_sign:
            for cand in (prev_length, *zeros, ell):
                if cand not in candidates:
                    candidates.append(cand)
        prev_sign, prev_length = sign, ell
        zeros = []
    peak_lengths, peak_mult = mode(ms)
    return HistogramExploration(
        semigroup=S,
        n=n,
        multiset=ms,
        grid_step=step,
        inflection_candidates=tuple(sorted(candidates)),
        peak_lengths=peak_lengths,
        peak_multiplicity=peak_mult,
    )


def extreme_length_steps(S: Semigroup, n_lo: int, count: int) -> tuple[bool, Optional[int]]:
    """Check quasilinearity of the extremes over `count` semigroup elements
    at and beyond n_lo: max length gains exactly 1 per +n1, min length gains
    exactly 1 per +nk.  Returns (ok, first offending n)."""
    n1, nk = S.gens[0], S.gens[-1]
    hi_bound = n_lo + count * 2 + n1 * nk * 6
    table = membership_table(S, hi_bound + nk)
    seen = 0
    n = n_lo
    while seen < count and n <= hi_bound:
        if table[n]:
            seen += 1
            lo_len, hi_len = min_max_length(S, n)
            lo_next, _ = min_max_length(S, n + nk)
            _, hi_next = min_max_length(S, n + n1)
            if hi_next != hi_len + 1 or lo_next != lo_len + 1:
                return False, n
        n += 1
    return True, None
