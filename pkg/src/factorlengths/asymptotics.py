"""Closed-form asymptotic constants and the triangular limit model.

For a 3-generator semigroup the scaled length histogram converges to a
triangular density on [0, 1] whose peak sits at the fulcrum constant
F = n1*(n3-n2) / (n2*(n3-n1)).  This module evaluates the exact limits of
mean/n and median/n, the distinguished scale at which the histogram is
cleanest, the piecewise-linear upper envelope of the multiplicity function,
and the normalized histogram used to compare data against the model.
Everything is exact: rationals, or quadratic irrationals for the median.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import QuadNumber, quad_sqrt
from .factorization import LengthMultiset, length_multiset
from .invariants import mode
from .semigroup import Semigroup, TradeData, trade_data

_HALF = Fraction(1, 2)


def _require_three(S: Semigroup) -> None:
    if S.k != 3:
        raise ValueError(f"operation requires exactly 3 generators, got {S.k}")


def fulcrum(S: Semigroup) -> Fraction:
    """Normalized peak location of the limiting length distribution."""
    _require_three(S)
    n1, n2, n3 = S.gens
    F = Fraction(n1 * (n3 - n2), n2 * (n3 - n1))
    assert 0 < F < 1
    return F


def asymptotic_mean(S: Semigroup) -> Fraction:
    """Exact limit of mean_length(n)/n: one third of the reciprocal sum."""
    _require_three(S)
    n1, n2, n3 = S.gens
    return (Fraction(1, n1) + Fraction(1, n2) + Fraction(1, n3)) / 3


def asymptotic_median(S: Semigroup) -> QuadNumber:
    """Exact limit of median_length(n)/n, a convex mix of 1/n1 and 1/n3.

    The mixing weight is the median of the triangular model: for F <= 1/2
    the weight on 1/n3 is sqrt((1-F)/2), otherwise the weight on 1/n1 is
    sqrt(F/2).  Both branches agree when F = 1/2.
    """
    _require_three(S)
    n1, _, n3 = S.gens
    F = fulcrum(S)
    inv1, inv3 = Fraction(1, n1), Fraction(1, n3)
    if F <= _HALF:
        s = quad_sqrt((1 - F) / 2)
        return inv1 * (1 - s) + inv3 * s
    s = quad_sqrt(F / 2)
    return inv1 * s + inv3 * (1 - s)


@dataclass(frozen=True)
class AsymptoticConstants:
    mean_c: Fraction
    median_c: QuadNumber
    is_median_rational: bool
    harmonic_case: bool

    def to_json(self, F: Fraction) -> dict:
        return {
            "F": str(F),
            "mean_constant": str(self.mean_c),
            "median_constant": self.median_c.to_json(),
            "harmonic_case": self.harmonic_case,
        }


def asymptotic_constants(S: Semigroup) -> AsymptoticConstants:
    """Bundle of the asymptotic mean/median constants for one semigroup."""
    median_c = asymptotic_median(S)
    return AsymptoticConstants(
        mean_c=asymptotic_mean(S),
        median_c=median_c,
        is_median_rational=median_c.is_rational,
        harmonic_case=fulcrum(S) == _HALF,
    )


@dataclass(frozen=True)
class ScaledSequence:
    """Exact length statistics at the distinguished elements k * scale.

    scale = delta * element * n1 * n2 * n3.  At n = k*scale the extremes,
    the (singleton) mode length, and the trade count follow closed formulas:
    min_len = n/n3, max_len = n/n1, mode_len = n/n2, num_trades = n/element.
    """

    k: int
    scale: int
    min_len: int
    max_len: int
    mode_len: int
    num_trades: int
    semigroup: Semigroup
    trade: TradeData

    @property
    def element(self) -> int:
        return self.k * self.scale


def scaled_sequence(S: Semigroup, k: int) -> ScaledSequence:
    _require_three(S)
    if k < 1:
        raise ValueError(f"scale index must be >= 1, got {k}")
    n1, n2, n3 = S.gens
    trade = trade_data(S)
    dt = trade.delta * trade.element
    return ScaledSequence(
        k=k,
        scale=dt * n1 * n2 * n3,
        min_len=k * dt * n1 * n2,
        max_len=k * dt * n2 * n3,
        mode_len=k * dt * n1 * n3,
        num_trades=k * trade.delta * n1 * n2 * n3,
        semigroup=S,
        trade=trade,
    )


def upper_envelope(seq: ScaledSequence, x: int | Fraction) -> Fraction:
    """Piecewise-linear bound on length multiplicity at k*scale.

    Rises from (min_len, 1) to (mode_len, num_trades + 1), then falls back
    to (max_len, 1); no multiplicity in the histogram exceeds it.
    """
    x = Fraction(x)
    if not seq.min_len <= x <= seq.max_len:
        raise ValueError(f"{x} outside [{seq.min_len}, {seq.max_len}]")
    n1, n2, n3 = seq.semigroup.gens
    t = seq.trade.element
    if x <= seq.mode_len:
        return Fraction(n2 * n3, t * (n3 - n2)) * (x - seq.min_len) + 1
    return Fraction(n1 * n2, t * (n2 - n1)) * (seq.max_len - x) + 1


@dataclass(frozen=True)
class TriangularModel:
    """Triangular probability density on [0, 1] with peak (F, 2)."""

    peak: Fraction
    mean: Fraction
    median: QuadNumber

    def density(self, x: Fraction) -> Fraction:
        if not 0 <= x <= 1:
            raise ValueError(f"{x} outside [0, 1]")
        if x == self.peak:
            return Fraction(2)
        if x < self.peak:
            return 2 * x / self.peak
        return 2 * (1 - x) / (1 - self.peak)


def triangular_model(F: Fraction) -> TriangularModel:
    """Triangular density with peak at F: mean (1+F)/3, median by branch."""
    F = Fraction(F)
    if not 0 <= F <= 1:
        raise ValueError(f"peak {F} outside [0, 1]")
    if F <= _HALF:
        median = 1 - quad_sqrt((1 - F) / 2)
    else:
        median = quad_sqrt(F / 2)
    return TriangularModel(peak=F, mean=(1 + F) / 3, median=median)


@dataclass(frozen=True)
class NormalizedStep:
    """One histogram step after rescaling to [0, 1].

    position is the image of the length itself; midpoint is the center of
    the step's interval (steps left of the peak extend right of their
    length, steps right of it extend left, the peak step is the point F).
    """

    length: int
    position: Fraction
    midpoint: Fraction
    density: Fraction
    at_peak: bool


@dataclass(frozen=True)
class NormalizedHistogram:
    steps: tuple[NormalizedStep, ...]
    step_width: Fraction
    fulcrum: Fraction

    def total_mass(self) -> Fraction:
        """Riemann sum of the step densities; exactly 1 by construction."""
        return sum(s.density for s in self.steps) * self.step_width

    def sup_deviation(self, model: TriangularModel) -> Fraction:
        """Largest |density - model| over step midpoints."""
        return max(abs(s.density - model.density(s.midpoint)) for s in self.steps)


def normalized_histogram(S: Semigroup, k: int) -> NormalizedHistogram:
    """Length histogram of k*scale mapped onto [0, 1] with unit mass.

    Lengths map through x -> (x - min_len) / (max_len - min_len) and
    multiplicities are divided by delta*|Z| / (max_len - min_len), so the
    result is a step density whose Riemann sum is exactly 1 and whose peak
    step sits at the fulcrum constant.
    """
    seq = scaled_sequence(S, k)
    ms = length_multiset(S, seq.element)
    delta = seq.trade.delta
    span = seq.max_len - seq.min_len
    scale_down = Fraction(span, delta * ms.total)
    half_step = Fraction(delta, 2)
    steps = []
    for ell, mult in ms.items():
        position = Fraction(ell - seq.min_len, span)
        if ell < seq.mode_len:
            mid = ell + half_step
        elif ell > seq.mode_len:
            mid = ell - half_step
        else:
            mid = Fraction(ell)
        steps.append(
            NormalizedStep(
                length=ell,
                position=position,
                midpoint=Fraction(mid - seq.min_len, span),
                density=mult * scale_down,
                at_peak=ell == seq.mode_len,
            )
        )
    return NormalizedHistogram(
        steps=tuple(steps),
        step_width=Fraction(delta, span),
        fulcrum=fulcrum(S),
    )


@dataclass(frozen=True)
class EnvelopeReport:
    """How the histogram at k*scale sits under its linear envelope.

    max_pointwise_gap is max(envelope - multiplicity) over lengths;
    max_step_gap takes each step's envelope supremum instead, which is the
    honest sup-norm gap between envelope and step function.
    """

    k: int
    pointwise_ok: bool
    max_pointwise_gap: Fraction
    max_step_gap: Fraction


def envelope_report(S: Semigroup, k: int) -> EnvelopeReport:
    seq = scaled_sequence(S, k)
    ms = length_multiset(S, seq.element)
    delta = seq.trade.delta
    ok = True
    max_point = Fraction(0)
    max_step = Fraction(0)
    for ell, mult in ms.items():
        bound = upper_envelope(seq, ell)
        gap = bound - mult
        if gap < 0:
            ok = False
        if gap > max_point:
            max_point = gap
        if ell < seq.mode_len:
            far = upper_envelope(seq, ell + delta)
        elif ell > seq.mode_len:
            far = upper_envelope(seq, ell - delta)
        else:
            far = bound
        step_gap = max(gap, far - mult)
        if step_gap > max_step:
            max_step = step_gap
    return EnvelopeReport(
        k=k, pointwise_ok=ok, max_pointwise_gap=max_point, max_step_gap=max_step
    )


def mode_is_scaled_singleton(S: Semigroup, k: int) -> bool:
    """At n = k*scale the mode is the single length n/n2 with multiplicity
    num_trades + 1; used as a cross-check of the closed formulas."""
    seq = scaled_sequence(S, k)
    ms = length_multiset(S, seq.element)
    lengths, freq = mode(ms)
    return (
        lengths == (seq.mode_len,)
        and freq == seq.num_trades + 1
        and ms.min_length == seq.min_len
        and ms.max_length == seq.max_len
    )
