"""Mean, median, and mode statistics of a length multiset.

All statistics are computed from the multiset alone, never from raw
factorization tuples, so the closed counting path powers everything.
Means and medians are exact rationals; the median of an even-sized multiset
is the average of the two middle order statistics.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .factorization import LengthMultiset, length_multiset
from .semigroup import Semigroup


class EmptyMultisetError(ValueError):
    """Statistic of an empty length multiset."""


@dataclass(frozen=True)
class InvariantReport:
    n: int
    min_len: int
    max_len: int
    mean: Fraction
    median: Fraction
    mode_lengths: tuple[int, ...]
    mode_freq: int
    num_factorizations: int

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "min": self.min_len,
            "max": self.max_len,
            "mean": str(self.mean),
            "median": str(self.median),
            "mode_lengths": list(self.mode_lengths),
            "mode_freq": self.mode_freq,
            "num_factorizations": self.num_factorizations,
        }


def _require_nonempty(ms: LengthMultiset) -> None:
    if not ms.entries or ms.total <= 0:
        raise EmptyMultisetError("empty length multiset")


def mean_length(ms: LengthMultiset) -> Fraction:
    """Average length, counted with multiplicity."""
    _require_nonempty(ms)
    weighted = sum(ell * mult for ell, mult in ms.items())
    return Fraction(weighted, ms.total)


def median_length(ms: LengthMultiset) -> Fraction:
    """Median length: middle order statistic, or the average of the two
    middle ones when the total is even."""
    _require_nonempty(ms)
    total = ms.total
    lower_rank = (total + 1) // 2
    upper_rank = total // 2 + 1
    lower = upper = None
    seen = 0
    for ell, mult in ms.items():
        seen += mult
        if lower is None and seen >= lower_rank:
            lower = ell
        if seen >= upper_rank:
            upper = ell
            break
    return Fraction(lower + upper, 2)


def mode(ms: LengthMultiset) -> tuple[tuple[int, ...], int]:
    """(sorted lengths of highest multiplicity, that multiplicity)."""
    _require_nonempty(ms)
    freq = max(ms.entries.values())
    lengths = tuple(ell for ell, mult in ms.items() if mult == freq)
    return lengths, freq


def invariant_report(S: Semigroup, n: int) -> InvariantReport:
    """All length statistics of n from a single multiset pass.

    Raises NotInSemigroup when n has no factorization.
    """
    ms = length_multiset(S, n)
    mode_lengths, mode_freq = mode(ms)
    return InvariantReport(
        n=n,
        min_len=ms.min_length,
        max_len=ms.max_length,
        mean=mean_length(ms),
        median=median_length(ms),
        mode_lengths=mode_lengths,
        mode_freq=mode_freq,
        num_factorizations=ms.total,
    )
