"""Numerical semigroup model: validation, membership, and trade constants.

A numerical semigroup here is a generator tuple n1 < ... < nk of positive
integers with gcd 1.  Three-generator semigroups additionally carry a unique
minimal length-preserving trade (swap `mid` copies of the middle generator
for `low` copies of the smallest plus `high` copies of the largest), whose
common value is the trade element; the delta constant is the gcd of the
pairwise generator differences and satisfies delta * element = n2 * (n3 - n1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property


class InvalidGenerators(ValueError):
    """Generator list cannot define a numerical semigroup."""


class NotInSemigroup(ValueError):
    """Requested element has no factorization in the semigroup."""


@dataclass(frozen=True)
class TradeData:
    """Minimal length-preserving trade (low, 0, high | 0, mid, 0) of a
    3-generator semigroup: low + high = mid and
    low*n1 + high*n3 = mid*n2 = element."""

    low: int
    mid: int
    high: int
    element: int
    delta: int


@dataclass(frozen=True)
class Semigroup:
    gens: tuple[int, ...]

    def __post_init__(self) -> None:
        gens = tuple(self.gens)
        if len(gens) < 2:
            raise InvalidGenerators(f"need at least 2 generators, got {gens}")
        if any(not isinstance(g, int) or g <= 0 for g in gens):
            raise InvalidGenerators(f"generators must be positive integers: {gens}")
        if len(set(gens)) != len(gens):
            raise InvalidGenerators(f"duplicate generators: {gens}")
        gens = tuple(sorted(gens))
        if math.gcd(*gens) != 1:
            raise InvalidGenerators(f"gcd{gens} = {math.gcd(*gens)} != 1")
        object.__setattr__(self, "gens", gens)

    @property
    def k(self) -> int:
        return len(self.gens)

    @property
    def delta(self) -> int:
        """gcd of all pairwise generator differences (step of length sets)."""
        diffs = [b - a for a, b in zip(self.gens, self.gens[1:])]
        return math.gcd(*diffs)

    @cached_property
    def is_minimal(self) -> bool:
        """True when no generator is representable by the remaining ones."""
        return not any(
            _representable(self.gens[:i] + self.gens[i + 1 :], g)
            for i, g in enumerate(self.gens)
        )

    def __str__(self) -> str:
        return "<" + ", ".join(map(str, self.gens)) + ">"


def make_semigroup(gens) -> Semigroup:
    """Validate and sort a generator list into a Semigroup."""
    return Semigroup(tuple(int(g) for g in gens))


def parse_semigroup(text: str) -> Semigroup:
    """Parse a comma-separated generator list like "6,9,20"."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    try:
        gens = [int(p) for p in parts]
    except ValueError as exc:
        raise InvalidGenerators(f"cannot parse generators from {text!r}") from exc
    return make_semigroup(gens)


def _representable(gens: tuple[int, ...], n: int) -> bool:
    """Is n a nonnegative integer combination of gens (no gcd requirement)?"""
    if n < 0:
        return False
    reachable = bytearray(n + 1)
    reachable[0] = 1
    for v in range(1, n + 1):
        for g in gens:
            if g <= v and reachable[v - g]:
                reachable[v] = 1
                break
    return bool(reachable[n])


def membership_table(S: Semigroup, hi: int) -> bytearray:
    """Reachability table: table[n] == 1 iff n in S, for 0 <= n <= hi."""
    table = bytearray(hi + 1)
    table[0] = 1
    gens = S.gens
    for v in range(1, hi + 1):
        for g in gens:
            if g <= v and table[v - g]:
                table[v] = 1
                break
    return table


def contains(S: Semigroup, n: int) -> bool:
    """Membership via the reachability table up to n."""
    if n < 0:
        return False
    return bool(membership_table(S, n)[n])


def trade_data(S: Semigroup) -> TradeData:
    """Trade constants of a 3-generator semigroup.

    With d1 = n3-n2, d2 = n2-n1, d3 = n3-n1 and delta = gcd(d1, d2, d3),
    the minimal trade is low = d1/delta, high = d2/delta, mid = d3/delta,
    and the trade element is mid * n2.
    """
    if S.k != 3:
        raise ValueError(f"trade data requires exactly 3 generators, got {S.k}")
    n1, n2, n3 = S.gens
    delta = math.gcd(n3 - n2, n2 - n1)
    low = (n3 - n2) // delta
    high = (n2 - n1) // delta
    mid = (n3 - n1) // delta
    return TradeData(low=low, mid=mid, high=high, element=mid * n2, delta=delta)


def semigroup_to_json(S: Semigroup) -> dict:
    """JSON form: generator list plus trade constants when they exist."""
    payload: dict = {"gens": list(S.gens)}
    if S.k == 3:
        trade = trade_data(S)
        payload["delta"] = trade.delta
        payload["trade_element"] = trade.element
    return payload
