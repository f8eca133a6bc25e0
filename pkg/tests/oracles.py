"""Independent brute-force oracles used only by tests.

These implementations share no code or algorithmic structure with the
package: plain nested scans and trial division, slow but obviously correct.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from fractions import Fraction


def brute_factorizations(gens: tuple[int, ...], n: int) -> set[tuple[int, ...]]:
    """Coefficient tuples via blind itertools product (small n only)."""
    bounds = [range(n // g + 1) for g in gens]
    return {
        coeffs
        for coeffs in itertools.product(*bounds)
        if sum(c * g for c, g in zip(coeffs, gens)) == n
    }


def brute_length_counter(gens: tuple[int, ...], n: int) -> Counter:
    """Length multiset by direct scan over all but the first coordinate."""
    counter: Counter = Counter()
    rest = gens[1:]
    first = gens[0]

    def walk(idx: int, rem: int, acc: int) -> None:
        if idx == len(rest):
            if rem % first == 0:
                counter[acc + rem // first] += 1
            return
        g = rest[idx]
        for c in range(rem // g + 1):
            walk(idx + 1, rem - c * g, acc + c)

    walk(0, n, 0)
    return counter


def brute_is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def brute_minimal_trade(gens: tuple[int, int, int]) -> tuple[int, int, int]:
    """Componentwise-minimal positive (low, mid, high) with
    low*n1 + high*n3 = mid*n2 and low + high = mid, by exhaustive search."""
    n1, n2, n3 = gens
    for mid in range(1, n1 + n3 + 1):
        for low in range(1, mid):
            high = mid - low
            if low * n1 + high * n3 == mid * n2:
                return low, mid, high
    raise AssertionError(f"no trade found for {gens}")


def brute_three_unit_fractions(target: Fraction, cap: int = 4000) -> set[tuple[int, int, int]]:
    """Distinct-denominator triples by scanning d3 instead of solving it."""
    out = set()
    for d1 in range(1, int(3 / target) + 2):
        r1 = target - Fraction(1, d1)
        if r1 <= 0:
            continue
        for d2 in range(d1 + 1, int(2 / r1) + 2):
            r2 = r1 - Fraction(1, d2)
            if r2 <= 0:
                continue
            hi = min(cap, int(3 / r2) + 2)
            for d3 in range(d2 + 1, hi):
                if Fraction(1, d1) + Fraction(1, d2) + Fraction(1, d3) == target:
                    out.add((d1, d2, d3))
    return out


def all_unit_fraction_decompositions(target: Fraction, terms: int, min_d: int = 1) -> list[tuple[int, ...]]:
    """Every sorted distinct-denominator decomposition with exactly `terms` terms."""
    if terms == 1:
        if target.numerator == 1 and target.denominator >= min_d:
            return [(target.denominator,)]
        return []
    out = []
    d = max(min_d, -((-target.denominator) // target.numerator))
    while Fraction(terms, d) >= target:
        rest = target - Fraction(1, d)
        if rest > 0:
            out += [
                (d,) + tail
                for tail in all_unit_fraction_decompositions(rest, terms - 1, d + 1)
            ]
        d += 1
    return out


def random_semigroup_3(rng, lo: int = 2, hi: int = 400) -> tuple[int, int, int]:
    """Random valid 3-generator tuple (sorted, gcd 1, distinct)."""
    while True:
        gens = sorted(rng.sample(range(lo, hi), 3))
        if math.gcd(gens[0], math.gcd(gens[1], gens[2])) == 1:
            return tuple(gens)
