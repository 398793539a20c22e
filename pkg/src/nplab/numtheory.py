"""Primes, coprime selection in short intervals, and coprime bijections.

Everything here is exact integer arithmetic; inputs are expected to stay
well inside 64 bits (the labelers never need more).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, Optional


class CoprimeMatchingError(RuntimeError):
    """A coprime perfect matching that must exist could not be found.

    Existence is guaranteed for every interval of the right length, so
    hitting this means a bug, not bad input.
    """


@dataclass(frozen=True)
class Interval:
    """The integers start, start+1, ..., start+length-1 (all >= 1)."""

    start: int
    length: int

    def __post_init__(self):
        if self.start < 1:
            raise ValueError("interval must start at 1 or above")
        if self.length < 1:
            raise ValueError("interval length must be at least 1")

    @property
    def stop(self) -> int:
        """One past the largest member."""
        return self.start + self.length

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.start, self.stop))

    def __contains__(self, x) -> bool:
        return self.start <= x < self.stop


def sieve_primes(limit: int) -> list[int]:
    """All primes <= limit, ascending."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    p = 2
    while p * p <= limit:
        if flags[p]:
            flags[p * p:: p] = bytearray(len(range(p * p, limit + 1, p)))
        p += 1
    return [i for i in range(limit + 1) if flags[i]]


def prime_pi(x: int) -> int:
    """Count of primes <= x."""
    if x < 2:
        return 0
    return len(sieve_primes(x))


# Primes that can divide two distinct members of a run of <= 16 consecutive
# integers; any common factor of two members divides their difference < 16.
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13)


def pillai_select(iv: Interval) -> Optional[int]:
    """Smallest member of ``iv`` coprime to every other member, if any.

    Guaranteed to exist when the interval has at most 16 members; longer
    intervals may have none (the first length-17 failure starts at 2184),
    in which case None is returned.
    """
    if iv.length == 1:
        return iv.start
    primes = _SMALL_PRIMES if iv.length <= 17 else tuple(sieve_primes(iv.length - 1))
    lo, hi = iv.start, iv.stop - 1
    for x in range(lo, hi + 1):
        ok = True
        for p in primes:
            if p >= iv.length:
                break
            # p divides x and some other member iff the interval holds
            # more than one multiple of p
            if x % p == 0 and hi // p - (lo - 1) // p > 1:
                ok = False
                break
        if ok:
            return x
    return None


def coprime_bijection(n: int, iv: Interval) -> dict[int, int]:
    """Bijection f from {1..n} onto ``iv`` with gcd(i, f(i)) = 1 for all i.

    Found as a perfect matching in the bipartite coprimality graph via
    augmenting paths; scanning order is ascending on both sides, so the
    result is deterministic.
    """
    if iv.length != n:
        raise ValueError(f"interval length {iv.length} != n = {n}")
    values = list(iv)
    cand = [[j for j, v in enumerate(values) if gcd(i, v) == 1]
            for i in range(1, n + 1)]
    owner: list[Optional[int]] = [None] * n  # value slot -> left index

    def augment(i: int, seen: set[int]) -> bool:
        for j in cand[i]:
            if j in seen:
                continue
            seen.add(j)
            if owner[j] is None or augment(owner[j], seen):
                owner[j] = i
                return True
        return False

    for i in range(n):
        if not augment(i, set()):
            raise CoprimeMatchingError(
                f"no coprime matching of [1..{n}] onto "
                f"[{iv.start}..{iv.stop - 1}]; this should be impossible"
            )
    out = {}
    for j, i in enumerate(owner):
        assert i is not None
        out[i + 1] = values[j]
    return out
