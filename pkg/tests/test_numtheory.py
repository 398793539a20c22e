import random
from bisect import bisect_right
from math import gcd

import pytest

from nplab.numtheory import (
    Interval,
    coprime_bijection,
    pillai_select,
    prime_pi,
    sieve_primes,
)
from oracles import brute_pillai, coprime_pairs_ok

# first run of 17 consecutive integers with no member coprime to the rest;
# frozen from the brute-force oracle (re-derived in the test below)
FIRST_FAILING_17_START = 2184


def test_sieve_small():
    assert sieve_primes(10) == [2, 3, 5, 7]
    assert sieve_primes(1) == []
    assert sieve_primes(2) == [2]
    assert sieve_primes(0) == []


def test_prime_pi_values():
    assert prime_pi(10) == 4
    assert prime_pi(1) == 0
    assert prime_pi(2) == 1
    assert prime_pi(100) == 25
    assert prime_pi(50) == 15


def test_prime_pi_matches_sieve_counts():
    primes = sieve_primes(100000)
    rng = random.Random(5)
    xs = {0, 1, 2, 3, 99999, 100000} | {rng.randrange(100000) for _ in range(300)}
    xs |= {p + d for p in primes[:60] for d in (-1, 0, 1)}
    last = 0
    for x in sorted(xs):
        count = bisect_right(primes, x)
        assert prime_pi(x) == count
        assert count >= last  # non-decreasing
        last = count


def test_interval_validation():
    iv = Interval(8, 8)
    assert list(iv) == [8, 9, 10, 11, 12, 13, 14, 15]
    assert 8 in iv and 15 in iv and 16 not in iv
    with pytest.raises(ValueError):
        Interval(0, 5)
    with pytest.raises(ValueError):
        Interval(3, 0)


def test_pillai_examples():
    assert pillai_select(Interval(1, 16)) == 1
    assert pillai_select(Interval(8, 8)) == 11
    assert pillai_select(Interval(FIRST_FAILING_17_START, 17)) is None


def test_pillai_first_failing_17_matches_oracle():
    start = 1
    while brute_pillai(start, 17) is not None:
        start += 1
    assert start == FIRST_FAILING_17_START
    # and no shorter interval before it ever fails
    assert pillai_select(Interval(start, 17)) is None
    assert pillai_select(Interval(start - 1, 17)) is not None


def test_pillai_against_brute_oracle():
    rng = random.Random(11)
    for _ in range(2000):
        length = rng.randint(1, 25)
        start = rng.randint(1, 5000)
        assert pillai_select(Interval(start, length)) == brute_pillai(start, length)


def test_pillai_returns_smallest_witness():
    # 11 and 13 both qualify in [8..15]; the smaller one is returned
    iv = Interval(8, 8)
    x = pillai_select(iv)
    assert x == 11
    assert all(gcd(x, y) == 1 for y in iv if y != x)


def test_coprime_bijection_examples():
    assert coprime_bijection(1, Interval(7, 1)) == {1: 7}
    for n, start in [(3, 4), (4, 9)]:
        out = coprime_bijection(n, Interval(start, n))
        assert sorted(out) == list(range(1, n + 1))
        assert sorted(out.values()) == list(range(start, start + n))
        assert coprime_pairs_ok(out)


def test_coprime_bijection_deterministic():
    a = coprime_bijection(12, Interval(25, 12))
    b = coprime_bijection(12, Interval(25, 12))
    assert a == b


def test_coprime_bijection_validates_widely():
    for n in (1, 2, 5, 16, 40, 60):
        for start in (n + 1, 2 * n, 10000):
            out = coprime_bijection(n, Interval(start, n))
            assert sorted(out) == list(range(1, n + 1))
            assert sorted(out.values()) == list(range(start, start + n))
            assert coprime_pairs_ok(out)


def test_coprime_bijection_length_mismatch():
    with pytest.raises(ValueError):
        coprime_bijection(3, Interval(5, 4))
