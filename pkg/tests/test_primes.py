import itertools

import pytest

from congspeed.classes import speed_by_formula
from congspeed.primes import (
    is_prime,
    METHOD_DETERMINISTIC,
    METHOD_PROBABILISTIC,
    non_monotonic_flags,
    prime_speed_bounds,
    primality_method,
    PrimeSpeedRecord,
    repnine_speed,
    RepnineForm,
    SearchBudgetError,
    smallest_prime_table,
    smallest_prime_with_speed,
    speed_candidates,
)
from congspeed.speed import constant_speed


def sieve_primality(limit):
    flags = [True] * (limit + 1)
    flags[0] = flags[1] = False
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = [False] * len(flags[p * p :: p])
    return flags


class TestIsPrime:
    def test_agrees_with_sieve(self):
        flags = sieve_primality(5000)
        for x in range(5000):
            assert is_prime(x) == flags[x], x

    def test_fixtures(self):
        assert is_prime(22943)
        assert not is_prime(1)
        assert is_prime(29509900499)

    def test_strong_pseudoprime_composites(self):
        # strong pseudoprime to bases 2, 3, 5, 7 -- the full witness set
        # must still reject it
        assert 3215031751 == 151 * 751 * 28351
        assert not is_prime(3215031751)
        # Carmichael number
        assert not is_prime(561)

    def test_large_probabilistic(self):
        m89 = 2**89 - 1  # Mersenne prime, above the deterministic limit
        assert primality_method(m89) == METHOD_PROBABILISTIC
        assert is_prime(m89)
        m101 = 2**101 - 1  # composite Mersenne
        assert not is_prime(m101)
        assert not is_prime(m89 * m89)

    def test_method_boundary(self):
        assert primality_method(2**64 - 59) == METHOD_DETERMINISTIC
        assert primality_method(2**64 + 13) == METHOD_PROBABILISTIC

    def test_probabilistic_range_against_sympy(self):
        sympy = pytest.importorskip("sympy")
        import random

        rng = random.Random(599)
        for _ in range(120):
            x = rng.randrange(2**66, 2**80) | 1
            assert is_prime(x) == sympy.isprime(x), x


class TestRepnine:
    def test_form(self):
        f = RepnineForm(8, 3)
        assert f.value == 8999
        assert f.value % 10**3 == 10**3 - 1

    def test_speed_rule(self):
        assert repnine_speed(8, 3) == 3
        assert constant_speed(8999) == 3
        assert repnine_speed(9, 2) is None
        assert constant_speed(2999) == 3  # 2999 = 30 * 10^2 - 1, k = 29 = 9 (mod 10)
        assert repnine_speed(8, 1762063) == 1762063

    def test_speed_rule_height_one(self):
        assert repnine_speed(1, 1) == 1
        assert constant_speed(19) == 1
        assert repnine_speed(4, 1) is None
        assert constant_speed(49) == 2
        assert repnine_speed(14, 1) is None
        assert constant_speed(149) == 2

    def test_excluded_multiplier_really_jumps(self):
        assert constant_speed(9999) == 4  # k = 9 at n = 2 lands higher up


class TestSpeedCandidates:
    def test_ascending_and_correct(self):
        for n in (2, 3, 4):
            got = list(itertools.islice(speed_candidates(n), 12))
            assert got == sorted(got)
            for a in got:
                assert speed_by_formula(a) == n

    def test_speed_one_stream(self):
        got = list(itertools.islice(speed_candidates(1), 6))
        assert got == [2, 3, 4, 6, 8, 9]


class TestSmallestPrime:
    @pytest.mark.parametrize("n,q", [(1, 2), (2, 5), (3, 193), (4, 1249), (6, 2218751)])
    def test_fixtures(self, n, q):
        rec = smallest_prime_with_speed(n)
        assert rec.q == q
        assert rec.n == n
        assert rec.oracle_checked
        assert rec.method == METHOD_DETERMINISTIC

    def test_eleven(self):
        assert smallest_prime_with_speed(11).q == 281907922943

    def test_budget(self):
        with pytest.raises(SearchBudgetError) as exc:
            smallest_prime_with_speed(6, budget=1)
        assert exc.value.n == 6
        assert exc.value.examined == 1
        assert exc.value.last_candidate > 5

    def test_minimality_small(self):
        for n in (3, 4, 5, 6):
            q = smallest_prime_with_speed(n).q
            below = itertools.takewhile(lambda v: v < q, speed_candidates(n))
            assert not any(is_prime(v) for v in below)

    def test_table(self):
        recs = smallest_prime_table(4)
        assert [r.q for r in recs] == [2, 5, 193, 1249]


class TestNonMonotonicFlags:
    def test_detects_drop(self):
        recs = [
            PrimeSpeedRecord(3, 193, METHOD_DETERMINISTIC, True),
            PrimeSpeedRecord(4, 1249, METHOD_DETERMINISTIC, True),
        ]
        assert non_monotonic_flags(recs) == set()

    def test_resolver_for_missing_predecessor(self):
        recs = [PrimeSpeedRecord(4, 1249, METHOD_DETERMINISTIC, True)]
        assert non_monotonic_flags(recs, resolver=lambda n: 10**9) == {4}
        assert non_monotonic_flags(recs, resolver=lambda n: 1) == set()


class TestBounds:
    def test_fixtures(self):
        assert prime_speed_bounds(5) == (56, 899999)
        assert prime_speed_bounds(2) == (5, 899)

    def test_known_prime_refines_upper(self):
        lo, hi = prime_speed_bounds(5, known_prime=22943)
        assert (lo, hi) == (56, 22943)

    def test_sandwich_on_computed_records(self):
        for n in range(2, 13):
            q = smallest_prime_with_speed(n).q
            lo, hi = prime_speed_bounds(n)
            assert lo <= q <= hi

    def test_isqrt_defining_property(self):
        import math

        for n in range(2, 61):
            lo, hi = prime_speed_bounds(n)
            assert lo < hi
            assert lo == math.isqrt(5**n - 1) + 1
            assert (lo - 1) ** 2 <= 5**n - 1 < lo**2


class TestPrimeFamilies:
    def test_trailing_nines_primes_have_speed_n(self):
        # first 5 primes (k+1) * 10^n - 1 with k != 9 (mod 10), n <= 4 here;
        # the acceptance suite pushes n to 8
        for n in range(1, 5):
            found = 0
            for k in itertools.count():
                if k % 10 == 9:
                    continue
                p = RepnineForm(k, n).value
                if is_prime(p):
                    assert constant_speed(p) == n, (n, k, p)
                    found += 1
                    if found == 5:
                        break

    def test_odd_multiplier_primes_have_speed_n(self):
        for n in range(2, 5):
            found = 0
            for m in itertools.count():
                p = (2 * m + 1) * 10**n - 1
                if is_prime(p):
                    assert constant_speed(p) == n, (n, m, p)
                    found += 1
                    if found == 5:
                        break

    def test_primes_29_mod_100_have_speed_one(self):
        found = 0
        for p in itertools.count(29, 100):
            if is_prime(p):
                assert constant_speed(p) == 1, p
                found += 1
                if found == 5:
                    break
