"""Primality testing and the smallest prime attaining each congruence speed.

For every target speed the nine residue-class enumerations are merged in
ascending order and tested for primality; the first hit is the record
holder.  Even classes and multiples of 5 cannot contribute a prime above 5,
so their streams are cut off early, which keeps the merge tractable for
very large targets.  Numbers below 2^64 get a deterministic Miller-Rabin
verdict; larger candidates get a Baillie-PSW style answer and are tagged
as probabilistic.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Iterator

from . import classes, speed

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_DETERMINISTIC_LIMIT = 1 << 64
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53)

METHOD_DETERMINISTIC = "deterministic-small"
METHOD_PROBABILISTIC = "probabilistic"


class SearchBudgetError(RuntimeError):
    """Raised when the candidate budget runs out; carries resume state."""

    def __init__(self, n: int, examined: int, last_candidate: int):
        super().__init__(
            f"budget exhausted after {examined} candidates for speed {n}; "
            f"resume above {last_candidate}"
        )
        self.n = n
        self.examined = examined
        self.last_candidate = last_candidate


@dataclass(frozen=True)
class PrimeSpeedRecord:
    n: int
    q: int
    method: str
    oracle_checked: bool


@dataclass(frozen=True)
class RepnineForm:
    """(k+1) * 10^n - 1: the last n digits are all nines."""

    k: int
    n: int

    @property
    def value(self) -> int:
        return (self.k + 1) * 10**self.n - 1


def _miller_rabin_round(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_prp(n: int) -> bool:
    """Strong Lucas test with Selfridge parameter selection."""
    if math.isqrt(n) ** 2 == n:
        return False
    d = 5
    while True:
        j = _jacobi(d, n)
        if j == -1:
            break
        if j == 0 and abs(d) != n:
            return False
        d = -(d + 2) if d > 0 else -(d - 2)
    p, q = 1, (1 - d) // 4

    def _half(x: int) -> int:
        return (x + n) // 2 % n if x & 1 else x // 2 % n

    k = n + 1
    s = (k & -k).bit_length() - 1
    t = k >> s
    u, v, qk = 1, p, q % n
    for bit in bin(t)[3:]:
        u, v = u * v % n, (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = _half(p * u + v), _half(d * u + p * v)
            qk = qk * q % n
    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        if v == 0:
            return True
        qk = qk * qk % n
    return False


def is_prime(x: int) -> bool:
    """Deterministic below 2^64, Baillie-PSW style above."""
    if x < 2:
        return False
    for p in _SMALL_PRIMES:
        if x == p:
            return True
        if x % p == 0:
            return False
    d, s = x - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if x < _DETERMINISTIC_LIMIT:
        return all(_miller_rabin_round(x, a, d, s) for a in _MR_WITNESSES)
    if not _miller_rabin_round(x, 2, d, s):
        return False
    return _strong_lucas_prp(x)


def primality_method(x: int) -> str:
    return METHOD_DETERMINISTIC if x < _DETERMINISTIC_LIMIT else METHOD_PROBABILISTIC


def repnine_speed(k: int, n: int):
    """Constant congruence speed of (k+1) * 10^n - 1, or None when above n.

    For n >= 2 the speed is exactly n unless k = 9 (mod 10); at n = 1 the
    exceptional multipliers are k = 4 (mod 5).
    """
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    if n == 1:
        return 1 if k % 5 != 4 else None
    return n if k % 10 != 9 else None


def _v1_candidates() -> Iterator[int]:
    a = 2
    while True:
        if a % 25 in classes.V1_RESIDUES:
            yield a
        a += 1


def _class_candidates(s1: int, n: int) -> Iterator[int]:
    it = classes.class_spec(s1, n).members()
    if s1 % 2 == 0 or s1 == 5:
        # Members above 5 are divisible by 2 or by 5, hence composite:
        # cutting the stream preserves an exhaustive prime search.
        for v in it:
            if v > 5:
                return
            yield v
    else:
        yield from it


def speed_candidates(n: int) -> Iterator[int]:
    """All bases with constant congruence speed n, ascending."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return _v1_candidates()
    return heapq.merge(*(_class_candidates(s1, n) for s1 in range(1, 10)))


def smallest_prime_with_speed(
    n: int, budget: int | None = None, oracle_check: bool | None = None
) -> PrimeSpeedRecord:
    """First prime in the merged ascending class enumerations for speed n."""
    examined = 0
    last = 0
    for cand in speed_candidates(n):
        examined += 1
        last = cand
        if budget is not None and examined > budget:
            raise SearchBudgetError(n, examined - 1, last)
        if is_prime(cand):
            if classes.speed_by_formula(cand) != n:  # pragma: no cover
                raise RuntimeError(f"candidate {cand} fails the speed check for n = {n}")
            check = oracle_check if oracle_check is not None else n <= 12
            if check and speed.constant_speed(cand) != n:  # pragma: no cover
                raise RuntimeError(f"oracle rejects {cand} as a speed-{n} base")
            return PrimeSpeedRecord(n, cand, primality_method(cand), bool(check))
    raise RuntimeError("unreachable: the enumerations are infinite")  # pragma: no cover


def smallest_prime_table(
    n_max: int, extra: tuple = (), budget: int | None = None
) -> list[PrimeSpeedRecord]:
    """Records for n = 1..n_max plus any extra indices, ascending in n."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    indices = sorted(set(range(1, n_max + 1)) | set(extra))
    return [smallest_prime_with_speed(n, budget=budget) for n in indices]


def non_monotonic_flags(records: list, resolver=None) -> set:
    """Indices n among the records whose q_n drops below q_(n-1).

    Predecessors missing from the record list are computed through the
    resolver (defaults to a fresh search), so a run like 51..54 still gets
    its leading flag evaluated.
    """
    if resolver is None:
        resolver = lambda n: smallest_prime_with_speed(n).q
    known = {r.n: r.q for r in records}
    flags = set()
    for r in records:
        if r.n <= 1:
            continue
        prev = known.get(r.n - 1)
        if prev is None:
            prev = resolver(r.n - 1)
        if r.q < prev:
            flags.add(r.n)
    return flags


def prime_speed_bounds(n: int, known_prime: int | None = None) -> tuple[int, int]:
    """(lower, upper) bounds for the smallest prime with speed n >= 2.

    Lower comes from the square-root class bound; upper is the all-nines
    witness 9 * 10^n - 1, refined by any known smaller speed-n prime.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    lower = math.isqrt(5**n - 1) + 1
    if repnine_speed(8, n) != n:  # pragma: no cover - k = 8 is never excluded
        raise AssertionError("all-nines witness lost its speed")
    upper = 9 * 10**n - 1
    if known_prime is not None:
        upper = min(upper, known_prime)
    return lower, upper
