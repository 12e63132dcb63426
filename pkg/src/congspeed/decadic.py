"""10-adic machinery: idempotent-style generators and the thirteen
nontrivial roots of y^5 = y.

The two generators are h(n) = 5^(2^n) mod 10^n and r(n) = 2^(5^n) mod 10^n.
h is idempotent; r is the Teichmueller-style lift of 2 on the 5-adic side,
with r^2 + 1 = h and r^4 = 1 - h modulo 10^n.  Every nontrivial root of
y^5 = y modulo 10^n is a small signed combination of h and r.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .arith import carmichael, Modulus

# Last digit of each root, indexed 1..13.
ROOT_LAST_DIGIT = {
    1: 1, 2: 2, 3: 3, 4: 3, 5: 4, 6: 5, 7: 5,
    8: 6, 9: 7, 10: 7, 11: 8, 12: 9, 13: 9,
}


@dataclass(frozen=True)
class IdempotentPair:
    """The pair (h, r) truncated to n digits."""

    n: int
    h: int
    r: int


@dataclass(frozen=True)
class DecadicResidue:
    """An n-digit truncation of one of the thirteen roots of y^5 = y."""

    root_index: int
    n: int
    value: int

    @property
    def digits(self) -> tuple[int, ...]:
        """Digits s_1..s_n, least significant first."""
        return tuple(int(c) for c in reversed(f"{self.value:0{self.n}d}"))


@functools.lru_cache(maxsize=None)
def idempotents(n: int) -> IdempotentPair:
    """h(n) = 5^(2^n) and r(n) = 2^(5^n), both mod 10^n.

    The giant exponents are clamped through Carmichael's lambda, which is
    valid here because 2^n and 5^n always exceed n.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    m = 10**n
    lam = carmichael(Modulus.ten_power(n))
    h = pow(5, pow(2, n, lam) + lam, m)
    r = pow(2, pow(5, n, lam) + lam, m)
    return IdempotentPair(n, h, r)


@functools.lru_cache(maxsize=None)
def root_residue(i: int, n: int) -> DecadicResidue:
    """The n-digit truncation of root number i (1..13) of y^5 = y."""
    if not 1 <= i <= 13:
        raise ValueError(f"root index must be in 1..13, got {i}")
    if n < 1:
        raise ValueError("n must be >= 1")
    pair = idempotents(n)
    h, r, m = pair.h, pair.r, 10**n
    combos = {
        1: 1 - 2 * h,
        2: r,
        3: h - r,
        4: -h - r,
        5: h - 1,
        6: h,
        7: -h,
        8: 1 - h,
        9: r - h,
        10: h + r,
        11: -r,
        12: 2 * h - 1,
        13: -1,
    }
    value = combos[i] % m
    if value % 10 != ROOT_LAST_DIGIT[i]:  # pragma: no cover - structural guarantee
        raise AssertionError(f"root {i} truncation has wrong last digit")
    return DecadicResidue(i, n, value)


def root_digit(i: int, pos: int) -> int:
    """Digit s_pos of root i (pos >= 1, least significant is s_1)."""
    return root_residue(i, pos).value // 10 ** (pos - 1) % 10


def unit_root_pow2_form(n: int) -> int:
    """(2^(4*5^n + 1) - 1) mod 10^n, an alternative expansion of root 1.

    Equal to root_residue(1, n).value because r^4 = 1 - h, so
    2 * r^4 - 1 = 1 - 2h modulo 10^n.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    m = 10**n
    lam = carmichael(Modulus.ten_power(n))
    e = (4 * pow(5, n, lam) + 1) % lam + lam
    return (pow(2, e, m) - 1) % m


def sqrt_minus_one_mod5(n: int) -> tuple[int, int]:
    """The two solutions of x^2 = -1 (mod 5^n), ascending."""
    if n < 1:
        raise ValueError("n must be >= 1")
    five = 5**n
    x = idempotents(n).r % five
    return tuple(sorted((x, five - x)))


def min_coprime_candidates(n: int) -> dict[int, int]:
    """Smallest n-digit-pattern bases per coprime last digit, speed >= n.

    For each last digit in {1, 3, 7, 9} this is the minimum over the root
    truncations landing in that class.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    return {
        1: root_residue(1, n).value,
        3: min(root_residue(3, n).value, root_residue(4, n).value),
        7: min(root_residue(10, n).value, root_residue(9, n).value),
        9: root_residue(12, n).value,
    }
