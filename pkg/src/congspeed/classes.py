"""Residue-class map of the constant congruence speed.

For each last digit s1 and target speed n >= 2 the bases with V(a) = n form
a finite union of arithmetic progressions: truncated roots of y^5 = y
shifted by 10^n (odd coprime classes), the reduced root residues shifted by
2 * 5^n (even classes), 5^n -+ 1 shifted by 2 * 5^n (classes 4 and 6), and
two closed-form bases shifted by 10 * 2^n (class 5).  Speed 1 is a plain
residue test modulo 25.  A direct valuation formula for V(a) is derived
from the same structure and cross-checked against class membership.
"""

from __future__ import annotations

import functools
import heapq
import logging
from dataclasses import dataclass
from typing import Iterator

from . import decadic
from .arith import valuation
from .speed import UndefinedSpeedError

log = logging.getLogger(__name__)

# Residues modulo 25 of the bases with constant congruence speed exactly 1.
V1_RESIDUES = frozenset(
    {2, 3, 4, 6, 8, 9, 11, 12, 13, 14, 16, 17, 19, 21, 22, 23}
)

# Exact sin/cos at quarter-period points k * pi/2.
_SIN = (0, 1, 0, -1)
_COS = (1, 0, -1, 0)


def _sin_q(k: int) -> int:
    return _SIN[k % 4]


def _cos_q(k: int) -> int:
    return _COS[k % 4]


def _quarter_power_sign(n: int) -> int:
    # i^(n(n-1)) with n(n-1) even, i.e. (-1)^(n(n-1)/2).
    return -1 if (n * (n - 1) // 2) % 2 else 1


def speed_one_residues() -> frozenset:
    """Residues mod 25 characterizing V(a) = 1 (for a not divisible by 10)."""
    return V1_RESIDUES


@dataclass(frozen=True)
class ProgressionFamily:
    """base + k * step for k >= 0 with k mod residue_modulus outside excluded."""

    base: int
    step: int
    excluded: frozenset
    residue_modulus: int = 10

    def members(self) -> Iterator[int]:
        k = 0
        while True:
            if k % self.residue_modulus not in self.excluded:
                yield self.base + k * self.step
            k += 1

    def contains(self, a: int) -> bool:
        d = a - self.base
        if d < 0 or d % self.step:
            return False
        return (d // self.step) % self.residue_modulus not in self.excluded

    def smallest(self) -> int:
        return next(self.members())


@dataclass(frozen=True)
class ClassSpec:
    """All bases with last digit s1 and constant congruence speed exactly n."""

    s1: int
    n: int
    families: tuple

    def members(self) -> Iterator[int]:
        return heapq.merge(*(f.members() for f in self.families))

    def contains(self, a: int) -> bool:
        return any(f.contains(a) for f in self.families)

    def smallest(self) -> int:
        return min(f.smallest() for f in self.families)


def _root_family(i: int, n: int) -> ProgressionFamily:
    # Shifting the n-digit root truncation by anything except its own
    # (n+1)-th digit pins the speed at exactly n.
    base = decadic.root_residue(i, n).value
    return ProgressionFamily(base, 10**n, frozenset({decadic.root_digit(i, n + 1)}), 10)


def class5_bases(n: int) -> tuple[int, int]:
    """The two class-5 progression bases, by quarter-period trig lookup."""
    s, c = _sin_q(n), _cos_q(n)
    return (
        2**n * (5 + 2 * s + 4 * c) + 1,
        2**n * (5 - 2 * s - 4 * c) - 1,
    )


def class5_bases_signed(n: int) -> tuple[int, int]:
    """The same two bases from the parity/quarter-power closed form."""
    sg = _quarter_power_sign(n)
    return (
        2**n * ((-1) ** (n - 1) + 2) - sg,
        2**n * ((-1) ** n + 8) + sg,
    )


def min_base_lift(s1: int, n: int) -> int:
    """0/1 lift: whether 2 * 5^n must be added to the reduced even-class root.

    The lift is 1 exactly when the n- and (n+1)-digit roots reduce to the
    same residue, i.e. when the plain reduction already has speed n + 1.
    """
    if s1 not in (2, 8):
        raise ValueError("lift is defined for last digits 2 and 8 only")
    if n < 1:
        raise ValueError("n must be >= 1")
    i = 2 if s1 == 2 else 11
    cur = decadic.root_residue(i, n).value % (2 * 5**n)
    nxt = decadic.root_residue(i, n + 1).value % (2 * 5 ** (n + 1))
    return 1 if cur == nxt else 0


def _even_min_base(s1: int, n: int) -> int:
    i = 2 if s1 == 2 else 11
    step = 2 * 5**n
    return decadic.root_residue(i, n).value % step + min_base_lift(s1, n) * step


@functools.lru_cache(maxsize=None)
def class_spec(s1: int, n: int) -> ClassSpec:
    """The progression families making up the speed-n class of last digit s1."""
    if not 1 <= s1 <= 9:
        raise ValueError(f"last digit must be 1..9, got {s1}")
    if n < 2:
        raise ValueError("use speed_one_residues for n = 1")
    ten = 10**n
    two5 = 2 * 5**n
    if s1 == 1:
        fams = (
            _root_family(1, n),
            ProgressionFamily(ten + 1, ten, frozenset({9}), 10),
        )
    elif s1 == 9:
        fams = (
            _root_family(12, n),
            ProgressionFamily(ten - 1, ten, frozenset({9}), 10),
        )
    elif s1 == 3:
        fams = (_root_family(3, n), _root_family(4, n))
    elif s1 == 7:
        fams = (_root_family(9, n), _root_family(10, n))
    elif s1 == 5:
        b1, b2 = class5_bases(n)
        fams = (
            ProgressionFamily(b1, 10 * 2**n, frozenset(), 10),
            ProgressionFamily(b2, 10 * 2**n, frozenset(), 10),
        )
    elif s1 in (4, 6):
        base = 5**n - 1 if s1 == 4 else 5**n + 1
        fams = (ProgressionFamily(base, two5, frozenset({2}), 5),)
    else:  # 2, 8
        base = _even_min_base(s1, n)
        nxt = _even_min_base(s1, n + 1)
        fams = (
            ProgressionFamily(base, two5, frozenset({(nxt - base) // two5 % 5}), 5),
        )
    return ClassSpec(s1, n, fams)


def min_base_class(s1: int, n: int) -> int:
    """Smallest base with last digit s1 and constant congruence speed n >= 2."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if s1 == 4:
        return 5**n - 1
    if s1 == 6:
        return 5**n + 1
    if s1 in (2, 8):
        return _even_min_base(s1, n)
    if s1 == 5:
        return min(class5_bases(n))
    return class_spec(s1, n).smallest()


def min_base_trig(n: int) -> int:
    """Smallest speed-n base as the minimum of the two shifted-phase forms."""
    s, c = _sin_q(n - 1), _cos_q(n - 1)
    return min(
        2**n * (2 * c - 4 * s + 5) + 1,
        2**n * (4 * s - 2 * c + 5) - 1,
    )


def min_base_piecewise(n: int) -> int:
    """Smallest speed-n base via the case split on n mod 4."""
    if n % 4 in (2, 3):
        return 2**n * (5 + 2 * _sin_q(n) + 4 * _cos_q(n)) + 1
    return 2**n * (5 - 2 * _sin_q(n) - 4 * _cos_q(n)) - 1


def min_base_signed(n: int) -> int:
    """Smallest speed-n base via the parity/quarter-power closed form."""
    return 2**n * ((-1) ** (n - 1) + 2) - _quarter_power_sign(n)


def min_base(n: int) -> int:
    """Smallest base with constant congruence speed n (any last digit)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 1
    if n == 1:
        return 2
    v = min_base_signed(n)
    # All three published routes must coincide.
    if not v == min_base_piecewise(n) == min_base_trig(n):  # pragma: no cover
        raise AssertionError(f"minimal-base closed forms disagree at n = {n}")
    return v


def class5_closed_form(n: int, count: int) -> list[int]:
    """First `count` multiples-of-5 bases with speed n, by the closed form.

    Merges the two signed-form bases shifted by 10 * 2^n and cross-checks
    against the class-5 progression enumeration.
    """
    if n < 2 or count < 1:
        raise ValueError("need n >= 2 and count >= 1")
    step = 10 * 2**n
    b1, b2 = class5_bases_signed(n)
    gen1 = (b1 + k * step for k in range(count))
    gen2 = (b2 + k * step for k in range(count))
    out = []
    for v in heapq.merge(gen1, gen2):
        out.append(v)
        if len(out) == count:
            break
    spec = class_spec(5, n)
    for got, want in zip(out, spec.members()):
        if got != want:  # pragma: no cover - structural guarantee
            raise AssertionError("class-5 closed form disagrees with enumeration")
    return out


def table1_rows(n_max: int = 19) -> list[tuple]:
    """Rows (n, smallest class-5 base or None, smallest other base)."""
    rows = []
    for n in range(1, n_max + 1):
        if n == 1:
            rows.append((1, None, 2))
            continue
        a5 = min_base_class(5, n)
        other = min(min_base_class(s1, n) for s1 in (1, 2, 3, 4, 6, 7, 8, 9))
        rows.append((n, a5, other))
    return rows


def valuation_bound(a: int) -> int:
    """Upper bound on V(a) from 2- and 5-adic valuations of a^2 -+ 1."""
    if a < 2 or a % 10 == 0:
        raise UndefinedSpeedError(f"valuation bound needs a >= 2 not divisible by 10, got {a}")
    s1 = a % 10
    sq = a * a
    if s1 == 5:
        return valuation(2, sq - 1)
    if s1 in (4, 6):
        return valuation(5, sq - 1)
    if s1 in (2, 8):
        return valuation(5, sq + 1)
    if s1 in (1, 9):
        return min(valuation(5, sq - 1), valuation(2, sq - 1))
    return min(valuation(5, sq + 1), valuation(2, sq - 1))


def _formula_value(a: int) -> int:
    s1 = a % 10
    if s1 == 5:
        return valuation(2, a * a - 1) - 1
    if s1 % 2 == 0:
        return valuation(5, a**4 - 1)
    return min(valuation(5, a**4 - 1), valuation(2, a * a - 1) - 1)


def _in_class(a: int, n: int) -> bool:
    if n == 1:
        return a % 25 in V1_RESIDUES
    return class_spec(a % 10, n).contains(a)


def speed_by_formula(a: int) -> int:
    """V(a) by direct valuations, cross-checked against class membership."""
    if a < 1 or a % 10 == 0:
        raise UndefinedSpeedError(f"undefined congruence speed for a = {a}")
    if a == 1:
        return 0
    v = _formula_value(a)
    if _in_class(a, v):
        return v
    fallback = speed_by_membership(a)  # pragma: no cover - never expected
    log.warning("valuation formula gave %s for a=%s; class membership says %s", v, a, fallback)
    if fallback is None:
        raise RuntimeError(f"no unique speed class for a = {a}")
    return fallback


def speed_by_membership(a: int):
    """The unique n whose class contains a, or None if not exactly one."""
    if a < 1 or a % 10 == 0:
        raise UndefinedSpeedError(f"undefined congruence speed for a = {a}")
    if a == 1:
        return 0
    matches = [n for n in range(1, valuation_bound(a) + 2) if _in_class(a, n)]
    return matches[0] if len(matches) == 1 else None
