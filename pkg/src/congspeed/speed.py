"""Congruence speed of integer tetration, straight from the definition.

The frozen-digit count nu(b) is the 10-adic valuation of ^(b+1)a - ^b a,
i.e. how many trailing decimal digits the tower shares with the next taller
tower.  The speed at height b is nu(b) - nu(b-1), with nu(0) taken as 0 so
the height-1 speed equals nu(1).  For every base not divisible by 10 the
speed settles to a constant once the height is large enough; this module
computes that constant by watching the per-height speeds stabilize.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import arith

# nu values within this many digits of the working precision trigger a
# precision doubling instead of being trusted.
MARGIN = 8

# Heights to compute beyond the earliest possible stabilization point.
_EXTRA_HEIGHTS = 2

# Cap on the per-length part of the stabilization floor.  Beyond ~60 digits
# the floor len(a) + 3 would demand towers of thousands of heights at
# matching precision; bases that long settle within a handful of heights
# unless they agree with a universal root expansion for hundreds of digits,
# which no feasible height scan could detect anyway.
_FLOOR_LENGTH_CAP = 61


class UndefinedSpeedError(ValueError):
    """The congruence speed is undefined for multiples of 10."""


class PrecisionError(RuntimeError):
    """The requested working precision cannot resolve the answer."""


@dataclass(frozen=True)
class TetrationBase:
    """A tetration base together with its last digit and decimal length."""

    a: int
    s1: int
    length: int

    @classmethod
    def from_int(cls, a: int) -> "TetrationBase":
        _require_valid_base(a)
        return cls(a, a % 10, arith.digit_length(a))


@dataclass(frozen=True)
class ProfileEntry:
    height: int
    frozen: int | None  # None marks "all working digits agree" (only a = 1 keeps it)
    speed: int


@dataclass(frozen=True)
class SpeedProfile:
    base: TetrationBase
    precision_digits: int
    entries: tuple[ProfileEntry, ...]
    constant_speed: int

    @property
    def speeds(self) -> list[int]:
        return [e.speed for e in self.entries]

    @property
    def frozen_counts(self) -> list:
        return [e.frozen for e in self.entries]


def _require_valid_base(a: int) -> None:
    if a < 1 or a % 10 == 0:
        raise UndefinedSpeedError(f"undefined congruence speed for a = {a}")


def _trailing_zeros(x: int) -> int:
    n = 0
    while x % 10 == 0:
        x //= 10
        n += 1
    return n


def _frozen_table(a: int, b_max: int, digits: int) -> list:
    """nu(1..b_max) from residues mod 10^digits; None where all digits agree."""
    towers = arith.tower_residues(a, b_max + 1, digits)
    mod = 10**digits
    out = []
    for b in range(1, b_max + 1):
        diff = (towers[b] - towers[b - 1]) % mod
        out.append(None if diff == 0 else _trailing_zeros(diff))
    return out


def frozen_digits(a: int, b: int, digits: int):
    """nu(b), or None when the two towers agree through all working digits."""
    _require_valid_base(a)
    if b < 1 or digits < 1:
        raise ValueError("height and digits must be >= 1")
    if a == 1:
        return None
    return _frozen_table(a, b, digits)[-1]


def speed_at_height(a: int, b: int, digits: int) -> int:
    """V(a, b) = nu(b) - nu(b-1); V(a, 1) = nu(1)."""
    _require_valid_base(a)
    if b < 1 or digits < 1:
        raise ValueError("height and digits must be >= 1")
    if a == 1:
        return 0
    nus = _frozen_table(a, b, digits)
    for nu in nus[-2:]:
        if nu is None or nu >= digits - MARGIN:
            raise PrecisionError(f"increase digits (working precision {digits} exhausted)")
    if b == 1:
        return nus[0]
    return nus[b - 1] - nus[b - 2]


def _stable_speed(nus: list, floor_b: int) -> int | None:
    """First speed value repeated at three consecutive heights ending at or
    after floor_b, or None if the table is too short."""
    speeds = [nus[0]]
    for i in range(1, len(nus)):
        speeds.append(nus[i] - nus[i - 1])
    # speeds[i] = V(a, i + 1)
    for b in range(max(floor_b, 4), len(speeds) + 1):
        v = speeds[b - 1]
        if speeds[b - 2] == v and speeds[b - 3] == v:
            return v
    return None


def constant_speed(a: int, start_digits: int | None = None) -> int:
    """The constant congruence speed V(a).

    V(1) = 0.  Otherwise heights are scanned upward with adaptive precision
    until three consecutive heights agree at height >= len(a) + 3, which
    also rides out the bases whose speed runs one high through height
    len(a) + 2.  For bases longer than 61 digits the floor is capped at
    height 64 (see _FLOOR_LENGTH_CAP).
    """
    _require_valid_base(a)
    if a == 1:
        return 0
    length = min(arith.digit_length(a), _FLOOR_LENGTH_CAP)
    digits = start_digits if start_digits else max(64, 8 * (length + 8))
    floor_b = length + 3
    b_hi = max(floor_b, 4) + _EXTRA_HEIGHTS
    while True:
        nus = _frozen_table(a, b_hi, digits)
        if any(nu is None or nu >= digits - MARGIN for nu in nus):
            digits *= 2
            continue
        v = _stable_speed(nus, floor_b)
        if v is not None:
            return v
        b_hi += 3
        if b_hi > length + 64:  # pragma: no cover - safety net
            raise RuntimeError(f"speed of {a} did not stabilize by height {b_hi}")


def speed_profile(a: int, b_max: int, digits: int | None = None) -> SpeedProfile:
    """Per-height table of frozen digits and speeds up to b_max.

    With explicit digits the profile is computed at exactly that precision
    and raises PrecisionError when it does not suffice; otherwise precision
    is chosen (and grown) automatically.
    """
    _require_valid_base(a)
    if b_max < 1:
        raise ValueError("b_max must be >= 1")
    base = TetrationBase.from_int(a)
    if a == 1:
        entries = tuple(ProfileEntry(b, None, 0) for b in range(1, b_max + 1))
        return SpeedProfile(base, digits or 64, entries, 0)
    strict = digits is not None
    n = digits if digits else max(64, 8 * (min(base.length, _FLOOR_LENGTH_CAP) + 8))
    while True:
        nus = _frozen_table(a, b_max, n)
        if any(nu is None for nu in nus):
            if strict:
                raise PrecisionError(f"increase digits (working precision {n} exhausted)")
            n *= 2
            continue
        break
    entries = [ProfileEntry(1, nus[0], nus[0])]
    for b in range(2, b_max + 1):
        entries.append(ProfileEntry(b, nus[b - 1], nus[b - 1] - nus[b - 2]))
    const = constant_speed(a, start_digits=n)
    return SpeedProfile(base, n, tuple(entries), const)
