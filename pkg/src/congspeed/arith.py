"""Exact arithmetic over moduli of the form 2^i * 5^j.

Everything in this module is integer arithmetic; decimal digit counts are
the only size parameters.  Power towers are evaluated modulo 10^n by
descending the Carmichael chain m, lambda(m), lambda(lambda(m)), ... and
clamping exponents with the identity

    a^e = a^((e mod lambda(m)) + lambda(m))   (mod m),

which holds for every a (coprime or not) as soon as the true exponent e is
at least the largest prime-power exponent of m.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

# Exponents at or below this are always carried exactly; tower evaluation
# raises the effective threshold to the digit count so the clamp identity
# stays valid for very wide moduli.
CLAMP_THRESHOLD = 64


def valuation(p: int, x: int) -> int:
    """Largest e with p^e dividing x, for p in {2, 5}."""
    if p not in (2, 5):
        raise ValueError(f"valuation only supported for p in {{2, 5}}, got {p}")
    if x <= 0:
        raise ValueError("valuation undefined for zero")
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e


def digit_length(a: int) -> int:
    """Number of decimal digits of a >= 1.

    Pure integer arithmetic; unlike len(str(a)) it is immune to the
    interpreter's int-to-str conversion limit on huge values.
    """
    if a < 1:
        raise ValueError("digit_length requires a positive integer")
    # 30102/100000 underestimates log10(2), so d starts at most at log10(a)
    d = (a.bit_length() - 1) * 30102 // 100000
    p = 10**d
    while p <= a:
        p *= 10
        d += 1
    return d


@dataclass(frozen=True)
class Modulus:
    """A modulus 2^two_exp * 5^five_exp with its value cached."""

    value: int
    two_exp: int
    five_exp: int

    def __post_init__(self):
        if self.two_exp < 0 or self.five_exp < 0:
            raise ValueError("negative exponent in modulus")
        if self.value != 2**self.two_exp * 5**self.five_exp:
            raise ValueError("modulus value is not 2^i * 5^j with the stated exponents")

    @classmethod
    def from_exponents(cls, i: int, j: int) -> "Modulus":
        return cls(2**i * 5**j, i, j)

    @classmethod
    def ten_power(cls, n: int) -> "Modulus":
        return cls(10**n, n, n)

    @classmethod
    def from_value(cls, value: int) -> "Modulus":
        if value < 1:
            raise ValueError("modulus must be positive")
        i = valuation(2, value) if value > 1 else 0
        j = valuation(5, value) if value > 1 else 0
        return cls(value, i, j)


@dataclass(frozen=True)
class ClampedExponent:
    """A tower exponent prepared for use modulo some m.

    When is_large is false, residue is the exact exponent.  When true, the
    exact exponent exceeds the evaluation threshold and residue is its value
    modulo lambda(m); the consumer must add lambda(m) back before
    exponentiating.
    """

    residue: int
    is_large: bool


def _lambda_exponents(i: int, j: int) -> tuple[int, int]:
    """Exponents of lambda(2^i * 5^j) = lcm(lambda(2^i), lambda(5^j)) as 2^i' * 5^j'."""
    if i <= 1:
        i2 = 0
    elif i == 2:
        i2 = 1
    else:
        i2 = i - 2
    if j == 0:
        return i2, 0
    # lambda(5^j) = 4 * 5^(j-1)
    return max(i2, 2), j - 1


def carmichael(m: Modulus | int) -> int:
    """Carmichael's lambda for a 2^i * 5^j modulus."""
    if isinstance(m, int):
        m = Modulus.from_value(m)
    i2, j2 = _lambda_exponents(m.two_exp, m.five_exp)
    return 2**i2 * 5**j2


@functools.lru_cache(maxsize=None)
def _lambda_int(m: int) -> int:
    return carmichael(Modulus.from_value(m))


def pow_mod(base: int, exp: int, m: Modulus | int) -> int:
    """base^exp mod m; exp = 0 yields 1 mod m."""
    value = m.value if isinstance(m, Modulus) else m
    return pow(base, exp, value)


@functools.lru_cache(maxsize=None)
def lambda_chain(digits: int) -> tuple[int, ...]:
    """The chain 10^digits, lambda(10^digits), ..., 1 as plain integers.

    Every link satisfies lambda(m) >= max prime-power exponent of m, the
    precondition for clamped tower exponentiation along the chain.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    i, j = digits, digits
    chain = [2**i * 5**j]
    while chain[-1] > 1:
        i2, j2 = _lambda_exponents(i, j)
        nxt = 2**i2 * 5**j2
        if nxt < max(i, j):  # pragma: no cover - structural guarantee
            raise AssertionError("lambda chain too small for exponent clamping")
        chain.append(nxt)
        i, j = i2, j2
    return tuple(chain)


def _exact_towers_capped(a: int, levels: int, cap: int) -> list:
    """vals[k] = ^k a when it is known exactly and usable, else None.

    vals[1] is always the exact base a.  For k >= 2, vals[k] is the exact
    tower value when it does not exceed cap; towers above cap are None.
    """
    vals: list = [None] * (levels + 1)
    if levels < 1:
        return vals
    vals[1] = a
    if a == 1:
        for k in range(2, levels + 1):
            vals[k] = 1
        return vals
    for k in range(2, levels + 1):
        p = vals[k - 1]
        if p is None or p > cap:
            break
        v = 1
        for _ in range(p):
            v *= a
            if v > cap:
                v = None
                break
        vals[k] = v
        if v is None:
            break
    return vals


def tower_exponent(a: int, b: int, m: int) -> ClampedExponent:
    """The tower ^b a prepared as an exponent for reduction modulo m."""
    mod = Modulus.from_value(m)
    cap = max(CLAMP_THRESHOLD, mod.two_exp, mod.five_exp)
    return _tower_exponent(a, b, m, cap)


def _tower_exponent(a: int, b: int, m: int, cap: int) -> ClampedExponent:
    if b == 1:
        # The base itself is always available exactly.
        return ClampedExponent(a, False)
    exact = _exact_towers_capped(a, b, cap)[b]
    if exact is not None:
        return ClampedExponent(exact, False)
    lam = _lambda_int(m)
    return ClampedExponent(_tower_mod(a, b, lam, cap), True)


def _tower_mod(a: int, b: int, m: int, cap: int) -> int:
    if m == 1:
        return 0
    if b == 1:
        return a % m
    e = _tower_exponent(a, b - 1, m, cap)
    if e.is_large:
        lam = _lambda_int(m)
        return pow(a, e.residue + lam, m)
    return pow(a, e.residue, m)


def tower_residue(a: int, b: int, digits: int) -> int:
    """^b a mod 10^digits."""
    if a < 1 or b < 1 or digits < 1:
        raise ValueError("tower_residue requires a, b, digits >= 1")
    cap = max(CLAMP_THRESHOLD, digits)
    return _tower_mod(a, b, 10**digits, cap)


def tower_residues(a: int, b_max: int, digits: int) -> list[int]:
    """Residues of ^1 a .. ^b_max a modulo 10^digits.

    Iterative table over the Carmichael chain: the height-b residue at chain
    depth d is derived from the height-(b-1) residue at depth d+1, so the
    whole column of heights costs O(b_max^2) modular powers at worst.
    """
    if a < 1 or b_max < 1 or digits < 1:
        raise ValueError("tower_residues requires a, b_max, digits >= 1")
    chain = lambda_chain(digits)
    cap = max(CLAMP_THRESHOLD, digits)
    exact = _exact_towers_capped(a, max(b_max - 1, 1), cap)
    mods = [chain[d] if d < len(chain) else 1 for d in range(b_max)]
    amod = [a % m if m > 1 else 0 for m in mods]
    row = amod[:]
    results = [row[0]]
    for b in range(2, b_max + 1):
        e = exact[b - 1]
        new = []
        for d in range(b_max - b + 1):
            m = mods[d]
            if m == 1:
                new.append(0)
                continue
            if e is not None:
                new.append(pow(amod[d], e, m))
            else:
                lam = mods[d + 1]
                new.append(pow(amod[d], row[d + 1] + lam, m))
        row = new
        results.append(row[0])
    return results


def exact_tetration(a: int, b: int, max_digits: int) -> int:
    """Exact value of ^b a, provided it has at most max_digits digits."""
    if a < 1 or b < 1 or max_digits < 1:
        raise ValueError("exact_tetration requires a, b, max_digits >= 1")
    if a == 1:
        return 1
    bit_cap = max_digits * 10 // 3 + 8
    v = a
    for _ in range(b - 1):
        if v * max(a.bit_length() - 1, 1) > bit_cap:
            raise OverflowError("exact tower too large")
        v = a**v
        if digit_length(v) > max_digits:
            raise OverflowError("exact tower too large")
    return v
