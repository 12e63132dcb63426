"""Congruence speed of integer tetration in radix 10.

Two independent routes to V(a): a definitional oracle built on modular
power towers (`constant_speed`, `speed_profile`) and an explicit formula
system built on 10-adic root residues (`speed_by_formula`, `class_spec`,
`min_base`), plus the smallest-prime-per-speed search
(`smallest_prime_with_speed`).
"""

from .arith import (
    carmichael,
    digit_length,
    exact_tetration,
    Modulus,
    pow_mod,
    tower_residue,
    tower_residues,
    valuation,
)
from .classes import (
    class5_closed_form,
    class_spec,
    ClassSpec,
    min_base,
    min_base_class,
    min_base_lift,
    ProgressionFamily,
    speed_by_formula,
    speed_by_membership,
    speed_one_residues,
    table1_rows,
    valuation_bound,
)
from .decadic import (
    DecadicResidue,
    idempotents,
    IdempotentPair,
    min_coprime_candidates,
    root_residue,
    sqrt_minus_one_mod5,
)
from .primes import (
    is_prime,
    non_monotonic_flags,
    prime_speed_bounds,
    PrimeSpeedRecord,
    repnine_speed,
    RepnineForm,
    SearchBudgetError,
    smallest_prime_table,
    smallest_prime_with_speed,
)
from .speed import (
    constant_speed,
    frozen_digits,
    PrecisionError,
    speed_at_height,
    speed_profile,
    SpeedProfile,
    TetrationBase,
    UndefinedSpeedError,
)
from .verify import (
    FixtureMismatch,
    phase_shift_fixture,
    probe_repnine_stabilization,
    probe_stabilization_height,
    sweep,
    SweepReport,
)

__version__ = "0.1.0"

__all__ = [
    "carmichael", "digit_length", "exact_tetration", "Modulus", "pow_mod",
    "tower_residue", "tower_residues", "valuation",
    "class5_closed_form", "class_spec", "ClassSpec", "min_base",
    "min_base_class", "min_base_lift", "ProgressionFamily",
    "speed_by_formula", "speed_by_membership", "speed_one_residues",
    "table1_rows", "valuation_bound",
    "DecadicResidue", "idempotents", "IdempotentPair",
    "min_coprime_candidates", "root_residue", "sqrt_minus_one_mod5",
    "is_prime", "non_monotonic_flags", "prime_speed_bounds",
    "PrimeSpeedRecord", "repnine_speed", "RepnineForm", "SearchBudgetError",
    "smallest_prime_table", "smallest_prime_with_speed",
    "constant_speed", "frozen_digits", "PrecisionError", "speed_at_height",
    "speed_profile", "SpeedProfile", "TetrationBase", "UndefinedSpeedError",
    "FixtureMismatch", "phase_shift_fixture", "probe_repnine_stabilization",
    "probe_stabilization_height", "sweep", "SweepReport",
]
