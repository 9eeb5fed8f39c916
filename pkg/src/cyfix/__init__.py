"""Exact fixed-point analysis for prime-order automorphisms of Calabi-Yau threefolds.

Submodules
----------
exactnum    arithmetic in cyclotomic fields over the rationals
localtypes  linearized fixed points and their singularity predicates
lefschetz   the holomorphic Lefschetz identity, configurations and the solver
ambient     monomial group actions on products of projective spaces
pipelines   the shipped worked examples, run end to end
cli         command-line frontend (``cyfix`` / ``python -m cyfix``)
"""
from .exactnum import CyclotomicNumber, cyc_root, cyclotomic_polynomial
from .localtypes import LocalType, classify, enumerate_isolated_types, make_type
from .lefschetz import (
    FixedConfig,
    admissible_primes,
    conti_check,
    contribution,
    solve_configs,
    verify_config,
)

__version__ = '0.1.0'

__all__ = [
    'CyclotomicNumber', 'cyc_root', 'cyclotomic_polynomial',
    'LocalType', 'classify', 'enumerate_isolated_types', 'make_type',
    'FixedConfig', 'admissible_primes', 'conti_check', 'contribution',
    'solve_configs', 'verify_config',
]
