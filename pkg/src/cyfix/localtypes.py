"""Linearized fixed points of prime-order automorphisms of threefolds.

A fixed point P of g (order p) is described by the exponents (a1, a2, a3)
of the eigenvalues w^ai of d_P g, w = exp(2 pi i / p). Exponents are only
defined up to permutation and are kept sorted in non-increasing order.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .exactnum import cyc_root

__all__ = [
    'LocalType',
    'SingularityClassification',
    'NonIsolatedError',
    'is_prime',
    'make_type',
    's_of',
    'age',
    'is_isolated',
    'is_quasi_reflection',
    'is_gorenstein',
    'is_terminal',
    'is_terminal_by_age',
    'is_canonical',
    'classify',
    'enumerate_isolated_types',
    'partition_order5',
    'ORDER5_TERMINAL',
    'ORDER5_NONTERMINAL',
    'determinant',
]


class NonIsolatedError(ValueError):
    """A predicate that presupposes an isolated fixed point got a zero exponent."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True, order=True)
class LocalType:
    p: int
    exps: tuple[int, int, int]

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f'p must be prime, got {self.p}')
        exps = tuple(int(a) for a in self.exps)
        if len(exps) != 3:
            raise ValueError(f'expected three exponents, got {len(exps)}')
        for a in exps:
            if not 0 <= a <= self.p - 1:
                raise ValueError(f'exponent {a} out of range [0, {self.p - 1}]')
        object.__setattr__(self, 'exps', tuple(sorted(exps, reverse=True)))

    def __str__(self):
        return f'{self.p}:({",".join(map(str, self.exps))})'

    def scaled(self, m: int) -> 'LocalType':
        """The type of g**m at the same point (m a unit mod p)."""
        if m % self.p == 0:
            raise ValueError(f'{m} is not a unit mod {self.p}')
        return LocalType(self.p, tuple((m * a) % self.p for a in self.exps))

    def to_json(self) -> dict:
        return {'p': self.p, 'exps': list(self.exps)}

    @classmethod
    def from_json(cls, data: dict) -> 'LocalType':
        return make_type(int(data['p']), data['exps'])


def make_type(p: int, exps: Iterable[int]) -> LocalType:
    return LocalType(p, tuple(exps))


def s_of(t: LocalType) -> int:
    return sum(t.exps) % t.p


def is_isolated(t: LocalType) -> bool:
    return all(t.exps)


def _require_isolated(t: LocalType) -> None:
    if not is_isolated(t):
        raise NonIsolatedError(f'type {t} has a zero exponent; the fixed point is not isolated')


def age(t: LocalType, u: int) -> Fraction:
    """Age of the linearization with respect to the primitive root w**(1/u).

    Re-expressing each eigenvalue w**a as a power of that root multiplies
    the exponent by u (mod p).
    """
    if u % t.p == 0:
        raise ValueError(f'{u} is not a unit mod {t.p}')
    return Fraction(sum((u * a) % t.p for a in t.exps), t.p)


def is_quasi_reflection(t: LocalType) -> bool:
    return sum(1 for a in t.exps if a) == 1


def is_gorenstein(t: LocalType) -> bool:
    # det = w**s; all powers of g are then in SL too since p is prime
    return s_of(t) == 0


def is_terminal(t: LocalType) -> bool:
    """Determinant criterion: det(d_P g) is itself an eigenvalue."""
    _require_isolated(t)
    return s_of(t) in t.exps


def _ages(t: LocalType) -> dict[int, Fraction]:
    return {u: age(t, u) for u in range(1, t.p)}


def is_terminal_by_age(t: LocalType) -> bool:
    """Age criterion, quantified over every unit u mod p.

    For a cyclic group of prime order, the powers of g and the choice of
    primitive root both act by scaling exponents with a unit, so one loop
    covers every element of the stabilizer and every root.
    """
    _require_isolated(t)
    return all(a > 1 for a in _ages(t).values())


def is_canonical(t: LocalType) -> bool:
    _require_isolated(t)
    return all(a >= 1 for a in _ages(t).values())


@dataclass(frozen=True)
class SingularityClassification:
    type: LocalType
    is_isolated: bool
    is_quasi_reflection: bool
    is_gorenstein: bool
    # None when the point is not isolated: the criteria do not apply
    is_canonical: Optional[bool]
    is_terminal: Optional[bool]
    s: int
    ages: dict[int, Fraction] = field(compare=False)

    def to_json(self) -> dict:
        return {
            'type': self.type.to_json(),
            'is_isolated': self.is_isolated,
            'is_quasi_reflection': self.is_quasi_reflection,
            'is_gorenstein': self.is_gorenstein,
            'is_canonical': self.is_canonical,
            'is_terminal': self.is_terminal,
            's': self.s,
            'ages': {str(u): [a.numerator, a.denominator] for u, a in sorted(self.ages.items())},
        }


def classify(t: LocalType) -> SingularityClassification:
    iso = is_isolated(t)
    canonical = terminal = None
    if iso:
        canonical = is_canonical(t)
        terminal = is_terminal(t)
        by_age = is_terminal_by_age(t)
        if terminal != by_age:
            raise AssertionError(f'terminal criteria disagree on {t}: det={terminal}, age={by_age}')
    return SingularityClassification(
        type=t,
        is_isolated=iso,
        is_quasi_reflection=is_quasi_reflection(t),
        is_gorenstein=is_gorenstein(t),
        is_canonical=canonical,
        is_terminal=terminal,
        s=s_of(t),
        ages=_ages(t),
    )


def enumerate_isolated_types(p: int) -> list[LocalType]:
    if not is_prime(p):
        raise ValueError(f'p must be prime, got {p}')
    return [LocalType(p, c)
            for c in itertools.combinations_with_replacement(range(p - 1, 0, -1), 3)]


ORDER5_TERMINAL = [(4, 1, 1), (3, 2, 1), (4, 2, 1), (3, 2, 2),
               (4, 3, 1), (3, 3, 2), (4, 4, 1), (4, 3, 2)]
ORDER5_NONTERMINAL = [(2, 2, 2), (4, 4, 3), (3, 3, 1), (4, 4, 4),
               (1, 1, 1), (4, 2, 2), (2, 1, 1), (3, 3, 3)]


def partition_order5() -> tuple[list[LocalType], list[LocalType], list[LocalType]]:
    """Split the 20 isolated order-5 types into terminal, non-terminal non-symplectic, symplectic."""
    a, b, sym = [], [], []
    for t in enumerate_isolated_types(5):
        if s_of(t) == 0:
            sym.append(t)
        elif is_terminal(t):
            a.append(t)
        else:
            b.append(t)
    return a, b, sym


def determinant(t: LocalType):
    """det(d_P g) = w**s as an exact element of Q(zeta_p)."""
    return cyc_root(t.p, s_of(t))
