"""Holomorphic Lefschetz identity for prime-order automorphisms with isolated fixed points.

For g of prime order p on a Calabi-Yau threefold with isolated fixed
points, the identity reads

    sum over P of 1 / prod_i (1 - w**a_i(P))  =  1 - w**r,

where w**r is the trace of g* on H^{0,3}. Everything here is evaluated in
Q(zeta_p) exactly. :func:`solve_configs` enumerates every multiset of
local types satisfying the identity up to a point-count bound.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Union

from .exactnum import CyclotomicNumber, cyc_inv, cyc_one, cyc_root, cyc_zero
from .localtypes import (
    LocalType,
    SingularityClassification,
    classify,
    enumerate_isolated_types,
    is_isolated,
    is_prime,
    is_terminal,
    make_type,
    s_of,
)

__all__ = [
    'ConfigError',
    'InconsistentConfig',
    'FixedConfig',
    'ConfigReport',
    'AdmissiblePrime',
    'Order3Record',
    'Order5Record',
    'InvolutionRecord',
    'S_n',
    'S_table',
    'sum_all_S',
    's0_terminal_closed_form',
    'contribution',
    'lefschetz_lhs',
    'verify_config',
    'conti_check',
    'admissible_primes',
    'solve_configs',
    'order3_analysis',
    'order5_analysis',
    'involution_classify',
    'DEFAULT_MAX_POINTS',
]

log = logging.getLogger(__name__)

DEFAULT_MAX_POINTS = 64


class ConfigError(ValueError):
    """A fixed-point configuration violates a structural invariant."""


class InconsistentConfig(ValueError):
    """The data cannot come from an automorphism satisfying the Lefschetz identity."""


# -- congruence sums --

@lru_cache(maxsize=None)
def S_table(t: LocalType) -> tuple[int, ...]:
    """(S_0, ..., S_{p-1}) by brute force over [0, p-1]^3."""
    if not is_isolated(t):
        raise ConfigError(f'S_n needs an isolated type, got {t}')
    p = t.p
    a1, a2, a3 = t.exps
    out = [0] * p
    for k1 in range(p):
        for k2 in range(p):
            part = a1 * k1 + a2 * k2
            for k3 in range(p):
                out[(part + a3 * k3) % p] += k1 * k2 * k3
    return tuple(out)


def S_n(t: LocalType, n: int) -> int:
    if not 0 <= n <= t.p - 1:
        raise ValueError(f'n must lie in [0, {t.p - 1}], got {n}')
    return S_table(t)[n]


def sum_all_S(t: LocalType) -> int:
    return sum(S_table(t))


def s0_terminal_closed_form(p: int) -> Fraction:
    """Value of S_0 shared by every terminal type of order p."""
    if not is_prime(p):
        raise ValueError(f'p must be prime, got {p}')
    return Fraction(p, 2) * (Fraction(p * p * (p - 1) ** 2, 4) - Fraction(p * (p - 1) * (2 * p - 1), 6))


# -- contributions --

@lru_cache(maxsize=None)
def contribution(t: LocalType) -> CyclotomicNumber:
    """1 / det(I - d_P g) in Q(zeta_p)."""
    if not is_isolated(t):
        raise ConfigError(f'type {t} is not isolated; det(I - dg) vanishes')
    det = cyc_one(t.p)
    for a in t.exps:
        det = det * (1 - cyc_root(t.p, a))
    return cyc_inv(det)


# -- configurations --

TypeLike = Union[LocalType, tuple, list]


@dataclass(frozen=True)
class FixedConfig:
    """Multiset of isolated local types of one prime, with the trace exponent r.

    ``points`` is a canonical tuple of (type, multiplicity) pairs, sorted by
    exponents in decreasing order, multiplicities positive.
    """
    p: int
    r: int
    points: tuple[tuple[LocalType, int], ...] = ()

    def __post_init__(self):
        if not is_prime(self.p):
            raise ConfigError(f'p must be prime, got {self.p}')
        if not 0 <= self.r <= self.p - 1:
            raise ConfigError(f'r must lie in [0, {self.p - 1}], got {self.r}')
        merged: Counter = Counter()
        for t, m in self.points:
            if not isinstance(t, LocalType):
                t = make_type(self.p, t)
            if t.p != self.p:
                raise ConfigError(f'mixed primes: type {t} in a configuration of order {self.p}')
            if m < 0:
                raise ConfigError(f'negative multiplicity {m} for {t}')
            if not is_isolated(t):
                raise ConfigError(f'type {t} is not isolated')
            if (s_of(t) + self.r) % self.p:
                raise ConfigError(
                    f'det-inhomogeneous: type {t} has s={s_of(t)}, expected {(-self.r) % self.p} for r={self.r}')
            merged[t] += m
        pts = tuple(sorted(((t, m) for t, m in merged.items() if m), key=lambda x: x[0].exps, reverse=True))
        if not pts and self.r != 0:
            raise ConfigError('an empty fixed locus forces r = 0')
        object.__setattr__(self, 'points', pts)

    @classmethod
    def from_types(cls, p: int, r: int, types: Iterable[TypeLike]) -> 'FixedConfig':
        return cls(p, r, tuple((t, 1) for t in types))

    @classmethod
    def from_counts(cls, p: int, r: int, counts: Mapping) -> 'FixedConfig':
        return cls(p, r, tuple(counts.items()))

    @property
    def size(self) -> int:
        return sum(m for _, m in self.points)

    def count(self, exps) -> int:
        t = make_type(self.p, exps)
        return dict(self.points).get(t, 0)

    def scaled(self, k: int) -> 'FixedConfig':
        """Relabel the primitive root: exponents and r multiplied by the unit k."""
        return FixedConfig(self.p, (k * self.r) % self.p, tuple((t.scaled(k), m) for t, m in self.points))

    def to_json(self) -> dict:
        return {'p': self.p, 'r': self.r,
                'points': [{'exps': list(t.exps), 'multiplicity': m} for t, m in self.points]}

    @classmethod
    def from_json(cls, data: Mapping) -> 'FixedConfig':
        p = int(data['p'])
        pts = []
        for item in data['points']:
            exps = item['exps']
            if len(exps) != 3:
                raise ConfigError(f'expected three exponents, got {exps!r}')
            pts.append((make_type(p, [int(a) for a in exps]), int(item.get('multiplicity', 1))))
        return cls(p, int(data['r']), tuple(pts))

    def __str__(self):
        body = ' + '.join(f'{m}x{t.exps}' for t, m in self.points) or 'empty'
        return f'p={self.p} r={self.r}: {body}'


def lefschetz_lhs(c: FixedConfig) -> CyclotomicNumber:
    total = cyc_zero(c.p)
    for t, m in c.points:
        total = total + contribution(t) * m
    return total


def conti_check(c: FixedConfig) -> tuple[int, int, bool]:
    """Scalar consequence of the Lefschetz identity: sum of (p^3 (p-1)^3 / 8 - p S_0)."""
    p = c.p
    full = (p * (p - 1) // 2) ** 3
    lhs = sum(m * (full - p * S_table(t)[0]) for t, m in c.points)
    rhs = p ** 4 if c.r else 0
    return lhs, rhs, lhs == rhs


@dataclass(frozen=True)
class ConfigReport:
    config: FixedConfig
    lhs: CyclotomicNumber
    rhs: CyclotomicNumber
    valid: bool
    conti_lhs: int
    conti_rhs: int
    conti_ok: bool
    classifications: tuple[SingularityClassification, ...]
    counts: Optional[dict] = None

    def to_json(self) -> dict:
        return {
            'config': self.config.to_json(),
            'lhs': self.lhs.to_json(),
            'rhs': self.rhs.to_json(),
            'valid': self.valid,
            'conti': {'lhs': self.conti_lhs, 'rhs': self.conti_rhs, 'ok': self.conti_ok},
            'classifications': [c.to_json() for c in self.classifications],
            'counts': self.counts,
        }


def verify_config(c: FixedConfig) -> ConfigReport:
    lhs = lefschetz_lhs(c)
    rhs = 1 - cyc_root(c.p, c.r)
    cl, cr, ok = conti_check(c)
    counts = None
    if c.p == 5 and c.r:
        counts = _order5_counts(c)
    elif c.p == 3 and c.r == 0:
        counts = {'n1': c.count((1, 1, 1)), 'n2': c.count((2, 2, 2))}
    return ConfigReport(
        config=c, lhs=lhs, rhs=rhs, valid=(lhs == rhs),
        conti_lhs=cl, conti_rhs=cr, conti_ok=ok,
        classifications=tuple(classify(t) for t, _ in c.points),
        counts=counts,
    )


@dataclass(frozen=True)
class AdmissiblePrime:
    p: int
    q: int


def admissible_primes(p_max: int) -> list[AdmissiblePrime]:
    """Primes p <= p_max for which 24p / (p^2 - 1) is a positive integer."""
    out = []
    for p in range(2, p_max + 1):
        if is_prime(p) and (24 * p) % (p * p - 1) == 0:
            out.append(AdmissiblePrime(p, 24 * p // (p * p - 1)))
    return out


# -- exhaustive solver --

def _candidates(p: int, r: int) -> list[LocalType]:
    return [t for t in enumerate_isolated_types(p) if (s_of(t) + r) % p == 0]


def solve_configs(p: int, r: int, max_points: int = DEFAULT_MAX_POINTS) -> list[FixedConfig]:
    """Every configuration with at most ``max_points`` points satisfying the identity.

    Writing each contribution as -1/p^3 * sum_n S_n(t) w^n, the identity for
    N points becomes the integer system

        sum_t m_t S_n(t) = N T / p + p^3 ([n = r] - [n = 0])    (n = 0..p-1)

    with T = (p(p-1)/2)^3, since the only linear relation among 1, w, ...,
    w^(p-1) is that they sum to zero. All S_n are nonnegative, so partial
    sums may be pruned componentwise against the right-hand side.
    """
    if not is_prime(p):
        raise ValueError(f'p must be prime, got {p}')
    if not 0 <= r <= p - 1:
        raise ValueError(f'r must lie in [0, {p - 1}], got {r}')
    if max_points < 0:
        raise ValueError('max_points must be nonnegative')

    cands = _candidates(p, r)
    vecs = [S_table(t) for t in cands]
    total = (p * (p - 1) // 2) ** 3
    cube = p ** 3
    found: list[FixedConfig] = []

    for n_pts in range(max_points + 1):
        if (n_pts * total) % p:
            continue
        base = n_pts * total // p
        target = [base] * p
        if r:
            target[0] -= cube
            target[r] += cube
        if min(target) < 0:
            continue
        if n_pts == 0:
            if r == 0:
                found.append(FixedConfig(p, 0))
            continue
        for mult in _search(vecs, target, n_pts):
            found.append(FixedConfig(p, r, tuple((t, m) for t, m in zip(cands, mult) if m)))

    for c in found:
        # soundness: every solution must satisfy the identity in Q(zeta_p)
        if lefschetz_lhs(c) != 1 - cyc_root(p, r):
            raise AssertionError(f'solver produced an invalid configuration {c}')
    found.sort(key=_config_key)
    log.debug('solve_configs(%d, %d, %d): %d solutions', p, r, max_points, len(found))
    return found


def _config_key(c: FixedConfig):
    return (c.size, [(-m, tuple(-a for a in t.exps)) for t, m in c.points])


def _search(vecs: list[tuple[int, ...]], target: list[int], n_pts: int):
    k = len(vecs)
    if k == 0:
        return
    dim = len(target)
    mult = [0] * k
    partial = [0] * dim

    def rec(i: int, left: int):
        v = vecs[i]
        if i == k - 1:
            # all remaining points go to the last type
            if all(partial[j] + left * v[j] == target[j] for j in range(dim)):
                mult[i] = left
                yield tuple(mult)
                mult[i] = 0
            return
        m = 0
        while m <= left:
            if any(partial[j] + m * v[j] > target[j] for j in range(dim)):
                break
            for j in range(dim):
                partial[j] += m * v[j]
            mult[i] = m
            yield from rec(i + 1, left - m)
            for j in range(dim):
                partial[j] -= m * v[j]
            m += 1
        mult[i] = 0

    yield from rec(0, n_pts)


# -- order-specific analyses --

@dataclass(frozen=True)
class Order3Record:
    r: int
    n1: int
    n2: int
    total: int
    valid: bool
    all_terminal: bool

    def to_json(self) -> dict:
        return dict(self.__dict__)


def order3_analysis(c: FixedConfig) -> Order3Record:
    if c.p != 3:
        raise ValueError(f'order-3 analysis needs p = 3, got {c.p}')
    valid = verify_config(c).valid
    n1, n2 = c.count((1, 1, 1)), c.count((2, 2, 2))
    all_term = all(is_terminal(t) for t, _ in c.points)
    if valid and c.r == 0 and n1 != n2:
        raise InconsistentConfig(f'symplectic order-3 configuration with n1={n1} != n2={n2}')
    if valid and c.r != 0 and (c.size != 9 or not all_term):
        raise InconsistentConfig(f'non-symplectic order-3 configuration with {c.size} points')
    return Order3Record(c.r, n1, n2, c.size, valid, all_term)


@dataclass(frozen=True)
class Order5Record:
    n: int
    q1: int
    q2: int
    total: int
    valid: bool
    relation_holds: bool
    all_terminal: bool
    s0_by_type: dict

    def to_json(self) -> dict:
        d = dict(self.__dict__)
        d['s0_by_type'] = {k: v for k, v in sorted(self.s0_by_type.items())}
        return d


_S0_CLASSES = {175: 'n', 200: 'q1', 225: 'q2'}


def _order5_counts(c: FixedConfig) -> dict:
    counts = {'n': 0, 'q1': 0, 'q2': 0}
    for t, m in c.points:
        s0 = S_table(t)[0]
        if s0 not in _S0_CLASSES:
            raise AssertionError(f'unexpected S_0 = {s0} for non-symplectic order-5 type {t}')
        counts[_S0_CLASSES[s0]] += m
    return counts


def order5_analysis(c: FixedConfig) -> Order5Record:
    if c.p != 5:
        raise ValueError(f'order-5 analysis needs p = 5, got {c.p}')
    if c.r == 0:
        raise ValueError('order-5 analysis covers the non-symplectic case r != 0 only')
    counts = _order5_counts(c)
    n, q1, q2 = counts['n'], counts['q1'], counts['q2']
    valid = verify_config(c).valid
    relation = (n == 5 + q2) and (c.size == 5 + q1 + 2 * q2)
    if valid and not relation:
        raise InconsistentConfig(f'valid order-5 configuration violates n = 5 + q2: {counts}')
    return Order5Record(
        n=n, q1=q1, q2=q2, total=c.size, valid=valid, relation_holds=relation,
        all_terminal=all(is_terminal(t) for t, _ in c.points),
        s0_by_type={','.join(map(str, t.exps)): S_table(t)[0] for t, _ in c.points},
    )


@dataclass(frozen=True)
class InvolutionRecord:
    fixed_locus: str
    symplectic: bool
    quotient: str
    singular_points: Optional[int]
    terminal_points: Optional[int]

    def to_json(self) -> dict:
        return dict(self.__dict__)


def involution_classify(kind: str, count: Optional[int] = None) -> InvolutionRecord:
    """Quotient by a small involution, from the shape of its fixed locus.

    ``kind`` is 'empty', 'isolated' (with ``count``) or 'curve'.
    """
    if kind == 'empty':
        return InvolutionRecord('empty', True, 'smooth Calabi-Yau', 0, 0)
    if kind == 'curve':
        return InvolutionRecord('curve', True, 'singular Calabi-Yau, singular locus of pure dimension 1',
                                None, None)
    if kind == 'isolated':
        if count is None or count < 1:
            raise ValueError('isolated fixed locus needs a positive point count')
        sols = solve_configs(2, 1, max(count, 16))
        allowed = sorted({c.size for c in sols})
        if count not in allowed:
            raise InconsistentConfig(
                f'an involution with {count} isolated fixed points violates the Lefschetz identity '
                f'(allowed counts: {allowed})')
        return InvolutionRecord('isolated', False, 'terminal', count, count)
    raise ValueError(f'unknown fixed-locus kind {kind!r}')
