"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored in the power basis 1, z, ..., z^(phi(n)-1) modulo the
n-th cyclotomic polynomial, with :class:`fractions.Fraction` coefficients.
The representation is a normal form, so equality is coefficient equality.

Values of different orders never mix implicitly; use :func:`cyc_lift` to
move an element of Q(zeta_n) into Q(zeta_nm) first.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Union

__all__ = [
    'CyclotomicNumber',
    'CyclotomicPolynomial',
    'OrderMismatchError',
    'cyclotomic_polynomial',
    'cyc_root',
    'cyc_const',
    'cyc_zero',
    'cyc_one',
    'cyc_add',
    'cyc_sub',
    'cyc_mul',
    'cyc_neg',
    'cyc_inv',
    'cyc_galois',
    'cyc_conj',
    'cyc_lift',
    'cyc_is_rational',
    'cyc_eq',
    'cyc_embed_float',
    'euler_phi',
]

Rational = Union[int, Fraction]


class OrderMismatchError(ValueError):
    """Raised when two cyclotomic numbers of different order are combined."""


def euler_phi(n: int) -> int:
    result = n
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            while m % d == 0:
                m //= d
            result -= result // d
        d += 1
    if m > 1:
        result -= result // m
    return result


# -- integer polynomial helpers (coefficient lists, lowest degree first) --

def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den must be monic
    num = list(num)
    dn = len(den) - 1
    if len(num) - 1 < dn:
        return [0], num
    quot = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            quot[i - dn] = c
            for j in range(dn + 1):
                num[i - dn + j] -= c * den[j]
    rem = num[:dn] or [0]
    return quot, rem


class CyclotomicPolynomial:
    """The n-th cyclotomic polynomial with integer coefficients (low degree first)."""

    __slots__ = ('order', 'coeffs')

    def __init__(self, order: int, coeffs: Sequence[int]):
        self.order = order
        self.coeffs = tuple(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other):
        if not isinstance(other, CyclotomicPolynomial):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f'CyclotomicPolynomial({self.order}, {list(self.coeffs)})'

    def __str__(self):
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = '' if k == 0 else ('x' if k == 1 else f'x^{k}')
            if mono and abs(c) == 1:
                coef = '-' if c < 0 else '+'
                terms.append(f'{coef} {mono}')
            else:
                sign = '-' if c < 0 else '+'
                terms.append(f'{sign} {abs(c)}{mono}')
        s = ' '.join(terms)
        return s[2:] if s.startswith('+ ') else '-' + s[2:]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> CyclotomicPolynomial:
    """Return Phi_n, computed as (x^n - 1) divided by Phi_d for every proper divisor d."""
    if n < 1:
        raise ValueError(f'cyclotomic order must be positive, got {n}')
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod_int(num, list(cyclotomic_polynomial(d).coeffs))
            assert not any(rem), 'cyclotomic division left a remainder'
    return CyclotomicPolynomial(n, num)


def _reduce(coeffs: Sequence[Rational], n: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(n).coeffs
    deg = len(phi) - 1
    work = [Fraction(c) for c in coeffs]
    for i in range(len(work) - 1, deg - 1, -1):
        c = work[i]
        if c:
            for j in range(deg + 1):
                work[i - deg + j] -= c * phi[j]
    work = work[:deg]
    work.extend([Fraction(0)] * (deg - len(work)))
    return tuple(work)


class CyclotomicNumber:
    """An element of Q(zeta_n) in reduced power-basis form.

    Instances are immutable. Arithmetic operators are available alongside
    the ``cyc_*`` functions; integers and fractions are accepted as the
    other operand and are read as elements of the same field.
    """

    __slots__ = ('_n', '_coeffs')

    def __init__(self, n: int, coeffs: Iterable[Rational] = ()):
        if n < 1:
            raise ValueError(f'cyclotomic order must be positive, got {n}')
        object.__setattr__(self, '_n', n)
        object.__setattr__(self, '_coeffs', _reduce(list(coeffs), n))

    def __setattr__(self, name, value):
        raise AttributeError('CyclotomicNumber is immutable')

    @classmethod
    def _raw(cls, n: int, coeffs: tuple[Fraction, ...]) -> 'CyclotomicNumber':
        obj = object.__new__(cls)
        object.__setattr__(obj, '_n', n)
        object.__setattr__(obj, '_coeffs', coeffs)
        return obj

    @property
    def order(self) -> int:
        return self._n

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def _coerce(self, other) -> 'CyclotomicNumber':
        if isinstance(other, CyclotomicNumber):
            if other._n != self._n:
                raise OrderMismatchError(
                    f'cannot combine elements of Q(zeta_{self._n}) and Q(zeta_{other._n}); lift explicitly')
            return other
        if isinstance(other, (int, Fraction)):
            return cyc_const(self._n, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CyclotomicNumber._raw(self._n, tuple(a + b for a, b in zip(self._coeffs, o._coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber._raw(self._n, tuple(-a for a in self._coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CyclotomicNumber._raw(self._n, tuple(a - b for a, b in zip(self._coeffs, o._coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self._coeffs, o._coeffs
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CyclotomicNumber._raw(self._n, _reduce(prod, self._n))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * cyc_inv(o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * cyc_inv(self)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else cyc_inv(self)
        result = cyc_one(self._n)
        k = abs(k)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, CyclotomicNumber):
            return self._n == other._n and self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == cyc_const(self._n, other)._coeffs
        return NotImplemented

    def __hash__(self):
        r = cyc_is_rational(self)
        if r is not None:
            return hash(r)
        return hash((self._n, self._coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f'CyclotomicNumber({self._n}, {[str(c) for c in self._coeffs]})'

    def __str__(self):
        terms = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mono = '' if k == 0 else ('z' if k == 1 else f'z^{k}')
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append('-' + mono)
            else:
                terms.append(f'{c}{"*" + mono if mono else ""}')
        body = ' + '.join(terms).replace('+ -', '- ') if terms else '0'
        return f'{body} (z = zeta_{self._n})'

    def to_json(self) -> dict:
        return {'order': self._n,
                'coeffs': [[c.numerator, c.denominator] for c in self._coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> 'CyclotomicNumber':
        return cls(int(data['order']), [Fraction(int(a), int(b)) for a, b in data['coeffs']])


def cyc_const(n: int, value: Rational) -> CyclotomicNumber:
    deg = euler_phi(n)
    return CyclotomicNumber._raw(n, (Fraction(value),) + (Fraction(0),) * (deg - 1))


def cyc_zero(n: int) -> CyclotomicNumber:
    return cyc_const(n, 0)


def cyc_one(n: int) -> CyclotomicNumber:
    return cyc_const(n, 1)


def cyc_root(n: int, k: int) -> CyclotomicNumber:
    """zeta_n ** k, with k taken modulo n."""
    if n < 1:
        raise ValueError(f'cyclotomic order must be positive, got {n}')
    k %= n
    coeffs = [0] * (k + 1)
    coeffs[k] = 1
    return CyclotomicNumber(n, coeffs)


def cyc_add(a: CyclotomicNumber, b: CyclotomicNumber) -> CyclotomicNumber:
    return a.__add__(a._coerce(b))


def cyc_sub(a: CyclotomicNumber, b: CyclotomicNumber) -> CyclotomicNumber:
    return a.__sub__(a._coerce(b))


def cyc_mul(a: CyclotomicNumber, b: CyclotomicNumber) -> CyclotomicNumber:
    return a.__mul__(a._coerce(b))


def cyc_neg(a: CyclotomicNumber) -> CyclotomicNumber:
    return -a


# -- inversion over Q[x] --

def _trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _pdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = _trim(list(a))
    b = _trim(list(b))
    db = len(b) - 1
    lead = b[-1]
    if len(a) - 1 < db:
        return [Fraction(0)], a
    q = [Fraction(0)] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] / lead
        q[i - db] = c
        if c:
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    return q, _trim(a[:db] or [Fraction(0)])


def _pmul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _psub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    m = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (m - len(a))
    b = list(b) + [Fraction(0)] * (m - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def cyc_inv(a: CyclotomicNumber) -> CyclotomicNumber:
    """Multiplicative inverse via the extended Euclidean algorithm against Phi_n."""
    if a.is_zero():
        raise ZeroDivisionError('inverse of zero in a cyclotomic field')
    n = a.order
    # invariant: s_i * a == r_i  (mod Phi_n)
    r0 = [Fraction(c) for c in cyclotomic_polynomial(n).coeffs]
    r1 = _trim(list(a.coeffs))
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while not (len(r1) == 1 and r1[0] == 0):
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1))
    # Phi_n is irreducible, so the gcd r0 is a nonzero constant
    assert len(r0) == 1 and r0[0] != 0
    return CyclotomicNumber(n, [c / r0[0] for c in s0])


def cyc_galois(a: CyclotomicNumber, k: int) -> CyclotomicNumber:
    """Apply the automorphism zeta -> zeta**k; k must be a unit mod n."""
    n = a.order
    if math.gcd(k, n) != 1:
        raise ValueError(f'Galois exponent {k} is not coprime to {n}')
    out = [Fraction(0)] * n
    for i, c in enumerate(a.coeffs):
        if c:
            out[(i * k) % n] += c
    return CyclotomicNumber(n, out)


def cyc_conj(a: CyclotomicNumber) -> CyclotomicNumber:
    """Complex conjugation."""
    return cyc_galois(a, a.order - 1) if a.order > 1 else a


def cyc_lift(a: CyclotomicNumber, m: int) -> CyclotomicNumber:
    """Embed Q(zeta_n) into Q(zeta_nm) by zeta_n -> zeta_nm ** m."""
    if m < 1:
        raise ValueError(f'lift factor must be positive, got {m}')
    out = [Fraction(0)] * (a.order * m)
    for i, c in enumerate(a.coeffs):
        out[i * m] = c
    return CyclotomicNumber(a.order * m, out)


def cyc_is_rational(a: CyclotomicNumber) -> Optional[Fraction]:
    if any(a.coeffs[1:]):
        return None
    return a.coeffs[0]


def cyc_eq(a: CyclotomicNumber, b: CyclotomicNumber) -> bool:
    if a.order != b.order:
        raise OrderMismatchError(f'cannot compare Q(zeta_{a.order}) with Q(zeta_{b.order})')
    return a.coeffs == b.coeffs


def cyc_embed_float(a: CyclotomicNumber) -> complex:
    """Floating-point value under zeta_n = exp(2 pi i / n). Display only."""
    z = cmath.exp(2j * cmath.pi / a.order)
    return sum((float(c) * z ** k for k, c in enumerate(a.coeffs)), 0j)
