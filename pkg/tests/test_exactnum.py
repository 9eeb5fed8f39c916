import cmath
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyfix.exactnum import (
    CyclotomicNumber,
    OrderMismatchError,
    cyc_add,
    cyc_conj,
    cyc_const,
    cyc_embed_float,
    cyc_eq,
    cyc_galois,
    cyc_inv,
    cyc_is_rational,
    cyc_lift,
    cyc_mul,
    cyc_one,
    cyc_root,
    cyc_sub,
    cyc_zero,
    cyclotomic_polynomial,
    euler_phi,
)

PRIMES = [2, 3, 5, 7, 11, 13]


def z(n, k=1):
    return cyc_root(n, k)


# -- cyclotomic polynomials --

def test_phi_small_cases():
    assert cyclotomic_polynomial(1).coeffs == (-1, 1)
    assert cyclotomic_polynomial(5).coeffs == (1, 1, 1, 1, 1)
    assert cyclotomic_polynomial(6).coeffs == (1, -1, 1)


def _pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


@pytest.mark.parametrize('n', range(1, 31))
def test_phi_product_over_divisors_is_x_n_minus_1(n):
    # independent oracle: x^n - 1 = prod_{d | n} Phi_d
    prod = [1]
    for d in range(1, n + 1):
        if n % d == 0:
            prod = _pmul(prod, list(cyclotomic_polynomial(d).coeffs))
    assert prod == [-1] + [0] * (n - 1) + [1]
    assert cyclotomic_polynomial(n).degree == euler_phi(n)


@pytest.mark.parametrize('p', PRIMES)
def test_phi_prime(p):
    assert cyclotomic_polynomial(p).coeffs == tuple([1] * p)


def test_phi_rejects_nonpositive():
    with pytest.raises(ValueError):
        cyclotomic_polynomial(0)


# -- roots and field operations --

def test_root_examples():
    assert z(2) == cyc_const(2, -1)
    assert z(3, 3) == cyc_one(3)
    assert z(3, 2) == CyclotomicNumber(3, [-1, -1])
    assert z(5, -1) == z(5, 4)


def test_product_examples():
    w = z(3)
    assert cyc_mul(1 - w, 1 - z(3, 2)) == cyc_const(3, 3)
    assert cyc_mul(w, z(3, 2)) == cyc_one(3)
    assert (1 - w) ** 3 == CyclotomicNumber(3, [-3, -6])


def test_inverse_examples():
    assert cyc_inv(cyc_const(3, 2)) == cyc_const(3, Fraction(1, 2))
    assert cyc_inv(1 - z(3)) == CyclotomicNumber(3, [Fraction(2, 3), Fraction(1, 3)])
    with pytest.raises(ZeroDivisionError):
        cyc_inv(cyc_zero(3))


def test_order_mismatch_is_an_error():
    with pytest.raises(OrderMismatchError):
        cyc_add(z(3), z(5))
    with pytest.raises(OrderMismatchError):
        cyc_mul(z(3), z(6))


def test_explicit_lift():
    # zeta_3 = zeta_6^2 inside Q(zeta_6)
    assert cyc_lift(z(3), 2) == z(6, 2)
    assert cyc_add(cyc_lift(z(3), 2), z(6)) == z(6, 2) + z(6)


def test_galois_examples():
    a = CyclotomicNumber(3, [1, 2])
    assert cyc_galois(a, 1) == a
    assert cyc_galois(a, 2) == CyclotomicNumber(3, [-1, -2])
    assert cyc_galois(cyc_const(3, 7), 2) == cyc_const(3, 7)
    with pytest.raises(ValueError):
        cyc_galois(z(6), 2)


def test_rationality():
    assert cyc_is_rational(cyc_mul(1 - z(3), 1 - z(3, 2))) == 3
    assert cyc_is_rational(z(5)) is None
    assert cyc_is_rational(z(2)) == -1
    assert cyc_eq(z(4, 2), cyc_const(4, -1))


def test_embedding_examples():
    assert cyc_embed_float(z(3)) == pytest.approx(complex(-0.5, 3 ** 0.5 / 2))
    assert cyc_embed_float(cyc_const(3, -1)) == pytest.approx(-1 + 0j)
    x1 = CyclotomicNumber(3, [1, 2]) / 9
    assert cyc_embed_float(x1) == pytest.approx(complex(0, 3 ** 0.5 / 9))


def test_json_roundtrip():
    a = CyclotomicNumber(5, [Fraction(1, 3), -2, 0, Fraction(7, 4)])
    d = a.to_json()
    assert d == {'order': 5, 'coeffs': [[1, 3], [-2, 1], [0, 1], [7, 4]]}
    assert CyclotomicNumber.from_json(json.loads(json.dumps(d))) == a


# -- invariants --

@pytest.mark.parametrize('p', PRIMES)
def test_inverse_of_one_minus_root_matches_closed_sum(p):
    for a in range(1, p):
        rhs = cyc_zero(p)
        for k in range(1, p):
            rhs = rhs + k * z(p, k * a)
        rhs = rhs * Fraction(-1, p)
        assert cyc_inv(1 - z(p, a)) == rhs


@pytest.mark.parametrize('n', range(2, 25))
def test_roots_sum_to_zero(n):
    total = cyc_zero(n)
    for k in range(n):
        total = total + z(n, k)
    assert total.is_zero()


@pytest.mark.parametrize('n', range(1, 25))
def test_embedding_agrees_with_root(n):
    for k in range(n):
        assert cyc_embed_float(z(n, k)) == pytest.approx(cmath.exp(2j * cmath.pi * k / n))


ORDERS = st.sampled_from([3, 4, 5, 7, 8, 9, 12])
small_q = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def elements(draw, n=None):
    n = n if n is not None else draw(ORDERS)
    coeffs = draw(st.lists(small_q, min_size=euler_phi(n), max_size=euler_phi(n)))
    return CyclotomicNumber(n, coeffs)


@st.composite
def triples(draw):
    n = draw(ORDERS)
    return n, draw(elements(n)), draw(elements(n)), draw(elements(n))


@settings(max_examples=60, deadline=None)
@given(triples())
def test_ring_axioms(t):
    n, a, b, c = t
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert cyc_sub(cyc_add(a, b), b) == a
    if not a.is_zero():
        assert a * cyc_inv(a) == cyc_one(n)
        assert cyc_inv(a) * a == cyc_one(n)


@settings(max_examples=60, deadline=None)
@given(triples(), st.integers(min_value=1, max_value=40), st.integers(min_value=1, max_value=40))
def test_galois_is_a_homomorphism(t, k, k2):
    from math import gcd
    n, a, b, _ = t
    if gcd(k, n) != 1 or gcd(k2, n) != 1:
        return
    g = lambda x, j=k: cyc_galois(x, j)
    assert g(a + b) == g(a) + g(b)
    assert g(a * b) == g(a) * g(b)
    assert cyc_galois(cyc_galois(a, k), k2) == cyc_galois(a, (k * k2) % n)
    assert cyc_embed_float(cyc_conj(a)) == pytest.approx(cyc_embed_float(a).conjugate(), abs=1e-9)


@settings(max_examples=40, deadline=None)
@given(ORDERS, st.lists(small_q, max_size=30))
def test_reduction_is_idempotent(n, coeffs):
    a = CyclotomicNumber(n, coeffs)
    b = CyclotomicNumber(n, coeffs)
    assert a.coeffs == b.coeffs and len(a.coeffs) == euler_phi(n)
    assert CyclotomicNumber(n, a.coeffs) == a
    # the representative agrees numerically with the unreduced polynomial
    direct = sum(complex(c) * cmath.exp(2j * cmath.pi * i / n) for i, c in enumerate(coeffs))
    assert cyc_embed_float(a) == pytest.approx(direct, abs=1e-8)
