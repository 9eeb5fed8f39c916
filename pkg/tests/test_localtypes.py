import itertools
import json
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyfix.exactnum import cyc_one
from cyfix.localtypes import (
    ORDER5_TERMINAL,
    ORDER5_NONTERMINAL,
    LocalType,
    NonIsolatedError,
    age,
    classify,
    determinant,
    enumerate_isolated_types,
    is_canonical,
    is_gorenstein,
    is_isolated,
    is_quasi_reflection,
    is_terminal,
    is_terminal_by_age,
    make_type,
    partition_order5,
    s_of,
)

PRIMES = [2, 3, 5, 7, 11, 13]


def T(p, *exps):
    return make_type(p, exps)


def test_make_type_canonicalizes():
    assert T(3, 2, 1, 1).exps == (2, 1, 1)
    assert T(3, 1, 2, 1) == T(3, 2, 1, 1)
    with pytest.raises(ValueError, match='prime'):
        T(4, 1, 1, 1)
    with pytest.raises(ValueError):
        T(5, 5, 1, 1)
    with pytest.raises(ValueError):
        T(5, 1, 1)


def test_s_of():
    assert s_of(T(5, 4, 1, 1)) == 1
    assert s_of(T(2, 1, 1, 1)) == 1
    assert s_of(T(3, 1, 1, 1)) == 0


def test_age_examples():
    assert age(T(3, 1, 1, 2), 1) == Fraction(4, 3)
    assert age(T(3, 1, 1, 1), 2) == 2
    assert age(T(5, 2, 2, 2), 3) == Fraction(3, 5)
    with pytest.raises(ValueError):
        age(T(5, 2, 2, 2), 5)


def test_quasi_reflection_and_gorenstein():
    assert is_quasi_reflection(T(3, 1, 0, 0))
    assert not is_quasi_reflection(T(3, 1, 1, 2))
    assert not is_quasi_reflection(T(2, 0, 0, 0))
    assert is_gorenstein(T(3, 1, 1, 1))
    assert not is_gorenstein(T(5, 4, 1, 1))
    assert is_gorenstein(T(2, 1, 1, 0))


def test_terminal_examples():
    assert is_terminal(T(2, 1, 1, 1))
    assert is_terminal(T(3, 1, 1, 2))
    assert not is_terminal(T(5, 2, 2, 2))
    assert is_terminal_by_age(T(2, 1, 1, 1))
    assert is_terminal_by_age(T(5, 4, 1, 1))
    assert not is_terminal_by_age(T(5, 1, 1, 1))


def test_canonical_examples():
    assert is_canonical(T(3, 1, 1, 1))
    assert not is_canonical(T(5, 2, 2, 2))
    assert is_canonical(T(2, 1, 1, 1))


def test_non_isolated_inputs_are_rejected_loudly():
    for f in (is_terminal, is_terminal_by_age, is_canonical):
        with pytest.raises(NonIsolatedError):
            f(T(3, 1, 0, 0))


def test_classify_examples():
    c = classify(T(3, 1, 1, 2))
    assert (c.is_isolated, c.is_quasi_reflection, c.is_gorenstein, c.is_canonical, c.is_terminal, c.s) == \
        (True, False, False, True, True, 1)
    c = classify(T(3, 1, 1, 1))
    assert (c.is_isolated, c.is_gorenstein, c.is_canonical, c.is_terminal, c.s) == (True, True, True, False, 0)
    c = classify(T(3, 1, 0, 0))
    assert not c.is_isolated and c.is_quasi_reflection
    assert c.is_terminal is None and c.is_canonical is None
    d = json.loads(json.dumps(classify(T(5, 2, 2, 2)).to_json()))
    assert d['ages']['3'] == [3, 5] and d['is_terminal'] is False


def test_enumeration_small():
    assert enumerate_isolated_types(2) == [T(2, 1, 1, 1)]
    assert sorted(t.exps for t in enumerate_isolated_types(3)) == [(1, 1, 1), (2, 1, 1), (2, 2, 1), (2, 2, 2)]
    assert len(enumerate_isolated_types(5)) == 20


@pytest.mark.parametrize('p', PRIMES)
def test_enumeration_count_and_oracle(p):
    types = enumerate_isolated_types(p)
    assert len(types) == comb(p + 1, 3) == len(set(types))
    oracle = {tuple(sorted(e, reverse=True)) for e in itertools.product(range(1, p), repeat=3)}
    assert {t.exps for t in types} == oracle


def test_partition_order5():
    a, b, sym = partition_order5()
    assert sorted(t.exps for t in a) == sorted(ORDER5_TERMINAL)
    assert sorted(t.exps for t in b) == sorted(ORDER5_NONTERMINAL)
    assert sorted(t.exps for t in sym) == sorted([(3, 1, 1), (2, 2, 1), (4, 4, 2), (4, 3, 3)])
    assert set(a).isdisjoint(b) and set(a).isdisjoint(sym) and set(b).isdisjoint(sym)
    assert set(a) | set(b) | set(sym) == set(enumerate_isolated_types(5))


def _age_oracle(t, u):
    # age straight from the definition: express each eigenvalue w^a as lambda^b with lambda = w^v
    p = t.p
    v = pow(u, -1, p)
    total = 0
    for a in t.exps:
        b = next(b for b in range(p) if (b * v - a) % p == 0)
        total += b
    return Fraction(total, p)


@pytest.mark.parametrize('p', PRIMES)
def test_predicates_over_all_isolated_types(p):
    for t in enumerate_isolated_types(p):
        assert is_terminal(t) == is_terminal_by_age(t)
        if is_terminal(t):
            assert is_canonical(t)
        assert is_gorenstein(t) == (determinant(t) == cyc_one(p))
        for u in range(1, p):
            assert age(t, u) == _age_oracle(t, u)


isolated_types = st.sampled_from(PRIMES).flatmap(
    lambda p: st.tuples(st.just(p), st.lists(st.integers(1, p - 1), min_size=3, max_size=3),
                        st.integers(1, p - 1)))


@settings(max_examples=200, deadline=None)
@given(isolated_types)
def test_power_invariance(data):
    p, exps, m = data
    t = make_type(p, exps)
    tm = t.scaled(m)
    assert is_terminal(tm) == is_terminal(t)
    assert is_canonical(tm) == is_canonical(t)
    assert is_gorenstein(tm) == is_gorenstein(t)


@settings(max_examples=100, deadline=None)
@given(isolated_types)
def test_json_roundtrip(data):
    p, exps, _ = data
    t = make_type(p, exps)
    assert LocalType.from_json(json.loads(json.dumps(t.to_json()))) == t
