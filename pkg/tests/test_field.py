"""Extension field arithmetic: ring axioms, inverses, roots, Frobenius."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from g2gen.errors import DegreeTooLarge, NotADivisor, NotPrime
from g2gen.field import (
    ext_field_create,
    field_sqrt,
    frobenius_power,
    is_in_subfield,
    is_prime,
    relative_trace,
)

F49 = ext_field_create(7, 2)
F81 = ext_field_create(3, 4)

codes49 = st.integers(min_value=0, max_value=F49.order - 1)
codes81 = st.integers(min_value=0, max_value=F81.order - 1)


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}
    for n in range(2, 32):
        assert is_prime(n) == (n in primes)
    assert is_prime(2**61 - 1)
    assert not is_prime(2**61 + 1)


def test_create_rejects_bad_input():
    with pytest.raises(NotPrime):
        ext_field_create(4, 2)
    with pytest.raises(NotPrime):
        ext_field_create(2, 3)
    with pytest.raises(DegreeTooLarge):
        ext_field_create(3, 65)


def test_create_is_cached():
    assert ext_field_create(7, 2) is F49


@given(codes49, codes49, codes49)
def test_ring_axioms(a, b, c):
    x, y, z = F49.from_code(a), F49.from_code(b), F49.from_code(c)
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + F49.zero() == x
    assert x * F49.one() == x
    assert (x - y) + y == x


@given(codes81)
def test_inverse(a):
    x = F81.from_code(a)
    if x.is_zero():
        return
    assert x * x.inverse() == F81.one()
    assert (x / x) == F81.one()


@given(codes49, st.integers(min_value=-6, max_value=6))
def test_pow_matches_repeated_multiplication(a, e):
    x = F49.from_code(a)
    if x.is_zero() and e < 0:
        return
    acc = F49.one()
    for _ in range(abs(e)):
        acc = acc * x
    if e < 0:
        acc = acc.inverse()
    assert x**e == acc


def test_sqrt_total_check():
    for field in (F49, F81):
        squares = 0
        for x in field.elements():
            y = field_sqrt(x)
            if y is not None:
                assert y * y == x
                squares += 1
        # zero plus half of the nonzero elements
        assert squares == 1 + (field.order - 1) // 2


@given(codes81)
def test_frobenius_is_additive_and_fixes_subfield(a):
    x = F81.from_code(a)
    y = F81.gen()
    assert frobenius_power(x + y, 1) == frobenius_power(x, 1) + frobenius_power(y, 1)
    assert frobenius_power(x * y, 1) == frobenius_power(x, 1) * frobenius_power(y, 1)
    assert frobenius_power(x, 4) == x  # full degree acts trivially


@given(codes81)
@settings(max_examples=40)
def test_relative_trace_lands_in_subfield(a):
    x = F81.from_code(a)
    t = relative_trace(x, 2)
    assert is_in_subfield(t, 2)
    t1 = relative_trace(x, 1)
    assert is_in_subfield(t1, 1)


def test_subfield_membership_counts():
    inside = sum(1 for x in F81.elements() if is_in_subfield(x, 2))
    assert inside == 9
    with pytest.raises(NotADivisor):
        is_in_subfield(F81.one(), 3)


def test_random_element_is_uniform_support():
    rng = random.Random(0)
    seen = {F49.random_element(rng).coeffs for _ in range(400)}
    assert len(seen) > 40
