from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from modvoa.scalars import (FpScalar, Prime, appendix_first, appendix_second, binom_mod,
                            fp_binomial, int_binomial, lucas_binomial, verify_appendix_identities,
                            verify_lucas_congruences)

PRIMES = st.sampled_from([3, 5, 7, 11])


def falling_binomial(m, k):
    """Independent oracle: m(m-1)...(m-k+1)/k! with rational arithmetic."""
    num = Fraction(1)
    for i in range(k):
        num *= m - i
    return int(num / factorial(k))


def test_prime_rejects_bad_characteristics():
    for bad in (0, 1, 2, 4, 9, 15):
        with pytest.raises(ValueError):
            Prime(bad)
    assert Prime(7) == 7 and Prime(7).half == 4


def test_fp_scalar_field_operations():
    a, b = FpScalar(3, 7), FpScalar(5, 7)
    assert a + b == 1 and a * b == 1 and a - b == 5
    assert (a / b) * b == a
    assert a ** -1 * a == 1
    with pytest.raises(ZeroDivisionError):
        FpScalar(0, 7).inverse()
    with pytest.raises(ValueError):
        FpScalar(1, 5) + FpScalar(1, 7)
    with pytest.raises(AttributeError):
        a.value = 2


@pytest.mark.parametrize("m,k,p,expected", [(-2, 3, 3, 2), (7, 2, 5, 1), (5, 7, 3, 0), (-1, 4, 5, 1)])
def test_binomial_examples(m, k, p, expected):
    assert fp_binomial(m, k, p) == expected


@given(st.integers(-30, 30), st.integers(0, 12))
def test_signed_binomial_matches_falling_factorial(m, k):
    assert int_binomial(m, k) == falling_binomial(m, k)


@given(st.integers(-30, 30), st.integers(1, 12), PRIMES)
def test_pascal_rule(m, k, p):
    assert binom_mod(m, k, p) == (binom_mod(m - 1, k, p) + binom_mod(m - 1, k - 1, p)) % p


@given(st.integers(-15, 15), st.integers(-15, 15), st.integers(0, 10))
def test_vandermonde(m, n, k):
    assert int_binomial(m + n, k) == sum(int_binomial(m, i) * int_binomial(n, k - i) for i in range(k + 1))


@given(st.integers(0, 400), st.integers(0, 400), PRIMES)
def test_lucas_agrees_with_exact_binomial(m, k, p):
    assert lucas_binomial(m, k, p).value == int_binomial(m, k) % p


def test_lucas_rejects_negative():
    with pytest.raises(ValueError):
        lucas_binomial(-1, 2, 3)


def test_appendix_sides_match_integer_sums():
    # both sides agree over Z, not just mod p
    for m in range(-6, 7):
        for n in range(-6, 7):
            for k in range(0, 7):
                lhs, rhs = appendix_first(m, n, k, 10 ** 9 + 7)
                assert lhs == rhs
                lhs, rhs = appendix_second(m, n, k, 10 ** 9 + 7)
                assert lhs == rhs


def test_report_lucas_and_appendix(prime):
    assert verify_lucas_congruences(prime, 10, 10).ok
    assert verify_appendix_identities(prime, range(-4, 5), range(-4, 5), range(0, 5)).ok
