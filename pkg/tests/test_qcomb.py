import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from qsphere.exactq import ONE, Q, ZERO, RatQ
from qsphere.qcomb import shifted_binomial_row, x_binomial, x_shifted_binomial

X = Q  # a generic indeterminate; q itself serves
Q2 = RatQ.q_power(2)


def literal_binomial(n, k, x):
    """(x-1)...(x^n-1) / ((x-1)...(x^k-1) (x-1)...(x^(n-k)-1)), computed verbatim."""
    def fac(j):
        out = ONE
        for i in range(1, j + 1):
            out = out * (x ** i - ONE)
        return out
    return fac(n) / (fac(k) * fac(n - k))


def brute_product(nu, x0):
    """Coefficients of prod_{j<nu} (1 + x0^j t) by plain list convolution over Fractions."""
    coeffs = [Fraction(1)]
    for j in range(nu):
        a = Fraction(x0) ** j
        coeffs = [(coeffs[i] if i < len(coeffs) else 0) + (a * coeffs[i - 1] if i >= 1 else 0) for i in range(len(coeffs) + 1)]
    return coeffs


def test_binomial_examples():
    for n in range(6):
        assert x_binomial(n, 0, Q2) == ONE
    assert x_binomial(2, 1, Q2) == ONE + Q2
    assert x_binomial(2, 1, Q2) == (RatQ.q_power(4) - 1) / (Q2 - 1)
    assert x_binomial(3, 1, X) == ONE + X + X * X
    assert x_binomial(3, 4, X) == ZERO
    assert x_binomial(3, -1, X) == ZERO


def test_shifted_examples():
    for nu in range(6):
        assert x_shifted_binomial(nu, 0, X) == ONE
    assert x_shifted_binomial(2, 1, X) == ONE + X
    assert x_shifted_binomial(2, 2, X) == X
    assert x_shifted_binomial(2, 3, X) == ZERO


@pytest.mark.parametrize("n", range(0, 9))
def test_binomial_matches_literal_formula(n):
    for k in range(n + 1):
        assert x_binomial(n, k, X) == literal_binomial(n, k, X)


@pytest.mark.parametrize("n", range(1, 9))
def test_q_pascal(n):
    x = Q2
    for k in range(1, n):
        b = x_binomial
        assert b(n, k, x) == b(n - 1, k - 1, x) + x ** k * b(n - 1, k, x)
        assert b(n, k, x) == x ** (n - k) * b(n - 1, k - 1, x) + b(n - 1, k, x)


@pytest.mark.parametrize("n", range(0, 9))
def test_symmetry(n):
    for k in range(n + 1):
        assert x_binomial(n, k, X) == x_binomial(n, n - k, X)


@pytest.mark.parametrize("nu", range(0, 9))
def test_generating_function(nu):
    """sum_l [nu l]_x t^l = prod (1 + x^j t), compared as polynomials in t over Q(q)."""
    prod = [ONE]
    for j in range(nu):
        factor = [ONE, X ** j]
        out = [ZERO] * (len(prod) + 1)
        for i, c in enumerate(prod):
            out[i] = out[i] + c * factor[0]
            out[i + 1] = out[i + 1] + c * factor[1]
        prod = out
    assert [x_shifted_binomial(nu, l, X) for l in range(nu + 1)] == prod


@settings(max_examples=60)
@given(st.integers(0, 8), st.fractions(min_value=-3, max_value=3, max_denominator=5).filter(lambda v: v not in (0, 1, -1)))
def test_shifted_specialisation(nu, x0):
    # x is q, q^2 or q^-2; evaluate the symbolic row at q = x0 and compare with brute force at x(x0)
    for x in (X, RatQ.q_power(2), RatQ.q_power(-2)):
        row = shifted_binomial_row(nu, x)
        assert [v.eval(x0) for v in row] == brute_product(nu, x.eval(x0))


def test_cache_consistent():
    assert x_binomial(7, 3, Q2) is x_binomial(7, 3, Q2)
    x_binomial.cache_clear()
    assert x_binomial(7, 3, Q2) == literal_binomial(7, 3, Q2)
