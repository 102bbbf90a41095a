"""Gaussian binomials, q-multinomials and q-supernomials."""

import math

import pytest
from hypothesis import given, strategies as st

from agpaths.coefficients import (
    classical_multinomial,
    gaussian_binomial,
    q_multinomial,
    q_supernomial,
    signed_gaussian_binomial,
)
from agpaths.series import LaurentPoly, ONE, ZERO, q_power


def test_gaussian_binomial_values():
    assert gaussian_binomial(4, 2) == LaurentPoly({0: 1, 1: 1, 2: 2, 3: 1, 4: 1})
    assert gaussian_binomial(5, 0) == ONE
    assert gaussian_binomial(3, 5) == ZERO
    assert gaussian_binomial(3, -1) == ZERO


@given(st.integers(min_value=0, max_value=10), st.integers(min_value=0, max_value=10))
def test_gaussian_binomial_counts_at_one(n, k):
    assert gaussian_binomial(n, k).eval_at_one() == (math.comb(n, k) if k <= n else 0)


@given(st.integers(min_value=0, max_value=9), st.integers(min_value=0, max_value=9))
def test_gaussian_binomial_symmetry_and_pascal(n, k):
    assert gaussian_binomial(n, k) == gaussian_binomial(n, n - k)
    if n >= 1 and 0 <= k:
        want = gaussian_binomial(n - 1, k - 1) + gaussian_binomial(n - 1, k).shift(k)
        assert gaussian_binomial(n, k) == want


@given(st.integers(min_value=-8, max_value=-1), st.integers(min_value=0, max_value=6))
def test_signed_binomial_matches_the_defining_product(n, k):
    # [n; k] = prod_{i=0}^{k-1} (1 - q^{n-i}) / prod_{i=1}^{k} (1 - q^i),
    # evaluated as a Laurent polynomial for negative upper index.
    num = ONE
    for i in range(k):
        num = num * (ONE - q_power(n - i))
    den = ONE
    for i in range(1, k + 1):
        den = den * (ONE - q_power(i))
    assert signed_gaussian_binomial(n, k) * den == num


def test_signed_binomial_agrees_on_non_negative_input():
    for n in range(0, 7):
        for k in range(-1, 8):
            assert signed_gaussian_binomial(n, k) == gaussian_binomial(n, k)


def test_multinomial_counts_at_one():
    for nu in range(1, 4):
        for L in range(0, 6):
            for a in range(0, nu * L + 1):
                got = q_multinomial(L, a, nu, 0).eval_at_one()
                assert got == classical_multinomial(L, a, nu)


def test_multinomial_row_sum_is_a_power():
    # summing the superscript-0 family over a recovers (1 + ... + 1)^L.
    for nu in range(1, 4):
        for L in range(0, 6):
            total = sum(
                q_multinomial(L, a, nu, 0).eval_at_one() for a in range(nu * L + 1)
            )
            assert total == (nu + 1) ** L


def test_multinomial_reduces_to_binomial_for_nu_one():
    for L in range(0, 8):
        for a in range(0, L + 1):
            assert q_multinomial(L, a, 1, 0) == gaussian_binomial(L, a)


def test_supernomial_single_component_reductions():
    for L in range(0, 7):
        for two_a in range(-L, L + 1):
            if (two_a + L) % 2 == 0:
                assert q_supernomial((L,), two_a) == gaussian_binomial(
                    L, (two_a + L) // 2
                )
    for nu in (2, 3):
        for L in range(0, 6):
            for two_a in range(-nu * L, nu * L + 1):
                if (two_a + nu * L) % 2 == 0:
                    last = (0,) * (nu - 1) + (L,)
                    assert q_supernomial(last, two_a) == q_multinomial(
                        L, (two_a + nu * L) // 2, nu, 0
                    )


def test_supernomial_vanishes_on_half_integral_lower_index():
    assert q_supernomial((1, 1), 0) == ZERO  # 3/2 is not an integer offset
    assert not q_supernomial((1, 1), 1).is_zero()


def test_supernomial_with_negative_component_is_laurent():
    assert q_supernomial((-1, 1), -1) == LaurentPoly({0: 1})
    assert q_supernomial((-1, 1), 3) == LaurentPoly({-1: 1})
    assert q_supernomial((-1, 1), 5) == LaurentPoly({-3: -1})
    # spot check against the signed binomial expansion at nu = 1
    for L in range(-4, 0):
        for two_a in range(-6, 7):
            if (two_a + L) % 2 == 0:
                assert q_supernomial((L,), two_a) == signed_gaussian_binomial(
                    L, (two_a + L) // 2
                )
