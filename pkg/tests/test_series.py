"""Ring axioms and series arithmetic for the exact polynomial core."""

import pytest
from hypothesis import given, settings, strategies as st

from agpaths.series import (
    LaurentPoly,
    TruncatedSeries,
    ONE,
    ZERO,
    equal_to_order,
    format_poly,
    q_power,
)

polys = st.dictionaries(
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=-9, max_value=9),
    max_size=6,
).map(LaurentPoly)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a - a == ZERO


@given(polys, polys)
def test_inverse_q_is_a_ring_homomorphism(a, b):
    assert (a * b).substitute_inverse_q() == a.substitute_inverse_q() * b.substitute_inverse_q()
    assert (a + b).substitute_inverse_q() == a.substitute_inverse_q() + b.substitute_inverse_q()
    assert a.substitute_inverse_q().substitute_inverse_q() == a


@given(polys, st.integers(min_value=-5, max_value=5))
def test_shift_multiplies_by_a_power(a, k):
    assert a.shift(k) == a * q_power(k)


def test_divexact_recovers_factors():
    a = LaurentPoly({0: 1, 1: 2, 3: -1})
    b = LaurentPoly({-2: 3, 0: 1})
    assert (a * b).divexact(b) == a
    with pytest.raises(ValueError):
        LaurentPoly({0: 1, 1: 1}).divexact(LaurentPoly({0: 2}))


def test_format_poly_rendering():
    p = LaurentPoly({-2: 1, 0: -3, 1: 1, 4: 2})
    assert format_poly(p) == "q^-2 - 3 + q + 2q^4"
    assert format_poly(ZERO) == "0"


@given(polys, polys, st.integers(min_value=0, max_value=12))
def test_truncated_series_matches_polynomial_product(a, b, order):
    if a.is_zero() or a.min_exp() < 0 or b.is_zero() or b.min_exp() < 0:
        return
    sa = TruncatedSeries.from_laurent(a, order)
    sb = TruncatedSeries.from_laurent(b, order)
    assert (sa * sb) == TruncatedSeries.from_laurent(a * b, order)
    assert sa.mul_poly(b) == TruncatedSeries.from_laurent(a * b, order)


@given(polys, st.integers(min_value=0, max_value=12))
def test_invert_is_two_sided(a, order):
    if a.coeff(0) not in (1, -1) or (not a.is_zero() and a.min_exp() < 0):
        return
    s = TruncatedSeries.from_laurent(a, order)
    inv = s.invert()
    assert s * inv == TruncatedSeries.one(order).truncate(order)
    assert inv * s == TruncatedSeries.one(order)


def test_truncate_drops_high_order_terms():
    s = TruncatedSeries([1, 2, 3, 4], 3)
    t = s.truncate(1)
    assert t.order == 1 and list(t.coeffs) == [1, 2]
    assert equal_to_order(s, TruncatedSeries([1, 2, 3, 5], 3), 2) == (True, None)
    assert equal_to_order(s, TruncatedSeries([1, 2, 3, 5], 3), 3) == (False, 3)
