"""Gordon frequency paths: enumeration, recurrence, particles and orbits."""

import pytest

from agpaths.bressoud import iter_contents, partial_sums
from agpaths.gordon import (
    GordonSequence,
    content_poly,
    enumerate_gordon,
    f_from_w,
    f_poly,
    g_from_w,
    g_poly,
    minimal_path,
    orbit_generate,
    orbits_by_content,
    w_poly,
    weighted_gordon_count,
)
from agpaths.series import ONE, ZERO


def test_worked_example_weight():
    seq = GordonSequence(-2, 3, (1, 2, 3, 1, 4, 3))
    assert seq.is_valid(7)
    assert seq.weight() == 7


def test_validity_uses_adjacent_height_sums():
    assert GordonSequence(0, 2, (1, 2, 1)).is_valid(3)
    assert not GordonSequence(0, 2, (1, 2, 1)).is_valid(2)


def test_translate_and_reflect_preserve_heights():
    seq = GordonSequence(0, 3, (1, 0, 2, 1))
    assert seq.translate(2).f == seq.f
    assert seq.reflect().f == (1, 2, 0, 1)
    assert seq.reflect().M == -3 and seq.reflect().L == 0


def test_enumeration_matches_recurrence():
    for nu in range(1, 3):
        for L in range(0, 7):
            for s in range(0, nu + 1):
                for b in range(0, nu + 1):
                    enum = weighted_gordon_count(enumerate_gordon(0, L, s, b, nu))
                    assert enum == g_poly(nu, L, s, b), (nu, L, s, b)


def test_empty_window_is_a_delta():
    for nu in range(1, 4):
        for s in range(0, nu + 1):
            for b in range(0, nu + 1):
                assert g_poly(nu, 0, s, b) == (ONE if s == b else ZERO)


def test_g_matches_its_w_expression():
    for nu in range(1, 3):
        for L in range(0, 7):
            for s in range(0, nu + 1):
                for b in range(0, nu + 1):
                    assert g_poly(nu, L, nu - s, b) == g_from_w(nu, s, b, L)


def test_g_matches_the_multisum_family():
    for nu in range(1, 3):
        for L in range(2, 7):
            for s in range(0, nu + 1):
                for b in range(0, nu + 1):
                    assert g_poly(nu, L, s, b) == f_poly(nu, nu - s, nu - b, L)


def test_f_matches_its_w_expression():
    for nu in range(1, 3):
        for L in range(2, 7):
            for s in range(0, nu + 1):
                for b in range(0, nu + 1):
                    assert f_poly(nu, s, b, L) == f_from_w(nu, s, b, L)


def test_minimal_path_weight_is_the_content_valuation():
    # the lowest exponent of the per-content product is the minimal weight.
    nu, L = 2, 6
    for s in range(0, nu + 1):
        for b in range(0, nu + 1):
            for n in iter_contents(nu, L):
                mp = minimal_path(0, L, s, b, nu, n)
                poly = content_poly(nu, nu - s, nu - b, L, n)
                if mp is None:
                    assert poly == ZERO, (s, b, n)
                else:
                    assert mp.sequence.weight() == poly.min_exp(), (s, b, n)


def test_orbits_partition_the_path_space():
    for nu in range(1, 3):
        for L in range(2, 7):
            for s in range(0, nu + 1):
                for b in range(0, nu + 1):
                    orbits = orbits_by_content(0, L, s, b, nu)
                    seen = set()
                    for n, orbit in orbits.items():
                        assert not (seen & orbit), (nu, L, s, b, n)
                        seen |= orbit
                    assert seen == set(enumerate_gordon(0, L, s, b, nu))


def test_orbit_counts_match_the_product_formula():
    for nu in range(1, 3):
        for L in range(2, 7):
            for s in range(0, nu + 1):
                for b in range(0, nu + 1):
                    for n, orbit in orbits_by_content(0, L, s, b, nu).items():
                        want = content_poly(nu, nu - s, nu - b, L, n)
                        assert weighted_gordon_count(orbit) == want, (nu, L, s, b, n)


def test_interior_height_sum_is_an_orbit_invariant():
    nu, L = 2, 6
    for s in range(0, nu + 1):
        for b in range(0, nu + 1):
            for n, orbit in orbits_by_content(0, L, s, b, nu).items():
                height = sum(partial_sums(n))
                for member in orbit:
                    assert member.interior_height_sum() == height, (s, b, n)


def test_w_family_vanishes_on_half_integral_indices():
    # every term of the alternating sum has a half-integral lower index here.
    assert w_poly(1, 1, 0, 2) == ZERO
    assert not w_poly(1, 1, 0, 1).is_zero()


def test_boundary_validation():
    with pytest.raises(ValueError):
        enumerate_gordon(0, 3, 4, 0, 2)
    with pytest.raises(ValueError):
        g_poly(2, 3, 0, 3)
