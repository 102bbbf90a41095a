"""Acceptance checks shared by the test suite and the CLI ``selftest`` verb.

Each check is a zero-argument callable returning ``(ok, detail)``; ``run_all``
executes them in order and prints one pass/fail line per check.  Every
comparison is exact integer equality — there are no tolerances anywhere.
"""

from __future__ import annotations

import json
import time

from .bressoud import (
    BressoudPath,
    c_from_b,
    c_poly,
    enumerate_bressoud,
    iter_contents,
    partial_sums,
    refined_bressoud_gf,
    weighted_count,
)
from .coefficients import gaussian_binomial, q_multinomial, q_supernomial
from .gordon import (
    GordonSequence,
    content_poly,
    enumerate_gordon,
    f_poly,
    f_from_w,
    g_from_w,
    g_poly,
    orbits_by_content,
    weighted_gordon_count,
)
from .identities import (
    ag_identity,
    ag_multisum,
    b2_410,
    conjecture_5_7,
    fqk_identity,
    multisum_truncation_bound,
    multisum_window,
    restricted_product_series,
    variant1_finite,
    variant1_series,
    variant2_finite,
    variant2_series,
    warnaar_identity,
)
from .series import LaurentPoly, ZERO, q_power


def _qm(L: int, a: int, nu: int, p: int) -> LaurentPoly:
    """q-multinomial with the vanishing conventions for out-of-range indices."""
    if p < 0 or a < 0 or a > nu * L:
        return ZERO
    return q_multinomial(L, a, nu, p)


def check_multinomial_properties() -> tuple[bool, str]:
    """Symmetries, recurrence, deformed tautologies and special values of the
    q-multinomials, over nu <= 4, L <= 8, all valid a and p."""
    for nu in range(1, 5):
        for L in range(0, 9):
            for a in range(-1, nu * L + 2):
                for p in range(0, nu + 1):
                    v = _qm(L, a, nu, p)
                    # symmetry under a -> nu*L - a, p -> nu - p
                    mirror = _qm(L, nu * L - a, nu, nu - p)
                    if v != mirror.shift((nu - p) * L - a):
                        return False, f"symmetry fails at {nu=} {L=} {a=} {p=}"
                    # recurrence peeling one column
                    if L >= 1:
                        acc = ZERO
                        for m in range(0, nu - p + 1):
                            acc = acc + _qm(L - 1, a - m, nu, m).shift(m * (L - 1))
                        for m in range(nu - p + 1, nu + 1):
                            acc = acc + _qm(L - 1, a - m, nu, m).shift(
                                L * (nu - p) - m
                            )
                        if v != acc:
                            return False, f"recurrence fails at {nu=} {L=} {a=} {p=}"
                    # special values
                    if L == 0 and v != (q_power(0) if a == 0 else ZERO):
                        return False, f"empty-window value fails at {nu=} {a=} {p=}"
                    if (a < 0 or a > nu * L) and not v.is_zero():
                        return False, f"vanishing fails at {nu=} {L=} {a=} {p=}"
                # deformed tautology linking superscripts p and p+1
                for p in range(-1, nu):
                    lhs = _qm(L, a, nu, p) + _qm(L, nu * L - a - p - 1, nu, p + 1).shift(L)
                    rhs = _qm(L, a, nu, p + 1).shift(L) + _qm(
                        L, nu * L - a - p - 1, nu, p
                    )
                    if lhs != rhs:
                        return False, f"tautology fails at {nu=} {L=} {a=} {p=}"
    return True, "nu <= 4, L <= 8, all a, p"


def check_supernomial_specializations() -> tuple[bool, str]:
    """Supernomials with a single nonzero component reduce to a Gaussian
    binomial (first slot) or a superscript-0 q-multinomial (last slot),
    over nu <= 3, L <= 8."""
    for nu in range(1, 4):
        for L in range(0, 9):
            for two_a in range(-nu * L - 2, nu * L + 3):
                first = (L,) + (0,) * (nu - 1)
                v = q_supernomial(first, two_a)
                if (two_a + L) % 2 == 0:
                    want = gaussian_binomial(L, (two_a + L) // 2)
                else:
                    want = ZERO
                if v != want:
                    return False, f"first-slot reduction fails at {nu=} {L=} {two_a=}"
                last = (0,) * (nu - 1) + (L,)
                v = q_supernomial(last, two_a)
                if (two_a + nu * L) % 2 == 0:
                    want = _qm(L, (two_a + nu * L) // 2, nu, 0)
                else:
                    want = ZERO
                if v != want:
                    return False, f"last-slot reduction fails at {nu=} {L=} {two_a=}"
    return True, "nu <= 3, L <= 8, all a"


def check_bressoud_oracle() -> tuple[bool, str]:
    """Enumerated weighted Bressoud path counts equal the recurrence values
    (nu <= 3, L <= 8), and the per-content product formula matches the
    enumeration grouped by particle content (nu <= 2, L <= 8)."""
    for nu in range(1, 4):
        for L in range(0, 9):
            for s in range(0, nu + 1):
                for b in range(0, nu + 1):
                    enum = weighted_count(enumerate_bressoud(0, L, s, b, nu))
                    if enum != c_poly(nu, L, s, b):
                        return False, f"path count fails at {nu=} {L=} {s=} {b=}"
    for nu in range(1, 3):
        for L in range(0, 9):
            for s in range(0, nu + 1):
                paths = enumerate_bressoud(0, L, nu - s, 0, nu)
                by_content: dict[tuple[int, ...], dict[int, int]] = {}
                for p in paths:
                    acc = by_content.setdefault(p.content(nu), {})
                    w = p.weight()
                    acc[w] = acc.get(w, 0) + 1
                for n in iter_contents(nu, L):
                    got = LaurentPoly(by_content.get(n, {}))
                    if got != refined_bressoud_gf(nu, L, s, n):
                        return False, f"refined count fails at {nu=} {L=} {s=} {n=}"
    return True, "counts nu <= 3, L <= 8; refined nu <= 2, L <= 8"


def check_polynomial_identities_bressoud() -> tuple[bool, str]:
    """The path-count family C agrees with the alternating-binomial family B,
    the fermionic multisum equals its bosonic form (FQK-1.23), and the two
    worked path examples have the documented weight and relative heights."""
    for nu in range(1, 4):
        for L in range(0, 11):
            for s in range(0, nu + 1):
                for b in range(0, nu + 1):
                    if c_poly(nu, L, s, b) != c_from_b(nu, L, s, b):
                        return False, f"C/B bridge fails at {nu=} {L=} {s=} {b=}"
            for s in range(1, nu + 2):
                if not fqk_identity(nu, s, L).passed:
                    return False, f"multisum/bosonic fails at {nu=} {L=} {s=}"
    steps = (
        ["NE"] + ["SE"] * 2 + ["NE"] * 2 + ["SE"] + ["NE"] + ["SE"] * 2
        + ["NE"] * 2 + ["SE"] + ["NE"] * 3 + ["SE"] * 4 + ["H"] * 2
    )
    path = BressoudPath((-8, 1), tuple(steps))
    if path.end() != (13, 0) or path.weight() != -1:
        return False, "worked Bressoud example has wrong weight"
    if path.relative_heights() != [1, 2, 1, 1, 4]:
        return False, "worked Bressoud example has wrong relative heights"
    seq = GordonSequence(-2, 3, (1, 2, 3, 1, 4, 3))
    if seq.weight() != 7:
        return False, "worked Gordon example has wrong weight"
    return True, "nu <= 3, L <= 10, all s, b; worked examples match"


def check_gordon_oracle() -> tuple[bool, str]:
    """Enumerated weighted Gordon path counts equal the recurrence values, and
    the G/W, G/F and F/W polynomial identities hold (nu <= 2, L <= 6)."""
    for nu in range(1, 3):
        for L in range(0, 7):
            for s in range(0, nu + 1):
                for b in range(0, nu + 1):
                    enum = weighted_gordon_count(enumerate_gordon(0, L, s, b, nu))
                    if enum != g_poly(nu, L, s, b):
                        return False, f"path count fails at {nu=} {L=} {s=} {b=}"
                    if g_poly(nu, L, nu - s, b) != g_from_w(nu, s, b, L):
                        return False, f"G/W fails at {nu=} {L=} {s=} {b=}"
                    if L >= 2:
                        if g_poly(nu, L, s, b) != f_poly(nu, nu - s, nu - b, L):
                            return False, f"G/F fails at {nu=} {L=} {s=} {b=}"
                        if not warnaar_identity(nu, s, b, L).passed:
                            return False, f"F/W fails at {nu=} {L=} {s=} {b=}"
    return True, "nu <= 2, L <= 6, all s, b"


def check_particle_bijection() -> tuple[bool, str]:
    """Particle orbits partition the Gordon path space, each orbit's weighted
    count matches the per-content product formula, and the interior height sum
    is invariant on every orbit (nu <= 2, L <= 6)."""
    for nu in range(1, 3):
        for L in range(2, 7):
            for s in range(0, nu + 1):
                for b in range(0, nu + 1):
                    orbits = orbits_by_content(0, L, s, b, nu)
                    seen: set[GordonSequence] = set()
                    for n, orbit in orbits.items():
                        if seen & orbit:
                            return False, f"orbits overlap at {nu=} {L=} {s=} {b=}"
                        seen |= orbit
                        want = content_poly(nu, nu - s, nu - b, L, n)
                        if weighted_gordon_count(orbit) != want:
                            return (
                                False,
                                f"orbit count fails at {nu=} {L=} {s=} {b=} {n=}",
                            )
                        height = sum(partial_sums(n))
                        for member in orbit:
                            if member.interior_height_sum() != height:
                                return (
                                    False,
                                    f"height invariant fails at {nu=} {L=} {s=} {b=} {n=}",
                                )
                    full = set(enumerate_gordon(0, L, s, b, nu))
                    if seen != full:
                        return False, f"orbits do not cover at {nu=} {L=} {s=} {b=}"
    return True, "nu <= 2, L <= 6, all s, b"


def check_finite_variants() -> tuple[bool, str]:
    """The two finite multisum identities (Variant1-finite-1.31 for nu <= 2,
    M <= L <= 8; Variant2-finite-4.6 for nu <= 2, M <= L, 1 <= L <= 6)."""
    for nu in range(1, 3):
        for L in range(0, 9):
            for M in range(0, L + 1):
                r = variant1_finite(nu, M, L)
                if not r.passed:
                    return False, f"Variant1-finite-1.31 fails at {nu=} {M=} {L=}"
        for L in range(1, 7):
            for M in range(0, L + 1):
                for s in range(0, nu + 1):
                    for b in range(0, nu + 1):
                        r = variant2_finite(nu, s, b, M, L)
                        if not r.passed:
                            return (
                                False,
                                f"Variant2-finite-4.6 fails at {nu=} {s=} {b=} {M=} {L=}",
                            )
    return True, "nu <= 2; windows as documented"


def check_series_variants() -> tuple[bool, str]:
    """The truncated-series identities to order 25 for nu <= 3, M <= 4
    (Variant1-1.32, Variant2-4.9), the order-1 specialization B2-4.10, and
    the classical modulus-5 check AG-1.1 to order 40."""
    Q = 25
    for nu in range(1, 4):
        for M in range(0, 5):
            if not variant1_series(nu, M, Q).passed:
                return False, f"Variant1-1.32 fails at {nu=} {M=}"
            for s in range(0, nu + 1):
                if not variant2_series(nu, s, M, Q).passed:
                    return False, f"Variant2-4.9 fails at {nu=} {s=} {M=}"
        for s in range(0, nu + 1):
            if not b2_410(nu, s, Q).passed:
                return False, f"B2-4.10 fails at {nu=} {s=}"
    for s in range(0, 2):
        if not ag_identity(1, s, 40).passed:
            return False, f"AG-1.1 fails at s={s}"
    return True, "Q = 25, nu <= 3, M <= 4; classical check Q = 40"


def _side_key(report) -> str:
    return json.dumps(
        [report.status, list(report.lhs_head), list(report.rhs_head)],
        sort_keys=True,
        separators=(",", ":"),
    )


def check_conjecture() -> tuple[bool, str]:
    """Conjecture-5.7 to order 20 on the boxes [0,3]^2 (nu = 2) and [0,2]^3
    (nu = 3); its two collapse cases byte-match the single-parameter series
    reports."""
    Q = 20

    def box(nu, hi):
        def rec(k, prefix):
            if k == 0:
                yield prefix
                return
            for v in range(hi + 1):
                yield from rec(k - 1, prefix + (v,))

        yield from rec(nu, ())

    for nu, hi in ((2, 3), (3, 2)):
        for mvec in box(nu, hi):
            r = conjecture_5_7(nu, mvec, Q)
            if not r.passed:
                return False, f"Conjecture-5.7 fails at {nu=} {mvec=}"
    for nu in (2, 3):
        for M in range(0, 4 if nu == 2 else 3):
            a = conjecture_5_7(nu, (M,) + (0,) * (nu - 1), Q)
            if _side_key(a) != _side_key(variant1_series(nu, M, Q)):
                return False, f"first collapse differs at {nu=} {M=}"
            c = conjecture_5_7(nu, (M,) * nu, Q)
            if _side_key(c) != _side_key(variant2_series(nu, nu, M, Q)):
                return False, f"second collapse differs at {nu=} {M=}"
    return True, "Q = 20; both collapse cases byte-match"


def check_stability() -> tuple[bool, str]:
    """Re-running every series check at order Q + 5 agrees on the overlap, and
    raising the multisum summation bound by one leaves every window
    coefficient-identical."""
    for nu in range(1, 4):
        for M in range(0, 5):
            if not variant1_series(nu, M, 30).passed:
                return False, f"Variant1-1.32 unstable at {nu=} {M=}"
            for s in range(0, nu + 1):
                if not variant2_series(nu, s, M, 30).passed:
                    return False, f"Variant2-4.9 unstable at {nu=} {s=} {M=}"
        for s in range(0, nu + 1):
            if not b2_410(nu, s, 30).passed:
                return False, f"B2-4.10 unstable at {nu=} {s=}"
    for s in range(0, 2):
        if not ag_identity(1, s, 45).passed:
            return False, f"AG-1.1 unstable at s={s}"
    for nu, hi in ((2, 3), (3, 2)):
        for i in range(hi + 1):
            mvec = (i,) * nu
            if not conjecture_5_7(nu, mvec, 25).passed:
                return False, f"Conjecture-5.7 unstable at {nu=} {mvec=}"
    for nu in range(1, 4):
        for M in range(0, 5):
            for Q in (10, 25):
                n = multisum_truncation_bound(nu, M, Q)
                mvec = (M,) * nu
                a = multisum_window(nu, mvec, nu, Q, n)
                b = multisum_window(nu, mvec, nu, Q, n + 1)
                if a != b:
                    return False, f"summation bound unstable at {nu=} {M=} {Q=}"
    return True, "order Q + 5 and bound N + 1 both stable"


CHECKS = [
    ("multinomial properties", check_multinomial_properties),
    ("supernomial specializations", check_supernomial_specializations),
    ("Bressoud oracle equivalence", check_bressoud_oracle),
    ("Bressoud polynomial identities", check_polynomial_identities_bressoud),
    ("Gordon oracle equivalence", check_gordon_oracle),
    ("particle bijection", check_particle_bijection),
    ("finite variants", check_finite_variants),
    ("series variants", check_series_variants),
    ("conjecture box", check_conjecture),
    ("stability", check_stability),
]


def run_all(emit=print) -> bool:
    """Run every check, emitting one pass/fail line each; True iff all pass."""
    all_ok = True
    for name, fn in CHECKS:
        t0 = time.perf_counter()
        ok, detail = fn()
        dt = time.perf_counter() - t0
        verdict = "pass" if ok else "FAIL"
        emit(f"{verdict}  {name}: {detail}  ({dt:.1f}s)")
        all_ok = all_ok and ok
    return all_ok
