"""Verification engine for the multisum/product identities.

Every checker builds its two sides by disjoint code paths (a truncated
multisum on the left, a polynomial-times-restricted-product on the right),
compares them coefficient by coefficient with exact integer arithmetic,
and wraps the outcome in a VerificationReport.  Sides that involve a
substitution q -> 1/q are genuinely Laurent, so comparisons happen on the
window of exponents up to the truncation order Q, negative exponents
included.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from functools import lru_cache

from .bressoud import _bilateral_sum, alpha, b_poly, c_poly, fqk_lhs, fqk_rhs
from .coefficients import gaussian_binomial, q_supernomial
from .gordon import f_poly, f_from_w, g_poly, w_poly
from .series import LaurentPoly, TruncatedSeries, ZERO, q_power

HEAD_LEN = 12


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity check.

    lhs_head / rhs_head are the first HEAD_LEN coefficients of either side,
    starting at the exponent head_base recorded in params (0 unless a side
    has negative support).
    """

    case: str
    params: dict
    status: str  # "pass" or "fail"
    first_mismatch_order: int | None
    lhs_head: tuple[int, ...]
    rhs_head: tuple[int, ...]
    runtime_ms: float

    @property
    def passed(self) -> bool:
        return self.status == "pass"


# -- coefficient windows ------------------------------------------------------
#
# A "window" is a dict exponent -> coefficient holding every (possibly
# negative) exponent up to the truncation order; zero values are dropped.


def _add_series(window: dict, series: TruncatedSeries, offset: int, Q: int):
    for e, c in enumerate(series.coeffs):
        if c and e + offset <= Q:
            window[e + offset] = window.get(e + offset, 0) + c
    _strip(window)


def _add_poly_times_series(window: dict, p: LaurentPoly, series: TruncatedSeries, Q: int):
    for e, c in p.items():
        for i, sc in enumerate(series.coeffs):
            if sc and e + i <= Q:
                window[e + i] = window.get(e + i, 0) + c * sc
    _strip(window)


def _strip(window: dict):
    for e in [e for e, c in window.items() if c == 0]:
        del window[e]


def _poly_window(p: LaurentPoly, Q: int) -> dict:
    return {e: c for e, c in p.items() if e <= Q}


def _head(window: dict, base: int) -> tuple[int, ...]:
    return tuple(window.get(base + i, 0) for i in range(HEAD_LEN))


def _report(case: str, params: dict, lhs: dict, rhs: dict, t0: float) -> VerificationReport:
    keys = set(lhs) | set(rhs)
    bad = sorted(e for e in keys if lhs.get(e, 0) != rhs.get(e, 0))
    base = min(keys | {0}) if keys else 0
    params = dict(params, head_base=base)
    return VerificationReport(
        case=case,
        params=params,
        status="pass" if not bad else "fail",
        first_mismatch_order=bad[0] if bad else None,
        lhs_head=_head(lhs, base),
        rhs_head=_head(rhs, base),
        runtime_ms=(time.perf_counter() - t0) * 1000.0,
    )


# -- series building blocks ---------------------------------------------------


@lru_cache(maxsize=None)
def _inv_pochhammer(m: int, order: int) -> TruncatedSeries:
    """1 / ((1-q)(1-q^2)...(1-q^m)) to the given order."""
    acc = TruncatedSeries.one(order)
    for i in range(1, m + 1):
        acc = acc.mul_poly(LaurentPoly({0: 1, i: -1}))
    return acc.invert()


@lru_cache(maxsize=None)
def restricted_product_series(nu: int, s: int, Q: int) -> TruncatedSeries:
    """Product of 1/(1-q^j) over j >= 1 avoiding the residues 0 and +-s
    modulo 2*nu + 3, truncated at order Q."""
    P = 2 * nu + 3
    if not (1 <= s <= 2 * nu + 2):
        raise ValueError("residue s must lie in 1..2nu+2")
    skip = {0, s % P, (P - s) % P}
    acc = TruncatedSeries.one(Q)
    for j in range(1, Q + 1):
        if j % P not in skip:
            acc = acc * TruncatedSeries(
                [1 if i % j == 0 else 0 for i in range(Q + 1)], Q
            )
    return acc


def _iter_tail_sums(nu: int, n1_max: int):
    """Non-increasing tuples (N_1 >= ... >= N_nu >= 0) with N_1 <= n1_max."""

    def rec(level: int, upper: int, prefix: tuple[int, ...]):
        if level == nu:
            yield prefix
            return
        for v in range(upper + 1):
            yield from rec(level + 1, v, prefix + (v,))

    yield from rec(0, n1_max, ())


def multisum_window(
    nu: int, mvec: tuple[int, ...], tail_from: int, Q: int, n_max: int
) -> dict:
    """Window of the multisum whose term for tail sums N is

        q^(sum N_i^2 + N_{tail_from+1} + ... + N_nu - sum mvec_i * N_i)
            / ((q)_{n_1} ... (q)_{n_nu})

    summed over all contents n with N_1 <= n_max."""
    window: dict = {}
    for N in _iter_tail_sums(nu, n_max):
        exp = sum(v * v for v in N)
        exp += sum(N[i] for i in range(tail_from, nu))
        exp -= sum(m * v for m, v in zip(mvec, N))
        if exp > Q:
            continue
        order = Q - exp
        term = TruncatedSeries.one(order)
        for i in range(nu):
            n_i = N[i] - (N[i + 1] if i + 1 < nu else 0)
            if n_i:
                term = term * _inv_pochhammer(n_i, order)
        _add_series(window, term, exp, Q)
    return window


def multisum_truncation_bound(nu: int, m_max: int, Q: int) -> int:
    """Tail-sum cutoff that provably captures every coefficient up to Q,
    confirmed by recomputing with the cutoff raised by one."""
    m_max = abs(m_max)
    n = m_max + math.isqrt(Q + (nu * m_max * m_max) // 4 + 1) + 2
    mvec = (m_max,) * nu
    while multisum_window(nu, mvec, nu, Q, n) != multisum_window(nu, mvec, nu, Q, n + 1):
        n += 1
    return n


def ag_multisum(nu: int, s: int, Q: int) -> TruncatedSeries:
    """The Andrews-Gordon multisum with tail terms N_{s+1} + ... + N_nu."""
    if not (0 <= s <= nu):
        raise ValueError("s must lie in 0..nu")
    window = multisum_window(nu, (0,) * nu, s, Q, multisum_truncation_bound(nu, 0, Q))
    return TruncatedSeries([window.get(i, 0) for i in range(Q + 1)], Q)


# -- supernomial sums ---------------------------------------------------------


def _i_term(nu: int, s: int, b: int, lvec: tuple[int, ...], j: int) -> LaurentPoly:
    P = 2 * nu + 3
    t = ZERO
    plus = q_supernomial(lvec, (b - s) + 2 * P * j)
    if not plus.is_zero():
        t = t + plus.shift(j * ((2 * j + 1) * P - 2 * s))
    minus = q_supernomial(lvec, (b + s) + 2 * P * j)
    if not minus.is_zero():
        t = t - minus.shift((2 * j + 1) * (P * j + s))
    return t


def supernomial_I(nu: int, s: int, b: int, lvec: tuple[int, ...]) -> LaurentPoly:
    """Alternating bilateral supernomial sum; half-integer lower indices are
    carried doubled and vanish unless they combine to an integer.

    Requires a non-negative tuple: with negative components the supernomials
    stop vanishing for large indices and the sum is an infinite Laurent
    series (see supernomial_I_inverse for the truncated 1/q form)."""
    if any(l < 0 for l in lvec):
        raise ValueError("supernomial_I needs a non-negative tuple")
    return _bilateral_sum(lambda j: _i_term(nu, s, b, lvec, j))


def supernomial_I_inverse(nu: int, s: int, b: int, lvec: tuple[int, ...], Q: int) -> LaurentPoly:
    """The alternating supernomial sum evaluated at 1/q and cut at order Q.

    For tuples with negative components the sum in q is a Laurent series
    whose terms run off to -infinity, so it is only locally finite after the
    substitution q -> 1/q; each side of the bilateral sum is summed until
    two consecutive terms land entirely above the cutoff."""
    acc = ZERO
    for direction in (1, -1):
        j = 0 if direction == 1 else -1
        misses = 0
        while misses < 2:
            t = _i_term(nu, s, b, lvec, j)
            if t.is_zero() or -t.max_exp() > Q:
                misses += 1
            else:
                misses = 0
                inv = t.substitute_inverse_q()
                acc = acc + LaurentPoly({e: c for e, c in inv.items() if e <= Q})
            j += direction
    return acc


# -- finite identities --------------------------------------------------------


def variant1_finite(nu: int, M: int, L: int) -> VerificationReport:
    """Binomial multisum against the two-window path convolution."""
    t0 = time.perf_counter()
    if not (0 <= M <= L):
        raise ValueError("need 0 <= M <= L")
    lhs = ZERO
    for N in _iter_tail_sums(nu, L):
        term = q_power(sum(v * v for v in N) - M * N[0]) if N else q_power(0)
        run = 0
        for i in range(nu):
            n_i = N[i] - (N[i + 1] if i + 1 < nu else 0)
            run += 2 * N[i]
            term = term * gaussian_binomial(n_i + L - run, n_i)
            if term.is_zero():
                break
        lhs = lhs + term
    rhs = ZERO
    for s in range(nu + 1):
        left = c_poly(nu, M, s, 0).substitute_inverse_q()
        rhs = rhs + left * c_poly(nu, L - M, s, 0)
    return _report(
        "Variant1-finite-1.31",
        {"nu": nu, "M": M, "L": L},
        dict(lhs.items()),
        dict(rhs.items()),
        t0,
    )


def variant2_finite(nu: int, s: int, b: int, M: int, L: int) -> VerificationReport:
    """Multinomial-shaped multisum against the Gordon window convolution."""
    t0 = time.perf_counter()
    if not (0 <= s <= nu and 0 <= b <= nu and 0 <= M <= L and L >= 1):
        raise ValueError("need 0 <= s,b <= nu and 0 <= M <= L with L >= 1")
    lhs = ZERO
    for N in _iter_tail_sums(nu, nu * L):
        exp = sum(v * v for v in N)
        exp += sum(N[i] for i in range(s, nu))
        exp -= M * sum(N)
        term = q_power(exp)
        run = 0
        for i in range(1, nu + 1):
            n_i = N[i - 1] - (N[i] if i < nu else 0)
            run += 2 * N[i - 1]
            term = term * gaussian_binomial(
                n_i + i * L - run - alpha(i, s) - alpha(i, b), n_i
            )
            if term.is_zero():
                break
        lhs = lhs + term
    rhs = ZERO
    for sp in range(nu + 1):
        left = g_poly(nu, M, sp, nu - s).substitute_inverse_q()
        rhs = rhs + left * g_poly(nu, L - M, sp, nu - b)
    return _report(
        "Variant2-finite-4.6",
        {"nu": nu, "s": s, "b": b, "M": M, "L": L},
        dict(lhs.items()),
        dict(rhs.items()),
        t0,
    )


# -- series identities --------------------------------------------------------


def _rhs_window(nu: int, polys: dict[int, LaurentPoly], Q: int) -> dict:
    """Sum of poly_s(q) times the restricted product avoiding residues
    0, +-s, with each product taken to the order its Laurent cofactor
    requires."""
    window: dict = {}
    for s, p in sorted(polys.items()):
        if p.is_zero():
            continue
        order = Q - min(p.min_exp(), 0)
        _add_poly_times_series(window, p, restricted_product_series(nu, s, order), Q)
    return window


def _series_case(
    case: str,
    params: dict,
    nu: int,
    mvec: tuple[int, ...],
    tail_from: int,
    Q: int,
    polys: dict[int, LaurentPoly],
    n_max: int | None,
    t0: float,
) -> VerificationReport:
    if n_max is None:
        n_max = multisum_truncation_bound(nu, max((abs(m) for m in mvec), default=0), Q)
    lhs = multisum_window(nu, mvec, tail_from, Q, n_max)
    rhs = _rhs_window(nu, polys, Q)
    return _report(case, dict(params, Q=Q, n_max=n_max), lhs, rhs, t0)


def variant1_series(
    nu: int, M: int, Q: int, parity_filter: bool = True, n_max: int | None = None
) -> VerificationReport:
    t0 = time.perf_counter()
    if M < 0:
        raise ValueError("M must be non-negative")
    polys = {}
    for s in range(1, 2 * nu + 3):
        if parity_filter and (M - nu - s) % 2 == 0:
            continue
        polys[s] = b_poly(nu, s, nu + 1, M).substitute_inverse_q()
    return _series_case(
        "Variant1-1.32",
        {"nu": nu, "M": M, "parity_filter": parity_filter},
        nu,
        (M,) + (0,) * (nu - 1),
        nu,
        Q,
        polys,
        n_max,
        t0,
    )


def variant2_series(
    nu: int, s: int, M: int, Q: int, parity_filter: bool = True, n_max: int | None = None
) -> VerificationReport:
    t0 = time.perf_counter()
    if not (0 <= s <= nu) or M < 0:
        raise ValueError("need 0 <= s <= nu and M >= 0")
    polys = {}
    for sp in range(1, 2 * nu + 3):
        if parity_filter and (s + sp - nu * M) % 2 == 0:
            continue
        polys[sp] = w_poly(nu, sp, nu - s, M).substitute_inverse_q()
    return _series_case(
        "Variant2-4.9",
        {"nu": nu, "s": s, "M": M, "parity_filter": parity_filter},
        nu,
        (M,) * nu,
        s,
        Q,
        polys,
        n_max,
        t0,
    )


def conjecture_5_7(
    nu: int,
    mvec: tuple[int, ...],
    Q: int,
    parity_filter: bool = True,
    n_max: int | None = None,
) -> VerificationReport:
    t0 = time.perf_counter()
    if len(mvec) != nu:
        raise ValueError("mvec length must equal nu")
    mtilde = tuple(
        mvec[i] - (mvec[i + 1] if i + 1 < nu else 0) for i in range(nu)
    )
    polys = {}
    for s in range(1, 2 * nu + 3):
        if parity_filter and (s + nu + sum(mvec)) % 2 == 0:
            continue
        polys[s] = supernomial_I_inverse(nu, s, nu + 1, mtilde, Q)
    return _series_case(
        "Conjecture-5.7",
        {"nu": nu, "mvec": list(mvec), "parity_filter": parity_filter},
        nu,
        mvec,
        nu,
        Q,
        polys,
        n_max,
        t0,
    )


def b2_410(nu: int, s: int, Q: int, n_max: int | None = None) -> VerificationReport:
    """Pure product form of the second variant at window shift one."""
    t0 = time.perf_counter()
    if not (0 <= s <= nu):
        raise ValueError("s must lie in 0..nu")
    if n_max is None:
        n_max = multisum_truncation_bound(nu, 1, Q)
    lhs = multisum_window(nu, (1,) * nu, s, Q, n_max)
    rhs: dict = {}
    for sp in range(nu - s + 1, nu + 2):
        _add_series(rhs, restricted_product_series(nu, sp, Q), 0, Q)
    return _report("B2-4.10", {"nu": nu, "s": s, "Q": Q, "n_max": n_max}, lhs, rhs, t0)


def ag_identity(nu: int, s: int, Q: int) -> VerificationReport:
    """Multisum equals the restricted product avoiding 0, +-(s+1)."""
    t0 = time.perf_counter()
    lhs = {e: c for e, c in enumerate(ag_multisum(nu, s, Q).coeffs) if c}
    rhs = {e: c for e, c in enumerate(restricted_product_series(nu, s + 1, Q).coeffs) if c}
    return _report("AG-1.1", {"nu": nu, "s": s, "Q": Q}, lhs, rhs, t0)


def fqk_identity(nu: int, s: int, L: int) -> VerificationReport:
    t0 = time.perf_counter()
    lhs = fqk_lhs(nu, s, L)
    rhs = fqk_rhs(nu, s, L)
    return _report(
        "FQK-1.23",
        {"nu": nu, "s": s, "L": L},
        dict(lhs.items()),
        dict(rhs.items()),
        t0,
    )


def warnaar_identity(nu: int, s: int, b: int, L: int) -> VerificationReport:
    t0 = time.perf_counter()
    lhs = f_poly(nu, s, b, L)
    rhs = f_from_w(nu, s, b, L)
    return _report(
        "Warnaar-2.22",
        {"nu": nu, "s": s, "b": b, "L": L},
        dict(lhs.items()),
        dict(rhs.items()),
        t0,
    )
