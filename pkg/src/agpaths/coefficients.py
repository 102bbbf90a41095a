"""Gaussian binomials, q-multinomials and q-supernomials, exactly.

All three families are evaluated from their defining sums, so they can serve
as trusted oracles; the published recurrences and symmetries are exercised in
the test suite rather than used for evaluation.
"""

from __future__ import annotations

from functools import lru_cache

from .series import ONE, ZERO, LaurentPoly, q_power


@lru_cache(maxsize=None)
def gaussian_binomial(top: int, bottom: int) -> LaurentPoly:
    """The q-binomial [top, bottom]; zero unless 0 <= bottom <= top.

    Computed as the exact quotient prod (1-q^{m+i})/(1-q^i), i = 1..bottom,
    with m = top - bottom; the result has degree bottom*(top-bottom).
    """
    if bottom < 0 or bottom > top:
        return ZERO
    n, m = bottom, top - bottom
    result = ONE
    for i in range(1, n + 1):
        result = result * (ONE - q_power(m + i))
        result = result.divexact(ONE - q_power(i))
    return result


@lru_cache(maxsize=None)
def signed_gaussian_binomial(top: int, bottom: int) -> LaurentPoly:
    """The q-binomial extended to negative tops.

    For top >= 0 this is the ordinary Gaussian polynomial; for top < 0 the
    defining product prod_{i=1}^{bottom} (1-q^{top-i+1})/(1-q^i) is a signed
    Laurent polynomial, rewritten through the reflection
    [top, k] = (-1)^k q^{k*top - k(k-1)/2} [k - top - 1, k].
    """
    if bottom < 0:
        return ZERO
    if top >= 0:
        return gaussian_binomial(top, bottom)
    base = gaussian_binomial(bottom - top - 1, bottom)
    signed = base.scale(-1 if bottom % 2 else 1)
    return signed.shift(bottom * top - bottom * (bottom - 1) // 2)


def classical_multinomial(L: int, a: int, nu: int) -> int:
    """Coefficient of x^a in (1 + x + ... + x^nu)^L."""
    coeffs = [1]
    for _ in range(L):
        new = [0] * (len(coeffs) + nu)
        for i, c in enumerate(coeffs):
            if c:
                for k in range(nu + 1):
                    new[i + k] += c
        coeffs = new
    return coeffs[a] if 0 <= a < len(coeffs) else 0


def _composition_chains(total: int, nu: int, top: int):
    """Yield chains 0 <= j_1 <= ... <= j_nu <= top with sum equal to total.

    Chains are produced in lexicographic order of (j_nu, ..., j_1); any
    composition outside the chain condition contributes zero through a
    vanishing q-binomial, so only chains are enumerated.
    """

    def rec(level: int, upper: int, remaining: int, suffix: tuple[int, ...]):
        if level == 1:
            if 0 <= remaining <= upper:
                yield (remaining,) + suffix
            return
        # j_level can be at most `upper` and must leave a feasible prefix sum.
        for j in range(min(upper, remaining), -1, -1):
            if remaining - j <= j * (level - 1):
                yield from rec(level - 1, j, remaining - j, (j,) + suffix)

    if total >= 0:
        yield from rec(nu, top, total, ())


@lru_cache(maxsize=None)
def q_multinomial(L: int, a: int, nu: int, p: int) -> LaurentPoly:
    """The q-multinomial with superscript p, by its defining composition sum.

    The sentinel p = -1 gives the zero polynomial; otherwise 0 <= p <= nu is
    required.  The value vanishes for a < 0 or a > nu*L.
    """
    if p == -1:
        return ZERO
    if not 0 <= p <= nu:
        raise ValueError(f"superscript p={p} outside 0..{nu} (or the sentinel -1)")
    if L < 0 or a < 0 or a > nu * L:
        return ZERO
    acc = ZERO
    for js in _composition_chains(a, nu, L):
        exps = sum(js[l - 2] * (L - js[l - 1]) for l in range(2, nu + 1))
        exps -= sum(js[:p])
        term = q_power(exps)
        prev = L
        for j in reversed(js):
            term = term * gaussian_binomial(prev, j)
            if term.is_zero():
                break
            prev = j
        acc = acc + term
    return acc


@lru_cache(maxsize=None)
def q_supernomial(lvec: tuple[int, ...], two_a: int) -> LaurentPoly:
    """The q-supernomial for the tuple lvec at half-integral index a = two_a/2.

    Storing 2a keeps everything integral: the summation index set is nonempty
    only when a + (sum_i i*L_i)/2 is a non-negative integer, i.e. when
    two_a + sum_i i*L_i is even and non-negative.
    """
    nu = len(lvec)
    if nu < 1:
        raise ValueError("lvec must have at least one component")
    weighted = sum(i * li for i, li in enumerate(lvec, start=1))
    total2 = two_a + weighted
    if total2 < 0 or total2 % 2:
        return ZERO
    total = total2 // 2

    tails = [sum(lvec[i - 1 :]) for i in range(1, nu + 1)]  # tails[l-1] = L_l+..+L_nu
    acc = ZERO

    def rec(level: int, top: int, remaining: int, suffix: tuple[int, ...]):
        nonlocal acc
        # level is the index l of j_l being chosen; top is its binomial top.
        if level == 1:
            if remaining < 0 or (top >= 0 and remaining > top):
                return
            js = (remaining,) + suffix
            exp = sum(js[l - 2] * (tails[l - 1] - js[l - 1]) for l in range(2, nu + 1))
            term = q_power(exp)
            prev = lvec[nu - 1]
            for l in range(nu, 0, -1):
                term = term * signed_gaussian_binomial(prev, js[l - 1])
                if term.is_zero():
                    return
                if l > 1:
                    prev = lvec[l - 2] + js[l - 1]
            acc = acc + term
            return
        hi = remaining if top < 0 else min(top, remaining)
        for j in range(0, hi + 1):
            rec(level - 1, lvec[level - 2] + j, remaining - j, (j,) + suffix)

    rec(nu, lvec[nu - 1], total, ())
    return acc
