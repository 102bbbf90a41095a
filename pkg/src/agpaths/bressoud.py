"""Bressoud lattice paths: enumeration, peak weights, relative heights,
the weighted counts C, the alternating-binomial B family and the refined
per-content generating function.

A path is a step string over NE/SE/H starting from a fixed vertex; peaks,
weights and relative heights are derived from it on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .coefficients import gaussian_binomial
from .series import ONE, ZERO, LaurentPoly, q_power

NE, SE, H = "NE", "SE", "H"

ENUMERATION_CAP = 16


class EnumerationTooLarge(Exception):
    """Raised when a window exceeds the enumeration cap; raise the cap to override."""


@dataclass(frozen=True)
class BressoudPath:
    start: tuple[int, int]
    steps: tuple[str, ...]

    def vertices(self) -> list[tuple[int, int]]:
        x, y = self.start
        out = [(x, y)]
        for s in self.steps:
            x += 1
            if s == NE:
                y += 1
            elif s == SE:
                y -= 1
            out.append((x, y))
        return out

    def end(self) -> tuple[int, int]:
        x, y = self.start
        for s in self.steps:
            x += 1
            y += 1 if s == NE else -1 if s == SE else 0
        return (x, y)

    def is_valid(self, nu: int | None = None) -> bool:
        """Check step legality: y >= 0, SE from y > 0 only, H on the x-axis
        only, and (when nu is given) no peak higher than nu."""
        y = self.start[1]
        if y < 0:
            return False
        for s in self.steps:
            if s == NE:
                y += 1
            elif s == SE:
                if y == 0:
                    return False
                y -= 1
            elif s == H:
                if y != 0:
                    return False
            else:
                return False
        if nu is not None and any(p[1] > nu for p in self.peaks()):
            return False
        return True

    def peaks(self) -> list[tuple[int, int]]:
        """Vertices preceded by NE and followed by SE."""
        verts = self.vertices()
        return [
            verts[i]
            for i in range(1, len(verts) - 1)
            if self.steps[i - 1] == NE and self.steps[i] == SE
        ]

    def weight(self) -> int:
        return sum(x for x, _ in self.peaks())

    def relative_heights(self) -> list[int]:
        """Relative height of each peak, in path order.

        For a peak (i, j) this is the largest h > 0 admitting flanking
        vertices (i', j-h), (i'', j-h) with i' < i < i'' such that strictly
        between them no peak is higher than j and every peak of height
        exactly j has weight >= i.
        """
        verts = self.vertices()
        peaks = self.peaks()
        out = []
        for (px, py) in peaks:
            h_found = 0
            for h in range(py, 0, -1):
                target = py - h
                left = max((x for x, y in verts if y == target and x < px), default=None)
                right = min((x for x, y in verts if y == target and x > px), default=None)
                if left is None or right is None:
                    continue
                ok = True
                for (ox, oy) in peaks:
                    if left < ox < right:
                        if oy > py or (oy == py and ox < px):
                            ok = False
                            break
                if ok:
                    h_found = h
                    break
            out.append(h_found)
        return out

    def content(self, nu: int) -> tuple[int, ...]:
        """Particle content: n_j = number of peaks of relative height j."""
        n = [0] * nu
        for h in self.relative_heights():
            n[h - 1] += 1
        return tuple(n)

    def translate(self, dx: int) -> "BressoudPath":
        return BressoudPath((self.start[0] + dx, self.start[1]), self.steps)


def enumerate_bressoud(
    M: int, L: int, s: int, b: int, nu: int, cap: int = ENUMERATION_CAP
) -> list[BressoudPath]:
    """All Bressoud paths from (M, s) to (L, b) with no peak higher than nu."""
    if L < M:
        raise ValueError("window end precedes its start")
    if L - M > cap:
        raise EnumerationTooLarge(
            f"window of length {L - M} exceeds the enumeration cap {cap}"
        )
    out: list[BressoudPath] = []

    def rec(x: int, y: int, prev: str | None, steps: list[str]):
        if x == L:
            if y == b:
                out.append(BressoudPath((M, s), tuple(steps)))
            return
        if abs(y - b) > L - x:
            return
        # NE: a later SE would form a peak at height y+1, so y+1 <= nu;
        # climbing above nu is only possible if the path never descends,
        # which cannot end at b <= nu.
        if y + 1 <= nu:
            steps.append(NE)
            rec(x + 1, y + 1, NE, steps)
            steps.pop()
        if y > 0:
            steps.append(SE)
            rec(x + 1, y - 1, SE, steps)
            steps.pop()
        if y == 0:
            steps.append(H)
            rec(x + 1, y, H, steps)
            steps.pop()

    if not (0 <= s <= nu and 0 <= b <= nu):
        raise ValueError("boundary heights must lie in 0..nu")
    rec(M, s, None, [])
    return out


def weighted_count(paths) -> LaurentPoly:
    """Sum of q^{w(p)} over the given paths."""
    acc: dict[int, int] = {}
    for p in paths:
        w = p.weight()
        acc[w] = acc.get(w, 0) + 1
    return LaurentPoly(acc)


@lru_cache(maxsize=None)
def c_poly(nu: int, L: int, s: int, b: int) -> LaurentPoly:
    """The weighted path count C over the window [0, L], via its recurrence."""
    if not (0 <= s <= nu and 0 <= b <= nu):
        raise ValueError("boundary heights must lie in 0..nu")
    if L < 0:
        return ZERO
    if L == 0:
        return ONE if s == b else ZERO
    if b == nu:
        return c_poly(nu, L - 1, s, nu - 1)
    acc = c_poly(nu, L - 1, s, b - 1 if b > 0 else 0) + c_poly(nu, L - 1, s, b + 1)
    if L >= 2:
        acc = acc + (q_power(L - 1) - ONE) * c_poly(nu, L - 2, s, b)
    return acc


def alpha(i: int, s: int) -> int:
    return max(0, i - s)


def _bilateral_sum(term) -> LaurentPoly:
    """Sum term(j) over all integers j, stopping a side after two consecutive
    j whose term vanishes; the binomial supports are intervals in j."""
    acc = term(0)
    for direction in (1, -1):
        misses = 0
        j = direction
        while misses < 2:
            t = term(j)
            if t.is_zero():
                misses += 1
            else:
                misses = 0
                acc = acc + t
            j += direction
    return acc


@lru_cache(maxsize=None)
def b_poly(nu: int, s: int, b: int, L: int) -> LaurentPoly:
    """The alternating-binomial polynomial family B.

    Terms whose binomial lower index would be half-integral vanish, so the
    value is zero whenever L and s + b have opposite parity.
    """
    if L < 0:
        return ZERO
    P = 2 * nu + 3
    if (L + b - s) % 2:
        return ZERO

    def term(j: int) -> LaurentPoly:
        k1 = (L + b - s) // 2 + j * P
        k2 = (L + b + s) // 2 + j * P
        t = ZERO
        g1 = gaussian_binomial(L, k1)
        if not g1.is_zero():
            t = t + g1.shift(j * ((2 * j + 1) * P - 2 * s))
        g2 = gaussian_binomial(L, k2)
        if not g2.is_zero():
            t = t - g2.shift((2 * j + 1) * (P * j + s))
        return t

    return _bilateral_sum(term)


def iter_contents(nu: int, n1_max: int):
    """All non-negative tuples n with n_1 + ... + n_nu <= n1_max."""

    def rec(level: int, remaining: int, prefix: tuple[int, ...]):
        if level == 0:
            yield prefix
            return
        for v in range(remaining + 1):
            yield from rec(level - 1, remaining - v, prefix + (v,))

    yield from rec(nu, n1_max, ())


def partial_sums(n: tuple[int, ...]) -> list[int]:
    """N_i = n_i + ... + n_nu for i = 1..nu (1-indexed as list index 0..)."""
    out = []
    acc = 0
    for v in reversed(n):
        acc += v
        out.append(acc)
    return out[::-1]


def refined_bressoud_gf(nu: int, L: int, s: int, n: tuple[int, ...]) -> LaurentPoly:
    """Per-content generating function for paths from (0, nu-s) to (L, 0)
    whose relative-height content is n."""
    N = partial_sums(n)
    exp = sum(Ni * Ni for Ni in N) + sum(N[i] for i in range(s, nu))
    term = q_power(exp)
    acc = 0
    for i in range(1, nu + 1):
        acc += 2 * N[i - 1]
        term = term * gaussian_binomial(n[i - 1] + L - acc - alpha(i, s), n[i - 1])
        if term.is_zero():
            return ZERO
    return term


def fqk_lhs(nu: int, s: int, L: int) -> LaurentPoly:
    """The fermionic multisum side of the finite Andrews-Gordon analog,
    with boundary label 1 <= s <= nu + 1."""
    acc = ZERO
    for n in iter_contents(nu, L):
        N = partial_sums(n)
        if 2 * N[0] > L + 1:
            continue
        exp = sum(Ni * Ni for Ni in N) + sum(N[i] for i in range(s - 1, nu))
        term = q_power(exp)
        run = 0
        for i in range(1, nu + 1):
            run += 2 * N[i - 1]
            term = term * gaussian_binomial(n[i - 1] + L - run - alpha(i, s - 1), n[i - 1])
            if term.is_zero():
                break
        acc = acc + term
    return acc


def fqk_rhs(nu: int, s: int, L: int) -> LaurentPoly:
    """The bosonic side of the finite Andrews-Gordon analog."""
    if (L - (s + nu)) % 2:
        return b_poly(nu, s, nu + 1, L)
    return b_poly(nu, 2 * nu + 3 - s, nu + 1, L)


def c_from_b(nu: int, L: int, s: int, b: int) -> LaurentPoly:
    """The C polynomial expressed through the B family (the two parity branches)."""
    if (L - (s + b)) % 2 == 0:
        return b_poly(nu, nu + 1 - s, nu + 1 - b, L)
    return b_poly(nu, nu + 2 + s, nu + 1 - b, L)
