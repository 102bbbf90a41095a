"""Gordon frequency paths: enumeration, weights, the G/W/F polynomial
families, minimal particle configurations and their motion orbits.

A Gordon path over the window [M, L] is a sequence f_M..f_L with f_j >= 0
and f_j + f_{j+1} <= nu; boundary columns f_M and f_L are fixed by the path
space and carry no weight (the weight sums j*f_j over interior columns).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bressoud import ENUMERATION_CAP, EnumerationTooLarge, alpha, partial_sums
from .coefficients import gaussian_binomial, q_multinomial
from .series import ONE, ZERO, LaurentPoly, q_power


@dataclass(frozen=True)
class GordonSequence:
    M: int
    L: int
    f: tuple[int, ...]  # f_M .. f_L

    def __post_init__(self):
        if len(self.f) != self.L - self.M + 1:
            raise ValueError("frequency sequence length does not match the window")

    def is_valid(self, nu: int) -> bool:
        return all(v >= 0 for v in self.f) and all(
            self.f[i] + self.f[i + 1] <= nu for i in range(len(self.f) - 1)
        )

    def weight(self) -> int:
        """Sum of j*f_j over the interior columns M+1 .. L-1."""
        return sum(
            j * self.f[j - self.M] for j in range(self.M + 1, self.L)
        )

    def interior_height_sum(self) -> int:
        return sum(self.f[1:-1])

    def translate(self, dx: int) -> "GordonSequence":
        return GordonSequence(self.M + dx, self.L + dx, self.f)

    def reflect(self) -> "GordonSequence":
        """Reflect across the y-axis: the window [M, L] maps to [-L, -M]."""
        return GordonSequence(-self.L, -self.M, self.f[::-1])


def enumerate_gordon(
    M: int, L: int, s: int, b: int, nu: int, cap: int = ENUMERATION_CAP
) -> list[GordonSequence]:
    """All Gordon sequences over [M, L] with f_M = s and f_L = b."""
    if L < M:
        raise ValueError("window end precedes its start")
    if L - M > cap:
        raise EnumerationTooLarge(
            f"window of length {L - M} exceeds the enumeration cap {cap}"
        )
    if not (0 <= s <= nu and 0 <= b <= nu):
        raise ValueError("boundary heights must lie in 0..nu")
    if M == L:
        return [GordonSequence(M, L, (s,))] if s == b else []
    out: list[GordonSequence] = []

    def rec(pos: int, prev: int, acc: list[int]):
        if pos == L:
            if prev + b <= nu:
                out.append(GordonSequence(M, L, tuple(acc) + (b,)))
            return
        for v in range(nu - prev + 1):
            acc.append(v)
            rec(pos + 1, v, acc)
            acc.pop()

    rec(M + 1, s, [s])
    return out


def weighted_gordon_count(seqs) -> LaurentPoly:
    acc: dict[int, int] = {}
    for p in seqs:
        w = p.weight()
        acc[w] = acc.get(w, 0) + 1
    return LaurentPoly(acc)


@lru_cache(maxsize=None)
def g_poly(nu: int, L: int, s: int, b: int) -> LaurentPoly:
    """G over the window [0, L] by the column-peeling recurrence."""
    if not (0 <= s <= nu and 0 <= b <= nu):
        raise ValueError("boundary heights must lie in 0..nu")
    if L < 0:
        return ZERO
    if L == 0:
        return ONE if s == b else ZERO
    acc = ZERO
    for l in range(nu - b + 1):
        acc = acc + g_poly(nu, L - 1, s, l).shift((L - 1) * l)
    return acc


@lru_cache(maxsize=None)
def w_poly(nu: int, s: int, b: int, L: int) -> LaurentPoly:
    """The alternating q-multinomial family W; terms whose lower index is
    half-integral vanish."""
    P = 2 * nu + 3

    def term(j: int) -> LaurentPoly:
        t = ZERO
        a2 = nu * (L + 1) - s - b + 1
        if a2 % 2 == 0:
            m = q_multinomial(L, a2 // 2 + P * j, nu, b)
            if not m.is_zero():
                t = t + m.shift(j * ((2 * j + 1) * P - 2 * s))
        a2 = nu * (L + 1) + s - b + 1
        if a2 % 2 == 0:
            m = q_multinomial(L, a2 // 2 + P * j, nu, b)
            if not m.is_zero():
                t = t - m.shift((2 * j + 1) * (P * j + s))
        return t

    from .bressoud import _bilateral_sum

    return _bilateral_sum(term)


def g_from_w(nu: int, s: int, b: int, L: int) -> LaurentPoly:
    """G_{0,L}(nu-s, b) through the W family (both parity branches)."""
    if (b + s - nu * (L + 1)) % 2 == 0:
        return w_poly(nu, s + 1, b, L)
    return w_poly(nu, 2 * nu + 2 - s, b, L)


def f_poly(nu: int, s: int, b: int, L: int) -> LaurentPoly:
    """The fermionic multisum representation of the Gordon path count."""
    from .bressoud import iter_contents

    acc = ZERO
    for n in iter_contents(nu, L):
        term = content_poly(nu, s, b, L, n)
        acc = acc + term
    return acc


def content_poly(nu: int, s: int, b: int, L: int, n: tuple[int, ...]) -> LaurentPoly:
    """Per-content product formula: the generating function of Gordon paths
    from (0, nu-s) to (L, nu-b) of particle content n."""
    N = partial_sums(n)
    exp = sum(Ni * Ni for Ni in N) + sum(N[i] for i in range(s, nu))
    term = q_power(exp)
    run = 0
    for i in range(1, nu + 1):
        run += 2 * N[i - 1]
        term = term * gaussian_binomial(
            n[i - 1] + i * L - run - alpha(i, s) - alpha(i, b), n[i - 1]
        )
        if term.is_zero():
            return ZERO
    return term


def f_from_w(nu: int, s: int, b: int, L: int) -> LaurentPoly:
    """The F family through W (both parity branches)."""
    if (b + s - nu * L) % 2 == 0:
        return w_poly(nu, s + 1, nu - b, L)
    return w_poly(nu, 2 * nu + 2 - s, nu - b, L)


# -- particles ---------------------------------------------------------------


@dataclass(frozen=True)
class MinimalPath:
    sequence: GordonSequence
    content: tuple[int, ...]
    particles: tuple[tuple[int, int], ...]  # (charge, main column) left to right


def minimal_path(
    M: int, L: int, s: int, b: int, nu: int, n: tuple[int, ...]
) -> MinimalPath | None:
    """The canonical leftmost-packed configuration of content n, or None when
    the content does not fit in the window.

    Particles are placed in non-increasing charge order from left to right.
    Compression cascades in from the left boundary: the first particle's
    main column is capped at nu - s, and each later particle's main column
    is capped at the height of the previous particle's main column.  A
    particle of charge t under cap h occupies two columns (c, t - c) with
    c = min(t, h); t - c = 0 leaves the single empty column separating free
    particles.  A fully compressed particle (c = 0) is simply a rest
    particle pushed one column to the right, and the cascade restarts
    behind it.
    """
    if len(n) != nu:
        raise ValueError("content length must equal nu")
    charges = [t for t in range(nu, 0, -1) for _ in range(n[t - 1])]
    f = [0] * (L - M + 1)
    f[0] = s
    f[-1] = b
    pos = M + 1
    cap = nu - s
    particles = []
    for t in charges:
        c = min(t, cap)
        beta = t - c
        if pos > L - 1 or (beta > 0 and pos + 1 > L - 1):
            return None
        f[pos - M] += c
        if beta > 0:
            f[pos + 1 - M] += beta
        particles.append((t, pos))
        if c == 0:
            pos += 3
            cap = t
        else:
            pos += 2
            cap = c
    seq = GordonSequence(M, L, tuple(f))
    if not seq.is_valid(nu):
        return None
    return MinimalPath(seq, tuple(n), tuple(particles))


def motion_configs(f: tuple[int, ...], start: int, r0: int, nu: int):
    """All configurations of one particle moving right from its rest columns,
    everything else static; yields the sequence after each elementary move.

    The particle donates single units of height from a donor column c to
    c + 1.  Donation is allowed while f_c exceeds the static column f_{c+2}
    two steps ahead (the blocking rule of the motion pictures); against the
    right boundary half-column only Gordon's condition applies.  When the
    donor column stalls, the cursor advances to c + 1 provided the particle
    has already transferred units there (r > 0); a stalled donor with r = 0
    is a frozen configuration.  r0 > 0 seeds a boundary-compressed particle
    whose trailing units already occupy the column after its main one.
    """
    last = len(f) - 1  # index of the boundary column at L
    fs = list(f)
    c, r = start, r0
    while True:
        if c + 1 > last - 1:
            return
        if c + 2 <= last - 1:
            can = fs[c] > fs[c + 2]
        else:  # target column is L-1; only the boundary Gordon constraint
            can = fs[c] >= 1 and fs[c + 1] + 1 + fs[last] <= nu
        if can:
            fs[c] -= 1
            fs[c + 1] += 1
            r += 1
            yield tuple(fs)
        elif r > 0:
            c += 1
            r = 0
        else:
            return


def orbit_generate(
    m: MinimalPath, nu: int, cap: int = 2_000_000
) -> set[GordonSequence]:
    """Closure of a minimal path under the particle motion rules.

    Particles are moved serially from right to left (smallest charges
    first); every intermediate configuration is a member of the orbit.
    """
    M, L = m.sequence.M, m.sequence.L
    out: set[GordonSequence] = set()

    def place(k: int, f: tuple[int, ...]):
        if k < 0:
            out.add(GordonSequence(M, L, f))
            if len(out) > cap:
                raise EnumerationTooLarge(f"orbit exceeds the state cap {cap}")
            return
        t, x = m.particles[k]
        place(k - 1, f)
        # trailing units of a boundary-compressed particle sit at x+1 already
        r0 = t - f[x - M] if x + 1 - M < len(f) else 0
        for g in motion_configs(f, x - M, r0, nu):
            place(k - 1, g)

    place(len(m.particles) - 1, m.sequence.f)
    return out


def orbits_by_content(
    M: int, L: int, s: int, b: int, nu: int
) -> dict[tuple[int, ...], set[GordonSequence]]:
    """Orbits of all contents whose minimal path fits in the window."""
    from .bressoud import iter_contents

    out = {}
    for n in iter_contents(nu, L - M):
        mp = minimal_path(M, L, s, b, nu, n)
        if mp is not None:
            out[n] = orbit_generate(mp, nu)
    return out
