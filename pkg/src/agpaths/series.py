"""Exact integer Laurent polynomials and truncated power series in q.

Coefficients are Python ints, so all arithmetic is exact by construction
(arbitrary precision, no silent wraparound).  Values are immutable after
construction and safe to share between workers.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    """A Laurent polynomial in q with integer coefficients.

    Stored as a mapping exponent -> coefficient with zero coefficients
    stripped, so equality of polynomials is equality of the stored supports.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        support: dict[int, int] = {}
        for exp, coeff in items:
            if coeff:
                support[exp] = support.get(exp, 0) + coeff
                if not support[exp]:
                    del support[exp]
        object.__setattr__(self, "_terms", support)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def items(self):
        return self._terms.items()

    def min_exp(self) -> int:
        """Lowest exponent with nonzero coefficient.  Undefined for zero."""
        if not self._terms:
            raise ValueError("zero polynomial has no support")
        return min(self._terms)

    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no support")
        return max(self._terms)

    def eval_at_one(self) -> int:
        return sum(self._terms.values())

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        acc = dict(self._terms)
        for exp, coeff in other._terms.items():
            acc[exp] = acc.get(exp, 0) + coeff
        return LaurentPoly(acc)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        acc = dict(self._terms)
        for exp, coeff in other._terms.items():
            acc[exp] = acc.get(exp, 0) - coeff
        return LaurentPoly(acc)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not self._terms or not other._terms:
            return ZERO
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPoly(acc)

    def scale(self, factor: int) -> "LaurentPoly":
        return LaurentPoly({e: factor * c for e, c in self._terms.items()})

    def shift(self, exp: int) -> "LaurentPoly":
        """Multiply by q**exp."""
        return LaurentPoly({e + exp: c for e, c in self._terms.items()})

    def substitute_inverse_q(self) -> "LaurentPoly":
        """Replace q by 1/q: negate every exponent.  An involution."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def divexact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ValueError if the division leaves a remainder."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return ZERO
        # Divide ascending from the lowest exponents.
        rem = dict(self._terms)
        dlo = divisor.min_exp()
        dlead = divisor.coeff(dlo)
        out: dict[int, int] = {}
        while rem:
            rlo = min(rem)
            c, r = divmod(rem[rlo], dlead)
            if r:
                raise ValueError("not an exact division")
            e = rlo - dlo
            out[e] = c
            for de, dc in divisor.items():
                k = e + de
                v = rem.get(k, 0) - c * dc
                if v:
                    rem[k] = v
                elif k in rem:
                    del rem[k]
        return LaurentPoly(out)

    # -- comparisons and hashing --------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(
                self, "_hash", hash(tuple(sorted(self._terms.items())))
            )
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        return format_poly(self)


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})


def q_power(exp: int, coeff: int = 1) -> LaurentPoly:
    return LaurentPoly({exp: coeff})


def format_poly(p: LaurentPoly) -> str:
    """Render with terms in increasing exponent, e.g. '1 + q + 2q^2 - q^3'."""
    if p.is_zero():
        return "0"
    pieces = []
    for exp, coeff in sorted(p.items()):
        mag = abs(coeff)
        if exp == 0:
            body = str(mag)
        else:
            var = "q" if exp == 1 else f"q^{exp}"
            body = var if mag == 1 else f"{mag}{var}"
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(pieces)


class TruncatedSeries:
    """Coefficients of q^0..q^Q of a formal power series, with order Q.

    Arithmetic propagates order = min of the operand orders; no coefficient
    above the known-valid order is ever fabricated.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[int], order: int):
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        cs = list(coeffs)
        if len(cs) < order + 1:
            cs.extend([0] * (order + 1 - len(cs)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs[: order + 1]))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def from_laurent(cls, p: LaurentPoly, order: int) -> "TruncatedSeries":
        if not p.is_zero() and p.min_exp() < 0:
            raise ValueError("polynomial with negative support is not a power series")
        cs = [0] * (order + 1)
        for exp, coeff in p.items():
            if exp <= order:
                cs[exp] = coeff
        return cls(cs, order)

    def to_laurent(self) -> LaurentPoly:
        return LaurentPoly({e: c for e, c in enumerate(self.coeffs)})

    def coeff(self, exp: int) -> int:
        if exp < 0:
            return 0
        if exp > self.order:
            raise IndexError(f"exponent {exp} above truncation order {self.order}")
        return self.coeffs[exp]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        q = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(q + 1)], q
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        q = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[i] - other.coeffs[i] for i in range(q + 1)], q
        )

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        q = min(self.order, other.order)
        out = [0] * (q + 1)
        for i, a in enumerate(self.coeffs[: q + 1]):
            if a:
                for j, b in enumerate(other.coeffs[: q + 1 - i]):
                    if b:
                        out[i + j] += a * b
        return TruncatedSeries(out, q)

    def mul_poly(self, p: LaurentPoly) -> "TruncatedSeries":
        """Multiply by a Laurent polynomial.

        The result order shrinks by |min exponent| when p has negative
        support, and the product must provably have non-negative support;
        any nonzero coefficient at a negative exponent raises.
        """
        if p.is_zero():
            return TruncatedSeries([], self.order)
        lo = min(0, p.min_exp())
        q = self.order + lo
        if q < 0:
            raise ValueError("truncation order too small for this multiplication")
        out = [0] * (q - lo + 1)  # exponents lo..q
        for exp, coeff in p.items():
            for i, a in enumerate(self.coeffs):
                e = exp + i
                if e <= q:
                    out[e - lo] += coeff * a
        for e in range(lo, 0):
            if out[e - lo]:
                raise ValueError("product has negative support")
        return TruncatedSeries(out[-lo:], q)

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse up to the same order; constant term must be a unit."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ValueError("series is not invertible: constant term is not a unit")
        q = self.order
        out = [0] * (q + 1)
        out[0] = c0
        for n in range(1, q + 1):
            s = sum(self.coeffs[k] * out[n - k] for k in range(1, n + 1))
            out[n] = -c0 * s
        return TruncatedSeries(out, q)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self.order}, {format_poly(self.to_laurent())})"


def equal_to_order(
    a: TruncatedSeries, b: TruncatedSeries, order: int
) -> tuple[bool, int | None]:
    """Compare coefficients for exponents 0..order.

    Returns (True, None) on agreement, else (False, first mismatching exponent).
    """
    if order > a.order or order > b.order:
        raise ValueError("comparison order exceeds an operand's truncation order")
    for e in range(order + 1):
        if a.coeffs[e] != b.coeffs[e]:
            return False, e
    return True, None
