"""Equality and display representatives in the quotient ring Lambda/(f)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import UnitModulus, ZeroModulus
from .laurent import ZERO, LaurentPoly, PolyLike, as_poly, lp_divide_exact, lp_is_unit, lp_normalize

__all__ = ["QuotientCtx", "divides", "q_equal", "q_reduce", "q_is_zero", "q_is_trivial_vector", "reduce_mod"]


def divides(f: LaurentPoly, g: LaurentPoly) -> bool:
    return lp_divide_exact(g, f) is not None


def reduce_mod(g: LaurentPoly, f: LaurentPoly) -> LaurentPoly:
    """Representative of g modulo f obtained by cancelling extreme terms with multiples of f.

    Negative exponents are cleared from below while the trailing coefficient of f
    divides, then the top is cancelled while the leading coefficient of f divides.
    The result has span below span(f) whenever f has leading and trailing coefficient +-1.
    """
    if not g.terms or not f.terms:
        return g
    if lp_is_unit(f):
        return ZERO
    fd = f.shift(-f.min_exp)
    deg_f = fd.max_exp
    lc, tc = fd.leading_coeff, fd.trailing_coeff
    cur = g
    while cur.terms and cur.min_exp < 0:
        low_e, low_c = cur.terms[0]
        q, r = divmod(low_c, tc)
        if r:
            break
        cur = cur - fd.shift(low_e).scale(q)
    while cur.terms and cur.max_exp >= deg_f:
        top_e, top_c = cur.terms[-1]
        q, r = divmod(top_c, lc)
        if r:
            break
        cur = cur - fd.shift(top_e - deg_f).scale(q)
    return cur


@dataclass(frozen=True)
class QuotientCtx:
    """The ring Lambda/(modulus) for a nonzero non-unit modulus (stored unit-normalized)."""

    modulus: LaurentPoly

    def __post_init__(self) -> None:
        f = as_poly(self.modulus)
        if f.is_zero():
            raise ZeroModulus("the modulus must be nonzero")
        if lp_is_unit(f):
            raise UnitModulus(f"{f} is a unit, the quotient ring is trivial")
        object.__setattr__(self, "modulus", lp_normalize(f))

    @classmethod
    def of(cls, f: PolyLike) -> "QuotientCtx":
        return cls(as_poly(f))

    def equal(self, g1: PolyLike, g2: PolyLike) -> bool:
        return q_equal(self, as_poly(g1), as_poly(g2))

    def is_zero(self, g: PolyLike) -> bool:
        return divides(self.modulus, as_poly(g))

    def reduce(self, g: PolyLike) -> LaurentPoly:
        return q_reduce(self, as_poly(g))


def q_equal(ctx: QuotientCtx, g1: LaurentPoly, g2: LaurentPoly) -> bool:
    return divides(ctx.modulus, g1 - g2)


def q_is_zero(ctx: QuotientCtx, g: LaurentPoly) -> bool:
    return divides(ctx.modulus, g)


def q_reduce(ctx: QuotientCtx, g: LaurentPoly) -> LaurentPoly:
    """Best-effort display representative; use :func:`q_equal` for equality."""
    return reduce_mod(g, ctx.modulus)


def q_is_trivial_vector(ctx: QuotientCtx, v: Sequence[LaurentPoly]) -> bool:
    """True when all entries are congruent modulo the modulus (a constant coloring)."""
    if not v:
        raise ValueError("empty vector")
    first = v[0]
    return all(q_equal(ctx, first, x) for x in v[1:])
