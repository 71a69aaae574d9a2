"""Exact arithmetic in the Laurent polynomial ring Z[t, t^-1].

Polynomials are immutable and canonical: the term tuple is sorted by
exponent and never holds a zero coefficient, so structural equality is
ring equality.

>>> a = parse_poly("1 - t + t^2")
>>> print(a * parse_poly("3t^2 - 5t + 3"))
3*t^4 - 8*t^3 + 11*t^2 - 8*t + 3
>>> print(lp_gcd(a, parse_poly("t^3 + 1")))
t^2 - t + 1
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional, Union

from .errors import BothZero, NonInvertibleT, ParseError, ZeroDivisor

__all__ = [
    "LaurentPoly",
    "ZERO",
    "ONE",
    "T",
    "T_INV",
    "lp_make",
    "lp_add",
    "lp_mul",
    "lp_neg",
    "lp_is_unit",
    "lp_divide_exact",
    "lp_gcd",
    "lp_coprime",
    "lp_eval_mod",
    "lp_normalize",
    "parse_poly",
    "format_poly",
    "as_poly",
]


@dataclass(frozen=True)
class LaurentPoly:
    """An element of Z[t, t^-1] as a sorted tuple of ``(exponent, coefficient)``."""

    terms: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> "LaurentPoly":
        return cls(tuple(sorted((e, c) for e, c in d.items() if c != 0)))

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls(((0, c),)) if c else cls()

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls(((exp, coeff),)) if coeff else cls()

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], shift: int = 0) -> "LaurentPoly":
        """Build from ascending coefficients starting at exponent ``shift``."""
        return cls(tuple((shift + i, c) for i, c in enumerate(coeffs) if c))

    # -- inspection -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def min_exp(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no minimum exponent")
        return self.terms[0][0]

    @property
    def max_exp(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no maximum exponent")
        return self.terms[-1][0]

    @property
    def span(self) -> int:
        """max exponent minus min exponent; undefined for zero."""
        return self.max_exp - self.min_exp

    @property
    def leading_coeff(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.terms[-1][1]

    @property
    def trailing_coeff(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no trailing coefficient")
        return self.terms[0][1]

    def coeff(self, exp: int) -> int:
        for e, c in self.terms:
            if e == exp:
                return c
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def content(self) -> int:
        g = 0
        for _, c in self.terms:
            g = gcd(g, c)
        return g

    def dense(self) -> list[int]:
        """Ascending coefficient list from ``min_exp`` to ``max_exp``."""
        if not self.terms:
            return []
        lo = self.terms[0][0]
        out = [0] * (self.terms[-1][0] - lo + 1)
        for e, c in self.terms:
            out[e - lo] = c
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by the unit t^k."""
        if k == 0:
            return self
        return LaurentPoly(tuple((e + k, c) for e, c in self.terms))

    def scale(self, c: int) -> "LaurentPoly":
        if c == 0:
            return ZERO
        return LaurentPoly(tuple((e, c * v) for e, v in self.terms))

    # -- ring operations ------------------------------------------------

    def __add__(self, other: "PolyLike") -> "LaurentPoly":
        return lp_add(self, as_poly(other))

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return lp_neg(self)

    def __sub__(self, other: "PolyLike") -> "LaurentPoly":
        return lp_add(self, lp_neg(as_poly(other)))

    def __rsub__(self, other: "PolyLike") -> "LaurentPoly":
        return lp_add(as_poly(other), lp_neg(self))

    def __mul__(self, other: "PolyLike") -> "LaurentPoly":
        return lp_mul(self, as_poly(other))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not lp_is_unit(self):
                raise ZeroDivisor(f"{self} is not a unit")
            (e, c), = self.terms
            return LaurentPoly.monomial(-e * -k, c ** -k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({format_poly(self)!r})"


PolyLike = Union[LaurentPoly, int, str]

ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
T = LaurentPoly.monomial(1)
T_INV = LaurentPoly.monomial(-1)


def as_poly(x: PolyLike) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a polynomial")
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    if isinstance(x, str):
        return parse_poly(x)
    raise TypeError(f"cannot convert {type(x).__name__} to LaurentPoly")


def lp_make(pairs: Iterable[tuple[int, int]]) -> LaurentPoly:
    """Canonical polynomial from ``(exponent, coefficient)`` pairs; duplicates are summed."""
    acc: dict[int, int] = {}
    for e, c in pairs:
        acc[e] = acc.get(e, 0) + c
    return LaurentPoly.from_dict(acc)


def lp_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if not a.terms:
        return b
    if not b.terms:
        return a
    acc = dict(a.terms)
    for e, c in b.terms:
        acc[e] = acc.get(e, 0) + c
    return LaurentPoly.from_dict(acc)


def lp_neg(a: LaurentPoly) -> LaurentPoly:
    return LaurentPoly(tuple((e, -c) for e, c in a.terms))


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if not a.terms or not b.terms:
        return ZERO
    acc: dict[int, int] = {}
    for e1, c1 in a.terms:
        for e2, c2 in b.terms:
            e = e1 + e2
            acc[e] = acc.get(e, 0) + c1 * c2
    return LaurentPoly.from_dict(acc)


def lp_is_unit(a: LaurentPoly) -> bool:
    return len(a.terms) == 1 and a.terms[0][1] in (1, -1)


def lp_normalize(a: LaurentPoly) -> LaurentPoly:
    """Unit-normalize: minimum exponent 0 and positive leading coefficient."""
    if not a.terms:
        return a
    a = a.shift(-a.min_exp)
    return a if a.leading_coeff > 0 else lp_neg(a)


# -- dense Z[t] helpers (ascending coefficient lists, no trailing zeros) --


def _trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _divmod_exact_z(g: list[int], f: list[int]) -> Optional[list[int]]:
    """Exact quotient g / f in Z[t], or None when f does not divide g."""
    g = list(g)
    df = len(f) - 1
    lc = f[-1]
    if len(g) - 1 < df:
        return None if any(g) else []
    q = [0] * (len(g) - df)
    for k in range(len(g) - 1, df - 1, -1):
        c = g[k]
        if c == 0:
            continue
        qc, r = divmod(c, lc)
        if r:
            return None
        q[k - df] = qc
        for i, fc in enumerate(f):
            g[k - df + i] -= qc * fc
    if any(g[:df]):
        return None
    return q


def _content(p: list[int]) -> int:
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def _primitive(p: list[int]) -> list[int]:
    c = _content(p)
    if p[-1] < 0:
        c = -c
    return [x // c for x in p]


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b over Z."""
    r = list(a)
    db = len(b) - 1
    lc = b[-1]
    while len(r) - 1 >= db and r:
        k = len(r) - 1
        c = r[-1]
        r = [lc * x for x in r]
        for i, bc in enumerate(b):
            r[k - db + i] -= c * bc
        _trim(r)
    return r


def _gcd_z(a: list[int], b: list[int]) -> list[int]:
    """gcd in Z[t] of two nonzero polynomials via the primitive remainder sequence."""
    cont = gcd(_content(a), _content(b))
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, (_primitive(r) if r else [])
    return [cont * x for x in a]


def _to_z(a: LaurentPoly) -> list[int]:
    return a.dense()


def lp_divide_exact(g: LaurentPoly, f: LaurentPoly) -> Optional[LaurentPoly]:
    """Return h with g = f*h in the Laurent ring, or None if f does not divide g."""
    if not f.terms:
        raise ZeroDivisor("division by the zero polynomial")
    if not g.terms:
        return ZERO
    q = _divmod_exact_z(_to_z(g), _to_z(f))
    if q is None:
        return None
    return LaurentPoly.from_coeffs(q, g.min_exp - f.min_exp)


def lp_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """A gcd with minimum exponent 0 and positive leading coefficient."""
    if not a.terms and not b.terms:
        raise BothZero("gcd(0, 0) is undefined")
    if not a.terms:
        return lp_normalize(b)
    if not b.terms:
        return lp_normalize(a)
    g = _gcd_z(_to_z(a), _to_z(b))
    return lp_normalize(LaurentPoly.from_coeffs(g))


def lp_coprime(a: LaurentPoly, f: LaurentPoly) -> bool:
    if not f.terms:
        raise ZeroDivisor("coprimality against the zero polynomial")
    return lp_is_unit(lp_gcd(a, f))


def lp_eval_mod(a: LaurentPoly, tval: int, m: int) -> int:
    """Value of a at t = tval in Z/m; negative powers use the inverse of tval."""
    if m < 1:
        raise ValueError("modulus must be positive")
    if gcd(tval, m) != 1:
        raise NonInvertibleT(f"t={tval} is not invertible mod {m}")
    inv = pow(tval, -1, m) if m > 1 else 0
    total = 0
    for e, c in a.terms:
        base = tval if e >= 0 else inv
        total += c * pow(base, abs(e), m)
    return total % m


# -- text form ------------------------------------------------------------


def format_poly(a: LaurentPoly) -> str:
    """Descending exponents with explicit signs, e.g. ``3*t^2 - 5*t + 3``."""
    if not a.terms:
        return "0"
    parts = []
    for e, c in reversed(a.terms):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "t" if e == 1 else f"t^{e}"
            body = var if mag == 1 else f"{mag}*{var}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_TOKEN = re.compile(r"\s*(?:(\d+)|(t)|(\^)|([-+*()]))")


def _tokenize(text: str) -> list[str]:
    pos = 0
    tokens: list[str] = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r} at {pos} in {text!r}")
        tokens.append(m.group(m.lastindex))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return tokens


class _PolyParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text.replace("−", "-"))
        self.i = 0

    def peek(self) -> Optional[str]:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError(f"unexpected end of input in {self.text!r}")
        self.i += 1
        return tok

    def parse(self) -> LaurentPoly:
        if not self.tokens:
            raise ParseError("empty polynomial")
        out = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input {self.peek()!r} in {self.text!r}")
        return out

    def expr(self) -> LaurentPoly:
        out = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self) -> LaurentPoly:
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        out = self.power()
        while True:
            tok = self.peek()
            if tok == "*":
                self.take()
                out = out * self.power()
            elif tok is not None and (tok.isdigit() or tok in ("t", "(")):
                out = out * self.power()
            else:
                break
        return out if sign > 0 else -out

    def power(self) -> LaurentPoly:
        base = self.atom()
        if self.peek() != "^":
            return base
        self.take()
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        tok = self.take()
        if not tok.isdigit():
            raise ParseError(f"exponent must be an integer in {self.text!r}")
        k = sign * int(tok)
        if k < 0 and not lp_is_unit(base):
            raise ParseError(f"negative power of a non-unit in {self.text!r}")
        return base ** k

    def atom(self) -> LaurentPoly:
        tok = self.take()
        if tok.isdigit():
            return LaurentPoly.constant(int(tok))
        if tok == "t":
            return T
        if tok == "(":
            inner = self.expr()
            if self.take() != ")":
                raise ParseError(f"expected ')' in {self.text!r}")
            return inner
        raise ParseError(f"unexpected token {tok!r} in {self.text!r}")


def parse_poly(text: str) -> LaurentPoly:
    """Parse ASCII text such as ``3*t^2 - 5*t + 3``, ``t^-1 + 1`` or ``(t-1)(3t^2-5t+3)``."""
    return _PolyParser(text).parse()
