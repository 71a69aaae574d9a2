"""Unreduced and reduced Burau matrices of braid words, and the reduced Alexander polynomial."""

from __future__ import annotations

from functools import lru_cache

from .braid import BraidWord
from .errors import IndexOutOfRange, InternalError
from .laurent import ONE, T, T_INV, ZERO, LaurentPoly, lp_divide_exact, lp_normalize
from .linalg import det_bareiss
from .matrix import LambdaMatrix, identity

__all__ = [
    "burau_generator",
    "burau_unreduced",
    "reduced_generator",
    "burau_reduced",
    "reduced_alexander",
    "alexander_determinant",
    "strand_sum",
]

_NEG_T = -T


def _embed(n: int, at: int, block: list[list[LaurentPoly]]) -> LambdaMatrix:
    """Identity of size n with ``block`` placed on the diagonal starting at index ``at``."""
    rows = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    for r, brow in enumerate(block):
        for c, x in enumerate(brow):
            rows[at + r][at + c] = x
    return LambdaMatrix.from_rows(rows)


def _check_index(i: int, n: int) -> None:
    if i == 0 or abs(i) > n - 1:
        raise IndexOutOfRange(f"generator {i} is out of range for B_{n}")


def burau_generator(i: int, n: int) -> LambdaMatrix:
    """Unreduced Burau matrix of sigma_i (i > 0) or its inverse (i < 0) in B_n."""
    _check_index(i, n)
    if i > 0:
        block = [[ZERO, ONE], [T, ONE - T]]
    else:
        block = [[ONE - T_INV, T_INV], [ONE, ZERO]]
    return _embed(n, abs(i) - 1, block)


def _product(mats: list[LambdaMatrix], n: int) -> LambdaMatrix:
    out = identity(n)
    for m in mats:
        out = out @ m
    return out


def burau_unreduced(w: BraidWord) -> LambdaMatrix:
    """phi(w) as the product of generator matrices in word order.

    Acting on a color vector, the rightmost factor (last letter) acts first, so
    colors propagate from the end of the word towards its beginning.
    """
    n = w.strands
    return _product([burau_generator(k, n) for k in w.letters], n)


def _inverse_unit_det(m: LambdaMatrix) -> LambdaMatrix:
    """Exact inverse of a 1x1, 2x2 or 3x3 block whose determinant is a unit."""
    d = det_bareiss(m)
    dinv = d ** -1
    n = m.rows
    if n == 1:
        return LambdaMatrix.from_rows([[dinv]])
    cof = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            c = det_bareiss(m.minor(i, j))
            cof[j][i] = dinv * c if (i + j) % 2 == 0 else -(dinv * c)
    return LambdaMatrix.from_rows(cof)


@lru_cache(maxsize=None)
def reduced_generator(i: int, n: int) -> LambdaMatrix:
    """(n-1)x(n-1) reduced Burau matrix of sigma_i or its inverse."""
    _check_index(i, n)
    k = abs(i)
    m = n - 1
    if m == 1:
        pos = _embed(1, 0, [[_NEG_T]])
    elif k == 1:
        pos = _embed(m, 0, [[_NEG_T, ZERO], [ONE, ONE]])
    elif k == n - 1:
        pos = _embed(m, m - 2, [[ONE, T], [ZERO, _NEG_T]])
    else:
        pos = _embed(m, k - 2, [[ONE, T, ZERO], [ZERO, _NEG_T, ZERO], [ZERO, ONE, ONE]])
    if i > 0:
        return pos
    return _inverse_unit_det(pos)


def burau_reduced(w: BraidWord) -> LambdaMatrix:
    """Reduced Burau matrix, multiplied in the same order as :func:`burau_unreduced`."""
    n = w.strands
    return _product([reduced_generator(k, n) for k in w.letters], n - 1)


def strand_sum(n: int) -> LaurentPoly:
    """1 + t + ... + t^(n-1)."""
    return LaurentPoly.from_coeffs([1] * n)


def alexander_determinant(w: BraidWord) -> LaurentPoly:
    """det(reduced Burau - I)."""
    r = burau_reduced(w)
    return det_bareiss(r - identity(r.rows))


def reduced_alexander(w: BraidWord) -> LaurentPoly:
    """Reduced Alexander polynomial of the closure, normalized to min exponent 0 and positive leading coefficient."""
    d = alexander_determinant(w)
    if d.is_zero():
        return ZERO
    q = lp_divide_exact(d, strand_sum(w.strands))
    if q is None:
        raise InternalError(f"1 + ... + t^{w.strands - 1} does not divide {d}")
    return lp_normalize(q)
