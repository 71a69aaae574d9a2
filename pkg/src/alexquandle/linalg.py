"""Row reduction over Lambda = Z[t, t^-1] with the restricted elementary operations.

Only three operations are used: swapping two rows, multiplying a row by a
nonzero polynomial, and adding a polynomial multiple of one row to another.
Every multiplier is recorded so that solution equivalence over a quotient
Lambda/(f) can be certified afterwards (it holds when each multiplier is
coprime to f).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .errors import InconsistentAssignment, InternalError, NotSquare, ZeroModulus
from .laurent import (
    ONE,
    ZERO,
    LaurentPoly,
    lp_coprime,
    lp_divide_exact,
    lp_gcd,
)
from .matrix import LambdaMatrix
from .quotient import divides, reduce_mod

__all__ = [
    "EchelonResult",
    "QuotientRankReport",
    "echelonize",
    "det_bareiss",
    "det_cofactor",
    "corner_reduce",
    "quotient_rank_report",
    "solve_with_free_vars",
    "kernel_basis",
    "rank",
]


def _exact(g: LaurentPoly, f: LaurentPoly) -> LaurentPoly:
    q = lp_divide_exact(g, f)
    if q is None:
        raise InternalError(f"expected exact division of {g} by {f}")
    return q


def _pivot_key(x: LaurentPoly, i: int, modulus: Optional[LaurentPoly]):
    coprime_rank = 0
    if modulus is not None and not lp_coprime(x, modulus):
        coprime_rank = 1
    return (coprime_rank, x.span, abs(x.leading_coeff), i)


def det_bareiss(a: LambdaMatrix) -> LaurentPoly:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Each step replaces the trailing block by 2x2 minors against the pivot and
    divides exactly by the previous pivot, which is the classical consequence of
    det(B) = a11^(n-2) det(A) for the matrix B of those minors.
    """
    if not a.is_square:
        raise NotSquare(f"{a.rows}x{a.cols} matrix has no determinant")
    n = a.rows
    if n == 0:
        return ONE
    m = a.to_rows()
    sign = 1
    prev = ONE
    for k in range(n - 1):
        cands = [i for i in range(k, n) if m[i][k]]
        if not cands:
            return ZERO
        p = min(cands, key=lambda i: _pivot_key(m[i][k], i, None))
        if p != k:
            m[k], m[p] = m[p], m[k]
            sign = -sign
        piv = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * piv - m[i][k] * m[k][j]
                m[i][j] = _exact(num, prev) if prev != ONE else num
            m[i][k] = ZERO
        prev = piv
    d = m[n - 1][n - 1]
    return d if sign > 0 else -d


def det_cofactor(a: LambdaMatrix) -> LaurentPoly:
    """Laplace expansion along the first row; exponential time, for cross-checks only."""
    if not a.is_square:
        raise NotSquare(f"{a.rows}x{a.cols} matrix has no determinant")
    n = a.rows
    if n == 0:
        return ONE
    if n == 1:
        return a[0, 0]
    total = ZERO
    for j in range(n):
        x = a[0, j]
        if x:
            term = x * det_cofactor(a.minor(0, j))
            total = total + (term if j % 2 == 0 else -term)
    return total


def corner_reduce(a: LambdaMatrix, common_divisor: bool = False) -> LambdaMatrix:
    """The matrix of 2x2 minors against the top-left corner.

    b_ij = a11 * a_ij - a_i1 * a_1j for i, j >= 2, so det(B) = a11^(n-2) det(A).
    With ``common_divisor`` the first column is first divided by its gcd d,
    giving a11 det(B) = (a11/d)^(n-1) det(A).
    """
    if a.rows < 2 or a.cols < 2:
        raise ValueError("need at least a 2x2 matrix")
    a11 = a[0, 0]
    if a11.is_zero():
        raise ValueError("top-left entry must be nonzero")
    col = [a[i, 0] for i in range(a.rows)]
    if common_divisor:
        d = ZERO
        for x in col:
            if x:
                d = lp_gcd(d, x)
        col = [_exact(x, d) for x in col]
    rows = []
    for i in range(1, a.rows):
        rows.append([col[0] * a[i, j] - col[i] * a[0, j] for j in range(1, a.cols)])
    return LambdaMatrix.from_rows(rows)


@dataclass(frozen=True)
class EchelonResult:
    """Row-echelon form over Lambda plus the bookkeeping of how it was reached.

    ``column_divisors[k]`` is the gcd of the candidate entries in the k-th pivot
    column at the moment it was eliminated.
    """

    echelon: LambdaMatrix
    rank: int
    pivots: tuple[tuple[int, int], ...]
    multipliers: tuple[LaurentPoly, ...]
    column_divisors: tuple[LaurentPoly, ...] = ()
    modulus: Optional[LaurentPoly] = None

    @property
    def pivot_columns(self) -> tuple[int, ...]:
        return tuple(c for _, c in self.pivots)

    @property
    def free_columns(self) -> tuple[int, ...]:
        pc = set(self.pivot_columns)
        return tuple(c for c in range(self.echelon.cols) if c not in pc)

    def diagonal(self) -> list[LaurentPoly]:
        return [self.echelon[r, c] for r, c in self.pivots]


def echelonize(a: LambdaMatrix, modulus: Optional[LaurentPoly] = None) -> EchelonResult:
    """Row-echelon form using row swaps, nonzero row multiples and row additions.

    In each column the pivot is the candidate of least span, then least absolute
    leading coefficient. The column entries are divided by their gcd before
    elimination so each row update is ``(a/d) * row_i - (c_i/d) * row_pivot``
    and ``a/d`` is recorded as a multiplier.

    With ``modulus`` the reduction works towards an echelon over Lambda/(f):
    entries divisible by f count as zero and pivots coprime to f are preferred.
    """
    if modulus is not None and modulus.is_zero():
        raise ZeroModulus("the modulus must be nonzero")
    nrows, ncols = a.rows, a.cols
    m = a.to_rows()

    def tidy(row: list[LaurentPoly]) -> list[LaurentPoly]:
        if modulus is None:
            return row
        out = []
        for x in row:
            if x and divides(modulus, x):
                out.append(ZERO)
            elif x:
                out.append(reduce_mod(x, modulus))
            else:
                out.append(x)
        return out

    m = [tidy(r) for r in m]
    pivots: list[tuple[int, int]] = []
    multipliers: list[LaurentPoly] = []
    divisors: list[LaurentPoly] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        cands = [i for i in range(r, nrows) if m[i][c]]
        if not cands:
            continue
        p = min(cands, key=lambda i: _pivot_key(m[i][c], i, modulus))
        if p != r:
            m[r], m[p] = m[p], m[r]
            cands = [r if i == p else (p if i == r else i) for i in cands]
        d = ZERO
        for i in cands:
            d = lp_gcd(d, m[i][c])
        alpha = _exact(m[r][c], d)
        prow = m[r]
        for i in cands:
            if i == r:
                continue
            beta = _exact(m[i][c], d)
            new = [alpha * x - beta * y for x, y in zip(m[i], prow)]
            new[c] = ZERO
            m[i] = tidy(new)
            multipliers.append(alpha)
        pivots.append((r, c))
        divisors.append(d)
        r += 1
    ech = LambdaMatrix(nrows, ncols, tuple(x for row in m for x in row))
    return EchelonResult(ech, r, tuple(pivots), tuple(multipliers), tuple(divisors), modulus)


def rank(a: LambdaMatrix) -> int:
    return echelonize(a).rank


@dataclass(frozen=True)
class QuotientRankReport:
    rank_mod_f: int
    diagonal_gcds: tuple[tuple[int, LaurentPoly], ...]
    valid: bool
    zero_pivots: tuple[int, ...] = field(default=())


def quotient_rank_report(e: EchelonResult, f: LaurentPoly) -> QuotientRankReport:
    """Rank of the echelon over Lambda/(f) together with the pivot/modulus gcds.

    ``valid`` is true when every recorded multiplier is coprime to f, which is
    what makes the echelon's solution set over Lambda/(f) equal to the original's.
    """
    if f.is_zero():
        raise ZeroModulus("the modulus must be nonzero")
    gcds = []
    zero_pivots = []
    nonzero = 0
    for k, x in enumerate(e.diagonal()):
        gcds.append((k, lp_gcd(x, f)))
        if divides(f, x):
            zero_pivots.append(k)
        else:
            nonzero += 1
    valid = all(lp_coprime(alpha, f) for alpha in e.multipliers)
    return QuotientRankReport(nonzero, tuple(gcds), valid, tuple(zero_pivots))


def back_substitute(
    e: EchelonResult, x: list[LaurentPoly], pivots: Sequence[tuple[int, int]]
) -> list[LaurentPoly]:
    """Fill the pivot columns of ``x`` (bottom-up) so the given pivot rows vanish exactly.

    When a pivot does not divide its right-hand side, the whole vector is
    multiplied by pivot/gcd(pivot, rhs), which keeps every equation already solved.
    """
    x = list(x)
    ech = e.echelon
    for r, c in reversed(list(pivots)):
        b = ZERO
        for l in range(c + 1, ech.cols):
            if x[l] and ech[r, l]:
                b = b - ech[r, l] * x[l]
        a = ech[r, c]
        q = lp_divide_exact(b, a)
        if q is None:
            g = lp_gcd(a, b)
            scale = _exact(a, g)
            x = [scale * v for v in x]
            q = _exact(b, g)
        x[c] = q
    return x


def solve_with_free_vars(e: EchelonResult, assignments: Mapping[int, LaurentPoly]) -> list[LaurentPoly]:
    """A vector x with echelon @ x = 0, free columns set from ``assignments`` (others 0).

    The result may be a common nonzero multiple of the requested assignment,
    because inexact pivot divisions rescale the whole vector.
    """
    pcols = set(e.pivot_columns)
    for col in assignments:
        if col in pcols:
            raise InconsistentAssignment(f"column {col} is a pivot column")
        if not 0 <= col < e.echelon.cols:
            raise InconsistentAssignment(f"column {col} is out of range")
    x = [ZERO] * e.echelon.cols
    for col, val in assignments.items():
        x[col] = val
    return back_substitute(e, x, e.pivots)


def primitive_vector(v: Sequence[LaurentPoly]) -> list[LaurentPoly]:
    """Divide out the gcd of the nonzero entries and shift so the result is canonical."""
    g = ZERO
    for x in v:
        if x:
            g = lp_gcd(g, x)
    if g.is_zero():
        return list(v)
    out = [_exact(x, g) for x in v]
    lead = next(x for x in out if x)
    if lead.leading_coeff < 0:
        out = [-x for x in out]
    return out


def kernel_basis(a: LambdaMatrix) -> list[list[LaurentPoly]]:
    """One primitive kernel vector per free column of the echelon form."""
    e = echelonize(a)
    return [primitive_vector(solve_with_free_vars(e, {c: ONE})) for c in e.free_columns]
