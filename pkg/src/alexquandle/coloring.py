"""Colorings of braid closures by Alexander quandles.

A coloring assigns a quandle element to each strand end of a braid. Across a
positive crossing sigma_i the pair at positions (i, i+1) becomes
``(a_{i+1}, t*a_i + (1-t)*a_{i+1})``. The closure is colored when the colors
come back unchanged after passing through the whole word. Letters are
traversed from last to first, which makes the propagation agree with
``burau_unreduced(w) @ colors``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence, Union

import numpy as np

from .braid import BraidWord
from .burau import burau_unreduced, reduced_alexander
from .errors import (
    BudgetExceeded,
    InternalError,
    LengthMismatch,
    NonInvertibleT,
    NotADivisor,
    UnitModulus,
    WrongVerdict,
    ZeroModulus,
)
from .laurent import (
    ONE,
    T,
    T_INV,
    ZERO,
    LaurentPoly,
    lp_coprime,
    lp_divide_exact,
    lp_eval_mod,
    lp_gcd,
    lp_is_unit,
    lp_normalize,
)
from .linalg import (
    back_substitute,
    echelonize,
    kernel_basis,
    quotient_rank_report,
)
from .matrix import LambdaMatrix, identity
from .quotient import QuotientCtx, q_equal, q_is_trivial_vector, q_reduce, reduce_mod

__all__ = [
    "Verdict",
    "Classification",
    "Coloring",
    "FiniteQuandle",
    "ColoringSummary",
    "classify",
    "coloring_matrix",
    "propagate",
    "verify_coloring",
    "kernel_basis_zero_delta",
    "construct_coloring",
    "coloring_space_summary",
    "count_colorings_finite",
    "count_colorings_kernel",
    "proportional_mod",
]

DEFAULT_BUDGET = 10**7


class Verdict(enum.Enum):
    ZERO_DELTA = "ZeroDelta"
    UNIT_DELTA = "UnitDelta"
    NON_UNIT_DELTA = "NonUnitDelta"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Classification:
    delta: LaurentPoly
    verdict: Verdict


@dataclass(frozen=True)
class Coloring:
    """Top-strand colors; ``ring`` is None for colorings by Lambda itself."""

    values: tuple[LaurentPoly, ...]
    ring: Optional[QuotientCtx] = None

    @property
    def strands(self) -> int:
        return len(self.values)

    def is_trivial(self) -> bool:
        if self.ring is None:
            return all(v == self.values[0] for v in self.values)
        return q_is_trivial_vector(self.ring, self.values)


@dataclass(frozen=True)
class FiniteQuandle:
    """The Alexander quandle Z/m with t acting as multiplication by ``a``."""

    m: int
    a: int

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError(f"modulus must be at least 2, got {self.m}")
        if gcd(self.a, self.m) != 1:
            raise NonInvertibleT(f"t={self.a} is not invertible mod {self.m}")

    def op(self, x: int, y: int) -> int:
        return (self.a * x + (1 - self.a) * y) % self.m


def classify(w: BraidWord) -> Classification:
    delta = reduced_alexander(w)
    if delta.is_zero():
        verdict = Verdict.ZERO_DELTA
    elif lp_is_unit(delta):
        verdict = Verdict.UNIT_DELTA
    else:
        verdict = Verdict.NON_UNIT_DELTA
    return Classification(delta, verdict)


def coloring_matrix(w: BraidWord) -> LambdaMatrix:
    """phi(w) - I, whose kernel is the module of colorings of the closure."""
    return burau_unreduced(w) - identity(w.strands)


def propagate(w: BraidWord, values: Sequence[LaurentPoly], modulus: Optional[LaurentPoly] = None):
    """Push colors through every crossing with the quandle rule; returns the far-end colors."""
    a = list(values)
    if len(a) != w.strands:
        raise LengthMismatch(f"{len(a)} colors for {w.strands} strands")
    one_minus_t = ONE - T
    one_minus_tinv = ONE - T_INV
    for k in reversed(w.letters):
        i = abs(k) - 1
        x, y = a[i], a[i + 1]
        if k > 0:
            a[i], a[i + 1] = y, T * x + one_minus_t * y
        else:
            a[i], a[i + 1] = T_INV * y + one_minus_tinv * x, x
        if modulus is not None:
            a[i] = reduce_mod(a[i], modulus)
            a[i + 1] = reduce_mod(a[i + 1], modulus)
    return a


def verify_coloring(w: BraidWord, c: Coloring) -> bool:
    if c.strands != w.strands:
        raise LengthMismatch(f"{c.strands} colors for {w.strands} strands")
    if c.ring is None:
        return propagate(w, c.values) == list(c.values)
    f = c.ring.modulus
    out = propagate(w, c.values, f)
    return all(q_equal(c.ring, x, y) for x, y in zip(out, c.values))


def _independent(vectors: list[list[LaurentPoly]]) -> bool:
    if not vectors:
        return True
    return echelonize(LambdaMatrix.from_rows(vectors)).rank == len(vectors)


def kernel_basis_zero_delta(w: BraidWord) -> list[list[LaurentPoly]]:
    """Independent Lambda-solutions of (phi(w) - I) x = 0, starting with the all-ones vector."""
    cl = classify(w)
    if cl.verdict is not Verdict.ZERO_DELTA:
        raise WrongVerdict(f"Alexander polynomial is {cl.delta}, not zero")
    out = [[ONE] * w.strands]
    for v in kernel_basis(coloring_matrix(w)):
        if _independent(out + [v]):
            out.append(v)
    if len(out) < 2:
        raise InternalError("vanishing Alexander polynomial but kernel has rank one")
    return out


def _solve_mod(a: LambdaMatrix, f: LaurentPoly) -> list[LaurentPoly]:
    """A solution of a @ x = 0 mod f with last entry 0 and some entry nonzero mod f.

    Columns are eliminated with pivots coprime to f while possible. At the first
    column without one, every remaining entry in it is divisible by
    g = gcd(f, column gcd); setting that unknown to f/g and the later ones to 0
    solves the untouched rows, and the rows above are back-substituted exactly.
    If g is a unit, f is split by a proper factor p and the answer over
    Lambda/(p) is lifted by multiplying with f/p.
    """
    e = echelonize(a, modulus=f)
    by_col = {c: (k, r) for k, (r, c) in enumerate(e.pivots)}
    ncols = a.cols
    target = None
    for c in range(ncols - 1):
        if c not in by_col:
            target = (c, None)
            break
        k, r = by_col[c]
        if not lp_coprime(e.echelon[r, c], f):
            target = (c, k)
            break
    if target is None:
        raise InternalError(f"no column is degenerate modulo {f}; does it divide the Alexander polynomial?")
    c, k = target
    if k is None:
        g = lp_normalize(f)
        pivot_entry = None
    else:
        g = lp_gcd(f, e.column_divisors[k])
        pivot_entry = e.echelon[e.pivots[k]]
    if not lp_is_unit(g):
        x = [ZERO] * ncols
        x[c] = lp_divide_exact(f, g)
        earlier = [(r, cc) for r, cc in e.pivots if cc < c]
        return back_substitute(e, x, earlier)
    p = lp_gcd(f, pivot_entry)
    cofactor = lp_divide_exact(f, p)
    if lp_is_unit(p) or lp_is_unit(cofactor):
        raise InternalError(f"expected a proper factor of {f} from pivot {pivot_entry}")
    return [cofactor * v for v in _solve_mod(a, p)]


def construct_coloring(w: BraidWord, f: Union[LaurentPoly, None] = None) -> Coloring:
    """A non-trivial coloring of the closure by Lambda/(f) for a non-unit divisor f of Delta.

    ``f`` defaults to the Alexander polynomial itself.
    """
    cl = classify(w)
    if cl.verdict is not Verdict.NON_UNIT_DELTA:
        raise WrongVerdict(f"needs a non-unit nonzero Alexander polynomial, got {cl.delta}")
    if f is None:
        f = cl.delta
    if f.is_zero():
        raise ZeroModulus("the modulus must be nonzero")
    if lp_is_unit(f):
        raise UnitModulus(f"{f} is a unit")
    if lp_divide_exact(cl.delta, f) is None:
        raise NotADivisor(f"{f} does not divide {cl.delta}")
    ctx = QuotientCtx(f)
    x = _solve_mod(coloring_matrix(w), ctx.modulus)
    g = ZERO
    for v in x:
        g = lp_gcd(g, v) if v else g
    if g and lp_coprime(g, ctx.modulus):
        x = [lp_divide_exact(v, g) for v in x]
    x = [q_reduce(ctx, v) for v in x]
    col = Coloring(tuple(x), ctx)
    if col.is_trivial() or not verify_coloring(w, col):
        raise InternalError(f"constructed vector {x} is not a non-trivial coloring mod {f}")
    return col


@dataclass(frozen=True)
class ColoringSummary:
    rank_mod_f: int
    generated_by_one: bool
    multiplicity_bounds_ok: Optional[bool]
    valid: bool
    strands: int


def coloring_space_summary(w: BraidWord, f: LaurentPoly, multiplicity: Optional[int] = None) -> ColoringSummary:
    """Rank of phi(w) - I over Lambda/(f) and what it says about the coloring module.

    ``multiplicity`` is the multiplicity of f as an irreducible factor of Delta,
    when the caller knows it; the bound n-k-1 <= rank <= n-2 is then reported.
    """
    if f.is_zero():
        raise ZeroModulus("the modulus must be nonzero")
    if lp_is_unit(f):
        raise UnitModulus(f"{f} is a unit")
    e = echelonize(coloring_matrix(w), modulus=f)
    rep = quotient_rank_report(e, f)
    n = w.strands
    r = rep.rank_mod_f
    bounds = None
    if multiplicity is not None:
        bounds = n - multiplicity - 1 <= r <= n - 2
    return ColoringSummary(r, r == n - 2, bounds, rep.valid, n)


def proportional_mod(ctx: QuotientCtx, x: Sequence[LaurentPoly], e: Sequence[LaurentPoly]) -> bool:
    """Whether x lies in the span of e and the all-ones vector modulo the module-rank-one test.

    Both vectors are shifted so their last entry is 0, then every 2x2 minor of
    the pair must vanish modulo f.
    """
    if len(x) != len(e):
        raise LengthMismatch("vectors differ in length")
    xs = [v - x[-1] for v in x]
    es = [v - e[-1] for v in e]
    for i, j in itertools.combinations(range(len(x)), 2):
        if not q_equal(ctx, xs[i] * es[j], xs[j] * es[i]):
            return False
    return True


# -- finite quandle oracles -------------------------------------------------


def count_colorings_finite(w: BraidWord, q: FiniteQuandle, budget: int = DEFAULT_BUDGET) -> int:
    """Count tuples in (Z/m)^n fixed by strand propagation, by exhaustive enumeration."""
    n, m = w.strands, q.m
    total = m**n
    if total > budget:
        raise BudgetExceeded(f"{m}^{n} = {total} candidates exceed the budget {budget}")
    a = q.a % m
    ainv = pow(a, -1, m)
    count = 0
    chunk = max(1, min(total, 1 << 18))
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        cols = []
        rest = idx.copy()
        for _ in range(n):
            cols.append(rest % m)
            rest //= m
        top = [c.copy() for c in cols]
        for k in reversed(w.letters):
            i = abs(k) - 1
            x, y = cols[i], cols[i + 1]
            if k > 0:
                cols[i], cols[i + 1] = y, (a * x + (1 - a) * y) % m
            else:
                cols[i], cols[i + 1] = (ainv * y + (1 - ainv) * x) % m, x
        fixed = np.ones(len(idx), dtype=bool)
        for c0, c1 in zip(top, cols):
            fixed &= c0 == c1
        count += int(fixed.sum())
    return count


def _diagonal_entries(mat: list[list[int]]) -> list[int]:
    """Diagonalize an integer matrix by unimodular row and column operations."""
    mat = [row[:] for row in mat]
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    diag = []
    for k in range(min(rows, cols)):
        while True:
            nz = [(abs(mat[i][j]), i, j) for i in range(k, rows) for j in range(k, cols) if mat[i][j]]
            if not nz:
                return diag
            _, pi, pj = min(nz)
            mat[k], mat[pi] = mat[pi], mat[k]
            for row in mat:
                row[k], row[pj] = row[pj], row[k]
            p = mat[k][k]
            done = True
            for i in range(k + 1, rows):
                qt = mat[i][k] // p
                if qt:
                    mat[i] = [x - qt * y for x, y in zip(mat[i], mat[k])]
                if mat[i][k]:
                    done = False
            for j in range(k + 1, cols):
                qt = mat[k][j] // p
                if qt:
                    for row in mat:
                        row[j] -= qt * row[k]
                if mat[k][j]:
                    done = False
            if done:
                break
        diag.append(mat[k][k])
    return diag


def count_colorings_kernel(w: BraidWord, q: FiniteQuandle) -> int:
    """Size of the kernel of phi(w) - I at t=a over Z/m, via a diagonal form over Z."""
    a = coloring_matrix(w)
    n = w.strands
    ints = [[lp_eval_mod(a[i, j], q.a, q.m) for j in range(n)] for i in range(n)]
    diag = _diagonal_entries(ints)
    count = q.m ** (n - len(diag))
    for d in diag:
        count *= gcd(d, q.m)
    return count
