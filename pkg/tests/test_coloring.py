import itertools
import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alexquandle.braid import BraidWord, parse_braid
from alexquandle.burau import burau_unreduced
from alexquandle.coloring import (
    Coloring,
    FiniteQuandle,
    Verdict,
    classify,
    coloring_matrix,
    coloring_space_summary,
    construct_coloring,
    count_colorings_finite,
    count_colorings_kernel,
    kernel_basis_zero_delta,
    propagate,
    proportional_mod,
    verify_coloring,
)
from alexquandle.errors import (
    BudgetExceeded,
    LengthMismatch,
    NonInvertibleT,
    NotADivisor,
    UnitModulus,
    WrongVerdict,
    ZeroModulus,
)
from alexquandle.laurent import ONE, ZERO, lp_normalize, parse_poly
from alexquandle.linalg import echelonize
from alexquandle.matrix import LambdaMatrix, mat_vec
from alexquandle.quotient import QuotientCtx, q_is_trivial_vector

from conftest import K4_1, K8_15, K8_20, L9N27, TREFOIL, UNKNOT, braid_words, laurent_polys, random_braid

P = parse_poly
CYC6 = P("1 - t + t^2")
D815 = P("3 - 8t + 11t^2 - 8t^3 + 3t^4")


def vec(*items):
    return tuple(P(x) for x in items)


# -- classification ---------------------------------------------------------


def test_classify_examples():
    assert classify(parse_braid(L9N27)).verdict is Verdict.ZERO_DELTA
    assert classify(parse_braid(UNKNOT)).verdict is Verdict.UNIT_DELTA
    cl = classify(parse_braid(K8_15))
    assert cl.verdict is Verdict.NON_UNIT_DELTA
    assert cl.delta == lp_normalize(D815)


@given(braid_words(max_strands=4, max_length=8))
@settings(max_examples=60, deadline=None)
def test_classification_matches_rank(w):
    zero = classify(w).verdict is Verdict.ZERO_DELTA
    assert zero == (echelonize(coloring_matrix(w)).rank <= w.strands - 2)


# -- kernel basis -----------------------------------------------------------


def test_kernel_basis_l9n27():
    w = parse_braid(L9N27)
    basis = kernel_basis_zero_delta(w)
    assert basis[0] == [ONE] * 4
    assert len(basis) >= 2
    a = coloring_matrix(w)
    for v in basis:
        assert all(not x for x in mat_vec(a, v))
    # (t,1,0,0) is in the span of the basis (rank of the stack stays 2)
    stack = LambdaMatrix.from_rows(basis + [list(vec("t", "1", "0", "0"))])
    assert echelonize(stack).rank == 2


def test_kernel_basis_split_unlink():
    basis = kernel_basis_zero_delta(BraidWord(2, ()))
    assert len(basis) == 2
    assert echelonize(LambdaMatrix.from_rows(basis)).rank == 2


def test_kernel_basis_wrong_verdict():
    with pytest.raises(WrongVerdict):
        kernel_basis_zero_delta(parse_braid(TREFOIL))


def test_zero_delta_colors_every_quandle():
    w = parse_braid(L9N27)
    v = kernel_basis_zero_delta(w)[1]
    for f in ("t - 2", "3", "t^2 + 1", "1 - t + t^2"):
        col = Coloring(tuple(v), QuotientCtx.of(f))
        assert verify_coloring(w, col)
        assert not col.is_trivial()


# -- verification -----------------------------------------------------------


@pytest.mark.parametrize(
    "braid,modulus,values",
    [
        (TREFOIL, "1 - t + t^2", ("1", "0")),
        (K4_1, "t^2 - 3t + 1", ("-1 + t", "-1 + 2t", "0")),
        (K8_15, "1 - t + t^2", ("1", "1 - t", "0", "0")),
        (K8_15, "3 - 5t + 3t^2", ("-t^2 + 1", "1", "t^2 - 3t + 3", "0")),
        (K8_15, "3 - 8t + 11t^2 - 8t^3 + 3t^4", ("5t - 3t^2 - 3", "(-1 + t)(3t^2 - 5t + 3)", "0", "0")),
        (K8_20, "(1 - t + t^2)^2", ("1 - t + t^2", "0", "0")),
    ],
)
def test_listed_colorings_verify(braid, modulus, values):
    col = Coloring(vec(*values), QuotientCtx.of(modulus))
    assert verify_coloring(parse_braid(braid), col)
    assert not col.is_trivial()


@pytest.mark.parametrize("values", [("t", "1", "0", "0"), ("1 - 2t", "-1", "1", "1")])
def test_l9n27_vectors_exact(values):
    assert verify_coloring(parse_braid(L9N27), Coloring(vec(*values)))


def test_wrong_vector_rejected():
    ctx = QuotientCtx.of(CYC6)
    assert not verify_coloring(parse_braid(K8_15), Coloring(vec("1", "t", "0", "0"), ctx))
    assert not verify_coloring(parse_braid(TREFOIL), Coloring(vec("1", "0")))


@given(braid_words(), laurent_polys())
@settings(max_examples=40)
def test_constant_coloring_verifies(w, q):
    assert verify_coloring(w, Coloring((q,) * w.strands))


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        verify_coloring(parse_braid(TREFOIL), Coloring(vec("1", "0", "0")))


@given(braid_words(max_strands=5), st.data())
@settings(max_examples=60)
def test_propagation_matches_matrix(w, data):
    v = [data.draw(laurent_polys()) for _ in range(w.strands)]
    assert propagate(w, v) == mat_vec(burau_unreduced(w), v)


# -- construction -----------------------------------------------------------


def _check_constructed(w, f):
    col = construct_coloring(w, f)
    assert verify_coloring(w, col)
    assert not q_is_trivial_vector(col.ring, col.values)
    return col


def test_construct_8_15_delta_in_listed_span():
    w = parse_braid(K8_15)
    col = _check_constructed(w, D815)
    ctx = QuotientCtx.of(D815)
    assert proportional_mod(ctx, col.values, vec("5t - 3t^2 - 3", "(-1 + t)(3t^2 - 5t + 3)", "0", "0"))


def test_construct_8_15_small_factor_in_listed_span():
    w = parse_braid(K8_15)
    col = _check_constructed(w, CYC6)
    assert proportional_mod(QuotientCtx.of(CYC6), col.values, vec("1", "1 - t", "0", "0"))


def test_construct_other_examples():
    _check_constructed(parse_braid(K8_15), P("3t^2 - 5t + 3"))
    _check_constructed(parse_braid(K8_20), P("(1 - t + t^2)^2"))
    _check_constructed(parse_braid(K8_20), CYC6)
    _check_constructed(parse_braid(TREFOIL), None)
    _check_constructed(parse_braid(K4_1), None)


def test_construct_accepts_unit_multiple_of_divisor():
    _check_constructed(parse_braid(TREFOIL), P("-t^-3 + t^-2 - t^-1"))


def test_construct_errors():
    w = parse_braid(K8_15)
    with pytest.raises(NotADivisor):
        construct_coloring(w, P("t - 2"))
    with pytest.raises(UnitModulus):
        construct_coloring(w, P("-t"))
    with pytest.raises(ZeroModulus):
        construct_coloring(w, ZERO)
    with pytest.raises(WrongVerdict):
        construct_coloring(parse_braid(L9N27), CYC6)
    with pytest.raises(WrongVerdict):
        construct_coloring(parse_braid(UNKNOT))


def test_construct_random_braids():
    rng = random.Random(11)
    done = 0
    while done < 15:
        w = random_braid(rng, rng.randint(2, 4), rng.randint(1, 10))
        if classify(w).verdict is not Verdict.NON_UNIT_DELTA:
            continue
        _check_constructed(w, None)
        done += 1


# -- module structure -------------------------------------------------------


@given(laurent_polys(), laurent_polys())
@settings(max_examples=40)
def test_scalar_and_sum_closure(alpha, beta):
    w = parse_braid(K8_15)
    ctx = QuotientCtx.of(CYC6)
    c1 = vec("1", "1 - t", "0", "0")
    c2 = (ONE,) * 4
    combo = tuple(alpha * x + beta * y for x, y in zip(c1, c2))
    assert verify_coloring(w, Coloring(combo, ctx))


# -- summary ----------------------------------------------------------------


def test_summary_examples():
    s = coloring_space_summary(parse_braid(K8_15), CYC6)
    assert s.rank_mod_f == 2 and s.generated_by_one
    s = coloring_space_summary(parse_braid(TREFOIL), CYC6)
    assert s.rank_mod_f == 0 and s.generated_by_one


def test_summary_8_20_reports_bounds():
    s = coloring_space_summary(parse_braid(K8_20), P("(1 - t + t^2)^2"), multiplicity=2)
    assert s.strands == 3
    assert s.multiplicity_bounds_ok in (True, False)
    assert coloring_space_summary(parse_braid(K8_20), CYC6).multiplicity_bounds_ok is None


def test_summary_errors():
    with pytest.raises(ZeroModulus):
        coloring_space_summary(parse_braid(TREFOIL), ZERO)
    with pytest.raises(UnitModulus):
        coloring_space_summary(parse_braid(TREFOIL), ONE)


# -- finite quandles --------------------------------------------------------


@pytest.mark.parametrize(
    "braid,m,a,expected",
    [(TREFOIL, 3, 2, 9), (TREFOIL, 5, 2, 5), (UNKNOT, 7, 3, 7), (K4_1, 5, 4, 25)],
)
def test_count_examples(braid, m, a, expected):
    w = parse_braid(braid)
    q = FiniteQuandle(m, a)
    assert count_colorings_finite(w, q) == expected
    assert count_colorings_kernel(w, q) == expected


def test_count_naive_oracle():
    # plain python loop over tuples with the quandle operation, no numpy
    w = parse_braid(K4_1)
    q = FiniteQuandle(5, 2)
    ainv = pow(q.a, -1, q.m)
    n = 0
    for top in itertools.product(range(q.m), repeat=3):
        c = list(top)
        for k in reversed(w.letters):
            i = abs(k) - 1
            x, y = c[i], c[i + 1]
            if k > 0:
                c[i], c[i + 1] = y, q.op(x, y)
            else:
                c[i], c[i + 1] = (ainv * y + (1 - ainv) * x) % q.m, x
        n += tuple(c) == top
    assert n == count_colorings_finite(w, q)


def test_count_budget():
    with pytest.raises(BudgetExceeded):
        count_colorings_finite(parse_braid(K8_15), FiniteQuandle(5, 2), budget=100)


def test_finite_quandle_validation():
    with pytest.raises(NonInvertibleT):
        FiniteQuandle(4, 2)
    with pytest.raises(ValueError):
        FiniteQuandle(1, 0)


@given(braid_words(max_strands=4, max_length=8), st.sampled_from([(2, 1), (3, 1), (3, 2), (5, 2), (5, 3), (5, 4), (7, 3)]))
@settings(max_examples=60, deadline=None)
def test_enumeration_matches_kernel(w, ma):
    q = FiniteQuandle(*ma)
    if q.m**w.strands > 10**4:
        return
    assert count_colorings_finite(w, q) == count_colorings_kernel(w, q)


@pytest.mark.parametrize("braid", [TREFOIL, K4_1, K8_15, K8_20, UNKNOT])
def test_trivial_only_count_implies_full_rank(braid):
    w = parse_braid(braid)
    full = echelonize(coloring_matrix(w)).rank == w.strands - 1
    for m in (2, 3, 5, 7):
        for a in range(1, m):
            if gcd(a, m) != 1 or m**w.strands > 10**4:
                continue
            if count_colorings_finite(w, FiniteQuandle(m, a)) == m:
                assert full
