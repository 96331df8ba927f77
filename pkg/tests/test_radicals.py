"""Unit tests for exact radical expressions, enclosures, and comparison."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from opnlab.radicals import (
    BoundExpr,
    Ordering,
    PrecisionBudgetError,
    RadicalTerm,
    RationalInterval,
    compare,
    enclose,
    from_rational,
    nth_root,
    paper_constants,
    sqrt,
)

F = Fraction


# ------------------------------------------------------------------ oracle


def bisection_root_interval(base: Fraction, m: int, iters: int) -> RationalInterval:
    """Plain Fraction bisection for base**(1/m) from [0, max(1, base)],
    independent of the library's canonicalization and bracketing."""
    lo, hi = F(0), max(F(1), base)
    for _ in range(iters):
        mid = (lo + hi) / 2
        if mid**m <= base:
            lo = mid
        else:
            hi = mid
    return RationalInterval(lo, hi)


def oracle_interval(e: BoundExpr, iters: int = 80) -> RationalInterval:
    lo = hi = e.rational_part
    for t in e.radical_terms:
        iv = bisection_root_interval(t.base, t.root_index, iters)
        if t.coefficient >= 0:
            lo += t.coefficient * iv.lo
            hi += t.coefficient * iv.hi
        else:
            lo += t.coefficient * iv.hi
            hi += t.coefficient * iv.lo
    return RationalInterval(lo, hi)


# ----------------------------------------------------------------- enclose


def test_enclose_twice_quarter_root_8_5():
    e = 2 * nth_root(F(8, 5), 4)
    iv = enclose(e, F(1, 10**7))
    assert iv.width <= F(1, 10**7)
    oracle = oracle_interval(e)  # width ~ 2**-80, pins the true value
    assert iv.lo <= oracle.hi and oracle.lo <= iv.hi
    # the printed 2.2493653 sits inside the enclosure padded by its width
    assert iv.lo - iv.width <= F("2.2493653") <= iv.hi + iv.width


def test_enclose_pure_rational_is_exact():
    for eps in (F(1), F(1, 10**30)):
        iv = enclose(from_rational(4), eps)
        assert iv.lo == iv.hi == 4


def test_enclose_sqrt2():
    iv = enclose(sqrt(2), F(1, 10**12))
    assert iv.width <= F(1, 10**12)
    oracle = bisection_root_interval(F(2), 2, 60)
    assert iv.lo <= oracle.hi and oracle.lo <= iv.hi
    assert F("1.414213562373") <= iv.hi and iv.lo <= F("1.414213562374")


def test_enclose_rejects_bad_eps():
    with pytest.raises(ValueError):
        enclose(sqrt(2), F(0))
    with pytest.raises(TypeError):
        enclose(sqrt(2), 1e-7)


_base_strategy = st.fractions(min_value=F(1, 64), max_value=F(1000), max_denominator=64)
_coeff_strategy = st.fractions(min_value=F(-20), max_value=F(20), max_denominator=20)


@st.composite
def bound_exprs(draw):
    n_terms = draw(st.integers(min_value=1, max_value=3))
    e = from_rational(draw(_coeff_strategy))
    for _ in range(n_terms):
        c = draw(_coeff_strategy)
        b = draw(_base_strategy)
        m = draw(st.sampled_from((2, 4, 8)))
        e = e + c * nth_root(b, m)
    return e


@given(bound_exprs(), st.integers(min_value=2, max_value=10), st.integers(min_value=1, max_value=6))
@settings(max_examples=100)
def test_enclose_nested_refinement(e, d1, extra):
    eps1 = F(1, 10**d1)
    eps2 = F(1, 10 ** (d1 + extra))
    iv1 = enclose(e, eps1)
    iv2 = enclose(e, eps2)
    assert iv1.width <= eps1 and iv2.width <= eps2
    assert iv2.is_subset_of(iv1)


@given(bound_exprs())
@settings(max_examples=60)
def test_enclose_contains_oracle_value(e):
    iv = enclose(e, F(1, 10**9))
    oracle = oracle_interval(e, iters=60)
    assert iv.lo <= oracle.hi and oracle.lo <= iv.hi


# ------------------------------------------------------------------ compare


def test_compare_examples():
    assert compare(F(41, 20), 3 * nth_root(F(1, 2), 2)) == Ordering.LESS
    assert compare(2, from_rational(2)) == Ordering.EQUAL
    assert compare(sqrt(F(8, 5)), nth_root(F(8, 5), 4)) == Ordering.GREATER


def test_compare_certifies_structural_equalities():
    assert compare(sqrt(8), 2 * sqrt(2)) == Ordering.EQUAL
    assert compare(nth_root(4, 4), sqrt(2)) == Ordering.EQUAL
    assert compare(sqrt(F(9, 4)), F(3, 2)) == Ordering.EQUAL
    # same-index two-term certificate with a square part beyond the
    # canonicalization trial bound
    p = 10007
    assert compare(sqrt(2 * p * p), p * sqrt(2)) == Ordering.EQUAL


def test_compare_budget_error_on_uncertifiable_equality():
    p = 10007  # prime above the extraction trial bound
    lhs = sqrt(2 * p * p) + sqrt(3 * p * p)
    rhs = p * sqrt(2) + p * sqrt(3)
    with pytest.raises(PrecisionBudgetError):
        compare(lhs, rhs, max_rounds=64)


def test_compare_rejects_floats():
    with pytest.raises(TypeError):
        compare(1.5, sqrt(2))


def test_am_gm_checkpoint():
    for x in (F(4, 5), F(5, 4), F(9, 5)):
        assert compare(from_rational(x + 1 / x), from_rational(2)) == Ordering.GREATER
    assert compare(from_rational(F(1) + 1), from_rational(2)) == Ordering.EQUAL


def _registry_plus_rationals():
    values = [(r.name, r.expr) for r in paper_constants()]
    values += [(str(x), from_rational(x)) for x in (F(1), F(41, 20), F(5, 2), F(2), F(3))]
    return values


def test_compare_antisymmetric_and_transitive_over_registry():
    values = _registry_plus_rationals()
    n = len(values)
    table = {}
    for i in range(n):
        for j in range(n):
            table[i, j] = compare(values[i][1], values[j][1])
    flip = {Ordering.LESS: Ordering.GREATER, Ordering.GREATER: Ordering.LESS,
            Ordering.EQUAL: Ordering.EQUAL}
    for i in range(n):
        assert table[i, i] == Ordering.EQUAL
        for j in range(n):
            assert table[j, i] == flip[table[i, j]], (values[i][0], values[j][0])
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[i, j] == Ordering.LESS and table[j, k] == Ordering.LESS:
                    assert table[i, k] == Ordering.LESS, (
                        values[i][0], values[j][0], values[k][0])


def test_compare_agrees_with_power_raising_on_single_radical_pairs():
    # r vs c * t**(1/m), both positive: same verdict as r**m vs c**m * t.
    cases = [
        (F(41, 20), F(3, 2), F(2), 2),
        (F(5, 4), F(1), F(8, 5), 2),
        (F(2), F(2), F(8, 5), 4),
        (F(1), F(1, 3), F(3), 2),
    ]
    for r, c, base, m in cases:
        got = compare(from_rational(r), c * nth_root(base, m))
        expected = Ordering.of_sign(r**m - c**m * base)
        assert got == expected, (r, c, base, m)


@given(
    st.fractions(min_value=F(1, 64), max_value=F(50), max_denominator=64),
    st.fractions(min_value=F(1, 64), max_value=F(50), max_denominator=64),
    st.sampled_from((2, 4, 8)),
)
@settings(max_examples=150)
def test_compare_single_radical_matches_power_raising(r, base, m):
    got = compare(from_rational(r), nth_root(base, m))
    assert got == Ordering.of_sign(r**m - base)


# ------------------------------------------------------------- constructors


def test_canonicalization_merges_equal_values():
    # sqrt(8/5) = (2/5) sqrt(10); subtracting them must cancel exactly
    d = sqrt(F(8, 5)) - F(2, 5) * sqrt(10)
    assert d.is_rational and d.as_fraction() == 0


def test_radical_term_validation():
    with pytest.raises(ValueError):
        RadicalTerm(F(1), F(2), 3)
    with pytest.raises(ValueError):
        RadicalTerm(F(1), F(-2), 2)
    with pytest.raises(ValueError):
        BoundExpr(())


def test_expr_arithmetic_and_display():
    e = F(5, 4) + sqrt(F(8, 5)) - sqrt(10) + 2 * nth_root(F(8, 5), 4)
    assert "5/4" in str(e)
    assert (e - e).as_fraction() == 0


# ---------------------------------------------------------------- registry


def test_registry_has_eleven_verified_constants():
    records = paper_constants()
    assert len(records) == 11
    printed = {r.printed for r in records}
    assert printed == {
        "2.2493653", "1.2909944487358", "0.5773502691896257645",
        "3.464101615137754587", "2.12132", "0.929516", "2.00133573154771263",
        "0.9882117688", "2.0000351547", "1.60199870466", "1.264911",
    }
    for r in records:
        assert r.verified, r.name
        assert r.enclosure.width <= F(1, 10 ** (r.printed_digits + 2))


def test_registry_enclosures_match_independent_oracle():
    for r in paper_constants():
        oracle = oracle_interval(r.expr, iters=90)
        assert r.enclosure.lo <= oracle.hi and oracle.lo <= r.enclosure.hi, r.name
