from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from ordered_values import (LexTuple, AlgebraicReal, Ordering, Sign, WeightMode, parse_rational, format_rational,
                            check_basis, compare, linear_combine, is_infinitesimal, check_uniform, scale)


def test_parse_rational_accepts_exact_values_only():
    assert parse_rational(3) == Fraction(3)
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational(" -2/6 ") == Fraction(-1, 3)
    for bad in (0.5, True, "x", None):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_format_rational():
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-3, 4)) == "-3/4"


def test_lex_ordering_is_lexicographic():
    assert compare(LexTuple([0, 1]), LexTuple([1, 0])) is Ordering.LESS
    assert compare(LexTuple([1, -5]), LexTuple([0, 100])) is Ordering.GREATER
    assert compare(LexTuple(["1/2", 0]), LexTuple([Fraction(1, 2), 0])) is Ordering.EQUAL
    assert LexTuple([0, 0]).sign() is Sign.ZERO
    assert (LexTuple([0, 1]) - LexTuple([1, 0])).sign() is Sign.NEGATIVE


def test_lex_leading_index_and_infinitesimals():
    assert LexTuple([0, 3]).leading_index() == 1
    assert LexTuple([0, 0]).leading_index() == 2
    assert is_infinitesimal(LexTuple([0, 1]), LexTuple([1, 0]))
    assert is_infinitesimal(LexTuple([0, 1000]), LexTuple([1, -1000]))
    assert not is_infinitesimal(LexTuple([1, 0]), LexTuple([5, 0]))
    with pytest.raises(ValueError):
        is_infinitesimal(LexTuple([0, -1]), LexTuple([1, 0]))


def test_check_basis():
    assert check_basis([1, 2, 3]) == (1, 2, 3)
    for bad in ([2, 3], [1, 4], [1, 3, 2], [1, 12], []):
        with pytest.raises(ValueError):
            check_basis(bad)


def test_algebraic_sign_near_zero():
    basis = [1, 2]
    # 99/70 is a convergent of sqrt(2), so these differ from zero by less than 1e-4
    assert AlgebraicReal(basis, ["-99/70", 1]).sign() is Sign.NEGATIVE
    assert AlgebraicReal(basis, ["-140/99", 1]).sign() is Sign.POSITIVE
    assert AlgebraicReal(basis, [0, 0]).sign() is Sign.ZERO
    assert AlgebraicReal([1, 2, 3], [2, -1, -1]).sign() is Sign.NEGATIVE  # 2 − √2 − √3


def test_algebraic_values_are_never_infinitesimal():
    basis = [1, 2]
    assert not is_infinitesimal(AlgebraicReal(basis, ["1/1000", 0]), AlgebraicReal(basis, [0, 1000]))


def test_mixed_modes_are_refused():
    with pytest.raises(ValueError):
        compare(LexTuple([1]), AlgebraicReal([1], [1]))
    with pytest.raises(ValueError):
        check_uniform([LexTuple([1, 0]), LexTuple([1])])
    with pytest.raises(ValueError):
        check_uniform([AlgebraicReal([1, 2], [1, 0]), AlgebraicReal([1, 3], [1, 0])])
    assert check_uniform([LexTuple([1]), LexTuple([2])]) is WeightMode.LEX


def test_linear_combine():
    values = [LexTuple([1, 0]), LexTuple([0, 1]), LexTuple([2, 2])]
    assert linear_combine([1, -2, 1], values) == LexTuple([3, 0])
    assert scale(3, values[1]) == LexTuple([0, 3])
    with pytest.raises(ValueError):
        linear_combine([1], values)


def test_to_mpf():
    value = AlgebraicReal([1, 2, 3], [2, 0, 1])
    with mpmath.workdps(50):
        assert abs(value.to_mpf() - (2 + mpmath.sqrt(3))) < mpmath.mpf(10) ** -40


@settings(max_examples=1000, deadline=None)
@given(st.lists(st.integers(-50, 50), min_size=3, max_size=3))
def test_algebraic_sign_agrees_with_high_precision_float(coefficients):
    value = AlgebraicReal([1, 2, 5], coefficients)
    approximation = value.to_mpf(80)
    if approximation > mpmath.mpf(10) ** -60:
        assert value.sign() is Sign.POSITIVE
    elif approximation < -mpmath.mpf(10) ** -60:
        assert value.sign() is Sign.NEGATIVE
    else:
        assert all(c == 0 for c in coefficients)
        assert value.sign() is Sign.ZERO


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=2, max_size=2), st.lists(st.integers(-9, 9), min_size=2, max_size=2))
def test_compare_is_antisymmetric(a, b):
    x, y = AlgebraicReal([1, 3], a), AlgebraicReal([1, 3], b)
    flipped = {Ordering.LESS: Ordering.GREATER, Ordering.GREATER: Ordering.LESS, Ordering.EQUAL: Ordering.EQUAL}
    assert compare(y, x) is flipped[compare(x, y)]
    assert (compare(x, y) is Ordering.EQUAL) == (a == b)


lex_values = st.lists(st.integers(-5, 5), min_size=3, max_size=3).map(LexTuple)
algebraic_values = st.lists(st.integers(-9, 9), min_size=3, max_size=3).map(lambda c: AlgebraicReal([1, 2, 7], c))
positive_lex_values = lex_values.filter(lambda v: v.sign() is Sign.POSITIVE)


@settings(max_examples=300, deadline=None)
@given(st.one_of(st.tuples(lex_values, lex_values, lex_values),
                 st.tuples(algebraic_values, algebraic_values, algebraic_values)))
def test_order_is_compatible_with_addition(values):
    a, b, c = values
    assert compare(a + c, b + c) is compare(a, b)


@settings(max_examples=300, deadline=None)
@given(st.one_of(st.tuples(lex_values, lex_values), st.tuples(algebraic_values, algebraic_values)))
def test_sign_of_the_difference_is_the_comparison(values):
    a, b = values
    expected = {Ordering.LESS: Sign.NEGATIVE, Ordering.EQUAL: Sign.ZERO, Ordering.GREATER: Sign.POSITIVE}
    assert linear_combine([1, -1], [a, b]).sign() is expected[compare(a, b)]


@settings(max_examples=300, deadline=None)
@given(positive_lex_values, positive_lex_values)
def test_infinitesimals_stay_below_every_multiple(a, b):
    if is_infinitesimal(a, b):
        for n in (1, 10, 10 ** 6):
            assert compare(scale(n, a), b) is Ordering.LESS
