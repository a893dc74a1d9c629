import pytest
from hypothesis import given, settings, strategies as st

from monomials import (LaurentMonomial, MonomialIdeal, variable_names, exponent_vector, divides, minimalize,
                       ideal_member, render_exponents, unit_vector)

from strategies import monomial_ideals


def test_variable_names():
    assert variable_names(3) == ["x", "y", "z"]
    assert variable_names(5) == ["x1", "x2", "x3", "x4", "x5"]


def test_exponent_vector_refuses_non_integers():
    with pytest.raises(ValueError):
        exponent_vector([1, 0.5])
    with pytest.raises(ValueError):
        exponent_vector([True, 0])


def test_rendering():
    names = variable_names(3)
    assert render_exponents((0, -1, 1), names) == "z/y"
    assert render_exponents((-1, -1, 1), names) == "z/(x*y)"
    assert render_exponents((2, -1, 0), names) == "x^2/y"
    assert render_exponents((0, 0, 0), names) == "1"
    assert LaurentMonomial([0, 0, -2]).render() == "1/z^2"


def test_laurent_arithmetic():
    x, y, z = (LaurentMonomial(unit_vector(3, t)) for t in range(3))
    theta = z / (x * y)
    assert theta.exponents == (-1, -1, 1)
    assert (theta * x).render() == "z/y"
    assert (theta ** 2).exponents == (-2, -2, 2)
    assert theta.inverse() * theta == LaurentMonomial([0, 0, 0])
    assert (theta / theta).is_one()
    with pytest.raises(ValueError):
        x * LaurentMonomial([1, 1])


def test_minimalize_keeps_the_antichain():
    assert minimalize([(2, 0), (1, 1), (2, 1), (0, 3), (1, 1)]) == ((0, 3), (1, 1), (2, 0))
    with pytest.raises(ValueError):
        minimalize([])
    with pytest.raises(ValueError):
        minimalize([(1, -1)])


def test_ideal_order_and_membership():
    ideal = MonomialIdeal(0, [(2, 0), (0, 1)])
    assert ideal.order() == 1
    assert ideal_member((3, 0), ideal)
    assert not ideal_member((1, 0), ideal)
    assert MonomialIdeal.unit(2, 3).is_unit()
    assert MonomialIdeal.maximal(0, 2).order() == 1
    with pytest.raises(ValueError):
        ideal_member((-1, 0), ideal)


def test_product_of_ideals_from_different_frames_is_refused():
    with pytest.raises(ValueError):
        MonomialIdeal(0, [(1, 0)]).times(MonomialIdeal(1, [(1, 0)]))


@settings(max_examples=200, deadline=None)
@given(monomial_ideals(3, 0), monomial_ideals(3, 0))
def test_order_is_additive_on_products(a, b):
    product = a.times(b)
    assert product.order() == a.order() + b.order()
    for g in product.generators:
        assert not any(h != g and divides(h, g) for h in product.generators)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.lists(st.integers(0, 4), min_size=3, max_size=3).map(tuple), min_size=1, max_size=8))
def test_minimalize_generates_the_same_ideal(generators):
    minimal = minimalize(generators)
    assert set(minimal) <= set(generators)
    for g in generators:
        assert any(divides(m, g) for m in minimal)


generator_lists = st.lists(st.lists(st.integers(0, 4), min_size=3, max_size=3).map(tuple), min_size=1, max_size=8)


@settings(max_examples=200, deadline=None)
@given(generator_lists, st.randoms())
def test_minimalize_is_idempotent_and_ignores_order(generators, random):
    minimal = minimalize(generators)
    assert minimalize(minimal) == minimal
    shuffled = list(generators)
    random.shuffle(shuffled)
    assert minimalize(shuffled) == minimal
    assert minimalize(reversed(generators)) == minimal


@settings(max_examples=200, deadline=None)
@given(generator_lists, st.lists(st.integers(0, 6), min_size=3, max_size=3).map(tuple))
def test_membership_is_divisibility_by_a_generator(generators, u):
    ideal = MonomialIdeal(0, minimalize(generators))
    assert ideal_member(u, ideal) == any(divides(g, u) for g in generators)
