"""Hypothesis strategies for weights, towers, monomials and ideals."""
from hypothesis import settings, HealthCheck, strategies as st

from monomials import LaurentMonomial, MonomialIdeal
from ordered_values import LexTuple, AlgebraicReal, Sign
from tower import Tower

BASES = [(1, 2), (1, 2, 3), (1, 2, 3, 5)]

# Caps runaway towers in property tests
TEST_STEP_LIMIT = 2000


def tower_settings(max_examples: int) -> settings:
    """For tests that discard towers ending in a tie before the depth they need."""
    return settings(max_examples=max_examples, deadline=None,
                    suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow])


@st.composite
def algebraic_weights(draw, d: int):
    basis = draw(st.sampled_from(BASES))
    coefficients = st.lists(st.integers(0, 5), min_size=len(basis), max_size=len(basis)).filter(any)
    return [AlgebraicReal(basis, draw(coefficients)) for _ in range(d)]


@st.composite
def lex_weights(draw, d: int, m: int = 2):
    coefficients = st.lists(st.integers(-3, 5), min_size=m, max_size=m) \
        .filter(lambda c: LexTuple(c).sign() is Sign.POSITIVE)
    return [LexTuple(draw(coefficients)) for _ in range(d)]


@st.composite
def towers(draw, dimensions=(2, 3), algebraic_only: bool = False):
    d = draw(st.sampled_from(dimensions))
    algebraic = algebraic_only or draw(st.booleans())
    weights = draw(algebraic_weights(d) if algebraic else lex_weights(d))
    return Tower(d, weights, TEST_STEP_LIMIT)


@st.composite
def laurent_monomials(draw, d: int, bound: int = 3):
    return LaurentMonomial(draw(st.lists(st.integers(-bound, bound), min_size=d, max_size=d)))


@st.composite
def polynomial_monomials(draw, d: int, bound: int = 2):
    return LaurentMonomial(draw(st.lists(st.integers(0, bound), min_size=d, max_size=d)))


@st.composite
def monomial_ideals(draw, d: int, frame_index: int, max_generators: int = 4, max_exponent: int = 5):
    exponent = st.lists(st.integers(0, max_exponent), min_size=d, max_size=d).map(tuple)
    return MonomialIdeal(frame_index, draw(st.lists(exponent, min_size=1, max_size=max_generators)))
