from math import comb

from hypothesis import given, assume, strategies as st

from certificates import certify_tower_infinite
from monomials import LaurentMonomial, MonomialIdeal, unit_vector

from oracle import ord_oracle, transform_oracle, sign_probe_oracle, oracle_columns, PowerTable
from strategies import towers, laurent_monomials, monomial_ideals, tower_settings

DEEP_HORIZON = 500


def test_ord_oracle_examples(principal, archimedean):
    assert ord_oracle(principal, 2, LaurentMonomial([0, 1, 0])) == 3
    assert ord_oracle(principal, 4, principal.frame(4).parameter(1)) == 1
    assert ord_oracle(archimedean, 2, LaurentMonomial([0, 0, 1])) == 4
    assert ord_oracle(archimedean, 4, LaurentMonomial([-1, -1, 1])) == -1
    assert ord_oracle(principal, 3, LaurentMonomial([0, 5, 0]), k_max=3) is None


def test_transform_oracle_examples(principal):
    assert transform_oracle(principal, MonomialIdeal(0, [(2, 0, 0), (0, 1, 0)])) == ((0, 1, 0), (1, 0, 0))
    assert transform_oracle(principal, MonomialIdeal.maximal(2, 3)) == ((0, 0, 0),)


def test_sign_probe_oracle_examples(archimedean):
    theta, one = LaurentMonomial([-1, -1, 1]), LaurentMonomial([0, 0, 0])
    theta_signs, one_signs = sign_probe_oracle(archimedean, [theta, one], 60)
    assert theta_signs == [-1] * 61
    assert one_signs == [0] * 61


def test_power_table_sizes(archimedean, plane_irrational):
    columns = oracle_columns(archimedean, 3)
    plane = oracle_columns(plane_irrational, 4)
    for k in range(5):
        assert len(set(PowerTable(columns, k).generators)) == comb(3 + k - 1, k)
        assert len(set(PowerTable(plane, k).generators)) == k + 1


@tower_settings(500)
@given(towers(), st.integers(0, 4), st.data())
def test_ord_agrees_with_oracle(tower, i, data):
    assume(tower.available(i))
    q = data.draw(laurent_monomials(tower.dimension, bound=1))
    assert ord_oracle(tower, i, q) == tower.ord(i, q)


@tower_settings(1000)
@given(towers(), st.integers(0, 4), st.data())
def test_transform_step_agrees_with_oracle(tower, i, data):
    assume(tower.available(i + 1))
    ideal = data.draw(monomial_ideals(tower.dimension, i, max_exponent=3))
    assert tower.transform_step(ideal).generators == transform_oracle(tower, ideal)


@tower_settings(100)
@given(towers(dimensions=(2, 3), algebraic_only=True), st.data())
def test_ord_signs_are_eventually_constant(tower, data):
    assume(certify_tower_infinite(tower) is not None)
    probes = data.draw(st.lists(laurent_monomials(tower.dimension), min_size=50, max_size=50))
    for q, signs in zip(probes, sign_probe_oracle(tower, probes, DEEP_HORIZON)):
        assert len(signs) == DEEP_HORIZON + 1
        assert len(set(signs[-100:])) == 1, f"{q} has signs {signs[-100:]}"
        for i in range(0, DEEP_HORIZON + 1, 50):
            engine = tower.ord(i, q)
            assert signs[i] == (engine > 0) - (engine < 0)


@tower_settings(200)
@given(towers(), st.integers(1, 5))
def test_variables_have_positive_order(tower, i):
    assume(tower.available(i))
    for t in range(tower.dimension):
        assert ord_oracle(tower, i, LaurentMonomial(unit_vector(tower.dimension, t))) >= 1
