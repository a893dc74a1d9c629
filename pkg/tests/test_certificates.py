from fractions import Fraction

from hypothesis import given, assume, settings, strategies as st

from analysis import ShannonAnalysis
from analysis_config import AnalysisConfig
from certificates import (ANCHORS, KIND_CITATIONS, Certificate, CertificateKind, ClosureFailure, LinearFormInvariant,
                          transport_form, cone_combination, is_cone_combination, certify_constant_center,
                          certify_tower_infinite, certify_negative_order, certify_center, certify_tie,
                          certify_ring_membership, check_form_preservation, feasible_centers, exponent_pattern,
                          replay, check_against_horizon)
from monomials import LaurentMonomial
from ordered_values import AlgebraicReal
from tower import Tower

from strategies import lex_weights, towers, tower_settings

THETA = LaurentMonomial([-1, -1, 1])


def test_every_kind_cites_a_registered_anchor():
    assert set(KIND_CITATIONS) == set(CertificateKind)
    assert all(citation in ANCHORS for citation in KIND_CITATIONS.values())


def test_transport_form():
    assert transport_form((-1, -1, 1), 0) == (-1, -1, 1)
    assert transport_form((1, 0, 0), 1) == (1, -1, 0)
    assert transport_form((-1, 0, 1), 0) == (-2, 0, 1)


def test_cone_combination():
    assert cone_combination((1, 1), [(1, 0), (0, 1)]) == [Fraction(1), Fraction(1)]
    assert cone_combination((-1, 0), [(1, 0), (0, 1)]) is None
    assert cone_combination((0, 0), []) == []
    generators = [(1, 0, 0), (1, 1, 0), (0, -1, 0), (0, 0, 1)]
    combination = cone_combination((2, 1, 3), generators)
    assert combination is not None and is_cone_combination((2, 1, 3), generators, combination)
    assert cone_combination((0, 0, -1), generators) is None


@settings(max_examples=200, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=1, max_size=6), st.data())
def test_cone_combination_finds_a_combination_for_every_cone_point(generators, data):
    weights = data.draw(st.lists(st.integers(0, 4), min_size=len(generators), max_size=len(generators)))
    target = tuple(sum(w * g[t] for w, g in zip(weights, generators)) for t in range(3))
    combination = cone_combination(target, generators)
    assert combination is not None
    assert is_cone_combination(target, generators, combination)


def test_constant_center(principal, archimedean):
    cert = certify_constant_center(principal, 0)
    assert cert.kind is CertificateKind.CONSTANT_CENTER and cert.witness == {"slot": 0}
    assert replay(principal, cert)
    assert check_against_horizon(principal, cert, 60)
    assert certify_constant_center(archimedean, 0) is None


def test_tower_infinite(principal, archimedean):
    cert = certify_tower_infinite(archimedean)
    assert cert is not None and replay(archimedean, cert)
    assert certify_tower_infinite(principal) is None
    dependent = Tower(2, [AlgebraicReal([1, 2], [1, 1]), AlgebraicReal([1, 2], [2, 2])])
    assert certify_tower_infinite(dependent) is None


def test_hint_form_is_certified(archimedean):
    cert = check_form_preservation(archimedean, 0, [LinearFormInvariant([-1, -1, 1])])
    assert isinstance(cert, Certificate)
    assert cert.witness["slots"] == [0, 1]
    assert [e["slot"] for e in cert.witness["exclusions"]] == [2]
    assert replay(archimedean, cert)
    assert check_against_horizon(archimedean, cert, 200)
    feasible = feasible_centers(archimedean, [cert])
    assert feasible.slots == (0, 1) and 2 not in feasible


def test_theta_has_order_minus_one_forever(archimedean):
    cert = check_form_preservation(archimedean, 0, [LinearFormInvariant([-1, -1, 1])])
    pattern = exponent_pattern(archimedean, THETA, 0, feasible_centers(archimedean, [cert]))
    assert pattern.exponent == (-1, -1, 1)
    assert pattern.order == -1
    assert not pattern.in_ring()
    assert replay(archimedean, pattern.certificate)
    assert check_against_horizon(archimedean, pattern.certificate, 200)
    assert all(archimedean.ord(i, THETA) == -1 for i in range(201))


def test_forms_not_positive_are_rejected(archimedean):
    failure = check_form_preservation(archimedean, 0, [LinearFormInvariant([1, -1, -1])])
    assert isinstance(failure, ClosureFailure)
    assert failure.slot is None


def test_infinitesimal_shift_under_a_constant_center(principal):
    form = LinearFormInvariant([-1, 0, 1])
    failure = check_form_preservation(principal, 0, [form])
    assert isinstance(failure, ClosureFailure) and failure.slot == 0
    constant = certify_constant_center(principal, 0)
    cert = check_form_preservation(principal, 0, [form], constant)
    assert isinstance(cert, Certificate)
    assert cert.witness["closures"][0]["infinitesimalShift"] == -1
    assert replay(principal, cert)
    assert check_against_horizon(principal, cert, 50)


def test_observations(principal, plane_tie):
    negative = certify_negative_order(principal, 0, 2, 1)
    assert negative.witness["order"] == -1 and replay(principal, negative)
    assert certify_negative_order(principal, 0, 1, 1) is None
    center = certify_center(principal, 0, 3)
    assert center is not None and replay(principal, center)
    assert certify_center(principal, 1, 3) is None
    membership = certify_ring_membership(principal, 3, LaurentMonomial([-3, 1, 0]))
    assert membership is not None and replay(principal, membership)
    tie = certify_tie(plane_tie)
    assert tie is None
    plane_tie.available(5)
    tie = certify_tie(plane_tie)
    assert tie.start == 2 and tie.witness["slots"] == [0, 1]
    assert replay(plane_tie, tie)


def test_tampered_certificates_do_not_replay(principal, archimedean):
    forged = Certificate(CertificateKind.CONSTANT_CENTER, 0, {"slot": 1})
    assert not replay(principal, forged)
    cert = check_form_preservation(archimedean, 0, [LinearFormInvariant([-1, -1, 1])])
    cert.witness["slots"] = [0, 1, 2]
    assert not replay(archimedean, cert)
    assert not replay(principal, Certificate(CertificateKind.TOWER_INFINITE, 0, {}))


def all_certificates(certs):
    for cert in certs:
        yield cert
        yield from all_certificates(cert.support)


@tower_settings(200)
@given(towers())
def test_report_certificates_hold_on_random_towers(tower):
    report = ShannonAnalysis(tower, AnalysisConfig(horizon=10)).classify_shannon()
    for fact in report.facts:
        for cert in all_certificates(fact.verdict.certificates):
            assert replay(tower, cert), fact.label
            assert check_against_horizon(tower, cert, 60), fact.label


@tower_settings(20)
@given(st.sampled_from([2, 3]).flatmap(lambda d: lex_weights(d)), st.integers(0, 3))
def test_constant_center_matches_a_long_center_history(weights, i):
    tower = Tower(len(weights), weights, 20000)
    assume(tower.available(i))
    steps = 10000
    cert = certify_constant_center(tower, i)
    history = tower.center_history(i + steps)
    constant = len(history) == i + steps and len(set(history[i:])) == 1
    assert (cert is not None) == constant
    if cert is not None:
        assert history[i] == cert.witness["slot"]
