# Copyright (c) 2022 Graham Lea
#
# Redistribution and use in source and binary forms, with or without modification, are permitted provided that the
# following conditions are met:
#
# 1. Redistributions of source code must retain the above copyright notice, this list of conditions and the following
# disclaimer.
#
# 2. Redistributions in binary form must reproduce the above copyright notice, this list of conditions and the following
# disclaimer in the documentation and/or other materials provided with the distribution.
#
# 3. Neither the name of the copyright holder nor the names of its contributors may be used to endorse or promote
# products derived from this software without specific prior written permission.
#
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS" AND ANY EXPRESS OR IMPLIED WARRANTIES,
# INCLUDING, BUT NOT LIMITED TO, THE IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE ARE
# DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR CONTRIBUTORS BE LIABLE FOR ANY DIRECT, INDIRECT, INCIDENTAL,
# SPECIAL, EXEMPLARY, OR CONSEQUENTIAL DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR
# SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER CAUSED AND ON ANY THEORY OF LIABILITY,
# WHETHER IN CONTRACT, STRICT LIABILITY, OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE
# OF THIS SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.

"""
Facts about the Shannon extension S = ⋃ R_i of a monomial tower.

Each fact comes as a Verdict: certified (with replayable certificates and citation keys from certificates.ANCHORS),
evidence gathered up to the horizon, or undecided.
"""
import logging
from enum import Enum
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple, Any

from analysis_config import AnalysisConfig
from certificates import (Certificate, FeasibleCenters, ExponentPattern, LinearFormInvariant, ClosureFailure,
                          certify_constant_center, certify_tower_infinite, certify_ring_membership,
                          certify_maximal_ideal_membership, certify_negative_order, certify_center, certify_tie,
                          check_form_preservation, feasible_centers, exponent_pattern)
from monomials import LaurentMonomial, unit_vector, variable_names
from ordered_values import Sign, WeightMode, linear_combine
from tower import Tower, TowerStatus


class VerdictStatus(Enum):
    CERTIFIED_YES = "certified_yes"
    CERTIFIED_NO = "certified_no"
    EVIDENCE = "evidence"
    UNDECIDED = "undecided"


class Verdict:
    status: VerdictStatus
    # For multi-valued questions (maximal ideal type, eventual sign) and for evidence, the answer found
    answer: Optional[str]
    certificates: List[Certificate]
    citations: List[str]
    evidence: Dict[str, Any]

    def __init__(self, status: VerdictStatus, answer: Optional[str] = None,
                 certificates: Optional[List[Certificate]] = None, citations: Optional[List[str]] = None,
                 evidence: Optional[Dict[str, Any]] = None):
        self.status = status
        self.answer = answer
        self.certificates = certificates or []
        self.citations = citations or []
        self.evidence = evidence or {}

    @property
    def certified(self) -> bool:
        return self.status in (VerdictStatus.CERTIFIED_YES, VerdictStatus.CERTIFIED_NO)

    def to_json(self) -> dict:
        result = {"status": self.status.value, "citations": self.citations,
                  "certificates": [c.to_json() for c in self.certificates], "evidence": self.evidence}
        if self.answer is not None:
            result["answer"] = self.answer
        return result

    def __repr__(self):
        answer = f" {self.answer}" if self.answer is not None else ""
        return f"Verdict({self.status.value}{answer})"


def undecided(**evidence) -> Verdict:
    return Verdict(VerdictStatus.UNDECIDED, evidence=evidence)


class FactKind(Enum):
    N_PRINCIPAL = "NPrincipal"
    N_IDEMPOTENT = "NIdempotent"
    ARCHIMEDEAN = "Archimedean"
    NON_ARCHIMEDEAN = "NonArchimedean"
    IN_S = "InS"
    IN_V = "InV"
    IN_T = "InT"
    N_PRIMARY = "NPrimary"
    VARIABLE_PERSISTS = "VariablePersists"
    ORDER_VALUATION_CONTAINS_S = "OrderValuationContainsS"
    IS_VALUATION = "IsValuation"
    NOT_VALUATION = "NotValuation"
    IS_DVR = "IsDVR"
    TOWER_FINITE = "TowerFinite"
    TOWER_INFINITE = "TowerInfinite"
    IN_N_COLON_N = "InNColonN"

    @staticmethod
    def from_str(name: str) -> "FactKind":
        for kind in FactKind:
            if kind.value == name:
                return kind
        raise ValueError(f"Unknown fact '{name}'")


EXCLUSIVE_PAIRS = [
    (FactKind.N_PRINCIPAL, FactKind.N_IDEMPOTENT),
    (FactKind.ARCHIMEDEAN, FactKind.NON_ARCHIMEDEAN),
    (FactKind.IS_VALUATION, FactKind.NOT_VALUATION),
    (FactKind.TOWER_FINITE, FactKind.TOWER_INFINITE),
]


class Fact:
    kind: FactKind
    subject: Optional[str]
    verdict: Verdict

    def __init__(self, kind: FactKind, subject: Optional[str], verdict: Verdict):
        self.kind = kind
        self.subject = subject
        self.verdict = verdict

    @property
    def label(self) -> str:
        return self.kind.value if self.subject is None else f"{self.kind.value}({self.subject})"

    def to_json(self) -> dict:
        result = {"fact": self.kind.value, **self.verdict.to_json()}
        if self.subject is not None:
            result["subject"] = self.subject
        return result

    def __repr__(self):
        return f"{self.label}: {self.verdict}"


class Inference:
    rule: str
    premises: List[str]
    conclusions: List[str]
    citations: List[str]

    def __init__(self, rule: str, premises: List[str], conclusions: List[str], citations: List[str]):
        self.rule = rule
        self.premises = premises
        self.conclusions = conclusions
        self.citations = citations

    def to_json(self) -> dict:
        return {"rule": self.rule, "premises": self.premises, "conclusions": self.conclusions,
                "citations": self.citations}


class EpdReport:
    """
    Persisting variables and refuted order valuation rings. Height one primes that are not monomial are invisible
    here, so this is a lower bound on the essential prime divisors.
    """
    persisting: Dict[int, Verdict]
    order_valuations: List[Verdict]
    lower_bound: bool = True

    def __init__(self, persisting: Dict[int, Verdict], order_valuations: List[Verdict]):
        self.persisting = persisting
        self.order_valuations = order_valuations

    def persisting_slots(self) -> List[int]:
        return [t for t, v in self.persisting.items() if v.status is VerdictStatus.CERTIFIED_YES]

    def unrefuted_frames(self) -> List[int]:
        return [j for j, v in enumerate(self.order_valuations) if v.status is not VerdictStatus.CERTIFIED_NO]


class ClassificationReport:
    horizon: int
    facts: List[Fact]
    inferences: List[Inference]
    notes: List[str]
    violations: List[str]
    epd_lower_bound: bool

    def __init__(self, horizon: int):
        self.horizon = horizon
        self.facts = []
        self.inferences = []
        self.notes = []
        self.violations = []
        self.epd_lower_bound = True

    def add(self, kind: FactKind, subject: Optional[str], verdict: Verdict) -> Fact:
        fact = Fact(kind, subject, verdict)
        self.facts.append(fact)
        return fact

    def fact(self, kind: FactKind, subject: Optional[str] = None) -> Optional[Fact]:
        return next((f for f in self.facts if f.kind is kind and f.subject == subject), None)

    def status(self, kind: FactKind, subject: Optional[str] = None) -> VerdictStatus:
        fact = self.fact(kind, subject)
        return fact.verdict.status if fact is not None else VerdictStatus.UNDECIDED

    def to_json(self) -> dict:
        return {"horizon": self.horizon, "facts": [f.to_json() for f in self.facts],
                "inferences": [i.to_json() for i in self.inferences], "notes": self.notes,
                "violations": self.violations, "epdLowerBound": self.epd_lower_bound}


def _boolean(verdict: Verdict, true_answer: str) -> Verdict:
    """Turns a verdict about a multi-valued question into a yes/no verdict on 'the answer is true_answer'."""
    if verdict.status is VerdictStatus.UNDECIDED:
        return Verdict(VerdictStatus.UNDECIDED, evidence=verdict.evidence)
    holds = verdict.answer == true_answer
    if verdict.status is VerdictStatus.EVIDENCE:
        return Verdict(VerdictStatus.EVIDENCE, "yes" if holds else "no", verdict.certificates, verdict.citations,
                       verdict.evidence)
    return Verdict(VerdictStatus.CERTIFIED_YES if holds else VerdictStatus.CERTIFIED_NO, None,
                   verdict.certificates, verdict.citations, verdict.evidence)


def _negated(verdict: Verdict) -> Verdict:
    status = {VerdictStatus.CERTIFIED_YES: VerdictStatus.CERTIFIED_NO,
              VerdictStatus.CERTIFIED_NO: VerdictStatus.CERTIFIED_YES}.get(verdict.status, verdict.status)
    answer = {"yes": "no", "no": "yes"}.get(verdict.answer, verdict.answer)
    return Verdict(status, answer, verdict.certificates, verdict.citations, verdict.evidence)


def _repair_power(uq: Sequence[int], ux: Sequence[int]) -> Optional[int]:
    """The least n ≥ 0 with uq + n·ux ≥ 0 componentwise, if there is one."""
    n = 0
    for a, b in zip(uq, ux):
        if a >= 0:
            continue
        if b <= 0:
            return None
        n = max(n, (-a + b - 1) // b)
    return n


def _sign_name(value: int) -> str:
    return "positive" if value > 0 else "negative" if value < 0 else "zero"


class ShannonAnalysis:
    tower: Tower
    config: AnalysisConfig
    hints: List[LinearFormInvariant]
    probes: Dict[str, LaurentMonomial]
    names: List[str]

    def __init__(self, tower: Tower, config: AnalysisConfig, hints: Sequence[Sequence[int]] = (),
                 probes: Optional[Dict[str, LaurentMonomial]] = None):
        self.tower = tower
        self.config = config
        self.hints = [LinearFormInvariant(h) for h in hints]
        self.probes = dict(probes or {})
        self.names = variable_names(tower.dimension)
        self._signs: Dict[LaurentMonomial, Verdict] = {}
        self._memberships: Dict[LaurentMonomial, Verdict] = {}
        self._witnesses: Dict[int, Optional[Certificate]] = {}

    def render(self, q: LaurentMonomial) -> str:
        return q.render(self.names)

    @cached_property
    def limit(self) -> int:
        """The last frame examined: the horizon, or the tie step if the tower terminates first."""
        return self.tower.last_index(self.config.horizon)

    @property
    def terminated(self) -> bool:
        """True if the minimum weight ties at some frame up to the horizon, including the last one."""
        last = self.tower.frame(self.limit)
        if self.tower.status is not TowerStatus.TERMINATED_TIE and len(last.argmin()) > 1:
            # a tied frame is always the newest, so stepping it records the termination
            self.tower.step()
        return self.tower.status is TowerStatus.TERMINATED_TIE and self.tower.termination.step <= self.config.horizon

    @cached_property
    def constant_center(self) -> Optional[Certificate]:
        if self.tower.mode is WeightMode.ALGEBRAIC:
            return None
        for i in range(self.limit + 1):
            if len(self.tower.frame(i).argmin()) != 1:
                return None
            cert = certify_constant_center(self.tower, i)
            if cert is not None:
                logging.info(f"Center is slot {cert.witness['slot']} at every frame from {i}")
                return cert
        return None

    @cached_property
    def tower_infinite(self) -> Optional[Certificate]:
        return certify_tower_infinite(self.tower) or self.constant_center

    @cached_property
    def form_certificates(self) -> List[Certificate]:
        """Certified invariant forms: the hints together, then each automatic form c_s − Σ_{k≠s} c_k alone."""
        if self.terminated:
            return []
        certs = []
        if self.hints:
            result = self._certify_forms(self.hints)
            if isinstance(result, Certificate):
                certs.append(result)
            elif result is not None:
                logging.info(f"Invariant hints not certified: {result}")
        if self.constant_center is None:
            d = self.tower.dimension
            hinted = {h.form for h in self.hints}
            for s in range(d):
                form = LinearFormInvariant([1 if k == s else -1 for k in range(d)])
                if form.form in hinted:
                    continue
                result = self._certify_forms([form])
                if isinstance(result, Certificate):
                    certs.append(result)
        return certs

    def _certify_forms(self, forms: List[LinearFormInvariant]):
        """Tries the forms at the first frame, within the evidence window, where all of them are positive."""
        first = self.constant_center.start if self.constant_center is not None else 0
        last = min(self.limit, first + self.config.window)
        for i0 in range(first, last + 1):
            weights = list(self.tower.frame(i0).weights)
            if all(linear_combine(list(f.form), weights).sign() is Sign.POSITIVE for f in forms):
                return check_form_preservation(self.tower, i0, forms, self.constant_center)
        return ClosureFailure(forms[0].form, None, f"not positive at any frame up to {last}")

    @cached_property
    def feasible(self) -> FeasibleCenters:
        certs = ([self.constant_center] if self.constant_center else []) + self.form_certificates
        return feasible_centers(self.tower, certs)

    def pattern(self, q: LaurentMonomial) -> Optional[ExponentPattern]:
        """An invariant frame exponent for q at some frame up to the horizon."""
        if not self.feasible.certificates:
            return None
        for i in range(self.feasible.start, self.limit + 1):
            found = exponent_pattern(self.tower, q, i, self.feasible)
            if found is not None:
                return found
        return None

    def direction_change_statistics(self) -> Dict[str, int]:
        window = self.config.window
        last_start = max(0, self.limit - window)
        changes = 0
        for i in range(last_start + 1):
            if i < self.limit and self.tower.first_direction_change(i, min(i + window, self.limit)) is not None:
                changes += 1
        return {"directionChanges": changes, "framesExamined": last_start + 1}

    def classify_maximal_ideal(self) -> Verdict:
        """Principal (a constant center) or idempotent (archimedean weights on an infinite tower)."""
        if self.terminated:
            return undecided(terminatedAt=self.tower.termination.step)
        statistics = self.direction_change_statistics()
        cc = self.constant_center
        if cc is not None:
            generator = self.tower.frame(cc.start).parameter(cc.witness["slot"])
            return Verdict(VerdictStatus.CERTIFIED_YES, "principal", [cc],
                           ["regular-parameter-persistence", "idempotent-maximal-ideal"],
                           {"generator": self.render(generator), "frame": cc.start, **statistics})
        if self.tower.mode is WeightMode.ALGEBRAIC and self.tower_infinite is not None:
            return Verdict(VerdictStatus.CERTIFIED_YES, "idempotent", [self.tower_infinite],
                           ["idempotent-maximal-ideal", "rational-independence"], statistics)
        centers = self.tower.center_history(self.limit)
        return undecided(centerTail=centers[-self.config.window:], **statistics)

    @cached_property
    def n_primary(self) -> Tuple[Optional[LaurentMonomial], Verdict]:
        return self.find_n_primary()

    def find_n_primary(self) -> Tuple[Optional[LaurentMonomial], Verdict]:
        if self.terminated:
            return None, undecided(terminatedAt=self.tower.termination.step)
        cc = self.constant_center
        if cc is not None:
            candidate = self.tower.frame(cc.start).parameter(cc.witness["slot"])
            return candidate, Verdict(VerdictStatus.CERTIFIED_YES, self.render(candidate), [cc],
                                      ["regular-parameter-persistence", "n-primary-element"],
                                      {"frame": cc.start, "reason": "generates the maximal ideal"})
        feasible = self.feasible
        if (self.tower.mode is WeightMode.ALGEBRAIC and self.tower_infinite is not None and feasible.certificates
                and len(feasible.slots) == 2):
            # Both feasible centers recur forever, so only never-centered slots can carry height one primes
            slot = feasible.slots[0]
            candidate = self.tower.frame(feasible.start).parameter(slot)
            return candidate, Verdict(VerdictStatus.CERTIFIED_YES, self.render(candidate),
                                      [self.tower_infinite] + feasible.certificates,
                                      ["monomial-prime-avoidance", "n-primary-element"],
                                      {"frame": feasible.start, "slot": slot})
        frame_index = max(self.limit - 1, 0)
        frame = self.tower.frame(frame_index)
        slot = frame.center if frame.center is not None else frame.argmin()[0]
        candidate = frame.parameter(slot)
        missing = [j for j in range(self.limit + 1) if self.order_valuation_witness(j) is None]
        centered = set(self.tower.center_history(self.limit))
        u = self.tower.frame_exponent(frame_index, candidate)
        avoids = all(u[t] == 0 for t in range(self.tower.dimension) if t not in centered)
        evidence = {"frame": frame_index, "slot": slot, "framesWithoutWitness": missing[:self.config.window],
                    "avoidsPersistingSlots": avoids}
        if missing or not avoids:
            return candidate, Verdict(VerdictStatus.UNDECIDED, None, evidence=evidence)
        return candidate, Verdict(VerdictStatus.EVIDENCE, self.render(candidate), citations=["n-primary-element"],
                                  evidence=evidence)

    def archimedean_check(self) -> Verdict:
        candidate, primary = self.n_primary
        if candidate is None:
            return undecided(reason="no N-primary candidate")
        cc = self.constant_center
        if cc is not None:
            frame = self.tower.frame(cc.start)
            witnesses = [self.render(frame.parameter(k)) for k in range(self.tower.dimension)
                         if k != cc.witness["slot"]]
            return Verdict(VerdictStatus.CERTIFIED_YES, "nonarchimedean", [cc],
                           ["nonarchimedean-criterion", "regular-parameter-persistence"],
                           {"generator": self.render(candidate), "witnesses": witnesses})
        if self.tower.mode is WeightMode.ALGEBRAIC and self.tower_infinite is not None:
            return Verdict(VerdictStatus.CERTIFIED_YES, "archimedean", [self.tower_infinite], ["rank-one-domination"],
                           {"generator": self.render(candidate)})
        order = self.tower.ord(self.limit, candidate)
        d = self.tower.dimension
        dominating = [self.names[t] for t in range(d)
                      if self.tower.ord(self.limit, LaurentMonomial(unit_vector(d, t))) >= self.config.n_max * order]
        answer = "nonarchimedean" if dominating else "archimedean"
        return Verdict(VerdictStatus.EVIDENCE, answer, citations=["nonarchimedean-criterion"],
                       evidence={"frame": self.limit, "nMax": self.config.n_max, "generatorOrder": order,
                                 "dominatingVariables": dominating})

    def eventual_ord_sign(self, q: LaurentMonomial) -> Verdict:
        if q.is_one():
            return Verdict(VerdictStatus.CERTIFIED_YES, "zero", citations=["order-valuation-trichotomy"])
        if q in self._signs:
            return self._signs[q]
        verdict = self._eventual_ord_sign(q)
        self._signs[q] = verdict
        return verdict

    def _eventual_ord_sign(self, q: LaurentMonomial) -> Verdict:
        if self.terminated:
            return undecided(terminatedAt=self.tower.termination.step)
        use_patterns = bool(self.feasible.certificates)
        for i in range(self.limit + 1):
            cert = certify_maximal_ideal_membership(self.tower, i, q)
            if cert is not None:
                return Verdict(VerdictStatus.CERTIFIED_YES, "positive", [cert], ["order-valuation-trichotomy"],
                               {"frame": i})
            cert = certify_maximal_ideal_membership(self.tower, i, q.inverse())
            if cert is not None:
                return Verdict(VerdictStatus.CERTIFIED_YES, "negative", [cert], ["order-valuation-trichotomy"],
                               {"frame": i, "inverseInMaximalIdeal": True})
            if use_patterns and i >= self.feasible.start:
                found = exponent_pattern(self.tower, q, i, self.feasible)
                if found is not None:
                    return Verdict(VerdictStatus.CERTIFIED_YES, _sign_name(found.order), [found.certificate],
                                   ["invariant-exponent", "order-valuation-trichotomy"],
                                   {"frame": i, "exponent": list(found.exponent), "order": found.order})
        first = max(0, self.limit - self.config.window + 1)
        signs = [_sign_name(self.tower.ord(i, q)) for i in range(first, self.limit + 1)]
        if len(set(signs)) == 1:
            return Verdict(VerdictStatus.EVIDENCE, signs[0], citations=["order-valuation-trichotomy"],
                           evidence={"fromFrame": first, "toFrame": self.limit})
        return undecided(fromFrame=first, toFrame=self.limit, signs=signs)

    def member_v(self, q: LaurentMonomial) -> Verdict:
        """q ∈ V iff ord_n(q) ≥ 0 for large n."""
        sign = self.eventual_ord_sign(q)
        if sign.status is VerdictStatus.UNDECIDED:
            return sign
        holds = sign.answer != "negative"
        citations = sign.citations + ["boundary-valuation-membership"]
        if sign.status is VerdictStatus.EVIDENCE:
            return Verdict(VerdictStatus.EVIDENCE, "yes" if holds else "no", sign.certificates, citations,
                           sign.evidence)
        return Verdict(VerdictStatus.CERTIFIED_YES if holds else VerdictStatus.CERTIFIED_NO, None,
                       sign.certificates, citations, {"sign": sign.answer, **sign.evidence})

    def member_s(self, q: LaurentMonomial) -> Verdict:
        if q not in self._memberships:
            self._memberships[q] = self._member_s(q)
        return self._memberships[q]

    def _member_s(self, q: LaurentMonomial) -> Verdict:
        use_patterns = bool(self.feasible.certificates)
        for i in range(self.limit + 1):
            cert = certify_ring_membership(self.tower, i, q)
            if cert is not None:
                return Verdict(VerdictStatus.CERTIFIED_YES, None, [cert], ["union-membership"], {"frame": i})
            if use_patterns and i >= self.feasible.start:
                found = exponent_pattern(self.tower, q, i, self.feasible)
                if found is not None and not found.in_ring():
                    return Verdict(VerdictStatus.CERTIFIED_NO, None, [found.certificate],
                                   ["invariant-exponent", "union-membership"],
                                   {"frame": i, "exponent": list(found.exponent)})
        sign = self.eventual_ord_sign(q)
        if sign.certified and sign.answer == "negative":
            return Verdict(VerdictStatus.CERTIFIED_NO, None, sign.certificates,
                           sign.citations + ["boundary-valuation-membership", "hull-valuation-decomposition"],
                           {"sign": "negative", **sign.evidence})
        return undecided(horizon=self.limit)

    def member_t(self, q: LaurentMonomial) -> Verdict:
        """q ∈ T = S[1/x] for the N-primary candidate x; only as good as the N-primary verdict."""
        candidate, primary = self.n_primary
        if candidate is None or primary.status is VerdictStatus.UNDECIDED:
            return undecided(reason="no N-primary element")
        certified = primary.certified
        feasible = self.feasible
        for i in range(self.limit + 1):
            if not self.tower.member_ring(i, candidate):
                continue
            uq = self.tower.frame_exponent(i, q)
            ux = self.tower.frame_exponent(i, candidate)
            n = _repair_power(uq, ux)
            if n is not None and n <= self.config.horizon:
                membership = certify_ring_membership(self.tower, i, q * candidate ** n)
                return Verdict(VerdictStatus.CERTIFIED_YES if certified else VerdictStatus.EVIDENCE,
                               None if certified else "yes", [membership] + primary.certificates,
                               ["noetherian-hull", "union-membership"] + primary.citations,
                               {"frame": i, "power": n, "generator": self.render(candidate)})
            if feasible.certificates and i >= feasible.start:
                for t in range(self.tower.dimension):
                    if t not in feasible and uq[t] < 0 and ux[t] == 0:
                        return Verdict(VerdictStatus.CERTIFIED_NO if certified else VerdictStatus.EVIDENCE,
                                       None if certified else "no", feasible.certificates + primary.certificates,
                                       ["noetherian-hull", "invariant-exponent"] + primary.citations,
                                       {"frame": i, "slot": t, "generator": self.render(candidate)})
        return undecided(horizon=self.limit)

    def order_valuation_witness(self, j: int) -> Optional[Certificate]:
        """A parameter of a later frame, hence an element of S, with negative order at frame j."""
        if j not in self._witnesses:
            self._witnesses[j] = self._order_valuation_witness(j)
        return self._witnesses[j]

    def _order_valuation_witness(self, j: int) -> Optional[Certificate]:
        for n in range(j + 1, j + self.config.window + 1):
            if not self.tower.available(n):
                return None
            for k in range(self.tower.dimension):
                cert = certify_negative_order(self.tower, j, n, k)
                if cert is not None:
                    return cert
        return None

    def epd_report(self) -> EpdReport:
        d = self.tower.dimension
        persisting = {}
        if self.terminated:
            persisting = {t: undecided(terminatedAt=self.tower.termination.step) for t in range(d)}
        else:
            centers = self.tower.center_history(self.limit)
            feasible = self.feasible
            for t in range(d):
                if t in centers:
                    cert = certify_center(self.tower, t, centers.index(t))
                    persisting[t] = Verdict(VerdictStatus.CERTIFIED_NO, None, [cert], ["transform-properness"],
                                            {"centerAt": cert.start})
                elif feasible.certificates and t not in feasible and not self.tower.centered_before(t, feasible.start):
                    persisting[t] = Verdict(VerdictStatus.CERTIFIED_YES, None, feasible.certificates,
                                            ["transform-properness", "exceptional-contraction"],
                                            {"feasibleCenters": list(feasible.slots), "fromFrame": feasible.start})
                else:
                    persisting[t] = Verdict(VerdictStatus.EVIDENCE, "yes", citations=["transform-properness"],
                                            evidence={"neverCenteredUpTo": self.limit})
        order_valuations = []
        for j in range(self.limit + 1):
            cert = self.order_valuation_witness(j)
            if cert is None:
                order_valuations.append(undecided(frame=j))
            else:
                witness = self.tower.frame(cert.witness["witnessFrame"]).parameter(cert.witness["slot"])
                order_valuations.append(Verdict(VerdictStatus.CERTIFIED_NO, None, [cert],
                                                ["order-valuation-bound", "union-membership"],
                                                {"witness": self.render(witness), "order": cert.witness["order"]}))
        return EpdReport(persisting, order_valuations)

    def _certificate_frame(self) -> int:
        return self.constant_center.start if self.constant_center is not None else self.feasible.start

    def witness_pair_candidates(self) -> List[Tuple[str, LaurentMonomial]]:
        """The probes, then every ratio of two parameters of the frame the certificates start from."""
        frame = self.tower.frame(self._certificate_frame())
        candidates = list(self.probes.items())
        d = self.tower.dimension
        for a in range(d):
            for b in range(a + 1, d):
                q = frame.parameter(a) / frame.parameter(b)
                candidates.append((self.render(q), q))
        return candidates

    def colon_candidates(self) -> List[Tuple[str, LaurentMonomial]]:
        """The probes, then p_t/(p_a·p_b) for each slot t outside a certified pair of feasible centers {a, b}."""
        candidates = list(self.probes.items())
        feasible = self.feasible
        if feasible.certificates and len(feasible.slots) == 2:
            frame = self.tower.frame(feasible.start)
            a, b = feasible.slots
            for t in range(self.tower.dimension):
                if t not in feasible:
                    q = frame.parameter(t) / (frame.parameter(a) * frame.parameter(b))
                    candidates.append((self.render(q), q))
        return candidates

    def classify_shannon(self) -> ClassificationReport:
        report = ClassificationReport(self.config.horizon)
        tie = certify_tie(self.tower) if self.terminated else None
        if tie is not None:
            step = tie.start
            finite = Verdict(VerdictStatus.CERTIFIED_YES, None, [tie], ["prime-divisor-finite-sequence"],
                             {"step": step, "slots": tie.witness["slots"]})
            report.add(FactKind.TOWER_FINITE, None, finite)
            report.add(FactKind.TOWER_INFINITE, None, _negated(finite))
            report.inferences.append(Inference("tie-termination", [f"minimum weight tied at step {step}"],
                                               [FactKind.TOWER_FINITE.value], ["prime-divisor-finite-sequence"]))
            report.notes.append(f"The minimum weight is tied at step {step}: the center leaves the monomial locus,"
                                f" so no further facts are classified.")
            logging.info(f"Tower is finite: tie at step {step}")
            return report

        if self.tower_infinite is not None:
            infinite = Verdict(VerdictStatus.CERTIFIED_YES, None, [self.tower_infinite],
                               [self.tower_infinite.citation])
        else:
            infinite = Verdict(VerdictStatus.EVIDENCE, "yes", evidence={"activeUpTo": self.limit})
        report.add(FactKind.TOWER_INFINITE, None, infinite)
        report.add(FactKind.TOWER_FINITE, None, _negated(infinite))

        maximal = self.classify_maximal_ideal()
        report.add(FactKind.N_PRINCIPAL, None, _boolean(maximal, "principal"))
        report.add(FactKind.N_IDEMPOTENT, None, _boolean(maximal, "idempotent"))

        candidate, primary = self.n_primary
        report.add(FactKind.N_PRIMARY, self.render(candidate) if candidate is not None else None, primary)

        archimedean = self.archimedean_check()
        report.add(FactKind.ARCHIMEDEAN, None, _boolean(archimedean, "archimedean"))
        report.add(FactKind.NON_ARCHIMEDEAN, None, _boolean(archimedean, "nonarchimedean"))

        for name, q in self.probes.items():
            self._add_memberships(report, name, q)

        epd = self.epd_report()
        report.epd_lower_bound = epd.lower_bound
        for t, verdict in epd.persisting.items():
            report.add(FactKind.VARIABLE_PERSISTS, self.names[t], verdict)
        for j, verdict in enumerate(epd.order_valuations):
            report.add(FactKind.ORDER_VALUATION_CONTAINS_S, str(j), verdict)
        report.notes.append("Persisting variables and order valuation refutations are a lower bound on the essential"
                            " prime divisors: height one primes that are not monomial are not seen.")

        report.add(FactKind.IS_DVR, None, self._is_dvr(report))
        self._classify_valuation(report)
        report.violations = check_consistency(report.facts)
        for violation in report.violations:
            logging.warning(f"Consistency violation: {violation}")
        return report

    def _add_memberships(self, report: ClassificationReport, name: str, q: LaurentMonomial):
        if report.fact(FactKind.IN_S, name) is not None:
            return
        report.add(FactKind.IN_S, name, self.member_s(q))
        report.add(FactKind.IN_V, name, self.member_v(q))
        report.add(FactKind.IN_T, name, self.member_t(q))

    def _is_dvr(self, report: ClassificationReport) -> Verdict:
        """S is a DVR iff N is principal and S is dominated by a rank one valuation ring (hence archimedean)."""
        idempotent = report.fact(FactKind.N_IDEMPOTENT).verdict
        principal = report.fact(FactKind.N_PRINCIPAL).verdict
        archimedean = report.fact(FactKind.ARCHIMEDEAN).verdict
        for refuting in (idempotent, _negated(archimedean)):
            if refuting.status is VerdictStatus.CERTIFIED_YES:
                return Verdict(VerdictStatus.CERTIFIED_NO, None, refuting.certificates,
                               refuting.citations + ["dvr-criterion"])
        if principal.status is VerdictStatus.CERTIFIED_YES and archimedean.status is VerdictStatus.CERTIFIED_YES:
            return Verdict(VerdictStatus.CERTIFIED_YES, None, principal.certificates + archimedean.certificates,
                           principal.citations + archimedean.citations + ["dvr-criterion"])
        return undecided()

    def _classify_valuation(self, report: ClassificationReport):
        yes = VerdictStatus.CERTIFIED_YES
        infinite = report.fact(FactKind.TOWER_INFINITE).verdict
        if self.tower.dimension == 2 and infinite.status is yes:
            verdict = Verdict(yes, None, infinite.certificates, infinite.citations + ["two-dimensional-valuation"])
            report.add(FactKind.IS_VALUATION, None, verdict)
            report.add(FactKind.NOT_VALUATION, None, _negated(verdict))
            report.inferences.append(Inference("two-dimensional", ["dimension 2", "TowerInfinite certified_yes"],
                                               [FactKind.IS_VALUATION.value], verdict.citations))
            if report.status(FactKind.N_IDEMPOTENT) is yes:
                report.notes.append("The sequence switches strongly infinitely often: S is a rank one valuation ring"
                                    " of dimension one and no variable persists.")
            elif report.status(FactKind.N_PRINCIPAL) is yes:
                report.notes.append("The sequence is height one directed: S is a two-dimensional valuation ring and"
                                    " exactly one essential prime divisor contains it.")
            return

        refutations = []
        if report.status(FactKind.N_IDEMPOTENT) is yes:
            colon = self._colon_ring_refutation(report)
            if colon is not None:
                refutations.append(colon)
        pair = self._witness_pair_refutation(report)
        if pair is not None:
            refutations.append(pair)

        if not refutations:
            if report.status(FactKind.N_PRINCIPAL) is yes and report.status(FactKind.NON_ARCHIMEDEAN) is yes:
                report.notes.append("N is principal and S is not archimedean: S has dimension at least 2 and is not"
                                    " a DVR; whether it is a valuation ring is left open without a witness.")
            report.add(FactKind.IS_VALUATION, None, undecided())
            report.add(FactKind.NOT_VALUATION, None, undecided())
            return
        not_valuation = refutations[0]
        report.add(FactKind.NOT_VALUATION, None, not_valuation)
        report.add(FactKind.IS_VALUATION, None, _negated(not_valuation))

    def _colon_ring_refutation(self, report: ClassificationReport) -> Optional[Verdict]:
        """
        θ ∉ S, θ ∈ T and ord_i(θ) bounded below give θN ⊆ N, so θ ∈ (N : N). A valuation domain with idempotent
        maximal ideal is its own colon ring, so S is not one.
        """
        yes, no = VerdictStatus.CERTIFIED_YES, VerdictStatus.CERTIFIED_NO
        for name, q in self.colon_candidates():
            outside, inside_hull = self.member_s(q), self.member_t(q)
            if outside.status is not no or inside_hull.status is not yes:
                continue
            found = self.pattern(q)
            if found is None:
                continue
            self._add_memberships(report, name, q)
            colon = Verdict(yes, None, outside.certificates + inside_hull.certificates + [found.certificate],
                            ["colon-ring-membership", "hull-valuation-decomposition", "invariant-exponent"],
                            {"order": found.order, "fromFrame": found.start})
            report.add(FactKind.IN_N_COLON_N, name, colon)
            report.inferences.append(Inference(
                "colon-ring",
                ["NIdempotent certified_yes", f"InS({name}) certified_no", f"InT({name}) certified_yes",
                 f"ord({name}) = {found.order} from frame {found.start}"],
                [f"{FactKind.IN_N_COLON_N.value}({name})", FactKind.NOT_VALUATION.value],
                ["colon-ring-membership", "valuation-not-colon-closed"]))
            return Verdict(yes, None, colon.certificates, ["colon-ring-membership", "valuation-not-colon-closed"],
                           {"witness": name})
        return None

    def _witness_pair_refutation(self, report: ClassificationReport) -> Optional[Verdict]:
        """q ∉ S and 1/q ∉ S."""
        no = VerdictStatus.CERTIFIED_NO
        for name, q in self.witness_pair_candidates():
            inside, inverse_inside = self.member_s(q), self.member_s(q.inverse())
            if inside.status is not no or inverse_inside.status is not no:
                continue
            inverse_name = f"1/({name})"
            if report.fact(FactKind.IN_S, name) is None:
                report.add(FactKind.IN_S, name, inside)
            report.add(FactKind.IN_S, inverse_name, inverse_inside)
            report.inferences.append(Inference("witness-pair",
                                               [f"InS({name}) certified_no", f"InS({inverse_name}) certified_no"],
                                               [FactKind.NOT_VALUATION.value], ["witness-pair"]))
            return Verdict(VerdictStatus.CERTIFIED_YES, None, inside.certificates + inverse_inside.certificates,
                           inside.citations + inverse_inside.citations + ["witness-pair"], {"witness": name})
        return None


def check_consistency(facts: Sequence[Fact]) -> List[str]:
    """Certified facts that contradict each other, including any probe breaking S = V ∩ T."""
    violations = []
    certified: Dict[Tuple[FactKind, Optional[str]], VerdictStatus] = {}
    for fact in facts:
        if not fact.verdict.certified:
            continue
        key = (fact.kind, fact.subject)
        if key in certified and certified[key] is not fact.verdict.status:
            violations.append(f"{fact.label} certified both ways")
        certified[key] = fact.verdict.status
    yes = VerdictStatus.CERTIFIED_YES
    for a, b in EXCLUSIVE_PAIRS:
        if certified.get((a, None)) is yes and certified.get((b, None)) is yes:
            violations.append(f"{a.value} and {b.value} both certified")
    subjects = {f.subject for f in facts if f.kind is FactKind.IN_S}
    for subject in subjects:
        in_s = certified.get((FactKind.IN_S, subject))
        in_v = certified.get((FactKind.IN_V, subject))
        in_t = certified.get((FactKind.IN_T, subject))
        if in_s is yes and VerdictStatus.CERTIFIED_NO in (in_v, in_t):
            violations.append(f"{subject} certified in S but not in V ∩ T")
        if in_s is VerdictStatus.CERTIFIED_NO and in_v is yes and in_t is yes:
            violations.append(f"{subject} certified in V ∩ T but not in S")
    return violations
