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

import hashlib
import logging
import sys
from enum import Enum
from typing import List, Optional, TextIO

from analysis import ClassificationReport, Fact, ShannonAnalysis, VerdictStatus
from analysis_config import AnalysisConfig
from certificates import ANCHORS, replay
from scenario import Scenario, Assertion, ALL_SUBJECTS
from tower import Tower
from util import dump_json5, ALL_PASSED_STATUS, ASSERTION_FAILED_STATUS, UNDECIDED_STATUS

REPORT_VERSION = 1


class Outcome(Enum):
    PASS = "pass"
    FAIL = "fail"
    UNDECIDED = "undecided"


CERTIFIED = (VerdictStatus.CERTIFIED_YES, VerdictStatus.CERTIFIED_NO)


def outcome_of(expected: VerdictStatus, actual: VerdictStatus) -> Outcome:
    if actual is expected:
        return Outcome.PASS
    if expected in CERTIFIED and actual not in CERTIFIED:
        return Outcome.UNDECIDED
    return Outcome.FAIL


class AssertionResult:
    def __init__(self, assertion: Assertion, actual: VerdictStatus, outcome: Outcome, matched: int,
                 fact: Optional[Fact] = None):
        self.assertion = assertion
        self.actual = actual
        self.outcome = outcome
        # Number of facts the assertion was checked against
        self.matched = matched
        self.fact = fact

    def to_json(self) -> dict:
        result = {"assertion": self.assertion.label, "expected": self.assertion.expect.value,
                  "actual": self.actual.value, "outcome": self.outcome.value, "matched": self.matched}
        if self.fact is not None:
            result["subject"] = self.fact.subject
        return result


def evaluate_assertion(assertion: Assertion, classification: ClassificationReport) -> AssertionResult:
    """
    A subject of '*' must hold for every fact of the kind; no subject means the first fact of the kind.
    An assertion with nothing to check against is undecided.
    """
    facts = [f for f in classification.facts if f.kind is assertion.fact]
    if assertion.subject is None:
        facts = facts[:1]
    elif assertion.subject != ALL_SUBJECTS:
        facts = [f for f in facts if f.subject == assertion.subject]
    if not facts:
        return AssertionResult(assertion, VerdictStatus.UNDECIDED, Outcome.UNDECIDED, 0)
    worst = None
    for fact in facts:
        outcome = outcome_of(assertion.expect, fact.verdict.status)
        if worst is None or _severity(outcome) > _severity(worst[1]):
            worst = (fact, outcome)
    fact, outcome = worst
    return AssertionResult(assertion, fact.verdict.status, outcome, len(facts), fact)


def _severity(outcome: Outcome) -> int:
    return {Outcome.PASS: 0, Outcome.UNDECIDED: 1, Outcome.FAIL: 2}[outcome]


def check_citations(classification: ClassificationReport) -> List[str]:
    """Every certified verdict must cite at least one registered anchor, and only registered anchors."""
    problems = []
    for fact in classification.facts:
        verdict = fact.verdict
        if not verdict.certified:
            continue
        if not verdict.citations:
            problems.append(f"{fact.label} is certified without a citation")
        for citation in verdict.citations + [c.citation for c in verdict.certificates]:
            if citation not in ANCHORS:
                problems.append(f"{fact.label} cites unknown anchor '{citation}'")
    for inference in classification.inferences:
        for citation in inference.citations:
            if citation not in ANCHORS:
                problems.append(f"Inference {inference.rule} cites unknown anchor '{citation}'")
    return problems


def replay_failures(tower: Tower, classification: ClassificationReport) -> List[str]:
    failures = []
    for fact in classification.facts:
        for cert in fact.verdict.certificates:
            if not replay(tower, cert):
                failures.append(f"{fact.label}: {cert.summary()}")
    return failures


class Report:
    scenario: Scenario
    config: AnalysisConfig
    classification: ClassificationReport
    results: List[AssertionResult]
    problems: List[str]

    def __init__(self, scenario: Scenario, config: AnalysisConfig, classification: ClassificationReport,
                 problems: List[str]):
        self.scenario = scenario
        self.config = config
        self.classification = classification
        self.results = [evaluate_assertion(a, classification) for a in scenario.assertions]
        self.problems = problems

    def count(self, outcome: Outcome) -> int:
        return sum(1 for r in self.results if r.outcome is outcome)

    def exit_status(self, undecided_ok: Optional[bool] = None) -> int:
        undecided_ok = self.config.undecided_ok if undecided_ok is None else undecided_ok
        if self.classification.violations or self.problems or self.count(Outcome.FAIL):
            return ASSERTION_FAILED_STATUS
        if self.count(Outcome.UNDECIDED) and not undecided_ok:
            return UNDECIDED_STATUS
        return ALL_PASSED_STATUS

    def to_json(self) -> dict:
        return {
            "version": REPORT_VERSION,
            "scenario": self.scenario.name,
            "settings": {"horizon": self.config.horizon, "window": self.config.window, "nMax": self.config.n_max,
                         "stepLimit": self.config.step_limit},
            "classification": self.classification.to_json(),
            "assertions": [r.to_json() for r in self.results],
            "problems": self.problems,
            "exitStatus": self.exit_status(),
        }

    def machine_text(self) -> str:
        return dump_json5(self.to_json())

    def digest(self) -> str:
        return hashlib.sha256(self.machine_text().encode("utf-8")).hexdigest()


def run_scenario(scenario: Scenario, base: Optional[AnalysisConfig] = None,
                 horizon: Optional[int] = None) -> Report:
    """Builds the tower, classifies the Shannon extension and checks the scenario's assertions."""
    config = scenario.config(base)
    if horizon is not None:
        config = config.with_overrides(horizon=horizon)
    logging.info(f"Running scenario '{scenario.name}' with {config}")
    tower = scenario.build_tower(config)
    analysis = ShannonAnalysis(tower, config, scenario.invariant_hints, scenario.probe_monomials())
    classification = analysis.classify_shannon()
    problems = check_citations(classification) + replay_failures(tower, classification)
    for problem in problems:
        logging.warning(f"Report problem: {problem}")
    report = Report(scenario, config, classification, problems)
    logging.info(f"Scenario '{scenario.name}': {report.count(Outcome.PASS)} passed, {report.count(Outcome.FAIL)}"
                 f" failed, {report.count(Outcome.UNDECIDED)} undecided")
    return report


def print_report(report: Report, file: TextIO = sys.stdout):
    print("\n" + ("-" * 100), file=file)
    print(f"Scenario: {report.scenario.name}   (horizon {report.config.horizon})", file=file)
    if report.scenario.description:
        print(f"   {report.scenario.description}", file=file)

    print("\n   Facts:", file=file)
    for fact in report.classification.facts:
        verdict = fact.verdict
        answer = f" ({verdict.answer})" if verdict.answer is not None and not verdict.certified else ""
        citations = ", ".join(verdict.citations)
        print(f"      {fact.label:40s}   {verdict.status.value + answer:22s}   {citations}", file=file)
        for cert in verdict.certificates:
            print(f"         {cert.summary()}", file=file)

    if report.classification.inferences:
        print("\n   Inferences:", file=file)
        for inference in report.classification.inferences:
            print(f"      {inference.rule:20s}   {'; '.join(inference.premises)}"
                  f"  =>  {', '.join(inference.conclusions)}", file=file)

    for note in report.classification.notes:
        print(f"\n   Note: {note}", file=file)
    for violation in report.classification.violations:
        print(f"\n   VIOLATION: {violation}", file=file)
    for problem in report.problems:
        print(f"\n   PROBLEM: {problem}", file=file)

    if report.results:
        print("\n   Assertions:", file=file)
        for result in report.results:
            print(f"      {result.assertion.label:40s}   expected {result.assertion.expect.value:14s}"
                  f"   actual {result.actual.value:14s}   {result.outcome.value.upper()}", file=file)
    print(f"\n   RESULT: {report.count(Outcome.PASS)} passed, {report.count(Outcome.FAIL)} failed,"
          f" {report.count(Outcome.UNDECIDED)} undecided\n", file=file)


def write_machine_report(report: Report, file: TextIO = sys.stdout):
    file.write(report.machine_text())
    file.write("\n")
