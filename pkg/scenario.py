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

import logging
from fractions import Fraction
from typing import List, Optional, Dict, Any, Callable, TextIO

import json5

from analysis import FactKind, VerdictStatus
from analysis_config import AnalysisConfig
from monomials import LaurentMonomial, variable_names
from ordered_values import WeightMode, WeightValue, LexTuple, AlgebraicReal, Sign, check_basis
from tower import Tower
from util import read_and_convert_property, dump_json5

CURRENT_VERSION = 1

PROBE_FACTS = {FactKind.IN_S, FactKind.IN_V, FactKind.IN_T, FactKind.IN_N_COLON_N}
ALL_SUBJECTS = "*"

DESCRIPTION = "scenario"


class ScenarioError(ValueError):
    errors: List[str]

    def __init__(self, errors: List[str]):
        super().__init__("Invalid scenario: " + "; ".join(errors))
        self.errors = list(errors)


def _at_least(minimum: int) -> Callable[[int], int]:
    def check(value: int) -> int:
        if value < minimum:
            raise ValueError(f"{value} is less than {minimum}")
        return value

    return check


def _check_version(value: int) -> int:
    if value != CURRENT_VERSION:
        raise ValueError(f"unsupported version {value}")
    return value


def _int_list(value: Any, length: int, what: str) -> List[int]:
    if not isinstance(value, list) or len(value) != length \
            or any(isinstance(e, bool) or not isinstance(e, int) for e in value):
        raise ValueError(f"{what} must be a list of {length} integers: {value!r}")
    return list(value)


def rational_json(q: Fraction):
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class Probe:
    name: str
    monomial: LaurentMonomial

    def __init__(self, probe_json: Any, d: int):
        if not isinstance(probe_json, dict) or not isinstance(probe_json.get("name"), str):
            raise ValueError(f"A probe needs a 'name' string: {probe_json!r}")
        self.name = probe_json["name"]
        exponents = _int_list(probe_json.get("exponents"), d, f"Exponents of probe '{self.name}'")
        self.monomial = LaurentMonomial(exponents)

    def to_json(self) -> dict:
        return {"name": self.name, "exponents": list(self.monomial.exponents)}


class Assertion:
    fact: FactKind
    subject: Optional[str]
    expect: VerdictStatus

    def __init__(self, assertion_json: Any, probe_names: List[str], names: List[str]):
        if not isinstance(assertion_json, dict):
            raise ValueError(f"An assertion must be an object: {assertion_json!r}")
        self.fact = FactKind.from_str(str(assertion_json.get("fact")))
        try:
            self.expect = VerdictStatus(assertion_json.get("expect"))
        except ValueError:
            raise ValueError(f"Assertion on {self.fact.value} must expect one of "
                             f"{[s.value for s in VerdictStatus]}, got {assertion_json.get('expect')!r}")
        subject = assertion_json.get("subject")
        self.subject = None if subject is None else str(subject)
        if self.fact in PROBE_FACTS and self.subject not in probe_names:
            raise ValueError(f"Assertion on {self.fact.value} refers to undefined probe {self.subject!r}")
        if self.fact is FactKind.VARIABLE_PERSISTS and self.subject not in names + [ALL_SUBJECTS]:
            raise ValueError(f"Assertion on {self.fact.value} must name a variable from {names}")
        if self.fact is FactKind.ORDER_VALUATION_CONTAINS_S and self.subject != ALL_SUBJECTS \
                and not (self.subject or "").isdigit():
            raise ValueError(f"Assertion on {self.fact.value} must name a frame index or '{ALL_SUBJECTS}'")

    @property
    def label(self) -> str:
        return self.fact.value if self.subject is None else f"{self.fact.value}({self.subject})"

    def to_json(self) -> dict:
        result = {"fact": self.fact.value, "expect": self.expect.value}
        if self.subject is not None:
            result["subject"] = self.subject
        return result


class Scenario:
    name: str
    description: Optional[str]
    dimension: int
    mode: WeightMode
    lex_length: Optional[int]
    basis: Optional[List[int]]
    weights: List[WeightValue]
    horizon: Optional[int]
    window: Optional[int]
    n_max: Optional[int]
    step_limit: Optional[int]
    invariant_hints: List[List[int]]
    probes: List[Probe]
    assertions: List[Assertion]

    def __init__(self, scenario_json: dict):
        errors: List[str] = []

        def read(property_name: str, allowed_types: set, additional_msg: str, **kwargs):
            return read_and_convert_property(DESCRIPTION, scenario_json, property_name, allowed_types, additional_msg,
                                             errors, **kwargs)

        read("version", {int}, f"must be {CURRENT_VERSION}", converter=_check_version)
        self.name = read("name", {str}, "must be a string", required=False, default="unnamed")
        self.description = read("description", {str}, "must be a string", required=False)
        self.dimension = read("dimension", {int}, "must be an integer of at least 2", converter=_at_least(2))
        self.mode = read("mode", {str}, "must be \"lex\" or \"algebraic\"", converter=WeightMode)
        self.lex_length = None
        self.basis = None
        if self.mode is WeightMode.LEX:
            self.lex_length = read("lexLength", {int}, "must be a positive integer", converter=_at_least(1))
        elif self.mode is WeightMode.ALGEBRAIC:
            self.basis = read("basis", {list}, "must be a strictly increasing list of squarefree integers starting"
                                               " with 1", converter=lambda b: list(check_basis(b)))
        weights_json = read("weights", {list}, "must be a list with one coefficient list per variable")
        self.horizon = read("horizon", {int}, "must be a nonnegative integer", converter=_at_least(0),
                            required=False)
        self.window = read("window", {int}, "must be a positive integer", converter=_at_least(1), required=False)
        self.n_max = read("nMax", {int}, "must be a positive integer", converter=_at_least(1), required=False)
        self.step_limit = read("stepLimit", {int}, "must be a positive integer", converter=_at_least(1),
                               required=False)
        hints_json = read("invariantHints", {list}, "must be a list of integer forms", required=False, default=[])
        probes_json = read("probes", {list}, "must be a list of probes", required=False, default=[])
        assertions_json = read("assertions", {list}, "must be a list of assertions", required=False, default=[])

        self.weights = []
        self.invariant_hints = []
        self.probes = []
        self.assertions = []
        d = self.dimension
        shape_known = self.mode is not None and (self.lex_length is not None or self.basis is not None)
        if d is None or not shape_known:
            raise ScenarioError(errors)
        names = variable_names(d)

        if weights_json is not None:
            if len(weights_json) != d:
                errors.append(f"'weights' must have one entry per variable: expected {d}, got {len(weights_json)}.")
            else:
                for name, weight_json in zip(names, weights_json):
                    try:
                        weight = self._weight(weight_json)
                        if weight.sign() is not Sign.POSITIVE:
                            errors.append(f"Weight of variable {name} must be positive, got {weight}.")
                        self.weights.append(weight)
                    except ValueError as ex:
                        errors.append(f"Weight of variable {name}: {ex}.")

        for hint in hints_json or []:
            try:
                self.invariant_hints.append(_int_list(hint, d, "An invariant hint"))
            except ValueError as ex:
                errors.append(str(ex))

        for probe_json in probes_json or []:
            try:
                probe = Probe(probe_json, d)
                if any(p.name == probe.name for p in self.probes):
                    errors.append(f"Probe name '{probe.name}' is used twice.")
                self.probes.append(probe)
            except ValueError as ex:
                errors.append(f"Malformed probe: {ex}")

        probe_names = [p.name for p in self.probes]
        for assertion_json in assertions_json or []:
            try:
                self.assertions.append(Assertion(assertion_json, probe_names, names))
            except ValueError as ex:
                errors.append(f"Dangling or malformed assertion: {ex}")

        if errors:
            raise ScenarioError(errors)

    def _weight(self, weight_json: Any) -> WeightValue:
        if not isinstance(weight_json, list):
            raise ValueError(f"must be a list of coefficients, got {weight_json!r}")
        if self.mode is WeightMode.LEX:
            if len(weight_json) != self.lex_length:
                raise ValueError(f"expected {self.lex_length} lex components, got {len(weight_json)}")
            return LexTuple(weight_json)
        return AlgebraicReal(self.basis, weight_json)

    def probe_monomials(self) -> Dict[str, LaurentMonomial]:
        return {p.name: p.monomial for p in self.probes}

    def config(self, base: Optional[AnalysisConfig] = None) -> AnalysisConfig:
        """Scenario values override the base (default) settings."""
        base = base or AnalysisConfig()
        return AnalysisConfig(base.horizon if self.horizon is None else self.horizon,
                              base.window if self.window is None else self.window,
                              base.n_max if self.n_max is None else self.n_max,
                              base.step_limit if self.step_limit is None else self.step_limit,
                              base.undecided_ok)

    def build_tower(self, config: AnalysisConfig) -> Tower:
        return Tower(self.dimension, self.weights, config.step_limit)

    def to_json(self) -> dict:
        result: Dict[str, Any] = {"version": CURRENT_VERSION, "name": self.name, "dimension": self.dimension,
                                  "mode": self.mode.value,
                                  "weights": [[rational_json(c) for c in w.coeffs] for w in self.weights]}
        if self.description is not None:
            result["description"] = self.description
        if self.mode is WeightMode.LEX:
            result["lexLength"] = self.lex_length
        else:
            result["basis"] = list(self.basis)
        for key, value in (("horizon", self.horizon), ("window", self.window), ("nMax", self.n_max),
                           ("stepLimit", self.step_limit)):
            if value is not None:
                result[key] = value
        result["invariantHints"] = [list(h) for h in self.invariant_hints]
        result["probes"] = [p.to_json() for p in self.probes]
        result["assertions"] = [a.to_json() for a in self.assertions]
        return result

    def __eq__(self, o: object) -> bool:
        return isinstance(o, Scenario) and o.to_json() == self.to_json()

    def __repr__(self):
        return f"Scenario({self.name}, d={self.dimension}, {self.mode.value})"


def parse_scenario(text: str) -> Scenario:
    try:
        scenario_json = json5.loads(text)
    except ValueError as ex:
        raise ScenarioError([f"The scenario could not be parsed: {ex}"])
    if not isinstance(scenario_json, dict):
        raise ScenarioError(["The scenario must be an object."])
    return Scenario(scenario_json)


def load_scenario(file: TextIO) -> Scenario:
    scenario = parse_scenario(file.read())
    logging.info(f"Scenario '{scenario.name}' loaded from {getattr(file, 'name', 'input')}")
    return scenario


def serialize_scenario(scenario: Scenario) -> str:
    return dump_json5(scenario.to_json())
