import logging
from io import StringIO

import json5
import pytest

from analysis import ClassificationReport, VerdictStatus
from analysis_config import AnalysisConfig
from frame_trace import stream_frame_summaries, write_trace_table, write_trace_machine
from report import Outcome, Report, outcome_of, run_scenario, print_report
from scenario import parse_scenario
from shannon_scenario import main
from towers import scenario_path, principal_tower, archimedean_tower, plane_tie_tower
from util import worst_status

YES, NO = VerdictStatus.CERTIFIED_YES, VerdictStatus.CERTIFIED_NO

SCENARIOS = ["principal_nonarchimedean.json5", "archimedean_nonvaluation.json5", "plane_irrational.json5",
             "plane_rational_tie.json5"]

PRINCIPAL_SHORT = """
{
  version: 1,
  name: "principal-short",
  dimension: 3,
  mode: "lex",
  lexLength: 2,
  weights: [[0, 1], [1, 0], [1, 1]],
  horizon: 20,
  %s
}
"""


def read(file_name: str):
    with open(scenario_path(file_name), encoding="utf-8") as file:
        return parse_scenario(file.read())


def write_scenario(tmp_path, text: str) -> str:
    path = tmp_path / "scenario.json5"
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_outcomes():
    assert outcome_of(YES, YES) is Outcome.PASS
    assert outcome_of(VerdictStatus.UNDECIDED, VerdictStatus.UNDECIDED) is Outcome.PASS
    assert outcome_of(YES, NO) is Outcome.FAIL
    assert outcome_of(YES, VerdictStatus.EVIDENCE) is Outcome.UNDECIDED
    assert outcome_of(VerdictStatus.EVIDENCE, YES) is Outcome.FAIL


def test_worst_status():
    assert worst_status([]) == 0
    assert worst_status([0, 2, 0]) == 2
    assert worst_status([2, 1]) == 1
    assert worst_status([1, 4, 3]) == 3
    assert worst_status([3, 5]) == 5


@pytest.mark.parametrize("file_name", SCENARIOS)
def test_shipped_scenarios_pass(file_name):
    report = run_scenario(read(file_name))
    assert report.problems == []
    assert report.classification.violations == []
    assert [r.outcome for r in report.results] == [Outcome.PASS] * len(report.results)
    assert report.exit_status() == 0


def test_reports_are_deterministic():
    scenario = read("archimedean_nonvaluation.json5")
    first = run_scenario(scenario, horizon=30)
    second = run_scenario(scenario, horizon=30)
    assert first.machine_text() == second.machine_text()
    assert first.digest() == second.digest()
    assert json5.loads(first.machine_text())["settings"]["horizon"] == 30


def test_failed_assertion():
    scenario = parse_scenario(PRINCIPAL_SHORT % 'assertions: [{fact: "IsValuation", expect: "certified_yes"}],')
    report = run_scenario(scenario)
    assert report.results[0].outcome is Outcome.FAIL
    assert report.results[0].actual is NO
    assert report.exit_status() == 1


def test_every_subject_must_hold():
    scenario = parse_scenario(PRINCIPAL_SHORT % 'assertions: [{fact: "VariablePersists", subject: "*",'
                                                ' expect: "certified_yes"}],')
    result = run_scenario(scenario).results[0]
    assert result.matched == 3
    assert result.outcome is Outcome.FAIL
    assert result.fact.subject == "x"


def test_undecided_assertions():
    scenario = parse_scenario(PRINCIPAL_SHORT % 'assertions: [{fact: "IsDVR", expect: "certified_no"}],')
    report = Report(scenario, scenario.config(), ClassificationReport(20), [])
    assert report.results[0].outcome is Outcome.UNDECIDED
    assert report.results[0].matched == 0
    assert report.exit_status() == 2
    assert report.exit_status(undecided_ok=True) == 0
    assert Report(scenario, scenario.config(AnalysisConfig(undecided_ok=True)), ClassificationReport(20),
                  []).exit_status() == 0


def test_text_report():
    out = StringIO()
    print_report(run_scenario(read("plane_rational_tie.json5")), out)
    text = out.getvalue()
    assert "Scenario: plane-rational-tie" in text
    assert "tie-termination" in text
    assert "RESULT: 2 passed, 0 failed, 0 undecided" in text


def test_trace_of_constant_center():
    summaries = list(stream_frame_summaries(principal_tower(), 3))
    assert [s.center_name for s in summaries] == ["x", "x", "x"]
    assert summaries[2].parameters == ["x", "y/x^2", "z/x^2"]


def test_trace_of_alternating_centers():
    summaries = list(stream_frame_summaries(archimedean_tower(), 5))
    assert [s.center for s in summaries] == [0, 1, 1, 0, 0]
    assert summaries[2].parameters == ["x^2/y", "y/x", "z/y"]
    assert summaries[0].weights[1].startswith("1*sqrt(2) ≈ 1.414213")


def test_trace_stops_at_a_tie():
    summaries = list(stream_frame_summaries(plane_tie_tower(), 10))
    assert [s.index for s in summaries] == [0, 1, 2]
    assert [s.center_name for s in summaries] == ["x", "y/x", "TIE"]
    out = StringIO()
    write_trace_table(summaries, out)
    lines = out.getvalue().splitlines()
    assert lines[0].startswith("FRAME")
    assert lines[-1].startswith("Tower terminated at frame 2")
    out = StringIO()
    write_trace_machine(summaries, out)
    document = json5.loads(out.getvalue())
    assert document["terminated"] is True
    assert [f["center"] for f in document["frames"]] == [0, 1, None]


def test_trace_needs_a_step():
    with pytest.raises(ValueError):
        list(stream_frame_summaries(plane_tie_tower(), 0))


def test_main_validate():
    out = StringIO()
    assert main(["validate"] + [scenario_path(f) for f in SCENARIOS], out) == 0
    assert out.getvalue().count(": OK (") == 4


def test_main_run_machine_format():
    out = StringIO()
    assert main(["run", "--format", "machine", "--horizon", "40", scenario_path(SCENARIOS[2])], out) == 0
    document = json5.loads(out.getvalue())
    assert document["scenario"] == "plane-irrational"
    assert document["exitStatus"] == 0
    assert document["settings"]["horizon"] == 40


def test_main_run_reports_the_worst_status(tmp_path):
    failing = write_scenario(tmp_path, PRINCIPAL_SHORT % 'assertions: [{fact: "IsDVR", expect: "certified_yes"}],')
    assert main(["run", scenario_path(SCENARIOS[3]), failing], StringIO()) == 1


def test_main_trace():
    out = StringIO()
    assert main(["trace", "--steps", "3", scenario_path(SCENARIOS[0])], out) == 0
    assert len(out.getvalue().splitlines()) == 4


def test_invalid_scenario_is_an_input_error(tmp_path):
    path = write_scenario(tmp_path, PRINCIPAL_SHORT.replace("[[0, 1], [1, 0], [1, 1]]", "[[0, 0], [1, 0], [1, 1]]")
                          % "")
    assert main(["validate", path], StringIO()) == 3
    assert main(["run", path], StringIO()) == 3


def test_step_limit(tmp_path):
    path = write_scenario(tmp_path, PRINCIPAL_SHORT % "stepLimit: 5,")
    assert main(["run", path], StringIO()) == 4
    assert main(["trace", "--steps", "8", path], StringIO()) == 4


@pytest.mark.parametrize("argv", [["run", "--horizon", "-1", "x.json5"], ["trace", "--steps", "0", "x.json5"],
                                  ["run", "does-not-exist.json5"], ["frobnicate"], []])
def test_bad_arguments(argv):
    with pytest.raises(SystemExit) as raised:
        main(argv, StringIO())
    assert raised.value.code == 3


def test_main_run_with_the_tie_on_the_last_frame():
    assert main(["run", "--horizon", "2", scenario_path(SCENARIOS[3])], StringIO()) == 0


def test_main_run_with_a_hint_positive_only_before_the_constant_center(tmp_path):
    path = write_scenario(tmp_path, """
{
  version: 1,
  name: "late-constant-center",
  dimension: 3,
  mode: "lex",
  lexLength: 2,
  weights: [[1, 0], [1, 1], [2, 0]],
  horizon: 10,
  invariantHints: [[-1, 1, 0]],
  assertions: [{fact: "TowerInfinite", expect: "certified_yes"}],
}
""")
    assert main(["run", path], StringIO()) == 0


def test_repeated_runs_keep_one_log_handler():
    main(["validate", scenario_path(SCENARIOS[0])], StringIO())
    handlers = list(logging.root.handlers)
    main(["validate", scenario_path(SCENARIOS[0])], StringIO())
    assert logging.root.handlers == handlers
