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

import argparse
import logging
import sys
import traceback
from typing import List, Optional, TextIO

from analysis_config import AnalysisConfig
from frame_trace import stream_frame_summaries, write_trace_table, write_trace_machine
from report import run_scenario, print_report, write_machine_report
from scenario import Scenario, ScenarioError, load_scenario
from tower import StepLimitExceeded
from util import setup_stderr_logging, check_python_version, worst_status, RUNTIME_ERROR_STATUS, \
    INPUT_ERROR_STATUS, STEP_LIMIT_STATUS, ALL_PASSED_STATUS

TEXT_FORMAT = "text"
MACHINE_FORMAT = "machine"


class ScenarioArgumentParser(argparse.ArgumentParser):
    """Bad arguments and unreadable files are input errors."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"ERROR: {message}", file=sys.stderr)
        exit(INPUT_ERROR_STATUS)


def non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must not be negative: {value}")
    return value


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1: {value}")
    return value


def build_arg_parser() -> argparse.ArgumentParser:
    arg_parser = ScenarioArgumentParser(
        description="Classifies Shannon extensions of monomial quadratic sequences described by scenario files")
    arg_parser.add_argument("-v", "--verbose", action="store_true", help="Log every step of the computation.")
    commands = arg_parser.add_subparsers(dest="command", required=True)

    run_parser = commands.add_parser("run", help="Classify each scenario and check its assertions.")
    run_parser.add_argument("scenario_files", type=argparse.FileType(encoding="utf-8"), nargs="+",
                            help="JSON5 scenario files. See data/scenarios/ for examples.")
    run_parser.add_argument("--horizon", type=non_negative_int, default=None,
                            help="The last frame examined, overriding the scenario's horizon.")
    run_parser.add_argument("--format", choices=[TEXT_FORMAT, MACHINE_FORMAT], default=TEXT_FORMAT,
                            help="Plain text for reading, or a deterministic JSON report. Defaults to text.")
    run_parser.add_argument("--undecided-ok", action="store_true",
                            help="Treat assertions that could not be decided at the horizon as passing.")

    trace_parser = commands.add_parser("trace", help="Print the frames of a scenario's tower step by step.")
    trace_parser.add_argument("scenario_file", type=argparse.FileType(encoding="utf-8"),
                              help="A JSON5 scenario file.")
    trace_parser.add_argument("--steps", type=positive_int, default=10,
                              help="The number of frames to print. Defaults to 10.")
    trace_parser.add_argument("--format", choices=[TEXT_FORMAT, MACHINE_FORMAT], default=TEXT_FORMAT,
                              help="A fixed-width table, or a JSON document. Defaults to text.")

    validate_parser = commands.add_parser("validate", help="Check scenario files and list every problem found.")
    validate_parser.add_argument("scenario_files", type=argparse.FileType(encoding="utf-8"), nargs="+",
                                 help="JSON5 scenario files.")
    return arg_parser


def read_scenario(file: TextIO) -> Optional[Scenario]:
    try:
        return load_scenario(file)
    except ScenarioError as ex:
        logging.critical(f"ERROR: The scenario in {file.name} is invalid:")
        for error in ex.errors:
            logging.critical(f"   {error}")
        return None
    except UnicodeDecodeError as ex:
        logging.critical(f"ERROR: The scenario in {file.name} could not be read: {ex}")
        return None


def run_command(args, out: TextIO = sys.stdout) -> int:
    base = AnalysisConfig(undecided_ok=args.undecided_ok)
    statuses: List[int] = []
    for file in args.scenario_files:
        scenario = read_scenario(file)
        if scenario is None:
            statuses.append(INPUT_ERROR_STATUS)
            continue
        try:
            report = run_scenario(scenario, base, args.horizon)
        except StepLimitExceeded as ex:
            logging.critical(f"ERROR: Scenario '{scenario.name}': {ex}")
            statuses.append(STEP_LIMIT_STATUS)
            continue
        if args.format == MACHINE_FORMAT:
            write_machine_report(report, out)
        else:
            print_report(report, out)
        statuses.append(report.exit_status())
    return worst_status(statuses)


def trace_command(args, out: TextIO = sys.stdout) -> int:
    scenario = read_scenario(args.scenario_file)
    if scenario is None:
        return INPUT_ERROR_STATUS
    tower = scenario.build_tower(scenario.config())
    summaries = stream_frame_summaries(tower, args.steps, scenario.probe_monomials())
    try:
        if args.format == MACHINE_FORMAT:
            write_trace_machine(summaries, out)
        else:
            write_trace_table(summaries, out)
    except StepLimitExceeded as ex:
        logging.critical(f"ERROR: {ex}")
        return STEP_LIMIT_STATUS
    return ALL_PASSED_STATUS


def validate_command(args, out: TextIO = sys.stdout) -> int:
    statuses = []
    for file in args.scenario_files:
        scenario = read_scenario(file)
        if scenario is None:
            statuses.append(INPUT_ERROR_STATUS)
        else:
            print(f"{file.name}: OK ({scenario.name}, d={scenario.dimension}, {scenario.mode.value},"
                  f" {len(scenario.probes)} probes, {len(scenario.assertions)} assertions)", file=out)
            statuses.append(ALL_PASSED_STATUS)
    return worst_status(statuses)


def main(argv: Optional[List[str]] = None, out: TextIO = sys.stdout) -> int:
    args = build_arg_parser().parse_args(argv)

    setup_stderr_logging(args.verbose)

    if args.command == "run":
        return run_command(args, out)
    if args.command == "trace":
        return trace_command(args, out)
    return validate_command(args, out)


if __name__ == '__main__':
    check_python_version()
    try:
        exit(main())
    except Exception as e:
        traceback.print_exc()
        sys.stderr.flush()
        print(f"\nERROR: {e}", file=sys.stderr)
        exit(RUNTIME_ERROR_STATUS)
