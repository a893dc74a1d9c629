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
import sys
from logging import INFO, DEBUG
from typing import List, Optional, Callable, Any

import json5

ALL_PASSED_STATUS = 0
ASSERTION_FAILED_STATUS = 1
UNDECIDED_STATUS = 2
INPUT_ERROR_STATUS = 3
STEP_LIMIT_STATUS = 4
RUNTIME_ERROR_STATUS = 5


_stderr_handler: Optional[logging.StreamHandler] = None


def setup_stderr_logging(verbose: bool = False):
    """Installs one stderr handler on the root logger; later calls only retarget it and reset the level."""
    global _stderr_handler
    if _stderr_handler is None:
        _stderr_handler = logging.StreamHandler(sys.stderr)
        _stderr_handler.setFormatter(logging.Formatter())
        logging.root.addHandler(_stderr_handler)
    else:
        _stderr_handler.setStream(sys.stderr)
    logging.root.setLevel(DEBUG if verbose else INFO)


def check_python_version():
    # It might work with earlier versions, but I haven't tested
    if sys.version_info[0] < 3 or (sys.version_info[0] == 3 and sys.version_info[1] < 9):
        raise Exception("You must be using Python 3.9+ to run this tool.")


def dump_json5(data: Any) -> str:
    """Deterministic rendering: sorted keys, fixed indentation, plain JSON syntax."""
    return json5.dumps(data, sort_keys=True, indent=2, quote_keys=True, trailing_commas=False, ensure_ascii=False)


def read_and_convert_property(file_description: str, json_data: dict, property_name: str, allowed_types: set,
                              additional_msg: str, errors: List[str], converter: Optional[Callable[[Any], Any]] = None,
                              required: bool = True, default: Any = None):
    """
    Reads one property, checking its type and converting it. Problems are appended to errors (and None returned)
    so that a whole document can be checked in one pass.
    """
    if property_name not in json_data and not required:
        return default
    value = json_data.get(property_name)
    message = f"'{property_name}' must be in the {file_description} and {additional_msg}."
    if value is None or (isinstance(value, bool) and bool not in allowed_types) \
            or not any((isinstance(value, t) for t in allowed_types)):
        errors.append(message)
        return None

    if converter:
        try:
            value = converter(value)
        except (ValueError, TypeError, KeyError) as ex:
            errors.append(f"{message} ({ex})")
            return None

    return value


# Most severe last
_STATUS_SEVERITY = [ALL_PASSED_STATUS, UNDECIDED_STATUS, ASSERTION_FAILED_STATUS, STEP_LIMIT_STATUS,
                    INPUT_ERROR_STATUS, RUNTIME_ERROR_STATUS]


def worst_status(statuses: List[int]) -> int:
    return max(statuses, key=_STATUS_SEVERITY.index, default=ALL_PASSED_STATUS)
