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

from typing import Optional

DEFAULT_HORIZON = 500
DEFAULT_WINDOW = 50
DEFAULT_N_MAX = 10
DEFAULT_STEP_LIMIT = 100000


class AnalysisConfig:
    horizon: int
    window: int
    n_max: int
    step_limit: int
    undecided_ok: bool

    def __init__(self,
                 horizon: int = DEFAULT_HORIZON,
                 window: int = DEFAULT_WINDOW,
                 n_max: int = DEFAULT_N_MAX,
                 step_limit: int = DEFAULT_STEP_LIMIT,
                 undecided_ok: bool = False):
        if horizon < 0 or window < 1 or n_max < 1 or step_limit < 1:
            raise ValueError(f"Invalid analysis settings: horizon={horizon}, window={window}, n_max={n_max},"
                             f" step_limit={step_limit}")
        self.horizon = horizon
        self.window = window
        self.n_max = n_max
        self.step_limit = step_limit
        self.undecided_ok = undecided_ok

    def with_overrides(self, horizon: Optional[int] = None, undecided_ok: Optional[bool] = None) -> "AnalysisConfig":
        return AnalysisConfig(self.horizon if horizon is None else horizon,
                              self.window,
                              self.n_max,
                              self.step_limit,
                              self.undecided_ok if undecided_ok is None else undecided_ok)

    def __repr__(self):
        return (f"AnalysisConfig(horizon={self.horizon}, window={self.window}, n_max={self.n_max},"
                f" step_limit={self.step_limit}, undecided_ok={self.undecided_ok})")
