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
from typing import Dict, Iterable, List, Optional, TextIO

import mpmath

from monomials import LaurentMonomial, variable_names
from ordered_values import AlgebraicReal, WeightValue
from tower import Frame, Tower
from util import dump_json5


def render_weight(w: WeightValue) -> str:
    if isinstance(w, AlgebraicReal):
        return f"{w} ≈ {mpmath.nstr(w.to_mpf(), 8)}"
    return repr(w)


class FrameSummary:
    """ One step of the sequence: the center chosen, the parameter weights, and the orders of the probes. """
    index: int
    center: Optional[int]
    tie: bool
    parameters: List[str]
    weights: List[str]
    probe_orders: Dict[str, int]

    def __init__(self, frame: Frame, tie: bool, probes: Dict[str, LaurentMonomial]) -> None:
        super().__init__()
        names = variable_names(frame.dimension)
        self.index = frame.index
        self.center = frame.center
        self.tie = tie
        self.parameters = [frame.parameter(j).render(names) for j in range(frame.dimension)]
        self.weights = [render_weight(w) for w in frame.weights]
        self.probe_orders = {name: frame.order_of(q.exponents) for name, q in probes.items()}

    @property
    def center_name(self) -> str:
        if self.tie:
            return "TIE"
        return "-" if self.center is None else self.parameters[self.center]

    def to_json(self) -> dict:
        return {"frame": self.index, "center": self.center, "tie": self.tie, "parameters": self.parameters,
                "weights": self.weights, "probeOrders": self.probe_orders}


def stream_frame_summaries(tower: Tower, steps: int,
                           probes: Optional[Dict[str, LaurentMonomial]] = None) -> Iterable[FrameSummary]:
    """
    Yields summaries of frames 0..steps-1, each with the center chosen there. Stops after the frame where the
    minimum weight is tied, since the tower has no further frames.
    """
    if steps < 1:
        raise ValueError(f"Steps must be at least 1, got {steps}")
    probes = probes or {}
    for i in range(steps):
        frame = tower.frame(i)
        # Building the next frame records this frame's center, or detects the tie
        tie = not tower.available(i + 1)
        yield FrameSummary(frame, tie, probes)
        if tie:
            logging.info(f"Trace stopped at frame {i}: the minimum weight is tied")
            return


def write_trace_table(summaries: Iterable[FrameSummary], file: TextIO = sys.stdout):
    """Writes one fixed-width line per frame; the probe columns follow the parameter columns."""
    header_written = False
    for summary in summaries:
        if not header_written:
            file.write(f"{'FRAME':>5}  {'CENTER':12}  {'PARAMETERS':40}  {'WEIGHTS':60}")
            for name in summary.probe_orders:
                file.write(f"  {'ord ' + name:>12}")
            file.write("\n")
            header_written = True
        file.write(f"{summary.index:5d}  {summary.center_name:12}  {', '.join(summary.parameters):40}"
                   f"  {'; '.join(summary.weights):60}")
        for order in summary.probe_orders.values():
            file.write(f"  {order:12d}")
        file.write("\n")
        if summary.tie:
            file.write(f"Tower terminated at frame {summary.index}: the minimum weight is tied, so the center is not"
                       f" a monomial point.\n")


def write_trace_machine(summaries: Iterable[FrameSummary], file: TextIO = sys.stdout):
    frames = [s.to_json() for s in summaries]
    terminated = bool(frames) and frames[-1]["tie"]
    file.write(dump_json5({"frames": frames, "terminated": terminated}))
    file.write("\n")
