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
from enum import Enum
from typing import List, Optional, Sequence, Tuple, NamedTuple

from sympy import Matrix

from monomials import ExponentVector, LaurentMonomial, MonomialIdeal, add, is_nonnegative, subtract
from ordered_values import WeightValue, WeightMode, Ordering, Sign, compare, check_uniform, linear_combine

DEFAULT_STEP_LIMIT = 100000


class TowerStatus(Enum):
    ACTIVE = "active"
    TERMINATED_TIE = "terminated_tie"


class TowerTerminatedError(RuntimeError):
    pass


class StepLimitExceeded(RuntimeError):
    limit: int

    def __init__(self, limit: int):
        super().__init__(f"Step limit of {limit} frames exceeded")
        self.limit = limit


class TieTermination(NamedTuple):
    step: int
    slots: Tuple[int, ...]


class Frame:
    """
    The regular parameters p_0..p_{d-1} of one ring R_i of the sequence, as Laurent monomials in the original
    variables. columns[j] is the exponent vector of p_j, inverse is the integer inverse of the matrix with those
    columns (stored by rows), and weights[j] is the value of p_j.
    """
    index: int
    columns: Tuple[ExponentVector, ...]
    inverse: Tuple[Tuple[int, ...], ...]
    weights: Tuple[WeightValue, ...]
    # Column sums of inverse: ord_i(x^v) = order_form · v
    order_form: Tuple[int, ...]
    # Sum of the center columns of frames 0..index-1, i.e. m_0...m_{index-1} R_index = x^exceptional_exponent R_index
    exceptional_exponent: ExponentVector
    center: Optional[int]

    def __init__(self, index: int, columns: Sequence[ExponentVector], inverse: Sequence[Sequence[int]],
                 weights: Sequence[WeightValue], exceptional_exponent: ExponentVector):
        self.index = index
        self.columns = tuple(tuple(c) for c in columns)
        self.inverse = tuple(tuple(r) for r in inverse)
        self.weights = tuple(weights)
        d = len(self.columns)
        self.order_form = tuple(sum(self.inverse[r][t] for r in range(d)) for t in range(d))
        self.exceptional_exponent = tuple(exceptional_exponent)
        self.center = None

    @property
    def dimension(self) -> int:
        return len(self.columns)

    def parameter(self, j: int) -> LaurentMonomial:
        return LaurentMonomial(self.columns[j])

    def exponent_of(self, v: ExponentVector) -> ExponentVector:
        if len(v) != self.dimension:
            raise ValueError(f"Monomial of length {len(v)} used with a tower of dimension {self.dimension}")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.inverse)

    def order_of(self, v: ExponentVector) -> int:
        return sum(a * b for a, b in zip(self.order_form, v))

    def matrix(self) -> Matrix:
        d = self.dimension
        return Matrix(d, d, lambda r, c: self.columns[c][r])

    def determinant(self) -> int:
        return int(self.matrix().det())

    def check_integrity(self):
        """Asserts that inverse really inverts the column matrix and every weight is positive."""
        d = self.dimension
        for r in range(d):
            for c in range(d):
                entry = sum(self.inverse[r][t] * self.columns[c][t] for t in range(d))
                if entry != (1 if r == c else 0):
                    raise AssertionError(f"Frame {self.index}: inverse check failed at ({r},{c})")
        for j, w in enumerate(self.weights):
            if w.sign() is not Sign.POSITIVE:
                raise AssertionError(f"Frame {self.index}: weight of parameter {j} is not positive: {w}")

    def argmin(self) -> List[int]:
        """All slots attaining the minimum weight."""
        best = [0]
        for k in range(1, self.dimension):
            ordering = compare(self.weights[k], self.weights[best[0]])
            if ordering is Ordering.LESS:
                best = [k]
            elif ordering is Ordering.EQUAL:
                best.append(k)
        return best

    def successor(self, j: int) -> "Frame":
        """The frame of the quadratic transform centered at slot j: p_k -> p_k/p_j for k != j."""
        d = self.dimension
        centre_column = self.columns[j]
        columns = [c if k == j else subtract(c, centre_column) for k, c in enumerate(self.columns)]
        summed_row = tuple(sum(self.inverse[r][t] for r in range(d)) for t in range(d))
        inverse = [summed_row if r == j else row for r, row in enumerate(self.inverse)]
        centre_weight = self.weights[j]
        weights = [w if k == j else w - centre_weight for k, w in enumerate(self.weights)]
        return Frame(self.index + 1, columns, inverse, weights, add(self.exceptional_exponent, centre_column))

    def __repr__(self):
        return f"Frame({self.index}, columns={list(self.columns)}, center={self.center})"


class TransformTrail:
    """Successive transforms of a seed ideal, with the order e_i divided out at each step."""
    seed: MonomialIdeal
    ideals: List[MonomialIdeal]
    orders: List[int]

    def __init__(self, seed: MonomialIdeal):
        self.seed = seed
        self.ideals = [seed]
        self.orders = []

    @property
    def last(self) -> MonomialIdeal:
        return self.ideals[-1]

    def record(self, order: int, ideal: MonomialIdeal):
        self.orders.append(order)
        self.ideals.append(ideal)


class Tower:
    """
    The quadratic sequence R_0 ⊂ R_1 ⊂ ... along the monomial valuation with the given variable weights.
    Frames are computed lazily and kept; a frame never changes once built, except that its center is recorded
    when the next frame is built.
    """
    dimension: int
    mode: WeightMode
    initial_weights: Tuple[WeightValue, ...]
    frames: List[Frame]
    status: TowerStatus
    termination: Optional[TieTermination]
    step_limit: int

    def __init__(self, d: int, weights: Sequence[WeightValue], step_limit: int = DEFAULT_STEP_LIMIT):
        if d < 2:
            raise ValueError(f"Dimension must be at least 2, got {d}")
        if len(weights) != d:
            raise ValueError(f"Expected {d} weights, got {len(weights)}")
        self.mode = check_uniform(weights)
        for t, w in enumerate(weights):
            if w.sign() is not Sign.POSITIVE:
                raise ValueError(f"Weight of variable {t} must be positive, got {w}")
        self.dimension = d
        self.initial_weights = tuple(weights)
        identity = [tuple(1 if r == c else 0 for r in range(d)) for c in range(d)]
        self.frames = [Frame(0, identity, identity, weights, (0,) * d)]
        self.status = TowerStatus.ACTIVE
        self.termination = None
        self.step_limit = step_limit

    @property
    def newest(self) -> Frame:
        return self.frames[-1]

    def step(self) -> Optional[Frame]:
        """Builds the next frame. Returns None, and marks the tower terminated, if the minimum weight is tied."""
        if self.status is TowerStatus.TERMINATED_TIE:
            raise TowerTerminatedError(f"Tower terminated at step {self.termination.step} and cannot be extended")
        current = self.newest
        slots = current.argmin()
        if len(slots) > 1:
            self.status = TowerStatus.TERMINATED_TIE
            self.termination = TieTermination(current.index, tuple(slots))
            logging.info(f"Tower terminated at step {current.index}: minimum weight is shared by slots {slots}."
                         f" The center is not a monomial point; refine the weights (e.g. add a lex component).")
            return None
        if current.index >= self.step_limit:
            raise StepLimitExceeded(self.step_limit)
        j = slots[0]
        current.center = j
        successor = current.successor(j)
        successor.check_integrity()
        self.frames.append(successor)
        logging.debug(f"Step {current.index} -> {successor.index}: center slot {j}")
        return successor

    def frame(self, i: int) -> Frame:
        """Frame i, extending the tower as needed."""
        if i < 0:
            raise ValueError(f"Negative frame index: {i}")
        while len(self.frames) <= i:
            if self.step() is None:
                raise TowerTerminatedError(f"Frame {i} requested but the tower terminated at step "
                                           f"{self.termination.step}")
        return self.frames[i]

    def available(self, i: int) -> bool:
        """True if frame i exists or can be built without hitting a tie. StepLimitExceeded propagates."""
        try:
            self.frame(i)
            return True
        except TowerTerminatedError:
            return False

    def last_index(self, horizon: int) -> int:
        """The largest frame index ≤ horizon that exists, extending as far as possible."""
        self.available(horizon)
        return min(horizon, len(self.frames) - 1)

    def center_history(self, n: int) -> List[int]:
        """Centers of frames 0..n-1, stopping early if the tower terminates."""
        self.available(n)
        return [f.center for f in self.frames[:n] if f.center is not None]

    def weight_of(self, q: LaurentMonomial) -> WeightValue:
        return linear_combine(list(q.exponents), list(self.initial_weights))

    def frame_exponent(self, i: int, q: LaurentMonomial) -> ExponentVector:
        return self.frame(i).exponent_of(q.exponents)

    def ord(self, i: int, q: LaurentMonomial) -> int:
        return self.frame(i).order_of(q.exponents)

    def member_ring(self, i: int, q: LaurentMonomial) -> bool:
        """q ∈ R_i."""
        return is_nonnegative(self.frame_exponent(i, q))

    def member_maximal_ideal(self, i: int, q: LaurentMonomial) -> bool:
        """q ∈ m_i."""
        u = self.frame_exponent(i, q)
        return is_nonnegative(u) and any(e > 0 for e in u)

    def transform_step(self, ideal: MonomialIdeal, trail: Optional[TransformTrail] = None) -> MonomialIdeal:
        """
        The transform of an ideal of R_i in R_{i+1}: rewrite the generators in the parameters of R_{i+1}, then
        divide by the e-th power of the center parameter where e is the order of the ideal.
        """
        i = ideal.frame_index
        if ideal.dimension != self.dimension:
            raise ValueError(f"Ideal of dimension {ideal.dimension} used with a tower of dimension {self.dimension}")
        self.frame(i + 1)
        j = self.frames[i].center
        e = ideal.order()
        generators = []
        for u in ideal.generators:
            converted = list(u)
            converted[j] = sum(u) - e
            generators.append(tuple(converted))
        result = MonomialIdeal(i + 1, generators)
        if trail is not None:
            trail.record(e, result)
        return result

    def transform_to(self, ideal: MonomialIdeal, target: int) -> TransformTrail:
        """Iterates transform_step from the ideal's frame up to frame target."""
        if target < ideal.frame_index:
            raise ValueError(f"Cannot transform an ideal of frame {ideal.frame_index} back to frame {target}")
        trail = TransformTrail(ideal)
        while trail.last.frame_index < target:
            self.transform_step(trail.last, trail)
        return trail

    def exceptional_contraction_member(self, k: int, q: LaurentMonomial) -> bool:
        """q ∈ R ∩ m_0 m_1 ... m_k R_{k+1}."""
        if not is_nonnegative(q.exponents):
            return False
        successor = self.frame(k + 1)
        return is_nonnegative(successor.exponent_of(subtract(q.exponents, successor.exceptional_exponent)))

    def direction_change(self, i: int, n: int) -> bool:
        """True iff m_i ⊆ m_n², i.e. every parameter of R_i has order at least 2 in R_n."""
        if i >= n:
            raise ValueError(f"direction_change needs i < n, got i={i}, n={n}")
        later = self.frame(n)
        return all(later.order_of(c) >= 2 for c in self.frame(i).columns)

    def first_direction_change(self, i: int, limit: int) -> Optional[int]:
        """The smallest n ≤ limit with a change of direction between R_i and R_n, if any."""
        for n in range(i + 1, limit + 1):
            if not self.available(n):
                return None
            if self.direction_change(i, n):
                return n
        return None

    def centered_before(self, t: int, i: int) -> bool:
        """True if slot t was the center of some frame 0..i-1."""
        self.frame(i)
        return any(self.frames[k].center == t for k in range(i))


def new_tower(d: int, weights: Sequence[WeightValue], step_limit: int = DEFAULT_STEP_LIMIT) -> Tower:
    return Tower(d, weights, step_limit)
