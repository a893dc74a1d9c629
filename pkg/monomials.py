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

from typing import Iterable, Tuple, List, Sequence, Optional

ExponentVector = Tuple[int, ...]

DEFAULT_VARIABLE_NAMES = ["x", "y", "z", "w"]


def variable_names(d: int) -> List[str]:
    if d <= len(DEFAULT_VARIABLE_NAMES):
        return DEFAULT_VARIABLE_NAMES[:d]
    return [f"x{t + 1}" for t in range(d)]


def exponent_vector(entries: Iterable[int]) -> ExponentVector:
    vector = tuple(entries)
    for e in vector:
        if isinstance(e, bool) or not isinstance(e, int):
            raise ValueError(f"Exponents must be integers: {list(vector)}")
    return vector


def _check_lengths(a: Sequence[int], b: Sequence[int]):
    if len(a) != len(b):
        raise ValueError(f"Exponent length mismatch: {len(a)} vs {len(b)}")


def divides(a: ExponentVector, b: ExponentVector) -> bool:
    _check_lengths(a, b)
    return all(x <= y for x, y in zip(a, b))


def add(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    _check_lengths(a, b)
    return tuple(x + y for x, y in zip(a, b))


def subtract(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    _check_lengths(a, b)
    return tuple(x - y for x, y in zip(a, b))


def is_nonnegative(a: ExponentVector) -> bool:
    return all(x >= 0 for x in a)


def unit_vector(d: int, t: int) -> ExponentVector:
    return tuple(1 if k == t else 0 for k in range(d))


def minimalize(gens: Iterable[ExponentVector]) -> Tuple[ExponentVector, ...]:
    """
    The minimal elements of gens under componentwise order, sorted. The result is the canonical generator set
    of the monomial ideal the vectors generate.
    """
    candidates = sorted(set(exponent_vector(g) for g in gens), key=lambda g: (sum(g), g))
    if len(candidates) == 0:
        raise ValueError("A monomial ideal needs at least one generator")
    length = len(candidates[0])
    minimal: List[ExponentVector] = []
    for g in candidates:
        if len(g) != length:
            raise ValueError(f"Exponent length mismatch in generators: {length} vs {len(g)}")
        if not is_nonnegative(g):
            raise ValueError(f"Ideal generators must be nonnegative: {list(g)}")
        # Sorting by degree means anything dividing g has already been seen
        if not any(divides(m, g) for m in minimal):
            minimal.append(g)
    return tuple(sorted(minimal))


class LaurentMonomial:
    """The field element x^v for an integer exponent vector v over the original variables."""
    exponents: ExponentVector

    def __init__(self, exponents: Iterable[int]):
        self.exponents = exponent_vector(exponents)
        if len(self.exponents) == 0:
            raise ValueError("A monomial needs at least one exponent")

    @property
    def dimension(self) -> int:
        return len(self.exponents)

    def __mul__(self, other: "LaurentMonomial") -> "LaurentMonomial":
        return LaurentMonomial(add(self.exponents, other.exponents))

    def __truediv__(self, other: "LaurentMonomial") -> "LaurentMonomial":
        return LaurentMonomial(subtract(self.exponents, other.exponents))

    def __pow__(self, n: int) -> "LaurentMonomial":
        return LaurentMonomial(n * e for e in self.exponents)

    def inverse(self) -> "LaurentMonomial":
        return LaurentMonomial(-e for e in self.exponents)

    def is_one(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def __eq__(self, o: object) -> bool:
        return isinstance(o, LaurentMonomial) and o.exponents == self.exponents

    def __hash__(self) -> int:
        return hash(self.exponents)

    def render(self, names: Optional[List[str]] = None) -> str:
        names = names or variable_names(self.dimension)
        return render_exponents(self.exponents, names)

    def __repr__(self):
        return self.render()


def render_exponents(exponents: Sequence[int], names: List[str]) -> str:
    """Renders x^v as a fraction of products, e.g. (0,-1,1) as z/y."""

    def product(pairs) -> str:
        return "*".join(n if e == 1 else f"{n}^{e}" for n, e in pairs)

    top = [(n, e) for n, e in zip(names, exponents) if e > 0]
    bottom = [(n, -e) for n, e in zip(names, exponents) if e < 0]
    numerator = product(top) if top else "1"
    if not bottom:
        return numerator
    denominator = product(bottom)
    return f"{numerator}/({denominator})" if len(bottom) > 1 else f"{numerator}/{denominator}"


class MonomialIdeal:
    """A monomial ideal of R_i given by its minimal generators in the parameters of frame i."""
    frame_index: int
    generators: Tuple[ExponentVector, ...]

    def __init__(self, frame_index: int, generators: Iterable[ExponentVector]):
        if frame_index < 0:
            raise ValueError(f"Negative frame index: {frame_index}")
        self.frame_index = frame_index
        self.generators = minimalize(generators)

    @staticmethod
    def unit(frame_index: int, d: int) -> "MonomialIdeal":
        return MonomialIdeal(frame_index, [(0,) * d])

    @staticmethod
    def maximal(frame_index: int, d: int) -> "MonomialIdeal":
        return MonomialIdeal(frame_index, [unit_vector(d, t) for t in range(d)])

    @property
    def dimension(self) -> int:
        return len(self.generators[0])

    def is_unit(self) -> bool:
        return self.generators == ((0,) * self.dimension,)

    def order(self) -> int:
        """The largest k with the ideal inside m_i^k."""
        return min(sum(g) for g in self.generators)

    def times(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if other.frame_index != self.frame_index:
            raise ValueError(f"Ideals of frames {self.frame_index} and {other.frame_index} cannot be multiplied")
        return MonomialIdeal(self.frame_index, [add(a, b) for a in self.generators for b in other.generators])

    def __eq__(self, o: object) -> bool:
        return isinstance(o, MonomialIdeal) and o.frame_index == self.frame_index and o.generators == self.generators

    def __hash__(self) -> int:
        return hash((self.frame_index, self.generators))

    def __repr__(self):
        gens = ", ".join("(" + ",".join(str(e) for e in g) + ")" for g in self.generators)
        return f"<{gens}>@{self.frame_index}"


def ideal_member(u: ExponentVector, ideal: MonomialIdeal) -> bool:
    if not is_nonnegative(u):
        raise ValueError(f"Only nonnegative exponents can be tested for membership: {list(u)}")
    return any(divides(g, u) for g in ideal.generators)
