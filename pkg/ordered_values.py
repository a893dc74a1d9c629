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
Exact values for the value group of a monomial valuation.

Two representations are supported, one per tower:
 -  LexTuple: a fixed-length tuple of rationals ordered lexicographically (higher rank groups), and
 -  AlgebraicReal: a rational combination of square roots of distinct squarefree integers (rank one, real).
"""
from enum import Enum
from fractions import Fraction
from functools import lru_cache, total_ordering
from math import gcd
from typing import Sequence, Tuple, Union, List, Any

import mpmath
from sympy import factorint, integer_nthroot

START_PRECISION_BITS = 64


class Ordering(Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


class Sign(Enum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


class WeightMode(Enum):
    LEX = "lex"
    ALGEBRAIC = "algebraic"


def parse_rational(value: Any) -> Fraction:
    """Converts an int, a Fraction or a string like "3/4" into a Fraction. Floats are refused."""
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"Not an exact rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError:
            pass
    raise ValueError(f"Not an exact rational: {value!r}")


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@total_ordering
class LexTuple:
    coeffs: Tuple[Fraction, ...]

    def __init__(self, coeffs: Sequence[Any]):
        if len(coeffs) == 0:
            raise ValueError("A LexTuple needs at least one component")
        self.coeffs = tuple(parse_rational(c) for c in coeffs)

    @property
    def mode(self) -> WeightMode:
        return WeightMode.LEX

    def _check_shape(self, other: "WeightValue"):
        if not isinstance(other, LexTuple):
            raise ValueError(f"Cannot combine a lex value with {type(other).__name__}")
        if len(other.coeffs) != len(self.coeffs):
            raise ValueError(f"Lex length mismatch: {len(self.coeffs)} vs {len(other.coeffs)}")

    def __add__(self, other: "LexTuple") -> "LexTuple":
        self._check_shape(other)
        return LexTuple([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "LexTuple") -> "LexTuple":
        self._check_shape(other)
        return LexTuple([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "LexTuple":
        return LexTuple([-a for a in self.coeffs])

    def scale(self, n: int) -> "LexTuple":
        return LexTuple([n * a for a in self.coeffs])

    def zero(self) -> "LexTuple":
        return LexTuple([0] * len(self.coeffs))

    def sign(self) -> Sign:
        for c in self.coeffs:
            if c != 0:
                return Sign.POSITIVE if c > 0 else Sign.NEGATIVE
        return Sign.ZERO

    def leading_index(self) -> int:
        """Index of the first nonzero component, or the length for the zero value."""
        return next((i for i, c in enumerate(self.coeffs) if c != 0), len(self.coeffs))

    def __eq__(self, o: object) -> bool:
        return isinstance(o, LexTuple) and o.coeffs == self.coeffs

    def __hash__(self) -> int:
        return hash(("lex", self.coeffs))

    def __lt__(self, other: "LexTuple") -> bool:
        return (self - other).sign() is Sign.NEGATIVE

    def to_json(self) -> List[str]:
        return [format_rational(c) for c in self.coeffs]

    def __repr__(self):
        return "(" + ",".join(format_rational(c) for c in self.coeffs) + ")"


def check_basis(basis: Sequence[int]) -> Tuple[int, ...]:
    """Validates a square-root basis: starts at 1, strictly increasing, every entry squarefree and positive."""
    basis = tuple(basis)
    if len(basis) == 0 or basis[0] != 1:
        raise ValueError(f"An algebraic basis must start with 1: {list(basis)}")
    for previous, n in zip(basis, basis[1:]):
        if not isinstance(n, int) or n <= previous:
            raise ValueError(f"An algebraic basis must be strictly increasing integers: {list(basis)}")
    for n in basis[1:]:
        if any(e > 1 for e in factorint(n).values()):
            raise ValueError(f"Basis entry {n} is not squarefree")
    return basis


@lru_cache(maxsize=4096)
def _sqrt_bounds(n: int, bits: int) -> Tuple[int, int]:
    """Integers lo, hi with lo <= sqrt(n)·2^bits <= hi."""
    root, exact = integer_nthroot(n << (2 * bits), 2)
    return root, root if exact else root + 1


@total_ordering
class AlgebraicReal:
    basis: Tuple[int, ...]
    coeffs: Tuple[Fraction, ...]

    def __init__(self, basis: Sequence[int], coeffs: Sequence[Any], validated: bool = False):
        self.basis = tuple(basis) if validated else check_basis(basis)
        if len(coeffs) != len(self.basis):
            raise ValueError(f"Expected {len(self.basis)} coefficients over basis {list(self.basis)},"
                             f" got {len(coeffs)}")
        self.coeffs = tuple(parse_rational(c) for c in coeffs)

    @property
    def mode(self) -> WeightMode:
        return WeightMode.ALGEBRAIC

    def _check_shape(self, other: "WeightValue"):
        if not isinstance(other, AlgebraicReal):
            raise ValueError(f"Cannot combine an algebraic value with {type(other).__name__}")
        if other.basis != self.basis:
            raise ValueError(f"Basis mismatch: {list(self.basis)} vs {list(other.basis)}")

    def _with(self, coeffs) -> "AlgebraicReal":
        return AlgebraicReal(self.basis, coeffs, validated=True)

    def __add__(self, other: "AlgebraicReal") -> "AlgebraicReal":
        self._check_shape(other)
        return self._with([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "AlgebraicReal") -> "AlgebraicReal":
        self._check_shape(other)
        return self._with([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "AlgebraicReal":
        return self._with([-a for a in self.coeffs])

    def scale(self, n: int) -> "AlgebraicReal":
        return self._with([n * a for a in self.coeffs])

    def zero(self) -> "AlgebraicReal":
        return self._with([0] * len(self.coeffs))

    def sign(self) -> Sign:
        """
        Exact sign. Square roots of distinct squarefree integers are linearly independent over the rationals, so
        the value is zero only when every coefficient is. Otherwise the isolating interval of the sum is refined,
        doubling the precision from 64 fractional bits, until it excludes zero.
        """
        if all(c == 0 for c in self.coeffs):
            return Sign.ZERO
        denominator = 1
        for c in self.coeffs:
            denominator = denominator * c.denominator // gcd(denominator, c.denominator)
        integers = [int(c * denominator) for c in self.coeffs]
        bits = START_PRECISION_BITS
        while True:
            lo = hi = 0
            for p, n in zip(integers, self.basis):
                if p == 0:
                    continue
                root_lo, root_hi = _sqrt_bounds(n, bits)
                if p > 0:
                    lo += p * root_lo
                    hi += p * root_hi
                else:
                    lo += p * root_hi
                    hi += p * root_lo
            if lo > 0:
                return Sign.POSITIVE
            if hi < 0:
                return Sign.NEGATIVE
            bits *= 2

    def to_mpf(self, dps: int = 50) -> mpmath.mpf:
        with mpmath.mp.workdps(dps):
            return mpmath.fsum(mpmath.mpf(c.numerator) / c.denominator * mpmath.sqrt(n)
                               for c, n in zip(self.coeffs, self.basis))

    def __eq__(self, o: object) -> bool:
        return isinstance(o, AlgebraicReal) and o.basis == self.basis and o.coeffs == self.coeffs

    def __hash__(self) -> int:
        return hash(("alg", self.basis, self.coeffs))

    def __lt__(self, other: "AlgebraicReal") -> bool:
        return (self - other).sign() is Sign.NEGATIVE

    def to_json(self) -> List[str]:
        return [format_rational(c) for c in self.coeffs]

    def __repr__(self):
        terms = []
        for c, n in zip(self.coeffs, self.basis):
            if c == 0:
                continue
            terms.append(format_rational(c) if n == 1 else f"{format_rational(c)}*sqrt({n})")
        return " + ".join(terms) if terms else "0"


WeightValue = Union[LexTuple, AlgebraicReal]


def _check_same_shape(a: WeightValue, b: WeightValue):
    if a.mode is not b.mode:
        raise ValueError(f"Weight mode mismatch: {a.mode.value} vs {b.mode.value}")
    # noinspection PyProtectedMember
    a._check_shape(b)


def sign(a: WeightValue) -> Sign:
    return a.sign()


def compare(a: WeightValue, b: WeightValue) -> Ordering:
    _check_same_shape(a, b)
    s = (a - b).sign()
    if s is Sign.ZERO:
        return Ordering.EQUAL
    return Ordering.LESS if s is Sign.NEGATIVE else Ordering.GREATER


def scale(n: int, a: WeightValue) -> WeightValue:
    return a.scale(n)


def linear_combine(coeffs: Sequence[int], values: Sequence[WeightValue]) -> WeightValue:
    """Exact sum of coeffs[i] * values[i]."""
    if len(coeffs) != len(values):
        raise ValueError(f"{len(coeffs)} coefficients given for {len(values)} values")
    if len(values) == 0:
        raise ValueError("Cannot combine an empty list of values")
    total = values[0].zero()
    for c, v in zip(coeffs, values):
        _check_same_shape(total, v)
        if c != 0:
            total = total + v.scale(c)
    return total


def is_infinitesimal(a: WeightValue, b: WeightValue) -> bool:
    """True iff n·a < b for every positive integer n."""
    _check_same_shape(a, b)
    if a.sign() is not Sign.POSITIVE or b.sign() is not Sign.POSITIVE:
        raise ValueError(f"is_infinitesimal needs positive values, got {a} and {b}")
    if isinstance(a, AlgebraicReal):
        # The reals are archimedean
        return False
    return a.leading_index() > b.leading_index()


def check_uniform(values: Sequence[WeightValue]) -> WeightMode:
    """Raises ValueError unless every value has the same mode and shape. Returns the shared mode."""
    if len(values) == 0:
        raise ValueError("No values given")
    for v in values[1:]:
        _check_same_shape(values[0], v)
    return values[0].mode
