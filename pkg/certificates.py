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
Witnesses for statements of the form "for every frame i ≥ i0".

Every certificate carries plain witness data (integers, rational strings) and a citation key from ANCHORS, and can be
re-checked from that data alone with replay().
"""
import logging
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union, Dict, Any

from sympy import Matrix

from monomials import ExponentVector, LaurentMonomial, unit_vector
from ordered_values import Sign, WeightMode, format_rational, is_infinitesimal, linear_combine
from tower import Tower

Form = Tuple[int, ...]

ANCHORS: Dict[str, str] = {
    "regular-parameter-persistence":
        "An element that is a regular parameter of R_i for all large i generates the maximal ideal of S.",
    "idempotent-maximal-ideal":
        "N is not principal iff N = N² iff the sequence changes direction infinitely often.",
    "n-primary-element": "S has an element x with xS primary for the maximal ideal N.",
    "noetherian-hull": "The Noetherian hull is T = S[1/x] for any N-primary x.",
    "order-valuation-trichotomy":
        "For nonzero q, ord_n(q) is eventually positive, eventually zero or eventually negative.",
    "boundary-valuation-membership": "q lies in the boundary valuation ring V iff ord_n(q) ≥ 0 for all large n.",
    "hull-valuation-decomposition": "S = V ∩ T.",
    "nonarchimedean-criterion":
        "S is not archimedean iff some y has ord_i(y) ≥ n·ord_i(x) for all large i, for every n.",
    "rank-one-domination": "A local domain dominated by a rank one valuation ring is archimedean.",
    "colon-ring-membership": "θN ⊆ N places θ in (N :_F N) = W ∩ T.",
    "valuation-not-colon-closed": "A valuation domain with idempotent maximal ideal N satisfies (N : N) = itself.",
    "witness-pair": "A domain containing neither q nor 1/q is not a valuation ring.",
    "two-dimensional-valuation":
        "Over a two-dimensional regular local ring every Shannon extension is a valuation ring.",
    "prime-divisor-finite-sequence": "The quadratic sequence along a prime divisor is finite.",
    "dvr-criterion": "S is a DVR iff its maximal ideal is principal and it is dominated by a rank one valuation ring.",
    "transform-properness": "The transforms of aR_n become the unit ideal eventually iff a is a unit of T.",
    "exceptional-contraction": "S ⊆ R_P iff P lies in every R ∩ m_0⋯m_k R_{k+1}.",
    "order-valuation-bound": "At most dim R − 1 of the order valuation rings of the sequence contain S.",
    "monomial-prime-avoidance": "An element of N outside every height one prime of S is N-primary.",
    "invariant-form-induction": "A linear form positive at R_i0 and closed under every feasible step stays positive.",
    "invariant-exponent": "A frame exponent fixed by every feasible step is the same at every later frame.",
    "rational-independence": "Q-linearly independent weights never tie, so the sequence is infinite.",
    "union-membership":
        "S is the union of the rings R_i; a monomial lies in R_i iff its frame exponent is nonnegative.",
}


class CertificateKind(Enum):
    FORM_PRESERVATION = "form_preservation"
    CONSTANT_CENTER = "constant_center"
    EXPONENT_INVARIANT = "exponent_invariant"
    TOWER_INFINITE = "tower_infinite"
    RING_MEMBERSHIP = "ring_membership"
    MAXIMAL_IDEAL_MEMBERSHIP = "maximal_ideal_membership"
    NEGATIVE_ORDER = "negative_order"
    CENTER_OBSERVED = "center_observed"
    TIE_TERMINATION = "tie_termination"


KIND_CITATIONS = {
    CertificateKind.FORM_PRESERVATION: "invariant-form-induction",
    CertificateKind.CONSTANT_CENTER: "regular-parameter-persistence",
    CertificateKind.EXPONENT_INVARIANT: "invariant-exponent",
    CertificateKind.TOWER_INFINITE: "rational-independence",
    CertificateKind.RING_MEMBERSHIP: "union-membership",
    CertificateKind.MAXIMAL_IDEAL_MEMBERSHIP: "order-valuation-trichotomy",
    CertificateKind.NEGATIVE_ORDER: "order-valuation-bound",
    CertificateKind.CENTER_OBSERVED: "transform-properness",
    CertificateKind.TIE_TERMINATION: "prime-divisor-finite-sequence",
}


class Certificate:
    kind: CertificateKind
    start: int
    witness: Dict[str, Any]
    citation: str
    support: List["Certificate"]

    def __init__(self, kind: CertificateKind, start: int, witness: Dict[str, Any],
                 support: Optional[List["Certificate"]] = None):
        self.kind = kind
        self.start = start
        self.witness = witness
        self.citation = KIND_CITATIONS[kind]
        self.support = support or []

    def to_json(self) -> dict:
        result = {"kind": self.kind.value, "start": self.start, "citation": self.citation, "witness": self.witness}
        if self.support:
            result["support"] = [s.to_json() for s in self.support]
        return result

    def summary(self) -> str:
        if self.kind is CertificateKind.CONSTANT_CENTER:
            return f"center is slot {self.witness['slot']} at every frame ≥ {self.start}"
        if self.kind is CertificateKind.FORM_PRESERVATION:
            return (f"forms {self.witness['forms']} stay positive from frame {self.start};"
                    f" centers {self.witness['slots']}")
        if self.kind is CertificateKind.EXPONENT_INVARIANT:
            return f"frame exponent {self.witness['exponent']} fixed from frame {self.start}"
        if self.kind is CertificateKind.TOWER_INFINITE:
            return "weights are rationally independent"
        if self.kind is CertificateKind.RING_MEMBERSHIP:
            return f"frame exponent {self.witness['exponent']} is nonnegative at frame {self.start}"
        if self.kind is CertificateKind.MAXIMAL_IDEAL_MEMBERSHIP:
            return f"frame exponent {self.witness['exponent']} lies in the maximal ideal at frame {self.start}"
        if self.kind is CertificateKind.NEGATIVE_ORDER:
            return (f"parameter {self.witness['slot']} of frame {self.witness['witnessFrame']} has order"
                    f" {self.witness['order']} at frame {self.start}")
        if self.kind is CertificateKind.CENTER_OBSERVED:
            return f"slot {self.witness['slot']} is the center of frame {self.start}"
        return f"minimum weight tied between slots {self.witness['slots']} at frame {self.start}"

    def __repr__(self):
        return f"Certificate({self.kind.value}, start={self.start}: {self.summary()})"


class LinearFormInvariant:
    """The claim L·w > 0 for the frame weights w at every frame from some point on."""
    form: Form

    def __init__(self, form: Sequence[int]):
        if len(form) == 0 or all(c == 0 for c in form):
            raise ValueError(f"An invariant form needs a nonzero coefficient: {list(form)}")
        self.form = tuple(int(c) for c in form)

    def evaluate(self, tower: Tower, i: int):
        return linear_combine(list(self.form), list(tower.frame(i).weights))

    def __repr__(self):
        return f"LinearFormInvariant({list(self.form)})"


class ClosureFailure:
    """Why a set of forms could not be certified. slot is None when the form fails before any step is considered."""
    form: Form
    slot: Optional[int]
    reason: str

    def __init__(self, form: Form, slot: Optional[int], reason: str):
        self.form = form
        self.slot = slot
        self.reason = reason

    def __repr__(self):
        return f"ClosureFailure(form={list(self.form)}, slot={self.slot}: {self.reason})"


class FeasibleCenters:
    slots: Tuple[int, ...]
    start: int
    certificates: List[Certificate]

    def __init__(self, slots: Sequence[int], start: int, certificates: List[Certificate]):
        self.slots = tuple(sorted(slots))
        self.start = start
        self.certificates = certificates

    def __contains__(self, slot: int) -> bool:
        return slot in self.slots

    def __repr__(self):
        return f"FeasibleCenters({list(self.slots)} from frame {self.start})"


class ExponentPattern:
    """A monomial whose frame exponent is the same at every frame from start on."""
    monomial: LaurentMonomial
    exponent: ExponentVector
    start: int
    certificate: Certificate

    def __init__(self, monomial: LaurentMonomial, certificate: Certificate):
        self.monomial = monomial
        self.exponent = tuple(certificate.witness["exponent"])
        self.start = certificate.start
        self.certificate = certificate

    @property
    def order(self) -> int:
        return sum(self.exponent)

    def in_ring(self) -> bool:
        return all(e >= 0 for e in self.exponent)


def _fraction(value) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def _fourier_motzkin_point(constraints: List[Tuple[List[Fraction], Fraction]], n: int) -> Optional[List[Fraction]]:
    """A point satisfying every a·y ≤ b, or None. Eliminates the last variable first, then back-substitutes."""
    stages = [constraints]
    current = constraints
    for v in reversed(range(n)):
        upper = [c for c in current if c[0][v] > 0]
        lower = [c for c in current if c[0][v] < 0]
        eliminated = {(tuple(a), b) for a, b in current if a[v] == 0}
        for a_up, b_up in upper:
            for a_lo, b_lo in lower:
                p, q = a_up[v], -a_lo[v]
                combined = tuple(q * x + p * y for x, y in zip(a_up, a_lo))
                eliminated.add((combined, q * b_up + p * b_lo))
        current = [(list(a), b) for a, b in eliminated]
        stages.append(current)
    if any(b < 0 for _, b in current):
        return None
    point = [Fraction(0)] * n
    for v in range(n):
        lo: Optional[Fraction] = None
        hi: Optional[Fraction] = None
        for a, b in stages[n - 1 - v]:
            if a[v] == 0:
                continue
            bound = (b - sum(a[t] * point[t] for t in range(v))) / a[v]
            if a[v] > 0:
                hi = bound if hi is None else min(hi, bound)
            else:
                lo = bound if lo is None else max(lo, bound)
        if lo is not None:
            point[v] = lo
        elif hi is not None:
            point[v] = min(hi, Fraction(0))
    return point


def cone_combination(target: Sequence[int], generators: Sequence[Sequence[int]]) -> Optional[List[Fraction]]:
    """Nonnegative rationals λ with Σ λ_g·g = target, or None if target is outside the cone."""
    d = len(target)
    m = len(generators)
    if m == 0:
        return [] if all(t == 0 for t in target) else None
    augmented = Matrix(d, m + 1, lambda r, c: generators[c][r] if c < m else target[r])
    reduced, pivots = augmented.rref()
    if m in pivots:
        return None
    free = [c for c in range(m) if c not in pivots]
    constraints: List[Tuple[List[Fraction], Fraction]] = []
    for row, p in enumerate(pivots):
        # λ_p = b - Σ a_f·λ_f ≥ 0
        constraints.append(([_fraction(reduced[row, f]) for f in free], _fraction(reduced[row, m])))
    for k in range(len(free)):
        constraints.append(([Fraction(-1) if t == k else Fraction(0) for t in range(len(free))], Fraction(0)))
    point = _fourier_motzkin_point(constraints, len(free))
    if point is None:
        return None
    combination = [Fraction(0)] * m
    for k, f in enumerate(free):
        combination[f] = point[k]
    for row, p in enumerate(pivots):
        combination[p] = _fraction(reduced[row, m]) - sum(_fraction(reduced[row, f]) * point[k]
                                                         for k, f in enumerate(free))
    return combination


def is_cone_combination(target: Sequence[int], generators: Sequence[Sequence[int]],
                        combination: Sequence[Fraction]) -> bool:
    if len(combination) != len(generators) or any(c < 0 for c in combination):
        return False
    return all(sum(c * g[t] for c, g in zip(combination, generators)) == target[t] for t in range(len(target)))


def transport_form(form: Sequence[int], s: int) -> Form:
    """The form L' with L'·w = L·w_next, where w_next are the weights after a step centered at slot s."""
    transported = list(form)
    transported[s] = form[s] - sum(c for k, c in enumerate(form) if k != s)
    return tuple(transported)


def _positivity_generators(forms: Sequence[Form], d: int) -> List[Form]:
    return list(forms) + [unit_vector(d, t) for t in range(d)]


def _step_generators(forms: Sequence[Form], d: int, s: int) -> List[Form]:
    """Forms known to be positive at a frame whose center is s."""
    return _positivity_generators(forms, d) + [tuple(int(t == k) - int(t == s) for t in range(d))
                                               for k in range(d) if k != s]


def _exclusions(forms: Sequence[Form], d: int) -> List[dict]:
    """For each slot s that can never be the argmin, a slot k and a proof that w_s − w_k > 0."""
    generators = _positivity_generators(forms, d)
    exclusions = []
    for s in range(d):
        for k in range(d):
            if k == s:
                continue
            difference = tuple(int(t == s) - int(t == k) for t in range(d))
            combination = cone_combination(difference, generators)
            if combination is not None:
                exclusions.append({"slot": s, "below": k, "combination": [format_rational(c) for c in combination]})
                break
    return exclusions


def certify_constant_center(tower: Tower, i: int) -> Optional[Certificate]:
    """
    The center is slot j at every frame ≥ i exactly when w_j is infinitesimal next to every other weight at frame i:
    each step then subtracts w_j from the other weights and leaves w_j alone.
    """
    frame = tower.frame(i)
    slots = frame.argmin()
    if len(slots) != 1:
        return None
    j = slots[0]
    if all(is_infinitesimal(frame.weights[j], w) for k, w in enumerate(frame.weights) if k != j):
        logging.debug(f"Constant center certified: slot {j} from frame {i}")
        return Certificate(CertificateKind.CONSTANT_CENTER, i, {"slot": j})
    return None


def certify_tower_infinite(tower: Tower) -> Optional[Certificate]:
    """Weights whose coefficient vectors are linearly independent over Q stay independent, so no step can tie."""
    if tower.mode is not WeightMode.ALGEBRAIC:
        return None
    coefficients = [[format_rational(c) for c in w.coeffs] for w in tower.initial_weights]
    if _rank(tower) == tower.dimension:
        return Certificate(CertificateKind.TOWER_INFINITE, 0, {"coefficients": coefficients})
    return None


def _rank(tower: Tower) -> int:
    weights = tower.initial_weights
    return Matrix(len(weights), len(weights[0].coeffs), lambda r, c: weights[r].coeffs[c]).rank()


def certify_ring_membership(tower: Tower, i: int, q: LaurentMonomial) -> Optional[Certificate]:
    u = tower.frame_exponent(i, q)
    if all(e >= 0 for e in u):
        return Certificate(CertificateKind.RING_MEMBERSHIP, i, {"monomial": list(q.exponents), "exponent": list(u)})
    return None


def certify_maximal_ideal_membership(tower: Tower, i: int, q: LaurentMonomial) -> Optional[Certificate]:
    """q ∈ m_i, so q ∈ m_j and ord_j(q) > 0 for every j ≥ i."""
    if tower.member_maximal_ideal(i, q):
        return Certificate(CertificateKind.MAXIMAL_IDEAL_MEMBERSHIP, i,
                           {"monomial": list(q.exponents), "exponent": list(tower.frame_exponent(i, q))})
    return None


def certify_negative_order(tower: Tower, j: int, n: int, k: int) -> Optional[Certificate]:
    """Parameter k of frame n lies in S and has negative order at frame j, so S is not inside the order valuation ring
    of R_j."""
    order = tower.frame(j).order_of(tower.frame(n).columns[k])
    if order < 0:
        return Certificate(CertificateKind.NEGATIVE_ORDER, j, {"witnessFrame": n, "slot": k, "order": order})
    return None


def certify_center(tower: Tower, t: int, i: int) -> Optional[Certificate]:
    tower.frame(i + 1)
    if tower.frame(i).center == t:
        return Certificate(CertificateKind.CENTER_OBSERVED, i, {"slot": t})
    return None


def certify_tie(tower: Tower) -> Optional[Certificate]:
    if tower.termination is None:
        return None
    return Certificate(CertificateKind.TIE_TERMINATION, tower.termination.step,
                       {"slots": list(tower.termination.slots)})


def check_form_preservation(tower: Tower, i0: int, forms: Sequence[LinearFormInvariant],
                            constant_center: Optional[Certificate] = None) -> Union[Certificate, ClosureFailure]:
    """
    Certifies that every form stays positive at every frame ≥ i0. For each form L and each slot s that can still be
    the center, the form transported through a step at s must be a nonnegative combination of the forms, the weights
    themselves and the differences w_k − w_s. With a constant-center certificate in lex mode the transported form is
    L − t·e_s, which stays positive when w_s is infinitesimal next to L·w.
    """
    d = tower.dimension
    raw_forms = [f.form for f in forms]
    for form in raw_forms:
        if len(form) != d:
            raise ValueError(f"Form {list(form)} has the wrong length for dimension {d}")
        value = linear_combine(list(form), list(tower.frame(i0).weights))
        if value.sign() is not Sign.POSITIVE:
            logging.debug(f"Invariant form {list(form)} rejected: not positive at frame {i0}")
            return ClosureFailure(form, None, f"not positive at frame {i0}")

    if constant_center is not None:
        if constant_center.kind is not CertificateKind.CONSTANT_CENTER or constant_center.start > i0:
            raise ValueError(f"Expected a constant-center certificate starting at or before frame {i0}")
        slots = [constant_center.witness["slot"]]
        exclusions = []
    else:
        exclusions = _exclusions(raw_forms, d)
        excluded = {e["slot"] for e in exclusions}
        slots = [s for s in range(d) if s not in excluded]

    closures = []
    for n, form in enumerate(raw_forms):
        for s in slots:
            transported = transport_form(form, s)
            if all(c == 0 for c in transported):
                return ClosureFailure(form, s, "transported form vanishes")
            combination = cone_combination(transported, _step_generators(raw_forms, d, s))
            if combination is not None:
                closures.append({"form": n, "slot": s, "transported": list(transported),
                                 "combination": [format_rational(c) for c in combination]})
                continue
            shift = transported[s] - form[s]
            if constant_center is not None and tower.mode is WeightMode.LEX and shift < 0:
                frame = tower.frame(i0)
                if is_infinitesimal(frame.weights[s], linear_combine(list(form), list(frame.weights))):
                    closures.append({"form": n, "slot": s, "transported": list(transported),
                                     "infinitesimalShift": shift})
                    continue
            logging.debug(f"Invariant form {list(form)} not closed under a step at slot {s}")
            return ClosureFailure(form, s, "transported form is not implied by the invariants")

    witness = {"forms": [list(f) for f in raw_forms], "slots": slots, "closures": closures, "exclusions": exclusions}
    support = [constant_center] if constant_center is not None else []
    logging.info(f"Invariant forms {witness['forms']} certified from frame {i0}; feasible centers {slots}")
    return Certificate(CertificateKind.FORM_PRESERVATION, i0, witness, support)


def feasible_centers(tower: Tower, certs: Sequence[Certificate]) -> FeasibleCenters:
    """The slots that can be the center at frames from some point on, as far as the certificates show."""
    for cert in certs:
        if cert.kind is CertificateKind.CONSTANT_CENTER:
            return FeasibleCenters([cert.witness["slot"]], cert.start, [cert])
    preserved = [c for c in certs if c.kind is CertificateKind.FORM_PRESERVATION]
    if not preserved:
        return FeasibleCenters(range(tower.dimension), 0, [])
    slots = set(range(tower.dimension))
    for cert in preserved:
        slots &= set(cert.witness["slots"])
    return FeasibleCenters(slots, max(c.start for c in preserved), list(preserved))


def verify_exponent_invariant(tower: Tower, q: LaurentMonomial, i0: int,
                              feasible: FeasibleCenters) -> Optional[Certificate]:
    """
    A step centered at j rewrites the frame exponent u as u with u_j replaced by Σu, so u is fixed at every later frame
    when u_j = Σu for every feasible center j.
    """
    i0 = max(i0, feasible.start)
    u = tower.frame_exponent(i0, q)
    total = sum(u)
    if all(u[j] == total for j in feasible.slots):
        return Certificate(CertificateKind.EXPONENT_INVARIANT, i0,
                           {"monomial": list(q.exponents), "exponent": list(u), "slots": list(feasible.slots)},
                           list(feasible.certificates))
    return None


def exponent_pattern(tower: Tower, q: LaurentMonomial, i0: int,
                     feasible: FeasibleCenters) -> Optional[ExponentPattern]:
    cert = verify_exponent_invariant(tower, q, i0, feasible)
    return ExponentPattern(q, cert) if cert is not None else None


def replay(tower: Tower, cert: Certificate) -> bool:
    """Re-checks a certificate from its witness data, recomputing every sign and combination."""
    if not all(replay(tower, s) for s in cert.support):
        return False
    w = cert.witness
    d = tower.dimension
    if cert.kind is CertificateKind.CONSTANT_CENTER:
        frame = tower.frame(cert.start)
        j = w["slot"]
        if frame.argmin() != [j]:
            return False
        return all(is_infinitesimal(frame.weights[j], v) for k, v in enumerate(frame.weights) if k != j)

    if cert.kind is CertificateKind.TOWER_INFINITE:
        return tower.mode is WeightMode.ALGEBRAIC and _rank(tower) == d

    if cert.kind is CertificateKind.EXPONENT_INVARIANT:
        u = tower.frame_exponent(cert.start, LaurentMonomial(w["monomial"]))
        if list(u) != w["exponent"]:
            return False
        if not all(u[j] == sum(u) for j in w["slots"]):
            return False
        return set(w["slots"]) >= set(feasible_centers(tower, cert.support).slots)

    if cert.kind is CertificateKind.RING_MEMBERSHIP:
        u = tower.frame_exponent(cert.start, LaurentMonomial(w["monomial"]))
        return list(u) == w["exponent"] and all(e >= 0 for e in u)

    if cert.kind is CertificateKind.MAXIMAL_IDEAL_MEMBERSHIP:
        u = tower.frame_exponent(cert.start, LaurentMonomial(w["monomial"]))
        return list(u) == w["exponent"] and all(e >= 0 for e in u) and any(e > 0 for e in u)

    if cert.kind is CertificateKind.NEGATIVE_ORDER:
        if not tower.available(w["witnessFrame"]):
            return False
        order = tower.frame(cert.start).order_of(tower.frame(w["witnessFrame"]).columns[w["slot"]])
        return order == w["order"] and order < 0

    if cert.kind is CertificateKind.CENTER_OBSERVED:
        return tower.available(cert.start + 1) and tower.frame(cert.start).center == w["slot"]

    if cert.kind is CertificateKind.TIE_TERMINATION:
        if tower.available(cert.start + 1):
            return False
        return tower.frame(cert.start).argmin() == w["slots"] and len(w["slots"]) > 1

    forms = [tuple(f) for f in w["forms"]]
    frame = tower.frame(cert.start)
    if any(linear_combine(list(f), list(frame.weights)).sign() is not Sign.POSITIVE for f in forms):
        return False
    constant = next((s for s in cert.support if s.kind is CertificateKind.CONSTANT_CENTER), None)
    if constant is not None:
        if w["slots"] != [constant.witness["slot"]]:
            return False
    else:
        generators = _positivity_generators(forms, d)
        excluded = set()
        for e in w["exclusions"]:
            difference = tuple(int(t == e["slot"]) - int(t == e["below"]) for t in range(d))
            combination = [Fraction(c) for c in e["combination"]]
            if not is_cone_combination(difference, generators, combination):
                return False
            excluded.add(e["slot"])
        if set(w["slots"]) | excluded != set(range(d)):
            return False
    checked = set()
    for c in w["closures"]:
        form = forms[c["form"]]
        s = c["slot"]
        transported = transport_form(form, s)
        if list(transported) != c["transported"] or all(x == 0 for x in transported):
            return False
        if "combination" in c:
            combination = [Fraction(x) for x in c["combination"]]
            if not is_cone_combination(transported, _step_generators(forms, d, s), combination):
                return False
        else:
            shift = transported[s] - form[s]
            if constant is None or tower.mode is not WeightMode.LEX or shift != c["infinitesimalShift"]:
                return False
            if not is_infinitesimal(frame.weights[s], linear_combine(list(form), list(frame.weights))):
                return False
        checked.add((c["form"], s))
    return checked == {(n, s) for n in range(len(forms)) for s in w["slots"]}


def check_against_horizon(tower: Tower, cert: Certificate, horizon: int) -> bool:
    """Direct simulation of the certified claim over frames start..horizon."""
    last = tower.last_index(horizon)
    w = cert.witness
    for i in range(cert.start, last + 1):
        frame = tower.frame(i)
        if cert.kind is CertificateKind.CONSTANT_CENTER:
            if i < last and frame.center != w["slot"]:
                return False
        elif cert.kind is CertificateKind.FORM_PRESERVATION:
            if any(linear_combine(f, list(frame.weights)).sign() is not Sign.POSITIVE for f in w["forms"]):
                return False
            if i < last and frame.center not in w["slots"]:
                return False
        elif cert.kind is CertificateKind.EXPONENT_INVARIANT:
            if list(frame.exponent_of(tuple(w["monomial"]))) != w["exponent"]:
                return False
    if cert.kind is CertificateKind.TOWER_INFINITE:
        return last == horizon
    return True
