"""Truncated centralizer, center and constants via exact linear systems.

Everything here is computed *up to a bound*: Ore degree at most
``x_degree`` and coefficients in the span of the first ``coeff_degree + 1``
basis elements of R.  Results are labelled accordingly and never claimed
globally.

"For all r in R" is reduced to algebra generators: an element commuting
with a generating set commutes with the subring it generates, and the
prime field is central in every catalog algebra.  The sequence ring has no
finite generating set, so its constraints are sampled elements and the
report is flagged ``sampled``.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .errors import OreError, UnsupportedOperation, UsageError
from .maps import endo_order_probe
from .ore import OreAlgebra, OrePoly, commutator, pi_rows
from .rings import BaseFieldRing, PolynomialRing, QuotientRing, SequenceRing
from .scalars import Matrix, nullspace

__all__ = [
    "TruncationBound", "SubspaceReport", "MaximalityReport",
    "centralizer_of_R", "center", "constants", "is_maximal_commutative",
    "centralizer_commutativity_check", "ideal_intersection_element",
]

EQUALS_R = "equals-R-up-to-bound"
LARGER = "strictly-larger-with-witness"
SCALARS = "equals-scalars-up-to-bound"
OTHER = "other"


@dataclass(frozen=True)
class TruncationBound:
    x_degree: int = 4
    coeff_degree: int = 4
    sample_count: int = 20

    def __post_init__(self):
        if self.x_degree < 0 or self.coeff_degree < 0 or self.sample_count < 0:
            raise UsageError("truncation bounds must be non-negative")

    def to_json(self):
        return {"x_degree": self.x_degree, "coeff_degree": self.coeff_degree,
                "samples": self.sample_count}


@dataclass
class SubspaceReport:
    kind: str
    basis: list
    bound: TruncationBound
    verdict: str
    witness: OrePoly | None = None
    sampled: bool = False
    sufficient_conditions_fired: list = field(default_factory=list)
    is_field: bool | None = None

    def contains_monomial(self, text) -> bool:
        """True if some basis element prints as ``text`` (e.g. ``"(1)*x^3"``)."""
        return any(str(b) == text for b in self.basis)

    def to_json(self):
        out = {
            "kind": self.kind,
            "bound": self.bound.to_json(),
            "basis": [str(b) for b in self.basis],
            "verdict": self.verdict,
            "sampled": self.sampled,
            "sufficient_conditions_fired": list(self.sufficient_conditions_fired),
        }
        if self.witness is not None:
            out["witness"] = str(self.witness)
        if self.is_field is not None:
            out["is_field"] = self.is_field
        return out


@dataclass
class MaximalityReport:
    verdict: str
    witness: OrePoly | None
    sufficient_conditions_fired: list
    centralizer: SubspaceReport

    @property
    def maximal(self) -> bool:
        return self.witness is None

    def to_json(self):
        out = {"verdict": self.verdict,
               "sufficient_conditions_fired": list(self.sufficient_conditions_fired),
               "centralizer": self.centralizer.to_json()}
        if self.witness is not None:
            out["witness"] = str(self.witness)
        return out


def _as_bound(bound):
    if bound is None:
        return TruncationBound()
    if isinstance(bound, TruncationBound):
        return bound
    return TruncationBound(*bound)


def _constraint_elements(spec: OreAlgebra, bound: TruncationBound, seed):
    """(elements of R standing in for 'all r in R', sampled flag)."""
    ring = spec.ring
    try:
        return list(ring.generators()), False
    except UnsupportedOperation:
        pass
    if not isinstance(ring, SequenceRing):
        raise UnsupportedOperation(f"no constraint set for {ring}")
    rng = random.Random(seed)
    length = bound.coeff_degree + bound.x_degree + 2
    elems = [ring.indicator(0), ring.one]
    for _ in range(bound.sample_count):
        elems.append(ring.sequence([rng.randint(-50, 50) for _ in range(length)], rng.randint(-50, 50)))
    return elems, True


def _solve(spec, unknowns, column_of):
    """Nullspace of the system whose columns are sparse dicts ``column_of(u)``."""
    columns = [column_of(u) for u in unknowns]
    row_index = {}
    for col in columns:
        for key in col:
            if key not in row_index:
                row_index[key] = len(row_index)
    f = spec.field
    rows = [[f.zero] * len(unknowns) for _ in row_index]
    for j, col in enumerate(columns):
        for key, v in col.items():
            rows[row_index[key]][j] = v
    M = Matrix.from_rows(f, rows, cols=len(unknowns)) if rows else Matrix(f, 0, len(unknowns))
    return nullspace(M)


def _unknowns(spec, bound):
    basis = spec.ring.coefficient_basis(bound.coeff_degree)
    return [(i, b) for i in range(bound.x_degree + 1) for b in basis]


def _combine(spec, unknowns, vec):
    acc = {}
    for (i, b), c in zip(unknowns, vec):
        if c:
            t = b * c
            acc[i] = acc[i] + t if i in acc else t
    return OrePoly(spec, acc)


def _commutant_columns(spec, constraints, bound):
    """Column builder from the pi-map form of [r, b x^j]."""
    ring = spec.ring
    rows_for = [pi_rows(spec, r, bound.x_degree) for r in constraints]

    def column(u):
        j, b = u
        col = {}
        for g, r in enumerate(constraints):
            pis = rows_for[g][j]
            for i in range(j + 1):
                # coefficient of x^i in r*(b x^j) - (b x^j)*r
                val = -(b * pis[i])
                if i == j:
                    val = val + r * b
                for key, c in ring.linear_coordinates(val).items():
                    col[(g, i, key)] = c
        return col
    return column


def _witness(basis):
    positive = [b for b in basis if b.degree > 0]
    if not positive:
        return None
    return min(positive, key=lambda b: b.degree)


def _verify(spec, basis, others):
    for b in basis:
        for g in others:
            if commutator(g, b):
                raise OreError(f"internal: solver basis element {b} fails to commute with {g}")


def centralizer_of_R(spec: OreAlgebra, bound=None, seed=0) -> SubspaceReport:
    """Centralizer of R in R[x; sigma, delta], truncated to ``bound``."""
    bound = _as_bound(bound)
    if not spec.ring.is_commutative:
        raise UnsupportedOperation("centralizer computation needs a commutative ring")
    constraints, sampled = _constraint_elements(spec, bound, seed)
    unknowns = _unknowns(spec, bound)
    vecs = _solve(spec, unknowns, _commutant_columns(spec, constraints, bound))
    basis = [_combine(spec, unknowns, v) for v in vecs]
    _verify(spec, basis, [spec.monomial(r, 0) for r in constraints])
    witness = _witness(basis)
    verdict = EQUALS_R if witness is None else LARGER
    return SubspaceReport("centralizer", basis, bound, verdict, witness, sampled)


def center(spec: OreAlgebra, bound=None, seed=0) -> SubspaceReport:
    """Elements commuting with the generators of R and with x, up to bound.

    The x-condition uses x*(b x^j) - (b x^j)*x = (sigma(b) - b) x^{j+1} +
    delta(b) x^j, which for sigma = id is delta(q_j) = 0 coefficientwise.
    """
    bound = _as_bound(bound)
    constraints, sampled = _constraint_elements(spec, bound, seed)
    unknowns = _unknowns(spec, bound)
    ring = spec.ring
    r_column = _commutant_columns(spec, constraints, bound)
    sigma, delta = spec.sigma, spec.delta
    xg = len(constraints)

    def column(u):
        col = r_column(u)
        j, b = u
        if not spec.is_differential:
            for key, c in ring.linear_coordinates(sigma(b) - b).items():
                col[(xg, j + 1, key)] = c
        for key, c in ring.linear_coordinates(delta(b)).items():
            col[(xg, j, key)] = c
        return col

    vecs = _solve(spec, unknowns, column)
    basis = [_combine(spec, unknowns, v) for v in vecs]
    _verify(spec, basis, [spec.monomial(r, 0) for r in constraints] + [spec.x])
    witness = _witness(basis)
    if witness is not None:
        verdict = LARGER
    elif len(basis) == 1 and basis[0] == spec.one:
        verdict = SCALARS
    else:
        verdict = OTHER
    return SubspaceReport("center", basis, bound, verdict, witness, sampled)


def constants(spec: OreAlgebra, bound=None) -> SubspaceReport:
    """Kernel of delta on R, up to the coefficient bound, with a field flag."""
    bound = _as_bound(bound)
    if not spec.is_differential:
        raise UnsupportedOperation("constants are computed for differential algebras only")
    ring = spec.ring
    basis = ring.coefficient_basis(bound.coeff_degree)
    vecs = _solve(spec, basis, lambda b: ring.linear_coordinates(spec.delta(b)))
    elems = []
    for v in vecs:
        acc = ring.zero
        for b, c in zip(basis, v):
            if c:
                acc = acc + b * c
        elems.append(acc)
    for e in elems:
        if spec.delta(e):
            raise OreError(f"internal: constant {e} is not killed by delta")
    verdict = SCALARS if len(elems) == 1 and elems[0] == ring.one else OTHER
    report = SubspaceReport("constants", elems, bound, verdict)
    report.is_field = _span_is_field(ring, elems)
    return report


def _span_is_field(ring, elems):
    if isinstance(ring, BaseFieldRing):
        return True
    if isinstance(ring, PolynomialRing):
        # units of k[y] are the nonzero constants
        return all(len(e.data) <= 1 for e in elems)
    if any(not e.is_unit() for e in elems):
        return False
    if ring.is_finite:
        f = ring.field
        for coeffs in itertools.product(f.elements(), repeat=len(elems)):
            v = ring.zero
            for c, e in zip(coeffs, elems):
                v = v + e * c
            if v and not v.is_unit():
                return False
        return True
    if isinstance(ring, QuotientRing) and ring.is_domain:
        return True  # finite-dimensional domain over k
    if all(e.data == ring.one.data for e in elems):
        return True
    return None


def is_maximal_commutative(spec: OreAlgebra, bound=None, seed=0) -> MaximalityReport:
    """Is R maximal commutative, up to bound?  Also reports which of the
    known sufficient conditions hold for this algebra."""
    bound = _as_bound(bound)
    cent = centralizer_of_R(spec, bound, seed)
    fired = []
    ring = spec.ring
    rng = random.Random(seed)
    constraints, _ = _constraint_elements(spec, bound, seed)
    probes = list(constraints) + [ring.random_element(rng) for _ in range(bound.sample_count)]

    if bound.x_degree >= 1 and all(
            any((spec.sigma.power(n, r) - r).is_regular() for r in probes)
            for n in range(1, bound.x_degree + 1)):
        fired.append("regular_sigma_power_difference")
    if ring.is_domain and endo_order_probe(spec.sigma, max(bound.x_degree, 1)) is None:
        fired.append("domain_sigma_no_finite_order_up_to_bound")
    if (spec.is_differential and ring.is_domain and ring.characteristic == 0
            and any(spec.delta(r) for r in probes)):
        fired.append("char0_domain_nonzero_derivation")
    cent.sufficient_conditions_fired = fired
    if cent.witness is None:
        verdict = "maximal-commutative-up-to-bound"
    else:
        verdict = "not-maximal-commutative"
        if fired and "domain_sigma_no_finite_order_up_to_bound" not in fired:
            raise OreError("internal: a sufficient condition fired but a witness was found")
    return MaximalityReport(verdict, cent.witness, fired, cent)


def centralizer_commutativity_check(spec: OreAlgebra, bound=None, seed=0) -> bool:
    """True iff the computed centralizer basis elements pairwise commute."""
    basis = centralizer_of_R(spec, bound, seed).basis
    for a, b in itertools.combinations(basis, 2):
        if commutator(a, b):
            return False
    return True


def ideal_intersection_element(spec: OreAlgebra, p: OrePoly):
    """A nonzero element of SpS commuting with R, by commutator degree reduction.

    While the working element a has positive degree and some generator r
    gives ra - ar != 0, replace a by ra - ar (same ideal, smaller degree).
    Returns ``(element, trace)``; the trace lists the generators used.
    """
    if not spec.is_differential:
        raise UnsupportedOperation("degree reduction by commutators needs sigma = id")
    if not p:
        raise UsageError("need a nonzero element")
    gens = [spec.monomial(g, 0) for g in spec.ring.generators()]
    a = p
    trace = []
    while a.degree > 0:
        for g in gens:
            c = commutator(g, a)
            if c:
                if c.degree >= a.degree:
                    raise OreError("internal: commutator did not lower the degree")
                trace.append(str(g))
                a = c
                break
        else:
            break
    return a, trace
