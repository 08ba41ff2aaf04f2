"""delta-simplicity deciders, non-simplicity evidence and simplicity certificates.

An ideal J of R is sigma-delta-invariant when sigma(J) and delta(J) lie in
J; R is sigma-delta-simple when 0 and R are the only such ideals.  Because
sigma is a ring map and delta obeys the twisted Leibniz rule, invariance
only needs to be checked on generators.

Ideals of k[y] are principal, so on k[y] a proper nonzero invariant ideal
exists iff some nonconstant monic f divides both delta(f) and sigma(f).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import _poly as P
from .certificate import Certificate, replay
from .errors import (PreconditionError, ProviderError, UnsupportedOperation,
                     UsageError)
from .maps import EvalZero, QScale
from .ore import OreAlgebra, OrePoly, commutator, right_divide
from .rings import (BaseFieldRing, Ideal, PolynomialRing, QuotientRing,
                    RationalFunctionField, SequenceRing, ideals_by_closure,
                    ideals_by_subsets)
from .structure import TruncationBound, center, is_maximal_commutative

__all__ = [
    "DeltaSimplicityVerdict", "InvarianceResult", "IdealExtensionEvidence",
    "NoninjectiveEvidence", "CentralStall", "InnerWitness",
    "is_delta_simple", "invariant_ideal_check", "sigma_delta_ideal_extension",
    "noninjective_sigma_ideal", "default_provider", "simplicity_witness",
    "main_theorem_report", "inner_derivation_witness",
]

SUBSET_ENUMERATION_LIMIT = 10  # |R| above this uses closure enumeration


# --------------------------------------------------------------------------
# invariant ideals


@dataclass
class InvarianceResult:
    ok: bool
    trace: list

    def __bool__(self):
        return self.ok

    def to_json(self):
        return {"invariant": self.ok, "trace": list(self.trace)}


def invariant_ideal_check(spec: OreAlgebra, J: Ideal) -> InvarianceResult:
    """Do sigma and delta map every generator of J back into J?"""
    if J.ring != spec.ring:
        raise UsageError("ideal lives over a different ring")
    if J.elements is not None:
        gens = [spec.ring.element(d) for d in sorted(J.elements, key=repr)]
    else:
        gens = list(J.generators)
    trace = []
    ok = True
    for g in gens:
        for name, image in (("sigma", spec.sigma(g)), ("delta", spec.delta(g))):
            inside = J.contains(image)
            trace.append(f"{name}({g}) = {image} {'in' if inside else 'not in'} J")
            ok = ok and inside
    return InvarianceResult(ok, trace)


@dataclass
class DeltaSimplicityVerdict:
    verdict: str  # "simple" | "not-simple" | "undecided"
    method: str
    witness: Ideal | None = None
    reason: str = ""
    trace: list = field(default_factory=list)
    degree_bound: int | None = None
    search_space: int | None = None

    @property
    def is_simple(self):
        return {"simple": True, "not-simple": False}.get(self.verdict)

    def to_json(self):
        out = {"verdict": self.verdict, "method": self.method, "reason": self.reason}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
            out["trace"] = list(self.trace)
        if self.degree_bound is not None:
            out["degree_bound"] = self.degree_bound
        if self.search_space is not None:
            out["search_space"] = self.search_space
        return out


def _found(spec, J, method, reason, **kw):
    check = invariant_ideal_check(spec, J)
    if not check.ok or not J.is_proper() or J.is_zero():
        raise AssertionError(f"internal: candidate {J} is not a proper invariant ideal")
    return DeltaSimplicityVerdict("not-simple", method, J, reason, check.trace, **kw)


def _poly_candidates(spec, candidates):
    ring, f = spec.ring, spec.field
    for c in candidates:
        c = P.monic(c, f)
        if P.degree(c) < 1:
            continue
        r = ring.from_poly(c)
        if P.rem(spec.delta(r).data, c, f) or P.rem(spec.sigma(r).data, c, f):
            continue
        return Ideal(ring, [r])
    return None


def _q_polynomial_rule(spec):
    """Catalog-specific argument for Q[y] when no small witness exists."""
    d, s = spec.delta, spec.sigma
    if d.kind == "d_dy" and s.is_identity:
        return "delta lowers degree by exactly one in characteristic 0, so f never divides delta(f)"
    if d.kind == "jackson" and isinstance(s, QScale):
        # delta(y^n) = [n]_q y^(n-1); over Q, [n]_q = 0 only for q = -1
        if s.q != -1:
            return "q is not a root of unity, so delta lowers degree by exactly one"
    if d.kind == "jackson" and isinstance(s, EvalZero):
        return "delta(y^l) = y^(l-1) lowers degree by exactly one"
    return None


def is_delta_simple(spec: OreAlgebra, degree_bound: int = 3) -> DeltaSimplicityVerdict:
    """Decide sigma-delta-simplicity of the coefficient ring (catalog classes).

    Returns "undecided" instead of guessing outside the supported classes.
    """
    ring, f = spec.ring, spec.field
    if isinstance(ring, (BaseFieldRing, RationalFunctionField)):
        return DeltaSimplicityVerdict("simple", "field", reason="a field has no proper nonzero ideals")

    if isinstance(ring, PolynomialRing):
        y = (f.zero, f.one)
        if f.is_finite:
            p = f.characteristic
            cands = [P.power(y, p, f), y]
            cands += [c for d in range(1, degree_bound + 1) for c in P.monic_polys(f, d)]
            J = _poly_candidates(spec, cands)
            if J is not None:
                return _found(spec, J, "polynomial-divisibility",
                              "f divides delta(f) and sigma(f)", degree_bound=degree_bound)
            return DeltaSimplicityVerdict(
                "undecided", "polynomial-divisibility",
                reason=f"no monic f of degree <= {degree_bound} divides delta(f) and sigma(f)",
                degree_bound=degree_bound)
        J = _poly_candidates(spec, [P.power(y, k, f) for k in range(1, degree_bound + 1)])
        if J is not None:
            return _found(spec, J, "polynomial-divisibility", "f divides delta(f) and sigma(f)")
        reason = _q_polynomial_rule(spec)
        if reason is not None:
            return DeltaSimplicityVerdict("simple", "polynomial-divisibility", reason=reason)
        return DeltaSimplicityVerdict("undecided", "polynomial-divisibility",
                                      reason="derivation outside the analysed catalog")

    if isinstance(ring, QuotientRing):
        if ring.is_finite:
            return _enumerate(spec)
        if ring.is_domain:
            return DeltaSimplicityVerdict("simple", "field", reason="quotient by an irreducible is a field")
        m = ring.modulus
        cands = [P.power((f.zero, f.one), k, f) for k in range(1, P.degree(m))]
        cands.append(P.gcd(m, P.derivative(m), f))
        cands = [c for c in cands if 1 <= P.degree(c) < P.degree(m) and not P.rem(m, c, f)]
        for c in cands:
            J = Ideal(ring, [ring.from_poly(c)])
            if invariant_ideal_check(spec, J):
                return _found(spec, J, "polynomial-divisibility", "divisor of the modulus is invariant")
        return DeltaSimplicityVerdict("undecided", "polynomial-divisibility",
                                      reason="modulus not factored over Q")

    if isinstance(ring, SequenceRing):
        J = Ideal(ring, [ring.one - ring.indicator(0)])
        if invariant_ideal_check(spec, J):
            return _found(spec, J, "candidate-ideal", "sequences vanishing at index 0 form an invariant ideal")
        return DeltaSimplicityVerdict("undecided", "candidate-ideal",
                                      reason="no candidate ideal is invariant")
    return DeltaSimplicityVerdict("undecided", "none", reason=f"unsupported ring {ring}")


def _enumerate(spec):
    ring = spec.ring
    if ring.size() <= SUBSET_ENUMERATION_LIMIT:
        ideals, space = ideals_by_subsets(ring)
    else:
        ideals = ideals_by_closure(ring)
        space = len(ideals)
    one = ring.one.data
    for elems in sorted(ideals, key=len):
        if len(elems) == 1 or one in elems:
            continue
        if all(spec.sigma(ring.element(e)).data in elems and spec.delta(ring.element(e)).data in elems
               for e in elems):
            J = Ideal(ring, elements=[ring.element(e) for e in elems])
            return _found(spec, J, "finite-enumeration", "proper nonzero invariant ideal found",
                          search_space=space)
    return DeltaSimplicityVerdict("simple", "finite-enumeration",
                                  reason=f"none of the {len(ideals)} ideals is proper, nonzero and invariant",
                                  search_space=space)


# --------------------------------------------------------------------------
# non-simplicity evidence


@dataclass
class IdealExtensionEvidence:
    """I = J*A, the polynomials whose coefficients all lie in J."""

    ideal: Ideal
    products_checked: int
    one_excluded: bool
    one_excluded_reason: str

    def contains(self, p: OrePoly) -> bool:
        return all(self.ideal.contains(c) for c in p.terms.values())

    def to_json(self):
        return {"J": self.ideal.to_json(), "products_checked": self.products_checked,
                "one_in_I": not self.one_excluded, "reason": self.one_excluded_reason}


def sigma_delta_ideal_extension(spec: OreAlgebra, J: Ideal, bound: int = 6, samples: int = 20,
                                seed: int = 0) -> IdealExtensionEvidence:
    """Extend a proper nonzero invariant ideal J of R to the ideal J*A of A."""
    if J.is_zero() or not J.is_proper():
        raise PreconditionError("J must be proper and nonzero")
    check = invariant_ideal_check(spec, J)
    if not check:
        raise PreconditionError("J is not sigma-delta-invariant: " + "; ".join(
            t for t in check.trace if "not in" in t))
    evidence = IdealExtensionEvidence(J, 0, True,
                                      "1 has constant coefficient 1, which is not in the proper ideal J")
    rng = random.Random(seed)
    ring = spec.ring
    gens = list(J.generators) or [ring.element(e) for e in J.elements]
    for _ in range(samples):
        j = rng.choice(gens) * ring.random_element(rng)
        p = spec.monomial(j, rng.randint(0, bound // 2))
        a = spec.random_element(rng, x_degree=bound // 2, coeff_degree=2)
        for prod in (spec.x * p, p * spec.x, a * p, p * a):
            if prod.degree > bound:
                continue
            if not evidence.contains(prod):
                raise AssertionError(f"internal: {prod} escaped J*A")
            evidence.products_checked += 1
    if evidence.contains(spec.one):
        raise AssertionError("internal: 1 in J*A")
    return evidence


@dataclass
class NoninjectiveEvidence:
    element: OrePoly  # a*x - delta(a)
    kernel_element: object
    samples_checked: int
    power_bound: int
    one_excluded_reason: str

    def to_json(self):
        return {"element": str(self.element), "a": str(self.kernel_element),
                "samples_checked": self.samples_checked, "power_bound": self.power_bound,
                "one_excluded": self.one_excluded_reason}


def noninjective_sigma_ideal(spec: OreAlgebra, a, bound: int = 6, samples: int = 20,
                             seed: int = 0) -> NoninjectiveEvidence:
    """Evidence for the proper ideal {p : p a^k = 0 for some k} when sigma(a) = 0."""
    ring = spec.ring
    a = ring(a)
    if not a:
        raise PreconditionError("a must be nonzero")
    if spec.sigma(a):
        raise PreconditionError(f"sigma({a}) = {spec.sigma(a)} is not zero")
    powers = [a]
    for _ in range(bound):
        powers.append(powers[-1] * a)
    if any(not t for t in powers):
        raise PreconditionError(f"{a} is nilpotent; the ring is not reduced")
    A = lambda r: spec.monomial(r, 0)  # noqa: E731
    e = spec.monomial(a, 1) - A(spec.delta(a))
    if e * A(a):
        raise AssertionError("internal: (a x - delta(a)) a != 0")
    rng = random.Random(seed)
    checked = 0
    for _ in range(samples):
        p = spec.random_element(rng, x_degree=2, coeff_degree=2) * e
        s = ring.random_element(rng)
        if p * A(a) or (p * A(s)) * A(a):
            raise AssertionError(f"internal: sampled {p} not annihilated by a")
        if (p * spec.x) * A(powers[1]):
            raise AssertionError("internal: (p x) a^2 != 0")
        checked += 1
    reason = ("R is a domain, so a^k != 0 for every k" if ring.is_domain
              else f"a^k != 0 checked for k <= {bound + 1}")
    return NoninjectiveEvidence(e, a, checked, bound + 1, reason)


# --------------------------------------------------------------------------
# simplicity certificates


def _verify_combination(spec, a, combo):
    total = spec.ring.zero
    for k, r in combo:
        d = a
        for _ in range(k):
            d = spec.delta(d)
        total = total + r * d
    if not total.is_one():
        raise ProviderError(f"provider combination for {a} gives {total}, not 1", a)
    return combo


def default_provider(spec: OreAlgebra, a, max_iterations: int = 64):
    """[(k, r_k)] with sum r_k delta^k(a) = 1.

    Tries a unit among a, delta(a), delta^2(a), ...; on k[y] also combines
    the iterates with extended gcds.
    """
    ring, f = spec.ring, spec.field
    if not a:
        raise ProviderError("zero coefficient", a)
    iterates = [a]
    for k in range(max_iterations + 1):
        d = iterates[k]
        if d.is_unit():
            return _verify_combination(spec, a, [(k, d.inverse())])
        if not d:
            break
        iterates.append(spec.delta(d))
    if isinstance(ring, PolynomialRing):
        g, combo = (), []
        for k, d in enumerate(iterates):
            if not d:
                continue
            if not g:
                g, combo = d.data, [(k, ring.one)]
                continue
            g2, s, t = P.xgcd(g, d.data, f)
            combo = [(i, ring.from_poly(s) * r) for i, r in combo] + [(k, ring.from_poly(t))]
            g = g2
            if P.degree(g) == 0:
                inv = ring.scalar(f.one / g[0])
                return _verify_combination(spec, a, [(i, inv * r) for i, r in combo if r])
    raise ProviderError(f"cannot express 1 from delta-iterates of {a}", a)


@dataclass
class CentralStall:
    """Degree reduction stopped at a monic element commuting with R and x."""

    element: OrePoly
    prefix: Certificate  # replays to ``element``

    def to_json(self):
        return {"stall": True, "central_element": str(self.element),
                "prefix": self.prefix.to_json()}


def _negative(c: OrePoly) -> bool:
    return c.parent.field.characteristic == 0 and str(c.leading_coefficient()).startswith("-")


def simplicity_witness(spec: OreAlgebra, b, provider=None, max_rounds: int = 1000):
    """Certificate that the two-sided ideal of b is everything, or a CentralStall.

    Loop: make the working element monic with the provider (combining
    iterated commutators with x), then lower its degree with a nonzero
    commutator against a generator of R or against x.
    """
    if not spec.is_differential:
        raise UnsupportedOperation("simplicity certificates need sigma = identity")
    provider = provider or default_provider
    b = spec(b)
    if not b:
        raise UsageError("b must be nonzero")
    cert = Certificate(str(b), algebra=spec.config)
    regs = [b]

    def push(step, value):
        regs.append(value)
        return cert.add(step)

    gens = [spec.monomial(g, 0) for g in spec.ring.generators()]
    x = spec.x
    cur = 0
    for _ in range(max_rounds):
        w = regs[cur]
        lc = w.leading_coefficient()
        if not lc.is_one():
            combo = provider(spec, lc)
            ad = {0: cur}
            for k in range(1, max(k for k, _ in combo) + 1):
                prev = regs[ad[k - 1]]
                ad[k] = push({"op": "commutator", "src": ad[k - 1], "with": "x", "side": "left"},
                             commutator(x, prev))
            if len(combo) == 1 and combo[0][1].is_one():
                cur = ad[combo[0][0]]
            else:
                value = spec.zero
                for k, r in combo:
                    value = value + spec.monomial(r, 0) * regs[ad[k]]
                cur = push({"op": "lincomb", "terms": [[ad[k], str(r)] for k, r in combo]}, value)
            if not regs[cur].is_monic() or regs[cur].degree != w.degree:
                raise AssertionError("internal: monicization failed")
            w = regs[cur]
        if w.degree == 0:
            return cert
        for g, label in [(g, str(g.coefficient(0))) for g in gens] + [(x, "x")]:
            c = commutator(g, w)
            if c:
                side = "left"
                if _negative(c):
                    c, side = -c, "right"
                if c.degree >= w.degree:
                    raise AssertionError("internal: commutator did not lower the degree")
                cur = push({"op": "commutator", "src": cur, "with": label, "side": side}, c)
                break
        else:
            prefix = Certificate(cert.input, list(cert.steps), claim=str(w), algebra=cert.algebra)
            return CentralStall(w, prefix)
    raise AssertionError("internal: too many rounds")


# --------------------------------------------------------------------------
# combined report


def main_theorem_report(spec: OreAlgebra, bound=None, samples: int = 3, seed: int = 0) -> dict:
    """Combine delta-simplicity, center and maximal commutativity into a
    verdict on simplicity of R[x; id, delta], naming the rule used."""
    if not spec.is_differential:
        raise UnsupportedOperation("the report covers differential polynomial rings")
    bound = bound if isinstance(bound, TruncationBound) else TruncationBound(*(bound or (4, 4)))
    ds = is_delta_simple(spec)
    cen = center(spec, bound, seed)
    mc = is_maximal_commutative(spec, bound, seed)
    char = spec.ring.characteristic
    report = {
        "algebra": str(spec),
        "bound": bound.to_json(),
        "delta_simplicity": ds.to_json(),
        "center": cen.to_json(),
        "maximal_commutative": mc.to_json(),
        "characteristic": char,
        "torsion_free_over_Z": char == 0,
        "notes": [],
    }
    simple, rule, status = None, "no-rule-applies", "undecided"
    if ds.verdict == "not-simple":
        ev = sigma_delta_ideal_extension(spec, ds.witness, bound=bound.x_degree, seed=seed)
        report["ideal_extension"] = ev.to_json()
        simple, rule, status = False, "invariant-ideal-extends", "certified"
    elif cen.witness is not None:
        outcome = simplicity_witness(spec, cen.witness)
        if isinstance(outcome, CentralStall):
            z = outcome.element
            _, remainder = right_divide(spec.one, z)
            report["central_witness"] = str(z)
            report["one_mod_central_witness"] = str(remainder)
            simple, rule = False, "positive-degree-central-element"
            status = "certified" if remainder == spec.one and (z.is_monic() or spec.ring.is_domain) \
                else "bound-limited"
            if ds.verdict == "simple":
                report["notes"].append("coefficient ring is delta-simple, yet the center is not a field")
            if char != 0:
                report["notes"].append(f"characteristic {char}: R is not torsion-free over Z")
    elif ds.verdict == "simple" and mc.maximal:
        simple, rule = True, "delta-simple-and-maximal-commutative"
        status = "certified" if mc.sufficient_conditions_fired else "bound-limited"
        rng = random.Random(seed)
        certs = []
        for _ in range(samples):
            b = spec.random_nonzero(rng, x_degree=2, coeff_degree=2)
            outcome = simplicity_witness(spec, b)
            if isinstance(outcome, CentralStall) or not replay(outcome, spec).ok:
                simple, status = None, "undecided"
                report["notes"].append(f"no certificate for sampled element {b}")
                break
            certs.append(outcome.to_json())
        report["sample_certificates"] = certs
    report["center_is_field"] = (False if cen.witness is not None
                                 else (True if cen.verdict == "equals-scalars-up-to-bound" else None))
    report.update({"simple": simple, "rule": rule, "status": status})
    return report


# --------------------------------------------------------------------------
# inner derivations over k(y)


@dataclass
class InnerWitness:
    a: object
    alpha: object
    samples_checked: int
    remark: str

    def to_json(self):
        return {"a": str(self.a), "alpha": str(self.alpha),
                "samples_checked": self.samples_checked, "remark": self.remark}


def inner_derivation_witness(spec: OreAlgebra, alpha, samples: int = 100, seed: int = 0,
                             height: int = 3) -> InnerWitness:
    """a = -delta(alpha)/(sigma(alpha) - alpha), checked to give delta(r) = a r - sigma(r) a."""
    ring = spec.ring
    if not isinstance(ring, RationalFunctionField):
        raise UnsupportedOperation("inner derivation witness is built over k(y)")
    if spec.sigma.is_identity:
        raise PreconditionError("sigma is the identity; no alpha with sigma(alpha) != alpha")
    alpha = ring(alpha)
    diff = spec.sigma(alpha) - alpha
    if not diff:
        raise PreconditionError(f"sigma({alpha}) = {alpha}")
    a = -spec.delta(alpha) / diff
    rng = random.Random(seed)
    for _ in range(samples):
        r = ring.random_element(rng, degree=3, height=height)
        if spec.delta(r) != a * r - spec.sigma(r) * a:
            raise AssertionError(f"internal: inner form fails at {r}")
    return InnerWitness(a, alpha, samples,
                        "delta is inner, so the extension is isomorphic to a skew polynomial ring "
                        "via x -> x - a and is not simple")
