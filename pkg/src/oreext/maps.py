"""Ring endomorphisms and sigma-derivations on the supported rings.

Maps are bound to a ring at construction.  Law checks (``sigma(ab) =
sigma(a)sigma(b)``, ``delta(ab) = sigma(a)delta(b) + delta(a)b``) are run on
generators and random pairs by :func:`verify_laws`; :class:`OreAlgebra`
calls it when an algebra is built.
"""
from __future__ import annotations

import math
import random

from . import _poly as P
from .errors import LawViolation, UsageError, UnsupportedOperation
from .rings import (BaseFieldRing, PolynomialRing, QuotientRing,
                    RationalFunctionField, RingElement, SequenceRing)

__all__ = [
    "Endomorphism", "Identity", "QScale", "SequenceShift", "EvalZero",
    "Derivation", "ZeroDerivation", "FormalDerivative", "JacksonDerivative",
    "EulerDerivative", "InnerDerivation", "QuotientDerivative",
    "make_endomorphism", "make_derivation", "verify_laws", "law_samples",
    "apply_endo", "apply_deriv", "deriv_power", "endo_order_probe", "kernel_probe",
]


def _check_ring(ring, allowed, name):
    if not isinstance(ring, allowed):
        raise UsageError(f"{name} is not defined on {ring}")


# --------------------------------------------------------------------------
# endomorphisms


class Endomorphism:
    kind = "abstract"
    is_identity = False

    def __init__(self, ring):
        self.ring = ring

    def __call__(self, r):
        r = self.ring(r)
        return self._apply(r)

    def power(self, n: int, r):
        for _ in range(n):
            r = self(r)
        return r

    def inverse(self):
        """The inverse endomorphism, or None when it does not exist here."""
        return None

    def to_json(self) -> dict:
        return {"kind": self.kind}

    def __repr__(self):
        return f"{type(self).__name__}({self.ring})"


class Identity(Endomorphism):
    kind = "identity"
    is_identity = True

    def _apply(self, r):
        return r

    def power(self, n, r):
        return self.ring(r)

    def inverse(self):
        return self


class QScale(Endomorphism):
    """y -> q*y, extended as a k-algebra map."""

    kind = "q_scale"

    def __init__(self, ring, q):
        _check_ring(ring, (BaseFieldRing, PolynomialRing, QuotientRing, RationalFunctionField), "q_scale")
        super().__init__(ring)
        self.q = ring.field(q)
        if not self.q:
            raise UsageError("q_scale needs q != 0")
        if isinstance(ring, QuotientRing):
            f = ring.modulus
            if P.rem(P.scale_var(f, self.q), f, ring.field):
                raise UsageError("y -> q*y does not preserve the modulus ideal")

    def _apply(self, r):
        ring = self.ring
        if isinstance(ring, BaseFieldRing):
            return r
        if isinstance(ring, RationalFunctionField):
            num, den = r.data
            return ring.fraction(P.scale_var(num, self.q), P.scale_var(den, self.q))
        return ring.from_poly(P.scale_var(r.data, self.q))

    def power(self, n, r):
        if isinstance(self.ring, BaseFieldRing):
            return r
        return QScale(self.ring, self.q ** n)._apply(self.ring(r)) if n else self.ring(r)

    def inverse(self):
        return QScale(self.ring, self.ring.field.one / self.q)

    def to_json(self):
        return {"kind": self.kind, "q": self.ring.field.format(self.q)}

    def __repr__(self):
        return f"QScale({self.ring}, q={self.ring.field.format(self.q)})"


class SequenceShift(Endomorphism):
    """sigma(f)(0) = f(0), sigma(f)(n) = f(n-1)."""

    kind = "seq_shift"

    def __init__(self, ring):
        _check_ring(ring, SequenceRing, "seq_shift")
        super().__init__(ring)

    def _apply(self, r):
        prefix, tail = r.data
        first = prefix[0] if prefix else tail
        return RingElement(self.ring, SequenceRing._minimal((first,) + prefix, tail))


class EvalZero(Endomorphism):
    """p(y) -> p(0); not injective."""

    kind = "eval0"

    def __init__(self, ring):
        _check_ring(ring, PolynomialRing, "eval0")
        super().__init__(ring)

    def _apply(self, r):
        return self.ring.from_poly(r.data[:1])


def make_endomorphism(ring, kind: str, **params) -> Endomorphism:
    if kind == "identity":
        return Identity(ring)
    if kind == "q_scale":
        if "q" not in params:
            raise UsageError("q_scale needs a parameter q")
        return QScale(ring, params["q"])
    if kind == "seq_shift":
        return SequenceShift(ring)
    if kind == "eval0":
        return EvalZero(ring)
    raise UsageError(f"unknown endomorphism kind {kind!r}")


# --------------------------------------------------------------------------
# sigma-derivations


class Derivation:
    kind = "abstract"
    is_zero = False

    def __init__(self, ring, sigma):
        if sigma.ring != ring:
            raise UsageError("sigma and delta must act on the same ring")
        self.ring = ring
        self.sigma = sigma

    def __call__(self, r):
        return self._apply(self.ring(r))

    def to_json(self) -> dict:
        return {"kind": self.kind}

    def __repr__(self):
        return f"{type(self).__name__}({self.ring})"


class ZeroDerivation(Derivation):
    kind = "zero"
    is_zero = True

    def _apply(self, r):
        return self.ring.zero


class FormalDerivative(Derivation):
    """d/dy on k[y] and k(y); zero on the base field."""

    kind = "d_dy"

    def __init__(self, ring, sigma):
        _check_ring(ring, (BaseFieldRing, PolynomialRing, RationalFunctionField), "d_dy")
        super().__init__(ring, sigma)

    def _apply(self, r):
        ring = self.ring
        if isinstance(ring, BaseFieldRing):
            return ring.zero
        if isinstance(ring, RationalFunctionField):
            f = ring.field
            num, den = r.data
            top = P.sub(P.mul(P.derivative(num), den, f), P.mul(num, P.derivative(den), f))
            return ring.fraction(top, P.mul(den, den, f))
        return ring.from_poly(P.derivative(r.data))


class QuotientDerivative(Derivation):
    """d/dy induced on k[y]/<f>; needs f | f' in k[y]."""

    kind = "quotient_d_dy"

    def __init__(self, ring, sigma):
        _check_ring(ring, QuotientRing, "quotient_d_dy")
        super().__init__(ring, sigma)
        f = ring.modulus
        if P.rem(P.derivative(f), f, ring.field):
            raise UsageError("d/dy does not preserve the modulus ideal; no induced derivation")

    def _apply(self, r):
        return self.ring.from_poly(P.derivative(r.data))


class JacksonDerivative(Derivation):
    """delta(p) = (sigma(p) - p) / (sigma(y) - y).

    With sigma(y) = q*y this is the Jackson q-derivative; with sigma = eval0
    it is p -> (p - p(0))/y.
    """

    kind = "jackson"

    def __init__(self, ring, sigma):
        _check_ring(ring, (PolynomialRing, RationalFunctionField), "jackson")
        super().__init__(ring, sigma)
        y = ring.gen()
        self._denominator = sigma(y) - y
        if not self._denominator:
            raise UsageError("jackson derivative needs sigma(y) != y (q != 1)")

    def _apply(self, r):
        ring = self.ring
        diff = self.sigma(r) - r
        if isinstance(ring, RationalFunctionField):
            return diff / self._denominator
        q, rem = P.divmod_(diff.data, self._denominator.data, ring.field)
        assert not rem, "difference quotient must be exact"
        return ring.from_poly(q)

    def to_json(self):
        return {"kind": self.kind}


class EulerDerivative(Derivation):
    """The derivation with delta(y) = y, i.e. y * d/dy."""

    kind = "euler"

    def __init__(self, ring, sigma):
        _check_ring(ring, (BaseFieldRing, PolynomialRing, QuotientRing, RationalFunctionField), "euler")
        super().__init__(ring, sigma)
        if isinstance(ring, QuotientRing):
            f = ring.modulus
            if P.rem(P.shift(P.derivative(f), 1), f, ring.field):
                raise UsageError("y*d/dy does not preserve the modulus ideal")
            self._ddy = None
        else:
            self._ddy = FormalDerivative(ring, sigma)

    def _apply(self, r):
        ring = self.ring
        if isinstance(ring, BaseFieldRing):
            return ring.zero
        if self._ddy is None:
            return ring.from_poly(P.shift(P.derivative(r.data), 1))
        return ring.gen() * self._ddy._apply(r)


class InnerDerivation(Derivation):
    """delta(r) = a*r - sigma(r)*a for a fixed element a."""

    kind = "inner"

    def __init__(self, ring, sigma, a):
        super().__init__(ring, sigma)
        self.a = ring(a)

    def _apply(self, r):
        return self.a * r - self.sigma(r) * self.a

    def to_json(self):
        return {"kind": self.kind, "a": str(self.a)}


def make_derivation(ring, sigma, kind: str, **params) -> Derivation:
    if kind == "zero":
        return ZeroDerivation(ring, sigma)
    if kind == "d_dy":
        return FormalDerivative(ring, sigma)
    if kind == "quotient_d_dy":
        return QuotientDerivative(ring, sigma)
    if kind == "jackson":
        return JacksonDerivative(ring, sigma)
    if kind == "euler":
        return EulerDerivative(ring, sigma)
    if kind == "inner":
        if "a" not in params:
            raise UsageError("inner derivation needs an element a")
        return InnerDerivation(ring, sigma, params["a"])
    raise UsageError(f"unknown derivation kind {kind!r}")


# --------------------------------------------------------------------------
# law verification


def law_samples(ring, rng, count):
    """Generators plus random elements used for law checks."""
    try:
        gens = list(ring.generators())
    except UnsupportedOperation:
        gens = [ring.indicator(0), ring.indicator(1)]
    out = gens + [ring.one]
    while len(out) < count + len(gens) + 1:
        out.append(ring.random_element(rng))
    return out


def verify_laws(sigma, delta, seed=0, samples=100):
    """Raise LawViolation unless sigma is a unital ring endomorphism and
    delta a sigma-derivation, on generators and ``samples`` random pairs."""
    ring = sigma.ring
    rng = random.Random(seed)
    one = ring.one
    if sigma(one) != one:
        raise LawViolation("sigma(1) != 1")
    if delta(one):
        raise LawViolation("delta(1) != 0")
    elems = law_samples(ring, rng, samples)
    gens = elems[: len(elems) - samples]
    pairs = [(a, b) for a in gens for b in gens]
    pairs += [(rng.choice(elems), rng.choice(elems)) for _ in range(samples)]
    for a, b in pairs:
        sa, sb = sigma(a), sigma(b)
        if sigma(a + b) != sa + sb:
            raise LawViolation(f"sigma not additive on ({a}, {b})")
        if sigma(a * b) != sa * sb:
            raise LawViolation(f"sigma not multiplicative on ({a}, {b})")
        if delta(a + b) != delta(a) + delta(b):
            raise LawViolation(f"delta not additive on ({a}, {b})")
        if delta(a * b) != sa * delta(b) + delta(a) * b:
            raise LawViolation(f"delta(ab) != sigma(a)delta(b) + delta(a)b on ({a}, {b})")


# --------------------------------------------------------------------------
# functional interface


def apply_endo(sigma, r):
    return sigma(r)


def apply_deriv(delta, r):
    return delta(r)


def deriv_power(delta, n: int, r):
    """delta applied n times (differential case only)."""
    if n < 0:
        raise UsageError("derivative power must be non-negative")
    if not delta.sigma.is_identity:
        raise UsageError("iterated derivations are only used with sigma = identity")
    r = delta.ring(r)
    for _ in range(n):
        r = delta(r)
    return r


def binomial(n, k, ring):
    """C(n, k) computed in the integers, then mapped into the ring."""
    return ring.scalar(math.comb(n, k))


def _probe_elements(ring):
    try:
        return list(ring.generators())
    except UnsupportedOperation:
        return [ring.indicator(k) for k in range(4)]


def endo_order_probe(sigma, max_n: int):
    """Smallest n <= max_n with sigma^n = id on generators, else None."""
    if sigma.is_identity:
        return 1
    gens = _probe_elements(sigma.ring)
    current = list(gens)
    for n in range(1, max_n + 1):
        current = [sigma(g) for g in current]
        if current == gens:
            return n
    return None


def kernel_probe(sigma, samples=()):
    """Known nonzero elements of ker(sigma) among built-ins and samples."""
    found = []
    if isinstance(sigma, EvalZero):
        found.append(sigma.ring.gen())
    for r in samples:
        r = sigma.ring(r)
        if r and not sigma(r) and r not in found:
            found.append(r)
    return found
