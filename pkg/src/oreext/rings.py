"""Commutative coefficient rings with canonical normal forms.

Each ring is a *parent* object; its elements are :class:`RingElement`
instances holding the ring and a hashable payload already in normal form,
so structural equality is semantic equality.

Supported rings:

* :class:`BaseFieldRing` -- Q or F_p itself;
* :class:`PolynomialRing` -- k[y];
* :class:`QuotientRing` -- k[y]/<f> for monic f;
* :class:`RationalFunctionField` -- k(y);
* :class:`SequenceRing` -- eventually constant sequences N -> Q (a subring
  of the full function ring Q^N that is closed under the shift).
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from . import _poly as P
from .errors import UnsupportedOperation, UsageError
from .scalars import QQ, FpElement

__all__ = [
    "RingElement",
    "Ring",
    "BaseFieldRing",
    "PolynomialRing",
    "QuotientRing",
    "RationalFunctionField",
    "SequenceRing",
    "Ideal",
    "ideals_by_subsets",
    "ideals_by_closure",
]


class RingElement:
    """An element of a coefficient ring.  Immutable."""

    __slots__ = ("ring", "data")

    def __init__(self, ring, data):
        self.ring = ring
        self.data = data

    def _other(self, other):
        if isinstance(other, RingElement):
            if other.ring is not self.ring and other.ring != self.ring:
                raise UsageError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other.data
        if isinstance(other, (int, Fraction, FpElement)):
            return self.ring._from_scalar(self.ring.field(other))
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return RingElement(self.ring, self.ring._add(self.data, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return RingElement(self.ring, self.ring._sub(self.data, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return RingElement(self.ring, self.ring._sub(o, self.data))

    def __neg__(self):
        return RingElement(self.ring, self.ring._neg(self.data))

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return RingElement(self.ring, self.ring._mul(self.data, o))

    def __rmul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return RingElement(self.ring, self.ring._mul(o, self.data))

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if not isinstance(other, RingElement):
            other = self.ring(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.ring(other) * self.inverse()

    def inverse(self):
        return RingElement(self.ring, self.ring._inverse(self.data))

    def is_zero(self) -> bool:
        return self.ring._is_zero(self.data)

    def __bool__(self):
        return not self.ring._is_zero(self.data)

    def is_one(self) -> bool:
        return self.data == self.ring.one.data

    def is_regular(self) -> bool:
        return self.ring.is_regular(self)

    def is_unit(self) -> bool:
        return self.ring.is_unit(self)

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.data == other.data and self.ring == other.ring
        if isinstance(other, (int, Fraction, FpElement)):
            try:
                return self.data == self.ring._from_scalar(self.ring.field(other))
            except ZeroDivisionError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash(self.data)

    def __str__(self):
        return self.ring._format(self.data)

    def __repr__(self):
        return f"{self.ring!r}({str(self)!r})"


class Ring:
    """Shared behaviour of the concrete rings."""

    kind = "abstract"
    is_commutative = True
    var = "y"

    def __eq__(self, other):
        return type(other) is type(self) and other._key() == self._key()

    def __hash__(self):
        return hash(self._key())

    def _key(self):
        raise NotImplementedError

    @property
    def characteristic(self) -> int:
        return self.field.characteristic

    @property
    def zero(self):
        return RingElement(self, self._from_scalar(self.field.zero))

    @property
    def one(self):
        return RingElement(self, self._from_scalar(self.field.one))

    def element(self, data):
        """Wrap an already normalized payload."""
        return RingElement(self, data)

    def __call__(self, value) -> RingElement:
        if isinstance(value, RingElement):
            if value.ring != self:
                raise UsageError(f"{value} does not belong to {self}")
            return value
        if isinstance(value, str):
            from .parser import parse_ring_element
            return parse_ring_element(value, self)
        return RingElement(self, self._from_scalar(self.field(value)))

    def scalar(self, c) -> RingElement:
        return RingElement(self, self._from_scalar(self.field(c)))

    def _neg(self, a):
        return self._sub(self._from_scalar(self.field.zero), a)

    def is_unit(self, a) -> bool:
        try:
            self._inverse(a.data)
        except (ZeroDivisionError, UnsupportedOperation):
            return False
        return True

    def random_nonzero(self, rng, **kw):
        while True:
            r = self.random_element(rng, **kw)
            if r:
                return r

    def elements(self):
        raise UnsupportedOperation(f"{self} is infinite; cannot enumerate")

    def generators(self):
        raise NotImplementedError

    def coefficient_basis(self, bound: int):
        raise UnsupportedOperation(f"no finite coefficient basis for {self}")

    def linear_coordinates(self, a) -> dict:
        raise UnsupportedOperation(f"no linear coordinates for {self}")

    def __repr__(self):
        return str(self)


class BaseFieldRing(Ring):
    """The base field viewed as a coefficient ring."""

    kind = "field"
    is_domain = True

    def __init__(self, field):
        self.field = field
        self.is_finite = field.is_finite

    def _key(self):
        return ("field", self.field)

    def __str__(self):
        return self.field.name

    def _from_scalar(self, c):
        return c

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _is_zero(self, a):
        return not a

    def _inverse(self, a):
        return self.field.one / a

    def _format(self, a):
        return self.field.format(a)

    def is_regular(self, a):
        return bool(a)

    def generators(self):
        return []

    def elements(self):
        if not self.is_finite:
            return super().elements()
        return (RingElement(self, c) for c in self.field.elements())

    def size(self):
        return self.field.p

    def random_element(self, rng, degree=0, height=5):
        return RingElement(self, self.field.random(rng, height))

    def coefficient_basis(self, bound):
        return [self.one]

    def linear_coordinates(self, a):
        return {0: a.data} if a.data else {}

    def descriptor(self):
        return {"kind": "field", "base_field": self.field.descriptor()}


class _PolyLike(Ring):
    """Rings whose payload is a dense coefficient tuple in y."""

    def _from_scalar(self, c):
        return (c,) if c else ()

    def _add(self, a, b):
        return P.add(a, b)

    def _sub(self, a, b):
        return P.sub(a, b)

    def _neg(self, a):
        return P.neg(a)

    def _is_zero(self, a):
        return not a

    def _format(self, a):
        return P.format_poly(a, self.field, self.var)

    def gen(self):
        return self.from_poly(P.monomial(1, 1, self.field))

    def generators(self):
        return [self.gen()]

    def lift(self, a):
        """Coefficient tuple (constant term first) of the normal form."""
        return a.data

    def linear_coordinates(self, a):
        return {i: c for i, c in enumerate(a.data) if c}


class PolynomialRing(_PolyLike):
    kind = "poly"
    is_domain = True
    is_finite = False

    def __init__(self, field, var="y"):
        self.field = field
        self.var = var

    def _key(self):
        return ("poly", self.field, self.var)

    def __str__(self):
        return f"{self.field.name}[{self.var}]"

    def from_poly(self, coeffs):
        return RingElement(self, P.trim(coeffs))

    def _mul(self, a, b):
        return P.mul(a, b, self.field)

    def _inverse(self, a):
        if len(a) == 1:
            return (self.field.one / a[0],)
        raise ZeroDivisionError(f"{self._format(a)} is not a unit in {self}")

    def is_regular(self, a):
        return bool(a.data)

    def degree(self, a):
        return len(a.data) - 1

    def random_element(self, rng, degree=3, height=5):
        d = rng.randint(0, degree)
        return self.from_poly(self.field.random(rng, height) for _ in range(d + 1))

    def coefficient_basis(self, bound):
        return [self.from_poly(P.monomial(k, 1, self.field)) for k in range(bound + 1)]

    def descriptor(self):
        return {"kind": "poly", "var": self.var, "base_field": self.field.descriptor()}


class QuotientRing(_PolyLike):
    """k[y]/<f> with f monic of degree >= 1."""

    kind = "quotient"

    def __init__(self, field, modulus, var="y", domain=None):
        self.field = field
        self.var = var
        f = P.trim(field(c) for c in modulus)
        if len(f) < 2:
            raise UsageError("quotient modulus must have degree >= 1")
        if f[-1] != field.one:
            raise UsageError("quotient modulus must be monic")
        self.modulus = f
        self.modulus_degree = len(f) - 1
        self.is_finite = field.is_finite
        if field.is_finite:
            self.is_domain = P.is_irreducible(f, field)
            if domain is not None and bool(domain) != self.is_domain:
                raise UsageError("declared domain flag contradicts irreducibility of the modulus")
        elif self.modulus_degree == 1:
            self.is_domain = True
        else:
            self.is_domain = bool(domain)

    def _key(self):
        return ("quotient", self.field, self.var, self.modulus)

    def __str__(self):
        return f"{self.field.name}[{self.var}]/<{P.format_poly(self.modulus, self.field, self.var)}>"

    def from_poly(self, coeffs):
        return RingElement(self, P.rem(P.trim(coeffs), self.modulus, self.field))

    def _mul(self, a, b):
        return P.rem(P.mul(a, b, self.field), self.modulus, self.field)

    def _inverse(self, a):
        g, s, _ = P.xgcd(a, self.modulus, self.field)
        if g != (self.field.one,):
            raise ZeroDivisionError(f"{self._format(a)} is not a unit in {self}")
        return P.rem(s, self.modulus, self.field)

    def is_regular(self, a):
        # k[y]/<f> is finite-dimensional: regular <=> unit <=> gcd(a, f) = 1
        if not a.data:
            return False
        return P.gcd(a.data, self.modulus, self.field) == (self.field.one,)

    def elements(self):
        if not self.is_finite:
            return super().elements()
        elems = self.field.elements()
        return (self.from_poly(c) for c in itertools.product(elems, repeat=self.modulus_degree))

    def size(self):
        return self.field.p ** self.modulus_degree

    def random_element(self, rng, degree=None, height=5):
        d = self.modulus_degree
        return self.from_poly(self.field.random(rng, height) for _ in range(d))

    def coefficient_basis(self, bound):
        top = min(bound, self.modulus_degree - 1)
        return [self.from_poly(P.monomial(k, 1, self.field)) for k in range(top + 1)]

    def descriptor(self):
        return {
            "kind": "quotient",
            "var": self.var,
            "modulus": P.format_poly(self.modulus, self.field, self.var),
            "base_field": self.field.descriptor(),
        }


class RationalFunctionField(Ring):
    """k(y); payload is (numerator, denominator) with monic coprime denominator."""

    kind = "ratfunc"
    is_domain = True
    is_finite = False

    def __init__(self, field, var="y"):
        self.field = field
        self.var = var
        self.polynomials = PolynomialRing(field, var)

    def _key(self):
        return ("ratfunc", self.field, self.var)

    def __str__(self):
        return f"{self.field.name}({self.var})"

    def _normalize(self, num, den):
        f = self.field
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return ((), (f.one,))
        g = P.gcd(num, den, f)
        if len(g) > 1:
            num = P.exact_div(num, g, f)
            den = P.exact_div(den, g, f)
        lead = den[-1]
        if lead != f.one:
            inv = f.one / lead
            num = P.scale(num, inv)
            den = P.scale(den, inv)
        return (num, den)

    def fraction(self, num, den=None):
        num = P.trim(num)
        den = (self.field.one,) if den is None else P.trim(den)
        return RingElement(self, self._normalize(num, den))

    def from_poly(self, coeffs):
        return self.fraction(coeffs)

    def gen(self):
        return self.fraction(P.monomial(1, 1, self.field))

    def generators(self):
        return [self.gen()]

    def _from_scalar(self, c):
        return ((c,) if c else (), (self.field.one,))

    def _add(self, a, b):
        f = self.field
        if a[1] == b[1]:
            return self._normalize(P.add(a[0], b[0]), a[1])
        return self._normalize(P.add(P.mul(a[0], b[1], f), P.mul(b[0], a[1], f)),
                               P.mul(a[1], b[1], f))

    def _sub(self, a, b):
        return self._add(a, (P.neg(b[0]), b[1]))

    def _neg(self, a):
        return (P.neg(a[0]), a[1])

    def _mul(self, a, b):
        f = self.field
        return self._normalize(P.mul(a[0], b[0], f), P.mul(a[1], b[1], f))

    def _inverse(self, a):
        if not a[0]:
            raise ZeroDivisionError("zero is not invertible")
        return self._normalize(a[1], a[0])

    def _is_zero(self, a):
        return not a[0]

    def _format(self, a):
        f = self.field
        num = P.format_poly(a[0], f, self.var)
        if a[1] == (f.one,):
            return num
        return f"({num})/({P.format_poly(a[1], f, self.var)})"

    def is_regular(self, a):
        return bool(a.data[0])

    def numerator(self, a):
        return a.data[0]

    def denominator(self, a):
        return a.data[1]

    def random_element(self, rng, degree=3, height=5):
        num = [self.field.random(rng, height) for _ in range(rng.randint(0, degree) + 1)]
        while True:
            den = P.trim(self.field.random(rng, height) for _ in range(rng.randint(0, degree) + 1))
            if den:
                return self.fraction(num, den)

    def descriptor(self):
        return {"kind": "ratfunc", "var": self.var, "base_field": self.field.descriptor()}


class SequenceRing(Ring):
    """Eventually constant sequences N -> Q under pointwise operations.

    Payload ``(prefix, tail)``: the sequence is ``prefix[n]`` for
    ``n < len(prefix)`` and ``tail`` afterwards; the prefix is minimal (its
    last entry differs from the tail).
    """

    kind = "sequences"
    is_domain = False
    is_finite = False
    var = None

    def __init__(self, field=QQ):
        if field != QQ:
            raise UsageError("the sequence ring is only available over Q")
        self.field = field

    def _key(self):
        return ("sequences",)

    def __str__(self):
        return "Seq(Q)"

    @staticmethod
    def _minimal(prefix, tail):
        prefix = list(prefix)
        while prefix and prefix[-1] == tail:
            prefix.pop()
        return (tuple(prefix), tail)

    def sequence(self, prefix, tail=0):
        f = self.field
        return RingElement(self, self._minimal([f(v) for v in prefix], f(tail)))

    def indicator(self, n):
        """The characteristic function d_n of {n}."""
        return self.sequence([0] * n + [1], 0)

    @staticmethod
    def value(a, n):
        prefix, tail = a.data if isinstance(a, RingElement) else a
        return prefix[n] if n < len(prefix) else tail

    def _from_scalar(self, c):
        return ((), c)

    def _pointwise(self, a, b, op):
        n = max(len(a[0]), len(b[0]))
        prefix = [op(self.value(a, i), self.value(b, i)) for i in range(n)]
        return self._minimal(prefix, op(a[1], b[1]))

    def _add(self, a, b):
        return self._pointwise(a, b, lambda u, v: u + v)

    def _sub(self, a, b):
        return self._pointwise(a, b, lambda u, v: u - v)

    def _neg(self, a):
        return (tuple(-v for v in a[0]), -a[1])

    def _mul(self, a, b):
        return self._pointwise(a, b, lambda u, v: u * v)

    def _inverse(self, a):
        if any(not v for v in a[0]) or not a[1]:
            raise ZeroDivisionError("sequence has a zero entry")
        return (tuple(1 / v for v in a[0]), 1 / a[1])

    def _is_zero(self, a):
        return not a[0] and not a[1]

    def _format(self, a):
        f = self.field
        return f"seq([{','.join(f.format(v) for v in a[0])}],{f.format(a[1])})"

    def is_regular(self, a):
        prefix, tail = a.data
        return bool(tail) and all(prefix)

    def generators(self):
        raise UnsupportedOperation("the sequence ring is not finitely generated; use sampled elements")

    def random_element(self, rng, degree=4, height=5):
        n = rng.randint(0, degree)
        return self.sequence([self.field.random(rng, height) for _ in range(n)],
                             self.field.random(rng, height))

    def coefficient_basis(self, bound):
        return [self.indicator(n) for n in range(bound)] + [self.one]

    def linear_coordinates(self, a):
        # f -> (tail, f(n) - tail): linear and injective
        prefix, tail = a.data
        coords = {"tail": tail} if tail else {}
        for n, v in enumerate(prefix):
            if v != tail:
                coords[n] = v - tail
        return coords

    def descriptor(self):
        return {"kind": "sequences", "base_field": self.field.descriptor()}


# --------------------------------------------------------------------------
# ideals


class Ideal:
    """A finitely generated ideal, or an explicit element set (finite rings)."""

    def __init__(self, ring, generators=(), elements=None):
        self.ring = ring
        gens = [ring(g) for g in generators]
        if any(not g for g in gens):
            raise UsageError("ideal generators must be nonzero")
        self.generators = tuple(gens)
        self.elements = None
        if elements is not None:
            self.elements = frozenset(ring(e).data for e in elements)
            if not _closed(ring, self.elements):
                raise UsageError("element set is not an ideal")
        self._membership = self._build_membership()

    def _build_membership(self):
        ring = self.ring
        if self.elements is not None:
            return lambda r: r.data in self.elements
        gens = self.generators
        if not gens:
            return lambda r: not r
        if isinstance(ring, (BaseFieldRing, RationalFunctionField)):
            return lambda r: True
        f = ring.field
        if isinstance(ring, PolynomialRing):
            g = ()
            for h in gens:
                g = P.gcd(g, h.data, f) if g else P.monic(h.data, f)
            return lambda r: not P.rem(r.data, g, f)
        if isinstance(ring, QuotientRing):
            g = ring.modulus
            for h in gens:
                g = P.gcd(g, h.data, f)
            return lambda r: not P.rem(r.data, g, f)
        if isinstance(ring, SequenceRing):
            # the ideal generated by g_i is {h : supp h within union of supp g_i}
            length = max(len(h.data[0]) for h in gens)
            support = {n for n in range(length) if any(SequenceRing.value(h, n) for h in gens)}
            tail_ok = any(h.data[1] for h in gens)

            def member(r):
                n_max = max(length, len(r.data[0]))
                for n in range(n_max):
                    in_supp = n in support if n < length else tail_ok
                    if SequenceRing.value(r, n) and not in_supp:
                        return False
                return tail_ok or not r.data[1]
            return member
        raise UnsupportedOperation(f"ideal membership not available for {ring}")

    def contains(self, r) -> bool:
        return self._membership(self.ring(r))

    __contains__ = contains

    def is_zero(self) -> bool:
        if self.elements is not None:
            return len(self.elements) == 1
        return not self.generators

    def is_proper(self) -> bool:
        return not self.contains(self.ring.one)

    def principal_generator(self):
        """Monic generator for ideals of k[y] and k[y]/<f>."""
        ring, f = self.ring, self.ring.field
        if isinstance(ring, PolynomialRing):
            g = ()
            for h in self.generators:
                g = P.gcd(g, h.data, f) if g else P.monic(h.data, f)
            return ring.from_poly(g)
        if isinstance(ring, QuotientRing):
            g = ring.modulus
            for h in self.generators:
                g = P.gcd(g, h.data, f)
            return ring.from_poly(g)
        raise UnsupportedOperation("principal generator only for k[y] and k[y]/<f>")

    def __str__(self):
        if self.elements is not None:
            items = sorted(str(self.ring.element(e)) for e in self.elements)
            return "{" + ", ".join(items) + "}"
        return "<" + ", ".join(str(g) for g in self.generators) + ">"

    def __repr__(self):
        return f"Ideal({self})"

    def to_json(self):
        if self.elements is not None:
            return {"elements": sorted(str(self.ring.element(e)) for e in self.elements)}
        return {"generators": [str(g) for g in self.generators]}


def _closed(ring, payloads) -> bool:
    elems = [ring.element(d) for d in payloads]
    if ring.zero.data not in payloads:
        return False
    for a in elems:
        for b in elems:
            if ring._add(a.data, b.data) not in payloads:
                return False
    if ring.is_finite:
        for r in ring.elements():
            for a in elems:
                if ring._mul(r.data, a.data) not in payloads:
                    return False
    return True


def ideals_by_subsets(ring):
    """All ideals of a finite ring by testing every subset (oracle; tiny rings).

    Returns ``(ideals, search_space)`` where ``search_space`` is the number
    of subsets examined.
    """
    if not ring.is_finite:
        raise UnsupportedOperation("ideal enumeration needs a finite ring")
    elems = list(ring.elements())
    payloads = [e.data for e in elems]
    mul_table = {(a, b): ring._mul(a, b) for a in payloads for b in payloads}
    add_table = {(a, b): ring._add(a, b) for a in payloads for b in payloads}
    zero = ring.zero.data
    found = []
    count = 0
    for mask in range(1 << len(payloads)):
        count += 1
        subset = {payloads[i] for i in range(len(payloads)) if mask >> i & 1}
        if zero not in subset:
            continue
        if all(add_table[a, b] in subset for a in subset for b in subset) and \
                all(mul_table[r, a] in subset for r in payloads for a in subset):
            found.append(frozenset(subset))
    return found, count


def ideals_by_closure(ring):
    """All ideals of a finite ring, grown by adjoining one element at a time."""
    if not ring.is_finite:
        raise UnsupportedOperation("ideal enumeration needs a finite ring")
    payloads = [e.data for e in ring.elements()]

    def close(start):
        current = set(start)
        frontier = list(current)
        while frontier:
            new = []
            for a in frontier:
                for b in list(current):
                    for c in (ring._add(a, b),):
                        if c not in current:
                            current.add(c)
                            new.append(c)
                for r in payloads:
                    c = ring._mul(r, a)
                    if c not in current:
                        current.add(c)
                        new.append(c)
            frontier = new
        return frozenset(current)

    zero_ideal = frozenset([ring.zero.data])
    seen = {zero_ideal}
    queue = [zero_ideal]
    while queue:
        ideal = queue.pop()
        for a in payloads:
            if a not in ideal:
                bigger = close(ideal | {a})
                if bigger not in seen:
                    seen.add(bigger)
                    queue.append(bigger)
    return list(seen)
