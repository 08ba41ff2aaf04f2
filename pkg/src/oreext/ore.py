"""Ore extensions R[x; sigma, delta] and their elements.

Elements are written with coefficients on the left, ``sum a_i x^i``, and
multiplied through the commutation rule ``x r = sigma(r) x + delta(r)``.
"""
from __future__ import annotations

import functools
import math
from fractions import Fraction

from .errors import UnsupportedOperation, UsageError
from .maps import Derivation, Endomorphism, Identity, ZeroDerivation, verify_laws
from .rings import RingElement
from .scalars import FpElement

__all__ = [
    "NEG_INF", "OreAlgebra", "OrePoly", "pi_map", "pi_rows",
    "x_power_times", "commutator", "right_divide",
]

NEG_INF = -math.inf  # deg(0); compares below every integer


class OreAlgebra:
    """The triple (R, sigma, delta), validated on construction."""

    def __init__(self, ring, sigma: Endomorphism | None = None,
                 delta: Derivation | None = None, *, check=True, seed=0, samples=100,
                 name=None):
        self.ring = ring
        self.sigma = sigma if sigma is not None else Identity(ring)
        self.delta = delta if delta is not None else ZeroDerivation(ring, self.sigma)
        if self.sigma.ring != ring or self.delta.ring != ring:
            raise UsageError("sigma and delta must act on the coefficient ring")
        if self.delta.sigma is not self.sigma and \
                self.delta.sigma.to_json() != self.sigma.to_json():
            raise UsageError("delta is paired with a different sigma")
        self.name = name
        self.config = None  # set by catalog.build_algebra
        if check:
            verify_laws(self.sigma, self.delta, seed=seed, samples=samples)

    @property
    def is_differential(self) -> bool:
        return self.sigma.is_identity

    @property
    def is_skew(self) -> bool:
        return self.delta.is_zero

    @property
    def field(self):
        return self.ring.field

    @property
    def zero(self):
        return OrePoly(self, {})

    @property
    def one(self):
        return OrePoly(self, {0: self.ring.one})

    @property
    def x(self):
        return OrePoly(self, {1: self.ring.one})

    def gen(self):
        return self.x

    def monomial(self, coeff, k: int):
        """coeff * x^k."""
        c = self.ring(coeff)
        return OrePoly(self, {k: c} if c else {})

    def __call__(self, value):
        if isinstance(value, OrePoly):
            if value.parent is not self and value.parent != self:
                raise UsageError("element belongs to a different Ore algebra")
            return value
        if isinstance(value, str):
            from .parser import parse_ore_expr
            return parse_ore_expr(value, self)
        if isinstance(value, dict):
            return OrePoly(self, {k: self.ring(v) for k, v in value.items()})
        if isinstance(value, (list, tuple)):
            return OrePoly(self, {k: self.ring(v) for k, v in enumerate(value)})
        return self.monomial(value, 0)

    def random_element(self, rng, x_degree=3, coeff_degree=2, height=5):
        n = rng.randint(0, x_degree)
        return OrePoly(self, {k: self.ring.random_element(rng, degree=coeff_degree, height=height)
                              for k in range(n + 1)})

    def random_nonzero(self, rng, **kw):
        while True:
            p = self.random_element(rng, **kw)
            if p:
                return p

    def __eq__(self, other):
        return (isinstance(other, OreAlgebra) and self.ring == other.ring
                and self.sigma.to_json() == other.sigma.to_json()
                and self.delta.to_json() == other.delta.to_json())

    def __hash__(self):
        return hash((self.ring, self.sigma.kind, self.delta.kind))

    def __str__(self):
        s = self.sigma.to_json()
        d = self.delta.to_json()
        return f"{self.ring}[x; {_map_str(s)}, {_map_str(d)}]"

    __repr__ = __str__

    def descriptor(self) -> dict:
        return {"ring": self.ring.descriptor(), "sigma": self.sigma.to_json(),
                "delta": self.delta.to_json()}


def _map_str(js):
    extra = ",".join(f"{k}={v}" for k, v in js.items() if k != "kind")
    return f"{js['kind']}({extra})" if extra else js["kind"]


class OrePoly:
    """sum a_i x^i with left coefficients; only nonzero coefficients stored."""

    __slots__ = ("parent", "terms")

    def __init__(self, parent: OreAlgebra, terms: dict):
        self.parent = parent
        self.terms = {k: c for k, c in terms.items() if c}

    # -- structure

    @property
    def degree(self):
        return max(self.terms) if self.terms else NEG_INF

    def coefficient(self, k: int) -> RingElement:
        return self.terms.get(k, self.parent.ring.zero)

    def leading_coefficient(self) -> RingElement:
        if not self.terms:
            return self.parent.ring.zero
        return self.terms[self.degree]

    def coefficients(self) -> dict:
        return dict(self.terms)

    def is_monic(self) -> bool:
        return bool(self.terms) and self.leading_coefficient().is_one()

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def in_coefficient_ring(self) -> bool:
        return not self.terms or self.degree == 0

    # -- arithmetic

    def _coerce(self, other):
        if isinstance(other, OrePoly):
            if other.parent is not self.parent and other.parent != self.parent:
                raise UsageError("Ore algebra mismatch")
            return other
        if isinstance(other, (RingElement, int, Fraction, FpElement)):
            return self.parent.monomial(other, 0)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms[k] + c if k in terms else c
        return OrePoly(self.parent, terms)

    __radd__ = __add__

    def __neg__(self):
        return OrePoly(self.parent, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ore_mul(self, other)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ore_mul(other, self)

    def __pow__(self, n: int):
        if n < 0:
            raise UsageError("negative powers are not supported")
        result = self.parent.one
        for _ in range(n):
            result = result * self
        return result

    def __truediv__(self, other):
        """Division by an invertible element of the coefficient ring."""
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.in_coefficient_ring() or not other:
            raise UsageError("can only divide by a unit of the coefficient ring")
        return self * self.parent.monomial(other.coefficient(0).inverse(), 0)

    def __eq__(self, other):
        if isinstance(other, OrePoly):
            return self.terms == other.terms and (self.parent is other.parent or self.parent == other.parent)
        if isinstance(other, (RingElement, int, Fraction, FpElement)):
            return self == self.parent.monomial(other, 0)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- text forms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            c = f"({self.terms[k]})"
            if k == 0:
                parts.append(c)
            elif k == 1:
                parts.append(f"{c}*x")
            else:
                parts.append(f"{c}*x^{k}")
        return " + ".join(parts)

    def __repr__(self):
        return f"OrePoly({self})"

    def to_json(self):
        return [{"deg": k, "coeff": str(self.terms[k])} for k in sorted(self.terms, reverse=True)]


# --------------------------------------------------------------------------
# commutation maps


def pi_map(spec: OreAlgebra, m: int, n: int, r):
    """pi_m^n(r), straight from the defining recursion.

    pi_0^0 = id; pi_m^n = 0 for m > n or negative indices; otherwise
    pi_m^n = sigma o pi_{m-1}^{n-1} + delta o pi_m^{n-1}.
    """
    r = spec.ring(r)
    sigma, delta = spec.sigma, spec.delta

    @functools.lru_cache(maxsize=None)
    def pi(a, b):
        if a < 0 or b < 0 or a > b:
            return spec.ring.zero
        if a == 0 and b == 0:
            return r
        return sigma(pi(a - 1, b - 1)) + delta(pi(a, b - 1))

    return pi(m, n)


def pi_rows(spec: OreAlgebra, r, n: int):
    """rows[k][m] = pi_m^k(r) for 0 <= m <= k <= n, built row by row."""
    sigma, delta = spec.sigma, spec.delta
    zero = spec.ring.zero
    rows = [[r]]
    sigma_id = sigma.is_identity
    delta_zero = delta.is_zero
    for _ in range(n):
        prev = rows[-1]
        row = []
        for m in range(len(prev) + 1):
            val = zero
            if m >= 1:
                c = prev[m - 1]
                if c:
                    val = c if sigma_id else sigma(c)
            if m < len(prev) and not delta_zero:
                c = prev[m]
                if c:
                    val = val + delta(c)
            row.append(val)
        rows.append(row)
    return rows


def x_power_times(spec: OreAlgebra, n: int, r) -> OrePoly:
    """x^n r = sum_m pi_m^n(r) x^m."""
    if n < 0:
        raise UsageError("n must be non-negative")
    row = pi_rows(spec, spec.ring(r), n)[n]
    return OrePoly(spec, {m: c for m, c in enumerate(row)})


def ore_mul(p: OrePoly, q: OrePoly) -> OrePoly:
    """(sum a_i x^i)(sum b_j x^j) = sum_{i,j,m} a_i pi_m^i(b_j) x^{m+j}."""
    spec = p.parent
    if not p.terms or not q.terms:
        return spec.zero
    top = p.degree
    acc = {}
    for j, b in q.terms.items():
        rows = pi_rows(spec, b, top)
        for i, a in p.terms.items():
            for m, c in enumerate(rows[i]):
                if c:
                    k = m + j
                    t = a * c
                    acc[k] = acc[k] + t if k in acc else t
    return OrePoly(spec, acc)


def commutator(p: OrePoly, q: OrePoly) -> OrePoly:
    """pq - qp."""
    return p * q - q * p


def right_divide(p: OrePoly, d: OrePoly):
    """(quotient, remainder) with p = quotient*d + remainder, deg remainder < deg d.

    Requires d monic.  Since c x^k * d has leading term c x^{k + deg d},
    no inverse of sigma is needed for right division.
    """
    if p.parent != d.parent:
        raise UsageError("Ore algebra mismatch")
    if not d.is_monic():
        raise UnsupportedOperation("right division needs a monic divisor")
    spec = p.parent
    n = d.degree
    quotient = spec.zero
    remainder = p
    while remainder.degree >= n:
        k = remainder.degree - n
        term = spec.monomial(remainder.leading_coefficient(), k)
        quotient = quotient + term
        remainder = remainder - term * d
    return quotient, remainder
