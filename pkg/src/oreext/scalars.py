"""Exact base fields (Q and F_p) and dense exact linear algebra.

Rationals are ``fractions.Fraction`` values; residues mod p are
:class:`FpElement` instances.  Both support ``+ - * /`` and comparison
with ``int``, so code above this layer does not branch on the field.
"""
from __future__ import annotations

import functools
import math
from fractions import Fraction

from .errors import UsageError

__all__ = [
    "QQ",
    "GF",
    "RationalField",
    "PrimeField",
    "FpElement",
    "Matrix",
    "field_characteristic",
    "is_prime",
    "rref",
    "nullspace",
    "rank",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


class RationalField:
    """The field Q of arbitrary-precision rationals."""

    characteristic = 0
    is_finite = False
    name = "Q"

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __call__(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value.strip())
        if isinstance(value, FpElement):
            raise UsageError("cannot coerce an F_p element into Q")
        return Fraction(value)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"

    def format(self, c: Fraction) -> str:
        if c.denominator == 1:
            return str(c.numerator)
        return f"{c.numerator}/{c.denominator}"

    def random(self, rng, height: int = 5) -> Fraction:
        return Fraction(rng.randint(-height, height), rng.randint(1, 3))

    def random_nonzero(self, rng, height: int = 5) -> Fraction:
        while True:
            c = self.random(rng, height)
            if c:
                return c

    def elements(self):
        raise UsageError("Q is infinite")

    def descriptor(self) -> dict:
        return {"kind": "Q"}


class FpElement:
    """Residue class modulo a prime; immutable."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise UsageError(f"mixing F_{self.p} and F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElement(-self.value, self.p)

    def inverse(self) -> "FpElement":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return FpElement(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * FpElement(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.inverse() * o

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return FpElement(pow(self.value, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"FpElement({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


class PrimeField:
    """The field F_p for a prime p (checked by trial division)."""

    is_finite = True

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise UsageError(f"F_p requires a prime modulus, got {p!r}")
        if p >= 2**31:
            raise UsageError("only moduli below 2^31 are supported")
        self.p = p
        self.characteristic = p
        self.name = f"F_{p}"
        self.zero = FpElement(0, p)
        self.one = FpElement(1, p)

    def __call__(self, value) -> FpElement:
        if isinstance(value, FpElement):
            if value.p != self.p:
                raise UsageError(f"cannot coerce F_{value.p} element into F_{self.p}")
            return value
        if isinstance(value, int):
            return FpElement(value, self.p)
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"{value} has no image in F_{self.p}")
            return FpElement(value.numerator * pow(value.denominator, -1, self.p), self.p)
        raise UsageError(f"cannot coerce {value!r} into F_{self.p}")

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    @property
    def order(self) -> int:
        return self.p

    def format(self, c: FpElement) -> str:
        return str(c.value)

    def random(self, rng, height: int = 5) -> FpElement:
        return FpElement(rng.randrange(self.p), self.p)

    def random_nonzero(self, rng, height: int = 5) -> FpElement:
        return FpElement(rng.randrange(1, self.p), self.p)

    def elements(self):
        return [FpElement(v, self.p) for v in range(self.p)]

    def descriptor(self) -> dict:
        return {"kind": "Fp", "p": self.p}


QQ = RationalField()


@functools.lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_characteristic(field) -> int:
    """0 for Q, p for F_p."""
    return field.characteristic


# --------------------------------------------------------------------------
# dense exact linear algebra


class Matrix:
    """Dense row-major matrix over an exact field."""

    def __init__(self, field, rows: int, cols: int, entries=None):
        self.field = field
        self.rows = rows
        self.cols = cols
        if entries is None:
            entries = [field.zero] * (rows * cols)
        entries = [field(e) for e in entries]
        if len(entries) != rows * cols:
            raise UsageError("entries length must equal rows * cols")
        self.entries = tuple(entries)

    @classmethod
    def from_rows(cls, field, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise UsageError("ragged rows")
        return cls(field, len(rows), cols, [e for r in rows for e in r])

    def row(self, i):
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def apply(self, v):
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise UsageError("vector length mismatch")
        out = []
        for i in range(self.rows):
            s = self.field.zero
            for a, b in zip(self.row(i), v):
                if a and b:
                    s = s + a * b
            out.append(s)
        return out

    def nullspace(self):
        return nullspace(self)

    def rank(self):
        return rank(self)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.rows}, {self.cols})"


def rref(rows, ncols, field):
    """Reduced row echelon form of a list of rows (copied).

    Pivots are chosen as the first nonzero entry scanning columns left to
    right, rows top to bottom, so the result is deterministic.
    Returns ``(reduced_rows, pivot_columns)``; zero rows are dropped.
    """
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.one / m[r][c]
        m[r] = [e * inv if e else e for e in m[r]]
        prow = m[r]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                row_i = m[i]
                m[i] = [a - f * b if b else a for a, b in zip(row_i, prow)]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(M: Matrix) -> int:
    return len(rref(M.to_rows(), M.cols, M.field)[1])


def nullspace(M: Matrix):
    """Exact basis of {v : Mv = 0}, itself in reduced row echelon form."""
    field = M.field
    reduced, pivots = rref(M.to_rows(), M.cols, field)
    pivot_set = set(pivots)
    basis = []
    for f in range(M.cols):
        if f in pivot_set:
            continue
        v = [field.zero] * M.cols
        v[f] = field.one
        for row, pc in zip(reduced, pivots):
            if row[f]:
                v[pc] = -row[f]
        basis.append(v)
    if not basis:
        return []
    normal, _ = rref(basis, M.cols, field)
    return [tuple(v) for v in normal]
