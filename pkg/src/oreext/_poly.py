"""Dense univariate polynomials over an exact field.

A polynomial is a tuple of field scalars, constant term first, with no
trailing zeros; ``()`` is the zero polynomial.  Every function takes the
field explicitly so that zero/one come out with the right type.
"""
from __future__ import annotations


def trim(c) -> tuple:
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def degree(a) -> int:
    return len(a) - 1


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return trim(out)


def neg(a):
    return tuple(-c for c in a)


def sub(a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        if i < len(a):
            out.append(a[i] - b[i] if i < len(b) else a[i])
        else:
            out.append(-b[i])
    return trim(out)


def scale(a, s):
    if not s:
        return ()
    return trim(c * s for c in a)


def mul(a, b, field):
    if not a or not b:
        return ()
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return trim(out)


def shift(a, k):
    """Multiply by y^k."""
    if not a:
        return ()
    return (a[0] * 0,) * k + tuple(a)


def monomial(k, c, field):
    if not c:
        return ()
    return (field.zero,) * k + (field(c),)


def const(c, field):
    c = field(c)
    return (c,) if c else ()


def divmod_(a, b, field):
    """Euclidean division a = q*b + r with deg r < deg b."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    inv_lead = field.one / b[-1]
    q = [field.zero] * max(len(a) - db, 0)
    while len(r) - 1 >= db and r:
        k = len(r) - 1 - db
        c = r[-1] * inv_lead
        q[k] = c
        for i, bi in enumerate(b):
            if bi:
                r[i + k] = r[i + k] - c * bi
        r = list(trim(r))
    return trim(q), trim(r)


def rem(a, b, field):
    return divmod_(a, b, field)[1]


def exact_div(a, b, field):
    q, r = divmod_(a, b, field)
    if r:
        raise ArithmeticError("polynomial division is not exact")
    return q


def monic(a, field):
    if not a:
        return ()
    return scale(a, field.one / a[-1])


def gcd(a, b, field):
    """Monic gcd (zero if both are zero)."""
    while b:
        a, b = b, rem(a, b, field)
    return monic(a, field)


def xgcd(a, b, field):
    """Return (g, s, t) with s*a + t*b = g, g monic (or zero)."""
    r0, r1 = a, b
    s0, s1 = const(1, field), ()
    t0, t1 = (), const(1, field)
    while r1:
        q, r = divmod_(r0, r1, field)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, field))
        t0, t1 = t1, sub(t0, mul(q, t1, field))
    if not r0:
        return (), (), ()
    inv = field.one / r0[-1]
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)


def evaluate(a, point, field):
    acc = field.zero
    for c in reversed(a):
        acc = acc * point + c
    return acc


def compose(a, s, field):
    """a(s(y)) for polynomials a, s."""
    acc = ()
    for c in reversed(a):
        acc = add(mul(acc, s, field), const(c, field) if c else ())
    return acc


def scale_var(a, q):
    """a(q*y)."""
    out = []
    qk = q * 0 + 1
    for c in a:
        out.append(c * qk)
        qk = qk * q
    return trim(out)


def derivative(a):
    return trim(c * i for i, c in enumerate(a) if i > 0)


def power(a, n, field):
    result = const(1, field)
    base = a
    while n:
        if n & 1:
            result = mul(result, base, field)
        base = mul(base, base, field)
        n >>= 1
    return result


def format_poly(a, field, var="y") -> str:
    """Compact text form, highest degree first, e.g. ``3/2*y^2-y+1``."""
    if not a:
        return "0"
    parts = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if not c:
            continue
        s = field.format(c)
        negative = s.startswith("-")
        mag = s[1:] if negative else s
        if k == 0:
            term = mag
        else:
            mono = var if k == 1 else f"{var}^{k}"
            term = mono if mag == "1" else f"{mag}*{mono}"
        if not parts:
            parts.append(("-" if negative else "") + term)
        else:
            parts.append(("-" if negative else "+") + term)
    return "".join(parts)


def monic_polys(field, d):
    """All monic polynomials of degree d over a finite field."""
    elems = field.elements()
    if d == 0:
        yield (field.one,)
        return
    import itertools
    for lower in itertools.product(elems, repeat=d):
        yield tuple(lower) + (field.one,)


def is_irreducible(f, field) -> bool:
    """Exhaustive divisor search over a finite field (desk scale)."""
    d = degree(f)
    if d <= 0:
        return False
    if d == 1:
        return True
    for k in range(1, d // 2 + 1):
        for g in monic_polys(field, k):
            if not rem(f, g, field):
                return False
    return True
