"""Polynomial arithmetic over an ExtField.

Polynomials are tuples of FieldElement coefficients, little-endian, with no
trailing zeros; the empty tuple is the zero polynomial.
"""

from __future__ import annotations

from .errors import DivisionByZero


def pnorm(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return tuple(coeffs)


def pzero():
    return ()


def pconst(c):
    return () if c.is_zero() else (c,)


def pdeg(a):
    return len(a) - 1  # -1 for the zero polynomial


def padd(a, b):
    field = (a or b)[0].field if (a or b) else None
    if field is None:
        return ()
    n = max(len(a), len(b))
    zero = field.zero()
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else zero
        y = b[i] if i < len(b) else zero
        out.append(x + y)
    return pnorm(out)


def pneg(a):
    return tuple(-c for c in a)


def psub(a, b):
    return padd(a, pneg(b))


def pmul(a, b):
    if not a or not b:
        return ()
    zero = a[0].field.zero()
    out = [zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai.is_zero():
            continue
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return pnorm(out)


def pscale(a, c):
    if c.is_zero():
        return ()
    return pnorm(tuple(ai * c for ai in a))


def pdivmod(a, b):
    if not b:
        raise DivisionByZero("polynomial division by zero")
    if not a:
        return (), ()
    field = b[-1].field
    inv_lead = b[-1].inverse()
    rem = list(a)
    if len(a) < len(b):
        return (), pnorm(rem)
    quot = [field.zero()] * (len(a) - len(b) + 1)
    for k in range(len(a) - len(b), -1, -1):
        c = rem[k + len(b) - 1] * inv_lead
        if not c.is_zero():
            quot[k] = c
            for i, bi in enumerate(b):
                rem[k + i] = rem[k + i] - c * bi
    return pnorm(quot), pnorm(rem)


def pmod(a, b):
    return pdivmod(a, b)[1]


def pexactdiv(a, b):
    q, r = pdivmod(a, b)
    if r:
        raise ArithmeticError("division is not exact")
    return q


def pmonic(a):
    if not a:
        return a
    lead = a[-1]
    if lead == lead.field.one():
        return a
    return pscale(a, lead.inverse())


def pgcd(a, b):
    while b:
        a, b = b, pmod(a, b)
    return pmonic(a)


def pxgcd(a, b):
    """Return (g, s, t) with g = s*a + t*b, g monic (or zero)."""
    if not a and not b:
        return (), (), ()
    field = (a or b)[0].field
    one = (field.one(),)
    r0, r1 = a, b
    s0, s1 = one, ()
    t0, t1 = (), one
    while r1:
        q, r = pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul(q, s1))
        t0, t1 = t1, psub(t0, pmul(q, t1))
    if r0:
        lead = r0[-1]
        if lead != field.one():
            inv = lead.inverse()
            r0 = pscale(r0, inv)
            s0 = pscale(s0, inv)
            t0 = pscale(t0, inv)
    return r0, s0, t0


def peval(a, x):
    acc = x.field.zero()
    for c in reversed(a):
        acc = acc * x + c
    return acc


def pderiv(a):
    if len(a) <= 1:
        return ()
    out = []
    for i in range(1, len(a)):
        out.append(a[i].scale(i))
    return pnorm(out)


def pfrobenius(a, m):
    """Apply x -> x^(p^m) to every coefficient."""
    if not a:
        return a
    e = a[0].field.p ** m
    return tuple(c ** e for c in a)
