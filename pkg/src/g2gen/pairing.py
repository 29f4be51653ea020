"""Weil pairing on the ell-torsion via a genus-2 Miller loop.

Miller functions are accumulated along Cantor double-and-add: each step
contributes d(x) * prod_i (y - v_i(x)) / u_{i+1}(x), whose divisor matches the
step's class-group identity.  Functions are evaluated at degree-zero divisors
given in Mumford form; the finite part is evaluated with resultants (never
extracting roots), and the contribution of the point at infinity is the
leading coefficient of the function's expansion there (all step factors are
monic except y - v when deg v = 3, whose leading coefficient is -lc(v)).

The pairing itself is the classical ratio e(x, y) = f_x(G_y) / f_y(G_x) on
disjoint-support degree-zero representatives; the second argument is shifted
by a random divisor T, with the two translated Miller functions dividing out
to a function with divisor exactly ell * G_y.
"""

from __future__ import annotations

import math

from . import poly
from .errors import NotInMu, NotTorsion, RetriesExhausted, SharedSupport
from .field import ExtField, ext_field_create
from .jacobian import (
    Curve,
    MumfordDivisor,
    cantor_add,
    cantor_add_traced,
    random_divisor,
    scalar_mul,
)
from .zeta import ClassificationResult, classify_curve


class PairingContext:
    """Ambient field, the ell-torsion setting, and a fixed primitive ell-th
    root of unity used to express pairing values as exponents."""

    def __init__(self, curve: Curve, ell: int, classification: ClassificationResult,
                 ambient_degree: int | None = None):
        if classification.full_torsion_degree is None:
            raise NotTorsion("classification carries no torsion field degree")
        N = classification.full_torsion_degree
        degree = ambient_degree if ambient_degree is not None else N
        if degree % N != 0:
            raise NotTorsion(f"ambient degree {degree} does not contain level {N}")
        self.curve = curve
        self.ell = ell
        self.classification = classification
        self.k = classification.k
        self.torsion_degree = N
        self.field: ExtField = ext_field_create(curve.q, degree)
        if (self.field.order - 1) % ell != 0:
            raise NotTorsion("mu_ell does not embed in the ambient field")
        self.zeta = self._find_zeta()
        self._dlog_table = None

    def _find_zeta(self):
        """Deterministically first primitive ell-th root of unity."""
        e = (self.field.order - 1) // self.ell
        one = self.field.one()
        for code in range(2, self.field.order):
            z = self.field.from_code(code) ** e
            if z != one:
                return z
        raise NotTorsion("no primitive ell-th root of unity found")


# ---------------------------------------------------------------------------
# Function evaluation at Mumford-form divisors.
# ---------------------------------------------------------------------------

def _norm_resultant(h, u):
    """prod h(x_i) over the roots x_i of the monic u with deg u <= 2."""
    field = u[-1].field
    hm = poly.pmod(h, u)
    w = poly.pdeg(u)
    if w == 0:
        return field.one()
    if w == 1:
        return poly.peval(h, -u[0])
    zero = field.zero()
    c0 = hm[0] if len(hm) > 0 else zero
    c1 = hm[1] if len(hm) > 1 else zero
    return c1 * c1 * u[0] - c1 * c0 * u[1] + c0 * c0


def _trace_contribution(trace, parts, inf_mult, field):
    """Value of one Cantor step's function at the degree-zero divisor given
    by `parts` (finite Mumford parts with multiplicities) and `inf_mult`
    copies of infinity.  Returns a (numerator, denominator) pair."""
    d, steps = trace
    one = field.one()
    num, den = one, one
    for E, mult in parts:
        if E.weight == 0:
            continue
        n_loc, d_loc = one, one
        if poly.pdeg(d) >= 1:
            n_loc = n_loc * _norm_resultant(d, E.u)
        for v_i, u_next in steps:
            n_loc = n_loc * _norm_resultant(poly.psub(E.v, v_i), E.u)
            d_loc = d_loc * _norm_resultant(u_next, E.u)
        if n_loc.is_zero() or d_loc.is_zero():
            raise SharedSupport("Miller-step function vanishes on the evaluation divisor")
        if mult >= 0:
            num = num * n_loc ** mult
            den = den * d_loc ** mult
        else:
            num = num * d_loc ** (-mult)
            den = den * n_loc ** (-mult)
    if inf_mult:
        lc = one
        for v_i, _ in steps:
            if poly.pdeg(v_i) == 3:
                lc = lc * (-v_i[3])
        if inf_mult > 0:
            num = num * lc ** inf_mult
        else:
            den = den * lc ** (-inf_mult)
    return num, den


def _miller(curve: Curve, n: int, D: MumfordDivisor, parts):
    """f_{n,D} evaluated at the degree-zero divisor sum(mult * (eff - w*inf))
    over `parts`.  Returns (value, final reduced divisor of the ladder)."""
    field = D.field
    one = field.one()
    inf_mult = -sum(mult * E.weight for E, mult in parts)
    num, den = one, one
    T = D
    for bit in bin(n)[3:]:
        T, trace = cantor_add_traced(curve, T, T)
        cn, cd = _trace_contribution(trace, parts, inf_mult, field)
        num = num * num * cn
        den = den * den * cd
        if bit == "1":
            T, trace = cantor_add_traced(curve, T, D)
            cn, cd = _trace_contribution(trace, parts, inf_mult, field)
            num = num * cn
            den = den * cd
    if num.is_zero() or den.is_zero():
        raise SharedSupport("Miller accumulator vanished")
    return num / den, T


def miller_eval(ctx: PairingContext, n: int, D: MumfordDivisor, E: MumfordDivisor):
    """f_{n,D} evaluated at the degree-zero representative of E."""
    if n == ctx.ell and not scalar_mul(ctx.curve, ctx.ell, D).is_zero():
        raise NotTorsion("D is not killed by ell")
    if n == 1:
        return ctx.field.one()
    value, _ = _miller(ctx.curve, n, D, [(E, 1)])
    return value


def weil_pairing(ctx: PairingContext, D1: MumfordDivisor, D2: MumfordDivisor, rng):
    """e(D1, D2) in mu_ell; bilinear, anti-symmetric, Galois-invariant."""
    curve, ell, field = ctx.curve, ctx.ell, ctx.field
    one = field.one()
    if D1.is_zero() or D2.is_zero():
        return one
    if not scalar_mul(curve, ell, D1).is_zero() or not scalar_mul(curve, ell, D2).is_zero():
        raise NotTorsion("pairing arguments must be killed by ell")
    for _ in range(32):
        T = random_divisor(curve, rng, field)
        a = cantor_add(curve, D2, T)
        b = T
        if a.weight != 2 or b.weight != 2 or a == b:
            continue
        try:
            fx, _ = _miller(curve, ell, D1, [(a, 1), (b, -1)])
            fa, ra = _miller(curve, ell, a, [(D1, 1)])
            fb, rb = _miller(curve, ell, b, [(D1, 1)])
        except SharedSupport:
            continue
        if ra != rb:
            # the two translated ladders must land on the same reduction
            continue
        value = fx * fb / fa
        if value ** ell != one:
            raise NotTorsion("pairing value escaped mu_ell")
        return value
    raise RetriesExhausted("no translation with disjoint support found")


def dlog_mu(ctx: PairingContext, z):
    """The exponent a in [0, ell) with zeta^a = z, by baby-step giant-step."""
    if z ** ctx.ell != ctx.field.one():
        raise NotInMu("element is not an ell-th root of unity")
    ell = ctx.ell
    m = math.isqrt(ell - 1) + 1
    if ctx._dlog_table is None:
        table = {}
        acc = ctx.field.one()
        for j in range(m):
            table[acc.coeffs] = j
            acc = acc * ctx.zeta
        ctx._dlog_table = (m, table, acc.inverse())  # zeta^(-m)
    m, table, giant = ctx._dlog_table
    cur = z
    for i in range(m + 1):
        j = table.get(cur.coeffs)
        if j is not None:
            return (i * m + j) % ell
        cur = cur * giant
    raise NotInMu("discrete log not found")


def make_context(curve: Curve, ell: int, ambient_degree: int | None = None) -> PairingContext:
    cls = classify_curve(curve, ell)
    return PairingContext(curve, ell, cls, ambient_degree)
