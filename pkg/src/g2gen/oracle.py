"""Brute-force ground truth for tiny instances.

Enumerates every reduced divisor of J(F_{q^m}) by listing curve points over
the quadratic extension (so that weight-2 divisors with conjugate support
appear), checks the count against the zeta prediction, and provides torsion
and span checks.  The enumeration reuses the production Cantor arithmetic;
independence comes from exhaustion, not a second group law.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import poly
from .errors import InternalInconsistency, TooLarge
from .field import ExtField, field_sqrt, frobenius_power
from .jacobian import Curve, MumfordDivisor, cantor_add, neg, scalar_mul, zero_divisor
from .zeta import char_poly_power, weil_polynomial


@dataclass
class EnumeratedJacobian:
    curve: Curve
    level: int
    field: ExtField  # ambient; must contain F_{q^(2m)}
    divisors: list

    @property
    def order(self) -> int:
        return len(self.divisors)


def _affine_points(curve: Curve, field: ExtField):
    """All affine points of C with coordinates in `field`."""
    f = curve.f_poly(field)
    pts = []
    for x in field.elements():
        fx = poly.peval(f, x)
        if fx.is_zero():
            pts.append((x, fx))
            continue
        y = field_sqrt(fx)
        if y is not None:
            pts.append((x, y))
            pts.append((x, -y))
    return pts


_enum_cache: dict = {}


def enumerate_jacobian(curve: Curve, m: int, field: ExtField) -> EnumeratedJacobian:
    """All reduced divisors over F_{q^m}, represented inside `field` (whose
    degree must be a multiple of 2m so conjugate-support divisors exist).
    Results are cached; callers must not mutate the divisor list."""
    cache_key = (curve, m, field.p, field.degree)
    cached = _enum_cache.get(cache_key)
    if cached is not None:
        return cached
    qm = curve.q ** m
    if qm > 10 ** 3:
        raise TooLarge(f"q^m = {qm} exceeds the oracle bound")
    if field.degree % (2 * m) != 0:
        raise TooLarge("ambient field must contain the quadratic extension of the level")
    P = weil_polynomial(curve)
    order = char_poly_power(P, m)(1) if m > 1 else P(1)
    if order > 10 ** 5:
        raise TooLarge(f"group order {order} exceeds the oracle bound")

    one = field.one()
    divisors = {zero_divisor(field).key(): zero_divisor(field)}

    def fixed(z):
        return frobenius_power(z, m) == z

    # only points of C(F_{q^(2m)}) are relevant at level m
    pts = [
        (x, y)
        for (x, y) in _affine_points(curve, field)
        if frobenius_power(x, 2 * m) == x and frobenius_power(y, 2 * m) == y
    ]
    rational = [(x, y) for (x, y) in pts if fixed(x) and fixed(y)]

    # weight 1
    for x, y in rational:
        D = MumfordDivisor(field, poly.pnorm((-x, one)), poly.pconst(y))
        divisors[D.key()] = D

    f = curve.f_poly(field)
    fprime = poly.pderiv(f)

    def add_weight2(u, v):
        D = MumfordDivisor(field, u, v)
        divisors[D.key()] = D

    # weight 2, both points rational over F_{q^m}
    for i in range(len(rational)):
        x1, y1 = rational[i]
        for j in range(i, len(rational)):
            x2, y2 = rational[j]
            if x1 == x2:
                if y1 != y2:
                    continue  # opposite pair sums to O (or same Weierstrass pt)
                if y1.is_zero():
                    continue  # 2 * Weierstrass point is equivalent to O
                if i != j:
                    continue
                # tangent case: v = y + f'(x)/(2y) (x - x1)
                slope = poly.peval(fprime, x1) / (y1 + y1)
                u = poly.pmul(poly.pnorm((-x1, one)), poly.pnorm((-x1, one)))
                v = poly.pnorm((y1 - slope * x1, slope))
                add_weight2(u, v)
            else:
                if j == i:
                    continue
                u = poly.pmul(poly.pnorm((-x1, one)), poly.pnorm((-x2, one)))
                dx = x1 - x2
                slope = (y1 - y2) / dx
                v = poly.pnorm((y1 - slope * x1, slope))
                add_weight2(u, v)

    # weight 2, conjugate pair over F_{q^(2m)} \ F_{q^m}
    seen_x = set()
    for x, y in pts:
        if fixed(x):
            continue
        xc = frobenius_power(x, m)
        if (x.coeffs, y.coeffs) in seen_x:
            continue
        yc = frobenius_power(y, m)
        seen_x.add((xc.coeffs, yc.coeffs))
        u = poly.pmul(poly.pnorm((-x, one)), poly.pnorm((-xc, one)))
        dx = x - xc
        slope = (y - yc) / dx
        v = poly.pnorm((y - slope * x, slope))
        add_weight2(u, v)

    result = EnumeratedJacobian(curve=curve, level=m, field=field, divisors=list(divisors.values()))
    if result.order != order:
        raise InternalInconsistency(
            f"enumeration found {result.order} divisors but the zeta count is {order}"
        )
    _enum_cache[cache_key] = result
    return result


_torsion_cache: dict = {}


def brute_torsion(curve: Curve, ell: int, m: int, field: ExtField):
    """All divisors of J(F_{q^m}) killed by ell (cached; do not mutate)."""
    cache_key = (curve, ell, m, field.p, field.degree)
    cached = _torsion_cache.get(cache_key)
    if cached is None:
        J = enumerate_jacobian(curve, m, field)
        cached = [D for D in J.divisors if scalar_mul(curve, ell, D).is_zero()]
        _torsion_cache[cache_key] = cached
    return cached


def oracle_span(curve: Curve, ell: int, points, torsion_list) -> bool:
    """True iff the ell^4 combinations of the four points reproduce the
    enumerated torsion set exactly."""
    target = {D.key() for D in torsion_list}
    field = points[0].field
    span = set()
    acc1 = zero_divisor(field)
    for _ in range(ell):
        acc2 = acc1
        for _ in range(ell):
            acc3 = acc2
            for _ in range(ell):
                acc4 = acc3
                for _ in range(ell):
                    span.add(acc4.key())
                    acc4 = cantor_add(curve, acc4, points[3])
                acc3 = cantor_add(curve, acc3, points[2])
            acc2 = cantor_add(curve, acc2, points[1])
        acc1 = cantor_add(curve, acc1, points[0])
    return span == target
