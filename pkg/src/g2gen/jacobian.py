"""Genus-2 curves y^2 = f(x) (deg f = 5, monic) and Cantor arithmetic on
reduced divisors in Mumford representation.

A reduced divisor is a pair (u, v) with u monic of degree <= 2, deg v < deg u
and u | v^2 - f; the pair (1, 0) is the group identity O.  Composition and
reduction optionally record the intermediate data needed by the pairing
module to accumulate Miller functions.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import poly
from .errors import BadDegree, EvenCharacteristic, NotADivisor, RngExhausted, Singular
from .field import ExtField, FieldElement, ext_field_create, field_sqrt, is_prime, relative_trace


@dataclass(frozen=True)
class Curve:
    """y^2 = f(x) over F_q, with f monic of degree 5 and squarefree."""

    q: int
    f: tuple  # 6 integer coefficients, little-endian, f[5] == 1

    def f_poly(self, field: ExtField):
        return poly.pnorm(tuple(field.from_int(c) for c in self.f))

    def base_field(self) -> ExtField:
        return ext_field_create(self.q, 1)


def curve_new(q: int, f_coeffs) -> Curve:
    if q == 2:
        raise EvenCharacteristic("characteristic 2 is not supported")
    if not is_prime(q) or q % 2 == 0:
        raise Singular(f"base field order {q} is not an odd prime")
    f_coeffs = tuple(int(c) % q for c in f_coeffs)
    if len(f_coeffs) != 6 or f_coeffs[5] != 1:
        raise BadDegree("f must be monic of degree exactly 5")
    base = ext_field_create(q, 1)
    f = poly.pnorm(tuple(base.from_int(c) for c in f_coeffs))
    if poly.pdeg(f) != 5:
        raise BadDegree("f must have degree exactly 5")
    g = poly.pgcd(f, poly.pderiv(f))
    if poly.pdeg(g) != 0:
        raise Singular("f is not squarefree; the affine model is singular")
    return Curve(q=q, f=f_coeffs)


class MumfordDivisor:
    __slots__ = ("field", "u", "v")

    def __init__(self, field: ExtField, u, v):
        self.field = field
        self.u = u  # monic, tuple of FieldElement, length weight + 1
        self.v = v

    @property
    def weight(self) -> int:
        return poly.pdeg(self.u)

    def is_zero(self) -> bool:
        return self.weight == 0

    def key(self):
        """Canonical hashable form (used for set membership in the oracle)."""
        return (
            tuple(c.coeffs for c in self.u),
            tuple(c.coeffs for c in self.v),
        )

    def __eq__(self, other):
        return (
            isinstance(other, MumfordDivisor)
            and self.field == other.field
            and self.u == other.u
            and self.v == other.v
        )

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Div(u={list(self.u)}, v={list(self.v)})"


def zero_divisor(field: ExtField) -> MumfordDivisor:
    return MumfordDivisor(field, (field.one(),), ())


def point_divisor(field: ExtField, x: FieldElement, y: FieldElement) -> MumfordDivisor:
    return MumfordDivisor(field, poly.pnorm((-x, field.one())), poly.pconst(y))


def is_valid_divisor(curve: Curve, D: MumfordDivisor) -> bool:
    u, v = D.u, D.v
    if not u or u[-1] != D.field.one():
        return False
    w = poly.pdeg(u)
    if w > 2:
        return False
    if w == 0:
        return not v
    if poly.pdeg(v) >= w:
        return False
    f = curve.f_poly(D.field)
    return not poly.pmod(poly.psub(poly.pmul(v, v), f), u)


def _compose(curve: Curve, D1: MumfordDivisor, D2: MumfordDivisor):
    """Cantor composition.  Returns semi-reduced (u, v) plus the monic gcd
    polynomial d whose divisor accounts for cancelled opposite points."""
    field = D1.field
    u1, v1 = D1.u, D1.v
    u2, v2 = D2.u, D2.v
    f = curve.f_poly(field)
    d1, e1, e2 = poly.pxgcd(u1, u2)
    vsum = poly.padd(v1, v2)
    d, c1, c2 = poly.pxgcd(d1, vsum)
    s1 = poly.pmul(c1, e1)
    s2 = poly.pmul(c1, e2)
    s3 = c2
    u = poly.pexactdiv(poly.pmul(u1, u2), poly.pmul(d, d))
    num = poly.padd(
        poly.padd(poly.pmul(poly.pmul(s1, u1), v2), poly.pmul(poly.pmul(s2, u2), v1)),
        poly.pmul(s3, poly.padd(poly.pmul(v1, v2), f)),
    )
    v = poly.pmod(poly.pexactdiv(num, d), u)
    return poly.pmonic(u), v, d


def cantor_add_traced(curve: Curve, D1: MumfordDivisor, D2: MumfordDivisor):
    """Reduced sum plus the function trace (d, [(v_i, u_{i+1}), ...]).

    The rational function d(x) * prod_i (y - v_i(x)) / u_{i+1}(x) has divisor
    D1bar + D2bar - Dbar, which is exactly what a Miller step accumulates.
    """
    field = D1.field
    f = curve.f_poly(field)
    u, v, d = _compose(curve, D1, D2)
    steps = []
    while poly.pdeg(u) > 2:
        u_next = poly.pmonic(poly.pexactdiv(poly.psub(f, poly.pmul(v, v)), u))
        steps.append((v, u_next))
        v = poly.pmod(poly.pneg(v), u_next)
        u = u_next
    return MumfordDivisor(field, u, v), (d, steps)


def cantor_add(curve: Curve, D1: MumfordDivisor, D2: MumfordDivisor) -> MumfordDivisor:
    return cantor_add_traced(curve, D1, D2)[0]


def neg(D: MumfordDivisor) -> MumfordDivisor:
    return MumfordDivisor(D.field, D.u, poly.pmod(poly.pneg(D.v), D.u))


def sub(curve: Curve, D1: MumfordDivisor, D2: MumfordDivisor) -> MumfordDivisor:
    return cantor_add(curve, D1, neg(D2))


def scalar_mul(curve: Curve, n: int, D: MumfordDivisor) -> MumfordDivisor:
    if n < 0:
        return scalar_mul(curve, -n, neg(D))
    result = zero_divisor(D.field)
    base = D
    while n:
        if n & 1:
            result = cantor_add(curve, result, base)
        base = cantor_add(curve, base, base)
        n >>= 1
    return result


def divisor_frobenius(D: MumfordDivisor, m: int) -> MumfordDivisor:
    return MumfordDivisor(D.field, poly.pfrobenius(D.u, m), poly.pfrobenius(D.v, m))


def is_rational_over(D: MumfordDivisor, m: int) -> bool:
    n = D.field.degree
    if n % m != 0:
        raise NotADivisor(f"{m} does not divide ambient degree {n}")
    return divisor_frobenius(D, m) == D


def field_level(D: MumfordDivisor) -> int:
    """Smallest m dividing the ambient degree with D rational over F_{q^m}."""
    n = D.field.degree
    for m in range(1, n + 1):
        if n % m == 0 and is_rational_over(D, m):
            return m
    return n


def random_affine_point(curve: Curve, field: ExtField, rng, level: int | None = None):
    """A uniform affine point of C over F_{q^level} (default: the full field),
    with coordinates embedded in `field`.  Returns None on a failed draw."""
    x = field.random_element(rng)
    if level is not None and level != field.degree:
        x = relative_trace(x, level)
    fx = poly.peval(curve.f_poly(field), x)
    sub_order = curve.q ** (level if level is not None else field.degree)
    if fx.is_zero():
        return (x, fx)
    if fx ** ((sub_order - 1) // 2) != field.one():
        return None
    y = field_sqrt(fx)
    if y is None:  # square in the subfield but not ambient: impossible
        return None
    if rng.randrange(2):
        y = -y
    return (x, y)


def random_divisor(
    curve: Curve, rng, field: ExtField, level: int | None = None
) -> MumfordDivisor:
    """Reduced sum of two uniformly sampled affine points over F_{q^level}.

    Not uniform over the Jacobian, but its support generates; downstream
    cofactor multiplication restores what the torsion samplers need.
    """
    points = []
    for _ in range(10_000):
        pt = random_affine_point(curve, field, rng, level)
        if pt is None:
            continue
        points.append(pt)
        if len(points) == 2:
            D1 = point_divisor(field, *points[0])
            D2 = point_divisor(field, *points[1])
            return cantor_add(curve, D1, D2)
    raise RngExhausted("could not sample two curve points")
