"""Point counting, Weil polynomials, Frobenius eigenvalues mod ell, and the
curve classification used to pick a generator-finding branch.

All arithmetic is exact over the integers; the quartic for the level-m
Frobenius is X^4 + s X^3 + t X^2 + s q^m X + q^(2m).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import poly
from .errors import (
    BadInput,
    DoesNotSplit,
    InternalInconsistency,
    NotDivisible,
    Overflow,
    PreconditionFailed,
    TooLarge,
    ZeroEigenvalue,
)
from .field import ext_field_create, is_prime
from .jacobian import Curve

WIDE_INT_LIMIT = 1 << 120


@dataclass(frozen=True)
class WeilPolynomial:
    """X^4 + s X^3 + t X^2 + s q^m X + q^(2m), the level-m Frobenius quartic."""

    q: int
    s: int
    t: int
    m: int = 1

    @property
    def qm(self) -> int:
        return self.q ** self.m

    @property
    def two_sigma(self) -> int:
        return self.s

    @property
    def four_tau(self) -> int:
        return 8 * self.qm + self.s * self.s - 4 * self.t

    def coefficients(self):
        return (self.qm ** 2, self.s * self.qm, self.t, self.s, 1)

    def __call__(self, x: int) -> int:
        qm = self.qm
        return x ** 4 + self.s * x ** 3 + self.t * x ** 2 + self.s * qm * x + qm * qm

    def order(self) -> int:
        """The group order |J(F_{q^m})| = P_m(1)."""
        return self(1)

    def satisfies_weil_bounds(self) -> bool:
        qm = self.qm
        return abs(self.s) <= 4 * math.isqrt(qm) + 1 and abs(self.t) <= 6 * qm


def count_curve_points(C: Curve, m: int) -> int:
    """#C(F_{q^m}) by enumeration: one point at infinity plus, for each x,
    1 + chi(f(x)) affine points (chi the quadratic character, chi(0) = 0)."""
    qm = C.q ** m
    if qm > 10 ** 7:
        raise TooLarge(f"q^m = {qm} exceeds the enumeration bound")
    field = ext_field_create(C.q, m)
    f = C.f_poly(field)
    squares = _nonzero_squares(field)
    count = 1
    for x in field.elements():
        fx = poly.peval(f, x)
        if fx.is_zero():
            count += 1
        elif fx.coeffs in squares:
            count += 2
    return count


def _nonzero_squares(field):
    key = (field.p, field.degree)
    cached = _square_cache.get(key)
    if cached is None:
        cached = {(x * x).coeffs for x in field.elements() if not x.is_zero()}
        _square_cache[key] = cached
    return cached


_square_cache: dict = {}


def weil_polynomial(C: Curve) -> WeilPolynomial:
    """Level-1 Weil polynomial from the point counts over F_q and F_{q^2}."""
    n1 = count_curve_points(C, 1)
    n2 = count_curve_points(C, 2)
    s = n1 - C.q - 1
    num = n2 - C.q ** 2 - 1 + s * s
    if num % 2 != 0:
        raise InternalInconsistency("t is not an integer; point counts are inconsistent")
    t = num // 2
    P = WeilPolynomial(q=C.q, s=s, t=t, m=1)
    if not P.satisfies_weil_bounds():
        raise InternalInconsistency("Weil bounds violated; point counts are inconsistent")
    return P


def _companion(P: WeilPolynomial):
    qm = P.qm
    c0, c1, c2, c3 = qm * qm, P.s * qm, P.t, P.s
    return [
        [0, 0, 0, -c0],
        [1, 0, 0, -c1],
        [0, 1, 0, -c2],
        [0, 0, 1, -c3],
    ]


def _mat_mul(A, B):
    n = len(A)
    return [
        [sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


def _mat_pow(A, e):
    n = len(A)
    R = [[int(i == j) for j in range(n)] for i in range(n)]
    while e:
        if e & 1:
            R = _mat_mul(R, A)
        A = _mat_mul(A, A)
        e >>= 1
    return R


def _charpoly(A):
    """Faddeev-LeVerrier; exact over the integers for integer input."""
    n = len(A)
    M = [row[:] for row in A]
    coeffs = [1]
    c = -sum(M[i][i] for i in range(n))
    coeffs.append(c)
    for k in range(2, n + 1):
        for i in range(n):
            M[i][i] += coeffs[-1]
        M = _mat_mul(A, M)
        tr = sum(M[i][i] for i in range(n))
        if tr % k != 0:
            raise InternalInconsistency("Faddeev-LeVerrier trace division failed")
        coeffs.append(-tr // k)
    return coeffs  # [1, c1, ..., cn]; charpoly = sum_i c_i X^(n-i)


def char_poly_power(P: WeilPolynomial, k: int) -> WeilPolynomial:
    """The quartic whose roots are the k-th powers of P's roots, computed as
    the characteristic polynomial of the k-th power of P's companion matrix."""
    if k < 1:
        raise BadInput("power must be >= 1")
    if P.q ** (2 * P.m * k) >= WIDE_INT_LIMIT:
        raise Overflow(f"q^(2k) = {P.q ** (2 * P.m * k)} exceeds the integer budget")
    if k == 1:
        return P
    A = _mat_pow(_companion(P), k)
    one, c1, c2, c3, c4 = _charpoly(A)
    level = P.m * k
    qk = P.q ** level
    s_k, t_k = c1, c2
    if c3 != s_k * qk or c4 != qk * qk:
        raise InternalInconsistency("level-k quartic lost its palindromic shape")
    return WeilPolynomial(q=P.q, s=s_k, t=t_k, m=level)


def embedding_degree(ell: int, q: int) -> int:
    """Multiplicative order of q modulo ell."""
    if not is_prime(ell) or ell == 2:
        raise BadInput(f"{ell} is not an odd prime")
    if q % ell == 0:
        raise BadInput("ell divides q")
    k = 1
    acc = q % ell
    while acc != 1:
        acc = acc * q % ell
        k += 1
    return k


def _sqrt_mod(a: int, ell: int):
    """Square root mod an odd prime via the degree-1 field machinery."""
    from .field import field_sqrt

    f = ext_field_create(ell, 1)
    r = field_sqrt(f.from_int(a))
    return None if r is None else r.coeffs[0]


def frobenius_eigenvalues_mod_ell(P: WeilPolynomial, ell: int):
    """The multiset {1, q, alpha, q/alpha} mod ell of Frobenius eigenvalues.

    Divides the quartic mod ell by (X - 1)(X - q) and solves the remaining
    quadratic.  Raises DoesNotSplit when its discriminant is a non-residue.
    """
    q = P.qm
    if P(1) % ell != 0:
        raise NotDivisible("ell does not divide P(1)")
    if q % ell == 0 or (q - 1) % ell == 0:
        raise BadInput("ell must divide neither q nor q - 1")
    coeffs = [c % ell for c in (P.qm ** 2, P.s * P.qm, P.t, P.s, 1)]

    def synth_div(cs, root):
        # cs little-endian; divide by (X - root), remainder must vanish
        out = [0] * (len(cs) - 1)
        carry = 0
        for i in range(len(cs) - 1, 0, -1):
            carry = (cs[i] + carry * root) % ell
            out[i - 1] = carry
        rem = (cs[0] + carry * root) % ell
        if rem != 0:
            raise InternalInconsistency("expected root of the quartic mod ell")
        return out

    cubic = synth_div(coeffs, 1)
    quad = synth_div(cubic, q % ell)
    c0, c1, _ = quad
    disc = (c1 * c1 - 4 * c0) % ell
    r = _sqrt_mod(disc, ell)
    if r is None:
        raise DoesNotSplit("the quartic does not split into linear factors mod ell")
    inv2 = pow(2, -1, ell)
    alpha = (-c1 + r) * inv2 % ell
    beta = (-c1 - r) * inv2 % ell
    return (1, q % ell, alpha, beta)


def multiplicative_order(a: int, ell: int) -> int:
    if a % ell == 0:
        raise ZeroEigenvalue("zero has no multiplicative order")
    k = 1
    acc = a % ell
    while acc != 1:
        acc = acc * a % ell
        k += 1
    return k


def full_torsion_degree(eigenvalues, ell: int) -> int:
    """lcm of the eigenvalue orders mod ell: the least N with the N-th power
    Frobenius acting as the identity on the full ell-torsion."""
    n = 1
    for lam in eigenvalues:
        if lam % ell == 0:
            raise ZeroEigenvalue("eigenvalue congruent to 0 mod ell")
        n = math.lcm(n, multiplicative_order(lam, ell))
    return n


@dataclass(frozen=True)
class ClassificationResult:
    in_class: bool
    ell_divides_4tau: bool
    k: int
    ell: int
    eigenvalues: tuple | None
    full_torsion_degree: int | None
    weil: WeilPolynomial
    reason: str = ""


def classify_curve(C: Curve, ell: int, P: WeilPolynomial | None = None) -> ClassificationResult:
    """Branch decision: split the quartic mod ell; if some eigenvalue has
    alpha^k != 1 the curve is admissible with ell not dividing 4 tau_k; if all
    are k-th roots of unity, admissibility holds exactly when k <= 12."""
    if not is_prime(ell) or ell == 2:
        raise PreconditionFailed(f"{ell} is not an odd prime")
    if C.q % ell == 0:
        raise PreconditionFailed("ell divides q")
    if (C.q - 1) % ell == 0:
        raise PreconditionFailed("ell divides q - 1")
    if P is None:
        P = weil_polynomial(C)
    if P(1) % ell != 0:
        raise PreconditionFailed("ell does not divide the group order P(1)")
    k = embedding_degree(ell, C.q)
    try:
        eigs = frobenius_eigenvalues_mod_ell(P, ell)
    except DoesNotSplit:
        return ClassificationResult(
            in_class=False,
            ell_divides_4tau=False,
            k=k,
            ell=ell,
            eigenvalues=None,
            full_torsion_degree=None,
            weil=P,
            reason="non-split",
        )
    N = full_torsion_degree(eigs, ell)
    if any(pow(a, k, ell) != 1 for a in eigs):
        return ClassificationResult(
            in_class=True,
            ell_divides_4tau=False,
            k=k,
            ell=ell,
            eigenvalues=eigs,
            full_torsion_degree=N,
            weil=P,
        )
    if k > 12:
        return ClassificationResult(
            in_class=False,
            ell_divides_4tau=False,
            k=k,
            ell=ell,
            eigenvalues=eigs,
            full_torsion_degree=N,
            weil=P,
            reason="k>12",
        )
    return ClassificationResult(
        in_class=True,
        ell_divides_4tau=True,
        k=k,
        ell=ell,
        eigenvalues=eigs,
        full_torsion_degree=N,
        weil=P,
    )
