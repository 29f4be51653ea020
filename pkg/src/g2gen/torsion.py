"""Sampling ell-torsion points and assembling verified generator sets.

The two randomized finders follow the branch split of the classification:
when ell does not divide 4*tau_k the torsion spreads over three field levels
and eigenvectors are carved out with Frobenius-difference projections; when
ell divides 4*tau_k everything is rational over F_{q^k} and the operator
(q - phi)(1 - phi) projects onto the complementary plane.  Either way the
emitted basis is post-processed into an eigenbasis ordered by eigenvalue
(1, q, alpha, q/alpha), so the Frobenius matrix of every emitted set is
diagonal and the pairing-exponent matrix has the two-block shape.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    GeneratorSearchFailure,
    InternalInconsistency,
    NonCyclicRational,
    NotABasis,
    PreconditionFailed,
    ReconstructionMismatch,
    RetriesExhausted,
)
from .jacobian import (
    MumfordDivisor,
    cantor_add,
    divisor_frobenius,
    field_level,
    is_rational_over,
    neg,
    random_divisor,
    scalar_mul,
    sub,
    zero_divisor,
)
from .pairing import PairingContext, dlog_mu, weil_pairing
from .zeta import char_poly_power


@dataclass
class TorsionPoint:
    divisor: MumfordDivisor
    level: int  # smallest m | N with the divisor rational over F_{q^m}

    def is_zero(self):
        return self.divisor.is_zero()


@dataclass
class GeneratorSet:
    points: tuple  # four TorsionPoints ordered by eigenvalue (1, q, a, q/a)
    frobenius_matrix: tuple  # 4x4 residues mod ell, row-major
    pairing_exponents: tuple  # 4x4 antisymmetric residues mod ell
    seed: int | None = None


def _group_order(ctx: PairingContext, m: int) -> int:
    P = ctx.classification.weil
    return P(1) if m == 1 else char_poly_power(P, m)(1)


def sample_torsion(ctx: PairingContext, m: int, rng) -> TorsionPoint:
    """A point of order exactly ell, rational over F_{q^m}: a random level-m
    divisor pushed into the ell-Sylow subgroup and then down to order ell."""
    curve, ell = ctx.curve, ctx.ell
    order = _group_order(ctx, m)
    if order % ell != 0:
        raise PreconditionFailed(f"ell does not divide the level-{m} group order")
    cofactor = order
    while cofactor % ell == 0:
        cofactor //= ell
    for _ in range(1000):
        D = random_divisor(curve, rng, ctx.field, level=m)
        z = scalar_mul(curve, cofactor, D)
        if z.is_zero():
            continue
        if not scalar_mul(curve, ell, z).is_zero():
            # the Sylow subgroup is not elementary here; multiplying down
            # would bias the sample into a fixed subgroup, so redraw instead
            continue
        return TorsionPoint(divisor=z, level=field_level(z))
    raise RetriesExhausted(f"could not sample an ell-torsion point at level {m}")


def sample_torsion_strict(ctx: PairingContext, m: int, exclude_level: int, rng) -> TorsionPoint:
    """Level-m torsion point that is NOT rational over F_{q^exclude_level}."""
    for _ in range(1000):
        x = sample_torsion(ctx, m, rng)
        if not is_rational_over(x.divisor, exclude_level):
            return x
    raise RetriesExhausted("rejection sampling outside the smaller level failed")


# ---------------------------------------------------------------------------
# Eigen-projection helpers (all arithmetic on divisors).
# ---------------------------------------------------------------------------

def _apply_phi_minus(ctx: PairingContext, D: MumfordDivisor, mu: int) -> MumfordDivisor:
    """(phi - mu) D."""
    return sub(ctx.curve, divisor_frobenius(D, 1), scalar_mul(ctx.curve, mu % ctx.ell, D))


def eigen_project(ctx: PairingContext, D: MumfordDivisor, target: int) -> MumfordDivisor:
    """Project onto the target eigenspace by multiplying out (phi - mu) over
    the other distinct eigenvalues (valid because phi is diagonalizable)."""
    out = D
    for mu in sorted(set(ctx.classification.eigenvalues)):
        if mu % ctx.ell == target % ctx.ell:
            continue
        out = _apply_phi_minus(ctx, out, mu)
    return out


def _is_eigenvector(ctx: PairingContext, D: MumfordDivisor, lam: int) -> bool:
    return divisor_frobenius(D, 1) == scalar_mul(ctx.curve, lam % ctx.ell, D)


# ---------------------------------------------------------------------------
# The two generator-finding branches and their dispatcher.
# ---------------------------------------------------------------------------

def _distinct_pair(ctx: PairingContext):
    """(alpha, q/alpha) from the classification, in a fixed order."""
    one_, q_, a, b = ctx.classification.eigenvalues
    return a, b


def find_generators_extended_torsion(ctx: PairingContext, n: int, rng):
    """Branch ell not dividing 4*tau_k: the rational subgroup gives x1, the
    level-k subgroup gives a q-eigenvector, and the complement plane is
    reached through x - phi^k(x) projections checked with the pairing."""
    cls = ctx.classification
    if not cls.in_class or cls.ell_divides_4tau:
        raise PreconditionFailed("wrong branch for this classification")
    curve, ell, k = ctx.curve, ctx.ell, ctx.k
    N = cls.full_torsion_degree
    one = ctx.field.one()
    alpha, beta = _distinct_pair(ctx)

    x1 = sample_torsion(ctx, 1, rng)

    x2p = sample_torsion_strict(ctx, k, 1, rng)
    x2 = sub(curve, x2p.divisor, divisor_frobenius(x2p.divisor, 1))
    if x2.is_zero() or not _is_eigenvector(ctx, x2, curve.q):
        raise InternalInconsistency("projection did not yield a q-eigenvector")

    x3p = sample_torsion_strict(ctx, N, k, rng)
    x3 = sub(curve, x3p.divisor, divisor_frobenius(x3p.divisor, k))
    if x3.is_zero():
        raise InternalInconsistency("x - phi^k(x) vanished on a non-level-k point")

    phix3 = divisor_frobenius(x3, 1)
    if weil_pairing(ctx, x3, phix3, rng) != one:
        # {x3, phi(x3)} spans the complement; split it into eigenvectors
        w_a = sub(curve, phix3, scalar_mul(curve, beta % ell, x3))
        w_b = sub(curve, phix3, scalar_mul(curve, alpha % ell, x3))
        return _assemble(ctx, x1.divisor, x2, w_a, w_b, rng)

    # x3 is an eigenvector; find which one, then hunt for the complement
    if _is_eigenvector(ctx, x3, alpha):
        lam, other = alpha, beta
    elif _is_eigenvector(ctx, x3, beta):
        lam, other = beta, alpha
    else:
        raise InternalInconsistency("self-paired x3 is not an eigenvector")
    for _ in range(n):
        x4p = sample_torsion_strict(ctx, N, k, rng)
        if weil_pairing(ctx, x3, x4p.divisor, rng) == one:
            continue
        w = eigen_project(ctx, x4p.divisor, other)
        if w.is_zero():
            raise InternalInconsistency("pairing-nontrivial point projected to zero")
        w_a, w_b = (x3, w) if lam == alpha else (w, x3)
        return _assemble(ctx, x1.divisor, x2, w_a, w_b, rng)
    raise GeneratorSearchFailure(f"no complement direction found in {n} samples")


def find_generators_rational_torsion(ctx: PairingContext, n: int, rng):
    """Branch ell dividing 4*tau_k: all of the ell-torsion is rational over
    F_{q^k}; the complement plane is reached with (q - phi)(1 - phi)."""
    cls = ctx.classification
    if not cls.in_class or not cls.ell_divides_4tau:
        raise PreconditionFailed("wrong branch for this classification")
    curve, ell, k = ctx.curve, ctx.ell, ctx.k
    q = curve.q
    one = ctx.field.one()
    alpha, beta = _distinct_pair(ctx)
    if alpha % ell == 1 or beta % ell == 1:
        raise NonCyclicRational("eigenvalue 1 has multiplicity two; J(F_q)[ell] is bicyclic")

    x1 = sample_torsion(ctx, 1, rng)

    def w_project(D):
        return sub(
            curve,
            scalar_mul(curve, q % ell, sub(curve, D, divisor_frobenius(D, 1))),
            divisor_frobenius(sub(curve, D, divisor_frobenius(D, 1)), 1),
        )

    x3 = x4 = None
    zero_streak = 0
    found = False
    for _ in range(n):
        y3 = sample_torsion(ctx, k, rng)
        y4 = sample_torsion(ctx, k, rng)
        c3 = w_project(y3.divisor)
        c4 = w_project(y4.divisor)
        if c3.is_zero() or c4.is_zero():
            zero_streak += 1
            if zero_streak >= 20:
                raise NonCyclicRational("the complement projection keeps annihilating samples")
            continue
        zero_streak = 0
        if weil_pairing(ctx, c3, c4, rng) != one:
            x3, x4 = c3, c4
            found = True
            break
    if not found:
        raise GeneratorSearchFailure(f"no spanning pair of the complement in {n} rounds")

    x2 = None
    for _ in range(n):
        cand = sample_torsion(ctx, k, rng)
        if weil_pairing(ctx, x1.divisor, cand.divisor, rng) != one:
            x2 = cand.divisor
            break
    if x2 is None:
        raise GeneratorSearchFailure(f"no partner for x1 in {n} rounds")

    # eigen-split the raw generating set
    x2e = eigen_project(ctx, x2, q)
    if x2e.is_zero():
        raise InternalInconsistency("q-component of x2 vanished despite the pairing check")
    if alpha % ell == beta % ell:
        # the complement plane is a single eigenspace; x3, x4 already qualify
        w_a, w_b = x3, x4
    else:
        w_a = eigen_project(ctx, x3, alpha)
        if w_a.is_zero():
            w_a = eigen_project(ctx, x4, alpha)
        w_b = eigen_project(ctx, x4, beta)
        if w_b.is_zero():
            w_b = eigen_project(ctx, x3, beta)
        if w_a.is_zero() or w_b.is_zero():
            raise InternalInconsistency("spanning pair lost an eigencomponent")
    return _assemble(ctx, x1.divisor, x2e, w_a, w_b, rng)


def find_generators(ctx: PairingContext, n: int, rng):
    """Dispatch on the classification's branch flag (the 4*tau_k criterion)."""
    if not ctx.classification.in_class:
        raise PreconditionFailed("curve is not admissible for generator finding")
    if ctx.classification.ell_divides_4tau:
        return find_generators_rational_torsion(ctx, n, rng)
    return find_generators_extended_torsion(ctx, n, rng)


# ---------------------------------------------------------------------------
# Verification artifacts.
# ---------------------------------------------------------------------------

def pairing_matrix(ctx: PairingContext, points, rng):
    """a_ij = dlog of e(x_i, x_j); antisymmetric with zero diagonal."""
    ell = ctx.ell
    M = [[0] * 4 for _ in range(4)]
    for i in range(4):
        for j in range(i + 1, 4):
            a = dlog_mu(ctx, weil_pairing(ctx, points[i], points[j], rng))
            M[i][j] = a
            M[j][i] = (-a) % ell
    return tuple(tuple(row) for row in M)


def pfaffian(E, ell: int) -> int:
    return (E[0][1] * E[2][3] - E[0][2] * E[1][3] + E[0][3] * E[1][2]) % ell


def verify_basis(ctx: PairingContext, points, rng):
    """(is_basis, pairing-exponent matrix): the four points generate the full
    ell-torsion iff the symplectic form they induce is non-degenerate."""
    E = pairing_matrix(ctx, points, rng)
    return pfaffian(E, ctx.ell) != 0, E


def coordinates_in_basis(ctx: PairingContext, y: MumfordDivisor, basis, rng, E=None):
    """Coordinates of y in the given verified basis, extracted by pairing y
    against basis points and dividing out the two block exponents of E."""
    if E is None:
        ok, E = verify_basis(ctx, basis, rng)
        if not ok:
            raise NotABasis("cannot take coordinates in a degenerate set")
    if E[0][2] or E[0][3] or E[1][2] or E[1][3]:
        raise NotABasis("exponent matrix is not in two-block form")
    ell = ctx.ell
    a, b = E[0][1], E[2][3]
    if a == 0 or b == 0:
        raise NotABasis("exponent matrix lacks the two-block shape")
    inv_a = pow(a, -1, ell)
    inv_b = pow(b, -1, ell)
    x1, x2, x3, x4 = basis
    c1 = dlog_mu(ctx, weil_pairing(ctx, y, x2, rng)) * inv_a % ell
    c2 = dlog_mu(ctx, weil_pairing(ctx, x1, y, rng)) * inv_a % ell
    c3 = dlog_mu(ctx, weil_pairing(ctx, y, x4, rng)) * inv_b % ell
    c4 = dlog_mu(ctx, weil_pairing(ctx, x3, y, rng)) * inv_b % ell
    coords = (c1, c2, c3, c4)
    recon = zero_divisor(ctx.field)
    for c, x in zip(coords, basis):
        recon = cantor_add(ctx.curve, recon, scalar_mul(ctx.curve, c, x))
    if recon != y:
        raise ReconstructionMismatch("pairing coordinates do not reconstruct the point")
    return coords


def frobenius_matrix(ctx: PairingContext, basis, rng, E=None):
    """Column j holds the coordinates of phi(x_j) in the basis."""
    if E is None:
        ok, E = verify_basis(ctx, basis, rng)
        if not ok:
            raise NotABasis("frobenius matrix needs a genuine basis")
    cols = [
        coordinates_in_basis(ctx, divisor_frobenius(x, 1), basis, rng, E=E)
        for x in basis
    ]
    return tuple(tuple(cols[j][i] for j in range(4)) for i in range(4))


def _assemble(ctx: PairingContext, d1, d2, d3, d4, rng, seed=None) -> GeneratorSet:
    """Build the GeneratorSet and enforce every hard postcondition."""
    ell, q = ctx.ell, ctx.curve.q
    divs = (d1, d2, d3, d4)
    for d in divs:
        if d.is_zero() or not scalar_mul(ctx.curve, ell, d).is_zero():
            raise InternalInconsistency("candidate basis point is not of order ell")
    ok, E = verify_basis(ctx, divs, rng)
    if not ok:
        raise GeneratorSearchFailure("assembled set is degenerate")
    M = frobenius_matrix(ctx, divs, rng, E=E)
    for i in range(4):
        for j in range(4):
            if i != j and M[i][j] != 0:
                raise InternalInconsistency("Frobenius matrix is not diagonal")
    diag = sorted(M[i][i] for i in range(4))
    if diag != sorted(a % ell for a in ctx.classification.eigenvalues):
        raise InternalInconsistency("diagonal does not match the eigenvalue multiset")
    for i in range(4):
        for j in range(4):
            lhs = q * E[i][j] % ell
            rhs = M[i][i] * E[i][j] * M[j][j] % ell
            if lhs != rhs:
                raise InternalInconsistency("q*E = M^T E M fails")
    points = tuple(TorsionPoint(divisor=d, level=field_level(d)) for d in divs)
    return GeneratorSet(points=points, frobenius_matrix=M, pairing_exponents=E, seed=seed)
