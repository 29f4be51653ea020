"""Weil pairing axioms and discrete logs in mu_ell."""

import random

import pytest

from g2gen.errors import NotInMu, NotTorsion
from g2gen.jacobian import cantor_add, curve_new, divisor_frobenius, scalar_mul
from g2gen.pairing import dlog_mu, make_context, weil_pairing
from g2gen.torsion import sample_torsion

CURVE = curve_new(3, [1, 0, 0, 0, 0, 1])
CTX = make_context(CURVE, 5)
RNG = random.Random(20)
POINTS = [sample_torsion(CTX, 4, RNG).divisor for _ in range(8)]
ONE = CTX.field.one()


def test_values_live_in_mu_ell():
    for x, y in zip(POINTS[:4], POINTS[4:]):
        e = weil_pairing(CTX, x, y, RNG)
        assert e**5 == ONE


def test_alternating():
    for x in POINTS:
        assert weil_pairing(CTX, x, x, RNG) == ONE


def test_antisymmetric():
    for x, y in zip(POINTS[:4], POINTS[4:]):
        assert weil_pairing(CTX, x, y, RNG) * weil_pairing(CTX, y, x, RNG) == ONE


def test_bilinear():
    x, y, z = POINTS[0], POINTS[1], POINTS[2]
    exz = weil_pairing(CTX, x, z, RNG)
    eyz = weil_pairing(CTX, y, z, RNG)
    s = cantor_add(CURVE, x, y)
    assert weil_pairing(CTX, s, z, RNG) == exz * eyz
    for a in range(5):
        assert weil_pairing(CTX, scalar_mul(CURVE, a, x), z, RNG) == exz**a


def test_galois_invariant():
    q = CURVE.q
    for x, y in zip(POINTS[:4], POINTS[4:]):
        e = weil_pairing(CTX, x, y, RNG)
        fe = weil_pairing(
            CTX, divisor_frobenius(x, 1), divisor_frobenius(y, 1), RNG
        )
        assert fe == e**q


def test_representative_independence():
    x, y = POINTS[0], POINTS[1]
    base = weil_pairing(CTX, x, y, RNG)
    for seed in range(6):
        assert weil_pairing(CTX, x, y, random.Random(seed)) == base


def test_rejects_non_torsion():
    rng = random.Random(1)
    from g2gen.jacobian import random_divisor

    while True:
        D = random_divisor(CURVE, rng, CTX.field)
        if not scalar_mul(CURVE, 5, D).is_zero():
            break
    with pytest.raises(NotTorsion):
        weil_pairing(CTX, D, POINTS[0], rng)


def test_dlog_roundtrip():
    for a in range(5):
        assert dlog_mu(CTX, CTX.zeta**a) == a
    with pytest.raises(NotInMu):
        dlog_mu(CTX, CTX.field.gen())


def test_zeta_is_deterministic():
    other = make_context(CURVE, 5)
    assert other.zeta == CTX.zeta
