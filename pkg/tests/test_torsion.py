"""Torsion sampling, generator finding, and basis verification."""

import random

import pytest

from g2gen.errors import NotABasis, PreconditionFailed
from g2gen.jacobian import curve_new, divisor_frobenius, scalar_mul, zero_divisor
from g2gen.pairing import make_context
from g2gen.torsion import (
    coordinates_in_basis,
    eigen_project,
    find_generators,
    find_generators_extended_torsion,
    find_generators_rational_torsion,
    frobenius_matrix,
    pairing_matrix,
    pfaffian,
    sample_torsion,
    sample_torsion_strict,
    verify_basis,
)

TINY = curve_new(3, [1, 0, 0, 0, 0, 1])
CTX = make_context(TINY, 5)


def test_sample_torsion_orders_and_levels():
    rng = random.Random(0)
    p1 = sample_torsion(CTX, 1, rng)
    assert p1.level == 1
    assert scalar_mul(TINY, 5, p1.divisor).is_zero()
    p4 = sample_torsion(CTX, 4, rng)
    assert scalar_mul(TINY, 5, p4.divisor).is_zero()
    assert not p4.divisor.is_zero()


def test_sample_torsion_strict_avoids_sublevel():
    rng = random.Random(1)
    p = sample_torsion_strict(CTX, 4, 1, rng)
    assert p.level > 1


def test_eigen_projection_gives_eigenvectors():
    rng = random.Random(2)
    ell = 5
    raw = sample_torsion(CTX, 4, rng).divisor
    for target in set(e % ell for e in CTX.classification.eigenvalues):
        w = eigen_project(CTX, raw, target)
        if w.is_zero():
            continue
        assert divisor_frobenius(w, 1) == scalar_mul(TINY, target, w)


def test_rational_branch_output():
    gs = find_generators(CTX, 20, random.Random(3))
    diag = [gs.frobenius_matrix[i][i] for i in range(4)]
    assert diag == [e % 5 for e in CTX.classification.eigenvalues]
    for i in range(4):
        for j in range(4):
            if i != j:
                assert gs.frobenius_matrix[i][j] == 0
    assert pfaffian(gs.pairing_exponents, 5) != 0
    assert [p.level for p in gs.points][0] == 1


def test_extended_branch_output():
    curve = curve_new(13, [11, 10, 5, 8, 11, 1])
    ctx = make_context(curve, 7)
    assert not ctx.classification.ell_divides_4tau
    gs = find_generators(ctx, 10, random.Random(4))
    diag = [gs.frobenius_matrix[i][i] for i in range(4)]
    assert diag == [e % 7 for e in ctx.classification.eigenvalues]
    levels = [p.level for p in gs.points]
    assert levels[0] == 1 and max(levels) == 6


def test_branch_dispatch_guards():
    curve = curve_new(13, [11, 10, 5, 8, 11, 1])
    ctx = make_context(curve, 7)
    with pytest.raises(PreconditionFailed):
        find_generators_rational_torsion(ctx, 5, random.Random(0))
    with pytest.raises(PreconditionFailed):
        find_generators_extended_torsion(CTX, 5, random.Random(0))


def test_verify_basis_rejects_degenerate_sets():
    rng = random.Random(5)
    gs = find_generators(CTX, 20, rng)
    pts = [p.divisor for p in gs.points]
    ok, E = verify_basis(CTX, pts, rng)
    assert ok
    # replace the last point with a multiple of the third: rank drops
    bad = pts[:3] + [scalar_mul(TINY, 2, pts[2])]
    ok_bad, _ = verify_basis(CTX, bad, rng)
    assert not ok_bad


def test_coordinates_roundtrip():
    rng = random.Random(6)
    gs = find_generators(CTX, 20, rng)
    pts = [p.divisor for p in gs.points]
    y = zero_divisor(CTX.field)
    from g2gen.jacobian import cantor_add

    target = (2, 0, 4, 1)
    for c, x in zip(target, pts):
        y = cantor_add(TINY, y, scalar_mul(TINY, c, x))
    assert coordinates_in_basis(CTX, y, pts, rng) == target


def test_coordinates_need_a_basis():
    rng = random.Random(7)
    O = zero_divisor(CTX.field)
    with pytest.raises(NotABasis):
        coordinates_in_basis(CTX, O, [O, O, O, O], rng)


def test_pairing_matrix_shape():
    rng = random.Random(8)
    gs = find_generators(CTX, 20, rng)
    pts = [p.divisor for p in gs.points]
    E = pairing_matrix(CTX, pts, rng)
    for i in range(4):
        assert E[i][i] == 0
        for j in range(4):
            assert E[i][j] == (-E[j][i]) % 5


def test_frobenius_matrix_respects_pairing_identity():
    rng = random.Random(9)
    gs = find_generators(CTX, 20, rng)
    pts = [p.divisor for p in gs.points]
    ok, E = verify_basis(CTX, pts, rng)
    M = frobenius_matrix(CTX, pts, rng, E=E)
    q, ell = TINY.q, 5
    for i in range(4):
        for j in range(4):
            assert q * E[i][j] % ell == M[i][i] * E[i][j] * M[j][j] % ell
