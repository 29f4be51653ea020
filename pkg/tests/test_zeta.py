"""Point counts, Weil polynomials, eigenvalues, and the branch decision."""

import pytest

from g2gen.corpus import in_class_entries
from g2gen.errors import DoesNotSplit, NotDivisible, Overflow, PreconditionFailed
from g2gen.jacobian import curve_new
from g2gen.zeta import (
    char_poly_power,
    classify_curve,
    count_curve_points,
    embedding_degree,
    frobenius_eigenvalues_mod_ell,
    full_torsion_degree,
    multiplicative_order,
    weil_polynomial,
)

CURVE = curve_new(7, [1, 0, 0, 0, 0, 1])


def test_point_counts_by_hand():
    # y^2 = x^5 + 1 over F_7: direct counts
    assert count_curve_points(CURVE, 1) == 8
    assert count_curve_points(CURVE, 2) == 50


def test_weil_polynomial_values():
    P = weil_polynomial(CURVE)
    assert (P.s, P.t) == (0, 0)
    assert P(1) == 50
    assert P.coefficients() == (49, 0, 0, 0, 1)
    # functional equation: q^2 P(1/q * X) relates P(q) and P(1)
    assert P(P.q) == P.q**2 * P(1)


def test_char_poly_power_consistency():
    P = weil_polynomial(CURVE)
    P2 = char_poly_power(P, 2)
    assert P2.m == 2 and P2.qm == 49
    # |J(F_{q^2})| from the squared-eigenvalue polynomial matches N1/N2 data
    n1, n2 = count_curve_points(CURVE, 1), count_curve_points(CURVE, 2)
    s2 = n2 - 49 - 1
    assert P2.s == s2
    assert P2(1) % P(1) == 0  # J(F_q) is a subgroup of J(F_{q^2})


def test_char_poly_power_overflow_guard():
    P = weil_polynomial(CURVE)
    with pytest.raises(Overflow):
        char_poly_power(P, 40)


def test_embedding_degree():
    assert embedding_degree(5, 3) == 4
    assert embedding_degree(7, 13) == 2
    assert embedding_degree(7, 11) == 3


def test_multiplicative_order_and_torsion_degree():
    assert multiplicative_order(2, 5) == 4
    assert multiplicative_order(4, 5) == 2
    assert full_torsion_degree((1, 3, 4, 2), 5) == 4
    assert full_torsion_degree((1, 6, 5, 4), 7) == 6


def test_eigenvalues_pair_up():
    for entry in in_class_entries():
        P = weil_polynomial(entry.curve)
        eigs = frobenius_eigenvalues_mod_ell(P, entry.ell)
        ell = entry.ell
        assert eigs[0] == 1
        assert eigs[1] == P.q % ell
        assert eigs[2] * eigs[3] % ell == P.q % ell
        # the four eigenvalues reconstruct P mod ell
        s = sum(eigs) % ell
        assert (-P.s) % ell == s


def test_eigenvalues_non_split():
    C = curve_new(3, [1, 0, 1, 0, 1, 1])
    P = weil_polynomial(C)
    with pytest.raises(DoesNotSplit):
        frobenius_eigenvalues_mod_ell(P, 5)


def test_eigenvalues_requires_divisibility():
    P = weil_polynomial(CURVE)
    with pytest.raises(NotDivisible):
        frobenius_eigenvalues_mod_ell(P, 11)


def test_classify_preconditions():
    with pytest.raises(PreconditionFailed):
        classify_curve(CURVE, 4)  # not an odd prime
    with pytest.raises(PreconditionFailed):
        classify_curve(CURVE, 7)  # ell divides q
    with pytest.raises(PreconditionFailed):
        classify_curve(curve_new(11, [6, 0, 2, 8, 5, 1]), 5)  # ell | q - 1
    with pytest.raises(PreconditionFailed):
        classify_curve(CURVE, 3)  # ell does not divide P(1) = 50


def test_classify_corpus_branches():
    seen = set()
    for entry in in_class_entries():
        cls = classify_curve(entry.curve, entry.ell)
        assert cls.in_class
        seen.add(cls.ell_divides_4tau)
        assert cls.full_torsion_degree % cls.k == 0
        if cls.ell_divides_4tau:
            # everything is rational over the embedding field
            assert cls.full_torsion_degree == cls.k
    assert seen == {True, False}


def test_classify_out_of_class():
    cls = classify_curve(curve_new(3, [1, 0, 1, 0, 1, 1]), 5)
    assert not cls.in_class
    assert cls.reason == "non-split"
