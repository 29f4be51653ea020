#!/usr/bin/env python3
"""Search small (q, f, ell) triples for the checked-in corpus.

Exhausts all monic quintics over F_3 for tiny instances whose full torsion
field stays at 81 elements, then randomly probes larger base fields for
instances where the torsion spreads over three field levels.  Every accepted
in-class entry has four distinct Frobenius eigenvalues mod ell, a cyclic
rational subgroup, and an elementary ell-Sylow subgroup at the full torsion
level, so the samplers see exactly a rank-four module.  One curve with a
non-split Weil polynomial mod ell is kept as the out-of-class control.

Output is a Python literal ready to paste into src/g2gen/corpus.py.
"""

import itertools
import random

from g2gen.errors import PreconditionFailed, Singular
from g2gen.jacobian import curve_new
from g2gen.zeta import char_poly_power, classify_curve, weil_polynomial


def ell_valuation(n, ell):
    v = 0
    while n % ell == 0:
        n //= ell
        v += 1
    return v


def try_classify(q, f, ell):
    try:
        C = curve_new(q, f)
        P = weil_polynomial(C)
        if P(1) % ell:
            return None, None
        return classify_curve(C, ell, P), P
    except (PreconditionFailed, Singular):
        return None, None


def accept_in_class(cls, P, ell):
    if cls is None or not cls.in_class:
        return False
    eigs = [e % ell for e in cls.eigenvalues]
    if eigs.count(1) != 1 or len(set(eigs)) != 4:
        return False
    N = cls.full_torsion_degree
    PN = char_poly_power(P, N) if N > 1 else P
    return ell_valuation(PN(1), ell) == 4


def tiny_branch2(limit):
    """Exhaustive over F_3, ell = 5: full torsion already over F_81."""
    out = []
    for coeffs in itertools.product(range(3), repeat=5):
        f = list(coeffs) + [1]
        cls, P = try_classify(3, f, 5)
        if cls is None or not accept_in_class(cls, P, 5):
            continue
        if not cls.ell_divides_4tau:
            continue
        out.append((3, tuple(f), 5))
        if len(out) == limit:
            break
    return out


def random_branch1(specs, per_field):
    """Randomized probes for entries with ell not dividing 4*tau_k."""
    out = []
    for q, ell in specs:
        rng = random.Random(q)
        for _ in range(3000):
            f = [rng.randrange(q) for _ in range(5)] + [1]
            cls, P = try_classify(q, f, ell)
            if cls is None or not accept_in_class(cls, P, ell):
                continue
            if cls.ell_divides_4tau:
                continue
            out.append((q, tuple(f), ell))
            if sum(1 for e in out if e[0] == q) == per_field:
                break
    return out


def out_of_class():
    """First F_3 curve whose Weil polynomial does not split mod 5."""
    for coeffs in itertools.product(range(3), repeat=5):
        f = list(coeffs) + [1]
        cls, P = try_classify(3, f, 5)
        if cls is None or cls.in_class or cls.reason != "non-split":
            continue
        k = cls.k
        Pk = char_poly_power(P, k) if k > 1 else P
        if Pk.four_tau % 5 == 0:
            continue  # keep the control consistent with the branch test
        return [(3, tuple(f), 5)]
    return []


def main():
    entries = tiny_branch2(limit=8)
    entries += random_branch1([(13, 7), (11, 7)], per_field=1)
    entries += out_of_class()
    print("CORPUS = [")
    for q, f, ell in entries:
        print(f"    ({q}, {list(f)}, {ell}),")
    print("]")


if __name__ == "__main__":
    main()
