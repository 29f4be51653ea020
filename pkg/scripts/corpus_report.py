#!/usr/bin/env python3
"""Print a one-line summary per corpus entry: branch, eigenvalues, torsion
degree, and (for the small base fields) a seeded generator run's Frobenius
diagonal.  Handy for eyeballing the corpus after a sweep."""

import random

from g2gen.corpus import corpus_entries
from g2gen.errors import GeneratorSearchFailure
from g2gen.pairing import make_context
from g2gen.torsion import find_generators
from g2gen.zeta import classify_curve


def main():
    for entry in corpus_entries():
        cls = classify_curve(entry.curve, entry.ell)
        head = f"q={entry.q:<3} ell={entry.ell} f={list(entry.f)}"
        if not cls.in_class:
            print(f"{head}  out of class ({cls.reason})")
            continue
        branch = "ell | 4tau_k " if cls.ell_divides_4tau else "ell ∤ 4tau_k"
        line = (
            f"{head}  {branch}  k={cls.k} N={cls.full_torsion_degree}"
            f"  eigs={list(cls.eigenvalues)}"
        )
        if entry.q == 3:
            ctx = make_context(entry.curve, entry.ell)
            try:
                gs = find_generators(ctx, 10, random.Random(0))
                diag = [gs.frobenius_matrix[i][i] for i in range(4)]
                line += f"  diag={diag}"
            except GeneratorSearchFailure as exc:
                line += f"  search failure: {exc}"
        print(line)


if __name__ == "__main__":
    main()
