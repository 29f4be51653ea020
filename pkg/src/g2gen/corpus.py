"""Checked-in test corpus: (q, f, ell) triples found by scripts/sweep_corpus.py.

The first eight entries keep the full ell-torsion inside F_81 (base field F_3,
ell = 5, all torsion rational over the embedding field), so brute-force
enumeration can cross-check every structural claim.  The two ell = 7 entries
spread the torsion over three field levels (full torsion degree 6, embedding
degree 2 and 3 respectively).  The final entry has a Weil polynomial that does
not split mod 5 and serves as the out-of-class control.
"""

from __future__ import annotations

from dataclasses import dataclass

from .jacobian import Curve, curve_new

CORPUS = [
    (3, [0, 2, 1, 1, 2, 1], 5),
    (3, [0, 2, 1, 2, 2, 1], 5),
    (3, [0, 2, 2, 1, 1, 1], 5),
    (3, [0, 2, 2, 2, 1, 1], 5),
    (3, [1, 0, 0, 0, 0, 1], 5),
    (3, [1, 0, 0, 1, 0, 1], 5),
    (3, [1, 2, 1, 2, 2, 1], 5),
    (3, [1, 2, 2, 1, 1, 1], 5),
    (13, [11, 10, 5, 8, 11, 1], 7),
    (11, [6, 0, 2, 8, 5, 1], 7),
    (3, [1, 0, 1, 0, 1, 1], 5),
]

OUT_OF_CLASS_INDEX = 10


@dataclass(frozen=True)
class CorpusEntry:
    q: int
    f: tuple
    ell: int
    in_class: bool

    @property
    def curve(self) -> Curve:
        return curve_new(self.q, self.f)


def corpus_entries():
    return [
        CorpusEntry(q=q, f=tuple(f), ell=ell, in_class=(i != OUT_OF_CLASS_INDEX))
        for i, (q, f, ell) in enumerate(CORPUS)
    ]


def in_class_entries():
    return [e for e in corpus_entries() if e.in_class]


def tiny_entries():
    """In-class entries whose full torsion field has at most 10^3 elements."""
    return [e for e in in_class_entries() if e.q == 3]
