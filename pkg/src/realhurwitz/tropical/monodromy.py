"""Labeled reference: read the enhanced cover off a real factorization tuple.

Each 3-cycle is split into its real transpositions; every transposition is a
vertex, every cycle of a partial product is an edge.  Cycles are classified
against the involution of their step: odd cycles are black, conjugated pairs
dotted, even cycles blue when they have no fixed point under a positive step
(two fixed points under a negative step) and red otherwise.
"""
from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction

from ..oracle import (
    CONJUGATED_PAIR,
    EVEN_REAL_0FIX,
    ODD_REAL,
    LemmaViolation,
    _real_decompose_raw,
    _transposition,
    classify_cycles,
    iter_real_tuples,
)
from ..perms import as_partition, as_signs, tcompose, tcycles
from .covers import LEFT, RIGHT
from .enumerate import edge_record_key


def _letter(kind: str, sign: int) -> str:
    if kind == ODD_REAL:
        return "B"
    if kind == CONJUGATED_PAIR:
        return "D"
    blue = (kind == EVEN_REAL_0FIX) == (sign == 1)
    return "U" if blue else "R"


def cover_records_from_tuple(gamma: tuple, sigma1: tuple, taus, signs) -> tuple[int, list[tuple]]:
    """(n_vertices, edge records) of the cover carried by a real tuple."""
    r = len(taus)
    d = len(sigma1)
    steps = []  # (transposition points, involution, sign)
    pi = sigma1
    gi = gamma if signs[0] == 1 else tcompose(gamma, sigma1)
    for i, t in enumerate(taus):
        if i > 0 and signs[i] != signs[i - 1]:
            gi = tcompose(gi, pi)
        t1, t2 = _real_decompose_raw(pi, gi, t)
        steps += [(t1, gi, signs[i]), (t2, gi, signs[i])]
        pi = tcompose(_transposition(d, *t2), tcompose(_transposition(d, *t1), pi))

    def labels(p, gi, sign):
        return {c: _letter(kind, sign) for c, (kind, _) in classify_cycles(p, gi).items()}

    current = sigma1
    first_g, first_s = steps[0][1], steps[0][2]
    lab = labels(current, first_g, first_s)
    active = {c: (LEFT, lab[c]) for c in tcycles(current)}
    records = []
    for v, (pts, gi, sign) in enumerate(steps):
        nxt = tcompose(_transposition(d, *pts), current)
        before = labels(current, gi, sign)
        after = labels(nxt, gi, sign)
        touched_old = [c for c in tcycles(current) if set(pts) & set(c)]
        touched_new = [c for c in tcycles(nxt) if set(pts) & set(c)]
        for c in touched_old:
            origin, letter = active.pop(c)
            if before[c] != letter:
                raise LemmaViolation(
                    f"lemma violation: cycle {c} changed colour {letter} -> {before[c]}")
            records.append((origin, v, len(c), letter, int(letter == "D")))
        for c in touched_new:
            active[c] = (v, after[c])
        current = nxt
    for c, (origin, letter) in active.items():
        records.append((origin, RIGHT, len(c), letter, int(letter == "D")))
    return 2 * r, records


def labeled_reference(g, lam, mu, splitting) -> dict[tuple, int]:
    """Canonical key -> number of real tuples whose cover has that key."""
    lam, mu = as_partition(lam), as_partition(mu)
    signs = as_signs(splitting).signs
    out: Counter = Counter()
    for gamma, sigma1, taus, _ in iter_real_tuples(g, lam, mu, splitting):
        n, records = cover_records_from_tuple(gamma, sigma1, taus, signs)
        out[edge_record_key(n, records)] += 1
    return dict(out)


def reference_multiplicities(g, lam, mu, splitting) -> dict[tuple, object]:
    """Per-class tuple count divided by d!."""
    lam = as_partition(lam)
    fact = math.factorial(lam.size)
    return {k: Fraction(v, fact) for k, v in labeled_reference(g, lam, mu, splitting).items()}
