"""Left-to-right sweep over enhanced real tropical covers.

The sweep keeps the multiset of active edges (edges whose right endpoint is
not placed yet), each described by (origin vertex, weight, colour letter).
Pair i applies one template of sign s_i; identical active descriptors are
treated as one choice, so every isomorphism class is reached from a single
branch up to relabelling, and the final sorted edge list is its key.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product

from ..oracle import branch_point_count
from ..perms import Partition, SignSplitting, as_partition, as_signs, check_degree
from .covers import (
    BLUE,
    LEFT,
    RED,
    RIGHT,
    RealStructure,
    TropicalCover,
    mult_enhanced,
)
from .templates import CIRCLE, CUT_CUT, CUT_JOIN, JOIN_JOIN, TEMPLATES, PairTemplate

_COLOUR_NAME = {"R": RED, "U": BLUE, "B": None, "D": None}


@dataclass(frozen=True)
class CoverClass:
    cover: TropicalCover
    real: RealStructure
    splitting: SignSplitting
    canonical_key: tuple
    multiplicity: int
    shapes: tuple[str, ...] = ()


def edge_record_key(n_vertices: int, records) -> tuple:
    """Canonical key of a coloured cover given (s, t, w, colour letter, dotted) records."""
    return (n_vertices, tuple(sorted(records)))


def class_from_records(n_vertices: int, records, splitting: SignSplitting,
                       shapes: tuple[str, ...] = ()) -> CoverClass:
    records = sorted(records)
    cover = TropicalCover(n_vertices, tuple((s, t, w) for s, t, w, _, _ in records))
    dotted_groups: dict[tuple, list[int]] = {}
    colours = {}
    for i, (s, t, w, letter, dot) in enumerate(records):
        if dot:
            dotted_groups.setdefault((s, t, w), []).append(i)
        elif letter in ("R", "U"):
            colours[i] = _COLOUR_NAME[letter]
    dotted = []
    for idx in dotted_groups.values():
        if len(idx) != 2:
            raise ValueError(f"dotted edges {idx} do not form a symmetric pair")
        dotted.append(tuple(idx))
    real = RealStructure.from_edge_colours(cover, dotted, colours)
    return CoverClass(cover, real, splitting, edge_record_key(n_vertices, records),
                      mult_enhanced(cover, real), shapes)


def class_records(cls: CoverClass) -> list[tuple]:
    """Inverse of class_from_records."""
    dotted = cls.real.dotted_edges
    out = []
    for i, (s, t, w) in enumerate(cls.cover.edges):
        if i in dotted:
            out.append((s, t, w, "D", 1))
        elif w % 2:
            out.append((s, t, w, "B", 0))
        else:
            out.append((s, t, w, "R" if cls.real.edge_colour(i) == RED else "U", 0))
    return out


# ---------------------------------------------------------------------------
# initial states
# ---------------------------------------------------------------------------

def initial_states(lam: Partition, coloured: bool = True) -> list[tuple]:
    """Active left ends: each choice of dotted forks and colours of even ends.

    Items are (origin, weight, letter) with letter B/R/U/D; without colours
    even ends get the letter "E".
    """
    counts = Counter(lam.parts)
    per_value = []
    for w, m in sorted(counts.items()):
        options = []
        for forks in range(m // 2 + 1):
            singles = m - 2 * forks
            base = [(LEFT, w, "D")] * forks
            if w % 2:
                options.append(base + [(LEFT, w, "B")] * singles)
            elif not coloured:
                options.append(base + [(LEFT, w, "E")] * singles)
            else:
                for reds in range(singles + 1):
                    options.append(base + [(LEFT, w, "R")] * reds + [(LEFT, w, "U")] * (singles - reds))
        per_value.append(options)
    return [tuple(sorted(sum(choice, []))) for choice in product(*per_value)]


def _active_size(items) -> int:
    return sum(2 if it[2][0] == "D" else 1 for it in items)


def _right_profile(items) -> tuple:
    parts = []
    for _, w, letter in items:
        parts.extend([w, w] if letter[0] == "D" else [w])
    return tuple(sorted(parts, reverse=True))


def _split_weights(total: int, first: str, second: str):
    """(a, b) with a + b = total, a ≥ 1, b ≥ 1 and parities from the letters."""
    for a in range(1, total):
        b = total - a
        if (a % 2 == 1) != (first == "B"):
            continue
        if (b % 2 == 1) != (second == "B"):
            continue
        yield a, b


def _remove(items: tuple, *drop) -> list:
    out = list(items)
    for it in drop:
        out.remove(it)
    return out


def apply_template(items: tuple, t: PairTemplate, v1: int, match=None, relabel=None):
    """Every way to apply template t at vertices (v1, v1+1).

    Yields (new items, new edge records).  ``match`` decides whether an
    active letter fits a slot letter (exact equality by default) and
    ``relabel`` rewrites the letter of each newly created active edge.
    """
    match = match or (lambda have, want: have == want)
    if relabel is not None:
        for new_items, recs in apply_template(items, t, v1, match):
            yield tuple(sorted(it if it[0] < v1 else (it[0], it[1], relabel(it[2], it[1]))
                               for it in new_items)), recs
        return
    v2 = v1 + 1
    c = dict(t.slots)
    distinct = sorted(set(items))
    s = t.structure
    if s == JOIN_JOIN:
        for fork in distinct:
            if fork[2] != "D":
                continue
            rest = _remove(items, fork)
            for x in sorted(set(rest)):
                if x[2] == "D" or not match(x[2], c["X"]):
                    continue
                k = fork[1]
                recs = [(fork[0], v1, k, "D", 1), (fork[0], v1, k, "D", 1),
                        (v1, v2, 2 * k, c["Z"], 0), (x[0], v2, x[1], x[2], 0)]
                yield tuple(sorted(_remove(rest, x) + [(v2, x[1] + 2 * k, c["O"])])), recs
    elif s == CUT_CUT:
        for x in distinct:
            if x[2] == "D" or not match(x[2], c["X"]):
                continue
            rest = _remove(items, x)
            for k in range(1, (x[1] - 1) // 2 + 1):
                y = x[1] - 2 * k
                if (y % 2 == 1) != (c["Y"] == "B"):
                    continue
                recs = [(x[0], v1, x[1], x[2], 0), (v1, v2, 2 * k, c["Z"], 0)]
                new = rest + [(v1, y, c["Y"]), (v2, k, "D")]
                yield tuple(sorted(new)), recs
    elif s == CUT_JOIN:
        for x in distinct:
            if x[2] == "D" or not match(x[2], c["X"]):
                continue
            rest = _remove(items, x)
            for w_ in sorted(set(rest)):
                if w_[2] == "D" or not match(w_[2], c["W"]):
                    continue
                rest2 = _remove(rest, w_)
                for y, z in _split_weights(x[1], c["Y"], c["Z"]):
                    recs = [(x[0], v1, x[1], x[2], 0), (v1, v2, z, c["Z"], 0),
                            (w_[0], v2, w_[1], w_[2], 0)]
                    new = rest2 + [(v1, y, c["Y"]), (v2, z + w_[1], c["O"])]
                    yield tuple(sorted(new)), recs
    elif s == CIRCLE:
        for x in distinct:
            if x[2] == "D" or not match(x[2], c["X"]):
                continue
            rest = _remove(items, x)
            for z1, z2 in _split_weights(x[1], c["Z"], c["Z2"]):
                if c["Z"] == c["Z2"] and z1 > z2:
                    continue
                recs = [(x[0], v1, x[1], x[2], 0), (v1, v2, z1, c["Z"], 0),
                        (v1, v2, z2, c["Z2"], 0)]
                yield tuple(sorted(rest + [(v2, x[1], c["O"])])), recs
    else:
        raise ValueError(s)


_DELTA = {JOIN_JOIN: -2, CUT_CUT: 2, CUT_JOIN: 0, CIRCLE: 0}


def distinct_programs(sign: int) -> list[PairTemplate]:
    return [t for t in TEMPLATES if t.sign == sign]


def connected_records(n_vertices: int, records) -> bool:
    parent = list(range(n_vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s, t, *_ in records:
        if s == LEFT and t == RIGHT:
            return False
        if s != LEFT and t != RIGHT:
            a, b = find(s), find(t)
            if a != b:
                parent[a] = b
    return len({find(v) for v in range(n_vertices)}) == 1


def sweep(lam: Partition, mu: Partition, r: int, pair_templates, states,
          match=None, relabel=None):
    """Generic sweep: yields (records, template ids) of connected covers.

    ``pair_templates[i]`` lists the templates allowed for pair i.
    """
    target = mu.parts
    n_vertices = 2 * r
    mu_len = len(mu)

    def rec(i, items, records, shapes):
        if i == r:
            if _right_profile(items) != target:
                return
            final = list(records)
            for origin, w, letter in items:
                if letter[0] == "D":
                    final += [(origin, RIGHT, w, "D", 1)] * 2
                else:
                    final.append((origin, RIGHT, w, letter, 0))
            if connected_records(n_vertices, final):
                yield final, tuple(shapes)
            return
        n = _active_size(items)
        for t in pair_templates[i]:
            after = n + _DELTA[t.structure]
            if abs(mu_len - after) > 2 * (r - i - 1):
                continue
            for new_items, recs in apply_template(items, t, 2 * i, match, relabel):
                shapes.append(t.shape_id)
                yield from rec(i + 1, new_items, records + recs, shapes)
                shapes.pop()

    for items in states:
        yield from rec(0, items, [], [])


def enumerate_enhanced_covers(g, lam, mu, splitting) -> list[CoverClass]:
    """All isomorphism classes of enhanced real covers of type (g, λ, μ) with these signs."""
    lam, mu = as_partition(lam), as_partition(mu)
    r = branch_point_count(g, lam, mu)
    check_degree(lam.size)
    splitting = as_signs(splitting)
    if len(splitting) != r:
        raise ValueError(f"need {r} signs, got {len(splitting)}")
    programs = {1: distinct_programs(1), -1: distinct_programs(-1)}
    per_pair = [programs[s] for s in splitting]
    found: dict[tuple, CoverClass] = {}
    for records, shapes in sweep(lam, mu, r, per_pair, initial_states(lam)):
        key = edge_record_key(2 * r, records)
        if key not in found:
            found[key] = class_from_records(2 * r, records, splitting, shapes)
        elif found[key].shapes != shapes:
            raise AssertionError(f"one class reached through shapes {found[key].shapes} and {shapes}")
    return [found[k] for k in sorted(found)]


def real_hurwitz_tropical(g, lam, mu, splitting) -> int:
    """Σ mult over the enhanced classes."""
    return sum(c.multiplicity for c in enumerate_enhanced_covers(g, lam, mu, splitting))
