"""Read the local picture of a vertex pair off a finished cover."""
from __future__ import annotations

from .covers import RED, RealStructure, TropicalCover
from .templates import CIRCLE, CUT_CUT, CUT_JOIN, JOIN_JOIN, POSITIVE, TEMPLATES, PairTemplate


def pair_slots(cover: TropicalCover, i: int) -> tuple[str, dict] | None:
    """(structure, slot -> edge index) for pair i, or None if no template shape fits.

    The D slot holds a tuple of two edge indices; for circles the two bridges
    are Z and Z2 in edge order.
    """
    v1, v2 = 2 * i, 2 * i + 1
    E = cover.edges
    bridges = [j for j, e in enumerate(E) if e.source == v1 and e.target == v2]
    in1 = [j for j, e in enumerate(E) if e.target == v1]
    out1 = [j for j, e in enumerate(E) if e.source == v1 and e.target != v2]
    in2 = [j for j, e in enumerate(E) if e.target == v2 and e.source != v1]
    out2 = [j for j, e in enumerate(E) if e.source == v2]
    if len(bridges) == 2 and len(in1) == 1 and len(out2) == 1:
        return CIRCLE, dict(X=in1[0], Z=bridges[0], Z2=bridges[1], O=out2[0])
    if len(bridges) != 1:
        return None
    z = bridges[0]
    if len(in1) == 2 and not out1 and len(in2) == 1 and len(out2) == 1:
        return JOIN_JOIN, dict(D=tuple(in1), X=in2[0], Z=z, O=out2[0])
    if len(in1) == 1 and len(out1) == 1:
        if len(in2) == 1 and len(out2) == 1:
            return CUT_JOIN, dict(X=in1[0], Y=out1[0], Z=z, W=in2[0], O=out2[0])
        if not in2 and len(out2) == 2:
            return CUT_CUT, dict(X=in1[0], Y=out1[0], Z=z, D=tuple(out2))
    return None


def _slot_weights(cover: TropicalCover, slots: dict) -> dict[str, int]:
    return {k: cover.edges[v[0] if isinstance(v, tuple) else v].weight for k, v in slots.items()}


def _orders(structure: str, slots: dict):
    yield slots
    if structure == CIRCLE:
        yield dict(slots, Z=slots["Z2"], Z2=slots["Z"])


def _symmetric(cover: TropicalCover, pair: tuple) -> bool:
    return cover.edges[pair[0]] == cover.edges[pair[1]]


def match_templates(cover: TropicalCover, real: RealStructure, i: int,
                    sign: int) -> list[tuple[PairTemplate, dict[str, int]]]:
    """Templates of the given sign that the coloured pair i realises, with weights."""
    found = pair_slots(cover, i)
    if found is None:
        return []
    structure, slots = found
    dotted = real.dotted_edges

    def letter(j):
        if j in dotted:
            return "D"
        if cover.edges[j].weight % 2:
            return "B"
        return "R" if real.edge_colour(j) == RED else "U"

    out = []
    for t in TEMPLATES:
        if t.sign != sign or t.structure != structure:
            continue
        for sl in _orders(structure, slots):
            ok = True
            for name, want in t.slots:
                if name == "D":
                    pair = sl["D"]
                    ok = _symmetric(cover, pair) and all(j in dotted for j in pair)
                else:
                    ok = letter(sl[name]) == want
                if not ok:
                    break
            if ok:
                out.append((t, _slot_weights(cover, sl)))
                break
    return out


def match_uncoloured(cover: TropicalCover, i: int) -> tuple[PairTemplate, dict] | None:
    """The positive template whose parity pattern pair i shows, with its slot edges."""
    found = pair_slots(cover, i)
    if found is None:
        return None
    structure, slots = found
    for t in POSITIVE:
        if t.structure != structure:
            continue
        for sl in _orders(structure, slots):
            ok = True
            for name, want in t.slots:
                if name == "D":
                    ok = _symmetric(cover, sl["D"])
                else:
                    odd = cover.edges[sl[name]].weight % 2 == 1
                    ok = odd == (want == "B")
                if not ok:
                    break
            if ok:
                return t, sl
    return None
