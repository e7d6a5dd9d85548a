"""The signed pair grammar.

A pair is two consecutive 3-valent vertices v₁ < v₂ joined by one or two bridge
edges.  Slot colours use four letters:

    B  odd edge (never coloured)
    R  even edge, red
    U  even edge, blue
    D  a dotted symmetric fork/circle: two parallel edges of weight k

Four structures occur; the slot names are shared by all shapes::

    join-join   D(k) joins at v₁ into bridge Z = 2k; Z and X join at v₂ into O = X + 2k
    cut-cut     X cut at v₁ into Y = X − 2k and bridge Z = 2k; Z cut at v₂ into D(k)
    cut-join    X cut at v₁ into Y and bridge Z; Z and W join at v₂ into O
    circle      X cut at v₁ into bridges Z and Z2; they join at v₂ into O = X

Each positive shape carries its local count (the number of admissible 3-cycles
realising it, as a function of the weights).  Negative shapes swap R and U.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

JOIN_JOIN = "join-join"
CUT_CUT = "cut-cut"
CUT_JOIN = "cut-join"
CIRCLE = "circle"

SHAPES = ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii",
          "ix", "x", "xi", "xii", "xiii", "xiv")


@dataclass(frozen=True)
class PairTemplate:
    shape_id: str
    sign: int
    structure: str
    slots: tuple[tuple[str, str], ...]
    orientation: str = "as-drawn"

    def colour(self, slot: str) -> str:
        return dict(self.slots)[slot]

    @property
    def program(self) -> tuple:
        """Orientation-free content used by the sweep."""
        return (self.structure, self.slots)

    def local_count(self, weights: dict[str, int]) -> int:
        """Number of admissible 3-cycles realising this shape at given weights."""
        return _LOCAL_COUNTS[self.shape_id](weights)

    def weights_ok(self, w: dict[str, int]) -> bool:
        """Linear relations and parities of the slots."""
        if any(v < 1 for v in w.values()):
            return False
        for slot, colour in self.slots:
            parity = w[slot] % 2
            if colour == "B" and parity != 1:
                return False
            if colour in ("R", "U") and parity != 0:
                return False
        s = self.structure
        if s == JOIN_JOIN:
            return w["Z"] == 2 * w["D"] and w["O"] == w["X"] + w["Z"]
        if s == CUT_CUT:
            return w["Z"] == 2 * w["D"] and w["Y"] == w["X"] - w["Z"]
        if s == CUT_JOIN:
            return w["X"] == w["Y"] + w["Z"] and w["O"] == w["Z"] + w["W"]
        return w["X"] == w["Z"] + w["Z2"] == w["O"]


def _t(shape, structure, **slots) -> PairTemplate:
    return PairTemplate(shape, 1, structure, tuple(slots.items()))


POSITIVE = (
    _t("i", JOIN_JOIN, D="D", X="U", Z="U", O="U"),
    _t("ii", JOIN_JOIN, D="D", X="B", Z="U", O="B"),
    _t("iii", CUT_CUT, X="U", Y="U", Z="U", D="D"),
    _t("iv", CUT_CUT, X="B", Y="B", Z="U", D="D"),
    _t("v", CUT_JOIN, X="U", Y="U", Z="U", W="U", O="U"),
    _t("vi", CUT_JOIN, X="R", Y="B", Z="B", W="U", O="B"),
    _t("vii", CUT_JOIN, X="R", Y="B", Z="B", W="B", O="R"),
    _t("viii", CUT_JOIN, X="U", Y="U", Z="U", W="B", O="B"),
    _t("ix", CUT_JOIN, X="B", Y="U", Z="B", W="U", O="B"),
    _t("x", CUT_JOIN, X="B", Y="B", Z="U", W="U", O="U"),
    _t("xi", CUT_JOIN, X="B", Y="U", Z="B", W="B", O="R"),
    _t("xii", CUT_JOIN, X="B", Y="B", Z="U", W="B", O="B"),
    _t("xiii", CIRCLE, X="B", Z="B", Z2="U", O="B"),
    _t("xiv", CIRCLE, X="U", Z="U", Z2="U", O="U"),
)

_LOCAL_COUNTS = {
    "i": lambda w: 4 * w["D"],
    "ii": lambda w: 2 * w["D"],
    "iii": lambda w: 2,
    "iv": lambda w: 1,
    "v": lambda w: 4,
    "vi": lambda w: 4,
    "vii": lambda w: 2,
    "viii": lambda w: 2,
    "ix": lambda w: 2,
    "x": lambda w: 2,
    "xi": lambda w: 1,
    "xii": lambda w: 1,
    "xiii": lambda w: 1,
    "xiv": lambda w: 2 if w["Z"] == w["Z2"] else 4,
}

_SWAP = {"R": "U", "U": "R", "B": "B", "D": "D"}


def recolour(t: PairTemplate) -> PairTemplate:
    """Opposite sign: red and blue exchanged, dotting unchanged."""
    return replace(t, sign=-t.sign, slots=tuple((k, _SWAP[c]) for k, c in t.slots))


NEGATIVE = tuple(recolour(t) for t in POSITIVE)
TEMPLATES = POSITIVE + NEGATIVE


def reflect(t: PairTemplate) -> PairTemplate:
    """Mirror along a vertical line: inputs become outputs and v₁, v₂ swap.

    The result is written in as-drawn slot names, so it can be compared with
    the table; its shape_id is the one of the table row it coincides with.
    """
    c = dict(t.slots)
    if t.structure == JOIN_JOIN:
        structure, slots = CUT_CUT, dict(X=c["O"], Y=c["X"], Z=c["Z"], D="D")
    elif t.structure == CUT_CUT:
        structure, slots = JOIN_JOIN, dict(D="D", X=c["Y"], Z=c["Z"], O=c["X"])
    elif t.structure == CUT_JOIN:
        # v₂ becomes a cut of O into W and Z; v₁ becomes a join of Z and Y into X
        structure, slots = CUT_JOIN, dict(X=c["O"], Y=c["W"], Z=c["Z"], W=c["Y"], O=c["X"])
    else:
        structure, slots = CIRCLE, dict(X=c["O"], Z=c["Z"], Z2=c["Z2"], O=c["X"])
    key = (structure, tuple(sorted(slots.items())))
    for row in TEMPLATES:
        if row.sign == t.sign and (row.structure, tuple(sorted(row.slots))) == key:
            other = "reflected" if t.orientation == "as-drawn" else "as-drawn"
            return replace(row, orientation=other)
    raise LookupError(f"reflection of {t.shape_id} ({t.sign:+d}) is not in the table")


def by_shape(shape_id: str, sign: int = 1) -> PairTemplate:
    for t in TEMPLATES:
        if t.shape_id == shape_id and t.sign == sign:
            return t
    raise KeyError(shape_id)


# Uncoloured parities (o/e) of the slots of each shape, used for universal covers.
def parity_pattern(t: PairTemplate) -> tuple[tuple[str, str], ...]:
    return tuple((k, "D" if c == "D" else ("o" if c == "B" else "e")) for k, c in t.slots)
