"""Audit of the transcribed pair table."""
import itertools

import pytest

from realhurwitz.tropical.templates import (
    CIRCLE,
    CUT_CUT,
    CUT_JOIN,
    JOIN_JOIN,
    NEGATIVE,
    POSITIVE,
    SHAPES,
    TEMPLATES,
    by_shape,
    recolour,
    reflect,
)

# Expected slot colours and printed local count of each positive shape.
TABLE = {
    "i": (JOIN_JOIN, dict(D="D", X="U", Z="U", O="U"), 4),
    "ii": (JOIN_JOIN, dict(D="D", X="B", Z="U", O="B"), 2),
    "iii": (CUT_CUT, dict(X="U", Y="U", Z="U", D="D"), 2),
    "iv": (CUT_CUT, dict(X="B", Y="B", Z="U", D="D"), 1),
    "v": (CUT_JOIN, dict(X="U", Y="U", Z="U", W="U", O="U"), 4),
    "vi": (CUT_JOIN, dict(X="R", Y="B", Z="B", W="U", O="B"), 4),
    "vii": (CUT_JOIN, dict(X="R", Y="B", Z="B", W="B", O="R"), 2),
    "viii": (CUT_JOIN, dict(X="U", Y="U", Z="U", W="B", O="B"), 2),
    "ix": (CUT_JOIN, dict(X="B", Y="U", Z="B", W="U", O="B"), 2),
    "x": (CUT_JOIN, dict(X="B", Y="B", Z="U", W="U", O="U"), 2),
    "xi": (CUT_JOIN, dict(X="B", Y="U", Z="B", W="B", O="R"), 1),
    "xii": (CUT_JOIN, dict(X="B", Y="B", Z="U", W="B", O="B"), 1),
    "xiii": (CIRCLE, dict(X="B", Z="B", Z2="U", O="B"), 1),
    "xiv": (CIRCLE, dict(X="U", Z="U", Z2="U", O="U"), 4),
}


def test_table_size():
    assert len(POSITIVE) == len(NEGATIVE) == 14
    assert len(TEMPLATES) == 28
    assert [t.shape_id for t in POSITIVE] == list(SHAPES)


@pytest.mark.parametrize("shape", SHAPES)
def test_positive_rows(shape):
    structure, colours, _ = TABLE[shape]
    t = by_shape(shape, 1)
    assert t.structure == structure
    assert dict(t.slots) == colours


@pytest.mark.parametrize("shape", SHAPES)
def test_negative_rows_are_recoloured(shape):
    pos, neg = by_shape(shape, 1), by_shape(shape, -1)
    swap = {"R": "U", "U": "R", "B": "B", "D": "D"}
    assert neg.structure == pos.structure
    assert dict(neg.slots) == {k: swap[c] for k, c in pos.slots}
    assert recolour(neg) == pos


def _weights(t, max_w=8):
    names = [k for k, _ in t.slots]
    for ws in itertools.product(range(1, max_w + 1), repeat=len(names)):
        w = dict(zip(names, ws))
        if t.weights_ok(w):
            yield w


def test_printed_weight_relations():
    t = by_shape("i")
    assert t.weights_ok(dict(D=1, X=2, Z=2, O=4))
    assert not t.weights_ok(dict(D=1, X=2, Z=2, O=5))
    assert not t.weights_ok(dict(D=1, X=3, Z=2, O=5))
    t = by_shape("iv")
    assert t.weights_ok(dict(X=3, Y=1, Z=2, D=1))
    assert not t.weights_ok(dict(X=3, Y=1, Z=1, D=1))
    t = by_shape("xi")
    assert t.weights_ok(dict(X=3, Y=2, Z=1, W=1, O=2))
    t = by_shape("xiv")
    assert t.weights_ok(dict(X=4, Z=2, Z2=2, O=4))
    assert not t.weights_ok(dict(X=4, Z=2, Z2=2, O=6))


@pytest.mark.parametrize("t", TEMPLATES, ids=lambda t: f"{t.shape_id}{t.sign:+d}")
def test_weight_relations_balance_both_vertices(t):
    found = False
    for w in _weights(t):
        found = True
        c = dict(t.slots)
        if t.structure == JOIN_JOIN:
            assert 2 * w["D"] == w["Z"] and w["Z"] + w["X"] == w["O"]
        elif t.structure == CUT_CUT:
            assert w["X"] == w["Y"] + w["Z"] and w["Z"] == 2 * w["D"]
        elif t.structure == CUT_JOIN:
            assert w["X"] == w["Y"] + w["Z"] and w["Z"] + w["W"] == w["O"]
        else:
            assert w["X"] == w["Z"] + w["Z2"] == w["O"]
        for slot, colour in c.items():
            if colour == "B":
                assert w[slot] % 2 == 1
            elif colour in "RU":
                assert w[slot] % 2 == 0
    assert found


@pytest.mark.parametrize("shape", SHAPES)
def test_local_counts(shape):
    _, _, printed = TABLE[shape]
    t = by_shape(shape)
    w = next(_weights(t))
    if shape in ("i", "ii"):
        assert t.local_count(w) == printed * w["D"]
    elif shape == "xiv":
        assert t.local_count(dict(X=6, Z=2, Z2=4, O=6)) == 4
        assert t.local_count(dict(X=4, Z=2, Z2=2, O=4)) == 2
    else:
        assert t.local_count(w) == printed


@pytest.mark.parametrize("t", TEMPLATES, ids=lambda t: f"{t.shape_id}{t.sign:+d}")
def test_reflection_closes_on_the_table(t):
    m = reflect(t)
    assert m.sign == t.sign
    assert m.orientation == "reflected"
    back = reflect(m)
    assert (back.shape_id, back.orientation) == (t.shape_id, "as-drawn")


def test_reflection_pairs():
    pairs = {t.shape_id: reflect(t).shape_id for t in POSITIVE}
    assert pairs["i"] == "iii" and pairs["ii"] == "iv"
    assert pairs["xiii"] == "xiii" and pairs["xiv"] == "xiv"
    assert all(pairs[pairs[s]] == s for s in SHAPES)
