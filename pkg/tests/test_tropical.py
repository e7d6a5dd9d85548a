import itertools
from fractions import Fraction

import networkx as nx
import pytest
from networkx.algorithms.isomorphism import categorical_multiedge_match, categorical_node_match

from realhurwitz.battery import battery_cases
from realhurwitz.oracle import DegenerateBranchData, real_hurwitz_oracle
from realhurwitz.perms import SignSplitting
from realhurwitz.tropical.covers import (
    BLUE,
    LEFT,
    RED,
    RIGHT,
    RealStructure,
    TropicalCover,
    bridge_edges,
    check_real_structure,
    dotted_circles,
    even_components,
    even_inner_edges,
    mult_enhanced,
    uneven_even_circles,
    validate_cover,
)
from realhurwitz.tropical.enumerate import (
    class_records,
    enumerate_enhanced_covers,
    real_hurwitz_tropical,
)
from realhurwitz.tropical.monodromy import reference_multiplicities
from realhurwitz.tropical.pairs import match_templates

SIMPLE = TropicalCover(2, [(LEFT, 0, 3), (0, 1, 2), (0, RIGHT, 1), (1, RIGHT, 1), (1, RIGHT, 1)])


def _all_classes(max_d, max_r):
    for g, lam, mu, r in battery_cases(max_d, max_r):
        for s in SignSplitting.all_of_length(r):
            yield g, lam, mu, s, enumerate_enhanced_covers(g, lam, mu, s)


# validation ----------------------------------------------------------------

def test_validate_simple_cover():
    report = validate_cover(SIMPLE, 0, (3,), (1, 1, 1))
    assert report.ok and report.clause is None


def test_validate_reports_balancing():
    edges = list(SIMPLE.edges)
    edges[0] = (LEFT, 0, 5)
    report = validate_cover(TropicalCover(2, edges), 0, (3,), (1, 1, 1))
    assert not report and report.clause == "balancing"


def test_validate_reports_connectivity():
    # two copies of the simple cover, side by side
    c = TropicalCover(4, [(LEFT, 0, 3), (0, 1, 2), (0, RIGHT, 1), (1, RIGHT, 1), (1, RIGHT, 1),
                          (LEFT, 2, 3), (2, 3, 2), (2, RIGHT, 1), (3, RIGHT, 1), (3, RIGHT, 1)])
    assert validate_cover(c, -1, (3, 3), (1,) * 6).clause == "connectivity"
    c = TropicalCover(2, list(SIMPLE.edges) + [(LEFT, RIGHT, 1)])
    assert validate_cover(c, 0, (3, 1), (1,) * 4).clause == "endpoints"


def test_validate_other_clauses():
    assert validate_cover(SIMPLE, 1, (3,), (1, 1, 1)).clause == "genus"
    assert validate_cover(SIMPLE, 0, (2, 1), (1, 1, 1)).clause == "left profile"
    assert validate_cover(SIMPLE, 0, (3,), (2, 1)).clause == "right profile"
    bad = TropicalCover(2, [(LEFT, 0, 3), (0, 1, 3), (1, RIGHT, 3)])
    assert validate_cover(bad, 0, (3,), (3,)).clause == "3-valence"
    bad = TropicalCover(2, [(LEFT, 1, 3), (1, 0, 2), (1, RIGHT, 1), (0, RIGHT, 1), (0, RIGHT, 1)])
    assert validate_cover(bad, 0, (3,), (1, 1, 1)).clause == "orientation"
    bad = TropicalCover(2, [(LEFT, 0, 0), (0, 1, 2)])
    assert validate_cover(bad, 0, (3,), (1, 1, 1)).clause == "weight"


def test_disconnected_cover_is_caught():
    # a closed loop between the pairs with nothing else attached
    c = TropicalCover(4, [(LEFT, 0, 3), (0, 1, 2), (0, RIGHT, 1), (1, RIGHT, 1), (1, RIGHT, 1),
                          (LEFT, 2, 1), (2, 3, 1), (2, 3, 1), (LEFT, 3, 1)])
    assert not c.is_connected()


# enumeration ------------------------------------------------------------------

def test_simplest_enumeration():
    for sign, colour in (("+", BLUE), ("-", RED)):
        classes = enumerate_enhanced_covers(0, (3,), (1, 1, 1), sign)
        assert len(classes) == 1
        (c,) = classes
        assert c.cover == SIMPLE
        assert c.shapes == ("iv",)
        assert c.multiplicity == 1
        assert c.real.dotted == frozenset({(3, 4)})
        assert c.real.edge_colour(1) == colour
        assert real_hurwitz_tropical(0, (3,), (1, 1, 1), sign) == 1


def test_enumeration_errors():
    with pytest.raises(DegenerateBranchData):
        enumerate_enhanced_covers(0, (3,), (3,), "+")
    with pytest.raises(ValueError):
        enumerate_enhanced_covers(0, (3,), (1, 1, 1), "+-")


def test_every_output_validates_and_is_coloured_consistently():
    for g, lam, mu, s, classes in _all_classes(5, 3):
        keys = [c.canonical_key for c in classes]
        assert len(keys) == len(set(keys)) and keys == sorted(keys)
        for c in classes:
            assert validate_cover(c.cover, g, lam, mu), (g, lam, mu, s)
            assert check_real_structure(c.cover, c.real) is None
            for comp in even_components(c.cover, c.real):
                assert len({c.real.edge_colour(i) for i in comp}) == 1


def test_every_pair_matches_exactly_one_template():
    for g, lam, mu, s, classes in _all_classes(5, 3):
        for c in classes:
            for i, sign in enumerate(s):
                found = match_templates(c.cover, c.real, i, sign)
                assert len(found) == 1, (c.canonical_key, i)
                t, w = found[0]
                assert t.weights_ok(w)
                assert t.shape_id == c.shapes[i]


def test_sum_matches_oracle_on_a_few_inputs():
    for g, lam, mu, s in [(0, (2, 2), (3, 1), "+"), (1, (4,), (4,), "-"),
                          (0, (2, 1, 1), (2, 1, 1), "++"), (0, (2, 1, 1), (2, 1, 1), "+-"),
                          (0, (3, 3), (2, 2, 1, 1), "-+")]:
        assert Fraction(real_hurwitz_tropical(g, lam, mu, s)) == real_hurwitz_oracle(g, lam, mu, s).value


# multiplicity -------------------------------------------------------------------

def test_mult_trivial_cover_is_one():
    real = RealStructure.from_edge_colours(SIMPLE, [(3, 4)], {1: BLUE})
    assert even_inner_edges(SIMPLE, real) == [1] and bridge_edges(SIMPLE) == [1]
    assert mult_enhanced(SIMPLE, real) == 1


def test_mult_dotted_circle_of_weight_two():
    c = TropicalCover(2, [(LEFT, 0, 4), (0, 1, 2), (0, 1, 2), (1, RIGHT, 4)])
    real = RealStructure.from_edge_colours(c, [(1, 2)], {0: RED, 3: RED})
    assert dotted_circles(c, real) == [(1, 2)]
    assert mult_enhanced(c, real) == 4
    # undotted, the circle joins the red component and the pair is a (xiv) with equal bridges
    plain = RealStructure.from_edge_colours(c, [], {i: RED for i in range(4)})
    assert uneven_even_circles(c) == []
    assert mult_enhanced(c, plain) == 1


def test_mult_uneven_circle_and_even_inner_edge():
    c = TropicalCover(2, [(LEFT, 0, 6), (0, 1, 2), (0, 1, 4), (1, RIGHT, 6)])
    real = RealStructure.from_edge_colours(c, [], {i: BLUE for i in range(4)})
    assert uneven_even_circles(c) == [0]
    assert mult_enhanced(c, real) == 2
    # genus 1 cover of type ((2,1),(2,1)): the red edge 1 -> 2 is even, inner and not a bridge
    c = TropicalCover(4, [(LEFT, 0, 2), (LEFT, 1, 1), (0, 1, 1), (0, 3, 1), (1, 2, 2),
                          (2, 3, 1), (2, RIGHT, 1), (3, RIGHT, 2)])
    assert validate_cover(c, 1, (2, 1), (2, 1))
    real = RealStructure.from_edge_colours(c, [], {0: RED, 4: RED, 7: RED})
    assert check_real_structure(c, real) is None
    assert bridge_edges(c) == [2, 5] and even_inner_edges(c, real) == [4]
    assert mult_enhanced(c, real) == 2


def test_mult_ignores_colours():
    for g, lam, mu, s, classes in _all_classes(5, 3):
        for c in classes:
            comps = even_components(c.cover, c.real)
            for choice in itertools.product((RED, BLUE), repeat=len(comps)):
                real = RealStructure(c.real.dotted, tuple(zip(comps, choice)))
                assert mult_enhanced(c.cover, real) == c.multiplicity


# reference comparison and dedup -------------------------------------------------

def test_classes_match_labeled_reference():
    for g, lam, mu, s, classes in _all_classes(4, 3):
        ref = reference_multiplicities(g, lam, mu, s)
        got = {c.canonical_key: c.multiplicity for c in classes}
        assert set(got) == set(ref), (g, lam, mu, s)
        for k, v in got.items():
            assert Fraction(v) == ref[k]


def _as_graph(c):
    G = nx.MultiDiGraph()
    for v in range(c.cover.n_vertices):
        G.add_node(("v", v), kind=("inner", v))
    for i, (s, t, w, letter, dot) in enumerate(class_records(c)):
        a = ("v", s) if s != LEFT else ("left", i)
        b = ("v", t) if t != RIGHT else ("right", i)
        G.add_node(a, kind=G.nodes[a]["kind"] if a in G else "left")
        G.add_node(b, kind=G.nodes[b]["kind"] if b in G else "right")
        G.add_edge(a, b, label=(w, letter, dot))
    return G


def test_no_two_classes_are_isomorphic():
    nm = categorical_node_match("kind", None)
    em = categorical_multiedge_match("label", None)
    for g, lam, mu, s, classes in _all_classes(5, 3):
        graphs = [_as_graph(c) for c in classes]
        for a, b in itertools.combinations(graphs, 2):
            assert not nx.is_isomorphic(a, b, node_match=nm, edge_match=em), (g, lam, mu, s)
