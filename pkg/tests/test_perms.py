import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from realhurwitz.perms import (
    Partition,
    Permutation,
    SignSplitting,
    compose,
    conjugate,
    cycle_type,
    involutions,
    inverse,
    is_transitive,
    partitions,
    permutations_of_type,
    reversing_involutions,
    tail_decomposition,
    three_cycles,
)


def P(text, d):
    return Permutation.parse(text, d)


def all_perms(d):
    return [Permutation(p) for p in itertools.permutations(range(d))]


def perm_strategy(d):
    return st.permutations(list(range(d))).map(lambda xs: Permutation(tuple(xs)))


# compose / inverse / conjugate ----------------------------------------------

def test_compose_is_right_to_left():
    assert compose(P("(1 2)", 3), P("(2 3)", 3)) == P("(1 2 3)", 3)
    assert P("(1 2)", 3) * P("(2 3)", 3) == P("(1 2 3)", 3)


def test_compose_identity_and_inverse():
    p = P("(1 3 4)(2 5)", 5)
    e = Permutation.identity(5)
    assert compose(e, p) == p
    assert compose(p, inverse(p)) == e


def test_compose_rejects_mismatched_degree():
    with pytest.raises(ValueError):
        compose(P("(1 2)", 2), P("(1 2)", 3))


def test_conjugate_examples():
    assert conjugate(P("(1 2)", 3), P("(1 2 3)", 3)) == P("(1 3 2)", 3)
    p = P("(1 2 3)", 4)
    assert conjugate(Permutation.identity(4), p) == p
    assert inverse(P("(1 2 3)", 3)) == P("(1 3 2)", 3)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_associativity_exhaustive(d):
    perms = all_perms(d)
    for p, q, r in itertools.product(perms, repeat=3):
        assert compose(compose(p, q), r) == compose(p, compose(q, r))


@settings(max_examples=200, deadline=None)
@given(st.integers(5, 8).flatmap(lambda d: st.tuples(perm_strategy(d), perm_strategy(d), perm_strategy(d))))
def test_associativity_random(pqr):
    p, q, r = pqr
    assert compose(compose(p, q), r) == compose(p, compose(q, r))


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_conjugation_preserves_cycle_type(d):
    perms = all_perms(d)
    for g in perms:
        for p in perms:
            assert cycle_type(conjugate(g, p)) == cycle_type(p)


# cycle types, parsing, printing ---------------------------------------------

def test_cycle_type_examples():
    assert cycle_type(Permutation.identity(4)) == Partition((1, 1, 1, 1))
    assert cycle_type(P("(1 2 3)", 5)) == Partition((3, 1, 1))
    assert cycle_type(P("(1 2)(3 4)", 4)) == Partition((2, 2))


def test_text_forms_round_trip():
    p = Permutation.parse("[2,3,1,5,4]")
    assert str(p) == "(1 2 3)(4 5)"
    assert p.one_line() == "[2,3,1,5,4]"
    assert Permutation.parse(str(p), 5) == p
    assert str(Permutation.identity(3)) == "()"
    assert Permutation.parse("()", 3) == Permutation.identity(3)
    assert p(1) == 2 and p(5) == 4


@pytest.mark.parametrize("bad", ["(1 2", "[1,1]", "(1 2)(2 3)", "1 2 3", "[2,3"])
def test_malformed_permutations(bad):
    with pytest.raises(ValueError):
        Permutation.parse(bad, 3)


def test_partition_parse_and_order():
    lam = Partition.parse("1,3,1")
    assert lam.parts == (3, 1, 1) and lam.size == 5 and len(lam) == 3
    assert str(lam) == "3,1,1"
    for bad in ["", "3,,1", "3,-1", "a", "0"]:
        with pytest.raises(ValueError):
            Partition.parse(bad)


def test_sign_splitting():
    s = SignSplitting.parse("+-+")
    assert s.signs == (1, -1, 1) and s.s == 2 and str(s) == "+-+"
    assert s.doubled().signs == (1, 1, -1, -1, 1, 1)
    assert len(SignSplitting.all_of_length(3)) == 8
    with pytest.raises(ValueError):
        SignSplitting.parse("+x")


# transitivity ---------------------------------------------------------------

def test_is_transitive_examples():
    assert is_transitive([P("(1 2 3)", 3)], 3)
    assert not is_transitive([P("(1 2)", 3)], 3)
    assert is_transitive([P("(1 2)", 3), P("(2 3)", 3)], 3)
    assert not is_transitive([], 2)
    assert is_transitive([], 1)


# reversing involutions ------------------------------------------------------

def test_reversing_involutions_examples():
    got = reversing_involutions(P("(1 2 3)", 3))
    assert set(got) == {P("(1 2)", 3), P("(1 3)", 3), P("(2 3)", 3)}
    assert got == sorted(got)
    assert reversing_involutions(Permutation.identity(2)) == [Permutation.identity(2), P("(1 2)", 2)]
    assert reversing_involutions(P("(1 2)", 2)) == [Permutation.identity(2), P("(1 2)", 2)]


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 6])
def test_reversing_involutions_exhaustive(d):
    invs = involutions(d)
    for sigma in all_perms(d):
        expected = [g for g in invs if conjugate(g, sigma) == inverse(sigma)]
        assert reversing_involutions(sigma) == expected


# generation ------------------------------------------------------------------

def test_three_cycle_counts():
    assert len(list(three_cycles(3))) == 2
    assert len(list(three_cycles(4))) == 8
    for d in range(3, 8):
        assert len(list(three_cycles(d))) == 2 * math.comb(d, 3)
    assert len(list(permutations_of_type(4, Partition((2, 2))))) == 3
    with pytest.raises(ValueError):
        list(permutations_of_type(4, Partition((2, 1))))
    with pytest.raises(ValueError):
        three_cycles(2)


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 6])
def test_permutations_of_type_partition_symmetric_group(d):
    seen = []
    for t in partitions(d):
        got = list(permutations_of_type(d, t))
        assert got == sorted(got)
        assert all(cycle_type(p) == t for p in got)
        seen += got
    assert len(seen) == len(set(seen)) == math.factorial(d)


def test_degree_cap(monkeypatch):
    monkeypatch.setenv("HNUM_MAX_D", "4")
    with pytest.raises(ValueError, match="safety cap"):
        list(three_cycles(5))


# tail decomposition -----------------------------------------------------------

def test_tail_decomposition_examples():
    assert tail_decomposition(Partition((1, 1, 1))) == (
        Partition((1,)), Partition(()), Partition((1,)), Partition(()))
    assert tail_decomposition(Partition((3,))) == (
        Partition(()), Partition(()), Partition((3,)), Partition(()))
    assert tail_decomposition(Partition((4, 4, 2))) == (
        Partition(()), Partition((4,)), Partition(()), Partition((2,)))


@pytest.mark.parametrize("d", range(1, 13))
def test_tail_decomposition_reassembles(d):
    for lam in partitions(d):
        oo, ee, o, e = tail_decomposition(lam)
        assert all(x % 2 for x in oo.parts + o.parts)
        assert all(x % 2 == 0 for x in ee.parts + e.parts)
        assert len(set(o.parts)) == len(o) and len(set(e.parts)) == len(e)
        rebuilt = Partition(oo.parts * 2 + ee.parts * 2 + o.parts + e.parts)
        assert rebuilt == lam
