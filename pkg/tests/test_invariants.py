import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import D, enumerated
from gausscover.construct import snail
from gausscover.diagram import GaussDiagram, Role
from gausscover.enumeration import random_diagram
from gausscover.errors import GaussCoverError, UnknownChordError
from gausscover.invariants import (
    check_realizability,
    covering,
    index,
    indices,
    max_abs_index,
    odd_writhe,
    writhe_polynomial,
    writhe_vector,
)
from gausscover.polynomial import LaurentPolynomial as LP

CROSSED = D("T1 T2 H1 H2", "++")


def _hand_index(g, c):
    # walk the arc from the tail to the head, summing -sign at tails and +sign at heads
    tail, head = g.positions(c)
    total, p = 0, (tail + 1) % len(g)
    while p != head:
        cc, role = g.word[p]
        total += -g.sign(cc) if role is Role.TAIL else g.sign(cc)
        p = (p + 1) % len(g)
    return total


def test_index_single_chord():
    for s in "+-":
        assert index(D("T1 H1", s), 1) == 0
        assert index(D("H1 T1", s), 1) == 0


def test_index_crossed_pair():
    assert index(CROSSED, 1) == -1
    assert index(CROSSED, 2) == 1


def test_index_unknown_chord():
    with pytest.raises(UnknownChordError):
        index(CROSSED, 3)


def test_index_matches_hand_walk(small_diagrams):
    for g in small_diagrams:
        assert indices(g) == {c: _hand_index(g, c) for c in g.chord_ids}


@pytest.mark.parametrize("n", [-4, -1, 1, 2, 5])
@pytest.mark.parametrize("eps", [1, -1])
def test_snail_indices(n, eps):
    ind = indices(snail(n, eps))
    assert ind[1] == n
    assert all(v == 1 for c, v in ind.items() if c != 1)
    assert len(ind) == abs(n) + 1


def test_covering_identity_at_one(small_diagrams):
    for g in small_diagrams:
        assert covering(g, 1) == g


def test_covering_crossed_pair_at_two_is_empty():
    assert covering(CROSSED, 2) == GaussDiagram.empty()


def test_covering_large_r_equals_zero_covering(small_diagrams):
    for g in small_diagrams:
        big = max_abs_index(g) + 1
        for r in (big, big + 1, big + 7):
            assert covering(g, r) == covering(g, 0)


def test_covering_uses_indices_of_the_original():
    # chord 2 has index 0 only after chord 1 is removed; it must still go
    g = D("T1 T2 H1 H2", "++")
    assert covering(g, 0) == GaussDiagram.empty()


def test_covering_negative_r():
    with pytest.raises(GaussCoverError):
        covering(CROSSED, -1)


def test_covering_never_adds_chords(small_diagrams):
    for g in small_diagrams:
        for r in range(0, 7):
            c = covering(g, r)
            assert c.chord_count <= g.chord_count
            assert [e for e in g.word if e.chord in set(c.chord_ids)] == list(c.word)


def test_writhe_vector_examples():
    assert writhe_vector(GaussDiagram.empty()) == {}
    assert writhe_vector(CROSSED) == {-1: 1, 1: 1}
    for n in (2, 3, -2, -5):
        for eps in (1, -1):
            assert writhe_vector(snail(n, eps)) == {n: eps, 1: -eps * n}


def test_writhe_polynomial_examples():
    assert writhe_polynomial(GaussDiagram.empty()) == LP()
    w = writhe_polynomial(CROSSED)
    assert w == LP({-1: 1, 1: 1, 0: -2})
    assert w(1) == 0 and w.derivative()(1) == 0
    assert writhe_polynomial(snail(3, 1)) == LP({3: 1, 1: -3, 0: 2})


def test_odd_writhe_examples():
    assert odd_writhe(GaussDiagram.empty()) == 0
    assert odd_writhe(CROSSED) == 2
    assert odd_writhe(snail(2, 1)) == -2


def test_realizability_examples():
    assert check_realizability(LP())
    assert not check_realizability(LP({1: 1, 0: -1}))
    assert check_realizability(LP({2: 1, 1: -2, 0: 1}))
    assert not check_realizability(LP({2: 1}))


def test_index_zero_for_r1_removable_chords(small_diagrams):
    from gausscover.moves import MoveKind, find_moves
    for g in small_diagrams:
        ind = indices(g)
        for s in find_moves(g, (MoveKind.R1,)):
            assert ind[g.word[s.data[0]].chord] == 0


@settings(max_examples=200, deadline=None)
@given(chords=st.integers(0, 8), seed=st.integers(0, 10**9), circular=st.booleans())
def test_writhe_polynomial_vanishes_to_second_order_at_one(chords, seed, circular):
    g = random_diagram(chords, random.Random(seed), "circular" if circular else "linear")
    w = writhe_polynomial(g)
    assert w(1) == 0
    assert w.derivative()(1) == 0
    assert 0 not in writhe_vector(g)
