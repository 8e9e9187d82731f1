"""Acceptance criteria, one test per criterion.

Run with ``pytest tests/test_acceptance.py``; the terminal summary lists
PASS/FAIL per criterion.  Running this file directly does the same.
"""
import random

from conftest import enumerated
from gausscover.arithmetic import f_table, g_table, mertens, mobius
from gausscover.construct import (
    adjust_writhe,
    realize_single_covering,
    realize_spectrum_closed,
    realize_zero_covering,
    snail,
)
from gausscover.diagram import GaussDiagram, is_isomorphic
from gausscover.enumeration import diagrams_with, random_diagram
from gausscover.invariants import covering, odd_writhe, writhe_polynomial, writhe_vector
from gausscover.moves import MoveKind, apply_move, find_moves, insertion_sites, random_move_walk, simplify
from gausscover.polynomial import LaurentPolynomial as LP

SEED = 20261017


def _h_range():
    """Every linear diagram with at most 2 chords, plus a fixed sample of 3-chord ones."""
    rng = random.Random(SEED)
    three = list(diagrams_with(3, "linear"))
    return list(enumerated(2, "linear")) + rng.sample(three, 40)


def test_01_published_tables():
    assert f_table(10).values == {2: 2, 3: 1, 4: 0, 5: 0, 6: -1, 7: -1, 8: -1, 9: -1, 10: -1}
    assert f_table(10).support == [2, 3, 6, 7, 8, 9, 10]
    assert g_table(10).values == {2: -1, 3: 0, 4: 0, 5: -1, 6: 0, 7: 0, 8: 0, 9: 0, 10: 1}
    assert g_table(10).support == [2, 5, 10]
    assert g_table(12).values == {2: 1, 3: 0, 4: -1, 5: 0, 6: -1, 7: 0, 8: 0, 9: 0, 10: 0, 11: 0, 12: 1}
    assert g_table(12).support == [2, 4, 6, 12]


def test_02_mobius_identity():
    for n in range(2, 201):
        g = g_table(n)
        for i in range(2, n + 1):
            assert g[i] == (mobius(n // i) if n % i == 0 else 0), (n, i)


def test_03_mertens_identity():
    for n in range(2, 201):
        f = f_table(n)
        for r in range(2, n + 1):
            assert f[r] == -mertens(n // r), (n, r)


def test_04_zero_covering_construction():
    for h in _h_range():
        for n in range(2, 9):
            g = realize_zero_covering(h, n)
            assert is_isomorphic(covering(g, 0), h), (h, n)
            for r in range(n + 1, n + 4):
                assert is_isomorphic(covering(g, r), h), (h, n, r)
            for r in range(2, n + 1):
                assert simplify(covering(g, r)).chord_count == 0, (h, n, r)


def test_05_single_covering_construction():
    empty = GaussDiagram.empty()
    for h in _h_range():
        for n in range(2, 9):
            g = realize_single_covering(h, n)
            assert is_isomorphic(covering(g, n), h), (h, n)
            assert covering(g, 0) == empty
            for r in range(2, n):
                assert simplify(covering(g, r)).chord_count == 0, (h, n, r)
            for r in range(n + 1, n + 6):
                assert covering(g, r) == empty, (h, n, r)


def _random_realizable(rng):
    p = LP({e: rng.randint(-3, 3) for e in range(-5, 6)})
    # project onto f(1) = f'(1) = 0 using the t and constant terms
    p = p + LP({1: -p.derivative()(1)})
    return p + LP({0: -p(1)})


def test_06_writhe_adjustment():
    rng = random.Random(SEED)
    hs = list(enumerated(2, "linear"))
    for _ in range(20):
        f = _random_realizable(rng)
        assert f(1) == 0 and f.derivative()(1) == 0
        for h in hs:
            g = adjust_writhe(h, f)
            assert writhe_polynomial(g) == f
            for r in (0, 2, 3, 4, 5, 6, 7, 8):
                assert writhe_polynomial(covering(g, r)) == writhe_polynomial(covering(h, r)), (f, h, r)


def test_07_snail_formula():
    for n in range(-6, 7):
        if n == 0:
            continue
        for eps in (1, -1):
            want = LP({n: eps}) + LP({1: -eps * n}) + LP({0: eps * (n - 1)})
            assert writhe_polynomial(snail(n, eps)) == want, (n, eps)


def test_08_move_invariance_on_long_walks():
    rng = random.Random(SEED)
    for seed in range(10):
        kind = "circular" if seed % 2 else "linear"
        g = random_diagram(rng.randint(0, 5), rng, kind)
        h = random_move_walk(g, 1000, seed)
        assert writhe_vector(h) == writhe_vector(g)
        assert odd_writhe(h) == odd_writhe(g)
        assert writhe_polynomial(h) == writhe_polynomial(g)


def test_09_writhe_polynomial_vanishing():
    rng = random.Random(SEED)
    for _ in range(500):
        g = random_diagram(rng.randint(0, 6), rng, rng.choice(("linear", "circular")))
        w = writhe_polynomial(g)
        assert w(1) == 0 and w.derivative()(1) == 0, g


def _check_compatible(g, h):
    for r in range(0, 7):
        assert writhe_polynomial(covering(g, r)) == writhe_polynomial(covering(h, r)), (g, h, r)


def test_10_coverings_respect_moves():
    small = enumerated(3, "linear") + enumerated(3, "circular")
    for g in small:
        # removals and triangle moves; an insertion is the reverse of a removal
        for s in find_moves(g):
            _check_compatible(g, apply_move(g, s))
    for g in enumerated(2, "linear") + enumerated(2, "circular"):
        for s in insertion_sites(g):
            _check_compatible(g, apply_move(g, s))
    rng = random.Random(SEED)
    for g in rng.sample([d for d in small if d.chord_count == 3], 40):
        for s in insertion_sites(g):
            if s.kind is MoveKind.R1 or rng.random() < 0.25:
                _check_compatible(g, apply_move(g, s))


def test_11_closed_spectrum_end_to_end():
    e = GaussDiagram.empty("circular")
    j2 = GaussDiagram("circular", "T1 H1", {1: 1})
    f = LP({2: 1, 1: -2, 0: 1})
    g = realize_spectrum_closed([e, j2], f)
    assert g.kind.value == "circular"
    assert writhe_polynomial(g) == f
    assert is_isomorphic(simplify(covering(g, 2)), simplify(j2))
    for r in (0, 3, 4, 5, 6, 7, 8):
        assert is_isomorphic(simplify(covering(g, r)), simplify(e)), r


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main([__file__, "-q"]))
