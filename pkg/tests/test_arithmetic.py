from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gausscover.arithmetic import (
    CoefficientTable,
    f_table,
    format_table,
    g_table,
    mertens,
    mobius,
    verify_tables,
)
from gausscover.errors import GaussCoverError

F10 = {2: 2, 3: 1, 4: 0, 5: 0, 6: -1, 7: -1, 8: -1, 9: -1, 10: -1}
G10 = {2: -1, 3: 0, 4: 0, 5: -1, 6: 0, 7: 0, 8: 0, 9: 0, 10: 1}
G12 = {i: 0 for i in range(2, 13)} | {2: 1, 12: 1, 4: -1, 6: -1}


def test_published_tables():
    assert f_table(10).values == F10
    assert f_table(10).support == [2, 3, 6, 7, 8, 9, 10]
    assert g_table(10).values == G10
    assert g_table(10).support == [2, 5, 10]
    assert g_table(12).values == G12
    assert g_table(12).support == [2, 4, 6, 12]


def test_small_tables():
    assert f_table(2).values == {2: -1}
    assert f_table(6).values == {2: 1, 3: 0, 4: -1, 5: -1, 6: -1}
    assert f_table(6).support == [2, 4, 5, 6]
    assert g_table(6).values == {2: -1, 3: -1, 4: 0, 5: 0, 6: 1}


def _gauss_solve(n, top, rest):
    """Solve the class-sum system as a dense linear system over the rationals."""
    idx = list(range(2, n + 1))
    rows = [[Fraction(1 if i % r == 0 else 0) for i in idx] + [Fraction(top if r == n else rest)]
            for r in idx]
    m = len(idx)
    for col in range(m):
        piv = next(k for k in range(col, m) if rows[k][col] != 0)
        rows[col], rows[piv] = rows[piv], rows[col]
        rows[col] = [x / rows[col][col] for x in rows[col]]
        for k in range(m):
            if k != col and rows[k][col]:
                fac = rows[k][col]
                rows[k] = [a - fac * b for a, b in zip(rows[k], rows[col])]
    sol = {i: rows[k][-1] for k, i in enumerate(idx)}
    assert all(v.denominator == 1 for v in sol.values())
    return {i: int(v) for i, v in sol.items()}


@pytest.mark.parametrize("n", [2, 3, 7, 12, 24, 36, 50])
def test_tables_match_linear_algebra(n):
    assert f_table(n).values == _gauss_solve(n, -1, -1)
    assert g_table(n).values == _gauss_solve(n, 1, 0)


def test_mobius_values():
    assert [mobius(k) for k in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]
    assert mobius(30) == -1 and mobius(210) == 1 and mobius(49) == 0
    with pytest.raises(GaussCoverError):
        mobius(0)


def test_mertens_values():
    assert [mertens(k) for k in range(1, 11)] == [1, 0, -1, -1, -2, -1, -2, -2, -2, -1]


def test_g_is_mobius_of_quotient():
    for n in range(2, 201):
        g = g_table(n)
        for i in range(2, n + 1):
            assert g[i] == (mobius(n // i) if n % i == 0 else 0)


def test_f_is_minus_mertens_of_quotient():
    for n in range(2, 201):
        f = f_table(n)
        for r in range(2, n + 1):
            assert f[r] == -mertens(n // r)


@given(st.integers(2, 120))
def test_defining_sums(n):
    f, g = f_table(n), g_table(n)
    assert f[n] == -1 and g[n] == 1
    for r in range(2, n + 1):
        assert f.class_sum(r) == -1
        assert g.class_sum(r) == (1 if r == n else 0)


def test_weights():
    assert f_table(10).weight == 8
    assert g_table(12).weight == 4
    assert f_table(2).weight == 1


def test_verify_tables():
    rep = verify_tables(200)
    assert rep.ok, str(rep)
    assert rep.checked == 4 * sum(n - 1 for n in range(2, 201))
    assert str(rep).startswith("ok")


def test_bad_tables():
    with pytest.raises(GaussCoverError):
        f_table(1)
    with pytest.raises(GaussCoverError):
        g_table(0)
    with pytest.raises(GaussCoverError):
        CoefficientTable(3, {2: 1})


def test_format_table():
    assert format_table(g_table(10)) == (
        "2 -1\n3 0\n4 0\n5 -1\n6 0\n7 0\n8 0\n9 0\n10 1\nsupport 2 5 10\n")
