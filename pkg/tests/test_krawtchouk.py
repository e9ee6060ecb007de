from fractions import Fraction
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dscode.krawtchouk import (alpha, alpha_sum, beta, binom, binom_kraw_sum, check_identities, evaluate_2d,
                               expand_2d, kraw, kraw_table)


def gen_kraw(n, q, x):
    """Coefficients of (1 + (q-1) z)^(n-x) (1 - z)^x."""
    poly = np.array([1], dtype=object)
    for _ in range(n - x):
        poly = np.convolve(poly, np.array([1, q - 1], dtype=object))
    for _ in range(x):
        poly = np.convolve(poly, np.array([1, -1], dtype=object))
    return list(poly)


@pytest.mark.parametrize("q", [2, 4])
@pytest.mark.parametrize("n", [0, 1, 5, 10])
def test_against_generating_function(n, q):
    for x in range(n + 1):
        assert [kraw(i, x, n, q) for i in range(n + 1)] == gen_kraw(n, q, x)


def test_examples():
    assert kraw(0, 5, 7, 4) == 1
    assert kraw(2, 0, 7, 4) == 189
    assert sum(kraw(3, i, 7, 2) * kraw(i, 3, 7, 2) for i in range(8)) == 2 ** 7


def test_domain_errors():
    with pytest.raises(ValueError):
        kraw(1, 8, 7, 4)
    with pytest.raises(ValueError):
        kraw(8, 1, 7, 4)
    assert binom(3, -1) == 0 and binom(3, Fraction(1, 2)) == 0 and binom(-1, 0) == 0


def test_alpha_beta_edges():
    assert alpha(0, 0, 0, 0, 5) == 1
    assert alpha(0, 2, 1, 0, 5) == 0
    assert beta(0, 0, 0, 4) == 1
    assert beta(3, 1, 1, 4) == 0


@pytest.mark.parametrize("n", [1, 4, 8])
def test_quaternary_product_expansion(n):
    K = kraw_table(n, 4)
    for g in range(min(n, 3) + 1):
        for h in range(min(n, 3) + 1):
            for x in range(n + 1):
                rhs = sum(alpha_sum(q, g, h, n) * K[q][x] for q in range(n + 1))
                assert K[g][x] * K[h][x] == rhs


@pytest.mark.parametrize("m", [1, 3, 6])
def test_binary_product_expansion(m):
    K = kraw_table(m, 2)
    for a in range(m + 1):
        for b in range(m + 1):
            for y in range(m + 1):
                assert K[a][y] * K[b][y] == sum(beta(c, a, b, m) * K[c][y] for c in range(m + 1))


def test_binom_kraw_sum():
    assert binom_kraw_sum(0, 5, 0) == 1
    assert binom_kraw_sum(4, 9, 0) == 16
    assert binom_kraw_sum(5, 5, 2) == 0
    direct = sum(comb(3, j) * kraw(2, j, 7, 2) for j in range(4))
    assert binom_kraw_sum(3, 7, 2) == direct == 48


def test_expansion_basics():
    n, M = 3, 2
    ones = [[1] * (M + 1) for _ in range(n + 1)]
    c = expand_2d(ones, n, M)
    assert c[0][0] == 1 and sum(v for row in c for v in row) == 1
    k1 = [[kraw(1, x, n, 4)] * (M + 1) for x in range(n + 1)]
    c = expand_2d(k1, n, M)
    assert c[1][0] == 1 and sum(abs(v) for row in c for v in row) == 1


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-50, 50), min_size=20, max_size=20))
def test_expansion_round_trip(vals):
    n, M = 4, 3
    table = [vals[4 * x:4 * x + 4] for x in range(n + 1)]
    assert evaluate_2d(expand_2d(table, n, M), n, M) == table


def test_identity_suite():
    res = check_identities()
    assert res and all(res.values()), res
