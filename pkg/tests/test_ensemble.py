import itertools
import math
from fractions import Fraction

import numpy as np
import pytest

from dscode import gf2
from dscode.bounds_asymptotic import gv_stabilizer
from dscode.construction import DSCode, SMCode, StabilizerCheckMatrix
from dscode.ensemble import (EnsembleParams, asymptotic_exponents, avg_enumerators, consistency_check,
                             ensemble_counts, gaussian_binomial, random_code, sample_ensemble)
from dscode.enumerators import enumerate_code, enumerate_dual
from dscode.gf4 import PauliVector, trace_inner


def _brute_check_matrices(n, m):
    vecs = [PauliVector.from_symplectic(n, v) for v in range(1, 4 ** n)]
    out = []
    for rows in itertools.product(vecs, repeat=m):
        if gf2.rank(g.symplectic for g in rows) == m and all(trace_inner(a, b) == 0 for a in rows for b in rows):
            out.append(rows)
    return out


@pytest.mark.parametrize("n,m", [(1, 1), (2, 1), (2, 2), (3, 2)])
def test_ensemble_size_by_brute_force(n, m):
    Hs = _brute_check_matrices(n, m)
    c = ensemble_counts(EnsembleParams(n, n - m, 0))
    assert c.size_E == len(Hs)
    target = PauliVector.from_symplectic(n, 1)
    for b in range(1, 1 << m):
        hits = 0
        for H in Hs:
            acc = PauliVector.zero(n)
            for i in range(m):
                if (b >> i) & 1:
                    acc = acc + H[i]
            hits += acc == target
        assert hits == c.L


def test_counts_edge_cases():
    assert ensemble_counts(EnsembleParams(4, 4, 0)).size_E == 1
    for m in (1, 3, 4):
        full = ensemble_counts(EnsembleParams(m + 1, 1, m)).size_F
        assert full == math.prod(2 ** m - 2 ** u for u in range(m))
    assert gaussian_binomial(4, 2) == 35
    assert gaussian_binomial(3, 4) == 0


@pytest.mark.parametrize("params", [(3, 1, 1), (5, 2, 2), (4, 2, 0), (4, 4, 0), (6, 1, 3)])
def test_consistency(params):
    assert consistency_check(EnsembleParams(*params))


def test_totals():
    p = EnsembleParams(4, 1, 2)
    avg = avg_enumerators(p)
    assert avg.code.total() == 2 ** p.slen
    assert avg.dual.total() == 4 ** p.n


def test_exact_average_over_the_whole_ensemble():
    # (2, 1, 1): every H with one row, every nonzero 1 x 1 matrix A
    p = EnsembleParams(2, 1, 1)
    total = None
    Hs = _brute_check_matrices(2, 1)
    for H in Hs:
        code = DSCode(StabilizerCheckMatrix(H, 2), SMCode(np.array([[1]], dtype=np.uint8)))
        tab = np.array(enumerate_dual(code).counts, dtype=object)
        total = tab if total is None else total + tab
    avg = avg_enumerators(p).dual
    for i in range(3):
        for j in range(3):
            assert Fraction(total[i][j], len(Hs)) == avg[i, j]


def test_sampling_is_seeded_and_integral():
    p = EnsembleParams(3, 1, 1)
    a, b = sample_ensemble(p, 20, seed=5), sample_ensemble(p, 20, seed=5)
    assert a.code == b.code and a.dual == b.dual
    one = sample_ensemble(p, 1, seed=9)
    assert all(v.denominator == 1 for row in one.code + one.dual for v in row)
    assert sum(sum(row) for row in one.dual) == 4 ** 3
    with pytest.raises(ValueError):
        sample_ensemble(p, 0, seed=1)


def test_random_code_parameters():
    rng = np.random.default_rng(3)
    code = random_code(EnsembleParams(5, 2, 2), rng)
    assert (code.n, code.k, code.r, code.sm.rank_A) == (5, 2, 2, 2)


def test_exponents_track_the_closed_form():
    n, R, rho = 200, 0.25, 0.25
    k, r = int(R * n), int(rho * n)
    p = EnsembleParams(n, k, r)
    avg = avg_enumerators(p)
    for iota, xi in [(0.3, 0.2), (0.5, 0.4), (0.6, 0.5)]:
        i, j = int(iota * n), int(xi * n)
        e = asymptotic_exponents(R, rho, iota, xi)
        code = math.log2(avg.code[i, j]) / n
        dual = math.log2(avg.dual[i, j]) / n
        assert abs(code - e.b) < 0.05
        assert abs(dual - e.b_dual) < 0.05


def test_dual_exponent_vanishes_at_gv():
    for R in (0.1, 0.4, 0.7):
        e = asymptotic_exponents(R, 0.1, gv_stabilizer(R), 0.0)
        assert abs(e.b_dual_i0) < 1e-9


def test_parameter_validation():
    with pytest.raises(ValueError):
        EnsembleParams(3, 4, 0)
    with pytest.raises(ValueError):
        EnsembleParams(3, 1, 3)
