from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dscode.construction import build_hds, repetition_sm, simplex_css
from dscode.enumerators import enumerate_code, enumerate_dual, min_distance
from dscode.lp import build_lp, enumerator_point, lp_feasible, solve_feasibility, verdict_to_distance_bound
from dscode.simplex import check_farkas, check_point, feasibility, phase_one

SINGLETON_VIOLATORS = [(5, 2, 3, 0), (6, 3, 3, 0), (7, 2, 4, 0), (4, 1, 3, 0), (5, 2, 3, 1)]


def test_tableau_shape():
    t = build_lp(7, 1, 3, 6)
    assert t.num_vars == 8 * 13 * 2
    total = [c for c in t.constraints if c.label == "sum Bd"][0]
    assert total.rhs == 4 ** 7


@pytest.mark.parametrize("l,r", [(1, 0), (2, 6)])
def test_true_enumerators_are_feasible_points(l, r):
    code = build_hds(simplex_css(3).check_matrix(), repetition_sm(6, l))
    d = min_distance(code).d
    t = build_lp(7, 1, d, r)
    point = enumerator_point(t, enumerate_code(code), enumerate_dual(code))
    assert t.satisfied_by(point) == []


def test_wrong_distance_is_caught_by_the_point_check():
    code = build_hds(simplex_css(3).check_matrix(), repetition_sm(6, 2))
    t = build_lp(7, 1, 4, 6)
    point = enumerator_point(t, enumerate_code(code), enumerate_dual(code))
    assert t.satisfied_by(point)


def test_steane_point_is_feasible():
    v = lp_feasible(7, 1, 3, 6)
    assert v.feasible
    t = build_lp(7, 1, 3, 6)
    point = {t.var(*name): val for name, val in v.witness.items()}
    assert t.satisfied_by(point) == []


@pytest.mark.parametrize("params", SINGLETON_VIOLATORS)
def test_singleton_violators_are_infeasible(params):
    n, k, d, r = params
    assert k > n - 2 * (d - 1)
    v = lp_feasible(*params)
    assert v.status == "infeasible"
    t = build_lp(*params)
    A, b = t.standard_form()
    assert check_farkas(A, b, [y for _, y in v.certificate])


def test_distance_one_is_feasible():
    for n, k, r in [(3, 1, 0), (4, 2, 1), (5, 0, 2)]:
        assert lp_feasible(n, k, 1, r).feasible


def test_monotone_in_d():
    verdicts = [lp_feasible(6, 1, d, 1).feasible for d in range(1, 7)]
    assert verdicts == sorted(verdicts, reverse=True)


def test_distance_scan():
    assert verdict_to_distance_bound(7, 1, 0) >= 2
    assert verdict_to_distance_bound(7, 1, 6) >= 3
    assert verdict_to_distance_bound(4, 4, 0) == 1


def test_guided_and_plain_agree():
    for params in [(5, 1, 3, 0), (5, 1, 2, 0), (6, 2, 3, 1)]:
        t = build_lp(*params)
        assert solve_feasibility(t, guided=False).status == solve_feasibility(t).status


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 32 - 1))
def test_phase_one_random_systems(seed):
    rng = np.random.default_rng(seed)
    m, n = int(rng.integers(1, 5)), int(rng.integers(1, 7))
    A = rng.integers(-3, 4, size=(m, n)).tolist()
    b = rng.integers(-5, 6, size=m).tolist()
    for res in (phase_one(A, b), phase_one(A, b, rule="bland"), feasibility(A, b)):
        if res.feasible:
            assert check_point(A, b, res.x)
        else:
            assert check_farkas(A, b, res.farkas)


def test_row_scaling_does_not_change_verdict():
    t = build_lp(5, 1, 3, 0)
    A, b = t.standard_form()
    scaled = [[7 * a for a in row] if i % 3 == 0 else row for i, row in enumerate(A)]
    sb = [7 * v if i % 3 == 0 else v for i, v in enumerate(b)]
    assert phase_one(A, b).feasible == phase_one(scaled, sb).feasible == feasibility(scaled, sb).feasible


def test_known_small_systems():
    assert phase_one([[1, 1]], [1]).feasible
    res = phase_one([[1, 1]], [-1])
    assert not res.feasible and check_farkas([[1, 1]], [-1], res.farkas)
    res = phase_one([[1, -1], [1, -1]], [1, 2])
    assert not res.feasible
    assert phase_one([[2, 0], [0, 3]], [1, 1]).x == [Fraction(1, 2), Fraction(1, 3)]
