import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dscode.construction import StabilizerCheckMatrix, build_hds, golay_css, repetition_sm, simplex_css
from dscode.ensemble import random_ds_code
from dscode.enumerators import (SizeLimitError, brute_force_dual, css_distance_scan, distance_from_tables,
                                enumerate_code, enumerate_dual, macwilliams, min_distance, min_distance_direct)
from dscode.verify import code_zoo


def steane_ds(l=1):
    return build_hds(simplex_css(3).check_matrix(), repetition_sm(6, l))


def test_trivial_codes():
    empty = build_hds(StabilizerCheckMatrix([], 1))
    B, Bd = enumerate_code(empty), enumerate_dual(empty)
    assert B.counts == ((1,), (0,))
    assert Bd.counts == ((1,), (3,))
    assert brute_force_dual(empty) == Bd
    back = macwilliams(Bd)
    assert back[0, 0] == 1 and back.total() == 1


def test_steane_totals():
    B, Bd = enumerate_code(steane_ds()), enumerate_dual(steane_ds())
    assert B.total() == 64
    assert Bd.total() == 4 ** 7


def test_repetition_syndrome_weights():
    Bd = enumerate_dual(steane_ds(5))
    for i, j, v in Bd.nonzero():
        assert j % 5 == 0


def test_single_generator_code():
    code = build_hds(StabilizerCheckMatrix.parse(["XZ"]))
    assert enumerate_dual(code) == brute_force_dual(code)


def test_zero_syndrome_one_qubit():
    # m = 1 on n = 1: H = [Z], dual words (e, tr(e * Z)) tallied by hand
    code = build_hds(StabilizerCheckMatrix.parse(["Z"]))
    Bd = enumerate_dual(code)
    assert Bd.counts == ((1, 0), (1, 2))


def test_zoo_against_oracles():
    for code in code_zoo(count=20, seed=7):
        B, Bd = enumerate_code(code), enumerate_dual(code)
        assert Bd == brute_force_dual(code)
        assert macwilliams(Bd) == B
        assert macwilliams(B) == Bd
        assert Bd.total() == 4 ** code.n
        assert B.total() == 2 ** code.slen
        assert distance_from_tables(B, Bd) == min_distance_direct(code)[0]


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 32 - 1))
def test_random_codes_round_trip(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 6))
    code = random_ds_code(n, int(rng.integers(1, n + 1)), int(rng.integers(0, 3)), rng)
    B, Bd = enumerate_code(code), enumerate_dual(code)
    assert macwilliams(Bd) == B
    assert distance_from_tables(B, Bd) == min_distance_direct(code)[0]


def test_distances():
    # without repeated measurement a single data error plus one syndrome flip is undetectable
    assert min_distance(steane_ds()).d == 2
    rep = min_distance(steane_ds(2))
    assert rep.d == 3 and rep.degenerate is False
    assert distance_from_tables(enumerate_code(steane_ds(2)), enumerate_dual(steane_ds(2))) == 3
    for l in (2, 3, 4):
        assert min_distance(steane_ds(l)).d <= 3


def test_css_scan():
    n = 6
    assert css_distance_scan([1 << i for i in range(n)], n) == 2
    g0 = golay_css(0)
    assert css_distance_scan(g0.hprime, 23, g0.stabilizer_rows) == 3
    with pytest.raises(SizeLimitError):
        css_distance_scan([1], 40)


def test_css_scan_matches_generic_distance():
    css = simplex_css(3).ds_code()
    assert css_distance_scan(css.hprime, 7, css.stabilizer_rows) == min_distance(css.to_ds_code()).d


def test_macwilliams_rejects_non_integral():
    B = enumerate_code(steane_ds())
    bumped = type(B).from_table([[v + (1 if (i, j) == (1, 1) else 0) for j, v in enumerate(row)]
                                 for i, row in enumerate(B.counts)], B.n, B.m, B.r, B.side)
    with pytest.raises(ArithmeticError):
        macwilliams(bumped)
