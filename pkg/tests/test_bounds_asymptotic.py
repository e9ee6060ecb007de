import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from dscode import bounds_asymptotic as ba


@given(st.floats(0.0, 1.0))
def test_inverse_entropy(y):
    x = ba.inv_entropy(y)
    assert 0.0 <= x <= 0.5
    assert abs(ba.entropy(x) - y) < 1e-9


def test_entropy_domain():
    assert ba.entropy(0.5) == 1.0
    with pytest.raises(ba.DomainError):
        ba.entropy(1.5)


def _exponent(R, tau, iota):
    return ba.entropy(iota) + iota * ba.LOG3 + (1 - R) * ba.entropy((tau - iota) / (1 - R))


def test_iota_star_maximizes():
    assert ba.iota_star(0.3, 0.0) == pytest.approx(0.0, abs=1e-12)
    R, tau = 0.0, 0.1
    best = ba.iota_star(R, tau)
    grid = np.linspace(0, tau, 2001)
    assert _exponent(R, tau, best) >= max(_exponent(R, tau, i) for i in grid) - 1e-9
    for R, tau in [(0.2, 0.05), (0.5, 0.1), (0.1, 0.2)]:
        i = ba.iota_star(R, tau)
        h = 1e-6
        slope = (_exponent(R, tau, i + h) - _exponent(R, tau, i - h)) / (2 * h)
        assert abs(slope) < 1e-6


def test_nondegenerate_rate():
    assert ba.hamming_nondeg_rate(1e-6) == pytest.approx(1.0, abs=1e-4)
    rates = [ba.hamming_nondeg_rate(d) for d in (1e-6, 1e-3, 0.01, 0.1, 0.2)]
    assert all(a > b for a, b in zip(rates, rates[1:]))
    R = ba.hamming_nondeg_rate(0.1)
    assert abs(ba._nondeg_residual(R, 0.1)) < 1e-9
    assert 0 < R < ba.hamming_deg_rate(0.1)


def test_degenerate_hamming_and_lp1():
    assert ba.hamming_deg_rate(0.0) == 1.0
    third = ba.hamming_deg_rate(1 / 3)
    assert third == pytest.approx(1 - ba.LOG3 / 6 - ba.entropy(1 / 6), abs=1e-12)
    assert ba.lp1_rate(0.0) == pytest.approx(1.0, abs=1e-9)
    # the closed form crosses zero a little after the end of its stated domain
    end = ba.lp1_rate(ba.LP1_DELTA_MAX)
    assert 0 < end < 3e-3
    w = 0.75 - 0.317 / 2 - math.sqrt(3 * 0.317 * 0.683) / 2
    assert ba.entropy(w) + w * ba.LOG3 - 1 < 0
    with pytest.raises(ba.DomainError):
        ba.lp1_rate(0.4)


def test_gv_stabilizer():
    assert ba.gv_stabilizer(1.0) == 0.0
    d = ba.gv_stabilizer(0.0)
    assert abs(ba.entropy(d) + d * ba.LOG3 - 1) < 1e-9
    Rs = np.linspace(0, 1, 11)
    vals = [ba.gv_stabilizer(R) for R in Rs]
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_gv_ds_and_rho_star():
    for R in (0.1, 0.5, 0.9):
        assert ba.gv_ds(R, 0.0) < ba.gv_stabilizer(R)
        assert ba.gv_ds(R, 1 - R) <= ba.gv_stabilizer(R) + 1e-12
    r0 = ba.rho_star(0.0)
    assert 0 < r0 < 1
    assert ba.rho_star(0.99) < 0.05
    assert ba.gv_ds(0.3, ba.rho_star(0.3)) == pytest.approx(ba.gv_stabilizer(0.3), abs=1e-8)


def test_curves():
    pts = ba.curve("singleton", 3)
    assert [p[1] for p in pts] == [1.0, 0.5, 0.0]
    with pytest.raises(ba.DomainError):
        ba.curve("nope", 5)
    assert all(math.isfinite(v) for _, v in ba.curve("lp1", 7))
