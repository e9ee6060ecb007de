import math
from fractions import Fraction

import numpy as np
import pytest

from dscode.construction import SMCode, builtin_sm_15_3, repetition_sm
from dscode.syndrome_sim import (MLDecoder, MeasurementModel, average_over_codewords, comparison_table,
                                 exact_Pse, expand_weights, mc_Pse, ml_decode, p_err, p_err_closed,
                                 repetition_oracle, syndrome_code)


def test_p_err_examples():
    assert p_err(0, 0.3) == 0
    assert p_err(1, Fraction(1, 7)) == Fraction(1, 7)
    direct = 4 * 0.01 * 0.99 ** 3 + 4 * 0.01 ** 3 * 0.99
    assert p_err(4, 0.01) == pytest.approx(direct, rel=1e-14)
    assert p_err(4, 0.01) == pytest.approx((1 - 0.98 ** 4) / 2, rel=1e-12)
    for w in range(12):
        assert p_err(w, Fraction(1, 5)) == p_err_closed(w, Fraction(1, 5))
    with pytest.raises(ValueError):
        p_err(2, 1.5)


def test_weights_broadcast():
    assert expand_weights([4], 3) == (4, 4, 4)
    assert expand_weights([1, 2], 2) == (1, 2)
    with pytest.raises(ValueError):
        expand_weights([1, 2], 3)


def test_decoding_codewords_and_single_flips():
    sm = builtin_sm_15_3()
    probs = [0.01] * 15
    dec = MLDecoder(sm, probs)
    for h in range(8):
        c = sm.codeword(h)
        assert dec.decode(c) == h
        for b in range(15):
            assert dec.decode(c ^ (1 << b)) == h
    assert ml_decode(sm, sm.codeword(5), probs) == 5


def test_repetition_is_majority_vote():
    sm = repetition_sm(3, 5)
    dec = MLDecoder(sm, [0.05] * 15)
    rng = np.random.default_rng(0)
    for x in rng.integers(0, 1 << 15, size=300):
        x = int(x)
        votes = [sum((x >> (i + 3 * c)) & 1 for c in range(5)) for i in range(3)]
        assert dec.decode(x) == sum((v >= 3) << i for i, v in enumerate(votes))


def _brute_Pse(sm, probs):
    M = sm.length
    words = [sm.codeword(h) for h in range(1 << sm.m)]
    pse = 0.0
    for e in range(1 << M):
        pr = math.prod(p if (e >> b) & 1 else 1 - p for b, p in enumerate(probs))
        like = [math.prod(p if ((e ^ c) >> b) & 1 else 1 - p for b, p in enumerate(probs)) for c in words]
        if int(np.argmax(like)) != 0:
            pse += pr
    return pse


def test_exact_rate_against_brute_force():
    sm = SMCode(np.array([[1, 1, 0], [0, 1, 1], [1, 0, 1]], dtype=np.uint8))
    weights = (1, 2, 3, 4, 5, 6)
    model = MeasurementModel(0.03, weights)
    probs = [p_err(w, 0.03) for w in weights]
    assert exact_Pse(sm, model).P_se == pytest.approx(_brute_Pse(sm, probs), rel=1e-12)


def test_exact_modes():
    sm = syndrome_code("rep5")
    assert exact_Pse(sm, MeasurementModel(0, (4,))).P_se == 0
    ex = exact_Pse(sm, MeasurementModel(Fraction(1, 50), (4,)))
    fl = exact_Pse(sm, MeasurementModel(0.02, (4,)))
    assert ex.mode == "exact-rational" and fl.mode == "binary64"
    assert isinstance(ex.P_se, Fraction)
    assert float(ex.P_se) == pytest.approx(fl.P_se, rel=1e-12)
    q = p_err(4, Fraction(1, 50))
    assert ex.P_se == repetition_oracle(q)


@pytest.mark.parametrize("name", ["rep5", "builtin-15-3"])
def test_block_and_bit_rates(name):
    sm = syndrome_code(name)
    for pm in (0.005, 0.02, 0.05):
        res = exact_Pse(sm, MeasurementModel(pm, (4,)))
        assert res.P_SBER <= res.P_se <= sm.m * res.P_SBER
        avg = average_over_codewords(sm, MeasurementModel(pm, (4,)))
        assert avg.P_se == pytest.approx(res.P_se, rel=1e-10)


def test_monte_carlo():
    sm = builtin_sm_15_3()
    model = MeasurementModel(0.04, (4,))
    est = mc_Pse(sm, model, trials=200_000, seed=11)
    exact = exact_Pse(sm, model)
    assert abs(est.P_se - exact.P_se) <= 3 * est.radius_se
    assert abs(est.P_SBER - exact.P_SBER) <= 3 * est.radius_sber
    again = mc_Pse(sm, model, trials=200_000, seed=11)
    assert again.P_se == est.P_se
    one = mc_Pse(sm, model, trials=1, seed=2)
    assert one.P_se in (0.0, 1.0)


def test_comparison_table_and_limits():
    rows = comparison_table([Fraction(1, 1000), Fraction(1, 100)])
    assert rows[0]["P_se_sm15_3"] < rows[1]["P_se_sm15_3"]
    assert rows[0]["P_se_rep5"] < rows[1]["P_se_rep5"]
    assert all(r["P_se_sm15_3"] < r["P_se_rep5"] for r in rows)
    tiny = comparison_table([Fraction(1, 10 ** 6)])[0]
    assert tiny["P_se_sm15_3"] < 1e-12 and tiny["P_se_rep5"] < 1e-12
