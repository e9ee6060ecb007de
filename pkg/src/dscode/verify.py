"""Self-check suites run by ``dscode verify``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from . import bounds_asymptotic as ba
from .bounds_finite import hamming_nondeg_max_k, hamming_poly, hamming_unrestricted_max_k
from .construction import builtin_sm_15_3, golay_css, repetition_sm, simplex_css
from .enumerators import (brute_force_dual, css_distance_scan, distance_from_tables, enumerate_code,
                          enumerate_dual, macwilliams, min_distance_direct)
from .ensemble import EnsembleParams, consistency_check, random_ds_code
from .gf4 import tau_map
from .krawtchouk import check_identities, evaluate_2d
from .lp import lp_feasible
from .syndrome_sim import MeasurementModel, average_over_codewords, exact_Pse, p_err, p_err_closed, repetition_oracle

GOLAY_DISTANCES = (3, 4, 4, 4, 5, 5, 5, 6, 6, 7)
SUITES = ("identities", "oracles", "reference-values", "asymptotics")


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def hamming_poly_vanishing(nmax: int = 12, mmax: int = 8, tmax: int = 3) -> tuple[bool, str]:
    bad = []
    for n in range(1, nmax + 1):
        for m in range(mmax + 1):
            for t in range(1, tmax + 1):
                for lam in sorted({1, t + 1}):
                    poly = hamming_poly(n, m, t, lam)
                    vals = evaluate_2d(poly.coeffs, n, m)
                    if vals != poly.values or any(
                        vals[x][y] != 0 for x in range(n + 1) for y in range(m + 1) if x + y >= 2 * t + 1
                    ):
                        bad.append((n, m, t, lam))
    return not bad, f"{len(bad)} failing grids" if bad else "all grids vanish"


def identities() -> list[Check]:
    out = [Check(f"krawtchouk {name}", ok) for name, ok in check_identities().items()]
    ok, detail = hamming_poly_vanishing()
    out.append(Check("hamming polynomial vanishes for x + y >= 2t + 1", ok, detail))
    pm = Fraction(1, 7)
    out.append(Check("p_err odd-sum equals closed form, w <= 64",
                     all(p_err(w, pm) == p_err_closed(w, pm) for w in range(65))))
    return out


def code_zoo(count: int = 50, seed: int = 2024):
    """Random DS codes with n <= 6, m <= 4, r <= 2."""
    rng = np.random.default_rng(seed)
    codes = []
    while len(codes) < count:
        n = int(rng.integers(1, 7))
        m = int(rng.integers(1, min(4, n) + 1))
        r = int(rng.integers(0, 3))
        codes.append(random_ds_code(n, m, r, rng))
    return codes


def oracles() -> list[Check]:
    zoo = code_zoo()
    dual_ok = code_ok = dist_ok = 0
    for code in zoo:
        B, Bd = enumerate_code(code), enumerate_dual(code)
        dual_ok += Bd == brute_force_dual(code)
        code_ok += macwilliams(Bd) == B and macwilliams(B) == Bd
        dist_ok += distance_from_tables(B, Bd) == min_distance_direct(code)[0]
    N = len(zoo)
    out = [
        Check("enumerate_dual equals brute force", dual_ok == N, f"{dual_ok}/{N} codes"),
        Check("MacWilliams round trip", code_ok == N, f"{code_ok}/{N} codes"),
        Check("distance from tables equals direct scan", dist_ok == N, f"{dist_ok}/{N} codes"),
    ]
    params = [EnsembleParams(n, k, r) for n in range(1, 7) for k in range(n + 1) for r in range(n - k + 1)]
    good = sum(consistency_check(p) for p in params)
    out.append(Check("ensemble averages satisfy MacWilliams", good == len(params), f"{good}/{len(params)}"))
    sm = builtin_sm_15_3()
    model = MeasurementModel(0.02, (4,))
    a, b = exact_Pse(sm, model, exact=False), average_over_codewords(sm, model)
    out.append(Check("P_se independent of the transmitted codeword",
                     abs(a.P_se - b.P_se) <= 1e-15 and abs(a.P_SBER - b.P_SBER) <= 1e-15,
                     f"{a.P_se:.6e} vs {b.P_se:.6e}"))
    return out


def reference_values() -> list[Check]:
    out = []
    got = tuple(css_distance_scan(golay_css(r).hprime, 23, 11) for r in range(10))
    out.append(Check("Golay CSS DS distances for r = 0..9", got == GOLAY_DISTANCES, f"got {list(got)}"))
    v = lp_feasible(7, 1, 3, 6)
    out.append(Check("LP at (7, 1, 3, 6) is feasible", v.feasible, f"{v.status}, exact witness"))
    out.append(Check("tau(XYZII) = 1 w^2 w 0 0", tau_map("XYZII").to_string() == "1Ww00"))
    g = builtin_sm_15_3().generator
    out.append(Check("[15,3] SM code first row",
                     "".join(map(str, g[0])) == "100000111111000"))
    for a in (3, 4, 5):
        hb = simplex_css(a).hb
        xor = set()
        for c in range(1, 1 << a):
            w = 0
            for i in range(a):
                if (c >> i) & 1:
                    w ^= hb[i]
            xor.add(w.bit_count())
        out.append(Check(f"simplex block a={a}: all combinations have weight {2 ** (a - 1)}",
                         xor == {2 ** (a - 1)}, f"weights {sorted(xor)}"))
    grid = [Fraction(i, 1000) for i in range(1, 51)]
    c, rep = builtin_sm_15_3(), repetition_sm(3, 5)
    worse = [pm for pm in grid
             if not exact_Pse(c, MeasurementModel(pm, (4,))).P_se < exact_Pse(rep, MeasurementModel(pm, (4,))).P_se]
    out.append(Check("[15,3] code beats 5-fold repetition on p_m = 0.001..0.05", not worse,
                     f"{len(worse)} grid points fail"))
    dev = max(abs(float(exact_Pse(rep, MeasurementModel(pm, (4,))).P_se) - float(repetition_oracle(p_err(4, pm))))
              for pm in grid)
    out.append(Check("repetition P_se equals the majority-vote formula", dev <= 1e-12, f"max dev {dev:.1e}"))
    diff = [n for n in range(36, 61) if hamming_unrestricted_max_k(n, 7) != hamming_nondeg_max_k(n, 7)]
    out.append(Check("d = 7 Hamming bounds coincide for 36 <= n <= 60", not diff, f"differ at {diff}"))
    return out


def asymptotics() -> list[Check]:
    Rs = [i / 10 for i in range(1, 10)]
    gaps = [ba.gv_stabilizer(R) - ba.gv_ds(R, 0.0) for R in Rs]
    out = [Check("gv_ds(R, 0) < gv(R) for R = 0.1..0.9", all(g > 0 for g in gaps), f"min gap {min(gaps):.3g}")]
    rs = [ba.rho_star(R) for R in Rs]
    out.append(Check("rho*(R) < 1 - R", all(r < 1 - R for r, R in zip(rs, Rs)),
                     ", ".join(f"{r:.4f}" for r in rs)))
    deltas = np.linspace(0.01, 0.3, 59)
    below = [d for d in deltas if ba.hamming_nondeg_rate(d) < min(ba.hamming_deg_rate(d), ba.lp1_rate(d))]
    out.append(Check("nondegenerate Hamming rate below degenerate Hamming and LP1 somewhere", bool(below),
                     f"on delta in [{min(below):.3f}, {max(below):.3f}]" if below else "nowhere"))
    res = [abs(ba._nondeg_residual(ba.hamming_nondeg_rate(d), d)) for d in deltas]
    res += [abs(ba._q_entropy(ba.gv_stabilizer(R)) - (1 - R)) for R in Rs]
    res += [abs(ba.entropy(ba.inv_entropy(y)) - y) for y in np.linspace(0.05, 0.95, 19)]
    out.append(Check("root residuals below 1e-9", max(res) < 1e-9, f"max {max(res):.1e}"))
    return out


RUNNERS: dict[str, Callable[[], list[Check]]] = {
    "identities": identities,
    "oracles": oracles,
    "reference-values": reference_values,
    "asymptotics": asymptotics,
}


def run_suite(name: str) -> list[Check]:
    if name not in RUNNERS:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return RUNNERS[name]()
