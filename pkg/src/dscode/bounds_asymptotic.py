"""Asymptotic rate/distance curves (binary64 arithmetic).

Upper bounds: nondegenerate Hamming (implicit equation in R), degenerate
Hamming, LP1 and Singleton.  Lower bounds: quantum GV and its DS analogue.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq, minimize_scalar

LOG3 = math.log2(3)
XTOL = 1e-15


class DomainError(ValueError):
    """Argument outside the domain where the curve is defined."""


@dataclass(frozen=True)
class RatePoint:
    delta: float
    R: float
    curve: str


def entropy(x: float) -> float:
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"entropy argument {x} outside [0, 1]")
    if x == 0.0 or x == 1.0:
        return 0.0
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


def inv_entropy(y: float) -> float:
    """The x in [0, 1/2] with H(x) = y."""
    if not 0.0 <= y <= 1.0:
        raise DomainError(f"inverse entropy argument {y} outside [0, 1]")
    if y == 0.0:
        return 0.0
    if y == 1.0:
        return 0.5
    return brentq(lambda x: entropy(x) - y, 0.0, 0.5, xtol=1e-300, rtol=4 * np.finfo(float).eps, maxiter=500)


def _q_entropy(x: float) -> float:
    """H(x) + x log2 3, the exponent of the number of weight-xn vectors over GF(4)."""
    return entropy(x) + x * LOG3


def iota_star(R: float, tau: float) -> float:
    """Maximizer over iota of H(iota) + iota log2 3 + (1-R) H((tau - iota)/(1-R))."""
    if not (0.0 <= R <= 1.0 and 0.0 <= tau <= 1.0):
        raise DomainError("need 0 <= R, tau <= 1")
    disc = 16 - 8 * R - 8 * tau + R * R - 4 * R * tau + 4 * tau * tau
    assert disc >= 0, "negative discriminant"
    v = 1 - R / 4 + tau / 2 - math.sqrt(disc) / 4
    assert v <= tau + 1e-15, "iota* exceeds tau"
    return max(0.0, min(v, tau))


def nondeg_exponent(R: float, tau: float, iota: float) -> float:
    return _q_entropy(iota) + (1 - R) * entropy((tau - iota) / (1 - R))


def _nondeg_residual(R: float, delta: float) -> float:
    tau = delta / 2
    it = iota_star(R, tau)
    arg = (tau - it) / (1 - R)
    if arg > 1:
        raise DomainError("entropy argument above 1")
    return _q_entropy(it) + (1 - R) * entropy(arg) + R - 1


def hamming_nondeg_rate(delta: float) -> float:
    """Root R of the asymptotic nondegenerate Hamming equation."""
    if delta < 0:
        raise DomainError("delta must be >= 0")
    if delta == 0:
        return 1.0
    # residual is -(1-R)(1 - ...) < 0 near R = 0 for small delta; scan for a sign change
    # the root approaches 1 as delta -> 0, so refine geometrically near R = 1
    grid = np.concatenate([np.linspace(0.0, 1.0, 2001)[:-1], 1 - np.logspace(-4, -13, 10)])
    vals = []
    for R in grid:
        try:
            vals.append(_nondeg_residual(R, delta))
        except DomainError:
            vals.append(math.nan)
    vals = np.array(vals)
    sign = np.sign(vals)
    idx = [i for i in range(len(grid) - 1) if np.isfinite(vals[i]) and np.isfinite(vals[i + 1]) and sign[i] != sign[i + 1]]
    if vals[0] == 0:
        return 0.0
    if not idx:
        raise DomainError(f"no sign change of the Hamming equation for delta={delta}")
    i = idx[-1]
    return brentq(_nondeg_residual, grid[i], grid[i + 1], args=(delta,), xtol=XTOL)


def hamming_deg_rate(delta: float) -> float:
    if not 0.0 <= delta <= 1 / 3 + 1e-15:
        raise DomainError("degenerate Hamming curve is defined for 0 <= delta <= 1/3")
    return 1 - delta / 2 * LOG3 - entropy(delta / 2)


LP1_DELTA_MAX = 0.3152


def lp1_rate(delta: float) -> float:
    if not 0.0 <= delta <= LP1_DELTA_MAX:
        raise DomainError(f"LP1 curve is defined for 0 <= delta <= {LP1_DELTA_MAX}")
    w = 0.75 - delta / 2 - math.sqrt(3 * delta * (1 - delta)) / 2
    return entropy(w) + w * LOG3 - 1


def singleton_rate(delta: float) -> float:
    if not 0.0 <= delta <= 0.5:
        raise DomainError("Singleton asymptote needs 0 <= delta <= 1/2")
    return 1 - 2 * delta


def gv_stabilizer(R: float) -> float:
    """delta with H(delta) + delta log2 3 = 1 - R, on the branch below 3/4."""
    if not 0.0 <= R <= 1.0:
        raise DomainError("need 0 <= R <= 1")
    if R == 1.0:
        return 0.0
    return brentq(lambda d: _q_entropy(d) - (1 - R), 0.0, 0.75, xtol=XTOL)


def _gv_inner(iota: float, mu: float, variant: str) -> float:
    if variant == "exponent":
        u = 1 - _q_entropy(iota) / mu
        return iota + mu * inv_entropy(min(1.0, max(0.0, u)))
    arg = iota * (1 + LOG3) / mu
    return iota + inv_entropy(min(1.0, max(0.0, 1 - entropy(min(1.0, arg)))))


def _gv_inner_range(mu: float, variant: str) -> float:
    if variant == "exponent":
        # need H(iota) + iota log2 3 <= mu
        if mu >= 2:
            return 0.75
        return brentq(lambda i: _q_entropy(i) - mu, 0.0, 0.75, xtol=XTOL)
    return min(1.0, mu / (1 + LOG3))


def gv_ds_inner(R: float, rho: float, variant: str = "exponent") -> tuple[float, float]:
    """(min value, minimizing iota) of the inner minimization."""
    mu = 1 - R + rho
    if mu <= 0:
        raise DomainError("empty feasible iota set")
    top = _gv_inner_range(mu, variant)
    grid = np.linspace(0.0, top, 801)
    vals = np.array([_gv_inner(i, mu, variant) for i in grid])
    k = int(np.argmin(vals))
    lo, hi = grid[max(k - 1, 0)], grid[min(k + 1, len(grid) - 1)]
    best_i, best_v = grid[k], vals[k]
    if hi > lo:
        res = minimize_scalar(lambda i: _gv_inner(i, mu, variant), bounds=(lo, hi), method="bounded",
                              options={"xatol": 1e-11})
        if res.fun < best_v:
            best_i, best_v = float(res.x), float(res.fun)
    return best_v, best_i


def gv_ds(R: float, rho: float, variant: str = "exponent") -> float:
    """DS Gilbert-Varshamov distance min{ delta_GV(R), inner minimum }.

    ``variant="exponent"`` uses iota + mu H^-1(1 - (H(iota) + iota log2 3)/mu),
    which follows from the average dual enumerator exponent; ``"printed"`` uses
    iota + H^-1(1 - H(iota (1 + log2 3)/mu)).  mu = 1 - R + rho.
    """
    if not 0.0 <= R <= 1.0 or rho < 0 or rho > 1 - R + 1e-12:
        raise DomainError("need 0 <= rho <= 1 - R")
    return min(gv_stabilizer(R), gv_ds_inner(R, rho, variant)[0])


def rho_star(R: float, variant: str = "exponent", tol: float = 1e-9) -> float:
    """Smallest rho with gv_ds(R, rho) reaching the stabilizer GV distance."""
    if not 0.0 <= R < 1.0:
        raise DomainError("need 0 <= R < 1")
    target = gv_stabilizer(R) - tol
    ok = lambda rho: gv_ds_inner(R, rho, variant)[0] >= target
    hi = 1 - R
    if not ok(hi):
        raise AssertionError(f"rho* not found below 1 - R for R={R}")
    lo = 0.0
    if ok(lo):
        return 0.0
    while hi - lo > 1e-10:
        mid = (lo + hi) / 2
        if ok(mid):
            hi = mid
        else:
            lo = mid
    assert hi < 1 - R, "rho* is not below 1 - R"
    return hi


CURVES = ("hamming-nondeg", "hamming-deg", "lp1", "singleton", "gv", "gv-ds", "rho-star")


def curve(name: str, grid: int, rho: float = 0.0) -> list[tuple[float, float]]:
    """(abscissa, value) samples of one curve; abscissa is delta or R."""
    if grid < 2:
        raise DomainError("grid needs at least 2 points")
    if name == "hamming-nondeg":
        xs = np.linspace(0.0, 0.3, grid)
        f = hamming_nondeg_rate
    elif name == "hamming-deg":
        xs, f = np.linspace(0.0, 1 / 3, grid), hamming_deg_rate
    elif name == "lp1":
        xs, f = np.linspace(0.0, LP1_DELTA_MAX, grid), lp1_rate
    elif name == "singleton":
        xs, f = np.linspace(0.0, 0.5, grid), singleton_rate
    elif name == "gv":
        xs, f = np.linspace(0.0, 1.0, grid), gv_stabilizer
    elif name == "gv-ds":
        xs = np.linspace(0.0, 1.0 - rho, grid)
        f = lambda R: gv_ds(R, rho)
    elif name == "rho-star":
        xs = np.linspace(0.0, 1.0, grid, endpoint=False)
        f = rho_star
    else:
        raise DomainError(f"unknown curve {name!r}")
    out = []
    for x in xs:
        try:
            out.append((float(x), float(f(float(x)))))
        except DomainError:
            continue
    return out
