"""Exact Krawtchouk polynomials and two-variable Krawtchouk expansions.

Everything here is integer or Fraction arithmetic; no floats.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

Table = list[list[Fraction]]


def binom(a, b) -> int:
    """C(a, b), zero when b is negative, larger than a, or not an integer."""
    if isinstance(b, Fraction):
        if b.denominator != 1:
            return 0
        b = b.numerator
    elif not isinstance(b, int):
        if b != int(b):
            return 0
        b = int(b)
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


@lru_cache(maxsize=None)
def _kraw(i: int, x: int, n: int, q: int) -> int:
    return sum(
        (-1) ** j * (q - 1) ** (i - j) * comb(x, j) * comb(n - x, i - j)
        for j in range(0, min(i, x) + 1)
        if i - j <= n - x
    )


def kraw(i: int, x: int, n: int, q: int) -> int:
    """K_i(x; n, q) = sum_j (-1)^j (q-1)^(i-j) C(x, j) C(n-x, i-j)."""
    if n < 0 or not 0 <= x <= n:
        raise ValueError(f"need 0 <= x <= n, got x={x}, n={n}")
    if not 0 <= i <= n:
        raise ValueError(f"need 0 <= i <= n, got i={i}, n={n}")
    if q < 2:
        raise ValueError("alphabet size must be >= 2")
    return _kraw(i, x, n, q)


@lru_cache(maxsize=64)
def kraw_table(n: int, q: int) -> tuple[tuple[int, ...], ...]:
    """Rows K_i(0..n) for i = 0..n."""
    return tuple(tuple(_kraw(i, x, n, q) for x in range(n + 1)) for i in range(n + 1))


def alpha(x: int, g: int, h: int, w: int, n: int) -> int:
    """Coefficient of K_x(.; n, 4) in the product K_g K_h (one summand in w)."""
    e = 2 * x + 2 * w - g - h
    p = g + h - 2 * w - x
    if e < 0 or p < 0:
        # a negative power of two only appears together with a vanishing binomial
        if binom(x, e) * binom(n - x, w) * binom(e, x + w - h):
            raise ArithmeticError("non-integral alpha term")
        return 0
    return binom(x, e) * binom(n - x, w) * binom(e, x + w - h) * 2 ** p * 3 ** w


def alpha_sum(x: int, g: int, h: int, n: int) -> int:
    """sum over w of alpha(x, g, h, w)."""
    # alpha vanishes unless g + h - 2x <= 2w <= g + h - x
    lo = max(0, -((2 * x - g - h) // 2))
    hi = min(n - x, (g + h - x) // 2) if g + h >= x else -1
    return sum(alpha(x, g, h, w, n) for w in range(lo, hi + 1))


def beta(y: int, a: int, b: int, m: int) -> int:
    """Coefficient of K_y(.; m, 2) in the product K_a K_b."""
    if (a + b - y) % 2:
        return 0
    return binom(m - y, (a + b - y) // 2) * binom(y, (a - b + y) // 2)


def expand_2d(values: Sequence[Sequence], n: int, M: int, q1: int = 4, q2: int = 2) -> Table:
    """Coefficients f_ij with f(x, y) = sum f_ij K_i(x; n, q1) K_j(y; M, q2)."""
    if len(values) != n + 1 or any(len(row) != M + 1 for row in values):
        raise ValueError(f"expected a {(n + 1)}x{(M + 1)} table")
    Kx = kraw_table(n, q1)
    Ky = kraw_table(M, q2)
    # separable transform: first along y, then along x
    tmp = [[sum(values[x][y] * Ky[y][j] for y in range(M + 1)) for j in range(M + 1)] for x in range(n + 1)]
    scale = Fraction(1, q1 ** n * q2 ** M)
    return [
        [scale * sum(tmp[x][j] * Kx[x][i] for x in range(n + 1)) for j in range(M + 1)]
        for i in range(n + 1)
    ]


def evaluate_2d(coeffs: Sequence[Sequence], n: int, M: int, q1: int = 4, q2: int = 2) -> Table:
    """Values f(x, y) on the grid from expansion coefficients."""
    Kx = kraw_table(n, q1)
    Ky = kraw_table(M, q2)
    tmp = [[sum(coeffs[i][j] * Ky[j][y] for j in range(M + 1)) for y in range(M + 1)] for i in range(n + 1)]
    return [
        [sum(tmp[i][y] * Kx[i][x] for i in range(n + 1)) for y in range(M + 1)]
        for x in range(n + 1)
    ]


def binom_kraw_sum(m: int, n: int, u: int) -> int:
    """sum_j C(m, j) K_u(j; n, 2), checked against 2^m C(n-m, u)."""
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n")
    left = sum(comb(m, j) * kraw(u, j, n, 2) for j in range(m + 1))
    right = 2 ** m * binom(n - m, u)
    if left != right:
        raise ArithmeticError(f"identity fails at m={m}, n={n}, u={u}")
    return right


# -- identity checks ----------------------------------------------------------


def check_identities(nmax: int = 10, qs=(2, 4), imax: int = 4) -> dict[str, bool]:
    """Exhaustive checks of the standard Krawtchouk identities and product expansions."""
    ok = {
        "K0=1": True,
        "Kj(0)": True,
        "orthogonality": True,
        "binomial-weighted sum": True,
        "shifted binomial sum": True,
        "binary product expansion": True,
        "quaternary product expansion": True,
        "binomial-Krawtchouk sum": True,
    }
    for n in range(0, nmax + 1):
        for q in qs:
            K = kraw_table(n, q)
            for x in range(n + 1):
                ok["K0=1"] &= K[0][x] == 1
            for j in range(n + 1):
                ok["Kj(0)"] &= K[j][0] == (q - 1) ** j * comb(n, j)
            for r_ in range(n + 1):
                for s in range(n + 1):
                    tot = sum(K[r_][i] * K[i][s] for i in range(n + 1))
                    ok["orthogonality"] &= tot == (q ** n if r_ == s else 0)
            for i in range(n + 1):
                tot = sum(comb(n, j) * (q - 1) ** j * K[i][j] for j in range(n + 1))
                ok["binomial-weighted sum"] &= tot == (q ** n if i == 0 else 0)
            for j in range(n + 1):
                for x in range(n + 1):
                    tot = sum(binom(n - i, n - j) * K[i][x] for i in range(n + 1))
                    ok["shifted binomial sum"] &= tot == q ** j * binom(n - x, j)
        K2 = kraw_table(n, 2)
        K4 = kraw_table(n, 4)
        top = min(imax, n)
        for a in range(top + 1):
            for b in range(top + 1):
                coef = [beta(u, a, b, n) for u in range(n + 1)]
                for j in range(n + 1):
                    rhs = sum(coef[u] * K2[u][j] for u in range(n + 1))
                    ok["binary product expansion"] &= K2[a][j] * K2[b][j] == rhs
        for g in range(top + 1):
            for h in range(top + 1):
                coef = [alpha_sum(x, g, h, n) for x in range(n + 1)]
                for i in range(n + 1):
                    rhs = sum(coef[x] * K4[x][i] for x in range(n + 1))
                    ok["quaternary product expansion"] &= K4[g][i] * K4[h][i] == rhs
        for m in range(n + 1):
            for u in range(min(imax, n) + 1):
                try:
                    binom_kraw_sum(m, n, u)
                except ArithmeticError:
                    ok["binomial-Krawtchouk sum"] = False
    return ok
