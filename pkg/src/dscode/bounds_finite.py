"""Finite-length upper bounds on DS codes via two-variable Krawtchouk polynomials.

A bound polynomial f(x, y) = sum f_ij K_i(x; n, 4) K_j(y; m, 2) with f_ij >= 0,
f(x, 0) <= 0 for x >= d_D and f <= 0 outside the region A forces

    max{ f(0,0)/f_00, max_{1<=x<d_D} f(x,0) / min_{j>=1} f_xj } >= 4^n

for every code (only the first term is needed for nondegenerate codes).
All arithmetic here is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Sequence

from .krawtchouk import _kraw, alpha_sum, beta, binom, evaluate_2d, expand_2d

NO_CODE = -1
INF = float("inf")

Region = Callable[[int, int], bool]


def min_distance_region(d: int) -> Region:
    """A = {(i, j) : j >= 1, i + j <= d - 1}."""
    return lambda i, j: j >= 1 and i + j <= d - 1


def rectangle_region(t_data: int, t_syn: int) -> Region:
    """A = {(i, j) : i <= 2 t_data, 1 <= j <= 2 t_syn}."""
    return lambda i, j: i <= 2 * t_data and 1 <= j <= 2 * t_syn


class PolynomialError(ValueError):
    """A bound polynomial violates one of its hypotheses."""


@dataclass
class BoundPolynomial:
    n: int
    m: int
    coeffs: list[list[Fraction]]
    values: list[list[Fraction]]
    d_D: int
    region: Region = field(repr=False)
    label: str = ""

    @classmethod
    def from_coeffs(cls, coeffs, n, m, d_D, region, label="") -> BoundPolynomial:
        return cls(n, m, [list(r) for r in coeffs], evaluate_2d(coeffs, n, m), d_D, region, label)

    @classmethod
    def from_values(cls, values, n, m, d_D, region, label="") -> BoundPolynomial:
        return cls(n, m, expand_2d(values, n, m), [list(r) for r in values], d_D, region, label)

    def violations(self) -> list[str]:
        out = []
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c < 0:
                    out.append(f"negative coefficient f[{i}][{j}] = {c}")
        for x in range(self.d_D, self.n + 1):
            if self.values[x][0] > 0:
                out.append(f"f({x},0) = {self.values[x][0]} > 0 with x >= d_D")
        for x in range(self.n + 1):
            for y in range(1, self.m + 1):
                if not self.region(x, y) and self.values[x][y] > 0:
                    out.append(f"f({x},{y}) = {self.values[x][y]} > 0 outside the region")
        return out

    def check(self) -> None:
        bad = self.violations()
        if bad:
            raise PolynomialError("; ".join(bad[:5]))


@dataclass(frozen=True)
class BoundResult:
    value: Fraction | float
    admitted: bool
    witness: str
    terms: tuple = ()


def _bound_terms(f00, f_00, fx0: Sequence, minfx: Sequence, nondegenerate: bool):
    """Evaluate the max of the bound terms; returns (value, witness, terms)."""
    if f_00 == 0:
        raise PolynomialError("f_00 = 0: the bound is undefined")
    value = Fraction(f00) / f_00
    witness = "f(0,0)/f_00"
    terms = [("f(0,0)/f_00", value)]
    if nondegenerate:
        return value, witness, terms
    for x, (num, den) in enumerate(zip(fx0, minfx), start=1):
        if den is None:
            continue
        if den == 0:
            # all f_xj vanish: a positive f(x,0) gives no constraint at all
            if num <= 0:
                continue
            term = INF
        else:
            term = Fraction(num) / den
        terms.append((f"x={x}", term))
        if term > value:
            value, witness = term, f"x={x}"
    return value, witness, terms


def general_bound(poly: BoundPolynomial, nondegenerate: bool = False) -> BoundResult:
    poly.check()
    fx0 = [poly.values[x][0] for x in range(1, poly.d_D)]
    if poly.m >= 1:
        minfx = [min(poly.coeffs[x][1:]) for x in range(1, poly.d_D)]
    else:
        minfx = [None] * len(fx0)
    value, witness, terms = _bound_terms(poly.values[0][0], poly.coeffs[0][0], fx0, minfx, nondegenerate)
    return BoundResult(value, value >= 4 ** poly.n, witness, tuple(terms))


# -- Singleton ----------------------------------------------------------------


def singleton_max_k(n: int, d: int) -> int:
    if not 1 <= d <= n:
        raise ValueError("need 1 <= d <= n")
    k = n - 2 * (d - 1)
    return k if k >= 0 else NO_CODE


def singleton_polynomial(n: int, d: int, m: int) -> BoundPolynomial:
    if not 1 <= d <= n:
        raise ValueError("need 1 <= d <= n")
    c = comb(n, d - 1)
    coeffs = [[Fraction(binom(n - i, d - 1), c)] * (m + 1) for i in range(n + 1)]
    scale = Fraction(4 ** (n - d + 1) * 2 ** m, c)
    values = [[scale * binom(n - x, n - d + 1) if y == 0 else Fraction(0) for y in range(m + 1)] for x in range(n + 1)]
    return BoundPolynomial(n, m, coeffs, values, d, min_distance_region(d), "singleton")


def mds_violations(B, d: int) -> list[int]:
    """Data weights 1 <= x <= n-d-1 carrying stabilizer mass; empty for a Singleton-meeting code."""
    return [x for x in range(1, B.n - d) if B.row_sum(x) != 0]


# -- Hamming ------------------------------------------------------------------


def _partial_sums(n: int, t: int, i: int) -> list[int]:
    """S_u(i) = sum_{g<=u} K_g(i; n, 4) for u = 0..t."""
    out, acc = [], 0
    for g in range(t + 1):
        if g <= n:
            acc += _kraw(g, i, n, 4)
        out.append(acc)
    return out


def _hamming_coeff(n, m, t, lam, i, j, S=None) -> int:
    S = _partial_sums(n, t, i) if S is None else S
    inner = sum(_kraw(a, j, m, 2) * S[t - lam * a] for a in range(min(t, m) + 1) if t - lam * a >= 0)
    return inner * inner


def _hamming_value(n, m, t, lam, x, y) -> int:
    total = 0
    for a in range(t + 1):
        for b in range(t + 1):
            bt = beta(y, a, b, m)
            if not bt:
                continue
            s = sum(alpha_sum(x, g, h, n) for g in range(t - lam * a + 1) for h in range(t - lam * b + 1))
            total += bt * s
    return 4 ** n * 2 ** m * total


def hamming_poly(n: int, m: int, t: int, lam: int) -> BoundPolynomial:
    """The Hamming-type polynomial; coefficients from the squared sum, values from the closed form."""
    if not 1 <= lam <= t + 1:
        raise ValueError("need 1 <= lambda <= t + 1")
    coeffs = []
    for i in range(n + 1):
        S = _partial_sums(n, t, i)
        coeffs.append([Fraction(_hamming_coeff(n, m, t, lam, i, j, S)) for j in range(m + 1)])
    values = [[Fraction(_hamming_value(n, m, t, lam, x, y)) for y in range(m + 1)] for x in range(n + 1)]
    return BoundPolynomial(n, m, coeffs, values, 2 * t + 1, min_distance_region(2 * t + 1), f"hamming(lambda={lam})")


def hamming_bound_value(n: int, m: int, t: int, lam: int, nondegenerate: bool = False):
    """The bound terms for the Hamming polynomial without building the full grid."""
    d = 2 * t + 1
    f00 = _hamming_value(n, m, t, lam, 0, 0)
    f_00 = _hamming_coeff(n, m, t, lam, 0, 0)
    fx0 = [_hamming_value(n, m, t, lam, x, 0) for x in range(1, min(d, n + 1))]
    if m >= 1:
        minfx = []
        for x in range(1, min(d, n + 1)):
            S = _partial_sums(n, t, x)
            minfx.append(min(_hamming_coeff(n, m, t, lam, x, j, S) for j in range(1, m + 1)))
    else:
        minfx = [None] * len(fx0)
    return _bound_terms(f00, f_00, fx0, minfx, nondegenerate)


def _check_odd(d: int) -> int:
    if d < 1 or d % 2 == 0:
        raise ValueError("the Hamming bounds need an odd distance d = 2t + 1")
    return (d - 1) // 2


def _sphere(n: int, t: int) -> int:
    return sum(comb(n, i) * 3 ** i for i in range(min(t, n) + 1))


def hamming_nondeg_max_k(n: int, d: int) -> int:
    """Largest k with sum_{i<=t} C(n,i) 3^i sum_{j<=t-i} C(n-k, j) <= 2^(n-k)."""
    t = _check_odd(d)
    for k in range(n, -1, -1):
        m = n - k
        S = sum(comb(n, i) * 3 ** i * sum(comb(m, j) for j in range(t - i + 1)) for i in range(min(t, n) + 1))
        # 4^n <= 4^n 2^m / S
        if S <= 2 ** m:
            return k
    return NO_CODE


def hamming_unrestricted_max_k(n: int, d: int, with_details: bool = False):
    """Largest k for which min over lambda of the Hamming-polynomial bound reaches 4^n."""
    t = _check_odd(d)
    target = 4 ** n
    for k in range(n, -1, -1):
        m = n - k
        best = None
        for lam in range(1, t + 2):
            value, witness, _ = hamming_bound_value(n, m, t, lam)
            if best is None or value < best[0]:
                best = (value, witness, lam)
            if value < target:
                break
        if best[0] >= target:
            return (k, best) if with_details else k
    return (NO_CODE, None) if with_details else NO_CODE


def hybrid_poly(n: int, m: int, t_data: int, t_syn: int) -> BoundPolynomial:
    coeffs = []
    for i in range(n + 1):
        sd = sum(_kraw(g, i, n, 4) for g in range(min(t_data, n) + 1))
        row = []
        for j in range(m + 1):
            ss = sum(_kraw(a, j, m, 2) for a in range(min(t_syn, m) + 1))
            row.append(Fraction(sd * sd * ss * ss))
        coeffs.append(row)
    values = []
    for x in range(n + 1):
        fd = sum(alpha_sum(x, g, h, n) for g in range(t_data + 1) for h in range(t_data + 1))
        values.append([
            Fraction(4 ** n * 2 ** m * fd * sum(beta(y, u, v, m) for u in range(t_syn + 1) for v in range(t_syn + 1)))
            for y in range(m + 1)
        ])
    return BoundPolynomial(n, m, coeffs, values, 2 * t_data + 1, rectangle_region(t_data, t_syn), "hybrid")


def hybrid_hamming_max_k(n: int, t_data: int, t_syn: int) -> int:
    """Largest k with V_data * V_syn(n-k) <= 2^(n-k)."""
    vd = _sphere(n, t_data)
    for k in range(n, -1, -1):
        m = n - k
        vs = sum(comb(m, j) for j in range(min(t_syn, m) + 1))
        if vd * vs <= 2 ** m:
            return k
    return NO_CODE
