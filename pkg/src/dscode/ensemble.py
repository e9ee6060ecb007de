"""Average split weight enumerators of the random DS-code ensemble E_{n,k,r}.

The ensemble consists of all H_DS = [H I_m 0; 0 A^T I_r] with H an m x n
matrix of independent, pairwise commuting rows and A an m x r binary matrix
of rank r.  Averages are exact rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import gf2
from .bounds_asymptotic import LOG3, DomainError, entropy
from .construction import DSCode, SMCode, StabilizerCheckMatrix
from .enumerators import CODE, DUAL, SplitWeightEnumerator, enumerate_code, enumerate_dual, macwilliams
from .gf4 import PauliVector
from .krawtchouk import binom


@dataclass(frozen=True)
class EnsembleParams:
    n: int
    k: int
    r: int

    def __post_init__(self):
        if self.n < 1 or not 0 <= self.k <= self.n:
            raise ValueError("need n >= 1 and 0 <= k <= n")
        if not 0 <= self.r <= self.n - self.k:
            raise ValueError("need 0 <= r <= m = n - k")

    @property
    def m(self) -> int:
        return self.n - self.k

    @property
    def slen(self) -> int:
        return self.m + self.r


@dataclass(frozen=True)
class AvgEnumerator:
    code: SplitWeightEnumerator
    dual: SplitWeightEnumerator


def avg_enumerators(p: EnsembleParams) -> AvgEnumerator:
    n, m, r = p.n, p.m, p.r
    M = m + r
    B = [[Fraction(0)] * (M + 1) for _ in range(n + 1)]
    Bd = [[Fraction(0)] * (M + 1) for _ in range(n + 1)]
    B[0][0] = Bd[0][0] = Fraction(1)
    q = 4 ** n
    if m == 0:
        # no stabilizers: C_DS = {0}, the dual is all of GF(4)^n
        for i in range(1, n + 1):
            Bd[i][0] = Fraction(math.comb(n, i) * 3 ** i)
    else:
        for j in range(1, M + 1):
            B[0][j] = Fraction(binom(M, j) - binom(m, j) - binom(r, j), 2 ** m - 1)
        for i in range(1, n + 1):
            g = math.comb(n, i) * 3 ** i
            Bd[i][0] = Fraction(g * (q - 2 ** m + 1) * 2 ** m - g * q, (q - 1) * (2 ** m - 1) * 2 ** m)
            for j in range(1, M + 1):
                B[i][j] = Fraction(g * ((2 ** m - 2) * binom(M, j) + binom(m, j) + binom(r, j)),
                                   (q - 1) * (2 ** m - 1))
                Bd[i][j] = Fraction(
                    q * g * (binom(M, j) * 2 ** m - binom(r, j) * 2 ** m - binom(m, j) * 2 ** r),
                    (q - 1) * 2 ** M * (2 ** m - 1),
                )
    return AvgEnumerator(
        SplitWeightEnumerator.from_table(B, n, m, r, CODE),
        SplitWeightEnumerator.from_table(Bd, n, m, r, DUAL),
    )


@dataclass(frozen=True)
class EnsembleCounts:
    size_E: int  # |E_{n,m}|: matrices [H I_m]
    L: int  # codes of E_{n,m} containing a given (a, b), a != 0, b != 0
    size_F: int  # |F_{m,r}|: rank-r matrices A
    N: int  # |E_{n,k,r}|


def gaussian_binomial(m: int, r: int) -> int:
    if not 0 <= r <= m:
        return 0
    num = den = 1
    for u in range(r):
        num *= 2 ** (m - u) - 1
        den *= 2 ** (u + 1) - 1
    return num // den


def ensemble_counts(p: EnsembleParams) -> EnsembleCounts:
    n, m, r = p.n, p.m, p.r
    S = Fraction(1)
    T = 1
    for u in range(m):
        S *= Fraction(2 ** (2 * (n - u)) - 1, 2 ** (u + 1) - 1)
        T *= 2 ** m - 2 ** u
    P = Fraction(1)
    R = 1
    for u in range(1, m):
        P *= Fraction(2 ** (2 * (n - u)) - 1, 2 ** u - 1)
        R *= 2 ** m - 2 ** u
    size_F = 1
    for u in range(r):
        size_F *= 2 ** m - 2 ** u
    assert size_F == gaussian_binomial(m, r) * math.prod(2 ** r - 2 ** u for u in range(r))
    for name, v in (("S", S), ("P", P)):
        if v.denominator != 1:
            raise ArithmeticError(f"{name} is not an integer for n={n}, m={m}")
    size_E = int(S) * T
    return EnsembleCounts(size_E, int(P) * R, size_F, size_E * size_F)


def consistency_check(p: EnsembleParams) -> bool:
    """MacWilliams of the closed-form dual average equals the closed-form code average."""
    avg = avg_enumerators(p)
    back = macwilliams(avg.dual, require_integer=False)
    forth = macwilliams(avg.code, require_integer=False)
    return back.counts == avg.code.counts and forth.counts == avg.dual.counts


# -- sampling -----------------------------------------------------------------


def _random_check_matrix(n: int, m: int, rng: np.random.Generator) -> StabilizerCheckMatrix:
    """Uniform m x n matrix with independent commuting rows.

    Rows are drawn one at a time, uniformly over all vectors; a draw is
    rejected if it anticommutes with an earlier row or is dependent on them.
    The accepted choices at each step do not depend on the earlier rows, so
    the result is uniform over the ensemble.
    """
    rows: list[PauliVector] = []
    basis = gf2.RowBasis()
    while len(rows) < m:
        v = int(rng.integers(0, 1 << (2 * n)))
        e = PauliVector.from_symplectic(n, v)
        if any(_commutator(e, g) for g in rows):
            continue
        if not basis.add(v):
            continue
        rows.append(e)
    return StabilizerCheckMatrix(rows, n)


def _commutator(a: PauliVector, b: PauliVector) -> int:
    return ((a.x & b.z).bit_count() + (a.z & b.x).bit_count()) & 1


def _random_sm(m: int, r: int, rng: np.random.Generator) -> SMCode:
    while True:
        A = rng.integers(0, 2, size=(m, r), dtype=np.uint8)
        sm = SMCode(A, m)
        if sm.rank_A == r:
            return sm


def random_code(p: EnsembleParams, rng: np.random.Generator) -> DSCode:
    return DSCode(_random_check_matrix(p.n, p.m, rng), _random_sm(p.m, p.r, rng))


def random_ds_code(n: int, m: int, r: int, rng: np.random.Generator, full_rank: bool = False) -> DSCode:
    """Random DS code; A is any m x r matrix unless ``full_rank``."""
    H = _random_check_matrix(n, m, rng)
    if full_rank:
        return DSCode(H, _random_sm(m, r, rng))
    return DSCode(H, SMCode(rng.integers(0, 2, size=(m, r), dtype=np.uint8), m))


@dataclass(frozen=True)
class EmpiricalAverage:
    code: list[list[Fraction]]
    dual: list[list[Fraction]]
    count: int
    seed: int


def sample_ensemble(p: EnsembleParams, count: int, seed: int) -> EmpiricalAverage:
    if count < 1:
        raise ValueError("count must be >= 1")
    rng = np.random.default_rng(seed)
    n, M = p.n, p.slen
    sB = np.zeros((n + 1, M + 1), dtype=np.int64)
    sD = np.zeros((n + 1, M + 1), dtype=np.int64)
    for _ in range(count):
        code = random_code(p, rng)
        sB += np.array(enumerate_code(code).counts, dtype=np.int64)
        sD += np.array(enumerate_dual(code).counts, dtype=np.int64)
    to_q = lambda s: [[Fraction(int(v), count) for v in row] for row in s]
    return EmpiricalAverage(to_q(sB), to_q(sD), count, seed)


# -- asymptotics --------------------------------------------------------------


@dataclass(frozen=True)
class Exponents:
    b: float  # code side, iota > 0, xi > 0
    b_dual: float  # dual side, iota > 0, xi > 0
    b_dual_i0: float  # dual side at xi = 0
    b_0j: float  # code side at iota = 0
    dominant: bool  # the C(m+r, j) 2^m term dominates the dual numerator


def asymptotic_exponents(R: float, rho: float, iota: float, xi: float) -> Exponents:
    if not 0 <= R <= 1 or not 0 <= rho <= 1 - R:
        raise DomainError("need 0 <= R <= 1 and 0 <= rho <= 1 - R")
    mu = 1 - R + rho
    if not 0 <= iota <= 1 or not 0 <= xi <= mu:
        raise DomainError("need 0 <= iota <= 1 and 0 <= xi <= 1 - R + rho")
    q = entropy(iota) + iota * LOG3
    s = mu * entropy(xi / mu) if mu > 0 else 0.0
    t1 = s + 1 - R
    t2 = rho * entropy(xi / rho) + 1 - R if rho > 0 and xi <= rho else -math.inf
    t3 = (1 - R) * entropy(xi / (1 - R)) + rho if R < 1 and xi <= 1 - R else -math.inf
    return Exponents(
        b=q + s - 2,
        b_dual=q + s - mu,
        b_dual_i0=q - 1 + R,
        b_0j=s - 1 + R,
        dominant=t1 >= t2 and t1 >= t3,
    )
