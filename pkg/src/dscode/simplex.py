"""Phase-I simplex over exact rationals.

Decides feasibility of {x >= 0 : A x = b}.  Infeasibility comes with a Farkas
vector y (y^T A <= 0 and y^T b > 0), feasibility with an exact point.

Every row starts with an artificial variable.  Rows with zero right-hand side
are first "crashed": their artificial is pivoted out against the lowest-index
structural column with a nonzero entry.  Such pivots are degenerate, so they
keep the basis feasible whatever the sign of the pivot element.  Artificials
never re-enter afterwards.  Their columns are still carried along, since they
hold B^-1 and so give the dual vector at the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

try:  # much faster rationals when available
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction


@dataclass(frozen=True)
class PhaseOneResult:
    feasible: bool
    x: list[Fraction] | None
    farkas: list[Fraction] | None
    pivots: int


def _to_fraction(v) -> Fraction:
    return Fraction(int(v.numerator), int(v.denominator))


class _Tableau:
    def __init__(self, A, b):
        self.m = m = len(A)
        self.nvar = nvar = len(A[0]) if m else 0
        self.sign = [-1 if bi < 0 else 1 for bi in b]
        self.rows = [
            [_Q(s * a) for a in A[i]] + [_Q(1 if k == i else 0) for k in range(m)]
            for i, s in enumerate(self.sign)
        ]
        self.rhs = [_Q(s * bi) for s, bi in zip(self.sign, b)]
        self.width = nvar + m
        self.basis = [nvar + i for i in range(m)]
        # reduced costs of the objective sum(artificials); obj = -(current value)
        self.cost = [_Q(0)] * self.width
        for row in self.rows:
            for j in range(nvar):
                if row[j]:
                    self.cost[j] -= row[j]
        self.obj = -sum(self.rhs, _Q(0))
        self.pivots = 0

    def pivot(self, leave: int, enter: int) -> None:
        zero = _Q(0)
        prow = self.rows[leave]
        piv = prow[enter]
        if piv != 1:
            inv = 1 / piv
            prow = [v * inv if v else v for v in prow]
            self.rows[leave] = prow
            self.rhs[leave] = self.rhs[leave] * inv
        nz = [j for j in range(self.width) if prow[j] != zero]
        r = self.rhs[leave]
        for i, row in enumerate(self.rows):
            if i == leave:
                continue
            f = row[enter]
            if f != zero:
                for j in nz:
                    row[j] -= f * prow[j]
                if r:
                    self.rhs[i] -= f * r
        f = self.cost[enter]
        if f != zero:
            for j in nz:
                self.cost[j] -= f * prow[j]
            self.obj -= f * r
        self.basis[leave] = enter
        self.pivots += 1

    def crash(self) -> None:
        basic = set(self.basis)
        for i in range(self.m):
            if self.rhs[i] != 0 or self.basis[i] < self.nvar:
                continue
            row = self.rows[i]
            j = next((j for j in range(self.nvar) if row[j] and j not in basic), None)
            if j is not None:
                basic.discard(self.basis[i])
                basic.add(j)
                self.pivot(i, j)


def phase_one(A: Sequence[Sequence[int]], b: Sequence[int], max_pivots: int = 1_000_000,
              rule: str = "hybrid", degenerate_streak: int = 8, crash: bool = True) -> PhaseOneResult:
    """Feasibility of A x = b, x >= 0.

    ``rule="bland"`` always enters the lowest-index improving column.  The
    default ``"hybrid"`` prices by the most negative reduced cost but switches
    to Bland's rule after ``degenerate_streak`` consecutive degenerate pivots
    and stays there until the objective moves, so it cannot cycle either.
    """
    t = _Tableau(A, b)
    if crash:
        t.crash()
    zero = _Q(0)
    streak = 0
    while t.obj != 0:
        cost = t.cost
        if rule == "bland" or streak >= degenerate_streak:
            enter = next((j for j in range(t.nvar) if cost[j] < 0), None)
        else:
            enter, low = None, zero
            for j in range(t.nvar):
                if cost[j] < low:
                    enter, low = j, cost[j]
        if enter is None:
            break
        leave, best = None, None
        for i in range(t.m):
            a = t.rows[i][enter]
            if a > 0:
                ratio = t.rhs[i] / a
                if best is None or ratio < best or (ratio == best and t.basis[i] < t.basis[leave]):
                    leave, best = i, ratio
        if leave is None:  # the phase-one objective is bounded below
            raise ArithmeticError("unbounded phase-one problem")
        before = t.obj
        t.pivot(leave, enter)
        streak = streak + 1 if t.obj == before else 0
        if t.pivots > max_pivots:
            raise ArithmeticError("pivot limit exceeded")
    if t.obj == 0:
        x = [Fraction(0)] * t.nvar
        for i, bv in enumerate(t.basis):
            if bv < t.nvar:
                x[bv] = _to_fraction(t.rhs[i])
        return PhaseOneResult(True, x, None, t.pivots)
    # y_i = 1 - (reduced cost of artificial i), undone for rows that were negated
    y = [_to_fraction((1 - t.cost[t.nvar + i]) * t.sign[i]) for i in range(t.m)]
    return PhaseOneResult(False, None, y, t.pivots)


def check_point(A, b, x) -> bool:
    if any(v < 0 for v in x):
        return False
    return all(sum(Fraction(a) * v for a, v in zip(row, x) if a) == bi for row, bi in zip(A, b))


def check_farkas(A, b, y) -> bool:
    """y^T A <= 0 componentwise and y^T b > 0 prove {A x = b, x >= 0} empty."""
    ncols = len(A[0]) if A else 0
    for j in range(ncols):
        if sum(Fraction(row[j]) * yi for row, yi in zip(A, y) if row[j]) > 0:
            return False
    return sum(Fraction(bi) * yi for bi, yi in zip(b, y)) > 0


def solve_on_columns(A, b, cols: Sequence[int]) -> list[Fraction] | None:
    """Exact solution of A[:, cols] x = b when it is unique, else None."""
    m = len(A)
    k = len(cols)
    M = [[_Q(A[i][c]) for c in cols] + [_Q(b[i])] for i in range(m)]
    where = []
    row = 0
    for c in range(k):
        p = next((i for i in range(row, m) if M[i][c] != 0), None)
        if p is None:
            return None  # rank deficient: solution not unique
        M[row], M[p] = M[p], M[row]
        inv = 1 / M[row][c]
        M[row] = [v * inv for v in M[row]]
        for i in range(m):
            if i != row and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * bb for a, bb in zip(M[i], M[row])]
        where.append(row)
        row += 1
    if any(M[i][k] != 0 for i in range(row, m)):
        return None  # inconsistent
    return [_to_fraction(M[r][k]) for r in where]


def float_support(A, b, tol: float = 1e-9) -> list[int] | None:
    """Columns carrying a floating-point feasible point (None if judged infeasible)."""
    import numpy as np
    from scipy.optimize import linprog

    Af = np.array(A, dtype=float)
    bf = np.array(b, dtype=float)
    scale = np.maximum(np.abs(Af).max(axis=1), 1.0)
    res = linprog(np.zeros(Af.shape[1]), A_eq=Af / scale[:, None], b_eq=bf / scale,
                  bounds=(0, None), method="highs")
    if res.status != 0:
        return None
    return [j for j, v in enumerate(res.x) if v > tol * max(1.0, abs(bf).max())]


def feasibility(A, b, guided: bool = True, **kw) -> PhaseOneResult:
    """Exact verdict; a floating-point solve may propose the support of the witness."""
    if guided:
        cols = float_support(A, b)
        if cols is not None:
            xs = solve_on_columns(A, b, cols)
            if xs is not None and all(v >= 0 for v in xs):
                x = [Fraction(0)] * (len(A[0]) if A else 0)
                for c, v in zip(cols, xs):
                    x[c] = v
                if check_point(A, b, x):
                    return PhaseOneResult(True, x, None, 0)
            sub = [[row[c] for c in cols] for row in A]
            res = phase_one(sub, b, **kw)
            if res.feasible:
                x = [Fraction(0)] * len(A[0])
                for c, v in zip(cols, res.x):
                    x[c] = v
                return PhaseOneResult(True, x, None, res.pivots)
    return phase_one(A, b, **kw)
