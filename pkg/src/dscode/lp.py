"""Linear-programming feasibility test for [[n, k, d : r]] DS codes.

Unknowns are the code-side enumerator B[i][j] and the dual-side enumerator
Bd[i][j] (relaxed to nonnegative rationals).  Constraints:

* B[0][0] = Bd[0][0] = 1 and B[i][0] = 0 for i >= 1
* MacWilliams: 4^n B[x][y] = sum_ij Bd[i][j] K_x(i; n, 4) K_y(j; m+r, 2)
* total masses 2^(m+r) and 4^n
* 2^r Bd[i][0] = sum_j B[i][j] for 1 <= i < d, and >= for i >= d
  (each stabilizer occurs 2^r times on the code side)
* Bd[i][j] = 0 for j >= 1, i + j <= d - 1

The relaxation only over-admits: "infeasible" is a proof that no code exists,
"feasible" is a necessary condition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .krawtchouk import kraw_table
from .simplex import check_farkas, check_point, feasibility

FEASIBLE, INFEASIBLE = "feasible", "infeasible"


@dataclass
class Constraint:
    coeffs: dict[int, int]
    sense: str  # "=" or ">="
    rhs: int
    label: str


@dataclass
class RationalTableau:
    n: int
    k: int
    d: int
    r: int
    names: list[tuple[str, int, int]] = field(default_factory=list)
    constraints: list[Constraint] = field(default_factory=list)

    @property
    def m(self) -> int:
        return self.n - self.k

    @property
    def slen(self) -> int:
        return self.m + self.r

    def var(self, side: str, i: int, j: int) -> int:
        M = self.slen
        base = 0 if side == "B" else (self.n + 1) * (M + 1)
        return base + i * (M + 1) + j

    @property
    def num_vars(self) -> int:
        return len(self.names)

    def standard_form(self):
        """Dense A, b for A x = b, x >= 0 with one surplus column per inequality."""
        ineq = [c for c in self.constraints if c.sense == ">="]
        width = self.num_vars + len(ineq)
        A, b = [], []
        s = self.num_vars
        for c in self.constraints:
            row = [0] * width
            for v, a in c.coeffs.items():
                row[v] = a
            if c.sense == ">=":
                row[s] = -1
                s += 1
            A.append(row)
            b.append(c.rhs)
        return A, b

    def satisfied_by(self, point: dict[int, Fraction]) -> list[str]:
        """Labels of constraints violated by an assignment of the structural variables."""
        bad = []
        for c in self.constraints:
            lhs = sum(a * Fraction(point.get(v, 0)) for v, a in c.coeffs.items())
            if (c.sense == "=" and lhs != c.rhs) or (c.sense == ">=" and lhs < c.rhs):
                bad.append(c.label)
        if any(Fraction(v) < 0 for v in point.values()):
            bad.append("nonnegativity")
        return bad


def build_lp(n: int, k: int, d: int, r: int) -> RationalTableau:
    if not 1 <= d <= n:
        raise ValueError("need 1 <= d <= n")
    if not 0 <= k <= n or r < 0:
        raise ValueError("need 0 <= k <= n and r >= 0")
    t = RationalTableau(n, k, d, r)
    M = t.slen
    for side in ("B", "Bd"):
        for i in range(n + 1):
            for j in range(M + 1):
                t.names.append((side, i, j))
    B = lambda i, j: t.var("B", i, j)
    Bd = lambda i, j: t.var("Bd", i, j)
    add = lambda coeffs, sense, rhs, label: t.constraints.append(Constraint(coeffs, sense, rhs, label))

    add({B(0, 0): 1}, "=", 1, "B[0][0]=1")
    add({Bd(0, 0): 1}, "=", 1, "Bd[0][0]=1")
    for i in range(1, n + 1):
        add({B(i, 0): 1}, "=", 0, f"B[{i}][0]=0")
    K4, K2 = kraw_table(n, 4), kraw_table(M, 2)
    for x in range(n + 1):
        for y in range(M + 1):
            coeffs = {B(x, y): 4 ** n}
            for i in range(n + 1):
                for j in range(M + 1):
                    c = K4[x][i] * K2[y][j]
                    if c:
                        coeffs[Bd(i, j)] = coeffs.get(Bd(i, j), 0) - c
            add(coeffs, "=", 0, f"macwilliams({x},{y})")
    add({B(i, j): 1 for i in range(n + 1) for j in range(M + 1)}, "=", 2 ** M, "sum B")
    add({Bd(i, j): 1 for i in range(n + 1) for j in range(M + 1)}, "=", 4 ** n, "sum Bd")
    for i in range(1, n + 1):
        coeffs = {Bd(i, 0): 2 ** r}
        for j in range(M + 1):
            coeffs[B(i, j)] = coeffs.get(B(i, j), 0) - 1
        add(coeffs, "=" if i < d else ">=", 0, f"stabilizers at weight {i}")
    for i in range(n + 1):
        for j in range(1, M + 1):
            if i + j <= d - 1:
                add({Bd(i, j): 1}, "=", 0, f"Bd[{i}][{j}]=0")
    return t


@dataclass(frozen=True)
class FeasibilityVerdict:
    status: str
    witness: dict[tuple[str, int, int], Fraction] | None = None
    certificate: list[tuple[str, Fraction]] | None = None
    pivots: int = 0

    @property
    def feasible(self) -> bool:
        return self.status == FEASIBLE


def solve_feasibility(t: RationalTableau, verify: bool = True, guided: bool = True) -> FeasibilityVerdict:
    """Exact verdict with a witness point or a Farkas certificate.

    With ``guided`` a floating-point solve proposes which variables are nonzero;
    the witness is then computed and checked exactly, and the exact simplex
    runs whenever that shortcut does not produce a verified point.
    """
    A, b = t.standard_form()
    res = feasibility(A, b, guided=guided)
    if res.feasible:
        if verify and not check_point(A, b, res.x):
            raise ArithmeticError("simplex returned a point that violates the constraints")
        witness = {name: res.x[v] for v, name in enumerate(t.names)}
        return FeasibilityVerdict(FEASIBLE, witness, None, res.pivots)
    if verify and not check_farkas(A, b, res.farkas):
        raise ArithmeticError("simplex returned an invalid infeasibility certificate")
    cert = [(c.label, y) for c, y in zip(t.constraints, res.farkas)]
    return FeasibilityVerdict(INFEASIBLE, None, cert, res.pivots)


def lp_feasible(n: int, k: int, d: int, r: int) -> FeasibilityVerdict:
    return solve_feasibility(build_lp(n, k, d, r))


def verdict_to_distance_bound(n: int, k: int, r: int) -> int:
    """Largest d with a feasible program, scanning d downward from n."""
    if k == n:
        return 1
    for d in range(n, 0, -1):
        if lp_feasible(n, k, d, r).feasible:
            return d
    return 0


def enumerator_point(t: RationalTableau, B, Bd) -> dict[int, Fraction]:
    """Structural-variable assignment from a pair of enumerators."""
    point = {}
    for i in range(t.n + 1):
        for j in range(t.slen + 1):
            point[t.var("B", i, j)] = Fraction(B[i, j])
            point[t.var("Bd", i, j)] = Fraction(Bd[i, j])
    return point
