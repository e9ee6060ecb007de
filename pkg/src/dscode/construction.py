"""Stabilizer check matrices, syndrome-measurement codes and DS parity checks.

A DS code is the pair (H, A): an m x n stabilizer check matrix over GF(4) and
an m x r binary matrix A, the non-identity part of the systematic generator
[I_m A] of the syndrome-measurement (SM) code.  Its parity-check matrix is

    H_DS = [ H   I_m  0  ]
           [ 0   A^T  I_r]

over GF(4)^n x GF(2)^(m+r).  The extra rows correspond to measuring the r
stabilizers f_j = sum_i a_ij g_i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from typing import Iterable, Sequence

import numpy as np

from . import gf2
from .gf2 import RowBasis
from .gf4 import DSVector, PauliVector, trace_inner


class ConstructionError(ValueError):
    """Invalid input to a code constructor."""


class NegativeDimensionError(ConstructionError):
    """The construction would encode a negative number of qubits."""


def _swap(v: PauliVector) -> int:
    # trace_inner(a, b) == dot(_swap(a), b.symplectic)
    return v.z | (v.x << v.n)


@dataclass(frozen=True)
class StabilizerCheckMatrix:
    """Rows g_1..g_m of a stabilizer check matrix; validated on construction."""

    rows: tuple[PauliVector, ...]
    n: int

    def __init__(self, rows: Iterable[PauliVector], n: int | None = None):
        rows = tuple(rows)
        if n is None:
            if not rows:
                raise ConstructionError("length n is required for an empty check matrix")
            n = rows[0].n
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "n", n)
        for g in rows:
            if g.n != n:
                raise ConstructionError(f"row length {g.n} != {n}")
        for i, g in enumerate(rows):
            for h in rows[i:]:
                if trace_inner(g, h):
                    raise ConstructionError(f"rows {g} and {h} anticommute")
        if gf2.rank(g.symplectic for g in rows) != len(rows):
            raise ConstructionError("check matrix rows are linearly dependent")

    @classmethod
    def parse(cls, lines: Sequence[str], n: int | None = None) -> StabilizerCheckMatrix:
        return cls((PauliVector.parse(s) for s in lines), n)

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def k(self) -> int:
        return self.n - self.m

    @cached_property
    def basis(self) -> RowBasis:
        return RowBasis(g.symplectic for g in self.rows)

    def __contains__(self, e: PauliVector) -> bool:
        return e.symplectic in self.basis

    def syndrome(self, e: PauliVector) -> int:
        return sum(trace_inner(g, e) << i for i, g in enumerate(self.rows))

    def combination(self, coeffs: Iterable[int]) -> PauliVector:
        out = PauliVector.zero(self.n)
        for c, g in zip(coeffs, self.rows):
            if c & 1:
                out = out + g
        return out


def _binary_matrix(a, shape=None) -> np.ndarray:
    arr = np.array(a, dtype=np.uint8)
    if arr.size == 0 and shape is not None:
        arr = arr.reshape(shape)
    if arr.ndim != 2 or np.any(arr > 1):
        raise ConstructionError("expected a 2-D 0/1 matrix")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class SMCode:
    """The [m+r, m] syndrome-measurement code with generator [I_m A]."""

    A: np.ndarray

    def __init__(self, A, m: int | None = None):
        shape = (m, 0) if m is not None else None
        object.__setattr__(self, "A", _binary_matrix(A, shape))

    @classmethod
    def empty(cls, m: int) -> SMCode:
        return cls(np.zeros((m, 0), dtype=np.uint8))

    @property
    def m(self) -> int:
        return self.A.shape[0]

    @property
    def r(self) -> int:
        return self.A.shape[1]

    @property
    def length(self) -> int:
        return self.m + self.r

    @property
    def generator(self) -> np.ndarray:
        return np.hstack([np.eye(self.m, dtype=np.uint8), self.A])

    @property
    def rank_A(self) -> int:
        return gf2.rank(gf2.from_bits(col) for col in self.A.T)

    def codeword(self, msg: int) -> int:
        """Codeword of the message bitmask ``msg`` as a bitmask of length m+r."""
        word = msg
        for j, col in enumerate(self.column_masks):
            word |= gf2.dot(col, msg) << (self.m + j)
        return word

    @cached_property
    def column_masks(self) -> tuple[int, ...]:
        return tuple(gf2.from_bits(col) for col in self.A.T)

    def __eq__(self, other) -> bool:
        return isinstance(other, SMCode) and np.array_equal(self.A, other.A)

    def __hash__(self):
        return hash((self.A.shape, self.A.tobytes()))


_SM_15_3 = (
    "100000111111000",
    "010010011110110",
    "001101100110111",
)


def builtin_sm_15_3() -> SMCode:
    """The [15,3] SM code used with the Steane code (3 syndrome bits per half)."""
    g = np.array([[int(c) for c in row] for row in _SM_15_3], dtype=np.uint8)
    return SMCode(g[:, 3:])


def repetition_sm(m: int, l: int) -> SMCode:
    """l-fold repeated measurement of m syndrome bits: G = [I_m ... I_m]."""
    if l < 1:
        raise ConstructionError("repetition factor must be >= 1")
    return SMCode(np.hstack([np.eye(m, dtype=np.uint8)] * (l - 1)) if l > 1 else np.zeros((m, 0), np.uint8))


def block_diag_sm(*codes: SMCode) -> SMCode:
    """Independent SM codes on consecutive groups of syndrome bits."""
    m = sum(c.m for c in codes)
    r = sum(c.r for c in codes)
    A = np.zeros((m, r), dtype=np.uint8)
    i = j = 0
    for c in codes:
        A[i:i + c.m, j:j + c.r] = c.A
        i += c.m
        j += c.r
    return SMCode(A)


@dataclass(frozen=True, eq=False)
class DSCode:
    """A quantum data-syndrome code given by (H, A)."""

    H: StabilizerCheckMatrix
    sm: SMCode

    def __post_init__(self):
        if self.sm.m != self.H.m:
            raise ConstructionError(f"A has {self.sm.m} rows but H has {self.H.m}")

    @property
    def n(self) -> int:
        return self.H.n

    @property
    def m(self) -> int:
        return self.H.m

    @property
    def k(self) -> int:
        return self.H.k

    @property
    def r(self) -> int:
        return self.sm.r

    @property
    def slen(self) -> int:
        """Length m + r of the syndrome part."""
        return self.m + self.r

    @cached_property
    def rows(self) -> tuple[DSVector, ...]:
        """The m + r rows of H_DS."""
        top = [DSVector(g, 1 << i, self.slen) for i, g in enumerate(self.H.rows)]
        bottom = [
            DSVector(PauliVector.zero(self.n), col | (1 << (self.m + j)), self.slen)
            for j, col in enumerate(self.sm.column_masks)
        ]
        return tuple(top + bottom)

    @cached_property
    def f_vectors(self) -> tuple[PauliVector, ...]:
        return tuple(sm_stabilizers(self.H, self.sm))

    def extend(self, s: int) -> int:
        """Extended syndrome (s, A^T s) of a syndrome bitmask s."""
        out = s
        for j, col in enumerate(self.sm.column_masks):
            out |= gf2.dot(col, s) << (self.m + j)
        return out

    def ext_syndrome(self, e: PauliVector) -> int:
        return self.extend(self.H.syndrome(e))

    @cached_property
    def ext_columns(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Extended syndromes of single-qubit X and Z errors, per qubit."""
        n = self.n
        xs = tuple(self.ext_syndrome(PauliVector(n, 1 << q, 0)) for q in range(n))
        zs = tuple(self.ext_syndrome(PauliVector(n, 0, 1 << q)) for q in range(n))
        return xs, zs

    def dual_word(self, e: PauliVector) -> DSVector:
        """The unique element of C_DS^perp with data part e."""
        return DSVector(e, self.ext_syndrome(e), self.slen)


def build_hds(H: StabilizerCheckMatrix, sm: SMCode | None = None) -> DSCode:
    if sm is None:
        sm = SMCode.empty(H.m)
    return DSCode(H, sm)


def sm_stabilizers(H: StabilizerCheckMatrix, sm: SMCode) -> list[PauliVector]:
    """The r extra stabilizers f_j = a_1j g_1 + ... + a_mj g_m."""
    if sm.m != H.m:
        raise ConstructionError(f"A has {sm.m} rows but H has {H.m}")
    return [H.combination(col) for col in sm.A.T]


# -- symplectic completion ---------------------------------------------------


def _dual_system(rows: Sequence[int], nbits: int) -> list[int]:
    """Vectors v_i with dot(rows[j], v_i) = delta_ij (rows independent)."""
    echelon: list[tuple[int, int, int]] = []  # (pivot bit, row, tag)
    for idx, r in enumerate(rows):
        tag = 1 << idx
        for p, pr, pt in echelon:
            if (r >> p) & 1:
                r ^= pr
                tag ^= pt
        if not r:
            raise ConstructionError("check matrix is rank deficient")
        p = (r & -r).bit_length() - 1
        reduced = []
        for q, qr, qt in echelon:
            if (qr >> p) & 1:
                qr ^= r
                qt ^= tag
            reduced.append((q, qr, qt))
        echelon = reduced + [(p, r, tag)]
    # echelon rows rho_k = sum_j T_kj rows_j with dot(rho_l, e_{p_k}) = delta_lk
    out = []
    for i in range(len(rows)):
        v = 0
        for p, _, tag in echelon:
            if (tag >> i) & 1:
                v |= 1 << p
        out.append(v)
    return out


@dataclass(frozen=True)
class SymplecticBasis:
    """g_1..g_n and h_1..h_n with g_i*g_j = 0, h_i*h_j = 0 and g_i*h_j = delta_ij.

    The first m vectors g_i are the rows of the check matrix.
    """

    g: tuple[PauliVector, ...]
    h: tuple[PauliVector, ...]
    m: int


def symplectic_complete(H: StabilizerCheckMatrix) -> SymplecticBasis:
    n, m = H.n, H.m
    ip = trace_inner
    gs = list(H.rows)
    hs = [
        PauliVector.from_symplectic(n, v)
        for v in _dual_system([_swap(g) for g in gs], 2 * n)
    ]
    # make the partners of g_1..g_m pairwise commuting
    for i in range(m):
        for l in range(i):
            if ip(hs[i], hs[l]):
                hs[i] = hs[i] + gs[l]

    def project(w: PauliVector, pairs) -> PauliVector:
        for g, h in pairs:
            if ip(w, h):
                w = w + g
            if ip(w, g):
                w = w + h
        return w

    pairs = list(zip(gs, hs))
    rest = []
    basis = RowBasis()
    for b in range(2 * n):
        w = project(PauliVector.from_symplectic(n, 1 << b), pairs)
        if basis.add(w.symplectic):
            rest.append(w)
    while rest:
        u = rest.pop(0)
        idx = next((i for i, v in enumerate(rest) if ip(u, v)), None)
        if idx is None:
            raise ConstructionError("complement is not symplectic")
        v = rest.pop(idx)
        gs.append(u)
        hs.append(v)
        rest = [project(w, [(u, v)]) for w in rest]
        rest = [w for w in rest if w]
        # re-reduce to drop vectors that became dependent
        basis = RowBasis()
        rest = [w for w in rest if basis.add(w.symplectic)]
    if len(gs) != n:
        raise ConstructionError("symplectic completion failed")
    return SymplecticBasis(tuple(gs), tuple(hs), m)


def dual_generator_matrix(code: DSCode, basis: SymplecticBasis | None = None) -> list[DSVector]:
    """2n generators of C_DS^perp: (g_i,0,0), (h_i,0,0) for i > m, (h_i, e_i, a_i) for i <= m."""
    if basis is None:
        basis = symplectic_complete(code.H)
    m, slen = code.m, code.slen
    rows = [DSVector(g, 0, slen) for g in basis.g]
    rows += [DSVector(h, 0, slen) for h in basis.h[m:]]
    for i, h in enumerate(basis.h[:m]):
        s = code.extend(1 << i)
        rows.append(DSVector(h, s, slen))
    return rows


# -- CSS constructions ---------------------------------------------------------


def css_cyclic_hprime(c: int | Sequence[int], n: int | None = None, rows: int | None = None) -> list[int]:
    """The first ``rows`` cyclic shifts (c_s, c_{s+1}, ..., c_{s-1}) of a binary word."""
    if not isinstance(c, int):
        bits = list(c)
        n = len(bits) if n is None else n
        c = gf2.from_bits(bits)
    if n is None or c >> n:
        raise ConstructionError("word length is required and must cover the word")
    if c == 0:
        raise ConstructionError("seed word must be nonzero")
    rows = n if rows is None else rows
    if not 1 <= rows <= n:
        raise ConstructionError(f"rows must lie in [1, {n}], got {rows}")
    mask = (1 << n) - 1
    return [((c >> s) | (c << (n - s))) & mask for s in range(rows)]


def css_check_matrix(hb: Sequence[int], n: int) -> StabilizerCheckMatrix:
    """[[Hb, 0], [0, Hb]] as GF(4) rows: Hb as X-type rows, then as Z-type rows."""
    for i, a in enumerate(hb):
        for b in hb[i:]:
            if gf2.dot(a, b):
                raise ConstructionError("Hb Hb^T != 0: code is not dual-containing")
    return StabilizerCheckMatrix(
        [PauliVector(n, row, 0) for row in hb] + [PauliVector(n, 0, row) for row in hb], n
    )


@dataclass(frozen=True)
class CSSSeed:
    """Binary block Hb (Hb Hb^T = 0) of a CSS code, optionally from a cyclic seed."""

    n: int
    hb: tuple[int, ...]
    seed: int | None = None

    def __post_init__(self):
        if gf2.rank(self.hb) != len(self.hb):
            raise ConstructionError("Hb rows are linearly dependent")
        for i, a in enumerate(self.hb):
            for b in self.hb[i:]:
                if gf2.dot(a, b):
                    raise ConstructionError("Hb Hb^T != 0: code is not dual-containing")
        if self.k < 0:
            raise NegativeDimensionError(f"CSS code would have k = {self.k} < 0")

    @property
    def k(self) -> int:
        return self.n - 2 * len(self.hb)

    def check_matrix(self) -> StabilizerCheckMatrix:
        return css_check_matrix(self.hb, self.n)

    def hprime(self, extra_rows: int) -> list[int]:
        """H' with len(Hb) + extra_rows rows: more cyclic shifts of the seed."""
        if self.seed is None:
            raise ConstructionError("no cyclic seed attached")
        return css_cyclic_hprime(self.seed, self.n, len(self.hb) + extra_rows)

    def ds_code(self, extra_rows: int = 0) -> CSSDSCode:
        if extra_rows == 0:
            return CSSDSCode(self.n, tuple(self.hb), len(self.hb))
        return CSSDSCode(self.n, tuple(self.hprime(extra_rows)), len(self.hb))


def simplex_generator(a: int) -> list[int]:
    """Rows of S_a: column j (1-based) is the binary expansion of j."""
    n = (1 << a) - 1
    return [sum(1 << (j - 1) for j in range(1, n + 1) if (j >> i) & 1) for i in range(a)]


def simplex_css(a: int) -> CSSSeed:
    """The [[2^a - 1, 2^a - 1 - 2a, 3]] CSS code with both blocks equal to S_a."""
    if a < 2:
        raise ConstructionError("a must be >= 2")
    n = (1 << a) - 1
    if n - 2 * a < 0:
        raise NegativeDimensionError(f"[[{n}, {n - 2 * a}]] has negative dimension")
    return CSSSeed(n, tuple(simplex_generator(a)))


@dataclass(frozen=True)
class CSSDSCode:
    """CSS-type DS code: H_DS = diag([H' I], [H' I]) with H' = [Hb; f_1; ...].

    ``stabilizer_rows`` leading rows of H' form Hb; the remaining rows must be
    combinations of them.  ``r`` counts extra rows over both halves.
    """

    n: int
    hprime: tuple[int, ...]
    stabilizer_rows: int
    coefficients: tuple[tuple[int, ...], ...] = field(init=False, repr=False)

    def __post_init__(self):
        s = self.stabilizer_rows
        if not 0 < s <= len(self.hprime):
            raise ConstructionError("stabilizer_rows out of range")
        hb = self.hprime[:s]
        seed = CSSSeed(self.n, hb)  # validates Hb
        del seed
        coeffs = []
        for row in self.hprime[s:]:
            c = gf2.solve_combination(hb, row)
            if c is None:
                raise ConstructionError("extra row of H' is not a combination of Hb rows")
            coeffs.append(tuple(c))
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def hb(self) -> tuple[int, ...]:
        return self.hprime[: self.stabilizer_rows]

    @property
    def k(self) -> int:
        return self.n - 2 * self.stabilizer_rows

    @property
    def r_half(self) -> int:
        return len(self.hprime) - self.stabilizer_rows

    @property
    def r(self) -> int:
        return 2 * self.r_half

    def to_ds_code(self) -> DSCode:
        """The equivalent GF(4) DS code (X half first, then the Z half)."""
        s, rh = self.stabilizer_rows, self.r_half
        A = np.zeros((2 * s, 2 * rh), dtype=np.uint8)
        for j, c in enumerate(self.coefficients):
            A[:s, j] = c
            A[s:, rh + j] = c
        return DSCode(css_check_matrix(self.hb, self.n), SMCode(A))


def golay_seed() -> int:
    """Seed codeword of the dual [23, 11] Golay code that generates the [[23, 1]] family."""
    text = resources.files("dscode.data").joinpath("golay23_dual.seed").read_text()
    bits = next(line.strip() for line in text.splitlines() if line.strip() and not line.startswith("#"))
    return gf2.parse_bitstring(bits)


def golay_css(extra_rows: int = 0) -> CSSDSCode:
    """[[23, 1, d : 2*extra_rows]] CSS DS code from 11 + extra_rows shifts of the seed."""
    c = golay_seed()
    seed = CSSSeed(23, tuple(css_cyclic_hprime(c, 23, 11)), c)
    return seed.ds_code(extra_rows)
