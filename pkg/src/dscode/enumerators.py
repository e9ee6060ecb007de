"""Split weight enumerators, the MacWilliams transform and minimum distance.

Code side: C_DS, the row space of H_DS (2^(m+r) words).
Dual side: C_DS^perp, which is exactly {(e, s(e), A^T s(e)) : e in GF(4)^n},
so it is enumerated by running over data errors and their extended syndromes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from . import gf2
from .construction import DSCode
from .gf2 import RowBasis
from .gf4 import PauliVector
from .krawtchouk import kraw_table

CODE, DUAL = "code", "dual"

DEFAULT_MAX_CODE_BITS = 30
DEFAULT_MAX_DUAL_N = 14
BRUTE_FORCE_LIMIT_BITS = 24
_CHUNK_BITS = 20


class SizeLimitError(ValueError):
    """The requested enumeration exceeds the configured size limit."""


@dataclass(frozen=True)
class SplitWeightEnumerator:
    """counts[i][j]: number of words with data weight i and syndrome weight j."""

    n: int
    m: int
    r: int
    side: str
    counts: tuple[tuple, ...]

    def __post_init__(self):
        if self.side not in (CODE, DUAL):
            raise ValueError(f"side must be {CODE!r} or {DUAL!r}")
        if len(self.counts) != self.n + 1 or any(len(row) != self.slen + 1 for row in self.counts):
            raise ValueError("counts table has the wrong shape")

    @classmethod
    def from_table(cls, table, n: int, m: int, r: int, side: str) -> SplitWeightEnumerator:
        return cls(n, m, r, side, tuple(tuple(_plain(v) for v in row) for row in table))

    @property
    def slen(self) -> int:
        return self.m + self.r

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self.counts[i][j]

    def total(self):
        return sum(sum(row) for row in self.counts)

    def row_sum(self, i: int, start: int = 0):
        return sum(self.counts[i][start:])

    def nonzero(self) -> Iterator[tuple[int, int, object]]:
        for i, row in enumerate(self.counts):
            for j, v in enumerate(row):
                if v:
                    yield i, j, v

    def is_integral(self) -> bool:
        return all(Fraction(v).denominator == 1 for row in self.counts for v in row)


def _plain(v):
    """Integers stay int, other rationals become Fraction."""
    if isinstance(v, (int, np.integer)):
        return int(v)
    f = Fraction(v)
    return f.numerator if f.denominator == 1 else f


# -- span enumeration ---------------------------------------------------------


def _doubling_table(gens: Sequence[int]) -> np.ndarray:
    t = np.zeros(1 << len(gens), dtype=np.uint64)
    for b, g in enumerate(gens):
        t[1 << b: 2 << b] = t[: 1 << b] ^ np.uint64(g)
    return t


def _span_chunks(gens: Sequence[tuple[int, int, int]]):
    """Yield (x, z, s) arrays covering every F2 combination of the generators once."""
    L = min(len(gens), _CHUNK_BITS)
    low, high = gens[:L], gens[L:]
    lows = [_doubling_table([g[c] for g in low]) for c in range(3)]
    highs = [_doubling_table([g[c] for g in high]) for c in range(3)]
    for h in range(len(highs[0])):
        yield tuple(lo ^ hi[h] for lo, hi in zip(lows, highs))


def _tally(gens, n: int, M: int) -> list[list[int]]:
    if n > 64 or M > 64:
        raise SizeLimitError("vector parts longer than 64 bits are not supported")
    counts = np.zeros((n + 1) * (M + 1), dtype=np.int64)
    for x, z, s in _span_chunks(gens):
        i = np.bitwise_count(x | z).astype(np.int64)
        j = np.bitwise_count(s).astype(np.int64)
        counts += np.bincount(i * (M + 1) + j, minlength=(n + 1) * (M + 1))
    return counts.reshape(n + 1, M + 1).tolist()


def _code_generators(code: DSCode):
    return [(v.data.x, v.data.z, v.syndrome) for v in code.rows]


def _dual_generators(code: DSCode):
    xs, zs = code.ext_columns
    return [(1 << q, 0, xs[q]) for q in range(code.n)] + [(0, 1 << q, zs[q]) for q in range(code.n)]


def enumerate_code(code: DSCode, max_bits: int = DEFAULT_MAX_CODE_BITS) -> SplitWeightEnumerator:
    if code.slen > max_bits:
        raise SizeLimitError(f"2^{code.slen} codewords exceeds the limit 2^{max_bits}")
    table = _tally(_code_generators(code), code.n, code.slen)
    return SplitWeightEnumerator.from_table(table, code.n, code.m, code.r, CODE)


def enumerate_dual(code: DSCode, max_n: int = DEFAULT_MAX_DUAL_N) -> SplitWeightEnumerator:
    if code.n > max_n:
        raise SizeLimitError(f"4^{code.n} data errors exceeds the limit 4^{max_n}")
    table = _tally(_dual_generators(code), code.n, code.slen)
    return SplitWeightEnumerator.from_table(table, code.n, code.m, code.r, DUAL)


def brute_force_dual(code: DSCode, limit_bits: int = BRUTE_FORCE_LIMIT_BITS) -> SplitWeightEnumerator:
    """Scan all of GF(4)^n x GF(2)^(m+r) and keep vectors orthogonal to every row of H_DS."""
    n, M = code.n, code.slen
    bits = 2 * n + M
    if bits > limit_bits:
        raise SizeLimitError(f"ambient space 2^{bits} exceeds 2^{limit_bits}")
    v = np.arange(1 << bits, dtype=np.uint64)
    mask = np.uint64((1 << n) - 1)
    x = v & mask
    z = (v >> np.uint64(n)) & mask
    s = v >> np.uint64(2 * n)
    keep = np.ones(v.shape, dtype=bool)
    for row in code.rows:
        form = (x & np.uint64(row.data.z)) ^ (z & np.uint64(row.data.x)) ^ (s & np.uint64(row.syndrome))
        keep &= (np.bitwise_count(form) & 1) == 0
    i = np.bitwise_count((x | z)[keep]).astype(np.int64)
    j = np.bitwise_count(s[keep]).astype(np.int64)
    table = np.bincount(i * (M + 1) + j, minlength=(n + 1) * (M + 1)).reshape(n + 1, M + 1)
    return SplitWeightEnumerator.from_table(table.tolist(), n, code.m, code.r, DUAL)


# -- MacWilliams --------------------------------------------------------------


def macwilliams(B: SplitWeightEnumerator, require_integer: bool = True) -> SplitWeightEnumerator:
    """Map a dual-side enumerator to the code side or vice versa."""
    n, M = B.n, B.slen
    K4, K2 = kraw_table(n, 4), kraw_table(M, 2)
    if B.side == DUAL:
        scale, side = Fraction(1, 4 ** n), CODE
    else:
        scale, side = Fraction(1, 2 ** M), DUAL
    # separable: first transform along j, then along i
    tmp = [[sum(B.counts[i][j] * K2[y][j] for j in range(M + 1)) for y in range(M + 1)] for i in range(n + 1)]
    out = [[scale * sum(tmp[i][y] * K4[x][i] for i in range(n + 1)) for y in range(M + 1)] for x in range(n + 1)]
    result = SplitWeightEnumerator.from_table(out, n, B.m, B.r, side)
    if require_integer and not result.is_integral():
        raise ArithmeticError("MacWilliams transform is not integral: input is not a true enumerator")
    return result


# -- minimum distance ---------------------------------------------------------


INF = float("inf")


@dataclass(frozen=True)
class DistanceResult:
    d: int | float
    degenerate: bool | None
    witness: PauliVector | None = None


def distance_from_tables(B: SplitWeightEnumerator, Bd: SplitWeightEnumerator):
    """d = min_l d(l) + l from the code and dual enumerators.

    Every stabilizer appears 2^r times on the code side, so the number of
    stabilizers of weight i is 2^-r sum_j B[i][j]; d(0) is the smallest i >= 1
    where the dual count at zero syndrome weight exceeds it.
    """
    if (B.n, B.m, B.r) != (Bd.n, Bd.m, Bd.r):
        raise ValueError("enumerators belong to different parameters")
    best = INF
    for i in range(1, B.n + 1):
        if Bd[i, 0] * 2 ** B.r > B.row_sum(i):
            best = i
            break
    for l in range(1, B.slen + 1):
        for i in range(0, B.n + 1):
            if i + l >= best:
                break
            if Bd[i, l] > 0:
                best = i + l
                break
    return best


def is_degenerate(B: SplitWeightEnumerator, d) -> bool:
    """True if some nonzero stabilizer word has data weight below d."""
    return any(B.row_sum(i) > 0 for i in range(1, min(int(d) if d != INF else B.n + 1, B.n + 1)))


def _normalizer_min(code: DSCode) -> tuple[int | float, PauliVector | None]:
    """Lightest e with zero extended syndrome that is not a stabilizer."""
    n = code.n
    # e has zero syndrome iff e commutes with every g_i
    swapped = [g.z | (g.x << n) for g in code.H.rows]
    kernel = gf2.nullspace(swapped, 2 * n)
    stab = code.H.basis
    best, witness = INF, None
    if len(kernel) > 24:
        raise SizeLimitError("normalizer too large for direct enumeration")
    span = RowBasis(kernel).span()
    for v in span:
        if v and v not in stab:
            e = PauliVector.from_symplectic(n, v)
            if e.weight < best:
                best, witness = e.weight, e
    return best, witness


def min_distance_direct(code: DSCode, max_n: int = DEFAULT_MAX_DUAL_N) -> tuple[int | float, PauliVector | None]:
    """min wt(e) + wt(ext(e)) over e outside the stabilizer group, by direct scan."""
    n = code.n
    if n > max_n:
        raise SizeLimitError(f"4^{n} data errors exceeds the limit 4^{max_n}")
    gens = _dual_generators(code)
    best, where = INF, None
    for x, z, s in _span_chunks(gens):
        w = np.bitwise_count(x | z).astype(np.int64) + np.bitwise_count(s).astype(np.int64)
        w[s == 0] = 1 << 30
        k = int(np.argmin(w))
        if w[k] < best:
            best = int(w[k])
            where = (int(x[k]), int(z[k]))
    d0, witness = _normalizer_min(code)
    if d0 <= best:
        return d0, witness
    return best, PauliVector(n, *where)


def min_stabilizer_weight(code: DSCode) -> int | float:
    """Smallest weight of a nonzero element of the stabilizer group."""
    gens = [(g.x, g.z, 0) for g in code.H.rows]
    best = INF
    for x, z, _ in _span_chunks(gens):
        w = np.bitwise_count(x | z).astype(np.int64)
        w = w[(x | z) != 0]
        if w.size:
            best = min(best, int(w.min()))
    return best


def min_distance(code: DSCode, max_n: int = DEFAULT_MAX_DUAL_N) -> DistanceResult:
    """Direct-scan distance plus the degeneracy flag (a stabilizer lighter than d)."""
    if code.m == 0:
        raise ValueError("code has no stabilizers (k = n); distance is undefined")
    d, witness = min_distance_direct(code, max_n)
    return DistanceResult(d, min_stabilizer_weight(code) < d, witness)


def css_distance_scan(hprime: Sequence[int], n: int, stabilizer_rows: int | None = None, max_n: int = 28) -> int | float:
    """Distance of one binary half of a CSS DS code.

    Minimizes wt(y) + wt(H'y) over nonzero y; words with H'y = 0 are skipped
    when they lie in the row space of the first ``stabilizer_rows`` rows of H'
    (all of H' by default).
    """
    if n > max_n:
        raise SizeLimitError(f"2^{n} words exceeds the limit 2^{max_n}")
    rows = list(hprime)
    excl = rows if stabilizer_rows is None else rows[:stabilizer_rows]
    cols = gf2.transpose(rows, n)
    lo = min(n, 12)
    hi = n - lo
    syn_lo = _doubling_table(cols[:lo])
    syn_hi = _doubling_table(cols[lo:])
    w_lo = np.bitwise_count(np.arange(1 << lo, dtype=np.uint64)).astype(np.int32)
    w_hi = np.bitwise_count(np.arange(1 << hi, dtype=np.uint64)).astype(np.int32)
    best = INF
    step = max(1, (1 << 22) >> lo)
    for start in range(0, 1 << hi, step):
        sh = syn_hi[start:start + step]
        syn = sh[:, None] ^ syn_lo[None, :]
        w = np.bitwise_count(syn).astype(np.int32) + w_hi[start:start + step, None] + w_lo[None, :]
        w[syn == 0] = 1 << 30
        best = min(best, int(w.min()))
    # zero-syndrome words: the kernel of H'
    basis = RowBasis(excl)
    kernel = gf2.nullspace(rows, n)
    if len(kernel) > 20:
        raise SizeLimitError("kernel of H' too large")
    for y in RowBasis(kernel).span():
        if y and y not in basis:
            best = min(best, y.bit_count())
    return best
