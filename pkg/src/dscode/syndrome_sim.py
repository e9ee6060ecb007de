"""Syndrome readout errors, maximum-likelihood SM decoding and block error rates.

Each syndrome bit is the parity of wt(g) single-qubit readouts, each flipped
with probability p_m, so it is wrong with probability p_err(wt(g), p_m).
The m + r observed bits are decoded with the SM code [I_m A] and compared
with the true syndrome.

Bit b of a word is bit b of an int: bits 0..m-1 are s_1..s_m and bits
m..m+r-1 are the extra parities z_1..z_r.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .construction import SMCode, builtin_sm_15_3, repetition_sm
from .enumerators import SizeLimitError

MAX_DECODE_BITS = 24
MAX_EXACT_BITS = 22
TIE_RTOL = 1e-12


def p_err(weight: int, p_m):
    """Probability that the parity of ``weight`` independently flipped bits is 1."""
    if weight < 0:
        raise ValueError("weight must be >= 0")
    if not 0 <= p_m <= 1:
        raise ValueError("p_m must lie in [0, 1]")
    return sum(math.comb(weight, i) * p_m ** i * (1 - p_m) ** (weight - i) for i in range(1, weight + 1, 2))


def p_err_closed(weight: int, p_m):
    return (1 - (1 - 2 * p_m) ** weight) / 2


@dataclass(frozen=True)
class MeasurementModel:
    p_m: float | Fraction
    weights: tuple[int, ...]  # wt(g_1..g_m), then wt(f_1..f_r)

    def __post_init__(self):
        if not 0 <= self.p_m <= Fraction(1, 2):
            raise ValueError("p_m must lie in [0, 1/2]")
        if any(w < 0 for w in self.weights):
            raise ValueError("weights must be >= 0")

    def flip_probs(self) -> list:
        return [p_err(w, self.p_m) for w in self.weights]


def expand_weights(weights: Sequence[int], length: int) -> tuple[int, ...]:
    """One weight for every syndrome bit; a single value applies to all of them."""
    weights = tuple(int(w) for w in weights)
    if len(weights) == 1:
        return weights * length
    if len(weights) != length:
        raise ValueError(f"expected 1 or {length} weights, got {len(weights)}")
    return weights


def _llr(p) -> float:
    """Cost of flipping a bit with flip probability p (0 for p = 1/2)."""
    p = float(p)
    if p <= 0:
        return math.inf
    if p >= 0.5:
        return 0.0
    return math.log((1 - p) / p)


class MLDecoder:
    """Block maximum-likelihood decoder of an SM code under independent flips.

    Every received word is x = c(h) + (0, sigma) for a unique message h and
    coset label sigma.  Per coset the most likely flip pattern (0, sigma) + c(t)
    is fixed once, ties going to the smallest t; x then decodes to h ^ t.
    Fixing one leader per coset keeps the decoder translation invariant.
    """

    def __init__(self, sm: SMCode, probs: Sequence):
        if sm.m > MAX_DECODE_BITS:
            raise SizeLimitError(f"2^{sm.m} codewords exceeds the decoder limit")
        if len(probs) != sm.length:
            raise ValueError("need one flip probability per code bit")
        self.sm = sm
        self.m, self.r = sm.m, sm.r
        costs = [_llr(p) for p in probs]
        # bits with equal flip cost form one probability class
        self.classes = sorted(set(costs))
        self.bit_class = [self.classes.index(c) for c in costs]
        self.codewords = np.array([sm.codeword(h) for h in range(1 << self.m)], dtype=np.int64)
        self._bitcost = np.array(costs)
        self._leaders: np.ndarray | None = None
        self._cache: dict[int, int] = {}

    def _cost(self, words: np.ndarray) -> np.ndarray:
        total = np.zeros(words.shape, dtype=float)
        hamming = np.zeros(words.shape, dtype=np.int64)
        for b, c in enumerate(self._bitcost):
            flipped = (words >> b) & 1
            hamming += flipped
            if math.isinf(c):
                total = np.where(flipped == 1, math.inf, total)
            elif c:
                total = total + flipped * c
        # a coset of impossible patterns only: rank by Hamming weight instead
        bad = np.isinf(total).all(axis=-1, keepdims=True)
        return np.where(bad, hamming.astype(float), total)

    def _leader_of(self, sigmas: np.ndarray) -> np.ndarray:
        cost = self._cost(self.codewords[None, :] ^ (sigmas[:, None] << self.m))
        low = cost.min(axis=1, keepdims=True)
        ok = cost <= low + TIE_RTOL * np.maximum(1.0, np.abs(low))
        return np.argmax(ok, axis=1)  # first (smallest) minimizing message

    def leaders(self) -> np.ndarray:
        """Leader message t(sigma) for every coset label."""
        if self._leaders is None:
            out = np.empty(1 << self.r, dtype=np.int64)
            step = max(1, (1 << 20) >> self.m)
            for s0 in range(0, 1 << self.r, step):
                sig = np.arange(s0, min(s0 + step, 1 << self.r), dtype=np.int64)
                out[sig] = self._leader_of(sig)
            self._leaders = out
        return self._leaders

    def split(self, x: int) -> tuple[int, int]:
        """(message h, coset sigma) with x = c(h) + (0, sigma)."""
        h = x & ((1 << self.m) - 1)
        return h, (x >> self.m) ^ (int(self.codewords[h]) >> self.m)

    def decode(self, x: int) -> int:
        h, sigma = self.split(x)
        if self._leaders is not None:
            return h ^ int(self._leaders[sigma])
        t = self._cache.get(sigma)
        if t is None:
            t = self._cache[sigma] = int(self._leader_of(np.array([sigma], dtype=np.int64))[0])
        return h ^ t


def ml_decode(sm: SMCode, observed: int, probs: Sequence) -> int:
    """Information bits of the most likely transmitted codeword."""
    return MLDecoder(sm, probs).decode(observed)


def decode_table(dec: MLDecoder) -> np.ndarray:
    """Decoded message for every received word (index = word)."""
    M = dec.m + dec.r
    if M > MAX_EXACT_BITS:
        raise SizeLimitError(f"2^{M} received words exceeds the table limit")
    lead = dec.leaders()
    hs = np.arange(1 << dec.m, dtype=np.int64)
    sig = np.arange(1 << dec.r, dtype=np.int64)
    words = dec.codewords[None, :] ^ (sig[:, None] << dec.m)
    out = np.empty(1 << M, dtype=np.int64)
    out[words.ravel()] = (hs[None, :] ^ lead[:, None]).ravel()
    return out


@dataclass(frozen=True)
class ErrorRates:
    P_se: float | Fraction
    P_SBER: float | Fraction
    mode: str  # "exact-rational" or "binary64"


def _profile_counts(sm: SMCode, dec: MLDecoder):
    """Block and bit error counts grouped by flips per probability class.

    The zero codeword is sent, so the received word is the flip pattern.
    """
    table = decode_table(dec)
    M = sm.length
    cls = np.array(dec.bit_class)
    ncls = len(dec.classes)
    words = np.arange(1 << M, dtype=np.int64)
    flips = np.empty((words.size, ncls), dtype=np.int64)
    for c in range(ncls):
        mask = sum(1 << b for b in range(M) if cls[b] == c)
        flips[:, c] = np.bitwise_count((words & mask).astype(np.uint64))
    profiles, inv = np.unique(flips, axis=0, return_inverse=True)
    inv = inv.reshape(-1)
    wb = np.bincount(inv, weights=(table != 0), minlength=len(profiles))
    bb = np.bincount(inv, weights=np.bitwise_count(table.astype(np.uint64)), minlength=len(profiles))
    blocks, bits = {}, {}
    for u, prof in enumerate(profiles):
        key = tuple(int(a) for a in prof)
        blocks[key] = int(round(wb[u]))
        bits[key] = int(round(bb[u]))
    sizes = [int(np.sum(cls == c)) for c in range(ncls)]
    return blocks, bits, sizes


def exact_Pse(sm: SMCode, model: MeasurementModel, exact: bool | None = None) -> ErrorRates:
    """P_se and P_SBER summed over every flip pattern (all-zero codeword sent).

    With rational p_m (Fraction or int) the sums are exact rationals unless
    ``exact=False``; float p_m gives binary64.
    """
    if sm.length > MAX_EXACT_BITS:
        raise SizeLimitError(f"2^{sm.length} flip patterns exceeds the exact limit")
    weights = expand_weights(model.weights, sm.length)
    if exact is None:
        exact = isinstance(model.p_m, (Fraction, int))
    pm = Fraction(model.p_m) if exact else float(model.p_m)
    probs = [p_err(w, pm) for w in weights]
    dec = MLDecoder(sm, probs)
    blocks, bits, sizes = _profile_counts(sm, dec)
    # probability of one pattern with a_c flips in class c
    cls_p = {}
    for b, c in enumerate(dec.bit_class):
        cls_p.setdefault(c, probs[b])
    zero = Fraction(0) if exact else 0.0
    P_se, P_bit = zero, zero
    for prof, nblk in blocks.items():
        pr = 1
        for c, a in enumerate(prof):
            p = cls_p[c]
            pr *= p ** a * (1 - p) ** (sizes[c] - a)
        P_se += nblk * pr
        P_bit += bits[prof] * pr
    return ErrorRates(P_se, P_bit / sm.m, "exact-rational" if exact else "binary64")


def average_over_codewords(sm: SMCode, model: MeasurementModel) -> ErrorRates:
    """P_se averaged over all transmitted codewords (symmetry check, binary64)."""
    weights = expand_weights(model.weights, sm.length)
    probs = [float(p_err(w, float(model.p_m))) for w in weights]
    dec = MLDecoder(sm, probs)
    table = decode_table(dec)
    M = sm.length
    words = np.arange(1 << M, dtype=np.int64)
    pr = np.ones(words.shape)
    for b, p in enumerate(probs):
        f = (words >> b) & 1
        pr *= np.where(f == 1, p, 1 - p)
    P_se = P_bit = 0.0
    for h in range(1 << sm.m):
        got = table[words ^ int(dec.codewords[h])]
        err = got ^ h
        P_se += float(np.sum(pr[err != 0]))
        P_bit += float(np.sum(pr * np.bitwise_count(err.astype(np.uint64))))
    k = 1 << sm.m
    return ErrorRates(P_se / k, P_bit / k / sm.m, "binary64")


@dataclass(frozen=True)
class MCEstimate:
    P_se: float
    P_SBER: float
    radius_se: float
    radius_sber: float
    trials: int
    seed: int


def mc_Pse(sm: SMCode, model: MeasurementModel, trials: int, seed: int, chunk: int = 1 << 16) -> MCEstimate:
    """Monte Carlo estimate with 95% normal-approximation confidence radii."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    weights = expand_weights(model.weights, sm.length)
    probs = np.array([float(p_err(w, float(model.p_m))) for w in weights])
    dec = MLDecoder(sm, probs)
    table = decode_table(dec) if sm.length <= MAX_EXACT_BITS else None
    rng = np.random.default_rng(seed)
    blk = 0
    s1 = s2 = 0.0
    done = 0
    shifts = np.arange(sm.length, dtype=np.int64)
    while done < trials:
        t = min(chunk, trials - done)
        flips = rng.random((t, sm.length)) < probs[None, :]
        words = (flips.astype(np.int64) << shifts[None, :]).sum(axis=1)
        if table is not None:
            got = table[words]
        else:
            got = np.array([dec.decode(int(w)) for w in words], dtype=np.int64)
        blk += int(np.count_nonzero(got))
        be = np.bitwise_count(got.astype(np.uint64)).astype(float) / sm.m
        s1 += float(be.sum())
        s2 += float((be * be).sum())
        done += t
    p = blk / trials
    q = s1 / trials
    var_q = max(s2 / trials - q * q, 0.0)
    return MCEstimate(p, q, 1.96 * math.sqrt(p * (1 - p) / trials), 1.96 * math.sqrt(var_q / trials), trials, seed)


def repetition_oracle(q, l: int = 5, m: int = 3):
    """P_se of l-fold repetition of m bits under majority vote, flip probability q."""
    t = l // 2 + 1
    wrong = sum(math.comb(l, i) * q ** i * (1 - q) ** (l - i) for i in range(t, l + 1))
    return 1 - (1 - wrong) ** m


def syndrome_code(name: str) -> SMCode:
    if name == "rep5":
        return repetition_sm(3, 5)
    if name == "builtin-15-3":
        return builtin_sm_15_3()
    raise ValueError(f"unknown SM code {name!r}")


def comparison_table(pm_grid: Sequence, weight: int = 4) -> list[dict]:
    """Exact P_se / P_SBER of the [15,3] code and of 5-fold repetition per p_m."""
    codes = {"sm15_3": builtin_sm_15_3(), "rep5": repetition_sm(3, 5)}
    rows = []
    for pm in pm_grid:
        row = {"p_m": pm}
        for name, sm in codes.items():
            res = exact_Pse(sm, MeasurementModel(pm, (weight,)))
            row[f"P_se_{name}"] = res.P_se
            row[f"P_SBER_{name}"] = res.P_SBER
        rows.append(row)
    return rows


def loglog_slope(sm: SMCode, weight: int, p1: float, p2: float) -> float:
    """Slope of log P_se against log p_err between two small p_m values."""
    a = exact_Pse(sm, MeasurementModel(p1, (weight,)), exact=False).P_se
    b = exact_Pse(sm, MeasurementModel(p2, (weight,)), exact=False).P_se
    return (math.log(b) - math.log(a)) / (math.log(p_err(weight, p2)) - math.log(p_err(weight, p1)))
