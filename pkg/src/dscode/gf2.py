"""Linear algebra over GF(2) on integer bitmasks.

A vector of length n is a Python int whose bit ``i`` holds coordinate ``i``.
Matrices are sequences of such row masks.
"""

from __future__ import annotations

from typing import Iterable, Sequence


def parity(v: int) -> int:
    return v.bit_count() & 1


def dot(a: int, b: int) -> int:
    return (a & b).bit_count() & 1


class RowBasis:
    """Incrementally built echelon basis of a row space.

    Each stored row has a distinct leading (highest) bit, so reducing a vector
    against the rows in insertion order is enough to test membership.
    """

    def __init__(self, rows: Iterable[int] = ()):
        self.pivots: dict[int, int] = {}
        for r in rows:
            self.add(r)

    def reduce(self, v: int) -> int:
        while v:
            top = v.bit_length() - 1
            row = self.pivots.get(top)
            if row is None:
                return v
            v ^= row
        return 0

    def add(self, v: int) -> bool:
        """Insert ``v``; returns False if it was already in the span."""
        v = self.reduce(v)
        if not v:
            return False
        self.pivots[v.bit_length() - 1] = v
        return True

    def __contains__(self, v: int) -> bool:
        return self.reduce(v) == 0

    def __len__(self) -> int:
        return len(self.pivots)

    def span(self) -> list[int]:
        """All 2^rank elements of the span (rank must be small)."""
        out = [0]
        for row in self.pivots.values():
            out += [x ^ row for x in out]
        return out


def rank(rows: Iterable[int]) -> int:
    return len(RowBasis(rows))


def solve_combination(rows: Sequence[int], target: int) -> list[int] | None:
    """Coefficients c with XOR of c_i*rows[i] equal to ``target``, or None."""
    # Track which original rows were combined into each echelon row.
    pivots: dict[int, tuple[int, int]] = {}
    for idx, r in enumerate(rows):
        tag = 1 << idx
        while r:
            top = r.bit_length() - 1
            if top not in pivots:
                pivots[top] = (r, tag)
                break
            pr, pt = pivots[top]
            r ^= pr
            tag ^= pt
    tag = 0
    v = target
    while v:
        top = v.bit_length() - 1
        if top not in pivots:
            return None
        pr, pt = pivots[top]
        v ^= pr
        tag ^= pt
    return [(tag >> i) & 1 for i in range(len(rows))]


def transpose(rows: Sequence[int], ncols: int) -> list[int]:
    return [sum(((r >> j) & 1) << i for i, r in enumerate(rows)) for j in range(ncols)]


def from_bits(bits: Iterable[int]) -> int:
    v = 0
    for i, b in enumerate(bits):
        if b & 1:
            v |= 1 << i
    return v


def to_bits(v: int, n: int) -> list[int]:
    return [(v >> i) & 1 for i in range(n)]


def bitstring(v: int, n: int) -> str:
    return "".join("1" if (v >> i) & 1 else "0" for i in range(n))


def parse_bitstring(s: str) -> int:
    s = s.strip()
    if any(ch not in "01" for ch in s):
        raise ValueError(f"not a binary string: {s!r}")
    return from_bits(int(ch) for ch in s)


def nullspace(rows: Sequence[int], ncols: int) -> list[int]:
    """Basis of {y : dot(row, y) = 0 for every row}."""
    pivots: list[tuple[int, int]] = []  # (pivot column, row), fully reduced
    for r in rows:
        for p, pr in pivots:
            if (r >> p) & 1:
                r ^= pr
        if not r:
            continue
        p = (r & -r).bit_length() - 1
        pivots = [(q, qr ^ r if (qr >> p) & 1 else qr) for q, qr in pivots]
        pivots.append((p, r))
    pivot_cols = {p for p, _ in pivots}
    basis = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        y = 1 << f
        for p, pr in pivots:
            if (pr >> f) & 1:
                y |= 1 << p
        basis.append(y)
    return basis
