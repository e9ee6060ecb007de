"""GF(4) arithmetic, Pauli vectors and the mixed data/syndrome alphabet.

Elements of GF(4) = {0, 1, w, w^2} are stored as 2-bit codes in the basis
{1, w}: bit 0 is the coefficient of 1 (the "X" bit) and bit 1 the
coefficient of w (the "Z" bit).  So 1 -> 0b01, w -> 0b10, w^2 = 1 + w -> 0b11,
and field addition is XOR of codes.  A length-n vector keeps the two bits of
every coordinate in two integer bit-planes, which reduces weights, sums and
the trace inner product to a handful of word operations.

The encoding is internal; text formats use the symbols 0,1,w,W or I,X,Z,Y.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from .gf2 import bitstring, parse_bitstring, parity

# discrete logs of the nonzero codes: 1 = w^0, w = w^1, w^2 = w^2
_LOG = {1: 0, 2: 1, 3: 2}
_EXP = (1, 2, 3)

_F4_SYMBOLS = "01wW"
_PAULI_SYMBOLS = "IXZY"
_FROM_SYMBOL = {
    "0": 0, "1": 1, "w": 2, "W": 3,
    "I": 0, "X": 1, "Z": 2, "Y": 3,
}


@dataclass(frozen=True, order=True)
class F4:
    """A single field element; ``code`` is the 2-bit code described above."""

    code: int

    def __post_init__(self):
        if self.code not in (0, 1, 2, 3):
            raise ValueError(f"invalid GF(4) code {self.code!r}")

    def __add__(self, other: F4) -> F4:
        return F4(self.code ^ other.code)

    __sub__ = __add__

    def __mul__(self, other: F4) -> F4:
        if self.code == 0 or other.code == 0:
            return ZERO
        return F4(_EXP[(_LOG[self.code] + _LOG[other.code]) % 3])

    def __pow__(self, e: int) -> F4:
        if self.code == 0:
            return ONE if e == 0 else ZERO
        return F4(_EXP[(_LOG[self.code] * e) % 3])

    def conj(self) -> F4:
        """Frobenius conjugation x -> x^2 (swaps w and w^2)."""
        return self ** 2

    def trace(self) -> int:
        """Tr(x) = x + x^2, which lands in {0, 1}."""
        t = self + self ** 2
        assert t.code in (0, 1)
        return t.code

    def __bool__(self) -> bool:
        return self.code != 0

    def __str__(self) -> str:
        return _F4_SYMBOLS[self.code]

    def __repr__(self) -> str:
        return f"F4({_F4_SYMBOLS[self.code]})"

    @classmethod
    def parse(cls, ch: str) -> F4:
        try:
            return cls(_FROM_SYMBOL[ch])
        except KeyError:
            raise ValueError(f"invalid GF(4) symbol {ch!r}") from None


ZERO, ONE, OMEGA, OMEGA2 = F4(0), F4(1), F4(2), F4(3)


@dataclass(frozen=True)
class PauliVector:
    """A phaseless n-qubit Pauli operator as a vector in GF(4)^n."""

    n: int
    x: int = 0
    z: int = 0

    def __post_init__(self):
        mask = (1 << self.n) - 1
        if self.n < 0 or self.x & ~mask or self.z & ~mask:
            raise ValueError("bit-planes exceed the vector length")

    @classmethod
    def zero(cls, n: int) -> PauliVector:
        return cls(n)

    @classmethod
    def from_entries(cls, entries: Iterable[F4 | int]) -> PauliVector:
        x = z = 0
        n = 0
        for i, e in enumerate(entries):
            code = e.code if isinstance(e, F4) else int(e)
            if code not in (0, 1, 2, 3):
                raise ValueError(f"invalid GF(4) code {code!r}")
            x |= (code & 1) << i
            z |= (code >> 1) << i
            n = i + 1
        return cls(n, x, z)

    @classmethod
    def parse(cls, text: str) -> PauliVector:
        """Parse a literal over {0,1,w,W} or {I,X,Z,Y}; whitespace is ignored."""
        chars = [ch for ch in text if not ch.isspace()]
        try:
            return cls.from_entries(_FROM_SYMBOL[ch] for ch in chars)
        except KeyError as exc:
            raise ValueError(f"invalid symbol {exc.args[0]!r} in {text!r}") from None

    @property
    def support(self) -> int:
        return self.x | self.z

    @property
    def weight(self) -> int:
        return self.support.bit_count()

    def __getitem__(self, i: int) -> F4:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return F4(((self.x >> i) & 1) | (((self.z >> i) & 1) << 1))

    def entries(self) -> list[F4]:
        return [self[i] for i in range(self.n)]

    def __add__(self, other: PauliVector) -> PauliVector:
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} != {other.n}")
        return PauliVector(self.n, self.x ^ other.x, self.z ^ other.z)

    def __bool__(self) -> bool:
        return bool(self.x or self.z)

    @property
    def symplectic(self) -> int:
        """The 2n-bit form: x-plane in the low n bits, z-plane above."""
        return self.x | (self.z << self.n)

    @classmethod
    def from_symplectic(cls, n: int, v: int) -> PauliVector:
        mask = (1 << n) - 1
        return cls(n, v & mask, v >> n)

    def to_string(self, alphabet: str = "f4") -> str:
        symbols = _PAULI_SYMBOLS if alphabet == "pauli" else _F4_SYMBOLS
        return "".join(symbols[e.code] for e in self.entries())

    def __str__(self) -> str:
        return self.to_string()


def tau_map(labels: Sequence[str] | str) -> PauliVector:
    """Image of a Pauli string I/X/Z/Y under tau (I,X,Z,Y -> 0,1,w,w^2)."""
    codes = []
    for lab in labels:
        if lab not in _PAULI_SYMBOLS:
            raise ValueError(f"invalid Pauli label {lab!r}")
        codes.append(_FROM_SYMBOL[lab])
    return PauliVector.from_entries(codes)


def trace_inner(a: PauliVector, b: PauliVector) -> int:
    """Tr(sum a_i * conj(b_i)); 0 iff the two Pauli operators commute.

    With the bit-plane encoding this is the symplectic form
    <a.x, b.z> + <a.z, b.x> over GF(2).
    """
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} != {b.n}")
    return parity((a.x & b.z) ^ (a.z & b.x))


def trace_inner_field(a: PauliVector, b: PauliVector) -> int:
    """Same value as :func:`trace_inner`, computed with field arithmetic."""
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} != {b.n}")
    total = reduce(F4.__add__, (ai * bi.conj() for ai, bi in zip(a.entries(), b.entries())), ZERO)
    return total.trace()


@dataclass(frozen=True)
class DSVector:
    """An element of GF(4)^n x GF(2)^(m+r): a data part and a syndrome part."""

    data: PauliVector
    syndrome: int = 0
    slen: int = 0

    def __post_init__(self):
        if self.slen < 0 or self.syndrome >> self.slen:
            raise ValueError("syndrome bits exceed the syndrome length")

    @classmethod
    def parse(cls, data: str, syndrome: str = "") -> DSVector:
        synd = syndrome.strip()
        return cls(PauliVector.parse(data), parse_bitstring(synd) if synd else 0, len(synd))

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.n, self.slen

    def __add__(self, other: DSVector) -> DSVector:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} != {other.shape}")
        return DSVector(self.data + other.data, self.syndrome ^ other.syndrome, self.slen)

    def __str__(self) -> str:
        return f"{self.data}|{bitstring(self.syndrome, self.slen)}"


def star(a: DSVector, b: DSVector) -> int:
    """Mixed inner product: trace form on the data part plus the binary dot product."""
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} != {b.shape}")
    return trace_inner(a.data, b.data) ^ parity(a.syndrome & b.syndrome)


def split_weight(v: DSVector) -> tuple[int, int]:
    return v.data.weight, v.syndrome.bit_count()
