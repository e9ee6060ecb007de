import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from dscode.gf4 import (F4, OMEGA, OMEGA2, ONE, ZERO, DSVector, PauliVector, split_weight, star, tau_map,
                        trace_inner, trace_inner_field)

I2 = np.eye(2, dtype=complex)
PAULI = {
    0: I2,
    1: np.array([[0, 1], [1, 0]], dtype=complex),
    2: np.array([[1, 0], [0, -1]], dtype=complex),
    3: np.array([[0, -1j], [1j, 0]], dtype=complex),
}


def _operator(v: PauliVector):
    out = np.ones((1, 1), dtype=complex)
    for e in v.entries():
        out = np.kron(out, PAULI[e.code])
    return out


def test_field_tables():
    elems = [ZERO, ONE, OMEGA, OMEGA2]
    assert OMEGA * OMEGA == OMEGA2
    assert OMEGA * OMEGA2 == ONE
    assert ONE + OMEGA == OMEGA2
    assert [e.trace() for e in elems] == [0, 0, 1, 1]
    for a, b in itertools.product(elems, repeat=2):
        assert a * b == b * a
        assert (a + b).trace() == a.trace() ^ b.trace()
    assert OMEGA.conj() == OMEGA2


@pytest.mark.parametrize("n", [1, 2, 3])
def test_trace_matches_commutation_of_matrices(n):
    vecs = [PauliVector.from_symplectic(n, v) for v in range(1 << (2 * n))]
    for a in vecs:
        A = _operator(a)
        for b in vecs:
            B = _operator(b)
            commute = np.allclose(A @ B, B @ A)
            assert trace_inner(a, b) == (0 if commute else 1)


def test_trace_examples():
    X, Z = PauliVector.parse("1"), PauliVector.parse("w")
    assert trace_inner(X, X) == 0
    assert trace_inner(X, Z) == 1
    x = tau_map("XYZII")
    assert trace_inner(x, x) == 0


@given(st.integers(1, 8).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 4 ** n - 1),
                                                     st.integers(0, 4 ** n - 1))))
def test_trace_bitplane_equals_field_arithmetic(args):
    n, u, v = args
    a, b = PauliVector.from_symplectic(n, u), PauliVector.from_symplectic(n, v)
    assert trace_inner(a, b) == trace_inner_field(a, b) == trace_inner(b, a)


def test_tau():
    assert tau_map("XYZII").to_string() == "1Ww00"
    assert tau_map("II") == PauliVector.parse("00")
    assert tau_map("Y").entries() == [OMEGA2]
    with pytest.raises(ValueError):
        tau_map("XQ")


def test_star_examples():
    e1 = DSVector.parse("0", "1")
    assert star(e1, e1) == 1
    assert star(DSVector.parse("1"), DSVector.parse("w")) == 1
    x = DSVector.parse("1Ww0", "101")
    assert star(x, DSVector(PauliVector.zero(4), 0, 3)) == 0


def test_split_weight():
    assert split_weight(DSVector.parse("00", "")) == (0, 0)
    assert split_weight(DSVector.parse("1Ww00", "101")) == (3, 2)
    assert split_weight(DSVector.parse("0000000", "111111")) == (0, 6)


def test_parse_round_trip_and_errors():
    v = PauliVector.parse("IXZY")
    assert v.to_string() == "01wW"
    assert v.to_string("pauli") == "IXZY"
    assert PauliVector.from_symplectic(4, v.symplectic) == v
    with pytest.raises(ValueError):
        PauliVector.parse("01q")
    with pytest.raises(ValueError):
        F4(4)
    with pytest.raises(ValueError):
        DSVector.parse("1", "10") + DSVector.parse("1", "1")
