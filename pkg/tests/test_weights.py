import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cyclerange import (
    ValidationError,
    WeightVector,
    canonical_dihedral,
    from_r,
    normalize_complex,
    parse_weights,
    r_decomposition,
)
from cyclerange.weights import dihedral_orbit

pos = st.floats(min_value=0.0, max_value=50.0, allow_nan=False)


def test_matrix_layout():
    m = WeightVector([1, 2, 3]).matrix()
    assert m[0, 1] == 1 and m[1, 2] == 2 and m[2, 0] == 3
    assert np.count_nonzero(m) == 3


def test_two_by_two_corner_adds():
    # for n = 2 the corner lands on the same off-diagonal pair
    m = WeightVector([1, 2]).matrix()
    assert m[0, 1] == 1 and m[1, 0] == 2


@pytest.mark.parametrize("bad", [[1.0], [1.0, -1.0], [1.0, float("nan")], [float("inf"), 1.0]])
def test_rejects_bad_weights(bad):
    with pytest.raises(ValidationError):
        WeightVector(bad)


def test_squares_exact():
    w = WeightVector.from_squares([0, 3, 4])
    assert w.squares == (0, 3, 4)
    assert w.has_zero and w.alpha == 0.0
    assert WeightVector([2, 3]).alpha == 6.0


def test_arrange_one_based():
    w = WeightVector([1, 2, 3, 4]).arrange((4, 2, 1, 3))
    assert w.a == (4, 2, 1, 3)
    with pytest.raises(ValidationError):
        WeightVector([1, 2, 3]).arrange((1, 1, 2))


def test_parse_weights():
    assert parse_weights("1, 2.5,3").a == (1.0, 2.5, 3.0)
    w = parse_weights("sq:0,3,4,8")
    assert w.squares == (0, 3, 4, 8)
    assert parse_weights("1/2,1").squares[0] == Fraction(1, 4)
    for bad in ["", "1", "a,b", "1,-2", "sq:1,-1"]:
        with pytest.raises(ValidationError):
            parse_weights(bad)


def test_canonical_is_lex_min_of_orbit():
    c = canonical_dihedral((4, 2, 1, 3, 5, 6))
    assert c.rep == (1, 2, 4, 6, 5, 3)
    assert canonical_dihedral((1, 3, 5, 6, 4, 2)) == c
    assert canonical_dihedral((1, 2, 3, 4, 5, 6)) != c
    assert canonical_dihedral((3, 1, 2, 4, 6, 5)) == c  # reversal of a rotation


@given(st.permutations(list(range(1, 8))), st.integers(0, 6), st.booleans())
def test_canonical_invariant_under_dihedral_action(p, k, rev):
    q = p[k:] + p[:k]
    if rev:
        q = q[::-1]
    assert canonical_dihedral(p) == canonical_dihedral(q)
    assert len(set(dihedral_orbit(p))) == 14


@given(st.lists(st.fractions(min_value=0, max_value=100), min_size=2, max_size=9))
def test_r_roundtrip(sq):
    sq = sorted(sq)
    w = WeightVector.from_squares(sq)
    assert from_r(r_decomposition(w).r).squares == w.squares


def test_from_r_rejects_negative_partial():
    with pytest.raises(ValidationError):
        from_r([1, -2, 3])


def _lam1(A, theta):
    z = np.exp(1j * theta) * A
    return np.linalg.eigvalsh(0.5 * (z + z.conj().T))[-1]


@given(st.lists(st.tuples(st.floats(0.1, 5.0), st.floats(-math.pi, math.pi)), min_size=2, max_size=7),
       st.floats(0, 2 * math.pi))
def test_phase_reduction_rotates_the_range(pairs, theta):
    w = [r * complex(math.cos(t), math.sin(t)) for r, t in pairs]
    n = len(w)
    red = normalize_complex(w)
    assert np.allclose(red.magnitudes.a, [abs(z) for z in w])
    assert 0 <= red.phase < 2 * math.pi / n
    A = np.zeros((n, n), dtype=complex)
    for j in range(n):
        A[j, (j + 1) % n] = w[j]
    B = red.magnitudes.matrix().astype(complex)
    assert abs(_lam1(A, theta) - _lam1(B, theta + red.phase)) < 1e-9 * (1 + sum(abs(z) for z in w))


def test_phase_reduction_zero_weight():
    assert normalize_complex([1j, 0, 2]).phase == 0.0
