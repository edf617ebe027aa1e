import math
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cyclerange import CharPolyFamily, ValidationError, WeightVector, build_family, imag_part_spectrum
from cyclerange.charpoly import family_coeffs_batch, parity_reconstruction

from conftest import dense_charpoly, random_weights

weights = st.lists(st.floats(0.0, 4.0), min_size=2, max_size=10).map(WeightVector)


@settings(max_examples=200, deadline=None)
@given(weights, st.floats(0, 2 * math.pi))
def test_family_matches_dense_determinant(a, theta):
    fam = build_family(a)
    got = fam.at_theta(theta)
    want = dense_charpoly(a, theta)
    scale = 1 + a.norm_sq()
    assert np.allclose(got, want, atol=1e-9 * scale ** (a.n / 2), rtol=1e-9)


@settings(max_examples=100, deadline=None)
@given(weights)
def test_f_is_monic_with_parity(a):
    f = build_family(a).f_coeffs
    assert f[0] == 1.0
    assert all(c == 0 for c in f[1::2])  # only powers of matching parity survive
    assert f[2] == -a.norm_sq()


def test_closed_forms_n4_n5_n6():
    rng = random.Random(1)
    for _ in range(1000):
        for n in (4, 5, 6):
            a = random_weights(rng, n, 0.0, 3.0, zero_prob=0.1)
            s = a.sq
            f = build_family(a).f_coeffs
            if n == 4:
                want = [1, 0, -s.sum(), 0, s[0] * s[2] + s[1] * s[3]]
            elif n == 5:
                b1 = s[0] * s[2] + s[0] * s[3] + s[1] * s[3] + s[1] * s[4] + s[2] * s[4]
                want = [1, 0, -s.sum(), 0, b1, 0]
            else:
                s2 = sum(s[i] * s[j] for i in range(6) for j in range(i + 1, 6)
                         if (j - i) % 6 not in (1, 5))
                p = s[0] * s[2] * s[4] + s[1] * s[3] * s[5]
                want = [1, 0, -s.sum(), 0, s2, 0, -p]
            assert np.allclose(f, want, rtol=1e-12, atol=1e-12)


def test_alpha_and_equal_weights():
    # all ones: the family at theta is prod(z - 2 cos(theta + 2 pi k / n))
    for n in range(2, 9):
        fam = build_family(WeightVector([1.0] * n))
        assert fam.alpha == 1.0
        theta = 0.3
        want = np.poly([2 * math.cos(theta + 2 * math.pi * k / n) for k in range(n)])
        assert np.allclose(fam.at_theta(theta), want, atol=1e-12)


def test_batch_matches_exact():
    rng = np.random.default_rng(3)
    for n in range(2, 11):
        sq = rng.uniform(0, 4, size=(20, n))
        got = family_coeffs_batch(sq)
        want = [build_family(WeightVector(np.sqrt(row))).f_coeffs for row in sq]
        assert np.allclose(got, want, rtol=1e-11, atol=1e-11)


def test_dihedral_invariance():
    a = WeightVector([0.3, 1.1, 2.0, 0.7, 1.9, 2.5, 0.4])
    base = build_family(a)
    for k in range(a.n):
        p = tuple(range(k + 1, a.n + 1)) + tuple(range(1, k + 1))
        for q in (p, p[::-1]):
            other = build_family(a.arrange(q))
            assert np.allclose(other.f_coeffs, base.f_coeffs, rtol=1e-13)
            assert other.alpha == pytest.approx(base.alpha)


def test_json_roundtrip():
    fam = build_family(WeightVector([1.5, 0.25, 3.0, 2.0]))
    assert CharPolyFamily.from_json(fam.to_json()) == fam
    with pytest.raises(ValidationError):
        CharPolyFamily.from_dict({"n": 3, "f": [1, 0], "alpha": 1})


def test_parity_reconstruction():
    rng = random.Random(4)
    for n in range(2, 10):
        a = random_weights(rng, n)
        spec = imag_part_spectrum(a)
        assert len(spec.alphas) == n // 2
        rebuilt = parity_reconstruction(spec, a.alpha)
        assert np.allclose(rebuilt, build_family(a).f_coeffs, atol=1e-8 * (1 + a.norm_sq()) ** (n / 2))
