import math

import numpy as np
import pytest

from cyclerange import ValidationError, WeightVector, export_curve, load_curve, numerical_radius, sample_boundary


def _lam1(A, phi):
    r = np.exp(-1j * phi) * A
    return np.linalg.eigvalsh(0.5 * (r + r.conj().T))[-1]


@pytest.mark.parametrize("w", [[0.5, 1.0, 2.0], [1, 2, 3, 4, 5], [0.3, 2.0, 1.1, 0.8, 1.7, 2.4]])
def test_points_on_supporting_lines(w):
    a = WeightVector(w)
    c = sample_boundary(a, 32)
    A = a.matrix().astype(complex)
    assert len(c) == 32 * a.n and c.symmetry_order == a.n
    assert list(c.thetas) == sorted(c.thetas)
    for phi, p in zip(c.thetas, c.points):
        assert (p * np.exp(-1j * phi)).real == pytest.approx(_lam1(A, phi), abs=1e-10)
    # every point lies in every sampled half-plane
    for phi in np.linspace(0, 2 * math.pi, 50):
        assert np.all((c.as_array() * np.exp(-1j * phi)).real <= _lam1(A, phi) + 1e-10)


def test_symmetry():
    a = WeightVector([1, 2, 3, 4])
    pts = sample_boundary(a, 16).as_array()
    rot = pts * 1j
    for p in rot:
        assert np.min(np.abs(pts - p)) < 1e-12


def test_disk():
    a = WeightVector([1.0, 0.0, 2.0])
    c = sample_boundary(a, 12)
    assert c.is_disk and len(c) == 12
    assert np.allclose(np.abs(c.as_array()), numerical_radius(a))


def test_square_vertices_and_edge():
    # S(1,1,1,1) is the square with vertices 1, i, -1, -i
    c = sample_boundary(WeightVector([1, 1, 1, 1]), 8)
    assert len(c) == 32
    corners = {complex(round(p.real, 9), round(p.imag, 9)) for p in c.points}
    assert corners == {1, 1j, -1, -1j}
    # the normal pi/4 meets a whole edge; both endpoints come back
    from cyclerange.boundary import _contact_points
    A = WeightVector([1, 1, 1, 1]).matrix().astype(complex)
    ends = _contact_points(A, math.pi / 4, 1.0)
    assert len(ends) == 2
    assert sorted((round(p.real, 9), round(p.imag, 9)) for p in ends) == [(0, 1), (1, 0)]


def test_export_roundtrip():
    c = sample_boundary(WeightVector([0.5, 1.5, 1.0]), 8)
    j = load_curve(export_curve(c, "json"), "json")
    assert j == c
    s = load_curve(export_curve(c, "csv"), "csv", symmetry_order=3)
    assert s == c
    assert export_curve(c, "csv").decode().splitlines()[0] == "theta,re,im"
    d = sample_boundary(WeightVector([1, 0, 1]), 8)
    assert load_curve(export_curve(d, "csv")) == d


def test_validation():
    with pytest.raises(ValidationError):
        sample_boundary(WeightVector([1, 2, 3]), 4)
    c = sample_boundary(WeightVector([1, 2, 3]), 8)
    with pytest.raises(ValidationError):
        export_curve(c, "xml")
