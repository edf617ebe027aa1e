"""Sampling the boundary of W(S(a)) from supporting lines.

For an outward normal angle ``phi`` the supporting line touches W(A) at
``u* A u`` where ``u`` is a top eigenvector of ``Re(e^{-i phi} A)``.  When the
top eigenvalue is double the contact set is a segment; its endpoints are the
extreme values of ``Im(e^{-i phi} A)`` compressed to the eigenspace.
"""

from __future__ import annotations

import io
import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .spectra import numerical_radius
from .weights import WeightVector

__all__ = ["BoundaryCurve", "sample_boundary", "export_curve", "load_curve"]

DEGENERACY = 1e-8


@dataclass(frozen=True)
class BoundaryCurve:
    points: tuple[complex, ...]
    thetas: tuple[float, ...]  # outward normal angle of each point, ascending in [0, 2 pi)
    symmetry_order: int | None  # None for the disk (full rotation symmetry)
    radius: float | None = None

    @property
    def is_disk(self) -> bool:
        return self.symmetry_order is None

    def __len__(self) -> int:
        return len(self.points)

    def as_array(self) -> np.ndarray:
        return np.array(self.points, dtype=complex)


def _contact_points(A: np.ndarray, phi: float, scale: float) -> list[complex]:
    rot = np.exp(-1j * phi) * A
    H = 0.5 * (rot + rot.conj().T)
    K = (rot - rot.conj().T) / 2j
    ev, vec = np.linalg.eigh(H)
    if ev[-1] - ev[-2] >= DEGENERACY * scale:
        u = vec[:, -1]
        return [complex(u.conj() @ A @ u)]
    U = vec[:, -2:]
    k2 = U.conj().T @ K @ U
    _, y = np.linalg.eigh(0.5 * (k2 + k2.conj().T))
    pts = []
    for col in (y[:, 0], y[:, 1]):
        u = U @ col
        pts.append(complex(u.conj() @ A @ u))
    return pts


def sample_boundary(a: WeightVector, m: int = 64) -> BoundaryCurve:
    """``m`` normal directions per period ``2 pi/n`` (half-offset), replicated n times.

    A zero weight makes W a disk; then ``m`` points on the circle are returned.
    """
    if not isinstance(a, WeightVector):
        a = WeightVector(a)
    if m < 8:
        raise ValidationError(f"m must be >= 8, got {m}")
    if a.has_zero:
        r = numerical_radius(a)
        th = 2 * math.pi * np.arange(m) / m
        pts = tuple(complex(r * math.cos(t), r * math.sin(t)) for t in th)
        return BoundaryCurve(pts, tuple(float(t) for t in th), None, r)
    n = a.n
    A = a.matrix().astype(complex)
    scale = float(np.linalg.norm(A, 2))
    period = 2 * math.pi / n
    base: list[tuple[float, complex]] = []
    for j in range(m):
        phi = (j + 0.5) * period / m
        for p in _contact_points(A, phi, scale):
            base.append((phi, p))
    rows = []
    for k in range(n):
        w = complex(math.cos(k * period), math.sin(k * period))
        for phi, p in base:
            rows.append((phi + k * period, p * w))
    # segment endpoints for one normal: order along the tangent (counterclockwise)
    rows.sort(key=lambda r: (r[0], (r[1] * complex(math.cos(r[0]), -math.sin(r[0]))).imag))
    return BoundaryCurve(tuple(p for _, p in rows), tuple(t for t, _ in rows), n, None)


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def export_curve(curve: BoundaryCurve, fmt: str = "csv") -> bytes:
    if len(curve.points) == 0:
        raise ValidationError("curve has no points")
    if fmt == "csv":
        out = io.StringIO()
        if curve.is_disk:
            out.write(f"# disk,{_fmt(curve.radius)}\n")
        out.write("theta,re,im\n")
        for t, p in zip(curve.thetas, curve.points):
            out.write(f"{_fmt(t)},{_fmt(p.real)},{_fmt(p.imag)}\n")
        return out.getvalue().encode()
    if fmt == "json":
        doc = {
            "symmetry_order": curve.symmetry_order,
            "disk": curve.is_disk,
            "radius": curve.radius,
            "points": [[t, p.real, p.imag] for t, p in zip(curve.thetas, curve.points)],
        }
        return json.dumps(doc).encode()
    raise ValidationError(f"format must be csv or json, got {fmt!r}")


def load_curve(data: bytes | str, fmt: str = "csv", symmetry_order: int | None = None) -> BoundaryCurve:
    """Inverse of :func:`export_curve`.  CSV does not record the symmetry order."""
    text = data.decode() if isinstance(data, bytes) else data
    if fmt == "json":
        doc = json.loads(text)
        pts = tuple(complex(re, im) for _, re, im in doc["points"])
        ths = tuple(float(t) for t, _, _ in doc["points"])
        return BoundaryCurve(pts, ths, doc["symmetry_order"], doc["radius"])
    if fmt != "csv":
        raise ValidationError(f"format must be csv or json, got {fmt!r}")
    radius = None
    pts, ths = [], []
    for line in text.splitlines():
        if line.startswith("# disk,"):
            radius = float(line.split(",", 1)[1])
            continue
        if not line or line.startswith("theta"):
            continue
        t, re, im = (float(x) for x in line.split(","))
        ths.append(t)
        pts.append(complex(re, im))
    order = None if radius is not None else symmetry_order
    return BoundaryCurve(tuple(pts), tuple(ths), order, radius)
