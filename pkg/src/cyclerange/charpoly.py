"""Characteristic polynomial family of ``2 Re(e^{i theta} S(a))``.

For every theta,

    det(zI - 2 Re(e^{i theta} A)) = f(z) - 2 alpha cos(n theta),

with ``f`` monic and independent of theta and ``alpha = prod(a)``.  ``f`` is
the periodic Jacobi determinant with the corner cosine term split off: the
path determinant on vertices ``1..n`` minus ``a_n^2`` times the path
determinant on vertices ``2..n-1``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import ValidationError
from .weights import WeightVector

__all__ = [
    "CharPolyFamily",
    "ImagSpectrum",
    "build_family",
    "family_coeffs_batch",
    "imag_part_spectrum",
    "parity_reconstruction",
]


@dataclass(frozen=True)
class CharPolyFamily:
    n: int
    f_coeffs: tuple[float, ...]  # descending powers, f_coeffs[0] == 1
    alpha: float

    def at(self, t: float) -> np.ndarray:
        """Coefficients of ``f(z) - 2 alpha t`` (descending)."""
        c = np.array(self.f_coeffs, dtype=float)
        c[-1] -= 2.0 * self.alpha * t
        return c

    def at_theta(self, theta: float) -> np.ndarray:
        return self.at(math.cos(self.n * theta))

    def __call__(self, z: float, t: float = 0.0) -> float:
        return float(np.polyval(self.at(t), z))

    def to_dict(self) -> dict:
        return {"n": self.n, "f": list(self.f_coeffs), "alpha": self.alpha}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "CharPolyFamily":
        f = tuple(float(c) for c in d["f"])
        if len(f) != int(d["n"]) + 1:
            raise ValidationError("f must have n+1 coefficients")
        return cls(int(d["n"]), f, float(d["alpha"]))

    @classmethod
    def from_json(cls, text: str) -> "CharPolyFamily":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class ImagSpectrum:
    """Nonnegative half of the spectrum of ``i(A - A^t)``; a zero is implied for odd n."""

    alphas: tuple[float, ...]
    n: int


def _path_charpoly(sq: Sequence[Fraction], m: int) -> list[Fraction]:
    """Ascending coefficients of det(zI - J) for the m-vertex path with edge squares sq."""
    prev, cur = [Fraction(1)], [Fraction(0), Fraction(1)]
    if m == 0:
        return prev
    for k in range(1, m):
        s = sq[k - 1]
        nxt = [Fraction(0)] + cur
        for i, c in enumerate(prev):
            nxt[i] -= s * c
        prev, cur = cur, nxt
    return cur


def exact_f(squares: Sequence[Fraction]) -> list[Fraction]:
    """Ascending exact coefficients of f from the squared weights."""
    n = len(squares)
    outer = _path_charpoly(squares[: n - 1], n)
    inner = _path_charpoly(squares[1 : n - 2], n - 2) if n >= 2 else [Fraction(1)]
    f = list(outer)
    for i, c in enumerate(inner):
        f[i] -= squares[n - 1] * c
    return f


def build_family(a: WeightVector) -> CharPolyFamily:
    if not isinstance(a, WeightVector):
        a = WeightVector(a)
    if a.n < 2:
        raise ValidationError("n must be >= 2")
    f = exact_f(a.squares)
    return CharPolyFamily(a.n, tuple(float(c) for c in reversed(f)), a.alpha)


def family_coeffs_batch(squares: np.ndarray) -> np.ndarray:
    """Float version of :func:`build_family` for a stack of squared-weight rows.

    ``squares`` has shape ``(m, n)``; returns ``(m, n+1)`` descending coefficients.
    """
    sq = np.atleast_2d(np.asarray(squares, dtype=float))
    m, n = sq.shape

    def path(edges: np.ndarray, verts: int) -> np.ndarray:
        # ascending coefficients, shape (m, verts+1)
        prev = np.zeros((m, verts + 1))
        prev[:, 0] = 1.0
        if verts == 0:
            return prev
        cur = np.zeros((m, verts + 1))
        cur[:, 1] = 1.0
        for k in range(1, verts):
            nxt = np.zeros_like(cur)
            nxt[:, 1:] = cur[:, :-1]
            nxt -= edges[:, k - 1 : k] * prev
            prev, cur = cur, nxt
        return cur

    outer = path(sq[:, : n - 1], n)
    inner = path(sq[:, 1 : n - 2], n - 2)
    outer[:, : n - 1] -= sq[:, n - 1 : n] * inner
    return outer[:, ::-1].copy()


def imag_part_spectrum(a: WeightVector) -> ImagSpectrum:
    if not isinstance(a, WeightVector):
        a = WeightVector(a)
    m = a.matrix()
    ev = np.linalg.eigvalsh(1j * (m - m.T))
    ev = np.sort(ev)[::-1]
    k = a.n // 2
    return ImagSpectrum(tuple(float(max(x, 0.0)) for x in ev[:k]), a.n)


def parity_reconstruction(spec: ImagSpectrum, alpha: float) -> np.ndarray:
    """Rebuild f from the imaginary-part spectrum (descending coefficients).

    Even n = 2k: prod(z^2 - alpha_j^2) + (-1)^k 2 prod(a); odd n: z prod(z^2 - alpha_j^2).
    """
    p = np.array([1.0])
    for al in spec.alphas:
        p = np.polymul(p, [1.0, 0.0, -al * al])
    if spec.n % 2:
        return np.polymul(p, [1.0, 0.0])
    k = spec.n // 2
    p = p.copy()
    p[-1] += (-1) ** k * 2.0 * alpha
    return p
