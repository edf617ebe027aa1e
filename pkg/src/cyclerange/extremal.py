"""Extremal weight configurations and the double-eigenvalue construction."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import PreconditionError, UnsupportedParity, ValidationError
from .inclusion import InclusionVerdict, Verdict, default_tol
from .spectra import support_max, support_profile_batch
from .charpoly import build_family
from .weights import WeightVector

__all__ = [
    "ExtremalReport",
    "DoubleEigenResult",
    "regular_ngon_check",
    "min_path_weights",
    "path_perturbation_sweep",
    "min_frobenius_zero_product",
    "find_double_eigenvalue",
    "path_matrix",
]


@dataclass(frozen=True)
class ExtremalReport:
    weights: WeightVector
    objective: float
    eigvec: tuple[float, ...] | None = None
    kind: str = ""

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "weights": list(self.weights.a),
            "objective": self.objective,
            "eigvec": list(self.eigvec) if self.eigvec is not None else None,
        }


@dataclass(frozen=True)
class DoubleEigenResult:
    hat_a_nm1: float
    hat_a_n: float
    mu: float
    x0: float
    weights: WeightVector  # the completed n weights
    gap: float  # distance between the two smallest eigenvalues of A + A^t

    def to_dict(self) -> dict:
        return {
            "hat_a_nm1": self.hat_a_nm1,
            "hat_a_n": self.hat_a_n,
            "mu": self.mu,
            "x0": self.x0,
            "weights": list(self.weights.a),
            "gap": self.gap,
        }


def path_matrix(w: Sequence[float]) -> np.ndarray:
    """Symmetric tridiagonal adjacency of a weighted path with ``len(w) + 1`` vertices."""
    w = np.asarray(w, dtype=float)
    return np.diag(w, 1) + np.diag(w, -1)


def regular_ngon_check(a: WeightVector, samples: int = 2049) -> InclusionVerdict:
    """Containment of the regular n-gon with vertices at the n-th roots of unity.

    Margin is ``min_theta lambda_1(Re(e^{i theta} A)) - max_k cos(theta + 2 pi k/n)``
    over ``theta`` in one period ``[0, 2 pi/n]``.
    """
    if not isinstance(a, WeightVector):
        a = WeightVector(a)
    if a.has_zero:
        raise PreconditionError("all weights must be positive")
    prod = math.prod(a.a)
    if abs(prod - 1.0) > 1e-10:
        raise PreconditionError(f"product of weights must be 1, got {prod!r}")
    n = a.n
    thetas = np.linspace(0.0, 2 * math.pi / n, samples)
    fam = build_family(a)
    z = support_profile_batch(np.array([fam.f_coeffs]), np.array([fam.alpha]),
                              np.clip(np.cos(n * thetas), -1.0, 1.0))[0]
    # on [0, 2 pi/n] the polygon support is attained at vertex k = 0 or k = n-1
    h = np.maximum(np.cos(thetas), np.cos(thetas - 2 * math.pi / n))
    margins = 0.5 * z - h
    i = int(np.argmin(margins))
    m = float(margins[i])
    tol = default_tol(0.5 * float(z.max()))
    if m < -tol:
        return InclusionVerdict(Verdict.NOT_INCLUDED, m, float(math.cos(n * thetas[i])), tol,
                                "ngon", float(thetas[i]))
    return InclusionVerdict(Verdict.INCLUDED, m, None, tol, "ngon")


def min_path_weights(n: int) -> ExtremalReport:
    """Product-1 path weights (``a_n = 0``) minimising the top eigenvalue of ``A + A^t``."""
    if n < 3:
        raise ValidationError(f"n must be >= 3, got {n}")
    end = 2.0 ** ((n - 3) / (2 * n - 2))
    mid = 2.0 ** (-1.0 / (n - 1))
    w = [end] + [mid] * (n - 3) + [end, 0.0]
    a = WeightVector(w)
    lam = 2.0 ** ((n - 2) / (n - 1))
    v = np.full(n, 1.0 / math.sqrt(n - 1))
    v[0] = v[n - 1] = 1.0 / math.sqrt(2 * n - 2)
    vec = tuple(float(x) for x in v)
    return ExtremalReport(a, lam, vec, "path")


def path_perturbation_sweep(n: int, trials: int, rng, scale: float = 0.3) -> float:
    """Smallest top eigenvalue over random product-1 perturbations of the optimal path."""
    base = np.array(min_path_weights(n).weights.a[: n - 1])
    best = math.inf
    for _ in range(trials):
        eps = np.array([rng.uniform(-scale, scale) for _ in range(n - 1)])
        eps -= eps.mean()
        w = base * np.exp(eps)
        w /= np.prod(w) ** (1.0 / (n - 1))
        best = min(best, support_max(WeightVector(list(w) + [0.0]), 0.0))
    return best


def min_frobenius_zero_product(n: int, theta: float = math.pi / 4) -> ExtremalReport:
    """Unit-Frobenius weights with a zero weight and the smallest numerical radius."""
    if n < 3:
        raise ValidationError(f"n must be >= 3, got {n}")
    if n % 2 == 0:
        c = math.sqrt(2.0 / n)
        w = [c if j % 2 == 0 else 0.0 for j in range(n)]
        r = 1.0 / math.sqrt(2 * n)
    else:
        k = (n - 1) // 2
        c = math.sqrt(1.0 / k)
        w = [c if j % 2 == 0 else 0.0 for j in range(2 * k - 2)]
        w += [c * math.cos(theta), c * math.sin(theta), 0.0]
        r = 1.0 / math.sqrt(4 * k)
    a = WeightVector([abs(x) for x in w])
    return ExtremalReport(a, r, None, "frobenius")


def _two_smallest(m: np.ndarray) -> tuple[float, float]:
    ev = np.linalg.eigvalsh(m)
    return float(ev[0]), float(ev[1])


def find_double_eigenvalue(a: Sequence[float], tol: float = 1e-13) -> DoubleEigenResult:
    """Complete ``n - 2`` positive path weights (n odd) so that the smallest
    eigenvalue of ``A + A^t`` is double.

    ``mu`` is the smallest eigenvalue of the path ``B`` on ``n - 1`` vertices.
    Its eigenvector ``v`` has end entries of opposite sign, so ``(v, 0)``
    stays an eigenvector of ``M(x) = [[B, x b], [x b^t, 0]]`` with
    ``b = (|v_{n-1}|, 0, ..., 0, |v_1|)``; the other low branch of ``M(x)``
    falls through ``mu`` as ``x`` grows and the crossing is located by bisection.
    """
    w = [float(x) for x in a]
    n = len(w) + 2
    if n % 2 == 0:
        raise UnsupportedParity(f"n = {n} is even; the construction needs odd n")
    if any(not math.isfinite(x) or x <= 0 for x in w):
        raise ValidationError("weights must be positive")
    B = path_matrix(w)
    ev, vec = np.linalg.eigh(B)
    mu = float(ev[0])
    v = vec[:, 0]
    b = np.zeros(n - 1)
    b[0], b[-1] = abs(v[-1]), abs(v[0])

    def M(x):
        m = np.zeros((n, n))
        m[: n - 1, : n - 1] = B
        m[: n - 1, n - 1] = x * b
        m[n - 1, : n - 1] = x * b
        return m

    def g(x):
        l1, l2 = _two_smallest(M(x))
        return l1 + l2 - 2.0 * mu

    lo, hi = 0.0, 1.0
    while g(hi) >= 0.0:
        lo, hi = hi, 2.0 * hi
        if hi > 1e12:
            raise ArithmeticError("no crossing found")
    while hi - lo > tol * max(1.0, hi):
        mid = 0.5 * (lo + hi)
        if g(mid) >= 0.0:
            lo = mid
        else:
            hi = mid
    x0 = 0.5 * (lo + hi)
    ha_nm1, ha_n = float(x0 * abs(v[0])), float(x0 * abs(v[-1]))
    full = WeightVector(w + [ha_nm1, ha_n])
    s = full.matrix()
    l1, l2 = _two_smallest(s + s.T)
    return DoubleEigenResult(ha_nm1, ha_n, mu, x0, full, l2 - l1)
