"""Top roots of the polynomial family, support values and the dense oracle.

``support_max(a, t)`` is the largest eigenvalue of ``2 Re(e^{i theta} S(a))`` at
``cos(n theta) = t``; it is the largest root of ``f(z) - 2 alpha t``.  Those
polynomials are characteristic polynomials of Hermitian matrices, hence
real-rooted, and Newton's method started above the largest root decreases
monotonically onto it.  ``dense_oracle`` computes the same spectrum by cyclic
Jacobi rotations and shares no code with the polynomial route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .charpoly import CharPolyFamily, build_family, family_coeffs_batch
from .errors import NoRealRoot, ValidationError
from .weights import WeightVector

__all__ = [
    "SupportProfile",
    "largest_root",
    "largest_roots_batch",
    "roots_above",
    "support_max",
    "support_profile",
    "support_profile_batch",
    "numerical_radius",
    "dense_matrix",
    "jacobi_eigvalsh",
    "dense_oracle",
]

_ROOT_TOL = 1e-13


@dataclass(frozen=True)
class SupportProfile:
    family: CharPolyFamily
    t: tuple[float, ...]
    z: tuple[float, ...]


def _horner(c: np.ndarray, x: float) -> tuple[float, float]:
    p = 0.0
    dp = 0.0
    for ci in c:
        dp = dp * x + p
        p = p * x + ci
    return p, dp


def _monic(coeffs: Sequence[float]) -> np.ndarray:
    c = np.trim_zeros(np.asarray(coeffs, dtype=float), "f")
    if c.size == 0:
        raise ValidationError("zero polynomial")
    return c / c[0]


def cauchy_bound(c: np.ndarray) -> float:
    return 1.0 + float(np.max(np.abs(c[1:]))) if c.size > 1 else 0.0


def fujiwara_bound(c: np.ndarray) -> float:
    n = c.size - 1
    if n == 0:
        return 0.0
    terms = [abs(c[k]) ** (1.0 / k) for k in range(1, n)]
    terms.append(abs(c[n] / 2.0) ** (1.0 / n))
    return 2.0 * max(terms)


def roots_above(coeffs: Sequence[float], x: float) -> int:
    """Sign changes of the Taylor coefficients of ``p`` at ``x``.

    By Descartes' rule this bounds the number of roots greater than ``x`` and
    equals it when ``p`` is real-rooted.
    """
    c = _monic(coeffs)
    n = c.size - 1
    # repeated synthetic division yields the coefficients of p(x + y)
    work = list(c)
    taylor = []
    for k in range(n + 1):
        m = n - k
        for i in range(1, m + 1):
            work[i] += work[i - 1] * x
        taylor.append(work[m])
    signs = [math.copysign(1.0, v) for v in taylor if v != 0.0]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def _polish(c: np.ndarray, lo: float, hi: float) -> float:
    """Safeguarded Newton on a bracket with p(lo) <= 0 < p(hi)."""
    x = hi
    for _ in range(200):
        p, dp = _horner(c, x)
        if p == 0.0:
            return x
        if p > 0:
            hi = x
        else:
            lo = x
        step_ok = dp != 0.0
        if step_ok:
            xn = x - p / dp
            step_ok = lo < xn < hi
        if not step_ok:
            xn = 0.5 * (lo + hi)
        if abs(xn - x) <= _ROOT_TOL * max(1.0, abs(x)) or hi - lo <= _ROOT_TOL * max(1.0, abs(x)):
            return xn
        x = xn
    return x


def _grid_scan(c: np.ndarray, top: float, bottom: float) -> float:
    n = c.size - 1
    cells = 64 * max(n, 1)
    grid = np.linspace(top, bottom, cells + 1)
    vals = np.polyval(c, grid)
    for k in range(cells):
        if vals[k] > 0 and vals[k + 1] <= 0:
            if vals[k + 1] == 0:
                return float(grid[k + 1])
            return _polish(c, float(grid[k + 1]), float(grid[k]))
    raise NoRealRoot(f"no real root in [{bottom}, {top}]")


def largest_root(coeffs: Sequence[float]) -> float:
    """Greatest real root of a real polynomial (coefficients descending).

    Newton's iteration from the Fujiwara bound, bracketed polish once the
    sign changes, and a descending sign scan if the iteration stalls (which
    only happens for polynomials with non-real roots).
    """
    c = _monic(coeffs)
    n = c.size - 1
    if n == 0:
        raise NoRealRoot("constant polynomial")
    if n == 1:
        return float(-c[1])
    bound = min(cauchy_bound(c), fujiwara_bound(c))
    x = x_prev = bound
    for _ in range(2000):
        p, dp = _horner(c, x)
        if p <= 0.0:
            return _refine_multiple(c, x if p == 0.0 else _polish(c, x, x_prev))
        if dp <= 0.0:
            # tangent to the axis within rounding: a multiple root, not a gap
            if p <= _eval_err(c, x):
                return _refine_multiple(c, x)
            return _grid_scan(c, x, -bound)
        step = p / dp
        x_prev, x = x, x - step
        if step <= _ROOT_TOL * max(1.0, abs(x)):
            p2, _ = _horner(c, x)
            if p2 < 0.0:
                x = _polish(c, x, x_prev)
            return _refine_multiple(c, x)
    raise NoRealRoot("Newton iteration did not converge")


def _eval_err(c: np.ndarray, x: float) -> float:
    return (c.size + 1) * np.finfo(float).eps * float(np.polyval(np.abs(c), abs(x)))


def _refine_multiple(c: np.ndarray, x: float) -> float:
    """Sharpen a Newton limit that sits on a multiple root.

    A root of multiplicity m is a simple root of the (m-1)-th derivative, which
    Newton resolves to full precision, while p itself only pins it to about
    eps**(1/m).  Derivative roots are accepted while p vanishes there to
    within its evaluation error.
    """
    n = c.size - 1
    best = x
    d = c.copy()
    for _ in range(n - 1):
        d = np.polyder(d)
        if d.size < 2:
            break
        _, dd = _horner(d, best)
        if abs(dd) == 0.0:
            break
        y = x + 1e-2 * max(1.0, abs(x))
        for _ in range(200):
            pv, dv = _horner(d, y)
            if dv <= 0.0 or pv <= 0.0:
                break
            step = pv / dv
            y -= step
            if step <= _ROOT_TOL * max(1.0, abs(y)):
                break
        pv, _ = _horner(c, y)
        err = (n + 2) * np.finfo(float).eps * float(np.polyval(np.abs(c), abs(y)))
        if abs(pv) > err or abs(y - x) > 1e-2 * max(1.0, abs(x)):
            break
        best = y
    return best


def largest_roots_batch(coeffs: np.ndarray, max_iter: int = 200) -> np.ndarray:
    """Largest roots of many real-rooted polynomials of one degree at once.

    Rows of ``coeffs`` are monic descending coefficient vectors.  Starts at the
    Laguerre-Samuelson bound, valid for any real-rooted polynomial.
    """
    c = np.atleast_2d(np.asarray(coeffs, dtype=float))
    m, n1 = c.shape
    n = n1 - 1
    if n == 1:
        return -c[:, 1].copy()
    c1, c2 = c[:, 1], c[:, 2]
    spread = np.maximum(c1 * c1 - 2.0 * n / (n - 1) * c2, 0.0)
    x = -c1 / n + (n - 1) / n * np.sqrt(spread)
    x = x + 1e-12 * (1.0 + np.abs(x))
    idx = np.arange(m)
    out = x.copy()
    for _ in range(max_iter):
        cc = c[idx]
        xx = out[idx]
        p = np.zeros_like(xx)
        dp = np.zeros_like(xx)
        for k in range(n1):
            dp = dp * xx + p
            p = p * xx + cc[:, k]
        with np.errstate(divide="ignore", invalid="ignore"):
            step = np.where(dp > 0.0, p / dp, 0.0)
        step = np.where(p > 0.0, step, 0.0)
        out[idx] = xx - step
        active = step > _ROOT_TOL * np.maximum(1.0, np.abs(xx))
        idx = idx[active]
        if idx.size == 0:
            break
    return _batch_double_roots(c, out)


def _batch_double_roots(c: np.ndarray, x: np.ndarray, max_iter: int = 100) -> np.ndarray:
    """Snap Newton limits that sit on multiple roots to the root of ``p'``.

    Newton on ``p`` only reaches a double root to about ``sqrt(eps)``; the
    top root of ``p'`` is simple there.  It replaces ``x`` when ``p`` vanishes
    at it within evaluation error.
    """
    m, n1 = c.shape
    d = c[:, :-1] * np.arange(n1 - 1, 0, -1)
    # p is only known to rounding near a double root, so x may sit just below it
    y = x + 1e-4 * np.maximum(1.0, np.abs(x))
    idx = np.arange(m)
    for _ in range(max_iter):
        dd, yy = d[idx], y[idx]
        p = np.zeros_like(yy)
        dp = np.zeros_like(yy)
        for k in range(n1 - 1):
            dp = dp * yy + p
            p = p * yy + dd[:, k]
        with np.errstate(divide="ignore", invalid="ignore"):
            step = np.where((dp > 0.0) & (p > 0.0), p / dp, 0.0)
        y[idx] = yy - step
        idx = idx[step > _ROOT_TOL * np.maximum(1.0, np.abs(yy))]
        if idx.size == 0:
            break
    p = np.zeros_like(y)
    mag = np.zeros_like(y)
    ay = np.abs(y)
    for k in range(n1):
        p = p * y + c[:, k]
        mag = mag * ay + np.abs(c[:, k])
    err = (n1 + 1) * np.finfo(float).eps * mag
    close = np.abs(x - y) <= 1e-3 * np.maximum(1.0, np.abs(x))
    out = np.where(close & (np.abs(p) <= err), y, x)
    # higher multiplicities (never the top of a periodic Jacobi matrix) go row by row
    for i in np.flatnonzero(close & (np.abs(p) <= err)):
        if _horner(np.polyder(d[i]), y[i])[0] <= _eval_err(d[i], y[i]):
            out[i] = largest_root(c[i])
    return out


def _check_t(t: float) -> float:
    t = float(t)
    if not -1.0 <= t <= 1.0:
        raise ValidationError(f"t = {t} is outside [-1, 1]")
    return t


def support_max(a: WeightVector | CharPolyFamily, t: float) -> float:
    """Largest eigenvalue of ``2 Re(e^{i theta} S(a))`` where ``cos(n theta) = t``."""
    fam = a if isinstance(a, CharPolyFamily) else build_family(a)
    return largest_root(fam.at(_check_t(t)))


def support_profile(a: WeightVector | CharPolyFamily, ts: Sequence[float]) -> SupportProfile:
    fam = a if isinstance(a, CharPolyFamily) else build_family(a)
    ts = np.asarray([_check_t(t) for t in ts])
    z = support_profile_batch(np.array([fam.f_coeffs]), np.array([fam.alpha]), ts)[0]
    return SupportProfile(fam, tuple(ts.tolist()), tuple(z.tolist()))


def support_profile_batch(f_coeffs: np.ndarray, alphas: np.ndarray, ts: np.ndarray) -> np.ndarray:
    """Top roots of ``f_i(z) - 2 alpha_i t_j`` for all i, j; shape ``(m, len(ts))``."""
    f = np.atleast_2d(np.asarray(f_coeffs, dtype=float))
    alphas = np.asarray(alphas, dtype=float).reshape(-1)
    ts = np.asarray(ts, dtype=float).reshape(-1)
    m, k = f.shape[0], ts.size
    stacked = np.repeat(f, k, axis=0)
    stacked[:, -1] -= 2.0 * np.repeat(alphas, k) * np.tile(ts, m)
    return largest_roots_batch(stacked).reshape(m, k)


def numerical_radius(a: WeightVector) -> float:
    """Numerical radius of ``S(a)``: the top of the family at ``t = 1``, halved."""
    return 0.5 * support_max(a, 1.0)


def dense_matrix(a: WeightVector, theta: float) -> np.ndarray:
    """``D (2 Re(e^{i theta} S(a))) D^*`` with ``D = diag(e^{i k theta})``.

    Equal to ``A + A^t`` except that the corner carries ``a_n e^{+-i n theta}``.
    """
    if not isinstance(a, WeightVector):
        a = WeightVector(a)
    n = a.n
    h = np.zeros((n, n), dtype=complex)
    for j in range(n - 1):
        h[j, j + 1] += a.a[j]
        h[j + 1, j] += a.a[j]
    corner = a.a[n - 1] * complex(math.cos(n * theta), math.sin(n * theta))
    h[n - 1, 0] += corner
    h[0, n - 1] += corner.conjugate()
    return h


def jacobi_eigvalsh(h: np.ndarray, tol: float = 1e-15, max_sweeps: int = 60) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations, descending."""
    a = [[complex(v) for v in row] for row in np.asarray(h)]
    n = len(a)
    scale = math.sqrt(sum(abs(v) ** 2 for row in a for v in row)) or 1.0
    for _ in range(max_sweeps):
        off = math.sqrt(sum(abs(a[i][j]) ** 2 for i in range(n) for j in range(n) if i != j))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                hpq = a[p][q]
                mag = abs(hpq)
                if mag <= 1e-300:
                    continue
                ph = hpq / mag
                app, aqq = a[p][p].real, a[q][q].real
                tau = (aqq - app) / (2.0 * mag)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                # columns: U = diag-phase then real rotation
                sph = s * ph.conjugate()
                cph = c * ph.conjugate()
                for k in range(n):
                    akp, akq = a[k][p], a[k][q]
                    a[k][p] = c * akp - sph * akq
                    a[k][q] = s * akp + cph * akq
                sphc = sph.conjugate()
                cphc = cph.conjugate()
                for k in range(n):
                    apk, aqk = a[p][k], a[q][k]
                    a[p][k] = c * apk - sphc * aqk
                    a[q][k] = s * apk + cphc * aqk
                a[p][q] = a[q][p] = 0j
                a[p][p] = complex(a[p][p].real, 0.0)
                a[q][q] = complex(a[q][q].real, 0.0)
    return np.array(sorted((a[i][i].real for i in range(n)), reverse=True))


def dense_oracle(a: WeightVector, theta: float) -> np.ndarray:
    """Full spectrum of ``2 Re(e^{i theta} S(a))``, descending, by Jacobi rotations."""
    return jacobi_eigvalsh(dense_matrix(a, theta))
