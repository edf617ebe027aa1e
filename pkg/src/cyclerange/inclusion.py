"""Deciding ``W(B) ⊆ W(A)`` for cyclic shift matrices.

Containment of numerical ranges is containment of support functions, so the
general test compares ``lambda_1(Re(e^{i theta} .))`` of both matrices over a
grid of directions.  With equal size and equal phase both supports are
functions of ``t = cos(n theta)`` alone, which is what the grid samples.
Closed forms exist for n <= 6 under matching invariants.
"""

from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

import numpy as np

from .charpoly import CharPolyFamily, build_family
from .errors import PreconditionError, UnsupportedSize, ValidationError
from .spectra import largest_root, support_profile_batch
from .weights import PhaseReduction, WeightVector

__all__ = [
    "Verdict",
    "InclusionVerdict",
    "CubicTriple",
    "CubicResult",
    "CubicComparison",
    "default_tol",
    "chebyshev_grid",
    "includes_general",
    "includes_polynomial",
    "includes_closed_form",
    "includes",
    "compare_cubic",
    "verdict_from_profiles",
    "nonadjacent_sum",
    "cyclic_sum_sq",
    "alternating_products",
]

DEFAULT_GRID = 257
_REFINE_POINTS = 33
_REFINE_LEVELS = 4

Operand = Union[WeightVector, PhaseReduction, Sequence[float]]


class Verdict(str, enum.Enum):
    INCLUDED = "Included"
    NOT_INCLUDED = "NotIncluded"
    INDETERMINATE = "Indeterminate"


@dataclass(frozen=True)
class InclusionVerdict:
    kind: Verdict
    margin: float  # min over tested directions of lambda_1(A side) - lambda_1(B side)
    witness_t: float | None = None
    tol: float = 0.0
    method: str = "grid"
    witness_theta: float | None = None
    details: dict = field(default_factory=dict, compare=False)

    @property
    def included(self) -> bool:
        return self.kind is Verdict.INCLUDED

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "margin": self.margin,
            "witness_t": self.witness_t,
            "witness_theta": self.witness_theta,
            "tol": self.tol,
            "method": self.method,
            "details": self.details,
        }


def base_tol() -> float:
    env = os.environ.get("CYCLERANGE_TOL")
    if env:
        try:
            val = float(env)
        except ValueError:
            raise ValidationError(f"CYCLERANGE_TOL={env!r} is not a number") from None
        if not val >= 0:
            raise ValidationError(f"CYCLERANGE_TOL={env!r} must be >= 0")
        return val
    return 1e-9


def default_tol(max_support: float) -> float:
    return float(base_tol() * (1.0 + abs(float(max_support))))


def chebyshev_grid(size: int) -> np.ndarray:
    """Chebyshev-Lobatto points on [-1, 1], ascending, endpoints included."""
    if size < 3:
        raise ValidationError(f"grid_size must be >= 3, got {size}")
    k = np.arange(size)
    pts = -np.cos(np.pi * k / (size - 1))
    pts[0], pts[-1] = -1.0, 1.0
    return pts


def _operand(x: Operand) -> PhaseReduction:
    if isinstance(x, PhaseReduction):
        return x
    if isinstance(x, WeightVector):
        return PhaseReduction(x, 0.0)
    return PhaseReduction(WeightVector(x), 0.0)


def _same_phase(pa: PhaseReduction, pb: PhaseReduction) -> bool:
    n = pa.magnitudes.n
    if pb.magnitudes.n != n:
        return False
    if pa.magnitudes.has_zero or pb.magnitudes.has_zero:
        return True  # disks: phase irrelevant
    period = 2 * math.pi / n
    d = math.remainder(pa.phase - pb.phase, period)
    return abs(d) <= 1e-15


def _profile(fam: CharPolyFamily, ts: np.ndarray) -> np.ndarray:
    return support_profile_batch(np.array([fam.f_coeffs]), np.array([fam.alpha]), ts)[0]


def verdict_from_profiles(
    margins: np.ndarray, ts: np.ndarray, tol: float, method: str = "grid"
) -> InclusionVerdict:
    """Verdict from sampled margins (support units: lambda_1 of Re)."""
    i = int(np.argmin(margins))
    m = float(margins[i])
    if m < -tol:
        return InclusionVerdict(Verdict.NOT_INCLUDED, m, float(ts[i]), tol, method)
    return InclusionVerdict(Verdict.INCLUDED, m, None, tol, method)


def _refine_t(fa: CharPolyFamily, fb: CharPolyFamily, ts: np.ndarray, margins: np.ndarray):
    """Densify around the worst grid node; returns the best (t, margin) found."""
    i = int(np.argmin(margins))
    best_t, best_m = float(ts[i]), float(margins[i])
    lo = ts[max(i - 1, 0)]
    hi = ts[min(i + 1, ts.size - 1)]
    for _ in range(_REFINE_LEVELS):
        sub = np.linspace(lo, hi, _REFINE_POINTS)
        m = 0.5 * (_profile(fa, sub) - _profile(fb, sub))
        j = int(np.argmin(m))
        if m[j] < best_m:
            best_t, best_m = float(sub[j]), float(m[j])
        step = sub[1] - sub[0]
        lo = max(sub[j] - step, -1.0)
        hi = min(sub[j] + step, 1.0)
    return best_t, best_m


def includes_general(
    A: Operand,
    B: Operand,
    grid_size: int = DEFAULT_GRID,
    tol: float | None = None,
    refine: bool = True,
) -> InclusionVerdict:
    """Grid comparison of support functions; ``Included`` means ``W(B) ⊆ W(A)``.

    Same size and phase: Chebyshev points in t.  Otherwise ``n * grid_size``
    equispaced directions theta in [0, 2 pi).
    """
    if grid_size < 3:
        raise ValidationError(f"grid_size must be >= 3, got {grid_size}")
    pa, pb = _operand(A), _operand(B)
    fa, fb = build_family(pa.magnitudes), build_family(pb.magnitudes)
    if _same_phase(pa, pb):
        ts = chebyshev_grid(grid_size)
        za, zb = _profile(fa, ts), _profile(fb, ts)
        margins = 0.5 * (za - zb)
        scale = 0.5 * max(float(za.max()), float(zb.max()))
        tol = default_tol(scale) if tol is None else tol
        worst_t, worst_m = float(ts[np.argmin(margins)]), float(margins.min())
        if refine and worst_m < tol:
            worst_t, worst_m = _refine_t(fa, fb, ts, margins)
        v = verdict_from_profiles(np.array([worst_m]), np.array([worst_t]), tol, "grid")
        return v
    n = max(fa.n, fb.n)
    thetas = np.linspace(0.0, 2 * math.pi, n * grid_size, endpoint=False)
    ta = np.clip(np.cos(fa.n * (thetas + pa.phase)), -1.0, 1.0)
    tb = np.clip(np.cos(fb.n * (thetas + pb.phase)), -1.0, 1.0)
    za, zb = _profile(fa, ta), _profile(fb, tb)
    margins = 0.5 * (za - zb)
    scale = 0.5 * max(float(za.max()), float(zb.max()))
    tol = default_tol(scale) if tol is None else tol
    i = int(np.argmin(margins))
    m = float(margins[i])
    kind = Verdict.NOT_INCLUDED if m < -tol else Verdict.INCLUDED
    wt = float(ta[i]) if kind is Verdict.NOT_INCLUDED else None
    wth = float(thetas[i]) if kind is Verdict.NOT_INCLUDED else None
    return InclusionVerdict(kind, m, wt, tol, "grid-theta", wth)


def includes_polynomial(A: Operand, B: Operand, tol: float | None = None) -> InclusionVerdict | None:
    """Criterion ``g(z)/beta >= f(z)/alpha`` on ``[z_{-1}, z_1]``.

    Applies when both products are positive, sizes and phases agree and the
    top root of ``g + 2 beta`` does not exceed ``z_{-1}``.  Returns ``None``
    when it does not apply.
    """
    pa, pb = _operand(A), _operand(B)
    if not _same_phase(pa, pb):
        return None
    fa, fb = build_family(pa.magnitudes), build_family(pb.magnitudes)
    alpha, beta = fa.alpha, fb.alpha
    if alpha <= 0 or beta <= 0:
        return None
    z_lo, z_hi = largest_root(fa.at(-1.0)), largest_root(fa.at(1.0))
    zb_lo = largest_root(fb.at(-1.0))
    if zb_lo > z_lo:
        return None
    f = np.array(fa.f_coeffs) / alpha
    g = np.array(fb.f_coeffs) / beta
    h = np.polysub(g, f)
    cands = [z_lo, z_hi]
    dh = np.polyder(h)
    if dh.size > 1 and np.any(dh != 0):
        for r in np.roots(dh):
            if abs(r.imag) <= 1e-9 * (1 + abs(r.real)) and z_lo <= r.real <= z_hi:
                cands.append(float(r.real))
    vals = np.polyval(h, cands)
    i = int(np.argmin(vals))
    # margin reported in support units at the t matching the worst z
    t_worst = float(np.clip(np.polyval(f, cands[i]) / 2.0, -1.0, 1.0))
    za = largest_root(fa.at(t_worst))
    zb = largest_root(fb.at(t_worst))
    margin = 0.5 * (za - zb)
    tol = default_tol(0.5 * z_hi) if tol is None else tol
    h_scale = float(np.polyval(np.abs(g) + np.abs(f), abs(z_hi)))
    h_tol = max(tol, 1e-12 * h_scale)
    details = {"h_min": float(vals[i]), "z_range": [z_lo, z_hi]}
    if vals[i] >= -h_tol:
        return InclusionVerdict(Verdict.INCLUDED, margin, None, tol, "polynomial", details=details)
    return InclusionVerdict(Verdict.NOT_INCLUDED, margin, t_worst, tol, "polynomial", details=details)


# ----------------------------------------------------------------------------
# invariants used by the closed forms (exact on squared weights)

def cyclic_sum_sq(sq: Sequence[Fraction]) -> Fraction:
    n = len(sq)
    return sum((sq[i] * sq[(i + 1) % n] for i in range(n)), Fraction(0))


def nonadjacent_sum(sq: Sequence[Fraction]) -> Fraction:
    """Sum of ``a_i^2 a_j^2`` over cyclically non-adjacent pairs."""
    n = len(sq)
    total = Fraction(0)
    for i in range(n):
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            total += sq[i] * sq[j]
    return total


def alternating_products(sq: Sequence[Fraction]) -> Fraction:
    """``prod(odd positions) + prod(even positions)`` of the squares (even n)."""
    return math.prod(sq[0::2]) + math.prod(sq[1::2])


def _eq(x: Fraction, y: Fraction) -> bool:
    return x == y or abs(x - y) <= Fraction(1, 10**12) * max(abs(x), abs(y))


def _endpoint_verdict(za: Sequence[float], zb: Sequence[float], method: str, details=None) -> InclusionVerdict:
    """Verdict from the supports at t = -1, 1 (index 0, 1)."""
    margins = [0.5 * (x - y) for x, y in zip(za, zb)]
    tol = default_tol(0.5 * max(max(za), max(zb)))
    i = 0 if margins[0] <= margins[1] else 1
    m = float(margins[i])
    if m < -tol:
        return InclusionVerdict(Verdict.NOT_INCLUDED, m, (-1.0, 1.0)[i], tol, method, details=details or {})
    return InclusionVerdict(Verdict.INCLUDED, m, None, tol, method, details=details or {})


def _cubic_top(p: float, q: float) -> float:
    """Largest root of z^3 - p z - q with three real roots (trigonometric form)."""
    if p <= 0:
        return math.copysign(abs(q) ** (1 / 3), q)
    r = 2.0 * math.sqrt(p / 3.0)
    arg = 3.0 * q / (p * r)
    arg = max(-1.0, min(1.0, arg))
    return r * math.cos(math.acos(arg) / 3.0)


def _closed_top(w: WeightVector, t: float) -> float:
    """Support at t from the explicit root formulas for n = 2, 3, 4."""
    sq = [float(s) for s in w.squares]
    alpha = w.alpha
    if w.n == 2:
        return math.sqrt(max(sq[0] + sq[1] + 2.0 * alpha * t, 0.0))
    if w.n == 3:
        return _cubic_top(sum(sq), 2.0 * alpha * t)
    s = sum(sq)
    q = sq[0] * sq[2] + sq[1] * sq[3]
    disc = max(s * s - 4.0 * (q - 2.0 * alpha * t), 0.0)
    return math.sqrt(0.5 * (s + math.sqrt(disc)))


def _endpoint_supports(w: WeightVector) -> list[float]:
    fam = build_family(w)
    return [largest_root(fam.at(-1.0)), largest_root(fam.at(1.0))]


def includes_closed_form(A: Operand, B: Operand) -> InclusionVerdict:
    """Closed-form criteria for n = 2..6; ``Indeterminate`` when preconditions fail."""
    pa, pb = _operand(A), _operand(B)
    a, b = pa.magnitudes, pb.magnitudes
    if a.n != b.n:
        raise ValidationError(f"closed forms need equal sizes, got {a.n} and {b.n}")
    n = a.n
    if n not in (2, 3, 4, 5, 6):
        raise UnsupportedSize(f"no closed form for n = {n}")
    if not _same_phase(pa, pb):
        return InclusionVerdict(Verdict.INDETERMINATE, float("nan"), method="closed",
                                details={"reason": "phases differ"})
    if n <= 4:
        za = [_closed_top(a, -1.0), _closed_top(a, 1.0)]
        zb = [_closed_top(b, -1.0), _closed_top(b, 1.0)]
        return _endpoint_verdict(za, zb, f"closed-n{n}")

    sa, sb = a.squares, b.squares
    same_norm = sum(sa) == sum(sb)
    same_prod = math.prod(sa) == math.prod(sb)
    if not (same_norm and same_prod):
        return InclusionVerdict(Verdict.INDETERMINATE, float("nan"), method=f"closed-n{n}",
                                details={"reason": "sum of squares or product differ"})
    za, zb = _endpoint_supports(a), _endpoint_supports(b)
    quartic_eq = sum(s * s for s in sa) == sum(s * s for s in sb)

    if n == 5:
        if quartic_eq:
            ca, cb = cyclic_sum_sq(sa), cyclic_sum_sq(sb)
            ok = cb <= ca
            det = {"criterion": "cyclic-sum", "A": float(ca), "B": float(cb)}
        else:
            na, nb = nonadjacent_sum(sa), nonadjacent_sum(sb)
            ok = na <= nb
            det = {"criterion": "nonadjacent-sum", "A": float(na), "B": float(nb)}
        return _forced(ok, za, zb, "closed-n5", det)

    # n == 6
    pa6, pb6 = alternating_products(sa), alternating_products(sb)
    if pa6 == pb6 and quartic_eq:
        ca, cb = cyclic_sum_sq(sa), cyclic_sum_sq(sb)
        return _forced(cb <= ca, za, zb, "closed-n6-family",
                       {"criterion": "cyclic-sum", "A": float(ca), "B": float(cb)})
    c = CubicTriple(sum(sa), nonadjacent_sum(sa), pa6)
    d = CubicTriple(sum(sb), nonadjacent_sum(sb), pb6)
    det = {"criterion": "cubic", "e2": [float(c.e2), float(d.e2)], "e3": [float(c.e3), float(d.e3)]}
    if c.e2 == d.e2:
        # f_A - f_B is the constant P_B - P_A
        return _forced(pa6 >= pb6, za, zb, "closed-n6-cubic", det)
    if c.e2 < d.e2:
        res = compare_cubic(c, d, root_lower_bound=za[0] ** 2)
        det["x0"] = res.x0
        if res.result is CubicComparison.D_SMALLER:
            return _forced(True, za, zb, "closed-n6-cubic", det)
    else:
        res = compare_cubic(d, c, root_lower_bound=zb[0] ** 2)
        det["x0"] = res.x0
        if res.result is CubicComparison.D_SMALLER:
            return _forced(False, za, zb, "closed-n6-cubic", det)
    return InclusionVerdict(Verdict.INDETERMINATE, float("nan"), method="closed-n6-cubic", details=det)


def _forced(ok: bool, za, zb, method: str, details: dict) -> InclusionVerdict:
    margins = [0.5 * (x - y) for x, y in zip(za, zb)]
    tol = default_tol(0.5 * max(max(za), max(zb)))
    i = 0 if margins[0] <= margins[1] else 1
    if ok:
        return InclusionVerdict(Verdict.INCLUDED, float(margins[i]), None, tol, method, details=details)
    return InclusionVerdict(Verdict.NOT_INCLUDED, float(margins[i]), (-1.0, 1.0)[i], tol, method, details=details)


def includes(
    A: Operand,
    B: Operand,
    method: str = "auto",
    grid_size: int = DEFAULT_GRID,
    tol: float | None = None,
) -> InclusionVerdict:
    """Dispatch: ``closed``, ``grid`` or ``auto`` (closed, then polynomial, then grid)."""
    if method == "grid":
        return includes_general(A, B, grid_size, tol)
    if method == "closed":
        return includes_closed_form(A, B)
    if method != "auto":
        raise ValidationError(f"unknown method {method!r}")
    pa, pb = _operand(A), _operand(B)
    if pa.magnitudes.n == pb.magnitudes.n and 2 <= pa.magnitudes.n <= 6:
        v = includes_closed_form(pa, pb)
        if v.kind is not Verdict.INDETERMINATE:
            return v
    v = includes_polynomial(pa, pb, tol)
    if v is not None:
        return v
    return includes_general(pa, pb, grid_size, tol)


# ----------------------------------------------------------------------------
# cubic comparison

class CubicComparison(str, enum.Enum):
    D_SMALLER = "FirstRootSmallerIsD"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class CubicTriple:
    """Elementary symmetric values of a positive triple ``c_1 >= c_2 >= c_3``."""

    e1: Fraction
    e2: Fraction
    e3: Fraction

    def __init__(self, e1, e2, e3):
        object.__setattr__(self, "e1", Fraction(e1))
        object.__setattr__(self, "e2", Fraction(e2))
        object.__setattr__(self, "e3", Fraction(e3))

    @classmethod
    def from_roots(cls, c1, c2, c3) -> "CubicTriple":
        c1, c2, c3 = (Fraction(x) for x in (c1, c2, c3))
        return cls(c1 + c2 + c3, c1 * c2 + c1 * c3 + c2 * c3, c1 * c2 * c3)

    @classmethod
    def from_weights(cls, w: WeightVector, t: float = 0.0) -> "CubicTriple":
        """Cubic in ``x = z^2`` of the n = 6 family at ``cos(6 theta) = t``."""
        if w.n != 6:
            raise ValidationError("cubic form exists for n = 6 only")
        sq = w.squares
        e3 = alternating_products(sq) + 2 * Fraction(w.alpha) * Fraction(t)
        return cls(sum(sq), nonadjacent_sum(sq), e3)

    def coeffs(self) -> list[float]:
        return [1.0, -float(self.e1), float(self.e2), -float(self.e3)]

    def discriminant(self) -> Fraction:
        b, c, d = -self.e1, self.e2, -self.e3
        return 18 * b * c * d - 4 * b**3 * d + b * b * c * c - 4 * c**3 - 27 * d * d

    def has_positive_real_roots(self) -> bool:
        return self.discriminant() >= 0 and self.e1 > 0 and self.e2 > 0 and self.e3 > 0

    def top_root(self) -> float:
        return largest_root(self.coeffs())


@dataclass(frozen=True)
class CubicResult:
    result: CubicComparison
    x0: float | None
    reason: str


def compare_cubic(c: CubicTriple, d: CubicTriple, root_lower_bound: float | None = None) -> CubicResult:
    """Certify ``d_1 < c_1`` for cubics with equal root sums and ``c.e2 < d.e2``.

    With equal products this always holds.  Otherwise the difference of the
    cubics is linear with zero ``x0``; ``x0`` below ``c_1`` suffices, and
    ``x0 <= e1/3`` or ``x0`` below the upper critical point of ``c`` certifies
    it without knowing ``c_1``.  ``root_lower_bound`` is an optional known
    lower bound on ``c_1``.
    """
    scale = max(abs(c.e1), abs(d.e1), Fraction(1))
    if abs(c.e1 - d.e1) > Fraction(1, 10**10) * scale:
        raise PreconditionError(f"root sums differ: {float(c.e1)} vs {float(d.e1)}")
    if not c.e2 < d.e2:
        return CubicResult(CubicComparison.INCONCLUSIVE, None, "e2 condition fails")
    if c.e3 == d.e3:
        return CubicResult(CubicComparison.D_SMALLER, None, "equal products")
    x0 = (d.e3 - c.e3) / (d.e2 - c.e2)
    e1 = c.e1
    if 3 * x0 <= e1:
        return CubicResult(CubicComparison.D_SMALLER, float(x0), "x0 <= e1/3")
    gap = 3 * x0 - e1
    if gap * gap <= e1 * e1 - 3 * c.e2:
        return CubicResult(CubicComparison.D_SMALLER, float(x0), "x0 below critical point")
    if root_lower_bound is not None and x0 < Fraction(root_lower_bound):
        return CubicResult(CubicComparison.D_SMALLER, float(x0), "x0 below supplied root bound")
    return CubicResult(CubicComparison.INCONCLUSIVE, float(x0), "no certificate")
