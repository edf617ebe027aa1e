"""Search over weight arrangements modulo rotation and reversal.

Every class is represented by its lexicographically least arrangement.  The
classes are generated directly: fix index 1 in front and keep the orientation
whose second entry is smaller than the last, which yields each of the
``(n-1)!/2`` classes exactly once.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _n6data as n6
from .charpoly import family_coeffs_batch
from .errors import ValidationError
from .inclusion import (
    DEFAULT_GRID,
    InclusionVerdict,
    Verdict,
    chebyshev_grid,
    default_tol,
    includes,
)
from .spectra import support_max, support_profile_batch
from .weights import DihedralClass, WeightVector, canonical_dihedral, r_decomposition

__all__ = [
    "ClassTable",
    "CyclicSumReport",
    "IntersectionBound",
    "ExtremeResult",
    "ConjectureReport",
    "enumerate_classes",
    "labelled_n6",
    "cyclic_sum",
    "cyclic_sum_exact",
    "conjecture_pattern",
    "class_profiles",
    "find_extreme",
    "verify_conjecture1",
    "family_analysis_n6",
]

MAX_N = 10
ROMAN = ("I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X")


@dataclass(frozen=True)
class ClassTable:
    n: int
    classes: tuple[DihedralClass, ...]
    families: dict = field(default_factory=dict, compare=False)  # label -> class indices (n=6)
    labels: dict = field(default_factory=dict, compare=False)  # reference number -> class index (n=6)

    def __len__(self) -> int:
        return len(self.classes)

    def index(self, perm: Sequence[int]) -> int:
        rep = canonical_dihedral(perm).rep
        for i, c in enumerate(self.classes):
            if c.rep == rep:
                return i
        raise ValidationError(f"{perm} is not a permutation of 1..{self.n}")

    def family_of(self, i: int) -> str | None:
        for lab, members in self.families.items():
            if i in members:
                return lab
        return None


def _classes_with_second(args) -> list[tuple[int, ...]]:
    n, second = args
    out = []
    rest = [k for k in range(2, n + 1) if k != second]
    for tail in itertools.permutations(rest):
        if second < tail[-1]:
            out.append((1, second) + tail)
    return out


def _split(rep: Sequence[int]) -> frozenset:
    return frozenset((frozenset(rep[0::2]), frozenset(rep[1::2])))


def labelled_n6() -> dict[int, DihedralClass]:
    """Reference numbering 1..60 of the n = 6 classes."""
    return {j: canonical_dihedral(p) for j, p in n6.LABELLED_N6.items()}


def enumerate_classes(n: int, workers: int = 1) -> ClassTable:
    if not isinstance(n, (int, np.integer)) or not 3 <= n <= MAX_N:
        raise ValidationError(f"n must be an integer in [3, {MAX_N}], got {n!r}")
    n = int(n)
    if n == 3:
        reps = [(1, 2, 3)]
    else:
        jobs = [(n, s) for s in range(2, n + 1)]
        if workers > 1 and n >= 8:
            with ProcessPoolExecutor(max_workers=workers) as ex:
                chunks = list(ex.map(_classes_with_second, jobs))
        else:
            chunks = [_classes_with_second(j) for j in jobs]
        reps = [r for chunk in chunks for r in chunk]
    classes = tuple(DihedralClass(r) for r in reps)
    families: dict = {}
    labels: dict = {}
    if n == 6:
        pos = {c.rep: i for i, c in enumerate(classes)}
        for j, cls in labelled_n6().items():
            labels[j] = pos[cls.rep]
        split_to_label = {}
        for lab, (head, _) in n6.FAMILIES_N6.items():
            split_to_label[_split(n6.LABELLED_N6[head])] = lab
        for i, c in enumerate(classes):
            families.setdefault(split_to_label[_split(c.rep)], []).append(i)
        families = {lab: tuple(families[lab]) for lab in ROMAN}
    return ClassTable(n, classes, families, labels)


def _perm_of(perm) -> tuple[int, ...]:
    return perm.rep if isinstance(perm, DihedralClass) else tuple(perm)


def cyclic_sum_exact(a: WeightVector, perm) -> Fraction:
    p = _perm_of(perm)
    if sorted(p) != list(range(1, a.n + 1)):
        raise ValidationError(f"{p} is not a permutation of 1..{a.n}")
    sq = a.squares
    n = a.n
    return sum((sq[p[i] - 1] * sq[p[(i + 1) % n] - 1] for i in range(n)), Fraction(0))


def cyclic_sum(a: WeightVector, perm) -> float:
    """``sum_i a_{p(i)}^2 a_{p(i+1)}^2`` around the cycle."""
    return float(cyclic_sum_exact(a, perm))


def conjecture_pattern(n: int) -> tuple[int, ...]:
    """Odd indices ascending, then even indices descending: (1,3,5,...,6,4,2)."""
    return tuple(range(1, n + 1, 2)) + tuple(range(n - (n % 2 == 1), 0, -2))


def _check_sorted_positive(a: WeightVector, strict_positive: bool = True):
    if strict_positive and a.has_zero:
        raise ValidationError("weights must be strictly positive")
    if not a.is_ascending():
        raise ValidationError(f"weights must be sorted ascending, got {a.a}")


def class_profiles(a: WeightVector, reps: Sequence[Sequence[int]], ts: np.ndarray) -> np.ndarray:
    """Support profiles ``z(t)`` of ``a`` arranged by each rep; shape ``(len(reps), len(ts))``."""
    sq = a.sq
    idx = np.asarray(reps, dtype=int) - 1
    coeffs = family_coeffs_batch(sq[idx])
    alphas = np.full(len(reps), a.alpha)
    return support_profile_batch(coeffs, alphas, ts)


def _profiles_parallel(a, reps, ts, workers):
    if workers <= 1 or len(reps) < 256:
        return class_profiles(a, reps, ts)
    chunks = np.array_split(np.arange(len(reps)), workers)
    with ProcessPoolExecutor(max_workers=workers) as ex:
        parts = list(ex.map(class_profiles, [a] * len(chunks),
                            [[reps[i] for i in c] for c in chunks], [ts] * len(chunks)))
    return np.vstack(parts)


@dataclass(frozen=True)
class ExtremeResult:
    status: str  # "Optimum" or "NoTotalOptimum"
    direction: str
    best: DihedralClass | None
    ties: tuple[DihedralClass, ...] = ()
    antichain: tuple[DihedralClass, ...] = ()
    margin: float = 0.0  # min gap (support units) to the nearest non-tied class
    tol: float = 0.0
    evidence: tuple[InclusionVerdict, ...] = ()

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "direction": self.direction,
            "best": list(self.best.rep) if self.best else None,
            "ties": [list(c.rep) for c in self.ties],
            "antichain": [list(c.rep) for c in self.antichain],
            "margin": self.margin,
            "tol": self.tol,
            "evidence": [v.to_dict() for v in self.evidence],
        }


def find_extreme(
    a: WeightVector,
    direction: str = "max",
    method: str = "grid",
    grid_size: int = DEFAULT_GRID,
    workers: int = 1,
) -> ExtremeResult:
    """Arrangement whose numerical range contains (max) or lies in (min) all others."""
    if not isinstance(a, WeightVector):
        a = WeightVector(a)
    direction = direction.lower()
    if direction not in ("max", "min"):
        raise ValidationError(f"direction must be max or min, got {direction!r}")
    if method not in ("grid", "certified"):
        raise ValidationError(f"method must be grid or certified, got {method!r}")
    _check_sorted_positive(a)
    table = enumerate_classes(a.n, workers) if a.n >= 3 else ClassTable(2, (DihedralClass((1, 2)),))
    reps = [c.rep for c in table.classes]
    ts = chebyshev_grid(grid_size)
    z = _profiles_parallel(a, reps, ts, workers)
    tol_z = 2.0 * default_tol(0.5 * float(z.max()))
    score = z if direction == "max" else -z
    env = score.max(axis=0)
    dominating = np.flatnonzero(np.all(score >= env - tol_z, axis=1))
    if dominating.size:
        i = int(dominating[0])
        ties = tuple(table.classes[j] for j in dominating[1:])
        others = np.setdiff1d(np.arange(len(reps)), dominating)
        margin = float(np.min(score[i] - score[others])) / 2.0 if others.size else 0.0
        evidence: tuple = ()
        if method == "certified":
            A = a.arrange(reps[i])
            ev = []
            for j in others:
                B = a.arrange(reps[j])
                ev.append(includes(A, B, "auto", grid_size) if direction == "max"
                          else includes(B, A, "auto", grid_size))
            evidence = tuple(ev)
            if any(v.kind is not Verdict.INCLUDED for v in evidence):
                return ExtremeResult("NoTotalOptimum", direction, None, (), (table.classes[i],),
                                     margin, tol_z / 2.0, evidence)
        return ExtremeResult("Optimum", direction, table.classes[i], ties, (), margin, tol_z / 2.0, evidence)
    # no class dominates: report the undominated classes touching the envelope
    touching = np.flatnonzero(np.any(score >= env - tol_z, axis=1))
    maximal = []
    for i in touching:
        dominated = False
        for j in touching:
            if i != j and np.all(score[j] >= score[i] - tol_z) and np.any(score[j] > score[i] + tol_z):
                dominated = True
                break
        if not dominated:
            maximal.append(table.classes[int(i)])
    return ExtremeResult("NoTotalOptimum", direction, None, (), tuple(maximal), 0.0, tol_z / 2.0)


@dataclass(frozen=True)
class ConjectureReport:
    passed: bool
    n: int
    pattern: DihedralClass
    worst_margin: float  # support units; min over classes other than the pattern
    worst_class: DihedralClass | None
    classes_checked: int
    tol: float

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "n": self.n,
            "pattern": list(self.pattern.rep),
            "worst_margin": self.worst_margin,
            "worst_class": list(self.worst_class.rep) if self.worst_class else None,
            "classes_checked": self.classes_checked,
            "tol": self.tol,
        }


def verify_conjecture1(
    a: WeightVector, grid_size: int = DEFAULT_GRID, workers: int = 1, tol: float | None = None
) -> ConjectureReport:
    """Check that the odd-ascending/even-descending arrangement contains every class."""
    if not isinstance(a, WeightVector):
        a = WeightVector(a)
    _check_sorted_positive(a, strict_positive=False)
    pattern = canonical_dihedral(conjecture_pattern(a.n))
    if a.n < 4:
        # a single class: W is the same for every arrangement
        return ConjectureReport(True, a.n, pattern, 0.0, None, 1, 0.0)
    table = enumerate_classes(a.n, workers)
    reps = [c.rep for c in table.classes]
    ts = chebyshev_grid(grid_size)
    z = _profiles_parallel(a, reps, ts, workers)
    ip = reps.index(pattern.rep)
    tol = default_tol(0.5 * float(z.max())) if tol is None else tol
    gaps = 0.5 * (z[ip] - z)
    gaps[ip] = np.inf
    per_class = gaps.min(axis=1)
    w = int(np.argmin(per_class))
    worst = float(per_class[w])
    if worst < tol:
        # densify around the worst node of the worst class
        v = includes(a.arrange(pattern.rep), a.arrange(reps[w]), "grid", grid_size, tol)
        worst = min(worst, v.margin)
    return ConjectureReport(worst >= -tol, a.n, pattern, worst, table.classes[w], len(reps), tol)


# ----------------------------------------------------------------------------
# n = 6 structure

@dataclass(frozen=True)
class CyclicSumReport:
    cyclic_sums: dict  # reference number -> Fraction
    products: dict  # reference number -> odd-position product + even-position product
    checks: tuple  # (upper, lower, difference, formula value, ok)
    edges: tuple  # (lower, upper) pairs of the cyclic-sum order that were checked

    @property
    def ok(self) -> bool:
        return all(c[-1] for c in self.checks)


@dataclass(frozen=True)
class IntersectionBound:
    alpha: dict  # head -> cyclic-sum gap to the top class
    beta: dict  # head -> product-term gap
    X: dict  # head -> -beta/alpha (None when alpha == 0)
    X_formula: dict  # head -> closed r-expression value
    X0: Fraction
    bound: Fraction  # X0 + r5/3
    support_sq: dict  # t -> squared top support of the top class
    ok: bool


def family_analysis_n6(a: WeightVector, ts: Sequence[float] = (-1.0, 0.0, 1.0)):
    """Exact cyclic-sum gaps and intersection bounds for six ascending weights."""
    if not isinstance(a, WeightVector):
        a = WeightVector(a)
    if a.n != 6:
        raise ValidationError(f"family analysis needs n = 6, got {a.n}")
    _check_sorted_positive(a)
    r = r_decomposition(a).r
    sq = a.squares

    def odd_even(p):
        return (sq[p[0] - 1] * sq[p[2] - 1] * sq[p[4] - 1]
                + sq[p[1] - 1] * sq[p[3] - 1] * sq[p[5] - 1])

    sums = {j: cyclic_sum_exact(a, p) for j, p in n6.LABELLED_N6.items()}
    prods = {j: odd_even(p) for j, p in n6.LABELLED_N6.items()}
    checks = []
    for (hi, lo), fn in list(n6.WITHIN_FAMILY_GAPS.items()) + list(n6.CHAIN_GAPS.items()):
        diff = sums[hi] - sums[lo]
        val = fn(*r)
        checks.append((hi, lo, diff, val, diff == val and diff >= 0))
    edges = tuple((lo, hi) for hi, lo, *_ in checks)

    top = n6.TOP_N6
    X0 = sum(sq) / 3
    bound = X0 + r[4] / 3
    alpha, beta, X, Xf = {}, {}, {}, {}
    ok = True
    for j in n6.HEADS_N6:
        al = sums[top] - sums[j]
        be = prods[top] - prods[j]
        alpha[j], beta[j] = al, be
        num, den = n6.INTERSECTIONS[j](*r)
        Xf[j] = Fraction(num) / den if den != 0 else None
        if al == 0:
            X[j] = None
            ok &= be >= 0  # G_j is the constant beta
        else:
            X[j] = -be / al
            ok &= X[j] <= bound
    top_w = a.arrange(n6.LABELLED_N6[top])
    support_sq = {float(t): support_max(top_w, float(t)) ** 2 for t in ts}
    ok &= all(float(bound) < v for v in support_sq.values())
    report = CyclicSumReport(sums, prods, tuple(checks), edges)
    return report, IntersectionBound(alpha, beta, X, Xf, X0, bound, support_sq, bool(ok and report.ok))
