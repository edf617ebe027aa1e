"""Weight vectors of cyclic shift matrices and their reductions.

``S(a_1, ..., a_n)`` has ``a_j`` at position ``(j, j+1)`` and ``a_n`` at
``(n, 1)``.  Only the magnitudes matter up to a rotation of the plane, so the
library works with nonnegative weights and keeps the squared weights as exact
rationals: every coefficient of the characteristic polynomial family is a
polynomial in the squares, which makes integer-square inputs exact.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import ValidationError

__all__ = [
    "WeightVector",
    "PhaseReduction",
    "RDecomposition",
    "DihedralClass",
    "normalize_complex",
    "canonical_dihedral",
    "dihedral_orbit",
    "r_decomposition",
    "from_r",
    "parse_weights",
]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    xf = float(x)
    if not math.isfinite(xf):
        raise ValidationError(f"weight {x!r} is not finite")
    return Fraction(xf)


@dataclass(frozen=True)
class WeightVector:
    """Nonnegative weights ``a_1..a_n`` of ``S(a_1, ..., a_n)``.

    ``squares`` holds the exact squared weights.  When built from floats the
    squares are the exact squares of those floats; when built with
    :meth:`from_squares` they are the given values and ``a`` is the rounded
    square root.
    """

    a: tuple[float, ...]
    squares: tuple[Fraction, ...] = field(repr=False)

    def __init__(self, a: Iterable[float], squares: Iterable | None = None):
        a = tuple(float(x) for x in a)
        if len(a) < 2:
            raise ValidationError(f"need at least 2 weights, got {len(a)}")
        for x in a:
            if not math.isfinite(x) or x < 0:
                raise ValidationError(f"weights must be finite and >= 0, got {x!r}")
        if squares is None:
            sq = tuple(Fraction(x) ** 2 for x in a)
        else:
            sq = tuple(_as_fraction(s) for s in squares)
            if len(sq) != len(a):
                raise ValidationError("squares and weights differ in length")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "squares", sq)

    @classmethod
    def from_squares(cls, squares: Iterable) -> "WeightVector":
        sq = tuple(_as_fraction(s) for s in squares)
        for s in sq:
            if s < 0:
                raise ValidationError(f"squared weight {s} is negative")
        return cls((math.sqrt(s) for s in sq), squares=sq)

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def alpha(self) -> float:
        """Product of the weights."""
        if any(s == 0 for s in self.squares):
            return 0.0
        return math.sqrt(math.prod(self.squares))

    @property
    def has_zero(self) -> bool:
        return any(s == 0 for s in self.squares)

    @property
    def sq(self) -> np.ndarray:
        return np.array([float(s) for s in self.squares])

    def norm_sq(self) -> float:
        return float(sum(self.squares))

    def arrange(self, perm: Sequence[int]) -> "WeightVector":
        """Return ``S(a_{perm[0]}, ..., a_{perm[n-1]})`` with 1-based indices."""
        _check_perm(perm, self.n)
        return WeightVector(
            (self.a[p - 1] for p in perm), squares=(self.squares[p - 1] for p in perm)
        )

    def scaled(self, c: float) -> "WeightVector":
        if c < 0:
            raise ValidationError("scale must be nonnegative")
        cf = Fraction(float(c))
        return WeightVector((c * x for x in self.a), squares=(cf * cf * s for s in self.squares))

    def matrix(self) -> np.ndarray:
        n = self.n
        m = np.zeros((n, n))
        for j in range(n - 1):
            m[j, j + 1] = self.a[j]
        m[n - 1, 0] += self.a[n - 1]
        return m

    def is_ascending(self, strict: bool = False) -> bool:
        s = self.squares
        if strict:
            return all(x < y for x, y in zip(s, s[1:]))
        return all(x <= y for x, y in zip(s, s[1:]))

    def __len__(self) -> int:
        return self.n


@dataclass(frozen=True)
class PhaseReduction:
    """``W(A) = e^{i*phase} W(S(magnitudes))``."""

    magnitudes: WeightVector
    phase: float


@dataclass(frozen=True)
class RDecomposition:
    """Increments of the squared weights: ``a_j^2 = r_1 + ... + r_j``."""

    r: tuple[Fraction, ...]

    def as_floats(self) -> tuple[float, ...]:
        return tuple(float(x) for x in self.r)


@dataclass(frozen=True)
class DihedralClass:
    """Lexicographically least arrangement in a rotation/reversal orbit."""

    rep: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.rep)

    def __str__(self) -> str:
        return "S(" + ",".join(f"a{i}" for i in self.rep) + ")"


def normalize_complex(w: Sequence[complex]) -> PhaseReduction:
    """Reduce complex weights to magnitudes plus a global rotation.

    The phase ``t`` satisfies ``e^{int} = prod(w) / |prod(w)|`` and is taken in
    ``[0, 2*pi/n)``.  With a zero weight the range is a disk and ``t = 0``.
    """
    w = [complex(x) for x in w]
    n = len(w)
    if n < 2:
        raise ValidationError(f"need at least 2 weights, got {n}")
    mags = WeightVector(abs(x) for x in w)
    if any(x == 0 for x in w):
        return PhaseReduction(mags, 0.0)
    total = math.fsum(cmath.phase(x) for x in w)
    t = math.fmod(total, 2 * math.pi)
    if t < 0:
        t += 2 * math.pi
    t /= n
    period = 2 * math.pi / n
    if t >= period:  # guards rounding at the top of the branch
        t -= period
    return PhaseReduction(mags, t)


def _check_perm(perm: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    p = tuple(int(x) for x in perm)
    m = len(p) if n is None else n
    if len(p) != m or sorted(p) != list(range(1, m + 1)):
        raise ValidationError(f"{list(perm)} is not a permutation of 1..{m}")
    return p


def dihedral_orbit(perm: Sequence[int]) -> list[tuple[int, ...]]:
    """All rotations of ``perm`` and of its reversal (with repeats)."""
    p = tuple(perm)
    n = len(p)
    rev = p[::-1]
    return [p[k:] + p[:k] for k in range(n)] + [rev[k:] + rev[:k] for k in range(n)]


def canonical_dihedral(perm: Sequence[int]) -> DihedralClass:
    p = _check_perm(perm)
    return DihedralClass(min(dihedral_orbit(p)))


def r_decomposition(a: WeightVector) -> RDecomposition:
    sq = a.squares
    return RDecomposition((sq[0],) + tuple(y - x for x, y in zip(sq, sq[1:])))


def from_r(r: Iterable) -> WeightVector:
    """Inverse of :func:`r_decomposition`; rejects negative partial sums."""
    total = Fraction(0)
    squares = []
    for j, x in enumerate(r, start=1):
        total += _as_fraction(x)
        if total < 0:
            raise ValidationError(f"partial sum r_1+...+r_{j} = {float(total)} is negative")
        squares.append(total)
    return WeightVector.from_squares(squares)


def parse_weights(text: str) -> WeightVector:
    """Parse ``"1,2.5,3"`` or ``"sq:0,3,4,8"`` (squared weights)."""
    s = text.strip()
    squared = s.lower().startswith("sq:")
    if squared:
        s = s[3:]
    parts = [p.strip() for p in s.split(",") if p.strip()]
    try:
        vals = [Fraction(p) for p in parts]
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"cannot parse weights {text!r}: {exc}") from None
    if squared:
        return WeightVector.from_squares(vals)
    if any(v < 0 for v in vals):
        raise ValidationError(f"weights must be >= 0 in {text!r}")
    return WeightVector((float(v) for v in vals), squares=(v * v for v in vals))
