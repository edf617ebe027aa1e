"""Reference numbering of the 60 dihedral classes for n = 6 and the exact
r-polynomials for cyclic-sum gaps and intersection abscissae.

Indices refer to weights sorted ascending; ``r`` is the increment vector of
the squared weights (``a_j^2 = r_1 + ... + r_j``).
"""

from __future__ import annotations

# arrangement of weight indices for each numbered class
LABELLED_N6: dict[int, tuple[int, ...]] = {
    1: (1, 2, 3, 4, 5, 6), 2: (1, 2, 4, 3, 5, 6), 3: (1, 3, 2, 4, 5, 6),
    4: (1, 3, 4, 2, 5, 6), 5: (1, 4, 2, 3, 5, 6), 6: (1, 4, 3, 2, 5, 6),
    7: (2, 1, 3, 4, 5, 6), 8: (2, 1, 4, 3, 5, 6), 9: (2, 3, 1, 4, 5, 6),
    10: (2, 3, 4, 1, 5, 6), 11: (2, 4, 1, 3, 5, 6), 12: (2, 4, 3, 1, 5, 6),
    13: (3, 1, 2, 4, 5, 6), 14: (3, 1, 4, 2, 5, 6), 15: (3, 2, 1, 4, 5, 6),
    16: (3, 2, 4, 1, 5, 6), 17: (3, 4, 1, 2, 5, 6), 18: (3, 4, 2, 1, 5, 6),
    19: (4, 1, 2, 3, 5, 6), 20: (4, 1, 3, 2, 5, 6), 21: (4, 2, 1, 3, 5, 6),
    22: (4, 2, 3, 1, 5, 6), 23: (4, 3, 1, 2, 5, 6), 24: (4, 3, 2, 1, 5, 6),
    25: (1, 2, 3, 5, 4, 6), 26: (1, 2, 5, 3, 4, 6), 27: (1, 3, 2, 5, 4, 6),
    28: (1, 3, 5, 2, 4, 6), 29: (1, 5, 2, 3, 4, 6), 30: (1, 5, 3, 2, 4, 6),
    31: (2, 1, 3, 5, 4, 6), 32: (2, 1, 5, 3, 4, 6), 33: (2, 3, 1, 5, 4, 6),
    34: (2, 3, 5, 1, 4, 6), 35: (2, 5, 1, 3, 4, 6), 36: (2, 5, 3, 1, 4, 6),
    37: (3, 1, 2, 5, 4, 6), 38: (3, 1, 5, 2, 4, 6), 39: (3, 2, 1, 5, 4, 6),
    40: (3, 2, 5, 1, 4, 6), 41: (3, 5, 1, 2, 4, 6), 42: (3, 5, 2, 1, 4, 6),
    43: (3, 5, 4, 1, 2, 6), 44: (2, 1, 5, 4, 3, 6), 45: (2, 4, 1, 5, 3, 6),
    46: (2, 4, 5, 1, 3, 6), 47: (2, 5, 1, 4, 3, 6), 48: (2, 5, 4, 1, 3, 6),
    49: (1, 3, 4, 5, 2, 6), 50: (1, 3, 5, 4, 2, 6), 51: (1, 4, 3, 5, 2, 6),
    52: (1, 4, 5, 3, 2, 6), 53: (1, 5, 3, 4, 2, 6), 54: (1, 5, 4, 3, 2, 6),
    55: (1, 2, 4, 5, 3, 6), 56: (1, 2, 5, 4, 3, 6), 57: (1, 4, 2, 5, 3, 6),
    58: (1, 4, 5, 2, 3, 6), 59: (1, 5, 2, 4, 3, 6), 60: (1, 5, 4, 2, 3, 6),
}

# family label -> (head, other members); families share the odd/even split
FAMILIES_N6: dict[str, tuple[int, tuple[int, ...]]] = {
    "I": (21, (2, 4, 23, 26, 28)),
    "II": (45, (47, 51, 53, 57, 59)),
    "III": (15, (1, 6, 17, 56, 58)),
    "IV": (9, (3, 5, 11, 50, 52)),
    "V": (13, (7, 12, 18, 44, 46)),
    "VI": (19, (8, 10, 24, 32, 34)),
    "VII": (20, (14, 16, 22, 38, 40)),
    "VIII": (39, (25, 30, 41, 55, 60)),
    "IX": (33, (27, 29, 35, 49, 54)),
    "X": (37, (31, 36, 42, 43, 48)),
}

TOP_N6 = 21
HEADS_N6 = (9, 13, 15, 19, 20, 33, 37, 39, 45)


def _s(*xs):
    return sum(xs)


# (upper, lower) -> cyclic_sum(upper) - cyclic_sum(lower) as a polynomial in r1..r6
WITHIN_FAMILY_GAPS = {
    (21, 2): lambda r1, r2, r3, r4, r5, r6: _s(r2, r3, r4) * _s(r4, r5, r6),
    (21, 4): lambda r1, r2, r3, r4, r5, r6: r3 * _s(r2, r3, r4, r5) + _s(r2, r3, r4) * _s(r4, r5, r6),
    (21, 23): lambda r1, r2, r3, r4, r5, r6: r3 * r5,
    (21, 26): lambda r1, r2, r3, r4, r5, r6: r5 * _s(r3, r4, r5, r6) + _s(r2, r3, r4) * _s(r4, r5, r6),
    (21, 28): lambda r1, r2, r3, r4, r5, r6: _s(r2, r3, r4, r5) * _s(r3, r4, r5, r6),
    (45, 47): lambda r1, r2, r3, r4, r5, r6: r3 * r5,
    (45, 51): lambda r1, r2, r3, r4, r5, r6: r3 * r5 + (r2 + r3) * r6,
    (45, 53): lambda r1, r2, r3, r4, r5, r6: (r2 + r3) * (r5 + r6),
    (45, 57): lambda r1, r2, r3, r4, r5, r6: r2 * r6,
    (45, 59): lambda r1, r2, r3, r4, r5, r6: (r2 + r3) * r5 + r2 * r6,
    (15, 1): lambda r1, r2, r3, r4, r5, r6: (r2 + r3) * (r5 + r6),
    (15, 6): lambda r1, r2, r3, r4, r5, r6: (r2 + r3) * (r5 + r6) + (r3 + r4) * _s(r2, r3, r4, r5),
    (15, 17): lambda r1, r2, r3, r4, r5, r6: (r3 + r4) * (r4 + r5),
    (15, 56): lambda r1, r2, r3, r4, r5, r6: (r3 + r4) * (r4 + r5) + _s(r2, r3, r4, r5) * (r5 + r6),
    (15, 58): lambda r1, r2, r3, r4, r5, r6: _s(r2, r3, r4, r5) * _s(r3, r4, r5, r6),
    (9, 3): lambda r1, r2, r3, r4, r5, r6: r2 * (r5 + r6),
    (9, 5): lambda r1, r2, r3, r4, r5, r6: r2 * (r5 + r6) + r4 * _s(r2, r3, r4, r5),
    (9, 11): lambda r1, r2, r3, r4, r5, r6: r4 * _s(r3, r4, r5),
    (9, 50): lambda r1, r2, r3, r4, r5, r6: r4 * _s(r3, r4, r5) + (r5 + r6) * _s(r2, r3, r4, r5),
    (9, 52): lambda r1, r2, r3, r4, r5, r6: _s(r4, r5, r6) * _s(r2, r3, r4, r5),
    (13, 7): lambda r1, r2, r3, r4, r5, r6: r3 * (r5 + r6),
    (13, 12): lambda r1, r2, r3, r4, r5, r6: r3 * (r5 + r6) + _s(r2, r3, r4) * _s(r3, r4, r5),
    (13, 18): lambda r1, r2, r3, r4, r5, r6: (r4 + r5) * _s(r2, r3, r4),
    (13, 44): lambda r1, r2, r3, r4, r5, r6: (r4 + r5) * _s(r2, r3, r4) + (r5 + r6) * _s(r3, r4, r5),
    (13, 46): lambda r1, r2, r3, r4, r5, r6: _s(r3, r4, r5) * _s(r2, r3, r4, r5, r6),
    (19, 8): lambda r1, r2, r3, r4, r5, r6: (r3 + r4) * _s(r4, r5, r6),
    (19, 10): lambda r1, r2, r3, r4, r5, r6: (r2 + r3) * _s(r3, r4, r5) + (r3 + r4) * _s(r4, r5, r6),
    (19, 24): lambda r1, r2, r3, r4, r5, r6: r5 * (r2 + r3),
    (19, 32): lambda r1, r2, r3, r4, r5, r6: r5 * (r2 + r3) + _s(r3, r4, r5) * _s(r4, r5, r6),
    (19, 34): lambda r1, r2, r3, r4, r5, r6: _s(r3, r4, r5) * _s(r2, r3, r4, r5, r6),
    (20, 14): lambda r1, r2, r3, r4, r5, r6: r4 * _s(r3, r4, r5, r6),
    (20, 16): lambda r1, r2, r3, r4, r5, r6: r2 * (r4 + r5) + r4 * _s(r3, r4, r5, r6),
    (20, 22): lambda r1, r2, r3, r4, r5, r6: r2 * r5,
    (20, 38): lambda r1, r2, r3, r4, r5, r6: r4 * _s(r3, r4, r5, r6) + r5 * _s(r2, r3, r4, r5, r6),
    (20, 40): lambda r1, r2, r3, r4, r5, r6: (r4 + r5) * _s(r2, r3, r4, r5, r6),
    (39, 25): lambda r1, r2, r3, r4, r5, r6: r6 * (r2 + r3),
    (39, 30): lambda r1, r2, r3, r4, r5, r6: r6 * (r2 + r3) + _s(r2, r3, r4) * _s(r3, r4, r5),
    (39, 41): lambda r1, r2, r3, r4, r5, r6: r4 * _s(r3, r4, r5),
    (39, 55): lambda r1, r2, r3, r4, r5, r6: r4 * _s(r3, r4, r5) + r6 * _s(r2, r3, r4),
    (39, 60): lambda r1, r2, r3, r4, r5, r6: _s(r2, r3, r4) * _s(r3, r4, r5, r6),
    (33, 27): lambda r1, r2, r3, r4, r5, r6: r2 * r6,
    (33, 29): lambda r1, r2, r3, r4, r5, r6: r2 * _s(r4, r5, r6) + (r3 + r4) * (r4 + r5),
    (33, 35): lambda r1, r2, r3, r4, r5, r6: (r3 + r4) * (r4 + r5),
    (33, 49): lambda r1, r2, r3, r4, r5, r6: (r3 + r4) * (r4 + r5) + r6 * _s(r2, r3, r4),
    (33, 54): lambda r1, r2, r3, r4, r5, r6: _s(r2, r3, r4) * _s(r4, r5, r6),
    (37, 31): lambda r1, r2, r3, r4, r5, r6: r3 * r6,
    (37, 36): lambda r1, r2, r3, r4, r5, r6: r3 * r6 + (r3 + r4) * _s(r2, r3, r4, r5),
    (37, 42): lambda r1, r2, r3, r4, r5, r6: r4 * _s(r2, r3, r4, r5),
    (37, 43): lambda r1, r2, r3, r4, r5, r6: r3 * r6 + r4 * _s(r2, r3, r4, r5, r6),
    (37, 48): lambda r1, r2, r3, r4, r5, r6: (r3 + r4) * _s(r2, r3, r4, r5, r6),
}

# cross-family chains: 45 <= 33 <= 37 <= 13 <= 21, 33 <= 20 <= 19 <= 21,
# 33 <= 39 <= 19 <= 21, 9 <= 15 <= 13 <= 21
CHAINS = {
    "a": (45, 33, 37, 13, 21),
    "b": (33, 20, 19, 21),
    "c": (33, 39, 19, 21),
    "d": (9, 15, 13, 21),
}

CHAIN_GAPS = {
    (33, 45): lambda r1, r2, r3, r4, r5, r6: r4 * (r2 + 2 * r3 + 2 * r4 + 2 * r5 + r6),
    (37, 33): lambda r1, r2, r3, r4, r5, r6: r2 * (r4 + r5) + r3 * _s(r2, r3, r4, r5, r6),
    (13, 37): lambda r1, r2, r3, r4, r5, r6: r5 * _s(r3, r4, r5, r6),
    (21, 13): lambda r1, r2, r3, r4, r5, r6: r4 * r6,
    (20, 33): lambda r1, r2, r3, r4, r5, r6: r5 * _s(r2, r3, r4, r5) + r6 * _s(r3, r4, r5),
    (19, 20): lambda r1, r2, r3, r4, r5, r6: r3 * _s(r2, r3, r4, r5),
    (21, 19): lambda r1, r2, r3, r4, r5, r6: r2 * r4,
    (39, 33): lambda r1, r2, r3, r4, r5, r6: r3 * _s(r2, r3, r4, r5, r6),
    (19, 39): lambda r1, r2, r3, r4, r5, r6: r4 * r6 + r5 * _s(r2, r3, r4, r5, r6),
    (15, 9): lambda r1, r2, r3, r4, r5, r6: r3 * _s(r2, r3, r4, r5, r6),
    (13, 15): lambda r1, r2, r3, r4, r5, r6: r2 * r4,
}

# intersection abscissa X(j) (in z^2 units) of the difference of the cubics of
# class j and the top class; each is (numerator, denominator)
INTERSECTIONS = {
    13: lambda r1, r2, r3, r4, r5, r6: (r1 * r4 - r2 * (r1 + r2 + r3), r4),
    33: lambda r1, r2, r3, r4, r5, r6: (
        r1 * r2 + r2**2 + r1 * r3 + 2 * r2 * r3 + r3**2 + r2 * r4 + r3 * r4
        + (r1 + r2 + r3) * (r5 + r6),
        r2 + r3 + r5 + r6,
    ),
    37: lambda r1, r2, r3, r4, r5, r6: (
        (r5 + r6) * (r1 * (r4 + r5) - r2 * (r1 + r2 + r3)),
        r4 * r6 + r5 * _s(r3, r4, r5, r6),
    ),
    39: lambda r1, r2, r3, r4, r5, r6: (
        (r4 + r5) * (r1 * r2 + r2**2 + r2 * r3 + r2 * r4 + r1 * r5 + r2 * r5 + r1 * r6 + r2 * r6),
        r4 * (r2 + r6) + r5 * _s(r2, r3, r4, r5, r6),
    ),
    45: lambda r1, r2, r3, r4, r5, r6: (
        r1 * r3 + r2 * r3 + r3**2 + 2 * r1 * r4 + 2 * r2 * r4 + 2 * r3 * r4
        + r4**2 + r1 * r5 + r2 * r5 + r3 * r5 + r4 * r5,
        r3 + 2 * r4 + r5,
    ),
    19: lambda r1, r2, r3, r4, r5, r6: (
        r1 * r4 + r2 * r4 + r3 * r4 + r4**2 + r4 * r5 - r1 * r6 - r2 * r6 - r3 * r6,
        r4,
    ),
    15: lambda r1, r2, r3, r4, r5, r6: (r1 * r6 + r2 * _s(r1, r2, r3, r4, r5, r6), r2 + r6),
    20: lambda r1, r2, r3, r4, r5, r6: (
        (r2 + r3) * (r1 * r3 + r2 * r3 + r3**2 + r1 * r4 + r2 * r4 + 2 * r3 * r4
                     + r4**2 + r3 * r5 + r4 * r5 - r1 * r6 - r2 * r6),
        r2 * r4 + r3 * _s(r2, r3, r4, r5),
    ),
    9: lambda r1, r2, r3, r4, r5, r6: (
        (r3 + r4) * (r1 * (r2 + r3 + r6) + r2 * (r2 + 2 * r3) + r3**2 + (r2 + r3) * _s(r4, r5, r6)),
        r4 * (r2 + r6) + r3 * _s(r2, r3, r4, r5, r6),
    ),
}
