import random

import numpy as np
import pytest

from cyclerange.weights import WeightVector

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return random.Random(20240607)


def random_weights(rng, n, lo=0.1, hi=5.0, zero_prob=0.0):
    w = [rng.uniform(lo, hi) for _ in range(n)]
    if zero_prob and rng.random() < zero_prob:
        w[rng.randrange(n)] = 0.0
    return WeightVector(w)


def ascending(rng, n, lo=0.1, hi=10.0):
    while True:
        w = sorted(rng.uniform(lo, hi) for _ in range(n))
        if all(x < y for x, y in zip(w, w[1:])):
            return WeightVector(w)


def dense_charpoly(a: WeightVector, theta: float) -> np.ndarray:
    """det(zI - 2Re(e^{i theta} A)) coefficients straight from the dense matrix."""
    A = a.matrix().astype(complex)
    H = np.exp(1j * theta) * A + np.exp(-1j * theta) * A.T
    return np.real(np.poly(H))
