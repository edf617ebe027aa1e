"""xoshiro256** pseudo-random generator seeded through splitmix64.

Small and fully specified, so seeded trial runs are reproducible across
platforms and library versions.
"""

from __future__ import annotations

from typing import Sequence

_MASK = (1 << 64) - 1


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK


def splitmix64(state: int) -> tuple[int, int]:
    """One splitmix64 step: returns ``(new_state, output)``."""
    state = (state + 0x9E3779B97F4A7C15) & _MASK
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return state, z ^ (z >> 31)


class Xoshiro256:
    def __init__(self, seed: int = 0, state: Sequence[int] | None = None):
        if state is not None:
            s = [int(x) & _MASK for x in state]
            if len(s) != 4 or not any(s):
                raise ValueError("state must be four 64-bit words, not all zero")
            self.s = s
            return
        sm = int(seed) & _MASK
        self.s = []
        for _ in range(4):
            sm, out = splitmix64(sm)
            self.s.append(out)

    def next_u64(self) -> int:
        s = self.s
        result = (_rotl((s[1] * 5) & _MASK, 7) * 9) & _MASK
        t = (s[1] << 17) & _MASK
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def random(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()

    def ascending(self, n: int, lo: float = 0.1, hi: float = 10.0) -> list[float]:
        """n distinct uniform draws from [lo, hi), sorted ascending."""
        while True:
            xs = sorted(self.uniform(lo, hi) for _ in range(n))
            if all(x < y for x, y in zip(xs, xs[1:])):
                return xs
