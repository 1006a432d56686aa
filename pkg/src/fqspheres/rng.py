"""Deterministic random numbers for reproducible experiments.

Everything random in this package flows through SplitMix64 (Steele,
Lea and Flood's 64-bit generator). The stream depends only on the
seed, never on the platform or the Python version, so generated point
sets and report files stay byte-identical across machines. The
standard library's ``random.Random.sample`` makes no such promise
between versions, which is why this module exists.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """64-bit Weyl-sequence generator with a murmur-style finalizer."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_uint64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        return _mix(self._state)

    def randbelow(self, n: int) -> int:
        """Uniform integer in [0, n), unbiased via rejection sampling."""
        if n <= 0:
            raise ValueError("randbelow needs a positive bound")
        span = _MASK64 + 1
        limit = span - span % n
        while True:
            r = self.next_uint64()
            if r < limit:
                return r % n

    def sample(self, n: int, k: int) -> list[int]:
        """k distinct integers from range(n), by partial Fisher-Yates.

        Order matters and is part of the deterministic contract.
        """
        if not 0 <= k <= n:
            raise ValueError(f"cannot sample {k} from {n}")
        swapped: dict[int, int] = {}
        out = []
        for i in range(k):
            j = i + self.randbelow(n - i)
            out.append(swapped.get(j, j))
            swapped[j] = swapped.get(i, i)
        return out


def derive_seed(seed: int, label: str) -> int:
    """Stable sub-seed for a named stream, e.g. points vs spheres."""
    h = _mix((seed & _MASK64) ^ _GAMMA)
    for b in label.encode("utf-8"):
        h = _mix(h ^ b)
    return h
