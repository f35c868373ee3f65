"""Counter-based deterministic random stream.

Every randomized check in this package draws from the same generator so
that counterexamples reproduce across machines and implementations:

    word(seed, n) = mix(seed + (n + 1) * 0x9E3779B97F4A7C15  mod 2^64)

where ``mix`` is the splitmix64 finalizer

    z ^= z >> 30; z *= 0xBF58476D1CE4E5B9
    z ^= z >> 27; z *= 0x94D049BB133111EB
    z ^= z >> 31

All arithmetic is modulo 2^64.  ``n`` is a stream counter starting at 0.
"""

import numpy as np

_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_M64 = (1 << 64) - 1


def rand_word(seed: int, counter: int) -> int:
    """The ``counter``-th 64-bit word of the stream for ``seed``."""
    z = (seed + (counter + 1) * _GOLDEN) & _M64
    z = ((z ^ (z >> 30)) * _MIX1) & _M64
    z = ((z ^ (z >> 27)) * _MIX2) & _M64
    return z ^ (z >> 31)


def rand_words(seed: int, start: int, n: int) -> np.ndarray:
    """Words ``start .. start+n-1`` of the stream, as uint64 array."""
    ctr = np.arange(start + 1, start + n + 1, dtype=np.uint64)
    z = np.uint64(seed & _M64) + ctr * np.uint64(_GOLDEN)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
    return z ^ (z >> np.uint64(31))


def rand_ints(seed: int, start: int, n: int, bound: int) -> np.ndarray:
    """n values in 0..bound-1 (bias below 2^-50 for the bounds used here)."""
    return (rand_words(seed, start, n) % np.uint64(bound)).astype(np.int64)


class CounterRng:
    """Stateful convenience wrapper advancing the stream counter."""

    def __init__(self, seed: int):
        self.seed = seed & _M64
        self.counter = 0

    def words(self, n: int) -> np.ndarray:
        out = rand_words(self.seed, self.counter, n)
        self.counter += n
        return out

    def ints(self, n: int, bound: int) -> np.ndarray:
        out = rand_ints(self.seed, self.counter, n, bound)
        self.counter += n
        return out

    def int(self, bound: int) -> int:
        out = rand_word(self.seed, self.counter) % bound
        self.counter += 1
        return int(out)
