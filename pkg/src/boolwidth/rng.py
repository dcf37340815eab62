"""Deterministic pseudo-random numbers for graph generation and baselines.

The generator is xorshift64*, chosen for trivial cross-language
reproduction.  The exact algorithm, so another implementation can match
bit for bit:

  seeding   state = splitmix64(seed & 2^64-1), re-run while state == 0
            (splitmix64: x += 0x9E3779B97F4A7C15;
             z = x; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9;
             z = (z ^ z>>27) * 0x94D049BB133111EB; return z ^ z>>31)
  next      x ^= x >> 12; x ^= (x << 25) & 2^64-1; x ^= x >> 27;
            output (x * 0x2545F4914F6CDD1D) mod 2^64
  random()  next() >> 11, times 2^-53  (uniform in [0, 1))
  randrange(k)  next() mod k
  shuffle   Fisher-Yates, i from len-1 down to 1, j = randrange(i+1)
"""

_MASK64 = (1 << 64) - 1


def _splitmix64(x):
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class XorShift64Star:
    """xorshift64* stream; see the module docstring for the exact recipe."""

    name = "xorshift64star"

    def __init__(self, seed: int):
        state = _splitmix64(seed & _MASK64)
        feed = seed & _MASK64
        while state == 0:
            feed = _splitmix64(feed)
            state = _splitmix64(feed)
        self._state = state

    def next_u64(self) -> int:
        x = self._state
        x ^= x >> 12
        x = (x ^ (x << 25)) & _MASK64
        x ^= x >> 27
        self._state = x
        return (x * 0x2545F4914F6CDD1D) & _MASK64

    def random(self) -> float:
        return (self.next_u64() >> 11) * 2.0**-53

    def randrange(self, k: int) -> int:
        if k <= 0:
            raise ValueError("randrange needs k >= 1")
        return self.next_u64() % k

    def shuffle(self, xs: list) -> None:
        for i in range(len(xs) - 1, 0, -1):
            j = self.randrange(i + 1)
            xs[i], xs[j] = xs[j], xs[i]
