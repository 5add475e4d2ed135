"""Deterministic 64-bit PRNG used for shot sampling: xorshift64*.

Marsaglia's xorshift64 (shifts 12/25/27) with Vigna's odd multiplier
0x2545F4914F6CDD1D applied to the state on output.  Seeds are passed
through one round of splitmix64 first so that small or zero seeds still
start from a well-spread nonzero state.  Uniform doubles take the top 53
bits of each output, giving values in [0, 1).

Kept dependency-free on purpose: histogram reproducibility must not hinge
on the numpy version in use.  The full algorithm is restated in the README
so histograms can be re-derived outside this package.
"""

_MASK64 = (1 << 64) - 1


class Xorshift64Star:
    """xorshift64* stream; identical output for identical seeds everywhere."""

    def __init__(self, seed: int):
        self.seed = seed & _MASK64
        # one splitmix64 round to spread the raw seed
        z = (self.seed + 0x9E3779B97F4A7C15) & _MASK64
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        self._state = (z ^ (z >> 31)) or 0x9E3779B97F4A7C15  # state must be nonzero

    def next_u64(self) -> int:
        x = self._state
        x ^= x >> 12
        x = (x ^ (x << 25)) & _MASK64
        x ^= x >> 27
        self._state = x
        return (x * 0x2545F4914F6CDD1D) & _MASK64

    def next_double(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits of the next output."""
        return (self.next_u64() >> 11) * 2.0**-53
