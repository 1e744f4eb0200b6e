"""Deterministic 64-bit PRNG (splitmix64).

Chosen because it is tiny, platform independent, and has published
reference outputs, so identical seeds give identical streams everywhere.
"""

MASK64 = (1 << 64) - 1

_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def splitmix64_next(state: int) -> tuple[int, int]:
    """Advance one step; returns (output, new_state). All math is mod 2**64."""
    state = (state + _GAMMA) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * _MIX1) & MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & MASK64
    return (z ^ (z >> 31)), state


class SplitMix64:
    """Stateful convenience wrapper around splitmix64_next."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        value, self.state = splitmix64_next(self.state)
        return value

    def below(self, bound: int) -> int:
        """Uniform-ish draw in [0, bound). Modulo bias is acceptable here;
        determinism across platforms is the contract that matters."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound
