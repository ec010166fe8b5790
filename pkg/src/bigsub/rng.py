"""Deterministic 64-bit generator for reproducible operands.

The recurrence: state += 0x9E3779B97F4A7C15; the output mixes the new
state with two xor-shift-multiply rounds.  All arithmetic is modulo
2^64, so streams are bit-identical across platforms and languages.

Because the state advances by a fixed constant, the k-th output is a
pure function of seed and k; next_block exploits that to produce long
stretches of the same stream vectorized, which gen_operand relies on
for million-digit operands.
"""

import numpy as np

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """Stream of 64-bit outputs, fully determined by the seed."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK
        return z ^ (z >> 31)

    def next_block(self, count: int) -> np.ndarray:
        """The next `count` outputs as uint64, identical to calling
        next_u64 that many times."""
        steps = np.arange(1, count + 1, dtype=np.uint64)
        z = np.uint64(self.state) + steps * np.uint64(_GAMMA)
        self.state = (self.state + count * _GAMMA) & _MASK
        z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
        return z ^ (z >> np.uint64(31))
