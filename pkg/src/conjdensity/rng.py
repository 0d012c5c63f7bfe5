"""Counter-based uniform random streams.

Every Monte Carlo routine in this package draws from a pure function
(seed, counter) -> uniform double.  Sample i of an operation that needs W
draws owns the counter block [i*W, (i+1)*W), so substreams never overlap,
any sample can be regenerated in isolation, and results are bit-identical
for a fixed (seed, samples) no matter how the index range is partitioned
across workers or platforms.

The mixer is SplitMix64 (Stafford variant 13), evaluated lazily at an
arbitrary counter position instead of by state stepping.
"""

from __future__ import annotations

import numpy as np

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)

# 2**-53; (z >> 11) * 2**-53 is uniform on [0, 1) with full mantissa width.
_INV53 = 1.0 / (1 << 53)


def _mix64(z: np.ndarray) -> np.ndarray:
    # uint64 arithmetic wraps by design
    with np.errstate(over="ignore"):
        z = (z ^ (z >> np.uint64(30))) * _MIX1
        z = (z ^ (z >> np.uint64(27))) * _MIX2
        return z ^ (z >> np.uint64(31))


def derive_seed(seed: int, tag: int) -> int:
    """Fold an operation tag into a user seed so distinct operations that
    share one seed still consume unrelated streams."""
    with np.errstate(over="ignore"):
        z = np.uint64((seed ^ tag) & 0xFFFFFFFFFFFFFFFF) * _GOLDEN + _GOLDEN
    return int(_mix64(np.uint64(z)))


def uniform_block(seed: int, start: int, count: int) -> np.ndarray:
    """Uniforms on [0, 1) for counters start..start+count-1 (float64 array)."""
    with np.errstate(over="ignore"):
        counters = np.arange(start, start + count, dtype=np.uint64)
        z = (np.uint64(seed & 0xFFFFFFFFFFFFFFFF) + (counters + np.uint64(1)) * _GOLDEN)
        bits = _mix64(z)
    return (bits >> np.uint64(11)).astype(np.float64) * _INV53


def uniform_at(seed: int, index: int) -> float:
    """Single uniform draw at one counter position."""
    return float(uniform_block(seed, index, 1)[0])
