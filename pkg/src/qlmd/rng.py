"""Counter-based random streams.

Every stochastic quantity in a run is drawn from a stream addressed by a
64-bit key derived from (global seed, step index, estimator tag, term index,
...).  Draw i of a stream is a pure function of (key, i), so results do not
depend on evaluation order or thread count, and the compiled and pure-Python
backends implement the identical integer pipeline (SplitMix64 finalizer,
which passes BigCrush) and therefore produce bit-identical uniforms.
"""

from __future__ import annotations

import math

import numpy as np

MASK64 = 0xFFFFFFFFFFFFFFFF
GAMMA = 0x9E3779B97F4A7C15
_INV_2_53 = 1.0 / 9007199254740992.0

# estimator tags entering key derivation
TAG_ENERGY_FORCE = 1
TAG_PARAMETER_FORCE = 2
TAG_VQE_OPT = 3
TAG_THERMO = 4


def mix64(z: int) -> int:
    """SplitMix64 finalizer."""
    z &= MASK64
    z ^= z >> 30
    z = (z * 0xBF58476D1CE4E5B9) & MASK64
    z ^= z >> 27
    z = (z * 0x94D049BB133111EB) & MASK64
    z ^= z >> 31
    return z


def derive_key(seed: int, *words: int) -> int:
    """Fold integer words into a stream key, one mix round per word."""
    k = mix64(seed & MASK64)
    for w in words:
        k = mix64((k + GAMMA + (w & MASK64)) & MASK64)
    return k


def uniform(key: int, index: int) -> float:
    """Draw `index` of the stream `key`, uniform on [0, 1)."""
    u = mix64((key + (index + 1) * GAMMA) & MASK64)
    return (u >> 11) * _INV_2_53


def uniforms(key: int, n: int, offset: int = 0) -> np.ndarray:
    """Vectorized uniform draws offset..offset+n-1 (bit-identical to uniform())."""
    idx = np.arange(offset + 1, offset + n + 1, dtype=np.uint64)
    z = (np.uint64(key) + idx * np.uint64(GAMMA)).astype(np.uint64)
    z ^= z >> np.uint64(30)
    z = z * np.uint64(0xBF58476D1CE4E5B9)
    z ^= z >> np.uint64(27)
    z = z * np.uint64(0x94D049BB133111EB)
    z ^= z >> np.uint64(31)
    return (z >> np.uint64(11)).astype(np.float64) * _INV_2_53


def standard_normal(key: int, index: int) -> float:
    """Box-Muller; draw `index` consumes uniforms 2*index and 2*index+1."""
    u1 = uniform(key, 2 * index)
    u2 = uniform(key, 2 * index + 1)
    return math.sqrt(-2.0 * math.log(1.0 - u1)) * math.cos(2.0 * math.pi * u2)


def standard_normals(key: int, n: int) -> np.ndarray:
    u = uniforms(key, 2 * n)
    return np.sqrt(-2.0 * np.log(1.0 - u[0::2])) * np.cos(2.0 * np.pi * u[1::2])
