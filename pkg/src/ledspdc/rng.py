# ---------------------------------------------------------------------------
# Counter-based random number generation with per-record substreams.
#
# The core generator is SplitMix64 (Steele, Lea & Flood, "Fast Splittable
# Pseudorandom Number Generators", OOPSLA 2014): the state advances by a
# fixed odd constant (the 64-bit golden ratio) and each output is a strong
# avalanche hash of the state.  Because outputs depend only on
# seed + n * GAMMA, the sequence is effectively counter-mode, which is what
# makes substreams cheap: hashing (master seed, index...) yields a new,
# statistically independent stream.
#
# Substreams are derived per (setting index, repeat index) so simulated
# records are bit-identical regardless of iteration order or parallel
# schedule.
#
# Poisson sampling:
#   lambda < 30 : inversion by sequential search (exact).
#   lambda >= 30: Hormann's PTRS transformed rejection (exact; W. Hormann,
#                 "The transformed rejection method for generating Poisson
#                 random variables", Insurance Math. Econom. 12, 1993).
# ---------------------------------------------------------------------------

from __future__ import annotations

import math

from .errors import DomainError

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_POISSON_INVERSION_CUTOFF = 30.0


def _mix64(z: int) -> int:
    """SplitMix64 finalizer: avalanche a 64-bit word."""
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Minimal SplitMix64 stream; uniform doubles use the top 53 bits."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        return _mix64(self._state)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (2.0**-53)


def substream(seed: int, *indices: int) -> SplitMix64:
    """Derive an independent stream from a master seed and integer indices.

    Each index is folded into the state through the SplitMix64 finalizer, so
    streams for distinct (seed, indices) tuples are decorrelated.
    """
    state = _mix64(seed & _MASK64)
    for idx in indices:
        state = _mix64((state + (idx + 1) * _GAMMA) & _MASK64)
    return SplitMix64(state)


def poisson(lam: float, gen: SplitMix64) -> int:
    """Draw one Poisson(lam) variate from ``gen``.

    Exact for all lam >= 0 (no normal approximation; the large-lam branch is
    an exact rejection method).
    """
    if lam < 0.0 or not math.isfinite(lam):
        raise DomainError(f"poisson: lambda must be finite and >= 0, got {lam!r}")
    if lam == 0.0:
        return 0
    if lam < _POISSON_INVERSION_CUTOFF:
        return _poisson_inversion(lam, gen)
    return _poisson_ptrs(lam, gen)


def _poisson_inversion(lam: float, gen: SplitMix64) -> int:
    # Sequential search through the CDF; safe from underflow for lam < 30.
    p = math.exp(-lam)
    cdf = p
    u = gen.random()
    k = 0
    while u > cdf:
        k += 1
        p *= lam / k
        cdf += p
        if p < 1e-300 and k > lam:  # u in the far tail round-off region
            break
    return k


def _poisson_ptrs(lam: float, gen: SplitMix64) -> int:
    # Hormann 1993, algorithm PTRS, valid for lam >= 10.
    b = 0.931 + 2.53 * math.sqrt(lam)
    a = -0.059 + 0.02483 * b
    inv_alpha = 1.1239 + 1.1328 / (b - 3.4)
    v_r = 0.9277 - 3.6224 / (b - 2.0)
    log_lam = math.log(lam)
    while True:
        u = gen.random() - 0.5
        v = gen.random()
        us = 0.5 - abs(u)
        k = math.floor((2.0 * a / us + b) * u + lam + 0.43)
        if us >= 0.07 and v <= v_r:
            return int(k)
        if k < 0 or (us < 0.013 and v > us):
            continue
        if math.log(v * inv_alpha / (a / (us * us) + b)) <= k * log_lam - lam - math.lgamma(k + 1.0):
            return int(k)
