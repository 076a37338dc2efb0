"""Portable deterministic randomness.

All chance behaviour in the engine flows through the two primitives here so
that any implementation of the same contract reproduces identical picks:

* ``fnv1a64(text)``: FNV-1a over the UTF-8 bytes, offset basis
  14695981039346656037, prime 1099511628211, arithmetic mod 2**64.
* ``mix64(z)``: the SplitMix64 finalizer,
  z += 0x9E3779B97F4A7C15; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9;
  z = (z ^ z>>27) * 0x94D049BB133111EB; return z ^ z>>31 (all mod 2**64).

A chance draw for ``(seed, keyword, draw_index)`` uses
``mix64(seed ^ fnv1a64(keyword) ^ draw_index)`` reduced modulo the number of
candidates, candidates sorted lexicographically.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1

_FNV_OFFSET = 14695981039346656037
_FNV_PRIME = 1099511628211


def fnv1a64(text: str) -> int:
    """64-bit FNV-1a hash of the UTF-8 encoding of *text*."""
    h = _FNV_OFFSET
    for byte in text.encode("utf-8"):
        h = ((h ^ byte) * _FNV_PRIME) & _MASK
    return h


def mix64(z: int) -> int:
    """SplitMix64 finalizer; bijective on 64-bit integers."""
    z = (z + 0x9E3779B97F4A7C15) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return (z ^ (z >> 31)) & _MASK


def derive_seed(seed: int, salt: int) -> int:
    """Per-event / per-node seed: mix of the base seed and an integer salt."""
    return mix64((seed ^ salt) & _MASK)


def chance_key(seed: int, keyword: str, draw_index: int) -> int:
    """The 64-bit value governing one chance draw."""
    return mix64((seed ^ fnv1a64(keyword) ^ draw_index) & _MASK)
