"""Bitmask encoding of sign vectors.

A sign vector on m elements is a pair of masks (plus, minus).  Covector sets
become numpy arrays of masks.  For m <= 31 the pair packs into one int64 key
``plus << m | minus`` and membership is a sorted search; larger ground sets
use object arrays of Python ints and a hash set.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

MAX_FAST = 31


def encode(x: Sequence[int]) -> tuple[int, int]:
    p = m = 0
    for i, s in enumerate(x):
        if s > 0:
            p |= 1 << i
        elif s < 0:
            m |= 1 << i
    return p, m


def decode(p: int, m: int, size: int) -> tuple[int, ...]:
    p, m = int(p), int(m)
    return tuple(1 if p >> i & 1 else -1 if m >> i & 1 else 0 for i in range(size))


def popcount(a: np.ndarray) -> np.ndarray:
    if a.dtype == object:
        return np.array([int(x).bit_count() for x in a], dtype=np.int64)
    a = a.astype(np.uint64)
    c = np.zeros(a.shape, dtype=np.int64)
    while True:
        nz = a != 0
        if not nz.any():
            return c
        c += nz
        a &= a - np.uint64(1)


def bits(mask: int) -> list[int]:
    mask = int(mask)
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(indices: Iterable[int]) -> int:
    out = 0
    for i in indices:
        out |= 1 << i
    return out


class Packed:
    """Covector set as arrays of plus/minus masks, in the order given."""

    def __init__(self, vectors: Sequence[Sequence[int]], size: int):
        self.size = size
        self.fast = size <= MAX_FAST
        dtype = np.int64 if self.fast else object
        enc = [encode(v) for v in vectors]
        self.P = np.array([e[0] for e in enc], dtype=dtype)
        self.M = np.array([e[1] for e in enc], dtype=dtype)
        self.full = (1 << size) - 1
        if self.fast:
            self._sorted = np.sort(self.key(self.P, self.M))
        else:
            self._set = set(zip(self.P.tolist(), self.M.tolist()))

    def __len__(self) -> int:
        return len(self.P)

    def key(self, P, M):
        return (P << self.size) | M

    def contains(self, P, M) -> np.ndarray:
        if not self.fast:
            return np.array([(p, m) in self._set for p, m in zip(P, M)], dtype=bool)
        if len(self._sorted) == 0:
            return np.zeros(np.shape(P), dtype=bool)
        k = self.key(P, M)
        idx = np.minimum(np.searchsorted(self._sorted, k), len(self._sorted) - 1)
        return self._sorted[idx] == k

    def contains_one(self, p: int, m: int) -> bool:
        return bool(self.contains(np.array([p], dtype=self.P.dtype),
                                  np.array([m], dtype=self.P.dtype))[0])

    @property
    def support(self):
        return self.P | self.M


def compose(px, mx, P, M):
    z = ~(px | mx)
    return px | (P & z), mx | (M & z)


def leq(px, mx, P, M):
    """Boolean array: (px, mx) <= (P, M) componentwise with 0 lowest."""
    return ((px & ~P) == 0) & ((mx & ~M) == 0)
