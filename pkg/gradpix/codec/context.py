"""
Context Modeling
================
Each pixel is assigned to one of nine contexts by bucketing its local
gradient activity, and every context owns adaptive symbol statistics.

    g = |W - NW| + |NW - N| + |N - NE|

    g:        0  1  2  3-4  5-8  9-16  17-32  33-64  >64
    context:  0  1  2   3    4     5      6      7     8
"""

from bisect import bisect_left
from typing import List, Tuple

import numpy as np

from gradpix.schemas.predictor import CausalNeighborhood

CONTEXT_THRESHOLDS = (0, 1, 2, 4, 8, 16, 32, 64)
NUM_CONTEXTS = len(CONTEXT_THRESHOLDS) + 1

ALPHABET_SIZE = 256
COUNT_INCREMENT = 32
RESCALE_CEILING = 1 << 16


def context_of(n: CausalNeighborhood) -> int:
    g = abs(n.W - n.NW) + abs(n.NW - n.N) + abs(n.N - n.NE)
    return bisect_left(CONTEXT_THRESHOLDS, g)


def context_plane(n: CausalNeighborhood) -> np.ndarray:
    """context_of for a CausalNeighborhood of arrays."""
    g = np.abs(n.W - n.NW) + np.abs(n.NW - n.N) + np.abs(n.N - n.NE)
    return np.searchsorted(np.asarray(CONTEXT_THRESHOLDS), g, side="left")


class FrequencyTable:
    """
    Adaptive symbol counts for one context.

    Every count starts at 1. After coding symbol s its count grows by 32;
    when the total passes 2**16 all counts are halved, rounding up.

    Cumulative counts live in a Fenwick tree next to ``counts``, so
    ``interval``, ``locate`` and ``update`` are O(log n).
    """
    __slots__ = ("counts", "total", "_tree", "_top")

    def __init__(self, size: int = ALPHABET_SIZE):
        self.counts: List[int] = [1] * size
        self.total = size
        self._top = 1 << (size.bit_length() - 1)
        self._rebuild()

    def _rebuild(self) -> None:
        size = len(self.counts)
        tree = [0] + self.counts
        for i in range(1, size + 1):
            parent = i + (i & -i)
            if parent <= size:
                tree[parent] += tree[i]
        self._tree = tree

    def interval(self, symbol: int) -> Tuple[int, int]:
        """(cumulative count below symbol, count of symbol)"""
        tree = self._tree
        low = 0
        i = symbol
        while i:
            low += tree[i]
            i &= i - 1
        return low, self.counts[symbol]

    def locate(self, target: int) -> Tuple[int, int, int]:
        """Symbol whose interval contains ``target``, with its (low, freq)."""
        tree = self._tree
        size = len(self.counts)
        pos = 0
        rest = target
        step = self._top
        while step:
            nxt = pos + step
            if nxt <= size and tree[nxt] <= rest:
                pos = nxt
                rest -= tree[nxt]
            step >>= 1
        return pos, target - rest, self.counts[pos]

    def update(self, symbol: int) -> None:
        self.counts[symbol] += COUNT_INCREMENT
        self.total += COUNT_INCREMENT
        if self.total > RESCALE_CEILING:
            self.counts = [(c + 1) >> 1 for c in self.counts]
            self.total = sum(self.counts)
            self._rebuild()
            return
        tree = self._tree
        size = len(self.counts)
        i = symbol + 1
        while i <= size:
            tree[i] += COUNT_INCREMENT
            i += i & -i


class ContextModel:
    """
    A bank of frequency tables, one per coding context.

    8-bit planes use NUM_CONTEXTS tables. 16-bit planes split each folded
    code into a high and a low byte and use 3 * NUM_CONTEXTS tables: high
    bytes in [0, 9), low bytes in [9, 18) when the high byte is 0 and in
    [18, 27) otherwise. An alphabet of 65536 symbols at count >= 1 could
    never stay under the 2**16 ceiling.
    """

    def __init__(self, num_tables: int = NUM_CONTEXTS, alphabet_size: int = ALPHABET_SIZE):
        self.tables = [FrequencyTable(alphabet_size) for _ in range(num_tables)]

    @classmethod
    def for_bit_depth(cls, bit_depth: int) -> "ContextModel":
        return cls(NUM_CONTEXTS if bit_depth == 8 else 3 * NUM_CONTEXTS)

    def __getitem__(self, index: int) -> FrequencyTable:
        return self.tables[index]

    def __len__(self) -> int:
        return len(self.tables)

    def snapshot(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(t.counts) for t in self.tables)
