"""
Adaptive Range Coder
====================
Carry-less, byte-oriented range coder (Subbotin style) with 32-bit state.

Renormalization emits the top byte of ``low`` whenever ``low`` and
``low + range`` agree on it; when they don't but the range has dropped
below 2**16, the range is cut down to the next 2**16 boundary instead of
propagating a carry. Totals must not exceed 2**16.
"""

from typing import Iterable, List, Sequence, Tuple

from gradpix.codec.context import ContextModel, FrequencyTable
from gradpix.core.exceptions import CoderDesyncError

TOP = 1 << 24
BOT = 1 << 16
MASK = (1 << 32) - 1


class RangeEncoder:
    def __init__(self):
        self.low = 0
        self.range = MASK
        self._out = bytearray()

    def encode(self, cum_freq: int, freq: int, total: int) -> None:
        r = self.range // total
        low = self.low + cum_freq * r
        rng = r * freq
        out = self._out
        while True:
            if (low ^ (low + rng)) < TOP:
                pass
            elif rng < BOT:
                rng = -low & (BOT - 1)
            else:
                break
            out.append(low >> 24)
            low = (low << 8) & MASK
            rng = (rng << 8) & MASK
        self.low = low
        self.range = rng

    def encode_symbol(self, table: FrequencyTable, symbol: int) -> None:
        cum_freq, freq = table.interval(symbol)
        self.encode(cum_freq, freq, table.total)
        table.update(symbol)

    def finish(self) -> bytes:
        low = self.low
        for _ in range(4):
            self._out.append(low >> 24)
            low = (low << 8) & MASK
        self.low = low
        return bytes(self._out)


class RangeDecoder:
    def __init__(self, data: bytes):
        self._data = data
        self._pos = 0
        self.low = 0
        self.range = MASK
        self.code = 0
        for _ in range(4):
            self.code = (self.code << 8) | self._read_byte()

    def _read_byte(self) -> int:
        if self._pos >= len(self._data):
            raise CoderDesyncError("payload exhausted before the last symbol")
        byte = self._data[self._pos]
        self._pos += 1
        return byte

    def decode_target(self, total: int) -> int:
        self.range //= total
        target = (self.code - self.low) // self.range
        if not 0 <= target < total:
            raise CoderDesyncError(f"cumulative frequency {target} outside [0, {total})")
        return target

    def consume(self, cum_freq: int, freq: int) -> None:
        low = self.low + cum_freq * self.range
        rng = self.range * freq
        code = self.code
        while True:
            if (low ^ (low + rng)) < TOP:
                pass
            elif rng < BOT:
                rng = -low & (BOT - 1)
            else:
                break
            code = ((code << 8) | self._read_byte()) & MASK
            low = (low << 8) & MASK
            rng = (rng << 8) & MASK
        self.low = low
        self.range = rng
        self.code = code

    def decode_symbol(self, table: FrequencyTable) -> int:
        target = self.decode_target(table.total)
        symbol, cum_freq, freq = table.locate(target)
        self.consume(cum_freq, freq)
        table.update(symbol)
        return symbol

    @property
    def remaining(self) -> int:
        return len(self._data) - self._pos

    def finish(self) -> None:
        """A well-formed stream is consumed exactly."""
        if self.remaining:
            raise CoderDesyncError(f"{self.remaining} unread byte(s) after the last symbol")


def range_encode(pairs: Iterable[Tuple[int, int]], model: ContextModel) -> bytes:
    """Code (context, symbol) pairs; ``model`` evolves as symbols are coded."""
    encoder = RangeEncoder()
    for context, symbol in pairs:
        encoder.encode_symbol(model[context], symbol)
    return encoder.finish()


def range_decode(data: bytes, contexts: Sequence[int], model: ContextModel) -> List[int]:
    """Inverse of range_encode given the same context sequence and a fresh model."""
    decoder = RangeDecoder(data)
    symbols = [decoder.decode_symbol(model[context]) for context in contexts]
    decoder.finish()
    return symbols
