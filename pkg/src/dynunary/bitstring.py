"""Fixed-length bit strings and run/unary-code parsing.

A string of length n is written b_{n-1} .. b_1 b_0 left to right, so the
leftmost character is the most significant bit and b_0 is the rightmost.
The integer value is sum(b_i * 2**i).  Bytes map most significant byte
first, most significant bit first within each byte.
"""

from __future__ import annotations

from itertools import groupby
from typing import Iterator

from .errors import MalformedUnaryError

__all__ = ["BitString", "text_runs", "unary_code_lengths"]


def text_runs(text: str) -> list[tuple[int, int]]:
    """Return (bit, length) for each maximal same-bit run, leftmost first."""
    return [(int(ch), sum(1 for _ in grp)) for ch, grp in groupby(text)]


def unary_code_lengths(text: str, terminus: int) -> list[int]:
    """Split ``text`` into unary codes for the given terminus bit.

    A code is one terminus bit followed by zero or more non-terminus bits,
    read leftmost first; its length is the total bit count.  The string must
    therefore open on a terminus bit, otherwise MalformedUnaryError is
    raised.
    """
    if terminus not in (0, 1):
        raise ValueError(f"terminus must be 0 or 1, got {terminus!r}")
    runs = text_runs(text)
    if not runs:
        raise MalformedUnaryError("empty string has no unary codes")
    if runs[0][0] != terminus:
        raise MalformedUnaryError(
            f"string starts with {runs[0][0]}, expected terminus {terminus}"
        )
    codes: list[int] = []
    i = 0
    while i < len(runs):
        t_count = runs[i][1]
        if i + 1 < len(runs):
            # a run of k terminus bits closes k-1 empty codes and opens one
            # code continued by the following non-terminus run
            codes.extend([1] * (t_count - 1))
            codes.append(1 + runs[i + 1][1])
            i += 2
        else:
            codes.extend([1] * t_count)
            i += 1
    return codes


class BitString:
    """Immutable bit string of fixed positive length."""

    __slots__ = ("_value", "_length")

    def __init__(self, value: int, length: int):
        if length < 1:
            raise ValueError(f"length must be positive, got {length}")
        if not 0 <= value < (1 << length):
            raise ValueError(f"value {value} out of range for length {length}")
        self._value = value
        self._length = length

    @classmethod
    def from_text(cls, text: str) -> "BitString":
        """Parse a string of '0'/'1' characters, leftmost bit most significant."""
        if not text:
            raise ValueError("empty bit string")
        if set(text) - {"0", "1"}:
            raise ValueError(f"invalid bit characters in {text!r}")
        return cls(int(text, 2), len(text))

    @classmethod
    def from_bytes(cls, data: bytes) -> "BitString":
        """Wrap a byte sequence; its length becomes 8 * len(data) bits."""
        if not data:
            raise ValueError("empty byte input")
        return cls(int.from_bytes(data, "big"), 8 * len(data))

    @property
    def value(self) -> int:
        return self._value

    @property
    def length(self) -> int:
        return self._length

    def to_text(self) -> str:
        return format(self._value, f"0{self._length}b")

    def to_bytes(self) -> bytes:
        if self._length % 8:
            raise ValueError(f"length {self._length} is not a whole number of bytes")
        return self._value.to_bytes(self._length // 8, "big")

    def bit_at(self, i: int) -> int:
        """Bit b_i, with b_0 the rightmost (least significant) position."""
        if not 0 <= i < self._length:
            raise IndexError(f"bit index {i} out of range for length {self._length}")
        return (self._value >> i) & 1

    def runs(self) -> list[tuple[int, int]]:
        """Maximal same-bit runs as (bit, length), from b_{n-1} toward b_0."""
        return text_runs(self.to_text())

    def parse_unary_codes(self, terminus: int) -> list[int]:
        """Unary code lengths under ``terminus``, leftmost code first."""
        return unary_code_lengths(self.to_text(), terminus)

    def complement(self) -> "BitString":
        return BitString(self._value ^ ((1 << self._length) - 1), self._length)

    def __xor__(self, other: "BitString") -> "BitString":
        if not isinstance(other, BitString):
            return NotImplemented
        if other._length != self._length:
            raise ValueError(
                f"length mismatch: {self._length} vs {other._length}"
            )
        return BitString(self._value ^ other._value, self._length)

    def __len__(self) -> int:
        return self._length

    def __iter__(self) -> Iterator[int]:
        """Bits from b_{n-1} down to b_0, matching the textual order."""
        for i in range(self._length - 1, -1, -1):
            yield (self._value >> i) & 1

    def __int__(self) -> int:
        return self._value

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitString):
            return NotImplemented
        return self._value == other._value and self._length == other._length

    def __hash__(self) -> int:
        return hash((self._value, self._length))

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"BitString({self._value}, {self._length})"
