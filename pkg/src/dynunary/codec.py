"""The core per-length transform pair.

encode rewrites each run of the input as a terminus-first unary code of the
same length, where the terminus is the input's bit at the parity reference
position; decode inverts it for the same reference position.  Both are
bijections on the strings of each fixed length.
"""

from __future__ import annotations

import enum

from ._backend import kernels
from .bitstring import BitString

__all__ = ["Direction", "encode", "decode", "transform", "iterate"]


class Direction(enum.Enum):
    ENCODE = "encode"
    DECODE = "decode"

    @property
    def inverse(self) -> "Direction":
        return Direction.DECODE if self is Direction.ENCODE else Direction.ENCODE

    def __str__(self) -> str:
        return self.value


def _check_pref(s: BitString, pref: int) -> None:
    if not 0 <= pref < s.length:
        raise ValueError(
            f"parity reference {pref} out of range for length {s.length}"
        )


def encode(s: BitString, pref: int = 0) -> BitString:
    _check_pref(s, pref)
    return BitString(kernels.encode_value(s.value, s.length, pref), s.length)


def decode(s: BitString, pref: int = 0) -> BitString:
    _check_pref(s, pref)
    return BitString(kernels.decode_value(s.value, s.length, pref), s.length)


def transform(s: BitString, pref: int, direction: Direction) -> BitString:
    return encode(s, pref) if direction is Direction.ENCODE else decode(s, pref)


def iterate(s: BitString, pref: int, direction: Direction, steps: int) -> BitString:
    """Apply the transform ``steps`` times (0 returns the input)."""
    _check_pref(s, pref)
    if steps < 0:
        raise ValueError(f"steps must be non-negative, got {steps}")
    value = kernels.iterate_value(
        s.value, s.length, pref, direction is Direction.ENCODE, steps
    )
    return BitString(value, s.length)
