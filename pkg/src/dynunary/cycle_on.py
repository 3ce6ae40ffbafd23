"""Combined orbits: drift a start string by XORing generator cycles.

Each generator is a seed string walked under its own transform cycle.  At
step j (counting from 1) the current string is XORed with orbit element
j mod k of every generator, where element 0 is the seed and element i is
the i-th transform of it.  The walk stops when the start string recurs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ._backend import kernels
from .bitstring import BitString
from .codec import Direction
from .errors import OrbitBoundError

__all__ = ["Generator", "CycleOnOrbit", "cycle_on", "recover_origin"]


@dataclass(frozen=True)
class Generator:
    seed: BitString
    pref: int = 0
    direction: Direction = Direction.ENCODE

    def __post_init__(self):
        if not 0 <= self.pref < self.seed.length:
            raise ValueError(
                f"parity reference {self.pref} out of range for length "
                f"{self.seed.length}"
            )

    def orbit_values(self) -> list[int]:
        """Generator orbit as values, seed first, successor order."""
        return kernels.orbit_values(
            self.seed.value,
            self.seed.length,
            self.pref,
            self.direction is Direction.ENCODE,
        )


@dataclass(frozen=True)
class CycleOnOrbit:
    """Elements S_1 .. S_M of a closed walk; the last equals the start."""

    start: BitString
    elements: tuple[BitString, ...] = field(repr=False)

    @property
    def length(self) -> int:
        return len(self.elements)

    def values(self) -> list[int]:
        return [s.value for s in self.elements]


def _generator_orbits(n: int, generators) -> list[list[int]]:
    orbits = []
    for g in generators:
        if g.seed.length != n:
            raise ValueError(
                f"generator length {g.seed.length} does not match start length {n}"
            )
        orbits.append(g.orbit_values())
    return orbits


def cycle_on(start: BitString, generators) -> CycleOnOrbit:
    """Walk from ``start`` until it recurs and return the closed orbit.

    Over 2 * lcm of the generator cycle lengths, every generator orbit is
    XORed in a whole even number of times, so the accumulated drift
    cancels and recurrence is guaranteed at or before that bound.  The
    bound is still enforced as a guard.
    """
    n = start.length
    orbits = _generator_orbits(n, generators)
    bound = 2 * math.lcm(*(len(o) for o in orbits))
    cur = start.value
    elements: list[BitString] = []
    for j in range(1, bound + 1):
        term = 0
        for o in orbits:
            term ^= o[j % len(o)]
        cur ^= term
        elements.append(BitString(cur, n))
        if cur == start.value:
            return CycleOnOrbit(start=start, elements=tuple(elements))
    raise OrbitBoundError(f"combined orbit did not recur within {bound} steps")


def recover_origin(element: BitString, index: int, generators) -> BitString:
    """Invert a walk: given S_index, XOR back the terms of steps 1..index.

    ``index`` is the element's 1-based step number; 0 means the element is
    the start itself.
    """
    if index < 0:
        raise ValueError(f"index must be non-negative, got {index}")
    n = element.length
    orbits = _generator_orbits(n, generators)
    acc = element.value
    for j in range(1, index + 1):
        for o in orbits:
            acc ^= o[j % len(o)]
    return BitString(acc, n)
