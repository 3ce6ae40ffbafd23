"""Orbits of the transform, full partitions, spectra, and sum identities.

Repeated encoding (or decoding) at a fixed parity reference permutes the
2**n strings of length n, so every string sits on exactly one cycle.  A
cycle is presented canonically with its smallest element last, and a
partition lists cycles by ascending smallest element.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from ._backend import kernels
from .bitstring import BitString
from .codec import Direction
from .errors import BudgetExceededError

__all__ = [
    "DEFAULT_BUDGET",
    "Cycle",
    "SpectrumRecord",
    "SpectrumReport",
    "SumReport",
    "cycle_of",
    "cycle_sum",
    "cycle_xor",
    "partition",
    "predicted_spectrum",
    "verify_spectrum",
    "sum_identity_check",
    "format_cycle",
    "format_partition",
]

DEFAULT_BUDGET = 24

# partition enumeration walks a dense visited table, which the compiled
# kernel sizes for machine words
_ENUM_MAX = 63


@dataclass(frozen=True)
class Cycle:
    """One orbit in successor order: each element transforms into the next,
    and the last wraps around to the first.  Canonical rotation puts the
    smallest element last."""

    elements: tuple[BitString, ...]

    @classmethod
    def from_values(cls, values: Sequence[int], length: int) -> "Cycle":
        """Canonicalize a successor-ordered value list into a Cycle."""
        i = min(range(len(values)), key=values.__getitem__)
        rotated = list(values[i + 1 :]) + list(values[: i + 1])
        return cls(tuple(BitString(v, length) for v in rotated))

    @property
    def k(self) -> int:
        return len(self.elements)

    @property
    def length(self) -> int:
        return self.elements[0].length

    @property
    def min_value(self) -> int:
        return self.elements[-1].value

    def values(self) -> list[int]:
        return [s.value for s in self.elements]

    def rotated_to_last(self, s: BitString) -> list[BitString]:
        """The same cycle re-anchored so ``s`` is the final element."""
        i = self.elements.index(s)
        return list(self.elements[i + 1 :]) + list(self.elements[: i + 1])

    def __iter__(self) -> Iterator[BitString]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, s: object) -> bool:
        return s in self.elements


def cycle_of(
    s: BitString, pref: int = 0, direction: Direction = Direction.ENCODE
) -> Cycle:
    """The full orbit of ``s`` under repeated transforms."""
    if not 0 <= pref < s.length:
        raise ValueError(f"parity reference {pref} out of range for length {s.length}")
    values = kernels.orbit_values(
        s.value, s.length, pref, direction is Direction.ENCODE
    )
    return Cycle.from_values(values, s.length)


def partition(
    n: int,
    pref: int = 0,
    direction: Direction = Direction.ENCODE,
    budget: int = DEFAULT_BUDGET,
) -> list[Cycle]:
    """Every cycle over the 2**n strings, ascending by smallest element."""
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    if not 0 <= pref < n:
        raise ValueError(f"parity reference {pref} out of range for length {n}")
    if n > budget:
        raise BudgetExceededError(
            f"partition over length {n} exceeds the budget of {budget} "
            f"(2**{n} strings); raise the budget to proceed"
        )
    if n > _ENUM_MAX:
        raise BudgetExceededError(
            f"partition enumeration supports lengths up to {_ENUM_MAX}"
        )
    raw = kernels.partition_values(n, pref, direction is Direction.ENCODE)
    return [Cycle.from_values(vals, n) for vals in raw]


def cycle_sum(cycle: Cycle) -> int:
    """Sum of the element values on the cycle."""
    return sum(cycle.values())


def cycle_xor(cycle: Cycle) -> BitString:
    """XOR of all elements on the cycle."""
    acc = 0
    for v in cycle.values():
        acc ^= v
    return BitString(acc, cycle.length)


@dataclass(frozen=True)
class SpectrumRecord:
    """Predicted cycle structure: ``count`` cycles of ``k`` elements."""

    n: int
    pref: int
    k: int
    count: int


def predicted_spectrum(n: int, pref: int) -> SpectrumRecord:
    """Cycle length and count for length ``n`` at the given reference.

    The cycle length is the smallest power of two at or above n, except
    that a power-of-two length at reference 0 doubles it, and length 1 is
    fixed-point territory.
    """
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    if not 0 <= pref < n:
        raise ValueError(f"parity reference {pref} out of range for length {n}")
    if n == 1:
        k = 1
    else:
        k = 1 << (n - 1).bit_length()
        if k == n and pref == 0:
            k = 2 * n
    return SpectrumRecord(n=n, pref=pref, k=k, count=(1 << n) // k)


@dataclass(frozen=True)
class SpectrumReport:
    n: int
    pref: int
    direction: Direction
    predicted: SpectrumRecord
    observed_sizes: tuple[int, ...]
    cycle_count: int
    ok: bool
    findings: tuple[str, ...]
    notes: tuple[str, ...]


def verify_spectrum(
    n: int,
    pref: int = 0,
    direction: Direction = Direction.ENCODE,
    budget: int = DEFAULT_BUDGET,
) -> SpectrumReport:
    """Enumerate the partition and compare it against the prediction.

    Findings list every discrepancy; notes flag cases worth a caller's
    attention even when the comparison passes.
    """
    predicted = predicted_spectrum(n, pref)
    cycles = partition(n, pref, direction, budget)
    sizes = tuple(sorted({c.k for c in cycles}))
    findings: list[str] = []
    total = sum(c.k for c in cycles)
    if total != 1 << n:
        findings.append(f"cycles cover {total} strings, expected {1 << n}")
    seen = set()
    for c in cycles:
        seen.update(c.values())
    if len(seen) != 1 << n:
        findings.append(f"cycles contain {len(seen)} distinct strings, expected {1 << n}")
    if sizes != (predicted.k,):
        findings.append(
            f"observed cycle lengths {list(sizes)}, predicted uniform {predicted.k}"
        )
    if len(cycles) != predicted.count:
        findings.append(
            f"observed {len(cycles)} cycles, predicted {predicted.count}"
        )
    notes: list[str] = []
    if n > 1 and n & (n - 1) == 0 and pref > 0:
        notes.append(
            f"length {n} is a power of two: the doubled cycle length {2 * n} "
            f"applies only at reference 0; at reference {pref} the length is "
            f"{predicted.k}"
        )
    return SpectrumReport(
        n=n,
        pref=pref,
        direction=direction,
        predicted=predicted,
        observed_sizes=sizes,
        cycle_count=len(cycles),
        ok=not findings,
        findings=tuple(findings),
        notes=tuple(notes),
    )


@dataclass(frozen=True)
class SumReport:
    """Cycle-sum census for one (n, pref) partition.

    ``sums`` maps each distinct cycle sum to how many cycles carry it.
    ``expected`` is the identity value when (n, pref) falls in a family
    with a known constant sum, else None; ``ok`` records whether every
    cycle met it (None when there is no expectation).
    """

    n: int
    pref: int
    sums: dict[int, int]
    expected: int | None
    ok: bool | None


def _expected_sum(n: int, pref: int) -> int | None:
    if pref == 0 and n in (2, 4, 8, 16):
        return ((1 << n) - 1) * n
    if pref == 1 and n in (3, 5, 9, 17):
        return ((1 << n) - 1) * (n - 1)
    return None


def sum_identity_check(
    n: int, pref: int = 0, budget: int = DEFAULT_BUDGET
) -> SumReport:
    """Tally cycle sums for the encode partition of (n, pref)."""
    cycles = partition(n, pref, Direction.ENCODE, budget)
    sums: dict[int, int] = {}
    for c in cycles:
        s = cycle_sum(c)
        sums[s] = sums.get(s, 0) + 1
    expected = _expected_sum(n, pref)
    ok = None if expected is None else set(sums) == {expected}
    return SumReport(n=n, pref=pref, sums=dict(sorted(sums.items())), expected=expected, ok=ok)


def format_cycle(cycle: Cycle) -> str:
    return "(" + " ".join(str(v) for v in cycle.values()) + ")"


def format_partition(cycles: Sequence[Cycle]) -> str:
    return "\n".join(format_cycle(c) for c in cycles)
