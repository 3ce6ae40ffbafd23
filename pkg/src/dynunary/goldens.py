"""Embedded reference data: the full small-length cycle tables and one
combined-orbit walk, plus parsing and comparison helpers.

The packaged table format is line oriented: a section header
``[n=<N> p=<P> dir=<encode|decode>]`` followed by one cycle per line as
space-separated decimal values, cycles in successor order with the
smallest element last, sections separated by blank lines.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Sequence, Union

from .codec import Direction
from .cycles import Cycle
from .errors import GoldenParseError

__all__ = [
    "GoldenCycleSet",
    "GoldenOrbit",
    "MatchReport",
    "CYCLE_ON_REFERENCE",
    "parse_goldens",
    "format_goldens",
    "load_reference_cycles",
    "decode_counterpart",
    "compare",
]


@dataclass(frozen=True)
class GoldenCycleSet:
    n: int
    pref: int
    direction: Direction
    cycles: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class MatchReport:
    ok: bool
    detail: str | None = None


@dataclass(frozen=True)
class GoldenOrbit:
    """A recorded combined-orbit walk: elements S_1.. with the start last."""

    n: int
    pref: int
    start: int
    generator_seeds: tuple[int, ...]
    elements: tuple[int, ...]


CYCLE_ON_REFERENCE = GoldenOrbit(
    n=16,
    pref=0,
    start=2014,
    generator_seeds=(1, 99, 6408),
    elements=(
        28158, 19761, 64921, 60058, 30232, 23332, 8057, 63754,
        27712, 19536, 951, 60323, 34882, 23123, 57674, 2015,
        37376, 19760, 615, 60059, 35302, 23333, 57479, 63755,
        37822, 19537, 64585, 60322, 30652, 23122, 7860, 2014,
    ),
)

_HEADER = re.compile(r"\[n=(\d+) p=(\d+) dir=(encode|decode)\]$")


def parse_goldens(text: str) -> list[GoldenCycleSet]:
    """Parse golden cycle sections, validating structure as it goes.

    Raises GoldenParseError with a line number for malformed content, and
    checks per section that the cycles cover all 2**n values exactly once.
    """
    sets: list[GoldenCycleSet] = []
    header: tuple[int, int, Direction] | None = None
    cycles: list[tuple[int, ...]] = []
    header_line = 0

    def flush():
        if header is None:
            return
        n, pref, direction = header
        total = sum(len(c) for c in cycles)
        distinct = {v for c in cycles for v in c}
        if total != 1 << n or len(distinct) != 1 << n:
            raise GoldenParseError(
                f"section at line {header_line}: cycles cover {len(distinct)} "
                f"distinct values in {total} slots, expected {1 << n}"
            )
        sets.append(GoldenCycleSet(n, pref, direction, tuple(cycles)))

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        m = _HEADER.match(line)
        if m:
            flush()
            n, pref = int(m.group(1)), int(m.group(2))
            if not 0 <= pref < n:
                raise GoldenParseError(
                    f"line {lineno}: parity reference {pref} out of range for length {n}"
                )
            header = (n, pref, Direction(m.group(3)))
            header_line = lineno
            cycles = []
            continue
        if header is None:
            raise GoldenParseError(f"line {lineno}: cycle data before any section header")
        try:
            values = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise GoldenParseError(f"line {lineno}: non-integer token in cycle") from None
        limit = 1 << header[0]
        for v in values:
            if not 0 <= v < limit:
                raise GoldenParseError(
                    f"line {lineno}: value {v} out of range for length {header[0]}"
                )
        cycles.append(values)
    flush()
    return sets


def format_goldens(sets: Iterable[GoldenCycleSet]) -> str:
    """Serialize golden sets back to the packaged file format."""
    blocks = []
    for gs in sets:
        lines = [f"[n={gs.n} p={gs.pref} dir={gs.direction}]"]
        lines.extend(" ".join(str(v) for v in cyc) for cyc in gs.cycles)
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def load_reference_cycles() -> dict[tuple[int, int], GoldenCycleSet]:
    """Packaged encode-direction cycle tables keyed by (n, pref)."""
    text = resources.files("dynunary").joinpath("data/cycles_n1_8.txt").read_text()
    out: dict[tuple[int, int], GoldenCycleSet] = {}
    for gs in parse_goldens(text):
        if gs.direction is not Direction.ENCODE:
            raise GoldenParseError(
                f"packaged table holds encode cycles, found dir={gs.direction}"
            )
        key = (gs.n, gs.pref)
        if key in out:
            raise GoldenParseError(f"duplicate section for n={gs.n} p={gs.pref}")
        out[key] = gs
    return out


def _canonical(values: Sequence[int]) -> tuple[int, ...]:
    vals = list(values)
    i = vals.index(min(vals))
    return tuple(vals[i + 1 :] + vals[: i + 1])


def decode_counterpart(gs: GoldenCycleSet) -> GoldenCycleSet:
    """The same partition under the inverse transform.

    Inverting the permutation reverses each cycle's successor order; the
    reversed cycles are re-canonicalized with the smallest element last.
    """
    cycles = [_canonical(tuple(reversed(cyc))) for cyc in gs.cycles]
    cycles.sort(key=min)
    return GoldenCycleSet(gs.n, gs.pref, gs.direction.inverse, tuple(cycles))


def compare(
    computed: Sequence[Union[Cycle, Sequence[int]]], golden: GoldenCycleSet
) -> MatchReport:
    """Rotation-insensitive comparison of a computed partition to a golden one."""
    comp = sorted(
        _canonical(c.values() if isinstance(c, Cycle) else [int(v) for v in c])
        for c in computed
    )
    gold = sorted(_canonical(cyc) for cyc in golden.cycles)
    if comp == gold:
        return MatchReport(ok=True)
    for a, b in zip(comp, gold):
        if a != b:
            return MatchReport(
                ok=False,
                detail=f"cycle mismatch: computed {list(a)} vs golden {list(b)}",
            )
    return MatchReport(
        ok=False,
        detail=f"cycle count mismatch: computed {len(comp)} vs golden {len(gold)}",
    )
