"""Alternate codecs: the sample-and-drop iterator and construct/deconstruct.

Both build on fixed-terminus unary codes: every run of length L becomes one
terminus bit followed by L-1 opposite bits, so re-encoding preserves length
and the first bit of the result is always the terminus.
"""

from __future__ import annotations

from .bitstring import BitString, text_runs, unary_code_lengths
from .cycles import DEFAULT_BUDGET
from .errors import BudgetExceededError, MalformedConstructError

__all__ = [
    "dropt_encode",
    "dropt_decode",
    "dropt_partition",
    "construct",
    "deconstruct",
]


def _check_bit(name: str, bit: int) -> None:
    if bit not in (0, 1):
        raise ValueError(f"{name} must be 0 or 1, got {bit!r}")


def _fixed_unary(lengths: list[int], terminus: int) -> str:
    t = str(terminus)
    o = str(1 - terminus)
    return "".join(t + o * (length - 1) for length in lengths)


def _rebuild(lengths: list[int], anchor: int) -> str:
    # runs alternate, so the anchor bit at b_0 and the run count pin the
    # first run's bit
    bit = anchor ^ ((len(lengths) - 1) & 1)
    out = []
    for length in lengths:
        out.append(str(bit) * length)
        bit ^= 1
    return "".join(out)


def dropt_encode(s: BitString, terminus: int) -> BitString:
    """Iterated sample-and-drop under a fixed terminus.

    Each stage samples b_0 of the working string, re-encodes the runs as
    fixed-terminus unary codes, and drops the leading bit (always the
    terminus).  The samples form the output, first sample leftmost, and a
    length-n input yields exactly n samples.
    """
    _check_bit("terminus", terminus)
    text = s.to_text()
    samples = []
    while True:
        samples.append(text[-1])
        if len(text) == 1:
            break
        lengths = [length for _, length in text_runs(text)]
        text = _fixed_unary(lengths, terminus)[1:]
    return BitString.from_text("".join(samples))


def dropt_decode(s: BitString, terminus: int) -> BitString:
    """Invert dropt_encode for the same terminus.

    Working backwards from the last sample, each stage prepends the
    terminus, reads the unary code lengths back as run lengths, and
    rebuilds the runs anchored so b_0 equals that stage's sample.
    """
    _check_bit("terminus", terminus)
    samples = s.to_text()
    text = samples[-1]
    for sample in samples[-2::-1]:
        lengths = unary_code_lengths(str(terminus) + text, terminus)
        text = _rebuild(lengths, int(sample))
    return BitString.from_text(text)


def dropt_partition(
    n: int, terminus: int, budget: int = DEFAULT_BUDGET
) -> list[list[BitString]]:
    """Orbits of dropt_encode over the 2**n strings.

    Cycles are listed by ascending smallest element, each starting at its
    smallest element in successor order.
    """
    _check_bit("terminus", terminus)
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    if n > budget:
        raise BudgetExceededError(
            f"partition over length {n} exceeds the budget of {budget} "
            f"(2**{n} strings); raise the budget to proceed"
        )
    size = 1 << n
    visited = bytearray(size)
    cycles = []
    for seed in range(size):
        if visited[seed]:
            continue
        visited[seed] = 1
        start = BitString(seed, n)
        cycle = [start]
        cur = dropt_encode(start, terminus)
        while cur.value != seed:
            visited[cur.value] = 1
            cycle.append(cur)
            cur = dropt_encode(cur, terminus)
        cycles.append(cycle)
    return cycles


def construct(s: BitString, anchor: int = 0) -> BitString:
    """Expand ``s`` into two anchored halves, one per prepended terminus.

    For each terminus t in (0, 1), the bit t is prepended to ``s``, the
    result is read as terminus-t unary codes, and the code lengths are
    rebuilt as alternating runs anchored so b_0 equals ``anchor``.  The two
    halves are concatenated t=0 first, giving a string of twice length
    len(s) + 1.
    """
    _check_bit("anchor", anchor)
    text = s.to_text()
    halves = []
    for t in (0, 1):
        lengths = unary_code_lengths(str(t) + text, t)
        halves.append(_rebuild(lengths, anchor))
    return BitString.from_text("".join(halves))


def deconstruct(s: BitString, anchor: int = 0) -> BitString:
    """Invert construct, checking the halves for consistency.

    Each half must end on the anchor bit, and both halves must recover the
    same string once their run lengths are re-encoded as unary codes and
    the leading terminus is stripped; otherwise MalformedConstructError is
    raised.
    """
    _check_bit("anchor", anchor)
    text = s.to_text()
    if len(text) < 4 or len(text) % 2:
        raise MalformedConstructError(
            f"construct output has even length of at least 4, got {len(text)}"
        )
    half = len(text) // 2
    recovered = []
    for t, piece in ((0, text[:half]), (1, text[half:])):
        if piece[-1] != str(anchor):
            raise MalformedConstructError(
                f"terminus-{t} half does not end on anchor {anchor}"
            )
        lengths = [length for _, length in text_runs(piece)]
        recovered.append(_fixed_unary(lengths, t)[1:])
    if recovered[0] != recovered[1]:
        raise MalformedConstructError("halves disagree on the recovered string")
    return BitString.from_text(recovered[0])
