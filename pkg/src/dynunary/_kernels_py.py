"""Pure-Python transform kernels over plain integers.

The forward transform writes each run of the input as a unary code whose
terminus bit is the input's bit at the parity reference position.  On
integers that collapses to a shifted XOR: d = v ^ (v >> 1) marks run
boundaries, the top bit is always a code start, and the whole word is
complemented when the terminus is 0.  The inverse undoes the complement,
then takes suffix XOR (bit i of the result is the XOR of bits i..n-1),
then re-anchors so the bit at the reference position equals the terminus.

Callers validate arguments; these functions assume 0 <= v < 2**n and
0 <= p < n.
"""

BACKEND = "pure"


def encode_value(v: int, n: int, p: int) -> int:
    d = (v ^ (v >> 1)) | (1 << (n - 1))
    if (v >> p) & 1:
        return d
    return d ^ ((1 << n) - 1)


def decode_value(v: int, n: int, p: int) -> int:
    mask = (1 << n) - 1
    t = (v >> (n - 1)) & 1
    d = v if t else v ^ mask
    # suffix XOR by doubling: after the pass for shift s, bit i holds the
    # XOR of bits i .. min(i + 2s - 1, n - 1)
    w = d
    shift = 1
    while shift < n:
        w ^= w >> shift
        shift <<= 1
    if ((w >> p) & 1) == t:
        return w
    return w ^ mask


def iterate_value(v: int, n: int, p: int, forward: bool, steps: int) -> int:
    step = encode_value if forward else decode_value
    for _ in range(steps):
        v = step(v, n, p)
    return v


def orbit_values(v: int, n: int, p: int, forward: bool) -> list[int]:
    """Successive transforms of v until it recurs; starts with v itself."""
    step = encode_value if forward else decode_value
    out = [v]
    cur = step(v, n, p)
    while cur != v:
        out.append(cur)
        cur = step(cur, n, p)
    return out


def partition_values(n: int, p: int, forward: bool) -> list[list[int]]:
    """All orbits over the 2**n strings, each led by its smallest value.

    Seeds are scanned in ascending order, so orbits come out sorted by
    their minimum and each orbit starts at that minimum.
    """
    step = encode_value if forward else decode_value
    size = 1 << n
    visited = bytearray(size)
    cycles = []
    for seed in range(size):
        if visited[seed]:
            continue
        visited[seed] = 1
        cycle = [seed]
        cur = step(seed, n, p)
        while cur != seed:
            visited[cur] = 1
            cycle.append(cur)
            cur = step(cur, n, p)
        cycles.append(cycle)
    return cycles
