# cython: language_level=3
"""Compiled transform kernels, same surface as _kernels_py.

Lengths up to 63 bits run entirely on C words.  Longer values take a
byte-buffer path: one pass per byte with a carry bit for the forward
transform, and a 256-entry suffix-XOR table plus a running parity for the
inverse.
"""

from libc.stdint cimport uint8_t, uint64_t

BACKEND = "compiled"

DEF WORD_MAX = 63

cdef uint8_t PXOR[256]
cdef uint8_t PAR[256]

cdef int _x, _y
for _x in range(256):
    # bit j of PXOR[x] is the XOR of bits j..7 of x
    _y = _x ^ (_x >> 1)
    _y ^= _y >> 2
    _y ^= _y >> 4
    PXOR[_x] = <uint8_t> _y
    PAR[_x] = <uint8_t> (_y & 1)


cdef inline uint64_t _enc_word(uint64_t v, int n, int p) nogil:
    cdef uint64_t d = (v ^ (v >> 1)) | ((<uint64_t> 1) << (n - 1))
    if (v >> p) & 1:
        return d
    return d ^ (((<uint64_t> 1) << n) - 1)


cdef inline uint64_t _dec_word(uint64_t v, int n, int p) nogil:
    cdef uint64_t mask = ((<uint64_t> 1) << n) - 1
    cdef uint64_t t = (v >> (n - 1)) & 1
    cdef uint64_t w = v if t else v ^ mask
    cdef int shift = 1
    while shift < n:
        w ^= w >> shift
        shift <<= 1
    if ((w >> p) & 1) == t:
        return w
    return w ^ mask


def encode_value(v, int n, int p):
    if n <= WORD_MAX:
        return int(_enc_word(<uint64_t> v, n, p))
    return _encode_big(v, n, p)


def decode_value(v, int n, int p):
    if n <= WORD_MAX:
        return int(_dec_word(<uint64_t> v, n, p))
    return _decode_big(v, n, p)


cdef _encode_big(v, int n, int p):
    cdef Py_ssize_t m = (n + 7) >> 3
    data = v.to_bytes(m, "big")
    out = bytearray(data)
    cdef const uint8_t[::1] src = data
    cdef uint8_t[::1] dst = out
    cdef int t = 1 if (v >> p) & 1 else 0
    cdef uint8_t topmask = <uint8_t> (0xFF >> ((m << 3) - n))
    cdef Py_ssize_t i
    cdef uint8_t cur
    cdef uint8_t carry = 0
    with nogil:
        for i in range(m):
            cur = src[i]
            dst[i] = cur ^ ((cur >> 1) | (carry << 7))
            carry = cur & 1
        dst[0] |= <uint8_t> (1 << ((n - 1) & 7))
        if t == 0:
            for i in range(m):
                dst[i] = <uint8_t> (~dst[i])
            dst[0] &= topmask
    return int.from_bytes(out, "big")


cdef _decode_big(v, int n, int p):
    cdef Py_ssize_t m = (n + 7) >> 3
    data = v.to_bytes(m, "big")
    out = bytearray(m)
    cdef const uint8_t[::1] src = data
    cdef uint8_t[::1] dst = out
    cdef int t = 1 if (v >> (n - 1)) & 1 else 0
    cdef uint8_t topmask = <uint8_t> (0xFF >> ((m << 3) - n))
    cdef uint8_t parity = 0
    cdef Py_ssize_t i
    cdef uint8_t b
    with nogil:
        for i in range(m):
            b = src[i]
            if t == 0:
                b = <uint8_t> (~b)
                if i == 0:
                    b &= topmask
            dst[i] = PXOR[b] ^ (<uint8_t> 0xFF if parity else <uint8_t> 0)
            parity ^= PAR[b]
        # re-anchor: the reference bit of the result must equal the terminus
        if ((dst[m - 1 - (p >> 3)] >> (p & 7)) & 1) != t:
            for i in range(m):
                dst[i] = <uint8_t> (~dst[i])
            dst[0] &= topmask
    return int.from_bytes(out, "big")


def iterate_value(v, int n, int p, bint forward, steps):
    cdef uint64_t w
    cdef Py_ssize_t k, count
    if n <= WORD_MAX:
        w = <uint64_t> v
        count = steps
        if forward:
            for k in range(count):
                w = _enc_word(w, n, p)
        else:
            for k in range(count):
                w = _dec_word(w, n, p)
        return int(w)
    cur = v
    for _ in range(steps):
        cur = _encode_big(cur, n, p) if forward else _decode_big(cur, n, p)
    return cur


def orbit_values(v, int n, int p, bint forward):
    """Successive transforms of v until it recurs; starts with v itself."""
    cdef uint64_t start, w
    if n <= WORD_MAX:
        start = <uint64_t> v
        out = [v]
        w = _enc_word(start, n, p) if forward else _dec_word(start, n, p)
        while w != start:
            out.append(int(w))
            w = _enc_word(w, n, p) if forward else _dec_word(w, n, p)
        return out
    out = [v]
    cur = _encode_big(v, n, p) if forward else _decode_big(v, n, p)
    while cur != v:
        out.append(cur)
        cur = _encode_big(cur, n, p) if forward else _decode_big(cur, n, p)
    return out


def partition_values(int n, int p, bint forward):
    """All orbits over the 2**n strings, ascending-seed order, min first."""
    if n > WORD_MAX:
        raise ValueError(f"partition enumeration supports lengths up to {WORD_MAX}")
    cdef uint64_t size = (<uint64_t> 1) << n
    visited = bytearray(size)
    cdef uint8_t[::1] vis = visited
    cdef uint64_t seed, cur
    cycles = []
    for seed in range(size):
        if vis[seed]:
            continue
        vis[seed] = 1
        cycle = [int(seed)]
        cur = _enc_word(seed, n, p) if forward else _dec_word(seed, n, p)
        while cur != seed:
            vis[cur] = 1
            cycle.append(int(cur))
            cur = _enc_word(cur, n, p) if forward else _dec_word(cur, n, p)
        cycles.append(cycle)
    return cycles
