import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dynunary.bitstring import BitString
from dynunary.codec import Direction, decode, encode, iterate, transform

HELLO_SRC = "0100100001100101011011000110110001101111"
HELLO_ENC = "1110110001010111110110100101101001011000"


def encode_ref(s: BitString, pref: int) -> BitString:
    """Independent reference: write each run as a terminus-first unary code."""
    t = s.bit_at(pref)
    out = []
    for _, length in s.runs():
        out.append(str(t) + str(1 - t) * (length - 1))
    return BitString.from_text("".join(out))


def decode_ref(s: BitString, pref: int) -> BitString:
    """Independent reference: parse codes, rebuild runs, anchor at pref."""
    t = s.bit_at(s.length - 1)
    lengths = s.parse_unary_codes(t)
    for first in (0, 1):
        bit = first
        parts = []
        for length in lengths:
            parts.append(str(bit) * length)
            bit ^= 1
        candidate = BitString.from_text("".join(parts))
        if candidate.bit_at(pref) == t:
            return candidate
    raise AssertionError("one of the two parity orders must anchor")


@st.composite
def string_and_pref(draw, max_length=96):
    text = draw(st.text(alphabet="01", min_size=1, max_size=max_length))
    pref = draw(st.integers(min_value=0, max_value=len(text) - 1))
    return BitString.from_text(text), pref


def test_forty_bit_example():
    src = BitString.from_text(HELLO_SRC)
    enc = encode(src, 0)
    assert enc.to_text() == HELLO_ENC
    assert decode(enc, 0) == src


def test_four_bit_chain():
    s = BitString.from_text("0000")
    values = []
    for _ in range(8):
        s = encode(s, 0)
        values.append(s.value)
    assert values == [7, 12, 5, 15, 8, 3, 10, 0]


def test_four_bit_spot_values():
    assert encode(BitString.from_text("1100"), 0).to_text() == "0101"
    assert decode(BitString.from_text("0000"), 0).to_text() == "1010"
    assert decode(BitString.from_text("0011"), 0).to_text() == "1000"


def test_single_bit_strings_are_fixed_points():
    for text in ("0", "1"):
        s = BitString.from_text(text)
        assert encode(s, 0) == s
        assert decode(s, 0) == s


def test_encode_output_length_preserved():
    s = BitString.from_text("0101110")
    for pref in range(7):
        assert encode(s, pref).length == 7


@given(string_and_pref())
def test_round_trip(sp):
    s, pref = sp
    assert decode(encode(s, pref), pref) == s
    assert encode(decode(s, pref), pref) == s


@given(string_and_pref(max_length=72))
def test_encode_matches_reference(sp):
    s, pref = sp
    assert encode(s, pref) == encode_ref(s, pref)


@given(string_and_pref(max_length=72))
def test_decode_matches_reference(sp):
    s, pref = sp
    assert decode(s, pref) == decode_ref(s, pref)


@settings(max_examples=30)
@given(st.integers(min_value=1, max_value=8), st.randoms(use_true_random=False))
def test_bijection_small_exhaustive(n, rng):
    pref = rng.randrange(n)
    images = {encode(BitString(v, n), pref).value for v in range(1 << n)}
    assert images == set(range(1 << n))


def test_pref_out_of_range():
    s = BitString.from_text("0101")
    for bad in (-1, 4, 10):
        with pytest.raises(ValueError):
            encode(s, bad)
        with pytest.raises(ValueError):
            decode(s, bad)
        with pytest.raises(ValueError):
            iterate(s, bad, Direction.ENCODE, 1)


def test_direction():
    assert Direction.ENCODE.inverse is Direction.DECODE
    assert Direction.DECODE.inverse is Direction.ENCODE
    assert str(Direction.ENCODE) == "encode"
    assert Direction("decode") is Direction.DECODE
    s = BitString.from_text("0110")
    assert transform(s, 1, Direction.ENCODE) == encode(s, 1)
    assert transform(s, 1, Direction.DECODE) == decode(s, 1)


def test_iterate():
    s = BitString.from_text("011010")
    assert iterate(s, 2, Direction.ENCODE, 0) == s
    expected = s
    for _ in range(5):
        expected = encode(expected, 2)
    assert iterate(s, 2, Direction.ENCODE, 5) == expected
    assert iterate(expected, 2, Direction.DECODE, 5) == s
    with pytest.raises(ValueError):
        iterate(s, 2, Direction.ENCODE, -1)


@given(string_and_pref(max_length=48), st.integers(min_value=0, max_value=12))
def test_iterate_matches_manual_loop(sp, steps):
    s, pref = sp
    cur = s
    for _ in range(steps):
        cur = decode(cur, pref)
    assert iterate(s, pref, Direction.DECODE, steps) == cur
