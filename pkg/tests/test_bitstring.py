import pytest
from hypothesis import given
from hypothesis import strategies as st

from dynunary.bitstring import BitString, text_runs, unary_code_lengths
from dynunary.errors import MalformedUnaryError

bits_text = st.text(alphabet="01", min_size=1, max_size=96)


def test_from_text_round_trip():
    s = BitString.from_text("0100")
    assert s.value == 4
    assert s.length == 4
    assert s.to_text() == "0100"
    assert str(s) == "0100"
    assert int(s) == 4
    assert repr(s) == "BitString(4, 4)"


def test_leading_zeros_significant():
    assert BitString.from_text("0001") != BitString.from_text("01")
    assert BitString.from_text("0001").length == 4


def test_from_text_rejects_bad_input():
    with pytest.raises(ValueError):
        BitString.from_text("")
    with pytest.raises(ValueError):
        BitString.from_text("012")
    with pytest.raises(ValueError):
        BitString.from_text("0b10")


def test_constructor_validates():
    with pytest.raises(ValueError):
        BitString(0, 0)
    with pytest.raises(ValueError):
        BitString(4, 2)
    with pytest.raises(ValueError):
        BitString(-1, 4)


def test_bytes_round_trip():
    s = BitString.from_bytes(b"Hello")
    assert s.length == 40
    assert s.to_bytes() == b"Hello"
    assert s.to_text() == (
        "01001000" "01100101" "01101100" "01101100" "01101111"
    )


def test_bytes_edge_cases():
    with pytest.raises(ValueError):
        BitString.from_bytes(b"")
    with pytest.raises(ValueError):
        BitString.from_text("0101").to_bytes()
    assert BitString.from_bytes(b"\x00").to_text() == "00000000"


def test_bit_at_is_lsb_indexed():
    s = BitString.from_text("0100")
    assert s.bit_at(2) == 1
    assert s.bit_at(0) == 0
    assert s.bit_at(3) == 0
    with pytest.raises(IndexError):
        s.bit_at(4)
    with pytest.raises(IndexError):
        s.bit_at(-1)


def test_iteration_is_textual_order():
    assert list(BitString.from_text("0110")) == [0, 1, 1, 0]


def test_runs():
    assert BitString.from_text("0011101").runs() == [(0, 2), (1, 3), (0, 1), (1, 1)]
    assert BitString.from_text("0000").runs() == [(0, 4)]
    assert text_runs("1") == [(1, 1)]


def test_unary_code_lengths():
    assert unary_code_lengths("10010", 1) == [3, 2]
    assert unary_code_lengths("0011", 0) == [1, 3]
    assert unary_code_lengths("111", 1) == [1, 1, 1]
    assert unary_code_lengths("1000", 1) == [4]


def test_unary_code_lengths_rejects():
    with pytest.raises(MalformedUnaryError):
        unary_code_lengths("0110", 1)
    with pytest.raises(MalformedUnaryError):
        unary_code_lengths("", 1)
    with pytest.raises(ValueError):
        unary_code_lengths("0110", 2)


def test_parse_unary_codes_method():
    assert BitString.from_text("10010").parse_unary_codes(1) == [3, 2]


def test_complement_and_xor():
    s = BitString.from_text("0110")
    assert s.complement().to_text() == "1001"
    assert (s ^ s.complement()).to_text() == "1111"
    assert (s ^ s).value == 0
    with pytest.raises(ValueError):
        s ^ BitString.from_text("01")


def test_equality_and_hash():
    a = BitString.from_text("0101")
    b = BitString(5, 4)
    assert a == b and hash(a) == hash(b)
    assert a != BitString(5, 5)
    assert a != "0101"


@given(bits_text)
def test_text_round_trip_property(text):
    assert BitString.from_text(text).to_text() == text


@given(bits_text)
def test_complement_involution(text):
    s = BitString.from_text(text)
    assert s.complement().complement() == s


@given(bits_text)
def test_runs_partition_the_string(text):
    runs = BitString.from_text(text).runs()
    assert sum(length for _, length in runs) == len(text)
    assert all(length > 0 for _, length in runs)
    # adjacent runs alternate by construction
    assert all(a[0] != b[0] for a, b in zip(runs, runs[1:]))
    rebuilt = "".join(str(bit) * length for bit, length in runs)
    assert rebuilt == text


@given(bits_text, st.sampled_from([0, 1]))
def test_unary_codes_cover_the_string(text, terminus):
    s = BitString.from_text(text)
    if text[0] != str(terminus):
        with pytest.raises(MalformedUnaryError):
            s.parse_unary_codes(terminus)
        return
    lengths = s.parse_unary_codes(terminus)
    assert sum(lengths) == len(text)
    assert all(length >= 1 for length in lengths)
