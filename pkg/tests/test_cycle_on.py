import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dynunary.bitstring import BitString
from dynunary.codec import Direction
from dynunary.cycle_on import CycleOnOrbit, Generator, cycle_on, recover_origin
from dynunary.cycles import cycle_of
from dynunary.goldens import CYCLE_ON_REFERENCE


def reference_generators(pref=0, direction=Direction.ENCODE):
    return [
        Generator(BitString(seed, CYCLE_ON_REFERENCE.n), pref, direction)
        for seed in CYCLE_ON_REFERENCE.generator_seeds
    ]


def test_reference_orbit_reproduced():
    start = BitString(CYCLE_ON_REFERENCE.start, CYCLE_ON_REFERENCE.n)
    orbit = cycle_on(start, reference_generators())
    assert tuple(orbit.values()) == CYCLE_ON_REFERENCE.elements
    assert orbit.length == 32
    assert orbit.elements[-1] == start
    assert orbit.start == start


def test_reference_orbit_recovery():
    gens = reference_generators()
    for index, value in enumerate(CYCLE_ON_REFERENCE.elements, start=1):
        origin = recover_origin(BitString(value, 16), index, gens)
        assert origin.value == CYCLE_ON_REFERENCE.start


def test_recover_index_zero_is_identity():
    s = BitString(2014, 16)
    assert recover_origin(s, 0, reference_generators()) == s


def test_generator_orbit_values():
    g = Generator(BitString(0, 4))
    assert g.orbit_values() == [0, 7, 12, 5, 15, 8, 3, 10]


def test_moving_pref_halves_generator_cycles_not_the_orbit():
    for pref in range(1, 16):
        gens = reference_generators(pref)
        for g in gens:
            assert cycle_of(g.seed, pref).k == 16
        orbit = cycle_on(BitString(2014, 16), gens)
        assert orbit.length == 32


def test_empty_generator_list():
    start = BitString.from_text("0110")
    orbit = cycle_on(start, [])
    assert orbit.length == 1
    assert orbit.elements == (start,)


def test_first_step_is_not_the_plain_transform():
    # the combined walk drifts by generator orbits, it does not re-encode
    from dynunary.codec import encode

    start = BitString(2014, 16)
    orbit = cycle_on(start, reference_generators())
    assert orbit.elements[0] != encode(start, 0)
    assert orbit.elements[0].value == 28158


def test_validation():
    start = BitString(0, 8)
    with pytest.raises(ValueError):
        cycle_on(start, [Generator(BitString(0, 4))])
    with pytest.raises(ValueError):
        recover_origin(start, -1, [])
    with pytest.raises(ValueError):
        Generator(BitString(0, 4), pref=4)


def test_mixed_generators_close_and_recover():
    start = BitString(77, 8)
    gens = [
        Generator(BitString(3, 8), 0, Direction.ENCODE),
        Generator(BitString(200, 8), 5, Direction.DECODE),
        Generator(BitString(41, 8), 2, Direction.ENCODE),
    ]
    orbit = cycle_on(start, gens)
    assert orbit.elements[-1] == start
    for index in (1, orbit.length // 2, orbit.length):
        element = orbit.elements[index - 1]
        assert recover_origin(element, index, gens) == start


@settings(max_examples=60)
@given(
    st.integers(min_value=0, max_value=255),
    st.lists(
        st.tuples(
            st.integers(min_value=0, max_value=255),
            st.integers(min_value=0, max_value=7),
            st.sampled_from(list(Direction)),
        ),
        min_size=0,
        max_size=3,
    ),
    st.data(),
)
def test_orbit_closure_and_recovery_property(start_value, gen_specs, data):
    import math

    start = BitString(start_value, 8)
    gens = [Generator(BitString(v, 8), p, d) for v, p, d in gen_specs]
    orbit = cycle_on(start, gens)
    assert isinstance(orbit, CycleOnOrbit)
    assert orbit.elements[-1] == start
    bound = 2 * math.lcm(*(len(g.orbit_values()) for g in gens)) if gens else 2
    assert orbit.length <= bound
    index = data.draw(st.integers(min_value=1, max_value=orbit.length))
    element = orbit.elements[index - 1]
    assert recover_origin(element, index, gens) == start
