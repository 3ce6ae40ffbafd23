import random
import subprocess
import sys

import pytest

from dynunary import _kernels_py

_kernels_cy = pytest.importorskip(
    "dynunary._kernels_cy", reason="compiled kernels not built"
)


def cases():
    rng = random.Random(99)
    # cover the word-path/byte-path boundary and padding widths
    for n in [1, 2, 7, 8, 9, 31, 32, 63, 64, 65, 71, 72, 128, 200, 1023]:
        for _ in range(40):
            yield rng.getrandbits(n) if n > 1 else rng.randrange(2), n, rng.randrange(n)


@pytest.mark.parametrize("case", list(cases()), ids=lambda c: f"n{c[1]}p{c[2]}")
def test_encode_decode_agree(case):
    v, n, p = case
    e_py = _kernels_py.encode_value(v, n, p)
    e_cy = _kernels_cy.encode_value(v, n, p)
    assert e_py == e_cy
    assert _kernels_py.decode_value(e_py, n, p) == v
    assert _kernels_cy.decode_value(e_py, n, p) == v


def test_iterate_agrees():
    rng = random.Random(5)
    for n in (16, 63, 64, 100):
        v = rng.getrandbits(n)
        p = rng.randrange(n)
        for steps in (0, 1, 7, 64):
            assert _kernels_py.iterate_value(
                v, n, p, True, steps
            ) == _kernels_cy.iterate_value(v, n, p, True, steps)
            assert _kernels_py.iterate_value(
                v, n, p, False, steps
            ) == _kernels_cy.iterate_value(v, n, p, False, steps)


def test_orbits_agree():
    rng = random.Random(11)
    for n in (8, 16, 63, 64, 80):
        v = rng.getrandbits(n)
        p = rng.randrange(n)
        for forward in (True, False):
            assert _kernels_py.orbit_values(v, n, p, forward) == _kernels_cy.orbit_values(
                v, n, p, forward
            )


def test_partitions_agree():
    for n, p in ((1, 0), (6, 3), (8, 0), (11, 7)):
        for forward in (True, False):
            assert _kernels_py.partition_values(n, p, forward) == _kernels_cy.partition_values(
                n, p, forward
            )


def test_compiled_partition_word_limit():
    with pytest.raises(ValueError):
        _kernels_cy.partition_values(64, 0, True)


def _backend_in_subprocess(env_value):
    code = "import dynunary; print(dynunary.BACKEND)"
    return subprocess.run(
        [sys.executable, "-c", code],
        capture_output=True,
        text=True,
        env={"DYNUNARY_BACKEND": env_value, "PATH": "/usr/bin:/bin"},
    )


def test_backend_env_override():
    proc = _backend_in_subprocess("pure")
    assert proc.returncode == 0 and proc.stdout.strip() == "pure"
    proc = _backend_in_subprocess("compiled")
    assert proc.returncode == 0 and proc.stdout.strip() == "compiled"
    proc = _backend_in_subprocess("turbo")
    assert proc.returncode != 0
    assert "DYNUNARY_BACKEND" in proc.stderr


def test_default_backend_prefers_compiled():
    import os

    import dynunary

    if os.environ.get("DYNUNARY_BACKEND"):
        pytest.skip("backend forced by environment")
    assert dynunary.BACKEND == "compiled"
