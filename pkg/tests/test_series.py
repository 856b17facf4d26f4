import os
import random
import subprocess
import sys

import numpy as np
import pytest

from whsl import series

from oracles import lattice_dims


def test_backends_agree_on_randoms():
    rng = random.Random(20240811)
    for _ in range(60):
        a, b, c = sorted(rng.randint(1, 24) for _ in range(3))
        h = rng.randint(1, 90)
        n = rng.randint(1, 400)
        via_numpy = series.expand_numpy(a, b, c, h, n)
        via_numba = series.expand_numba(a, b, c, h, n)
        assert via_numpy.dtype == np.int64 and via_numba.dtype == np.int64
        assert np.array_equal(via_numpy, via_numba)


def test_backends_agree_with_lattice_count():
    for a, b, c, h in [(1, 1, 1, 4), (2, 3, 7, 14), (3, 4, 5, 13), (2, 2, 3, 8)]:
        n = 150
        expect = lattice_dims(a, b, c, h, n - 1)
        assert series.expand_numpy(a, b, c, h, n).tolist() == expect
        assert series.expand_numba(a, b, c, h, n).tolist() == expect


def test_env_flag_selects_numpy():
    code = (
        "from whsl import series; "
        "print(series.active_backend()); "
        "print(series.expand(1, 2, 3, 7, 8).tolist())"
    )
    env = dict(os.environ, WHSL_KERNEL="numpy")
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True
    )
    lines = out.stdout.strip().splitlines()
    assert lines[0] == "numpy"
    assert lines[1] == "[1, 1, 2, 3, 4, 5, 7, 7]"


def test_backend_selection_matches_env():
    choice = os.environ.get("WHSL_KERNEL", "").strip().lower()
    if choice:
        assert series.active_backend() == choice
    else:
        assert series.active_backend() == "numba"


def test_argument_guards():
    with pytest.raises(ValueError):
        series.expand_numpy(0, 1, 1, 3, 5)
    with pytest.raises(ValueError):
        series.expand_numpy(1, 1, 1, 3, 0)
    with pytest.raises(ValueError):
        series.expand_numpy(1, 1, 1, 3, 1 << 40)
