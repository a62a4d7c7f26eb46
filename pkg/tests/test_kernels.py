import itertools
import json
import os
import subprocess
import sys

import numpy as np
import pytest

from randlinks import kernels
from randlinks.walk import UNIFORM, SplitMix64, WalkConfig, child_seed, sample_endpoint


@pytest.fixture(scope="module")
def seeds():
    return kernels.child_seeds(2024, 0, 3000)


def test_child_seeds_match_python():
    got = kernels.child_seeds(77, 10, 5)
    assert [int(x) for x in got] == [child_seed(77, i) for i in range(10, 15)]


def test_stream_matches_python(seeds):
    # one bounded draw per lane, vectorised vs scalar python
    states = seeds[:50].copy()
    vec = kernels._bounded_vec(states, 7)
    for s, v, st in zip(seeds[:50], vec, states):
        ref = SplitMix64(int(s))
        assert ref.bounded(7) == int(v)
        assert ref.state == int(st)


def test_rejection_path_agrees():
    # bound close to 2**32 makes rejection frequent
    bound = (1 << 32) - 5
    s = kernels.child_seeds(1, 0, 400)
    states = s.copy()
    vec = kernels._bounded_vec(states, bound)
    for seed, v in zip(s, vec):
        assert SplitMix64(int(seed)).bounded(bound) == int(v)
        st, r = kernels._bounded(np.uint64(seed), np.uint64(bound))
        assert int(r) == int(v)


@pytest.mark.parametrize("n, k", [(2, 7), (4, 50), (9, 120)])
def test_walk_loop_equals_vec(seeds, n, k):
    assert np.array_equal(kernels.walk_perms_loop(seeds, n, k), kernels.walk_perms_vec(seeds, n, k))


@pytest.mark.parametrize("n", [2, 5, 10])
def test_shuffle_loop_equals_vec(seeds, n):
    assert np.array_equal(kernels.shuffle_perms_loop(seeds, n), kernels.shuffle_perms_vec(seeds, n))


@pytest.mark.parametrize("n", [1, 3, 8, 15])
def test_cycle_profile_loop_equals_vec(seeds, n):
    perms = kernels.shuffle_perms_vec(seeds, n) if n > 1 else np.zeros((5, 1), dtype=np.int32)
    c1, m1 = kernels.cycle_profile_loop(perms)
    c2, m2 = kernels.cycle_profile_vec(perms)
    assert np.array_equal(c1, c2) and np.array_equal(m1, m2)
    assert np.array_equal((m1 * np.arange(1, n + 1)).sum(axis=1), np.full(len(perms), n))


def test_ranks_are_lexicographic():
    group = np.array(list(itertools.permutations(range(6))), dtype=np.int32)
    assert np.array_equal(kernels.perm_ranks_loop(group), np.arange(720))
    assert np.array_equal(kernels.perm_ranks_vec(group), np.arange(720))


def test_centralizer_loop_equals_vec():
    group = np.array(list(itertools.permutations(range(5))), dtype=np.int32)
    assert np.array_equal(kernels.centralizer_counts_loop(group), kernels.centralizer_counts_vec(group))


def test_kernel_walks_match_python_reference():
    cfg = WalkConfig(6, 35, 25, 424242)
    perms = kernels.walk_perms(kernels.child_seeds(cfg.master_seed, 0, cfg.walks), cfg.n, cfg.k)
    for i in range(cfg.walks):
        assert tuple(perms[i]) == sample_endpoint(cfg, i).images
    cfg = WalkConfig(6, 0, 25, 424242, kind=UNIFORM)
    perms = kernels.shuffle_perms(kernels.child_seeds(cfg.master_seed, 0, cfg.walks), cfg.n)
    for i in range(cfg.walks):
        assert tuple(perms[i]) == sample_endpoint(cfg, i).images


def test_numpy_backend_gives_identical_histograms():
    code = (
        "import json; from randlinks import kernels; from randlinks.walk import *;"
        "e = monte_carlo(WalkConfig(5, 60, 5000, 9));"
        "print(json.dumps([kernels.BACKEND, e.to_json()]))"
    )
    out = {}
    for flag in ("0", "1"):
        env = dict(os.environ, RANDLINKS_DISABLE_NUMBA=flag)
        res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        out[flag] = json.loads(res.stdout)
    assert out["1"][0] == "numpy"
    assert out["0"][1] == out["1"][1]
