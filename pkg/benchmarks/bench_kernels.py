"""Time the numba and numpy forms of each kernel on the same inputs.

    python benchmarks/bench_kernels.py [--walks 200000] [--n 6] [--k 200]

Both forms are checked for identical output before timings are reported.
"""

import argparse
import itertools
import time

import numpy as np

from randlinks import kernels
from randlinks._accel import HAVE_NUMBA


def best_of(fn, *args, repeat=3):
    fn(*args)  # warm-up / compile
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn(*args)
        times.append(time.perf_counter() - t)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--walks", type=int, default=200_000)
    ap.add_argument("--n", type=int, default=6)
    ap.add_argument("--k", type=int, default=200)
    args = ap.parse_args()
    if not HAVE_NUMBA:
        print("numba not installed; the *_loop kernels run as plain Python")

    seeds = kernels.child_seeds(1, 0, args.walks)
    perms = kernels.shuffle_perms_vec(seeds, args.n)
    group = np.array(list(itertools.permutations(range(min(args.n, 7)))), dtype=np.int32)
    cases = [
        ("walk_perms", (seeds, args.n, args.k)),
        ("shuffle_perms", (seeds, args.n)),
        ("cycle_profile", (perms,)),
        ("perm_ranks", (perms,)),
        ("centralizer_counts", (group,)),
    ]
    print(f"{'kernel':<20}{'numba s':>12}{'numpy s':>12}{'speedup':>10}")
    for name, a in cases:
        t_loop, out_loop = best_of(getattr(kernels, name + "_loop"), *a)
        t_vec, out_vec = best_of(getattr(kernels, name + "_vec"), *a)
        outs = zip(out_loop, out_vec) if isinstance(out_loop, tuple) else [(out_loop, out_vec)]
        assert all(np.array_equal(x, y) for x, y in outs), name
        print(f"{name:<20}{t_loop:>12.4f}{t_vec:>12.4f}{t_vec / t_loop:>10.1f}x")


if __name__ == "__main__":
    main()
