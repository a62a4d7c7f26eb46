"""Hot loops of the Monte Carlo and brute-force passes.

Each kernel has a scalar-loop form (``*_loop``, compiled by numba when it is
available) and a vectorised numpy form (``*_vec``). The public names at the
bottom of the module are bound to one or the other according to
:data:`randlinks._accel.USE_NUMBA`. Both forms consume the random streams in
exactly the same order and return identical arrays.

Random streams are SplitMix64 (64-bit Weyl state, increment
0x9E3779B97F4A7C15, Stafford "mix13" finaliser). Bounded integers come from
the top 32 bits of each output through Lemire's multiply-shift with
rejection, which is exactly uniform for bounds below 2**32.
"""

from __future__ import annotations

import numpy as np

from randlinks._accel import USE_NUMBA, njit

GENERATOR_ID = "splitmix64+lemire32"

GOLDEN = np.uint64(0x9E3779B97F4A7C15)
MIX1 = np.uint64(0xBF58476D1CE4E5B9)
MIX2 = np.uint64(0x94D049BB133111EB)
S27 = np.uint64(27)
S30 = np.uint64(30)
S31 = np.uint64(31)
S32 = np.uint64(32)
LOW32 = np.uint64(0xFFFFFFFF)
TWO32 = np.uint64(1 << 32)


@njit
def _mix(z):
    z = (z ^ (z >> S30)) * MIX1
    z = (z ^ (z >> S27)) * MIX2
    return z ^ (z >> S31)


@njit
def _bounded(state, bound):
    # returns (new_state, r) with r uniform on [0, bound)
    state = state + GOLDEN
    prod = (_mix(state) >> S32) * bound
    low = prod & LOW32
    if low < bound:
        thresh = (TWO32 - bound) % bound
        while low < thresh:
            state = state + GOLDEN
            prod = (_mix(state) >> S32) * bound
            low = prod & LOW32
    return state, prod >> S32


def child_seeds(master_seed: int, start: int, count: int) -> np.ndarray:
    """Per-walk seeds ``mix64(master ^ (index + 1) * GOLDEN)`` for a block of walks."""
    idx = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    return _mix_vec(np.uint64(master_seed) ^ (idx * GOLDEN))


def _mix_vec(z):
    z = (z ^ (z >> S30)) * MIX1
    z = (z ^ (z >> S27)) * MIX2
    return z ^ (z >> S31)


def _bounded_vec(states, bound):
    """Vectorised :func:`_bounded`; advances ``states`` in place."""
    b = np.uint64(bound)
    states += GOLDEN
    prod = (_mix_vec(states) >> S32) * b
    thresh = (TWO32 - b) % b
    bad = (prod & LOW32) < thresh
    while bad.any():
        idx = np.flatnonzero(bad)
        states[idx] += GOLDEN
        redo = (_mix_vec(states[idx]) >> S32) * b
        prod[idx] = redo
        bad[idx] = (redo & LOW32) < thresh
    return prod >> S32


# -- walks ---------------------------------------------------------------


@njit
def walk_perms_loop(seeds, n, k):
    W = seeds.shape[0]
    out = np.empty((W, n), dtype=np.int32)
    bound = np.uint64(2 * n - 1)
    for w in range(W):
        for i in range(n):
            out[w, i] = i
        state = seeds[w]
        for _ in range(k):
            state, r = _bounded(state, bound)
            g = np.int64(r)
            if g != 0:
                if g >= n:
                    g -= n - 1
                tmp = out[w, g - 1]
                out[w, g - 1] = out[w, g]
                out[w, g] = tmp
    return out


def walk_perms_vec(seeds, n, k):
    W = seeds.shape[0]
    out = np.tile(np.arange(n, dtype=np.int32), (W, 1))
    states = seeds.copy()
    for _ in range(k):
        r = _bounded_vec(states, 2 * n - 1).astype(np.int64)
        r = np.where(r >= n, r - (n - 1), r)
        rows = np.flatnonzero(r)
        g = r[rows]
        left = out[rows, g - 1]
        out[rows, g - 1] = out[rows, g]
        out[rows, g] = left
    return out


@njit
def shuffle_perms_loop(seeds, n):
    W = seeds.shape[0]
    out = np.empty((W, n), dtype=np.int32)
    for w in range(W):
        for i in range(n):
            out[w, i] = i
        state = seeds[w]
        for i in range(n - 1, 0, -1):
            state, r = _bounded(state, np.uint64(i + 1))
            j = np.int64(r)
            tmp = out[w, i]
            out[w, i] = out[w, j]
            out[w, j] = tmp
    return out


def shuffle_perms_vec(seeds, n):
    W = seeds.shape[0]
    out = np.tile(np.arange(n, dtype=np.int32), (W, 1))
    states = seeds.copy()
    rows = np.arange(W)
    for i in range(n - 1, 0, -1):
        j = _bounded_vec(states, i + 1).astype(np.int64)
        tmp = out[:, i].copy()
        out[:, i] = out[rows, j]
        out[rows, j] = tmp
    return out


# -- cycle statistics ----------------------------------------------------


@njit
def cycle_profile_loop(perms):
    """Per row: number of cycles and multiplicity of each cycle length."""
    W, n = perms.shape
    counts = np.zeros(W, dtype=np.int32)
    mult = np.zeros((W, n), dtype=np.int32)
    seen = np.zeros(n, dtype=np.bool_)
    for w in range(W):
        seen[:] = False
        for s in range(n):
            if seen[s]:
                continue
            length = 0
            j = s
            while not seen[j]:
                seen[j] = True
                j = perms[w, j]
                length += 1
            counts[w] += 1
            mult[w, length - 1] += 1
    return counts, mult


def cycle_profile_vec(perms):
    W, n = perms.shape
    perms = perms.astype(np.int64, copy=False)
    start = np.broadcast_to(np.arange(n), (W, n))
    orbit_len = np.zeros((W, n), dtype=np.int64)
    cur = perms.copy()
    for step in range(1, n + 1):
        hit = (cur == start) & (orbit_len == 0)
        orbit_len[hit] = step
        if step < n:
            cur = np.take_along_axis(perms, cur, axis=1)
    # each cycle of length L contributes L letters with orbit length L
    mult = np.zeros((W, n), dtype=np.int64)
    rows = np.repeat(np.arange(W), n)
    np.add.at(mult, (rows, orbit_len.ravel() - 1), 1)
    mult //= np.arange(1, n + 1)
    return mult.sum(axis=1).astype(np.int32), mult.astype(np.int32)


@njit
def perm_ranks_loop(perms):
    """Lexicographic rank (Lehmer code) of each row."""
    W, n = perms.shape
    fact = np.ones(n, dtype=np.int64)
    for i in range(n - 2, -1, -1):
        fact[i] = fact[i + 1] * (n - 1 - i)
    out = np.zeros(W, dtype=np.int64)
    for w in range(W):
        r = 0
        for i in range(n):
            smaller = 0
            for j in range(i + 1, n):
                if perms[w, j] < perms[w, i]:
                    smaller += 1
            r += smaller * fact[i]
        out[w] = r
    return out


def perm_ranks_vec(perms):
    W, n = perms.shape
    out = np.zeros(W, dtype=np.int64)
    weight = 1
    for i in range(n - 1, -1, -1):
        smaller = (perms[:, i + 1:] < perms[:, i:i + 1]).sum(axis=1)
        out += smaller * weight
        weight *= n - i
    return out


# -- brute-force centralisers -------------------------------------------


@njit
def centralizer_counts_loop(group):
    """For every a in ``group`` count g in ``group`` with g o a == a o g."""
    N, n = group.shape
    out = np.zeros(N, dtype=np.int64)
    for ia in range(N):
        c = 0
        for ig in range(N):
            ok = True
            for i in range(n):
                if group[ig, group[ia, i]] != group[ia, group[ig, i]]:
                    ok = False
                    break
            if ok:
                c += 1
        out[ia] = c
    return out


def centralizer_counts_vec(group):
    N, n = group.shape
    out = np.zeros(N, dtype=np.int64)
    cols = [np.ascontiguousarray(group[:, i]) for i in range(n)]
    for ia in range(N):
        a = group[ia]
        # narrow the candidate g letter by letter: g(a(i)) == a(g(i))
        cand = np.flatnonzero(cols[a[0]] == a[cols[0]])
        for i in range(1, n):
            if cand.size == 0:
                break
            cand = cand[cols[a[i]][cand] == a[cols[i][cand]]]
        out[ia] = cand.size
    return out


if USE_NUMBA:
    walk_perms = walk_perms_loop
    shuffle_perms = shuffle_perms_loop
    cycle_profile = cycle_profile_loop
    perm_ranks = perm_ranks_loop
    centralizer_counts = centralizer_counts_loop
else:
    walk_perms = walk_perms_vec
    shuffle_perms = shuffle_perms_vec
    cycle_profile = cycle_profile_vec
    perm_ranks = perm_ranks_vec
    centralizer_counts = centralizer_counts_vec

BACKEND = "numba" if USE_NUMBA else "numpy"
