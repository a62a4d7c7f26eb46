"""Exit criteria, one test per criterion, each at its stated tolerance.

A summary line per criterion is printed at the end of the pytest run.
"""

import json
import math
import time
from fractions import Fraction

import pytest

from oracles import cycle_count_histogram
from randlinks.cli import main
from randlinks.exact import (
    ERDOS_MIN_N,
    component_distribution,
    erdos_from_mode,
    hammersley_from_mode,
    harmonic,
    iter_modes,
    iter_stirling_rows,
    stirling_row,
)
from randlinks.partition import Partition, centralizer_order, scan_max_class, verify_lemma
from randlinks.walk import WalkConfig, monte_carlo, tv_distance_components, tv_distance_uniform

SEED = 20261016


@pytest.mark.criterion("C1 Stirling rows equal exhaustive cycle histograms, n <= 8")
def test_c1_stirling_oracle(criterion):
    t = time.perf_counter()
    for n in range(1, 9):
        assert list(stirling_row(n).values) == cycle_count_histogram(n)
    elapsed = time.perf_counter() - t
    criterion["detail"] = f"{elapsed:.2f}s"
    assert elapsed < 30


@pytest.mark.criterion("C2 row sum n! and mean H_n exactly, 1 <= n <= 200")
def test_c2_row_and_expectation(criterion):
    t = time.perf_counter()
    for row in iter_stirling_rows(200):
        n = row.n
        assert sum(row.values) == math.factorial(n)
        mean = Fraction(sum(m * v for m, v in enumerate(row.values, 1)), math.factorial(n))
        assert mean == harmonic(n)
    elapsed = time.perf_counter() - t
    criterion["detail"] = f"{elapsed:.1f}s"
    assert elapsed < 10


@pytest.mark.criterion("C3 largest class is ((n-1),1), unique, size n(n-2)!, prob 1/(n-1), 3 <= n <= 120")
def test_c3_theorem2_scan(criterion):
    from randlinks.partition import conjugacy_class_size

    t = time.perf_counter()
    for n in range(3, 121):
        scan = scan_max_class(n)
        assert scan.maximizers == [Partition((n - 1, 1))], n
        rec = conjugacy_class_size(scan.best)
        assert rec.class_size == n * math.factorial(n - 2)
        assert rec.probability == Fraction(1, n - 1)
    elapsed = time.perf_counter() - t
    criterion["detail"] = f"{elapsed:.2f}s"
    assert elapsed < 60


@pytest.mark.criterion("C4 brute-force centralisers match formula; min n-1 only at (n-1)-cycles; |Z((2,2,1))| = 8")
def test_c4_lemma(criterion):
    t = time.perf_counter()
    for n in range(3, 9):
        r = verify_lemma(n)
        assert r.checks["formula_matches_definition"], r.failures
        assert r.min_centralizer == n - 1
        assert r.checks["equality_only_for_n_minus_1_cycles"]
        assert r.checks["centralizer_at_least_n_minus_1"]
        assert r.checks["product_at_least_sum"]
        if n == 5:
            assert r.entry((2, 2, 1))["centralizer_brute"] == [8] == [centralizer_order(Partition((2, 2, 1)))]
    elapsed = time.perf_counter() - t
    criterion["detail"] = f"{elapsed:.1f}s"
    assert elapsed < 60


@pytest.mark.criterion("C5 [log n - 1/2] <= K_n <= [log n], K_n = exact argmax, 189 <= n <= 2000")
def test_c5_erdos(criterion):
    t = time.perf_counter()
    bad = [v for n, K, _ in iter_modes(ERDOS_MIN_N, 2000) if not (v := erdos_from_mode(n, K)).passed]
    elapsed = time.perf_counter() - t
    criterion["detail"] = f"{elapsed:.1f}s, violations={len(bad)}" + (
        f" first n={bad[0].n} K={bad[0].K} bounds=[{bad[0].lower},{bad[0].upper}]" if bad else ""
    )
    assert elapsed < 120
    assert not bad, f"{len(bad)} values of n outside the bounds"


@pytest.mark.criterion("C6 h-interval meets (-1.1, 1.5) for 189 <= n <= 2000")
def test_c6_hammersley(criterion):
    t = time.perf_counter()
    bad = []
    for n, K, _ in iter_modes(3, 2000):
        est = hammersley_from_mode(n, K)
        if n >= ERDOS_MIN_N and not est.meets_bounds:
            bad.append(est)
    elapsed = time.perf_counter() - t
    criterion["detail"] = f"{elapsed:.1f}s, violations={len(bad)}" + (
        f" first n={bad[0].n} h in [{bad[0].h_low:.2f},{bad[0].h_high:.2f})" if bad else ""
    )
    assert elapsed < 120
    assert not bad, f"{len(bad)} values of n with h-interval outside (-1.1, 1.5)"


@pytest.mark.criterion("C7 n=4, k=500, W=1e6: mean, TV, modal partition, knot frequency")
def test_c7_monte_carlo(criterion):
    t = time.perf_counter()
    emp = monte_carlo(WalkConfig(4, 500, 10**6, SEED))
    tv = tv_distance_components(emp, component_distribution(4))
    elapsed = time.perf_counter() - t
    criterion["detail"] = (
        f"{elapsed:.1f}s mean={emp.mean_components:.4f} tv={tv:.4f} "
        f"p(3,1)={emp.frequency((3, 1)):.4f} p(4)={emp.frequency((4,)):.4f}"
    )
    assert abs(emp.mean_components - 25 / 12) < 0.01
    assert tv < 0.01
    assert emp.type_mode == Partition((3, 1))
    assert abs(emp.frequency((3, 1)) - 1 / 3) < 0.01
    assert abs(emp.frequency((4,)) - 1 / 4) < 0.01
    assert elapsed < 300


@pytest.mark.criterion("C8 n=4, W=1e6: TV to uniform at k=200 < 0.02 and below k=2")
def test_c8_mixing(criterion):
    t = time.perf_counter()
    tv2 = tv_distance_uniform(WalkConfig(4, 2, 10**6, SEED))
    tv200 = tv_distance_uniform(WalkConfig(4, 200, 10**6, SEED))
    elapsed = time.perf_counter() - t
    criterion["detail"] = f"{elapsed:.1f}s tv(2)={tv2:.4f} tv(200)={tv200:.4f}"
    assert tv200 < 0.02
    assert tv200 < tv2
    assert elapsed < 300


def _payload(path):
    data = json.loads(path.read_text())
    data["manifest"].pop("timestamp")
    return data


@pytest.mark.criterion("C9 simulate/converge payloads bit-identical for 1, 2, 8 threads")
def test_c9_determinism(criterion, tmp_path, capsys):
    t = time.perf_counter()
    sims, curves = [], []
    for threads in (1, 2, 8):
        sim = tmp_path / f"sim{threads}.json"
        assert main(["simulate", "--n", "5", "--k", "100", "--walks", "300000", "--seed", "11",
                     "--out", str(sim), "--threads", str(threads)]) == 0
        sims.append(_payload(sim))
        cur = tmp_path / f"cur{threads}.csv"
        assert main(["converge", "--n", "4", "--steps", "0,1,2,10,100", "--walks", "100000", "--seed", "11",
                     "--out", str(cur), "--threads", str(threads)]) == 0
        curves.append((cur.read_bytes(), _payload(tmp_path / f"cur{threads}.csv.manifest.json")))
    capsys.readouterr()
    elapsed = time.perf_counter() - t
    criterion["detail"] = f"{elapsed:.1f}s"
    assert sims[0] == sims[1] == sims[2]
    assert curves[0] == curves[1] == curves[2]
    assert elapsed < 120
