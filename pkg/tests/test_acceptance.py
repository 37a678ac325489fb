"""Acceptance suite: every stated criterion at its stated tolerance.

Run with ``pytest tests/test_acceptance.py -v`` for one pass/fail line per
criterion.  Expected wall time is a few minutes; the order-18 performance
criterion dominates.
"""

import time
from fractions import Fraction
from math import comb

import mpmath
import numpy as np

from treematch import (
    GoldenValue,
    WeightFamily,
    balanced_double_broom,
    brute_matchings,
    canonical_code,
    count_apm,
    count_k_sapm,
    count_maximal_matchings,
    count_sapm,
    double_broom,
    enumerate_trees,
    f_table,
    fib,
    golden_sparse,
    golden_value,
    has_perfect_matching,
    hosoya_index,
    make_family,
    matching_profile,
    one_subdivision,
    optimize_leaf_distribution,
    path,
    run_theorem_battery,
    scan,
    special_spider,
    spider,
    spider_trio,
    star,
    weighted_hosoya_symbolic,
    wide_spider,
)
from treematch.counting import maximal_matchings, uncovered_vertices, central_edge
from treematch.hosoya import _fib_pair
from treematch.spideropt import ChainObjective, chain_count_polynomial
from conftest import all_trees


def _report(criterion: str, passed: bool = True) -> None:
    print(f"[{'PASS' if passed else 'FAIL'}] {criterion}")
    assert passed


def test_c01_oracle_equivalence():
    """Criterion 1: counting DPs equal brute enumeration for every tree n <= 10."""
    started = time.perf_counter()
    for n in range(1, 11):
        for t in all_trees(n):
            ms = brute_matchings(t)
            profile = [0] * (n // 2 + 1)
            for m in ms:
                profile[len(m)] += 1
            assert matching_profile(t) == tuple(profile)
            want_apm = profile[(n - 1) // 2] if n % 2 else profile[(n - 2) // 2]
            assert count_apm(t) == want_apm
            leaves = set(t.leaves())
            for k in (1, 2, 3):
                want = sum(
                    1 for m in ms
                    if 2 * len(m) == n - k and uncovered_vertices(t, m) <= leaves
                )
                assert count_k_sapm(t, k) == want
            covered_ok = 0
            for m in ms:
                unc = uncovered_vertices(t, m)
                if all(not (u in unc and v in unc) for u, v in t.edges()):
                    covered_ok += 1
            assert count_maximal_matchings(t) == covered_ok
    elapsed = time.perf_counter() - started
    assert elapsed < 60
    _report(f"criterion 1: oracle equivalence n<=10 ({elapsed:.1f}s)")


def test_c02_odd_apm_scan():
    """Criterion 2: odd almost-perfect maximum and its subdivision argmax."""
    started = time.perf_counter()
    for n in range(5, 16, 2):
        rep = scan(n, "apm", "max")
        assert rep.value == (n + 1) // 2, f"n={n}"
        expected = {
            canonical_code(one_subdivision(t)) for t in all_trees((n + 1) // 2)
        }
        assert set(rep.argmax) == expected, f"n={n}"
    elapsed = time.perf_counter() - started
    assert elapsed < 300
    _report(f"criterion 2: odd-order APM maxima ({elapsed:.1f}s)")


def test_c03_even_apm_scan():
    """Criterion 3: even almost-perfect maximum n(n+2)/8 with path argmax."""
    for n in range(4, 17, 2):
        rep = scan(n, "apm", "max")
        assert rep.value == n * (n + 2) // 8, f"n={n}"
        expected = {canonical_code(path(n))}
        if n == 4:
            expected.add(canonical_code(star(4)))
        assert set(rep.argmax) == expected, f"n={n}"
    _report("criterion 3: even-order APM maxima")


def test_c04_fixed_size_scan():
    """Criterion 4: m_k maximum C(n-k, k) with the path unique."""
    for k in (2, 3, 4):
        for n in range(2 * k + 2, 17):
            rep = scan(n, f"mk:{k}", "max")
            assert rep.value == comb(n - k, k), f"n={n} k={k}"
            assert rep.argmax == (canonical_code(path(n)),), f"n={n} k={k}"
    _report("criterion 4: fixed-size matching maxima")


def test_c05_sapm_theorems():
    """Criterion 5: strong-APM maxima (odd, perfect-matching, general even)."""
    started = time.perf_counter()
    # odd orders
    for n in range(5, 16, 2):
        rep = scan(n, "sapm", "max")
        assert rep.value == (n - 1) // 2, f"n={n}"
        if n == 5:
            expected = {canonical_code(path(5)), canonical_code(double_broom(1, 2))}
        else:
            expected = {canonical_code(spider(n))}
        assert set(rep.argmax) == expected, f"n={n}"
    # even orders restricted to trees with a perfect matching
    from treematch import build_tree

    for n in range(2, 17, 2):
        best, codes = None, set()
        for t in enumerate_trees(n):
            if not has_perfect_matching(t)[0]:
                continue
            val = count_sapm(t)
            if best is None or val > best:
                best, codes = val, {canonical_code(t)}
            elif val == best:
                codes.add(canonical_code(t))
        assert best == max(1, (n - 2) // 2, (n - 2) ** 2 // 16), f"n={n}"
        expected = set()
        if n <= 10:
            for t in all_trees(n // 2):
                edges = list(t.edges()) + [(v, t.n + v) for v in range(t.n)]
                expected.add(canonical_code(build_tree(n, edges)))
        if n >= 10:
            expected.add(canonical_code(wide_spider(n)))
        assert codes == expected, f"n={n}"
    # the general even-order table through n=16
    for n in range(2, 17, 2):
        value, fams = f_table(n)
        rep = scan(n, "sapm", "max")
        assert rep.value == value, f"n={n}"
        assert set(rep.argmax) == {canonical_code(make_family(s)) for s in fams}, f"n={n}"
    elapsed = time.perf_counter() - started
    assert elapsed < 600
    _report(f"criterion 5: strong-APM maxima ({elapsed:.1f}s)")


def test_c06_large_trio_counts():
    """Criterion 6: spider-trio counts beyond scan range."""
    assert count_sapm(spider_trio(6, 6, 0)) == 48
    assert count_sapm(spider_trio(4, 4, 4)) == 48
    assert 48 == 24**2 // 12
    for n in range(30, 61, 2):
        t = make_family(f_table(n)[1][0])
        assert t.n == n
        assert count_sapm(t) == (n - 4) ** 2 // 12, f"n={n}"
    _report("criterion 6: balanced spider-trio values to n=60")


def test_c07_min_maximal_and_degree_sums():
    """Criterion 7: minimum maximal-matching counts and the degree-sum bound."""
    for n in range(2, 17):
        rep = scan(n, "maximal", "min")
        assert rep.value == (n + 1) // 2, f"n={n}"
        expected = {canonical_code(spider(n))}
        if n % 2 and n >= 3:
            expected.add(canonical_code(special_spider(n)))
        assert set(rep.argmax) == expected, f"n={n}"
    for n in range(2, 13):
        for t in all_trees(n):
            is_star = t.degree_sequence()[0] == n - 1
            central = central_edge(t)
            for m in maximal_matchings(t):
                s = sum(t.degree(u) + t.degree(v) for u, v in m)
                assert s >= n
                if s == n:
                    assert is_star or (central is not None and m == frozenset((central,)))
    _report("criterion 7: minimum maximal matchings and degree sums")


_C_GRID = (Fraction(1, 10), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(5))


def test_c08_star_minimizes_weighted():
    """Criterion 8: the star minimizes all four weighted indices on the grid."""
    for n in range(2, 11):
        star_code = canonical_code(star(n))
        star_syms = {
            fam: weighted_hosoya_symbolic(star(n), WeightFamily(fam))
            for fam in ("phi1", "phi2", "phi3", "phi4")
        }
        assert star_syms["phi1"].terms == {0: 1, n: n - 1}  # (n-1)c^n + 1 exactly
        for t in all_trees(n):
            is_star = canonical_code(t) == star_code
            for fam, star_sym in star_syms.items():
                sym = weighted_hosoya_symbolic(t, WeightFamily(fam))
                for c in _C_GRID:
                    if fam in ("phi1", "phi2"):
                        tv, sv = sym.evaluate(c), star_sym.evaluate(c)
                        assert tv >= sv
                        assert (tv == sv) == is_star
                    else:
                        with mpmath.workdps(40):
                            mc = mpmath.mpf(c.numerator) / c.denominator
                            tv, sv = sym.evaluate(mc), star_sym.evaluate(mc)
                        tol = 1e-9 * max(abs(sv), 1)
                        assert tv >= sv - tol
                        assert (abs(tv - sv) <= tol) == is_star
    _report("criterion 8: star minimality on the parameter grid")


def test_c09_large_c_maximizers():
    """Criterion 9: unique sufficiently-large-c maximizers via symbolic scans."""
    started = time.perf_counter()
    for n in range(7, 15, 2):
        rep = scan(n, "zsym:phi1", "max")
        assert rep.argmax == (canonical_code(spider(n)),), f"phi1 odd n={n}"
    for n in range(12, 15, 2):
        rep = scan(n, "zsym:phi1", "max")
        assert rep.argmax == (canonical_code(wide_spider(n)),), f"phi1 even n={n}"
    for n in range(6, 15):
        rep = scan(n, "zsym:phi2", "max")
        assert rep.argmax == (canonical_code(balanced_double_broom(n)),), f"phi2 n={n}"
    for fam in ("phi3", "phi4"):
        for n in range(4, 15):
            rep = scan(n, f"zsym:{fam}", "max")
            assert rep.argmax == (canonical_code(path(n)),), f"{fam} n={n}"
    elapsed = time.perf_counter() - started
    _report(f"criterion 9: large-parameter maximizers ({elapsed:.1f}s)")


SYM8 = (0, 1, 2, 3, 3, 2, 1, 0)
QUOTED_POLY = {
    (2, 2, 0, 0): 1, (2, 1, 1, 0): 2, (2, 1, 0, 1): 2, (2, 0, 0, 2): 1,
    (1, 1, 2, 0): 2, (1, 1, 1, 1): 4, (1, 0, 1, 2): 2, (0, 0, 2, 2): 1,
}


def test_c10_chain_optimizer():
    """Criterion 10: the symmetric 8-chain ratio and closed-form polynomial."""
    started = time.perf_counter()
    assert chain_count_polynomial(8, 4, groups=SYM8) == QUOTED_POLY
    res = optimize_leaf_distribution(8, 8, 4, mode="continuous", symmetric=True)
    exact = (27 / 16, 1.0, 9 / 16, 3 / 4)
    for got, want in zip(res.ratio, exact):
        assert abs(got - want) / want <= 1e-6
    obj = ChainObjective(QUOTED_POLY)
    x = np.array(res.profile[:4], dtype=float)
    grad = obj.gradient(x)
    h = 1e-5
    for i in range(4):
        e = np.zeros(4)
        e[i] = h
        fd = (obj.value(x + e) - obj.value(x - e)) / (2 * h)
        assert abs(fd - grad[i]) <= 1e-6 * max(1.0, abs(grad[i]))
    elapsed = time.perf_counter() - started
    assert elapsed < 60
    _report(f"criterion 10: chain optimizer and closed form ({elapsed:.1f}s)")


def test_c11a_golden_floor_constructions():
    """Criterion 11 (constructions): path weight equals its matching count;
    the sparse hub construction has no nonzero descriptor."""
    for n in range(1, 31):
        assert golden_value(path(n)) == GoldenValue(fib(n), 0)
    for h in range(2, 9):
        sym = weighted_hosoya_symbolic(golden_sparse(h), WeightFamily("golden16"))
        assert set(sym.terms) == {0}
        assert sym.terms[0] == hosoya_index(golden_sparse(h))
    _report("criterion 11a: golden-floor constructions")


def test_c11b_golden_floor_scan_neither_extremal():
    """Criterion 11 (scan): the stated order-12 claim, checked literally.

    The max-side exclusions hold, but the star is necessarily the unique
    minimizer at n=12: every weight is phi^0 = 1 there (the star's edge
    degree product is 11 < 16), so its index equals its matching count n,
    and n is the minimum matching count over all trees, uniquely attained
    by the star.  The assertion below is kept in its stated form and fails
    on that clause; see test_c11c for the order where the phenomenon holds.
    """
    top = scan(12, "golden", "max")
    bottom = scan(12, "golden", "min")
    p12, s12 = canonical_code(path(12)), canonical_code(star(12))
    assert p12 not in top.argmax
    assert s12 not in top.argmax
    assert p12 not in bottom.argmax
    assert s12 not in bottom.argmax, (
        "unattainable as stated: the order-12 golden-floor minimum is "
        f"{bottom.value} attained exactly by the star "
        "(all star weights are 1 below order 17, and the star uniquely "
        "minimizes the matching count)"
    )
    _report("criterion 11b: golden-floor scan at n=12")


def test_c11c_golden_floor_extremes_beyond_threshold():
    """Supplementary: from order 17 the star weight jumps to 16*phi^16 + 1
    and both the path and the star sit strictly inside the value range."""
    top = scan(17, "golden", "max")
    bottom = scan(17, "golden", "min")
    p17, s17 = canonical_code(path(17)), canonical_code(star(17))
    assert p17 not in top.argmax and p17 not in bottom.argmax
    assert s17 not in top.argmax and s17 not in bottom.argmax
    fp, fq = _fib_pair(16)
    assert golden_value(star(17)) == GoldenValue(1 + 16 * fp, 16 * fq)
    _report("criterion 11c: golden-floor extremes at n=17")


def test_c12_performance_envelope():
    """Criterion 12: battery timing, the order-18 parallel scan, and
    serial/parallel agreement."""
    started = time.perf_counter()
    report = run_theorem_battery(10)
    battery_elapsed = time.perf_counter() - started
    assert report.all_pass
    assert battery_elapsed < 120

    small_serial = scan(12, "apm", "max", threads=1)
    small_parallel = scan(12, "apm", "max", threads=4)
    assert small_serial.same_result(small_parallel)

    started = time.perf_counter()
    parallel = scan(18, "apm", "max", threads=4)
    parallel_elapsed = time.perf_counter() - started
    assert parallel.classes_scanned == 123867
    assert parallel_elapsed < 600

    serial = scan(18, "apm", "max", threads=1)
    assert serial.same_result(parallel)
    _report(
        f"criterion 12: battery {battery_elapsed:.1f}s, "
        f"order-18 scan {parallel_elapsed:.1f}s with 4 workers"
    )
