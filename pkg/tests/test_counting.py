import pytest
from hypothesis import given, settings, strategies as st
from math import comb

from treematch import (
    OrderTooSmall,
    TooLargeForOracle,
    brute_matchings,
    build_tree,
    count_apm,
    count_k_sapm,
    count_maximal_matchings,
    count_sapm,
    double_broom,
    fib,
    has_perfect_matching,
    hosoya_index,
    matching_profile,
    maximal_matching_degree_sums,
    path,
    special_spider,
    spider,
    star,
    wide_spider,
)
from treematch.counting import maximal_matchings, uncovered_vertices
from conftest import all_trees, prufer_tree


def brute_profile(t):
    prof = [0] * (t.n // 2 + 1)
    for m in brute_matchings(t):
        prof[len(m)] += 1
    return tuple(prof)


def test_profile_examples():
    assert matching_profile(path(4)) == (1, 3, 1)
    assert matching_profile(path(10))[3] == 35
    assert matching_profile(star(5))[2] == 0


def test_profile_invariants_all_small_trees():
    for n in range(2, 9):
        for t in all_trees(n):
            prof = matching_profile(t)
            assert prof[0] == 1
            assert prof[1] == n - 1
            assert sum(prof) == hosoya_index(t)
            assert prof == brute_profile(t)


def test_brute_matchings_examples():
    assert len(brute_matchings(path(3))) == 3
    assert len(brute_matchings(path(5))) == 8
    assert len(brute_matchings(star(4))) == 4
    with pytest.raises(TooLargeForOracle):
        brute_matchings(path(27))


def test_perfect_matching():
    ok, m = has_perfect_matching(path(4))
    assert ok and m == frozenset({(0, 1), (2, 3)})
    assert has_perfect_matching(star(4)) == (False, None)
    assert has_perfect_matching(path(5)) == (False, None)
    # unique when it exists: the brute list contains exactly one
    for n in (2, 4, 6, 8):
        for t in all_trees(n):
            perfect = [m for m in brute_matchings(t) if 2 * len(m) == n]
            ok, m = has_perfect_matching(t)
            assert ok == (len(perfect) == 1)
            assert len(perfect) <= 1
            if ok:
                assert m == perfect[0]


def test_apm_examples():
    assert count_apm(spider(9)) == 5
    assert count_apm(path(6)) == 6  # = 6*8/8, the stated maximum at n=6
    assert count_apm(path(4)) == 3 and count_apm(star(4)) == 3


def test_sapm_examples():
    assert count_k_sapm(spider(9), 1) == 4
    assert count_k_sapm(wide_spider(12), 2) == 6
    assert count_k_sapm(path(2), 2) == 1  # the empty matching
    assert count_sapm(path(2)) == 1
    with pytest.raises(OrderTooSmall):
        count_sapm(build_tree(1, []))


def test_sapm_parity_zero():
    for t in all_trees(7):
        assert count_k_sapm(t, 2) == 0
    for t in all_trees(8):
        assert count_k_sapm(t, 1) == 0
        assert count_k_sapm(t, 3) == 0


def test_maximal_examples():
    assert count_maximal_matchings(path(5)) == 3
    for n in range(2, 9):
        assert count_maximal_matchings(star(n)) == n - 1
    assert count_maximal_matchings(special_spider(9)) == 5
    assert count_maximal_matchings(build_tree(1, [])) == 1


def test_degree_sums():
    assert maximal_matching_degree_sums(star(4)) == [4, 4, 4]
    sums = maximal_matching_degree_sums(double_broom(2, 2))
    assert min(sums) == 6  # central edge hits the order exactly
    assert all(s > 6 for s in maximal_matching_degree_sums(path(6)))
    with pytest.raises(OrderTooSmall):
        maximal_matching_degree_sums(build_tree(1, []))


def test_oracle_equivalence_order_nine():
    leaves_of = lambda t: set(t.leaves())
    for t in all_trees(9):
        ms = brute_matchings(t)
        assert matching_profile(t) == brute_profile(t)
        assert count_apm(t) == sum(1 for m in ms if len(m) == 4)
        lv = leaves_of(t)
        for k in (1, 3):
            want = sum(
                1 for m in ms if 2 * len(m) == 9 - k and uncovered_vertices(t, m) <= lv
            )
            assert count_k_sapm(t, k) == want
        maxes = maximal_matchings(t)
        assert count_maximal_matchings(t) == len(maxes)
        for m in maxes:
            unc = uncovered_vertices(t, m)
            assert all(
                not (u in unc and v in unc) for u, v in t.edges()
            )


def test_fib_convention():
    assert [fib(n) for n in range(1, 8)] == [1, 2, 3, 5, 8, 13, 21]
    for n in range(1, 20):
        assert hosoya_index(path(n)) == fib(n)


def test_m2_identity():
    for n in range(2, 10):
        for t in all_trees(n):
            prof = matching_profile(t)
            m2 = prof[2] if len(prof) > 2 else 0
            assert m2 == comb(n - 1, 2) - sum(comb(t.degree(v), 2) for v in range(n))


def test_min_maximal_value_small():
    for n in range(2, 10):
        assert min(count_maximal_matchings(t) for t in all_trees(n)) == (n + 1) // 2


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_random_tree_counting_properties(data):
    n = data.draw(st.integers(min_value=2, max_value=10))
    seq = tuple(data.draw(st.integers(0, n - 1)) for _ in range(max(0, n - 2)))
    t = prufer_tree(seq, n)
    prof = matching_profile(t)
    assert prof[0] == 1 and prof[1] == n - 1
    assert sum(prof) == len(brute_matchings(t))
    apm = count_apm(t)
    assert apm <= (n + 1) // 2 if n % 2 else apm <= n * (n + 2) // 8
    assert count_maximal_matchings(t) >= (n + 1) // 2
