import pytest

from treematch import (
    BadFamilyParams,
    SpecParseError,
    balanced_double_broom,
    canonical_code,
    diameter,
    double_broom,
    golden_dense,
    golden_sparse,
    isomorphic,
    k_spider_wheel,
    make_family,
    one_subdivision,
    parse_family_spec,
    parse_family_tree,
    path,
    special_spider,
    spider,
    spider_chain,
    spider_trio,
    star,
    wide_spider,
)
from treematch.families import FamilySpec


def test_spider_degree_sequence():
    assert spider(9).degree_sequence() == (4, 2, 2, 2, 2, 1, 1, 1, 1)
    assert isomorphic(spider(3), path(3))
    assert isomorphic(spider(4), path(4))


def test_spider_is_subdivided_star():
    for n in (5, 7, 9, 11):
        assert isomorphic(spider(n), one_subdivision(star((n + 1) // 2)))


def test_special_spider_small():
    assert isomorphic(special_spider(4), star(4))
    assert isomorphic(special_spider(5), double_broom(1, 2))
    assert special_spider(9).n == 9
    # odd special spider: even spider plus one more pendant on the center
    t = special_spider(7)
    assert sorted(t.degree_sequence(), reverse=True)[0] == 4


def test_double_broom():
    t = double_broom(4, 5)
    assert t.n == 11
    assert diameter(t)[0] == 3
    assert t.degree(0) == 5 and t.degree(1) == 6
    assert isomorphic(balanced_double_broom(11), double_broom(4, 5))
    assert isomorphic(double_broom(1, 1), path(4))


def test_wide_spider():
    t = wide_spider(12)
    assert t.n == 12
    assert len(t.leaves()) == 5
    degs = t.degree_sequence()
    assert 4 in degs and 3 in degs
    # matches subdividing the pendant edges of the balanced double broom
    base = balanced_double_broom(7)
    edges = list(base.edges())
    rebuilt = []
    nxt = base.n
    for u, v in edges:
        if base.degree(u) == 1 or base.degree(v) == 1:
            rebuilt += [(u, nxt), (nxt, v)]
            nxt += 1
        else:
            rebuilt.append((u, v))
    from treematch import build_tree

    assert isomorphic(t, build_tree(nxt, rebuilt))


def test_spider_trio_orders():
    assert spider_trio(3, 2, 0).n == 14
    assert spider_trio(6, 6, 0).n == 28
    assert spider_trio(4, 4, 4).n == 28
    assert isomorphic(spider_trio(1, 1, 1), k_spider_wheel(2, 1))


def test_wheel_order():
    assert k_spider_wheel(7, 5).n == 8 * 11 + 1
    assert k_spider_wheel(2, 3).n == 22


def test_chain_order_and_degenerates():
    assert spider_chain([2, 1, 0, 3]).n == 4 + 2 * 6
    assert isomorphic(spider_chain([2]), spider(5))
    assert isomorphic(spider_chain([0, 0]), path(2))


def test_golden_families():
    for s in range(2, 7):
        t = golden_dense(s)
        assert t.n == 3 * s + 2
        spine_degs = sorted(t.degree(v) for v in range(t.n) if t.degree(v) > 1)
        assert spine_degs == [4] * s
    for h in range(2, 7):
        t = golden_sparse(h)
        assert t.n == 7 * h + 1
        hubs = [v for v in range(t.n) if t.degree(v) == 7]
        assert len(hubs) == h
        others = {t.degree(v) for v in range(t.n) if t.degree(v) != 7}
        assert others <= {1, 2}


@pytest.mark.parametrize(
    "text,n",
    [
        ("spider:9", 9),
        ("st:3,2,0", 14),
        ("db:4,5", 11),
        ("bdb:10", 10),
        ("wide:8", 8),
        ("chain:1,1", 6),
        ("gdense:2", 8),
        ("gsparse:2", 15),
        ("subdiv:star:5", 9),
        ("subdiv:subdiv:path:2", 5),
    ],
)
def test_parse_family_tree(text, n):
    assert parse_family_tree(text).n == n


def test_parse_errors():
    with pytest.raises(SpecParseError):
        parse_family_spec("octopus:4")
    with pytest.raises(SpecParseError):
        parse_family_spec("spider:")
    with pytest.raises(SpecParseError):
        parse_family_spec("spider:nine")
    with pytest.raises(BadFamilyParams):
        make_family(FamilySpec("db", (4,)))
    with pytest.raises(BadFamilyParams):
        make_family(FamilySpec("wide", (7,)))
    with pytest.raises(BadFamilyParams):
        make_family(FamilySpec("gsparse", (1,)))


def test_spec_text_roundtrip():
    for text in ("spider:9", "st:3,2,0", "db:4,5", "chain:2,1,0"):
        spec = parse_family_spec(text)
        assert spec.text() == text
        assert parse_family_spec(spec.text()) == spec


def test_order_formulas_grid():
    for n in range(1, 12):
        assert path(n).n == n and star(n).n == n and spider(n).n == n
    for n in range(3, 12):
        assert special_spider(n).n == n
    for a in range(1, 5):
        for b in range(1, 5):
            assert double_broom(a, b).n == a + b + 2
    for a in range(0, 4):
        for b in range(0, 4):
            for c in range(0, 4):
                assert spider_trio(a, b, c).n == 2 * (a + b + c) + 4
    for k in range(1, 4):
        for a in range(1, 4):
            assert k_spider_wheel(k, a).n == (k + 1) * (2 * a + 1) + 1
    for n in range(8, 17, 2):
        assert wide_spider(n).n == n


def test_canonical_labels_only():
    # generated labelings are deterministic
    assert canonical_code(spider_trio(2, 1, 0)) == canonical_code(spider_trio(2, 1, 0))
    assert make_family(FamilySpec("path", (5,))) == path(5)
