"""Shared test helpers: cached enumerations and independent oracles."""

import heapq
from functools import lru_cache
from itertools import permutations, product

from treematch import Tree, build_tree, enumerate_trees


@lru_cache(maxsize=None)
def all_trees(n: int) -> tuple[Tree, ...]:
    """All isomorphism classes of order n, cached per session."""
    return tuple(enumerate_trees(n))


def prufer_tree(seq: tuple[int, ...], n: int) -> Tree:
    """Decode a sequence in {0..n-1}^(n-2) into a labeled tree."""
    if n == 1:
        return build_tree(1, [])
    if n == 2:
        return build_tree(2, [(0, 1)])
    deg = [1] * n
    for s in seq:
        deg[s] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for s in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, s))
        deg[s] -= 1
        if deg[s] == 1:
            heapq.heappush(leaves, s)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return build_tree(n, edges)


def all_prufer_trees(n: int):
    """Every labeled tree of order n, by exhausting Prüfer sequences."""
    if n <= 2:
        yield prufer_tree((), n)
        return
    for seq in product(range(n), repeat=n - 2):
        yield prufer_tree(seq, n)


def brute_isomorphic(t1: Tree, t2: Tree) -> bool:
    """Permutation-search isomorphism test, independent of canonical codes."""
    if t1.n != t2.n or t1.degree_sequence() != t2.degree_sequence():
        return False
    e2 = {frozenset(e) for e in t2.edges()}
    degs1 = [t1.degree(v) for v in range(t1.n)]
    degs2 = [t2.degree(v) for v in range(t2.n)]
    for perm in permutations(range(t1.n)):
        if any(degs1[v] != degs2[perm[v]] for v in range(t1.n)):
            continue
        if all(frozenset((perm[u], perm[v])) in e2 for u, v in t1.edges()):
            return True
    return False


def relabel(t: Tree, perm: list[int]) -> Tree:
    return build_tree(t.n, [(perm[u], perm[v]) for u, v in t.edges()])
