"""Exact matching statistics on trees.

Everything returns plain Python integers, which are arbitrary precision;
size profiles overflow 64 bits well within reachable orders.  Each counting
routine has a brute-force counterpart in the test suite built on
:func:`brute_matchings`.
"""

from itertools import combinations
from typing import Iterable

from .errors import OrderTooSmall, TooLargeForOracle
from .trees import Tree, _bfs_order, diameter

_ORACLE_CAP = 26


def fib(n: int) -> int:
    """Matching count of the n-vertex path: fib(1)=1, fib(2)=2, ..."""
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def _poly_add(p: list[int], q: list[int]) -> list[int]:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return out


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def matching_profile(t: Tree) -> tuple[int, ...]:
    """Exact (m_0, m_1, ..., m_{floor(n/2)}): matchings counted by size.

    Rooted DP with two generating polynomials per vertex (vertex free /
    vertex matched into its subtree); O(n^2) coefficient operations.
    """
    order, parent = _bfs_order(t, 0)
    free: list[list[int]] = [[] for _ in range(t.n)]
    used: list[list[int]] = [[] for _ in range(t.n)]
    for v in reversed(order):
        f, u = [1], [0]
        for c in t.adj[v]:
            if c == parent[v]:
                continue
            total_c = _poly_add(free[c], used[c])
            new_u = _poly_add(_poly_mul(u, total_c), [0] + _poly_mul(f, free[c]))
            f = _poly_mul(f, total_c)
            u = new_u
        free[v], used[v] = f, u
    profile = _poly_add(free[0], used[0])
    profile += [0] * (t.n // 2 + 1 - len(profile))
    return tuple(profile)


def hosoya_index(t: Tree) -> int:
    """Total number of matchings, empty matching included."""
    return sum(matching_profile(t))


def brute_matchings(t: Tree) -> list[frozenset[tuple[int, int]]]:
    """Every matching of t, the empty one included.  Guarded oracle."""
    if t.n > _ORACLE_CAP:
        raise TooLargeForOracle(f"brute enumeration capped at order {_ORACLE_CAP}")
    edges = list(t.edges())
    out: list[frozenset[tuple[int, int]]] = []

    def extend(i: int, used: set[int], chosen: list[tuple[int, int]]) -> None:
        if i == len(edges):
            out.append(frozenset(chosen))
            return
        extend(i + 1, used, chosen)
        u, v = edges[i]
        if u not in used and v not in used:
            chosen.append((u, v))
            extend(i + 1, used | {u, v}, chosen)
            chosen.pop()

    extend(0, set(), [])
    return out


def _perfect_matching_avoiding(t: Tree, removed: frozenset[int]) -> list[tuple[int, int]] | None:
    """Unique perfect matching of t minus `removed`, or None.

    Leaf forcing: a degree-1 vertex must match its only remaining neighbor.
    """
    alive_count = t.n - len(removed)
    if alive_count % 2:
        return None
    if alive_count == 0:
        return []
    alive = bytearray(1 for _ in range(t.n))
    for v in removed:
        alive[v] = 0
    deg = [0] * t.n
    stack = []
    for v in range(t.n):
        if alive[v]:
            deg[v] = sum(1 for w in t.adj[v] if alive[w])
            if deg[v] <= 1:
                stack.append(v)
    pairs: list[tuple[int, int]] = []
    while stack:
        u = stack.pop()
        if not alive[u]:
            continue
        if deg[u] == 0:
            return None  # isolated vertex cannot be covered
        partner = -1
        for w in t.adj[u]:
            if alive[w]:
                partner = w
                break
        alive[u] = alive[partner] = 0
        pairs.append((u, partner) if u < partner else (partner, u))
        for w in t.adj[partner]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] <= 1:
                    stack.append(w)
    return pairs if 2 * len(pairs) == alive_count else None


def has_perfect_matching(t: Tree) -> tuple[bool, frozenset[tuple[int, int]] | None]:
    """Decide perfect-matching existence; the matching is unique when it exists."""
    pairs = _perfect_matching_avoiding(t, frozenset())
    if pairs is None:
        return False, None
    return True, frozenset(pairs)


def count_apm(t: Tree) -> int:
    """Matchings covering all but one vertex (odd n) or two vertices (even n)."""
    profile = matching_profile(t)
    return profile[(t.n - 1) // 2 if t.n % 2 else (t.n - 2) // 2]


def count_k_sapm(t: Tree, k: int) -> int:
    """Matchings whose uncovered vertices are exactly k chosen leaves.

    Zero whenever n - k is odd.  Iterates k-subsets of leaves and applies
    the linear-time perfect-matching test to the rest.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if (t.n - k) % 2:
        return 0
    leaves = t.leaves()
    if len(leaves) < k:
        return 0
    count = 0
    for subset in combinations(leaves, k):
        if _perfect_matching_avoiding(t, frozenset(subset)) is not None:
            count += 1
    return count


def count_sapm(t: Tree) -> int:
    """Strong almost-perfect matchings: k=1 avoided leaf for odd n, k=2 for even."""
    if t.n == 1:
        raise OrderTooSmall("strong almost-perfect matchings undefined at order 1")
    return count_k_sapm(t, 1 if t.n % 2 else 2)


def count_maximal_matchings(t: Tree) -> int:
    """Matchings whose uncovered vertices form an independent set.

    Three-state rooted DP: vertex covered; vertex uncovered with every child
    covered; vertex uncovered with an uncovered child (forcing a match to
    the parent).
    """
    order, parent = _bfs_order(t, 0)
    state: list[tuple[int, int, int]] = [(0, 0, 0)] * t.n
    for v in reversed(order):
        cov, open_, pend = 0, 1, 0
        for c in t.adj[v]:
            if c == parent[v]:
                continue
            c_cov, c_open, c_pend = state[c]
            cov, open_, pend = (
                cov * (c_cov + c_open) + (open_ + pend) * (c_open + c_pend),
                open_ * c_cov,
                pend * (c_cov + c_open) + open_ * c_open,
            )
        state[v] = (cov, open_, pend)
    cov, open_, _ = state[0]
    return cov + open_


def maximal_matchings(t: Tree) -> list[frozenset[tuple[int, int]]]:
    """All maximal matchings, by filtering the brute oracle (guarded)."""
    out = []
    for m in brute_matchings(t):
        covered = set()
        for u, v in m:
            covered.add(u)
            covered.add(v)
        if all(u in covered or v in covered for u, v in t.edges()):
            out.append(m)
    return out


def maximal_matching_degree_sums(t: Tree) -> list[int]:
    """Sum of endpoint degrees over each maximal matching (sorted multiset)."""
    if t.n < 2:
        raise OrderTooSmall("degree sums need order >= 2")
    sums = []
    for m in maximal_matchings(t):
        sums.append(sum(t.degree(u) + t.degree(v) for u, v in m))
    return sorted(sums)


def uncovered_vertices(t: Tree, matching: Iterable[tuple[int, int]]) -> set[int]:
    covered = set()
    for u, v in matching:
        covered.add(u)
        covered.add(v)
    return set(range(t.n)) - covered


def central_edge(t: Tree) -> tuple[int, int] | None:
    """The unique internal edge of a diameter-3 tree, else None."""
    d, _ = diameter(t)
    if d != 3:
        return None
    internal = [v for v in range(t.n) if t.degree(v) > 1]
    u, v = sorted(internal)
    return (u, v)
