"""Immutable tree representation, validation, and structural queries.

Vertices are dense integers 0..n-1.  All semantics that must survive a
relabeling go through :func:`canonical_code`, an AHU-style encoding rooted
at the centroid (or the smaller of the two codes for bicentroidal trees),
so two trees are isomorphic exactly when their codes are equal.
"""

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import NotATree


@dataclass(frozen=True)
class Tree:
    """Connected acyclic simple graph on vertices 0..n-1."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if len(self.adj[v]) == 1]

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((len(nbrs) for nbrs in self.adj), reverse=True))

    def __repr__(self) -> str:  # keep small: trees can be large
        return f"Tree(n={self.n})"


def build_tree(n: int, edges: Iterable[tuple[int, int]]) -> Tree:
    """Validate an edge list and return the tree it describes.

    Raises NotATree on a self-loop, duplicate edge, out-of-range endpoint,
    wrong edge count, or disconnection (which, at n-1 edges, also covers
    cycles).
    """
    if n < 1:
        raise NotATree("a tree needs at least one vertex")
    edge_list = [(int(u), int(v)) for u, v in edges]
    if len(edge_list) != n - 1:
        raise NotATree(f"expected {n - 1} edges for order {n}, got {len(edge_list)}")
    adj: list[list[int]] = [[] for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise NotATree(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise NotATree(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise NotATree(f"duplicate edge {key}")
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    # n-1 edges and connectivity together force acyclicity.
    reached = 1
    visited = bytearray(n)
    visited[0] = 1
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if not visited[v]:
                visited[v] = 1
                reached += 1
                queue.append(v)
    if reached != n:
        raise NotATree(f"graph is disconnected ({reached} of {n} vertices reached)")
    return Tree(n, tuple(tuple(sorted(nbrs)) for nbrs in adj))


def _bfs_farthest(t: Tree, src: int) -> tuple[int, list[int]]:
    """Return (farthest vertex, parent array) for a BFS from src."""
    parent = [-1] * t.n
    dist = [-1] * t.n
    dist[src] = 0
    queue = deque([src])
    far = src
    while queue:
        u = queue.popleft()
        for v in t.adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                parent[v] = u
                queue.append(v)
                # deterministic tie-break: first reached at max distance wins
                if dist[v] > dist[far]:
                    far = v
    return far, parent


def diameter(t: Tree) -> tuple[int, list[int]]:
    """Length of a longest path (in edges) plus one path realizing it."""
    if t.n == 1:
        return 0, [0]
    a, _ = _bfs_farthest(t, 0)
    b, parent = _bfs_farthest(t, a)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    path.reverse()
    return len(path) - 1, path


def one_subdivision(t: Tree) -> Tree:
    """Replace every edge uv by u-x-v through a fresh vertex x.

    Original vertices keep their ids; subdividers are n, n+1, ... in the
    sorted-edge order.
    """
    edges = []
    nxt = t.n
    for u, v in t.edges():
        edges.append((u, nxt))
        edges.append((nxt, v))
        nxt += 1
    return build_tree(2 * t.n - 1, edges)


def _bfs_order(t: Tree, root: int) -> tuple[list[int], list[int]]:
    parent = [-1] * t.n
    order = [root]
    parent[root] = root
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in t.adj[u]:
            if parent[v] < 0:
                parent[v] = u
                order.append(v)
                queue.append(v)
    parent[root] = -1
    return order, parent


def centroids(t: Tree) -> list[int]:
    """The one or two vertices minimizing the largest component after removal."""
    if t.n == 1:
        return [0]
    order, parent = _bfs_order(t, 0)
    size = [1] * t.n
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    best_val = t.n + 1
    best: list[int] = []
    for v in range(t.n):
        worst = t.n - size[v]
        for c in t.adj[v]:
            if c != parent[v]:
                worst = max(worst, size[c])
        if worst < best_val:
            best_val = worst
            best = [v]
        elif worst == best_val:
            best.append(v)
    return sorted(best)


def rooted_code(t: Tree, root: int) -> str:
    """AHU parenthesis string of t rooted at root (children sorted)."""
    order, parent = _bfs_order(t, root)
    code: list[str] = [""] * t.n
    for v in reversed(order):
        kids = sorted(code[c] for c in t.adj[v] if c != parent[v])
        code[v] = "(" + "".join(kids) + ")"
    return code[root]


def canonical_code(t: Tree) -> str:
    """Order-invariant encoding; equal codes <=> isomorphic trees."""
    cents = centroids(t)
    if len(cents) == 1:
        return rooted_code(t, cents[0])
    return min(rooted_code(t, cents[0]), rooted_code(t, cents[1]))


def isomorphic(t1: Tree, t2: Tree) -> bool:
    if t1.n != t2.n or t1.degree_sequence() != t2.degree_sequence():
        return False
    return canonical_code(t1) == canonical_code(t2)


def format_edge_list(t: Tree) -> str:
    """Serialize to the text format: first line n, then one 'u v' per edge."""
    lines = [str(t.n)]
    lines.extend(f"{u} {v}" for u, v in sorted(t.edges()))
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Tree:
    """Parse the edge-list text format produced by :func:`format_edge_list`."""
    tokens = [line.strip() for line in text.splitlines() if line.strip()]
    if not tokens:
        raise NotATree("empty input")
    try:
        n = int(tokens[0])
    except ValueError as exc:
        raise NotATree(f"first line must be the vertex count, got {tokens[0]!r}") from exc
    edges = []
    for line in tokens[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise NotATree(f"expected 'u v' on edge line, got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise NotATree(f"non-integer endpoint in {line!r}") from exc
    return build_tree(n, edges)
