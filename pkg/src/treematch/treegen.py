"""Enumeration of all free (unlabeled) trees of a given order.

Canonical rooted level sequences are generated in lexicographically
decreasing order by the classic successor rule; a sequence is kept when its
root is a center of the underlying free tree, with a deterministic
tie-break between the two rootings of bicentral trees.  Each isomorphism
class is therefore produced exactly once, in a fixed order, which makes
streams restartable and stride-partitionable for parallel scans.
"""

import os
from dataclasses import dataclass
from typing import Iterator

from .errors import OrderTooLarge
from .trees import Tree

DEFAULT_ORDER_CAP = 22
_CAP_ENV = "TREEMATCH_CAP"


def _order_cap(override: int | None) -> int:
    if override is not None:
        return override
    env = os.environ.get(_CAP_ENV)
    return int(env) if env else DEFAULT_ORDER_CAP


def _next_canonical(seq: list[int]) -> list[int] | None:
    """Successor of a canonical rooted level sequence (None after the star)."""
    p = len(seq) - 1
    while p >= 0 and seq[p] <= 1:
        p -= 1
    if p <= 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = list(seq)
    d = p - q
    for i in range(p, len(out)):
        out[i] = out[i - d]
    return out


def _is_center_rooted(seq: list[int]) -> bool:
    """Keep exactly one rooted representative per free tree.

    The first (deepest) root subtree has depth h1 and the tree minus it has
    depth h2.  The root is a center iff h2 >= h1 - 1; for bicentral trees
    (h2 == h1 - 1) the rooting whose hanging half is the smaller, then
    lexicographically smaller, of the two halves is the canonical one.
    """
    n = len(seq)
    m = n
    for i in range(2, n):
        if seq[i] == 1:
            m = i
            break
    h1 = max(seq[1:m])
    h2 = max(seq[m:], default=0)
    if h2 == h1:
        return True
    if h2 < h1 - 1:
        return False
    left = [seq[i] - 1 for i in range(1, m)]
    rest = [0] + seq[m:]
    if len(left) != len(rest):
        return len(left) < len(rest)
    return left <= rest


def _seq_to_tree(seq: list[int]) -> Tree:
    n = len(seq)
    adj: list[list[int]] = [[] for _ in range(n)]
    stack = [0]  # stack[d] = latest vertex seen at depth d
    for i in range(1, n):
        d = seq[i]
        parent = stack[d - 1]
        adj[parent].append(i)
        adj[i].append(parent)
        if len(stack) > d:
            stack[d] = i
            del stack[d + 1:]
        else:
            stack.append(i)
    return Tree(n, tuple(tuple(sorted(nbrs)) for nbrs in adj))


def _free_sequences(n: int) -> Iterator[list[int]]:
    if n == 1:
        yield [0]
        return
    seq: list[int] | None = list(range(n))  # path rooted at an end: lex maximum
    while seq is not None:
        if _is_center_rooted(seq):
            yield seq
        seq = _next_canonical(seq)


@dataclass(frozen=True)
class TreeStream:
    """Restartable stream over the free trees of one order.

    ``offset``/``step`` select a stride of the fixed enumeration order, so
    partitions are disjoint and their union is the full stream.
    """

    n: int
    offset: int = 0
    step: int = 1

    def __iter__(self) -> Iterator[Tree]:
        idx = 0
        for seq in _free_sequences(self.n):
            if idx >= self.offset and (idx - self.offset) % self.step == 0:
                yield _seq_to_tree(seq)
            idx += 1

    def __len__(self) -> int:
        count = 0
        for idx, _ in enumerate(_free_sequences(self.n)):
            if idx >= self.offset and (idx - self.offset) % self.step == 0:
                count += 1
        return count


def enumerate_trees(n: int, cap: int | None = None) -> TreeStream:
    """Stream every isomorphism class of trees on n vertices exactly once."""
    if n < 1:
        raise OrderTooLarge("order must be at least 1")
    limit = _order_cap(cap)
    if n > limit:
        raise OrderTooLarge(f"order {n} exceeds the enumeration cap {limit}")
    return TreeStream(n)


def partition_stream(stream: TreeStream, parts: int) -> list[TreeStream]:
    """Split a stream into ``parts`` disjoint sub-streams covering it."""
    if parts < 1:
        raise ValueError("parts must be >= 1")
    return [
        TreeStream(stream.n, stream.offset + i * stream.step, stream.step * parts)
        for i in range(parts)
    ]
