"""Weighted matching-count indices for vertex-degree-based edge weights.

Weight families (parameter c > 0 unless noted):

* ``phi1``: c^(i+j)        * ``phi3``: (i+j)^c
* ``phi2``: c^(i*j)        * ``phi4``: (i*j)^c
* ``golden16``: phi^(16*floor(i*j/16)) with phi the golden ratio
* ``table``: explicit symmetric rational map (i, j) -> weight

The symbolic form of an index is an exact formal sum of terms
``count * c^e`` (exponent form: phi1, phi2, golden16) or ``count * B^c``
(base form: phi3, phi4, table), which makes "for all sufficiently large c"
comparisons a total order on formal sums with no thresholds or floats.
golden16 additionally evaluates exactly in Z[phi], since phi^k is an
integer combination of 1 and phi.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import prod

import mpmath

from .errors import (
    MixedKinds,
    NonPositiveParameter,
    SpecParseError,
    TooLargeForSymbolic,
)
from .trees import Tree, _bfs_order

_EXPONENT_KINDS = {"phi1": lambda i, j: i + j,
                   "phi2": lambda i, j: i * j,
                   "golden16": lambda i, j: 16 * ((i * j) // 16)}
_BASE_KINDS = {"phi3": lambda i, j: i + j,
               "phi4": lambda i, j: i * j}
_SYMBOLIC_CAP = 64
_MP_DPS = 40

LESS, EQUAL, GREATER = -1, 0, 1


@dataclass
class WeightFamily:
    """One vertex-degree-based weight function, identified by kind."""

    kind: str
    c: Fraction | int | None = None
    table: dict[tuple[int, int], Fraction] | None = None

    def __post_init__(self):
        if self.kind not in _EXPONENT_KINDS and self.kind not in _BASE_KINDS and self.kind != "table":
            raise SpecParseError(f"unknown weight family {self.kind!r}")
        if self.kind == "table":
            if not self.table:
                raise SpecParseError("table family needs entries")
            if any(w <= 0 for w in self.table.values()):
                raise NonPositiveParameter("table weights must be positive")

    def table_weight(self, i: int, j: int) -> Fraction:
        key = (i, j) if i <= j else (j, i)
        try:
            return self.table[key]
        except KeyError:
            raise KeyError(f"table has no weight for degree pair {key}") from None


@dataclass(frozen=True)
class SymbolicIndex:
    """Exact formal sum over all matchings: descriptor -> count.

    kind "exponent": term count * c^descriptor; kind "base": count * descriptor^c.
    """

    kind: str
    terms: dict = field(compare=True)

    def total_count(self) -> int:
        return sum(self.terms.values())

    def max_descriptor(self):
        return max(self.terms)

    def evaluate(self, c):
        """Plug in a concrete c (exact when c and the terms allow it)."""
        if self.kind == "exponent":
            return sum(cnt * c ** e for e, cnt in self.terms.items())
        return sum(cnt * b ** c for b, cnt in self.terms.items())

    def __str__(self) -> str:
        parts = []
        for d in sorted(self.terms, reverse=True):
            cnt = self.terms[d]
            if self.kind == "exponent":
                parts.append(f"{cnt}*c^{d}" if d else str(cnt))
            else:
                parts.append(f"{cnt}*{d}^c" if d != 1 else str(cnt))
        return " + ".join(parts) if parts else "0"


def _descriptor_fn(fam: WeightFamily):
    if fam.kind in _EXPONENT_KINDS:
        return "exponent", _EXPONENT_KINDS[fam.kind]
    if fam.kind in _BASE_KINDS:
        return "base", _BASE_KINDS[fam.kind]
    return "base", fam.table_weight


def weighted_hosoya_symbolic(t: Tree, fam: WeightFamily) -> SymbolicIndex:
    """Exact formal index of t under fam, by a descriptor-indexed DP.

    Descriptors add along a matching for exponent kinds and multiply for
    base kinds; the empty matching contributes descriptor 0 resp. 1.
    """
    if t.n > _SYMBOLIC_CAP:
        raise TooLargeForSymbolic(f"symbolic index capped at order {_SYMBOLIC_CAP}")
    kind, desc = _descriptor_fn(fam)
    if kind == "exponent":
        identity, combine = 0, lambda a, b: a + b
    else:
        identity, combine = 1, lambda a, b: a * b

    def mul(d1: dict, d2: dict) -> dict:
        out: dict = {}
        for k1, v1 in d1.items():
            for k2, v2 in d2.items():
                key = combine(k1, k2)
                out[key] = out.get(key, 0) + v1 * v2
        return out

    def add(d1: dict, d2: dict) -> dict:
        out = dict(d1)
        for k, v in d2.items():
            out[k] = out.get(k, 0) + v
        return out

    degs = [t.degree(v) for v in range(t.n)]
    order, parent = _bfs_order(t, 0)
    free: list[dict] = [{} for _ in range(t.n)]
    used: list[dict] = [{} for _ in range(t.n)]
    for v in reversed(order):
        f, u = {identity: 1}, {}
        for c in t.adj[v]:
            if c == parent[v]:
                continue
            total_c = add(free[c], used[c])
            edge_term = {combine(identity, desc(degs[v], degs[c])): 1}
            new_u = add(mul(u, total_c), mul(mul(f, free[c]), edge_term))
            f = mul(f, total_c)
            u = new_u
        free[v], used[v] = f, u
    return SymbolicIndex(kind, add(free[0], used[0]))


def hosoya_index(t: Tree) -> int:
    """Plain matching count (all weights 1)."""
    from .counting import hosoya_index as _plain

    return _plain(t)


def _validate_c(fam: WeightFamily, c):
    if fam.kind == "table":
        return None
    if fam.kind == "golden16":
        return None
    if c is None:
        c = fam.c
    if c is None:
        raise NonPositiveParameter(f"{fam.kind} needs a parameter c")
    if fam.kind in ("phi1", "phi2"):
        if c <= 0:
            raise NonPositiveParameter(f"{fam.kind} needs c > 0")
    elif c < 0:  # (i+j)^0 and (i*j)^0 degenerate to plain counting; allowed
        raise NonPositiveParameter(f"{fam.kind} needs c >= 0")
    return c


def weighted_hosoya_numeric(t: Tree, fam: WeightFamily, c=None):
    """Evaluate the weighted index at a concrete parameter.

    Exact (Fraction/int) for phi1/phi2 with rational c, for phi3/phi4 with
    integer c, and for tables; otherwise a 40-digit mpmath real.
    """
    c = _validate_c(fam, c)
    sym = weighted_hosoya_symbolic(t, fam)
    if fam.kind == "table":
        return sum(cnt * b for b, cnt in sym.terms.items())
    if fam.kind == "golden16":
        return golden_value(t).to_real()
    if fam.kind in ("phi1", "phi2"):
        if isinstance(c, float):
            with mpmath.workdps(_MP_DPS):
                return sym.evaluate(mpmath.mpf(c))
        return sym.evaluate(Fraction(c))
    # phi3 / phi4
    if isinstance(c, int) or (isinstance(c, Fraction) and c.denominator == 1):
        return sym.evaluate(int(c))
    with mpmath.workdps(_MP_DPS):
        if isinstance(c, Fraction):
            return sym.evaluate(mpmath.mpf(c.numerator) / c.denominator)
        return sym.evaluate(mpmath.mpf(c))


def asymptotic_compare(a: SymbolicIndex, b: SymbolicIndex) -> int:
    """Sign of Z_a(c) - Z_b(c) for every sufficiently large c.

    Lexicographic on descriptors in decreasing order with counts as
    tie-breakers; 0 exactly when the term mappings coincide.
    """
    if a.kind != b.kind:
        raise MixedKinds(f"cannot compare {a.kind} with {b.kind}")
    for d in sorted(set(a.terms) | set(b.terms), reverse=True):
        ca, cb = a.terms.get(d, 0), b.terms.get(d, 0)
        if ca != cb:
            return GREATER if ca > cb else LESS
    return EQUAL


@lru_cache(maxsize=None)
def _fib_pair(k: int) -> tuple[int, int]:
    """(F_{k-1}, F_k) with F_0 = 0, F_1 = 1, so phi^k = F_{k-1} + F_k*phi."""
    a, b = 1, 0  # (F_{-1}, F_0)
    for _ in range(k):
        a, b = b, a + b
    return a, b


@dataclass(frozen=True, order=False)
class GoldenValue:
    """Exact element p + q*phi of Z[phi]; supports exact sign comparisons."""

    p: int
    q: int

    def _sign(self) -> int:
        # sign of p + q*phi = sign of (2p + q) + q*sqrt(5)
        s, q = 2 * self.p + self.q, self.q
        if q == 0:
            return (s > 0) - (s < 0)
        if q > 0:
            if s >= 0:
                return 1
            return 1 if 5 * q * q > s * s else -1
        if s <= 0:
            return -1
        return 1 if s * s > 5 * q * q else -1

    def __sub__(self, other: "GoldenValue") -> "GoldenValue":
        return GoldenValue(self.p - other.p, self.q - other.q)

    def __lt__(self, other):
        return (self - other)._sign() < 0

    def __le__(self, other):
        return (self - other)._sign() <= 0

    def __gt__(self, other):
        return (self - other)._sign() > 0

    def __ge__(self, other):
        return (self - other)._sign() >= 0

    def to_real(self):
        with mpmath.workdps(_MP_DPS):
            return self.p + self.q * (1 + mpmath.sqrt(5)) / 2

    def __str__(self) -> str:
        return f"{self.p}+{self.q}phi"


def golden_value(t: Tree) -> GoldenValue:
    """Exact golden16 index of t as an element of Z[phi]."""
    sym = weighted_hosoya_symbolic(t, WeightFamily("golden16"))
    p = q = 0
    for e, cnt in sym.terms.items():
        fp, fq = _fib_pair(e)
        p += cnt * fp
        q += cnt * fq
    return GoldenValue(p, q)


def balanced_product_bound(total: int, parts: int) -> int:
    """Largest product of `parts` positive integers summing to `total`.

    Attained only by the near-equal split: with total = q*parts + r, the
    maximum is (q+1)^r * q^(parts-r).
    """
    if parts < 1 or total < parts:
        raise ValueError("need total >= parts >= 1")
    q, r = divmod(total, parts)
    return (q + 1) ** r * q ** (parts - r)


def degree_product(t: Tree) -> int:
    return prod(t.degree(v) for v in range(t.n))


def parse_weight_family(text: str) -> WeightFamily:
    """Parse 'phi1:c=2', 'phi3:c=1.5', 'golden16' or 'table:@file'."""
    text = text.strip()
    head, _, rest = text.partition(":")
    head = head.lower()
    if head == "golden16":
        if rest:
            raise SpecParseError("golden16 takes no parameters")
        return WeightFamily("golden16")
    if head == "table":
        if not rest.startswith("@"):
            raise SpecParseError("table spec must reference a file: table:@path")
        entries: dict[tuple[int, int], Fraction] = {}
        with open(rest[1:], "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                toks = line.split()
                if len(toks) != 3:
                    raise SpecParseError(f"table line must be 'i j w', got {line!r}")
                i, j = int(toks[0]), int(toks[1])
                entries[(min(i, j), max(i, j))] = Fraction(toks[2])
        return WeightFamily("table", table=entries)
    if head in ("phi1", "phi2", "phi3", "phi4"):
        c = None
        if rest:
            key, _, val = rest.partition("=")
            if key.strip() != "c" or not val:
                raise SpecParseError(f"expected c=<value> after {head}:, got {rest!r}")
            try:
                c = Fraction(val.strip())
            except ValueError:
                raise SpecParseError(f"bad rational {val!r} for c") from None
        return WeightFamily(head, c=c)
    raise SpecParseError(f"unknown weight family {head!r}")
