"""Generators for every named tree family, plus a compact text spec format.

Spec strings look like ``spider:9``, ``st:3,2,0``, ``db:4,5``,
``chain:2,1,1,2`` or ``subdiv:star:5``; see :data:`FAMILY_HELP`.
Each generator documents its labeling, but only canonical codes are
meaningful across calls.
"""

from dataclasses import dataclass

from .errors import BadFamilyParams, SpecParseError
from .trees import Tree, build_tree, one_subdivision

FAMILY_HELP = {
    "path": "path:n            path on n >= 1 vertices",
    "star": "star:n            star on n >= 1 vertices",
    "spider": "spider:n          legs of length 2 (one length-1 leg when n is even)",
    "sss": "sss:n             special spider on n >= 3 vertices",
    "db": "db:a,b            double broom, a,b >= 1 leaves on two adjacent centers",
    "bdb": "bdb:n             balanced double broom on n >= 4 vertices",
    "wide": "wide:n            wide spider, even n >= 8",
    "st": "st:a,b,c          spider trio; a,b,c are leg counts (>= 0)",
    "wheel": "wheel:k,a         k+1 spiders with a legs joined to a hub",
    "chain": "chain:l1,l2,...   spider centers on a path, li legs each",
    "gdense": "gdense:s          spine of s >= 2 vertices, 2 leaves each, ends get 1 more",
    "gsparse": "gsparse:h         h >= 2 degree-7 hubs alternating with connectors",
    "subdiv": "subdiv:<spec>     1-subdivision of another family",
}


@dataclass(frozen=True)
class FamilySpec:
    """A named family together with its integer parameters."""

    family: str
    params: tuple[int, ...]

    def text(self) -> str:
        return f"{self.family}:{','.join(str(p) for p in self.params)}"


def path(n: int) -> Tree:
    if n < 1:
        raise BadFamilyParams("path needs n >= 1")
    return build_tree(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Tree:
    if n < 1:
        raise BadFamilyParams("star needs n >= 1")
    return build_tree(n, [(0, i) for i in range(1, n)])


def spider(n: int) -> Tree:
    """Center 0 with legs of length 2; one extra length-1 leg when n is even.

    Defined here for all n >= 1 (orders below 4 coincide with paths).
    """
    if n < 1:
        raise BadFamilyParams("spider needs n >= 1")
    edges = []
    nxt = 1
    for _ in range((n - 1) // 2 if n % 2 else (n - 2) // 2):
        edges.append((0, nxt))
        edges.append((nxt, nxt + 1))
        nxt += 2
    if n % 2 == 0:
        edges.append((0, n - 1))
    return build_tree(n, edges)


def special_spider(n: int) -> Tree:
    """Spider variant: even n adds a sibling leaf on spider(n-1)'s first leg,
    odd n adds a pendant edge on spider(n-1)'s center."""
    if n < 3:
        raise BadFamilyParams("special spider needs n >= 3")
    base = spider(n - 1)
    attach = 1 if n % 2 == 0 else 0  # first leg's middle vertex / the center
    return build_tree(n, list(base.edges()) + [(attach, n - 1)])


def double_broom(a: int, b: int) -> Tree:
    """Centers 0 and 1 of degrees a+1 and b+1; order a+b+2; diameter 3."""
    if a < 1 or b < 1:
        raise BadFamilyParams("double broom needs a, b >= 1")
    edges = [(0, 1)]
    edges.extend((0, 2 + i) for i in range(a))
    edges.extend((1, 2 + a + i) for i in range(b))
    return build_tree(a + b + 2, edges)


def balanced_double_broom(n: int) -> Tree:
    if n < 4:
        raise BadFamilyParams("balanced double broom needs n >= 4")
    return double_broom(n // 2 - 1, (n + 1) // 2 - 1)


def wide_spider(n: int) -> Tree:
    """Balanced double broom on n/2+1 vertices with every pendant edge subdivided."""
    if n < 8 or n % 2:
        raise BadFamilyParams("wide spider needs even n >= 8")
    k = n // 2 + 1
    a, b = k // 2 - 1, (k + 1) // 2 - 1
    edges = [(0, 1)]
    nxt = 2
    for center, count in ((0, a), (1, b)):
        for _ in range(count):
            edges.append((center, nxt))
            edges.append((nxt, nxt + 1))
            nxt += 2
    return build_tree(n, edges)


def spider_trio(a: int, b: int, c: int) -> Tree:
    """Three spiders with a, b, c legs of length 2 (0 legs = a bare vertex),
    centers joined to a new hub vertex 0.  Order 2(a+b+c)+4."""
    if min(a, b, c) < 0:
        raise BadFamilyParams("spider trio needs leg counts >= 0")
    return _hub_of_spiders([a, b, c])


def k_spider_wheel(k: int, a: int) -> Tree:
    """k+1 spiders with a legs each joined to a hub; order (k+1)(2a+1)+1."""
    if k < 1 or a < 1:
        raise BadFamilyParams("wheel needs k >= 1 and a >= 1")
    return _hub_of_spiders([a] * (k + 1))


def _hub_of_spiders(leg_counts: list[int]) -> Tree:
    edges = []
    nxt = 1
    for legs in leg_counts:
        center = nxt
        nxt += 1
        edges.append((0, center))
        for _ in range(legs):
            edges.append((center, nxt))
            edges.append((nxt, nxt + 1))
            nxt += 2
    return build_tree(nxt, edges)


def spider_chain(leg_counts: list[int] | tuple[int, ...]) -> Tree:
    """Spider centers 0..m-1 along a path, center i carrying leg_counts[i]
    legs of length 2.  Order m + 2*sum(leg_counts)."""
    m = len(leg_counts)
    if m < 1 or min(leg_counts, default=0) < 0:
        raise BadFamilyParams("chain needs at least one center and leg counts >= 0")
    edges = [(i, i + 1) for i in range(m - 1)]
    nxt = m
    for center, legs in enumerate(leg_counts):
        for _ in range(legs):
            edges.append((center, nxt))
            edges.append((nxt, nxt + 1))
            nxt += 2
    return build_tree(nxt, edges)


def golden_dense(s: int) -> Tree:
    """Spine path of s vertices, two pendant leaves each, one extra leaf on
    both spine ends; every spine degree is 4 and order is 3s+2."""
    if s < 2:
        raise BadFamilyParams("gdense needs spine length >= 2")
    edges = [(i, i + 1) for i in range(s - 1)]
    nxt = s
    for v in range(s):
        extra = 3 if v in (0, s - 1) else 2
        for _ in range(extra):
            edges.append((v, nxt))
            nxt += 1
    return build_tree(nxt, edges)


def golden_sparse(h: int) -> Tree:
    """h hubs alternating with h-1 degree-2 connectors on a path; interior
    hubs carry 5 pendant leaves and the end hubs 6, so all hub degrees are 7.
    Order 7h+1."""
    if h < 2:
        raise BadFamilyParams("gsparse needs h >= 2")
    spine = 2 * h - 1  # hubs at even positions, connectors at odd
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for i in range(h):
        hub = 2 * i
        count = 6 if i in (0, h - 1) else 5
        for _ in range(count):
            edges.append((hub, nxt))
            nxt += 1
    return build_tree(nxt, edges)


def make_family(spec: FamilySpec) -> Tree:
    """Build the tree described by a FamilySpec."""
    fam, p = spec.family, spec.params
    builders = {
        "path": lambda: path(*_arity(fam, p, 1)),
        "star": lambda: star(*_arity(fam, p, 1)),
        "spider": lambda: spider(*_arity(fam, p, 1)),
        "sss": lambda: special_spider(*_arity(fam, p, 1)),
        "db": lambda: double_broom(*_arity(fam, p, 2)),
        "bdb": lambda: balanced_double_broom(*_arity(fam, p, 1)),
        "wide": lambda: wide_spider(*_arity(fam, p, 1)),
        "st": lambda: spider_trio(*_arity(fam, p, 3)),
        "wheel": lambda: k_spider_wheel(*_arity(fam, p, 2)),
        "chain": lambda: spider_chain(list(p)),
        "gdense": lambda: golden_dense(*_arity(fam, p, 1)),
        "gsparse": lambda: golden_sparse(*_arity(fam, p, 1)),
    }
    if fam == "subdiv":
        raise BadFamilyParams("subdiv specs carry a nested family; use parse_family_tree")
    try:
        builder = builders[fam]
    except KeyError:
        raise BadFamilyParams(f"unknown family {fam!r}") from None
    return builder()


def _arity(fam: str, params: tuple[int, ...], want: int) -> tuple[int, ...]:
    if len(params) != want:
        raise BadFamilyParams(f"{fam} takes {want} parameter(s), got {len(params)}")
    return params


def parse_family_spec(text: str) -> FamilySpec:
    """Parse 'family:p1,p2,...' into a FamilySpec (no nesting)."""
    head, _, rest = text.strip().partition(":")
    head = head.lower()
    if head not in FAMILY_HELP or head == "subdiv":
        raise SpecParseError(f"unknown family {head!r}")
    if not rest:
        raise SpecParseError(f"family {head!r} needs parameters, e.g. {head}:5")
    params = []
    for tok in rest.split(","):
        tok = tok.strip()
        try:
            params.append(int(tok))
        except ValueError:
            raise SpecParseError(f"bad integer {tok!r} in family spec {text!r}") from None
    return FamilySpec(head, tuple(params))


def parse_family_tree(text: str) -> Tree:
    """Parse a family spec (possibly 'subdiv:'-wrapped) and build the tree."""
    stripped = text.strip()
    depth = 0
    while stripped.lower().startswith("subdiv:"):
        depth += 1
        stripped = stripped[len("subdiv:"):]
    t = make_family(parse_family_spec(stripped))
    for _ in range(depth):
        t = one_subdivision(t)
    return t
