"""Generators for the named graph families and the corona / union operators."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, from_edge_list

# kind -> number of integer parameters
FAMILY_ARITY = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "complete_bipartite": 2,
    "star": 1,
    "empty": 1,
    "friendship": 1,
    "book": 1,
    "petersen": 0,
}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in FAMILY_ARITY:
            raise GraphError(f"unknown family {self.kind!r}")
        if len(self.params) != FAMILY_ARITY[self.kind]:
            raise GraphError(
                f"family {self.kind!r} takes {FAMILY_ARITY[self.kind]} parameter(s), "
                f"got {len(self.params)}"
            )
        if any(p < 0 for p in self.params):
            raise GraphError("family parameters must be non-negative")

    def build(self) -> Graph:
        return basic_family(self)


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    _need(a >= 1 and b >= 1, "complete bipartite graph needs both parts >= 1")
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(n: int) -> Graph:
    """K_{1,n} with the center at vertex 0."""
    _need(n >= 1, "star needs n >= 1 leaves")
    return complete_bipartite(1, n)


def empty(n: int) -> Graph:
    _need(n >= 0, "empty graph needs n >= 0")
    return Graph(n, (0,) * n)


def friendship(n: int) -> Graph:
    """n triangles sharing hub 0; triangle i uses vertices 2i-1 and 2i."""
    _need(n >= 1, "friendship graph needs n >= 1 triangles")
    edges = []
    for i in range(1, n + 1):
        a, b = 2 * i - 1, 2 * i
        edges += [(0, a), (0, b), (a, b)]
    return from_edge_list(2 * n + 1, edges)


def book(n: int) -> Graph:
    """Square-page book: spine 0-1, page i adds a_i ~ 0, b_i ~ 1, a_i ~ b_i."""
    _need(n >= 1, "book graph needs n >= 1 pages")
    edges = [(0, 1)]
    for i in range(n):
        a, b = 2 + 2 * i, 3 + 2 * i
        edges += [(0, a), (1, b), (a, b)]
    return from_edge_list(2 * n + 2, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
    return from_edge_list(10, outer + spokes + inner)


_BUILDERS = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "star": star,
    "empty": empty,
    "friendship": friendship,
    "book": book,
    "petersen": petersen,
}


def basic_family(spec: FamilySpec) -> Graph:
    return _BUILDERS[spec.kind](*spec.params)


def corona(g: Graph, h: Graph) -> Graph:
    """One copy of ``g`` plus a copy of ``h`` joined to each vertex of ``g``.

    Host vertex ``i`` keeps index ``i``; its copy of ``h`` occupies
    ``n + i*m .. n + (i+1)*m - 1``.
    """
    n, m = g.order, h.order
    _need(n >= 1, "corona needs a non-empty host graph")
    edges = g.edges()
    for i in range(n):
        base = n + i * m
        edges += [(base + u, base + v) for u, v in h.edges()]
        edges += [(i, base + j) for j in range(m)]
    return from_edge_list(n * (1 + m), edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.order
    return Graph(g.order + h.order, g.adj + tuple(nb << shift for nb in h.adj))
