"""Immutable simple graphs stored as per-vertex neighbor bit masks.

Vertices are ``0..n-1``.  A vertex set is an ``int`` mask internally; the
:class:`VertexSet` wrapper carries the graph order along for display and
validation at API boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

MAX_GRAPH6_ORDER = 62


class GraphError(ValueError):
    """Raised for malformed graphs or vertex references."""


class Graph6Error(GraphError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def bits_of(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices of a graph of order ``order``."""

    bits: int
    order: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.order:
            raise GraphError(f"vertex set {self.bits:#x} exceeds order {self.order}")

    @classmethod
    def of(cls, order: int, vertices: Iterable[int]) -> VertexSet:
        vertices = list(vertices)
        for v in vertices:
            if not 0 <= v < order:
                raise GraphError(f"vertex {v} out of range for order {order}")
        return cls(mask_of(vertices), order)

    def __iter__(self) -> Iterator[int]:
        return bits_of(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.order and bool(self.bits >> v & 1)

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self)) + "}"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbor mask of ``v``."""

    order: int
    adj: tuple[int, ...] = field(repr=False)

    def __post_init__(self):
        if self.order < 0 or len(self.adj) != self.order:
            raise GraphError("adjacency length does not match order")
        full = (1 << self.order) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has a neighbor index >= {self.order}")
            if nb >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits_of(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()})"

    @property
    def vertex_mask(self) -> int:
        return (1 << self.order) - 1

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(nb.bit_count() for nb in self.adj)

    def neighbors(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return VertexSet(self.adj[v], self.order)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in bits_of(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def vertex_set(self, vertices: Iterable[int]) -> VertexSet:
        return VertexSet.of(self.order, vertices)

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.order)):
            raise GraphError("relabeling is not a permutation of the vertices")
        return from_edge_list(self.order, [(perm[u], perm[v]) for u, v in self.edges()])

    def is_connected(self) -> bool:
        if self.order == 0:
            return True
        seen = frontier = 1
        while frontier:
            nxt = 0
            for v in bits_of(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == self.vertex_mask

    def components(self) -> list[int]:
        """Vertex masks of the connected components, ordered by least vertex."""
        rest = self.vertex_mask
        comps = []
        while rest:
            seen = frontier = rest & -rest
            while frontier:
                nxt = 0
                for v in bits_of(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~seen
                seen |= frontier
            comps.append(seen)
            rest &= ~seen
        return comps

    def induced(self, vertices: Iterable[int]) -> Graph:
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return from_edge_list(len(keep), edges)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.order:
            raise GraphError(f"vertex {v} out of range for order {self.order}")


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise GraphError("negative vertex count")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge ({u}, {u})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def degree(g: Graph, v: int) -> int:
    g._check_vertex(v)
    return g.degrees[v]


def max_degree(g: Graph) -> int:
    if g.order == 0:
        raise GraphError("maximum degree of the empty graph is undefined")
    return max(g.degrees)


def min_degree(g: Graph) -> int:
    if g.order == 0:
        raise GraphError("minimum degree of the empty graph is undefined")
    return min(g.degrees)


def to_graph6(g: Graph) -> str:
    n = g.order
    if n > MAX_GRAPH6_ORDER:
        raise GraphError(f"graph6 short form supports at most {MAX_GRAPH6_ORDER} vertices")
    bits = [g.adj[j] >> i & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    token = text.strip()
    if not token:
        raise Graph6Error("empty graph6 token", 0)
    if token.startswith(">>graph6<<"):
        raise Graph6Error("graph6 header is not supported", 0)
    for pos, ch in enumerate(token):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ch!r} outside the graph6 range", pos)
    n = ord(token[0]) - 63
    if n > MAX_GRAPH6_ORDER:
        raise Graph6Error("long-form order prefix is not supported", 0)
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(token) < expected:
        raise Graph6Error(f"token too short for order {n}: need {expected} bytes", len(token))
    if len(token) > expected:
        raise Graph6Error("trailing bytes after adjacency data", expected)
    data = [ord(ch) - 63 for ch in token[1:]]
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if data[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6 and data[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits", expected - 1)
    return Graph(n, tuple(adj))


def read_edge_list(text: str) -> Graph:
    """Parse the edge-list file format: a vertex count line, then ``u v`` lines.

    Everything after ``#`` on a line is ignored, as are blank lines.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise GraphError("edge list is empty; expected a vertex count")
    lineno, first = rows[0]
    if len(first) != 1:
        raise GraphError(f"line {lineno}: expected a single vertex count")
    try:
        n = int(first[0])
        edges = []
        for lineno, parts in rows[1:]:
            if len(parts) != 2:
                raise GraphError(f"line {lineno}: expected 'u v'")
            edges.append((int(parts[0]), int(parts[1])))
    except ValueError as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"line {lineno}: {exc}") from None
    return from_edge_list(n, edges)


def write_edge_list(g: Graph) -> str:
    lines = [str(g.order)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
