"""Canonical labeling, isomorphism tests and regular-graph catalogs.

Canonical forms come from individualization/refinement: color refinement
splits the vertex set into an equitable ordered partition, then each
remaining tie is broken by individualizing one vertex of the first smallest
non-trivial cell.  Every discrete partition reached is a labeling; the form
is the lexicographically least upper-triangle bit string over all of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

from .graph import Graph, GraphError, bits_of

CANONICAL_MAX_ORDER = 16
ENUMERATION_MAX_ORDER = 12


@dataclass(frozen=True, order=True)
class CanonicalForm:
    order: int
    bytes: bytes

    @property
    def graph6(self) -> str:
        return chr(self.order + 63) + self.bytes.decode("ascii")

    def graph(self) -> Graph:
        from .graph import parse_graph6

        return parse_graph6(self.graph6)


def _upper_triangle_code(g: Graph, labeling: list[int]) -> int:
    """Bits ``x(i, j)`` for ``j = 1..n-1, i < j`` of the relabeled graph.

    ``labeling[p]`` is the original vertex placed at position ``p``.
    """
    code = 0
    adj = g.adj
    for j in range(1, g.order):
        row = adj[labeling[j]]
        for i in range(j):
            code = code << 1 | (row >> labeling[i] & 1)
    return code


def _pack(order: int, code: int) -> CanonicalForm:
    nbits = order * (order - 1) // 2
    pad = -nbits % 6
    code <<= pad
    total = nbits + pad
    chars = bytes(63 + (code >> (total - 6 * (k + 1)) & 63) for k in range(total // 6))
    return CanonicalForm(order, chars)


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Color refinement to an equitable ordered partition.

    The new cell order depends only on (old cell, neighbor counts per cell),
    so it commutes with relabeling.
    """
    adj = g.adj
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        refined: list[list[int]] = []
        for idx, cell in enumerate(cells):
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((adj[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                refined.append(groups[sig])
        if len(refined) == len(cells):
            return refined
        cells = refined


def _twin_representatives(g: Graph, cell: list[int]) -> list[int]:
    """Drop vertices that are twins of an earlier vertex in the cell.

    Swapping twins is an automorphism fixing everything already
    individualized, so their subtrees produce the same leaves.
    """
    reps: list[int] = []
    for v in cell:
        if not any(
            g.adj[v] & ~(1 << u) == g.adj[u] & ~(1 << v) for u in reps
        ):
            reps.append(v)
    return reps


def canonical_form(g: Graph) -> CanonicalForm:
    n = g.order
    if n > CANONICAL_MAX_ORDER:
        raise GraphError(f"canonical form supports at most {CANONICAL_MAX_ORDER} vertices")
    if n <= 1:
        return _pack(n, 0)
    best: int | None = None

    def search(cells: list[list[int]]) -> None:
        nonlocal best
        cells = _refine(g, cells)
        if len(cells) == n:
            code = _upper_triangle_code(g, [c[0] for c in cells])
            if best is None or code < best:
                best = code
            return
        target = min(
            (i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: (len(cells[i]), i)
        )
        cell = cells[target]
        for v in _twin_representatives(g, cell):
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    degree_classes: dict[int, list[int]] = {}
    for v, d in enumerate(g.degrees):
        degree_classes.setdefault(d, []).append(v)
    search([degree_classes[d] for d in sorted(degree_classes)])
    assert best is not None
    return _pack(n, best)


def canonical_form_bruteforce(g: Graph) -> CanonicalForm:
    """Least upper-triangle code over all n! labelings; test oracle for n <= 8."""
    if g.order > 8:
        raise GraphError("brute-force canonical form is limited to 8 vertices")
    best = min(
        (_upper_triangle_code(g, list(p)) for p in permutations(range(g.order))),
        default=0,
    )
    return _pack(g.order, best)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or sorted(g.degrees) != sorted(h.degrees):
        return False
    return canonical_form(g) == canonical_form(h)


def _labeled_regular(n: int, k: int) -> Iterator[Graph]:
    """Row-by-row construction of labeled k-regular graphs on n vertices.

    Row ``i`` picks the neighbors of ``i`` among later vertices.  Later
    vertices with identical adjacency so far are interchangeable, so only
    the lowest-indexed ones of each such class are ever chosen; any other
    choice differs from an allowed one by swapping two such vertices.
    """
    adj = [0] * n
    deg = [0] * n

    def residual_ok(i: int) -> bool:
        later = n - i - 1
        return all(k - deg[j] <= later - 1 for j in range(i + 1, n))

    def row(i: int) -> Iterator[Graph]:
        if i == n:
            yield Graph(n, tuple(adj))
            return
        need = k - deg[i]
        classes: dict[int, list[int]] = {}
        for j in range(i + 1, n):
            if deg[j] < k:
                classes.setdefault(adj[j], []).append(j)
        groups = list(classes.values())
        if sum(len(c) for c in groups) < need:
            return

        def choose(t: int, left: int, picked: list[int]) -> Iterator[Graph]:
            if left == 0:
                for j in picked:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                    deg[i] += 1
                    deg[j] += 1
                if residual_ok(i):
                    yield from row(i + 1)
                for j in picked:
                    adj[i] &= ~(1 << j)
                    adj[j] &= ~(1 << i)
                    deg[i] -= 1
                    deg[j] -= 1
                return
            if t == len(groups):
                return
            for take in range(min(left, len(groups[t])), -1, -1):
                yield from choose(t + 1, left - take, picked + groups[t][:take])

        yield from choose(0, need, [])

    yield from row(0)


def enumerate_regular(n: int, k: int, connected_only: bool = False) -> list[Graph]:
    """One graph per isomorphism class of k-regular graphs of order n.

    Graphs are returned relabeled into canonical form, sorted by that form.
    """
    if k < 0 or n < 0:
        raise GraphError("order and degree must be non-negative")
    if n * k % 2:
        raise GraphError(f"no {k}-regular graph has odd degree sum on {n} vertices")
    if n > ENUMERATION_MAX_ORDER:
        raise GraphError(f"enumeration supports at most {ENUMERATION_MAX_ORDER} vertices")
    if k >= n:
        if n == 0 and k == 0:
            return [Graph(0, ())]
        raise GraphError("regular degree must be smaller than the order")
    forms: set[CanonicalForm] = set()
    for g in _labeled_regular(n, k):
        if connected_only and not g.is_connected():
            continue
        forms.add(canonical_form(g))
    return [f.graph() for f in sorted(forms)]


def iter_regular(n: int, k: int, connected_only: bool = False) -> Iterator[Graph]:
    yield from enumerate_regular(n, k, connected_only)


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for forests."""
    best = None
    for s in range(g.order):
        dist = {s: 0}
        parent = {s: -1}
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for w in bits_of(g.adj[u]):
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    elif parent[u] != w:
                        length = dist[u] + dist[w] + 1
                        if best is None or length < best:
                            best = length
            frontier = nxt
    return best
