"""Dominating-set predicates (classic, strong, weak) and exact minimum sizes.

A vertex ``x`` outside ``D`` is strongly dominated when it has a neighbor in
``D`` of degree at least ``deg(x)``; weak domination reverses the inequality.
All three notions reduce to "every vertex's covering family meets ``D``",
which is what the minimum searches exploit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .graph import Graph, GraphError, VertexSet, bits_of

VertexSetLike = Union[VertexSet, int, Iterable[int]]


@dataclass(frozen=True)
class StrongNeighborhood:
    vertex: int
    members: VertexSet


def as_mask(g: Graph, d: VertexSetLike) -> int:
    """Accept a VertexSet, a raw bit mask, or an iterable of vertices."""
    if isinstance(d, VertexSet):
        if d.order != g.order:
            raise GraphError("vertex set belongs to a graph of a different order")
        return d.bits
    if isinstance(d, int):
        if d < 0 or d >> g.order:
            raise GraphError("vertex mask exceeds graph order")
        return d
    return g.vertex_set(d).bits


def closed_neighborhood_masks(g: Graph) -> list[int]:
    return [nb | 1 << v for v, nb in enumerate(g.adj)]


def strong_neighborhood_masks(g: Graph) -> list[int]:
    """``{x} | {y in N(x) : deg(y) >= deg(x)}`` for every vertex ``x``."""
    deg = g.degrees
    out = []
    for x, nb in enumerate(g.adj):
        mask = 1 << x
        for y in bits_of(nb):
            if deg[y] >= deg[x]:
                mask |= 1 << y
        out.append(mask)
    return out


def weak_neighborhood_masks(g: Graph) -> list[int]:
    deg = g.degrees
    out = []
    for x, nb in enumerate(g.adj):
        mask = 1 << x
        for y in bits_of(nb):
            if deg[y] <= deg[x]:
                mask |= 1 << y
        out.append(mask)
    return out


def strong_closed_neighborhood(g: Graph, x: int) -> StrongNeighborhood:
    g._check_vertex(x)
    return StrongNeighborhood(x, VertexSet(strong_neighborhood_masks(g)[x], g.order))


def hits_all(masks: Sequence[int], d: int) -> bool:
    return all(m & d for m in masks)


def is_dominating_set(g: Graph, d: VertexSetLike) -> bool:
    d = as_mask(g, d)
    return all(d >> x & 1 or g.adj[x] & d for x in range(g.order))


def is_strong_dominating_set(g: Graph, d: VertexSetLike) -> bool:
    # Checked straight from the degree condition, independently of the
    # neighborhood masks used by the solvers.
    d = as_mask(g, d)
    deg = g.degrees
    for x in range(g.order):
        if d >> x & 1:
            continue
        if not any(deg[y] >= deg[x] for y in bits_of(g.adj[x] & d)):
            return False
    return True


def is_weak_dominating_set(g: Graph, d: VertexSetLike) -> bool:
    d = as_mask(g, d)
    deg = g.degrees
    for x in range(g.order):
        if d >> x & 1:
            continue
        if not any(deg[y] <= deg[x] for y in bits_of(g.adj[x] & d)):
            return False
    return True


def minimum_hitting_set(n: int, masks: Sequence[int]) -> int:
    """Lexicographically least minimum subset of ``0..n-1`` meeting every mask.

    Iterative deepening on the cardinality.  At each level the candidates
    are tried in ascending order, so the first set found is the lex-least
    one of that size.  A branch dies as soon as some mask can no longer be
    hit by the chosen vertices or the vertices still available.
    """
    full = (1 << n) - 1
    masks = sorted(set(masks))
    if not masks:
        return 0
    if any(m == 0 for m in masks):
        raise ValueError("an empty mask can never be hit")

    def search(chosen: int, start: int, left: int) -> int | None:
        open_masks = [m for m in masks if not m & chosen]
        if not open_masks:
            return chosen
        if left == 0:
            return None
        avail = full & ~((1 << start) - 1)
        # The least-indexed open mask must be hit by the next pick or a later
        # one; picks only go up, so the next pick cannot pass its top member.
        limit = n
        for m in open_masks:
            reach = m & avail
            if not reach:
                return None
            limit = min(limit, reach.bit_length())
        # Disjoint open masks each need their own vertex.
        need, used = 0, 0
        for m in open_masks:
            if not m & used:
                need += 1
                used |= m
        if need > left:
            return None
        for v in range(start, limit):
            found = search(chosen | 1 << v, v + 1, left - 1)
            if found is not None:
                return found
        return None

    for k in range(1, n + 1):
        found = search(0, 0, k)
        if found is not None:
            return found
    raise AssertionError("the full vertex set always hits every non-empty mask")


def _require_vertices(g: Graph) -> None:
    if g.order == 0:
        raise GraphError("domination numbers are undefined for the empty graph")


def minimum_dominating_set(g: Graph) -> VertexSet:
    _require_vertices(g)
    return VertexSet(minimum_hitting_set(g.order, closed_neighborhood_masks(g)), g.order)


def minimum_strong_dominating_set(g: Graph) -> VertexSet:
    _require_vertices(g)
    return VertexSet(minimum_hitting_set(g.order, strong_neighborhood_masks(g)), g.order)


def minimum_weak_dominating_set(g: Graph) -> VertexSet:
    _require_vertices(g)
    return VertexSet(minimum_hitting_set(g.order, weak_neighborhood_masks(g)), g.order)


def domination_number(g: Graph) -> int:
    return len(minimum_dominating_set(g))


def strong_domination_number(g: Graph) -> tuple[int, VertexSet]:
    witness = minimum_strong_dominating_set(g)
    return len(witness), witness


def weak_domination_number(g: Graph) -> int:
    return len(minimum_weak_dominating_set(g))
