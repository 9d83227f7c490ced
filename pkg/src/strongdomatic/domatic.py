"""Exact (strong) domatic numbers via rainbow-cover colorings.

A coloring of the vertices with colors ``0..k-1`` describes a partition
into ``k`` dominating sets exactly when every covering family (closed or
strong closed neighborhood) contains all ``k`` colors.  The solver asks
that question for ``k = U, U-1, ...`` from an upper bound ``U``; merging two
classes of a valid partition gives another valid partition, so the first
feasible ``k`` is the answer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .domination import (
    closed_neighborhood_masks,
    is_strong_dominating_set,
    minimum_hitting_set,
    strong_neighborhood_masks,
)
from .graph import Graph, GraphError, VertexSet, bits_of

DEFAULT_NODE_BUDGET = 10**8
ORACLE_MAX_ORDER = 12


class BudgetExceeded(RuntimeError):
    def __init__(self, nodes: int):
        super().__init__(f"search budget of {nodes} nodes exceeded")
        self.nodes = nodes


@dataclass(frozen=True)
class Partition:
    classes: tuple[VertexSet, ...]
    order: int

    def __post_init__(self):
        seen = 0
        for c in self.classes:
            if c.order != self.order:
                raise GraphError("partition class belongs to a graph of a different order")
            if not c.bits:
                raise GraphError("partition has an empty class")
            if c.bits & seen:
                raise GraphError("partition classes overlap")
            seen |= c.bits
        if seen != (1 << self.order) - 1:
            raise GraphError("partition classes do not cover every vertex")

    @classmethod
    def of(cls, order: int, classes: Iterable[Iterable[int]]) -> Partition:
        return cls(tuple(VertexSet.of(order, c) for c in classes), order)

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.classes)

    def as_lists(self) -> list[list[int]]:
        return [list(c) for c in self.classes]


@dataclass(frozen=True)
class DstResult:
    value: int
    witness: Partition
    bounds_used: dict[str, int] = field(default_factory=dict)


def is_strong_domatic_partition(g: Graph, p: Partition) -> bool:
    if p.order != g.order:
        raise GraphError("partition and graph have different orders")
    return all(is_strong_dominating_set(g, c) for c in p.classes)


def partition_hits_neighborhoods(g: Graph, p: Partition) -> bool:
    """Rainbow form of :func:`is_strong_domatic_partition`."""
    if p.order != g.order:
        raise GraphError("partition and graph have different orders")
    return all(c.bits & m for m in strong_neighborhood_masks(g) for c in p.classes)


def max_degree_count(g: Graph) -> int:
    top = max(g.degrees)
    return g.degrees.count(top)


def dst_upper_bound(g: Graph, gamma_st: int | None = None) -> int:
    """Smallest strong closed neighborhood, optionally capped by n // gamma_st.

    The smallest neighborhood bound is at most the number of maximum-degree
    vertices (neighborhood of one of them) and at most ``delta + 1``.
    """
    if g.order == 0:
        raise GraphError("strong domatic number is undefined for the empty graph")
    bound = min(m.bit_count() for m in strong_neighborhood_masks(g))
    if gamma_st:
        bound = min(bound, g.order // gamma_st)
    return bound


def rainbow_coloring(
    n: int, masks: Sequence[int], k: int, budget: int = DEFAULT_NODE_BUDGET
) -> list[int] | None:
    """Color ``0..n-1`` with ``k`` colors so every mask sees all colors.

    Returns the color of each vertex, or None if impossible.  Vertices are
    assigned most-constrained first (smallest mask containing them, ties by
    index); a vertex may open at most one new color beyond those already
    used.  A branch is cut when some mask lacks more colors than it has
    unassigned members.
    """
    masks = list(masks)
    if k <= 0:
        return None
    if k == 1:
        return [0] * n
    if any(m.bit_count() < k for m in masks):
        return None

    smallest = [n + 1] * n
    touching: list[list[int]] = [[] for _ in range(n)]
    for i, m in enumerate(masks):
        for v in bits_of(m):
            touching[v].append(i)
            smallest[v] = min(smallest[v], m.bit_count())
    order = sorted(range(n), key=lambda v: (smallest[v], v))

    all_colors = (1 << k) - 1
    seen = [0] * len(masks)
    free = [m.bit_count() for m in masks]
    color = [-1] * n
    nodes = 0

    def assign(pos: int, used: int) -> bool:
        nonlocal nodes
        if pos == n:
            return True
        v = order[pos]
        for c in range(min(used + 1, k)):
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(budget)
            bit = 1 << c
            saved = [seen[i] for i in touching[v]]
            ok = True
            for i in touching[v]:
                seen[i] |= bit
                free[i] -= 1
                if (all_colors & ~seen[i]).bit_count() > free[i]:
                    ok = False
            if ok:
                color[v] = c
                if assign(pos + 1, max(used, c + 1)):
                    return True
                color[v] = -1
            for i, s in zip(touching[v], saved):
                seen[i] = s
                free[i] += 1
        return False

    return color if assign(0, 0) else None


def _max_rainbow_partition(
    g: Graph, masks: Sequence[int], upper: int, budget: int
) -> tuple[int, Partition]:
    for k in range(upper, 0, -1):
        coloring = rainbow_coloring(g.order, masks, k, budget)
        if coloring is not None:
            classes = [[v for v in range(g.order) if coloring[v] == c] for c in range(k)]
            return k, Partition.of(g.order, classes)
    raise AssertionError("one class always works for a non-empty graph")


def strong_domatic_number(
    g: Graph, node_budget: int = DEFAULT_NODE_BUDGET, use_gamma_bound: bool = True
) -> DstResult:
    if g.order == 0:
        raise GraphError("strong domatic number is undefined for the empty graph")
    masks = strong_neighborhood_masks(g)
    bounds = {
        "m": max_degree_count(g),
        "delta_plus_one": min(g.degrees) + 1,
        "min_strong_neighborhood": min(m.bit_count() for m in masks),
    }
    gamma_st = None
    if use_gamma_bound:
        gamma_st = minimum_hitting_set(g.order, masks).bit_count()
        bounds["n_over_gamma_st"] = g.order // gamma_st
    upper = dst_upper_bound(g, gamma_st)
    value, witness = _max_rainbow_partition(g, masks, upper, node_budget)
    return DstResult(value, witness, bounds)


def domatic_partition(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> Partition:
    if g.order == 0:
        raise GraphError("domatic number is undefined for the empty graph")
    masks = closed_neighborhood_masks(g)
    upper = min(m.bit_count() for m in masks)
    return _max_rainbow_partition(g, masks, upper, node_budget)[1]


def domatic_number(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> int:
    return len(domatic_partition(g, node_budget))


# Brute-force oracles.  These deliberately share nothing with the search
# above: they enumerate every subset / set partition and test classes with
# the degree-condition predicate.


def _check_oracle_size(g: Graph) -> None:
    if g.order == 0:
        raise GraphError("oracles need a non-empty graph")
    if g.order > ORACLE_MAX_ORDER:
        raise GraphError(f"oracle budget is {ORACLE_MAX_ORDER} vertices, got {g.order}")


def oracle_gamma_st(g: Graph) -> int:
    _check_oracle_size(g)
    for size in range(g.order + 1):
        for subset in combinations(range(g.order), size):
            if is_strong_dominating_set(g, subset):
                return size
    raise AssertionError("the full vertex set is strong dominating")


def _restricted_growth_strings(n: int) -> Iterator[list[int]]:
    rgs = [0] * n

    def fill(i: int, top: int) -> Iterator[list[int]]:
        if i == n:
            yield rgs
            return
        for c in range(top + 2):
            rgs[i] = c
            yield from fill(i + 1, max(top, c))

    if n:
        yield from fill(1, 0)


def oracle_strong_domatic(g: Graph) -> int:
    _check_oracle_size(g)
    n = g.order
    good = [is_strong_dominating_set(g, s) for s in range(1 << n)]
    best = 1
    for rgs in _restricted_growth_strings(n):
        blocks = max(rgs) + 1
        if blocks <= best:
            continue
        cls = [0] * blocks
        for v, c in enumerate(rgs):
            cls[c] |= 1 << v
        if all(good[c] for c in cls):
            best = blocks
    return best
