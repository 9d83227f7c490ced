"""Exact strong domination and strong domatic numbers for small graphs."""

from .domatic import (
    BudgetExceeded,
    DstResult,
    Partition,
    domatic_number,
    dst_upper_bound,
    is_strong_domatic_partition,
    oracle_gamma_st,
    oracle_strong_domatic,
    strong_domatic_number,
)
from .domination import (
    StrongNeighborhood,
    domination_number,
    is_dominating_set,
    is_strong_dominating_set,
    is_weak_dominating_set,
    strong_closed_neighborhood,
    strong_domination_number,
    weak_domination_number,
)
from .enumeration import CanonicalForm, are_isomorphic, canonical_form, enumerate_regular
from .families import (
    FamilySpec,
    basic_family,
    book,
    corona,
    disjoint_union,
    friendship,
    petersen,
)
from .graph import (
    Graph,
    GraphError,
    VertexSet,
    degree,
    from_edge_list,
    max_degree,
    min_degree,
    parse_graph6,
    to_graph6,
)

__version__ = "0.1.0"
