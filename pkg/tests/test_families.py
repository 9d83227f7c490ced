import pytest

from strongdomatic.enumeration import are_isomorphic, canonical_form, girth
from strongdomatic.families import (
    FamilySpec,
    basic_family,
    book,
    complete,
    complete_bipartite,
    corona,
    cycle,
    disjoint_union,
    empty,
    friendship,
    path,
    petersen,
    star,
)
from strongdomatic.graph import GraphError

from .conftest import random_permutation


def test_basic_family_dispatch():
    assert basic_family(FamilySpec("cycle", (3,))) == complete(3)
    assert FamilySpec("petersen").build() == petersen()
    with pytest.raises(GraphError):
        FamilySpec("cycle", (3, 4))
    with pytest.raises(GraphError):
        FamilySpec("wheel", (5,))


@pytest.mark.parametrize(
    "spec",
    [("path", 0), ("cycle", 2), ("complete", 0), ("star", 0), ("friendship", 0), ("book", 0)],
)
def test_size_constraints(spec):
    with pytest.raises(GraphError):
        basic_family(FamilySpec(spec[0], (spec[1],)))
    with pytest.raises(GraphError):
        complete_bipartite(0, 3)


def test_labelings():
    assert path(4).edges() == [(0, 1), (1, 2), (2, 3)]
    assert (0, 4) in cycle(5).edges()
    kb = complete_bipartite(2, 3)
    assert kb.edge_count() == 6 and kb.degrees == (3, 3, 2, 2, 2)
    s = star(5)
    assert s.degrees[0] == 5 and s.degrees.count(5) == 1
    assert empty(0).order == 0


def test_friendship():
    assert friendship(1) == complete(3)
    f3 = friendship(3)
    assert f3.degrees == (6,) + (2,) * 6
    f2 = friendship(2)
    assert (f2.order, f2.edge_count()) == (5, 6)


@pytest.mark.parametrize("n", range(2, 8))
def test_friendship_shape(n):
    f = friendship(n)
    assert f.order == 2 * n + 1
    assert f.degrees.count(2 * n) == 1


def test_book():
    assert are_isomorphic(book(1), cycle(4))
    b3 = book(3)
    assert (b3.order, b3.edge_count()) == (8, 10)
    assert b3.degrees.count(4) == 2 and b3.degrees[:2] == (4, 4)
    assert book(2).degrees == (3, 3, 2, 2, 2, 2)


@pytest.mark.parametrize("n", range(2, 8))
def test_book_shape(n):
    b = book(n)
    assert b.order == 2 * n + 2
    assert b.degrees.count(n + 1) == 2


def test_corona_examples():
    assert are_isomorphic(corona(path(2), complete(1)), path(4))
    pk = corona(path(6), complete(1))
    assert set(pk.degrees[:6]) == {2, 3} and set(pk.degrees[6:]) == {1}
    assert pk.has_edge(3, 6 + 3)
    k3e2 = corona(complete(3), empty(2))
    assert (k3e2.order, k3e2.edge_count()) == (9, 3 + 6)
    with pytest.raises(GraphError):
        corona(empty(0), complete(2))


@pytest.mark.parametrize(
    "g, h",
    [(path(3), complete(2)), (cycle(4), empty(3)), (complete(3), path(3)), (empty(2), empty(0))],
)
def test_corona_counts(g, h):
    c = corona(g, h)
    n, m = g.order, h.order
    assert c.order == n * (1 + m)
    assert c.edge_count() == g.edge_count() + n * h.edge_count() + n * m


def test_disjoint_union():
    u = disjoint_union(complete(4), complete(4))
    assert u.order == 8 and set(u.degrees) == {3}
    assert disjoint_union(empty(0), petersen()) == petersen()
    double = disjoint_union(star(2), star(2))
    assert are_isomorphic(double, corona(empty(2), empty(2)))


def test_petersen_labels():
    p = petersen()
    assert p.edge_count() == 15 and set(p.degrees) == {3}
    assert girth(p) == 5
    assert list(p.neighbors(1)) == [0, 2, 6]
    assert list(p.neighbors(4)) == [0, 3, 9]
    assert list(p.neighbors(5)) == [0, 7, 8]


def test_petersen_vertex_deleted_subgraphs_isomorphic():
    p = petersen()
    forms = {canonical_form(p.induced(v for v in range(10) if v != x)) for x in range(10)}
    assert len(forms) == 1


def test_petersen_relabel_invariant(rng):
    p = petersen()
    base = canonical_form(p)
    for _ in range(50):
        assert canonical_form(p.relabel(random_permutation(rng, 10))) == base
