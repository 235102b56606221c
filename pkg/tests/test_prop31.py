from hypothesis import given, settings

from planar_acyclic.graph import PlanarDigraph, induced_subgraph, is_acyclic
from planar_acyclic.prop31 import enumerate_vertex_covers, is_vertex_cover, verify_prop31

from conftest import path3, planar_instances, single_arc, triangle


def test_covers_single_arc():
    covers = enumerate_vertex_covers(single_arc(), [0])
    assert covers == [frozenset("a"), frozenset("b")]


def test_covers_two_disjoint_arcs():
    g = PlanarDigraph("abcd", [("a", "b"), ("c", "d")])
    assert len(enumerate_vertex_covers(g, [0, 1])) == 4


def test_covers_path():
    # {b} covers both; {a, c} is the other minimal cover
    covers = enumerate_vertex_covers(path3(), [0, 1])
    assert covers == [frozenset("b"), frozenset("ac")]


def test_covers_are_minimal_covers(fig1):
    fas = [fig1.arcs.index(a) for a in [("a", "b"), ("b", "c"), ("a", "c")]]
    covers = enumerate_vertex_covers(fig1, fas)
    assert covers
    for c in covers:
        assert is_vertex_cover(fig1, fas, c)
        assert len(c & set("abc")) >= 2
        for v in c:
            assert not is_vertex_cover(fig1, fas, c - {v})


def test_figure1(fig1):
    rep = verify_prop31(fig1, expect_unique=True)
    assert rep.f == 6 and rep.min_fas_count == 1
    assert rep.applicable and rep.all_covers_cyclic
    for w in rep.witness_per_cover:
        sub = induced_subgraph(fig1, w.cover)
        assert not is_acyclic(sub)
        assert set(w.cycle) <= set(w.cover)


def test_triangle_has_acyclic_cover():
    rep = verify_prop31(triangle())
    assert rep.min_fas_count == 3
    assert not rep.all_covers_cyclic


def test_acyclic_not_applicable():
    rep = verify_prop31(path3())
    assert rep.f == 0 and not rep.applicable and not rep.all_covers_cyclic


@settings(max_examples=40, deadline=None)
@given(planar_instances)
def test_witnesses_consistent(g):
    rep = verify_prop31(g)
    for w in rep.witness_per_cover:
        cyclic = not is_acyclic(induced_subgraph(g, w.cover))
        assert cyclic == (w.cycle is not None)
        # adding vertices never destroys an induced cycle
        if cyclic:
            assert not is_acyclic(induced_subgraph(g, list(g.vertices)))
