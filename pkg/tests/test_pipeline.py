import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from planar_acyclic.fas import min_feedback_arc_set
from planar_acyclic.generators import FamilySpec, figure1_dashed, generate
from planar_acyclic.graph import GraphError, PlanarDigraph, digirth, induced_subgraph, is_acyclic
from planar_acyclic.pipeline import acyclic_set, check_trace, greedy_cover, guarantee

from conftest import path3, planar_instances, triangle


@pytest.mark.parametrize(
    "n, g, expected",
    [(12, 4, 5), (15, 5, 7), (24, 8, 15), (9, 3, 0), (10, 6, 5), (7, 7, 4), (0, 3, 0)],
)
def test_guarantee_values(n, g, expected):
    assert guarantee(n, g) == expected


def test_guarantee_infinite_digirth():
    assert guarantee(11, None) == 11
    assert guarantee(11, math.inf) == 11


def test_guarantee_rejects_small_girth():
    with pytest.raises(ValueError):
        guarantee(5, 1)


@given(st.integers(0, 500), st.integers(3, 40))
def test_guarantee_formula(n, g):
    if g == 4:
        exact = Fraction(5 * n, 12)
    elif g == 5:
        exact = Fraction(7 * n, 15)
    else:
        exact = n - Fraction(3 * n, g)
    assert guarantee(n, g) == max(0, math.ceil(exact))
    assert 0 <= guarantee(n, g) <= n


def test_greedy_empty_fas():
    cover, trace = greedy_cover(path3(), [])
    assert cover == set() and trace.steps == []


def test_greedy_triangle():
    tri = triangle()
    cover, trace = greedy_cover(tri, [0])
    assert cover == {"a"}
    assert trace.steps == [] and trace.tails == ["a"]


def test_greedy_figure1(fig1):
    fas = [fig1.arcs.index(a) for a in figure1_dashed()]
    cover, trace = greedy_cover(fig1, fas)
    assert trace.d_initial == 6 - Fraction(21, 2)
    assert trace.tails == ["a", "b", "a", "e", "g", "h"]
    assert cover == {"a", "b", "e", "g", "h"}


def test_greedy_rejects_non_fas(fig1):
    with pytest.raises(GraphError):
        greedy_cover(fig1, [0])


def test_greedy_phase_runs_when_dense():
    # many 3-cycles through hub s: f > n/2 forces a greedy step
    d3 = generate(FamilySpec("D3", 3))[0]
    cert = min_feedback_arc_set(d3)
    cover, trace = greedy_cover(d3, cert.fas)
    assert trace.d_initial == cert.f - Fraction(d3.n, 2) > 0
    assert trace.steps
    assert check_trace(trace, d3.n, cert.f, 3, len(cover)) == []


def test_pipeline_figure1(fig1):
    res = acyclic_set(fig1)
    assert len(res.acyclic_set) == 16
    assert res.bound_met and res.bound_required == guarantee(21, 3) == 0
    assert is_acyclic(induced_subgraph(fig1, res.acyclic_set))


def test_pipeline_acyclic_input():
    res = acyclic_set(path3())
    assert res.acyclic_set == ["a", "b", "c"] and res.digirth is None


def test_pipeline_rejects_digon():
    g = PlanarDigraph("ab", [("a", "b"), ("b", "a")])
    with pytest.raises(GraphError):
        acyclic_set(g)


def test_check_trace_flags_bad_cover():
    _, trace = greedy_cover(triangle(), [0])
    assert check_trace(trace, 3, 1, 3, 2)


@pytest.mark.parametrize("family, depth", [("D3", 2), ("D4", 1), ("D4", 2), ("D5", 1)])
def test_pipeline_families(family, depth):
    g = generate(FamilySpec(family, depth))[0]
    res = acyclic_set(g)
    assert res.digirth == digirth(g).value
    assert res.bound_met


@settings(max_examples=80, deadline=None)
@given(planar_instances)
def test_pipeline_random(g):
    res = acyclic_set(g)
    keep = set(res.acyclic_set)
    assert is_acyclic(induced_subgraph(g, res.acyclic_set))
    assert keep.isdisjoint(res.removed_cover)
    assert len(keep) + len(res.removed_cover) == g.n
    assert len(keep) >= guarantee(g.n, res.digirth)
    order = res.topological_order
    pos = {v: i for i, v in enumerate(order)}
    for t, h in g.arcs:
        if t in keep and h in keep:
            assert pos[t] < pos[h]
