import networkx as nx
import pytest
from hypothesis import strategies as st

from planar_acyclic.generators import FamilySpec, figure1, generate, random_planar_oriented
from planar_acyclic.graph import Dart, PlanarDigraph


def triangle() -> PlanarDigraph:
    """a->b->c->a drawn clockwise: a on top, b bottom right, c bottom left."""
    return PlanarDigraph(
        "abc",
        [("a", "b"), ("b", "c"), ("c", "a")],
        {
            "a": [Dart(0, "tail"), Dart(2, "head")],
            "b": [Dart(1, "tail"), Dart(0, "head")],
            "c": [Dart(2, "tail"), Dart(1, "head")],
        },
    )


def path3() -> PlanarDigraph:
    return PlanarDigraph(
        "abc",
        [("a", "b"), ("b", "c")],
        {"a": [Dart(0, "tail")], "b": [Dart(0, "head"), Dart(1, "tail")], "c": [Dart(1, "head")]},
    )


def single_arc() -> PlanarDigraph:
    return PlanarDigraph("ab", [("a", "b")], {"a": [Dart(0, "tail")], "b": [Dart(0, "head")]})


def to_nx(graph: PlanarDigraph) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(graph.vertices)
    g.add_edges_from(graph.arcs)
    return g


@pytest.fixture(scope="session")
def fig1():
    return figure1()


@pytest.fixture
def tri():
    return triangle()


@pytest.fixture(scope="session")
def octa1():
    return generate(FamilySpec("D3", 1))[0]


@pytest.fixture(scope="session")
def cubocta1():
    return generate(FamilySpec("D4", 1))[0]


# random embedded oriented planar instances, small enough for brute force
planar_instances = st.builds(
    random_planar_oriented,
    seed=st.integers(0, 10_000),
    n=st.integers(3, 9),
    min_digirth=st.sampled_from([3, 4, 5]),
)


@st.composite
def small_digraphs(draw, max_n=7):
    """Arbitrary simple digraphs (no embedding), possibly with 2-cycles."""
    n = draw(st.integers(0, max_n))
    verts = [f"v{i}" for i in range(n)]
    pairs = [(u, v) for u in verts for v in verts if u != v]
    arcs = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=14)) if pairs else []
    return PlanarDigraph(verts, arcs)
