"""The extremal graph families, the Figure 1 graph, and random instances.

Family graphs are grown by gluing a pattern into a directed-cycle face.  The
pattern's outer cycle is identified with the host face so that its arcs
coincide with the host's arcs; the next host is the pattern's central
directed face.  Embeddings for the finished graphs come from networkx's
planarity test, which is only used here, on graphs that are planar by
construction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from .graph import HEAD, TAIL, Dart, GraphError, PlanarDigraph, digirth

FAMILIES = ("D3", "D4", "D5")
FACE_CHOICES = ("innermost", "corner")
MAX_DEPTH = {"D3": 12, "D4": 8, "D5": 4}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    depth: int
    face_choice: str = "innermost"

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise GraphError(f"unknown family {self.family!r}")
        if not 0 <= self.depth <= MAX_DEPTH[self.family]:
            raise GraphError(f"depth {self.depth} outside 0..{MAX_DEPTH[self.family]}")
        if self.face_choice not in FACE_CHOICES:
            raise GraphError(f"unknown face choice {self.face_choice!r}")


@dataclass(frozen=True)
class ExpectedStats:
    n: int
    f_expected: int

    def to_dict(self) -> dict:
        return {"n": self.n, "f_expected": self.f_expected}


def expected_stats(family: str, depth: int) -> ExpectedStats:
    """Vertex count and minimum FAS size predicted by the family recurrences."""
    g, new_vertices, new_f = {"D3": (3, 3, 3), "D4": (4, 8, 5), "D5": (5, 25, 11)}[family]
    return ExpectedStats(g + new_vertices * depth, 1 + new_f * depth)


def closed_form_f(family: str, n: int) -> Fraction:
    """f as a function of n: n - 2, 5n/8 - 3/2 and 11n/25 - 6/5."""
    if family == "D3":
        return Fraction(n) - 2
    if family == "D4":
        return Fraction(5 * n, 8) - Fraction(3, 2)
    if family == "D5":
        return Fraction(11 * n, 25) - Fraction(6, 5)
    raise GraphError(f"unknown family {family!r}")


# -- embedding helpers ---------------------------------------------------


def embed(vertices: list[str], arcs: list[tuple[str, str]]) -> PlanarDigraph:
    """Attach a rotation system found by networkx to a simple planar digraph."""
    und = nx.Graph()
    und.add_nodes_from(vertices)
    und.add_edges_from(arcs)
    planar, emb = nx.check_planarity(und)
    if not planar:
        raise GraphError("graph is not planar")
    arc_of = {}
    for i, (t, h) in enumerate(arcs):
        arc_of[(t, h)] = Dart(i, TAIL)
        arc_of[(h, t)] = Dart(i, HEAD)
    rotation = {
        v: [arc_of[(v, w)] for w in emb.neighbors_cw_order(v)] if und.degree(v) else []
        for v in vertices
    }
    return PlanarDigraph(vertices, arcs, rotation)


# -- Figure 1 ------------------------------------------------------------

FIGURE1_SOLID = (
    "b>j j>a c>l l>a c>k k>b c>h i>a c>g f>b b>e d>a b>m m>a c>n n>b c>o o>a "
    "f>r r>g f>s s>g d>p p>e d>q q>e i>t t>h i>u u>h e>a b>d c>f g>b h>a c>i"
)
FIGURE1_DASHED = "a>b b>c a>c e>d g>f h>i"


def _parse_arcs(text: str) -> list[tuple[str, str]]:
    return [tuple(tok.split(">")) for tok in text.split()]


def figure1_dashed() -> list[tuple[str, str]]:
    return _parse_arcs(FIGURE1_DASHED)


def figure1() -> PlanarDigraph:
    """The 21-vertex, 42-arc graph whose unique minimum FAS is its dashed arcs."""
    arcs = _parse_arcs(FIGURE1_SOLID) + _parse_arcs(FIGURE1_DASHED)
    vertices = [chr(c) for c in range(ord("a"), ord("u") + 1)]
    return embed(vertices, arcs)


# -- family patterns -----------------------------------------------------

# Figure 2: host a->b->c->a; next host is d->e->f->d.
OCTAHEDRAL = {
    "boundary": ("a", "b", "c"),
    "new": ("d", "e", "f"),
    "arcs": _parse_arcs("f>a a>e d>b b>f e>c c>d d>e e>f f>d"),
    "inner": ("d", "e", "f"),
    "corner": ("a", "e", "f"),
}

# Figure 3: host a->b->c->d->a; next host is i->l->k->j->i.
CUBOCTAHEDRAL = {
    "boundary": ("a", "b", "c", "d"),
    "new": ("e", "f", "g", "h", "i", "j", "k", "l"),
    "arcs": _parse_arcs(
        "a>e e>b b>f f>c c>g g>d d>h h>a e>i i>h h>l l>g g>k k>f f>j j>e "
        "j>i k>j l>k i>l"
    ),
    "inner": ("i", "l", "k", "j"),
    "corner": ("a", "e", "i", "h"),
}


def _icosidodecahedral() -> dict:
    """Icosidodecahedral patch with every pentagon a directed 5-cycle.

    Vertices are the 30 edges of a dodecahedron; each dodecahedron face
    gives a pentagon and each dodecahedron vertex a triangle.  Pentagons are
    oriented by layer (top, upper ring, lower ring, bottom) with alternating
    sense, so the three pentagons around any triangle never all agree and
    no triangle becomes a directed cycle.
    """
    dod = nx.dodecahedral_graph()
    _, emb = nx.check_planarity(dod)
    faces = []
    seen = set()
    for u, v in sorted(emb.edges()):
        if (u, v) in seen:
            continue
        face = emb.traverse_face(u, v, mark_half_edges=seen)
        faces.append(face)
    assert len(faces) == 12
    top = faces[0]
    top_set = set(top)
    upper = [f for f in faces[1:] if len(top_set & set(f)) == 2]
    bottom = [f for f in faces[1:] if not top_set & set(f) and
              all(len(set(f) & set(u)) <= 1 for u in upper)]
    assert len(upper) == 5 and len(bottom) == 1
    bottom = bottom[0]
    lower = [f for f in faces[1:] if f is not bottom and f not in upper]
    assert len(lower) == 5

    def edge_name(u, v):
        a, b = sorted((u, v))
        return f"{a}-{b}"

    def pentagon(face, forward):
        names = [edge_name(face[k], face[(k + 1) % 5]) for k in range(5)]
        return names if forward else names[::-1]

    arcs = []
    cycles = {}
    for face, sense in [(top, True), *((f, False) for f in upper),
                        *((f, True) for f in lower), (bottom, False)]:
        cyc = pentagon(face, sense)
        cycles[id(face)] = cyc
        arcs += [(cyc[k], cyc[(k + 1) % 5]) for k in range(5)]

    boundary = tuple(cycles[id(top)])
    inner = tuple(cycles[id(bottom)])
    corner = next(tuple(cycles[id(f)]) for f in upper if boundary[0] in cycles[id(f)])
    others = sorted({v for a in arcs for v in a} - set(boundary) - set(inner))
    # boundary keeps its slot letters, new vertices are numbered
    labels = {b: "abcde"[k] for k, b in enumerate(boundary)}
    labels.update({v: f"v{k:02d}" for k, v in enumerate([*inner, *others])})
    return {
        "boundary": tuple(labels[v] for v in boundary),
        "new": tuple(labels[v] for v in [*inner, *others]),
        "arcs": [(labels[t], labels[h]) for t, h in arcs],
        "inner": tuple(labels[v] for v in inner),
        "corner": tuple(labels[v] for v in corner),
    }


_PATTERNS = {"D3": OCTAHEDRAL, "D4": CUBOCTAHEDRAL}


def pattern(family: str) -> dict:
    if family == "D5":
        if "D5" not in _PATTERNS:
            _PATTERNS["D5"] = _icosidodecahedral()
        return _PATTERNS["D5"]
    return _PATTERNS[family]


def _base_names(k: int) -> list[str]:
    return [chr(ord("a") + i) for i in range(k)]


def build_family(spec: FamilySpec) -> tuple[list[str], list[tuple[str, str]]]:
    pat = pattern(spec.family)
    k = len(pat["boundary"])
    vertices = _base_names(k)
    arcs = [(vertices[i], vertices[(i + 1) % k]) for i in range(k)]
    host = tuple(vertices)
    for step in range(1, spec.depth + 1):
        name = dict(zip(pat["boundary"], host))
        for v in pat["new"]:
            name[v] = f"{v}{step}" if spec.family != "D5" else f"{v}_{step}"
        vertices += [name[v] for v in pat["new"]]
        pattern_boundary_arcs = {
            (pat["boundary"][i], pat["boundary"][(i + 1) % k]) for i in range(k)
        }
        arcs += [(name[t], name[h]) for t, h in pat["arcs"]
                 if (t, h) not in pattern_boundary_arcs]
        key = "inner" if spec.face_choice == "innermost" else "corner"
        host = tuple(name[v] for v in pat[key])
    return vertices, arcs


def generate(spec: FamilySpec) -> tuple[PlanarDigraph, ExpectedStats]:
    vertices, arcs = build_family(spec)
    graph = embed(vertices, arcs)
    stats = expected_stats(spec.family, spec.depth)
    assert graph.n == stats.n
    return graph, stats


def family_metadata(spec: FamilySpec) -> dict:
    stats = expected_stats(spec.family, spec.depth)
    return {"family": spec.family, "depth": spec.depth, "n": stats.n,
            "f_expected": stats.f_expected}


# -- random instances ----------------------------------------------------


def random_planar_oriented(seed: int, n: int, min_digirth: int = 3) -> PlanarDigraph:
    """Random stacked triangulation, randomly oriented, short cycles broken.

    Vertices are inserted one at a time into a uniformly chosen triangular
    face.  After orienting each edge by a coin flip, the lowest arc of the
    shortest directed cycle is deleted while that cycle is shorter than
    ``min_digirth``.  Deleted arcs always lie on a cycle, so the graph stays
    connected.
    """
    if n < 3:
        raise GraphError("need n >= 3")
    if min_digirth < 3:
        raise GraphError("min_digirth must be at least 3")
    rng = random.Random(seed)
    names = [f"v{i}" for i in range(n)]
    # clockwise neighbour lists; faces are (x, y, z) with succ_y(x) == z
    rot = {names[0]: [names[1], names[2]], names[1]: [names[2], names[0]],
           names[2]: [names[0], names[1]]}
    faces = [(names[0], names[1], names[2]), (names[0], names[2], names[1])]
    edges = [(names[0], names[1]), (names[1], names[2]), (names[2], names[0])]
    for i in range(3, n):
        x = names[i]
        a, b, c = faces.pop(rng.randrange(len(faces)))
        # inside face a->b->c: x sits between a and c at b, etc.
        _insert_after(rot[b], a, x)
        _insert_after(rot[c], b, x)
        _insert_after(rot[a], c, x)
        rot[x] = [a, c, b]
        faces += [(a, b, x), (b, c, x), (c, a, x)]
        edges += [(a, x), (b, x), (c, x)]

    arcs = [(u, v) if rng.random() < 0.5 else (v, u) for u, v in edges]
    while True:
        g = _from_neighbour_rotation(names, arcs, rot)
        dg = digirth(g)
        if dg.infinite or dg.value >= min_digirth:
            return g
        t, h = arcs[min(dg.witness)]
        arcs.pop(min(dg.witness))
        rot[t].remove(h)
        rot[h].remove(t)


def _insert_after(seq: list[str], anchor: str, item: str) -> None:
    seq.insert(seq.index(anchor) + 1, item)


def _from_neighbour_rotation(
    names: list[str], arcs: list[tuple[str, str]], rot: dict[str, list[str]]
) -> PlanarDigraph:
    dart_of = {}
    for i, (t, h) in enumerate(arcs):
        dart_of[(t, h)] = Dart(i, TAIL)
        dart_of[(h, t)] = Dart(i, HEAD)
    rotation = {v: [dart_of[(v, w)] for w in rot[v]] for v in names}
    return PlanarDigraph(names, arcs, rotation)
