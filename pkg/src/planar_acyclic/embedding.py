"""Face tracing, planar duals and the cycle/cut correspondence.

Conventions, fixed once for the whole package:

* Rotations are clockwise.  A walk that arrives at ``v`` along some edge
  leaves along the clockwise successor (in ``v``'s rotation) of that edge.
  This keeps the face on the *left* of every traversed dart, so bounded
  faces are walked counterclockwise.
* A traversal dart is ``(arc, forward)``; ``forward`` means tail to head.
* The dual arc of primal arc ``u -> v`` runs from the face containing the
  forward dart to the face containing the backward dart.  Crossing from the
  face on the left of ``u -> v`` to the face on its right puts ``v`` on the
  left of the crossing direction.  For a clockwise directed triangle every
  dual arc therefore points into the bounded face.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .cycles import enumerate_simple_cycles
from .graph import (
    HEAD,
    TAIL,
    BudgetExhausted,
    Dart,
    GraphError,
    PlanarDigraph,
    is_connected,
    rotation_violations,
)

DUAL_CUT_LIMIT = 24
BIJECTION_PRIMAL_LIMIT = 24
BIJECTION_CYCLE_LIMIT = 200_000


class Step(NamedTuple):
    arc: int
    forward: bool


@dataclass(frozen=True)
class FaceSet:
    faces: tuple[tuple[Step, ...], ...]
    face_of: dict[Step, int]

    def __len__(self) -> int:
        return len(self.faces)


def _require_rotation(graph: PlanarDigraph) -> None:
    bad = rotation_violations(graph)
    if bad:
        raise GraphError("invalid rotation system: " + "; ".join(bad[:3]))


def trace_faces(graph: PlanarDigraph) -> FaceSet:
    _require_rotation(graph)
    succ: dict[Dart, Dart] = {}
    for v in graph.vertices:
        rot = graph.rotation[v]
        for k, d in enumerate(rot):
            succ[d] = rot[(k + 1) % len(rot)]

    face_of: dict[Step, int] = {}
    faces = []
    for a in range(graph.m):
        for fwd in (True, False):
            start = Step(a, fwd)
            if start in face_of:
                continue
            face = []
            step = start
            while step not in face_of:
                face_of[step] = len(faces)
                face.append(step)
                # the end we arrive at, then rotate clockwise to leave
                arrive = Dart(step.arc, HEAD if step.forward else TAIL)
                nxt = succ[arrive]
                step = Step(nxt.arc, nxt.end == TAIL)
            faces.append(tuple(face))
    return FaceSet(tuple(faces), face_of)


@dataclass(frozen=True)
class DualDigraph:
    graph: PlanarDigraph
    primal_arc_of: tuple[int, ...]
    faces: FaceSet

    def to_dict(self) -> dict:
        from .graph import to_dict

        d = to_dict(self.graph)
        d["primal_arc_of"] = list(self.primal_arc_of)
        return d


def face_name(k: int) -> str:
    return f"F{k}"


def dual(graph: PlanarDigraph) -> DualDigraph:
    """Planar dual; dual arc ``i`` crosses primal arc ``i``."""
    if graph.rotation is None:
        raise GraphError("dual needs a rotation system")
    if not is_connected(graph):
        raise GraphError("dual of a disconnected graph is not defined here")
    fs = trace_faces(graph)
    verts = [face_name(k) for k in range(len(fs))]
    arcs = [
        (face_name(fs.face_of[Step(a, True)]), face_name(fs.face_of[Step(a, False)]))
        for a in range(graph.m)
    ]
    # a face walk is counterclockwise around the dual vertex; reverse it
    rotation = {
        face_name(k): [Dart(s.arc, TAIL if s.forward else HEAD) for s in reversed(face)]
        for k, face in enumerate(fs.faces)
    }
    if graph.m == 0:
        verts = [face_name(0)]
        rotation = {face_name(0): []}
    return DualDigraph(PlanarDigraph(verts, arcs, rotation), tuple(range(graph.m)), fs)


# -- directed cuts -------------------------------------------------------


@dataclass(frozen=True)
class DirectedCut:
    source_side: frozenset[str]
    cut_arcs: frozenset[int]


def _undirected_nbr_masks(g: PlanarDigraph) -> list[int]:
    idx = g.index
    nbr = [0] * g.n
    for t, h in g.arcs:
        if t != h:
            nbr[idx[t]] |= 1 << idx[h]
            nbr[idx[h]] |= 1 << idx[t]
    return nbr


def _connected_mask(mask: int, nbr: list[int]) -> bool:
    if not mask:
        return False
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = nbr[low.bit_length() - 1] & mask & ~seen
        seen |= new
        frontier |= new
    return seen == mask


def enumerate_directed_cuts(
    dual_graph: DualDigraph | PlanarDigraph,
    minimal_only: bool = False,
    limit: int = DUAL_CUT_LIMIT,
) -> list[DirectedCut]:
    """Every nonempty proper vertex set X with no arc entering X.

    Sides are assigned vertex by vertex and a branch dies as soon as an arc
    runs from the complement into X.  With ``minimal_only`` both sides must
    be connected in the underlying undirected graph.
    """
    g = dual_graph.graph if isinstance(dual_graph, DualDigraph) else dual_graph
    n = g.n
    if n > limit:
        raise BudgetExhausted(f"{n} dual vertices exceeds cut enumeration limit {limit}")
    idx = g.index
    # for vertex k: arcs to earlier vertices, as (other, k_is_tail)
    back: list[list[tuple[int, bool]]] = [[] for _ in range(n)]
    for t, h in g.arcs:
        i, j = idx[t], idx[h]
        if i == j:
            continue
        if i < j:
            back[j].append((i, False))
        else:
            back[i].append((j, True))
    nbr = _undirected_nbr_masks(g)
    full = (1 << n) - 1

    results: list[int] = []

    def extend(k: int, xmask: int) -> None:
        if k == n:
            if xmask and xmask != full:
                results.append(xmask)
            return
        for in_x in (True, False):
            ok = True
            for other, k_is_tail in back[k]:
                other_in_x = bool(xmask >> other & 1)
                # forbidden: tail outside X, head inside X
                if k_is_tail and not in_x and other_in_x:
                    ok = False
                    break
                if not k_is_tail and in_x and not other_in_x:
                    ok = False
                    break
            if ok:
                extend(k + 1, xmask | (1 << k) if in_x else xmask)

    if n:
        extend(0, 0)

    cuts = []
    seen: set[frozenset[int]] = set()
    for xmask in sorted(results):
        if minimal_only and not (
            _connected_mask(xmask, nbr) and _connected_mask(full & ~xmask, nbr)
        ):
            continue
        arcs = frozenset(
            a for a, (t, h) in enumerate(g.arcs)
            if xmask >> idx[t] & 1 and not xmask >> idx[h] & 1
        )
        if not arcs or arcs in seen:
            continue
        seen.add(arcs)
        side = frozenset(g.vertices[i] for i in range(n) if xmask >> i & 1)
        cuts.append(DirectedCut(side, arcs))
    return cuts


def cycle_cut(dual_graph: DualDigraph, cycle: tuple[int, ...]) -> DirectedCut:
    """Dual arcs crossing a primal cycle, with X the faces left of the cycle.

    X is grown from the face left of the cycle's first arc without crossing
    any cycle arc.  The returned cut is only a directed cut when no dual arc
    enters X; callers check that.
    """
    g = dual_graph.graph
    crossing = {dual_graph.primal_arc_of.index(a) for a in cycle}
    start = g.arcs[next(iter(sorted(crossing)))][0]
    side = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for a in g.out_arcs[u] + g.in_arcs[u]:
            if a in crossing:
                continue
            t, h = g.arcs[a]
            w = h if t == u else t
            if w not in side:
                side.add(w)
                stack.append(w)
    cut = frozenset(a for a, (t, h) in enumerate(g.arcs) if (t in side) != (h in side))
    return DirectedCut(frozenset(side), cut)


def is_directed_cut(g: PlanarDigraph, cut: DirectedCut) -> bool:
    x = cut.source_side
    for a, (t, h) in enumerate(g.arcs):
        if (t in x) != (h in x):
            if h in x or a not in cut.cut_arcs:
                return False
    return bool(cut.cut_arcs)


@dataclass(frozen=True)
class BijectionReport:
    cycle_count: int
    minimal_cut_count: int
    equal: bool
    matched: bool

    def to_dict(self) -> dict:
        return {
            "cycle_count": self.cycle_count,
            "minimal_cut_count": self.minimal_cut_count,
            "equal": self.equal,
            "matched": self.matched,
        }


def verify_bijection(
    graph: PlanarDigraph,
    primal_limit: int = BIJECTION_PRIMAL_LIMIT,
    dual_limit: int = DUAL_CUT_LIMIT,
) -> BijectionReport:
    """Count simple directed cycles against minimal directed cuts of the dual.

    ``matched`` additionally says the crossing set of every cycle is exactly
    one of the minimal cuts.
    """
    if graph.n > primal_limit:
        raise BudgetExhausted(f"{graph.n} vertices exceeds limit {primal_limit}")
    d = dual(graph)
    cuts = enumerate_directed_cuts(d, minimal_only=True, limit=dual_limit)
    cycles = enumerate_simple_cycles(graph, max_count=BIJECTION_CYCLE_LIMIT)
    if cycles.overflow:
        raise BudgetExhausted("too many simple cycles to enumerate")
    primal_to_dual = {p: i for i, p in enumerate(d.primal_arc_of)}
    cut_sets = {c.cut_arcs for c in cuts}
    crossing_sets = {frozenset(primal_to_dual[a] for a in c) for c in cycles}
    matched = crossing_sets == cut_sets and len(crossing_sets) == len(cycles)
    return BijectionReport(len(cycles), len(cuts), len(cycles) == len(cuts), matched)
