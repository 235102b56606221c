"""Digraphs with an optional combinatorial embedding, plus basic predicates.

A :class:`PlanarDigraph` stores vertices as opaque strings and arcs as
``(tail, head)`` pairs whose arc id is the list index.  The optional rotation
system lists, for every vertex, the clockwise cyclic order of its incident
dart ends.  A dart end is ``Dart(arc, "tail")`` at the tail of the arc and
``Dart(arc, "head")`` at its head.
"""

from __future__ import annotations

import heapq
import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

TAIL = "tail"
HEAD = "head"


class GraphError(ValueError):
    """Malformed graph or an operation applied to an unsuitable graph."""


class BudgetExhausted(RuntimeError):
    """A brute-force or branch-and-bound search ran past its configured limit."""


class Dart(NamedTuple):
    arc: int
    end: str


def vertex_key(v: str) -> bytes:
    """Sort key for bytewise vertex-id comparison."""
    return v.encode("utf-8")


@dataclass(frozen=True, eq=False)
class PlanarDigraph:
    vertices: tuple[str, ...]
    arcs: tuple[tuple[str, str], ...]
    rotation: dict[str, tuple[Dart, ...]] | None = None

    def __init__(
        self,
        vertices: Iterable[str],
        arcs: Iterable[tuple[str, str]],
        rotation: dict[str, Iterable[Dart | tuple[int, str]]] | None = None,
    ):
        verts = tuple(vertices)
        arc_list = tuple((str(t), str(h)) for t, h in arcs)
        if len(set(verts)) != len(verts):
            raise GraphError("duplicate vertex id")
        known = set(verts)
        for i, (t, h) in enumerate(arc_list):
            if t not in known or h not in known:
                raise GraphError(f"arc {i} ({t}->{h}) has an undeclared endpoint")
        rot = None
        if rotation is not None:
            rot = {}
            for v in verts:
                rot[v] = tuple(Dart(int(a), str(e)) for a, e in rotation.get(v, ()))
            extra = set(rotation) - known
            if extra:
                raise GraphError(f"rotation mentions unknown vertices {sorted(extra)}")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "arcs", arc_list)
        object.__setattr__(self, "rotation", rot)

    def __eq__(self, other):
        if not isinstance(other, PlanarDigraph):
            return NotImplemented
        return (
            self.vertices == other.vertices
            and self.arcs == other.arcs
            and self.rotation == other.rotation
        )

    def __repr__(self):
        emb = "embedded" if self.rotation is not None else "no embedding"
        return f"PlanarDigraph(n={self.n}, m={self.m}, {emb})"

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.arcs)

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def out_arcs(self) -> dict[str, tuple[int, ...]]:
        out: dict[str, list[int]] = {v: [] for v in self.vertices}
        for i, (t, _) in enumerate(self.arcs):
            out[t].append(i)
        return {v: tuple(a) for v, a in out.items()}

    @cached_property
    def in_arcs(self) -> dict[str, tuple[int, ...]]:
        inc: dict[str, list[int]] = {v: [] for v in self.vertices}
        for i, (_, h) in enumerate(self.arcs):
            inc[h].append(i)
        return {v: tuple(a) for v, a in inc.items()}

    def endpoint(self, dart: Dart) -> str:
        t, h = self.arcs[dart.arc]
        return t if dart.end == TAIL else h

    def arc_mask(self, arc_ids: Iterable[int]) -> int:
        mask = 0
        for a in arc_ids:
            mask |= 1 << a
        return mask

    def without_arcs(self, arc_ids: Iterable[int]) -> PlanarDigraph:
        """Copy with the given arcs deleted; remaining arcs are renumbered."""
        drop = set(arc_ids)
        keep = [i for i in range(self.m) if i not in drop]
        return self._restrict(set(self.vertices), keep)

    def _restrict(self, keep_vertices: set[str], keep_arcs: list[int]) -> PlanarDigraph:
        renum = {old: new for new, old in enumerate(keep_arcs)}
        verts = [v for v in self.vertices if v in keep_vertices]
        arcs = [self.arcs[i] for i in keep_arcs]
        rot = None
        if self.rotation is not None:
            rot = {
                v: [Dart(renum[d.arc], d.end) for d in self.rotation[v] if d.arc in renum]
                for v in verts
            }
        return PlanarDigraph(verts, arcs, rot)


# -- acyclicity ----------------------------------------------------------


@dataclass(frozen=True)
class Acyclicity:
    """Outcome of :func:`is_acyclic`.

    ``order`` is a topological order when the graph is acyclic; otherwise
    ``cycle`` holds the arc ids of a directed cycle in traversal order.
    """

    acyclic: bool
    order: tuple[str, ...] | None = None
    cycle: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.acyclic


def is_acyclic(graph: PlanarDigraph, removed_mask: int = 0) -> Acyclicity:
    """Kahn's algorithm; ties go to the earliest declared vertex.

    Arcs whose bit is set in ``removed_mask`` are ignored.
    """
    indeg = {v: 0 for v in graph.vertices}
    for i, (_, h) in enumerate(graph.arcs):
        if not removed_mask >> i & 1:
            indeg[h] += 1
    idx = graph.index
    ready = [idx[v] for v, d in indeg.items() if d == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        v = graph.vertices[heapq.heappop(ready)]
        order.append(v)
        for a in graph.out_arcs[v]:
            if removed_mask >> a & 1:
                continue
            h = graph.arcs[a][1]
            indeg[h] -= 1
            if indeg[h] == 0:
                heapq.heappush(ready, idx[h])
    if len(order) == graph.n:
        return Acyclicity(True, order=tuple(order))
    left = {v for v, d in indeg.items() if d > 0}
    return Acyclicity(False, cycle=_cycle_in(graph, left, removed_mask))


def _cycle_in(graph: PlanarDigraph, left: set[str], removed_mask: int) -> tuple[int, ...]:
    # every vertex of `left` keeps an in-arc from `left`, so walking backwards must repeat
    v = min(left, key=graph.index.__getitem__)
    via: dict[str, int] = {}
    while v not in via:
        a = next(
            a for a in graph.in_arcs[v]
            if not removed_mask >> a & 1 and graph.arcs[a][0] in left
        )
        via[v] = a
        v = graph.arcs[a][0]
    start = v
    cycle = []
    while True:
        a = via[v]
        cycle.append(a)
        v = graph.arcs[a][0]
        if v == start:
            break
    cycle.reverse()
    return tuple(cycle)


# -- digirth -------------------------------------------------------------


@dataclass(frozen=True)
class Digirth:
    """Shortest directed cycle length; ``value is None`` means acyclic."""

    value: int | None
    witness: tuple[int, ...] = ()

    @property
    def infinite(self) -> bool:
        return self.value is None

    def __str__(self) -> str:
        return "inf" if self.value is None else str(self.value)


def shortest_path_arcs(
    graph: PlanarDigraph, source: str, target: str, removed_mask: int = 0
) -> list[int] | None:
    """BFS path of arcs from source to target, or None if unreachable."""
    if source == target:
        return []
    via = {source: -1}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for a in graph.out_arcs[u]:
            if removed_mask >> a & 1:
                continue
            w = graph.arcs[a][1]
            if w in via:
                continue
            via[w] = a
            if w == target:
                path = []
                while w != source:
                    path.append(via[w])
                    w = graph.arcs[via[w]][0]
                path.reverse()
                return path
            queue.append(w)
    return None


def shortest_cycle_through_arc(
    graph: PlanarDigraph, arc: int, removed_mask: int = 0
) -> tuple[int, ...] | None:
    t, h = graph.arcs[arc]
    path = shortest_path_arcs(graph, h, t, removed_mask | (1 << arc))
    if path is None:
        return None
    return (arc, *path)


def digirth(graph: PlanarDigraph, removed_mask: int = 0) -> Digirth:
    """Exact digirth via one BFS per vertex.

    The witness is the first shortest cycle found scanning vertices in
    declared order, returned as arc ids in traversal order.
    """
    best: tuple[int, ...] | None = None
    for s in graph.vertices:
        dist = {s: 0}
        via: dict[str, int] = {}
        queue = deque([s])
        found = None
        while queue and found is None:
            u = queue.popleft()
            if best is not None and dist[u] + 1 >= len(best):
                break
            for a in graph.out_arcs[u]:
                if removed_mask >> a & 1:
                    continue
                w = graph.arcs[a][1]
                if w == s:
                    found = (u, a)
                    break
                if w not in dist:
                    dist[w] = dist[u] + 1
                    via[w] = a
                    queue.append(w)
        if found is not None:
            u, a = found
            path = [a]
            while u != s:
                path.append(via[u])
                u = graph.arcs[via[u]][0]
            path.reverse()
            if best is None or len(path) < len(best):
                best = tuple(path)
    if best is None:
        return Digirth(None)
    return Digirth(len(best), best)


def induced_subgraph(graph: PlanarDigraph, keep: Iterable[str]) -> PlanarDigraph:
    keep = set(keep)
    unknown = keep - set(graph.vertices)
    if unknown:
        raise GraphError(f"unknown vertex ids {sorted(unknown)}")
    arcs = [i for i, (t, h) in enumerate(graph.arcs) if t in keep and h in keep]
    return graph._restrict(keep, arcs)


def cycle_vertices(graph: PlanarDigraph, cycle: Iterable[int]) -> list[str]:
    return [graph.arcs[a][0] for a in cycle]


def is_directed_cycle(graph: PlanarDigraph, cycle: tuple[int, ...]) -> bool:
    """True iff the arcs form a closed directed walk through distinct vertices."""
    if not cycle:
        return False
    tails = [graph.arcs[a][0] for a in cycle]
    if len(set(tails)) != len(tails):
        return False
    return all(
        graph.arcs[a][1] == graph.arcs[cycle[(k + 1) % len(cycle)]][0]
        for k, a in enumerate(cycle)
    )


# -- validation ----------------------------------------------------------


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)
    faces: int | None = None
    euler_ok: bool | None = None
    edge_bound_ok: bool | None = None

    @property
    def valid(self) -> bool:
        return not self.violations


def components(graph: PlanarDigraph) -> list[list[str]]:
    """Weakly connected components, each in declared vertex order."""
    nbrs: dict[str, set[str]] = {v: set() for v in graph.vertices}
    for t, h in graph.arcs:
        nbrs[t].add(h)
        nbrs[h].add(t)
    seen: set[str] = set()
    comps = []
    for v in graph.vertices:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in nbrs[u]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append([u for u in graph.vertices if u in comp])
    return comps


def is_connected(graph: PlanarDigraph) -> bool:
    return len(components(graph)) <= 1


def oriented_violations(graph: PlanarDigraph) -> list[str]:
    out = []
    pairs: dict[frozenset, int] = {}
    for i, (t, h) in enumerate(graph.arcs):
        if t == h:
            out.append(f"arc {i} is a self-loop at {t}")
            continue
        key = frozenset((t, h))
        if key in pairs:
            j = pairs[key]
            out.append(f"arcs {j} and {i} join the same pair {{{t},{h}}}")
        else:
            pairs[key] = i
    return out


def rotation_violations(graph: PlanarDigraph) -> list[str]:
    if graph.rotation is None:
        return ["no rotation system"]
    out = []
    seen: set[Dart] = set()
    for v in graph.vertices:
        for d in graph.rotation[v]:
            if not 0 <= d.arc < graph.m or d.end not in (TAIL, HEAD):
                out.append(f"rotation at {v} has invalid dart {tuple(d)}")
                continue
            if graph.endpoint(d) != v:
                out.append(f"rotation at {v} lists dart {tuple(d)} of another vertex")
            if d in seen:
                out.append(f"dart {tuple(d)} listed twice")
            seen.add(d)
    for a in range(graph.m):
        for end in (TAIL, HEAD):
            if Dart(a, end) not in seen:
                out.append(f"dart ({a}, {end}) missing from rotation")
    return out


def validate(
    graph: PlanarDigraph, require_oriented: bool = True, require_embedding: bool = True
) -> ValidationReport:
    """Report every violated invariant; never raises."""
    from .embedding import trace_faces

    report = ValidationReport()
    if require_oriented:
        report.violations += oriented_violations(graph)
        if graph.n >= 3:
            report.edge_bound_ok = graph.m <= 3 * graph.n - 6
            if not report.edge_bound_ok:
                report.violations.append(
                    f"m = {graph.m} > 3n - 6 = {3 * graph.n - 6}: not planar"
                )
    if graph.rotation is None:
        if require_embedding:
            report.violations.append("no rotation system")
        return report
    rot = rotation_violations(graph)
    report.violations += rot
    if rot:
        report.euler_ok = False
        return report
    faces = trace_faces(graph).faces
    report.faces = len(faces)
    comp_of = {}
    comps = components(graph)
    for c, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = c
    nf = [0] * len(comps)
    narcs = [0] * len(comps)
    for t, _ in graph.arcs:
        narcs[comp_of[t]] += 1
    for face in faces:
        nf[comp_of[graph.arcs[face[0][0]][0]]] += 1
    ok = True
    for c, comp in enumerate(comps):
        f = nf[c] if narcs[c] else 1
        if len(comp) - narcs[c] + f != 2:
            ok = False
            report.violations.append(
                f"Euler fails on component of {comp[0]}: "
                f"n={len(comp)} m={narcs[c]} faces={f}"
            )
    report.euler_ok = ok
    return report


# -- JSON ----------------------------------------------------------------


def to_dict(graph: PlanarDigraph) -> dict:
    d: dict = {"vertices": list(graph.vertices), "arcs": [list(a) for a in graph.arcs]}
    if graph.rotation is not None:
        d["rotation"] = {
            v: [{"arc": r.arc, "end": r.end} for r in graph.rotation[v]]
            for v in graph.vertices
        }
    return d


def from_dict(data: dict) -> PlanarDigraph:
    try:
        rotation = None
        if "rotation" in data:
            rotation = {
                v: [Dart(int(r["arc"]), str(r["end"])) for r in darts]
                for v, darts in data["rotation"].items()
            }
        return PlanarDigraph(
            [str(v) for v in data["vertices"]],
            [(t, h) for t, h in data["arcs"]],
            rotation,
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"malformed graph JSON: {exc}") from exc


def dumps(graph: PlanarDigraph) -> str:
    return json.dumps(to_dict(graph), ensure_ascii=False) + "\n"


def loads(text: str) -> PlanarDigraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise GraphError("graph JSON must be an object")
    return from_dict(data)
