"""Exhaustive check that no vertex cover of a minimum FAS is itself acyclic."""

from __future__ import annotations

from dataclasses import dataclass, field

from .fas import count_minimum_fas, min_fas_search, minimum_fas_sets
from .graph import (
    BudgetExhausted,
    GraphError,
    PlanarDigraph,
    cycle_vertices,
    digirth,
    induced_subgraph,
)

COVER_ARC_LIMIT = 12


def enumerate_vertex_covers(
    graph: PlanarDigraph, arcs, minimal_only: bool = True
) -> list[frozenset[str]]:
    """Vertex covers of ``arcs`` built by choosing tail or head per arc.

    Every minimal cover arises this way.  Without ``minimal_only`` the
    result is all distinct covers produced by the branching (each arc
    contributes exactly one chosen endpoint).
    """
    arcs = sorted(set(arcs))
    if len(arcs) > COVER_ARC_LIMIT:
        raise BudgetExhausted(f"{len(arcs)} arcs exceeds cover limit {COVER_ARC_LIMIT}")
    covers: set[frozenset[str]] = {frozenset()}
    for a in arcs:
        t, h = graph.arcs[a]
        nxt = set()
        for c in covers:
            if t in c or h in c:
                nxt.add(c)
            else:
                nxt.add(c | {t})
                nxt.add(c | {h})
        covers = nxt
    if minimal_only:
        covers = {c for c in covers if _is_minimal(graph, arcs, c)}
    return sorted(covers, key=lambda c: (len(c), sorted(c)))


def is_vertex_cover(graph: PlanarDigraph, arcs, cover) -> bool:
    return all(graph.arcs[a][0] in cover or graph.arcs[a][1] in cover for a in arcs)


def _is_minimal(graph: PlanarDigraph, arcs, cover) -> bool:
    return all(not is_vertex_cover(graph, arcs, cover - {v}) for v in cover)


@dataclass
class CoverWitness:
    fas: list[int]
    cover: list[str]
    cycle: list[str] | None

    def to_dict(self) -> dict:
        return {"fas": self.fas, "cover": self.cover, "cycle": self.cycle}


@dataclass
class Prop31Report:
    f: int
    min_fas_count: int
    all_covers_cyclic: bool
    applicable: bool
    witness_per_cover: list[CoverWitness] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "f": self.f,
            "min_fas_count": self.min_fas_count,
            "all_covers_cyclic": self.all_covers_cyclic,
            "applicable": self.applicable,
            "witness_per_cover": [w.to_dict() for w in self.witness_per_cover],
        }


def verify_prop31(graph: PlanarDigraph, expect_unique: bool = False) -> Prop31Report:
    """Check every minimal cover of every minimum FAS for an induced cycle.

    Minimal covers suffice: a cycle induced by a subset survives in every
    superset.  With ``expect_unique`` a second minimum FAS is an error.
    """
    fas, proven, _, _ = min_fas_search(graph)
    if not proven:
        raise BudgetExhausted("minimum FAS not proven")
    f = len(fas)
    count = count_minimum_fas(graph, f)
    if expect_unique and count != 1:
        raise GraphError(f"expected a unique minimum FAS, found {count}")
    sets = [fas] if count == 1 else minimum_fas_sets(graph, f)
    witnesses = []
    for s in sets:
        for cover in enumerate_vertex_covers(graph, s, minimal_only=True):
            sub = induced_subgraph(graph, cover)
            g = digirth(sub)
            cyc = None if g.infinite else cycle_vertices(sub, g.witness)
            witnesses.append(CoverWitness(sorted(s), sorted(cover), cyc))
    applicable = f > 0
    all_cyclic = applicable and all(w.cycle is not None for w in witnesses)
    return Prop31Report(f, count, all_cyclic, applicable, witnesses)
