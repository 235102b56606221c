"""Large acyclic sets from a vertex cover of a feedback arc set.

The cover is built greedily.  With ``d = (feedback arcs left) - (vertices
left) / 2``, vertices incident to the most remaining feedback arcs are
removed while ``d > 0``; afterwards the tail of every remaining feedback arc
is removed.  Whatever is left induces an acyclic subgraph because every
directed cycle uses a feedback arc.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .fas import ARC_LIMIT, NODE_LIMIT, FeedbackCertificate, min_feedback_arc_set
from .graph import (
    BudgetExhausted,
    Digirth,
    GraphError,
    PlanarDigraph,
    digirth,
    induced_subgraph,
    is_acyclic,
    oriented_violations,
    vertex_key,
)


class BoundViolation(AssertionError):
    """A proven inequality failed on a concrete run; this is a bug."""


def _girth_value(g) -> int | None:
    if isinstance(g, Digirth):
        return g.value
    if g is None or g == math.inf:
        return None
    return int(g)


def guarantee(n: int, g) -> int:
    """Size an acyclic set is guaranteed to reach on a planar input.

    ``ceil(n - 3n/g)`` in general, ``ceil(5n/12)`` for ``g = 4`` and
    ``ceil(7n/15)`` for ``g = 5``; all ``n`` vertices when acyclic.
    Negative values (only possible for ``g = 2``) are reported as 0.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    value = _girth_value(g)
    if value is None:
        return n
    if value < 2:
        raise ValueError(f"digirth {value} < 2")
    if value == 4:
        bound = Fraction(5 * n, 12)
    elif value == 5:
        bound = Fraction(7 * n, 15)
    else:
        bound = n - Fraction(3 * n, value)
    return max(0, math.ceil(bound))


@dataclass
class GreedyStep:
    vertex: str
    arcs_removed: list[int]
    d_before: Fraction
    d_after: Fraction

    def to_dict(self) -> dict:
        return {
            "vertex": self.vertex,
            "arcs_removed": self.arcs_removed,
            "d_before": str(self.d_before),
            "d_after": str(self.d_after),
        }


@dataclass
class CoverTrace:
    steps: list[GreedyStep] = field(default_factory=list)
    d_initial: Fraction = Fraction(0)
    d_final: Fraction = Fraction(0)
    tails: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "d_initial": str(self.d_initial),
            "d_final": str(self.d_final),
            "steps": [s.to_dict() for s in self.steps],
            "tails": self.tails,
        }


def greedy_cover(graph: PlanarDigraph, fas) -> tuple[set[str], CoverTrace]:
    fas = set(fas)
    if not is_acyclic(graph, graph.arc_mask(fas)):
        raise GraphError("given arcs are not a feedback arc set")
    remaining = set(fas)
    alive = set(graph.vertices)

    def potential() -> Fraction:
        return len(remaining) - Fraction(len(alive), 2)

    trace = CoverTrace(d_initial=potential())
    cover: set[str] = set()
    while potential() > 0:
        d_before = potential()
        incident: dict[str, list[int]] = {}
        for a in sorted(remaining):
            t, h = graph.arcs[a]
            incident.setdefault(t, []).append(a)
            if h != t:
                incident.setdefault(h, []).append(a)
        v = min(incident, key=lambda u: (-len(incident[u]), vertex_key(u)))
        removed = incident[v]
        remaining -= set(removed)
        alive.discard(v)
        cover.add(v)
        trace.steps.append(GreedyStep(v, removed, d_before, potential()))
    trace.d_final = potential()
    for a in sorted(remaining):
        tail = graph.arcs[a][0]
        trace.tails.append(tail)
        cover.add(tail)
    return cover, trace


@dataclass
class AcyclicSetResult:
    acyclic_set: list[str]
    removed_cover: list[str]
    fas_used: list[int]
    bound_required: int
    topological_order: list[str]
    trace: CoverTrace
    n: int
    digirth: int | None
    certificate: FeedbackCertificate

    @property
    def bound_met(self) -> bool:
        return len(self.acyclic_set) >= self.bound_required

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "digirth": self.digirth,
            "f": len(self.fas_used),
            "acyclic_set": self.acyclic_set,
            "removed_cover": self.removed_cover,
            "fas_used": self.fas_used,
            "bound_required": self.bound_required,
            "bound_met": self.bound_met,
            "topological_order": self.topological_order,
            "trace": self.trace.to_dict(),
        }


def check_trace(trace: CoverTrace, n: int, f: int, g: int | None, cover_size: int) -> list[str]:
    """Inequalities from the greedy argument that must hold on every run.

    Returns the failed ones (empty when all hold).
    """
    bad = []
    for s in trace.steps:
        if s.d_before <= 0:
            bad.append(f"step at {s.vertex} ran with d = {s.d_before} <= 0")
        if len(s.arcs_removed) < 2:
            bad.append(f"step at {s.vertex} removed {len(s.arcs_removed)} < 2 arcs")
        if s.d_before - s.d_after < Fraction(3, 2):
            bad.append(f"step at {s.vertex} lowered d by only {s.d_before - s.d_after}")
    steps = len(trace.steps)
    if trace.d_final > 0:
        bad.append(f"final d = {trace.d_final} > 0")
    if 3 * steps > 2 * f - n - 2 * trace.d_final:
        bad.append(f"{steps} steps exceeds (2f - n - 2d')/3")
    if Fraction(cover_size) > Fraction(n + f, 3):
        bad.append(f"cover {cover_size} exceeds (n + f)/3")
    if cover_size > f:
        bad.append(f"cover {cover_size} exceeds f = {f}")
    if g is not None and Fraction(f) <= Fraction(3 * n, g):
        if cover_size > math.floor(Fraction(n, 3) + Fraction(n, g)):
            bad.append(f"cover {cover_size} exceeds floor(n/3 + n/g)")
    return bad


def acyclic_set(
    graph: PlanarDigraph,
    node_limit: int = NODE_LIMIT,
    arc_limit: int = ARC_LIMIT,
    certificate: FeedbackCertificate | None = None,
) -> AcyclicSetResult:
    """Digirth, optimal FAS, greedy cover, and a certified acyclic set.

    Raises :class:`BoundViolation` if any inequality from the proof fails,
    and :class:`BudgetExhausted` if the FAS could not be proven minimum.
    """
    bad = oriented_violations(graph)
    if bad:
        raise GraphError("not an oriented graph: " + bad[0])
    g = digirth(graph)
    cert = certificate or min_feedback_arc_set(graph, node_limit, arc_limit)
    if not cert.fas_proven:
        raise BudgetExhausted(
            f"minimum FAS not proven (best {cert.f}, lower bound {cert.lower_bound})"
        )
    cover, trace = greedy_cover(graph, cert.fas)
    keep = [v for v in graph.vertices if v not in cover]
    check = is_acyclic(induced_subgraph(graph, keep))
    result = AcyclicSetResult(
        acyclic_set=keep,
        removed_cover=[v for v in graph.vertices if v in cover],
        fas_used=sorted(cert.fas),
        bound_required=guarantee(graph.n, g),
        topological_order=list(check.order or ()),
        trace=trace,
        n=graph.n,
        digirth=g.value,
        certificate=cert,
    )

    problems = check_trace(trace, graph.n, cert.f, g.value, len(cover))
    for a in cert.fas:
        t, h = graph.arcs[a]
        if t not in cover and h not in cover:
            problems.append(f"arc {a} not covered")
    if not check.acyclic:
        problems.append("remaining set induces a directed cycle")
    if not result.bound_met:
        problems.append(
            f"acyclic set {len(keep)} below guarantee {result.bound_required}"
        )
    if problems:
        raise BoundViolation("; ".join(problems))
    return result
