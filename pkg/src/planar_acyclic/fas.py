"""Exact minimum feedback arc sets and maximum arc-disjoint cycle packings.

Both solvers work on arc bitmasks (bit ``i`` is arc ``i``).  They are
independent of each other: the FAS search never looks at the packing and
vice versa, so agreement between them is a real check of min-max equality
on planar inputs.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .cycles import canonical_cycle, cycle_sort_key, enumerate_simple_cycles
from .graph import (
    BudgetExhausted,
    PlanarDigraph,
    digirth,
    is_acyclic,
    shortest_cycle_through_arc,
)

log = logging.getLogger(__name__)

ARC_LIMIT = 64
NODE_LIMIT = 2_000_000
CYCLE_LIMIT = 500_000
DIJOIN_NODE_LIMIT = 200_000


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _mask(arcs) -> int:
    m = 0
    for a in arcs:
        m |= 1 << a
    return m


class _OutOfNodes(Exception):
    pass


@dataclass
class FeedbackCertificate:
    fas: frozenset[int]
    packing: list[tuple[int, ...]]
    fas_proven: bool = True
    packing_proven: bool = True
    lower_bound: int = 0
    stats: dict = field(default_factory=dict, compare=False)

    @property
    def f(self) -> int:
        return len(self.fas)

    @property
    def optimal(self) -> bool:
        return len(self.fas) == len(self.packing)

    def to_dict(self) -> dict:
        return {
            "fas": sorted(self.fas),
            "packing": [list(c) for c in self.packing],
            "optimal": self.optimal,
        }


# -- minimum hitting set -------------------------------------------------


def _greedy_disjoint(sets: list[int]) -> int:
    used = 0
    count = 0
    for s in sorted(sets, key=int.bit_count):
        if not s & used:
            used |= s
            count += 1
    return count


def _greedy_hitting_set(cycles: list[int], start: int = 0) -> int:
    chosen = start
    for c in cycles:
        if not c & chosen:
            chosen |= c & -c
    return chosen


def min_hitting_set(
    cycles: list[int], upper: int | None = None, node_limit: int = NODE_LIMIT
) -> tuple[int, bool, int]:
    """Smallest arc set meeting every mask in ``cycles``.

    Branch and bound: branch on the arc in the most unhit cycles (lowest arc
    id on ties), taking it or forbidding it; bound with a greedy packing of
    pairwise disjoint unhit cycles.  ``upper`` is a known feasible solution.
    Returns ``(best, proven, nodes)``; ``proven`` is False when the node
    limit cut the search short.
    """
    best = upper if upper is not None else _greedy_hitting_set(cycles)
    best_size = best.bit_count()
    nodes = 0

    def search(unhit: list[int], chosen: int, size: int, banned: int) -> None:
        nonlocal best, best_size, nodes
        nodes += 1
        if nodes > node_limit:
            raise _OutOfNodes
        while True:
            if not unhit:
                if size < best_size:
                    best, best_size = chosen, size
                return
            allowed = [c & ~banned for c in unhit]
            forced = 0
            for a in allowed:
                if not a:
                    return
                if a.bit_count() == 1:
                    forced |= a
            if not forced:
                break
            chosen |= forced
            size += forced.bit_count()
            if size >= best_size:
                return
            unhit = [c for c in unhit if not c & forced]
        if size + _greedy_disjoint(allowed) >= best_size:
            return
        counts: dict[int, int] = defaultdict(int)
        for a in allowed:
            for b in _bits(a):
                counts[b] += 1
        arc = min(counts, key=lambda b: (-counts[b], b))
        bit = 1 << arc
        search([c for c in unhit if not c & bit], chosen | bit, size + 1, banned)
        search(unhit, chosen, size, banned | bit)

    try:
        search(list(cycles), 0, 0, 0)
    except _OutOfNodes:
        return best, False, nodes
    return best, True, nodes


def _violated_cycles(graph: PlanarDigraph, removed: int) -> list[tuple[int, ...]]:
    """Shortest remaining cycle through each surviving arc, deduplicated."""
    found = {}
    for a in range(graph.m):
        if removed >> a & 1:
            continue
        c = shortest_cycle_through_arc(graph, a, removed)
        if c is not None:
            c = canonical_cycle(c)
            found.setdefault(_mask(c), c)
    return [found[k] for k in sorted(found, key=lambda k: cycle_sort_key(found[k]))]


def _complete_to_fas(graph: PlanarDigraph, chosen: int) -> int:
    while True:
        res = is_acyclic(graph, chosen)
        if res.acyclic:
            return chosen
        chosen |= 1 << min(res.cycle)


def min_fas_search(
    graph: PlanarDigraph, node_limit: int = NODE_LIMIT
) -> tuple[frozenset[int], bool, int, dict]:
    """Lazy cycle generation around :func:`min_hitting_set`.

    Starts from the shortest cycle through every arc; each round solves the
    hitting set over the working cycles and, if the solution leaves a cycle
    in the graph, adds the shortest surviving cycle through each remaining
    arc.  Returns ``(fas, proven, lower_bound, stats)``.
    """
    working: dict[int, tuple[int, ...]] = {}
    for c in _violated_cycles(graph, 0):
        working.setdefault(_mask(c), c)
    stats = {"rounds": 0, "nodes": 0}
    lower = 0
    upper = None
    while True:
        stats["rounds"] += 1
        masks = list(working)
        if upper is not None:
            upper = _greedy_hitting_set(masks, upper)
        remaining = node_limit - stats["nodes"]
        hs, proven, nodes = min_hitting_set(masks, upper, max(remaining, 1))
        stats["nodes"] += nodes
        if not proven:
            fas = _complete_to_fas(graph, hs)
            stats["cycles"] = len(working)
            return frozenset(_bits(fas)), False, lower, stats
        lower = hs.bit_count()
        new = _violated_cycles(graph, hs)
        if not new:
            stats["cycles"] = len(working)
            return frozenset(_bits(hs)), True, lower, stats
        for c in new:
            working.setdefault(_mask(c), c)
        upper = hs
        log.debug("round %d: |H|=%d, +%d cycles", stats["rounds"], lower, len(new))


# -- maximum packing -----------------------------------------------------


@dataclass
class Packing:
    cycles: list[tuple[int, ...]]
    proven: bool = True
    nodes: int = 0

    def __len__(self) -> int:
        return len(self.cycles)


def pack_cycles(
    cycles: list[tuple[int, ...]], node_limit: int = NODE_LIMIT
) -> Packing:
    """Maximum set of pairwise arc-disjoint cycles from the given list.

    Branch on the shortest remaining compatible cycle (include, then
    exclude).  Bound: current count plus the arcs still usable divided by
    the shortest remaining length.
    """
    ordered = sorted(cycles, key=lambda c: (len(c), cycle_sort_key(c)))
    masks = [_mask(c) for c in ordered]
    lengths = [len(c) for c in ordered]

    best: list[int] = []
    used = 0
    for i, mk in enumerate(masks):
        if not mk & used:
            best.append(i)
            used |= mk
    nodes = 0

    def search(cands: list[int], used: int, chosen: list[int]) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > node_limit:
            raise _OutOfNodes
        if len(chosen) > len(best):
            best = list(chosen)
        if not cands:
            return
        if len(chosen) + len(cands) <= len(best):
            return
        union = 0
        for i in cands:
            union |= masks[i]
        if len(chosen) + union.bit_count() // lengths[cands[0]] <= len(best):
            return
        head, rest = cands[0], cands[1:]
        mk = masks[head]
        chosen.append(head)
        search([i for i in rest if not masks[i] & mk], used | mk, chosen)
        chosen.pop()
        search(rest, used, chosen)

    proven = True
    try:
        search(list(range(len(masks))), 0, [])
    except _OutOfNodes:
        proven = False
    result = sorted((ordered[i] for i in best), key=cycle_sort_key)
    return Packing(result, proven, nodes)


def max_cycle_packing(
    graph: PlanarDigraph,
    node_limit: int = NODE_LIMIT,
    cycle_limit: int = CYCLE_LIMIT,
) -> Packing:
    en = enumerate_simple_cycles(graph, max_count=cycle_limit)
    packing = pack_cycles(en.cycles, node_limit)
    if en.overflow:
        packing.proven = False
    return packing


def min_feedback_arc_set(
    graph: PlanarDigraph,
    node_limit: int = NODE_LIMIT,
    arc_limit: int = ARC_LIMIT,
    cycle_limit: int = CYCLE_LIMIT,
) -> FeedbackCertificate:
    """Exact minimum FAS together with a maximum arc-disjoint cycle packing.

    When either search runs out of nodes the certificate still carries a
    valid FAS and packing, flagged as unproven.
    """
    if graph.m > arc_limit:
        raise BudgetExhausted(f"{graph.m} arcs exceeds the arc budget {arc_limit}")
    fas, fas_proven, lower, stats = min_fas_search(graph, node_limit)
    packing = max_cycle_packing(graph, node_limit, cycle_limit)
    lower = max(lower, len(packing))
    return FeedbackCertificate(
        fas=fas,
        packing=packing.cycles,
        fas_proven=fas_proven,
        packing_proven=packing.proven,
        lower_bound=lower,
        stats=stats,
    )


# -- verification helpers ------------------------------------------------


def count_minimum_fas(
    graph: PlanarDigraph,
    f: int | None = None,
    cycle_limit: int = CYCLE_LIMIT,
    node_limit: int = 50_000_000,
) -> int:
    """Number of distinct minimum feedback arc sets, by exhaustive search.

    Only arcs lying on some cycle can appear in a minimum FAS.  Subsets are
    built in arc-id order and a branch is dropped as soon as a cycle whose
    arcs are all decided is left unhit.
    """
    en = enumerate_simple_cycles(graph, max_count=cycle_limit)
    if en.overflow:
        raise BudgetExhausted("too many cycles for exhaustive FAS counting")
    if f is None:
        fas, proven, _, _ = min_fas_search(graph, node_limit)
        if not proven:
            raise BudgetExhausted("minimum FAS size could not be proven")
        f = len(fas)
    if not en.cycles:
        return 1 if f == 0 else 0
    candidates = sorted(set().union(*map(set, en.cycles)))
    closing: dict[int, list[int]] = defaultdict(list)
    for c in en.cycles:
        closing[max(c)].append(_mask(c))

    masks = [_mask(c) for c in en.cycles]
    count = 0
    nodes = 0

    def search(k: int, chosen: int, size: int) -> None:
        nonlocal count, nodes
        nodes += 1
        if nodes > node_limit:
            raise BudgetExhausted("FAS counting exceeded its node budget")
        if k == len(candidates):
            if size == f:
                count += 1
            return
        if size + (len(candidates) - k) < f:
            return
        # unhit cycles can only be hit by undecided arcs
        undecided = ~((1 << candidates[k]) - 1)
        unhit = [c & undecided for c in masks if not c & chosen]
        if size + _greedy_disjoint(unhit) > f:
            return
        arc = candidates[k]
        for take in (True, False):
            if take and size == f:
                continue
            now = chosen | (1 << arc) if take else chosen
            if all(c & now for c in closing.get(arc, ())):
                search(k + 1, now, size + take)

    search(0, 0, 0)
    return count


def minimum_fas_sets(graph: PlanarDigraph, f: int) -> list[frozenset[int]]:
    """All FAS of size ``f`` (used when the count is small)."""
    en = enumerate_simple_cycles(graph, max_count=CYCLE_LIMIT)
    if en.overflow:
        raise BudgetExhausted("too many cycles")
    masks = [_mask(c) for c in en.cycles]
    candidates = sorted(set().union(*map(set, en.cycles))) if en.cycles else []
    out = []
    for combo in combinations(candidates, f):
        mk = _mask(combo)
        if all(c & mk for c in masks):
            out.append(frozenset(combo))
    return out


def min_dijoin_size(cut_masks: list[int], limit: int = DIJOIN_NODE_LIMIT) -> int | None:
    """Smallest arc set meeting every cut, via the hitting-set search.

    Returns None when ``limit`` search nodes do not settle the optimum.
    """
    if not cut_masks:
        return 0
    best, proven, _ = min_hitting_set(cut_masks, node_limit=limit)
    return best.bit_count() if proven else None


def _mask_union(masks) -> int:
    u = 0
    for m in masks:
        u |= m
    return u


@dataclass
class LucchesiYoungerReport:
    f: int
    packing_size: int
    equal: bool
    proven: bool
    dijoin_size: int | None
    digirth: int | None
    edge_bound_ok: bool

    def to_dict(self) -> dict:
        return {
            "f": self.f,
            "packing_size": self.packing_size,
            "equal": self.equal,
            "proven": self.proven,
            "dijoin_size": self.dijoin_size,
            "digirth": self.digirth,
            "edge_bound_ok": self.edge_bound_ok,
        }

    @property
    def ok(self) -> bool:
        return (
            self.equal
            and self.proven
            and self.edge_bound_ok
            and (self.dijoin_size is None or self.dijoin_size == self.f)
        )


def verify_lucchesi_younger(
    graph: PlanarDigraph,
    node_limit: int = NODE_LIMIT,
    dijoin_limit: int = DIJOIN_NODE_LIMIT,
    dual_limit: int | None = None,
    certificate: FeedbackCertificate | None = None,
) -> LucchesiYoungerReport:
    """Run both exact solvers and compare, plus the dual dijoin when small.

    ``edge_bound_ok`` records ``f <= m/g <= 3n/g`` for the computed digirth.
    """
    from .embedding import DUAL_CUT_LIMIT, dual, enumerate_directed_cuts

    cert = certificate or min_feedback_arc_set(graph, node_limit)
    f = cert.f
    g = digirth(graph)
    if g.infinite:
        edge_ok = f == 0
    else:
        edge_ok = Fraction(f) <= Fraction(graph.m, g.value) <= Fraction(3 * graph.n, g.value)
    dij = None
    limit = DUAL_CUT_LIMIT if dual_limit is None else dual_limit
    if graph.rotation is not None:
        d = dual(graph)
        if d.graph.n <= limit:
            cuts = enumerate_directed_cuts(d, minimal_only=True, limit=limit)
            dij = min_dijoin_size([_mask(c.cut_arcs) for c in cuts], dijoin_limit)
    return LucchesiYoungerReport(
        f=f,
        packing_size=len(cert.packing),
        equal=cert.optimal,
        proven=cert.fas_proven and cert.packing_proven,
        dijoin_size=dij,
        digirth=g.value,
        edge_bound_ok=edge_ok,
    )
