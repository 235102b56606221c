"""Exhaustive simple directed cycle enumeration."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import PlanarDigraph


@dataclass(frozen=True)
class CycleEnumeration:
    """Cycles as arc-id tuples in traversal order, starting at their lowest arc."""

    cycles: list[tuple[int, ...]]
    overflow: bool = False

    def __len__(self) -> int:
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)


def canonical_cycle(cycle) -> tuple[int, ...]:
    k = cycle.index(min(cycle))
    return tuple(cycle[k:]) + tuple(cycle[:k])


def cycle_sort_key(cycle: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(cycle))


def enumerate_simple_cycles(
    graph: PlanarDigraph, max_count: int | None = None, removed_mask: int = 0
) -> CycleEnumeration:
    """All simple directed cycles, ordered by their sorted arc-id sequence.

    Each cycle is rooted at its earliest declared vertex and grown by DFS
    over later vertices that can still reach the root.  Enumeration stops
    after ``max_count`` cycles and sets ``overflow``; the partial list is
    still sorted.
    """
    idx = graph.index
    order = graph.vertices
    found: list[tuple[int, ...]] = []
    overflow = False

    for r, root in enumerate(order):
        # vertices >= r that reach root inside the subgraph of vertices >= r
        reach = {root}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for a in graph.in_arcs[v]:
                if removed_mask >> a & 1:
                    continue
                u = graph.arcs[a][0]
                if idx[u] > r and u not in reach:
                    reach.add(u)
                    queue.append(u)

        on_path = {root}
        path: list[int] = []
        stack = [iter(graph.out_arcs[root])]
        while stack:
            a = next(stack[-1], None)
            if a is None:
                stack.pop()
                if path:
                    on_path.discard(graph.arcs[path.pop()][1])
                continue
            if removed_mask >> a & 1:
                continue
            w = graph.arcs[a][1]
            if w == root:
                found.append(canonical_cycle(path + [a]))
                if max_count is not None and len(found) >= max_count:
                    overflow = True
                    break
            elif w in reach and w not in on_path:
                on_path.add(w)
                path.append(a)
                stack.append(iter(graph.out_arcs[w]))
        if overflow:
            break

    found.sort(key=cycle_sort_key)
    return CycleEnumeration(found, overflow)
