"""Graphviz DOT rendering.  Feedback arcs are drawn dashed."""

from __future__ import annotations

from .graph import PlanarDigraph


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(
    graph: PlanarDigraph,
    name: str = "G",
    dashed: set[int] | frozenset[int] = frozenset(),
    filled: set[str] | frozenset[str] = frozenset(),
    bold: set[int] | frozenset[int] = frozenset(),
) -> str:
    lines = [f"digraph {_q(name)} {{"]
    for v in graph.vertices:
        attrs = ' [style=filled, fillcolor=lightgrey]' if v in filled else ""
        lines.append(f"  {_q(v)}{attrs};")
    for i, (t, h) in enumerate(graph.arcs):
        attrs = [f'label="{i}"']
        if i in dashed:
            attrs.append("style=dashed")
        if i in bold:
            attrs.append("penwidth=2")
        lines.append(f"  {_q(t)} -> {_q(h)} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
