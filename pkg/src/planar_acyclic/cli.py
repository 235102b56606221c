"""Command-line front end.

Exit codes: 0 success, 1 bad input or failed verification, 2 usage error,
3 a proven bound failed (a bug).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import fas as fas_mod
from .dot import to_dot
from .embedding import dual, verify_bijection
from .fas import min_feedback_arc_set, verify_lucchesi_younger
from .generators import (
    FamilySpec,
    closed_form_f,
    family_metadata,
    figure1,
    generate,
    random_planar_oriented,
)
from .graph import BudgetExhausted, GraphError, dumps, loads, validate
from .pipeline import BoundViolation, acyclic_set
from .prop31 import verify_prop31

EXIT_OK, EXIT_INPUT, EXIT_USAGE, EXIT_BUG = 0, 1, 2, 3


class InputError(Exception):
    pass


class UsageError(Exception):
    pass


def sidecar_path(path: Path) -> Path:
    if path.suffix == ".json":
        return path.with_suffix(".meta.json")
    return path.with_name(path.name + ".meta.json")


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False) + "\n"


def read_graph(path: str, require_embedding: bool = False):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        graph = loads(text)
    except GraphError as exc:
        raise InputError(f"{path}: {exc}") from exc
    report = validate(graph, require_oriented=True, require_embedding=require_embedding)
    if not report.valid:
        raise InputError(f"{path}: invalid graph: {report.violations[0]}")
    return graph


def _generate(args):
    fam = args.family
    if fam == "figure1":
        graph = figure1()
        return graph, {"family": "figure1", "n": graph.n, "f_expected": 6}
    if fam == "random":
        if args.n is None:
            raise UsageError("--n is required for --family random")
        graph = random_planar_oriented(args.seed, args.n, args.min_digirth)
        return graph, {"family": "random", "seed": args.seed, "n": graph.n,
                       "min_digirth": args.min_digirth}
    spec = FamilySpec(fam.upper(), args.depth, args.face_choice)
    graph, _ = generate(spec)
    return graph, family_metadata(spec)


def cmd_gen(args) -> int:
    try:
        graph, meta = _generate(args)
    except GraphError as exc:
        raise UsageError(str(exc)) from exc
    text = dumps(graph)
    if args.out is None:
        sys.stdout.write(text)
        return EXIT_OK
    out = Path(args.out)
    try:
        out.write_text(text, encoding="utf-8")
        sidecar_path(out).write_text(_dump(meta), encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write {out}: {exc.strerror}") from exc
    return EXIT_OK


def _budgets(args) -> dict:
    return {"node_limit": args.budget_nodes, "arc_limit": args.budget_arcs}


def cmd_analyze(args) -> int:
    graph = read_graph(args.path)
    cert = min_feedback_arc_set(graph, **_budgets(args))
    result = acyclic_set(graph, certificate=cert)
    report = {
        "n": graph.n,
        "m": graph.m,
        "digirth": result.digirth,
        "f": cert.f,
        "packing_size": len(cert.packing),
        "ly_equal": cert.optimal,
        "acyclic_set_size": len(result.acyclic_set),
        "guarantee": result.bound_required,
        "bound_met": result.bound_met,
        "fas": sorted(cert.fas),
        "acyclic_set": result.acyclic_set,
    }
    if args.json:
        sys.stdout.write(_dump(report))
    else:
        g = "inf" if result.digirth is None else result.digirth
        print(f"n={graph.n} m={graph.m} digirth={g} f={cert.f} "
              f"packing={len(cert.packing)} ly_equal={cert.optimal}")
        print(f"acyclic_set={len(result.acyclic_set)} guarantee={result.bound_required} "
              f"bound_met={result.bound_met}")
    return EXIT_OK


def _verify_one(kind: str, path: str, args) -> tuple[bool, dict]:
    if kind == "duality":
        graph = read_graph(path, require_embedding=True)
        rep = verify_bijection(graph)
        return rep.equal and rep.matched, rep.to_dict()
    if kind == "ly":
        graph = read_graph(path, require_embedding=True)
        rep = verify_lucchesi_younger(graph, node_limit=args.budget_nodes)
        return rep.ok, rep.to_dict()
    if kind == "prop31":
        graph = read_graph(path)
        try:
            rep = verify_prop31(graph, expect_unique=True)
        except GraphError as exc:
            return False, {"error": str(exc)}
        d = rep.to_dict()
        return rep.all_covers_cyclic and rep.min_fas_count == 1, d
    if kind == "family-f":
        graph = read_graph(path)
        meta_file = sidecar_path(Path(path))
        try:
            meta = json.loads(meta_file.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"missing or bad metadata sidecar {meta_file}") from exc
        cert = min_feedback_arc_set(graph, **_budgets(args))
        expected = meta.get("f_expected")
        ok = cert.fas_proven and cert.f == expected
        out = {"f": cert.f, "f_expected": expected, "proven": cert.fas_proven}
        if meta.get("family") in ("D3", "D4", "D5"):
            closed = closed_form_f(meta["family"], graph.n)
            out["closed_form"] = str(closed)
            ok = ok and closed == cert.f
        return ok, out
    raise InputError(f"unknown verifier {kind}")


def cmd_verify(args) -> int:
    all_ok = True
    for path in args.paths:
        ok, detail = _verify_one(args.kind, path, args)
        all_ok &= ok
        status = "PASS" if ok else "FAIL"
        print(f"{status} {args.kind} {path} {json.dumps(detail, ensure_ascii=False)}")
    return EXIT_OK if all_ok else EXIT_INPUT


def cmd_export(args) -> int:
    graph = read_graph(args.path, require_embedding=args.highlight == "dual")
    if args.highlight == "fas":
        cert = min_feedback_arc_set(graph, **_budgets(args))
        text = to_dot(graph, dashed=cert.fas)
    elif args.highlight == "acyclic":
        res = acyclic_set(graph, **_budgets(args))
        text = to_dot(graph, dashed=set(res.fas_used), filled=set(res.acyclic_set))
    elif args.highlight == "dual":
        text = to_dot(dual(graph).graph, name="dual")
    else:
        text = to_dot(graph)
    try:
        Path(args.dot).write_text(text, encoding="utf-8")
        if args.dual_json:
            Path(args.dual_json).write_text(_dump(dual(graph).to_dict()), encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write output: {exc.strerror}") from exc
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planar-acyclic",
        description="Acyclic sets, feedback arc sets and duals of planar oriented graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def budgets(p):
        p.add_argument("--budget-nodes", type=int, default=fas_mod.NODE_LIMIT,
                       help="branch-and-bound node limit (default %(default)s)")
        p.add_argument("--budget-arcs", type=int, default=fas_mod.ARC_LIMIT,
                       help="largest arc count attempted exactly (default %(default)s)")

    p = sub.add_parser("gen", help="write a generated graph as JSON")
    p.add_argument("--family", required=True,
                   choices=["d3", "d4", "d5", "figure1", "random"])
    p.add_argument("--depth", type=int, default=1)
    p.add_argument("--face-choice", default="innermost", choices=["innermost", "corner"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int)
    p.add_argument("--min-digirth", type=int, default=3)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", help="digirth, FAS, packing and acyclic set")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    budgets(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run a verifier on one or more graphs")
    p.add_argument("kind", choices=["duality", "ly", "prop31", "family-f"])
    p.add_argument("paths", nargs="+")
    budgets(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="Graphviz DOT export")
    p.add_argument("path")
    p.add_argument("--dot", required=True)
    p.add_argument("--highlight", choices=["fas", "acyclic", "dual"])
    p.add_argument("--dual-json")
    budgets(p)
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BoundViolation as exc:
        print(f"internal bound violation: {exc}", file=sys.stderr)
        return EXIT_BUG
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InputError, GraphError, BudgetExhausted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
