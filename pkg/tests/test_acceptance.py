"""Acceptance criteria 1-7, one PASS/FAIL line each.

Runs under pytest (lines are printed past output capture) or directly with
``python tests/test_acceptance.py``.
"""

import subprocess
import sys
import time
from functools import lru_cache

import pytest

from planar_acyclic.embedding import verify_bijection
from planar_acyclic.fas import min_feedback_arc_set, verify_lucchesi_younger
from planar_acyclic.generators import (
    FACE_CHOICES,
    FamilySpec,
    closed_form_f,
    figure1,
    figure1_dashed,
    generate,
    random_planar_oriented,
)
from planar_acyclic.graph import induced_subgraph, is_acyclic, validate
from planar_acyclic.pipeline import acyclic_set, check_trace, guarantee
from planar_acyclic.prop31 import verify_prop31

FAMILY_F = {"D3": [1, 4, 7, 10], "D4": [1, 6, 11], "D5": [1, 12]}
RANDOM_SEEDS = range(1, 51)


def random_params(seed):
    return seed, 6 + seed % 9, 3 + seed % 3


@lru_cache(maxsize=None)
def suite():
    """(name, graph) for every family instance, Figure 1 and the random seeds."""
    out = []
    for fam, fs in FAMILY_F.items():
        for choice in FACE_CHOICES:
            for depth in range(len(fs)):
                out.append((f"{fam}/{depth}/{choice}", generate(FamilySpec(fam, depth, choice))[0]))
    out.append(("figure1", figure1()))
    for seed in RANDOM_SEEDS:
        s, n, mg = random_params(seed)
        out.append((f"random/{s}/n{n}/g{mg}", random_planar_oriented(s, n, mg)))
    return tuple(out)


def report(number, ok, detail, started):
    return f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail}; {time.perf_counter() - started:.1f}s)"


def criterion_1():
    t = time.perf_counter()
    bad = []
    for fam, fs in FAMILY_F.items():
        for choice in FACE_CHOICES:
            for depth, expected in enumerate(fs):
                g, _ = generate(FamilySpec(fam, depth, choice))
                cert = min_feedback_arc_set(g)
                if not (cert.fas_proven and cert.f == expected == closed_form_f(fam, g.n)):
                    bad.append(f"{fam}/{depth}/{choice}: f={cert.f}")
    ok = not bad and time.perf_counter() - t < 60
    return report(1, ok, "; ".join(bad) or "family feedback numbers exact", t), ok


def criterion_2():
    t = time.perf_counter()
    g = figure1()
    cert = min_feedback_arc_set(g)
    dashed = {g.arcs.index(a) for a in figure1_dashed()}
    rep = verify_prop31(g, expect_unique=True)
    ok = (
        cert.f == 6
        and set(cert.fas) == dashed
        and rep.min_fas_count == 1
        and rep.all_covers_cyclic
        and all(w.cycle for w in rep.witness_per_cover)
    )
    detail = f"f={cert.f}, unique={rep.min_fas_count == 1}, {len(rep.witness_per_cover)} covers all cyclic={rep.all_covers_cyclic}"
    return report(2, ok, detail, t), ok


def criterion_3():
    t = time.perf_counter()
    bad, with_dual = [], 0
    for name, g in suite():
        rep = verify_lucchesi_younger(g)
        with_dual += rep.dijoin_size is not None
        if not rep.ok:
            bad.append(name)
    ok = not bad and time.perf_counter() - t < 300
    detail = f"{len(suite())} instances, dijoin checked on {with_dual}" + (f"; failed {bad}" if bad else "")
    return report(3, ok, detail, t), ok


def criterion_4():
    t = time.perf_counter()
    bad, checked = [], 0
    for name, g in suite():
        if g.n > 12:
            continue
        checked += 1
        rep = verify_bijection(g)
        if not (rep.equal and rep.matched):
            bad.append(name)
    ok = not bad and time.perf_counter() - t < 120
    return report(4, ok, f"{checked} instances with n <= 12" + (f"; failed {bad}" if bad else ""), t), ok


def criterion_5():
    t = time.perf_counter()
    bad = []
    for name, g in suite():
        res = acyclic_set(g)  # raises BoundViolation on any failed inequality
        cover = len(res.removed_cover)
        problems = check_trace(res.trace, g.n, len(res.fas_used), res.digirth, cover)
        if any(len(s.arcs_removed) < 2 for s in res.trace.steps):
            problems.append("step removed < 2 arcs")
        if not is_acyclic(induced_subgraph(g, res.acyclic_set)):
            problems.append("not acyclic")
        if len(res.acyclic_set) < guarantee(g.n, res.digirth):
            problems.append("below guarantee")
        if problems:
            bad.append(f"{name}: {problems}")
    ok = not bad and time.perf_counter() - t < 60
    return report(5, ok, f"{len(suite())} instances" + (f"; failed {bad}" if bad else ""), t), ok


def criterion_6():
    t = time.perf_counter()
    bad = []
    for seed in range(1, 501):
        g = random_planar_oriented(seed, 3 + seed % 14, 3 + seed % 3)
        if not validate(g).valid or g.m > 3 * g.n - 6:
            bad.append(seed)
    for name, g in suite():
        if g.n >= 3 and g.m > 3 * g.n - 6:
            bad.append(name)
    ok = not bad and time.perf_counter() - t < 60
    return report(6, ok, "m <= 3n - 6 on seeds 1-500 and the suite" + (f"; failed {bad}" if bad else ""), t), ok


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "planar_acyclic", *argv],
                          capture_output=True, check=True).stdout


def criterion_7(tmp_dir):
    t = time.perf_counter()
    ok = True
    for args in (["--family", "d4", "--depth", "2"], ["--family", "figure1"],
                 ["--family", "random", "--seed", "3", "--n", "13", "--min-digirth", "4"]):
        first, second = _cli("gen", *args), _cli("gen", *args)
        path = f"{tmp_dir}/g.json"
        with open(path, "wb") as fh:
            fh.write(first)
        ok &= first == second
        ok &= _cli("analyze", path, "--json") == _cli("analyze", path, "--json")
    return report(7, ok, "gen/analyze JSON byte-identical across runs", t), ok


def _emit(capsys, line):
    with capsys.disabled():
        print("\n" + line)


@pytest.mark.parametrize("number", [1, 2, 3, 4, 5, 6])
def test_criterion(number, capsys):
    line, ok = globals()[f"criterion_{number}"]()
    _emit(capsys, line)
    assert ok, line


def test_criterion_7(tmp_path, capsys):
    line, ok = criterion_7(tmp_path)
    _emit(capsys, line)
    assert ok, line


if __name__ == "__main__":
    import tempfile

    results = []
    for k in range(1, 7):
        line, ok = globals()[f"criterion_{k}"]()
        print(line, flush=True)
        results.append(ok)
    with tempfile.TemporaryDirectory() as d:
        line, ok = criterion_7(d)
    print(line)
    results.append(ok)
    sys.exit(0 if all(results) else 1)
