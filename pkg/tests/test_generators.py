import pytest

from planar_acyclic.fas import min_feedback_arc_set
from planar_acyclic.generators import (
    FamilySpec,
    closed_form_f,
    expected_stats,
    generate,
    pattern,
    random_planar_oriented,
)
from planar_acyclic.graph import GraphError, digirth, dumps, oriented_violations, validate


@pytest.mark.parametrize("family", ["D3", "D4", "D5"])
@pytest.mark.parametrize("face_choice", ["innermost", "corner"])
def test_families_valid(family, face_choice):
    for depth in range(2 if family == "D5" else 3):
        g, stats = generate(FamilySpec(family, depth, face_choice))
        rep = validate(g)
        assert rep.valid, rep.violations
        assert g.n == stats.n
        assert g.m <= 3 * g.n - 6


@pytest.mark.parametrize(
    "family, depth, g_expected", [("D3", 0, 3), ("D3", 1, 3), ("D4", 1, 4), ("D4", 2, 4), ("D5", 1, 5)]
)
def test_family_digirth(family, depth, g_expected):
    assert digirth(generate(FamilySpec(family, depth))[0]).value == g_expected


@pytest.mark.parametrize("family, dn, df", [("D3", 3, 3), ("D4", 8, 5), ("D5", 25, 11)])
def test_recurrence_steps(family, dn, df):
    s0, s1 = expected_stats(family, 0), expected_stats(family, 1)
    assert (s1.n - s0.n, s1.f_expected - s0.f_expected) == (dn, df)
    for depth in range(4):
        s = expected_stats(family, depth)
        assert closed_form_f(family, s.n) == s.f_expected


@pytest.mark.parametrize("family, depth", [("D3", 2), ("D4", 1), ("D5", 1)])
def test_solved_f_matches_recurrence(family, depth):
    g, stats = generate(FamilySpec(family, depth))
    assert min_feedback_arc_set(g).f == stats.f_expected


def test_pattern_shapes():
    for fam, (nb, nn) in {"D3": (3, 3), "D4": (4, 8), "D5": (5, 25)}.items():
        p = pattern(fam)
        assert (len(p["boundary"]), len(p["new"])) == (nb, nn)
        assert len(p["inner"]) == len(p["corner"]) == nb


def test_bad_spec():
    with pytest.raises(GraphError):
        FamilySpec("D6", 1)
    with pytest.raises(GraphError):
        FamilySpec("D3", -1)
    with pytest.raises(GraphError):
        FamilySpec("D3", 1, "outer")


def test_random_deterministic():
    a = random_planar_oriented(7, 12, 4)
    b = random_planar_oriented(7, 12, 4)
    assert dumps(a) == dumps(b)
    assert dumps(a) != dumps(random_planar_oriented(8, 12, 4))


@pytest.mark.parametrize("min_g", [3, 4, 5])
def test_random_respects_min_digirth(min_g):
    for seed in range(30):
        g = random_planar_oriented(seed, 10, min_g)
        d = digirth(g)
        assert d.infinite or d.value >= min_g
        assert not oriented_violations(g)


def test_random_edge_bound_many_seeds():
    for seed in range(1, 501):
        g = random_planar_oriented(seed, 3 + seed % 12)
        assert g.m <= 3 * g.n - 6
        assert validate(g).valid


def test_random_rejects_bad_args():
    with pytest.raises(GraphError):
        random_planar_oriented(0, 2)
    with pytest.raises(GraphError):
        random_planar_oriented(0, 5, 2)
