import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from discharge_lab.plane_graph import PlaneGraph
from discharge_lab.solver import (
    P000,
    P110,
    P300,
    ColoringError,
    check_profile,
    degeneracy_order,
    enumerate_colorings,
    format_coloring,
    is_colorable,
    is_nicely_colored,
    parse_coloring,
    parse_profile,
    solve,
    verify,
    violations,
)

import oracles
from conftest import plane_graphs

PROFILES = [P000, P110, P300]


def test_verify_examples(fx):
    tri = fx("TRIANGLE")
    assert verify(tri, P000, {1: 1, 2: 2, 3: 3}) == []
    bad = verify(tri, P000, {1: 1, 2: 1, 3: 2})
    assert [(x.vertex, x.color, x.same, x.bound) for x in bad] == [(1, 1, 1, 0), (2, 1, 1, 0)]
    assert verify(tri, P110, {1: 1, 2: 1, 3: 2}) == []
    assert verify(fx("K4"), P300, {1: 1, 2: 1, 3: 2, 4: 3}) == []


def test_verify_errors(fx):
    tri = fx("TRIANGLE")
    with pytest.raises(ColoringError, match="partial"):
        verify(tri, P000, {1: 1, 2: 2})
    with pytest.raises(ColoringError, match="outside"):
        verify(tri, P000, {1: 1, 2: 2, 3: 4})


def test_partial_violations(fx):
    assert violations(fx("TRIANGLE"), P000, {1: 2, 2: 2}) != []
    assert violations(fx("TRIANGLE"), P000, {1: 2}) == []


def test_solve_examples(fx):
    k4 = fx("K4")
    assert solve(k4, P000) is None
    col = solve(k4, P110)
    assert col is not None and verify(k4, P110, col) == []
    assert sorted(col.values()).count(3) <= 1
    c7 = fx("C7")
    assert verify(c7, P000, solve(c7, P000)) == []


def test_solve_respects_precoloring(fx):
    c7 = fx("C7")
    pre = {1: 3, 4: 3}
    col = solve(c7, P000, pre)
    assert col is not None and all(col[v] == c for v, c in pre.items())


def test_inconsistent_precoloring(fx):
    with pytest.raises(ColoringError, match="violates"):
        solve(fx("TRIANGLE"), P000, {1: 1, 2: 1})
    with pytest.raises(ColoringError, match="unknown"):
        solve(fx("TRIANGLE"), P000, {9: 1})


def test_enumerate_examples(fx):
    tri = fx("TRIANGLE")
    assert len(list(enumerate_colorings(tri, P000))) == 6
    assert len(list(enumerate_colorings(PlaneGraph({1: []}), P000))) == 3
    count = sum(
        1
        for a in range(1, 4)
        for b in range(1, 4)
        for c in range(1, 4)
        if verify(tri, P110, {1: a, 2: b, 3: c}) == []
    )
    assert len(list(enumerate_colorings(tri, P110))) == count


def test_enumerate_cap():
    path = {v: [u for u in (v - 1, v + 1) if 1 <= u <= 21] for v in range(1, 22)}
    with pytest.raises(ColoringError, match="cap"):
        list(enumerate_colorings(path, P000))


def test_enumerate_isomorphic_fixtures(fx):
    # K4 with vertex labels reversed
    k4 = fx("K4")
    relabel = {v: 5 - v for v in k4.vertices}
    other = PlaneGraph({relabel[v]: [relabel[u] for u in k4.rotation[v]][::-1] for v in k4.vertices})
    for p in PROFILES:
        assert len(list(enumerate_colorings(k4, p))) == len(list(enumerate_colorings(other, p)))


def test_nicely_colored():
    star = {1: [2, 3, 4], 2: [1], 3: [1], 4: [1]}
    assert is_nicely_colored(star, P110, {1: 3, 2: 1, 3: 2, 4: 1}, 1)
    assert is_nicely_colored(star, P300, {1: 1, 2: 1, 3: 1, 4: 2}, 1)
    assert not is_nicely_colored(star, P300, {1: 1, 2: 1, 3: 1, 4: 1}, 1)
    # class 1 of (1,1,0): no same-coloured neighbour allowed to stay nice
    assert not is_nicely_colored(star, P110, {1: 1, 2: 1}, 1)
    with pytest.raises(ColoringError):
        is_nicely_colored(star, P110, {2: 1}, 1)


def test_profiles():
    assert parse_profile("110") == P110
    assert parse_profile("(3,0,0)") == P300
    assert parse_profile("2,1") == (2, 1)
    with pytest.raises(ColoringError):
        check_profile((1, 1, 1, 1, 1))
    with pytest.raises(ColoringError):
        check_profile((-1, 0))


def test_coloring_text_round_trip():
    col = {3: 1, 1: 2, 2: 3}
    assert format_coloring(col) == "1:2 2:3 3:1"
    assert parse_coloring(format_coloring(col)) == col
    assert parse_coloring("1:2,2:3") == {1: 2, 2: 3}
    with pytest.raises(ColoringError):
        parse_coloring("1-2")


def test_degeneracy_order_is_permutation(fx):
    g = fx("L377-POS")
    assert sorted(degeneracy_order(g.adjacency)) == list(g.vertices)


@given(plane_graphs(n_max=8), st.sampled_from(PROFILES))
def test_solve_matches_brute_force(g, profile):
    adj = g.adjacency
    got = solve(g, profile)
    assert (got is not None) == oracles.colorable(adj, profile)
    if got is not None:
        assert verify(g, profile, got) == []


@given(plane_graphs(n_max=6), st.sampled_from(PROFILES))
def test_enumerate_matches_brute_force(g, profile):
    mine = [tuple(sorted(c.items())) for c in enumerate_colorings(g, profile)]
    assert len(mine) == len(set(mine))
    theirs = {tuple(sorted(c.items())) for c in oracles.colorings(g.adjacency, profile)}
    assert set(mine) == theirs


@given(plane_graphs(n_max=7), st.sampled_from(PROFILES), st.integers(0, 2**16))
def test_precolored_matches_brute_force(g, profile, seed):
    rng = random.Random(seed)
    fixed = {v: rng.randint(1, 3) for v in rng.sample(list(g.vertices), min(2, g.vertex_count))}
    if violations(g, profile, fixed):
        return
    got = solve(g, profile, fixed)
    assert (got is not None) == oracles.colorable(g.adjacency, profile, fixed)


@given(plane_graphs(n_max=9))
def test_profile_monotonicity(g):
    if is_colorable(g, P000):
        assert is_colorable(g, P110) and is_colorable(g, P300)
    if is_colorable(g, (0, 0, 0)):
        assert is_colorable(g, (1, 0, 0))
    if is_colorable(g, P110):
        assert is_colorable(g, (1, 1, 1))


@given(plane_graphs(n_max=9), st.sampled_from(PROFILES), st.randoms(use_true_random=False))
def test_relabel_invariance(g, profile, rnd):
    perm = list(g.vertices)
    rnd.shuffle(perm)
    new = {v: p for v, p in zip(g.vertices, perm)}
    h = PlaneGraph({new[v]: [new[u] for u in g.rotation[v]] for v in g.vertices})
    assert is_colorable(g, profile) == is_colorable(h, profile)


@given(plane_graphs(n_max=10), st.sampled_from(PROFILES))
def test_deterministic(g, profile):
    assert solve(g, profile) == solve(PlaneGraph(g.rotation), profile)


def test_numpy_oracle_agrees_with_pure_python(fx):
    for name in ("TRIANGLE", "K4", "BOWTIE", "C7"):
        adj = fx(name).adjacency
        for p in PROFILES:
            assert oracles.colorable(adj, p) == oracles.pure_python_colorable(adj, p)
