from __future__ import annotations

from collections import deque
from itertools import combinations

from hypothesis import given, settings
from hypothesis import strategies as st

from hamcolor import (
    SymmetricSpec,
    branch_relation,
    brute_longest_path,
    build_block_graph,
    detour_center,
    detour_distance,
    detour_level,
    detour_matrix,
    detour_profile,
    gen_path,
    gen_random_block_graph,
    gen_star,
    gen_symmetric,
    gen_union,
    total_detour_level,
    xi,
)


def bfs_distance(g, source: int) -> list[int]:
    dist = [-1] * g.p
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def test_detour_distance_across_union() -> None:
    g = gen_union(4, 2)
    assert detour_distance(g, 0, 0) == 0
    assert detour_distance(g, 1, 4) == 6  # spans both cliques, p - 1
    assert detour_distance(g, 1, 2) == 3
    assert detour_distance(g, 3, 0) == 3


@given(st.integers(0, 10_000))
@settings(max_examples=50, deadline=None)
def test_detour_distance_matches_brute_force(seed: int) -> None:
    g = gen_random_block_graph(seed, max_p=8)
    for u in range(g.p):
        for v in range(u, g.p):
            assert detour_distance(g, u, v) == brute_longest_path(g, u, v)


@given(st.integers(0, 10_000))
@settings(max_examples=40, deadline=None)
def test_detour_distance_is_a_metric(seed: int) -> None:
    g = gen_random_block_graph(seed, max_p=9)
    d = detour_matrix(g)
    for u in range(g.p):
        assert d[u][u] == 0
        for v in range(u + 1, g.p):
            assert 0 < d[u][v] == d[v][u] <= g.p - 1
    for u, v, w in combinations(range(g.p), 3):
        assert d[u][w] <= d[u][v] + d[v][w]


def test_detour_equals_shortest_path_on_paths() -> None:
    g = gen_path(7)
    for u in range(g.p):
        dist = bfs_distance(g, u)
        for v in range(g.p):
            assert detour_distance(g, u, v) == dist[v]


@given(st.integers(0, 10_000))
@settings(max_examples=40, deadline=None)
def test_detour_equals_shortest_path_on_trees(seed: int) -> None:
    # all blocks of size 2 leave a unique path between any pair
    g = gen_random_block_graph(seed, max_p=9, max_block_size=2)
    assert all(len(b) == 2 for b in g.blocks)
    for u in range(g.p):
        dist = bfs_distance(g, u)
        for v in range(g.p):
            assert detour_distance(g, u, v) == dist[v]


def test_detour_matrix_agrees_with_pairwise() -> None:
    for g in (gen_union(3, 3), gen_path(6), gen_symmetric(SymmetricSpec(3, 2, 4))[0]):
        d = detour_matrix(g)
        for u in range(g.p):
            for v in range(g.p):
                assert d[u][v] == detour_distance(g, u, v)


def test_center_even_diameter_is_single_vertex() -> None:
    g, _ = gen_symmetric(SymmetricSpec(4, 2, 4))
    center, omega = detour_center(g)
    assert center == (0,) and omega == 1


def test_center_odd_diameter_is_central_block() -> None:
    g, _ = gen_symmetric(SymmetricSpec(4, 2, 5))
    center, omega = detour_center(g)
    assert center == (0, 1, 2, 3) and omega == 4


def test_center_of_complete_graph_is_everything() -> None:
    g = build_block_graph(6, [range(6)])
    center, omega = detour_center(g)
    assert omega == 6 and center == tuple(range(6))


def test_center_lies_in_one_block(corpus) -> None:
    for g in corpus[:80]:
        profile = detour_profile(g)
        shared = set(g.vertex_blocks[profile.center[0]])
        for w in profile.center[1:]:
            shared &= set(g.vertex_blocks[w])
        assert shared


def test_xi_values() -> None:
    g4, _ = gen_symmetric(SymmetricSpec(4, 2, 4))
    assert xi(g4, detour_profile(g4)) == 3
    g5, _ = gen_symmetric(SymmetricSpec(4, 2, 5))
    assert xi(g5, detour_profile(g5)) == 0
    star = gen_star(3)
    assert xi(star, detour_profile(star)) == 1


def test_levels_even_case() -> None:
    g, _ = gen_symmetric(SymmetricSpec(4, 2, 4))
    profile = detour_profile(g)
    # direct-summation oracle: min detour distance to the center per vertex
    direct = [min(detour_distance(g, w, u) for w in profile.center) for u in range(g.p)]
    assert list(profile.level) == direct
    assert sorted(direct).count(3) == 6 and sorted(direct).count(6) == 18
    assert total_detour_level(g, profile) == sum(direct) == 126
    assert detour_level(g, profile, profile.center[0]) == 0


def test_levels_odd_case() -> None:
    g, _ = gen_symmetric(SymmetricSpec(4, 2, 5))
    profile = detour_profile(g)
    direct = [min(detour_distance(g, w, u) for w in profile.center) for u in range(g.p)]
    assert list(profile.level) == direct
    assert total_detour_level(g, profile) == 12 * 3 + 36 * 6 == 252


def test_profile_level_zero_iff_central(corpus) -> None:
    for g in corpus[:60]:
        profile = detour_profile(g)
        for v in range(g.p):
            assert (profile.level[v] == 0) == (v in profile.center)
        assert profile.total_level == sum(profile.level)
        if profile.omega >= 2:
            assert profile.xi == 0


def test_branch_relations_union() -> None:
    g = gen_union(4, 2)
    profile = detour_profile(g)
    assert branch_relation(g, profile, 1, 4) == "different"
    assert branch_relation(g, profile, 1, 2) == "same"
    assert branch_relation(g, profile, 0, 5) == "involves_central"


def test_branch_relations_odd_symmetric() -> None:
    g, coords = gen_symmetric(SymmetricSpec(4, 2, 5))
    profile = detour_profile(g)
    under_first = next(v for v in range(g.p) if profile.owner[v] == 0)
    under_second = next(v for v in range(g.p) if profile.owner[v] == 1)
    assert branch_relation(g, profile, under_first, under_second) == "opposite"
    assert branch_relation(g, profile, 0, under_second) == "involves_central"


@given(st.integers(0, 10_000))
@settings(max_examples=40, deadline=None)
def test_detour_inequality_and_equality_direction(seed: int) -> None:
    g = gen_random_block_graph(seed, max_p=9)
    profile = detour_profile(g)
    for u in range(g.p):
        for v in range(u + 1, g.p):
            d = detour_distance(g, u, v)
            cap = profile.level[u] + profile.level[v] + profile.omega - 1
            assert d <= cap
            rel = branch_relation(g, profile, u, v)
            if (rel == "different" and profile.omega == 1) or (
                rel == "opposite" and profile.omega >= 2
            ):
                assert d == cap
