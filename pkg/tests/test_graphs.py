from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hamcolor import (
    CyclicBlockStructureError,
    DanglingVertexError,
    DisconnectedError,
    InvalidSpecError,
    OverlappingBlocksError,
    SameVertexError,
    blocks_on_path,
    build_block_graph,
    from_json,
    gen_path,
    gen_random_block_graph,
    gen_star,
    gen_union,
    to_dot,
    to_json,
)


def test_build_star_k13() -> None:
    g = build_block_graph(4, [{0, 1}, {0, 2}, {0, 3}])
    assert len(g.blocks) == 3
    assert g.cut_vertices == {0}
    assert g.adjacency[0] == (1, 2, 3)


def test_build_two_cliques_sharing_one_vertex() -> None:
    g = build_block_graph(7, [{0, 1, 2, 3}, {3, 4, 5, 6}])
    assert g.cut_vertices == {3}
    assert len(g.blocks) == 2


def test_build_rejects_overlapping_blocks() -> None:
    with pytest.raises(OverlappingBlocksError):
        build_block_graph(5, [{0, 1, 2}, {1, 2, 3, 4}])


def test_build_rejects_disconnected() -> None:
    with pytest.raises(DisconnectedError):
        build_block_graph(4, [{0, 1}, {2, 3}])


def test_build_rejects_cyclic_block_structure() -> None:
    with pytest.raises(CyclicBlockStructureError):
        build_block_graph(3, [{0, 1}, {1, 2}, {0, 2}])


def test_build_rejects_dangling_vertex() -> None:
    with pytest.raises(DanglingVertexError):
        build_block_graph(3, [{0, 1}])


def test_build_rejects_tiny_blocks_and_bad_ids() -> None:
    with pytest.raises(InvalidSpecError):
        build_block_graph(2, [{0}])
    with pytest.raises(InvalidSpecError):
        build_block_graph(2, [{0, 5}])


def test_block_cut_tree_shapes() -> None:
    two = gen_union(4, 2).block_cut_tree()
    assert two.block_count == 2 and len(two.cut_list) == 1

    star = gen_star(3).block_cut_tree()
    assert star.block_count == 3 and len(star.cut_list) == 1

    k5 = build_block_graph(5, [range(5)]).block_cut_tree()
    assert k5.block_count == 1 and not k5.cut_list


def test_blocks_on_path_union() -> None:
    g = gen_union(4, 2)
    across = blocks_on_path(g, 1, 4)
    assert len(across) == 2
    assert 1 in g.blocks[across[0]] and 4 in g.blocks[across[1]]
    assert blocks_on_path(g, 1, 2) == [0]


def test_blocks_on_path_chain() -> None:
    g = gen_path(4)
    path = blocks_on_path(g, 0, 3)
    assert [g.blocks[b] for b in path] == [(0, 1), (1, 2), (2, 3)]


def test_blocks_on_path_same_vertex_rejected() -> None:
    with pytest.raises(SameVertexError):
        blocks_on_path(gen_path(4), 2, 2)


@given(st.integers(0, 10_000))
@settings(max_examples=60)
def test_blocks_on_path_reverses(seed: int) -> None:
    g = gen_random_block_graph(seed, max_p=8)
    for u in range(g.p):
        for v in range(u + 1, g.p):
            assert blocks_on_path(g, u, v) == blocks_on_path(g, v, u)[::-1]


@given(st.integers(0, 10_000))
@settings(max_examples=60)
def test_every_edge_in_exactly_one_block(seed: int) -> None:
    g = gen_random_block_graph(seed, max_p=9)
    counts: dict[tuple[int, int], int] = {}
    for b in g.blocks:
        for e in combinations(b, 2):
            counts[e] = counts.get(e, 0) + 1
    assert all(c == 1 for c in counts.values())
    edges = {frozenset(e) for e in counts}
    adj_edges = {frozenset((u, v)) for u in range(g.p) for v in g.adjacency[u]}
    assert edges == adj_edges


@given(st.integers(0, 10_000))
@settings(max_examples=60)
def test_blocks_are_maximal_cliques(seed: int) -> None:
    g = gen_random_block_graph(seed, max_p=8)
    neighborhoods = [set(a) for a in g.adjacency]
    for b in g.blocks:
        members = set(b)
        outside = set(range(g.p)) - members
        assert not any(members <= neighborhoods[x] for x in outside)


@given(st.integers(0, 10_000))
@settings(max_examples=60)
def test_json_round_trip_is_byte_identical(seed: int) -> None:
    g = gen_random_block_graph(seed, max_p=9)
    text = to_json(g)
    assert to_json(from_json(text)) == text


def test_json_round_trip_preserves_meta() -> None:
    g = gen_union(3, 2)
    again = from_json(to_json(g))
    assert again.meta == g.meta
    assert again == g


def test_from_json_rejects_garbage() -> None:
    with pytest.raises(InvalidSpecError):
        from_json("[1, 2, 3]")
    with pytest.raises(InvalidSpecError):
        from_json('{"p": 2.5, "blocks": [[0, 1]]}')
    with pytest.raises(InvalidSpecError):
        from_json('{"p": 2, "blocks": [["0", 1]]}')
    with pytest.raises(InvalidSpecError):
        from_json('{"p": 2, "blocks": [[0, 1]], "meta": 7}')


def test_dot_export_mentions_every_vertex_and_clusters() -> None:
    g = gen_union(3, 2)
    plain = to_dot(g)
    assert all(f"{v} [" in plain for v in range(g.p))
    assert "cluster_0" in to_dot(g, clusters=True)
    colored = to_dot(g, colors=[0, 2, 2, 4, 4])
    assert "fillcolor" in colored
