from __future__ import annotations

import pytest

from hamcolor import (
    SymmetricSpec,
    detour_profile,
    gen_random_block_graph,
    gen_symmetric,
    sym_order_count,
)

CORPUS_SIZE = 200
CORPUS_MAX_P = 9
GRID_MAX_P = 5000


def grid_specs() -> list[SymmetricSpec]:
    """The acceptance grid: m in 3..5, kappa in 2..4, d in 3..7, plus the
    tree rows (m=2, kappa in 3..4), restricted to graphs with p <= 5000."""
    specs = []
    for m in (3, 4, 5):
        for kappa in (2, 3, 4):
            for d in range(3, 8):
                specs.append(SymmetricSpec(m, kappa, d))
    for kappa in (3, 4):
        for d in range(3, 8):
            specs.append(SymmetricSpec(2, kappa, d))
    return [s for s in specs if sym_order_count(s) <= GRID_MAX_P]


@pytest.fixture(scope="session")
def corpus():
    """The seeded random instance pool used by the oracle suites."""
    return [gen_random_block_graph(seed, max_p=CORPUS_MAX_P) for seed in range(CORPUS_SIZE)]


@pytest.fixture(scope="session")
def grid_instances():
    """(spec, graph, coordinates, profile) for every grid member.

    Construction re-checks the two generator invariants everywhere: the
    closed-form order count matches the literal vertex count and the
    ordinary diameter matches the requested one.
    """
    out = []
    for spec in grid_specs():
        g, coords = gen_symmetric(spec)
        assert g.p == sym_order_count(spec), spec
        assert _hop_diameter(g) == spec.diameter, spec
        out.append((spec, g, coords, detour_profile(g)))
    return out


def _hop_diameter(g) -> int:
    # two sweeps; exact on block graphs, whose hop metric is a tree metric
    from collections import deque

    def farthest(source: int) -> tuple[int, int]:
        dist = [-1] * g.p
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        far = max(range(g.p), key=lambda v: dist[v])
        return far, dist[far]

    a, _ = farthest(0)
    return farthest(a)[1]
