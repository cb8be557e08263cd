"""Independent ground truth at small scale.

``brute_longest_path`` enumerates every simple path by depth-first
search and is deliberately kept naive: it is the oracle the block-path
distance formula is checked against.

``exact_hc`` enumerates vertex orderings with branch-and-bound.  For a
fixed ordering the cheapest consistent coloring is forced (each next
color is the maximum over placed vertices of c(u) + p - 1 - D(u, next)),
and every valid coloring is consistent with the ordering induced by
sorting its colors, so the minimum over orderings is exact.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import ClassVar, Sequence

from .coloring import HamColoring, _as_permutation, greedy_ordering
from .detour import detour_matrix, detour_profile
from .errors import BudgetExceededError, InvalidSpecError
from .formulas import lower_bound
from .graphs import BlockGraph


@dataclass
class SearchBudget:
    """Limits for the exact search.

    ``incumbent`` is an optional trusted upper bound (the span of some
    known valid coloring); it tightens pruning but the returned witness
    may then be None when nothing below it exists.
    """

    max_p: int = 10
    time_limit: float | None = None
    incumbent: int | None = None

    HARD_CAP: ClassVar[int] = 12

    def __post_init__(self):
        if not 1 <= self.max_p <= self.HARD_CAP:
            raise InvalidSpecError(
                f"max_p must be between 1 and {self.HARD_CAP}, got {self.max_p}"
            )


def brute_longest_path(g: BlockGraph, u: int, v: int, budget: SearchBudget | None = None) -> int:
    """Exact longest simple u-v path length by exhaustive DFS."""
    budget = budget or SearchBudget()
    if g.p > budget.max_p:
        raise BudgetExceededError(f"p={g.p} exceeds the brute-force budget of {budget.max_p}")
    if u == v:
        return 0
    adj = g.adjacency
    visited = bytearray(g.p)
    visited[u] = 1
    best = -1

    def walk(x: int, length: int) -> None:
        nonlocal best
        if x == v:
            if length > best:
                best = length
            return
        for y in adj[x]:
            if not visited[y]:
                visited[y] = 1
                walk(y, length + 1)
                visited[y] = 0

    walk(u, 0)
    return best


def greedy_min_coloring_for_ordering(
    g: BlockGraph, ordering: Sequence[int], dmatrix=None
) -> HamColoring:
    """Cheapest valid coloring whose nondecreasing color order follows the ordering."""
    order = _as_permutation(g.p, ordering)
    d = detour_matrix(g) if dmatrix is None else dmatrix
    rows = [list(map(int, d[v])) for v in range(g.p)]
    need = g.p - 1
    colors = [0] * g.p
    assigned = [order[0]]
    for i in range(1, g.p):
        v = order[i]
        best = 0
        for u in assigned:
            val = colors[u] + need - rows[u][v]
            if val > best:
                best = val
        colors[v] = best
        assigned.append(v)
    return HamColoring(tuple(colors))


class _Done(Exception):
    pass


def _twin_groups(rows: list[list[int]], p: int) -> list[int]:
    """twin_prev[v]: the twin that must precede v in any explored ordering, or -1.

    Two vertices are twins when their distance rows agree everywhere off
    the pair; swapping twins in an ordering never changes the forced
    coloring's span, so each twin class is explored in ascending order.
    """
    parent = list(range(p))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u in range(p):
        for v in range(u + 1, p):
            if all(rows[u][x] == rows[v][x] for x in range(p) if x != u and x != v):
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, list[int]] = {}
    for v in range(p):
        groups.setdefault(find(v), []).append(v)
    twin_prev = [-1] * p
    for members in groups.values():
        members.sort()
        for a, b in zip(members, members[1:]):
            twin_prev[b] = a
    return twin_prev


def exact_hc(g: BlockGraph, budget: SearchBudget | None = None) -> tuple[int, HamColoring | None]:
    """Exact hamiltonian chromatic number with a witness coloring.

    Enumerates orderings depth-first.  Pruning: the pending color of any
    unplaced vertex is a lower bound on the final span; the incumbent is
    seeded by the greedy-ordering pipeline; the search stops early when
    the incumbent meets the general lower bound, which certifies it.
    """
    budget = budget or SearchBudget()
    p = g.p
    if p > budget.max_p:
        raise BudgetExceededError(f"p={p} exceeds the search budget of {budget.max_p}")
    deadline = time.perf_counter() + budget.time_limit if budget.time_limit else None

    profile = detour_profile(g)
    lb = lower_bound(g, profile)
    d = detour_matrix(g)
    rows = [list(map(int, d[v])) for v in range(p)]

    seed = greedy_min_coloring_for_ordering(g, greedy_ordering(g, profile), d)
    best_span = seed.span
    best_colors: tuple[int, ...] | None = seed.colors
    if budget.incumbent is not None and budget.incumbent < best_span:
        best_span = budget.incumbent
        best_colors = None
    if best_span <= lb:
        return best_span, HamColoring(best_colors) if best_colors is not None else None

    twin_prev = _twin_groups(rows, p)
    need = p - 1
    pending = [0] * p
    used = [False] * p
    colors = [0] * p
    nodes = 0

    def search(depth: int) -> None:
        nonlocal best_span, best_colors, nodes
        nodes += 1
        if deadline is not None and nodes % 4096 == 0 and time.perf_counter() > deadline:
            raise BudgetExceededError("time limit exhausted during exact search")
        candidates = []
        for v in range(p):
            if used[v] or (twin_prev[v] != -1 and not used[twin_prev[v]]):
                continue
            candidates.append((pending[v], v))
        candidates.sort()
        for nc, v in candidates:
            if nc >= best_span:
                break
            used[v] = True
            colors[v] = nc
            if depth + 1 == p:
                best_span = nc
                best_colors = tuple(colors)
                used[v] = False
                if best_span <= lb:
                    raise _Done
                return
            saved = []
            worst = 0
            row = rows[v]
            for y in range(p):
                if not used[y]:
                    cand = nc + need - row[y]
                    if cand > pending[y]:
                        saved.append((y, pending[y]))
                        pending[y] = cand
                    if pending[y] > worst:
                        worst = pending[y]
            if worst < best_span:
                search(depth + 1)
            for y, old in saved:
                pending[y] = old
            used[v] = False

    try:
        search(0)
    except _Done:
        pass
    witness = HamColoring(best_colors) if best_colors is not None else None
    return best_span, witness
