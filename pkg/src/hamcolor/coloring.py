"""Vertex orderings and hamiltonian colorings of block graphs.

A hamiltonian coloring assigns a non-negative color c(v) to every vertex
so that D(u, v) + |c(u) - c(v)| >= p - 1 for all distinct u, v.  The
constructor here walks an ordering u_0..u_{p-1} and applies the gap
recurrence

    c(u_{i+1}) = c(u_i) + p - 1 - level(u_i) - level(u_{i+1}) - omega + 1,

which telescopes to span = (p-1)(p-omega) - 2*total_level + level(u_0)
+ level(u_{p-1}).  When the ordering satisfies the three conditions
checked by :func:`check_ordering_conditions`, the result is a valid
coloring meeting the general lower bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .detour import (
    RELATION_DIFFERENT,
    RELATION_OPPOSITE,
    DetourProfile,
    branch_relation,
    detour_distance,
    detour_matrix,
)
from .errors import (
    InvalidSpecError,
    NegativeGapError,
    NotAPermutationError,
    SizeMismatchError,
)
from .families import SymmetricCoordinates
from .graphs import BlockGraph

VertexOrdering = Sequence[int]


@dataclass(frozen=True)
class HamColoring:
    """Per-vertex colors, normalized so the minimum color is 0."""

    colors: tuple[int, ...]

    def __post_init__(self):
        if not self.colors:
            raise SizeMismatchError("a coloring needs at least one vertex")
        low = min(self.colors)
        if low:
            object.__setattr__(self, "colors", tuple(c - low for c in self.colors))

    @property
    def span(self) -> int:
        return max(self.colors)


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of the three ordering conditions, with witnesses.

    ``cond3_violations`` lists (index, D(u_i, u_{i+1})) for every
    consecutive pair whose detour distance exceeds p/2.
    """

    cond1_endpoints: bool
    endpoint_levels: tuple[int, int]
    cond2_branches: bool
    cond2_first_violation: int | None
    cond3_halfp: bool
    cond3_violations: tuple[tuple[int, int], ...]

    @property
    def all_ok(self) -> bool:
        return self.cond1_endpoints and self.cond2_branches and self.cond3_halfp


def _as_permutation(p: int, ordering: VertexOrdering) -> list[int]:
    order = list(ordering)
    if len(order) != p or sorted(order) != list(range(p)):
        raise NotAPermutationError(f"ordering is not a permutation of 0..{p - 1}")
    return order


def check_ordering_conditions(
    g: BlockGraph, profile: DetourProfile, ordering: VertexOrdering
) -> ConditionReport:
    """Check endpoint levels, branch alternation and the half-order gap cap.

    Condition 1: level(u_0) = 0 and level(u_{p-1}) = xi when omega is 1,
    both levels 0 when omega >= 2.  Condition 2: consecutive non-central
    vertices sit in different branches (omega = 1) or opposite branches
    (omega >= 2); pairs touching a central vertex are exempt.  Condition 3:
    2*D(u_i, u_{i+1}) <= p for every i (the exact rational comparison).
    """
    order = _as_permutation(g.p, ordering)
    level = profile.level
    first, last = order[0], order[-1]
    want_last = profile.xi if profile.omega == 1 else 0
    cond1 = level[first] == 0 and level[last] == want_last

    required = RELATION_DIFFERENT if profile.omega == 1 else RELATION_OPPOSITE
    first_violation: int | None = None
    for i in range(g.p - 1):
        u, v = order[i], order[i + 1]
        if profile.owner[u] == -1 or profile.owner[v] == -1:
            continue
        if branch_relation(g, profile, u, v) != required:
            first_violation = i
            break

    halfp_violations: list[tuple[int, int]] = []
    for i in range(g.p - 1):
        d = detour_distance(g, order[i], order[i + 1])
        if 2 * d > g.p:
            halfp_violations.append((i, d))

    return ConditionReport(
        cond1_endpoints=cond1,
        endpoint_levels=(level[first], level[last]),
        cond2_branches=first_violation is None,
        cond2_first_violation=first_violation,
        cond3_halfp=not halfp_violations,
        cond3_violations=tuple(halfp_violations),
    )


def coloring_from_ordering(
    g: BlockGraph, profile: DetourProfile, ordering: VertexOrdering
) -> HamColoring:
    """Apply the gap recurrence along the ordering, starting from 0.

    Raises NegativeGapError instead of clamping when some step would be
    negative, so an unusable ordering cannot masquerade as a coloring.
    """
    order = _as_permutation(g.p, ordering)
    level = profile.level
    colors = [0] * g.p
    current = 0
    for i in range(g.p - 1):
        gap = g.p - 1 - level[order[i]] - level[order[i + 1]] - profile.omega + 1
        if gap < 0:
            raise NegativeGapError(i, gap)
        current += gap
        colors[order[i + 1]] = current
    return HamColoring(tuple(colors))


def validate_coloring(
    g: BlockGraph, colors: Sequence[int], dmatrix: np.ndarray | None = None
) -> list[tuple[int, int, int]]:
    """Check every vertex pair; return (u, v, deficit) for each violation.

    An empty list means the coloring is a hamiltonian coloring.  The
    check is vectorized over a precomputed detour matrix and processes
    row chunks to bound memory on large graphs.
    """
    if len(colors) != g.p:
        raise SizeMismatchError(f"expected {g.p} colors, got {len(colors)}")
    if any(
        not isinstance(c, (int, np.integer)) or isinstance(c, bool) or c < 0 for c in colors
    ):
        raise InvalidSpecError("colors must be non-negative integers")
    d = detour_matrix(g) if dmatrix is None else dmatrix
    c = np.asarray(colors, dtype=np.int64)
    need = g.p - 1
    violations: list[tuple[int, int, int]] = []
    chunk = 2048
    for i0 in range(0, g.p, chunk):
        i1 = min(g.p, i0 + chunk)
        deficit = need - d[i0:i1] - np.abs(c[i0:i1, None] - c[None, :])
        rows, cols = np.nonzero(deficit > 0)
        for r, col in zip(rows, cols):
            u = i0 + int(r)
            v = int(col)
            if u < v:
                violations.append((u, v, int(deficit[r, col])))
    violations.sort()
    return violations


def sym_ordering(g: BlockGraph, coords: SymmetricCoordinates) -> list[int]:
    """The bound-achieving ordering of a symmetric block graph.

    Every branch's descendants are renamed 1..S, deepest depth group
    first and child tuples in radix order with the first index least
    significant.  The ordering then cycles the branches round-robin,
    taking the s-th renamed element of each in turn, and closes with the
    depth-1 list (even diameter) or the remaining central vertices (odd).
    """
    spec = coords.spec
    if spec.diameter < 3:
        raise InvalidSpecError("the ordering construction needs diameter >= 3")
    n, k, r = spec.n, spec.k, spec.r
    x = k * n
    if coords.parity == "even":
        streams = spec.cut_degree * n
        max_len = r - 1
    else:
        streams = n + 1
        max_len = r

    size = sum(x**a for a in range(1, max_len + 1))
    offsets = {
        lam: sum(x**a for a in range(lam + 1, max_len + 1)) for lam in range(1, max_len + 1)
    }
    renamed: list[list[int | None]] = [[None] * size for _ in range(streams)]
    for v in range(g.p):
        tup = coords.path_tuple[v]
        if not tup:
            continue
        j = 1 + sum(idx * x**a for a, idx in enumerate(tup)) + offsets[len(tup)]
        slot = renamed[coords.branch[v] - 1][j - 1]
        if slot is not None:
            raise AssertionError("renaming collision")
        renamed[coords.branch[v] - 1][j - 1] = v

    ordering: list[int] = [0] * g.p
    if coords.parity == "even":
        ordering[0] = coords.roots[0]
        tail = list(coords.top_list)
    else:
        ordering[0] = coords.roots[-1]
        tail = list(coords.roots[:-1])

    pos = 1
    for s in range(size):
        for t in range(streams):
            v = renamed[t][s]
            if v is None:
                raise AssertionError("renaming left a hole")
            ordering[pos] = v
            pos += 1
    for v in tail:
        ordering[pos] = v
        pos += 1
    if pos != g.p:
        raise AssertionError("ordering did not cover all vertices")
    return ordering


def union_coloring(n: int, k: int) -> HamColoring:
    """Direct optimal coloring of the one-point union of k copies of K_n.

    Uses the vertex layout of :func:`hamcolor.families.gen_union`.  For
    k = 2 the two blocks mirror each other; for k >= 3 the non-central
    vertices take round-robin block order with uniform steps of
    (k-2)(n-1) after an initial (k-1)(n-1).
    """
    if n < 2 or k < 2:
        raise InvalidSpecError(f"union coloring needs n, k >= 2, got ({n}, {k})")
    p = k * (n - 1) + 1
    colors = [0] * p
    if k == 2:
        for i in range(1, n):
            colors[i] = i * (n - 1)
            colors[(n - 1) + i] = i * (n - 1)
    else:
        value = (k - 1) * (n - 1)
        step = (k - 2) * (n - 1)
        for s in range(k * (n - 1)):
            member = s // k + 1
            block = s % k
            colors[block * (n - 1) + member] = value
            value += step
    return HamColoring(tuple(colors))


def greedy_ordering(g: BlockGraph, profile: DetourProfile) -> list[int]:
    """Best-effort ordering for arbitrary block graphs; no optimality claim.

    Starts at the lowest-id central vertex, then repeatedly appends the
    highest-level unused vertex whose branch differs from (or opposes)
    the previous vertex's branch when any such vertex exists, breaking
    ties by vertex id; remaining central vertices come last.
    """
    start = min(profile.center)
    order = [start]
    used = [False] * g.p
    used[start] = True
    remaining = [v for v in range(g.p) if profile.owner[v] != -1]
    remaining.sort(key=lambda v: (-profile.level[v], v))
    while any(not used[v] for v in remaining):
        prev = order[-1]
        best = None
        fallback = None
        for v in remaining:
            if used[v]:
                continue
            if fallback is None:
                fallback = v
            if branch_relation(g, profile, prev, v) in (RELATION_DIFFERENT, RELATION_OPPOSITE):
                best = v
                break
        pick = best if best is not None else fallback
        order.append(pick)
        used[pick] = True
    for v in sorted(profile.center):
        if not used[v]:
            order.append(v)
            used[v] = True
    return order
