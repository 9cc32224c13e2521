"""Combinatorial screen: does the abstract graph admit a free Z/p action?

A p-periodic embedding induces an automorphism of order p fixing no vertex
and stabilising no edge.  The search assigns images vertex by vertex,
restricted to colour classes of the stable refinement and checked against
edge multiplicities as it goes.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass

from .multigraph import _refine

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


@dataclass
class ScreenResult:
    status: str
    reason: str = ""
    permutation: tuple[int, ...] | None = None

    def __bool__(self):
        return self.status != FAIL


def abstract_screen(n: int, edges, p: int, budget: int = 200_000) -> ScreenResult:
    """``edges`` is a list of (u, v) pairs; loops and repeated pairs allowed."""
    if n == 0:
        return ScreenResult(PASS, "no vertices")
    mult: dict[tuple[int, int], int] = defaultdict(int)
    loops = [0] * n
    deg = [0] * n
    adj: list[dict[int, int]] = [defaultdict(int) for _ in range(n)]
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        if u == v:
            loops[u] += 1
        else:
            mult[(min(u, v), max(u, v))] += 1
            adj[u][v] += 1
            adj[v][u] += 1
    for valency, count in sorted(Counter(deg).items()):
        if count % p:
            return ScreenResult(FAIL, f"{count} vertices of valency {valency}, not divisible by {p}")
    if len(edges) % p:
        return ScreenResult(FAIL, f"{len(edges)} edges, not divisible by {p}")
    colors = _refine([0] * n, [dict(a) for a in adj], loops)

    sigma = [-1] * n
    used = [False] * n
    nodes = [0]
    order = sorted(range(n), key=lambda v: (-deg[v], v))

    def cycle_ok(v: int) -> bool:
        # follow v forward; a closed cycle must have length exactly p
        steps, x = 0, v
        while sigma[x] != -1:
            x = sigma[x]
            steps += 1
            if x == v:
                return steps == p
            if steps >= p:
                return False
        return True

    def consistent(v: int) -> bool:
        w = sigma[v]
        for u, m in adj[v].items():
            if sigma[u] != -1 and adj[w].get(sigma[u], 0) != m:
                return False
        if p == 2:
            # the pair {v, sigma v} is an edge orbit of size 1 unless the parallel edges pair up
            if adj[v].get(w, 0) % 2:
                return False
        return True

    def search(k: int) -> bool:
        nodes[0] += 1
        if nodes[0] > budget:
            raise _Budget
        if k == n:
            return all(cycle_ok(v) for v in range(n))
        v = order[k]
        for w in range(n):
            if w == v or used[w] or colors[w] != colors[v] or loops[w] != loops[v]:
                continue
            sigma[v] = w
            used[w] = True
            if consistent(v) and cycle_ok(v) and search(k + 1):
                return True
            sigma[v] = -1
            used[w] = False
        return False

    try:
        found = search(0)
    except _Budget:
        return ScreenResult(INCONCLUSIVE, "screen inconclusive: search budget exceeded")
    if found:
        return ScreenResult(PASS, f"free automorphism of order {p} found", tuple(sigma))
    return ScreenResult(FAIL, f"no automorphism of order {p} acts freely on vertices and edges")


class _Budget(Exception):
    pass


def screen_diagram(D, p: int, budget: int = 200_000) -> ScreenResult:
    verts, edges = D.underlying_graph()
    index = {v: i for i, v in enumerate(verts)}
    return abstract_screen(len(verts), [(index[u], index[v]) for u, v in edges], p, budget)
