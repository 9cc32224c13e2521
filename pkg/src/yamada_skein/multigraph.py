"""Crossing-free residues of diagrams and their canonical forms.

Values computed here are Laurent polynomials in d (not in A), stored as
``{power: coefficient}`` dicts; every relation used on crossing-free graphs
has coefficients in Z[d, d^-1].
"""
from __future__ import annotations

import threading
from collections import OrderedDict, defaultdict
from dataclasses import dataclass

DPoly = dict  # {power of d: int}


@dataclass(frozen=True)
class AbstractMultigraph:
    """Vertices 0..n-1, edges (u, v, winding u->v), loops allowed, plus free circles."""

    n_vertices: int
    edges: tuple[tuple[int, int, int], ...] = ()
    circles: tuple[int, ...] = ()

    def degree(self) -> list[int]:
        deg = [0] * self.n_vertices
        for u, v, _ in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def euler_characteristic(self) -> int:
        return self.n_vertices - len(self.edges)

    def sphere_key(self) -> tuple:
        """Isomorphism-invariant key ignoring windings."""
        return (canonical_form(self.n_vertices, [(u, v) for u, v, _ in self.edges]), len(self.circles))


# ---------------------------------------------------------------------------
# canonical labelling by colour refinement with individualisation


def _refine(colors: list[int], adj: list[dict[int, int]], loops: list[int]) -> list[int]:
    n_classes = len(set(colors))
    while True:
        sigs = [
            (colors[v], loops[v], tuple(sorted((colors[u], m) for u, m in adj[v].items())))
            for v in range(len(colors))
        ]
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if len(order) == n_classes:
            return new
        colors, n_classes = new, len(order)


def canonical_form(n: int, edges) -> tuple:
    """Certificate equal for two multigraphs exactly when they are isomorphic."""
    adj: list[dict[int, int]] = [defaultdict(int) for _ in range(n)]
    loops = [0] * n
    for u, v in edges:
        if u == v:
            loops[u] += 1
        else:
            adj[u][v] += 1
            adj[v][u] += 1
    adj = [dict(a) for a in adj]
    start = _refine([0] * n, adj, loops)
    best = [None]

    def certificate(colors):
        cert = [n, tuple(sorted((colors[v], loops[v]) for v in range(n)))]
        es = []
        for v in range(n):
            for u, m in adj[v].items():
                if u > v:
                    a, b = colors[u], colors[v]
                    es.append((min(a, b), max(a, b), m))
        cert.append(tuple(sorted(es)))
        return tuple(cert)

    def search(colors):
        cells: dict[int, list[int]] = defaultdict(list)
        for v, c in enumerate(colors):
            cells[c].append(v)
        target = next((c for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            cert = certificate(colors)
            if best[0] is None or cert < best[0]:
                best[0] = cert
            return
        for v in cells[target]:
            c2 = [2 * c + (1 if (c == target and w != v) else 0) for w, c in enumerate(colors)]
            search(_refine(c2, adj, loops))

    search(start)
    return best[0]


# ---------------------------------------------------------------------------
# Laurent polynomials in d


def dmul(a: DPoly, b: DPoly) -> DPoly:
    out: dict[int, int] = defaultdict(int)
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] += x * y
    return {k: v for k, v in out.items() if v}


def dadd(a: DPoly, b: DPoly, scale_b: int = 1, shift_b: int = 0) -> DPoly:
    out = dict(a)
    for k, v in b.items():
        k2 = k + shift_b
        out[k2] = out.get(k2, 0) + scale_b * v
        if not out[k2]:
            del out[k2]
    return out


def dpow(a: DPoly, k: int) -> DPoly:
    out = {0: 1}
    for _ in range(k):
        out = dmul(out, a)
    return out


D_ONE = {0: 1}
D_VERTEX = {1: 1}  # isolated vertex
D_LOOP = {1: 1, -1: -1}  # d - d^-1
D_CIRCLE = {2: 1, 0: -1}  # d^2 - 1


# ---------------------------------------------------------------------------
# relation-driven evaluation on the sphere


class PlanarEvaluator:
    """Deletion-contraction evaluator with a bounded LRU memo keyed by canonical form.

    One instance may be shared between threads; the cache is guarded by a lock.
    """

    def __init__(self, cache_size: int = 200_000, memo: bool = True, pivot=None,
                 vertex_value: DPoly = D_VERTEX):
        self.vertex_value = dict(vertex_value)
        self.cache_size = cache_size
        self.memo = memo
        self.pivot = pivot  # optional callable(edges) -> index, for order-independence tests
        self._cache: OrderedDict = OrderedDict()
        self._lock = threading.Lock()

    @property
    def shortcuts_valid(self) -> bool:
        """Pendant edges vanish and 2-valent vertices contract only when a vertex is worth d."""
        return self.pivot is None and self.vertex_value == D_VERTEX

    def clear(self):
        with self._lock:
            self._cache.clear()

    def evaluate(self, mg: AbstractMultigraph) -> DPoly:
        value = dpow(D_CIRCLE, len(mg.circles))
        return dmul(value, self._graph(mg.n_vertices, [(u, v) for u, v, _ in mg.edges]))

    # graph with possible loops and several components
    def _graph(self, n: int, edges: list[tuple[int, int]]) -> DPoly:
        value = dict(D_ONE)
        plain = []
        for u, v in edges:
            if u == v:
                value = dmul(value, D_LOOP)
            else:
                plain.append((u, v))
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in plain:
            parent[find(u)] = find(v)
        comps: dict[int, list[int]] = defaultdict(list)
        for v in range(n):
            comps[find(v)].append(v)
        comp_edges: dict[int, list] = defaultdict(list)
        for u, v in plain:
            comp_edges[find(u)].append((u, v))
        for root, verts in comps.items():
            if len(verts) == 1:
                value = dmul(value, self.vertex_value)
                continue
            index = {v: i for i, v in enumerate(verts)}
            sub = [(index[u], index[v]) for u, v in comp_edges[root]]
            part = self._connected(len(verts), sub)
            if not part:
                return {}
            value = dmul(value, part)
        return value

    # connected, loopless, at least two vertices
    def _connected(self, n: int, edges: list[tuple[int, int]]) -> DPoly:
        deg = [0] * n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        if self.shortcuts_valid and min(deg) == 1:
            # a pendant edge is a bridge: contraction and deletion cancel
            return {}
        if self.shortcuts_valid:
            w = next((v for v in range(n) if deg[v] == 2), None)
            if w is not None:
                # deleting one edge at a 2-valent vertex leaves a pendant edge
                i = next(i for i, e in enumerate(edges) if w in e)
                return self._graph(*contract(n, edges, i))
        if not self.memo:
            return self._split(n, edges)
        key = canonical_form(n, edges)
        with self._lock:
            hit = self._cache.get(key)
            if hit is not None:
                self._cache.move_to_end(key)
                return hit
        value = self._split(n, edges)
        with self._lock:
            self._cache[key] = value
            if len(self._cache) > self.cache_size:
                self._cache.popitem(last=False)
        return value

    def _split(self, n, edges):
        if self.pivot is not None:
            i = self.pivot(edges)
        else:
            deg = [0] * n
            for u, v in edges:
                deg[u] += 1
                deg[v] += 1
            # contract at a lowest-degree vertex
            w = min(range(n), key=lambda v: (deg[v], v))
            i = next(i for i, e in enumerate(edges) if w in e)
        contracted = self._graph(*contract(n, edges, i))
        deleted = self._graph(n, edges[:i] + edges[i + 1:])
        return dadd(contracted, deleted, -1, -1)


def contract(n: int, edges: list[tuple[int, int]], i: int) -> tuple[int, list[tuple[int, int]]]:
    """Contract non-loop edge i: its higher endpoint merges into the lower one."""
    a, b = edges[i]
    keep, gone = min(a, b), max(a, b)

    def relabel(x):
        if x == gone:
            x = keep
        return x - 1 if x > gone else x

    rest = [(relabel(u), relabel(v)) for j, (u, v) in enumerate(edges) if j != i]
    return n - 1, rest


DEFAULT_EVALUATOR = PlanarEvaluator()


def simplify(n: int, edges: list[tuple[int, int]]) -> tuple[DPoly, int, list[tuple[int, int]]] | None:
    """Strip loops, isolated vertices and 2-valent vertices; None when the value is 0.

    Returns ``(factor, n', edges')`` with value(n, edges) = factor * value(n', edges'),
    where every vertex of the remaining graph has degree at least 3.
    """
    factor: DPoly = dict(D_ONE)
    edges = list(edges)
    while True:
        kept = []
        for u, v in edges:
            if u == v:
                factor = dmul(factor, D_LOOP)
            else:
                kept.append((u, v))
        edges = kept
        deg = [0] * n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        if any(x == 1 for x in deg):
            return None
        isolated = [v for v in range(n) if deg[v] == 0]
        if isolated:
            factor = dmul(factor, dpow(D_VERTEX, len(isolated)))
            gone = set(isolated)
            index = {}
            for v in range(n):
                if v not in gone:
                    index[v] = len(index)
            edges = [(index[u], index[v]) for u, v in edges]
            n = len(index)
            continue
        w = next((v for v in range(n) if deg[v] == 2), None)
        if w is None:
            return factor, n, edges
        i = next(i for i, e in enumerate(edges) if w in e)
        n, edges = contract(n, edges, i)


def subset_expansion(mg: AbstractMultigraph) -> DPoly:
    """Independent oracle: sum over edge subsets F of (-1/d)^{|E-F|} d^{|F| - |V| + 2 k(F)}.

    Exponential in the number of edges; used only to check the recursive evaluator.
    """
    n, edges = mg.n_vertices, [(u, v) for u, v, _ in mg.edges]
    m = len(edges)
    total: dict[int, int] = defaultdict(int)
    for mask in range(1 << m):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        size = 0
        k = n
        for j in range(m):
            if mask >> j & 1:
                size += 1
                ru, rv = find(edges[j][0]), find(edges[j][1])
                if ru != rv:
                    parent[ru] = rv
                    k -= 1
        deleted = m - size
        power = -deleted + size - n + 2 * k
        total[power] += (-1) ** deleted
    value = {k: v for k, v in total.items() if v}
    return dmul(value, dpow(D_CIRCLE, len(mg.circles)))
