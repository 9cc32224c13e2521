"""Reduction of annular graph diagrams to polynomials in the core curve z.

Crossings are expanded as on the sphere (windings travel along the
reconnected strands).  Crossing-free graphs are reduced by contraction
minus d^-1 deletion, with windings re-rooted across contracted edges, until
every component is a single vertex carrying loops.  A loop of winding 0
bounds a disk and contributes d - d^-1; the value of a vertex with k
essential loops is read from the bouquet table, which is obtained from the
cabling map: B[k](z^2 - 1) is the annular bracket of the cabled bouquet.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .diagram import ANNULUS, GraphDiagram
from .multigraph import AbstractMultigraph
from .ring import D, D_INV, AnnularElement, SkeinScalar

LOOP = D - D_INV
CIRCLE = D * D - 1


class WindingCorruption(ValueError):
    pass


def _z_minus_shift(poly: AnnularElement) -> AnnularElement:
    """Rewrite an even polynomial Q(z) as q(u) with q(z^2 - 1) = Q(z)."""
    coeffs = poly.coeffs
    if any(k % 2 for k in coeffs):
        raise ValueError(f"cabled value {poly} is not even in z")
    # Q(z) = P(z^2); q(u) = P(u + 1)
    u_plus_1 = AnnularElement({1: 1, 0: 1})
    out = AnnularElement()
    for k, c in coeffs.items():
        out = out + (u_plus_1 ** (k // 2)) * c
    return out


@lru_cache(maxsize=None)
def bouquet_table(k: int) -> AnnularElement:
    """Value of one vertex with k nested essential loops."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return AnnularElement.constant(1)
    from .cabling import phi_bracket_annular
    from .corpus import bouquet

    return _z_minus_shift(phi_bracket_annular(bouquet(k)))


def _bouquet_value(loop_windings: list[int]) -> AnnularElement:
    essential = 0
    value = SkeinScalar(1)
    for w in loop_windings:
        if w == 0:
            value = value * LOOP
        elif abs(w) == 1:
            essential += 1
        else:
            raise WindingCorruption(f"winding corruption: loop with winding {w}")
    if essential == 0:
        return AnnularElement.constant(value * D)
    return bouquet_table(essential) * value


def _circle_value(w: int) -> AnnularElement:
    if w == 0:
        return AnnularElement.constant(CIRCLE)
    if abs(w) == 1:
        return AnnularElement.z()
    raise WindingCorruption(f"winding corruption: circle with winding {w}")


def contract_edge(n: int, edges: list[tuple[int, int, int]], i: int):
    """Contract non-loop edge i = (a, b, w): b merges into a, windings re-rooted."""
    a, b, w = edges[i]
    # off[x]: winding from the surviving vertex to the old position of x
    off = {a: 0, b: w}

    def relabel(x):
        x = a if x == b else x
        return x - 1 if x > b else x

    out = []
    for j, (u, v, ww) in enumerate(edges):
        if j == i:
            continue
        nw = ww + off.get(u, 0) - off.get(v, 0)
        out.append((relabel(u), relabel(v), nw))
    return n - 1, out


class AnnularEvaluator:
    """Deletion-contraction with windings; ``rng`` picks random pivots and disables shortcuts."""

    def __init__(self, rng: random.Random | None = None):
        self.rng = rng
        self._cache: dict = {}

    def evaluate(self, mg: AbstractMultigraph) -> AnnularElement:
        value = AnnularElement.constant(1)
        for w in mg.circles:
            value = value * _circle_value(w)
        return value * self._graph(mg.n_vertices, list(mg.edges))

    def _graph(self, n, edges) -> AnnularElement:
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v, _ in edges:
            parent[find(u)] = find(v)
        groups: dict[int, list[int]] = {}
        for v in range(n):
            groups.setdefault(find(v), []).append(v)
        value = AnnularElement.constant(1)
        for root, verts in sorted(groups.items()):
            index = {v: i for i, v in enumerate(verts)}
            sub = [(index[u], index[v], w) for u, v, w in edges if find(u) == root]
            part = self._component(len(verts), sub)
            if part.is_zero():
                return part
            value = value * part
        return value

    def _component(self, n, edges) -> AnnularElement:
        if n == 1:
            return _bouquet_value([w for _, _, w in edges])
        key = (n, tuple(sorted(edges)))
        if self.rng is None and key in self._cache:
            return self._cache[key]
        value = self._split(n, edges)
        if self.rng is None:
            self._cache[key] = value
        return value

    def _split(self, n, edges) -> AnnularElement:
        plain = [i for i, (u, v, _) in enumerate(edges) if u != v]
        if self.rng is not None:
            i = self.rng.choice(plain)
        else:
            deg = [0] * n
            for u, v, _ in edges:
                deg[u] += 1
                deg[v] += 1
            if min(deg) == 1:
                return AnnularElement()
            w = min(range(n), key=lambda x: (deg[x], x))
            i = next(j for j in plain if w in edges[j][:2])
            if deg[w] == 2:
                return self._graph(*contract_edge(n, edges, i))
        contracted = self._graph(*contract_edge(n, edges, i))
        deleted = self._graph(n, edges[:i] + edges[i + 1:])
        return contracted - deleted * D_INV


DEFAULT_ANNULAR = AnnularEvaluator()


def reduce_annular_graph(D: GraphDiagram, evaluator: AnnularEvaluator | None = None) -> AnnularElement:
    from .yamada import expand_crossings

    if D.ambient != ANNULUS:
        raise ValueError("reduce_annular_graph needs an annular diagram")
    ev = evaluator or DEFAULT_ANNULAR
    total = AnnularElement()
    for coeff, mg in expand_crossings(D).terms:
        total = total + ev.evaluate(mg) * coeff
    return total


# ---------------------------------------------------------------------------
# the three bouquet identities


@dataclass
class IdentityResult:
    name: str
    n: int
    lhs: AnnularElement
    rhs: AnnularElement

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    @property
    def residual(self) -> AnnularElement:
        return self.lhs - self.rhs

    def line(self) -> str:
        status = "pass" if self.passed else f"residual {self.residual}"
        return f"({self.name}) n={self.n}: {status}"


def _theta(k: int) -> GraphDiagram:
    from .corpus import theta_graph

    return theta_graph(k, ANNULUS)


def lemma33_check(n: int, theta_edges: str = "n") -> list[IdentityResult]:
    """Evaluate both sides of the theta, S and bouquet identities at n."""
    from .corpus import bouquet, s_n

    if theta_edges not in ("n", "n+1"):
        raise ValueError("theta_edges must be 'n' or 'n+1'")
    shift = 0 if theta_edges == "n" else 1
    red = reduce_annular_graph

    def theta(m):
        return red(_theta(m + shift))

    ratio = -(D * D - 1) * D_INV  # -(d^2 - 1)/d
    results = []
    if n >= 2:
        rhs = theta(n - 1) * (-D_INV) + AnnularElement.constant(ratio ** (n - 2) * CIRCLE)
        results.append(IdentityResult("i", n, theta(n), rhs))
        rhs = red(s_n(n - 1)) * (-D_INV) + red(bouquet(1)) * ratio ** (n - 2)
        results.append(IdentityResult("ii", n, red(s_n(n)), rhs))
    results.append(IdentityResult("iii", n, red(bouquet(n)), red(s_n(n)) + theta(n) * D_INV))
    return results


def as_sphere_value(x: AnnularElement) -> SkeinScalar:
    """Forget the hole: the core curve becomes a contractible circle."""
    return x.evaluate(CIRCLE)


def substitute_cable(x: AnnularElement) -> AnnularElement:
    """Apply z -> z^2 - 1."""
    z2m1 = AnnularElement({2: 1, 0: -1})
    out = AnnularElement()
    for k, c in x.coeffs.items():
        out = out + (z2m1 ** k) * c
    return out
