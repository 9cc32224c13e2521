"""The cabling map from graph diagrams to link diagrams.

Every edge becomes two parallel strands carrying one projector
f1 = (parallel) - d^-1 (turnback); every flat vertex becomes the ring
tangle joining neighbouring cables; every crossing becomes the four
crossings of two cables, the over cable staying on top.  The bracket of the
result equals the Yamada value of the graph (on the sphere), and the
annular bracket equals the annular reduction with z replaced by z^2 - 1.

Strand labels: half-edge h of the diagram has cable strands (h, 0) and
(h, 1), in counterclockwise order around the node that owns h.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import count, product
from typing import Iterator

from .diagram import ANNULUS, Crossing, GraphDiagram, Vertex, splice
from .kauffman import SMOOTHING_COEFF, bracket, bracket_annular
from .network import Network, contract
from .ring import D_POLY, AnnularElement, LaurentPoly, SkeinScalar, D_INV

PARALLEL = "parallel"
TURNBACK = "turnback"
EDGE_COEFF = {PARALLEL: SkeinScalar(1), TURNBACK: -D_INV}


@dataclass(frozen=True)
class EdgeCableTerm:
    mode: str

    @property
    def coefficient(self) -> SkeinScalar:
        return EDGE_COEFF[self.mode]


@dataclass
class FormalLinkSum:
    terms: list[tuple[SkeinScalar, GraphDiagram]]

    def __len__(self):
        return len(self.terms)

    def bracket_total(self):
        if not self.terms:
            return SkeinScalar()
        annular = self.terms[0][1].ambient == ANNULUS
        total = AnnularElement() if annular else SkeinScalar()
        for c, link in self.terms:
            total = total + (bracket_annular(link) if annular else bracket(link)) * c
        return total


@dataclass
class _Skeleton:
    crossings: list[Crossing]
    links: list[tuple[int, int, int]]
    # per edge: (h-side ports (p0, p1), k-side ports (q0, q1))
    projectors: list[tuple[tuple[int, int], tuple[int, int]]]
    free_circles: tuple[int, ...]
    ambient: str

    def projector_pairs(self, i: int, mode: str) -> tuple[tuple[int, int], tuple[int, int]]:
        (p0, p1), (q0, q1) = self.projectors[i]
        if mode == PARALLEL:
            return (p0, q1), (p1, q0)
        return (p0, p1), (q0, q1)


def _skeleton(D: GraphDiagram, copies: int = 1) -> _Skeleton:
    """Cable every edge; ``copies`` > 1 inserts that many projectors in series per edge."""
    ids = count(D.max_halfedge() + 1)
    strand = {}
    for node in D.nodes:
        for h in node.halfedges:
            strand[h] = (next(ids), next(ids))
    links: list[tuple[int, int, int]] = []
    crossings: list[Crossing] = []
    for node in D.nodes:
        if isinstance(node, Vertex):
            hs = node.halfedges
            for i in range(len(hs)):
                links.append((strand[hs[i]][1], strand[hs[(i + 1) % len(hs)]][0], 0))
            continue
        h = node.halfedges
        o = node.over
        a = [h[(o + k) % 4] for k in range(4)]  # W, S, E, N with W-E over
        # small crossings P (upper left), Q (upper right), R (lower left), S (lower right);
        # each has half-edges [W, S, E, N] and its W-E strand on top
        P, Q, R, S = ([next(ids) for _ in range(4)] for _ in range(4))
        for c in (P, Q, R, S):
            crossings.append(Crossing(tuple(c), 0))
        W, So, E, N = 0, 1, 2, 3
        links += [
            (strand[a[0]][0], P[W], 0), (P[E], Q[W], 0), (Q[E], strand[a[2]][1], 0),
            (strand[a[0]][1], R[W], 0), (R[E], S[W], 0), (S[E], strand[a[2]][0], 0),
            (strand[a[1]][0], R[So], 0), (R[N], P[So], 0), (P[N], strand[a[3]][1], 0),
            (strand[a[1]][1], S[So], 0), (S[N], Q[So], 0), (Q[N], strand[a[3]][0], 0),
        ]
    projectors = []
    for e in D.edges:
        h, k = e.pair
        left = strand[h]
        for j in range(copies):
            p = (next(ids), next(ids))
            q = (next(ids), next(ids))
            w = e.winding if j == 0 else 0
            links += [(left[0], p[0], w), (left[1], p[1], w)]
            projectors.append((p, q))
            # continuing away from h, the strand order flips
            left = (q[1], q[0])
        links += [(left[0], strand[k][1], 0), (left[1], strand[k][0], 0)]
    return _Skeleton(crossings, links, projectors, D.free_circles, D.ambient)


def _circle_terms(free_circles) -> Iterator[tuple[SkeinScalar, list[int]]]:
    """Projector expansion of cabled free circles: two parallel copies or one circle."""
    for modes in product((PARALLEL, TURNBACK), repeat=len(free_circles)):
        coeff = SkeinScalar(1)
        circles: list[int] = []
        for w, m in zip(free_circles, modes):
            coeff = coeff * EDGE_COEFF[m]
            circles += [w, w] if m == PARALLEL else [0]
        yield coeff, circles


def phi(D: GraphDiagram) -> FormalLinkSum:
    """Explicit sum of 2^(#edges + #free circles) link diagrams."""
    sk = _skeleton(D)
    node_he = [h for c in sk.crossings for h in c.halfedges]
    terms = []
    for modes in product((PARALLEL, TURNBACK), repeat=len(sk.projectors)):
        coeff = SkeinScalar(1)
        links = list(sk.links)
        for i, m in enumerate(modes):
            coeff = coeff * EDGE_COEFF[m]
            links += [(a, b, 0) for a, b in sk.projector_pairs(i, m)]
        edges, circles = splice(node_he, links)
        for c2, extra in _circle_terms(sk.free_circles):
            loops = tuple(circles) + tuple(extra)
            if D.ambient != ANNULUS:
                loops = tuple(0 for _ in loops)
            link = GraphDiagram(tuple(sk.crossings), tuple(edges), loops, D.ambient)
            terms.append((coeff * c2, link))
    return FormalLinkSum(terms)


def phi_network(D: GraphDiagram, copies: int = 1) -> tuple[Network, int]:
    """Network whose value divided by d^k (k returned) is the bracket of phi(D), free circles excluded."""
    sk = _skeleton(D, copies)
    net = Network()
    for c in sk.crossings:
        net.add_piece(c.halfedges, [(SMOOTHING_COEFF[k], c.smoothing_pairs(k)) for k in "AB"])
    # parallel weighted d, turnback -1: the total is then divided by d^#projectors
    for i, (p, q) in enumerate(sk.projectors):
        net.add_piece(p + q, [(D_POLY, sk.projector_pairs(i, PARALLEL)),
                              (LaurentPoly.constant(-1), sk.projector_pairs(i, TURNBACK))])
    ports = [h for piece in net.pieces for h in piece.ports]
    wires, circles = splice(ports, sk.links)
    for e in wires:
        net.add_wire(*e.pair, e.winding)
    net.loops.extend(circles)
    return net, len(sk.projectors)


def _circle_factor(free_circles, annular: bool) -> AnnularElement:
    total = AnnularElement.constant(1)
    for w in free_circles:
        if annular and w:
            total = total * AnnularElement({2: 1, 0: -1})
        else:
            total = total * SkeinScalar(D_POLY * D_POLY - 1)
    return total


def phi_bracket(D: GraphDiagram, copies: int = 1) -> SkeinScalar:
    if D.ambient == ANNULUS:
        raise ValueError("annular diagram: use phi_bracket_annular")
    net, k = phi_network(D, copies)
    value = SkeinScalar(contract(net).get(0, LaurentPoly()), k)
    return value * _circle_factor(D.free_circles, False).coeff(0)


def phi_bracket_annular(D: GraphDiagram, copies: int = 1) -> AnnularElement:
    if D.ambient != ANNULUS:
        raise ValueError("phi_bracket_annular needs an annular diagram")
    net, k = phi_network(D, copies)
    raw = contract(net, annular=True)
    value = AnnularElement({deg: SkeinScalar(c, k) for deg, c in raw.items()})
    return value * _circle_factor(D.free_circles, True)


@dataclass
class CheckResult:
    passed: bool
    yamada: SkeinScalar
    cabled: SkeinScalar

    def __bool__(self):
        return self.passed

    def details(self) -> str:
        if self.passed:
            return f"pass: {self.yamada}"
        return f"fail: yamada = {self.yamada}, cabled bracket = {self.cabled}, difference = {self.yamada - self.cabled}"


def phi_check(D: GraphDiagram) -> CheckResult:
    from .yamada import yamada

    y = yamada(D)
    c = phi_bracket(D)
    return CheckResult(y == c, y, c)
