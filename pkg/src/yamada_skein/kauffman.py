"""Kauffman bracket with <empty> = 1 and a factor d per circle.

On the sphere the value lies in Z[A^+-1]; in the annulus each essential
circle contributes the core variable z instead of d.
"""
from __future__ import annotations

from itertools import product

from .diagram import ANNULUS, Crossing, DiagramError, GraphDiagram, splice
from .network import Network, contract
from .ring import D_POLY, AnnularElement, LaurentPoly, SkeinScalar

SMOOTHING_COEFF = {"A": LaurentPoly.monomial(1), "B": LaurentPoly.monomial(-1)}


def _check_link(L: GraphDiagram) -> None:
    if L.vertices:
        raise DiagramError("bracket needs a link diagram: flat vertex present")


def link_network(L: GraphDiagram) -> Network:
    _check_link(L)
    net = Network()
    for node in L.nodes:
        assert isinstance(node, Crossing)
        net.add_piece(node.halfedges, [(SMOOTHING_COEFF[k], node.smoothing_pairs(k)) for k in "AB"])
    for e in L.edges:
        net.add_wire(*e.pair, e.winding)
    net.loops.extend(L.free_circles)
    return net


def bracket(L: GraphDiagram) -> SkeinScalar:
    if L.ambient == ANNULUS:
        raise ValueError("annular diagram: use bracket_annular")
    return SkeinScalar(contract(link_network(L), annular=False).get(0, LaurentPoly()))


def bracket_annular(L: GraphDiagram) -> AnnularElement:
    if L.ambient != ANNULUS:
        raise ValueError("bracket_annular needs an annular diagram")
    return AnnularElement(contract(link_network(L), annular=True))


def state_sum(L: GraphDiagram) -> SkeinScalar | AnnularElement:
    """Plain 2^c state sum; exponential, kept as an independent check."""
    _check_link(L)
    annular = L.ambient == ANNULUS
    crossings = [n for n in L.nodes if isinstance(n, Crossing)]
    total: dict[int, LaurentPoly] = {}
    for choice in product("AB", repeat=len(crossings)):
        coeff = LaurentPoly.constant(1)
        links = [(e.pair[0], e.pair[1], e.winding) for e in L.edges]
        for node, k in zip(crossings, choice):
            coeff = coeff * SMOOTHING_COEFF[k]
            links.extend((a, b, 0) for a, b in node.smoothing_pairs(k))
        _, circles = splice((), links)
        zdeg = 0
        for w in list(circles) + [abs(w) for w in L.free_circles]:
            if annular and w == 1:
                zdeg += 1
            elif annular and w > 1:
                raise ValueError(f"non-embedded winding {w}")
            else:
                coeff = coeff * D_POLY
        total[zdeg] = total.get(zdeg, LaurentPoly()) + coeff
    if annular:
        return AnnularElement(total)
    return SkeinScalar(total.get(0, LaurentPoly()))
