"""The Yamada invariant of sphere diagrams.

Each crossing is expanded as

    Y(X) = A^4 Y(A-smoothing) + A^-4 Y(B-smoothing) - d Y(flat 4-valent vertex)

and the crossing-free graphs that remain are evaluated by deletion-contraction
(see :mod:`yamada_skein.multigraph`).  An isolated vertex is worth ``d``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .diagram import ANNULUS, Crossing, GraphDiagram, splice
from .multigraph import (
    D_CIRCLE,
    DEFAULT_EVALUATOR,
    AbstractMultigraph,
    PlanarEvaluator,
    canonical_form,
    dmul,
    dpow,
    simplify,
)
from .ring import D_POLY, LaurentPoly, SkeinScalar, from_d_laurent

STATE_COEFF = {
    "A": LaurentPoly.monomial(4),
    "B": LaurentPoly.monomial(-4),
    "V": -D_POLY,
}


class ConventionError(AssertionError):
    """An invariant that must hold for any correct implementation failed."""


@dataclass
class CrossingFreeSum:
    terms: list[tuple[SkeinScalar, AbstractMultigraph]]

    def __len__(self):
        return len(self.terms)


def resolve_state(D: GraphDiagram, state: dict[int, str]) -> AbstractMultigraph:
    """Crossing-free multigraph for one choice of A/B/V at every crossing node."""
    links = [(e.pair[0], e.pair[1], e.winding) for e in D.edges]
    vertex_of: dict[int, int] = {}
    n = 0
    for i, node in enumerate(D.nodes):
        if isinstance(node, Crossing) and state[i] != "V":
            for a, b in node.smoothing_pairs(state[i]):
                links.append((a, b, 0))
        else:
            for h in node.halfedges:
                vertex_of[h] = n
            n += 1
    edges, circles = splice(vertex_of, links)
    return AbstractMultigraph(
        n,
        tuple((vertex_of[e.pair[0]], vertex_of[e.pair[1]], e.winding) for e in edges),
        tuple(list(circles) + list(D.free_circles)),
    )


def expand_crossings(D: GraphDiagram, order: Sequence[int] | None = None,
                     collect: bool = True) -> CrossingFreeSum:
    """All 3^c crossing resolutions, collected by isomorphism class when ``collect``.

    On the sphere graphs are collected up to isomorphism; annular graphs keep
    their labels and windings and are collected only when literally equal.
    """
    crossings = list(D.crossings) if order is None else list(order)
    if sorted(crossings) != sorted(D.crossings):
        raise ValueError("order must be a permutation of the crossing nodes")
    acc: dict = {}
    reps: dict = {}
    raw: list = []

    def rec(k: int, state: dict, coeff: LaurentPoly):
        if k == len(crossings):
            mg = resolve_state(D, state)
            if not collect:
                raw.append((SkeinScalar(coeff), mg))
                return
            key = mg.sphere_key() if D.ambient != ANNULUS else _exact_key(mg)
            acc[key] = acc.get(key, LaurentPoly()) + coeff
            reps.setdefault(key, mg)
            return
        c = crossings[k]
        for label in "ABV":
            state[c] = label
            rec(k + 1, state, coeff * STATE_COEFF[label])
        del state[c]

    rec(0, {}, LaurentPoly.constant(1))
    if not collect:
        return CrossingFreeSum(raw)
    terms = [(SkeinScalar(c), reps[k]) for k, c in acc.items() if not c.is_zero()]
    return CrossingFreeSum(terms)


def _exact_key(mg: AbstractMultigraph) -> tuple:
    edges = tuple(sorted((min(u, v), max(u, v), w if u <= v else -w) for u, v, w in mg.edges))
    return mg.n_vertices, edges, tuple(sorted(mg.circles))


def planar_eval(M: AbstractMultigraph, evaluator: PlanarEvaluator | None = None) -> SkeinScalar:
    """Value of a crossing-free graph on the sphere (windings ignored)."""
    ev = evaluator or DEFAULT_EVALUATOR
    return from_d_laurent(ev.evaluate(M))


AUTO_CROSSING_LIMIT = 8


def yamada(D: GraphDiagram, evaluator: PlanarEvaluator | None = None,
           method: str = "relations") -> SkeinScalar:
    """Yamada value of a sphere diagram.

    ``method`` is "relations" (crossing expansion then deletion-contraction),
    "cable" (bracket of the cabled diagram, equal by construction and much
    faster on many crossings) or "auto" (relations up to
    ``AUTO_CROSSING_LIMIT`` crossings).
    """
    if D.ambient == ANNULUS:
        raise ValueError("annular diagram: use annulus module")
    if method == "auto":
        method = "relations" if len(D.crossings) <= AUTO_CROSSING_LIMIT else "cable"
    if method == "cable":
        from .cabling import phi_bracket

        return phi_bracket(D)
    if method != "relations":
        raise ValueError(f"unknown method {method!r}")
    ev = evaluator or DEFAULT_EVALUATOR
    # Resolve every crossing, strip each graph down to minimum degree 3 and
    # collect by isomorphism class; coefficients stay split as (A-part, d-part).
    acc: dict = {}
    reps: dict = {}
    for coeff, mg in expand_crossings(D, collect=False).terms:
        pairs = [(u, v) for u, v, _ in mg.edges]
        if ev.shortcuts_valid:
            reduced = simplify(mg.n_vertices, pairs)
        else:
            reduced = ({0: 1}, mg.n_vertices, pairs)
        if reduced is None:
            continue
        factor, n, edges = reduced
        factor = dmul(factor, dpow(D_CIRCLE, len(mg.circles)))
        key = canonical_form(n, edges)
        reps.setdefault(key, (n, edges))
        fkey = (key, tuple(sorted(factor.items())))
        acc[fkey] = acc.get(fkey, LaurentPoly()) + coeff.num
    by_value: dict = {}
    for (key, fkey), c in acc.items():
        if c.is_zero():
            continue
        n, edges = reps[key]
        val = dmul(dict(fkey), ev.evaluate(AbstractMultigraph(n, tuple((u, v, 0) for u, v in edges))))
        vkey = tuple(sorted(val.items()))
        if vkey:
            by_value[vkey] = by_value.get(vkey, LaurentPoly()) + c
    result = SkeinScalar()
    for vkey, c in sorted(by_value.items()):
        if not c.is_zero():
            result = result + SkeinScalar(c) * from_d_laurent(dict(vkey))
    return result


def to_original_R(D: GraphDiagram, evaluator: PlanarEvaluator | None = None,
                  method: str = "relations") -> LaurentPoly:
    """Yamada's original polynomial R(x) = (-d)^{-chi} Y at x = A^4."""
    y = yamada(D, evaluator, method)
    scaled = y * SkeinScalar(-D_POLY) ** (-D.euler_characteristic())
    if scaled.dpow:
        raise ConventionError(f"convention violation: (-d)^(-chi) Y = {scaled} is not a Laurent polynomial")
    terms = {}
    for e, c in scaled.num.items():
        if e % 4:
            raise ConventionError(f"convention violation: exponent {e} is not divisible by 4")
        terms[e // 4] = c
    return LaurentPoly(terms)
