"""Contraction of planar strand networks into Kauffman-bracket values.

A network is a set of *pieces* joined by *wires*.  A piece owns some ports
and offers a list of alternatives; each alternative is a coefficient and a
perfect matching of the piece's ports.  Wires join ports of (possibly the
same) pieces and carry a winding number.  Choosing one alternative per
piece turns the network into disjoint closed curves; the value is the sum
over all choices of the product of coefficients times ``d`` per curve with
winding 0 and ``z`` per curve with winding +-1.

Pieces are absorbed one at a time.  The running state records only the
paths created so far (pairs of ports still to be absorbed, plus a winding),
so equal partial connectivities from different choices are merged.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Sequence

from .ring import D_POLY, LaurentPoly


class WindingError(ValueError):
    pass


@dataclass(frozen=True)
class Piece:
    ports: tuple[int, ...]
    alternatives: tuple[tuple[LaurentPoly, tuple[tuple[int, int], ...]], ...]


@dataclass
class Network:
    pieces: list[Piece] = field(default_factory=list)
    wires: list[tuple[int, int, int]] = field(default_factory=list)
    # closed curves that touch no piece, by winding
    loops: list[int] = field(default_factory=list)

    def add_piece(self, ports: Sequence[int], alternatives) -> None:
        self.pieces.append(Piece(tuple(ports), tuple((c, tuple(m)) for c, m in alternatives)))

    def add_wire(self, a: int, b: int, winding: int = 0) -> None:
        self.wires.append((a, b, winding))


ZPoly = dict  # {z-degree: LaurentPoly}


def _loop_factor(w: int, annular: bool) -> tuple[int, LaurentPoly]:
    """(z-degree, coefficient) contributed by a closed curve of winding w."""
    if not annular or w == 0:
        return 0, D_POLY
    if abs(w) == 1:
        return 1, LaurentPoly.constant(1)
    raise WindingError(f"non-embedded winding {w} on a closed curve")


def _zmul_factor(value: ZPoly, deg: int, c: LaurentPoly) -> ZPoly:
    return {k + deg: v * c for k, v in value.items()}


def _zmul(a: ZPoly, b: ZPoly) -> ZPoly:
    out: dict[int, LaurentPoly] = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, LaurentPoly()) + x * y
    return {k: v for k, v in out.items() if not v.is_zero()}


def _zadd_into(acc: dict, key, value: ZPoly) -> None:
    cur = acc.get(key)
    if cur is None:
        acc[key] = dict(value)
        return
    for k, v in value.items():
        s = cur.get(k, LaurentPoly()) + v
        if s.is_zero():
            cur.pop(k, None)
        else:
            cur[k] = s


def _order(net: Network, owner: dict[int, int], partner: dict[int, int]) -> list[int]:
    """Greedy absorption order keeping the open frontier small."""
    n = len(net.pieces)
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for i, piece in enumerate(net.pieces):
        for h in piece.ports:
            nbrs[i].append(owner[partner[h]])
    done = [False] * n
    order: list[int] = []
    links_to_done = [0] * n
    for _ in range(n):
        best = max(
            (i for i in range(n) if not done[i]),
            key=lambda i: (links_to_done[i] - (len(net.pieces[i].ports) - links_to_done[i]), -i),
        )
        done[best] = True
        order.append(best)
        for j in nbrs[best]:
            links_to_done[j] += 1
    return order


def contract(net: Network, annular: bool = False, order: Sequence[int] | None = None) -> ZPoly:
    """Value of the network as ``{z-degree: LaurentPoly in A}`` (degree 0 only on the sphere)."""
    partner: dict[int, int] = {}
    wire_w: dict[int, int] = {}
    for a, b, w in net.wires:
        if a in partner or b in partner:
            raise ValueError(f"port used twice in wires: {a} or {b}")
        if a == b:
            raise ValueError("wire joins a port to itself")
        partner[a], partner[b] = b, a
        wire_w[a], wire_w[b] = w, -w
    owner: dict[int, int] = {}
    for i, piece in enumerate(net.pieces):
        for h in piece.ports:
            if h in owner:
                raise ValueError(f"port {h} belongs to two pieces")
            owner[h] = i
    if set(owner) != set(partner):
        raise ValueError("every port must lie on exactly one piece and one wire")

    base: ZPoly = {0: LaurentPoly.constant(1)}
    for w in net.loops:
        base = _zmul_factor(base, *_loop_factor(w if annular else 0, annular))

    order = list(order) if order is not None else _order(net, owner, partner)
    # state: tuple of sorted paths (a, b, w), a < b, whose ends are unabsorbed ports
    states: dict[tuple, ZPoly] = {(): base}
    for idx in order:
        piece = net.pieces[idx]
        new_states: dict[tuple, ZPoly] = {}
        for state, value in states.items():
            ends: dict[int, tuple[int, int]] = {}
            for a, b, w in state:
                ends[a] = (b, w)
                ends[b] = (a, -w)
            for coeff, matching in piece.alternatives:
                if coeff.is_zero():
                    continue
                cur = dict(ends)
                removed: set[int] = set()
                zdeg, factor = 0, coeff
                for x, y in matching:
                    # path arriving at x: other end ox, winding from ox to x
                    ox, wx = _path_at(x, cur, partner, wire_w)
                    oy, wy = _path_at(y, cur, partner, wire_w)
                    removed.update((x, y))
                    if ox == y:
                        # x and y already on one path: it closes up
                        k, c = _loop_factor(-wx if annular else 0, annular)
                        zdeg += k
                        factor = factor * c
                        for e in (x, y):
                            cur.pop(e, None)
                        continue
                    for e in (x, y):
                        cur.pop(e, None)
                    # new path ox -> x -> y -> oy
                    w = -wx + wy if annular else 0
                    # _path_at gives winding from x to ox; flip to ox -> x
                    cur[ox] = (oy, w)
                    cur[oy] = (ox, -w)
                paths = set()
                for a, (b, w) in cur.items():
                    if a in removed or b in removed:
                        continue
                    paths.add((a, b, w) if a < b else (b, a, -w))
                key = tuple(sorted(paths))
                _zadd_into(new_states, key, _zmul_factor(value, zdeg, factor))
        states = {k: v for k, v in new_states.items() if v}
    total: ZPoly = {}
    for key, value in states.items():
        if key:
            raise AssertionError("open paths left after absorbing every piece")
        _zadd_into(total, (), value)
    return total.get((), {})


def _path_at(x: int, cur: dict, partner: dict, wire_w: dict) -> tuple[int, int]:
    """Other end of the path through port x, with the winding from x to it."""
    if x in cur:
        return cur[x]
    return partner[x], wire_w[x]


def sphere_value(net: Network, order: Sequence[int] | None = None) -> LaurentPoly:
    return contract(net, False, order).get(0, LaurentPoly())
