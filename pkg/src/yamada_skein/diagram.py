"""Spatial graph diagrams as decorated combinatorial maps.

A diagram is a set of nodes (flat vertices and crossings), each listing its
half-edges in counterclockwise order, plus a perfect matching of half-edges
into edges.  Every edge carries a winding number: the signed number of times
it crosses a fixed reference ray from the hole of the annulus.  On the sphere
windings are carried along but ignored.

Crossing convention: the strand through cyclic positions ``over`` and
``over + 2`` passes over the other one.
"""
from __future__ import annotations

import json
import warnings
from collections import defaultdict
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterable, Sequence

SPHERE = "sphere"
ANNULUS = "annulus"


class DiagramError(ValueError):
    pass


class LowValencyWarning(UserWarning):
    pass


@dataclass(frozen=True)
class Vertex:
    halfedges: tuple[int, ...]


@dataclass(frozen=True)
class Crossing:
    halfedges: tuple[int, int, int, int]
    over: int = 0  # 0: positions (0, 2) over; 1: positions (1, 3) over

    def mirrored(self) -> "Crossing":
        return Crossing(self.halfedges, 1 - self.over)

    def smoothing_pairs(self, kind: str) -> tuple[tuple[int, int], tuple[int, int]]:
        """Half-edge pairs joined by the A- or B-smoothing.

        The A-smoothing joins the regions swept when the over strand turns
        counterclockwise, which pairs each over half-edge with its clockwise
        neighbour.
        """
        h = self.halfedges
        o = self.over
        if kind == "A":
            return (h[o], h[(o - 1) % 4]), (h[(o + 1) % 4], h[(o + 2) % 4])
        if kind == "B":
            return (h[o], h[(o + 1) % 4]), (h[(o + 2) % 4], h[(o + 3) % 4])
        raise ValueError(kind)


Node = Vertex | Crossing


@dataclass(frozen=True)
class Edge:
    pair: tuple[int, int]
    winding: int = 0  # accumulated when travelling pair[0] -> pair[1]


def splice(node_halfedges: Iterable[int], links: Iterable[tuple[int, int, int]]):
    """Join a collection of links into edges and closed curves.

    Ids listed in ``node_halfedges`` must occur in exactly one link; every
    other id is a pass-through port and must occur in exactly two.  Returns
    ``(edges, circles)`` where edges are ``Edge`` objects between node
    half-edges and circles are the absolute windings of port-only cycles.
    """
    ends = set(node_halfedges)
    adj: dict[int, list[tuple[int, int, int]]] = defaultdict(list)
    for idx, (a, b, w) in enumerate(links):
        adj[a].append((idx, b, w))
        adj[b].append((idx, a, -w))
    used: set[int] = set()
    edges: list[Edge] = []
    for start in sorted(ends):
        if len(adj[start]) != 1:
            raise DiagramError(f"half-edge {start} has {len(adj[start])} connections")
        if adj[start][0][0] in used:
            continue
        cur, total, last = start, 0, None
        while True:
            options = [t for t in adj[cur] if t[0] != last]
            if cur != start and cur in ends:
                break
            if len(options) != 1:
                raise DiagramError(f"port {cur} is not a pass-through")
            idx, nxt, w = options[0]
            used.add(idx)
            total += w
            last, cur = idx, nxt
        edges.append(Edge((start, cur), total))
    circles: list[int] = []
    for port in sorted(adj):
        if port in ends:
            continue
        free = [t for t in adj[port] if t[0] not in used]
        if not free:
            continue
        if len(adj[port]) != 2:
            raise DiagramError(f"port {port} has {len(adj[port])} connections")
        cur, total, last = port, 0, None
        while True:
            idx, nxt, w = next(t for t in adj[cur] if t[0] != last and t[0] not in used)
            used.add(idx)
            total += w
            last, cur = idx, nxt
            if cur == port:
                break
        circles.append(abs(total))
    return edges, circles


@dataclass(frozen=True)
class GraphDiagram:
    nodes: tuple[Node, ...] = ()
    edges: tuple[Edge, ...] = ()
    free_circles: tuple[int, ...] = ()
    ambient: str = SPHERE

    def __post_init__(self):
        self._validate()

    # -- structure -----------------------------------------------------------
    def _validate(self):
        if self.ambient not in (SPHERE, ANNULUS):
            raise DiagramError(f"unknown ambient {self.ambient!r}")
        slot: dict[int, tuple[int, int]] = {}
        for i, node in enumerate(self.nodes):
            if isinstance(node, Crossing):
                if len(node.halfedges) != 4:
                    raise DiagramError(f"crossing arity: node {i} has {len(node.halfedges)} half-edges")
                if node.over not in (0, 1):
                    raise DiagramError(f"crossing {i}: over must be [0,2] or [1,3]")
            elif not node.halfedges:
                raise DiagramError(f"vertex {i} has no half-edges")
            for j, h in enumerate(node.halfedges):
                if h in slot:
                    raise DiagramError(f"half-edge {h} appears in nodes {slot[h][0]} and {i}")
                slot[h] = (i, j)
        seen: set[int] = set()
        for e in self.edges:
            for h in e.pair:
                if h not in slot:
                    raise DiagramError(f"half-edge {h} is not attached to any node")
                if h in seen:
                    raise DiagramError(f"half-edge {h} is used by two edges")
                seen.add(h)
        missing = set(slot) - seen
        if missing:
            raise DiagramError(f"half-edge {min(missing)} is not matched by an edge")
        if self.ambient == ANNULUS:
            for w in self.free_circles:
                if abs(w) > 1:
                    raise DiagramError(f"free circle with winding {w} is not embedded")
        if self.genus() != 0:
            raise DiagramError("non-planar rotation system")

    @cached_property
    def slot_of(self) -> dict[int, tuple[int, int]]:
        return {h: (i, j) for i, n in enumerate(self.nodes) for j, h in enumerate(n.halfedges)}

    @cached_property
    def partner(self) -> dict[int, tuple[int, int]]:
        """half-edge -> (other half-edge, winding travelling away from it)."""
        out = {}
        for e in self.edges:
            a, b = e.pair
            out[a] = (b, e.winding)
            out[b] = (a, -e.winding)
        return out

    def genus(self) -> int:
        """Sum of genera of the connected components of the underlying map."""
        slot = {h: (i, j) for i, n in enumerate(self.nodes) for j, h in enumerate(n.halfedges)}
        partner = {}
        for e in self.edges:
            a, b = e.pair
            partner[a], partner[b] = b, a
        if set(partner) != set(slot):
            return 0  # structural errors are reported elsewhere
        parent = list(range(len(self.nodes)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.edges:
            a, b = (find(slot[h][0]) for h in e.pair)
            parent[a] = b
        faces_by_comp: dict[int, int] = defaultdict(int)
        seen: set[int] = set()
        for h in slot:
            if h in seen:
                continue
            faces_by_comp[find(slot[h][0])] += 1
            cur = h
            while cur not in seen:
                seen.add(cur)
                t = partner[cur]
                i, j = slot[t]
                hs = self.nodes[i].halfedges
                cur = hs[(j + 1) % len(hs)]
        total = 0
        comps: dict[int, list[int]] = defaultdict(list)
        for i in range(len(self.nodes)):
            comps[find(i)].append(i)
        for root, members in comps.items():
            v = len(members)
            e = sum(len(self.nodes[i].halfedges) for i in members) // 2
            chi = v - e + faces_by_comp[root]
            total += (2 - chi) // 2
        return total

    @property
    def crossings(self) -> list[int]:
        return [i for i, n in enumerate(self.nodes) if isinstance(n, Crossing)]

    @property
    def vertices(self) -> list[int]:
        return [i for i, n in enumerate(self.nodes) if isinstance(n, Vertex)]

    def max_halfedge(self) -> int:
        return max((h for n in self.nodes for h in n.halfedges), default=-1)

    def is_link(self) -> bool:
        return not self.vertices

    def low_valency_vertices(self) -> list[int]:
        return [i for i in self.vertices if len(self.nodes[i].halfedges) < 3]

    # -- transformations -------------------------------------------------------
    def mirror(self) -> "GraphDiagram":
        nodes = tuple(n.mirrored() if isinstance(n, Crossing) else n for n in self.nodes)
        return replace(self, nodes=nodes)

    def as_sphere(self) -> "GraphDiagram":
        return GraphDiagram(self.nodes, self.edges, tuple(0 for _ in self.free_circles), SPHERE)

    def as_annulus(self) -> "GraphDiagram":
        return replace(self, ambient=ANNULUS)

    def relabel(self, offset: int) -> "GraphDiagram":
        nodes = tuple(
            Crossing(tuple(h + offset for h in n.halfedges), n.over) if isinstance(n, Crossing)
            else Vertex(tuple(h + offset for h in n.halfedges))
            for n in self.nodes
        )
        edges = tuple(Edge((e.pair[0] + offset, e.pair[1] + offset), e.winding) for e in self.edges)
        return GraphDiagram(nodes, edges, self.free_circles, self.ambient)

    def disjoint_union(self, other: "GraphDiagram") -> "GraphDiagram":
        """Side by side on the sphere; radially nested (the stacking product) in the annulus."""
        if self.ambient != other.ambient:
            raise DiagramError("cannot combine sphere and annulus diagrams")
        o = other.relabel(self.max_halfedge() + 1)
        return GraphDiagram(self.nodes + o.nodes, self.edges + o.edges,
                            self.free_circles + o.free_circles, self.ambient)

    def euler_characteristic(self) -> int:
        """Flat vertices minus graph edges; crossings and free circles contribute 0."""
        return len(self.vertices) - len(self.graph_edges())

    def graph_edges(self) -> list[tuple[int, int, int]]:
        """Edges of the underlying graph as (vertex node, vertex node, winding).

        Strands pass straight through crossings.  Closed strands that never
        meet a vertex are dropped.
        """
        slot, partner = self.slot_of, self.partner
        links = []
        for e in self.edges:
            links.append((e.pair[0], e.pair[1], e.winding))
        for i in self.crossings:
            h = self.nodes[i].halfedges
            links.append((h[0], h[2], 0))
            links.append((h[1], h[3], 0))
        vertex_hes = [h for i in self.vertices for h in self.nodes[i].halfedges]
        edges, _ = splice(vertex_hes, links)
        return [(slot[e.pair[0]][0], slot[e.pair[1]][0], e.winding) for e in edges]

    def underlying_graph(self) -> tuple[list[int], list[tuple[int, int]]]:
        """Abstract graph: vertex node ids and edge list (embedding forgotten)."""
        return self.vertices, [(u, v) for u, v, _ in self.graph_edges()]

    # -- codec -----------------------------------------------------------------
    def to_dict(self) -> dict:
        nodes = []
        for n in self.nodes:
            if isinstance(n, Crossing):
                nodes.append({"type": "crossing", "halfedges": list(n.halfedges),
                              "over": [n.over, n.over + 2]})
            else:
                nodes.append({"type": "vertex", "halfedges": list(n.halfedges)})
        return {
            "ambient": self.ambient,
            "nodes": nodes,
            "edges": [{"pair": list(e.pair), "winding": e.winding} for e in self.edges],
            "free_circles": list(self.free_circles),
        }

    def to_json(self, indent: int | None = None) -> str:
        seps = (",", ":") if indent is None else (",", ": ")
        return json.dumps(self.to_dict(), indent=indent, separators=seps)

    @classmethod
    def from_dict(cls, data: dict, *, warn: bool = True) -> "GraphDiagram":
        try:
            nodes = tuple(_node_from_dict(i, n) for i, n in enumerate(data["nodes"]))
            edges = []
            for e in data["edges"]:
                pair = tuple(int(h) for h in e["pair"])
                if len(pair) != 2:
                    raise DiagramError(f"edge {e!r} must pair exactly two half-edges")
                edges.append(Edge(pair, int(e.get("winding", 0))))
            d = cls(nodes, tuple(edges), tuple(int(w) for w in data.get("free_circles", [])),
                    data.get("ambient", SPHERE))
        except (KeyError, TypeError) as exc:
            raise DiagramError(f"malformed diagram: {exc}") from exc
        if warn and d.low_valency_vertices():
            warnings.warn(f"vertices {d.low_valency_vertices()} have valency < 3", LowValencyWarning)
        return d

    @classmethod
    def from_json(cls, text: str, *, warn: bool = True) -> "GraphDiagram":
        return cls.from_dict(json.loads(text), warn=warn)


def _node_from_dict(i: int, n: dict) -> Node:
    hes = tuple(int(h) for h in n["halfedges"])
    if n["type"] == "vertex":
        return Vertex(hes)
    if n["type"] == "crossing":
        if len(hes) != 4:
            raise DiagramError(f"crossing arity: node {i} has {len(hes)} half-edges")
        over = list(n.get("over", [0, 2]))
        if over not in ([0, 2], [1, 3]):
            raise DiagramError(f"crossing {i}: over must be [0,2] or [1,3]")
        return Crossing(hes, over[0])
    raise DiagramError(f"node {i}: unknown type {n['type']!r}")


def load(path) -> GraphDiagram:
    with open(path) as fh:
        data = json.load(fh)
    if "boundary" in data:
        raise DiagramError(f"{path} is a sector tangle, not a closed diagram")
    return GraphDiagram.from_dict(data)


def parse(text: str) -> GraphDiagram:
    return GraphDiagram.from_json(text)


def serialize(d: GraphDiagram) -> str:
    return d.to_json()


def mirror(d: GraphDiagram) -> GraphDiagram:
    return d.mirror()


def euler_characteristic(d: GraphDiagram) -> int:
    return d.euler_characteristic()


# ---------------------------------------------------------------------------
# sector tangles and rotationally symmetric closures


@dataclass(frozen=True)
class SectorTangle:
    """A diagram in a wedge with n strands entering on the left ray and n leaving on the right.

    ``left`` and ``right`` are port ids: each occurs in exactly one edge and
    in no node.  Ports are ordered by distance from the rotation axis.
    """

    nodes: tuple[Node, ...]
    edges: tuple[Edge, ...]
    left: tuple[int, ...]
    right: tuple[int, ...]
    free_circles: tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.left) != len(self.right):
            raise DiagramError("sector tangle needs as many left ports as right ports")
        ports = set(self.left) | set(self.right)
        if len(ports) != 2 * len(self.left):
            raise DiagramError("repeated boundary port")
        node_hes = [h for n in self.nodes for h in n.halfedges]
        if ports & set(node_hes):
            raise DiagramError("boundary ports must not be node half-edges")
        count: dict[int, int] = defaultdict(int)
        for e in self.edges:
            for h in e.pair:
                count[h] += 1
        for h in list(node_hes) + list(ports):
            if count.get(h, 0) != 1:
                raise DiagramError(f"half-edge {h} must be matched exactly once")
        for n in self.nodes:
            if isinstance(n, Crossing) and len(n.halfedges) != 4:
                raise DiagramError("crossing arity")

    @property
    def arity(self) -> int:
        return len(self.left)

    def to_dict(self) -> dict:
        nodes = []
        for n in self.nodes:
            if isinstance(n, Crossing):
                nodes.append({"type": "crossing", "halfedges": list(n.halfedges), "over": [n.over, n.over + 2]})
            else:
                nodes.append({"type": "vertex", "halfedges": list(n.halfedges)})
        return {
            "ambient": ANNULUS,
            "nodes": nodes,
            "edges": [{"pair": list(e.pair), "winding": e.winding} for e in self.edges],
            "free_circles": list(self.free_circles),
            "boundary": {"left": list(self.left), "right": list(self.right)},
        }

    def to_json(self, indent: int | None = None) -> str:
        seps = (",", ":") if indent is None else (",", ": ")
        return json.dumps(self.to_dict(), indent=indent, separators=seps)

    @classmethod
    def from_dict(cls, data: dict) -> "SectorTangle":
        try:
            nodes = tuple(_node_from_dict(i, n) for i, n in enumerate(data["nodes"]))
            edges = tuple(Edge(tuple(int(h) for h in e["pair"]), int(e.get("winding", 0)))
                          for e in data["edges"])
            b = data["boundary"]
            return cls(nodes, edges, tuple(b["left"]), tuple(b["right"]),
                       tuple(int(w) for w in data.get("free_circles", [])))
        except (KeyError, TypeError) as exc:
            raise DiagramError(f"malformed sector tangle: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> "SectorTangle":
        return cls.from_dict(json.loads(text))


def load_tangle(path) -> SectorTangle:
    with open(path) as fh:
        return SectorTangle.from_dict(json.load(fh))


def close_periodic(t: SectorTangle, p: int) -> GraphDiagram:
    """Glue p copies of ``t`` in a cycle: R_i of copy k to L_i of copy k+1.

    Only the gluing between the last and the first copy crosses the reference
    ray, contributing +1 when travelling from R to L.
    """
    if p < 1:
        raise ValueError("need at least one copy")
    ids = [h for n in t.nodes for h in n.halfedges] + list(t.left) + list(t.right)
    ids += [h for e in t.edges for h in e.pair]
    stride = max(ids, default=-1) + 1
    nodes: list[Node] = []
    links: list[tuple[int, int, int]] = []
    for k in range(p):
        off = k * stride
        for n in t.nodes:
            hs = tuple(h + off for h in n.halfedges)
            nodes.append(Crossing(hs, n.over) if isinstance(n, Crossing) else Vertex(hs))
        for e in t.edges:
            links.append((e.pair[0] + off, e.pair[1] + off, e.winding))
        nxt = ((k + 1) % p) * stride
        seam = 1 if k == p - 1 else 0
        for r, l in zip(t.right, t.left):
            links.append((r + off, l + nxt, seam))
    node_hes = [h for n in nodes for h in n.halfedges]
    edges, circles = splice(node_hes, links)
    circles = circles + list(t.free_circles) * p
    return GraphDiagram(tuple(nodes), tuple(edges), tuple(circles), ANNULUS)


def close_quotient(t: SectorTangle) -> GraphDiagram:
    """Glue one copy of ``t`` to itself (the quotient diagram in the solid torus)."""
    return close_periodic(t, 1)


# ---------------------------------------------------------------------------
# builders from straight-line drawings


def _seg_intersection(p1, p2, q1, q2):
    (x1, y1), (x2, y2), (x3, y3), (x4, y4) = p1, p2, q1, q2
    den = (x2 - x1) * (y4 - y3) - (y2 - y1) * (x4 - x3)
    if abs(den) < 1e-12:
        return None
    t = ((x3 - x1) * (y4 - y3) - (y3 - y1) * (x4 - x3)) / den
    u = ((x3 - x1) * (y2 - y1) - (y3 - y1) * (x2 - x1)) / den
    eps = 1e-9
    if eps < t < 1 - eps and eps < u < 1 - eps:
        return t, u, (x1 + t * (x2 - x1), y1 + t * (y2 - y1))
    return None


def diagram_from_drawing(points: Sequence[tuple[float, float]],
                         edges: Sequence[tuple[int, int]],
                         over: Sequence[int] | None = None,
                         hole: tuple[float, float] | None = None) -> GraphDiagram:
    """Build a diagram from a straight-line drawing of a graph.

    ``over[k]`` selects the over strand at the k-th crossing (crossings are
    numbered in order of discovery: by first edge index, then position along
    it): 0 means the lower-numbered edge is on top.  With ``hole`` given the
    result lives in the annulus around that point and windings are counted
    against a ray from it.
    """
    import math

    crossings = []  # (edge i, t_i, edge j, t_j, point)
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            a, b = edges[i]
            c, dd = edges[j]
            if len({a, b, c, dd}) < 4:
                continue
            hit = _seg_intersection(points[a], points[b], points[c], points[dd])
            if hit:
                crossings.append((i, hit[0], j, hit[1], hit[2]))
    over = list(over) if over is not None else [0] * len(crossings)
    if len(over) != len(crossings):
        raise DiagramError(f"drawing has {len(crossings)} crossings, got {len(over)} over flags")

    counter = iter(range(10 ** 9))
    # per edge: list of (t, kind, payload) stops; endpoints are vertices
    stops: dict[int, list] = defaultdict(list)
    for k, (i, ti, j, tj, _) in enumerate(crossings):
        stops[i].append((ti, k))
        stops[j].append((tj, k))
    vertex_slots: dict[int, list[tuple[float, int]]] = defaultdict(list)
    crossing_slots: dict[int, list[tuple[float, int, int]]] = defaultdict(list)  # angle, he, edge
    out_edges = []

    def angle(frm, to):
        return math.atan2(to[1] - frm[1], to[0] - frm[0])

    def winding_of(frm, to):
        if hole is None:
            return 0
        # reference ray from the hole along a slightly tilted +x direction
        hx, hy = hole
        theta = 0.1234
        dx, dy = math.cos(theta), math.sin(theta)
        hit = _seg_intersection(frm, to, (hx, hy), (hx + 1e6 * dx, hy + 1e6 * dy))
        if not hit:
            return 0
        cross = (to[0] - frm[0]) * dy - (to[1] - frm[1]) * dx
        return 1 if cross < 0 else -1

    for ei, (a, b) in enumerate(edges):
        pa, pb = points[a], points[b]
        seq = [("v", a, pa)] + [("c", k, crossings[k][4]) for _, k in sorted(stops[ei])] + [("v", b, pb)]
        for s in range(len(seq) - 1):
            (k0, id0, x0), (k1, id1, x1) = seq[s], seq[s + 1]
            h0, h1 = next(counter), next(counter)
            for kind, nid, pos, h, tgt in ((k0, id0, x0, h0, x1), (k1, id1, x1, h1, x0)):
                ang = angle(pos, tgt)
                if kind == "v":
                    vertex_slots[nid].append((ang, h))
                else:
                    crossing_slots[nid].append((ang, h, ei))
            out_edges.append(Edge((h0, h1), winding_of(x0, x1)))
    nodes: list[Node] = []
    for v in range(len(points)):
        if vertex_slots[v]:
            nodes.append(Vertex(tuple(h for _, h in sorted(vertex_slots[v]))))
    for k, (i, _, j, _, _) in enumerate(crossings):
        slots = sorted(crossing_slots[k])
        hes = tuple(h for _, h, _ in slots)
        top_edge = i if over[k] == 0 else j
        first = next(idx for idx, (_, _, e) in enumerate(slots) if e == top_edge)
        nodes.append(Crossing(hes, first % 2))
    amb = ANNULUS if hole is not None else SPHERE
    return GraphDiagram(tuple(nodes), tuple(out_edges), (), amb)
