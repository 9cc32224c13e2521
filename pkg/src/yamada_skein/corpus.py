"""Constructors for the standard diagram families and for random test diagrams.

Most builders go through :func:`tangle_from_word`, which stacks elementary
slices on ``n`` parallel strands inside a wedge.  Coordinates inside a slice:
x runs left to right (the gluing direction), y runs up with the strand index.

Slice codes
    ``("X", i, s)``  crossing of strands i, i+1; s=+1 puts the strand rising
                     from i to i+1 on top
    ``("V", i)``     4-valent flat vertex joining strands i, i+1
    ``("H", i)``     strands i, i+1 merge into a trivalent vertex, one edge,
                     split again
    ``("P", i)``     like ``H`` but with three parallel edges (two 5-valent vertices)
    ``("L", i)``     4-valent vertex on strand i carrying a small loop
    ``("K", i, s)``  curl on strand i (a crossing with one kink loop)
"""
from __future__ import annotations

import math
import random
from itertools import count
from pathlib import Path
from typing import Sequence

from .diagram import (
    ANNULUS,
    SPHERE,
    Crossing,
    DiagramError,
    Edge,
    GraphDiagram,
    SectorTangle,
    Vertex,
    close_quotient,
    diagram_from_drawing,
    splice,
)

CORPUS_DIR = Path(__file__).with_name("data")

Slice = tuple


def tangle_from_word(n: int, word: Sequence[Slice]) -> SectorTangle:
    ids = count()
    left = tuple(next(ids) for _ in range(n))
    cur = list(left)
    nodes = []
    edges = []

    def attach(i, h):
        edges.append(Edge((cur[i], h), 0))

    for piece in word:
        kind, i = piece[0], piece[1]
        if kind in ("X", "V"):
            if not 0 <= i < n - 1:
                raise DiagramError(f"slice {piece} out of range for {n} strands")
            sw, se, ne, nw = (next(ids) for _ in range(4))
            attach(i, sw)
            attach(i + 1, nw)
            if kind == "X":
                nodes.append(Crossing((sw, se, ne, nw), 0 if piece[2] > 0 else 1))
            else:
                nodes.append(Vertex((sw, se, ne, nw)))
            cur[i], cur[i + 1] = se, ne
        elif kind in ("H", "P"):
            if not 0 <= i < n - 1:
                raise DiagramError(f"slice {piece} out of range for {n} strands")
            k = 1 if kind == "H" else 3
            sw, nw, se, ne = (next(ids) for _ in range(4))
            ul = [next(ids) for _ in range(k)]  # at u, bottom to top
            vl = [next(ids) for _ in range(k)]
            attach(i, sw)
            attach(i + 1, nw)
            nodes.append(Vertex((sw, *ul, nw)))
            nodes.append(Vertex((*reversed(vl), se, ne)))
            for a, b in zip(ul, vl):
                edges.append(Edge((a, b), 0))
            cur[i], cur[i + 1] = se, ne
        elif kind == "L":
            w, l1, l2, e = (next(ids) for _ in range(4))
            attach(i, w)
            nodes.append(Vertex((w, l1, l2, e)))
            edges.append(Edge((l1, l2), 0))
            cur[i] = e
        elif kind == "K":
            sw, se, ne, nw = (next(ids) for _ in range(4))
            attach(i, sw)
            nodes.append(Crossing((sw, se, ne, nw), 0 if piece[2] > 0 else 1))
            edges.append(Edge((ne, nw), 0))
            cur[i] = se
        else:
            raise DiagramError(f"unknown slice {piece!r}")
    right = tuple(next(ids) for _ in range(n))
    for i in range(n):
        edges.append(Edge((cur[i], right[i]), 0))
    return SectorTangle(tuple(nodes), tuple(edges), left, right)


def closure(n: int, word: Sequence[Slice], ambient: str = SPHERE) -> GraphDiagram:
    """Annular closure of a slice word, optionally viewed on the sphere."""
    d = close_quotient(tangle_from_word(n, word))
    return d if ambient == ANNULUS else d.as_sphere()


# ---------------------------------------------------------------------------
# named families


def free_circle(winding: int = 0, ambient: str = SPHERE) -> GraphDiagram:
    return GraphDiagram((), (), (winding if ambient == ANNULUS else 0,), ambient)


def core_circle() -> GraphDiagram:
    return free_circle(1, ANNULUS)


def empty(ambient: str = SPHERE) -> GraphDiagram:
    return GraphDiagram((), (), (), ambient)


def theta_graph(n_edges: int = 3, ambient: str = SPHERE) -> GraphDiagram:
    """Two vertices joined by ``n_edges`` parallel edges, drawn in a disk."""
    u = tuple(range(n_edges))
    v = tuple(range(n_edges, 2 * n_edges))
    edges = tuple(Edge((u[k], v[n_edges - 1 - k]), 0) for k in range(n_edges))
    return GraphDiagram((Vertex(u), Vertex(v)), edges, (), ambient)


def theta_n(n: int, edge_reading: str = "n") -> GraphDiagram:
    """The annular theta_n curve (contained in a disk); ``edge_reading`` is "n" or "n+1"."""
    k = n if edge_reading == "n" else n + 1
    if k < 1:
        raise ValueError("theta_n needs at least one edge")
    return theta_graph(k, ANNULUS)


def s_n(n: int) -> GraphDiagram:
    """Two vertices, n+1 edges, exactly one of which runs around the annulus."""
    k = n + 1
    u = tuple(range(k))
    v = tuple(range(k, 2 * k))
    # hole sits in the face between the last and first edge; the ray leaves
    # through edge 0
    edges = tuple(Edge((u[j], v[k - 1 - j]), 1 if j == 0 else 0) for j in range(k))
    return GraphDiagram((Vertex(u), Vertex(v)), edges, (), ANNULUS)


def bouquet(n: int, ambient: str = ANNULUS) -> GraphDiagram:
    """b_n: one vertex with n nested loops around the hole; b_0 is empty."""
    if n == 0:
        return empty(ambient)
    outs = tuple(range(n))
    ins = tuple(range(n, 2 * n))
    rot = outs + tuple(reversed(ins))
    w = 1 if ambient == ANNULUS else 0
    edges = tuple(Edge((outs[i], ins[i]), w) for i in range(n))
    return GraphDiagram((Vertex(rot),), edges, (), ambient)


def trefoil() -> GraphDiagram:
    return closure(2, [("X", 0, 1)] * 3)


def hopf_link() -> GraphDiagram:
    return closure(2, [("X", 0, 1)] * 2)


def unknot_with_curl(sign: int = 1) -> GraphDiagram:
    """Unknot with one curl; the positive curl multiplies the bracket by -A^3."""
    return closure(1, [("K", 0, -sign)])


def petersen_points():
    pts = []
    for k in range(5):
        a = math.pi / 2 + 2 * math.pi * k / 5
        pts.append((2 * math.cos(a), 2 * math.sin(a)))
    for k in range(5):
        a = math.pi / 2 + 2 * math.pi * k / 5
        pts.append((math.cos(a), math.sin(a)))
    edges = [(k, (k + 1) % 5) for k in range(5)]
    edges += [(k, 5 + k) for k in range(5)]
    edges += [(5 + k, 5 + (k + 2) % 5) for k in range(5)]
    return pts, edges


def petersen(over: Sequence[int] | None = None) -> GraphDiagram:
    """Standard drawing: outer pentagon, inner pentagram, five spokes.

    ``over`` fixes which pentagram chord is on top at each of the five
    crossings (see :func:`diagram_from_drawing`).
    """
    pts, edges = petersen_points()
    return diagram_from_drawing(pts, edges, over)


# ---------------------------------------------------------------------------
# random generation


def random_word(rng: random.Random, n: int, length: int, pieces: str = "XVHL",
                max_crossings: int | None = None) -> list[Slice]:
    word = []
    crossings = 0
    for _ in range(length):
        choices = [c for c in pieces if n >= 2 or c in "LK"]
        if max_crossings is not None and crossings >= max_crossings:
            choices = [c for c in choices if c not in "XK"] or ["L"]
        c = rng.choice(choices)
        if c in "XK":
            crossings += 1
        if c in "XVHP":
            word.append((c, rng.randrange(n - 1), rng.choice((1, -1))) if c == "X" else (c, rng.randrange(n - 1)))
        else:
            word.append((c, rng.randrange(n), rng.choice((1, -1))) if c == "K" else (c, rng.randrange(n)))
    return word


def random_graph_diagram(rng: random.Random, max_crossings: int = 4, max_edges: int = 6,
                         pieces: str = "XVHLP", ambient: str = SPHERE,
                         attempts: int = 1000, min_crossings: int = 0) -> GraphDiagram:
    """Random closed diagram with at least one vertex, bounded crossings and graph edges."""
    for _ in range(attempts):
        n = rng.choice((2, 2, 3))
        word = random_word(rng, n, rng.randint(1, 8), pieces, max_crossings)
        d = closure(n, word, ambient)
        if not d.vertices or not min_crossings <= len(d.crossings) <= max_crossings:
            continue
        if len(d.graph_edges()) > max_edges:
            continue
        return d
    raise RuntimeError("could not generate a diagram within the limits")


def random_sector_tangle(rng: random.Random, max_arity: int = 2, max_crossings: int = 2,
                         pieces: str = "XVHL") -> tuple[int, list[Slice]]:
    n = rng.randint(1, max_arity)
    word = random_word(rng, n, rng.randint(1, 3), pieces, max_crossings)
    return n, word


# ---------------------------------------------------------------------------
# shipped corpus


def corpus() -> dict[str, GraphDiagram]:
    """Named sphere diagrams used by the acceptance suite."""
    out = {
        "circle": free_circle(),
        "theta": theta_graph(3),
        "theta4": theta_graph(4),
        "trefoil": trefoil(),
        "hopf": hopf_link(),
        "petersen": load_corpus_file("petersen"),
        "bouquet2": bouquet(2, SPHERE),
        "k4": k4(),
        "theta_twisted": closure(2, [("H", 0), ("X", 0, 1), ("X", 0, 1)]),
    }
    return out


def annular_corpus() -> dict[str, GraphDiagram]:
    out = {"core": core_circle(), "contractible": free_circle(0, ANNULUS)}
    for n in range(1, 4):
        out[f"b{n}"] = bouquet(n)
        out[f"S{n}"] = s_n(n)
        out[f"theta{n + 1}"] = theta_n(n + 1)
    out["braid_vertex"] = closure(2, [("V", 0), ("X", 0, 1)], ANNULUS)
    out["braid_h"] = closure(2, [("H", 0), ("X", 0, -1)], ANNULUS)
    return out


def k4() -> GraphDiagram:
    pts = [(0.0, 0.0), (0.0, 2.0), (-1.8, -1.0), (1.8, -1.0)]
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)]
    return diagram_from_drawing(pts, edges)


def load_corpus_file(name: str) -> GraphDiagram:
    from .diagram import load

    return load(CORPUS_DIR / f"{name}.json")
