import json
import random
import pytest

from yamada_skein import corpus as C
from yamada_skein.diagram import (
    ANNULUS,
    SPHERE,
    Crossing,
    DiagramError,
    Edge,
    GraphDiagram,
    SectorTangle,
    Vertex,
    close_periodic,
    close_quotient,
    load,
    parse,
    serialize,
)


def test_round_trip_corpus():
    for name, D in C.corpus().items():
        assert parse(serialize(D)) == D, name
    for name, D in C.annular_corpus().items():
        assert parse(serialize(D)) == D, name


def test_shipped_files_load():
    for path in C.CORPUS_DIR.glob("*.json"):
        data = json.loads(path.read_text())
        if "boundary" in data:
            assert SectorTangle.from_dict(data).arity >= 1
        else:
            assert load(path).nodes is not None


def test_theta_structure():
    D = C.theta_graph(3)
    assert len(D.vertices) == 2
    assert len(D.graph_edges()) == 3
    assert D.euler_characteristic() == -1
    assert not D.is_link()


def test_petersen_structure():
    D = C.load_corpus_file("petersen")
    verts, edges = D.underlying_graph()
    assert len(verts) == 10 and len(edges) == 15
    assert len(D.crossings) == 5
    assert all(len(D.nodes[v].halfedges) == 3 for v in verts)


def test_links():
    assert C.trefoil().is_link()
    assert len(C.hopf_link().crossings) == 2


def test_mirror_involution():
    D = C.load_corpus_file("petersen")
    assert D.mirror().mirror() == D
    assert D.mirror() != D


def test_rejects_unmatched_halfedge():
    with pytest.raises(DiagramError):
        GraphDiagram((Vertex((0, 1, 2)),), (Edge((0, 1)),))


def test_rejects_double_use():
    with pytest.raises(DiagramError):
        GraphDiagram((Vertex((0, 1)),), (Edge((0, 1)), Edge((1, 0))))


def test_rejects_bad_crossing():
    with pytest.raises(DiagramError):
        GraphDiagram((Crossing((0, 1, 2)),), (Edge((0, 1)),))


def test_rejects_nonplanar_rotation():
    # K_{3,3}-like rotation of a bouquet with interleaved loops has genus 1
    with pytest.raises(DiagramError):
        GraphDiagram((Vertex((0, 1, 2, 3)),), (Edge((0, 2)), Edge((1, 3))))


def test_rejects_wide_annular_circle():
    with pytest.raises(DiagramError):
        GraphDiagram((), (), (2,), ANNULUS)


def test_malformed_json():
    with pytest.raises((DiagramError, KeyError, TypeError, ValueError)):
        parse('{"nodes": [{"type": "vertex"}]}')


def test_periodic_closure_counts():
    t = C.tangle_from_word(2, [("X", 0, 1), ("H", 0)])
    for p in (1, 2, 3, 5):
        D = close_periodic(t, p)
        assert D.ambient == ANNULUS
        assert len(D.crossings) == p
        assert len(D.vertices) == 2 * p
    assert close_quotient(t) == close_periodic(t, 1)


def test_periodic_closure_winding():
    t = C.tangle_from_word(1, [])
    D = close_periodic(t, 3)
    assert D.free_circles == (1,)


def test_tangle_round_trip():
    t = C.tangle_from_word(2, [("X", 0, -1), ("V", 0)])
    assert SectorTangle.from_json(t.to_json()) == t


def test_tangle_validation():
    with pytest.raises(DiagramError):
        SectorTangle((), (Edge((0, 1)),), (0,), (0,))


def test_random_diagrams_valid():
    rng = random.Random(7)
    for _ in range(30):
        D = C.random_graph_diagram(rng)
        assert len(D.crossings) <= 4
        assert len(D.graph_edges()) <= 6
        assert D.vertices
        assert parse(serialize(D)) == D


def test_as_sphere_forgets_windings():
    D = C.bouquet(2)
    S = D.as_sphere()
    assert S.ambient == SPHERE
    assert all(w == 0 for w in S.free_circles)


def test_low_valency_warning():
    from yamada_skein.diagram import LowValencyWarning

    with pytest.warns(LowValencyWarning):
        parse(serialize(C.theta_graph(2)))
