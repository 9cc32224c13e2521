import random

import pytest

from moves import MOVES, graph_pairs
from yamada_skein import corpus as C
from yamada_skein.multigraph import PlanarEvaluator
from yamada_skein.ring import D, D_INV, LaurentPoly, SkeinScalar
from yamada_skein.yamada import ConventionError, expand_crossings, to_original_R, yamada

A = lambda k: SkeinScalar(LaurentPoly.monomial(k))  # noqa: E731


def test_theta():
    assert yamada(C.theta_graph(3)) == D ** 3 - D * 3 + D_INV * 2


def test_single_edge_vanishes():
    assert yamada(C.theta_graph(1)).is_zero()


def test_circle_and_vertex():
    assert yamada(C.free_circle()) == D * D - 1
    assert yamada(C.theta_graph(2)) == D * D - 1


def test_trefoil():
    expected = LaurentPoly({24: 1, 16: -1, 12: -1, 8: -1, -4: 1, -8: 1, -12: 1, -16: 1, -20: 1})
    assert yamada(C.trefoil()) == SkeinScalar(expected)


def test_k4():
    expected = SkeinScalar(LaurentPoly({12: 1, 4: 2, -4: 2, -12: 1}), 2)
    assert yamada(C.k4()) == expected


@pytest.mark.parametrize("kind", sorted(MOVES))
def test_move_invariance(kind):
    pairs = graph_pairs(kind, 50, seed=100 + sorted(MOVES).index(kind))
    for a, b in pairs:
        assert yamada(a) == yamada(b)


def test_curl_factor():
    circle = yamada(C.free_circle())
    assert yamada(C.unknot_with_curl(1)) == A(8) * circle
    assert yamada(C.unknot_with_curl(-1)) == A(-8) * circle


def test_mirror_is_bar():
    for name, D_ in C.corpus().items():
        assert yamada(D_.mirror()) == yamada(D_).bar(), name


def test_disjoint_union_multiplies():
    a, b = C.theta_graph(3), C.trefoil()
    assert yamada(a.disjoint_union(b)) == yamada(a) * yamada(b)


def test_methods_agree():
    rng = random.Random(5)
    for _ in range(15):
        D_ = C.random_graph_diagram(rng)
        assert yamada(D_, method="relations") == yamada(D_, method="cable") == yamada(D_, method="auto")


def test_crossing_order_independence():
    rng = random.Random(11)
    for _ in range(10):
        D_ = C.random_graph_diagram(rng, min_crossings=2)
        order = list(D_.crossings)
        rng.shuffle(order)
        total_a = expand_crossings(D_)
        total_b = expand_crossings(D_, order=order)
        ev = PlanarEvaluator()
        from yamada_skein.yamada import planar_eval
        va = sum((c * planar_eval(m, ev) for c, m in total_a.terms), SkeinScalar())
        vb = sum((c * planar_eval(m, ev) for c, m in total_b.terms), SkeinScalar())
        assert va == vb == yamada(D_)


def test_random_pivot_evaluator():
    rng = random.Random(3)
    ev = PlanarEvaluator(memo=False, pivot=lambda edges: rng.randrange(len(edges)))
    for _ in range(10):
        D_ = C.random_graph_diagram(rng)
        assert yamada(D_, ev) == yamada(D_)


def test_exponents_divisible_by_four():
    for name, D_ in C.corpus().items():
        scaled = yamada(D_) * SkeinScalar(-D.num) ** (-D_.euler_characteristic())
        assert scaled.dpow == 0, name
        assert all(e % 4 == 0 for e, _ in scaled.num.items()), name


def test_to_original_R_theta():
    # the value in Yamada's normalization
    assert to_original_R(C.theta_graph(3)) == LaurentPoly({2: -1, 1: -1, 0: -2, -1: -1, -2: -1})


def test_to_original_R_rejects_bad_exponents():
    ev = PlanarEvaluator(vertex_value={1: -1, 0: 1})
    with pytest.raises(ConventionError):
        to_original_R(C.theta_graph(3), ev)


def test_annulus_rejected():
    with pytest.raises(ValueError):
        yamada(C.bouquet(1))
