import random

import pytest

from moves import link_pairs
from yamada_skein import corpus as C
from yamada_skein.kauffman import bracket, bracket_annular, state_sum
from yamada_skein.ring import D, AnnularElement, LaurentPoly, SkeinScalar


def mono(k, c=1):
    return SkeinScalar(LaurentPoly.monomial(k, c))


def test_unknot():
    assert bracket(C.free_circle()) == D


def test_hopf():
    assert bracket(C.hopf_link()) == SkeinScalar(LaurentPoly({6: 1, 2: 1, -2: 1, -6: 1}))


def test_trefoil():
    assert bracket(C.trefoil()) == SkeinScalar(LaurentPoly({9: -1, 1: 1, -3: 1, -7: 1}))


def test_curl():
    assert bracket(C.unknot_with_curl(1)) == mono(3, -1) * D
    assert bracket(C.unknot_with_curl(-1)) == mono(-3, -1) * D


@pytest.mark.parametrize("kind", ["RII", "RIII", "RIII-mixed"])
def test_moves(kind):
    for a, b in link_pairs(kind, 50, seed=7):
        assert bracket(a) == bracket(b)


def test_mirror_is_bar():
    rng = random.Random(2)
    for _ in range(20):
        L = C.closure(3, C.random_word(rng, 3, 5, "X"))
        assert bracket(L.mirror()) == bracket(L).bar()


def test_network_matches_state_sum():
    rng = random.Random(4)
    for _ in range(20):
        n = rng.choice((1, 2, 3))
        L = C.closure(n, C.random_word(rng, n, rng.randint(1, 6), "XK"))
        assert bracket(L) == state_sum(L)
        La = C.closure(n, C.random_word(rng, n, rng.randint(1, 6), "XK"), "annulus")
        assert bracket_annular(La) == state_sum(La)


def test_core_curve():
    assert bracket_annular(C.core_circle()) == AnnularElement.z()


def test_rejects_graphs():
    with pytest.raises(ValueError):
        bracket(C.theta_graph(3))
