import pytest

from yamada_skein import corpus as C
from yamada_skein.screen import FAIL, INCONCLUSIVE, PASS, abstract_screen, screen_diagram


def test_theta_fails_everywhere():
    for p in (2, 3, 5):
        assert screen_diagram(C.theta_graph(3), p).status == FAIL


def test_k4():
    assert screen_diagram(C.k4(), 2).status == FAIL
    assert screen_diagram(C.k4(), 3).status == FAIL


def test_petersen_passes_five():
    r = screen_diagram(C.load_corpus_file("petersen"), 5)
    assert r.status == PASS
    sigma = r.permutation
    for v in range(10):
        x, k = v, 0
        while True:
            x, k = sigma[x], k + 1
            if x == v:
                break
        assert k == 5


def test_cycle_graph():
    cycle = [(i, (i + 1) % 6) for i in range(6)]
    assert abstract_screen(6, cycle, 3).status == PASS
    assert abstract_screen(6, cycle, 2).status == PASS
    assert abstract_screen(6, cycle, 5).status == FAIL


def test_two_cycle_needs_even_multiplicity():
    assert abstract_screen(2, [(0, 1)] * 3, 2).status == FAIL
    assert abstract_screen(2, [(0, 1)] * 4, 2).status == PASS


@pytest.mark.parametrize("p", [3, 5])
def test_periodic_closures_pass(p):
    t = C.tangle_from_word(2, [("H", 0), ("X", 0, 1)])
    from yamada_skein.diagram import close_periodic
    assert screen_diagram(close_periodic(t, p), p).status == PASS


def test_budget():
    cycle = [(i, (i + 1) % 30) for i in range(30)]
    assert abstract_screen(30, cycle, 7, budget=5).status in (FAIL, INCONCLUSIVE)
    assert abstract_screen(30, cycle, 5, budget=1).status == INCONCLUSIVE
