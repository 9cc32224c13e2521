import json
import random

import pytest

from yamada_skein import corpus as C
from yamada_skein.diagram import close_periodic, close_quotient
from yamada_skein.kauffman import bracket
from yamada_skein.periodicity import (
    FAIL,
    NO_OBSTRUCTION,
    NOT_PERIODIC,
    PASS,
    VACUOUS_S,
    full_report,
    is_prime,
    test_condition1 as condition1,
    test_condition2 as condition2,
    test_link_period as link_period,
)
from yamada_skein.ring import LaurentPoly, SkeinScalar

PETERSEN_JSON = ('{"p":5,"cond2":"fail","residue":"2*A^8 + 3*A^6 + 2*A^4 + 3 (mod 5, A^10-1)",'
                 '"verdict":"not-periodic"}')


def test_primes():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_petersen_report():
    rep = full_report(C.load_corpus_file("petersen"), 5)
    assert rep.to_json() == PETERSEN_JSON
    assert rep.verdict == NOT_PERIODIC


def test_petersen_details():
    data = json.loads(full_report(C.load_corpus_file("petersen"), 5, pth_power=True).to_json(details=True))
    assert data["abstract_screen"] == PASS
    assert data["pth_power"] == FAIL


def test_symmetric_petersen_no_obstruction():
    rep = full_report(C.load_corpus_file("petersen_symmetric"), 5)
    assert rep.cond2 == PASS
    assert rep.verdict == NO_OBSTRUCTION


def test_condition2_vacuous_at_two():
    assert condition2(SkeinScalar(LaurentPoly.monomial(3)), 2) == VACUOUS_S


def test_condition2_detects_asymmetry():
    assert condition2(SkeinScalar(LaurentPoly.monomial(2)), 5) == FAIL
    assert condition2(SkeinScalar(LaurentPoly.monomial(10)), 5) == PASS


def test_non_prime_rejected():
    with pytest.raises(ValueError):
        condition2(SkeinScalar(1), 4)


@pytest.mark.parametrize("p", [3, 5])
def test_positive_controls(p):
    rng = random.Random(p)
    for _ in range(4):
        n, word = C.random_sector_tangle(rng)
        t = C.tangle_from_word(n, word)
        rep = full_report(close_periodic(t, p), p, close_quotient(t), pth_power=True)
        assert rep.cond2 != FAIL and rep.cond1 == PASS and rep.pth_power == PASS


def test_link_controls():
    t = C.tangle_from_word(2, [("X", 0, 1)])
    for p in (3, 5):
        L = close_periodic(t, p).as_sphere()
        Lq = close_quotient(t).as_sphere()
        rep = link_period(bracket(L), bracket(Lq), p)
        assert rep.cond2 == PASS and rep.cond1 == PASS


def test_wrong_quotient_detected():
    t = C.tangle_from_word(2, [("H", 0), ("X", 0, 1)])
    other = close_quotient(C.tangle_from_word(2, [("H", 0)]))
    rep = full_report(close_periodic(t, 5), 5, other)
    assert rep.cond1 == FAIL
    assert rep.verdict == NOT_PERIODIC


def test_text_report():
    text = full_report(C.theta_graph(3), 3).to_text()
    assert "verdict: not-periodic" in text
