import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from yamada_skein.ring import (
    D,
    D_INV,
    D_POLY,
    VACUOUS,
    AnnularElement,
    CongruenceIdeal,
    IdealKind,
    LaurentPoly,
    Residue,
    SkeinScalar,
    d_inverse,
    format_laurent,
    from_d_laurent,
    parse_scalar,
    pth_power_solve,
    reduce_mod,
)

laurent = st.dictionaries(st.integers(-8, 8), st.integers(-5, 5), max_size=5).map(LaurentPoly)
scalars = st.builds(SkeinScalar, laurent, st.integers(0, 3))


@given(scalars, scalars, scalars)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == SkeinScalar()
    assert a * 1 == a


@given(scalars)
def test_normalization_idempotent(a):
    assert a.normalize() == a
    assert a.normalize().normalize() == a.normalize()
    if a.dpow:
        from yamada_skein.ring import div_exact_d
        assert div_exact_d(a.num) is None


@given(scalars, scalars)
def test_bar_is_ring_involution(a, b):
    assert a.bar().bar() == a
    assert (a * b).bar() == a.bar() * b.bar()
    assert (a + b).bar() == a.bar() + b.bar()


def test_d_unit():
    assert D * D_INV == SkeinScalar(1)
    assert SkeinScalar(D_POLY * D_POLY, 1) == D
    assert (-D) ** -2 == D_INV * D_INV
    assert SkeinScalar(LaurentPoly.monomial(3)) ** -1 == SkeinScalar(LaurentPoly.monomial(-3))


def test_non_unit_inverse_raises():
    with pytest.raises(Exception):
        SkeinScalar(LaurentPoly({0: 2})) ** -1


def test_from_d_laurent():
    assert from_d_laurent({1: 1, -1: -1}) == D - D_INV
    assert from_d_laurent({}) == SkeinScalar()


def test_parse_round_trip():
    x = D * D - 3 + D_INV * 2
    assert parse_scalar(str(x)) == x


def test_format_laurent():
    assert format_laurent(LaurentPoly({2: 1, -1: -3}), "x") == "1*x^2 + -3*x^-1"


@pytest.mark.parametrize("p", [2, 3, 5, 7])
@pytest.mark.parametrize("kind", list(IdealKind))
def test_d_inverse(p, kind):
    ideal = CongruenceIdeal(p, kind)
    inv = d_inverse(ideal)
    if p == 2 and kind is IdealKind.ROTATIONAL:
        assert inv is VACUOUS
        return
    d = reduce_mod(D, ideal)
    assert d * inv == Residue.one(ideal)
    assert reduce_mod(D_INV, ideal) == inv


@pytest.mark.parametrize("p", [3, 5, 7])
@pytest.mark.parametrize("kind", list(IdealKind))
@given(a=scalars, b=scalars)
def test_reduction_is_homomorphism(p, kind, a, b):
    ideal = CongruenceIdeal(p, kind)
    assert reduce_mod(a * b, ideal) == reduce_mod(a, ideal) * reduce_mod(b, ideal)
    assert reduce_mod(a + b, ideal) == reduce_mod(a, ideal) + reduce_mod(b, ideal)


def test_rotational_relation():
    ideal = CongruenceIdeal(5, IdealKind.ROTATIONAL)
    assert reduce_mod(SkeinScalar(LaurentPoly({10: 1, 0: -1})), ideal).is_zero()
    assert reduce_mod(SkeinScalar(LaurentPoly({0: 5})), ideal).is_zero()


@pytest.mark.parametrize("p", [3, 5, 7])
def test_frobenius_relation(p):
    ideal = CongruenceIdeal(p, IdealKind.FROBENIUS)
    assert reduce_mod(D ** p - D, ideal).is_zero()


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_pth_power_round_trip(p):
    rng = random.Random(1000 + p)
    ideal = CongruenceIdeal(p, IdealKind.FROBENIUS)
    n = len(ideal.modulus()) - 1
    for _ in range(100):
        g = Residue.from_coeffs(ideal, [rng.randrange(p) for _ in range(n)])
        r = g ** p
        root = pth_power_solve(r)
        assert root is not None
        assert root ** p == r


def test_pth_power_rejects_non_power():
    ideal = CongruenceIdeal(3, IdealKind.FROBENIUS)
    n = len(ideal.modulus()) - 1
    powers = set()
    for k in range(3 ** n):
        c = [(k // 3 ** i) % 3 for i in range(n)]
        powers.add((Residue.from_coeffs(ideal, c) ** 3).coeffs)
    others = [c for c in ((k // 3 ** i % 3 for i in range(n)) for k in range(3 ** n))]
    misses = 0
    for c in others:
        c = tuple(c)
        r = Residue(ideal, c)
        assert (pth_power_solve(r) is not None) == (c in powers)
        misses += c not in powers
    assert misses > 0


def test_pth_power_needs_frobenius():
    with pytest.raises(ValueError):
        pth_power_solve(Residue.one(CongruenceIdeal(3, IdealKind.ROTATIONAL)))


def test_annular_element():
    z = AnnularElement.z()
    x = z * z - 1
    assert x.degree() == 2
    assert x.evaluate(D) == D * D - 1
    assert (x * z).coeff(3) == SkeinScalar(1)
    assert x.is_even()
    assert x.compose(z * 2) == z * z * 4 - 1
