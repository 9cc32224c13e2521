"""Compare the two candidate values of an isolated vertex (d and -d).

For each choice, report the theta value, its R-polynomial, the Petersen
residue mod (5, A^10 - 1), and whether the cabled-bracket oracle agrees.
"""
from yamada_skein import corpus as C
from yamada_skein.cabling import phi_bracket
from yamada_skein.multigraph import PlanarEvaluator
from yamada_skein.ring import CongruenceIdeal, IdealKind, SkeinScalar, D_POLY, format_laurent, reduce_mod
from yamada_skein.yamada import yamada


def r_poly(y, chi):
    s = y * SkeinScalar(-D_POLY) ** (-chi)
    if s.dpow or any(e % 4 for e, _ in s.num.items()):
        return f"not a polynomial in x: {s}"
    from yamada_skein.ring import LaurentPoly
    return format_laurent(LaurentPoly({e // 4: c for e, c in s.num.items()}), "x")


def main():
    theta = C.theta_graph(3)
    petersen = C.load_corpus_file("petersen")
    ideal = CongruenceIdeal(5, IdealKind.ROTATIONAL)
    for label, value in (("d", {1: 1}), ("-d", {1: -1})):
        ev = PlanarEvaluator(vertex_value=value)
        y_theta = yamada(theta, ev)
        y_pet = yamada(petersen, ev)
        print(f"isolated vertex = {label}")
        print(f"  Y(theta) = {y_theta}")
        print(f"  R(theta) = {r_poly(y_theta, theta.euler_characteristic())}")
        print(f"  Petersen mod (5, A^10-1): {reduce_mod(y_pet, ideal)}")
        print(f"  cabled oracle on theta: {y_theta == phi_bracket(theta)}")
        print(f"  cabled oracle on Petersen: {y_pet == phi_bracket(petersen)}")


if __name__ == "__main__":
    main()
