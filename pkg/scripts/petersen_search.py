"""Try all 32 over/under patterns of the standard Petersen drawing at p = 5.

Prints each pattern with its residue modulo (5, A^10 - 1) and marks those
matching the published residue.
"""
from itertools import product

from yamada_skein.corpus import petersen
from yamada_skein.ring import CongruenceIdeal, IdealKind, reduce_mod
from yamada_skein.yamada import yamada

TARGET = "2*A^8 + 3*A^6 + 2*A^4 + 3 (mod 5, A^10-1)"


def main():
    ideal = CongruenceIdeal(5, IdealKind.ROTATIONAL)
    for over in product((0, 1), repeat=5):
        r = str(reduce_mod(yamada(petersen(over), method="cable"), ideal))
        print(over, r, "<- match" if r == TARGET else "")


if __name__ == "__main__":
    main()
