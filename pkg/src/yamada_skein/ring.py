"""Exact arithmetic in Z[A^{+-1}, d^{-1}] with d = -A^2 - A^-2.

Elements are stored as a Laurent numerator in A over a power of d.  The
numerator is kept reduced: it is never exactly divisible by d unless the
d-power is already zero, so structural equality is ring equality.

The second half of the module reduces such scalars into the finite rings
F_p[A]/(M) used by the periodicity congruences.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_gcdex, gf_mul, gf_rem, gf_strip


class NotInvertibleError(ArithmeticError):
    pass


class LaurentPoly:
    """Sparse Laurent polynomial in A with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        clean: dict[int, int] = {}
        for e, c in items:
            c = clean.get(e, 0) + c
            if c:
                clean[e] = c
            else:
                clean.pop(e, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentPoly":
        # terms already free of zeros
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls._raw({exp: coeff} if coeff else {})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls.monomial(0, c)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def min_exp(self) -> int:
        return min(self._terms)

    def max_exp(self) -> int:
        return max(self._terms)

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                del out[e]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) == 1:
                (e, c), = self._terms.items()
                if c in (1, -1):
                    return LaurentPoly.monomial(-e * (-k), c ** (-k))
            raise NotInvertibleError("not invertible")
        result = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def bar(self) -> "LaurentPoly":
        """Image under the involution A -> A^-1."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def substitute_power(self, k: int) -> "LaurentPoly":
        """A -> A^k."""
        return LaurentPoly._raw({e * k: c for e, c in self._terms.items()})

    def div_exact_poly(self, divisor: "LaurentPoly") -> "LaurentPoly | None":
        """Exact quotient by a Laurent polynomial whose top coefficient is +-1."""
        if divisor.is_zero():
            raise ZeroDivisionError
        if self.is_zero():
            return LaurentPoly()
        top, low = divisor.max_exp(), divisor.min_exp()
        lead = divisor._terms[top]
        if lead not in (1, -1):
            raise ValueError("divisor must have unit leading coefficient")
        # plain polynomial long division after shifting both to constant term != 0
        f_low = self.min_exp()
        rem = {e - f_low: c for e, c in self._terms.items()}
        g = {e - low: c for e, c in divisor._terms.items()}
        gdeg = top - low
        quot: dict[int, int] = {}
        while rem:
            e = max(rem)
            if e < gdeg:
                return None
            c = rem[e] * lead
            q = e - gdeg
            quot[q] = c
            for de, dc in g.items():
                k = q + de
                v = rem.get(k, 0) - c * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly._raw({e + f_low - low: c for e, c in quot.items()})

    def __repr__(self):
        return f"LaurentPoly({format_laurent(self)!r})"

    def __str__(self):
        return format_laurent(self)


def format_laurent(f: LaurentPoly, var: str = "A") -> str:
    if f.is_zero():
        return "0"
    parts = []
    for e in sorted(f._terms, reverse=True):
        c = f._terms[e]
        parts.append(str(c) if e == 0 else f"{c}*{var}^{e}")
    return " + ".join(parts)


A = LaurentPoly.monomial(1)
ONE = LaurentPoly.constant(1)
D_POLY = LaurentPoly({2: -1, -2: -1})


@lru_cache(maxsize=None)
def d_power(k: int) -> LaurentPoly:
    if k == 0:
        return ONE
    return d_power(k - 1) * D_POLY


def div_exact_d(f: LaurentPoly) -> LaurentPoly | None:
    """Return q with q*d == f, or None when d does not divide f."""
    return f.div_exact_poly(D_POLY)


class SkeinScalar:
    """num / d^dpow, normalized so that d does not divide num when dpow > 0."""

    __slots__ = ("num", "dpow", "_hash")

    def __init__(self, num: LaurentPoly | int = 0, dpow: int = 0, *, normalized: bool = False):
        if isinstance(num, int):
            num = LaurentPoly.constant(num)
        if dpow < 0:
            num = num * d_power(-dpow)
            dpow = 0
        if not normalized:
            if num.is_zero():
                dpow = 0
            while dpow > 0:
                q = div_exact_d(num)
                if q is None:
                    break
                num, dpow = q, dpow - 1
        self.num = num
        self.dpow = dpow
        self._hash = None

    @classmethod
    def coerce(cls, x) -> "SkeinScalar":
        if isinstance(x, SkeinScalar):
            return x
        if isinstance(x, (int, LaurentPoly)):
            return cls(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to SkeinScalar")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def normalize(self) -> "SkeinScalar":
        return SkeinScalar(self.num, self.dpow)

    def __eq__(self, other):
        try:
            other = SkeinScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.dpow == other.dpow and self.num == other.num

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.dpow))
        return self._hash

    def __add__(self, other):
        other = SkeinScalar.coerce(other)
        k = max(self.dpow, other.dpow)
        num = self.num * d_power(k - self.dpow) + other.num * d_power(k - other.dpow)
        return SkeinScalar(num, k)

    __radd__ = __add__

    def __neg__(self):
        return SkeinScalar(-self.num, self.dpow, normalized=True)

    def __sub__(self, other):
        return self + (-SkeinScalar.coerce(other))

    def __rsub__(self, other):
        return SkeinScalar.coerce(other) - self

    def __mul__(self, other):
        other = SkeinScalar.coerce(other)
        return SkeinScalar(self.num * other.num, self.dpow + other.dpow)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k >= 0:
            return SkeinScalar(self.num ** k, self.dpow * k)
        # the units are +-A^m d^j: strip d-factors, then invert the monomial
        num, j = self.num, -self.dpow
        while not num.is_zero():
            q = div_exact_d(num)
            if q is None:
                break
            num, j = q, j + 1
        inv = SkeinScalar(num ** -1, j)
        return inv ** (-k)

    def bar(self) -> "SkeinScalar":
        return SkeinScalar(self.num.bar(), self.dpow, normalized=True)

    def to_laurent(self) -> LaurentPoly:
        if self.dpow:
            raise ValueError(f"{self} has a d-denominator")
        return self.num

    def __repr__(self):
        return f"SkeinScalar({str(self)!r})"

    def __str__(self):
        s = format_laurent(self.num)
        return f"{s} / d^{self.dpow}" if self.dpow else s


D = SkeinScalar(D_POLY)
D_INV = SkeinScalar(ONE, 1)


def scalar(x) -> SkeinScalar:
    return SkeinScalar.coerce(x)


def from_d_laurent(coeffs: Mapping[int, int]) -> SkeinScalar:
    """Build sum c_k d^k (k may be negative) as a SkeinScalar."""
    if not coeffs:
        return SkeinScalar()
    low = min(coeffs)
    shift = -low if low < 0 else 0
    num = LaurentPoly()
    for k, c in coeffs.items():
        if c:
            num = num + d_power(k + shift) * c
    return SkeinScalar(num, shift)


def parse_scalar(text: str) -> SkeinScalar:
    """Inverse of ``str(SkeinScalar)``."""
    text = text.strip()
    dpow = 0
    if " / d^" in text:
        text, k = text.rsplit(" / d^", 1)
        dpow = int(k)
    terms: dict[int, int] = {}
    if text != "0":
        for part in text.split(" + "):
            if "*A^" in part:
                c, e = part.split("*A^")
                terms[int(e)] = terms.get(int(e), 0) + int(c)
            else:
                terms[0] = terms.get(0, 0) + int(part)
    return SkeinScalar(LaurentPoly(terms), dpow)


# ---------------------------------------------------------------------------
# finite quotient rings F_p[A]/(M)


class IdealKind(enum.Enum):
    ROTATIONAL = "rotational"  # (p, A^{2p} - 1)
    FROBENIUS = "frobenius"  # (p, d^p - d) == (p, d^{p-1} - 1) after clearing


@dataclass(frozen=True)
class CongruenceIdeal:
    p: int
    kind: IdealKind

    def modulus(self) -> tuple[int, ...]:
        """Monic modulus over F_p, little-endian coefficients."""
        return _modulus(self.p, self.kind)

    def modulus_label(self) -> str:
        if self.kind is IdealKind.ROTATIONAL:
            return f"A^{2 * self.p}-1"
        return f"d^{self.p}-d"


@lru_cache(maxsize=None)
def _modulus(p: int, kind: IdealKind) -> tuple[int, ...]:
    if kind is IdealKind.ROTATIONAL:
        m = [0] * (2 * p + 1)
        m[0], m[2 * p] = -1 % p, 1
        return tuple(m)
    # A^{2(p-1)} (d^{p-1} - 1), an honest polynomial in A
    f = d_power(p - 1).shift(2 * (p - 1)) - LaurentPoly.monomial(2 * (p - 1))
    assert f.min_exp() >= 0
    coeffs = [f.coeff(e) % p for e in range(f.max_exp() + 1)]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    inv = pow(coeffs[-1], -1, p)
    return tuple(c * inv % p for c in coeffs)


def _be(coeffs) -> list:
    # little-endian ints -> galoistools big-endian
    return gf_strip([ZZ(c) for c in reversed(coeffs)])


def _le(poly, n: int) -> tuple[int, ...]:
    out = [int(c) for c in reversed(poly)]
    out += [0] * (n - len(out))
    return tuple(out[:n])


class VacuousZeroRing:
    """Marker: the quotient ring is zero, so every congruence holds trivially."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "VacuousZeroRing()"


VACUOUS = VacuousZeroRing()


@dataclass(frozen=True)
class Residue:
    """Element of F_p[A]/(M); ``coeffs`` little-endian, length deg M."""

    ideal: CongruenceIdeal
    coeffs: tuple[int, ...]

    @property
    def p(self) -> int:
        return self.ideal.p

    @classmethod
    def from_coeffs(cls, ideal: CongruenceIdeal, coeffs) -> "Residue":
        m = ideal.modulus()
        r = gf_rem(_be([c % ideal.p for c in coeffs]), _be(m), ideal.p, ZZ)
        return cls(ideal, _le(r, len(m) - 1))

    @classmethod
    def zero(cls, ideal: CongruenceIdeal) -> "Residue":
        return cls(ideal, (0,) * (len(ideal.modulus()) - 1))

    @classmethod
    def one(cls, ideal: CongruenceIdeal) -> "Residue":
        return cls.from_coeffs(ideal, [1])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "Residue") -> "Residue":
        p = self.p
        return Residue(self.ideal, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Residue":
        return Residue(self.ideal, tuple(-a % self.p for a in self.coeffs))

    def __sub__(self, other: "Residue") -> "Residue":
        return self + (-other)

    def __mul__(self, other: "Residue") -> "Residue":
        p, m = self.p, _be(self.ideal.modulus())
        prod = gf_mul(_be(self.coeffs), _be(other.coeffs), p, ZZ)
        return Residue(self.ideal, _le(gf_rem(prod, m, p, ZZ), len(self.coeffs)))

    def __pow__(self, k: int) -> "Residue":
        if k < 0:
            return self.inverse() ** (-k)
        result, base = Residue.one(self.ideal), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Residue":
        p, m = self.p, _be(self.ideal.modulus())
        s, _, g = gf_gcdex(_be(self.coeffs), m, p, ZZ)
        if len(g) != 1:
            raise NotInvertibleError("not invertible")
        ginv = pow(int(g[0]), -1, p)
        return Residue.from_coeffs(self.ideal, [int(c) * ginv for c in reversed(s)])

    def __str__(self):
        terms = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c:
                terms.append(str(c) if e == 0 else f"{c}*A^{e}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} (mod {self.p}, {self.ideal.modulus_label()})"


def _laurent_residue(f: LaurentPoly, ideal: CongruenceIdeal) -> Residue:
    if f.is_zero():
        return Residue.zero(ideal)
    low = f.min_exp()
    shifted = f.shift(-low)
    r = Residue.from_coeffs(ideal, [shifted.coeff(e) for e in range(shifted.max_exp() + 1)])
    a = Residue.from_coeffs(ideal, [0, 1])
    return r * a ** low


def d_inverse(ideal: CongruenceIdeal) -> Residue | VacuousZeroRing:
    """Inverse of d in the quotient, via -(A^4+1) = A^2 d."""
    p, m = ideal.p, _be(ideal.modulus())
    s, _, g = gf_gcdex(_be([1, 0, 0, 0, 1]), m, p, ZZ)
    if len(g) != 1:
        # d is a zero divisor mod (p, M) yet a unit in R: the quotient is 0
        return VACUOUS
    ginv = pow(int(g[0]), -1, p)
    inv_a4p1 = Residue.from_coeffs(ideal, [int(c) * ginv for c in reversed(s)])
    return -(inv_a4p1 * Residue.from_coeffs(ideal, [0, 0, 1]))


def reduce_mod(s: SkeinScalar, ideal: CongruenceIdeal) -> Residue | VacuousZeroRing:
    s = SkeinScalar.coerce(s)
    dinv = d_inverse(ideal)
    if dinv is VACUOUS:
        assert ideal.p == 2, "d must be invertible modulo an odd prime"
        return VACUOUS
    return _laurent_residue(s.num, ideal) * dinv ** s.dpow


def frobenius_matrix(ideal: CongruenceIdeal) -> list[list[int]]:
    """Matrix of x -> x^p on the monomial basis (columns are images of A^j)."""
    n = len(ideal.modulus()) - 1
    a = Residue.from_coeffs(ideal, [0, 1])
    ap = a ** ideal.p
    cols = []
    cur = Residue.one(ideal)
    for _ in range(n):
        cols.append(cur.coeffs)
        cur = cur * ap
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def solve_mod_p(matrix: list[list[int]], rhs: list[int], p: int) -> list[int] | None:
    """One solution of matrix @ x == rhs over F_p, or None."""
    n_rows = len(matrix)
    n_cols = len(matrix[0]) if matrix else 0
    aug = [[v % p for v in row] + [rhs[i] % p] for i, row in enumerate(matrix)]
    pivots = []
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = pow(aug[r][c], -1, p)
        aug[r] = [v * inv % p for v in aug[r]]
        for i in range(n_rows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [(v - f * w) % p for v, w in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if any(aug[i][n_cols] for i in range(r, n_rows)):
        return None
    x = [0] * n_cols
    for i, c in enumerate(pivots):
        x[c] = aug[i][n_cols]
    return x


def pth_power_solve(r: Residue) -> Residue | None:
    """Some g with g^p == r in F_p[A]/(M_p), or None when r is not a p-th power."""
    ideal = r.ideal
    if ideal.kind is not IdealKind.FROBENIUS:
        raise ValueError("p-th roots are only taken modulo the Frobenius ideal")
    sol = solve_mod_p(frobenius_matrix(ideal), list(r.coeffs), ideal.p)
    if sol is None:
        return None
    return Residue(ideal, tuple(sol))


# ---------------------------------------------------------------------------
# R[z], the skein algebra of the solid torus


class AnnularElement:
    """Polynomial in the core curve z with SkeinScalar coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, SkeinScalar | LaurentPoly | int] | None = None):
        clean = {}
        for k, c in (coeffs or {}).items():
            c = SkeinScalar.coerce(c)
            if not c.is_zero():
                clean[k] = c
        self._coeffs = clean

    @classmethod
    def constant(cls, c) -> "AnnularElement":
        return cls({0: c})

    @classmethod
    def z(cls, power: int = 1) -> "AnnularElement":
        return cls({power: 1})

    @property
    def coeffs(self) -> dict[int, SkeinScalar]:
        return dict(self._coeffs)

    def coeff(self, k: int) -> SkeinScalar:
        return self._coeffs.get(k, SkeinScalar())

    def degree(self) -> int:
        return max(self._coeffs, default=-1)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other):
        if not isinstance(other, AnnularElement):
            try:
                other = AnnularElement.constant(other)
            except TypeError:
                return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other):
        if not isinstance(other, AnnularElement):
            other = AnnularElement.constant(other)
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            out[k] = out[k] + c if k in out else c
        return AnnularElement(out)

    __radd__ = __add__

    def __neg__(self):
        return AnnularElement({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, AnnularElement):
            other = AnnularElement.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, AnnularElement):
            c = SkeinScalar.coerce(other)
            return AnnularElement({k: v * c for k, v in self._coeffs.items()})
        out: dict[int, SkeinScalar] = {}
        for k1, c1 in self._coeffs.items():
            for k2, c2 in other._coeffs.items():
                k = k1 + k2
                out[k] = out[k] + c1 * c2 if k in out else c1 * c2
        return AnnularElement(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = AnnularElement.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def evaluate(self, z_value) -> SkeinScalar:
        z_value = SkeinScalar.coerce(z_value)
        total = SkeinScalar()
        for k, c in self._coeffs.items():
            total = total + c * z_value ** k
        return total

    def compose(self, poly: "AnnularElement") -> "AnnularElement":
        """Substitute z -> poly."""
        total = AnnularElement()
        for k, c in self._coeffs.items():
            total = total + poly ** k * c
        return total

    def is_even(self) -> bool:
        return all(k % 2 == 0 for k in self._coeffs)

    def bar(self) -> "AnnularElement":
        return AnnularElement({k: c.bar() for k, c in self._coeffs.items()})

    def __repr__(self):
        return f"AnnularElement({str(self)!r})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for k in sorted(self._coeffs, reverse=True):
            c = self._coeffs[k]
            parts.append(f"({c})" if k == 0 else f"({c})*z^{k}")
        return " + ".join(parts)


def z_squared_minus_one() -> AnnularElement:
    return AnnularElement({2: 1, 0: -1})
