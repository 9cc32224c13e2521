"""Necessary conditions for a diagram to be p-periodic.

Every test here is one-directional: a failure proves the diagram is not
p-periodic, a pass proves nothing.  Reports therefore say "no obstruction"
rather than "periodic".
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .diagram import GraphDiagram
from .ring import (
    VACUOUS,
    CongruenceIdeal,
    IdealKind,
    Residue,
    SkeinScalar,
    pth_power_solve,
    reduce_mod,
)

PASS, FAIL, VACUOUS_S, SKIPPED, INCONCLUSIVE = "pass", "fail", "vacuous", "skipped", "inconclusive"
NOT_PERIODIC, NO_OBSTRUCTION = "not-periodic", "no-obstruction"


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p ** 0.5) + 1))


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")


def test_condition2(Y: SkeinScalar, p: int) -> str:
    """Y(A) and Y(A^-1) must agree modulo (p, A^{2p} - 1)."""
    _check_prime(p)
    r = reduce_mod(Y - Y.bar(), CongruenceIdeal(p, IdealKind.ROTATIONAL))
    if r is VACUOUS:
        return VACUOUS_S
    return PASS if r.is_zero() else FAIL


def test_condition1(Y: SkeinScalar, Yq: SkeinScalar, p: int) -> str:
    """Y must agree with (quotient value)^p modulo (p, d^p - d)."""
    _check_prime(p)
    ideal = CongruenceIdeal(p, IdealKind.FROBENIUS)
    r = reduce_mod(Y, ideal) - reduce_mod(Yq, ideal) ** p
    return PASS if r.is_zero() else FAIL


def test_pth_power(Y: SkeinScalar, p: int) -> str:
    """Y must be a p-th power modulo (p, d^p - d)."""
    _check_prime(p)
    r = reduce_mod(Y, CongruenceIdeal(p, IdealKind.FROBENIUS))
    return PASS if pth_power_solve(r) is not None else FAIL


def rotational_residue(Y: SkeinScalar, p: int) -> str:
    r = reduce_mod(Y, CongruenceIdeal(p, IdealKind.ROTATIONAL))
    return "vacuous (zero ring)" if r is VACUOUS else str(r)


@dataclass
class PeriodReport:
    p: int
    cond2: str
    residue: str
    cond1: str = SKIPPED
    pth_power: str = SKIPPED
    abstract_screen: str = SKIPPED
    reasons: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        fails = (self.cond2, self.cond1, self.pth_power, self.abstract_screen)
        return NOT_PERIODIC if FAIL in fails else NO_OBSTRUCTION

    def to_dict(self, details: bool = False) -> dict:
        out = {"p": self.p, "cond2": self.cond2, "residue": self.residue, "verdict": self.verdict}
        if details:
            out.update(cond1=self.cond1, pth_power=self.pth_power,
                       abstract_screen=self.abstract_screen, reasons=list(self.reasons))
        return out

    def to_json(self, details: bool = False) -> str:
        return json.dumps(self.to_dict(details), separators=(",", ":"))

    def to_text(self) -> str:
        lines = [
            f"p = {self.p}",
            f"condition 2 (A <-> A^-1 mod p, A^{2 * self.p}-1): {self.cond2}",
            f"  residue of Y: {self.residue}",
            f"condition 1 (quotient, mod p, d^{self.p}-d): {self.cond1}",
            f"p-th power test: {self.pth_power}",
            f"abstract screen: {self.abstract_screen}",
        ]
        lines += [f"  {r}" for r in self.reasons]
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines)


def _report(Y: SkeinScalar, p: int, Yq: SkeinScalar | None, pth_power: bool) -> PeriodReport:
    rep = PeriodReport(p, test_condition2(Y, p), rotational_residue(Y, p))
    if rep.cond2 == FAIL:
        rep.reasons.append(f"value is not symmetric under A <-> A^-1 modulo ({p}, A^{2 * p}-1)")
    if rep.cond2 == VACUOUS_S:
        rep.reasons.append(f"quotient ring for condition 2 is zero at p = {p}; condition holds trivially")
    if Yq is not None:
        rep.cond1 = test_condition1(Y, Yq, p)
        if rep.cond1 == FAIL:
            rep.reasons.append(f"value differs from the quotient value to the power {p} modulo ({p}, d^{p}-d)")
    if pth_power:
        rep.pth_power = test_pth_power(Y, p)
        if rep.pth_power == FAIL:
            rep.reasons.append(f"value is not a {p}-th power modulo ({p}, d^{p}-d)")
    return rep


def test_link_period(bracket: SkeinScalar, bracket_quotient: SkeinScalar | None, p: int,
                     pth_power: bool = False) -> PeriodReport:
    """The same two congruences applied to Kauffman bracket values."""
    _check_prime(p)
    return _report(bracket, p, bracket_quotient, pth_power)


def full_report(D: GraphDiagram, p: int, quotient: GraphDiagram | None = None,
                pth_power: bool = False, screen: bool = True, method: str = "auto") -> PeriodReport:
    """Run every applicable test on a sphere diagram.

    A supplied quotient is trusted to be a candidate quotient diagram; it is
    not checked.  Link diagrams use the bracket, graphs the Yamada value.
    """
    from .kauffman import bracket
    from .screen import screen_diagram
    from .yamada import yamada

    _check_prime(p)
    D = D.as_sphere()
    if D.is_link():
        value = bracket
    else:
        def value(x):
            return yamada(x, method=method)
    Yq = value(quotient.as_sphere()) if quotient is not None else None
    rep = _report(value(D), p, Yq, pth_power)
    if screen and not D.is_link():
        s = screen_diagram(D, p)
        rep.abstract_screen = s.status
        if s.status != PASS:
            rep.reasons.append(s.reason)
    return rep
