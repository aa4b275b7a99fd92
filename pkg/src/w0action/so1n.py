"""Closed-form answers for so(1,n): the support/parity condition on the
highest weight, the one-dimensionality of the invariant subspace, the sign
of the longest-element action, and the doubled-tableau witness."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rootsys import build_root_system

Q = Fraction


def complex_type_of_so1n(n: int):
    """Complex family/rank of so(n+1), with the special so4 chart for n = 3."""
    if n < 2:
        raise ValueError("so(1,n) requires n >= 2")
    if n == 3:
        return ("D2special", 2)
    if n % 2 == 0:
        return ("B", n // 2)
    return ("D", (n + 1) // 2)


def _normalize(n: int, lam) -> tuple:
    family, rank = complex_type_of_so1n(n)
    sys = build_root_system(family, rank)
    lam = tuple(Fraction(c) for c in lam)
    if len(lam) < sys.ambient_dim:
        lam = lam + (Q(0),) * (sys.ambient_dim - len(lam))
    if len(lam) != sys.ambient_dim:
        raise ValueError(
            f"so(1,{n}): expected at most {sys.ambient_dim} coordinates, got {len(lam)}"
        )
    if not sys.is_integral(lam):
        raise ValueError(f"so(1,{n}): weight {lam} is not integral")
    if not sys.is_dominant(lam):
        raise ValueError(f"so(1,{n}): weight {lam} is not dominant")
    return lam


def check_star(n: int, lam) -> bool:
    """Support/parity condition for a nonzero invariant subspace.

    For n >= 3: lam supported on the first two coordinates, both integers,
    with even sum.  For n = 2: lam = lam_1 e_1 with lam_1 an integer.
    """
    lam = _normalize(n, lam)
    if n == 2:
        return lam[0].denominator == 1
    if any(c != 0 for c in lam[2:]):
        return False
    l1, l2 = lam[0], lam[1]
    if l1.denominator != 1 or l2.denominator != 1:
        return False
    return (l1 + l2) % 2 == 0


def so1n_dim(n: int, lam) -> int:
    """dim of the invariant subspace: 1 if the star condition holds, else 0."""
    return 1 if check_star(n, lam) else 0


def so1n_sign(n: int, lam) -> int:
    """Sign of the longest-element action on the invariant line: (-1)^lam_1."""
    lam = _normalize(n, lam)
    if not check_star(n, lam):
        raise ValueError(
            f"so(1,{n}), lam={lam}: invariant subspace is zero; no sign exists"
        )
    return -1 if int(lam[0]) % 2 else 1


@dataclass(frozen=True)
class DoubledTableau:
    """Half-box counts of the two-row doubled Young tableau witness."""

    a1: Fraction
    a2: Fraction
    a2bar: Fraction
    a1bar: Fraction
    b1: Fraction
    b2: Fraction
    b2bar: Fraction
    b1bar: Fraction

    def as_dict(self):
        return {
            "a1": self.a1,
            "a2": self.a2,
            "a2bar": self.a2bar,
            "a1bar": self.a1bar,
            "b1": self.b1,
            "b2": self.b2,
            "b2bar": self.b2bar,
            "b1bar": self.b1bar,
        }

    def check(self):
        t = self
        if not (0 <= t.a1 <= t.a2 <= t.a2bar <= t.a1bar):
            raise AssertionError("first-row monotonicity violated")
        if not (0 <= t.b1 <= t.b2 <= t.b2bar <= t.b1bar):
            raise AssertionError("second-row monotonicity violated")
        if t.a2 != t.a1 + t.b2bar:
            raise AssertionError("nullity count violated")
        for v in t.as_dict().values():
            if (4 * v).denominator != 1:
                raise AssertionError("parameters must be quarter-integers")


def _check_tableau_pre(l1, l2):
    l1, l2 = Fraction(l1), Fraction(l2)
    if l1.denominator != 1 or l2.denominator != 1:
        raise ValueError("tableau parameters need integer coordinates")
    if not (l1 >= l2 >= 0):
        raise ValueError("need lam_1 >= lam_2 >= 0")
    if (l1 + l2) % 2 != 0:
        raise ValueError("need lam_1 + lam_2 even")
    return l1, l2


def invariant_tableau(l1, l2) -> DoubledTableau:
    """The unique witness tableau parameters for a star weight."""
    l1, l2 = _check_tableau_pre(l1, l2)
    a1 = max(Q(l1 + l2, 4), Q(l1 - l2, 2))
    a2 = Q(l1 + l2, 2)
    b2bar = min(Q(l1 + l2, 4), Q(l2))
    t = DoubledTableau(
        a1=a1,
        a2=a2,
        a2bar=a2,
        a1bar=Q(l1),
        b1=Q(0),
        b2=Q(0),
        b2bar=b2bar,
        b1bar=Q(l2),
    )
    t.check()
    return t


def tableau_unique(l1, l2) -> bool:
    """Brute-force check that the derived constraints admit exactly one
    parameter tuple on the quarter-integer grid, equal to the closed form.

    Constraints: row monotonicity, b1 = b2 = 0, a2bar = a2, the two nullity
    counts, b2bar <= a1, and (b2bar < a1 implies b2bar = lam_2).
    """
    l1, l2 = _check_tableau_pre(l1, l2)
    survivors = []
    quarter = Q(1, 4)
    a1 = Q(0)
    while a1 <= l1:
        a2 = a1
        while a2 <= l1:
            # a2bar = a2 forced; nullity #2 = #2bar forces b2bar, nullity
            # #1 = #1bar then pins the total.
            a2bar = a2
            b2bar = a2 - a1
            if (
                b2bar >= 0
                and b2bar <= l2
                and a2bar <= l1
                and a1 == l1 + l2 - a2bar - b2bar
                and b2bar <= a1
                and (b2bar >= a1 or b2bar == l2)
            ):
                survivors.append(
                    DoubledTableau(a1, a2, a2bar, Q(l1), Q(0), Q(0), b2bar, Q(l2))
                )
            a2 += quarter
        a1 += quarter
    return len(survivors) == 1 and survivors[0] == invariant_tableau(l1, l2)
