"""Exact rational window that traps the positive root w(k), and the finite
search bound on k that follows from it.

With K = k(k+1), a = (ell-1)(ell-2)/(12*ell) and b = 2*a^2/ell, the unique
positive root w(k) of f satisfies

    ell*K + a - b/K  <=  w(k)  <=  ell*K + a.

Since a solution w must be an integer and (ell-3)/12 <= a < (ell-2)/12 for
ell >= 3, the ceiling tightens to w <= ell*K + (ell-3)/12, which in turn
caps K at (ell-1)^2 (ell-2)^2 / (12*ell^2): only finitely many k remain for
each ell.  Everything here is Fraction arithmetic; no rounding anywhere.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

from .equation import EquationInstance, build_f, eval_f, bracket_unique_root


@dataclass(frozen=True)
class BoundData:
    """The window [lower, upper] = [ell*K + a - b/K, ell*K + a] for one (ell, k)."""

    instance: EquationInstance
    a: Fraction
    b: Fraction
    lower: Fraction
    upper: Fraction


def compute_bounds(inst: EquationInstance) -> BoundData:
    """Exact a, b and the root window for this instance."""
    ell, K = inst.ell, inst.K
    a = Fraction((ell - 1) * (ell - 2), 12 * ell)
    b = Fraction((ell - 1) ** 2 * (ell - 2) ** 2, 72 * ell**3)
    assert b == 2 * a * a / ell
    lower = ell * K + a - b / K
    return BoundData(inst, a, b, lower, ell * K + a)


def corollary_K_bound(ell: int) -> Fraction:
    """Largest K = k(k+1) a solution could have: (ell-1)^2 (ell-2)^2 / (12 ell^2).

    This is the sharp form; the weaker (ell-2)^2 / 12 is exposed separately
    as weak_K_bound.  Candidate k are those with k(k+1) <= this value.
    """
    if ell < 3:
        raise ValueError(f"the K bound applies for ell >= 3, got {ell}")
    return Fraction((ell - 1) ** 2 * (ell - 2) ** 2, 12 * ell**2)


def weak_K_bound(ell: int) -> Fraction:
    """The rounder published form (ell-2)^2 / 12; strictly above the sharp bound."""
    if ell < 3:
        raise ValueError(f"the K bound applies for ell >= 3, got {ell}")
    return Fraction((ell - 2) ** 2, 12)


def integer_window_top(bd: BoundData) -> Fraction:
    """Upper limit for integer candidates: min(upper, ell*K + (ell-3)/12).

    The tightening is valid only for ell >= 3 (it needs a < (ell-2)/12);
    for ell in (1, 2) the window is already the single point ell*K.
    """
    ell, K = bd.instance.ell, bd.instance.K
    if ell < 3:
        return bd.upper
    return min(bd.upper, ell * K + Fraction(ell - 3, 12))


def integers_in_window(bd: BoundData) -> list[int]:
    """All integers w with lower <= w <= integer_window_top, ascending."""
    lo = ceil(bd.lower)
    hi = floor(integer_window_top(bd))
    return list(range(lo, hi + 1))


def check_appendix_identity(ell, K) -> bool:
    """Pointwise agreement of the inequality chain behind the lower bound.

    The derivation rewrites (1 - 2a/(ell K))^3 < 8 (1 - a/(ell K)) step by
    step into (ell K + a - b/K)^3 < ell K (ell K + a - b/K)^2 + ell^2 a K^2.
    Each line is evaluated here as an exact predicate at the given rational
    point (a, b derived from ell); True means all lines agree, so in
    particular the first and last are equivalent at this point.

    Accepts any rational ell > 2 and K > 0, where every denominator in the
    chain is nonzero.
    """
    ell = Fraction(ell)
    K = Fraction(K)
    if ell <= 2:
        raise ValueError(f"ell must exceed 2, got {ell}")
    if K <= 0:
        raise ValueError(f"K must be positive, got {K}")
    a = (ell - 1) * (ell - 2) / (12 * ell)
    b = 2 * a * a / ell
    u = a / (ell * K)
    t = a - b / K
    w0 = ell * K + t
    lines = [
        (1 - 2 * u) ** 3 < 8 * (1 - u),
        a * (1 - 2 * u) ** 3 - 8 * a * (1 - u) < 0,
        (1 - 2 * u) ** 2 * (2 * ell * K + a * (1 - 2 * u)) < 2 * ell * K,
        t**2 * (2 * ell * K + t) < b * ell**2 * K,
        t * (2 * ell * K * t + t**2) < b * ell**2 * K,
        t * (ell**2 * K**2 + 2 * ell * K * t + t**2) < ell**2 * a * K**2,
        t * w0**2 < ell**2 * a * K**2,
        w0**3 < ell * K * w0**2 + ell**2 * a * K**2,
    ]
    return all(line == lines[0] for line in lines[1:])


def check_sandwich(inst: EquationInstance) -> bool:
    """Does the unique positive root of f lie inside [lower, upper]?

    The bracket from bracket_unique_root decides it outright when it sits
    entirely inside or outside the window; a bracket straddling an endpoint
    is settled by the exact sign of f there (f is negative strictly below
    the root and positive strictly above it).
    """
    bd = compute_bounds(inst)
    poly = build_f(inst)
    lo, hi = bracket_unique_root(poly)
    # root r satisfies lo < r <= hi (f(lo) < 0 <= f(hi))
    if lo >= bd.lower:
        above_lower = True
    else:
        above_lower = eval_f(poly, bd.lower) <= 0
    if hi <= bd.upper:
        below_upper = True
    else:
        below_upper = eval_f(poly, bd.upper) >= 0
    return above_lower and below_upper
