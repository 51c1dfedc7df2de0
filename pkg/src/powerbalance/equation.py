"""The balanced power-sum equation and its polynomial form.

The equation asks for k+1 consecutive ell-th powers summing to the next k:

    n^ell + (n+1)^ell + ... + (n+k)^ell  =  (n+k+1)^ell + ... + (n+2k)^ell.

Substituting the center w = n+k and moving everything to one side turns it
into a one-variable polynomial condition f(k, w) = 0:

    f(k, w) = w^ell   - 2 * sum_{m odd} C(ell, m) w^(ell-m)   S_m(k)   (ell odd)
    f(k, w) = w^(ell-1) - 2 * sum_{m odd} C(ell, m) w^(ell-m-1) S_m(k)   (ell even)

where S_m(k) is the m-th power sum; for even ell the shared factor w has
been divided out.  The coefficient sequence has exactly one sign change, so
by Descartes' rule of signs there is at most one positive root per (ell, k).
For ell = 1 and ell = 2 that root is w = k(k+1) resp. w = 2k(k+1), giving
the classical solution families; this module generates and verifies them.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .powersum import powersum_batch

# Width below which root brackets stop shrinking.  The decision procedure
# never consumes brackets (it enumerates integers in exact windows); they
# exist as uniqueness evidence, so any fixed tolerance serves.
BRACKET_TOLERANCE = Fraction(1, 2**20)


@dataclass(frozen=True)
class EquationInstance:
    """Exponent ell >= 1 and block half-length k >= 1."""

    ell: int
    k: int

    def __post_init__(self):
        if self.ell < 1:
            raise ValueError(f"ell must be >= 1, got {self.ell}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")

    @property
    def K(self) -> int:
        """k(k+1); always even, at least 2."""
        return self.k * (self.k + 1)


@dataclass(frozen=True)
class FPolynomial:
    """f(k, w) as a sparse coefficient list, descending exponents.

    Leading coefficient is +1; all the others are negative, so the sign
    sequence changes exactly once.
    """

    instance: EquationInstance
    coefficients: tuple[tuple[int, int], ...]


def build_f(inst: EquationInstance) -> FPolynomial:
    """Assemble the exact coefficients of f(k, w)."""
    ell, k = inst.ell, inst.k
    sums = powersum_batch(k, ell, odd_only=True)
    shift = 0 if ell % 2 == 1 else 1
    coeffs = [(ell - shift, 1)]
    for m in range(1, ell + 1, 2):
        coeffs.append((ell - m - shift, -2 * comb(ell, m) * sums[m]))
    return FPolynomial(inst, tuple(coeffs))


def eval_f(poly: FPolynomial, w):
    """Evaluate f at w, exactly.  int in, int out; Fraction in, Fraction out."""
    acc = 0
    prev_exp = None
    for exp, c in poly.coefficients:
        if prev_exp is None:
            acc = c
        else:
            acc = acc * w ** (prev_exp - exp) + c
        prev_exp = exp
    if prev_exp:
        acc = acc * w**prev_exp
    return acc


def verify_instance(n: int, k: int, ell: int) -> bool:
    """Check the balanced equation itself at (n, k, ell) by exact summation."""
    if n < 1 or k < 1 or ell < 1:
        raise ValueError("n, k and ell must all be >= 1")
    left = sum((n + j) ** ell for j in range(k + 1))
    right = sum((n + j) ** ell for j in range(k + 1, 2 * k + 1))
    return left == right


def sign_changes(poly: FPolynomial) -> int:
    """Sign changes in the nonzero coefficients, by descending exponent."""
    signs = [1 if c > 0 else -1 for _, c in poly.coefficients if c != 0]
    if not signs:
        raise ValueError("zero polynomial has no sign sequence")
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def bracket_unique_root(poly: FPolynomial) -> tuple[Fraction, Fraction]:
    """Bracket the unique positive root: f(lo) < 0 <= f(hi), hi - lo tiny.

    Doubles an upper bound until f turns nonnegative, then bisects down to
    BRACKET_TOLERANCE.  Requires the single-sign-change shape (f negative
    at 0, positive for large w), which every build_f output has.
    """
    if sign_changes(poly) != 1:
        raise ValueError("bracketing requires exactly one coefficient sign change")
    lo = Fraction(0)
    if eval_f(poly, lo) >= 0:
        raise ValueError("f(0) must be negative to bracket a positive root")
    hi = Fraction(1)
    while eval_f(poly, hi) < 0:
        hi *= 2
    while hi - lo > BRACKET_TOLERANCE:
        mid = (lo + hi) / 2
        if eval_f(poly, mid) < 0:
            lo = mid
        else:
            hi = mid
    return lo, hi


def solution_family(ell: int, k: int) -> tuple[int, int]:
    """The closed-form solution (n, w) for ell = 1 or 2.

    ell = 1: w = k(k+1), n = k^2;  ell = 2: w = 2k(k+1), n = k(2k+1).
    """
    if ell not in (1, 2):
        raise ValueError(f"closed-form families exist only for ell in (1, 2), got {ell}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    w = ell * k * (k + 1)
    return w - k, w
