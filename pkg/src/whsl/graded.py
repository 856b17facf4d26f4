"""Invariants of the graded hypersurface ring k[x,y,z]/(f) read off the
weight type (a,b,c;h): a-invariant, Hilbert coefficients, genus of the
associated curve, geometric genus, degree of the polarizing divisor, and
the necessary-conditions normality filter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import series

__all__ = [
    "WeightedType",
    "NegativeAInvariantError",
    "NegativeCoefficientError",
    "a_invariant",
    "hilbert_coeffs",
    "genus",
    "geometric_genus",
    "deg_D",
    "normality_filter",
]


class NegativeAInvariantError(ValueError):
    """Raised when an operation needs a(R) >= 0 but the type has a(R) < 0."""


class NegativeCoefficientError(ArithmeticError):
    """Raised when the Hilbert expansion produces a negative coefficient,
    i.e. the type cannot come from a graded hypersurface domain."""


@dataclass(frozen=True, order=True)
class WeightedType:
    """Weight type (a,b,c;h): variable degrees a <= b <= c and the degree h
    of the defining polynomial.  gcd(a,b,c) must be 1."""

    a: int
    b: int
    c: int
    h: int

    def __post_init__(self) -> None:
        if min(self.a, self.b, self.c, self.h) < 1:
            raise ValueError(f"all of a, b, c, h must be positive: {self}")
        if not (self.a <= self.b <= self.c):
            raise ValueError(f"weights must satisfy a <= b <= c: {self}")
        if gcd(gcd(self.a, self.b), self.c) != 1:
            raise ValueError(f"gcd(a, b, c) must be 1: {self}")

    @classmethod
    def of(cls, a: int, b: int, c: int, h: int) -> "WeightedType":
        """Build from weights in any order (sorted internally)."""
        x, y, z = sorted((a, b, c))
        return cls(x, y, z, h)

    @property
    def weights(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c};{self.h})"


def a_invariant(wt: WeightedType) -> int:
    """a(R) = h - (a+b+c); may be negative."""
    return wt.h - (wt.a + wt.b + wt.c)


def hilbert_coeffs(wt: WeightedType, n_max: int) -> list[int]:
    """dim R_n for n = 0..n_max, from the rational-function expansion
    (1-t^h)/((1-t^a)(1-t^b)(1-t^c)).

    Entry n equals the lattice-point difference
    #{ai+bj+ck = n} - #{ai+bj+ck = n-h}; tests check that equality against
    a brute-force count.  Raises NegativeCoefficientError if any entry is
    negative (no hypersurface domain has that type).
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    coeffs = series.expand(wt.a, wt.b, wt.c, wt.h, n_max + 1)
    if coeffs.min() < 0:
        n_bad = int(coeffs.argmin())
        raise NegativeCoefficientError(
            f"{wt}: coefficient at degree {n_bad} is {int(coeffs[n_bad])} < 0"
        )
    return [int(x) for x in coeffs]


def genus(wt: WeightedType) -> int:
    """Genus of the polarized curve: g = dim R_alpha.  Needs a(R) >= 0."""
    alpha = a_invariant(wt)
    if alpha < 0:
        raise NegativeAInvariantError(f"{wt} has a(R) = {alpha} < 0")
    return hilbert_coeffs(wt, alpha)[alpha]


def geometric_genus(wt: WeightedType) -> int:
    """p_g(R) = sum of dim R_n for 0 <= n <= a(R).  Needs a(R) >= 0."""
    alpha = a_invariant(wt)
    if alpha < 0:
        raise NegativeAInvariantError(f"{wt} has a(R) = {alpha} < 0")
    return sum(hilbert_coeffs(wt, alpha))


def deg_D(wt: WeightedType) -> Fraction:
    """deg D = h/(abc), exactly."""
    return Fraction(wt.h, wt.a * wt.b * wt.c)


def _radical_divides(n: int, h: int) -> bool:
    """True iff every prime dividing n also divides h (no factorization)."""
    while n > 1:
        g = gcd(n, h)
        if g == 1:
            return False
        while n % g == 0:
            n //= g
    return True


def normality_filter(wt: WeightedType, alpha: int) -> tuple[str, ...]:
    """Necessary conditions for a normal hypersurface of this type.

    Returns a tuple of violated-condition tags (empty = pass):

    * ``"(i)"``  - for each weight d, one of h, h-d', h-d'' must be
      divisible by d (d', d'' the other two weights): f must contain a
      monomial x^n, x^n y or x^n z in each variable.
    * ``"(ii)"`` - a prime dividing two of a, b, c must divide h.
    * ``"(iii)"`` - c <= a + b + alpha.

    These are necessary, not sufficient; failures are data, not errors.
    """
    a, b, c, h = wt.a, wt.b, wt.c, wt.h
    if h != a + b + c + alpha:
        raise ValueError(f"h = a+b+c+alpha required: {wt} with alpha={alpha}")
    violations = []
    for d, d1, d2 in ((a, b, c), (b, a, c), (c, a, b)):
        if h % d and (h - d1) % d and (h - d2) % d:
            violations.append("(i)")
            break
    for x, y in ((a, b), (a, c), (b, c)):
        g = gcd(x, y)
        if g > 1 and not _radical_divides(g, h):
            violations.append("(ii)")
            break
    if c > a + b + alpha:
        violations.append("(iii)")
    return tuple(violations)
