"""Exact integer/rational helpers: Hirzebruch-Jung continued fractions and
the branch congruence that fixes local divisor coefficients.

All rationals are `fractions.Fraction` (always in lowest terms, positive
denominator); integers are arbitrary precision.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

__all__ = ["hj_expansion", "cf_evaluate", "solve_branch_congruence"]


def hj_expansion(q: int, p: int) -> list[int]:
    """Negative-regular continued fraction of q/(q-p).

    Returns ``[b_1, ..., b_s]`` with every ``b_j >= 2`` such that
    ``q/(q-p) = b_1 - 1/(b_2 - 1/(...))``.  Requires ``0 < p < q`` and
    ``gcd(p, q) = 1``.
    """
    if not (0 < p < q):
        raise ValueError(f"need 0 < p < q, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise ValueError(f"p and q must be coprime, got p={p}, q={q}")
    # Ceiling-division recurrence on x = num/den, starting at q/(q-p):
    # b = ceil(x), then recurse on 1/(b - x).  Denominators strictly
    # decrease, so this terminates.
    terms = []
    num, den = q, q - p
    while True:
        b = -(-num // den)  # ceil
        terms.append(b)
        # next x = 1/(b - num/den) = den/(b*den - num)
        num, den = den, b * den - num
        if den == 0:
            break
    assert all(b >= 2 for b in terms)
    return terms


def cf_evaluate(terms: list[int]) -> Fraction:
    """Evaluate ``b_1 - 1/(b_2 - 1/(...))`` exactly.

    Inverse oracle for :func:`hj_expansion`; requires a nonempty list with
    every term >= 2, and returns a Fraction >= 1.
    """
    if not terms:
        raise ValueError("empty continued-fraction expansion")
    if any(b < 2 for b in terms):
        raise ValueError(f"all terms must be >= 2, got {terms}")
    value = Fraction(terms[-1])
    for b in reversed(terms[:-1]):
        value = b - 1 / value
    return value


def solve_branch_congruence(alpha: int, q: int) -> int | None:
    """The unique p with 0 < p < q and ``alpha * p = -1 (mod q)``.

    Exists iff gcd(alpha, q) = 1; returns None otherwise.  This is the
    coefficient numerator forced at a branch point of order q when the
    ring has a-invariant ``alpha``.
    """
    if alpha < 1:
        raise ValueError(f"alpha must be >= 1, got {alpha}")
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    if gcd(alpha, q) != 1:
        return None
    p = (-pow(alpha, -1, q)) % q
    # alpha * p = -1 (mod q) forces p invertible mod q, hence 0 < p < q
    # and gcd(p, q) = 1.
    assert 0 < p < q
    return p
