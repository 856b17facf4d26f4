"""Fractional-divisor model D = E + sum (p_i/q_i) P_i on a curve of genus g.

Everything here is degree-level bookkeeping: points are anonymous, only the
multiset of branch pairs (p_i, q_i), the genus and deg E matter.  Linear
equivalence side conditions (say "2E ~ K_X") are carried as free-text
``notes`` and surface through the 'conditional' verdict of
:func:`dims_match`; they are never resolved by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .graded import WeightedType, a_invariant, hilbert_coeffs

__all__ = [
    "FractionalDivisor",
    "deg_total",
    "frac_part",
    "floor_deg",
    "gorenstein_check",
    "duality_check",
    "shifted_floor_identities",
    "h0_bounds",
    "dims_match",
]


@dataclass(frozen=True)
class FractionalDivisor:
    """Genus of the central curve, degree of the integral part E, and the
    branch pairs (p_i, q_i) with 0 < p_i < q_i coprime.

    Branches are kept sorted by (q, p); two divisors are equal iff
    (genus, deg_e, sorted branches) agree.  ``notes`` is annotation only.
    """

    genus: int
    deg_e: int
    branches: tuple[tuple[int, int], ...] = ()
    notes: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise ValueError(f"genus must be >= 0, got {self.genus}")
        branches = tuple((int(p), int(q)) for p, q in self.branches)
        object.__setattr__(self, "branches", tuple(sorted(branches, key=lambda b: (b[1], b[0]))))
        object.__setattr__(self, "notes", tuple(self.notes))
        for p, q in self.branches:
            if not (0 < p < q):
                raise ValueError(f"branch needs 0 < p < q, got ({p},{q})")
            if gcd(p, q) != 1:
                raise ValueError(f"branch pair must be coprime, got ({p},{q})")
        if deg_total(self) <= 0:
            raise ValueError(f"deg D must be positive (ampleness), got {deg_total(self)}")

    @property
    def branch_count(self) -> int:
        return len(self.branches)

    def to_json_dict(self) -> dict:
        out = {
            "genus": self.genus,
            "degE": self.deg_e,
            "branches": [[p, q] for p, q in self.branches],
        }
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "FractionalDivisor":
        return cls(
            genus=int(data["genus"]),
            deg_e=int(data["degE"]),
            branches=tuple((int(p), int(q)) for p, q in data.get("branches", ())),
            notes=tuple(data.get("notes", ())),
        )

    def __str__(self) -> str:
        parts = [f"E({self.deg_e})"] if self.deg_e or not self.branches else []
        parts += [f"{p}/{q}" for p, q in self.branches]
        return f"g={self.genus}, D=" + ("+".join(parts) if parts else "0")


def deg_total(D: FractionalDivisor) -> Fraction:
    """deg D = deg E + sum p_i/q_i, exact."""
    return D.deg_e + sum((Fraction(p, q) for p, q in D.branches), Fraction(0))


def frac_part(D: FractionalDivisor) -> list[Fraction]:
    """Coefficients (q_i - 1)/q_i of the canonically-shifted divisor."""
    return [Fraction(q - 1, q) for _, q in D.branches]


def floor_deg(D: FractionalDivisor, n: int) -> int:
    """deg [nD] = n*deg E + sum floor(n p_i / q_i)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return n * D.deg_e + sum((n * p) // q for p, q in D.branches)


def gorenstein_check(D: FractionalDivisor, alpha: int) -> tuple[bool, str]:
    """Degree-level test of alpha*D ~ K_X + frac(D).

    Passes iff (i) alpha*p_i = -1 (mod q_i) at every branch, so that
    alpha*D - K_X - frac(D) is integral there, and (ii) the degrees match:
    alpha*deg D = (2g-2) + sum (q_i-1)/q_i.
    """
    if alpha == 0:
        ok = not D.branches and D.genus == 1
        return (True, "") if ok else (False, "alpha=0 needs g=1 and no branches")
    for p, q in D.branches:
        if (alpha * p) % q != q - 1:
            return False, f"congruence fails at branch ({p},{q}): {alpha}*{p} != -1 mod {q}"
    lhs = alpha * deg_total(D)
    rhs = (2 * D.genus - 2) + sum(frac_part(D), Fraction(0))
    if lhs != rhs:
        return False, f"degree mismatch: alpha*deg D = {lhs} != {rhs} = 2g-2 + deg frac(D)"
    return True, ""


def duality_check(D: FractionalDivisor, alpha: int) -> bool:
    """deg [nD] + deg [(alpha-n)D] = 2g - 2 for all 0 <= n <= alpha.

    Vacuously true for alpha < 0 (empty range).
    """
    target = 2 * D.genus - 2
    return all(floor_deg(D, n) + floor_deg(D, alpha - n) == target for n in range(alpha + 1))


def shifted_floor_identities(D: FractionalDivisor, alpha: int) -> bool:
    """Floor-degree identities one and alpha+1 steps past alpha:

    deg [(alpha+1)D]  = (2g-2) + deg E + r
    deg [(2alpha+1)D] = 2(2g-2) + deg E + 2*#{p_i >= 2} + #{p_i = 1}
    """
    if alpha < 1:
        raise ValueError(f"alpha must be >= 1, got {alpha}")
    g, r = D.genus, D.branch_count
    first = floor_deg(D, alpha + 1) == (2 * g - 2) + D.deg_e + r
    big = 2 * sum(1 for p, _ in D.branches if p >= 2)
    small = sum(1 for p, _ in D.branches if p == 1)
    second = floor_deg(D, 2 * alpha + 1) == 2 * (2 * g - 2) + D.deg_e + big + small
    return first and second


def h0_bounds(D: FractionalDivisor, n: int) -> tuple[int, int]:
    """Interval [lo, hi] containing h^0(X, O_X(nD)) = h^0([nD]).

    With d = deg [nD]: genus 0 gives the exact value max(d+1, 0).  For
    g >= 1: d < 0 gives [0,0]; d >= 2g-1 is nonspecial, exactly d-g+1;
    in the ambiguous range 0 <= d <= 2g-2 the honest interval is
    [max(d-g+1, 0), d+1], except hi = g when d = 2g-2.  The enumerator
    narrows these further via duality; unresolved widths become the
    'conditional' verdict.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    d = floor_deg(D, n)
    g = D.genus
    if g == 0:
        value = max(d + 1, 0)
        return (value, value)
    if d < 0:
        return (0, 0)
    if d >= 2 * g - 1:
        return (d - g + 1, d - g + 1)
    hi = g if d == 2 * g - 2 else d + 1
    return (max(d - g + 1, 0), hi)


def _refined_intervals(D: FractionalDivisor, alpha: int, n_max: int) -> list[tuple[int, int]] | None:
    """h0 intervals for n = 0..n_max, sharpened by Serre duality.

    For a divisor passing gorenstein_check, [nD] + [(alpha-n)D] = [alpha D]
    ~ K_X as divisors, so Riemann-Roch pins
    h0(n) = deg[nD] - g + 1 + h0(alpha-n) for 0 <= n <= alpha.  Together
    with the exact seed h0(0) = 1 (the zero divisor) this collapses many
    ambiguous intervals.  Returns None when no assignment is possible.
    """
    iv = [h0_bounds(D, n) for n in range(n_max + 1)]
    lo, hi = iv[0]
    iv[0] = (max(lo, 1), min(hi, 1))
    if iv[0][0] > iv[0][1]:
        return None
    g = D.genus
    if alpha <= n_max:
        changed = True
        while changed:
            changed = False
            for n in range(alpha + 1):
                m = alpha - n
                shift = floor_deg(D, n) - g + 1
                lo = max(iv[n][0], shift + iv[m][0])
                hi = min(iv[n][1], shift + iv[m][1])
                if (lo, hi) != iv[n]:
                    if lo > hi:
                        return None
                    iv[n] = (lo, hi)
                    changed = True
    return iv


def _dims_verdict(D: FractionalDivisor, alpha: int, dims: list[int]) -> str:
    iv = _refined_intervals(D, alpha, len(dims) - 1)
    if iv is None:
        return "inconsistent"
    pointwise = True
    for n, dim in enumerate(dims):
        lo, hi = iv[n]
        if not (lo <= dim <= hi):
            return "inconsistent"
        if lo != hi:
            pointwise = False
    return "consistent" if pointwise else "conditional"


def dims_match(D: FractionalDivisor, wt: WeightedType, n_max: int) -> str:
    """Compare dim R_n of the weight type with the divisor's h0 intervals
    for all n <= n_max.

    Returns 'inconsistent' if some coefficient falls outside its interval
    (or duality admits no assignment at all), 'consistent' if every
    interval is a single matching point, and 'conditional' when all match
    but some interval stays ambiguous - the realization then depends on
    linear-equivalence choices of the kind recorded in ``notes``.
    """
    alpha = a_invariant(wt)
    if alpha < 1:
        raise ValueError(f"dims_match needs a(R) >= 1, got {alpha}")
    return _dims_verdict(D, alpha, hilbert_coeffs(wt, n_max))
