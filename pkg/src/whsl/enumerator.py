"""Exhaustive classification of weight types with a given a-invariant.

For alpha >= 1 the search space is finite: ab < 168*alpha (the weakest of
the genus-specific bounds, applied unconditionally) and c <= a+b+alpha.
Candidate types pass the normality filter, then a bounded Egyptian-fraction
search reconstructs every fractional divisor realizing the type; survivors
are cross-checked against the Hilbert series of the type.

alpha <= 0 is a handful of closed-form families handled separately.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .dpd import FractionalDivisor, _dims_verdict, gorenstein_check
from .graded import (
    WeightedType,
    a_invariant,
    deg_D,
    genus,
    geometric_genus,
    hilbert_coeffs,
    normality_filter,
)
from .arith import solve_branch_congruence

__all__ = [
    "ClassificationEntry",
    "FamilyEntry",
    "ParametricFamily",
    "candidate_types",
    "divisor_search",
    "divisor_search_with_verdicts",
    "classify",
    "special_alpha_nonpositive",
    "pg_theorem_check",
    "neighbor_nonvanishing_check",
]

AB_BOUND_FACTOR = 168  # unconditional bound ab < 168*alpha


@dataclass(frozen=True)
class ClassificationEntry:
    """One classified weight type with every divisor realizing it."""

    wt: WeightedType
    alpha: int
    genus: int
    p_g: int
    divisors: tuple[FractionalDivisor, ...]
    verdicts: tuple[str, ...]
    branch_count: int

    def to_json_dict(self) -> dict:
        return {
            "a": self.wt.a,
            "b": self.wt.b,
            "c": self.wt.c,
            "h": self.wt.h,
            "alpha": self.alpha,
            "genus": self.genus,
            "pg": self.p_g,
            "br": self.branch_count,
            "divisors": [
                dict(D.to_json_dict(), verdict=v)
                for D, v in zip(self.divisors, self.verdicts)
            ],
        }


def candidate_types(alpha: int) -> list[WeightedType]:
    """All (a,b,c;h) with a<=b<=c, gcd 1, ab < 168*alpha, c <= a+b+alpha,
    h = a+b+c+alpha, passing the normality filter; sorted lexicographically.

    Types with c < alpha are enumerated too; the c <= a+b+alpha bound alone
    keeps the loop finite.
    """
    if alpha < 1:
        raise ValueError(f"alpha must be >= 1, got {alpha}")
    bound = AB_BOUND_FACTOR * alpha
    out = []
    a = 1
    while a * a < bound:
        b = a
        while a * b < bound:
            gab = gcd(a, b)
            for c in range(b, a + b + alpha + 1):
                if gcd(gab, c) != 1:
                    continue
                h = a + b + c + alpha
                wt = WeightedType(a, b, c, h)
                violations = normality_filter(wt, alpha)
                if not violations:
                    out.append(wt)
            b += 1
        a += 1
    return out


def _smallest_coprime_order(alpha: int) -> int:
    q = 2
    while gcd(q, alpha) != 1:
        q += 1
    return q


def _factorize(n: int) -> list[tuple[int, int]]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def _divisors_of_square_up_to(d: int, limit: int) -> list[int]:
    """Divisors of d^2 that are <= limit, from the factorization of d."""
    divisors = [1]
    for p, e in _factorize(d):
        grown = []
        for base in divisors:
            v = base
            for _ in range(2 * e):
                v *= p
                if v > limit:
                    break
                grown.append(v)
        divisors.extend(grown)
    return divisors


def _two_unit_fractions(s: Fraction, q_min: int, alpha: int) -> list[tuple[int, int]]:
    """All pairs q_min <= q1 <= q2, coprime to alpha, with 1/q1 + 1/q2 = s.

    With s = n/d in lowest terms, (n*q1 - d)(n*q2 - d) = d^2, so q1 runs
    over divisors u <= d of d^2 with u = -d (mod n).
    """
    n, d = s.numerator, s.denominator
    if n <= 0:
        return []
    pairs = []
    residue = (-d) % n
    for u in _divisors_of_square_up_to(d, d):
        if u % n != residue:
            continue
        q1, rem1 = divmod(u + d, n)
        v = d * d // u
        q2, rem2 = divmod(v + d, n)
        if rem1 or rem2:
            continue
        if q1 < max(q_min, 2):
            continue
        if gcd(q1, alpha) != 1 or gcd(q2, alpha) != 1:
            continue
        pairs.append((q1, q2))
    return pairs


def _branch_order_multisets(alpha: int, target: Fraction) -> list[tuple[int, ...]]:
    """All ascending tuples (q_1 <= ... <= q_r), q_i >= 2 coprime to alpha,
    with sum (q_i - 1)/q_i = target.

    For fixed r this is sum 1/q_i = r - target, searched with the usual
    unit-fraction bounds 1/q_i <= remaining sum <= (remaining count)/q_i;
    the final two positions are solved exactly instead of scanned.
    """
    if target < 0:
        return []
    results: list[tuple[int, ...]] = []
    if target == 0:
        results.append(())
    q0 = _smallest_coprime_order(alpha)
    r_max = int(target * q0 / (q0 - 1))
    for r in range(1, r_max + 1):
        remaining = r - target
        if remaining <= 0:
            continue
        stack: list[int] = []

        def descend(m: int, s: Fraction, q_min: int) -> None:
            if m == 0:
                if s == 0:
                    results.append(tuple(stack))
                return
            if s <= 0:
                return
            if m == 1:
                if s.numerator == 1 and s.denominator >= max(q_min, 2):
                    q = s.denominator
                    if gcd(q, alpha) == 1:
                        results.append(tuple(stack) + (q,))
                return
            if m == 2:
                for q1, q2 in _two_unit_fractions(s, q_min, alpha):
                    results.append(tuple(stack) + (q1, q2))
                return
            lo = max(q_min, (s.denominator + s.numerator - 1) // s.numerator)
            hi = (m * s.denominator) // s.numerator
            for q in range(lo, hi + 1):
                if gcd(q, alpha) != 1:
                    continue
                stack.append(q)
                descend(m - 1, s - Fraction(1, q), q)
                stack.pop()

        descend(r, remaining, 2)
    return results


def _h0_upper(d: int, g: int) -> int:
    """Upper bound for h^0 of any divisor of degree d on a genus-g curve
    (exact for g = 0; Riemann-Roch above 2g-2; Clifford in between)."""
    if d < 0:
        return 0
    if d >= 2 * g - 1:
        return d - g + 1
    return d // 2 + 1


def _generation_ok(D: FractionalDivisor, wt: WeightedType, dims: list[int]) -> bool:
    """Can a ring with these dimensions and this divisor be generated by
    three elements of degrees a, b, c?

    The subspace of R_n spanned by products of lower-degree elements lies
    in H^0 of the divisor sup_m([mD] + [(n-m)D]) (m with R_m, R_{n-m}
    nonzero), so dim R_n minus an upper bound for that h^0 is a lower
    bound for the number of fresh generators needed in degree n; it may
    not exceed the number of weights equal to n.  Uses the identity
    floor(mp/q) + floor((n-m)p/q) = floor(np/q) - delta with delta = 0
    iff (mp mod q) <= (np mod q), and that beyond twice the last gap of
    the Hilbert function every branch attains delta = 0, where the test
    is implied by the interval check.
    """
    n_max = len(dims) - 1
    last_zero = 0
    for n in range(1, n_max + 1):
        if dims[n] == 0:
            last_zero = n
    q_max = max((q for _, q in D.branches), default=1)
    n_gen = min(n_max, 2 * last_zero + q_max + 2)
    g = D.genus
    weights = wt.weights
    for n in range(1, n_gen + 1):
        if dims[n] == 0:
            continue
        valid = [m for m in range(1, n) if dims[m] > 0 and dims[n - m] > 0]
        if valid:
            d_sup = n * D.deg_e
            for p, q in D.branches:
                c_n = (n * p) % q
                delta = 0 if any((m * p) % q <= c_n for m in valid) else 1
                d_sup += (n * p) // q - delta
            span_hi = _h0_upper(d_sup, g)
        else:
            span_hi = 0
        if dims[n] - span_hi > sum(1 for w in weights if w == n):
            return False
    return True


def divisor_search_with_verdicts(
    wt: WeightedType, n_max: int | None = None
) -> list[tuple[FractionalDivisor, str]]:
    """Complete list of divisors realizing ``wt``, with dims_match verdicts.

    Reconstruction: g = dim R_alpha; the branch orders satisfy
    sum (q_i-1)/q_i = alpha*deg D - (2g-2) with gcd(alpha, q_i) = 1 and
    p_i forced by the branch congruence; deg E = deg D - sum p_i/q_i must
    come out integral.  Survivors must not be 'inconsistent' against the
    type's Hilbert coefficients up to n_max (default 3h), and must admit
    generation by three elements in the weight degrees.
    """
    alpha = a_invariant(wt)
    if alpha < 1:
        raise ValueError(f"divisor_search needs a(R) >= 1, got {alpha} for {wt}")
    if n_max is None:
        n_max = 3 * wt.h
    g = genus(wt)
    degree = deg_D(wt)
    target = alpha * degree - (2 * g - 2)
    found = []
    dims: list[int] | None = None
    for orders in _branch_order_multisets(alpha, target):
        branches = []
        coeff_sum = Fraction(0)
        for q in orders:
            p = solve_branch_congruence(alpha, q)
            assert p is not None  # orders are coprime to alpha by construction
            branches.append((p, q))
            coeff_sum += Fraction(p, q)
        deg_e = degree - coeff_sum
        if deg_e.denominator != 1:
            continue
        D = FractionalDivisor(genus=g, deg_e=int(deg_e), branches=tuple(branches))
        ok, reason = gorenstein_check(D, alpha)
        assert ok, f"search produced non-Gorenstein divisor for {wt}: {reason}"
        if dims is None:
            dims = hilbert_coeffs(wt, n_max)
        verdict = _dims_verdict(D, alpha, dims)
        if verdict == "inconsistent":
            continue
        if not _generation_ok(D, wt, dims):
            continue
        found.append((D, verdict))
    found.sort(key=lambda dv: (dv[0].branch_count, dv[0].branches, dv[0].deg_e))
    return found


def divisor_search(wt: WeightedType, n_max: int | None = None) -> list[FractionalDivisor]:
    """Divisors realizing ``wt`` (see divisor_search_with_verdicts)."""
    return [D for D, _ in divisor_search_with_verdicts(wt, n_max)]


def _entry_for_type(wt: WeightedType, n_max: int | None = None) -> ClassificationEntry | None:
    pairs = divisor_search_with_verdicts(wt, n_max)
    if not pairs:
        return None
    divisors = tuple(D for D, _ in pairs)
    verdicts = tuple(v for _, v in pairs)
    return ClassificationEntry(
        wt=wt,
        alpha=a_invariant(wt),
        genus=genus(wt),
        p_g=geometric_genus(wt),
        divisors=divisors,
        verdicts=verdicts,
        branch_count=divisors[0].branch_count,
    )


def _entry_task(args: tuple[WeightedType, int | None]) -> ClassificationEntry | None:
    return _entry_for_type(*args)


def default_workers() -> int:
    env = os.environ.get("WHSL_WORKERS", "").strip()
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def classify(
    alpha: int, n_max: int | None = None, workers: int = 1
) -> list[ClassificationEntry]:
    """Full classification for a(R) = alpha >= 1: every admissible weight
    type together with all divisors realizing it, in lexicographic order.

    ``workers`` > 1 distributes the per-type divisor search over a process
    pool; results are identical and identically ordered for any worker
    count (the search for each type is independent and deterministic).
    """
    cands = candidate_types(alpha)
    args = [(wt, n_max) for wt in cands]
    if workers > 1 and len(cands) > 1:
        chunk = max(1, len(args) // (workers * 8))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            maybe = list(pool.map(_entry_task, args, chunksize=chunk))
    else:
        maybe = [_entry_task(arg) for arg in args]
    return [entry for entry in maybe if entry is not None]


@dataclass(frozen=True)
class FamilyEntry:
    """A fixed type from the nonpositive a-invariant lists."""

    label: str
    wt: WeightedType
    alpha: int
    divisor: FractionalDivisor

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "a": self.wt.a,
            "b": self.wt.b,
            "c": self.wt.c,
            "h": self.wt.h,
            "alpha": self.alpha,
            "divisor": self.divisor.to_json_dict(),
        }


@dataclass(frozen=True)
class ParametricFamily:
    """An infinite family, given by a type pattern instead of fixed types."""

    label: str
    pattern: str
    alpha_range: str
    caveat: str | None = None

    def to_json_dict(self) -> dict:
        out = {"label": self.label, "pattern": self.pattern, "alpha": self.alpha_range}
        if self.caveat:
            out["caveat"] = self.caveat
        return out


def dn_family_member(n: int) -> FamilyEntry:
    """The (2,n,n+1;2n+2) member (n >= 2) of the alpha = -1 chain family."""
    if n < 2:
        raise ValueError(f"family needs n >= 2, got {n}")
    wt = WeightedType.of(2, n, n + 1, 2 * n + 2)
    D = FractionalDivisor(genus=0, deg_e=-1, branches=((1, 2), (1, 2), (1, n)))
    return FamilyEntry(label=f"D_{n + 2}", wt=wt, alpha=-1, divisor=D)


def special_alpha_nonpositive(alpha: int) -> list[FamilyEntry | ParametricFamily]:
    """Closed-form classification for a(R) <= 0.

    alpha = 0: exactly three types, deg D = 1, 2, 3, all with g = 1 and no
    branches.  alpha = -1: three exceptional types plus the one-parameter
    (2,n,n+1;2n+2) family.  alpha <= -2: the cyclic-quotient family
    uv - w^n, whose type is not uniquely determined by the ring.
    """
    if alpha > 0:
        raise ValueError(f"alpha must be <= 0, got {alpha}")
    if alpha == 0:
        out: list[FamilyEntry | ParametricFamily] = []
        for label, (a, b, c, h) in (
            ("deg D = 1", (1, 2, 3, 6)),
            ("deg D = 2", (1, 1, 2, 4)),
            ("deg D = 3", (1, 1, 1, 3)),
        ):
            wt = WeightedType(a, b, c, h)
            D = FractionalDivisor(genus=1, deg_e=int(deg_D(wt)))
            out.append(FamilyEntry(label=label, wt=wt, alpha=0, divisor=D))
        return out
    if alpha == -1:
        exceptional = []
        for label, (a, b, c, h), orders in (
            ("E_6", (3, 4, 6, 12), (2, 3, 3)),
            ("E_7", (4, 6, 9, 18), (2, 3, 4)),
            ("E_8", (6, 10, 15, 30), (2, 3, 5)),
        ):
            wt = WeightedType(a, b, c, h)
            D = FractionalDivisor(genus=0, deg_e=-1, branches=tuple((1, q) for q in orders))
            exceptional.append(FamilyEntry(label=label, wt=wt, alpha=-1, divisor=D))
        family = ParametricFamily(
            label="D_{n+2}",
            pattern="(2,n,n+1;2n+2), n >= 2",
            alpha_range="-1",
        )
        return [*exceptional, family]
    return [
        ParametricFamily(
            label="cyclic quotient",
            pattern="k[u,v,w]/(uv - w^n)",
            alpha_range=f"{alpha} (any alpha <= -2)",
            caveat="the type (a,b,c;h) is not uniquely determined by the ring",
        )
    ]


PG1_ALPHA7_TYPES = (
    WeightedType(8, 9, 12, 36),
    WeightedType(8, 10, 15, 40),
    WeightedType(8, 10, 25, 50),
)


def _pg1_types(alpha: int, n_max: int | None = None) -> list[ClassificationEntry]:
    """classify(alpha) restricted to p_g = 1, computed with the restriction
    pushed before the divisor search (per-type searches are independent,
    so the slice is identical to filtering the full classification)."""
    entries = []
    for wt in candidate_types(alpha):
        if geometric_genus(wt) != 1:
            continue
        entry = _entry_for_type(wt, n_max)
        if entry is not None:
            entries.append(entry)
    return entries


def pg_theorem_check(alpha_hi: int = 12) -> dict:
    """Verify the p_g = 1 picture: at alpha = 7 exactly three types
    ((8,9,12;36), (8,10,15;40), (8,10,25;50)); empty at alpha = 6 and
    at 8 <= alpha <= alpha_hi.  Returns a report dict with any violations.
    """
    report: dict = {"alpha7": [], "counts": {}, "violations": []}
    for alpha in range(6, alpha_hi + 1):
        slice_entries = _pg1_types(alpha)
        report["counts"][alpha] = len(slice_entries)
        if alpha == 7:
            report["alpha7"] = slice_entries
            got = {e.wt for e in slice_entries}
            expected = set(PG1_ALPHA7_TYPES)
            if got != expected:
                report["violations"].append(
                    f"alpha=7 p_g=1 slice is {sorted(got)}, expected {sorted(expected)}"
                )
        elif slice_entries:
            report["violations"].append(
                f"alpha={alpha}: expected empty p_g=1 slice, got "
                f"{[str(e.wt) for e in slice_entries]}"
            )
    return report


def neighbor_nonvanishing_check(entries: list[ClassificationEntry]) -> list[str]:
    """For each entry check dim R_{alpha-1} > 0 or dim R_{alpha+1} > 0.

    Returns the list of violations (expected empty).
    """
    violations = []
    for entry in entries:
        alpha = entry.alpha
        dims = hilbert_coeffs(entry.wt, alpha + 1)
        below = dims[alpha - 1] if alpha >= 1 else 1
        if below <= 0 and dims[alpha + 1] <= 0:
            violations.append(f"{entry.wt}: dim R_{alpha - 1} = dim R_{alpha + 1} = 0")
    return violations
