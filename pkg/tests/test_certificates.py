"""Machine-checked realizability certificates.

For each weight type below, the polynomial is weighted-homogeneous of
degree h and its Jacobian ideal is zero-dimensional.  Because the
singular locus of a weighted-homogeneous hypersurface is a cone, a
zero-dimensional Jacobian ideal means the origin is the only
singularity, so k[x,y,z]/(f) is a normal 2-dimensional graded
hypersurface domain of exactly the stated type.

The first group certifies every type the enumerator emits that is absent
from the published case lists (the source of the intentional criterion-1
failures); the second certifies the genus-1 a-invariant-6 block, where
the published count table undercounts its own case list.
"""

from __future__ import annotations

import pytest

sympy = pytest.importorskip("sympy")

from whsl import WeightedType, a_invariant, divisor_search

X, Y, Z = sympy.symbols("x y z")

# types enumerated but absent from the published case lists
UNLISTED = {
    (4, 10, 13, 30): X * Z**2 + X**5 * Y + Y**3,
    (2, 3, 9, 18): Z**2 + Y**6 + X**9,
    (2, 5, 11, 22): Z**2 + X**11 + X * Y**4,
    (5, 6, 9, 24): Y**4 + Y * Z**2 + X**3 * Z,
    (1, 3, 8, 17): X**17 + Y**3 * Z + X * Z**2,
    (1, 6, 11, 23): X**23 + Y**2 * Z + X * Z**2,
    (2, 3, 4, 14): X**7 + X * Y**4 + Y**2 * Z**2 + X * Z**3,
    (2, 7, 12, 26): X**13 + Y**2 * Z + X * Z**2,
    (3, 4, 6, 18): X**6 + Z**3 + X**2 * Y**3 + Y**3 * Z + X**4 * Z,
    (4, 7, 9, 25): X * Y**3 + Y * Z**2 + Z * X**4,
    (4, 7, 12, 28): X**7 + Y**4 + X * Z**2,
    (4, 7, 16, 32): X**8 + Z**2 + X * Y**4,
    (6, 8, 19, 38): Z**2 + X**5 * Y + X * Y**4,
}

# the published a-invariant-6 case list has nine genus-1 types while the
# published count row says eight; all nine are real
ALPHA6_GENUS1 = {
    (1, 7, 7, 21): X**21 + Y**3 + Z**3,
    (1, 7, 14, 28): X**28 + Y**4 + Z**2,
    (1, 7, 13, 27): X**27 + X * Z**2 + Y**2 * Z,
    (1, 13, 19, 39): Y**3 + X * Z**2 + X**39,
    (1, 13, 20, 40): Z**2 + X * Y**3 + X**40,
    (1, 14, 21, 42): Z**2 + Y**3 + X**42,
    (2, 7, 15, 30): Z**2 + X**15 + X * Y**4,
    (2, 7, 13, 28): X**14 + Y**4 + X * Z**2,
    (3, 7, 8, 24): X**8 + Z**3 + X * Y**3,
}


def weighted_degrees(f, weights) -> set[int]:
    poly = sympy.Poly(f, X, Y, Z)
    return {
        sum(w * e for w, e in zip(weights, monom))
        for monom in poly.monoms()
    }


@pytest.mark.parametrize(
    "typ,f", sorted({**UNLISTED, **ALPHA6_GENUS1}.items()), ids=lambda v: str(v)
)
def test_certificate(typ, f):
    a, b, c, h = typ
    assert weighted_degrees(f, (a, b, c)) == {h}, "not weighted-homogeneous of degree h"
    jac = [sympy.diff(f, v) for v in (X, Y, Z)]
    basis = sympy.groebner(jac, X, Y, Z, order="grevlex")
    assert basis.is_zero_dimensional, "Jacobian ideal is not zero-dimensional"
    wt = WeightedType(a, b, c, h)
    assert a_invariant(wt) in (3, 4, 5, 6)
    assert divisor_search(wt), f"{wt}: certificate exists but enumerator finds no divisor"
