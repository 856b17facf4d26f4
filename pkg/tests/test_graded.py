import random
from fractions import Fraction

import pytest

from whsl import (
    NegativeAInvariantError,
    NegativeCoefficientError,
    WeightedType,
    a_invariant,
    deg_D,
    genus,
    geometric_genus,
    hilbert_coeffs,
    normality_filter,
)

from oracles import lattice_dims


def test_type_validation():
    with pytest.raises(ValueError):
        WeightedType(2, 1, 3, 7)  # unsorted
    with pytest.raises(ValueError):
        WeightedType(2, 4, 6, 14)  # gcd 2
    with pytest.raises(ValueError):
        WeightedType(0, 1, 1, 3)
    assert WeightedType.of(3, 1, 2, 7) == WeightedType(1, 2, 3, 7)


def test_a_invariant_examples():
    assert a_invariant(WeightedType(1, 2, 3, 7)) == 1
    assert a_invariant(WeightedType(1, 1, 1, 3)) == 0
    assert a_invariant(WeightedType(2, 3, 7, 17)) == 5
    assert a_invariant(WeightedType(1, 2, 3, 5)) == -1


def test_a_invariant_permutation_invariant():
    vals = {a_invariant(WeightedType.of(*perm, 17)) for perm in
            [(2, 3, 7), (3, 2, 7), (7, 3, 2), (2, 7, 3)]}
    assert vals == {5}


def test_hilbert_examples():
    assert hilbert_coeffs(WeightedType(1, 1, 1, 4), 4) == [1, 3, 6, 10, 14]
    assert hilbert_coeffs(WeightedType(1, 1, 2, 6), 2)[2] == 4
    for wt in (WeightedType(1, 2, 3, 7), WeightedType(2, 3, 7, 14)):
        assert hilbert_coeffs(wt, 0) == [1]


def test_hilbert_negative_signal():
    # no monomial of weighted degree 3 exists, so the degree-3 coefficient
    # of (1-t^3)/((1-t^2)(1-t^5)(1-t^9)) is -1
    with pytest.raises(NegativeCoefficientError):
        hilbert_coeffs(WeightedType(2, 5, 9, 3), 3)


def test_hilbert_matches_lattice_oracle_sample():
    rng = random.Random(7)
    checked = 0
    while checked < 12:
        a, b, c = sorted(rng.randint(1, 30) for _ in range(3))
        h = rng.randint(1, 120)
        try:
            wt = WeightedType(a, b, c, h)
        except ValueError:
            continue
        expect = lattice_dims(a, b, c, h, 200)
        if min(expect) < 0:
            with pytest.raises(NegativeCoefficientError):
                hilbert_coeffs(wt, 200)
        else:
            assert hilbert_coeffs(wt, 200) == expect
        checked += 1


def test_genus_examples():
    assert genus(WeightedType(1, 1, 1, 4)) == 3
    assert genus(WeightedType(1, 1, 1, 5)) == 6
    assert genus(WeightedType(4, 5, 5, 20)) == 0
    with pytest.raises(NegativeAInvariantError):
        genus(WeightedType(1, 2, 3, 5))


def test_geometric_genus_examples():
    assert geometric_genus(WeightedType(8, 9, 12, 36)) == 1
    assert geometric_genus(WeightedType(1, 1, 2, 4)) == 1  # alpha = 0
    assert geometric_genus(WeightedType(1, 1, 1, 5)) == 10
    with pytest.raises(NegativeAInvariantError):
        geometric_genus(WeightedType(1, 2, 3, 5))


def test_deg_d_examples():
    assert deg_D(WeightedType(3, 4, 5, 13)) == Fraction(13, 60)
    assert deg_D(WeightedType(1, 1, 1, 3)) == Fraction(3)
    assert deg_D(WeightedType(8, 10, 15, 40)) == Fraction(1, 30)


def test_deg_d_alpha_identity():
    for wt in (WeightedType(1, 2, 3, 7), WeightedType(8, 9, 12, 36), WeightedType(2, 3, 7, 17)):
        a, b, c = wt.a, wt.b, wt.c
        alpha = a_invariant(wt)
        assert deg_D(wt) == (
            Fraction(alpha, a * b * c)
            + Fraction(1, a * b)
            + Fraction(1, a * c)
            + Fraction(1, b * c)
        )


def test_normality_examples():
    assert normality_filter(WeightedType(2, 2, 3, 8), 1) == ()
    assert "(ii)" in normality_filter(WeightedType(2, 4, 5, 13), 2)
    assert "(iii)" in normality_filter(WeightedType(1, 1, 9, 12), 1)
    assert normality_filter(WeightedType(1, 1, 4, 10), 4)  # 4-A-4's printed type fails
    with pytest.raises(ValueError):
        normality_filter(WeightedType(1, 2, 3, 7), 2)  # h != a+b+c+alpha


def test_asymptotic_degree_small_types():
    # partial sums of dim R_n grow like deg D * N^2/2
    for wt in (WeightedType(1, 2, 3, 7), WeightedType(2, 2, 3, 8)):
        n = 2000 * wt.a * wt.b * wt.c
        total = sum(hilbert_coeffs(wt, n))
        ratio = Fraction(total, n * n // 2)
        rel = abs(ratio - deg_D(wt)) / deg_D(wt)
        assert rel < Fraction(2, 100)
