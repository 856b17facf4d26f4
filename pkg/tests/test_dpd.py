from fractions import Fraction

import pytest

from whsl import (
    FractionalDivisor,
    WeightedType,
    deg_total,
    dims_match,
    duality_check,
    floor_deg,
    frac_part,
    geometric_genus,
    gorenstein_check,
    h0_bounds,
    shifted_floor_identities,
)

D_1A6 = FractionalDivisor(genus=1, deg_e=0, branches=((1, 2), (2, 3)))
D_1B1 = FractionalDivisor(genus=0, deg_e=-2, branches=((1, 2),) * 5)
D_THM28 = FractionalDivisor(genus=0, deg_e=-1, branches=((2, 3), (1, 4), (1, 8)))


def test_validation_and_canonical_form():
    D = FractionalDivisor(genus=1, deg_e=0, branches=((2, 3), (1, 2)))
    assert D.branches == ((1, 2), (2, 3))  # sorted by (q, p)
    assert D == D_1A6
    noted = FractionalDivisor(genus=1, deg_e=0, branches=((1, 2), (2, 3)), notes=("E != 0",))
    assert noted == D_1A6  # notes are not part of identity
    with pytest.raises(ValueError):
        FractionalDivisor(genus=0, deg_e=0, branches=((2, 4),))  # not coprime
    with pytest.raises(ValueError):
        FractionalDivisor(genus=0, deg_e=0, branches=((3, 3),))  # p >= q
    with pytest.raises(ValueError):
        FractionalDivisor(genus=0, deg_e=-1, branches=((1, 2),))  # deg <= 0
    with pytest.raises(ValueError):
        FractionalDivisor(genus=-1, deg_e=1)


def test_deg_total_examples():
    assert deg_total(D_1A6) == Fraction(7, 6)
    assert deg_total(FractionalDivisor(genus=3, deg_e=4)) == 4
    assert deg_total(D_THM28) == Fraction(1, 24)


def test_frac_part_examples():
    assert frac_part(D_1A6) == [Fraction(1, 2), Fraction(2, 3)]
    assert frac_part(FractionalDivisor(genus=3, deg_e=4)) == []
    assert frac_part(FractionalDivisor(genus=0, deg_e=1, branches=((3, 5),))) == [Fraction(4, 5)]


def test_floor_deg_examples():
    assert floor_deg(D_1A6, 1) == 0
    assert floor_deg(D_1A6, 6) == 7
    assert floor_deg(D_1B1, 2) == 1  # r - 4 with r = 5
    with pytest.raises(ValueError):
        floor_deg(D_1A6, -1)


def test_gorenstein_examples():
    assert gorenstein_check(D_1A6, 1) == (True, "")
    assert gorenstein_check(D_THM28, 7)[0]
    # congruence failure: q=3 needs p=2 when alpha=1
    bad = FractionalDivisor(genus=1, deg_e=0, branches=((1, 3),))
    ok, reason = gorenstein_check(bad, 1)
    assert not ok and "congruence" in reason
    # degree failure
    bad2 = FractionalDivisor(genus=2, deg_e=0, branches=((1, 2),))
    ok, reason = gorenstein_check(bad2, 1)
    assert not ok and "degree" in reason


def test_duality_examples():
    assert duality_check(D_1A6, 1)
    assert duality_check(D_THM28, 7)
    assert floor_deg(D_THM28, 3) + floor_deg(D_THM28, 4) == -2


def test_shifted_floor_identities():
    assert shifted_floor_identities(D_1A6, 1)
    assert floor_deg(D_1A6, 2) == 2
    assert shifted_floor_identities(D_THM28, 7)
    assert floor_deg(D_THM28, 8) == 0  # (2g-2) + deg E + r = -2 - 1 + 3
    with pytest.raises(ValueError):
        shifted_floor_identities(D_1A6, 0)


def test_h0_bounds_contract():
    g0 = FractionalDivisor(genus=0, deg_e=-1, branches=((1, 2), (1, 2), (1, 2)))
    assert h0_bounds(g0, 1) == (0, 0)  # d = -1, genus 0: exactly max(d+1, 0)
    assert h0_bounds(g0, 2) == (2, 2)  # d = -2 + 3 = 1
    g1 = FractionalDivisor(genus=1, deg_e=0, branches=((1, 3),))
    assert h0_bounds(g1, 1) == (0, 1)  # d = 0: 1 iff the class is trivial
    g3 = FractionalDivisor(genus=3, deg_e=1, branches=())
    assert h0_bounds(g3, 4) == (2, 3)  # d = 4 = 2g-2
    assert h0_bounds(g3, 5) == (3, 3)  # d = 5 = 2g-1, nonspecial
    with pytest.raises(ValueError):
        h0_bounds(g1, -1)


def test_dims_match_verdicts():
    wt = WeightedType(1, 2, 3, 7)
    assert dims_match(D_1A6, wt, 12) == "consistent"
    d_2c1 = FractionalDivisor(genus=1, deg_e=0, branches=((1, 3),), notes=("E != 0", "2E ~ 0"))
    assert dims_match(d_2c1, WeightedType(2, 3, 7, 14), 14) == "conditional"
    bad = FractionalDivisor(genus=1, deg_e=0, branches=((1, 2), (1, 3)))
    assert dims_match(bad, wt, 6) == "inconsistent"
    with pytest.raises(ValueError):
        dims_match(D_1A6, WeightedType(1, 1, 1, 3), 5)  # alpha = 0


def test_gorenstein_implies_duality_and_coprimality(classified):
    for alpha in (1, 2, 3):
        for entry in classified.get(alpha):
            for D in entry.divisors:
                assert gorenstein_check(D, alpha)[0]
                assert duality_check(D, alpha)
                for _, q in D.branches:
                    from math import gcd
                    assert gcd(alpha, q) == 1


def test_floor_superadditivity(classified):
    for entry in classified.get(1):
        for D in entry.divisors:
            hi = 3 * entry.alpha
            for m in range(hi + 1):
                for n in range(hi + 1):
                    assert floor_deg(D, m + n) >= floor_deg(D, m) + floor_deg(D, n)


def test_g0_h0_point_values_reproduce_pg(classified):
    for alpha in (1, 2):
        for entry in classified.get(alpha):
            if entry.genus != 0:
                continue
            for D in entry.divisors:
                total = sum(h0_bounds(D, n)[0] for n in range(alpha + 1))
                assert h0_bounds(D, 0) == (1, 1)
                assert total == geometric_genus(entry.wt) == entry.p_g


def test_json_roundtrip():
    data = D_THM28.to_json_dict()
    assert data == {"genus": 0, "degE": -1, "branches": [[2, 3], [1, 4], [1, 8]]}
    assert FractionalDivisor.from_json_dict(data) == D_THM28
