"""Closed counting formulas against the exact DP oracle."""

from fractions import Fraction

import pytest

from conewalks import closedforms as cf
from conewalks.walks import (
    DIAGONAL,
    SQUARE,
    Region,
    WalkModel,
    count_walks_upto,
)

LATTICES = {"square": SQUARE, "diagonal": DIAGONAL}
REGIONS = {"three-quadrant": Region.THREE_QUADRANT, "wedge135": Region.WEDGE135}


def test_rising_factorial():
    assert cf.rising_factorial(3, 4) == 3 * 4 * 5 * 6
    assert cf.rising_factorial(Fraction(1, 2), 2) == Fraction(3, 4)
    assert cf.rising_factorial(5, 0) == 1
    with pytest.raises(ValueError):
        cf.rising_factorial(1, -1)


def test_binomial():
    assert [cf.binomial(5, k) for k in range(6)] == [1, 5, 10, 10, 5, 1]
    assert cf.binomial(5, -1) == 0
    assert cf.binomial(5, 6) == 0
    assert cf.binomial(5, Fraction(3, 2)) == 0


def test_quadrant_square_against_dp():
    model = WalkModel(SQUARE, Region.QUADRANT, (0, 0))
    tables = count_walks_upto(model, 10)
    for n in range(11):
        for i in range(11):
            for j in range(11):
                assert cf.quadrant_square_count(i, j, n) == tables[n].get(i, j)


def test_quadrant_diag_against_dp():
    model = WalkModel(DIAGONAL, Region.QUADRANT, (0, 0))
    tables = count_walks_upto(model, 10)
    for n in range(11):
        for i in range(11):
            for j in range(11):
                assert cf.quadrant_diag_count(i, j, n) == tables[n].get(i, j)


def test_gessel_small_values():
    assert [cf.gessel_count(n) for n in range(5)] == [1, 2, 11, 85, 782]


def test_gessel_against_dp():
    model = WalkModel(SQUARE, Region.WEDGE135, (0, 0))
    tables = count_walks_upto(model, 20)
    for n in range(11):
        assert cf.gessel_count(n) == tables[2 * n].get(0, 0)


def test_catalog_well_formed():
    cat = cf.catalog()
    assert len(cat) == 11
    for key, entry in cat.items():
        assert entry.key == key
        assert entry.lattice in LATTICES
        assert entry.region in REGIONS
        assert len(entry.start) == 2 and len(entry.end) == 2


@pytest.mark.parametrize("key", sorted(cf.catalog()))
def test_catalog_against_dp(key):
    entry = cf.catalog()[key]
    model = WalkModel(
        LATTICES[entry.lattice], REGIONS[entry.region], entry.start
    )
    tables = count_walks_upto(model, 16)
    for n in range(9):
        assert entry.count(n) == tables[2 * n].get(*entry.end), (key, n)


def test_non_integral_raises():
    entry = cf.catalog()["sq-origin-0-0"]
    broken = cf.ClosedForm(
        key="broken",
        anchor="",
        lattice=entry.lattice,
        region=entry.region,
        start=entry.start,
        end=entry.end,
        terms=(
            cf.HypTerm(
                coeff=Fraction(1, 3),
                poly=(Fraction(1),),
                num=((Fraction(1, 2), 0),),
                den=((Fraction(2), 0),),
            ),
        ),
    )
    with pytest.raises(ArithmeticError):
        broken.count(2)
