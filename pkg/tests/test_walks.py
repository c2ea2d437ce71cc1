"""Oracle tests: exact dynamic-programming walk counts.

Frozen values in this file were computed by brute-force enumeration over
all step sequences (independent of the DP) while the tests were written.
"""

import json
from itertools import product

import pytest

from conewalks.walks import (
    DIAGONAL,
    SQUARE,
    CountTable,
    Region,
    WalkModel,
    count_walks,
    count_walks_upto,
    endpoint_series,
    float_totals,
    generating_series,
    total_count,
)


def brute_force(steps, region, start, n):
    """Direct enumeration of all step sequences, for cross-checking."""
    counts = {}
    for seq in product(steps.steps, repeat=n):
        pos = start
        ok = True
        for dx, dy in seq:
            pos = (pos[0] + dx, pos[1] + dy)
            if not region.contains(*pos):
                ok = False
                break
        if ok:
            counts[pos] = counts.get(pos, 0) + 1
    return counts


SQ3 = WalkModel(SQUARE, Region.THREE_QUADRANT, (0, 0))
DG3 = WalkModel(DIAGONAL, Region.THREE_QUADRANT, (0, 0))
WEDGE = WalkModel(SQUARE, Region.WEDGE135, (0, 0))


class TestAgainstBruteForce:
    @pytest.mark.parametrize("model", [SQ3, DG3, WEDGE,
                                       WalkModel(SQUARE, Region.QUADRANT, (0, 0)),
                                       WalkModel(SQUARE, Region.THREE_QUADRANT, (-1, 0)),
                                       WalkModel(DIAGONAL, Region.THREE_QUADRANT, (-2, 0))])
    def test_small_lengths(self, model):
        for n in range(5):
            expected = brute_force(model.steps, model.region, model.start, n)
            assert count_walks(model, n).counts == expected


class TestFrozenValues:
    def test_square_cone_totals(self):
        assert [total_count(SQ3, n) for n in range(6)] == [
            1, 4, 14, 54, 200, 776,
        ]

    def test_wedge_totals(self):
        assert [total_count(WEDGE, n) for n in range(5)] == [1, 2, 7, 21, 78]

    def test_wedge_origin_returns(self):
        values = [count_walks(WEDGE, 2 * n).get(0, 0) for n in range(5)]
        assert values == [1, 2, 11, 85, 782]

    def test_diag_cone_totals(self):
        # at n=2: 16 free walks minus the 4 whose first step lands in the
        # forbidden quadrant at (-1,-1)
        assert [total_count(DG3, n) for n in range(6)] == [
            1, 3, 12, 41, 164, 590,
        ]

    def test_quadrant_square_totals(self):
        model = WalkModel(SQUARE, Region.QUADRANT, (0, 0))
        assert [total_count(model, n) for n in range(6)] == [
            1, 2, 6, 18, 60, 200,
        ]


class TestStructure:
    def test_symmetry_across_diagonal(self):
        for model in (SQ3, DG3):
            table = count_walks(model, 6)
            for (i, j), c in table.counts.items():
                assert table.get(j, i) == c

    def test_region_nesting(self):
        # quadrant <= wedge <= half-plane <= full-plane, endpointwise
        models = [
            WalkModel(SQUARE, r, (0, 0))
            for r in (Region.QUADRANT, Region.WEDGE135,
                      Region.HALF_PLANE, Region.FULL_PLANE)
        ]
        tables = [count_walks(m, 6) for m in models]
        for small, big in zip(tables, tables[1:]):
            for (i, j), c in small.counts.items():
                assert big.get(i, j) >= c

    def test_diagonal_parity(self):
        table = count_walks(DG3, 5)
        for (i, j) in table.counts:
            # each diagonal step flips both coordinate parities
            assert (5 - i) % 2 == 0 and (5 - j) % 2 == 0

    def test_full_plane_square_binomials(self):
        from conewalks.closedforms import binomial

        model = WalkModel(SQUARE, Region.FULL_PLANE, (0, 0))
        table = count_walks(model, 6)
        assert table.total() == 4**6
        # rotate 45 degrees: components become independent ballot walks
        for (i, j), c in table.counts.items():
            u, v = i + j, i - j
            assert c == binomial(6, (6 + u) // 2) * binomial(6, (6 + v) // 2)

    def test_count_walks_upto_consistent(self):
        upto = count_walks_upto(SQ3, 5)
        for n in range(6):
            assert upto[n].counts == count_walks(SQ3, n).counts


class TestSeriesViews:
    def test_endpoint_series_matches_tables(self):
        s = endpoint_series(SQ3, (0, 0), 8)
        for n in range(8):
            assert s.coeff(n).coeff(0) == count_walks(SQ3, n).get(0, 0)

    def test_endpoint_outside_region(self):
        with pytest.raises(ValueError):
            endpoint_series(SQ3, (-1, -1), 4)

    def test_generating_series_totals(self):
        g = generating_series(SQ3, 6)
        for n in range(6):
            assert sum(g.coeff(n).terms.values()) == total_count(SQ3, n)

    def test_json_roundtrip(self):
        table = count_walks(SQ3, 4)
        blob = table.to_json_str()
        back = CountTable.from_json(json.loads(blob))
        assert back.counts == table.counts and back.n == table.n

    def test_float_totals_tracks_exact(self):
        exact = [total_count(SQ3, n) for n in range(12)]
        approx = float_totals(SQ3, 11)
        for e, a in zip(exact, approx):
            assert abs(a - e) <= 1e-9 * max(e, 1)
