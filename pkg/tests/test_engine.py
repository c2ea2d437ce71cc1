"""Algebraic engine: implicit-equation solving and the series catalogs."""

from fractions import Fraction

import pytest

from conewalks import engine
from conewalks.gaussian import I
from conewalks.laurent import LPoly
from conewalks.series import PivotError, Series1


def scalar_coeffs(series, upto):
    return [series.coeff(n).coeff(0) for n in range(upto)]


class TestBaseSeries:
    def test_T_expansion(self):
        assert scalar_coeffs(engine.series_T(10), 10) == [
            1, 0, 4, 0, 36, 0, 396, 0, 4788, 0,
        ]

    def test_Z_expansion(self):
        assert scalar_coeffs(engine.series_Z(10), 10) == [
            1, 0, 2, 0, 16, 0, 166, 0, 1934, 0,
        ]

    def test_Z_squared_is_T(self):
        Z = engine.series_Z(14)
        assert (Z * Z - engine.series_T(14)).is_zero()

    def test_Z_hypergeometric(self):
        assert (engine.series_Z(20) - engine.hypergeometric_Z(20)).is_zero()

    def test_U_expansion_with_x(self):
        U = engine.series_U(10)
        assert U.coeff(0) == LPoly.const(1)
        assert U.coeff(2) == LPoly.const(2)
        assert U.coeff(4) == LPoly.const(16)
        assert U.coeff(6) == LPoly({0: 166, 1: 2})
        assert U.coeff(8) == LPoly({0: 1934, 1: 40, 2: 2})

    def test_V_expansion_with_x(self):
        V = engine.series_V(10)
        assert V.coeff(0).is_zero()
        assert V.coeff(2) == LPoly.const(1)
        assert V.coeff(4) == LPoly({0: 8, 1: 1})
        assert V.coeff(6) == LPoly({0: 82, 1: 16, 2: 2})
        assert V.coeff(8) == LPoly({0: 944, 1: 227, 2: 48, 3: 5})

    def test_U_at_x0_is_Z(self):
        U = engine.series_U(12)
        assert (U.coeff_x(0) - engine.series_Z(12)).is_zero()

    def test_kernel_roots_satisfy_quadratic(self):
        for k in ("base-Y-square", "base-Y-diagonal"):
            assert engine.run_check(k, 14)["verdict"] == "pass"


class TestSolver:
    def test_solve_geometric(self):
        # G = 1 + t G  =>  G = 1/(1-t)
        G = engine.solve_algebraic(lambda g: g - 1 - g.mul_t(1).truncate(g.order), 8, Fraction(1))
        assert scalar_coeffs(G, 8) == [1] * 8

    def test_solve_catalan(self):
        # G = 1 + t G^2
        G = engine.solve_algebraic(
            lambda g: g - 1 - (g * g).mul_t(1).truncate(g.order), 8, Fraction(1)
        )
        assert scalar_coeffs(G, 8) == [1, 1, 2, 5, 14, 42, 132, 429]

    def test_singular_residual_raises(self):
        # residual independent of G at some order cannot be solved
        with pytest.raises(PivotError):
            engine.solve_algebraic(
                lambda g: Series1.t(g.order), 4, Fraction(0)
            )


class TestCatalogs:
    @pytest.mark.parametrize("key", sorted(engine.param_keys()))
    def test_parametrizations(self, key):
        assert engine.run_check(key, 12)["verdict"] == "pass"

    @pytest.mark.parametrize("key", sorted(engine.z_rational_keys()))
    def test_endpoint_rationals(self, key):
        assert engine.run_check(key, 12)["verdict"] == "pass"

    @pytest.mark.parametrize("key", engine.QUARTIC_KEYS)
    def test_quartics(self, key):
        assert engine.run_check(key, 16)["verdict"] == "pass"

    @pytest.mark.parametrize("key", engine.XSERIES_KEYS)
    def test_x_series(self, key):
        assert engine.run_check(key, 10)["verdict"] == "pass"

    def test_report_shape(self):
        r = engine.run_check("base-T", 6)
        assert set(r) == {"id", "anchor", "order_checked", "verdict",
                          "first_failure"}
        assert r["verdict"] == "pass" and r["first_failure"] is None


class TestFrozenEndpointValues:
    # these oracles mix the cone count with a third of the quadrant count,
    # matching the combination the closed expressions describe
    def test_sq_origin_corner(self):
        s = engine.z_rational_oracle("sq-origin-end-0-0", 9)
        assert scalar_coeffs(s, 9) == [
            Fraction(2, 3), 0, Fraction(10, 3), 0, Fraction(86, 3), 0,
            Fraction(884, 3), 0, Fraction(3334),
        ]

    def test_diag_shift_start_point(self):
        s = engine.z_rational_oracle("diag-shift-end-m2-0", 7)
        assert scalar_coeffs(s, 7) == [
            Fraction(2, 3), 0, Fraction(5, 3), 0, Fraction(32, 3), 0,
            Fraction(278, 3),
        ]


class TestXSeriesBranches:
    def test_X0_catalan_square(self):
        X0 = engine.sq_X0(10)
        assert (X0 - engine.sq_X0_catalan(10)).is_zero()

    def test_X1_square_printed_expansion(self):
        X1 = engine.sq_X1(8)
        got = [X1.coeff(n).coeff(0) for n in range(8)]
        assert got == [I, 0, 0, Fraction(2), 0, Fraction(16), -2 * I,
                       Fraction(156)]

    def test_X1_does_not_satisfy_X0_factor(self):
        # the Gaussian branch is a root of the quartic but not of the
        # rational factor that X0 satisfies
        def cleared(X):
            # X * (1 - 2t(X + 1/X)) = X - 2t X^2 - 2t
            t = Series1.t(X.order)
            return X - 2 * (t * X * X).truncate(X.order) - 2 * t

        assert cleared(engine.sq_X0(8)).is_zero()
        assert not cleared(engine.sq_X1(8)).is_zero()

    def test_diag_branch_constants(self):
        assert engine.diag_X0(6).coeff(0).is_zero()
        X0 = engine.diag_shift_X(6, 0)
        assert X0.coeff(0) == LPoly.const(2)
