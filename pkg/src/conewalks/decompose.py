"""Constructive extraction of auxiliary series from the walk oracle.

Nothing here is solved for: every series (the zero-orbit-sum combination A,
its quadrant split into P and the mixed parts, the boundary specializations
R and S, and the left/below split L, B with their decoupled sum/difference
M, N for shifted starting points) is read off the oracle's generating
function by exponent-sign extraction, exactly as the corresponding object
is defined.  Identity checks built on these series therefore test the
stated relations themselves, not our algebra.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .laurent import LPoly, LPoly2
from .series import Series1, Series2
from .walks import (
    DIAGONAL,
    SQUARE,
    Region,
    WalkModel,
    generating_series,
)

THIRD = Fraction(1, 3)


def tmul(s, k: int = 1):
    """Multiply by t^k, keeping the original truncation order."""
    return s.mul_t(k).truncate(s.order)


def kernel_series(steps, order: int) -> Series2:
    """K(x, y) = 1 - t * (step polynomial), as a truncated series."""
    return Series2([LPoly2.const(1), -steps.step_poly()], order)


def quadrant_mirror_combo(Q: Series2) -> Series2:
    """Q(x,y) - xbar^2 Q(xbar,y) - ybar^2 Q(x,ybar)."""
    Qxb = Q.sub_inverse("x").mul_xy(-2, 0)
    Qyb = Q.sub_inverse("y").mul_xy(0, -2)
    return Q - Qxb - Qyb


def x_neg_factor2(series2: Series2) -> Series2:
    """Recover F(x, y) from the identity [x^<] A = xbar * F(xbar, y)."""
    return series2.part("x", "neg").mul_xy(1, 0).sub_inverse("x")


def y_neg_factor2(series2: Series2) -> Series2:
    """Recover G(x, y) from the identity [y^<] A = ybar * G(x-var as y...).

    For [y^<] A = ybar * G(ybar, x) the result is returned with the
    convention G(first, second): we shift, invert y, then swap so the
    y-negative data reads as G(x, y).
    """
    return series2.part("y", "neg").mul_xy(0, 1).sub_inverse("y").swap_vars()


def even_halve(s: Series1) -> Series1:
    """x^2 -> x on a series whose coefficients are even in x."""
    return s.halve_x()


class SquareOriginPipeline:
    """Square lattice, three-quadrant cone, start (0, 0)."""

    steps = SQUARE
    start = (0, 0)

    def __init__(self, order: int):
        self.order = order
        self.model = WalkModel(self.steps, Region.THREE_QUADRANT, self.start)
        self.qmodel = WalkModel(self.steps, Region.QUADRANT, (0, 0))
        self._cache = {}

    def _get(self, name, builder):
        if name not in self._cache:
            self._cache[name] = builder()
        return self._cache[name]

    @property
    def C(self) -> Series2:
        return self._get("C", lambda: generating_series(self.model, self.order))

    @property
    def Q(self) -> Series2:
        return self._get("Q", lambda: generating_series(self.qmodel, self.order))

    @property
    def K(self) -> Series2:
        return self._get("K", lambda: kernel_series(self.steps, self.order))

    @property
    def A(self) -> Series2:
        # C differs from (1/3) * (Q - xbar^2 Q(xbar,y) - ybar^2 Q(x,ybar))
        # by the zero-orbit-sum series A.
        def build():
            combo = quadrant_mirror_combo(self.Q)
            return self.C - combo.map_poly(
                lambda p: p * LPoly2.const(THIRD)
            )

        return self._get("A", build)

    @property
    def P(self) -> Series2:
        return self._get(
            "P", lambda: self.A.part("x", "nonneg").part("y", "nonneg")
        )

    @property
    def M(self) -> Series2:
        return self._get("M", lambda: x_neg_factor2(self.A))

    @property
    def M_x0(self) -> Series1:
        """M(x, 0) as a series in x."""
        return self._get("M_x0", lambda: self.M.coeff_of("y", 0))

    @property
    def M_0y(self) -> Series1:
        """M(0, y) as a series in its single variable."""
        return self._get("M_0y", lambda: self.M.coeff_of("x", 0))

    @property
    def R(self) -> Series1:
        """R(x) = t M(x, 0)."""
        return self._get("R", lambda: tmul(self.M_x0))

    @property
    def S(self) -> Series1:
        """S(x) = t x M(0, x)."""
        return self._get("S", lambda: tmul(self.M_0y.mul_x(1)))

    @property
    def S1(self) -> Series1:
        return self._get("S1", lambda: self.S.coeff_x(1))

    @property
    def S2(self) -> Series1:
        return self._get("S2", lambda: self.S.coeff_x(2))

    @property
    def R1(self) -> Series1:
        return self._get("R1", lambda: self.R.coeff_x(1))

    @property
    def Delta(self) -> Series1:
        """Discriminant (1 - t(x + xbar))^2 - 4 t^2."""

        def build():
            n = self.order
            lin = Series1(
                [LPoly.const(1), -(LPoly.var(1) + LPoly.var(-1))], n
            )
            return lin * lin - Series1([LPoly(), LPoly(), LPoly.const(4)], n)

        return self._get("Delta", build)

    @property
    def sqrt_Delta(self) -> Series1:
        return self._get("sqrtDelta", lambda: self.Delta.sqrt())

    @property
    def P0(self) -> Series1:
        """[x^0] of Delta(x) S(x) S(xbar)."""
        return self._get(
            "P0",
            lambda: (self.Delta * self.S * self.S.sub_inverse_x()).coeff_x(0),
        )

    @property
    def F0(self) -> Series1:
        return self._get(
            "F0", lambda: tmul(self.S1 * (1 + self.S1), 2)
        )

    @property
    def F1(self) -> Series1:
        def build():
            inner = tmul(self.S2) + 3 * tmul(self.R1) - 5 * self.S1
            return tmul(inner) * Fraction(1, 2)

        return self._get("F1", build)

    @property
    def F2(self) -> Series1:
        return self._get("F2", lambda: tmul(1 + 2 * self.S1, 2))


class DiagonalOriginPipeline(SquareOriginPipeline):
    """Diagonal lattice, three-quadrant cone, start (0, 0).

    Same orbit-sum reduction as the square case; the boundary series R, S
    live in the squared variable because x M(x,0) and x M(0,x) are even.
    """

    steps = DIAGONAL
    start = (0, 0)

    @property
    def M10(self) -> Series1:
        """Coefficient of x^1 y^0 in M(x, y)."""
        return self._get("M10", lambda: self.M_x0.coeff_x(1))

    @property
    def R(self) -> Series1:
        """R(x) = t^2 M(sqrt x, 0) / sqrt x, an even-series reindexing."""
        return self._get(
            "R", lambda: tmul(even_halve(self.M_x0.mul_x(-1)), 2)
        )

    @property
    def S(self) -> Series1:
        """S(x) = t sqrt(x) M(0, sqrt x)."""
        return self._get("S", lambda: tmul(even_halve(self.M_0y.mul_x(1))))

    @property
    def R0(self) -> Series1:
        return self._get("R0", lambda: self.R.coeff_x(0))

    @property
    def S_m1(self) -> Series1:
        """S(-1)."""
        return self._get("S_m1", lambda: self.S.eval_x(-1))

    @property
    def Delta(self) -> Series1:
        """1 - 4 t^2 (1 + x)(1 + xbar), in the squared variable."""

        def build():
            n = self.order
            prod = (LPoly.const(1) + LPoly.var(1)) * (
                LPoly.const(1) + LPoly.var(-1)
            )
            return Series1([LPoly.const(1), LPoly(), -4 * prod], n)

        return self._get("Delta", build)

    @property
    def F0(self) -> Series1:
        return self._get("F0", lambda: self.P0 - self.S_m1)


class ShiftedPipelineBase:
    """Common machinery for the shifted starting points.

    The cone series (or its zero-orbit-sum correction A) splits uniquely as
    P + xbar L(xbar, y) + ybar B(x, ybar); the sum and difference
    M = L + B-swapped, N = L - B-swapped decouple the functional equations.
    """

    steps = None
    start = None

    def __init__(self, order: int):
        self.order = order
        self.model = WalkModel(self.steps, Region.THREE_QUADRANT, self.start)
        self.qmodel = WalkModel(self.steps, Region.QUADRANT, (0, 0))
        self._cache = {}

    def _get(self, name, builder):
        if name not in self._cache:
            self._cache[name] = builder()
        return self._cache[name]

    @property
    def C(self) -> Series2:
        return self._get("C", lambda: generating_series(self.model, self.order))

    @property
    def K(self) -> Series2:
        return self._get("K", lambda: kernel_series(self.steps, self.order))

    @property
    def split_source(self) -> Series2:
        """The series that is split into P, L, B (C itself or A)."""
        raise NotImplementedError

    @property
    def P(self) -> Series2:
        return self._get(
            "P",
            lambda: self.split_source.part("x", "nonneg").part("y", "nonneg"),
        )

    @property
    def L(self) -> Series2:
        return self._get("L", lambda: x_neg_factor2(self.split_source))

    @property
    def B(self) -> Series2:
        def build():
            # [y^<] source = ybar B(x, ybar): shift and invert y only.
            return self.split_source.part("y", "neg").mul_xy(0, 1).sub_inverse("y")

        return self._get("B", build)

    @property
    def M(self) -> Series2:
        return self._get("M", lambda: self.L + self.B.swap_vars())

    @property
    def N(self) -> Series2:
        return self._get("N", lambda: self.L - self.B.swap_vars())


class BoundaryPair:
    """R and S specializations of one quadrant-like series (square case)."""

    def __init__(self, W: Series2):
        self.W = W

    @property
    def x0(self) -> Series1:
        return self.W.coeff_of("y", 0)

    @property
    def on_y(self) -> Series1:
        return self.W.coeff_of("x", 0)

    @property
    def R(self) -> Series1:
        return tmul(self.x0)

    @property
    def S(self) -> Series1:
        return tmul(self.on_y.mul_x(1))

    @property
    def S1(self) -> Series1:
        return self.S.coeff_x(1)

    @property
    def S2(self) -> Series1:
        return self.S.coeff_x(2)


class DiagBoundaryPair:
    """R and S in the squared variable (diagonal case)."""

    def __init__(self, W: Series2):
        self.W = W

    @property
    def x0(self) -> Series1:
        return self.W.coeff_of("y", 0)

    @property
    def on_y(self) -> Series1:
        return self.W.coeff_of("x", 0)

    @property
    def R(self) -> Series1:
        return tmul(even_halve(self.x0.mul_x(-1)), 2)

    @property
    def S(self) -> Series1:
        return tmul(even_halve(self.on_y.mul_x(1)))

    @property
    def S1(self) -> Series1:
        return self.S.coeff_x(1)

    @property
    def S_m1(self) -> Series1:
        return self.S.eval_x(-1)


class SquareShiftedPipeline(ShiftedPipelineBase):
    """Square lattice, three-quadrant cone, start (-1, 0)."""

    steps = SQUARE
    start = (-1, 0)

    @property
    def split_source(self) -> Series2:
        return self.C

    @property
    def Mpair(self) -> BoundaryPair:
        return self._get("Mpair", lambda: BoundaryPair(self.M))

    @property
    def Npair(self) -> BoundaryPair:
        return self._get("Npair", lambda: BoundaryPair(self.N))

    @property
    def L_x0(self) -> Series1:
        return self._get("L_x0", lambda: self.L.coeff_of("y", 0))

    @property
    def L_0y(self) -> Series1:
        return self._get("L_0y", lambda: self.L.coeff_of("x", 0))

    @property
    def B_x0(self) -> Series1:
        return self._get("B_x0", lambda: self.B.coeff_of("y", 0))

    @property
    def B_0y(self) -> Series1:
        return self._get("B_0y", lambda: self.B.coeff_of("x", 0))


class DiagonalShiftedPipeline(ShiftedPipelineBase):
    """Diagonal lattice, three-quadrant cone, start (-2, 0)."""

    steps = DIAGONAL
    start = (-2, 0)

    @property
    def Q(self) -> Series2:
        return self._get("Q", lambda: generating_series(self.qmodel, self.order))

    @property
    def A(self) -> Series2:
        def build():
            combo = quadrant_mirror_combo(self.Q)
            return self.C + combo.map_poly(lambda p: p * LPoly2.const(THIRD))

        return self._get("A", build)

    @property
    def split_source(self) -> Series2:
        return self.A

    @property
    def Mpair(self) -> DiagBoundaryPair:
        return self._get("Mpair", lambda: DiagBoundaryPair(self.M))

    @property
    def Npair(self) -> DiagBoundaryPair:
        return self._get("Npair", lambda: DiagBoundaryPair(self.N))

    @property
    def L_x0(self) -> Series1:
        return self._get("L_x0", lambda: self.L.coeff_of("y", 0))

    @property
    def L_0y(self) -> Series1:
        return self._get("L_0y", lambda: self.L.coeff_of("x", 0))

    @property
    def B_x0(self) -> Series1:
        return self._get("B_x0", lambda: self.B.coeff_of("y", 0))

    @property
    def B_0y(self) -> Series1:
        return self._get("B_0y", lambda: self.B.coeff_of("x", 0))


@lru_cache(maxsize=None)
def square_origin(order: int) -> SquareOriginPipeline:
    return SquareOriginPipeline(order)


@lru_cache(maxsize=None)
def diagonal_origin(order: int) -> DiagonalOriginPipeline:
    return DiagonalOriginPipeline(order)


@lru_cache(maxsize=None)
def square_shifted(order: int) -> SquareShiftedPipeline:
    return SquareShiftedPipeline(order)


@lru_cache(maxsize=None)
def diagonal_shifted(order: int) -> DiagonalShiftedPipeline:
    return DiagonalShiftedPipeline(order)
