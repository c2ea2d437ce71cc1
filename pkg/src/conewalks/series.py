"""Truncated power series in t with exact Laurent-polynomial coefficients.

Two series types, mirroring the two coefficient rings:

* ``Series1`` — coefficients in Q[x, 1/x] (``LPoly``).  Houses every
  univariate object: parametrizing series, kernel roots, boundary series.
* ``Series2`` — coefficients in Q[x, 1/x, y, 1/y] (``LPoly2``).  Houses the
  full bivariate walk generating functions.

Every series carries an explicit truncation ``order`` N: coefficients of
t^n are valid for n < N.  Binary operations propagate the minimum of the
two orders; nothing is ever silently re-expanded.  Division requires the
divisor's lowest nonzero coefficient to divide exactly and reports the
order loss caused by stripping a common power of t.
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import LPoly, LPoly2


class OrderError(ValueError):
    """A series operation was asked for more precision than its inputs carry."""


class PivotError(ValueError):
    """Division or solving hit a coefficient that does not determine the result."""


def _min_order(a, b) -> int:
    return min(a.order, b.order)


# ---------------------------------------------------------------------------
# Univariate-coefficient series
# ---------------------------------------------------------------------------


class Series1:
    """Truncated series in t with LPoly coefficients and explicit order."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order: int):
        if order < 0:
            raise OrderError("negative truncation order")
        coeffs = list(coeffs)[:order]
        coeffs += [LPoly()] * (order - len(coeffs))
        self.coeffs = coeffs
        self.order = order

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, order: int):
        return cls([], order)

    @classmethod
    def const(cls, c, order: int):
        return cls([LPoly.const(c)], order)

    @classmethod
    def one(cls, order: int):
        return cls.const(1, order)

    @classmethod
    def t(cls, order: int):
        return cls([LPoly(), LPoly.const(1)], order)

    @classmethod
    def x(cls, order: int, power: int = 1):
        return cls([LPoly.var(power)], order)

    @classmethod
    def from_poly(cls, p: LPoly, order: int):
        return cls([p], order)

    @classmethod
    def from_scalar_coeffs(cls, values, order: int):
        return cls([LPoly.const(v) for v in values], order)

    # -- ring operations -------------------------------------------------

    @staticmethod
    def _lift(other, order):
        if isinstance(other, Series1):
            return other
        if isinstance(other, LPoly):
            return Series1.from_poly(other, order)
        if isinstance(other, (int, Fraction)) or hasattr(other, "re"):
            return Series1.const(other, order)
        return None

    def __add__(self, other):
        o = self._lift(other, self.order)
        if o is None:
            return NotImplemented
        n = _min_order(self, o)
        return Series1([self.coeffs[k] + o.coeffs[k] for k in range(n)], n)

    __radd__ = __add__

    def __neg__(self):
        return Series1([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        o = self._lift(other, self.order)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other, self.order)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other, self.order)
        if o is None:
            return NotImplemented
        n = _min_order(self, o)
        out = [LPoly() for _ in range(n)]
        for i, a in enumerate(self.coeffs[:n]):
            if a.is_zero():
                continue
            for j, b in enumerate(o.coeffs[: n - i]):
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * b
        return Series1(out, n)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = Series1.one(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._lift(other, self.order)
        if o is None:
            return NotImplemented
        return self.order == o.order and self.coeffs == o.coeffs

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def valuation(self):
        """Index of the first nonzero coefficient, or None if zero to order."""
        for n, c in enumerate(self.coeffs):
            if not c.is_zero():
                return n
        return None

    def coeff(self, n: int) -> LPoly:
        if n >= self.order:
            raise OrderError(f"coefficient t^{n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def first_failure(self):
        """(t-power, x-exponent) of the lowest nonzero monomial, or None."""
        for n, c in enumerate(self.coeffs):
            if not c.is_zero():
                return (n, min(c.terms))
        return None

    def truncate(self, order: int) -> "Series1":
        if order > self.order:
            raise OrderError(f"cannot extend order {self.order} to {order}")
        return Series1(self.coeffs[:order], order)

    def agreement(self, other: "Series1"):
        """First (t-power, x-exponent) where the two differ, or None."""
        return (self - other).first_failure()

    # -- t-operations ----------------------------------------------------

    def mul_t(self, k: int) -> "Series1":
        """Multiply by t^k; negative k requires the low coefficients to vanish."""
        if k >= 0:
            return Series1([LPoly()] * k + self.coeffs, self.order + k)
        if any(not c.is_zero() for c in self.coeffs[:-k]):
            raise PivotError(f"series not divisible by t^{-k}")
        return Series1(self.coeffs[-k:], self.order + k)

    def divide(self, other: "Series1") -> "Series1":
        """Exact series division with valuation stripping.

        A common power of t is cancelled first (losing that much order),
        then the divisor's lowest coefficient must divide every step exactly.
        """
        o = self._lift(other, self.order)
        v = o.valuation()
        if v is None:
            raise ZeroDivisionError("division by series that is zero to order")
        n = _min_order(self, o) - v
        if n <= 0:
            raise OrderError("no precision left after stripping divisor valuation")
        if any(not c.is_zero() for c in self.coeffs[:v]):
            raise PivotError("dividend valuation below divisor valuation")
        a = self.coeffs[v : v + n]
        b = o.coeffs[v : v + n]
        lead = b[0]
        out = []
        for k in range(n):
            acc = a[k] if k < len(a) else LPoly()
            for m in range(1, k + 1):
                if m < len(b) and not b[m].is_zero():
                    acc = acc - b[m] * out[k - m]
            out.append(acc.divexact(lead))
        return Series1(out, n)

    def __truediv__(self, other):
        o = self._lift(other, self.order)
        if o is None:
            return NotImplemented
        return self.divide(o)

    def inverse(self) -> "Series1":
        return Series1.one(self.order).divide(self)

    def sqrt(self) -> "Series1":
        """Square root of a series with constant term 1."""
        if self.order == 0:
            return self
        if self.coeffs[0] != LPoly.const(1):
            raise PivotError("series sqrt requires constant term 1")
        out = [LPoly.const(1)]
        half = Fraction(1, 2)
        for n in range(1, self.order):
            acc = self.coeffs[n]
            for k in range(1, n):
                acc = acc - out[k] * out[n - k]
            out.append(acc.map_coeffs(lambda c: c * half))
        return Series1(out, self.order)

    # -- x-operations ----------------------------------------------------

    def map_poly(self, f) -> "Series1":
        return Series1([f(c) for c in self.coeffs], self.order)

    def sub_inverse_x(self) -> "Series1":
        return self.map_poly(lambda p: p.sub_inverse())

    def halve_x(self) -> "Series1":
        """x^2 -> x in every coefficient (even-series reindexing)."""
        return self.map_poly(lambda p: p.halve_exponents())

    def mul_x(self, k: int) -> "Series1":
        return self.map_poly(lambda p: p.shift(k))

    def coeff_x(self, k: int) -> "Series1":
        """Coefficient of x^k, re-embedded at exponent 0."""
        return Series1(
            [LPoly.const(c.coeff(k)) for c in self.coeffs], self.order
        )

    def part_x(self, mode: str) -> "Series1":
        pred = {
            "pos": lambda e: e > 0,
            "neg": lambda e: e < 0,
            "nonneg": lambda e: e >= 0,
            "nonpos": lambda e: e <= 0,
        }[mode]
        return self.map_poly(
            lambda p: LPoly({e: c for e, c in p.terms.items() if pred(e)})
        )

    def eval_x(self, v) -> "Series1":
        return Series1([LPoly.const(c.eval(v)) for c in self.coeffs], self.order)

    def x_to_xt(self) -> "Series1":
        """Substitute x -> x*t; coefficients must be ordinary polynomials."""
        out = [LPoly() for _ in range(self.order)]
        for n, p in enumerate(self.coeffs):
            for e, c in p.terms.items():
                if e < 0:
                    raise ValueError("x -> x*t needs nonnegative exponents")
                if n + e < self.order:
                    out[n + e] = out[n + e] + LPoly({e: c})
        return Series1(out, self.order)

    def compose(self, inner: "Series1") -> "Series1":
        """Substitute `inner` for x.  Needs `inner` nonzero or self polynomial.

        Convergence: each t^n coefficient of self is a Laurent polynomial, so
        only finitely many powers of `inner` enter each output coefficient.
        Negative exponents use the series inverse of `inner`.
        """
        order = _min_order(self, inner)
        result = Series1.zero(order)
        powers = {0: Series1.one(order)}
        inv = None

        def power(e):
            nonlocal inv
            if e in powers:
                return powers[e]
            if e > 0:
                powers[e] = power(e - 1) * inner.truncate(order)
            else:
                if inv is None:
                    inv = inner.truncate(order).inverse()
                powers[e] = power(e + 1) * inv
            return powers[e]

        v = inner.valuation()
        for n, p in enumerate(self.coeffs[:order]):
            for e, c in p.terms.items():
                if v is not None and v > 0 and e > 0 and n + e * v >= order:
                    continue  # contributes beyond truncation
                term = power(e) * Series1.const(c, order)
                result = result + term.mul_t(n).truncate(order)
        return result

    # -- rendering -------------------------------------------------------

    def render(self) -> str:
        """Canonical text: one line per t-power, exponents ascending."""
        lines = []
        for n, p in enumerate(self.coeffs):
            if p.is_zero():
                continue
            body = " + ".join(
                f"{p.terms[e]}" + ("" if e == 0 else f"*x^{e}" if e != 1 else "*x")
                for e in sorted(p.terms)
            )
            lines.append(f"t^{n}: {body}")
        if not lines:
            lines.append("0")
        lines.append(f"O(t^{self.order})")
        return "\n".join(lines)

    def __str__(self):
        return self.render().replace("\n", "; ")

    __repr__ = __str__


# ---------------------------------------------------------------------------
# Bivariate-coefficient series
# ---------------------------------------------------------------------------


class Series2:
    """Truncated series in t with LPoly2 coefficients and explicit order."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order: int):
        if order < 0:
            raise OrderError("negative truncation order")
        coeffs = list(coeffs)[:order]
        coeffs += [LPoly2()] * (order - len(coeffs))
        self.coeffs = coeffs
        self.order = order

    @classmethod
    def zero(cls, order: int):
        return cls([], order)

    @classmethod
    def const(cls, c, order: int):
        return cls([LPoly2.const(c)], order)

    @classmethod
    def one(cls, order: int):
        return cls.const(1, order)

    @classmethod
    def from_poly(cls, p: LPoly2, order: int):
        return cls([p], order)

    @classmethod
    def from_x_series(cls, s: Series1):
        """Embed a univariate series with its variable read as x."""
        return cls([LPoly2.from_x_poly(p) for p in s.coeffs], s.order)

    @classmethod
    def from_y_series(cls, s: Series1):
        """Embed a univariate series with its variable read as y."""
        return cls([LPoly2.from_y_poly(p) for p in s.coeffs], s.order)

    @staticmethod
    def _lift(other, order):
        if isinstance(other, Series2):
            return other
        if isinstance(other, LPoly2):
            return Series2.from_poly(other, order)
        if isinstance(other, (int, Fraction)) or hasattr(other, "re"):
            return Series2.const(other, order)
        return None

    def __add__(self, other):
        o = self._lift(other, self.order)
        if o is None:
            return NotImplemented
        n = _min_order(self, o)
        return Series2([self.coeffs[k] + o.coeffs[k] for k in range(n)], n)

    __radd__ = __add__

    def __neg__(self):
        return Series2([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        o = self._lift(other, self.order)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other, self.order)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other, self.order)
        if o is None:
            return NotImplemented
        n = _min_order(self, o)
        out = [LPoly2() for _ in range(n)]
        for i, a in enumerate(self.coeffs[:n]):
            if a.is_zero():
                continue
            for j, b in enumerate(o.coeffs[: n - i]):
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * b
        return Series2(out, n)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._lift(other, self.order)
        if o is None:
            return NotImplemented
        return self.order == o.order and self.coeffs == o.coeffs

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def coeff(self, n: int) -> LPoly2:
        if n >= self.order:
            raise OrderError(f"coefficient t^{n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def first_failure(self):
        """(t-power, x-exponent, y-exponent) of lowest nonzero monomial."""
        for n, c in enumerate(self.coeffs):
            if not c.is_zero():
                i, j = min(c.terms)
                return (n, i, j)
        return None

    def truncate(self, order: int) -> "Series2":
        if order > self.order:
            raise OrderError(f"cannot extend order {self.order} to {order}")
        return Series2(self.coeffs[:order], order)

    def mul_t(self, k: int) -> "Series2":
        if k >= 0:
            return Series2([LPoly2()] * k + self.coeffs, self.order + k)
        if any(not c.is_zero() for c in self.coeffs[:-k]):
            raise PivotError(f"series not divisible by t^{-k}")
        return Series2(self.coeffs[-k:], self.order + k)

    def inverse(self) -> "Series2":
        """Inverse of a series whose constant coefficient is a nonzero scalar."""
        c0 = self.coeffs[0]
        if not c0.is_const() or c0.is_zero():
            raise PivotError("inverse needs a unit (scalar) constant term")
        lead = c0.const_value()
        out = [LPoly2.const(Fraction(1) / lead)]
        for n in range(1, self.order):
            acc = LPoly2()
            for m in range(1, n + 1):
                if not self.coeffs[m].is_zero():
                    acc = acc + self.coeffs[m] * out[n - m]
            out.append(acc * LPoly2.const(Fraction(-1) / lead))
        return Series2(out, self.order)

    # -- variable operations --------------------------------------------

    def map_poly(self, f) -> "Series2":
        return Series2([f(c) for c in self.coeffs], self.order)

    def part(self, var: str, mode: str) -> "Series2":
        return self.map_poly(lambda p: p.part(var, mode))

    def coeff_of(self, var: str, k: int) -> Series1:
        """Coefficient of var^k: a Series1 in the remaining variable."""
        return Series1([p.coeff_of(var, k) for p in self.coeffs], self.order)

    def sub_inverse(self, var: str) -> "Series2":
        return self.map_poly(lambda p: p.sub_inverse(var))

    def swap_vars(self) -> "Series2":
        return self.map_poly(lambda p: p.swap_vars())

    def mul_xy(self, di: int, dj: int) -> "Series2":
        return self.map_poly(lambda p: p.shift(di, dj))

    def eval_xy(self, vx, vy) -> list:
        """Scalar coefficient list [t^0]...[t^(order-1)] at numeric x, y."""
        return [p.eval(vx, vy) for p in self.coeffs]

    def render(self) -> str:
        """Canonical text: t-power ascending, then (i, j) lexicographic."""
        lines = []
        for n, p in enumerate(self.coeffs):
            if p.is_zero():
                continue
            parts = []
            for (i, j) in sorted(p.terms):
                body = str(p.terms[(i, j)])
                if i:
                    body += f"*x^{i}"
                if j:
                    body += f"*y^{j}"
                parts.append(body)
            lines.append(f"t^{n}: " + " + ".join(parts))
        if not lines:
            lines.append("0")
        lines.append(f"O(t^{self.order})")
        return "\n".join(lines)

    def __str__(self):
        return self.render().replace("\n", "; ")

    __repr__ = __str__
