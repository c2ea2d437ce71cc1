"""Exact Laurent polynomials in one and two variables.

``LPoly`` holds elements of Q[x, 1/x] (coefficients may also be Gaussian
rationals where a computation needs them); ``LPoly2`` holds elements of
Q[x, 1/x, y, 1/y].  Both are sparse maps from exponents to nonzero exact
coefficients.  These are the coefficient rings of every truncated series in
the package, so all arithmetic here is exact: no floats, no normalization
shortcuts.
"""

from __future__ import annotations

from fractions import Fraction


def _coerce(c):
    """Lift plain ints to Fraction; leave exact scalar types alone."""
    if isinstance(c, int):
        return Fraction(c)
    return c


def _scalar_str(c) -> str:
    return str(c)


class LPoly:
    """Sparse univariate Laurent polynomial: finite map exponent -> coefficient.

    Invariants: no stored zero coefficients; exponents are ints (possibly
    negative).  Instances are treated as immutable.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms:
            self.terms = {e: _coerce(c) for e, c in terms.items() if c != 0}
        else:
            self.terms = {}

    @classmethod
    def const(cls, c):
        return cls({0: c})

    @classmethod
    def var(cls, power: int = 1):
        return cls({power: 1})

    # -- ring operations -------------------------------------------------

    @staticmethod
    def _lift(other):
        if isinstance(other, LPoly):
            return other
        if isinstance(other, (int, Fraction)) or hasattr(other, "re"):
            return LPoly.const(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e, 0) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        r = LPoly.__new__(LPoly)
        r.terms = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = LPoly.__new__(LPoly)
        r.terms = {e: -c for e, c in self.terms.items()}
        return r

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        r = LPoly.__new__(LPoly)
        r.terms = out
        return r

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of an LPoly is not defined here")
        result = LPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- structure queries ----------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def valuation(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self.terms)

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(self.terms)

    def coeff(self, e: int):
        return self.terms.get(e, Fraction(0))

    def is_const(self) -> bool:
        return not self.terms or set(self.terms) == {0}

    def const_value(self):
        if not self.is_const():
            raise ValueError(f"not a constant: {self}")
        return self.terms.get(0, Fraction(0))

    # -- transformations -------------------------------------------------

    def sub_inverse(self):
        """x -> 1/x: negate every exponent."""
        r = LPoly.__new__(LPoly)
        r.terms = {-e: c for e, c in self.terms.items()}
        return r

    def shift(self, k: int):
        """Multiply by x^k."""
        r = LPoly.__new__(LPoly)
        r.terms = {e + k: c for e, c in self.terms.items()}
        return r

    def halve_exponents(self):
        """x^2 -> x; every exponent must be even."""
        for e in self.terms:
            if e % 2:
                raise ValueError(f"odd exponent {e} in halve_exponents")
        r = LPoly.__new__(LPoly)
        r.terms = {e // 2: c for e, c in self.terms.items()}
        return r

    def eval(self, v):
        """Evaluate at a scalar; negative exponents use exact division."""
        acc = Fraction(0)
        for e, c in self.terms.items():
            if e >= 0:
                acc = acc + c * v**e
            else:
                acc = acc + c / v ** (-e)
        return acc

    def divexact(self, other: "LPoly") -> "LPoly":
        """Exact division; raises ValueError if the remainder is nonzero."""
        o = self._lift(other)
        if o is None or o.is_zero():
            raise ZeroDivisionError("division by zero LPoly")
        if self.is_zero():
            return LPoly()
        shift = self.valuation() - o.valuation()
        # Work with ordinary polynomials anchored at exponent 0.
        rem = {e - self.valuation(): c for e, c in self.terms.items()}
        div = {e - o.valuation(): c for e, c in o.terms.items()}
        db = max(div)
        cb = div[db]
        quot = {}
        while rem:
            da = max(rem)
            if da < db:
                raise ValueError("inexact LPoly division")
            q = rem[da] / cb
            quot[da - db] = q
            for e, c in div.items():
                ee = da - db + e
                s = rem.get(ee, 0) - q * c
                if s == 0:
                    rem.pop(ee, None)
                else:
                    rem[ee] = s
        r = LPoly.__new__(LPoly)
        r.terms = {e + shift: c for e, c in quot.items()}
        return r

    def map_coeffs(self, f):
        return LPoly({e: f(c) for e, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            if e == 0:
                parts.append(_scalar_str(c))
            elif e == 1:
                parts.append(f"{_scalar_str(c)}*x")
            else:
                parts.append(f"{_scalar_str(c)}*x^{e}")
        return " + ".join(parts)

    __repr__ = __str__


class LPoly2:
    """Sparse bivariate Laurent polynomial: map (i, j) -> coefficient.

    Exponent pair (i, j) stands for x^i y^j.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms:
            self.terms = {e: _coerce(c) for e, c in terms.items() if c != 0}
        else:
            self.terms = {}

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def x(cls, power: int = 1):
        return cls({(power, 0): 1})

    @classmethod
    def y(cls, power: int = 1):
        return cls({(0, power): 1})

    @classmethod
    def from_x_poly(cls, p: LPoly):
        return cls({(e, 0): c for e, c in p.terms.items()})

    @classmethod
    def from_y_poly(cls, p: LPoly):
        return cls({(0, e): c for e, c in p.terms.items()})

    @staticmethod
    def _lift(other):
        if isinstance(other, LPoly2):
            return other
        if isinstance(other, (int, Fraction)) or hasattr(other, "re"):
            return LPoly2.const(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e, 0) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        r = LPoly2.__new__(LPoly2)
        r.terms = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = LPoly2.__new__(LPoly2)
        r.terms = {e: -c for e, c in self.terms.items()}
        return r

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in o.terms.items():
                e = (i1 + i2, j1 + j2)
                s = out.get(e, 0) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        r = LPoly2.__new__(LPoly2)
        r.terms = out
        return r

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of an LPoly2")
        result = LPoly2.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, i: int, j: int):
        return self.terms.get((i, j), Fraction(0))

    # -- variable-wise structure ----------------------------------------

    def part(self, var: str, mode: str) -> "LPoly2":
        """Keep only terms whose exponent in `var` satisfies `mode`.

        mode is one of 'pos', 'neg', 'nonneg', 'nonpos'.
        """
        axis = 0 if var == "x" else 1
        pred = {
            "pos": lambda e: e > 0,
            "neg": lambda e: e < 0,
            "nonneg": lambda e: e >= 0,
            "nonpos": lambda e: e <= 0,
        }[mode]
        r = LPoly2.__new__(LPoly2)
        r.terms = {e: c for e, c in self.terms.items() if pred(e[axis])}
        return r

    def coeff_of(self, var: str, k: int) -> LPoly:
        """Coefficient of var^k, as an LPoly in the remaining variable."""
        if var == "x":
            return LPoly({j: c for (i, j), c in self.terms.items() if i == k})
        return LPoly({i: c for (i, j), c in self.terms.items() if j == k})

    def sub_inverse(self, var: str) -> "LPoly2":
        r = LPoly2.__new__(LPoly2)
        if var == "x":
            r.terms = {(-i, j): c for (i, j), c in self.terms.items()}
        else:
            r.terms = {(i, -j): c for (i, j), c in self.terms.items()}
        return r

    def swap_vars(self) -> "LPoly2":
        r = LPoly2.__new__(LPoly2)
        r.terms = {(j, i): c for (i, j), c in self.terms.items()}
        return r

    def shift(self, di: int, dj: int) -> "LPoly2":
        r = LPoly2.__new__(LPoly2)
        r.terms = {(i + di, j + dj): c for (i, j), c in self.terms.items()}
        return r

    def support_radius(self) -> int:
        if not self.terms:
            return 0
        return max(max(abs(i), abs(j)) for i, j in self.terms)

    def eval(self, vx, vy):
        acc = Fraction(0)
        for (i, j), c in self.terms.items():
            term = c
            term = term * vx**i if i >= 0 else term / vx ** (-i)
            term = term * vy**j if j >= 0 else term / vy ** (-j)
            acc = acc + term
        return acc

    def is_const(self) -> bool:
        return not self.terms or set(self.terms) == {(0, 0)}

    def const_value(self):
        if not self.is_const():
            raise ValueError(f"not a constant: {self}")
        return self.terms.get((0, 0), Fraction(0))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms):
            c = self.terms[(i, j)]
            body = _scalar_str(c)
            if i:
                body += f"*x^{i}" if i != 1 else "*x"
            if j:
                body += f"*y^{j}" if j != 1 else "*y"
            parts.append(body)
        return " + ".join(parts)

    __repr__ = __str__
