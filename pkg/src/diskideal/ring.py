"""Exact arithmetic for rational functions on the closed unit disk.

Scalars are Gaussian rationals (complex numbers with `Fraction` real and
imaginary parts), polynomials are coefficient tuples over those scalars, and
`RFunc` is a reduced ratio of two polynomials whose denominator has every
root strictly outside the closed disk.  Such rational functions are the
computational stand-in for bounded analytic functions used throughout the
package: sums, products, divisions by inner factors, and all solver
corrections stay inside the model, and every identity is decided without
rounding.

Floating point enters in exactly two places: single-point evaluation and
grid-based sup-norm estimation.  Both are measurements; every pass/fail
decision in the library is made on the exact side.

Representation invariants:

* ``Poly.coeffs`` never has trailing zeros; the zero polynomial is ``()``.
* ``RFunc`` is stored with ``gcd(num, den) == 1`` and, whenever the
  denominator does not vanish at 0, scaled so ``den(0) == 1``.
* Admissibility (all denominator roots strictly outside the closed disk) is
  verified on construction and after every division; products of admissible
  denominators are admissible, so internal arithmetic skips the recheck.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    DomainError,
    InadmissibleDenominatorError,
    IndeterminateRootError,
    NonDivisibleError,
)

_CIRCLE_TOL = 1e-9
_EVAL_SLACK = 1e-12


def _fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot build an exact rational from {value!r}")


class GRat:
    """Gaussian rational scalar ``re + im*i`` with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _fraction(re))
        object.__setattr__(self, "im", _fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GRat is immutable")

    @classmethod
    def parse(cls, obj) -> "GRat":
        """Accept a GRat, an int/Fraction, a rational string, or a
        ``[re, im]`` pair of rational strings (the wire format)."""
        if isinstance(obj, GRat):
            return obj
        if isinstance(obj, (int, Fraction, str)):
            return cls(obj)
        if isinstance(obj, (list, tuple)) and len(obj) == 2:
            return cls(_fraction(obj[0]), _fraction(obj[1]))
        raise TypeError(f"cannot parse GRat from {obj!r}")

    def to_json(self):
        return [str(self.re), str(self.im)]

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, GRat):
            return other
        if isinstance(other, (int, Fraction)):
            return GRat(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GRat(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GRat(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GRat(self.re * o.re - self.im * o.im,
                    self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm_sq()
        if n == 0:
            raise ZeroDivisionError("division by zero GRat")
        c = o.conjugate()
        return GRat((self.re * c.re - self.im * c.im) / n,
                    (self.re * c.im + self.im * c.re) / n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GRat(-self.re, -self.im)

    def conjugate(self) -> "GRat":
        return GRat(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        """Exact squared modulus ``re^2 + im^2``."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if self.im == 0:
            return f"GRat({str(self.re)!r})"
        return f"GRat({str(self.re)!r}, {str(self.im)!r})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


G_ZERO = GRat(0)
G_ONE = GRat(1)


def _as_grat(value) -> GRat:
    if isinstance(value, GRat):
        return value
    if isinstance(value, (int, Fraction)):
        return GRat(value)
    raise TypeError(f"expected a scalar, got {value!r}")


class Poly:
    """Polynomial over GRat; ``coeffs[k]`` multiplies ``z^k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_as_grat(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def one(cls) -> "Poly":
        return cls((G_ONE,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((G_ZERO, G_ONE))

    @classmethod
    def monomial(cls, k: int, coeff=1) -> "Poly":
        if k < 0:
            raise ValueError("negative exponent")
        return cls((G_ZERO,) * k + (_as_grat(coeff),))

    # -- structure --------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, j: int) -> GRat:
        if j < 0:
            raise ValueError("negative index")
        return self.coeffs[j] if j < len(self.coeffs) else G_ZERO

    def leading(self) -> GRat:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def valuation(self):
        """Smallest k with a nonzero coefficient; None for the zero poly."""
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                return k
        return None

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly([{', '.join(str(c) for c in self.coeffs)}])"

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (GRat, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly.zero()
        out = [G_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    def __rmul__(self, other):
        if isinstance(other, (GRat, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "Poly":
        c = _as_grat(c)
        return Poly(tuple(c * a for a in self.coeffs))

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "Poly"):
        """Exact field long division: (quotient, remainder)."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lead = other.leading()
        if len(rem) - 1 < d:
            return Poly.zero(), self
        quot = [G_ZERO] * (len(rem) - d)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            if c.is_zero():
                continue
            q = c / lead
            quot[k - d] = q
            for j in range(d + 1):
                rem[k - d + j] = rem[k - d + j] - q * other.coeffs[j]
        return Poly(quot), Poly(rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise NonDivisibleError(
                f"polynomial division has remainder of degree {r.degree}")
        return q

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(G_ONE / self.leading())

    def gcd(self, other: "Poly") -> "Poly":
        """Monic gcd over the Gaussian-rational field."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, (a % b).monic() if not (a % b).is_zero() else Poly.zero()
        return a.monic()

    def xgcd(self, other: "Poly"):
        """Return (g, u, v) with u*self + v*other == g, g monic."""
        a, b = self, other
        u0, v0 = Poly.one(), Poly.zero()
        u1, v1 = Poly.zero(), Poly.one()
        while not b.is_zero():
            q, r = a.divmod(b)
            a, b = b, r
            u0, u1 = u1, u0 - q * u1
            v0, v1 = v1, v0 - q * v1
        if a.is_zero():
            return a, u0, v0
        lead = a.leading()
        inv = G_ONE / lead
        return a.scale(inv), u0.scale(inv), v0.scale(inv)

    # -- calculus and transforms ------------------------------------------

    def derivative(self) -> "Poly":
        return Poly(tuple(self.coeffs[k] * k for k in range(1, len(self.coeffs))))

    def shift_up(self, m: int) -> "Poly":
        """Multiply by z^m."""
        if self.is_zero():
            return self
        return Poly((G_ZERO,) * m + self.coeffs)

    def shift_down(self, m: int) -> "Poly":
        """Exact division by z^m."""
        if self.is_zero():
            return self
        v = self.valuation()
        if v < m:
            raise NonDivisibleError(f"z^{m} does not divide (valuation {v})")
        return Poly(self.coeffs[m:])

    def decimate(self, d: int) -> "Poly":
        """Inverse of z -> z^d substitution; requires every nonzero
        coefficient index to be divisible by d."""
        if d == 1:
            return self
        for k, c in enumerate(self.coeffs):
            if not c.is_zero() and k % d:
                raise ValueError(k)
        return Poly(tuple(self.coeffs[k] for k in range(0, len(self.coeffs), d)))

    def inflate(self, d: int) -> "Poly":
        """Substitute z -> z^d."""
        if d == 1 or self.is_zero():
            return self
        out = [G_ZERO] * (self.degree * d + 1)
        for k, c in enumerate(self.coeffs):
            out[k * d] = c
        return Poly(out)

    def reverse(self) -> "Poly":
        """Coefficient reversal z^n * p(1/z); roots become reciprocals."""
        return Poly(tuple(reversed(self.coeffs)))

    def conj_reverse(self) -> "Poly":
        """Conjugate-reversal: coefficients reversed and conjugated."""
        return Poly(tuple(c.conjugate() for c in reversed(self.coeffs)))

    # -- evaluation --------------------------------------------------------

    def eval_exact(self, z: GRat) -> GRat:
        acc = G_ZERO
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def eval_complex(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + complex(c)
        return acc

    def eval_grid(self, points: np.ndarray) -> np.ndarray:
        acc = np.zeros_like(points, dtype=complex)
        for c in reversed(self.coeffs):
            acc = acc * points + complex(c)
        return acc


# -- admissibility -----------------------------------------------------------


def _all_roots_inside_open_disk(q: Poly) -> bool:
    """Exact Schur-Cohn recursion: True iff every root of q has modulus < 1.

    Step: with b0 the constant and bn the leading coefficient, all roots lie
    strictly inside iff |b0| < |bn| and the reduced polynomial
    ``(conj(bn)*q - b0*q~)/z`` (q~ the conjugate-reversal) does too.
    """
    while q.degree > 0:
        b0 = q.coefficient(0)
        bn = q.leading()
        if b0.norm_sq() >= bn.norm_sq():
            return False
        reduced = q.scale(bn.conjugate()) - q.conj_reverse().scale(b0)
        q = reduced.shift_down(1)
    return True


def den_admissible(p: Poly) -> bool:
    """True iff every root of p has modulus > 1 (poles outside the closed
    disk).  Exact Schur-Cohn reflection test, cross-checked against a
    floating root solve; raises IndeterminateRootError when the two disagree
    near the unit circle."""
    if p.is_zero():
        raise ValueError("admissibility is undefined for the zero polynomial")
    if p.degree == 0:
        return True
    if p.coefficient(0).is_zero():
        return False
    exact = _all_roots_inside_open_disk(p.reverse())
    moduli = _float_root_moduli(p)
    float_ok = all(m > 1.0 + _CIRCLE_TOL for m in moduli)
    if float_ok != exact:
        near = [m for m in moduli if abs(m - 1.0) <= _CIRCLE_TOL]
        if near:
            raise IndeterminateRootError(
                f"root modulus {near[0]!r} within {_CIRCLE_TOL} of the unit "
                "circle; instance is ill-posed at this tolerance")
        raise IndeterminateRootError(
            "exact and floating root-location tests disagree "
            f"(moduli {moduli!r}); refusing to certify")
    return exact


def _float_root_moduli(p: Poly):
    cs = [complex(c) for c in reversed(p.coeffs)]
    roots = np.roots(cs)
    return [float(abs(r)) for r in roots]


# -- rational functions -------------------------------------------------------


class RFunc:
    """Reduced rational function with an admissible denominator.

    The public constructor verifies admissibility; internal arithmetic uses
    ``_trusted`` when the result denominator divides a product of admissible
    denominators and therefore needs no recheck.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, Poly) else Poly(num if isinstance(num, (list, tuple)) else (num,))
        den = Poly.one() if den is None else (
            den if isinstance(den, Poly) else Poly(den if isinstance(den, (list, tuple)) else (den,)))
        num, den = _reduce_fraction(num, den)
        if den.degree > 0 and not den_admissible(den):
            raise InadmissibleDenominatorError(
                "denominator has a root in the closed unit disk")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RFunc is immutable")

    @classmethod
    def _trusted(cls, num: Poly, den: Poly) -> "RFunc":
        num, den = _reduce_fraction(num, den)
        obj = object.__new__(cls)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        return obj

    @classmethod
    def zero(cls) -> "RFunc":
        return cls._trusted(Poly.zero(), Poly.one())

    @classmethod
    def one(cls) -> "RFunc":
        return cls._trusted(Poly.one(), Poly.one())

    @classmethod
    def constant(cls, c) -> "RFunc":
        return cls._trusted(Poly((_as_grat(c),)), Poly.one())

    @classmethod
    def monomial(cls, k: int, coeff=1) -> "RFunc":
        return cls._trusted(Poly.monomial(k, coeff), Poly.one())

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def valuation(self):
        """Vanishing order at 0 (None for the zero function)."""
        return self.num.valuation()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GRat)):
            other = RFunc.constant(other)
        if not isinstance(other, RFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.is_polynomial():
            return f"RFunc({self.num!r})"
        return f"RFunc({self.num!r}, {self.den!r})"

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, RFunc):
            return other
        if isinstance(other, (int, Fraction, GRat)):
            return RFunc.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RFunc._trusted(self.num * o.den + o.num * self.den,
                              self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RFunc._trusted(self.num * o.den - o.num * self.den,
                              self.den * o.den)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return RFunc._trusted(-self.num, self.den)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RFunc._trusted(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division inside the model: the reduced result must keep an
        admissible denominator, else NonDivisibleError."""
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by the zero function")
        num, den = _reduce_fraction(self.num * o.den, self.den * o.num)
        if den.degree > 0 and not den_admissible(den):
            raise NonDivisibleError(
                "quotient leaves the model: denominator root in the closed disk")
        return RFunc._trusted(num, den)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int) -> "RFunc":
        if n < 0:
            raise ValueError("negative power")
        return RFunc._trusted(self.num ** n, self.den ** n)

    def mul_monomial(self, k: int) -> "RFunc":
        return RFunc._trusted(self.num.shift_up(k), self.den)

    def div_monomial(self, k: int) -> "RFunc":
        """Exact division by z^k."""
        return RFunc._trusted(self.num.shift_down(k), self.den)

    # -- evaluation ----------------------------------------------------------

    def eval(self, z: complex) -> complex:
        """Floating evaluation on the closed disk (relative error below
        2^-40 for degrees up to 64)."""
        z = complex(z)
        if abs(z) > 1.0 + _EVAL_SLACK:
            raise DomainError(f"|z| = {abs(z)} outside the closed unit disk")
        return self.num.eval_complex(z) / self.den.eval_complex(z)

    def eval_grid(self, points: np.ndarray) -> np.ndarray:
        return self.num.eval_grid(points) / self.den.eval_grid(points)

    def eval_exact(self, z: GRat) -> GRat:
        d = self.den.eval_exact(z)
        if d.is_zero():
            raise ZeroDivisionError("denominator vanishes at the point")
        return self.num.eval_exact(z) / d

    # -- power series ----------------------------------------------------------

    def taylor_prefix(self, order: int):
        """Exact Maclaurin coefficients 0..order (inclusive)."""
        if order < 0:
            raise ValueError("negative order")
        d0 = self.den.coefficient(0)
        if d0.is_zero():
            raise InadmissibleDenominatorError(
                "no Maclaurin series: denominator vanishes at 0")
        out = []
        for j in range(order + 1):
            acc = self.num.coefficient(j)
            for i in range(j):
                acc = acc - out[i] * self.den.coefficient(j - i)
            out.append(acc / d0)
        return out

    def taylor_coeff(self, j: int) -> GRat:
        return self.taylor_prefix(j)[j]

    def to_json(self):
        return {"num": [c.to_json() for c in self.num.coeffs],
                "den": [c.to_json() for c in self.den.coeffs]}

    @classmethod
    def from_json(cls, obj) -> "RFunc":
        num = Poly([GRat.parse(c) for c in obj["num"]])
        den = Poly([GRat.parse(c) for c in obj.get("den", [["1", "0"]])])
        return cls(num, den)


def _reduce_fraction(num: Poly, den: Poly):
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return Poly.zero(), Poly.one()
    g = num.gcd(den)
    if g.degree > 0:
        num = num.exact_div(g)
        den = den.exact_div(g)
    c0 = den.coefficient(0)
    scale = den.leading() if c0.is_zero() else c0
    inv = G_ONE / scale
    return num.scale(inv), den.scale(inv)


# -- vectors -----------------------------------------------------------------


class VecFn:
    """Finite row vector of RFunc entries (the F, G, V of the solvers)."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        es = tuple(RFunc._coerce(e) for e in entries)
        if any(e is None for e in es):
            raise TypeError("VecFn entries must be RFunc or scalars")
        if not es:
            raise ValueError("VecFn needs at least one entry")
        object.__setattr__(self, "entries", es)

    def __setattr__(self, name, value):
        raise AttributeError("VecFn is immutable")

    @classmethod
    def zeros(cls, n: int) -> "VecFn":
        return cls((RFunc.zero(),) * n)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other):
        if not isinstance(other, VecFn):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"VecFn([{', '.join(repr(e) for e in self.entries)}])"

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def _check_len(self, other: "VecFn"):
        if self.n != other.n:
            raise ValueError(f"length mismatch {self.n} != {other.n}")

    def __add__(self, other):
        self._check_len(other)
        return VecFn(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        self._check_len(other)
        return VecFn(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def scale(self, c) -> "VecFn":
        """Entry-wise multiplication by a scalar or an RFunc."""
        f = RFunc._coerce(c)
        if f is None:
            raise TypeError(f"cannot scale by {c!r}")
        return VecFn(tuple(e * f for e in self.entries))

    def inner(self, other: "VecFn") -> RFunc:
        """Exact bilinear pairing F . G^T (no conjugation)."""
        self._check_len(other)
        acc = RFunc.zero()
        for a, b in zip(self.entries, other.entries):
            acc = acc + a * b
        return acc

    def value_at_zero(self):
        return tuple(e.taylor_coeff(0) for e in self.entries)

    def derivative_at_zero(self, k: int):
        """Entry-wise k-th derivative at 0, i.e. k! times the k-th
        Maclaurin coefficient."""
        fact = math.factorial(k)
        return tuple(e.taylor_coeff(k) * fact for e in self.entries)

    def norms_on_grid(self, points: np.ndarray) -> np.ndarray:
        acc = np.zeros(points.shape, dtype=float)
        for e in self.entries:
            vals = e.eval_grid(points)
            acc += vals.real ** 2 + vals.imag ** 2
        return np.sqrt(acc)

    def to_json(self):
        return [e.to_json() for e in self.entries]

    @classmethod
    def from_json(cls, obj) -> "VecFn":
        return cls([RFunc.from_json(e) for e in obj])


# -- grids and norms -----------------------------------------------------------


@dataclass(frozen=True)
class GridSpec:
    """Sample circles for sup-norm lower estimates and hypothesis margins."""

    circles: tuple = (1.0, 1.0 - 2.0 ** -10)
    points_per_circle: int = 4096

    def __post_init__(self):
        if not self.circles:
            raise ValueError("need at least one circle")
        for r in self.circles:
            if not 0.0 < r <= 1.0:
                raise ValueError(f"radius {r} outside (0, 1]")
        if self.points_per_circle < 1:
            raise ValueError("need at least one point per circle")

    @property
    def total_points(self) -> int:
        return len(self.circles) * self.points_per_circle

    def points(self) -> np.ndarray:
        n = self.points_per_circle
        angles = np.exp(2j * np.pi * np.arange(n) / n)
        return np.concatenate([r * angles for r in self.circles])


DEFAULT_GRID = GridSpec()


def sup_norm_estimate(F, grid: GridSpec = DEFAULT_GRID) -> float:
    """Grid maximum of the pointwise l2 norm of F.

    This is a lower estimate of the true sup-norm (it samples finitely many
    boundary points) and is monotone under grid refinement by point-doubling.
    """
    if grid.total_points < 64:
        raise ValueError("grid too coarse: need at least 64 points")
    if isinstance(F, RFunc):
        F = VecFn((F,))
    return float(np.max(F.norms_on_grid(grid.points())))


def taylor_coeff(f: RFunc, j: int) -> GRat:
    """Exact j-th Maclaurin coefficient of f."""
    return f.taylor_coeff(j)


def derivative_at_zero(F: VecFn, k: int):
    """F^(k)(0) as a tuple of exact scalars."""
    return F.derivative_at_zero(k)


def vec_norm_sq(values) -> Fraction:
    """Exact squared l2 norm of a tuple of GRat."""
    acc = Fraction(0)
    for v in values:
        acc += v.norm_sq()
    return acc


def vec_norm_float(values) -> float:
    return math.sqrt(float(vec_norm_sq(values)))
