"""Finite Blaschke products and B-adic structure.

A product is stored as the multiset of its zeros; the factor for a zero a is
``(a - z)/(1 - conj(a) z)`` and a zero at the origin contributes the factor
``z``.  Factors are deliberately not normalized by the unimodular constant
``|a|/a``: that keeps every coefficient Gaussian-rational, and the product
differs from the classically normalized one only by a unimodular constant,
which changes none of the membership or ideal statements built on it.

The B-adic expansion splits ``f = c0 + B*(c1 + B*(...))`` by reading the
common value of the current remainder on the zero set of B and dividing the
difference by B exactly; it is the workhorse behind both membership
predicates here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, NonDivisibleError, NotExpandableError
from .ring import _EVAL_SLACK, GRat, G_ZERO, Poly, RFunc, VecFn

MAX_EXPANSION_LEVELS = 64


class Blaschke:
    """Finite Blaschke product given by its zero multiset (all |a| < 1)."""

    __slots__ = ("zeros", "_rfunc")

    def __init__(self, zeros):
        zs = tuple(sorted((GRat.parse(z) for z in zeros),
                          key=lambda a: (a.norm_sq(), a.re, a.im)))
        if not zs:
            raise ValueError("a Blaschke product needs at least one zero")
        for a in zs:
            if a.norm_sq() >= 1:
                raise ValueError(f"zero {a} not strictly inside the unit disk")
        object.__setattr__(self, "zeros", zs)
        object.__setattr__(self, "_rfunc", None)

    def __setattr__(self, name, value):
        raise AttributeError("Blaschke is immutable")

    @property
    def degree(self) -> int:
        return len(self.zeros)

    def distinct_zeros(self):
        """Zeros with multiplicities, in canonical order."""
        out = []
        for a in self.zeros:
            if out and out[-1][0] == a:
                out[-1] = (a, out[-1][1] + 1)
            else:
                out.append((a, 1))
        return out

    def __eq__(self, other):
        if not isinstance(other, Blaschke):
            return NotImplemented
        return self.zeros == other.zeros

    def __hash__(self):
        return hash(self.zeros)

    def __repr__(self):
        return f"Blaschke([{', '.join(str(a) for a in self.zeros)}])"

    def to_rfunc(self) -> RFunc:
        cached = self._rfunc
        if cached is None:
            num, den = Poly.one(), Poly.one()
            for a in self.zeros:
                if a.is_zero():
                    num = num * Poly.x()
                else:
                    num = num * Poly([a, GRat(-1)])
                    den = den * Poly([GRat(1), -a.conjugate()])
            cached = RFunc._trusted(num, den)
            object.__setattr__(self, "_rfunc", cached)
        return cached

    def pow_rfunc(self, j: int) -> RFunc:
        return self.to_rfunc() ** j

    def eval(self, z: complex) -> complex:
        """Factor-wise evaluation; |result| <= 1 on the closed disk and
        |result| = 1 on the unit circle, up to float rounding."""
        z = complex(z)
        if abs(z) > 1.0 + _EVAL_SLACK:
            raise DomainError(f"|z| = {abs(z)} outside the closed unit disk")
        acc = 1.0 + 0j
        for a in self.zeros:
            ac = complex(a)
            if ac == 0:
                acc *= z
            else:
                acc *= (ac - z) / (1 - ac.conjugate() * z)
        return acc

    def eval_exact(self, z: GRat) -> GRat:
        acc = GRat(1)
        for a in self.zeros:
            if a.is_zero():
                acc = acc * z
            else:
                acc = acc * (a - z) / (GRat(1) - a.conjugate() * z)
        return acc

    def to_json(self):
        return {"zeros": [a.to_json() for a in self.zeros]}

    @classmethod
    def from_json(cls, obj) -> "Blaschke":
        return cls([GRat.parse(a) for a in obj["zeros"]])


def blaschke_eval(B: Blaschke, z: complex) -> complex:
    return B.eval(z)


def divide_by_blaschke(f: RFunc, B: Blaschke) -> RFunc:
    """Exact quotient f / B; requires f to vanish at every zero of B with at
    least the zero's multiplicity."""
    try:
        return f / B.to_rfunc()
    except NonDivisibleError:
        raise NonDivisibleError(
            f"function does not vanish on the zero set to the required "
            f"multiplicity: zero at {_first_failing_zero(f, B)}") from None


def _first_failing_zero(f: RFunc, B: Blaschke):
    for a, mult in B.distinct_zeros():
        p = f.num
        for _ in range(mult):
            if not p.eval_exact(a).is_zero():
                return str(a)
            p = p.derivative()
    return "<unknown>"


def divide_vec_by_blaschke(F: VecFn, B: Blaschke) -> VecFn:
    return VecFn([divide_by_blaschke(f, B) for f in F])


@dataclass(frozen=True)
class BAdic:
    """Truncated B-adic expansion: f = sum(c_j B^j, j < level) + B^level * tail."""

    blaschke: Blaschke
    coefficients: tuple
    tail: RFunc

    @property
    def level(self) -> int:
        return len(self.coefficients)

    def reconstruct(self) -> RFunc:
        acc = RFunc.zero()
        for j, c in enumerate(self.coefficients):
            acc = acc + self.blaschke.pow_rfunc(j) * RFunc.constant(c)
        return acc + self.blaschke.pow_rfunc(self.level) * self.tail


def badic_expand(f: RFunc, B: Blaschke, levels: int) -> BAdic:
    """Split off `levels` constant B-adic coefficients.

    At each level the remainder must take a single common value on the zero
    set of B and the recentred remainder must be exactly divisible by B
    (multiplicities included); otherwise the function has no constant
    coefficient at that level and NotExpandableError reports the witnesses.
    """
    if not 1 <= levels <= MAX_EXPANSION_LEVELS:
        raise ValueError(f"levels must be in 1..{MAX_EXPANSION_LEVELS}")
    remainder = f
    coeffs = []
    points = [a for a, _ in B.distinct_zeros()]
    for j in range(levels):
        values = [remainder.eval_exact(a) for a in points]
        first = values[0]
        for a, v in zip(points[1:], values[1:]):
            if v != first:
                raise NotExpandableError(
                    f"no constant coefficient at level {j}: values differ "
                    f"on the zero set ({points[0]} -> {first}, {a} -> {v})",
                    level=j, witness=(points[0], a))
        try:
            remainder = divide_by_blaschke(remainder - RFunc.constant(first), B)
        except NonDivisibleError as exc:
            raise NotExpandableError(
                f"no constant coefficient at level {j}: {exc}", level=j,
                witness=None) from None
        coeffs.append(first)
    return BAdic(B, tuple(coeffs), remainder)


@dataclass(frozen=True)
class CPlusBWitness:
    """Result of the constant-plus-multiple split f = c + B*g."""

    ok: bool
    constant: GRat | None = None
    tail: RFunc | None = None
    failing: tuple | None = None

    def __bool__(self):
        return self.ok


def is_cplusb_member(f: RFunc, B: Blaschke) -> CPlusBWitness:
    """Membership of f in the constants-plus-B-multiples algebra, with an
    exact witness (c, g) such that f = c + B*g."""
    try:
        exp = badic_expand(f, B, 1)
    except NotExpandableError as exc:
        return CPlusBWitness(False, failing=exc.witness)
    return CPlusBWitness(True, constant=exp.coefficients[0], tail=exp.tail)


def badic_constant_vector(F: VecFn, B: Blaschke):
    """Level-0 B-adic coefficient of each entry, or None when some entry has
    no such constant."""
    out = []
    for f in F:
        w = is_cplusb_member(f, B)
        if not w.ok:
            return None
        out.append(w.constant)
    return tuple(out)


def is_hkb_member(f: RFunc, kset, B: Blaschke) -> bool:
    """Exact membership test for the B-adic analogue of derivative-vanishing
    algebras: coefficients at levels in the index set must vanish, levels
    below the maximum may be any constants, and everything from one past the
    maximum is absorbed into the tail."""
    if kset.is_empty():
        return True
    levels = kset.k_p + 1
    try:
        exp = badic_expand(f, B, levels)
    except NotExpandableError:
        return False
    return all(exp.coefficients[j].is_zero() for j in kset)
