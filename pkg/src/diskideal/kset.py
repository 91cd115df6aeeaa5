"""Derivative-index sets K and when they define an algebra.

The set K of vanishing derivative orders defines an algebra exactly when the
complement of K in the positive integers is closed under addition, i.e. is a
numerical semigroup.  For finite K only sums up to the maximum element
matter, which makes the test decidable.  Infinite K is never stored: it
enters through generators of the complement semigroup, is reduced by the
common divisor d via the substitution w = z^d, and leaves a finite gap set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidKSetError, NotReducibleError
from .ring import RFunc


class KSet:
    """Finite strictly-increasing set of positive derivative indices."""

    __slots__ = ("elements",)

    def __init__(self, elements=()):
        es = tuple(sorted(set(int(e) for e in elements)))
        if es and es[0] < 1:
            raise ValueError("indices must be positive integers")
        object.__setattr__(self, "elements", es)

    def __setattr__(self, name, value):
        raise AttributeError("KSet is immutable")

    @classmethod
    def parse(cls, text: str) -> "KSet":
        text = text.strip()
        if not text:
            return cls(())
        return cls(int(tok) for tok in text.split(","))

    @property
    def k_p(self):
        """Largest element; None when empty."""
        return self.elements[-1] if self.elements else None

    def is_empty(self) -> bool:
        return not self.elements

    def __contains__(self, j) -> bool:
        return j in self.elements

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        if not isinstance(other, KSet):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"KSet({{{', '.join(map(str, self.elements))}}})"

    def to_json(self):
        return list(self.elements)


def is_algebra_set(K: KSet):
    """Decide whether K defines an algebra.

    Returns (True, None) or (False, (j, k)) with the smallest violating pair
    of complement elements whose sum lands in K.  Sums beyond the maximum of
    K cannot land in K, so only pairs with j + k <= max(K) are examined.
    """
    if K.is_empty():
        return True, None
    top = K.k_p
    complement = [j for j in range(1, top) if j not in K]
    for i, j in enumerate(complement):
        for k in complement[i:]:
            s = j + k
            if s > top:
                break
            if s in K:
                return False, (j, k)
    return True, None


def k_minus(K: KSet, m: int) -> KSet:
    """The shifted set {j - m : j in K, j > m}; m must lie outside K."""
    if m < 1:
        raise ValueError("shift must be a positive integer")
    if m in K:
        raise InvalidKSetError(f"shift {m} lies in the index set")
    return KSet(j - m for j in K if j > m)


@dataclass(frozen=True)
class SemigroupData:
    """Structure of the complement semigroup after factoring out gcd d.

    The complement of K is  {n*d : n in n_values} + {N0*d, (N0+1)*d, ...};
    n_values lists every semigroup element below the threshold N0, their gcd
    is 1, and N0 exceeds max(n_values).
    """

    d: int
    n_values: tuple
    N0: int

    def semigroup_members(self, limit: int):
        """Members of the reduced semigroup up to `limit`, from the stored
        sporadic-plus-tail form."""
        out = [n for n in self.n_values if n <= limit]
        out.extend(range(self.N0, limit + 1))
        return sorted(set(out))

    def to_json(self):
        return {"d": self.d, "n_values": list(self.n_values), "N0": self.N0}


def _additive_closure_flags(gens, limit: int):
    reach = [False] * (limit + 1)
    reach[0] = True
    for n in range(1, limit + 1):
        for g in gens:
            if g <= n and reach[n - g]:
                reach[n] = True
                break
    return reach


def decompose(complement_generators):
    """Reduce a complement-semigroup presentation to the canonical data.

    Returns (SemigroupData, K1) where K1 is the finite gap set of the reduced
    semigroup: d is the gcd of the generators, the reduced semigroup is the
    additive closure of the generators divided by d, N0 is its conductor
    pushed above the largest listed sporadic element, and K1 collects the
    positive integers missing from the reduced semigroup.
    """
    gens = sorted(set(int(g) for g in complement_generators))
    if not gens or gens[0] < 1:
        raise ValueError("need a nonempty set of positive generators")
    d = math.gcd(*gens)
    reduced = [g // d for g in gens]
    gmin, gmax = reduced[0], reduced[-1]

    limit = max(64, gmax * gmax + 2 * gmax)
    while True:
        reach = _additive_closure_flags(reduced, limit)
        if all(reach[limit - gmin + 1:]):
            break
        limit *= 2

    gaps = [n for n in range(1, limit + 1) if not reach[n]]
    conductor = (gaps[-1] + 1) if gaps else 1
    candidates = set(reduced) | {n for n in range(1, conductor) if reach[n]}
    n_top = max(candidates)
    N0 = max(conductor, n_top + 1)
    n_values = tuple(n for n in range(1, N0) if reach[n])
    return SemigroupData(d, n_values, N0), KSet(gaps)


def reduce_to_finite(f: RFunc, d: int) -> RFunc:
    """Inverse substitution w = z^d: return F1 with F1(z^d) = f(z).

    Both the numerator and denominator must be polynomials in z^d (for a
    reduced fraction this is equivalent to every Maclaurin coefficient index
    being divisible by d).
    """
    if d < 1:
        raise ValueError("period must be a positive integer")
    if d == 1:
        return f
    try:
        num = f.num.decimate(d)
        den = f.den.decimate(d)
    except ValueError as exc:
        raise NotReducibleError(
            f"coefficient index {exc.args[0]} is not divisible by {d}") from None
    return RFunc._trusted(num, den)


def is_hk_member(f: RFunc, K: KSet) -> bool:
    """Exact test that the j-th derivative of f vanishes at 0 for every j
    in K."""
    if K.is_empty():
        return True
    coeffs = f.taylor_prefix(K.k_p)
    return all(coeffs[j].is_zero() for j in K)
