"""Blaschke products, exact division, and B-adic membership."""

import random
from fractions import Fraction

import numpy as np
import pytest

from diskideal import GRat, NonDivisibleError, NotExpandableError, Poly, RFunc
from diskideal.blaschke import (
    Blaschke,
    badic_expand,
    blaschke_eval,
    divide_by_blaschke,
    is_cplusb_member,
    is_hkb_member,
)
from diskideal.kset import KSet

B0 = Blaschke([GRat(0)])
HALF = GRat(Fraction(1, 2))


class TestEval:
    def test_zero_at_origin_convention(self):
        assert blaschke_eval(B0, 0.3) == pytest.approx(0.3)

    def test_vanishes_at_zero(self):
        B = Blaschke([HALF])
        assert abs(blaschke_eval(B, 0.5)) < 1e-15

    def test_unimodular_on_circle(self):
        B = Blaschke([HALF])
        assert abs(abs(blaschke_eval(B, 1.0)) - 1.0) < 1e-9

    def test_bounded_on_disk(self):
        rng = np.random.default_rng(42)
        B = Blaschke([GRat(0), HALF, GRat(Fraction(1, 3), Fraction(-1, 4))])
        r = np.sqrt(rng.uniform(0, 1, 10000))
        theta = rng.uniform(0, 2 * np.pi, 10000)
        for z in r * np.exp(1j * theta):
            assert abs(B.eval(complex(z))) <= 1.0 + 1e-9

    def test_matches_rfunc_form(self):
        B = Blaschke([HALF, GRat(0, Fraction(1, 3))])
        f = B.to_rfunc()
        for z in (0.2, -0.7j, 0.3 + 0.4j, 1.0):
            assert B.eval(z) == pytest.approx(f.eval(z), abs=1e-12)


class TestDivide:
    def test_monomial(self):
        assert divide_by_blaschke(RFunc.monomial(3), B0) == RFunc.monomial(2)

    def test_cancel_factor(self):
        f = RFunc(Poly([HALF, GRat(-1)]))           # 1/2 - z
        g = divide_by_blaschke(f, Blaschke([HALF]))
        assert g == RFunc(Poly([1, Fraction(-1, 2)]))  # 1 - z/2

    def test_nondivisible(self):
        with pytest.raises(NonDivisibleError):
            divide_by_blaschke(RFunc.one(), B0)

    def test_multiplicity_enforced(self):
        B2 = Blaschke([GRat(0), GRat(0)])
        assert divide_by_blaschke(RFunc.monomial(2), B2) == RFunc.one()
        with pytest.raises(NonDivisibleError):
            divide_by_blaschke(RFunc.monomial(1), B2)

    def test_round_trip(self):
        rng = random.Random(19)
        B = Blaschke([HALF, GRat(Fraction(-1, 3))])
        for _ in range(10):
            g = RFunc(Poly([Fraction(rng.randint(-3, 3), rng.randint(1, 4))
                            for _ in range(4)]),
                      Poly([1, Fraction(-1, rng.choice([2, 3, -4]))]))
            f = B.to_rfunc() * g
            assert divide_by_blaschke(f, B) == g
            assert B.to_rfunc() * divide_by_blaschke(f, B) == f


class TestBAdic:
    def test_constant_plus_power(self):
        f = RFunc(Poly([3, 0, 0, 0, 0, 1]))        # 3 + z^5
        exp = badic_expand(f, B0, 2)
        assert exp.coefficients == (GRat(3), GRat(0))
        assert exp.tail == RFunc.monomial(3)

    def test_pure_square(self):
        exp = badic_expand(RFunc.monomial(2), B0, 2)
        assert exp.coefficients == (GRat(0), GRat(0))
        assert exp.tail == RFunc.one()

    def test_differing_values_not_expandable(self):
        B = Blaschke([HALF, -HALF])
        with pytest.raises(NotExpandableError):
            badic_expand(RFunc.monomial(1), B, 1)

    def test_reconstruction_exact(self):
        rng = random.Random(29)
        B = Blaschke([HALF, GRat(0)])
        for _ in range(10):
            f = RFunc(Poly([Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                            for _ in range(7)]),
                      Poly([1, Fraction(-1, 3)]))
            levels = rng.randint(1, 3)
            try:
                exp = badic_expand(f, B, levels)
            except NotExpandableError:
                continue
            assert (exp.reconstruct() - f).is_zero()

    def test_level_cap(self):
        with pytest.raises(ValueError):
            badic_expand(RFunc.one(), B0, 65)


class TestCPlusBMembership:
    def test_witness(self):
        f = RFunc(Poly([2, 1, 1]))                 # 2 + z(1+z)
        w = is_cplusb_member(f, B0)
        assert w.ok and w.constant == GRat(2)
        assert w.tail == RFunc(Poly([1, 1]))

    def test_rejection_carries_pair(self):
        B = Blaschke([HALF, -HALF])
        w = is_cplusb_member(RFunc.monomial(1), B)
        assert not w.ok
        assert w.failing is not None and len(w.failing) == 2

    def test_zero_function(self):
        w = is_cplusb_member(RFunc.zero(), B0)
        assert w.ok and w.constant == GRat(0) and w.tail == RFunc.zero()

    def test_product_closure(self):
        rng = random.Random(37)
        B = Blaschke([HALF, GRat(Fraction(-1, 4), Fraction(1, 4))])
        for _ in range(10):
            def member():
                g = RFunc(Poly([Fraction(rng.randint(-2, 2), rng.randint(1, 3))
                                for _ in range(3)]))
                return RFunc.constant(rng.randint(-3, 3)) + B.to_rfunc() * g
            f1, f2 = member(), member()
            assert is_cplusb_member(f1, B).ok and is_cplusb_member(f2, B).ok
            assert is_cplusb_member(f1 * f2, B).ok


class TestHkbMembership:
    def test_named_cases(self):
        K1 = KSet([1])
        f = RFunc(Poly([5, 0, 1, 1]))              # 5 + z^2 (1 + z)
        assert is_hkb_member(f, K1, B0)
        assert not is_hkb_member(RFunc.monomial(1), K1, B0)
        assert is_hkb_member(RFunc.zero(), KSet([1, 2, 5]), B0)
        assert is_hkb_member(RFunc.zero(), K1, Blaschke([HALF]))

    def test_middle_levels_allowed(self):
        # K = {1,2,5}: coefficients allowed at levels 0, 3, 4 and tail from 6
        K = KSet([1, 2, 5])
        f = (RFunc.constant(7) + B0.pow_rfunc(3) * RFunc.constant(2)
             + B0.pow_rfunc(6) * RFunc(Poly([1, 1])))
        assert is_hkb_member(f, K, B0)
        bad = f + B0.pow_rfunc(5) * RFunc.constant(1)
        assert not is_hkb_member(bad, K, B0)

    def test_nonconstant_low_level_rejected(self):
        # with two distinct zeros, a level-1 coefficient that varies on the
        # zero set is not a constant and membership must fail
        K = KSet([1, 2])
        B = Blaschke([HALF, -HALF])
        f = B.to_rfunc() * RFunc.monomial(1)
        assert not is_hkb_member(f, K, B)
        # whereas a genuine member with the same shape passes
        g = RFunc.constant(4) + B.pow_rfunc(3) * RFunc.monomial(1)
        assert is_hkb_member(g, K, B)
