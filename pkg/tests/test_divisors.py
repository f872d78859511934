"""Derivation modules of divisor germs and the determinant freeness check."""

import pytest

from logderiv import ideals
from logderiv.divisors import (
    DerivationModule,
    DivisorGerm,
    apply_derivation,
    apply_derivs,
    min_generators_derivs,
    reducedness_check,
    saito_det_membership,
    saito_free_check,
    saito_matrix,
    tangency_witness,
)
from logderiv.orders import LOCAL
from logderiv.poly import Ring, exact_div


class TestDivisorGerm:
    def test_rejects_bad_input(self, R3):
        x, y, z = R3.gens()
        with pytest.raises(ValueError):
            DivisorGerm(R3, R3.zero())
        with pytest.raises(ValueError):
            DivisorGerm(R3, x + 1)


class TestTangency:
    def test_euler_field(self, R2):
        x, y = R2.gens()
        D = DivisorGerm(R2, x**3 + y**3)
        w = tangency_witness(D, [x, y])
        assert w == R2.const(3)

    def test_non_tangent(self, R2):
        x, y = R2.gens()
        D = DivisorGerm(R2, x**2 + y**3)
        assert tangency_witness(D, [R2.one(), R2.zero()]) is None

    def test_module_validates(self, R2):
        x, y = R2.gens()
        D = DivisorGerm(R2, x * y)
        DerivationModule(D, [[x, R2.zero()], [R2.zero(), y]])
        with pytest.raises(ValueError):
            DerivationModule(D, [[R2.one(), R2.zero()]])


class TestDerlog:
    def test_all_generators_are_tangent(self, whitney):
        D, theta = whitney
        for d in theta.gens:
            assert tangency_witness(D, d) is not None

    def test_smooth_germ(self):
        R1 = Ring(["x"])
        (x,) = R1.gens()
        D = DivisorGerm(R1, x)
        theta = __import__("logderiv").derlog(D)
        count, kept = min_generators_derivs(theta)
        assert count == 1
        v = saito_free_check(D, theta)
        assert v.ok

    def test_whitney_counts(self, whitney):
        D, theta = whitney
        count, _ = min_generators_derivs(theta)
        assert count == 4
        assert not saito_free_check(D, theta).ok

    def test_quintic_free(self, quintic):
        D, theta = quintic
        v = saito_free_check(D, theta)
        assert v.ok
        u = v.certificate["unit_cofactor"]
        assert u.is_constant() and u.constant_term() != 0
        assert v.certificate["determinant"] == u * D.f


class TestReducedness:
    def test_reduced(self, whitney):
        D, _ = whitney
        assert reducedness_check(D).ok

    def test_non_reduced(self, R2):
        x, y = R2.gens()
        D = DivisorGerm(R2, x**2)
        assert not reducedness_check(D).ok
        assert not saito_free_check(D, __import__("logderiv").derlog(D)).ok


class TestSaitoDet:
    def test_det_always_in_ideal(self, whitney):
        D, theta = whitney
        n = D.ring.n
        gens = theta.gens
        for triple in [gens[:3], gens[1:4], [gens[0], gens[2], gens[3]]]:
            assert saito_det_membership(D, triple).ok

    def test_wrong_count_rejected(self, whitney):
        D, theta = whitney
        with pytest.raises(ValueError):
            saito_det_membership(D, theta.gens[:2])


class TestApplyDerivs:
    def test_theta_gamma_generators(self, whitney):
        D, theta = whitney
        R3 = D.ring
        x, y, z = R3.gens()
        gamma = x**2 + y**2 + z**2
        Tg = apply_derivs(theta, gamma)
        assert len(Tg.gens) == len(theta.gens)
        for d, g in zip(theta.gens, Tg.gens):
            assert apply_derivation(d, gamma) == g
