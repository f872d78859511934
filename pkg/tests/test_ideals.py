"""Ideal operations: intersection, colon, minimal generators, Artin data,
radical membership over the localization."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from logderiv import ideals
from logderiv.ideals import IdealData, ZeroIdealQuotientError, artin_reducer
from logderiv.orders import GLOBAL, LOCAL
from logderiv.poly import Polynomial, Ring

R = Ring(["x", "y"])
X, Y = R.gens()
R3 = Ring(["x", "y", "z"])
x3, y3, z3 = R3.gens()

HYPO = settings(max_examples=20, deadline=None)
coeffs = st.builds(Fraction, st.integers(-9, 9).filter(bool), st.integers(1, 4))
monos = st.tuples(st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(monos, coeffs, min_size=1, max_size=3).map(
    lambda d: Polynomial(R, dict(d))
)


class TestIntersect:
    def test_monomial(self):
        I = IdealData(R, [X])
        J = IdealData(R, [Y])
        K = ideals.ideal_intersect(I, J, GLOBAL)
        assert ideals.ideal_equal(K, IdealData(R, [X * Y]), GLOBAL)

    def test_principal(self):
        I = IdealData(R, [X * (X + Y)])
        J = IdealData(R, [Y * (X + Y)])
        K = ideals.ideal_intersect(I, J, GLOBAL)
        assert ideals.ideal_equal(K, IdealData(R, [X * Y * (X + Y)]), GLOBAL)

    @HYPO
    @given(polys, polys)
    def test_contained_in_both(self, p, q):
        I = IdealData(R, [p])
        J = IdealData(R, [q])
        K = ideals.ideal_intersect(I, J, GLOBAL)
        for g in K.gens:
            assert ideals.ideal_membership(g, I, GLOBAL)
            assert ideals.ideal_membership(g, J, GLOBAL)


class TestColon:
    def test_principal_colon(self):
        I = IdealData(R, [X**2 * Y])
        Q = ideals.ideal_quotient(I, IdealData(R, [X]), GLOBAL)
        assert ideals.ideal_equal(Q, IdealData(R, [X * Y]), GLOBAL)

    def test_colon_by_nonmember(self):
        I = IdealData(R, [X**2, Y**2])
        Q = ideals.ideal_quotient(I, IdealData(R, [X * Y]), GLOBAL)
        assert ideals.ideal_equal(Q, IdealData(R, [X, Y]), GLOBAL)

    def test_zero_numerator_raises(self):
        I = IdealData(R, [X])
        try:
            ideals.ideal_quotient(I, IdealData(R, [R.zero()]), GLOBAL)
        except (ZeroIdealQuotientError, ValueError):
            pass

    @HYPO
    @given(polys, polys)
    def test_colon_product_recovers(self, p, q):
        # (<p*q> : <q>) contains p
        if p.is_zero() or q.is_zero():
            return
        I = IdealData(R, [p * q])
        Q = ideals.ideal_quotient(I, IdealData(R, [q]), GLOBAL)
        assert ideals.ideal_membership(p, Q, GLOBAL)

    @HYPO
    @given(polys, polys, polys)
    def test_colon_members_multiply_in(self, p, q, g):
        gens = [v for v in (p, q) if not v.is_zero()]
        if not gens or g.is_zero():
            return
        I = IdealData(R, gens)
        Q = ideals.ideal_quotient(I, IdealData(R, [g]), LOCAL)
        for h in Q.gens:
            assert ideals.ideal_membership(h * g, I, LOCAL)


class TestMinGenerators:
    def test_redundant_dropped(self):
        I = IdealData(R, [X, Y, X + Y, X**2])
        count, gens = ideals.min_generators_ideal(I)
        assert count == 2

    def test_unit_multiple_dropped(self):
        I = IdealData(R, [X, X * (1 + Y)])
        count, _ = ideals.min_generators_ideal(I)
        assert count == 1

    def test_independent_kept(self):
        I = IdealData(R, [X**2, X * Y, Y**2])
        count, _ = ideals.min_generators_ideal(I)
        assert count == 3


class TestArtinReducer:
    def test_canonical_and_linear(self):
        I = IdealData(R, [X**2 - Y**3, X * Y**2])
        red = artin_reducer(I)
        p = X**4 + 3 * X**2
        q = Y * p
        # linearity
        assert red.reduce(p + q) == red.reduce(p) + red.reduce(q)
        # members reduce to zero, canonically
        assert red.reduce(p - p) == R.zero()
        for g in I.gens:
            assert red.reduce(g * (1 + X)) == R.zero()

    def test_residues_span_quotient(self):
        I = IdealData(R, [X**2, Y**2])
        red = artin_reducer(I)
        mons = set(ideals.std_monomials(I))
        r = red.reduce((1 + X) * (1 + Y))
        assert set(r.terms) <= mons
        assert red.reduce(X * Y) == X * Y


class TestRadicalMembership:
    def test_power_in_ideal(self):
        I = IdealData(R, [X**2])
        assert ideals.radical_membership(X, I)
        assert not ideals.radical_membership(Y, I)

    def test_local_vs_global(self):
        # <x*(1+x)> is <x> locally but V contains x = -1 globally
        I = IdealData(R, [X * (1 + X)])
        assert ideals.radical_membership(X, I, germ=True)
        assert not ideals.radical_membership(X, I, germ=False)

    def test_member_is_in_radical(self):
        I = IdealData(R, [X**2 + Y**2, X * Y])
        assert ideals.radical_membership(X, I)
        assert ideals.radical_membership(Y, I)

    def test_unit_ideal(self):
        I = IdealData(R, [1 + X])
        assert ideals.radical_membership(R.one(), I, germ=True)


class TestColength:
    def test_milnor_cusp(self):
        # mu(x^3 - y^2) = 2
        from logderiv.poly import jacobian_gens

        g = X**3 - Y**2
        assert ideals.colength(IdealData(R, jacobian_gens(g))) == 2

    def test_quasihomogeneous(self):
        I = IdealData(R3, [x3**2, y3**3, z3**4])
        assert ideals.colength(I) == 24
