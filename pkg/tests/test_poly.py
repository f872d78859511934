from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from logderiv.poly import (
    PolyMatrix,
    Polynomial,
    Ring,
    RingMismatchError,
    exact_div,
    hessian_det,
    jacobian_gens,
)

R = Ring(["x", "y"])
X, Y = R.gens()

coeffs = st.builds(
    Fraction, st.integers(-30, 30).filter(bool), st.integers(1, 10)
)
monos = st.tuples(st.integers(0, 4), st.integers(0, 4))
polys = st.dictionaries(monos, coeffs, max_size=5).map(
    lambda d: Polynomial(R, {m: Fraction(c) for m, c in d.items()})
)

HYPO = settings(max_examples=40, deadline=None)


class TestArithmetic:
    def test_basic_identities(self):
        p = 2 * X**2 * Y - Y + 1
        assert p + R.zero() == p
        assert p * R.one() == p
        assert p - p == R.zero()
        assert p * R.zero() == R.zero()
        assert (X + Y) * (X - Y) == X**2 - Y**2

    def test_pow(self):
        assert (X + Y) ** 0 == R.one()
        assert (X + Y) ** 3 == X**3 + 3 * X**2 * Y + 3 * X * Y**2 + Y**3

    def test_rational_scalars(self):
        p = Fraction(1, 2) * X + Fraction(1, 3)
        assert 6 * p == 3 * X + 2

    def test_ring_mismatch(self):
        other = Ring(["u"])
        with pytest.raises(RingMismatchError):
            X + other.var(0)

    @HYPO
    @given(polys, polys)
    def test_commutativity(self, p, q):
        assert p + q == q + p
        assert p * q == q * p

    @HYPO
    @given(polys, polys, polys)
    def test_associativity_distributivity(self, p, q, r):
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r

    @HYPO
    @given(polys, polys)
    def test_degree_of_product(self, p, q):
        if p.is_zero() or q.is_zero():
            assert (p * q).is_zero()
        else:
            assert (p * q).total_degree() == p.total_degree() + q.total_degree()


class TestCalculus:
    def test_partial(self):
        p = X**3 * Y + 2 * Y**2
        assert p.diff(0) == 3 * X**2 * Y
        assert p.diff(1) == X**3 + 4 * Y

    @HYPO
    @given(polys, polys)
    def test_leibniz(self, p, q):
        for i in range(2):
            assert (p * q).diff(i) == p.diff(i) * q + p * q.diff(i)

    def test_jacobian(self):
        assert jacobian_gens(X**2 + Y**3) == [2 * X, 3 * Y**2]

    def test_hessian_diagonal(self):
        R3 = Ring(["x", "y", "z"])
        x, y, z = R3.gens()
        a, b, c = Fraction(2), Fraction(3), Fraction(5)
        g = a * x**2 + b * y**2 + c * z**2
        assert hessian_det(g) == R3.const(8 * a * b * c)

    def test_evaluate(self):
        p = X**2 - Y
        assert p.evaluate([Fraction(3), Fraction(2)]) == Fraction(7)


class TestExactDiv:
    def test_divides(self):
        p = (X + Y) * (X**2 - Y)
        assert exact_div(p, X + Y) == X**2 - Y

    def test_does_not_divide(self):
        assert exact_div(X**2 + Y, X + Y) is None

    @HYPO
    @given(polys, polys)
    def test_roundtrip(self, p, q):
        if q.is_zero():
            return
        assert exact_div(p * q, q) == p


class TestDeterminant:
    def test_2x2(self):
        M = PolyMatrix([[X, Y], [Y, X]])
        assert M.det() == X**2 - Y**2

    def test_4x4_uses_bareiss(self):
        R4 = Ring(["a", "b", "c", "d"])
        a, b, c, d = R4.gens()
        rows = [[R4.one() if i == j else R4.zero() for j in range(4)] for i in range(4)]
        rows[0][0], rows[1][1], rows[2][2], rows[3][3] = a, b, c, d
        rows[0][3] = a * b
        assert PolyMatrix(rows).det() == a * b * c * d

    @HYPO
    @given(polys, polys, polys, polys, polys, polys)
    def test_multiplicative_2x2(self, a, b, c, d, e, f):
        M = PolyMatrix([[a, b], [c, d]])
        N = PolyMatrix([[d, e], [f, a]])
        prod = PolyMatrix(
            [
                [M[i, 0] * N[0, j] + M[i, 1] * N[1, j] for j in range(2)]
                for i in range(2)
            ]
        )
        assert prod.det() == M.det() * N.det()


class TestPrinting:
    def test_term_order_and_format(self):
        p = Fraction(-3, 2) * X**2 * Y - Y + X + Fraction(1, 3)
        assert str(p) == "-3/2*x^2*y + x - y + 1/3"
        assert str(R.zero()) == "0"
        assert str(-X) == "-x"
