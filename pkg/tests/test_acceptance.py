"""Acceptance suite: the frozen end-to-end facts this artifact must reproduce.

One test per criterion; `pytest -v tests/test_acceptance.py` prints one
pass/fail line each.  All equalities are exact (ideal/module double
inclusion over the localization) — no tolerances anywhere.
"""

import json
import random
import subprocess
import sys

import pytest

from _instances import random_wiebe_instance, random_zero_dim_ideal
from logderiv import ideals
from logderiv.divisors import (
    DerivationModule,
    DivisorGerm,
    apply_derivs,
    derlog,
    min_generators_derivs,
    saito_free_check,
    saito_matrix,
    tangency_witness,
)
from logderiv.ideals import IdealData
from logderiv.jets import cross_check_colength, cross_check_derlog
from logderiv.orders import LOCAL
from logderiv.poly import Ring, exact_div, jacobian_gens
from logderiv.quotients import (
    CosetIdeal,
    NotArtinError,
    ci_check,
    hessian_socle_check,
    quotient,
    socle,
    theorem_b_check,
    wiebe_check,
)
from logderiv.sampling import GammaSpace, SampleConfig, locus_compare, theorem_a_probe


def test_criterion_01_pinch_point_derlog(whitney):
    """derlog of x^2 - y^2*z: known 4-generator module, not free."""
    D, theta = whitney
    R = D.ring
    x, y, z = R.gens()
    zero = R.zero()
    known = [
        [x, zero, 2 * z],
        [y**2, zero, 2 * x],
        [y * z, x, zero],
        [zero, y, -2 * z],
    ]
    for d in known:
        assert tangency_witness(D, d) is not None
    assert ideals.module_equal(theta.gens, known, 3, LOCAL)
    count, _ = min_generators_derivs(theta)
    assert count == 4
    assert not saito_free_check(D, theta).ok


def test_criterion_02_pinch_point_artin_quotient(whitney):
    """Theta(gamma) for gamma = x^2+y^2+z^2: generators, colength 6,
    socle <yz, z^2>, normal form of f, and f*J_gamma containment."""
    D, theta = whitney
    R = D.ring
    x, y, z = R.gens()
    gamma = x**2 + y**2 + z**2
    Tg = apply_derivs(theta, gamma)

    known = IdealData(
        R, [x * y, x**2 + 2 * z**2, y**2 - 2 * z**2, 2 * x * z + x * y**2]
    )
    assert ideals.ideal_equal(Tg, known, LOCAL)

    assert not ci_check(Tg).ok
    assert ideals.colength(Tg) == 6
    assert cross_check_colength(Tg, 8).ok  # oracle agrees with the 6

    A = quotient(Tg)
    s = socle(A)
    expected = CosetIdeal(A, [A.reduce(y * z), A.reduce(z**2)])
    assert s.equals(expected)
    assert len(s.vector_basis()) == 2

    assert A.reduce(D.f) == -2 * z**2

    for g in jacobian_gens(gamma):
        assert ideals.ideal_membership(D.f * g, Tg, LOCAL)


def test_criterion_03_quintic_free_and_nonholonomic(quintic):
    """x*y*(x+y)*(x-y)*(y-x*z): the known 3x3 matrix has det f, the divisor
    is free, Theta(gamma) matches the known generators, V(Theta(gamma)) =
    V(x, y), and the holonomicity probe fails for five distinct seeds."""
    D, theta = quintic
    R = D.ring
    x, y, z = R.gens()
    zero = R.zero()
    rows = [
        [x, y, zero],
        [zero, x**2 * y - y**3, 2 * x * y - x**2 * z - 3 * y**2 * z + 2 * x * y * z**2],
        [zero, zero, y - x * z],
    ]
    M = saito_matrix(rows, R)
    assert M.det() == D.f
    for d in rows:
        assert tangency_witness(D, d) is not None

    v = saito_free_check(D, theta)
    assert v.ok
    u = v.certificate["unit_cofactor"]
    assert u.is_constant() and u.constant_term() != 0

    gamma = x**2 + y**2 + z**2
    Tg = apply_derivs(DerivationModule(D, rows, check_tangency=False), gamma)
    display = [
        2 * x**2 + 2 * y**2,
        4 * x * y * z + 2 * x**2 * y**2 - 2 * y**4 - 2 * x**2 * z**2
        - 6 * y**2 * z**2 + 4 * x * y * z**3,
        2 * y * z - 2 * x * z**2,
    ]
    assert list(Tg.gens) == display

    with pytest.raises(NotArtinError) as e:
        quotient(Tg)
    assert e.value.dim == 1

    assert locus_compare(Tg, [x, y]).ok

    space = GammaSpace([x**2, y**2, z**2])
    for seed in range(5):
        probe = theorem_a_probe(
            D, space, SampleConfig(seed=seed, retries=3), theta=theta
        )
        assert not probe.ok


def test_criterion_04_theorem_b_plane_arrangement(cusp_line):
    """x*y*(x+y) with gamma = x^2+y^2: the Artin-quotient freeness test."""
    D, theta = cusp_line
    x, y = D.ring.gens()
    gamma = x**2 + y**2

    assert ideals.colength(IdealData(D.ring, jacobian_gens(gamma))) == 1
    Tg = apply_derivs(theta, gamma)
    ci = ci_check(Tg)
    assert ci.ok
    assert ci.certificate["colength"] == 6
    assert cross_check_colength(Tg, 8).ok

    v = theorem_b_check(D, theta, gamma)
    assert v.ok
    assert all(v.certificate["memberships"])

    basis = v.certificate["basis"]
    det = saito_matrix(basis, D.ring).det()
    u = exact_div(det, D.f)
    assert u is not None and u.constant_term() != 0

    assert v.certificate["saito_agrees"]
    assert saito_free_check(D, theta).ok == v.ok


def test_criterion_05_hessian_socle_equivalence(cusp_line, whitney):
    """Both sides true on the free plane arrangement; both false on the
    pinch point for triples of derivations — agreement in every case."""
    D, theta = cusp_line
    x, y = D.ring.gens()
    gamma = x**2 + y**2
    A = quotient(apply_derivs(theta, gamma))
    v = theorem_b_check(D, theta, gamma)
    delta = saito_matrix(v.certificate["basis"], D.ring).det()
    h = hessian_socle_check(D, gamma, A, delta)
    assert h.ok
    assert h.certificate["saito_ideal_equality"] is True
    assert h.certificate["hessian_in_socle"] is True

    Dw, thetaw = whitney
    xw, yw, zw = Dw.ring.gens()
    gw = xw**2 + yw**2 + zw**2
    Aw = quotient(apply_derivs(thetaw, gw))
    _, kept = min_generators_derivs(thetaw)
    triples = [kept[:3], kept[1:], [kept[0], kept[2], kept[3]]]
    for triple in triples:
        dw = saito_matrix(triple, Dw.ring).det()
        hw = hessian_socle_check(Dw, gw, Aw, dw)
        assert hw.ok  # agreement
        assert hw.certificate["saito_ideal_equality"] is False
        assert hw.certificate["hessian_in_socle"] is False


def test_criterion_06_wiebe_duality_randomized():
    """Both Wiebe equalities on 50 random complete-intersection transitions."""
    rng = random.Random(2024)
    for _ in range(50):
        gamma, F, delta = random_wiebe_instance(rng)
        v = wiebe_check(gamma, F, delta)
        assert v.ok, (gamma, F, delta, v.diagnostics)


def test_criterion_07_oracle_equivalence(whitney, quintic, cusp_line, normal_crossings):
    """Jet oracle agrees with the symbolic engines on named and random data."""
    named = [whitney, quintic, cusp_line, normal_crossings]
    for D, theta in named:
        assert cross_check_derlog(D, 2).ok
        xs = D.ring.gens()
        gamma = sum((v * v for v in xs), D.ring.zero())
        Tg = apply_derivs(theta, gamma)
        assert cross_check_colength(Tg, 8).ok

    rng = random.Random(99)
    for _ in range(50):
        I = random_zero_dim_ideal(rng)
        v = cross_check_colength(I, 8)
        assert v.ok
        assert v.certificate["jet"] is not None  # the count actually stabilized


def test_criterion_08_gorenstein_tripwire(cusp_line, normal_crossings):
    """dim soc = 1 whenever the quotient is a complete intersection."""
    checked = 0
    for D, theta in (cusp_line, normal_crossings):
        xs = D.ring.gens()
        gamma = sum((v * v for v in xs), D.ring.zero())
        Tg = apply_derivs(theta, gamma)
        if ci_check(Tg).ok:
            assert len(socle(quotient(Tg)).reps) == 1
            checked += 1
    rng = random.Random(5)
    for _ in range(12):
        gamma, F, delta = random_wiebe_instance(rng)
        I = IdealData(gamma.ring, F)
        if ci_check(I).ok:
            assert len(socle(quotient(I)).reps) == 1
            checked += 1
    assert checked >= 5


def test_criterion_09_normal_crossings(normal_crossings):
    """x1*x2*x3: free with determinant exactly f, colength 8, theorem-b free."""
    D, theta = normal_crossings
    R = D.ring
    x1, x2, x3 = R.gens()
    v = saito_free_check(D, theta)
    assert v.ok
    assert v.certificate["determinant"] == D.f
    assert v.certificate["unit_cofactor"] == R.one()

    gamma = x1**2 + x2**2 + x3**2
    Tg = apply_derivs(theta, gamma)
    assert ideals.ideal_equal(
        Tg, IdealData(R, [x1**2, x2**2, x3**2]), LOCAL
    )
    assert ideals.colength(Tg) == 8

    tb = theorem_b_check(D, theta, gamma)
    assert tb.ok and tb.certificate["saito_agrees"]


def test_criterion_10_cli_determinism(tmp_path):
    """Two `theorem-a --seed 42 --json` runs are byte-identical."""
    prob = tmp_path / "prob.lgd"
    prob.write_text(
        "ring: x, y, z\nf: x^2 - y^2*z\ngamma_space: x^2; y^2; z^2\n"
    )
    cmd = [
        sys.executable, "-m", "logderiv.cli", "theorem-a", str(prob),
        "--seed", "42", "--json",
    ]
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
    assert len(a.stdout) > 0
    rep = json.loads(a.stdout)
    assert rep["seed"] == 42 and rep["timings_ms"] is None
