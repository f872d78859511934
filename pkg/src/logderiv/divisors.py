"""Logarithmic derivations of a hypersurface germ and Saito's criterion.

A derivation is carried as its coefficient vector (a_1, ..., a_n) with
respect to the partials d/dx_i; it is tangent to the divisor f = 0 when
applying it to f lands in <f>.  The full module of such derivations is the
projection of the syzygies of (df/dx_1, ..., df/dx_n, -f) to the first n
coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from logderiv import ideals
from logderiv.ideals import IdealData
from logderiv.orders import GLOBAL, LOCAL
from logderiv.poly import Polynomial, PolyMatrix, exact_div, jacobian_gens


@dataclass
class Verdict:
    ok: bool
    certificate: dict = field(default_factory=dict)
    diagnostics: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


class DivisorGerm:
    """A reduced-hypersurface candidate: f with f(0) = 0, f nonzero, non-unit."""

    def __init__(self, ring, f):
        if f.ring != ring:
            raise ValueError("defining polynomial in wrong ring")
        if f.is_zero():
            raise ValueError("defining polynomial must be nonzero")
        if f.constant_term():
            raise ValueError("divisor germ must pass through the origin (f(0) = 0)")
        self.ring = ring
        self.f = f
        self._principal = None

    def principal_ideal(self):
        if self._principal is None:
            self._principal = IdealData(self.ring, [self.f])
        return self._principal

    def __repr__(self):
        return f"DivisorGerm({self.f})"


class DerivationModule:
    """A finite generating set of vector fields tangent to the divisor."""

    def __init__(self, divisor, gens, is_full_derlog=False, check_tangency=True):
        self.divisor = divisor
        self.gens = [list(g) for g in gens]
        self.is_full_derlog = is_full_derlog
        if check_tangency:
            for d in self.gens:
                v = tangency_witness(divisor, d)
                if v is None:
                    raise ValueError(
                        f"derivation ({', '.join(str(p) for p in d)}) is not tangent to f"
                    )

    def __len__(self):
        return len(self.gens)


def apply_derivation(deriv, gamma):
    """delta(gamma) = sum_i a_i * dgamma/dx_i."""
    out = gamma.ring.zero()
    for i, a in enumerate(deriv):
        out = out + a * gamma.diff(i)
    return out


def tangency_witness(D, deriv):
    """The exact cofactor c with delta(f) = c * f, or None if not tangent."""
    df = apply_derivation(deriv, D.f)
    if df.is_zero():
        return D.ring.zero()
    return exact_div(df, D.f)


@dataclass
class SaitoData:
    derivations: list
    matrix: PolyMatrix
    determinant: Polynomial
    cofactor: Polynomial | None  # u with det = u * f, when division is exact


def saito_matrix(derivs, ring):
    """The n x n matrix whose (i, j) entry is delta_j(x_i)."""
    n = ring.n
    return PolyMatrix([[derivs[j][i] for j in range(n)] for i in range(n)])


def reducedness_check(D):
    """f is reduced iff the singular locus of V(f) has codimension >= 2 in it.

    Char-0 criterion: dim V(f, df/dx_1, ..., df/dx_n) <= n - 2, computed from
    a global Groebner basis.
    """
    ring = D.ring
    sing = IdealData(ring, [D.f] + jacobian_gens(D.f))
    basis = sing.basis_entries(GLOBAL)
    from logderiv import engine

    lead = engine.leading_exponents(basis)
    if engine.contains_unit(lead):
        dim = -1  # empty singular locus
    else:
        dim = engine.monomial_ideal_dim(lead, ring.n)
    ok = dim <= ring.n - 2
    return Verdict(
        ok,
        certificate={"singular_locus_dim": dim},
        diagnostics=[
            f"dim V(f, jacobian) = {dim}; reduced iff <= {ring.n - 2}"
        ],
    )


def derlog(D):
    """Generators of Der(-log D) = {delta : delta(f) in <f>}.

    Computed as the first n coordinates of the syzygies of
    (df/dx_1, ..., df/dx_n, -f) over the global degrevlex module order;
    the same generators generate the localized module.
    """
    ring = D.ring
    cols = jacobian_gens(D.f) + [-D.f]
    gens = []
    seen = set()
    for s in ideals.syzygies(cols, GLOBAL):
        vec = s[: ring.n]
        if all(p.is_zero() for p in vec):
            continue
        key = tuple(frozenset(p.terms.items()) for p in vec)
        if key in seen:
            continue
        seen.add(key)
        gens.append(vec)
    return DerivationModule(D, gens, is_full_derlog=True, check_tangency=False)


def apply_derivs(theta, gamma):
    """The ideal Theta(gamma) = < delta(gamma) : delta in Theta >.

    Generator order matches theta.gens so preimages can be recovered by index.
    """
    ring = gamma.ring
    return IdealData(ring, [apply_derivation(d, gamma) for d in theta.gens])


def min_generators_derivs(theta, order=LOCAL):
    count, kept = ideals.min_generators(theta.gens, theta.divisor.ring, theta.divisor.ring.n, order)
    return count, kept


def saito_free_check(D, theta):
    """Saito's criterion for freeness.

    Nakayama count first: the localized module of logarithmic derivations is
    free iff it needs exactly n generators.  On success the minimal set's
    Saito determinant is certified to be a unit times f by exact division.
    """
    red = reducedness_check(D)
    if not red.ok:
        return Verdict(
            False,
            certificate={"precondition": "reducedness"},
            diagnostics=["divisor is not reduced"] + red.diagnostics,
        )
    ring = D.ring
    n = ring.n
    count, kept = min_generators_derivs(theta)
    if count > n:
        return Verdict(
            False,
            certificate={"min_generators": count},
            diagnostics=[f"Der(-log D) needs {count} > {n} generators: not free"],
        )
    assert count == n, f"derivation module with {count} < {n} generators"
    M = saito_matrix(kept, ring)
    det = M.det()
    u = exact_div(det, D.f)
    assert u is not None, "Saito determinant of a minimal basis must be divisible by f"
    assert u.constant_term() != 0, "cofactor must be a local unit for a free divisor"
    data = SaitoData(derivations=kept, matrix=M, determinant=det, cofactor=u)
    return Verdict(
        True,
        certificate={
            "basis": kept,
            "determinant": det,
            "unit_cofactor": u,
            "saito": data,
        },
        diagnostics=[f"free: det(saito matrix) = ({u}) * f with unit cofactor"],
    )


def saito_det_membership(D, derivs):
    """det(delta_j(x_i)) lies in <f> for any n tangent derivations."""
    ring = D.ring
    if len(derivs) != ring.n:
        raise ValueError(f"need exactly {ring.n} derivations")
    for d in derivs:
        if tangency_witness(D, d) is None:
            raise ValueError("input derivation is not tangent to the divisor")
    det = saito_matrix(derivs, ring).det()
    q = exact_div(det, D.f) if not det.is_zero() else ring.zero()
    member = det.is_zero() or q is not None or ideals.ideal_membership(
        det, D.principal_ideal(), GLOBAL
    )
    return Verdict(
        bool(member),
        certificate={"determinant": det, "quotient": q},
        diagnostics=[f"det = {det}"],
    )
