"""Term orders for polynomial and free-module monomials.

Two base orders are supported:

* global degree-reverse-lexicographic (a well-order, 1 is the smallest
  monomial) for computations in the polynomial ring, and
* local negative-degree-reverse-lexicographic (1 is the largest monomial)
  which realizes the localization at the origin for polynomial data.

Module monomials are pairs (component, exponent-tuple).  The default module
extension is position-over-term with lower components larger; an elimination
variant makes a leading block of components dominate everything else, which
is what the syzygy extraction needs.
"""

from __future__ import annotations

GLOBAL_DEGREVLEX = "global_degrevlex"
LOCAL_NEGDEGREVLEX = "local_negdegrevlex"


class TermOrder:
    __slots__ = ("kind",)

    def __init__(self, kind):
        if kind not in (GLOBAL_DEGREVLEX, LOCAL_NEGDEGREVLEX):
            raise ValueError(f"unknown term order {kind!r}")
        self.kind = kind

    @property
    def is_global(self):
        return self.kind == GLOBAL_DEGREVLEX

    def key(self, e):
        """Sort key; larger key means larger monomial."""
        d = sum(e)
        rev = tuple(-x for x in reversed(e))
        return (d if self.is_global else -d, rev)

    def __eq__(self, other):
        return isinstance(other, TermOrder) and self.kind == other.kind

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return f"TermOrder({self.kind})"


GLOBAL = TermOrder(GLOBAL_DEGREVLEX)
LOCAL = TermOrder(LOCAL_NEGDEGREVLEX)


class GermElimOrder:
    """Product order: one trailing global variable dominating a local block.

    Used for Rabinowitsch-style checks over the localization at the origin:
    the auxiliary variable t is compared globally (by degree) first, ties
    decided by the local order on the original variables.  Not a well-order,
    so Mora's normal form applies.
    """

    __slots__ = ("nloc",)
    kind = "germ_elim"
    is_global = False

    def __init__(self, nloc):
        self.nloc = nloc

    def key(self, e):
        return (sum(e[self.nloc :]), LOCAL.key(e[: self.nloc]))


class ModuleOrder:
    """Order on (component, exponent) pairs extending a base TermOrder.

    With elim_comps == 0 this is position-over-term: component first (lower
    index larger), base order second.  With elim_comps == k > 0 any monomial
    in components 0..k-1 beats any monomial in components >= k; within each
    block the base order decides, with the component as tiebreak.
    """

    __slots__ = ("base", "elim_comps")

    def __init__(self, base, elim_comps=0):
        self.base = base
        self.elim_comps = elim_comps

    @property
    def is_global(self):
        # globality only depends on comparisons within one component
        return self.base.is_global

    def key(self, cm):
        c, e = cm
        if self.elim_comps:
            return (1 if c < self.elim_comps else 0, self.base.key(e), -c)
        return (-c, self.base.key(e))

    def __repr__(self):
        return f"ModuleOrder({self.base!r}, elim_comps={self.elim_comps})"
