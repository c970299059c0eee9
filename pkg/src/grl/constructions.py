"""Structural constructions on graded algebras.

* Dorroh unitization: adjoin an integer unit to a possibly non-unital
  graded algebra.  Elements are pairs (r, n) multiplying by
  (r,n)(s,m) = (rs + ns + mr, nm); the identity component picks up the
  integer line and every other component is unchanged, so centrality,
  idempotency, and support groups transfer back and forth along
  psi(r) = (r, 0).
* The embedding phi of a unital graded algebra R into the group ring
  R[G], phi(r) = sum_g r_g u_g: additive, multiplicative,
  identity-preserving, injective, and support-preserving.
* Regrading by a quotient group G/N (finite G, N normal).
* Restriction to the partial sum over a subgroup H (an H-graded subring).
* Viewing a nonnegatively-graded algebra (monoid degrees) inside the
  enveloping free abelian group.
"""
from __future__ import annotations

from .coeff import make_algebra
from .graded import GradedAlgebra, GradedElement, GradingError
from .groups import (FiniteTableGroup, FreeAbelianGroup, quotient_group, subgroup_closure,
                     validate_subgroup)
from .group_ring import GroupRing, GroupRingElement, NotUnitalError


class DegreeOutsideMonoidError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Dorroh unitization.


class DorrohRing:
    """Unitization of a graded algebra by integer pairs (r, n)."""

    def __init__(self, base: GradedAlgebra):
        self.base = base

    def element(self, part: GradedElement, integer: int) -> "DorrohElement":
        if part.ring is not self.base:
            raise GradingError("part belongs to a different graded algebra")
        return DorrohElement(self, part, int(integer))

    def zero(self) -> "DorrohElement":
        return DorrohElement(self, self.base.zero(), 0)

    def one(self) -> "DorrohElement":
        return DorrohElement(self, self.base.zero(), 1)

    def embed(self, r: GradedElement) -> "DorrohElement":
        """psi(r) = (r, 0)."""
        return self.element(r, 0)

    def __repr__(self):
        return f"DorrohRing({self.base!r})"


class DorrohElement:
    """Pair (r, n) with r in the base graded algebra and n an integer."""

    __slots__ = ("ring", "part", "integer")

    def __init__(self, ring: DorrohRing, part: GradedElement, integer: int):
        self.ring = ring
        self.part = part
        self.integer = integer

    def _check_mate(self, other):
        if not isinstance(other, DorrohElement) or other.ring is not self.ring:
            raise GradingError("elements belong to different unitizations")

    def __add__(self, other):
        self._check_mate(other)
        return DorrohElement(self.ring, self.part + other.part,
                             self.integer + other.integer)

    def __neg__(self):
        return DorrohElement(self.ring, -self.part, -self.integer)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check_mate(other)
        r, n = self.part, self.integer
        s, m = other.part, other.integer
        part = (r * s) + s.scale_int(n) + r.scale_int(m)
        return DorrohElement(self.ring, part, n * m)

    def __eq__(self, other):
        if not isinstance(other, DorrohElement) or other.ring is not self.ring:
            return NotImplemented
        return self.integer == other.integer and self.part == other.part

    def __bool__(self):
        return bool(self.part) or self.integer != 0

    def __hash__(self):
        raise TypeError("unitization elements are not hashable")

    def component(self, g) -> "DorrohElement":
        base = self.ring.base
        g = base.group.normalize(g)
        n = self.integer if g == base.group.identity() else 0
        return DorrohElement(self.ring, self.part.component(g), n)

    def support(self) -> frozenset:
        supp = set(self.part.support())
        if self.integer != 0:
            supp.add(self.ring.base.group.identity())
        return frozenset(supp)

    def support_group(self, cap: int):
        return subgroup_closure(self.ring.base.group, self.support(), cap)

    def is_idempotent(self) -> bool:
        return (self * self) == self

    def is_central(self) -> bool:
        # (r,n)(s,m) - (s,m)(r,n) = (rs - sr, 0): only the base part matters.
        return self.part.is_central()

    def __repr__(self):
        return f"<({self.part!r}, {self.integer})>"


def dorroh_unitize(base: GradedAlgebra) -> DorrohRing:
    return DorrohRing(base)


# ---------------------------------------------------------------------------
# The embedding phi into a group ring over the whole algebra.


class PhiEmbedding:
    """phi : R -> R[G], r |-> sum_g r_g u_g, for unital graded R."""

    def __init__(self, base: GradedAlgebra):
        if base.algebra.identity is None:
            raise NotUnitalError("the group-ring embedding needs a unital algebra")
        self.base = base
        self.ring = GroupRing(base.algebra, base.group,
                              name=f"group ring over {base.name or 'algebra'}")

    def apply(self, r: GradedElement) -> GroupRingElement:
        if r.ring is not self.base:
            raise GradingError("element belongs to a different graded algebra")
        terms = {}
        for g in r.support():
            terms[g] = r.component(g).dense()
        return self.ring.element(terms)

    def __repr__(self):
        return f"PhiEmbedding({self.base!r})"


def embed_into_group_ring(base: GradedAlgebra) -> PhiEmbedding:
    return PhiEmbedding(base)


# ---------------------------------------------------------------------------
# Regrading.


def regrade_by_quotient(ring: GradedAlgebra, members) -> GradedAlgebra:
    """Regrade a finite-group grading by the quotient modulo a normal subgroup.

    The underlying algebra is unchanged; the new degree of a basis vector
    is the coset of its old degree, so the new principal component is the
    partial sum over the subgroup.
    """
    if not isinstance(ring.group, FiniteTableGroup):
        raise GradingError("quotient regrading requires a finite group")
    quotient = quotient_group(ring.group, members)
    degrees = [quotient.projection[d] for d in ring.degrees]
    name = f"{ring.name or 'graded algebra'} mod subgroup"
    return GradedAlgebra(ring.algebra, quotient.group, degrees, name=name)


def restrict_to_subgroup(ring: GradedAlgebra, members) -> GradedAlgebra:
    """The H-graded subring spanned by the basis vectors with degree in H.

    ``members`` is an explicit finite subgroup of the grading group; it is
    validated (identity, closure under product and inverse).  The result
    is a freshly validated graded algebra over a finite table group built
    on H; it solves for its own identity, which may differ from the
    parent's or not exist.
    """
    subgroup = validate_subgroup(ring.group, members)
    ordered = sorted(subgroup, key=ring.group.sort_key)
    position = {g: i for i, g in enumerate(ordered)}
    table = [[position[ring.group.mul(a, b)] for b in ordered] for a in ordered]
    labels = tuple(ring.group.describe(g) for g in ordered)
    sub_group = FiniteTableGroup(table, labels=labels,
                                 name=f"subgroup of order {len(ordered)}")

    keep = [i for i, d in enumerate(ring.degrees) if d in subgroup]
    if not keep:
        raise GradingError("the restriction keeps no basis vectors")
    reindex = {old: new for new, old in enumerate(keep)}
    alg = ring.algebra
    products = {}
    for a_new, a_old in enumerate(keep):
        for b_new, b_old in enumerate(keep):
            entry = {}
            for k_old, c in alg.table[a_old][b_old].items():
                # closure of H guarantees products stay inside the kept span
                entry[reindex[k_old]] = c
            if entry:
                products[(a_new, b_new)] = entry
    sub_alg = make_algebra(alg.field, tuple(alg.labels[i] for i in keep), products)
    degrees = [position[ring.degrees[i]] for i in keep]
    name = f"{ring.name or 'graded algebra'} restricted to subgroup"
    return GradedAlgebra(sub_alg, sub_group, degrees, name=name)


def regrade_from_monoid(algebra, degrees, rank: int = 1, name=None) -> GradedAlgebra:
    """View an algebra with nonnegative integer degrees as graded by Z^k.

    Every declared degree must lie in the nonnegative orthant; the
    returned grading lives in the enveloping free abelian group, with
    zero components at all other degrees.
    """
    group = FreeAbelianGroup(rank)
    normalized = []
    for d in degrees:
        if isinstance(d, int):
            d = (d,)
        tup = tuple(int(x) for x in d)
        if len(tup) != rank:
            raise DegreeOutsideMonoidError(f"degree {d!r} does not have {rank} coordinates")
        if any(x < 0 for x in tup):
            raise DegreeOutsideMonoidError(f"degree {tup} has a negative coordinate")
        normalized.append(tup)
    return GradedAlgebra(algebra, group, normalized, name=name)
