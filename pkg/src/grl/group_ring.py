"""Group rings A[G] and crossed products with finitely supported elements.

Elements are sparse formal sums sum_g a_g u_g with a_g in a unital
coefficient algebra A and g ranging over a (possibly infinite) group.
Plain multiplication convolves: (a u_g)(b u_h) = ab u_{gh}.  A crossed
product twists it by an action alpha and a 2-cocycle sigma:

    (a u_g)(b u_h) = a * alpha_g(b) * sigma(g, h) u_{gh}

Crossed products are restricted to finite groups with explicit tables;
both datasets are validated exhaustively at construction (normalized
cocycle, cocycle identity on all triples, twisted compatibility
alpha_g . alpha_h = Ad(sigma(g,h)) . alpha_{gh} on all pairs, each
alpha_g a unital algebra automorphism, each sigma(g,h) invertible).

Centrality of an element is decided against a finite generating set of
the whole ring: the coefficient-algebra basis placed at the identity
degree together with the units u_g for the declared group generators.
This suffices because every homogeneous a u_g factors through those
generators up to invertible homogeneous units, commuting passes to
products, sums, and inverses, and conjugation by a word is the composite
of conjugations by its letters.

For finite groups, ``as_graded_algebra`` flattens a group ring or
crossed product into a structure-constant graded algebra, which plugs
the element into the exact enumeration and hypothesis checks of
:mod:`grl.graded`.
"""
from __future__ import annotations

from .coeff import Algebra, AlgebraError, make_algebra, solve_right
from .groups import FiniteTableGroup, Group, subgroup_closure


class NotUnitalError(ValueError):
    pass


class InfiniteGroupError(ValueError):
    pass


class CrossedProductError(ValueError):
    pass


class GroupRingError(ValueError):
    pass


def _mat_vec(field, matrix, vec):
    return tuple(
        _dot(field, row, vec) for row in matrix
    )


def _dot(field, row, vec):
    acc = field.zero
    for a, b in zip(row, vec):
        acc = field.add(acc, field.mul(a, b))
    return acc


def algebra_inverse(alg: Algebra, dense):
    """Two-sided inverse of an element of a unital algebra, or None."""
    if alg.identity is None:
        raise NotUnitalError("inverses require a unital algebra")
    field = alg.field
    sparse = alg.to_sparse(dense)
    cols = [alg.to_dense(alg.multiply(sparse, alg.basis_element(j)))
            for j in range(alg.dim)]
    rows = [[cols[j][k] for j in range(alg.dim)] for k in range(alg.dim)]
    x = solve_right(rows, list(alg.identity), field)
    if x is None:
        return None
    xs = alg.to_sparse(x)
    if alg.multiply(xs, sparse) != alg.to_sparse(alg.identity):
        return None
    return tuple(x)


class GroupRing:
    """A[G], or a crossed product when action/cocycle tables are given."""

    def __init__(self, algebra: Algebra, group: Group, action=None, cocycle=None,
                 name=None):
        if algebra.identity is None:
            raise NotUnitalError("group rings require a unital coefficient algebra")
        self.algebra = algebra
        self.group = group
        self.name = name
        if (action is None) != (cocycle is None):
            raise CrossedProductError("crossed products need both an action and a cocycle")
        self.action = None
        self.cocycle = None
        if action is not None:
            if not isinstance(group, FiniteTableGroup):
                raise InfiniteGroupError("crossed products are supported over finite groups only")
            self.action, self.cocycle = _validate_crossed(algebra, group, action, cocycle)

    @property
    def is_crossed(self):
        return self.action is not None

    # -- element constructors ------------------------------------------------

    def element(self, terms: dict) -> "GroupRingElement":
        clean = {}
        for g, coeff in terms.items():
            g = self.group.normalize(g)
            dense = tuple(coeff)
            if len(dense) != self.algebra.dim:
                raise GroupRingError("coefficient vector has the wrong dimension")
            if any(not self.algebra.field.is_zero(c) for c in dense):
                clean[g] = dense
        return GroupRingElement(self, clean)

    def zero(self) -> "GroupRingElement":
        return GroupRingElement(self, {})

    def one(self) -> "GroupRingElement":
        return self.element({self.group.identity(): self.algebra.identity})

    def unit(self, g, coeff=None) -> "GroupRingElement":
        """u_g, or a*u_g when a coefficient vector is given."""
        if coeff is None:
            coeff = self.algebra.identity
        return self.element({g: coeff})

    # -- crossed-product data ------------------------------------------------

    def apply_action(self, g, dense):
        if not self.is_crossed:
            return tuple(dense)
        return _mat_vec(self.algebra.field, self.action[self.group.normalize(g)], dense)

    def cocycle_value(self, g, h):
        if not self.is_crossed:
            return self.algebra.identity
        return self.cocycle[(self.group.normalize(g), self.group.normalize(h))]

    # -- flattening ----------------------------------------------------------

    def as_graded_algebra(self, split_map=None):
        """Structure-constant graded algebra on basis {b_i u_g}; finite G only."""
        from .graded import GradedAlgebra

        group = self.group
        if not isinstance(group, FiniteTableGroup):
            raise InfiniteGroupError("flattening requires a finite group")
        alg = self.algebra
        field = alg.field
        n, d = group.order, alg.dim
        labels = []
        for g in group.elements():
            for i in range(d):
                if d == 1:
                    labels.append(f"u[{group.describe(g)}]")
                else:
                    labels.append(f"{alg.labels[i]}*u[{group.describe(g)}]")
        products = {}
        for g in group.elements():
            for i in range(d):
                row_idx = g * d + i
                bi = alg.basis_element(i)
                for h in group.elements():
                    for j in range(d):
                        col_idx = h * d + j
                        bj = alg.to_dense(alg.basis_element(j))
                        acted = self.apply_action(g, bj)
                        prod = alg.multiply(bi, alg.to_sparse(acted))
                        prod = alg.multiply(prod, alg.to_sparse(self.cocycle_value(g, h)))
                        k = group.mul(g, h)
                        entry = {k * d + t: c for t, c in
                                 ((t, prod.get(t)) for t in range(d)) if c is not None}
                        entry = {idx: c for idx, c in entry.items() if not field.is_zero(c)}
                        if entry:
                            products[(row_idx, col_idx)] = entry
        e = group.identity()
        identity = [field.zero] * (n * d)
        for i in range(d):
            identity[e * d + i] = alg.identity[i]
        flat = make_algebra(field, tuple(labels), products, identity=tuple(identity),
                            split_map=split_map,
                            builtin=None)
        degrees = [g for g in group.elements() for _ in range(d)]
        gname = f"{self.name or 'group ring'} (flattened)"
        return GradedAlgebra(flat, group, degrees, name=gname)

    def element_to_graded(self, x: "GroupRingElement", graded):
        d = self.algebra.dim
        coords = {}
        for g, dense in x.terms.items():
            for i, c in enumerate(dense):
                if not self.algebra.field.is_zero(c):
                    coords[g * d + i] = c
        return graded.element(coords)

    def element_from_graded(self, v) -> "GroupRingElement":
        d = self.algebra.dim
        terms = {}
        for idx, c in v.coords.items():
            g, i = divmod(idx, d)
            vec = terms.setdefault(g, [self.algebra.field.zero] * d)
            vec[i] = c
        return self.element(terms)

    def __repr__(self):
        kind = "crossed product" if self.is_crossed else "group ring"
        return f"GroupRing({self.name or kind!r})"


class GroupRingElement:
    """Finitely supported formal sum; terms maps group element -> dense coeff."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: GroupRing, terms: dict):
        self.ring = ring
        self.terms = terms

    def _check_mate(self, other):
        if not isinstance(other, GroupRingElement) or other.ring is not self.ring:
            raise GroupRingError("elements belong to different group rings")

    def __add__(self, other):
        self._check_mate(other)
        field = self.ring.algebra.field
        out = dict(self.terms)
        for g, vec in other.terms.items():
            cur = out.get(g)
            if cur is None:
                out[g] = vec
            else:
                s = tuple(field.add(a, b) for a, b in zip(cur, vec))
                if any(not field.is_zero(c) for c in s):
                    out[g] = s
                else:
                    del out[g]
        return GroupRingElement(self.ring, out)

    def __neg__(self):
        field = self.ring.algebra.field
        return GroupRingElement(
            self.ring,
            {g: tuple(field.neg(c) for c in vec) for g, vec in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check_mate(other)
        ring = self.ring
        alg = ring.algebra
        field = alg.field
        group = ring.group
        acc = {}
        for g, avec in self.terms.items():
            a = alg.to_sparse(avec)
            for h, bvec in other.terms.items():
                acted = ring.apply_action(g, bvec) if ring.is_crossed else bvec
                prod = alg.multiply(a, alg.to_sparse(acted))
                if ring.is_crossed:
                    prod = alg.multiply(prod, alg.to_sparse(ring.cocycle_value(g, h)))
                if not prod:
                    continue
                k = group.mul(g, h)
                cur = acc.setdefault(k, [field.zero] * alg.dim)
                for t, c in prod.items():
                    cur[t] = field.add(cur[t], c)
        out = {}
        for k, vec in acc.items():
            if any(not field.is_zero(c) for c in vec):
                out[k] = tuple(vec)
        return GroupRingElement(self.ring, out)

    def scale(self, scalar):
        field = self.ring.algebra.field
        if field.is_zero(scalar):
            return GroupRingElement(self.ring, {})
        return GroupRingElement(
            self.ring,
            {g: tuple(field.mul(scalar, c) for c in vec) for g, vec in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement) or other.ring is not self.ring:
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        raise TypeError("group ring elements are not hashable")

    def coefficient(self, g):
        g = self.ring.group.normalize(g)
        return self.terms.get(g, tuple([self.ring.algebra.field.zero] * self.ring.algebra.dim))

    def support(self) -> frozenset:
        return frozenset(self.terms)

    def support_group(self, cap: int):
        return subgroup_closure(self.ring.group, self.support(), cap)

    def is_idempotent(self) -> bool:
        return (self * self) == self

    def is_central(self) -> bool:
        """Commutation with a finite ring generating set (see module docstring)."""
        ring = self.ring
        alg = ring.algebra
        e = ring.group.identity()
        for i in range(alg.dim):
            vec = alg.to_dense(alg.basis_element(i))
            probe = ring.element({e: vec})
            if (self * probe) != (probe * self):
                return False
        for g in ring.group.generators():
            probe = ring.unit(g)
            if (self * probe) != (probe * self):
                return False
        return True

    def describe(self) -> str:
        if not self.terms:
            return "0"
        alg = self.ring.algebra
        group = self.ring.group
        bits = []
        for g in sorted(self.terms, key=group.sort_key):
            coeff = alg.format_vector(alg.to_sparse(self.terms[g]))
            if coeff == "1":
                bits.append(f"u[{group.describe(g)}]")
            else:
                bits.append(f"({coeff})*u[{group.describe(g)}]")
        return " + ".join(bits)

    def __repr__(self):
        return f"<{self.describe()}>"


# Functional aliases --------------------------------------------------------


def gr_mul(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    return x * y


def gr_is_central(f: GroupRingElement) -> bool:
    return f.is_central()


def gr_is_idempotent(f: GroupRingElement) -> bool:
    return f.is_idempotent()


def gr_support_group(f: GroupRingElement, cap: int):
    return f.support_group(cap)


def group_ring(algebra: Algebra, group: Group, name=None) -> GroupRing:
    return GroupRing(algebra, group, name=name)


def crossed_product(algebra: Algebra, group: FiniteTableGroup, action, cocycle,
                    name=None) -> GroupRing:
    """Crossed product with action given on a generating set (or all of G)
    and the cocycle given on all pairs.  Everything is validated."""
    return GroupRing(algebra, group, action=action, cocycle=cocycle, name=name)


# Crossed-product validation -------------------------------------------------


def _validate_crossed(alg: Algebra, group: FiniteTableGroup, action, cocycle):
    field = alg.field
    d = alg.dim
    e = group.identity()

    def as_dense_elt(value):
        if isinstance(value, (list, tuple)):
            dense = tuple(value)
            if len(dense) != d:
                raise CrossedProductError("cocycle value has the wrong dimension")
            return dense
        # scalar shorthand: value * 1_A
        return tuple(field.mul(value, c) for c in alg.identity)

    # -- cocycle table over all pairs
    sigma = {}
    for (g, h), value in cocycle.items():
        sigma[(group.normalize(g), group.normalize(h))] = as_dense_elt(value)
    for g in group.elements():
        for h in group.elements():
            if (g, h) not in sigma:
                raise CrossedProductError(f"cocycle missing pair ({g}, {h})")
    sigma_inv = {}
    for key, value in sigma.items():
        inv = algebra_inverse(alg, value)
        if inv is None:
            raise CrossedProductError(f"cocycle value at {key} is not invertible")
        sigma_inv[key] = inv
    one = alg.identity
    for g in group.elements():
        if sigma[(e, g)] != one or sigma[(g, e)] != one:
            raise CrossedProductError("cocycle is not normalized (sigma(e,g)=sigma(g,e)=1)")

    # -- action: given on a generating subset, extended along a BFS by the
    #    twisted rule alpha_{gh} = Ad(sigma(g,h))^{-1} . alpha_g . alpha_h
    def as_matrix(value):
        rows = [tuple(row) for row in value]
        if len(rows) != d or any(len(r) != d for r in rows):
            raise CrossedProductError("action matrix has the wrong shape")
        return tuple(rows)

    alpha = {}
    for g, mat in action.items():
        alpha[group.normalize(g)] = as_matrix(mat)
    identity_mat = tuple(tuple(field.one if i == j else field.zero for j in range(d))
                         for i in range(d))
    alpha.setdefault(e, identity_mat)
    if alpha[e] != identity_mat:
        raise CrossedProductError("the action of the identity must be trivial")

    def compose_twisted(g, h):
        # matrix of b -> sigma(g,h)^{-1} * alpha_g(alpha_h(b)) * sigma(g,h)
        s = alg.to_sparse(sigma[(g, h)])
        s_inv = alg.to_sparse(sigma_inv[(g, h)])
        cols = []
        for j in range(d):
            bj = alg.to_dense(alg.basis_element(j))
            v = _mat_vec(field, alpha[h], bj)
            v = _mat_vec(field, alpha[g], v)
            prod = alg.multiply(s_inv, alg.to_sparse(v))
            prod = alg.multiply(prod, s)
            cols.append(alg.to_dense(prod))
        return tuple(tuple(cols[j][i] for j in range(d)) for i in range(d))

    frontier = [g for g in alpha]
    while frontier:
        nxt = []
        for g in frontier:
            for h in list(alpha):
                k = group.mul(g, h)
                if k not in alpha:
                    alpha[k] = compose_twisted(g, h)
                    nxt.append(k)
        frontier = nxt
    if len(alpha) != group.order:
        raise CrossedProductError("the action table does not generate the whole group")

    # -- each alpha_g is a unital algebra automorphism
    for g in group.elements():
        mat = alpha[g]
        rows = [list(r) for r in mat]
        from .coeff import matrix_rank
        if matrix_rank(rows, field) != d:
            raise CrossedProductError(f"action of {group.describe(g)} is singular")
        if _mat_vec(field, mat, one) != tuple(one):
            raise CrossedProductError(f"action of {group.describe(g)} does not fix 1")
        for i in range(d):
            bi = alg.to_dense(alg.basis_element(i))
            for j in range(d):
                bj = alg.to_dense(alg.basis_element(j))
                lhs = _mat_vec(field, mat, alg.to_dense(
                    alg.multiply(alg.to_sparse(bi), alg.to_sparse(bj))))
                rhs = alg.multiply(alg.to_sparse(_mat_vec(field, mat, bi)),
                                   alg.to_sparse(_mat_vec(field, mat, bj)))
                if alg.to_sparse(lhs) != rhs:
                    raise CrossedProductError(
                        f"action of {group.describe(g)} is not multiplicative")

    # -- twisted compatibility on all pairs
    for g in group.elements():
        for h in group.elements():
            if alpha[group.mul(g, h)] != compose_twisted(g, h):
                raise CrossedProductError(
                    "action/cocycle compatibility fails at "
                    f"({group.describe(g)}, {group.describe(h)})")

    # -- cocycle identity on all triples
    for g in group.elements():
        for h in group.elements():
            for k in group.elements():
                lhs = alg.multiply(alg.to_sparse(sigma[(g, h)]),
                                   alg.to_sparse(sigma[(group.mul(g, h), k)]))
                acted = _mat_vec(field, alpha[g], sigma[(h, k)])
                rhs = alg.multiply(alg.to_sparse(acted),
                                   alg.to_sparse(sigma[(g, group.mul(h, k))]))
                if lhs != rhs:
                    raise CrossedProductError(
                        "cocycle identity fails at "
                        f"({group.describe(g)}, {group.describe(h)}, {group.describe(k)})")

    return alpha, sigma
