"""Group-graded algebras: components, supports, and hypothesis checks.

A graded algebra is a coefficient :class:`~grl.coeff.Algebra` together
with a group and a degree for every basis vector; the structure constants
must respect the grading (the product of basis vectors of degrees g and h
only touches basis vectors of degree g*h), which is validated exhaustively
at construction.

On top of the element arithmetic this module implements the structural
checks the verification harness quantifies over:

* one-sided non-annihilation of homogeneous elements by supported
  components (``check_condition``),
* strong grading restricted to the support (``check_strongly_graded``),
* graded non-degeneracy (``check_non_degenerate``),
* primeness of the identity component (``principal_primeness``),
* s-unitality (``is_s_unital``),
* complete enumeration of central idempotents (``central_idempotents``).

Enumeration is exact: over a prime field it walks the Frobenius-fixed
subspace of the center (every idempotent satisfies f^p = f, so nothing is
missed); over Q it requires a validated split map on the coefficient
algebra, in which case the idempotents are exactly the images of the 0/1
split vectors.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .coeff import Algebra, PrimeField, RationalField, Subspace, invert_matrix, kernel_basis, matrix_rank
from .groups import ExceedsCap, Group, subgroup_closure


class GradingError(ValueError):
    pass


class BudgetExceededError(RuntimeError):
    """An enumeration would need more candidates than the budget allows."""

    def __init__(self, required, budget):
        super().__init__(f"enumeration needs {required} candidates, budget is {budget}")
        self.required = required
        self.budget = budget


class EnumerationUnsupportedError(RuntimeError):
    """No exact enumeration method applies to this instance."""


class GradedAlgebra:
    """A validated group grading on a coefficient algebra."""

    def __init__(self, algebra: Algebra, group: Group, degrees, name=None):
        if len(degrees) != algebra.dim:
            raise GradingError("one degree per basis vector required")
        degs = tuple(group.normalize(d) for d in degrees)
        for i in range(algebra.dim):
            for j in range(algebra.dim):
                target = group.mul(degs[i], degs[j])
                for k in algebra.table[i][j]:
                    if degs[k] != target:
                        raise GradingError(
                            f"product {algebra.labels[i]}*{algebra.labels[j]} leaves "
                            f"its component: {algebra.labels[k]} has degree "
                            f"{group.describe(degs[k])}, expected {group.describe(target)}"
                        )
        self.algebra = algebra
        self.group = group
        self.degrees = degs
        self.name = name
        self._by_degree = {}
        for i, d in enumerate(degs):
            self._by_degree.setdefault(d, []).append(i)
        self._support_order = []
        for d in degs:
            if d not in self._support_order:
                self._support_order.append(d)

    def component_indices(self, g):
        return tuple(self._by_degree.get(self.group.normalize(g), ()))

    def support_degrees(self):
        """Degrees with a nonzero component, in first-occurrence basis order."""
        return tuple(self._support_order)

    def element(self, coords: dict) -> "GradedElement":
        clean = {}
        for k, c in coords.items():
            if not 0 <= k < self.algebra.dim:
                raise GradingError(f"coordinate index {k} out of range")
            if not self.algebra.field.is_zero(c):
                clean[k] = c
        return GradedElement(self, clean)

    def element_from_dense(self, vec) -> "GradedElement":
        return self.element({k: c for k, c in enumerate(vec)})

    def element_from_labels(self, parts: dict) -> "GradedElement":
        """Element from {basis label: scalar string} for readable fixtures."""
        coords = {}
        for label, text in parts.items():
            try:
                idx = self.algebra.labels.index(label)
            except ValueError:
                raise GradingError(f"no basis vector labelled {label!r}") from None
            coords[idx] = self.algebra.field.parse(text)
        return self.element(coords)

    def zero(self) -> "GradedElement":
        return GradedElement(self, {})

    def identity_element(self) -> Optional["GradedElement"]:
        if self.algebra.identity is None:
            return None
        return self.element_from_dense(self.algebra.identity)

    def basis_vector(self, i: int) -> "GradedElement":
        return GradedElement(self, {i: self.algebra.field.one})

    def __repr__(self):
        return f"GradedAlgebra({self.name or self.algebra!r} over {self.group!r})"


class GradedElement:
    """Sparse element of a graded algebra; stores no zero coordinates."""

    __slots__ = ("ring", "coords")

    def __init__(self, ring: GradedAlgebra, coords: dict):
        self.ring = ring
        self.coords = coords

    def _check_mate(self, other):
        if not isinstance(other, GradedElement) or other.ring is not self.ring:
            raise GradingError("elements belong to different graded algebras")

    def __add__(self, other):
        self._check_mate(other)
        return GradedElement(self.ring, self.ring.algebra.add(self.coords, other.coords))

    def __sub__(self, other):
        self._check_mate(other)
        return self + (-other)

    def __neg__(self):
        field = self.ring.algebra.field
        return GradedElement(self.ring, {k: field.neg(v) for k, v in self.coords.items()})

    def __mul__(self, other):
        self._check_mate(other)
        return GradedElement(self.ring, self.ring.algebra.multiply(self.coords, other.coords))

    def scale(self, scalar):
        return GradedElement(self.ring, self.ring.algebra.scale(scalar, self.coords))

    def scale_int(self, n: int):
        return self.scale(self.ring.algebra.field.from_int(n))

    def __eq__(self, other):
        if not isinstance(other, GradedElement) or other.ring is not self.ring:
            return NotImplemented
        return self.coords == other.coords

    def __bool__(self):
        return bool(self.coords)

    def __hash__(self):
        raise TypeError("graded elements are not hashable")

    def dense(self):
        return self.ring.algebra.to_dense(self.coords)

    def component(self, g) -> "GradedElement":
        g = self.ring.group.normalize(g)
        degs = self.ring.degrees
        return GradedElement(self.ring, {k: c for k, c in self.coords.items() if degs[k] == g})

    def support(self) -> frozenset:
        degs = self.ring.degrees
        return frozenset(degs[k] for k in self.coords)

    def support_group(self, cap: int):
        return subgroup_closure(self.ring.group, self.support(), cap)

    def is_idempotent(self) -> bool:
        return (self * self) == self

    def is_central(self) -> bool:
        alg = self.ring.algebra
        for i in range(alg.dim):
            b = alg.basis_element(i)
            if alg.multiply(self.coords, b) != alg.multiply(b, self.coords):
                return False
        return True

    def __repr__(self):
        return f"<{self.ring.algebra.format_vector(self.coords)}>"


def make_graded(algebra, group, degrees, name=None) -> GradedAlgebra:
    return GradedAlgebra(algebra, group, degrees, name=name)


# ---------------------------------------------------------------------------
# Structural checks.


@dataclass(frozen=True)
class ConditionCheck:
    """Outcome of a one-sided non-annihilation check.

    ``side`` is "left" (components multiply from the left) or "right".
    When it fails, ``witness`` is a nonzero homogeneous element of degree
    ``witness_h`` annihilated by the whole component of degree
    ``witness_g``.
    """

    side: str
    holds: bool
    witness_g: object = None
    witness_h: object = None
    witness: object = None


def check_condition(ring: GradedAlgebra, side: str,
                    pair_filter: Optional[Callable] = None) -> ConditionCheck:
    """For every supported g, does the degree-g component annihilate no
    nonzero homogeneous element (from the given side)?

    Iterates degree pairs in first-occurrence basis order and reports the
    first nonzero kernel found, so the witness is deterministic.
    ``pair_filter(g, h)`` can restrict the quantified pairs; truncated
    models of infinite gradings use it to skip pairs whose products fall
    outside the represented window.
    """
    if side not in ("left", "right"):
        raise GradingError("side must be 'left' or 'right'")
    alg = ring.algebra
    field = alg.field
    for g in ring.support_degrees():
        g_idx = ring.component_indices(g)
        for h in ring.support_degrees():
            if pair_filter is not None and not pair_filter(g, h):
                continue
            h_idx = ring.component_indices(h)
            rows = []
            for a in g_idx:
                ba = alg.basis_element(a)
                prods = []
                for b in h_idx:
                    bb = alg.basis_element(b)
                    p = alg.multiply(ba, bb) if side == "left" else alg.multiply(bb, ba)
                    prods.append(alg.to_dense(p))
                for k in range(alg.dim):
                    rows.append([prods[col][k] for col in range(len(h_idx))])
            kernel = kernel_basis(rows, len(h_idx), field)
            if kernel:
                vec = kernel[0]
                witness = ring.element({h_idx[c]: vec[c] for c in range(len(h_idx))})
                return ConditionCheck(side, False, witness_g=g, witness_h=h, witness=witness)
    return ConditionCheck(side, True)


@dataclass(frozen=True)
class StrongGradingCheck:
    """status: 'strong_on_support' | 'support_not_closed' | 'fails'."""

    status: str
    witness_g: object = None
    witness_h: object = None

    @property
    def holds(self):
        return self.status == "strong_on_support"


def check_strongly_graded(ring: GradedAlgebra) -> StrongGradingCheck:
    """Is R_g R_h = R_{gh} for all supported degrees?

    The support must first be a subgroup; if it is not, the verdict is
    ``support_not_closed`` (the grading cannot be strong on its support).
    """
    group = ring.group
    supp = ring.support_degrees()
    supp_set = set(supp)
    for g in supp:
        if group.inv(g) not in supp_set:
            return StrongGradingCheck("support_not_closed", witness_g=g)
        for h in supp:
            if group.mul(g, h) not in supp_set:
                return StrongGradingCheck("support_not_closed", witness_g=g, witness_h=h)
    alg = ring.algebra
    field = alg.field
    for g in supp:
        for h in supp:
            gh = group.mul(g, h)
            target = ring.component_indices(gh)
            rows = []
            for a in ring.component_indices(g):
                for b in ring.component_indices(h):
                    rows.append(alg.to_dense(alg.multiply(alg.basis_element(a),
                                                          alg.basis_element(b))))
            if matrix_rank(rows, field) < len(target):
                return StrongGradingCheck("fails", witness_g=g, witness_h=h)
    return StrongGradingCheck("strong_on_support")


@dataclass(frozen=True)
class NonDegeneracyCheck:
    """side='right' checks r*R_{g^-1} != 0, side='left' checks R_{g^-1}*r != 0."""

    side: str
    holds: bool
    witness_g: object = None
    witness: object = None


def check_non_degenerate(ring: GradedAlgebra, side: str) -> NonDegeneracyCheck:
    """No nonzero r in R_g may annihilate the whole opposite component."""
    if side not in ("left", "right"):
        raise GradingError("side must be 'left' or 'right'")
    alg = ring.algebra
    field = alg.field
    group = ring.group
    for g in ring.support_degrees():
        g_idx = ring.component_indices(g)
        inv_idx = ring.component_indices(group.inv(g))
        rows = []
        for b in inv_idx:
            bb = alg.basis_element(b)
            prods = []
            for a in g_idx:
                ba = alg.basis_element(a)
                p = alg.multiply(ba, bb) if side == "right" else alg.multiply(bb, ba)
                prods.append(alg.to_dense(p))
            for k in range(alg.dim):
                rows.append([prods[col][k] for col in range(len(g_idx))])
        kernel = kernel_basis(rows, len(g_idx), field)
        if kernel:
            vec = kernel[0]
            witness = ring.element({g_idx[c]: vec[c] for c in range(len(g_idx))})
            return NonDegeneracyCheck(side, False, witness_g=g, witness=witness)
    return NonDegeneracyCheck(side, True)


@dataclass(frozen=True)
class PrimenessCheck:
    """status: 'prime' | 'not_prime' | 'unsupported'."""

    status: str
    witness_a: object = None
    witness_b: object = None
    reason: str = ""


def principal_primeness(ring: GradedAlgebra, budget: int = 10**6) -> PrimenessCheck:
    """Primeness of the identity component as a ring: a R_e b = 0 forces a=0 or b=0.

    Over a prime field the quantifier over a runs exhaustively (gated by
    ``budget``) with the inner quantifier reduced to a kernel computation.
    Over Q the check is exact for split-mapped coefficient algebras
    (disjoint-support subspaces) and falls back to the declared flag of a
    built-in algebra when the grading is trivial; anything else is
    reported unsupported.
    """
    alg = ring.algebra
    field = alg.field
    group = ring.group
    e_idx = ring.component_indices(group.identity())
    de = len(e_idx)
    if de == 0:
        return PrimenessCheck("prime", reason="zero identity component")
    if isinstance(field, PrimeField):
        total = field.p ** de
        if total > budget:
            return PrimenessCheck("unsupported",
                                  reason=f"|R_e| = {total} exceeds budget {budget}")
        import itertools as _it
        for avec in _it.product(range(field.p), repeat=de):
            a = {e_idx[i]: avec[i] for i in range(de) if avec[i]}
            if not a:
                continue
            rows = []
            for m in e_idx:
                am = alg.multiply(a, alg.basis_element(m))
                prods = [alg.to_dense(alg.multiply(am, alg.basis_element(b))) for b in e_idx]
                for k in range(alg.dim):
                    rows.append([prods[col][k] for col in range(de)])
            kernel = kernel_basis(rows, de, field)
            if kernel:
                bvec = kernel[0]
                b = {e_idx[i]: bvec[i] for i in range(de) if not field.is_zero(bvec[i])}
                return PrimenessCheck("not_prime",
                                      witness_a=ring.element(a), witness_b=ring.element(b))
        return PrimenessCheck("prime")
    if alg.split_map is not None:
        # Componentwise model: a x b = 0 for all x in R_e iff a and b have
        # disjoint split supports.  Scan subspaces cut out by coordinate
        # subsets, smallest subsets first, for a deterministic witness.
        rows = [list(r) for r in alg.split_map]
        basis_split = []
        for i in e_idx:
            dense = alg.to_dense(alg.basis_element(i))
            basis_split.append([
                sum((rows[r][c] * dense[c] for c in range(alg.dim)), field.zero)
                for r in range(alg.dim)
            ])
        supp_coords = [r for r in range(alg.dim)
                       if any(not field.is_zero(v[r]) for v in basis_split)]
        import itertools as _it
        n = len(supp_coords)
        for size in range(1, n):
            for subset in _it.combinations(range(n), size):
                inside = set(subset)

                def vectors_supported(coord_positions):
                    constr = [[v[supp_coords[r]] for v in basis_split]
                              for r in range(n) if r not in coord_positions]
                    return kernel_basis(constr, de, field)

                ka = vectors_supported(inside)
                kb = vectors_supported(set(range(n)) - inside)
                if ka and kb:
                    a = ring.element({e_idx[i]: ka[0][i] for i in range(de)
                                      if not field.is_zero(ka[0][i])})
                    b = ring.element({e_idx[i]: kb[0][i] for i in range(de)
                                      if not field.is_zero(kb[0][i])})
                    return PrimenessCheck("not_prime", witness_a=a, witness_b=b)
        return PrimenessCheck("prime")
    if de == alg.dim and alg.prime_flag is not None:
        if alg.prime_flag:
            return PrimenessCheck("prime", reason="declared by built-in algebra")
        wa, wb = alg.prime_witness
        return PrimenessCheck("not_prime", witness_a=ring.element(dict(wa)),
                              witness_b=ring.element(dict(wb)),
                              reason="declared by built-in algebra")
    return PrimenessCheck("unsupported",
                          reason="no exact primeness method over Q for this instance")


def is_s_unital(ring: GradedAlgebra, size_cap: int = 4096):
    """Does every r satisfy r in rR and r in Rr?

    True immediately for unital algebras.  Otherwise, over a prime field
    with at most ``size_cap`` elements the condition is checked
    exhaustively (returns a witness element on failure); anything larger,
    or over Q, returns None (unknown).
    """
    alg = ring.algebra
    field = alg.field
    if alg.identity is not None:
        return True
    if not isinstance(field, PrimeField):
        return None
    total = field.p ** alg.dim
    if total > size_cap:
        return None
    import itertools as _it
    for vec in _it.product(range(field.p), repeat=alg.dim):
        r = {k: vec[k] for k in range(alg.dim) if vec[k]}
        if not r:
            continue
        dense_r = alg.to_dense(r)
        right = [alg.to_dense(alg.multiply(r, alg.basis_element(i))) for i in range(alg.dim)]
        left = [alg.to_dense(alg.multiply(alg.basis_element(i), r)) for i in range(alg.dim)]
        for span in (right, left):
            cols = list(zip(*span)) if span else []
            rows = [list(col) for col in cols]
            art = matrix_rank(rows, field)
            aug = [list(col) + [dense_r[k]] for k, col in enumerate(cols)]
            if matrix_rank(aug, field) != art:
                return ring.element(r)
    return True


# ---------------------------------------------------------------------------
# Central idempotent enumeration.


def central_idempotents(ring: GradedAlgebra, budget: int = 10**6):
    """All central idempotents of the coefficient algebra, exactly.

    Over F_p: gated by p^z <= budget for center dimension z; internally
    only the Frobenius-fixed subspace {x in Z(A) : x^p = x} is walked,
    which contains every idempotent.  Over Q: requires a split map.
    The result is sorted by dense coordinates, so it is deterministic.
    """
    alg = ring.algebra
    field = alg.field
    if isinstance(field, PrimeField):
        return _enumerate_fp(ring, budget)
    if alg.split_map is not None:
        return _enumerate_split(ring, budget)
    raise EnumerationUnsupportedError(
        "exact enumeration over Q needs a split coefficient algebra")


def _enumerate_fp(ring: GradedAlgebra, budget: int):
    alg = ring.algebra
    field = alg.field
    p = field.p
    center = center_basis_cached(alg)
    z = len(center)
    if p ** z > budget:
        raise BudgetExceededError(p ** z, budget)
    sub = Subspace(field, center, alg.dim)
    frob_cols = []
    for v in center:
        sv = alg.to_sparse(v)
        acc = sv
        for _ in range(p - 1):
            acc = alg.multiply(acc, sv)
        coords = sub.coords_of(alg.to_dense(acc))
        if coords is None:
            raise AssertionError("center is not closed under powers")
        frob_cols.append(coords)
    rows = []
    for r in range(z):
        rows.append([field.sub(frob_cols[c][r], field.one if r == c else field.zero)
                     for c in range(z)])
    fixed = kernel_basis(rows, z, field)
    w_vectors = []
    for coeffs in fixed:
        dense = [field.zero] * alg.dim
        for c, coeff in enumerate(coeffs):
            if field.is_zero(coeff):
                continue
            for k in range(alg.dim):
                dense[k] = field.add(dense[k], field.mul(coeff, center[c][k]))
        w_vectors.append(dense)
    import itertools as _it
    found = []
    for combo in _it.product(range(p), repeat=len(w_vectors)):
        dense = [field.zero] * alg.dim
        for j, c in enumerate(combo):
            if c:
                for k in range(alg.dim):
                    dense[k] = field.add(dense[k], field.mul(c, w_vectors[j][k]))
        f = alg.to_sparse(dense)
        if alg.multiply(f, f) == f:
            found.append(f)
    return _sorted_elements(ring, found)


def _enumerate_split(ring: GradedAlgebra, budget: int):
    alg = ring.algebra
    field = alg.field
    d = alg.dim
    if 2 ** d > budget:
        raise BudgetExceededError(2 ** d, budget)
    inverse = invert_matrix([list(r) for r in alg.split_map], field)
    if inverse is None:
        raise AssertionError("validated split map must be invertible")
    import itertools as _it
    found = []
    for bits in _it.product((field.zero, field.one), repeat=d):
        dense = [
            sum((field.mul(inverse[k][r], bits[r]) for r in range(d)), field.zero)
            for k in range(d)
        ]
        f = alg.to_sparse(dense)
        if alg.multiply(f, f) != f:
            raise AssertionError("split preimage of a 0/1 vector must be idempotent")
        found.append(f)
    return _sorted_elements(ring, found)


def _sorted_elements(ring, sparse_list):
    alg = ring.algebra
    seen = []
    keys = set()
    for f in sparse_list:
        key = tuple(alg.to_dense(f))
        if key not in keys:
            keys.add(key)
            seen.append((key, f))
    seen.sort(key=lambda kv: kv[0])
    return [ring.element(f) for _, f in seen]


def center_basis_cached(alg: Algebra):
    hit = getattr(alg, "_center_basis_memo", None)
    if hit is None:
        from .coeff import center_basis
        hit = center_basis(alg)
        alg._center_basis_memo = hit
    return hit
