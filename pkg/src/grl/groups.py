"""Group arithmetic with unique normal forms.

Three group families are supported, each with decidable equality,
multiplication, inversion and a declared generating set:

* :class:`FiniteTableGroup` -- finite groups given by a Cayley table,
  fully validated at construction (Latin square, identity, inverses,
  associativity, generating set).
* :class:`FreeAbelianGroup` -- Z^k written additively, with length-k
  integer tuples as elements.
* :class:`InfiniteDihedralGroup` -- the infinite dihedral group
  <s, t | s^2 = t^2 = e>.  Elements are kept in the normal form
  ``(shift, flip)`` meaning ``z^shift * s^flip`` where ``z := t*s``
  generates the translation subgroup; ``s = (0, True)`` and
  ``t = (1, True)``.

Closure, conjugacy and order computations either return exact finite
answers or report that a size cap was exceeded.  For the infinite kinds
the infinite verdicts are consequences of the normal form, not guesses.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple


class GroupError(ValueError):
    """Base class for group construction and arithmetic errors."""


class KindMismatchError(GroupError):
    """An element does not belong to the group it was used with."""


class TableValidationError(GroupError):
    """A Cayley table fails one of the group axioms."""


class NotSubgroupError(GroupError):
    """A set of elements is not closed under the group operations."""


class NotNormalError(GroupError):
    """A subgroup is not invariant under conjugation."""


@dataclass(frozen=True)
class ExceedsCap:
    """Marker: an enumeration grew past ``cap`` elements and was stopped."""

    cap: int


class DihedralElement(NamedTuple):
    shift: int
    flip: bool


class Group:
    """Common interface of the three group kinds."""

    is_finite: bool
    is_abelian: bool
    is_torsion_free: bool

    def identity(self):
        raise NotImplementedError

    def normalize(self, x):
        """Validate membership and return the canonical form of ``x``."""
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def generators(self) -> tuple:
        raise NotImplementedError

    def describe(self, x) -> str:
        """Short human-readable label of an element."""
        raise NotImplementedError

    def sort_key(self, x):
        """Total order on elements, used for deterministic reports."""
        raise NotImplementedError

    def power(self, x, n: int):
        x = self.normalize(x)
        if n < 0:
            x, n = self.inv(x), -n
        acc = self.identity()
        for _ in range(n):
            acc = self.mul(acc, x)
        return acc


class FiniteTableGroup(Group):
    """A finite group presented by its full Cayley table.

    Elements are integer indices ``0..n-1``.  The table is validated on
    construction: every row and column must be a permutation, a two-sided
    identity and inverses must exist, associativity is checked on all
    triples, and the declared generating set must generate the group.
    """

    is_finite = True
    is_torsion_free = False

    def __init__(self, table, labels, generators=None, name=None):
        n = len(table)
        if n == 0:
            raise TableValidationError("empty table")
        if len(labels) != n or len(set(labels)) != n:
            raise TableValidationError("labels must be distinct, one per element")
        tbl = tuple(tuple(row) for row in table)
        full = frozenset(range(n))
        for i, row in enumerate(tbl):
            if len(row) != n:
                raise TableValidationError(f"row {i} has length {len(row)}, expected {n}")
            if frozenset(row) != full:
                raise TableValidationError(f"row {i} is not a permutation")
        for j in range(n):
            if frozenset(tbl[i][j] for i in range(n)) != full:
                raise TableValidationError(f"column {j} is not a permutation")
        ident = None
        for e in range(n):
            if all(tbl[e][i] == i and tbl[i][e] == i for i in range(n)):
                ident = e
                break
        if ident is None:
            raise TableValidationError("no two-sided identity")
        inverses = [None] * n
        for i in range(n):
            for j in range(n):
                if tbl[i][j] == ident and tbl[j][i] == ident:
                    inverses[i] = j
                    break
            if inverses[i] is None:
                raise TableValidationError(f"element {labels[i]} has no inverse")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if tbl[tbl[a][b]][c] != tbl[a][tbl[b][c]]:
                        raise TableValidationError(
                            f"associativity fails at ({labels[a]}, {labels[b]}, {labels[c]})"
                        )
        self.table = tbl
        self.labels = tuple(labels)
        self.order = n
        self._identity = ident
        self._inverses = tuple(inverses)
        self.is_abelian = all(tbl[a][b] == tbl[b][a] for a in range(n) for b in range(n))
        self.is_torsion_free = n == 1
        self.name = name
        gens = tuple(self.normalize(g) for g in generators) if generators is not None else tuple(range(n))
        reached = {ident}
        frontier = [ident]
        pool = set(gens) | {self._inverses[g] for g in gens}
        while frontier:
            nxt = []
            for x in frontier:
                for g in pool:
                    y = tbl[x][g]
                    if y not in reached:
                        reached.add(y)
                        nxt.append(y)
            frontier = nxt
        if len(reached) != n:
            raise TableValidationError("declared generators do not generate the group")
        self._generators = gens

    def identity(self):
        return self._identity

    def normalize(self, x):
        if isinstance(x, bool) or not isinstance(x, int):
            raise KindMismatchError(f"expected an element index, got {x!r}")
        if not 0 <= x < self.order:
            raise KindMismatchError(f"index {x} out of range for group of order {self.order}")
        return x

    def mul(self, a, b):
        return self.table[self.normalize(a)][self.normalize(b)]

    def inv(self, a):
        return self._inverses[self.normalize(a)]

    def generators(self):
        return self._generators

    def elements(self):
        return range(self.order)

    def describe(self, x):
        return self.labels[self.normalize(x)]

    def sort_key(self, x):
        return self.normalize(x)

    def index_of_label(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise KindMismatchError(f"no element labelled {label!r}") from None

    def __repr__(self):
        return f"FiniteTableGroup({self.name or 'order %d' % self.order})"


class FreeAbelianGroup(Group):
    """Z^k, written additively; elements are length-k tuples of ints."""

    is_finite = False
    is_abelian = True
    is_torsion_free = True

    def __init__(self, rank: int):
        if rank < 1:
            raise GroupError("rank must be >= 1")
        self.rank = rank

    def identity(self):
        return (0,) * self.rank

    def normalize(self, x):
        if not isinstance(x, (tuple, list)) or len(x) != self.rank:
            raise KindMismatchError(f"expected a length-{self.rank} integer tuple, got {x!r}")
        out = []
        for c in x:
            if isinstance(c, bool) or not isinstance(c, int):
                raise KindMismatchError(f"non-integer coordinate in {x!r}")
            out.append(c)
        return tuple(out)

    def mul(self, a, b):
        a, b = self.normalize(a), self.normalize(b)
        return tuple(x + y for x, y in zip(a, b))

    def inv(self, a):
        return tuple(-x for x in self.normalize(a))

    def generators(self):
        return tuple(tuple(1 if j == i else 0 for j in range(self.rank)) for i in range(self.rank))

    def describe(self, x):
        x = self.normalize(x)
        if self.rank == 1:
            return str(x[0])
        return "(" + ",".join(str(c) for c in x) + ")"

    def sort_key(self, x):
        return self.normalize(x)

    def __repr__(self):
        return f"FreeAbelianGroup(rank={self.rank})"


class InfiniteDihedralGroup(Group):
    """The infinite dihedral group <s, t | s^2 = t^2 = e>.

    Normal form: ``DihedralElement(shift, flip)`` stands for
    ``z^shift * s^flip`` with ``z = t*s``.  Multiplication follows
    ``(a, f) * (b, g) = (a + (-1)^f b, f xor g)``.
    """

    is_finite = False
    is_abelian = False
    is_torsion_free = False

    def identity(self):
        return DihedralElement(0, False)

    def normalize(self, x):
        if isinstance(x, DihedralElement):
            shift, flip = x.shift, x.flip
        elif isinstance(x, tuple) and len(x) == 2:
            shift, flip = x
        else:
            raise KindMismatchError(f"expected (shift, flip), got {x!r}")
        if isinstance(shift, bool) or not isinstance(shift, int) or not isinstance(flip, bool):
            raise KindMismatchError(f"expected (int, bool), got {x!r}")
        return DihedralElement(shift, flip)

    def mul(self, a, b):
        a, b = self.normalize(a), self.normalize(b)
        return DihedralElement(a.shift - b.shift if a.flip else a.shift + b.shift, a.flip != b.flip)

    def inv(self, a):
        a = self.normalize(a)
        return a if a.flip else DihedralElement(-a.shift, False)

    def generators(self):
        # s and t; z = t*s is derived.
        return (DihedralElement(0, True), DihedralElement(1, True))

    def describe(self, x):
        x = self.normalize(x)
        if not x.flip:
            if x.shift == 0:
                return "e"
            return f"(ts)^{x.shift}"
        if x.shift == 0:
            return "s"
        if x.shift == 1:
            return "t"
        return f"(ts)^{x.shift}*s"

    def sort_key(self, x):
        x = self.normalize(x)
        return (x.shift, x.flip)

    def __repr__(self):
        return "InfiniteDihedralGroup()"


def cyclic_group(n: int) -> FiniteTableGroup:
    """Z_n with addition mod n; labels are the residues."""
    if n < 1:
        raise GroupError("order must be >= 1")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = [str(i) for i in range(n)]
    gens = (1,) if n > 1 else ()
    return FiniteTableGroup(table, labels, generators=gens, name=f"Z{n}")


def klein_four_group() -> FiniteTableGroup:
    """Z_2 x Z_2 with labels e, a, b, ab."""
    elems = [(0, 0), (1, 0), (0, 1), (1, 1)]
    idx = {v: i for i, v in enumerate(elems)}
    table = [
        [idx[((x[0] + y[0]) % 2, (x[1] + y[1]) % 2)] for y in elems]
        for x in elems
    ]
    return FiniteTableGroup(table, ["e", "a", "b", "ab"], generators=(1, 2), name="K4")


def symmetric_group_s3() -> FiniteTableGroup:
    """S_3 on three points, labelled in cycle notation."""
    perms = [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]
    labels = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"]

    def compose(p, q):
        return tuple(p[q[i]] for i in range(3))

    table = [[perms.index(compose(p, q)) for q in perms] for p in perms]
    return FiniteTableGroup(table, labels, generators=(1, 4), name="S3")


def dihedral_group(n: int) -> FiniteTableGroup:
    """D_n of order 2n: rotations r^i and reflections r^i*s."""
    if n < 1:
        raise GroupError("n must be >= 1")
    elems = [(i, f) for f in (False, True) for i in range(n)]
    idx = {v: k for k, v in enumerate(elems)}

    def mul(x, y):
        i, f = x
        j, g = y
        return ((i - j) % n if f else (i + j) % n, f != g)

    table = [[idx[mul(x, y)] for y in elems] for x in elems]
    labels = []
    for i, f in elems:
        if not f:
            labels.append("e" if i == 0 else ("r" if i == 1 else f"r^{i}"))
        else:
            labels.append("s" if i == 0 else (f"r*s" if i == 1 else f"r^{i}*s"))
    return FiniteTableGroup(table, labels, generators=(idx[(1, False)], idx[(0, True)]), name=f"D{n}")


BUILTIN_GROUPS = {
    "S3": symmetric_group_s3,
    "K4": klein_four_group,
}


def builtin_group(name: str) -> FiniteTableGroup:
    """Look up a named finite group: S3, K4, Z<n>, D<n>."""
    key = name.strip()
    if key in BUILTIN_GROUPS:
        return BUILTIN_GROUPS[key]()
    upper = key.upper()
    if upper.startswith("Z") and upper[1:].isdigit():
        return cyclic_group(int(upper[1:]))
    if upper.startswith("D") and upper[1:].isdigit():
        return dihedral_group(int(upper[1:]))
    raise GroupError(f"unknown builtin group {name!r}")


def subgroup_closure(group: Group, generators: Iterable, cap: int):
    """Subgroup generated by ``generators``.

    Returns a frozenset if the subgroup has at most ``cap`` elements,
    otherwise :class:`ExceedsCap`.  Always terminates: the worklist stops
    as soon as the element count passes the cap.
    """
    if cap < 1:
        raise GroupError("cap must be >= 1")
    seen = {group.identity()}
    for g in generators:
        g = group.normalize(g)
        seen.add(g)
        seen.add(group.inv(g))
    if len(seen) > cap:
        return ExceedsCap(cap)
    frontier = sorted(seen, key=group.sort_key)
    while frontier:
        fresh = []
        members = sorted(seen, key=group.sort_key)
        for x in frontier:
            for y in members:
                for z in (group.mul(x, y), group.mul(y, x)):
                    if z not in seen:
                        seen.add(z)
                        fresh.append(z)
                        if len(seen) > cap:
                            return ExceedsCap(cap)
        frontier = fresh
    return frozenset(seen)


def conjugacy_class(group: Group, x, cap: int):
    """Conjugacy class of ``x``: a frozenset, or ExceedsCap if larger than cap.

    Exhaustive for finite-table groups; singletons for Z^k; computed from
    the normal form for the infinite dihedral group, whose flip elements
    have infinite classes.
    """
    if cap < 1:
        raise GroupError("cap must be >= 1")
    x = group.normalize(x)
    if isinstance(group, FiniteTableGroup):
        cls = frozenset(group.mul(group.mul(g, x), group.inv(g)) for g in group.elements())
        return cls if len(cls) <= cap else ExceedsCap(cap)
    if isinstance(group, FreeAbelianGroup):
        return frozenset([x])
    if isinstance(group, InfiniteDihedralGroup):
        if x.flip:
            # (n+2m, flip) for all m: infinitely many conjugates.
            return ExceedsCap(cap)
        cls = frozenset([x, group.inv(x)])
        return cls if len(cls) <= cap else ExceedsCap(cap)
    raise GroupError(f"unsupported group kind {type(group).__name__}")


def element_order(group: Group, x, cap: int = 10**6):
    """Order of ``x``: an int, or None when the element has infinite order.

    Exact for Z^k and the infinite dihedral group via the normal form;
    for finite-table groups the order is found by exhausting powers (it
    divides the group order, so the loop is bounded by it).
    """
    x = group.normalize(x)
    if isinstance(group, FiniteTableGroup):
        acc = x
        n = 1
        limit = min(cap, group.order)
        while n <= limit:
            if acc == group.identity():
                return n
            acc = group.mul(acc, x)
            n += 1
        raise GroupError("order exceeds cap; impossible for a validated table")
    if isinstance(group, FreeAbelianGroup):
        return 1 if x == group.identity() else None
    if isinstance(group, InfiniteDihedralGroup):
        if x == group.identity():
            return 1
        return 2 if x.flip else None
    raise GroupError(f"unsupported group kind {type(group).__name__}")


def validate_subgroup(group: FiniteTableGroup, members: Iterable) -> frozenset:
    """Check that ``members`` is a subgroup of a finite-table group."""
    ms = frozenset(group.normalize(m) for m in members)
    if group.identity() not in ms:
        raise NotSubgroupError("identity missing")
    for a in ms:
        if group.inv(a) not in ms:
            raise NotSubgroupError(f"inverse of {group.describe(a)} missing")
        for b in ms:
            if group.mul(a, b) not in ms:
                raise NotSubgroupError(
                    f"not closed: {group.describe(a)}*{group.describe(b)} escapes"
                )
    return ms


@dataclass(frozen=True)
class Quotient:
    """A quotient group together with the canonical projection."""

    group: FiniteTableGroup
    projection: tuple  # element index -> coset index
    cosets: tuple  # coset index -> sorted member indices


def quotient_group(group: FiniteTableGroup, members: Iterable) -> Quotient:
    """G/N for a validated normal subgroup N of a finite-table group."""
    if not isinstance(group, FiniteTableGroup):
        raise GroupError("quotients are only computed for finite-table groups")
    ms = validate_subgroup(group, members)
    for g in group.elements():
        for n in ms:
            if group.mul(group.mul(g, n), group.inv(g)) not in ms:
                raise NotNormalError(
                    f"{group.describe(g)}*{group.describe(n)}*{group.describe(g)}^-1 "
                    "leaves the subgroup"
                )
    coset_of = {}
    reps = []
    for g in group.elements():
        if g in coset_of:
            continue
        member_list = sorted(group.mul(g, n) for n in ms)
        rep = member_list[0]
        for m in member_list:
            coset_of[m] = len(reps)
        reps.append(rep)
    cosets = tuple(
        tuple(sorted(m for m in group.elements() if coset_of[m] == ci))
        for ci in range(len(reps))
    )
    table = [
        [coset_of[group.mul(reps[i], reps[j])] for j in range(len(reps))]
        for i in range(len(reps))
    ]
    labels = [f"[{group.labels[r]}]" for r in reps]
    gen_images = []
    for g in group.generators():
        ci = coset_of[g]
        if ci not in gen_images:
            gen_images.append(ci)
    qgroup = FiniteTableGroup(table, labels, generators=tuple(gen_images) or None)
    projection = tuple(coset_of[g] for g in group.elements())
    return Quotient(group=qgroup, projection=projection, cosets=cosets)
