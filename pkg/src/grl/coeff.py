"""Exact scalar fields, exact linear algebra, and coefficient algebras.

Scalars are either arbitrary-precision rationals (``fractions.Fraction``,
always in lowest terms with positive denominator) or residues ``0..p-1``
of a prime field, with the prime carried by the field context.  No
floating point anywhere.

Linear algebra uses fraction-free forward elimination (Bareiss two-term
updates) with first-nonzero pivots, so kernels, ranks and solutions are
exact and the output bases are deterministic.

An :class:`Algebra` is a finite-dimensional associative algebra given by
structure constants, validated for associativity on all basis triples at
construction.  A few standard algebras are built in: full matrix
algebras, split products of copies of the field, truncated polynomial
rings, and group algebras of finite groups.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .groups import FiniteTableGroup


class FieldError(ValueError):
    pass


class AlgebraError(ValueError):
    pass


class RationalField:
    """The field Q; scalars are ``fractions.Fraction`` in canonical form."""

    kind = "Q"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        if b == 0:
            raise FieldError("division by zero")
        return a / b

    def inv(self, a):
        if a == 0:
            raise FieldError("division by zero")
        return 1 / Fraction(a)

    def is_zero(self, a):
        return a == 0

    def from_int(self, n):
        return Fraction(n)

    def parse(self, text):
        try:
            return Fraction(str(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"not a rational scalar: {text!r}") from exc

    def format(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "RationalField()"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field F_p; scalars are ints reduced to ``0..p-1``."""

    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")

    kind = "Fp"

    @property
    def characteristic(self):
        return self.p

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise FieldError("division by zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def is_zero(self, a):
        return a % self.p == 0

    def from_int(self, n):
        return n % self.p

    def parse(self, text):
        try:
            return int(str(text), 10) % self.p
        except ValueError as exc:
            raise FieldError(f"not an integer scalar: {text!r}") from exc

    def format(self, a):
        return str(a % self.p)

    def elements(self):
        return range(self.p)


RATIONALS = RationalField()


def parse_field(spec) -> RationalField | PrimeField:
    """Field from a short spec: "Q", "F5", or {"kind": ..., "p": ...}."""
    if isinstance(spec, (RationalField, PrimeField)):
        return spec
    if isinstance(spec, dict):
        kind = spec.get("kind")
        if kind == "Q":
            return RATIONALS
        if kind == "Fp":
            return PrimeField(int(spec["p"]))
        raise FieldError(f"unknown field kind {kind!r}")
    text = str(spec).strip()
    if text.upper() == "Q":
        return RATIONALS
    if text.upper().startswith("F") and text[1:].isdigit():
        return PrimeField(int(text[1:]))
    raise FieldError(f"unknown field spec {spec!r}")


# ---------------------------------------------------------------------------
# Exact linear algebra.  Matrices are lists of equal-length scalar lists.


def echelon(rows, field):
    """Fraction-free forward elimination; returns (matrix, pivot positions).

    Pivots are chosen as the first nonzero entry in each column scanning
    down, so the result is deterministic.  Entries stay exact; over Q an
    integer input stays integral (two-term Bareiss updates).
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    prev = field.one
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if not field.is_zero(m[i][c]):
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        piv = m[r][c]
        for i in range(r + 1, nrows):
            fi = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(ncols):
                row_i[j] = field.div(
                    field.sub(field.mul(piv, row_i[j]), field.mul(fi, row_r[j])), prev
                )
        prev = piv
        pivots.append((r, c))
        r += 1
        if r == nrows:
            break
    return m, pivots


def matrix_rank(rows, field):
    return len(echelon(rows, field)[1])


def kernel_basis(rows, ncols, field):
    """Basis of the right kernel {x : A x = 0}, deterministic.

    One vector per free column, in column order, each normalized so its
    first nonzero coordinate is 1.
    """
    m, pivots = echelon(rows, field)
    pivot_cols = [c for _, c in pivots]
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        x = [field.zero] * ncols
        x[fc] = field.one
        for r, c in reversed(pivots):
            s = field.zero
            for j in range(c + 1, ncols):
                if not field.is_zero(x[j]) and not field.is_zero(m[r][j]):
                    s = field.add(s, field.mul(m[r][j], x[j]))
            x[c] = field.neg(field.div(s, m[r][c]))
        lead = next(v for v in x if not field.is_zero(v))
        scale = field.inv(lead)
        basis.append([field.mul(scale, v) for v in x])
    return basis


def solve_right(rows, rhs, field):
    """One solution of A x = b (free variables zero), or None."""
    if not rows:
        return None
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    m, pivots = echelon(aug, field)
    for r, c in pivots:
        if c == ncols:
            return None
    x = [field.zero] * ncols
    for r, c in reversed(pivots):
        s = m[r][ncols]
        for j in range(c + 1, ncols):
            if not field.is_zero(x[j]):
                s = field.sub(s, field.mul(m[r][j], x[j]))
        x[c] = field.div(s, m[r][c])
    return x


def invert_matrix(rows, field):
    """Inverse of a square matrix, or None when singular."""
    n = len(rows)
    cols = []
    for k in range(n):
        e = [field.one if i == k else field.zero for i in range(n)]
        x = solve_right(rows, e, field)
        if x is None:
            return None
        cols.append(x)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


class Subspace:
    """Row span of a set of vectors, kept in reduced echelon form."""

    def __init__(self, field, vectors, ambient_dim):
        self.field = field
        self.ambient_dim = ambient_dim
        rows = []
        pivots = []
        for v in vectors:
            w = list(v)
            for row, c in zip(rows, pivots):
                if not field.is_zero(w[c]):
                    factor = w[c]
                    for j in range(ambient_dim):
                        w[j] = field.sub(w[j], field.mul(factor, row[j]))
            lead = next((j for j in range(ambient_dim) if not field.is_zero(w[j])), None)
            if lead is None:
                continue
            scale = field.inv(w[lead])
            w = [field.mul(scale, x) for x in w]
            for row, c in zip(rows, pivots):
                if not field.is_zero(row[lead]):
                    factor = row[lead]
                    for j in range(ambient_dim):
                        row[j] = field.sub(row[j], field.mul(factor, w[j]))
            rows.append(w)
            pivots.append(lead)
        order = sorted(range(len(rows)), key=lambda i: pivots[i])
        self.rows = [rows[i] for i in order]
        self.pivots = [pivots[i] for i in order]

    @property
    def dim(self):
        return len(self.rows)

    def coords_of(self, v):
        """Coefficients of v over the echelon rows, or None if outside."""
        field = self.field
        w = list(v)
        coeffs = []
        for row, c in zip(self.rows, self.pivots):
            t = w[c]
            coeffs.append(t)
            if not field.is_zero(t):
                for j in range(self.ambient_dim):
                    w[j] = field.sub(w[j], field.mul(t, row[j]))
        if any(not field.is_zero(x) for x in w):
            return None
        return coeffs

    def contains(self, v):
        return self.coords_of(v) is not None


# ---------------------------------------------------------------------------
# Structure-constant algebras.


class Algebra:
    """Finite-dimensional associative algebra over an exact field.

    ``table[i][j]`` is the sparse coordinate dict of the product of basis
    elements i and j.  ``identity`` holds the dense coordinates of the
    multiplicative identity when one exists, else None.

    ``split_map``, when set, is an invertible matrix (rows = split
    coordinates, columns = basis vectors) exhibiting the algebra as a
    direct product of copies of the field with componentwise
    multiplication; it is validated at construction and unlocks exact
    idempotent enumeration over Q.

    ``prime_flag`` records declared primeness for built-ins (with a
    witness pair for the negative case).
    """

    def __init__(self, field, labels, table, identity, split_map=None,
                 prime_flag=None, prime_witness=None, builtin=None):
        self.field = field
        self.labels = tuple(labels)
        self.dim = len(labels)
        self.table = table
        self.identity = tuple(identity) if identity is not None else None
        self.split_map = split_map
        self.prime_flag = prime_flag
        self.prime_witness = prime_witness
        self.builtin = builtin

    def multiply(self, x: dict, y: dict) -> dict:
        """Product of two sparse coordinate vectors."""
        field = self.field
        out = {}
        for i, xi in x.items():
            row = self.table[i]
            for j, yj in y.items():
                cij = row[j]
                if not cij:
                    continue
                s = field.mul(xi, yj)
                for k, ck in cij.items():
                    acc = field.add(out.get(k, field.zero), field.mul(s, ck))
                    if field.is_zero(acc):
                        out.pop(k, None)
                    else:
                        out[k] = acc
        return out

    def add(self, x: dict, y: dict) -> dict:
        field = self.field
        out = dict(x)
        for k, v in y.items():
            acc = field.add(out.get(k, field.zero), v)
            if field.is_zero(acc):
                out.pop(k, None)
            else:
                out[k] = acc
        return out

    def scale(self, c, x: dict) -> dict:
        field = self.field
        if field.is_zero(c):
            return {}
        return {k: field.mul(c, v) for k, v in x.items()}

    def to_dense(self, x: dict):
        v = [self.field.zero] * self.dim
        for k, c in x.items():
            v[k] = c
        return v

    def to_sparse(self, v):
        return {k: c for k, c in enumerate(v) if not self.field.is_zero(c)}

    def basis_element(self, i: int) -> dict:
        return {i: self.field.one}

    def format_vector(self, x: dict) -> str:
        """Readable form like '1/2*b + 1/2*c', deterministic."""
        if not x:
            return "0"
        parts = []
        for k in sorted(x):
            c = self.field.format(x[k])
            parts.append(self.labels[k] if c == "1" else f"{c}*{self.labels[k]}")
        return " + ".join(parts)

    def __repr__(self):
        tag = self.builtin or "custom"
        return f"Algebra({tag}, dim={self.dim})"


def make_algebra(field, labels, products, identity=None, split_map=None,
                 prime_flag=None, prime_witness=None, builtin=None) -> Algebra:
    """Build and validate an algebra from structure constants.

    ``products`` maps basis index pairs (i, j) to sparse coordinate dicts;
    missing pairs multiply to zero.  Associativity is checked on all basis
    triples.  The identity is located by solving the two-sided unit
    equations when not supplied.
    """
    dim = len(labels)
    table = [[{} for _ in range(dim)] for _ in range(dim)]
    for (i, j), vec in products.items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise AlgebraError(f"structure constant index ({i},{j}) out of range")
        clean = {}
        for k, c in vec.items():
            if not 0 <= k < dim:
                raise AlgebraError(f"structure constant target {k} out of range")
            if not field.is_zero(c):
                clean[k] = c
        table[i][j] = clean
    alg = Algebra(field, labels, table, None, split_map=None,
                  prime_flag=prime_flag, prime_witness=prime_witness, builtin=builtin)
    for a in range(dim):
        for b in range(dim):
            ab = table[a][b]
            for c in range(dim):
                left = alg.multiply(ab, {c: field.one})
                right = alg.multiply({a: field.one}, table[b][c])
                if left != right:
                    raise AlgebraError(
                        f"associativity fails at ({labels[a]}, {labels[b]}, {labels[c]})"
                    )
    if identity is not None:
        ident = list(identity)
        sp = alg.to_sparse(ident)
        for i in range(dim):
            bi = alg.basis_element(i)
            if alg.multiply(sp, bi) != bi or alg.multiply(bi, sp) != bi:
                raise AlgebraError("declared identity is not a two-sided unit")
        alg.identity = tuple(ident)
    else:
        found = _find_identity(alg)
        alg.identity = tuple(found) if found is not None else None
    if split_map is not None:
        _validate_split_map(alg, split_map)
        alg.split_map = tuple(tuple(row) for row in split_map)
    return alg


def _find_identity(alg: Algebra):
    """Solve the two-sided unit equations; None when no identity exists."""
    field, dim = alg.field, alg.dim
    rows, rhs = [], []
    for i in range(dim):
        for k in range(dim):
            rows.append([alg.table[j][i].get(k, field.zero) for j in range(dim)])
            rhs.append(field.one if k == i else field.zero)
            rows.append([alg.table[i][j].get(k, field.zero) for j in range(dim)])
            rhs.append(field.one if k == i else field.zero)
    return solve_right(rows, rhs, field)


def _validate_split_map(alg: Algebra, split_map):
    """Split map must be invertible and turn products into componentwise ones."""
    field, dim = alg.field, alg.dim
    rows = [list(r) for r in split_map]
    if len(rows) != dim or any(len(r) != dim for r in rows):
        raise AlgebraError("split map must be a square matrix of the algebra dimension")
    if matrix_rank(rows, field) != dim:
        raise AlgebraError("split map is singular")

    def push(vec_sparse):
        dense = alg.to_dense(vec_sparse)
        return [
            sum_scalars(field, (field.mul(rows[r][i], dense[i]) for i in range(dim)))
            for r in range(dim)
        ]

    for i in range(dim):
        si = push(alg.basis_element(i))
        for j in range(dim):
            sj = push(alg.basis_element(j))
            prod = push(alg.table[i][j])
            comp = [field.mul(a, b) for a, b in zip(si, sj)]
            if prod != comp:
                raise AlgebraError(
                    f"split map does not respect the product at ({alg.labels[i]}, {alg.labels[j]})"
                )


def sum_scalars(field, items):
    acc = field.zero
    for x in items:
        acc = field.add(acc, x)
    return acc


def center_basis(alg: Algebra):
    """Basis of the center {x : x b = b x for all basis b}, deterministic.

    Returned as dense vectors from the fraction-free kernel computation;
    every vector is normalized with leading coordinate 1.
    """
    field, dim = alg.field, alg.dim
    rows = []
    for i in range(dim):
        for k in range(dim):
            rows.append([
                field.sub(alg.table[j][i].get(k, field.zero),
                          alg.table[i][j].get(k, field.zero))
                for j in range(dim)
            ])
    return kernel_basis(rows, dim, field)


# ---------------------------------------------------------------------------
# Built-in algebras.


def matrix_algebra(field, n: int) -> Algebra:
    """Full n x n matrix algebra; basis E_ij in row-major order."""
    if n < 1:
        raise AlgebraError("n must be >= 1")
    labels = [f"E{i + 1}{j + 1}" for i in range(n) for j in range(n)]

    def idx(i, j):
        return i * n + j

    products = {}
    for i, j, k, l in itertools.product(range(n), repeat=4):
        if j == k:
            products[(idx(i, j), idx(k, l))] = {idx(i, l): field.one}
    identity = [field.one if i == j else field.zero for i in range(n) for j in range(n)]
    split = None
    if n == 1:
        split = [[field.one]]
    return make_algebra(field, labels, products, identity=identity,
                        split_map=split, prime_flag=True, builtin=f"matrix{n}")


def product_algebra(field, n: int) -> Algebra:
    """Direct product of n copies of the field; basis of orthogonal idempotents."""
    if n < 1:
        raise AlgebraError("n must be >= 1")
    labels = [f"e{i + 1}" for i in range(n)]
    products = {(i, i): {i: field.one} for i in range(n)}
    identity = [field.one] * n
    split = [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
    witness = None
    if n >= 2:
        witness = (
            {0: field.one},
            {1: field.one},
        )
    return make_algebra(field, labels, products, identity=identity, split_map=split,
                        prime_flag=(n == 1), prime_witness=witness, builtin=f"product{n}")


def truncated_polynomial_algebra(field, n: int) -> Algebra:
    """F[t]/(t^n); basis 1, t, ..., t^(n-1)."""
    if n < 1:
        raise AlgebraError("n must be >= 1")
    labels = ["1"] + ["t" if k == 1 else f"t^{k}" for k in range(1, n)]
    products = {}
    for a in range(n):
        for b in range(n):
            if a + b < n:
                products[(a, b)] = {a + b: field.one}
    identity = [field.one] + [field.zero] * (n - 1)
    witness = None
    if n >= 2:
        witness = ({n - 1: field.one}, {n - 1: field.one})
    split = [[field.one]] if n == 1 else None
    return make_algebra(field, labels, products, identity=identity, split_map=split,
                        prime_flag=(n == 1), prime_witness=witness, builtin=f"trunc{n}")


def group_algebra(field, group: FiniteTableGroup) -> Algebra:
    """Group algebra F[G] of a finite-table group; basis u_g."""
    if not isinstance(group, FiniteTableGroup):
        raise AlgebraError("group algebras need a finite-table group")
    n = group.order
    labels = [f"u_{group.labels[g]}" for g in range(n)]
    products = {(i, j): {group.mul(i, j): field.one} for i in range(n) for j in range(n)}
    identity = [field.one if i == group.identity() else field.zero for i in range(n)]
    return make_algebra(field, labels, products, identity=identity,
                        prime_flag=(True if n == 1 else None),
                        builtin=f"groupalg[{group.name or n}]")
