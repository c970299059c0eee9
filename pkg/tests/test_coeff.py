"""Exact linear algebra and coefficient algebras against brute-force oracles."""
import itertools
import random
from fractions import Fraction

import pytest

from grl.coeff import (Algebra, AlgebraError, FieldError, PrimeField, RATIONALS,
                       Subspace, center_basis, group_algebra, invert_matrix,
                       kernel_basis, make_algebra, matrix_algebra, matrix_rank,
                       parse_field, product_algebra, solve_right,
                       truncated_polynomial_algebra)
from grl.groups import cyclic_group, symmetric_group_s3

F2 = PrimeField(2)
F3 = PrimeField(3)
F5 = PrimeField(5)


# ---------------------------------------------------------------------------
# Fields.


def test_prime_field_axioms_exhaustive():
    for p in (2, 3, 5, 7):
        F = PrimeField(p)
        for a in F.elements():
            assert F.add(a, F.zero) == a
            assert F.mul(a, F.one) == a
            if a != F.zero:
                assert F.mul(a, F.inv(a)) == F.one
            for b in F.elements():
                assert F.add(a, b) == (a + b) % p
                assert F.mul(a, b) == (a * b) % p


def test_prime_field_rejects_composite():
    with pytest.raises(FieldError):
        PrimeField(6)
    with pytest.raises(FieldError):
        PrimeField(1)


def test_parse_field():
    assert parse_field("Q") == RATIONALS
    assert parse_field("F5") == PrimeField(5)
    assert parse_field({"kind": "Fp", "p": 3}) == PrimeField(3)
    assert parse_field({"kind": "Q"}) == RATIONALS
    with pytest.raises(FieldError):
        parse_field("F6")
    with pytest.raises(FieldError):
        parse_field("R")


def test_rational_parse_format():
    assert RATIONALS.parse("-3/4") == Fraction(-3, 4)
    assert RATIONALS.format(Fraction(5, 2)) == "5/2"
    assert F5.parse("-1") == 4


# ---------------------------------------------------------------------------
# Kernel basis against an exhaustive F2 oracle.


def _oracle_kernel_f2(rows, ncols):
    """All kernel vectors of an F2 matrix by exhausting F2^ncols."""
    out = []
    for bits in itertools.product((0, 1), repeat=ncols):
        if all(sum(r[j] * bits[j] for j in range(ncols)) % 2 == 0 for r in rows):
            out.append(bits)
    return set(out)


def test_kernel_basis_matches_f2_oracle():
    rng = random.Random(20240817)
    for trial in range(60):
        nrows = rng.randrange(1, 5)
        ncols = rng.randrange(1, 6)
        rows = [[rng.randrange(2) for _ in range(ncols)] for _ in range(nrows)]
        basis = kernel_basis(rows, ncols, F2)
        oracle = _oracle_kernel_f2(rows, ncols)
        # the span of the computed basis equals the oracle kernel set
        span = set()
        for coeffs in itertools.product((0, 1), repeat=len(basis)):
            v = [0] * ncols
            for c, b in zip(coeffs, basis):
                if c:
                    v = [(x + y) % 2 for x, y in zip(v, b)]
            span.add(tuple(v))
        assert span == oracle
        assert len(oracle) == 2 ** len(basis)


def test_kernel_basis_deterministic_normalization():
    # one vector per free column, first nonzero coordinate 1, fixed order
    rows = [[1, 2, 3, 4]]
    basis = kernel_basis(rows, 4, RATIONALS)
    assert len(basis) == 3
    for vec in basis:
        lead = next(x for x in vec if x != 0)
        assert lead == 1
    assert basis == kernel_basis(rows, 4, RATIONALS)


def test_rank_solve_invert_consistency():
    rng = random.Random(99)
    for trial in range(40):
        n = rng.randrange(1, 5)
        rows = [[Fraction(rng.randrange(-5, 6)) for _ in range(n)] for _ in range(n)]
        rank = matrix_rank(rows, RATIONALS)
        inv = invert_matrix(rows, RATIONALS)
        if rank == n:
            assert inv is not None
            for i in range(n):
                for j in range(n):
                    s = sum(rows[i][k] * inv[k][j] for k in range(n))
                    assert s == (1 if i == j else 0)
        else:
            assert inv is None
            assert len(kernel_basis(rows, n, RATIONALS)) == n - rank
        rhs = [sum(rows[i][k] * (k + 1) for k in range(n)) for i in range(n)]
        x = solve_right(rows, rhs, RATIONALS)
        assert x is not None
        for i in range(n):
            assert sum(rows[i][k] * x[k] for k in range(n)) == rhs[i]


def test_solve_right_reports_inconsistent():
    assert solve_right([[1, 1], [1, 1]], [0, 1], RATIONALS) is None


def test_subspace_membership():
    span = Subspace(RATIONALS, [[1, 0, 1], [0, 1, 1]], 3)
    assert span.dim == 2
    assert span.coords_of([2, 3, 5]) == [2, 3]
    assert span.coords_of([1, 0, 0]) is None
    assert span.contains([0, 0, 0])


# ---------------------------------------------------------------------------
# Built-in algebras: randomized ring axioms (seeded, 500+ checks each).

BUILTINS = [
    ("M2(Q)", matrix_algebra(RATIONALS, 2)),
    ("M2(F5)", matrix_algebra(F5, 2)),
    ("QxQxQ", product_algebra(RATIONALS, 3)),
    ("F3[t]/t^4", truncated_polynomial_algebra(F3, 4)),
    ("F2[S3]", group_algebra(F2, symmetric_group_s3())),
    ("Q[Z4]", group_algebra(RATIONALS, cyclic_group(4))),
]


def _random_sparse(alg, rng):
    x = {}
    for i in range(alg.dim):
        if rng.random() < 0.6:
            if alg.field.kind == "Q":
                c = Fraction(rng.randrange(-4, 5), rng.randrange(1, 4))
            else:
                c = rng.randrange(alg.field.p)
            if not alg.field.is_zero(c):
                x[i] = c
    return x


@pytest.mark.parametrize("name,alg", BUILTINS, ids=[n for n, _ in BUILTINS])
def test_algebra_axioms_randomized(name, alg):
    rng = random.Random(hash(name) & 0xFFFF)
    checks = 0
    for trial in range(170):
        x = _random_sparse(alg, rng)
        y = _random_sparse(alg, rng)
        z = _random_sparse(alg, rng)
        # associativity
        assert alg.multiply(alg.multiply(x, y), z) == alg.multiply(x, alg.multiply(y, z))
        # left and right distributivity
        assert alg.multiply(x, alg.add(y, z)) == alg.add(alg.multiply(x, y), alg.multiply(x, z))
        assert alg.multiply(alg.add(x, y), z) == alg.add(alg.multiply(x, z), alg.multiply(y, z))
        checks += 3
    assert checks >= 500
    one = alg.to_sparse(alg.identity)
    x = _random_sparse(alg, rng)
    assert alg.multiply(one, x) == x
    assert alg.multiply(x, one) == x


def test_matrix_algebra_structure():
    m2 = matrix_algebra(RATIONALS, 2)
    assert m2.labels == ("E11", "E12", "E21", "E22")
    # E_ij E_kl = delta_jk E_il, exhaustively
    def idx(i, j):
        return 2 * i + j
    for i, j, k, l in itertools.product(range(2), repeat=4):
        prod = m2.multiply({idx(i, j): Fraction(1)}, {idx(k, l): Fraction(1)})
        expected = {idx(i, l): Fraction(1)} if j == k else {}
        assert prod == expected
    assert m2.identity == (1, 0, 0, 1)


def test_truncated_polynomial_structure():
    A = truncated_polynomial_algebra(F3, 4)
    t = A.basis_element(1)
    t2 = A.multiply(t, t)
    assert t2 == {2: 1}
    assert A.multiply(t2, t2) == {}          # t^4 == 0
    assert A.identity == (1, 0, 0, 0)


def test_group_algebra_convolution_oracle():
    s3 = symmetric_group_s3()
    A = group_algebra(F2, s3)
    rng = random.Random(7)
    for trial in range(50):
        x = _random_sparse(A, rng)
        y = _random_sparse(A, rng)
        oracle = {}
        for g, cg in x.items():
            for h, ch in y.items():
                k = s3.mul(g, h)
                oracle[k] = (oracle.get(k, 0) + cg * ch) % 2
        oracle = {k: v for k, v in oracle.items() if v}
        assert A.multiply(x, y) == oracle


# ---------------------------------------------------------------------------
# Centers against a brute-force oracle.


def test_center_m2_f5_matches_bruteforce():
    A = matrix_algebra(F5, 2)
    # oracle: scan all 625 elements for commuting with both generators
    basis = [A.basis_element(i) for i in range(4)]
    central = []
    for coords in itertools.product(range(5), repeat=4):
        x = {i: c for i, c in enumerate(coords) if c}
        if all(A.multiply(x, b) == A.multiply(b, x) for b in basis):
            central.append(coords)
    assert len(central) == 5                      # scalar matrices only
    computed = center_basis(A)
    assert len(computed) == 1
    assert tuple(computed[0]) in central


def test_center_f2_s3_group_algebra():
    A = group_algebra(F2, symmetric_group_s3())
    computed = center_basis(A)
    # class sums: e, (12)+(13)+(23), (123)+(132) -> center dimension 3
    assert len(computed) == 3
    span = Subspace(F2, computed, 6)
    s3 = symmetric_group_s3()
    transp = [0, 0, 0, 0, 0, 0]
    for lab in ("(12)", "(13)", "(23)"):
        transp[s3.index_of_label(lab)] = 1
    assert span.contains(transp)


def test_center_of_commutative_algebra_is_everything():
    A = truncated_polynomial_algebra(F3, 4)
    assert len(center_basis(A)) == 4


# ---------------------------------------------------------------------------
# make_algebra validation.


def test_make_algebra_rejects_nonassociative():
    # x*x = y, x*y = x is not associative: (xx)x = yx = 0 vs x(xx) = xy = x
    with pytest.raises(AlgebraError):
        make_algebra(RATIONALS, ["x", "y"],
                     {(0, 0): {1: Fraction(1)}, (0, 1): {0: Fraction(1)}})


def test_make_algebra_rejects_false_identity():
    with pytest.raises(AlgebraError):
        make_algebra(RATIONALS, ["a"], {(0, 0): {}}, identity=[Fraction(1)])


def test_make_algebra_finds_identity():
    A = make_algebra(RATIONALS, ["p", "q"],
                     {(0, 0): {0: Fraction(1)}, (1, 1): {1: Fraction(1)}})
    assert A.identity == (1, 1)
    B = make_algebra(RATIONALS, ["n"], {(0, 0): {}})
    assert B.identity is None


def test_split_map_validation():
    # Q x Q with the valid splitting (id) and an invalid one
    prods = {(0, 0): {0: Fraction(1)}, (1, 1): {1: Fraction(1)}}
    ok = make_algebra(RATIONALS, ["p", "q"], prods,
                      split_map=[[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]])
    assert ok.split_map is not None
    with pytest.raises(AlgebraError):
        make_algebra(RATIONALS, ["p", "q"], prods,
                     split_map=[[Fraction(1), Fraction(1)], [Fraction(1), Fraction(1)]])
    with pytest.raises(AlgebraError):
        # invertible but not product-splitting: mixes the two factors
        make_algebra(RATIONALS, ["p", "q"], prods,
                     split_map=[[Fraction(1), Fraction(1)], [Fraction(0), Fraction(1)]])


def test_product_algebra_split_and_primes():
    A = product_algebra(RATIONALS, 2)
    assert A.split_map is not None
    assert A.prime_flag is False
    assert A.prime_witness is not None
    B = matrix_algebra(RATIONALS, 2)
    assert B.prime_flag is True
