"""Group rings and crossed products against independent convolution oracles."""
import random
from fractions import Fraction

import pytest

from grl.coeff import (PrimeField, RATIONALS, group_algebra, make_algebra,
                       matrix_algebra, product_algebra)
from grl.graded import central_idempotents
from grl.group_ring import (CrossedProductError, GroupRingError,
                            InfiniteGroupError, NotUnitalError, algebra_inverse,
                            crossed_product, gr_is_central, gr_is_idempotent,
                            gr_mul, gr_support_group, group_ring)
from grl.groups import (DihedralElement, ExceedsCap, FreeAbelianGroup,
                        InfiniteDihedralGroup, cyclic_group, klein_four_group,
                        symmetric_group_s3)

F2 = PrimeField(2)
F5 = PrimeField(5)


# ---------------------------------------------------------------------------
# An independent 2x2-matrix convolution oracle (plain tuples, no package code).


def _mat_mul_2x2(a, b):
    """(a11,a12,a21,a22) x (b11,b12,b21,b22) with Fraction arithmetic."""
    a11, a12, a21, a22 = a
    b11, b12, b21, b22 = b
    return (a11 * b11 + a12 * b21, a11 * b12 + a12 * b22,
            a21 * b11 + a22 * b21, a21 * b12 + a22 * b22)


def _convolve_m2_z(x, y):
    """Convolution product of {n: 2x2 tuple} dicts over the group Z."""
    out = {}
    for n, a in x.items():
        for m, b in y.items():
            k = n + m
            prod = _mat_mul_2x2(a, b)
            cur = out.get(k, (0, 0, 0, 0))
            out[k] = tuple(c + p for c, p in zip(cur, prod))
    return {k: v for k, v in out.items() if any(v)}


def _m2_z_ring():
    return group_ring(matrix_algebra(RATIONALS, 2), FreeAbelianGroup(1))


def test_m2_z_matches_convolution_oracle():
    R = _m2_z_ring()
    rng = random.Random(424242)
    for trial in range(200):
        x_raw = {(n,): tuple(Fraction(rng.randrange(-3, 4)) for _ in range(4))
                 for n in rng.sample(range(-4, 5), rng.randrange(1, 4))}
        y_raw = {(n,): tuple(Fraction(rng.randrange(-3, 4)) for _ in range(4))
                 for n in rng.sample(range(-4, 5), rng.randrange(1, 4))}
        x = R.element(x_raw)
        y = R.element(y_raw)
        oracle = _convolve_m2_z({n: v for (n,), v in x_raw.items()},
                                {n: v for (n,), v in y_raw.items()})
        assert {g[0]: v for g, v in (x * y).terms.items()} == oracle


def test_m2_z_idempotent_frozen():
    """f = E11 u_0 + E12 u_1 is idempotent but not central; its support
    subgroup is all of Z."""
    R = _m2_z_ring()
    f = R.element({(0,): (1, 0, 0, 0), (1,): (0, 1, 0, 0)})
    # oracle first: f*f under the hand convolution
    raw = {0: (Fraction(1), 0, 0, 0), 1: (0, Fraction(1), 0, 0)}
    assert _convolve_m2_z(raw, raw) == {k: tuple(map(Fraction, v)) for k, v in raw.items()}
    assert gr_is_idempotent(f)
    assert not gr_is_central(f)
    assert f.support() == frozenset({(0,), (1,)})
    for cap in (2, 10, 1000):
        assert gr_support_group(f, cap) == ExceedsCap(cap)


def test_group_ring_axioms_randomized():
    R = group_ring(group_algebra(F2, cyclic_group(3)), symmetric_group_s3())
    rng = random.Random(11)
    elements = list(R.group.elements())

    def rand_elt():
        return R.element({g: tuple(rng.randrange(2) for _ in range(3))
                          for g in rng.sample(elements, rng.randrange(1, 5))})

    one = R.one()
    for trial in range(170):
        x, y, z = rand_elt(), rand_elt(), rand_elt()
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert (x + y) * z == x * z + y * z
        assert one * x == x and x * one == x


def test_group_ring_requires_unital_coefficients():
    labels = ["t"]
    alg = make_algebra(F2, labels, {(0, 0): {}})
    with pytest.raises(NotUnitalError):
        group_ring(alg, cyclic_group(2))


def test_element_validation():
    R = _m2_z_ring()
    with pytest.raises(GroupRingError):
        R.element({(0,): (1, 0)})            # wrong coefficient dimension
    assert R.element({(0,): (0, 0, 0, 0)}) == R.zero()


def test_algebra_inverse():
    alg = matrix_algebra(RATIONALS, 2)
    inv = algebra_inverse(alg, (1, 1, 0, 1))
    assert inv == (1, -1, 0, 1)
    assert algebra_inverse(alg, (1, 0, 0, 0)) is None    # E11 not invertible


# ---------------------------------------------------------------------------
# Crossed products.


def _f5_twist():
    """F5 * Z2 with trivial action and cocycle sigma(1,1) = 2:
    u_s^2 = 2 u_e.  Since 2 is a non-residue mod 5 this is the field F25."""
    z2 = cyclic_group(2)
    alg = product_algebra(F5, 1)       # the field F5 as a 1-dim algebra
    action = {1: [[1]]}
    cocycle = {(g, h): 2 if (g, h) == (1, 1) else 1 for g in range(2) for h in range(2)}
    return crossed_product(alg, z2, action, cocycle)


def test_twisted_unit_square_oracle():
    R = _f5_twist()
    u = R.unit(1)
    sq = u * u
    assert sq.terms == {0: (2,)}      # u_s^2 = 2 u_e, by the cocycle
    # (a + b u_s)(c + d u_s) = (ac + 2bd) + (ad + bc) u_s : field F25 norm check
    a, b, c, d = 3, 4, 2, 1
    x = R.element({0: (a,), 1: (b,)})
    y = R.element({0: (c,), 1: (d,)})
    prod = x * y
    assert prod.coefficient(0) == ((a * c + 2 * b * d) % 5,)
    assert prod.coefficient(1) == ((a * d + b * c) % 5,)


def test_twist_gives_field_trivial_idempotents():
    R = _f5_twist()
    graded = R.as_graded_algebra()
    found = central_idempotents(graded)
    assert [tuple(f.dense()) for f in found] == [(0, 0), (1, 0)]


def _swap_skew_f5():
    """(F5 x F5) * Z2 where s swaps the factors, trivial cocycle: M2(F5)."""
    z2 = cyclic_group(2)
    alg = product_algebra(F5, 2)
    action = {1: [[0, 1], [1, 0]]}
    cocycle = {(g, h): 1 for g in range(2) for h in range(2)}
    return crossed_product(alg, z2, action, cocycle)


def test_swap_skew_action_applied():
    R = _swap_skew_f5()
    e1 = R.element({0: (1, 0)})
    u = R.unit(1)
    # u_s (e1 u_e) = alpha_s(e1) u_s = e2 u_s
    assert (u * e1).terms == {1: (0, 1)}
    assert (e1 * u).terms == {1: (1, 0)}


def test_swap_skew_is_simple():
    R = _swap_skew_f5()
    graded = R.as_graded_algebra()
    found = central_idempotents(graded)
    assert len(found) == 2                      # 0 and 1 only: simple ring
    for f in found:
        assert f.support() <= frozenset({graded.group.identity()}) or not f.coords


def test_crossed_product_validation_negatives():
    z2 = cyclic_group(2)
    z4 = cyclic_group(4)
    alg2 = product_algebra(F5, 2)
    triv = {(g, h): 1 for g in range(2) for h in range(2)}
    # action matrix that is not an algebra automorphism (kills a factor)
    with pytest.raises(CrossedProductError):
        crossed_product(alg2, z2, {1: [[1, 0], [0, 0]]}, triv)
    # action table keyed only on the identity cannot generate Z2
    with pytest.raises(CrossedProductError):
        crossed_product(alg2, z2, {0: [[1, 0], [0, 1]]}, triv)
    # non-invertible cocycle value
    bad_sigma = {(g, h): (0 if (g, h) == (1, 1) else 1) for g in range(2) for h in range(2)}
    with pytest.raises(CrossedProductError):
        crossed_product(alg2, z2, {1: [[0, 1], [1, 0]]}, bad_sigma)
    # missing cocycle pairs
    with pytest.raises(CrossedProductError):
        crossed_product(alg2, z2, {1: [[0, 1], [1, 0]]}, {(0, 0): 1})
    # cocycle identity failure over Z4: sigma(1,1)=2 only, rest 1, breaks
    # sigma(1,1) sigma(2,1) = alpha_1(sigma(1,2)) sigma(1,3)
    alg1 = product_algebra(F5, 1)
    bad = {(g, h): 1 for g in range(4) for h in range(4)}
    bad[(1, 1)] = 2
    with pytest.raises(CrossedProductError):
        crossed_product(alg1, z4, {1: [[1]]}, bad)
    # non-normalized cocycle: sigma(e, e) != 1
    denorm = {(g, h): 1 for g in range(2) for h in range(2)}
    denorm[(0, 0)] = 2
    with pytest.raises(CrossedProductError):
        crossed_product(alg1, z2, {1: [[1]]}, denorm)
    # crossed data over an infinite group
    with pytest.raises(InfiniteGroupError):
        crossed_product(alg1, FreeAbelianGroup(1), {(1,): [[1]]}, {})
    # action without cocycle
    with pytest.raises(CrossedProductError):
        group_ring(alg1, z2).__class__(alg1, z2, action={1: [[1]]})


def test_crossed_action_extends_from_generators():
    """The action of a non-generator element is the composite along any word."""
    z4 = cyclic_group(4)
    alg = product_algebra(F5, 2)
    swap = [[0, 1], [1, 0]]
    triv = {(g, h): 1 for g in range(4) for h in range(4)}
    R = crossed_product(alg, z4, {1: swap}, triv)
    # alpha_2 = alpha_1 o alpha_1 = identity; alpha_3 = swap again
    assert R.apply_action(2, (1, 2)) == (1, 2)
    assert R.apply_action(3, (1, 2)) == (2, 1)
    assert R.apply_action(0, (1, 2)) == (1, 2)


def test_unit_conjugation_matches_action():
    """u_g a u_g^{-1} realizes the action (trivial cocycle case)."""
    R = _swap_skew_f5()
    u = R.unit(1)
    for a in ((1, 0), (0, 1), (3, 4)):
        lhs = u * R.element({0: a}) * u      # u_s^2 = u_e here
        assert lhs.terms == ({0: R.apply_action(1, a)}
                             if any(R.apply_action(1, a)) else {})


# ---------------------------------------------------------------------------
# Centrality via the generator test agrees with the flattened check.


def test_central_test_agrees_with_flattened_exhaustively():
    cases = [
        group_ring(group_algebra(F2, cyclic_group(2)), cyclic_group(2)),
        group_ring(product_algebra(F5, 2), klein_four_group()),
        group_ring(matrix_algebra(F2, 2), symmetric_group_s3()),
        _f5_twist(),
        _swap_skew_f5(),
    ]
    for R in cases:
        graded = R.as_graded_algebra()
        for f in central_idempotents(graded):
            rf = R.element_from_graded(f)
            assert gr_is_central(rf) == f.is_central()
            assert gr_is_idempotent(rf) == f.is_idempotent()
            # post-hoc: commutation against every flattened basis vector
            if gr_is_central(rf):
                for i in range(graded.algebra.dim):
                    b = graded.basis_vector(i)
                    assert f * b == b * f


def test_central_test_over_infinite_groups():
    """The generator test needs no enumeration of the group: scalar
    elements of M2(Q)[Z] commute with everything, E11 u_0 does not."""
    R = _m2_z_ring()
    scalar = R.element({(0,): (1, 0, 0, 1)})
    assert gr_is_central(scalar)
    assert not gr_is_central(R.element({(0,): (1, 0, 0, 0)}))
    G = InfiniteDihedralGroup()
    S = group_ring(product_algebra(RATIONALS, 1), G)
    assert gr_is_central(S.one())
    # u_s is not central in Q[Dinf]: s t != t s
    assert not gr_is_central(S.unit(DihedralElement(0, True)))


def test_conjugation_by_word():
    """Conjugating u_h by u_g lands in the conjugacy class: documents how
    central tests reduce to generators over infinite groups."""
    G = InfiniteDihedralGroup()
    R = group_ring(product_algebra(RATIONALS, 1), G)
    s = DihedralElement(0, True)
    x = DihedralElement(3, False)
    u_s, u_x = R.unit(s), R.unit(x)
    conj = u_s * u_x * R.unit(G.inv(s))
    assert conj == R.unit(DihedralElement(-3, False))
    Z = group_ring(product_algebra(RATIONALS, 1), FreeAbelianGroup(1))
    a, b = Z.unit((2,)), Z.unit((5,))
    assert a * b == b * a == Z.unit((7,))


# ---------------------------------------------------------------------------
# Flattening round trips.


def test_flattening_round_trip():
    R = group_ring(matrix_algebra(F2, 2), cyclic_group(2))
    graded = R.as_graded_algebra()
    assert graded.algebra.dim == 8
    x = R.element({0: (1, 0, 1, 0), 1: (0, 1, 1, 1)})
    v = R.element_to_graded(x, graded)
    assert R.element_from_graded(v) == x
    y = R.element({1: (1, 1, 0, 0)})
    assert R.element_to_graded(x * y, graded) == v * R.element_to_graded(y, graded)
    assert v.support() == x.support()


def test_flattening_rejects_infinite_groups():
    R = _m2_z_ring()
    with pytest.raises(InfiniteGroupError):
        R.as_graded_algebra()
