"""Built-in fixtures: small graded rings with exactly known behavior.

Each fixture packages one instance, its distinguished elements, and a
list of machine-checked facts (exact values — no approximations).  The
facts cover the behavior each instance exists to demonstrate:

* ``dinf-q4``   — a commutative 4-dimensional algebra graded by the
  infinite dihedral group whose central idempotent f = (1,0,1,0) has
  infinite support group; both non-annihilation conditions fail, the
  grading group is non-abelian, and the principal component is not
  prime, so no finiteness claim applies — the instance marks the
  boundary of all of them at once.
* ``m2-z``      — the 2x2 matrix group ring over Z whose non-central
  idempotent E11*u_0 + E12*u_1 has infinite support group: centrality
  cannot be dropped from the finiteness claims.
* ``s3-k``      — a grading of Q[K], K = <(12)>, by the full symmetric
  group S3: the support group of the central idempotent (u_e+u_(12))/2
  is finite but not normal in the grading group.
* ``triangular-n4`` — a grade-truncated triangular matrix ring where
  the left non-annihilation condition fails at degree 1 while the right
  condition holds on every pair inside the truncation window: the two
  conditions are independent.
* ``poly-f3-n4``  — F3[t]/(t^4) graded by Z: torsion-free abelian
  grading, so every central idempotent must lie in degree 0.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .coeff import (RATIONALS, PrimeField, make_algebra, matrix_algebra,
                    truncated_polynomial_algebra)
from .constructions import dorroh_unitize, embed_into_group_ring
from .graded import (GradedAlgebra, EnumerationUnsupportedError, central_idempotents,
                     check_condition, check_non_degenerate, check_strongly_graded,
                     principal_primeness)
from .groups import (DihedralElement, ExceedsCap, FreeAbelianGroup,
                     InfiniteDihedralGroup, NotNormalError, quotient_group,
                     symmetric_group_s3)
from .group_ring import group_ring


@dataclass(frozen=True)
class FactResult:
    key: str
    description: str
    passed: bool
    expected: str
    actual: str

    def to_dict(self):
        return {"key": self.key, "description": self.description,
                "passed": self.passed, "expected": self.expected,
                "actual": self.actual}


@dataclass(frozen=True)
class FixtureReport:
    name: str
    description: str
    facts: tuple

    @property
    def passed(self):
        return all(f.passed for f in self.facts)

    def to_dict(self):
        return {"name": self.name, "description": self.description,
                "passed": self.passed,
                "facts": [f.to_dict() for f in self.facts]}


class UnknownFixtureError(ValueError):
    pass


def _fact(key, description, expected, actual):
    exp, act = str(expected), str(actual)
    return FactResult(key, description, exp == act, exp, act)


def _bool_fact(key, description, value):
    return _fact(key, description, True, bool(value))


# ---------------------------------------------------------------------------
# dinf-q4


def build_dinf_q4():
    """Q^4 with basis (b, c, 1, a), graded by the infinite dihedral group."""
    F = Fraction
    half = F(1, 2)
    products = {
        (0, 0): {2: half, 3: half},          # b*b = (1+a)/2
        (1, 1): {2: half, 3: F(-1, 2)},      # c*c = (1-a)/2
        (0, 2): {0: F(1)}, (2, 0): {0: F(1)},
        (0, 3): {0: F(1)}, (3, 0): {0: F(1)},  # a*b = b*a = b
        (1, 2): {1: F(1)}, (2, 1): {1: F(1)},
        (1, 3): {1: F(-1)}, (3, 1): {1: F(-1)},  # a*c = c*a = -c
        (2, 2): {2: F(1)}, (2, 3): {3: F(1)}, (3, 2): {3: F(1)},
        (3, 3): {2: F(1)},                   # a*a = 1
    }
    # split coordinates: columns are the images of (b, c, 1, a) in Q^4
    split = [[F(1), F(0), F(1), F(1)],
             [F(-1), F(0), F(1), F(1)],
             [F(0), F(1), F(1), F(-1)],
             [F(0), F(-1), F(1), F(-1)]]
    alg = make_algebra(RATIONALS, ("b", "c", "1", "a"), products, split_map=split)
    G = InfiniteDihedralGroup()
    e = DihedralElement(0, False)
    s = DihedralElement(0, True)
    t = DihedralElement(1, True)
    ring = GradedAlgebra(alg, G, [s, t, e, e], name="dinf-q4")
    f = ring.element_from_labels({"1": "1/2", "b": "1/2", "c": "1/2"})
    return {"graded": ring, "f": f, "b": ring.basis_vector(0), "c": ring.basis_vector(1),
            "one": ring.identity_element(), "a": ring.basis_vector(3),
            "e": e, "s": s, "t": t}


def _facts_dinf_q4(cap, budget):
    ctx = build_dinf_q4()
    ring, f = ctx["graded"], ctx["f"]
    G = ring.group
    b, c, one, a = ctx["b"], ctx["c"], ctx["one"], ctx["a"]
    half = Fraction(1, 2)
    facts = [
        _bool_fact("f-idempotent", "f = (1 + b + c)/2 squares to itself",
                   f.is_idempotent()),
        _bool_fact("f-central", "f commutes with every basis element", f.is_central()),
        _fact("f-split-coords", "f has componentwise coordinates (1, 0, 1, 0)",
              "(1, 0, 1, 0)", _split_coords(ring, f)),
        _fact("f-support", "the support of f is {e, s, t}",
              "['e', 's', 't']", sorted(G.describe(g) for g in f.support())),
        _fact("f-support-group-infinite",
              f"the subgroup generated by supp(f) exceeds cap {cap}",
              ExceedsCap(cap), f.support_group(cap)),
        _fact("b-squared", "b^2 = (1 + a)/2", True,
              (b * b) == (one + a).scale(half)),
        _fact("c-squared", "c^2 = (1 - a)/2", True,
              (c * c) == (one - a).scale(half)),
        _fact("bc-zero", "b*c = 0", True, not (b * c)),
    ]
    for side in ("left", "right"):
        res = check_condition(ring, side)
        witness = "none" if res.holds else (
            f"g={G.describe(res.witness_g)} h={G.describe(res.witness_h)} "
            f"r={ring.algebra.format_vector(res.witness.coords)}")
        facts.append(_fact(
            f"condition-{side}-fails",
            f"{side}-sided non-annihilation fails: the degree-s component "
            "annihilates c", "g=s h=t r=c", witness))
    facts.append(_fact("support-not-closed",
                       "supp(R) = {e, s, t} is not a subgroup (s*t is missing)",
                       "support_not_closed", check_strongly_graded(ring).status))
    prime = principal_primeness(ring, budget)
    facts.append(_fact("principal-not-prime",
                       "R_e contains orthogonal zero-divisors 1+a and 1-a",
                       "not_prime", prime.status))
    facts.append(_fact("principal-not-prime-witnesses",
                       "the primeness witnesses are 1+a and 1-a (up to scale)",
                       True,
                       {tuple((one + a).dense()), tuple((one - a).dense())}
                       == {tuple(prime.witness_a.scale(Fraction(2)).dense()),
                           tuple(prime.witness_b.scale(Fraction(2)).dense())}
                       or {tuple((one + a).dense()), tuple((one - a).dense())}
                       == {tuple(prime.witness_a.dense()), tuple(prime.witness_b.dense())}))
    cis = central_idempotents(ring, budget)
    facts.append(_fact("enumeration-complete",
                       "exactly the 16 componentwise 0/1 vectors are central idempotents",
                       16, len(cis)))
    facts.append(_bool_fact("enumeration-contains-f",
                            "the enumeration includes f",
                            any(x == f for x in cis)))
    # Unitization and embedding round trips
    D = dorroh_unitize(ring)
    psi_f = D.embed(f)
    facts.append(_bool_fact("unitization-preserves",
                            "(f, 0) stays a central idempotent with the same support",
                            psi_f.is_idempotent() and psi_f.is_central()
                            and psi_f.support() == f.support()))
    phi = embed_into_group_ring(ring)
    facts.append(_bool_fact("embedding-preserves-support",
                            "phi(f) = sum of components times group units keeps supp(f)",
                            phi.apply(f).support() == f.support()))
    return ctx, facts


def _split_coords(ring, v):
    alg = ring.algebra
    field = alg.field
    dense = v.dense()
    coords = tuple(
        sum((field.mul(alg.split_map[r][k], dense[k]) for k in range(alg.dim)),
            field.zero)
        for r in range(alg.dim))
    return "(" + ", ".join(field.format(c) for c in coords) + ")"


# ---------------------------------------------------------------------------
# m2-z


def build_m2_z():
    """M2(Q)[Z] with the idempotent E11*u_0 + E12*u_1."""
    F = Fraction
    alg = matrix_algebra(RATIONALS, 2)
    ring = group_ring(alg, FreeAbelianGroup(1), name="m2-z")
    E11 = (F(1), F(0), F(0), F(0))
    E12 = (F(0), F(1), F(0), F(0))
    f = ring.element({(0,): E11, (1,): E12})
    return {"ring": ring, "f": f}


def _facts_m2_z(cap, budget):
    ctx = build_m2_z()
    ring, f = ctx["ring"], ctx["f"]
    facts = [
        _bool_fact("f-idempotent", "(E11*u_0 + E12*u_1)^2 = E11*u_0 + E12*u_1",
                   f.is_idempotent()),
        _fact("f-not-central", "f is not central (E11 is not scalar)",
              False, f.is_central()),
        _fact("f-support", "supp(f) = {0, 1} in Z",
              "[(0,), (1,)]", sorted(f.support())),
        _fact("f-support-group-cap2", "the support group exceeds any cap >= 2",
              ExceedsCap(2), f.support_group(2)),
        _fact("f-support-group-infinite",
              f"the support group of f exceeds cap {cap} (it is all of Z)",
              ExceedsCap(cap), f.support_group(cap)),
        _bool_fact("identity-law", "1*u_0 is a two-sided identity on f",
                   (ring.one() * f) == f and (f * ring.one()) == f),
    ]
    return ctx, facts


# ---------------------------------------------------------------------------
# s3-k


def build_s3_k():
    """Q[K] for K = <(12)>, graded by all of S3 with zero outer components."""
    F = Fraction
    products = {
        (0, 0): {0: F(1)}, (0, 1): {1: F(1)},
        (1, 0): {1: F(1)}, (1, 1): {0: F(1)},
    }
    split = [[F(1), F(1)], [F(1), F(-1)]]
    alg = make_algebra(RATIONALS, ("u_e", "u_(12)"), products, split_map=split)
    G = symmetric_group_s3()
    k12 = G.index_of_label("(12)")
    ring = GradedAlgebra(alg, G, [G.identity(), k12], name="s3-k")
    f = ring.element_from_labels({"u_e": "1/2", "u_(12)": "1/2"})
    return {"graded": ring, "f": f, "K": (G.identity(), k12)}


def _facts_s3_k(cap, budget):
    ctx = build_s3_k()
    ring, f = ctx["graded"], ctx["f"]
    G = ring.group
    facts = [
        _bool_fact("f-idempotent", "f = (u_e + u_(12))/2 squares to itself",
                   f.is_idempotent()),
        _bool_fact("f-central", "f is central", f.is_central()),
        _fact("f-support-group", "the support group of f is K = {e, (12)}",
              "['(12)', 'e']",
              sorted(G.describe(g) for g in f.support_group(cap))),
        _fact("support-group-order", "K has order 2", 2,
              len(f.support_group(cap))),
    ]
    try:
        quotient_group(G, ctx["K"])
        outcome = "normal"
    except NotNormalError:
        outcome = "NotNormal"
    facts.append(_fact("k-not-normal", "K is not a normal subgroup of S3",
                       "NotNormal", outcome))
    facts.append(_fact("condition-left-holds",
                       "every supported component consists of invertible multiples",
                       True, check_condition(ring, "left").holds))
    facts.append(_fact("strong-on-support",
                       "the grading is strong when restricted to K",
                       "strong_on_support", check_strongly_graded(ring).status))
    cis = central_idempotents(ring, budget)
    facts.append(_fact("enumeration-complete",
                       "the central idempotents are 0, 1, f, 1-f",
                       4, len(cis)))
    facts.append(_bool_fact("every-enumerated-finite-support",
                            "every enumerated idempotent has finite support group",
                            all(not isinstance(x.support_group(cap), ExceedsCap)
                                for x in cis)))
    return ctx, facts


# ---------------------------------------------------------------------------
# triangular-n4


def build_triangular_n4(field=None):
    """Upper triangular [[F, F[t]], [0, F[t]]] truncated at t-degree window N=4.

    Basis (E11, E22, E12, E22*t, E12*t, E22*t^2, E12*t^2, E22*t^3) with
    degree n holding E12*t^(n-1) and E22*t^n; products that would leave
    the window are truncated to zero (quotient by the tail ideal).
    """
    field = field or RATIONALS
    one = field.one
    labels = ("E11", "E22", "E12", "E22*t", "E12*t", "E22*t^2", "E12*t^2", "E22*t^3")
    e22 = {0: 1, 1: 3, 2: 5, 3: 7}
    e12 = {0: 2, 1: 4, 2: 6}
    products = {(0, 0): {0: one}}
    for k in range(3):
        products[(0, e12[k])] = {e12[k]: one}
    for a in range(3):
        for b in range(4):
            if a + b <= 2:
                products[(e12[a], e22[b])] = {e12[a + b]: one}
    for a in range(4):
        for b in range(4):
            if a + b <= 3:
                products[(e22[a], e22[b])] = {e22[a + b]: one}
    alg = make_algebra(field, labels, products)
    Z = FreeAbelianGroup(1)
    degrees = [(0,), (0,), (1,), (1,), (2,), (2,), (3,), (3,)]
    ring = GradedAlgebra(alg, Z, degrees, name="triangular-n4")
    window = lambda g, h: g[0] + h[0] <= 3
    return {"graded": ring, "window": window}


def _facts_triangular_n4(cap, budget):
    ctx = build_triangular_n4()
    ring, window = ctx["graded"], ctx["window"]
    left = check_condition(ring, "left")
    left_w = check_condition(ring, "left", pair_filter=window)
    right_w = check_condition(ring, "right", pair_filter=window)
    fmt = ring.algebra.format_vector
    facts = [
        _fact("condition-left-fails",
              "the degree-1 component annihilates E11 from the left",
              "g=(1,) h=(0,) r=E11",
              f"g={left.witness_g} h={left.witness_h} r={fmt(left.witness.coords)}"),
        _fact("condition-left-fails-in-window",
              "the same failure is inside the truncation window",
              "g=(1,) h=(0,) r=E11",
              f"g={left_w.witness_g} h={left_w.witness_h} r={fmt(left_w.witness.coords)}"),
        _fact("condition-right-holds-in-window",
              "right-sided non-annihilation holds on every pair with g+h <= 3",
              True, right_w.holds),
        _fact("support-not-closed", "supp(R) = {0,1,2,3} is not a subgroup of Z",
              "support_not_closed", check_strongly_graded(ring).status),
        _fact("nondegenerate-right-fails",
              "the truncation is degenerate at degree 1 (R_{-1} = 0)",
              "(1,)", check_non_degenerate(ring, "right").witness_g),
        _bool_fact("unital", "the identity is E11 + E22",
                   ring.identity_element() is not None
                   and ring.identity_element()
                   == ring.basis_vector(0) + ring.basis_vector(1)),
    ]
    try:
        central_idempotents(ring, budget)
        outcome = "enumerated"
    except EnumerationUnsupportedError:
        outcome = "unsupported"
    facts.append(_fact("enumeration-unsupported-over-q",
                       "exact enumeration over Q needs a split coefficient algebra",
                       "unsupported", outcome))
    return ctx, facts


# ---------------------------------------------------------------------------
# poly-f3-n4


def build_poly_f3_n4():
    """F3[t]/(t^4) graded by Z with deg(t^k) = k."""
    alg = truncated_polynomial_algebra(PrimeField(3), 4)
    ring = GradedAlgebra(alg, FreeAbelianGroup(1), [(0,), (1,), (2,), (3,)],
                         name="poly-f3-n4")
    return {"graded": ring}


def _facts_poly_f3_n4(cap, budget):
    ctx = build_poly_f3_n4()
    ring = ctx["graded"]
    cis = central_idempotents(ring, budget)
    e = ring.group.identity()
    facts = [
        _fact("enumeration-complete", "the only central idempotents are 0 and 1",
              2, len(cis)),
        _bool_fact("all-idempotents-degree-zero",
                   "every central idempotent is supported in degree 0",
                   all(x.support() <= {e} for x in cis)),
        _bool_fact("identity-in-degree-zero", "supp(1) = {0}",
                   ring.identity_element().support() == {e}),
    ]
    left = check_condition(ring, "left")
    facts.append(_fact("condition-left-fails-at-truncation",
                       "degree 1 annihilates t^3 because t^4 is truncated to zero",
                       "g=(1,) h=(3,)", f"g={left.witness_g} h={left.witness_h}"))
    facts.append(_fact("support-not-closed",
                       "supp(R) = {0,1,2,3} is not a subgroup of Z",
                       "support_not_closed", check_strongly_graded(ring).status))
    return ctx, facts


# ---------------------------------------------------------------------------
# Registry.


_FIXTURE_DESCRIPTIONS = {
    "dinf-q4": "Q^4 graded by the infinite dihedral group: central idempotent "
               "with infinite support group; all finiteness hypotheses fail",
    "m2-z": "M2(Q)[Z]: a non-central idempotent with infinite support group",
    "s3-k": "Q[K] graded by S3: finite support group that is not normal",
    "triangular-n4": "truncated triangular matrix ring: the two one-sided "
                     "non-annihilation conditions are independent",
    "poly-f3-n4": "F3[t]/(t^4) graded by Z: central idempotents live in degree 0",
}

_FIXTURE_FACTS = {
    "dinf-q4": _facts_dinf_q4,
    "m2-z": _facts_m2_z,
    "s3-k": _facts_s3_k,
    "triangular-n4": _facts_triangular_n4,
    "poly-f3-n4": _facts_poly_f3_n4,
}

FIXTURES = tuple(sorted(_FIXTURE_FACTS))

_FIXTURE_BUILDERS = {
    "dinf-q4": build_dinf_q4,
    "m2-z": build_m2_z,
    "s3-k": build_s3_k,
    "triangular-n4": build_triangular_n4,
    "poly-f3-n4": build_poly_f3_n4,
}


def build_fixture(name: str):
    try:
        return _FIXTURE_BUILDERS[name]()
    except KeyError:
        raise UnknownFixtureError(
            f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}") from None


def run_fixture(name: str, cap: int = 1000, budget: int = 10**6) -> FixtureReport:
    try:
        fact_fn = _FIXTURE_FACTS[name]
    except KeyError:
        raise UnknownFixtureError(
            f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}") from None
    _, facts = fact_fn(cap, budget)
    return FixtureReport(name, _FIXTURE_DESCRIPTIONS[name], tuple(facts))


def run_all_fixtures(cap: int = 1000, budget: int = 10**6):
    return [run_fixture(name, cap, budget) for name in FIXTURES]
