"""Verification harness: hypothesis detection, claim checking, corpus sweeps.

``verify_instance`` runs one graded instance through a fixed catalog of
claims.  Each claim pairs a hypothesis (decided exactly from the
instance: abelian/torsion-free grading group, one-sided non-annihilation,
strong grading with s-unitality, crossed-product origin, non-degeneracy
with a prime principal component) with a conclusion about every
enumerated nonzero central idempotent (finite support group; support
inside the torsion subgroup; containment in the principal component).
A claim whose hypothesis fails is reported ``not_applicable``; an
instance where enumeration is impossible reports its claims
``not_evaluated``.  A ``failed`` conclusion on an instance whose
hypothesis holds is a build-breaking event.

``corpus_sweep`` generates bounded instance families — group rings over
the built-in groups of order <= 8, twisted and skew crossed products
over Z2, and Z^k-graded truncated instances of dimension <= 8 — and
aggregates their reports.  All output is deterministic: instances are
sorted by name, dictionaries serialize with sorted keys, and no
timestamps appear anywhere.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

from .coeff import (RATIONALS, PrimeField, group_algebra, make_algebra,
                    matrix_algebra, product_algebra, truncated_polynomial_algebra)
from .graded import (BudgetExceededError, EnumerationUnsupportedError, GradedAlgebra,
                     central_idempotents, check_condition, check_non_degenerate,
                     check_strongly_graded, is_s_unital, principal_primeness)
from .groups import (ExceedsCap, FiniteTableGroup, FreeAbelianGroup, builtin_group,
                     element_order)
from .group_ring import crossed_product
from .instances import Instance, emit_group_element

DEFAULT_CAP = 1000
DEFAULT_BUDGET = 10**6


# ---------------------------------------------------------------------------
# Claim catalog.


@dataclass(frozen=True)
class Claim:
    key: str
    description: str
    # conclusion components, applied to every enumerated nonzero central
    # idempotent when the hypothesis holds:
    wants_finite_support_group: bool = True
    wants_torsion_support: bool = False          # abelian case
    wants_principal_when_torsion_free: bool = False


CLAIMS = (
    Claim("finite-support-abelian",
          "abelian grading group: every nonzero central idempotent has a finite "
          "support group, contained in the torsion subgroup",
          wants_torsion_support=True),
    Claim("identity-component",
          "torsion-free abelian grading group: every central idempotent lies "
          "in the principal component"),
    Claim("finite-support-nonannihilation",
          "a one-sided non-annihilation condition holds: every nonzero central "
          "idempotent has a finite support group",
          wants_principal_when_torsion_free=True),
    Claim("finite-support-strong",
          "s-unital and strongly graded with full support: every nonzero "
          "central idempotent has a finite support group",
          wants_principal_when_torsion_free=True),
    Claim("finite-support-invertible-units",
          "crossed product (invertible homogeneous units): every nonzero "
          "central idempotent has a finite support group",
          wants_principal_when_torsion_free=True),
    Claim("finite-support-nondegenerate-prime",
          "one-sided non-degenerate grading with a prime principal component: "
          "every nonzero central idempotent has a finite support group",
          wants_principal_when_torsion_free=True),
)


def _claim_applies(claim: Claim, hyp: dict) -> bool:
    if claim.key == "finite-support-abelian":
        return hyp["abelian"]
    if claim.key == "identity-component":
        return hyp["abelian"] and hyp["torsion_free"]
    if claim.key == "finite-support-nonannihilation":
        return hyp["condition_left"] or hyp["condition_right"]
    if claim.key == "finite-support-strong":
        return hyp["s_unital"] is True and hyp["strongly_graded_full"]
    if claim.key == "finite-support-invertible-units":
        return hyp["crossed_product"]
    if claim.key == "finite-support-nondegenerate-prime":
        return (hyp["principal_prime"] == "prime"
                and (hyp["non_degenerate_left"] or hyp["non_degenerate_right"]))
    raise AssertionError(f"unhandled claim {claim.key}")


# ---------------------------------------------------------------------------
# Per-instance verification.


@dataclass
class ClaimResult:
    key: str
    description: str
    status: str                  # passed | failed | not_applicable | not_evaluated
    detail: str = ""

    def to_dict(self):
        return {"key": self.key, "description": self.description,
                "status": self.status, "detail": self.detail}


@dataclass
class VerificationReport:
    name: str
    hypotheses: dict
    idempotents: list            # serialized enumerated idempotents
    claims: list                 # ClaimResult
    enumeration: str             # complete | budget_exceeded | unsupported | unavailable
    notes: list

    @property
    def failed(self):
        return any(c.status == "failed" for c in self.claims)

    @property
    def budget_exceeded(self):
        return self.enumeration == "budget_exceeded"

    def to_dict(self):
        return {"name": self.name,
                "hypotheses": self.hypotheses,
                "enumeration": self.enumeration,
                "idempotents": self.idempotents,
                "claims": [c.to_dict() for c in self.claims],
                "notes": list(self.notes)}


def detect_hypotheses(graded: GradedAlgebra, *, is_crossed: bool,
                      budget: int = DEFAULT_BUDGET) -> dict:
    group = graded.group
    left = check_condition(graded, "left")
    right = check_condition(graded, "right")
    strong = check_strongly_graded(graded)
    full_support = (isinstance(group, FiniteTableGroup)
                    and len(graded.support_degrees()) == group.order)
    nd_left = check_non_degenerate(graded, "left")
    nd_right = check_non_degenerate(graded, "right")
    prime = principal_primeness(graded, budget)
    s_unital = is_s_unital(graded)
    return {
        "abelian": group.is_abelian,
        "torsion_free": group.is_torsion_free,
        "condition_left": left.holds,
        "condition_right": right.holds,
        "strongly_graded": strong.status,
        "strongly_graded_full": strong.holds and full_support,
        "s_unital": s_unital,
        "unital": graded.algebra.identity is not None,
        "non_degenerate_left": nd_left.holds,
        "non_degenerate_right": nd_right.holds,
        "principal_prime": prime.status,
        "crossed_product": is_crossed,
    }


def _torsion_ok(group, supp) -> bool:
    return all(element_order(group, g) is not None for g in supp)


def verify_graded(graded: GradedAlgebra, *, name=None, is_crossed=False,
                  cap: int = DEFAULT_CAP,
                  budget: int = DEFAULT_BUDGET) -> VerificationReport:
    name = name or graded.name or "instance"
    notes = []
    hyp = detect_hypotheses(graded, is_crossed=is_crossed, budget=budget)
    group = graded.group
    e = group.identity()

    enumeration = "complete"
    idempotents = []
    try:
        found = central_idempotents(graded, budget)
    except BudgetExceededError as exc:
        enumeration = "budget_exceeded"
        found = None
        notes.append(str(exc))
    except EnumerationUnsupportedError as exc:
        enumeration = "unsupported"
        found = None
        notes.append(str(exc))

    observed = []
    if found is not None:
        for x in found:
            supp = sorted(x.support(), key=group.sort_key)
            sg = x.support_group(cap)
            observed.append({
                "element": x,
                "support": supp,
                "finite_support_group": not isinstance(sg, ExceedsCap),
                "support_group_size": None if isinstance(sg, ExceedsCap) else len(sg),
                "torsion_support": _torsion_ok(group, supp),
                "principal": all(g == e for g in supp),
            })
            idempotents.append({
                "value": graded.algebra.format_vector(x.coords),
                "support": [emit_group_element(group, g) for g in supp],
                "support_group": ("exceeds_cap" if isinstance(sg, ExceedsCap)
                                  else len(sg)),
            })

    claims = []
    for claim in CLAIMS:
        if not _claim_applies(claim, hyp):
            claims.append(ClaimResult(claim.key, claim.description, "not_applicable"))
            continue
        if found is None:
            claims.append(ClaimResult(claim.key, claim.description, "not_evaluated",
                                      f"enumeration {enumeration}"))
            continue
        failure = None
        for obs in observed:
            x = obs["element"]
            nonzero = bool(x)
            if claim.key == "identity-component":
                # quantifies over every central idempotent, zero included
                if not obs["principal"]:
                    failure = (x, "support leaves the principal component")
                    break
                continue
            if not nonzero:
                continue
            if claim.wants_finite_support_group and not obs["finite_support_group"]:
                failure = (x, f"support group exceeds cap {cap}")
                break
            if claim.wants_torsion_support and not obs["torsion_support"]:
                failure = (x, "support contains an element of infinite order")
                break
            if (claim.wants_principal_when_torsion_free and group.is_torsion_free
                    and not obs["principal"]):
                failure = (x, "support leaves the principal component")
                break
        if failure is None:
            claims.append(ClaimResult(claim.key, claim.description, "passed",
                                      f"checked {len(observed)} idempotents"))
        else:
            x, why = failure
            claims.append(ClaimResult(
                claim.key, claim.description, "failed",
                f"{why}: f = {graded.algebra.format_vector(x.coords)}"))

    return VerificationReport(name=name, hypotheses=_serialize_hypotheses(hyp),
                              idempotents=idempotents, claims=claims,
                              enumeration=enumeration, notes=notes)


def _serialize_hypotheses(hyp: dict) -> dict:
    out = {}
    for key, value in hyp.items():
        if value is None:
            out[key] = "unknown"
        elif isinstance(value, bool):
            out[key] = value
        else:
            out[key] = str(value)
    return out


def verify_instance(instance: Instance, cap: int = DEFAULT_CAP,
                    budget: int = DEFAULT_BUDGET) -> VerificationReport:
    if instance.graded is None:
        hyp = {"abelian": instance.ring.group.is_abelian,
               "torsion_free": instance.ring.group.is_torsion_free}
        claims = [ClaimResult(c.key, c.description, "not_evaluated",
                              "no finite-dimensional graded view of this instance")
                  for c in CLAIMS]
        return VerificationReport(
            name=instance.name, hypotheses=_serialize_hypotheses(hyp),
            idempotents=[], claims=claims, enumeration="unavailable",
            notes=["group rings over infinite groups have no complete "
                   "enumeration; use named elements with the fixture-style checks"])
    return verify_graded(instance.graded, name=instance.name,
                         is_crossed=(instance.kind == "crossed_product"),
                         cap=cap, budget=budget)


def exit_code(reports) -> int:
    if any(r.failed for r in reports):
        return 2
    if any(r.budget_exceeded for r in reports):
        return 4
    return 0


# ---------------------------------------------------------------------------
# Corpus generation.


@dataclass(frozen=True)
class SweepConfig:
    family: str = "all"                    # group_rings | crossed_products | Zk_graded | all
    max_order: int = 8
    fields: tuple = ("F2", "F3", "F5")
    cap: int = DEFAULT_CAP
    budget: int = DEFAULT_BUDGET


def _sweep_fields(config):
    out = []
    for spec in config.fields:
        text = str(spec).strip().upper()
        if text == "Q":
            out.append(RATIONALS)
        else:
            out.append(PrimeField(int(text.lstrip("F"))))
    return out


_SWEEP_GROUPS = ("Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "K4", "S3", "D4")


def corpus_group_rings(config: SweepConfig):
    """field[G] with its canonical grading, for the built-in finite groups."""
    for field in _sweep_fields(config):
        if not isinstance(field, PrimeField):
            continue   # enumeration over Q needs split coefficients
        for gname in _SWEEP_GROUPS:
            group = builtin_group(gname)
            if group.order > config.max_order:
                continue
            alg = group_algebra(field, group)
            graded = GradedAlgebra(alg, group, list(range(group.order)))
            yield (f"group_ring/F{field.p}[{gname}]", graded, False)


_UNIT_CLASS_REPS = {2: (1,), 3: (1, 2), 5: (1, 2)}


def corpus_crossed_products(config: SweepConfig):
    """Twisted and skew crossed products over Z2 (order 2 <= max_order)."""
    if config.max_order < 2:
        return
    for field in _sweep_fields(config):
        if not isinstance(field, PrimeField):
            continue
        z2 = builtin_group("Z2")
        base = matrix_algebra(field, 1)
        for lam in _UNIT_CLASS_REPS.get(field.p, (1,)):
            cocycle = {(0, 0): (field.one,), (0, 1): (field.one,),
                       (1, 0): (field.one,), (1, 1): (field.from_int(lam),)}
            ring = crossed_product(base, z2, action={1: ((field.one,),)},
                                   cocycle=cocycle)
            graded = ring.as_graded_algebra()
            graded.name = f"crossed/F{field.p}*Z2(lambda={lam})"
            yield (graded.name, graded, True)
        prod = product_algebra(field, 2)
        swap = ((field.zero, field.one), (field.one, field.zero))
        trivial = {(g, h): tuple(prod.identity) for g in (0, 1) for h in (0, 1)}
        ring = crossed_product(prod, z2, action={1: swap}, cocycle=trivial)
        graded = ring.as_graded_algebra()
        graded.name = f"crossed/F{field.p}^2*Z2(swap)"
        yield (graded.name, graded, True)


def _bivariate_truncated(field, a, b):
    """field[s,t]/(s^a, t^b) with basis s^i t^j, graded by Z^2."""
    labels = []
    degrees = []
    index = {}
    for i in range(a):
        for j in range(b):
            index[(i, j)] = len(labels)
            if (i, j) == (0, 0):
                labels.append("1")
            else:
                si = "" if i == 0 else ("s" if i == 1 else f"s^{i}")
                tj = "" if j == 0 else ("t" if j == 1 else f"t^{j}")
                labels.append((si + "*" + tj).strip("*") if si and tj else si + tj)
            degrees.append((i, j))
    products = {}
    for (i1, j1), x in index.items():
        for (i2, j2), y in index.items():
            if i1 + i2 < a and j1 + j2 < b:
                products[(x, y)] = {index[(i1 + i2, j1 + j2)]: field.one}
    alg = make_algebra(field, tuple(labels), products)
    return GradedAlgebra(alg, FreeAbelianGroup(2), degrees)


def corpus_zk_graded(config: SweepConfig):
    """Z- and Z^2-graded instances of dimension <= 8."""
    from .fixtures import build_triangular_n4

    for field in _sweep_fields(config):
        if isinstance(field, PrimeField):
            for n in (2, 3, 4, 8):
                alg = truncated_polynomial_algebra(field, n)
                graded = GradedAlgebra(alg, FreeAbelianGroup(1),
                                       [(k,) for k in range(n)])
                yield (f"Zk/F{field.p}-poly-n{n}", graded, False)
            for a, b in ((2, 2), (2, 3), (2, 4)):
                graded = _bivariate_truncated(field, a, b)
                yield (f"Zk/F{field.p}-bivariate-{a}x{b}", graded, False)
            tri = build_triangular_n4(field)["graded"]
            yield (f"Zk/F{field.p}-triangular-n4", tri, False)
        else:
            for n in (2, 3, 4):
                alg = product_algebra(field, n)
                graded = GradedAlgebra(alg, FreeAbelianGroup(1), [(0,)] * n)
                yield (f"Zk/Q-split-product-{n}", graded, False)
            alg = product_algebra(field, 2)
            graded = GradedAlgebra(alg, FreeAbelianGroup(2), [(0, 0)] * 2)
            yield (f"Zk/Q-split-product-2-Z2", graded, False)


_FAMILIES = {
    "group_rings": corpus_group_rings,
    "crossed_products": corpus_crossed_products,
    "Zk_graded": corpus_zk_graded,
}


class UnknownFamilyError(ValueError):
    pass


@dataclass
class SweepReport:
    config: SweepConfig
    reports: list

    @property
    def failures(self):
        return [r for r in self.reports if r.failed]

    @property
    def counts(self):
        tally = {"passed": 0, "failed": 0, "not_applicable": 0, "not_evaluated": 0}
        for report in self.reports:
            for claim in report.claims:
                tally[claim.status] += 1
        return tally

    def to_dict(self):
        return {
            "config": {"family": self.config.family,
                       "max_order": self.config.max_order,
                       "fields": list(self.config.fields),
                       "cap": self.config.cap,
                       "budget": self.config.budget},
            "instances": len(self.reports),
            "claim_counts": self.counts,
            "failures": [r.name for r in self.failures],
            "reports": [r.to_dict() for r in self.reports],
        }


def corpus_sweep(config: SweepConfig) -> SweepReport:
    if config.family == "all":
        families = [_FAMILIES[k] for k in sorted(_FAMILIES)]
    else:
        try:
            families = [_FAMILIES[config.family]]
        except KeyError:
            raise UnknownFamilyError(
                f"unknown family {config.family!r}; known: "
                f"{', '.join(sorted(_FAMILIES))}, all") from None
    entries = []
    for fam in families:
        entries.extend(fam(config))
    entries.sort(key=lambda t: t[0])
    reports = [verify_graded(graded, name=name, is_crossed=crossed,
                             cap=config.cap, budget=config.budget)
               for name, graded, crossed in entries]
    return SweepReport(config, reports)


def report_json(payload) -> str:
    """Canonical JSON: sorted keys, no whitespace drift, no timestamps."""
    if hasattr(payload, "to_dict"):
        payload = payload.to_dict()
    elif isinstance(payload, list):
        payload = [p.to_dict() if hasattr(p, "to_dict") else p for p in payload]
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"
