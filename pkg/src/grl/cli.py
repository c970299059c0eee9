"""Command-line interface.

Commands:

* ``grl verify-examples [--only NAME]`` — run the built-in fixtures and
  report every expected fact.
* ``grl check INSTANCE.json [--transform T]...`` — verify one instance
  file against the claim catalog; ``quotient:N=...`` and
  ``restrict:H=...`` rewrite the grading first, ``dorroh`` and ``phi``
  check the construction laws instead of the catalog.
* ``grl enumerate INSTANCE.json`` — list every central idempotent.
* ``grl sweep --family NAME`` — generate and verify a bounded corpus.

Exit codes: 0 all checks passed; 2 a claim or expected fact failed;
3 input error; 4 enumeration budget exceeded.  ``--json PATH`` writes
the machine-readable report (deterministic bytes: sorted keys, no
timestamps).
"""
from __future__ import annotations

import json
import sys

import click

from .constructions import dorroh_unitize, embed_into_group_ring, regrade_by_quotient, \
    restrict_to_subgroup
from .graded import BudgetExceededError, EnumerationUnsupportedError, GradingError, \
    central_idempotents
from .groups import GroupError, NotNormalError, NotSubgroupError
from .group_ring import NotUnitalError
from .fixtures import FIXTURES, UnknownFixtureError, run_all_fixtures, run_fixture
from .harness import (DEFAULT_BUDGET, DEFAULT_CAP, SweepConfig, UnknownFamilyError,
                      corpus_sweep, exit_code, report_json, verify_graded,
                      verify_instance)
from .instances import (InstanceFormatError, emit_graded_element, load_instance,
                        parse_group_element)

EXIT_OK = 0
EXIT_CLAIM_FAILED = 2
EXIT_INPUT_ERROR = 3
EXIT_BUDGET = 4


def _write_json(path, payload):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(report_json(payload))


def _fail_input(message):
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_INPUT_ERROR)


@click.group()
def main():
    """Exact verification of support-group claims for graded rings."""


@main.command("verify-examples")
@click.option("--only", default=None, help="Run a single fixture by name.")
@click.option("--cap", default=DEFAULT_CAP, show_default=True,
              help="Subgroup closure cap.")
@click.option("--budget", default=DEFAULT_BUDGET, show_default=True,
              help="Enumeration budget.")
@click.option("--json", "json_path", default=None, type=click.Path(),
              help="Write the machine-readable report to this path.")
def verify_examples(only, cap, budget, json_path):
    """Re-check every fact of the built-in fixtures."""
    try:
        if only:
            reports = [run_fixture(only, cap=cap, budget=budget)]
        else:
            reports = run_all_fixtures(cap=cap, budget=budget)
    except UnknownFixtureError as exc:
        _fail_input(exc)
    all_passed = True
    for report in reports:
        click.echo(f"{report.name}: {'PASS' if report.passed else 'FAIL'}"
                   f" ({sum(f.passed for f in report.facts)}/{len(report.facts)} facts)")
        for fact in report.facts:
            mark = "ok" if fact.passed else "FAIL"
            click.echo(f"  [{mark:>4}] {fact.key}: {fact.description}")
            if not fact.passed:
                click.echo(f"         expected {fact.expected!r}, got {fact.actual!r}")
        all_passed &= report.passed
    _write_json(json_path, [r.to_dict() for r in reports])
    sys.exit(EXIT_OK if all_passed else EXIT_CLAIM_FAILED)


def _parse_members(graded, spec):
    items = [s for s in spec.split(",") if s.strip()]
    members = []
    for item in items:
        literal = item.strip()
        try:
            literal = json.loads(literal)
        except json.JSONDecodeError:
            pass
        members.append(parse_group_element(graded.group, literal))
    return members


def _apply_structural_transform(graded, transform):
    if transform.startswith("quotient:N="):
        return regrade_by_quotient(graded, _parse_members(graded, transform[11:]))
    if transform.startswith("restrict:H="):
        return restrict_to_subgroup(graded, _parse_members(graded, transform[11:]))
    raise InstanceFormatError(
        f"unknown transform {transform!r} (expected dorroh, phi, "
        "quotient:N=..., or restrict:H=...)")


def _construction_report(graded, transform, budget):
    """Law checks for the dorroh / phi transforms; returns (lines, passed)."""
    lines = []
    passed = True
    try:
        idempotents = central_idempotents(graded, budget)
    except (BudgetExceededError, EnumerationUnsupportedError):
        idempotents = []
        lines.append("enumeration unavailable; checking laws on basis elements only")
    if transform == "dorroh":
        ring = dorroh_unitize(graded)
        one = ring.one()
        probes = [ring.embed(graded.basis_vector(i)) for i in range(graded.algebra.dim)]
        law = all((one * p) == p and (p * one) == p for p in probes)
        lines.append(f"(0,1) is a two-sided identity on the embedded basis: {law}")
        passed &= law
        for f in idempotents:
            pf = ring.embed(f)
            keep = (pf.is_idempotent() == f.is_idempotent()
                    and pf.is_central() == f.is_central()
                    and pf.support() == f.support())
            passed &= keep
        lines.append(f"unitization preserves idempotency/centrality/support on "
                     f"{len(idempotents)} enumerated idempotents: {passed}")
        return lines, passed
    if transform == "phi":
        try:
            phi = embed_into_group_ring(graded)
        except NotUnitalError as exc:
            return [f"phi needs a unital instance: {exc}"], False
        one = graded.identity_element()
        law = phi.apply(one) == phi.ring.one()
        lines.append(f"phi maps 1 to 1*u_e: {law}")
        passed &= law
        hom = True
        basis = [graded.basis_vector(i) for i in range(graded.algebra.dim)]
        for a in basis:
            for b in basis:
                hom &= phi.apply(a) * phi.apply(b) == phi.apply(a * b)
        lines.append(f"phi is multiplicative on all basis pairs: {hom}")
        passed &= hom
        supp = all(phi.apply(f).support() == f.support() for f in idempotents)
        lines.append(f"phi preserves supports of {len(idempotents)} enumerated "
                     f"idempotents: {supp}")
        passed &= supp
        return lines, passed
    raise AssertionError(transform)


@main.command("check")
@click.argument("instance_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--cap", default=DEFAULT_CAP, show_default=True)
@click.option("--budget", default=DEFAULT_BUDGET, show_default=True)
@click.option("--transform", "transforms", multiple=True,
              help="dorroh | phi | quotient:N=<members> | restrict:H=<members>; "
              "members are comma-separated element literals.")
@click.option("--json", "json_path", default=None, type=click.Path())
def check(instance_path, cap, budget, transforms, json_path):
    """Verify one instance file against the claim catalog."""
    try:
        instance = load_instance(instance_path)
    except InstanceFormatError as exc:
        _fail_input(exc)
    graded = instance.graded
    construction_lines = []
    construction_ok = True
    try:
        for transform in transforms:
            if transform in ("dorroh", "phi"):
                if graded is None:
                    _fail_input("this transform needs a finite-dimensional graded view")
                lines, ok = _construction_report(graded, transform, budget)
                construction_lines += [f"[{transform}] {line}" for line in lines]
                construction_ok &= ok
            else:
                if graded is None:
                    _fail_input("structural transforms need a finite-dimensional "
                                "graded view")
                graded = _apply_structural_transform(graded, transform)
    except (InstanceFormatError, NotNormalError, NotSubgroupError, GroupError,
            GradingError) as exc:
        _fail_input(exc)

    if construction_lines and all(t in ("dorroh", "phi") for t in transforms):
        for line in construction_lines:
            click.echo(line)
        verdict = "PASS" if construction_ok else "FAIL"
        click.echo(f"construction laws: {verdict}")
        _write_json(json_path, {"name": instance.name,
                                "construction": construction_lines,
                                "passed": construction_ok})
        sys.exit(EXIT_OK if construction_ok else EXIT_CLAIM_FAILED)

    if graded is not instance.graded:
        report = verify_graded(graded, name=f"{instance.name} (transformed)",
                               is_crossed=(instance.kind == "crossed_product"),
                               cap=cap, budget=budget)
    else:
        report = verify_instance(instance, cap=cap, budget=budget)
    _write_json(json_path, report)
    _echo_report(report, construction_lines)
    code = exit_code([report])
    if not construction_ok:
        code = code or EXIT_CLAIM_FAILED
    sys.exit(code)


def _echo_report(report, extra_lines=()):
    click.echo(f"instance: {report.name}")
    for line in extra_lines:
        click.echo(line)
    click.echo("hypotheses:")
    for key in sorted(report.hypotheses):
        click.echo(f"  {key}: {report.hypotheses[key]}")
    click.echo(f"enumeration: {report.enumeration}"
               + (f" ({len(report.idempotents)} central idempotents)"
                  if report.enumeration == "complete" else ""))
    for note in report.notes:
        click.echo(f"note: {note}")
    click.echo("claims:")
    for claim in report.claims:
        detail = f" — {claim.detail}" if claim.detail else ""
        click.echo(f"  [{claim.status:>14}] {claim.key}{detail}")
    verdict = "FAIL" if report.failed else "PASS"
    click.echo(f"result: {verdict}")


@main.command("enumerate")
@click.argument("instance_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--budget", default=DEFAULT_BUDGET, show_default=True)
@click.option("--json", "json_path", default=None, type=click.Path())
def enumerate_cmd(instance_path, budget, json_path):
    """List every central idempotent of an instance."""
    try:
        instance = load_instance(instance_path)
    except InstanceFormatError as exc:
        _fail_input(exc)
    if instance.graded is None:
        _fail_input("enumeration needs a finite-dimensional graded view "
                    "(finite group or explicit graded algebra)")
    try:
        found = central_idempotents(instance.graded, budget)
    except EnumerationUnsupportedError as exc:
        _fail_input(exc)
    except BudgetExceededError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_BUDGET)
    group = instance.graded.group
    click.echo(f"{len(found)} central idempotents:")
    payload = []
    for x in found:
        supp = sorted(x.support(), key=group.sort_key)
        desc = instance.graded.algebra.format_vector(x.coords)
        click.echo(f"  {desc}   support={{{', '.join(group.describe(g) for g in supp)}}}")
        payload.append(emit_graded_element(x))
    _write_json(json_path, {"name": instance.name, "count": len(found),
                            "idempotents": payload})
    sys.exit(EXIT_OK)


@main.command("sweep")
@click.option("--family", default="all", show_default=True,
              help="group_rings | crossed_products | Zk_graded | all")
@click.option("--max-order", default=8, show_default=True)
@click.option("--field", "fields", multiple=True,
              help="Repeatable: F2, F3, F5, Q.  Default: F2 F3 F5 Q.")
@click.option("--cap", default=DEFAULT_CAP, show_default=True)
@click.option("--budget", default=DEFAULT_BUDGET, show_default=True)
@click.option("--json", "json_path", default=None, type=click.Path())
def sweep(family, max_order, fields, cap, budget, json_path):
    """Generate and verify a bounded instance corpus."""
    config = SweepConfig(family=family, max_order=max_order,
                         fields=tuple(fields) or ("F2", "F3", "F5", "Q"),
                         cap=cap, budget=budget)
    try:
        result = corpus_sweep(config)
    except (UnknownFamilyError, ValueError) as exc:
        _fail_input(exc)
    _write_json(json_path, result)
    counts = result.counts
    click.echo(f"{len(result.reports)} instances "
               f"(family={config.family}, fields={','.join(config.fields)})")
    click.echo(f"claims: {counts['passed']} passed, {counts['failed']} failed, "
               f"{counts['not_applicable']} not applicable, "
               f"{counts['not_evaluated']} not evaluated")
    for report in result.reports:
        status = "FAIL" if report.failed else ("BUDGET" if report.budget_exceeded
                                               else "pass")
        applicable = sum(c.status in ("passed", "failed") for c in report.claims)
        click.echo(f"  [{status:>6}] {report.name} "
                   f"({len(report.idempotents)} idempotents, {applicable} claims)")
    sys.exit(exit_code(result.reports))


if __name__ == "__main__":
    main()
