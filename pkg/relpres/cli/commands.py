#!/usr/bin/env python3
"""
Main CLI application for the relpres toolkit.

This module provides the command-line interface using the Click library to
rewrite relators, audit Howie diagrams, run randomized trials and export the
fixture diagrams. Reports are JSON; human-readable lines go to stderr unless
the report itself is written to a file.
"""

import logging
import os
from typing import Any, List, Optional

import click

from ..config import Settings, configure_logging
from ..core.exceptions import (
    CopyIndexOutOfRange,
    GroupTableError,
    MapError,
    NotUnimodular,
    ParseError,
    PreconditionViolated,
    RelPresError,
    WrongShape,
)
from ..core.models import FreeProductCase, Report, RewriteTrace
from ..core import serialization
from ..fixtures import DESCRIPTIONS, get_diagram, get_fixture_names
from ..services import audit_service, fuzz_service, rewriter_service

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_FINDINGS = 2
EXIT_PRECONDITION = 3


def exit_code_for(error: RelPresError) -> int:
    """Map an exception to the CLI exit code taxonomy."""
    if isinstance(error, (ParseError, GroupTableError, MapError, CopyIndexOutOfRange)):
        return EXIT_PARSE
    if isinstance(error, (PreconditionViolated, NotUnimodular, WrongShape)):
        return EXIT_PRECONDITION
    return EXIT_FINDINGS


def _say(message: str, to_stdout: bool, **style: Any) -> None:
    click.echo(click.style(message, **style) if style else message, err=not to_stdout)


def _abort(error: RelPresError) -> None:
    code = exit_code_for(error)
    click.echo(click.style(f"❌ {type(error).__name__}: {error}", fg='red'), err=True)
    logger.debug("exiting with %d", code)
    raise SystemExit(code)


def _emit(document: dict, out: Optional[str]) -> None:
    """Write the JSON document to ``out`` or to stdout."""
    if out:
        serialization.dump_json(document, out)
        click.echo(click.style(f"✅ Report written to {out}", fg='green'))
    else:
        click.echo(serialization.dumps(document))


def _echo_findings(reports: List[Report], to_stdout: bool) -> None:
    for report in reports:
        for finding in report.findings:
            colour = 'red' if finding.severity.value == "error" else 'yellow'
            icon = "❌" if colour == 'red' else "⚠️ "
            _say(f"  {icon} [{report.name}] {finding}", to_stdout, fg=colour)


@click.group()
@click.version_option(version=Settings.APP_VERSION, prog_name="relpres")
@click.option('--verbose', is_flag=True, help='Log pipeline details to stderr')
def cli(verbose: bool):
    """
    relpres - verification toolkit for one-relator relative presentations.

    Rewrite relators into canonical form, audit Howie diagrams with curvature
    and car-crash checks, and run randomized consistency trials.
    """
    configure_logging()
    if verbose:
        logging.getLogger("relpres").setLevel(logging.DEBUG)


@cli.command()
@click.option('--group', 'group_path', required=True, type=click.Path(), help='Group table JSON')
@click.option('--word', 'word_path', required=True, type=click.Path(), help='Relator word JSON')
@click.option('--power', default=None, type=int, help='Relator power k (default from settings)')
@click.option('--out', type=click.Path(), help='Write the presentation JSON here')
def rewrite(group_path: str, word_path: str, power: Optional[int], out: Optional[str]):
    """Rewrite a unimodular relator into its canonical presentation."""
    k = Settings.DEFAULT_POWER if power is None else power
    to_stdout = out is not None
    try:
        group = serialization.group_from_dict(serialization.load_json(group_path))
        word = serialization.tword_from_dict(serialization.load_json(word_path), group)
        trace = RewriteTrace()
        result = rewriter_service.rewrite_relator(group, word, k, trace=trace)
    except RelPresError as e:
        _abort(e)
        return

    warnings = []
    if k == 2 and group.has_involution():
        warnings.append({
            "code": "InvolutionHypothesisGap",
            "message": f"G has involutions {group.involutions()} and k = 2",
        })
        _say("⚠️  G has an involution and k = 2: the hyperbolicity argument does not cover this case",
             to_stdout, fg='yellow')

    if isinstance(result, FreeProductCase):
        _say(f"ℹ️  {result.message}", to_stdout, fg='cyan')
        document = result.to_dict()
        document["warnings"] = warnings
        document["free_subgroup_expected"] = group.order > 1 and not result.infinite_dihedral
        _emit(document, out)
        return

    try:
        conditions = rewriter_service.verify_conditions(result)
        image, conjugate = rewriter_service.embed_to_base(result)
    except RelPresError as e:
        _abort(e)
        return

    _say(f"✅ Rewritten with s = {result.s}, m = {result.m}, k = {result.k}", to_stdout, fg='green')
    _say(f"   R = {result}", to_stdout)
    for failure in conditions.failures:
        _say(f"  ❌ {failure}", to_stdout, fg='red')

    document = result.to_dict()
    document["report"] = {
        "s": result.s,
        "m": result.m,
        "conditions": conditions.to_dict(),
        "trace": trace.to_dict(),
        "image": image.to_dict(),
        "conjugate": conjugate,
        "warnings": warnings,
        "free_subgroup_expected": group.order > 1,
    }
    _emit(document, out)
    if not conditions.all_pass:
        raise SystemExit(EXIT_FINDINGS)


def _load_audit_inputs(diagram_path: str, presentation_path: Optional[str]):
    data = serialization.load_json(diagram_path)
    base_dir = os.path.dirname(diagram_path)
    if presentation_path is None:
        ref = data.get("presentation") if isinstance(data, dict) else None
        if not isinstance(ref, str):
            raise ParseError("no --presentation given and the diagram names none")
        presentation_path = os.path.join(base_dir, ref)
    presentation = serialization.load_presentation(presentation_path)
    return serialization.diagram_from_dict(data, presentation)


@cli.command()
@click.option('--diagram', 'diagram_path', required=True, type=click.Path(), help='Diagram JSON')
@click.option('--presentation', 'presentation_path', type=click.Path(),
              help='Presentation JSON (default: the one the diagram names)')
@click.option('--out', type=click.Path(), help='Write the report JSON here')
def audit(diagram_path: str, presentation_path: Optional[str], out: Optional[str]):
    """Validate a diagram and run the curvature, motion and inequality audits."""
    to_stdout = out is not None
    try:
        diagram = _load_audit_inputs(diagram_path, presentation_path)
        reports = audit_service.full_audit(diagram)
    except RelPresError as e:
        _abort(e)
        return

    summary = audit_service.summarize(reports)
    inequality = reports[-1]
    if summary["ok"]:
        _say("✅ All audits passed", to_stdout, fg='green')
    else:
        _say("❌ Audit findings:", to_stdout, fg='red', bold=True)
    _echo_findings(reports, to_stdout)
    if "lhs" in inequality.values:
        _say(f"📐 {inequality.name}: {inequality.values['lhs']} >= {inequality.values['rhs']}", to_stdout)
    _emit(summary, out)
    if not summary["ok"]:
        raise SystemExit(EXIT_FINDINGS)


@cli.command()
@click.option('--kind', required=True, type=click.Choice(sorted(fuzz_service.TRIALS)), help='Trial kind')
@click.option('--count', default=100, show_default=True, help='Number of trials')
@click.option('--seed', default=None, type=int, help='Random seed (default from settings)')
@click.option('--out', type=click.Path(), help='Write the statistics JSON here')
def fuzz(kind: str, count: int, seed: Optional[int], out: Optional[str]):
    """Run randomized consistency trials."""
    to_stdout = out is not None
    report = fuzz_service.run_fuzz(kind, count, seed)
    failures = report.values["failures"]
    colour = 'green' if failures == 0 else 'red'
    _say(f"🎲 {kind}: {count} trials, {failures} failures (seed {report.values['seed']})",
         to_stdout, fg=colour)
    _echo_findings([report], to_stdout)
    _emit(report.to_dict(), out)
    if failures:
        raise SystemExit(EXIT_FINDINGS)


@cli.group()
def fixtures():
    """List and export the built-in example diagrams."""


@fixtures.command('list')
def list_fixtures():
    """List the named fixture diagrams."""
    click.echo(click.style("\n📚 Fixture diagrams:", fg='blue', bold=True))
    click.echo("-" * 50)
    for name in get_fixture_names():
        click.echo(f"• {name}: {DESCRIPTIONS[name]}")


@fixtures.command('export')
@click.argument('name', type=click.Choice(get_fixture_names()))
@click.option('--out', 'out_dir', required=True, type=click.Path(), help='Output directory')
def export_fixture(name: str, out_dir: str):
    """Write group, presentation and diagram JSON files for a fixture."""
    diagram = get_diagram(name)
    presentation = diagram.presentation.to_dict()
    presentation["group"] = "group.json"
    serialization.dump_json(diagram.presentation.base.to_dict(), os.path.join(out_dir, "group.json"))
    serialization.dump_json(presentation, os.path.join(out_dir, "presentation.json"))
    serialization.dump_json(serialization.diagram_to_dict(diagram, "presentation.json"),
                            os.path.join(out_dir, "diagram.json"))
    click.echo(click.style(f"✅ Fixture '{name}' exported to {out_dir}", fg='green'))


if __name__ == '__main__':
    cli()
