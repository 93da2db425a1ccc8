"""
Script commands. Each non-blank, non-comment script line is split like a
shell command line and dispatched to the ``script`` group below with the
session as context object.
"""
import shlex
from typing import Iterable

import click

from pdoring.algebra.derivation import validate_derivation
from pdoring.algebra.finite_ring import validate_ring
from pdoring.algebra.ideal import ideal_generated, is_delta_subset, subring
from pdoring.cli.session import Session
from pdoring.errors import CliUsageError, PdoringError
from pdoring.io.file_io import FileIO
from pdoring.io.ring_definition import (build_derivation, build_ring, parse_derivation_definition,
                                        parse_ring_definition)
from pdoring.radicals.annihilator import upper_left_annihilator_series
from pdoring.radicals.radideals import higher_radideals, prime_radical, radideal_Il, radideal_Il_delta
from pdoring.radicals.t_nilpotency import is_left_t_nilpotent
from pdoring.verify.catalog import Fixture, FixtureCatalog
from pdoring.verify.report import format_reports
from pdoring.verify.runner import SUITE_NAMES, run_all

FREE_TEXT = {"ignore_unknown_options": True}


def _text(words) -> str:
    return " ".join(words)


def _report_violations(session: Session, what: str, violations) -> bool:
    for violation in violations:
        click.echo(f"{what} violation: {violation}")
    if violations:
        session.mark_failed()
    return not violations


@click.group(name="script", add_help_option=False)
def script():
    pass


@script.command(context_settings=FREE_TEXT, short_help="ring <definition>: switch to a new coefficient ring")
@click.argument("definition", nargs=-1, type=click.UNPROCESSED)
@click.pass_obj
def ring(session: Session, definition):
    ring_obj, derivation = build_ring(parse_ring_definition(_text(definition)), session.config)
    violations = validate_ring(ring_obj, session.config, seed=session.config.seed)
    if not _report_violations(session, "ring axiom", violations):
        return
    if derivation is not None and not _report_violations(session, "derivation",
                                                         validate_derivation(ring_obj, derivation)):
        return
    session.set_ring(ring_obj, derivation)
    kind = "unital" if ring_obj.is_unital else "nonunital"
    shape = "commutative" if ring_obj.is_commutative else "noncommutative"
    suffix = ", axioms sampled" if violations.sampled else ""
    click.echo(f"ring {ring_obj.name}: order {ring_obj.order}, {kind}, {shape}{suffix}")
    if derivation is not None:
        click.echo(f"derivation {session.derivation.name}")


@script.command(context_settings=FREE_TEXT, short_help="derivation <definition>: attach a derivation")
@click.argument("definition", nargs=-1, type=click.UNPROCESSED)
@click.pass_obj
def derivation(session: Session, definition):
    ring_obj = session.require_ring()
    d = build_derivation(parse_derivation_definition(_text(definition)), ring_obj, session.element_of)
    if not _report_violations(session, "derivation", validate_derivation(ring_obj, d)):
        return
    session.set_derivation(d)
    click.echo(f"derivation {d.name}")


@script.command(context_settings=FREE_TEXT, short_help="let <name> = <expr>: bind a series")
@click.argument("definition", nargs=-1, type=click.UNPROCESSED)
@click.pass_obj
def let(session: Session, definition):
    name, sep, expression = _text(definition).partition("=")
    if not sep:
        raise CliUsageError("let needs '='", hint="let f = a*x + 1")
    value = session.evaluate(expression)
    session.bind(name.strip(), value)
    click.echo(f"{name.strip()} = {value}")


@script.command(name="eval", context_settings=FREE_TEXT, short_help="eval <expr>: print a series in normal form")
@click.argument("expression", nargs=-1, type=click.UNPROCESSED)
@click.pass_obj
def evaluate(session: Session, expression):
    click.echo(str(session.evaluate(_text(expression))))


@script.command(short_help="radical il|ildelta|prime|chain: radicals of the session ring")
@click.argument("kind", type=click.Choice(["il", "ildelta", "prime", "chain"]))
@click.pass_obj
def radical(session: Session, kind):
    ring_obj, d = session.require_ring(), session.derivation
    if kind == "il":
        click.echo(str(radideal_Il(ring_obj)))
    elif kind == "prime":
        click.echo(str(prime_radical(ring_obj)))
    elif kind == "ildelta":
        result = radideal_Il_delta(ring_obj, d, session.config)
        click.echo(str(result))
        if not result.is_ideal:
            click.echo("not an ideal")
        if not result.is_delta_subset:
            click.echo("not closed under the derivation")
    else:
        chain = higher_radideals(ring_obj, None if d.is_zero else d, session.config)
        for step, stage in enumerate(chain.stages, 1):
            click.echo(f"stage {step}: {stage}")
        click.echo(f"stable after {chain.stabilization_step} steps; limit {chain.limit}")


@script.command(context_settings=FREE_TEXT, short_help="annseries whole|<elements>: upper left annihilator series")
@click.argument("ideal_text", nargs=-1, type=click.UNPROCESSED)
@click.pass_obj
def annseries(session: Session, ideal_text):
    ring_obj, d = session.require_ring(), session.derivation
    text = _text(ideal_text).strip()
    if not text:
        raise CliUsageError("annseries needs an ideal", hint="annseries whole, or annseries <generators>")
    if text == "whole":
        target, target_d = ring_obj, d
    else:
        ideal = ideal_generated(ring_obj, session.elements_of(text))
        target = subring(ring_obj, ideal.members)
        target_d = d.restrict(target) if is_delta_subset(ring_obj, d, ideal) else None
        click.echo(f"ideal {ideal}")
    series = upper_left_annihilator_series(target, target_d)
    for step, stage in enumerate(series.stages):
        flag = ""
        if series.delta_stable is not None and not series.delta_stable[step]:
            flag = " (not closed under the derivation)"
        click.echo(f"stage {step}: {stage}{flag}")
    verdict = "reaches the whole ring" if series.reached_top else "stops below the whole ring"
    click.echo(f"{verdict} after {series.stabilization_step} steps")


@script.command(context_settings=FREE_TEXT, short_help="tnilp <elements>: left T-nilpotency of a finite set")
@click.argument("elements", nargs=-1, type=click.UNPROCESSED)
@click.pass_obj
def tnilp(session: Session, elements):
    ring_obj = session.require_ring()
    if not elements:
        raise CliUsageError("tnilp needs elements", hint="tnilp a, 1")
    verdict = is_left_t_nilpotent(ring_obj, session.elements_of(_text(elements)))
    click.echo(verdict.describe(ring_obj))


@script.command(short_help="verify <suite|all> [--seed N] [--trials N] [--session]: run verification suites")
@click.argument("suite", type=click.Choice(SUITE_NAMES + ("all",)))
@click.option("--seed", type=int, default=None)
@click.option("--trials", type=click.IntRange(min=1), default=None)
@click.option("--session", "on_session", is_flag=True, help="verify the session ring instead of the catalog")
@click.pass_obj
def verify(session: Session, suite, seed, trials, on_session):
    catalog = None
    if on_session:
        fixture = Fixture.build("session", session.require_ring(), session.derivation, config=session.config)
        catalog = FixtureCatalog([fixture])
    reports = run_all(catalog, seed=seed, precision=session.policy.default_floor_drop, trials=trials,
                      show_progress=session.show_progress,
                      suite_names=SUITE_NAMES if suite == "all" else (suite,), config=session.config)
    session.reports.extend(reports)
    click.echo(format_reports(reports, session.output, include_timing=False))
    if not all(r.ok for r in reports):
        session.mark_failed()


@script.command(short_help="precision <n>: degrees kept below the top of truncated products")
@click.argument("floor_drop", type=click.IntRange(min=1))
@click.pass_obj
def precision(session: Session, floor_drop):
    session.set_precision(floor_drop)
    click.echo(f"precision {floor_drop}")


@script.command(short_help="report --out <path> [--format text|structured]: write collected reports")
@click.option("--out", "path", required=True, type=click.Path(dir_okay=False))
@click.option("--format", "fmt", type=click.Choice(["text", "structured"]), default=None)
@click.pass_obj
def report(session: Session, path, fmt):
    FileIO.write_text(path, format_reports(session.reports, fmt or session.output))
    click.echo(f"wrote {len(session.reports)} reports to {path}")


@script.command(short_help="elements: list the ring elements with their indices")
@click.pass_obj
def elements(session: Session):
    ring_obj = session.require_ring()
    for a in ring_obj.elements:
        click.echo(f"#{a} {ring_obj.element_name(a)}")


@script.command(name="help", short_help="help: list the commands")
@click.pass_context
def show_help(ctx):
    group = ctx.parent.command
    for name in group.list_commands(ctx):
        click.echo(group.get_command(ctx, name).get_short_help_str(limit=100))


def run_line(session: Session, line: str) -> bool:
    session.line_failed = False
    try:
        args = shlex.split(line)
        script.main(args, prog_name="pdoring", standalone_mode=False, obj=session)
    except click.ClickException as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return False
    except (PdoringError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        return False
    return not session.line_failed


def run_script(session: Session, lines: Iterable[str]) -> bool:
    """Run every line, continuing after failures; True when all lines succeeded."""
    ok = True
    for line in lines:
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        ok = run_line(session, text) and ok
    return ok
