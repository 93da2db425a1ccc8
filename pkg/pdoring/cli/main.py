import click

from pdoring.cli.commands import run_script
from pdoring.cli.session import Session
from pdoring.config import DEFAULT_CONFIG
from pdoring.io.file_io import FileIO
from pdoring.verify.report import format_reports


@click.command(name="pdoring")
@click.argument("script_file", required=False, type=click.Path(exists=True, dir_okay=False))
@click.option("--script", "script_option", type=click.Path(exists=True, dir_okay=False),
              help="Script to run; standard input when neither this nor SCRIPT_FILE is given.")
@click.option("--seed", type=int, default=None, help="Default seed of verify commands.")
@click.option("--precision", type=click.IntRange(min=1), default=None,
              help="Degrees kept below the top of truncated products.")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write all collected reports here.")
@click.option("--format", "fmt", type=click.Choice(["text", "structured"]), default="text",
              help="Report format for verify output and --out.")
@click.option("--max-order", type=click.IntRange(min=1), default=None, help="Largest ring order built with tables.")
@click.option("--trials", type=click.IntRange(min=1), default=None, help="Trials per randomized suite.")
@click.option("--progress", is_flag=True, help="Show a progress bar while verifying.")
@click.pass_context
def main(ctx, script_file, script_option, seed, precision, out, fmt, max_order, trials, progress):
    """Run a pdoring script: one command per line, '#' starts a comment line."""
    config = DEFAULT_CONFIG.with_overrides(seed=seed, floor_drop=precision, max_order=max_order, trials=trials)
    session = Session(config, output=fmt, show_progress=progress)
    path = script_option or script_file
    if path is not None:
        lines = FileIO.read_lines(path)
    else:
        lines = click.get_text_stream("stdin").read().splitlines()
    ok = run_script(session, lines)
    if out is not None:
        FileIO.write_text(out, format_reports(session.reports, fmt))
    ctx.exit(0 if ok else 1)
