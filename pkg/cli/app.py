"""
lgtk command group and the exit-status boundary.
"""

import json
import sys
from typing import List, Optional

import click

from cli.an import an, monodromy
from cli.golden import golden
from cli.polytopes import lafforgue, mpp, paths, secondary, triangulations
from config.settings import settings
from utils.errors import GoldenMismatchError, InputError, NumericError
from utils.logger import set_console_level, setup_logger
from utils.metrics import metrics

logger = setup_logger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NUMERIC = 3


def _print_stats() -> None:
    click.echo(json.dumps(metrics.get_metrics(), sort_keys=True, default=str), err=True)


@click.group()
@click.option("--stats", is_flag=True, help="Print collected metrics as JSON to stderr.")
@click.option("--verbose", "-v", is_flag=True, help="Log DEBUG detail to stderr.")
@click.option("--quiet", "-q", is_flag=True, help="Log only errors to stderr.")
@click.pass_context
def cli(ctx, stats, verbose, quiet):
    """Compactification data of toric Landau-Ginzburg models."""
    if verbose and quiet:
        raise click.UsageError("--verbose and --quiet are mutually exclusive")
    if verbose or quiet:
        set_console_level("DEBUG" if verbose else "ERROR")
        ctx.call_on_close(lambda: set_console_level(settings.LOG_LEVEL))
    if stats:
        ctx.call_on_close(_print_stats)


for _command in (secondary, triangulations, lafforgue, mpp, paths, an, monodromy, golden):
    cli.add_command(_command)


def run(argv: Optional[List[str]] = None) -> int:
    """Dispatch one invocation; returns 0, 2 (input) or 3 (numeric or golden mismatch)."""
    try:
        result = cli.main(args=argv, prog_name="lgtk", standalone_mode=False)
    except click.UsageError as e:
        click.echo(f"Error: {e.format_message()}", err=True)
        return EXIT_INPUT
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        return EXIT_INPUT
    except InputError as e:
        logger.error("Input error: %s", e)
        return EXIT_INPUT
    except NumericError as e:
        logger.error("Numeric failure: %s", e)
        if e.diagnostics:
            click.echo(json.dumps({"diagnostics": e.diagnostics}, sort_keys=True, default=str), err=True)
        return EXIT_NUMERIC
    except GoldenMismatchError as e:
        logger.error("%s", e)
        return EXIT_NUMERIC
    return result if isinstance(result, int) else EXIT_OK


def main() -> None:
    sys.exit(run())
