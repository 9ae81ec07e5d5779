"""
Shared option parsing, validation and artifact delivery for the commands.
"""

from contextlib import contextmanager
from typing import Any, Callable, List, Optional, Sequence

import click
from pydantic import ValidationError

from config.settings import settings
from db import GoldenRepository
from models.run_config import RunConfig
from cli.emitters import emit
from utils.errors import GoldenMismatchError, InputError
from utils.logger import setup_logger

logger = setup_logger(__name__)


def parse_int_list(ctx, param, value: Optional[str]) -> List[int]:
    """click callback: "2,4" -> [2, 4]; empty -> []."""
    if value is None or not value.strip():
        return []
    try:
        return [int(x) for x in value.split(",") if x.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}")


def artifact_options(formats: Sequence[str], default: str = "json") -> Callable:
    """--format, --output and --golden for a command emitting one artifact."""
    def decorator(f):
        f = click.option("--golden", default=None, help="Compare against (or record) this golden.")(f)
        f = click.option("--output", "output_path", type=click.Path(dir_okay=False), default=None,
                         help="Write the artifact here instead of stdout.")(f)
        f = click.option("--format", "output_format", type=click.Choice(list(formats)), default=default,
                         show_default=True)(f)
        return f
    return decorator


def an_options(f):
    f = click.option("--J", "J", callback=parse_int_list, default="",
                     help="Interior breakpoints, comma separated (endpoints implied).")(f)
    f = click.option("--n", "n", type=int, required=True, help="Rank of A_n.")(f)
    return f


def build_config(**fields: Any) -> RunConfig:
    try:
        return RunConfig(**fields)
    except ValidationError as e:
        messages = "; ".join(err["msg"] for err in e.errors())
        raise InputError(f"invalid invocation: {messages}") from e


_GOLDEN_EXCLUDE = {"golden", "output_path"}


def deliver(config: RunConfig, text: str, repository: Optional[GoldenRepository] = None) -> None:
    """Check the golden (when named), then write the artifact."""
    if config.golden:
        repository = repository or GoldenRepository()
        command = config.model_dump_json(exclude=_GOLDEN_EXCLUDE)
        if not repository.compare_or_record(config.golden, command, text):
            emit(text, config.output_path)
            raise GoldenMismatchError(f"output differs from golden {config.golden!r}")
    emit(text, config.output_path)


@contextmanager
def numeric_overrides(config: RunConfig):
    """Apply --gap-ratio and --residual to the settings for one run."""
    saved = (settings.GAP_RATIO, settings.REFINE_RESIDUAL)
    if config.gap_ratio is not None:
        settings.GAP_RATIO = config.gap_ratio
    if config.residual is not None:
        settings.REFINE_RESIDUAL = config.residual
    try:
        yield
    finally:
        settings.GAP_RATIO, settings.REFINE_RESIDUAL = saved
