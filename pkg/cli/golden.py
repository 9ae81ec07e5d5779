"""
Inspection of the golden store.
"""

import click

from cli.common import build_config
from cli.emitters import emit, to_json
from db import GoldenRepository


@click.group("golden")
def golden():
    """Recorded regression artifacts."""


@golden.command("list")
def list_goldens():
    """Names, digests and originating invocations of every golden."""
    build_config(command="golden-list")
    emit(to_json({"goldens": GoldenRepository().list_goldens()}))
