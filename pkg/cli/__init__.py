"""
Command-line surface.
"""

from cli.app import cli, run, main, EXIT_OK, EXIT_INPUT, EXIT_NUMERIC

__all__ = ["cli", "run", "main", "EXIT_OK", "EXIT_INPUT", "EXIT_NUMERIC"]
