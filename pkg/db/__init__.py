"""
Data Layer: SQLite store for regression goldens.
"""

from .golden_repository import GoldenRepository, digest

__all__ = ["GoldenRepository", "digest"]
