"""
SQLite persistence for regression goldens: named, digested CLI artifacts.
"""

import hashlib
import sqlite3
from contextlib import contextmanager
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

from config.settings import settings
from utils.logger import setup_logger

logger = setup_logger(__name__)


def digest(payload: str) -> str:
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


class GoldenRepository:
    """SQLite repository of golden artifacts keyed by name."""

    def __init__(self, db_path: Optional[Path] = None):
        default = Path(settings.GOLDEN_DB_PATH) if settings.GOLDEN_DB_PATH else settings.DATA_DIR / "goldens.db"
        self.db_path = Path(db_path) if db_path else default
        self.db_path.parent.mkdir(parents=True, exist_ok=True)
        self._init_schema()

    @contextmanager
    def _connection(self):
        conn = sqlite3.connect(str(self.db_path))
        conn.row_factory = sqlite3.Row
        try:
            yield conn
            conn.commit()
        except Exception:
            conn.rollback()
            raise
        finally:
            conn.close()

    def _init_schema(self) -> None:
        with self._connection() as conn:
            conn.executescript("""
                CREATE TABLE IF NOT EXISTS goldens (
                    name       TEXT PRIMARY KEY,
                    command    TEXT NOT NULL,
                    digest     TEXT NOT NULL,
                    payload    TEXT NOT NULL,
                    created_at TEXT NOT NULL
                );
                CREATE INDEX IF NOT EXISTS idx_goldens_created ON goldens(created_at);
            """)
        logger.debug("Golden store initialized at %s", self.db_path)

    def record(self, name: str, command: str, payload: str) -> str:
        """Insert or replace a golden. Returns its digest."""
        value = digest(payload)
        with self._connection() as conn:
            conn.execute(
                """INSERT OR REPLACE INTO goldens (name, command, digest, payload, created_at)
                   VALUES (?, ?, ?, ?, ?)""",
                (name, command, value, payload, datetime.utcnow().isoformat()),
            )
        logger.info("Recorded golden %s (%s)", name, value[:12])
        return value

    def get(self, name: str) -> Optional[Dict[str, Any]]:
        with self._connection() as conn:
            row = conn.execute("SELECT * FROM goldens WHERE name = ?", (name,)).fetchone()
        return dict(row) if row else None

    def compare_or_record(self, name: str, command: str, payload: str) -> bool:
        """
        True when ``payload`` matches the stored golden, or when no golden
        existed and it was recorded now.
        """
        stored = self.get(name)
        if stored is None:
            self.record(name, command, payload)
            return True
        if stored["digest"] != digest(payload):
            logger.warning("Golden %s mismatch: stored %s, got %s",
                           name, stored["digest"][:12], digest(payload)[:12])
            return False
        return True

    def list_goldens(self) -> List[Dict[str, Any]]:
        with self._connection() as conn:
            rows = conn.execute(
                "SELECT name, command, digest, created_at FROM goldens ORDER BY name"
            ).fetchall()
        return [dict(r) for r in rows]

    def delete(self, name: str) -> bool:
        with self._connection() as conn:
            cur = conn.execute("DELETE FROM goldens WHERE name = ?", (name,))
            return cur.rowcount > 0
