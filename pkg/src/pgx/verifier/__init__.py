from __future__ import annotations

from .catalog import CatalogEntry, catalog, select
from .checks import CheckReport, UnknownCheckError, list_checks, run_check
from .store import LatticeStore

__all__ = [
    "CatalogEntry",
    "CheckReport",
    "LatticeStore",
    "UnknownCheckError",
    "catalog",
    "list_checks",
    "run_check",
    "select",
]
