from __future__ import annotations

import sys

import pytest

from pgx.verifier.store import LatticeStore


@pytest.fixture(scope="session")
def store(tmp_path_factory) -> LatticeStore:
    """One lattice store for the whole session so large lattices are built once."""
    return LatticeStore(tmp_path_factory.mktemp("lattice-cache"))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
