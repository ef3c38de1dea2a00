"""Pytest configuration file."""

from __future__ import annotations

import pytest

from lsst.transgen.engine import DegreeStore, populate_store


def pytest_configure(config: pytest.Config) -> None:
    """Add configurations for pytest."""
    config.addinivalue_line("markers", "slow: regenerates the full degree store or runs a long sweep")


@pytest.fixture(scope="session")
def populated_store() -> DegreeStore:
    """Degree store with every tabulated degree regenerated."""
    return populate_store(DegreeStore())
