import time

import pytest

from codegrees.verify import run_catalog


@pytest.fixture(scope="session")
def catalog_run():
    """One full verification run over the catalog, shared by the
    acceptance tests; returns (reports, elapsed seconds)."""
    start = time.monotonic()
    reports = run_catalog(seed=42)
    return reports, time.monotonic() - start
