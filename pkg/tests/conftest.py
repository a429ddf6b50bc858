import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from carmpoly import scan


def pytest_collection_modifyitems(config, items):
    if os.environ.get("CARMPOLY_EXTENDED", "").strip() in ("1", "true", "yes"):
        return
    skip = pytest.mark.skip(reason="extended scale; set CARMPOLY_EXTENDED=1")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def s_reports_1e6():
    """All base-set members up to 1e6 with full witnesses (7048 reports)."""
    return list(scan.stream_S(10**6, threads=2))


@pytest.fixture(scope="session")
def s_reports_1e4():
    return list(scan.stream_S(10**4))
