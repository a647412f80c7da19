"""Session-wide fixtures.

All heavyweight objects hang off one lazily-built Workbench shared by the
whole session.  Set NEAROCT_TEST_CACHE to a directory to reuse text caches
(suboctagons, valuations, ...) across pytest runs; by default a fresh
temporary cache is used and everything is computed from scratch.
"""

import os

import pytest

from nearoct.workbench import Workbench

#: filled by the acceptance tests, echoed at the end of the run
ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def wb(tmp_path_factory):
    cache = os.environ.get("NEAROCT_TEST_CACHE")
    if not cache:
        cache = tmp_path_factory.mktemp("nearoct-cache")
    return Workbench(cache_dir=cache)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
