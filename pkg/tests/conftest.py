import pytest
from hypothesis import settings

from stratakit.parity import reset_verified

settings.register_profile("repro", derandomize=True, deadline=None, max_examples=150)
settings.load_profile("repro")


@pytest.fixture(autouse=True)
def _clean_verified_registry():
    reset_verified()
    yield
    reset_verified()


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "REPORT_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for number in sorted(lines):
            terminalreporter.write_line(lines[number])
