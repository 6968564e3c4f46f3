import sys

import pytest

from fiscal_composition.simulator import ModelParams


@pytest.fixture
def baseline():
    return ModelParams()



def pytest_terminal_summary(terminalreporter):
    module = next((m for name, m in sys.modules.items() if name.endswith("test_acceptance")), None)
    lines = getattr(module, "SCORECARD", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
