import pytest


class AcceptanceLog:
    def __init__(self):
        self.lines = []

    def check(self, number, title, passed, detail=""):
        status = "PASS" if passed else "FAIL"
        self.lines.append(f"[{status}] criterion {number:>2}: {title}" + (f" ({detail})" if detail else ""))
        assert passed, f"criterion {number} failed: {title} {detail}"


def pytest_configure(config):
    config._acceptance_log = AcceptanceLog()


@pytest.fixture
def acceptance(request):
    return request.config._acceptance_log


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config._acceptance_log.lines
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
