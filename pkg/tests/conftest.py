import pytest

# one line per acceptance criterion, echoed after the test summary so the
# pass/fail record is visible even when capture swallows test stdout
ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_report():
    def record(line):
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
