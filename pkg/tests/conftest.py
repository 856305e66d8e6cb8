import pytest

_LINES = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[_LINES] = {}


@pytest.fixture
def acceptance_line(request):
    """Record the one-line pass/fail summary of an acceptance criterion."""
    lines = request.config.stash[_LINES]

    def record(number: int, name: str, passed: bool, detail: str):
        line = f"criterion {number:2d} [{'PASS' if passed else 'FAIL'}] {name}: {detail}"
        lines[number] = line
        print(line)

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash[_LINES]
    if lines:
        terminalreporter.section("acceptance criteria")
        for number in sorted(lines):
            terminalreporter.write_line(lines[number])
