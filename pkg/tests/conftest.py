import pytest

_KEY = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[_KEY] = {}


@pytest.fixture
def acceptance(request):
    """Record the one-line verdict for an acceptance criterion."""
    lines = request.config.stash[_KEY]

    def record(number: int, title: str, passed: bool, detail: str = "") -> None:
        line = f"criterion {number} [{'PASS' if passed else 'FAIL'}] {title}"
        if detail:
            line += f": {detail}"
        lines[number] = line
        print(line)

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_KEY, {})
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(lines):
        terminalreporter.write_line(lines[n])
