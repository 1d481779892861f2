import pytest

_ACCEPTANCE_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_ACCEPTANCE_KEY] = []


@pytest.fixture
def acceptance(request):
    """Record one acceptance line; the summary prints them in criterion order."""

    def record(number, title, failures):
        status = "PASS" if not failures else "FAIL"
        detail = "" if not failures else f" ({len(failures)} failures, first: {failures[0]})"
        request.config.stash[_ACCEPTANCE_KEY].append((number, f"[{status}] criterion {number}: {title}{detail}"))
        assert not failures, failures[:5]

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = sorted(config.stash.get(_ACCEPTANCE_KEY, []))
    if lines:
        terminalreporter.section("acceptance")
        for _, line in lines:
            terminalreporter.write_line(line)
