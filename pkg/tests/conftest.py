import pytest

_RESULTS = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_RESULTS] = []


@pytest.fixture
def criterion(request):
    """Run ``fn() -> (ok, detail)`` and record a one-line verdict for the summary."""
    results = request.config.stash[_RESULTS]

    def run(cid: str, title: str, fn):
        try:
            ok, detail = fn()
        except Exception as exc:  # noqa: BLE001 - reported as a failure line
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        line = f"{'PASS' if ok else 'FAIL'}  {cid:<4} {title} [{detail}]"
        results.append(line)
        print(line)
        assert ok, line

    return run


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_RESULTS, [])
    if lines:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
