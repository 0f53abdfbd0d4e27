import pytest

from grouptrees import build_group

_RESULTS: dict[str, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def group():
    cache = {}

    def get(spec):
        if spec not in cache:
            cache[spec] = build_group(spec)
        return cache[spec]

    return get


@pytest.fixture
def record():
    """Record an acceptance criterion outcome for the terminal summary."""

    def _record(key: str, ok: bool, detail: str = ""):
        _RESULTS[key] = (bool(ok), detail)
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_RESULTS, key=lambda k: int(k.split()[0])):
        ok, detail = _RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {key}  {detail}")
