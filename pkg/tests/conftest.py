import pytest

ACCEPTANCE = []


@pytest.fixture
def criterion():
    """Record one acceptance line; ``criterion(name, ok, detail)``."""

    def record(name, ok, detail=""):
        ACCEPTANCE.append((name, bool(ok), detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE:
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] {name}  {detail}".rstrip())
