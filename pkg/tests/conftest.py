import pytest

from tjoin6 import workbench

# Criterion results recorded by tests/test_acceptance.py, reported in the
# terminal summary so each criterion gets an explicit pass/fail line.
CRITERIA: dict[int, tuple[bool, str]] = {}


def record_criterion(number: int, ok: bool, message: str) -> None:
    CRITERIA[number] = (ok, message)
    assert ok, f"criterion {number}: {message}"


@pytest.fixture(scope="session")
def corpus():
    return workbench.named_corpus()


@pytest.fixture(scope="session")
def small_corpus(corpus):
    """Instances small enough for exhaustive cut enumeration."""
    return {name: g for name, g in corpus.items() if g.n <= 16}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        ok, message = CRITERIA[number]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status} - {message}")
