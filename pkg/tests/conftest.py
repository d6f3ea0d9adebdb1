import pytest

from infoclone.cli import main

_ACCEPTANCE_RESULTS: list[tuple[int, str, bool, str]] = []


@pytest.fixture
def acceptance():
    """Record one acceptance criterion outcome and assert it passed.

    Results are echoed after the run, one line per criterion, so the
    pass/fail status is visible even with captured output.
    """

    def record(index: int, description: str, passed: bool, detail: str = "") -> None:
        _ACCEPTANCE_RESULTS.append((index, description, bool(passed), detail))
        assert passed, f"criterion {index}: {description} ({detail})"

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for index, description, passed, detail in sorted(_ACCEPTANCE_RESULTS):
        status = "PASS" if passed else "FAIL"
        line = f"[{status}] criterion {index}: {description}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)


@pytest.fixture
def run_cli(tmp_path):
    """Run the CLI in process, writing the report to a file, returning bytes."""

    counter = {"n": 0}

    def run(*args: str) -> tuple[int, bytes]:
        counter["n"] += 1
        out = tmp_path / f"report_{counter['n']}.out"
        code = main([*args, "--out", str(out)])
        data = out.read_bytes() if out.exists() else b""
        return code, data

    return run
