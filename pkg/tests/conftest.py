import contextlib
import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

_CRITERIA: list[tuple[int, str, str]] = []


@contextlib.contextmanager
def criterion(number: int, title: str):
    try:
        yield
    except BaseException:
        _CRITERIA.append((number, title, "FAIL"))
        print(f"criterion {number}: FAIL  {title}")
        raise
    _CRITERIA.append((number, title, "PASS"))
    print(f"criterion {number}: PASS  {title}")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status in sorted(_CRITERIA):
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")
