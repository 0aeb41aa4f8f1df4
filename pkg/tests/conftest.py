"""Shared pytest wiring: collects acceptance pass/fail lines and prints them
in their own section of the terminal summary so they survive output capture."""

from contextlib import contextmanager

_ACCEPTANCE_LINES = []


@contextmanager
def criterion(number, name):
    """Context for one acceptance criterion.

    The body fills out['ok'] and out['detail']; one PASS/FAIL line is
    recorded either way, including when the body raises.
    """
    out = {"ok": False, "detail": ""}
    try:
        yield out
    except BaseException as exc:
        line = f"FAIL criterion {number} ({name}): raised {exc!r}"
        _ACCEPTANCE_LINES.append(line)
        print(line)
        raise
    verdict = "PASS" if out["ok"] else "FAIL"
    line = f"{verdict} criterion {number} ({name}): {out['detail']}"
    _ACCEPTANCE_LINES.append(line)
    print(line)
    assert out["ok"], line


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.line(line)
