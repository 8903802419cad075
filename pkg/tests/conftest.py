import sys
from collections import OrderedDict
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

CRITERIA = OrderedDict(
    [
        (1, "corpus parses and compiles with zero diagnostics in under 1 s"),
        (2, "short and long style names give identical scenes and SVG"),
        (3, "out=90/in=90 control points and end tangents"),
        (4, "half left apex height within 1% of d/2"),
        (5, "with arrow=0.25 lands at 25% of arc length"),
        (6, "line and arrow size scaling laws"),
        (7, "crossing halo order and gap color"),
        (8, "color mix algebra"),
        (9, "deterministic output and content-hash cache"),
        (10, "decorations start, end and land exactly on the path"),
    ]
)

_results: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for n in getattr(report, "criteria", ()):
        _results.setdefault(n, []).append(report.passed)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    report.criteria = tuple(m.args[0] for m in item.iter_markers("criterion"))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n, text in CRITERIA.items():
        if n not in _results:
            continue
        status = "PASS" if all(_results[n]) else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {n:2d}: {text}")
