import functools
import random

import pytest

from gausscover.diagram import GaussDiagram
from gausscover.enumeration import all_diagrams


def D(word="", signs=None, kind="linear"):
    """Shorthand: D("T1 T2 H1 H2", "++") or D("T1 H1", {1: -1})."""
    if signs is None:
        signs = {}
    elif isinstance(signs, str):
        signs = {i + 1: (1 if s == "+" else -1) for i, s in enumerate(signs)}
    return GaussDiagram(kind, word, signs)


@functools.lru_cache(maxsize=None)
def enumerated(max_chords, kind):
    return tuple(all_diagrams(max_chords, kind))


@pytest.fixture(scope="session")
def small_diagrams():
    """Every linear and circular diagram with at most 3 chords."""
    return enumerated(3, "linear") + enumerated(3, "circular")


@pytest.fixture
def rng():
    return random.Random(20261017)


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
