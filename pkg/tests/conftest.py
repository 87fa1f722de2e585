"""Shared fixtures: expensive oracle enumerations, built once per session."""

import time

import pytest

from chordgenus.bruteforce import (
    count_by_genus_onechords,
    count_macromolecular_multi,
    count_shapes,
)

_ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def acceptance_report():
    """Callable that records one pass/fail line per acceptance criterion."""

    def record(line: str) -> None:
        _ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def oracle_joint8():
    """Joint (genus, chords, 1-chords) counts for all full diagrams, n <= 8.

    Returns the table and the enumeration wall time in seconds.
    """
    t0 = time.perf_counter()
    table = count_by_genus_onechords(8)
    return table, time.perf_counter() - t0


@pytest.fixture(scope="session")
def oracle_shapes6():
    return count_shapes(6)


@pytest.fixture(scope="session")
def mm_oracle14():
    return count_macromolecular_multi(14, (1, 2, 3))
