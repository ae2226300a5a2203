import pytest

from z2sharp.model import Structure, canonical_structure, subset_family
from z2sharp.numbers import ParaNat


@pytest.fixture(scope="session")
def s82():
    return canonical_structure(8, 2)


@pytest.fixture(scope="session")
def s40():
    return canonical_structure(4, 0)


@pytest.fixture(scope="session")
def s31():
    return canonical_structure(3, 1)


@pytest.fixture(scope="session")
def s3():
    """Three S-flavored elements with every classical subset plus all-Both(W)."""
    carrier = tuple(ParaNat(i) for i in range(3))
    return Structure(carrier, subset_family(carrier, 0, powerset=True), 2, 0)


def pytest_terminal_summary(terminalreporter):
    """Repeat the acceptance verdicts, one line per criterion, at the end of
    the run so they are visible without ``-s``."""
    lines = []
    for key in ("passed", "failed"):
        for report in terminalreporter.stats.get(key, []):
            if report.when != "call":
                continue
            lines += [value for name, value in report.user_properties if name == "criterion"]
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
