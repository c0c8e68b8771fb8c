import itertools

import hypothesis
import pytest
from hypothesis import strategies as st

from irrlab.graph import Graph

hypothesis.settings.register_profile("ci", deadline=None, max_examples=200)
hypothesis.settings.load_profile("ci")


@st.composite
def graphs(draw, min_order=0, max_order=12):
    n = draw(st.integers(min_order, max_order))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, frozenset(p for p, keep in zip(pairs, chosen) if keep))


def pairwise_irr_t(degrees):
    """Independent reference: half the sum over ordered pairs."""
    total = sum(abs(a - b) for a in degrees for b in degrees)
    assert total % 2 == 0
    return total // 2


def havel_hakimi(seq):
    """Reference graphicality test, independent of the Erdős–Gallai path."""
    d = sorted(seq, reverse=True)
    if d and d[0] > len(d) - 1:
        return False
    while d and d[0] > 0:
        k = d.pop(0)
        if k > len(d):
            return False
        for i in range(k):
            d[i] -= 1
            if d[i] < 0:
                return False
        d.sort(reverse=True)
    return all(x == 0 for x in d)


def brute_force_sequence_max(n):
    """Max pairwise irr_t over every graphical sequence of order n, found by plain filtering."""
    best, arg = -1, set()
    for c in itertools.combinations_with_replacement(range(n - 1, -1, -1), n):
        if sum(c) % 2 or not havel_hakimi(c):
            continue
        v = pairwise_irr_t(c)
        if v > best:
            best, arg = v, {c}
        elif v == best:
            arg.add(c)
    return best, arg


# ---------------------------------------------------------------- acceptance summary

_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))
    elif report.when == "setup" and report.outcome != "passed" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")


@pytest.fixture
def paw():
    return Graph(4, frozenset({(0, 1), (0, 2), (1, 2), (2, 3)}))
