import os
from itertools import combinations
from pathlib import Path

import pytest

from dgclique import TemporalNetwork, build_dictionary

# vertex names used in fixture docs
A, B, C = 0, 1, 2

S1_TIMES = [1, 2, 3, 5, 6, 7]


def make_s1(lifetime=(0, 10)):
    return TemporalNetwork.from_edges([(A, B, t) for t in S1_TIMES], dt=1, lifetime=lifetime)


def make_s2(bc_times=(2, 3)):
    edges = [(A, B, 1), (A, B, 3), (A, C, 2), (A, C, 4)] + [(B, C, t) for t in bc_times]
    return TemporalNetwork.from_edges(edges, dt=1, lifetime=(0, 5))


def make_lookahead():
    return TemporalNetwork.from_edges([(A, B, t) for t in (7, 8, 11)], dt=1)


@pytest.fixture
def s1():
    return make_s1()


@pytest.fixture
def s2():
    return make_s2()


@pytest.fixture
def lookahead():
    return make_lookahead()


def naive_pair_ok(times, t_a, t_b, delta, gamma, dt):
    """Walk every grid tau and count by linear scan."""
    tau = t_a
    last = max(t_b - delta, t_a)
    while tau <= last:
        hi = min(tau + delta, t_b)
        if sum(1 for t in times if tau <= t <= hi) < gamma:
            return False
        tau += dt
    return True


def naive_is_clique(net, members, interval, delta, gamma):
    d = build_dictionary(net)
    return all(
        naive_pair_ok(d.times(u, v), interval[0], interval[1], delta, gamma, net.dt)
        for u, v in combinations(sorted(members), 2)
    )


DATA_DIR = Path(os.environ.get("DGCLIQUE_DATA", Path(__file__).resolve().parent.parent / "data"))


# one PASS/FAIL line per acceptance criterion at the end of the run

_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "setup" and report.skipped:
        _acceptance[name] = "SKIP"
    elif report.when == "call":
        _acceptance[name] = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        terminalreporter.write_line(f"{_acceptance[name]:4}  {name}")
