import contextlib
import time

import pytest

from residua import named
from residua.errors import chain_stats
from residua.groups import PermGroup
from residua.perm import Permutation

# (number, title, verdict, detail) rows printed after the run
ACCEPTANCE = []


def perm(n, text):
    return Permutation.from_cycles(text, n)


def group(n, *cycles):
    return PermGroup(n, [perm(n, c) for c in cycles])


def closure(gens, n):
    """Element set of <gens> by breadth-first multiplication; independent of the chain code."""
    e = tuple(range(n))
    seen = {e}
    frontier = [e]
    gens = [tuple(g) for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[x[i]] for i in range(n))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def elements_of(G):
    return closure(G.generators, G.degree)


@pytest.fixture
def S4():
    return named.symmetric(4)


@pytest.fixture
def A4():
    return named.alternating(4)


@pytest.fixture
def V4():
    return named.klein4()


@pytest.fixture
def acceptance():
    """Context manager recording one pass/fail row per acceptance criterion."""

    @contextlib.contextmanager
    def record(number, title):
        t0 = time.perf_counter()
        info = {"detail": ""}
        try:
            yield info
        except BaseException:
            ACCEPTANCE.append((number, title, "FAIL", f"{time.perf_counter() - t0:.1f}s {info['detail']}"))
            raise
        ACCEPTANCE.append((number, title, "PASS", f"{time.perf_counter() - t0:.1f}s {info['detail']}"))

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number, title, verdict, detail in sorted(ACCEPTANCE):
        tr.write_line(f"criterion {number:>2} {verdict}: {title} ({detail.strip()})")
    tr.write_line(
        f"chain bound over the whole run: {chain_stats['checked']} chains checked, "
        f"{chain_stats['violations']} violations, longest at {chain_stats['longest_ratio']:.2f} of 2n-3"
    )


def pytest_sessionfinish(session, exitstatus):
    # a bound violation anywhere fails the run, even if the raising test expected an error
    if chain_stats["violations"] and exitstatus == 0:
        session.exitstatus = 1
