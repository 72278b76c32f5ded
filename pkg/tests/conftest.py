import random

import pytest
from hypothesis import strategies as st

from pfacrypt import Pfa
from pfacrypt.samples import t1 as _t1

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when != "call" and not (rep.when == "setup" and not rep.passed):
        return
    number, title = mark.args
    ok = rep.passed and _criteria.get(number, True)
    _criteria[number] = ok
    item.config._criteria_titles = getattr(item.config, "_criteria_titles", {})
    item.config._criteria_titles[number] = title


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    titles = getattr(config, "_criteria_titles", {})
    if not titles:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(titles):
        status = "PASS" if _criteria[number] else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d} {status}  {titles[number]}")


@pytest.fixture
def t1():
    return _t1()


def pfa_from_dict(n, delta, alphabet="ab"):
    return Pfa(n, alphabet, delta)


def random_delta(rng: random.Random, n, p_undefined=0.25):
    delta = {}
    for q in range(n):
        for c in "ab":
            if rng.random() >= p_undefined:
                delta[q, c] = rng.randrange(n)
    return delta


@st.composite
def partial_automata(draw, max_states=6, letters="ab"):
    n = draw(st.integers(1, max_states))
    delta = {}
    for q in range(n):
        for c in letters:
            t = draw(st.one_of(st.none(), st.integers(0, n - 1)))
            if t is not None:
                delta[q, c] = t
    return Pfa(n, letters, delta)


@st.composite
def a_total_automata(draw, max_states=8):
    n = draw(st.integers(1, max_states))
    delta = {(q, "a"): draw(st.integers(0, n - 1)) for q in range(n)}
    for q in range(n):
        t = draw(st.one_of(st.none(), st.integers(0, n - 1)))
        if t is not None:
            delta[q, "b"] = t
    return Pfa(n, "ab", delta)
