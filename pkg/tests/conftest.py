"""Shared oracles.  Each one is written without touching the code it checks."""
from math import gcd

import numpy as np
import pytest

from torusfill.slope import Slope
from torusfill.torus_knot import TorusKnot

# Witness box for the brute-force line-of-lines oracle.
WITNESS_BOUND = 500


def slopes_in_box(r_max, s_max):
    out = [Slope(1, 0)]
    for s in range(1, s_max + 1):
        for r in range(-r_max, r_max + 1):
            if gcd(r, s) == 1:
                out.append(Slope(r, s))
    return out


_line_cache = {}


def line_by_scan(alpha, bound=WITNESS_BOUND):
    """Every slope in the box meeting ``alpha`` once, by exhaustive scan."""
    key = (alpha, bound)
    if key not in _line_cache:
        x = np.arange(-bound, bound + 1, dtype=np.int64)[:, None]
        y = np.arange(0, bound + 1, dtype=np.int64)[None, :]
        mask = np.abs(alpha.r * y - alpha.s * x) == 1
        xs, ys = np.nonzero(mask)
        found = set()
        for i, j in zip(xs, ys):
            r, s = int(x[i, 0]), int(y[0, j])
            if s == 0:
                if abs(r) == 1:
                    found.add(Slope(1, 0))
            elif gcd(r, s) == 1:
                found.add(Slope(r, s))
        _line_cache[key] = sorted(found, key=lambda b: (b.s, abs(b.r), b.r))
    return _line_cache[key]


def brute_ll_witnesses(alpha, gamma, bound=WITNESS_BOUND):
    return [b for b in line_by_scan(alpha, bound) if abs(b.r * gamma.s - gamma.r * b.s) == 1]


def admissible_knots(p_max):
    """Knots passing both modular conditions, recomputed from scratch."""
    def pm1(x, m):
        return x % m in {1 % m, (m - 1) % m}

    out = []
    for p in range(3, p_max + 1):
        for q in range(2, p):
            if gcd(p, q) != 1:
                continue
            if pm1(p, q) or pm1(q, p) or pm1(q * q, p) or pm1(p * p, q):
                continue
            out.append(TorusKnot(p, q))
    return out


@pytest.fixture
def k97():
    return TorusKnot(9, 7)


# -- acceptance reporting ---------------------------------------------------

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call" and not (rep.when == "setup" and rep.failed):
        return
    n, text = mark.args
    ok = rep.passed
    prev = _criteria.get(n, (True, text))
    _criteria[n] = (prev[0] and ok, text)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        ok, text = _criteria[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {text}")
