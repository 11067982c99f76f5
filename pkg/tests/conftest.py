"""Independent oracles shared by the test modules.

Nothing here uses qcong arithmetic: products are expanded one
``(1 - q^m)`` factor at a time on plain lists.
"""

import sys

import pytest


def naive_eta_quotient(factors, N):
    """prod f_n^k by multiplying/dividing (1 - q^m) factors in place."""
    c = [0] * N
    c[0] = 1
    for n, k in factors:
        for _ in range(abs(k)):
            for m in range(n, N, n):
                if k > 0:
                    for i in range(N - 1, m - 1, -1):
                        c[i] -= c[i - m]
                else:
                    for i in range(m, N):
                        c[i] += c[i - m]
    return c


def brute_partitions(n, parts):
    """Number of partitions of n into the given part sizes (recursive count)."""
    parts = sorted(parts, reverse=True)

    def go(rest, i):
        if rest == 0:
            return 1
        if i == len(parts):
            return 0
        total = 0
        p = parts[i]
        for used in range(rest // p + 1):
            total += go(rest - used * p, i + 1)
        return total

    return go(n, 0)


@pytest.fixture
def naive():
    return naive_eta_quotient


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for i in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[i])
