"""Independent brute-force oracles shared by the test modules.

Nothing here calls the dynamic programs or determinants under test; walks
are enumerated step sequence by step sequence.
"""

from itertools import product

import pytest

ACCEPTANCE_LINES: list[str] = []


def _steps(d, signs):
    out = []
    for i in range(d):
        for s in signs:
            v = [0] * d
            v[i] = s
            out.append(tuple(v))
    return out


def _inside(p):
    return p[-1] > 0 and all(p[i] > p[i + 1] for i in range(len(p) - 1))


def brute_walks(start, n, signs=(1, -1)):
    """Multiset of endpoints of all length-n walks inside the open Weyl chamber."""
    start = tuple(start)
    ends = {}
    for seq in product(_steps(len(start), signs), repeat=n):
        p = start
        for s in seq:
            p = tuple(a + b for a, b in zip(p, s))
            if not _inside(p):
                break
        else:
            ends[p] = ends.get(p, 0) + 1
    return ends


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance_log():
    def log(number, description, ok):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {description}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return log
