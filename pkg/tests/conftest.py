import itertools
import re

import pytest


def brute_maps(n):
    """Every partial injection of {1..n} as a sorted pair tuple; no library code involved."""
    pts = range(1, n + 1)
    for p in range(n + 1):
        for dom in itertools.combinations(pts, p):
            for img in itertools.permutations(pts, p):
                yield tuple(zip(dom, img))


def brute_family(pairs, family):
    ok_contr = all(abs(b[1] - a[1]) <= abs(b[0] - a[0]) for a, b in itertools.combinations(pairs, 2))
    pres = all(a[1] < b[1] for a, b in itertools.combinations(pairs, 2))
    rev = all(a[1] > b[1] for a, b in itertools.combinations(pairs, 2))
    dec = all(y <= x for x, y in pairs)
    return {
        "i": True,
        "ci": ok_contr,
        "oci": ok_contr and pres,
        "oci-plus": ok_contr and rev,
        "orci": ok_contr and (pres or rev),
        "odci": ok_contr and pres and dec,
    }[family]


def brute_counts(n, family):
    """{(p, m): count} by brute force."""
    out = {}
    for pairs in brute_maps(n):
        if brute_family(pairs, family):
            key = (len(pairs), sum(x == y for x, y in pairs))
            out[key] = out.get(key, 0) + 1
    return out


@pytest.fixture(scope="session")
def brute():
    cache = {}

    def get(n, family):
        if (n, family) not in cache:
            cache[(n, family)] = brute_counts(n, family)
        return cache[(n, family)]

    return get


def pytest_terminal_summary(terminalreporter):
    verdicts = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", getattr(rep, "nodeid", ""))
            if not m:
                continue
            key = (int(m.group(1)), m.group(2))
            if outcome != "passed":
                verdicts[key] = "FAIL"
            elif rep.when == "call":
                verdicts.setdefault(key, "PASS")
    if verdicts:
        terminalreporter.write_sep("=", "acceptance criteria")
        for (num, name), verdict in sorted(verdicts.items()):
            terminalreporter.write_line(f"criterion {num:2d} {verdict}  {name}")
