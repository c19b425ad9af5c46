import itertools

import numpy as np
import pytest

from simplicial_spectra.complex import from_facets
from simplicial_spectra.extremal import (
    gen_complete,
    gen_remark_k1,
    gen_remark_k2,
    gen_tented,
    random_pure_complex,
)

P_VALUES = (0.3, 0.6, 0.9)


def random_complexes(count, seed, n_range=(4, 7), r_range=(1, 3), keep=None):
    """Deterministic stream of random pure complexes passing ``keep``."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        r = int(rng.integers(r_range[0], min(r_range[1], n - 2) + 1))
        p = P_VALUES[int(rng.integers(len(P_VALUES)))]
        K = random_pure_complex(n, r, p, rng)
        if K is not None and (keep is None or keep(K)):
            out.append(K)
    return out


def mod_p_rank(a, p=2**31 - 1):
    """Rank over GF(p) by plain Gaussian elimination."""
    rows = [[int(x) % p for x in row] for row in np.asarray(a).tolist()]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


@pytest.fixture
def tetra():
    """Boundary of the tetrahedron, a 2-sphere."""
    return gen_complete(4, 3)


@pytest.fixture
def t63():
    return gen_tented(6, 3)


@pytest.fixture
def k1():
    return gen_remark_k1()


@pytest.fixture
def k2():
    return gen_remark_k2()


@pytest.fixture
def full_3_on_6():
    return from_facets(6, itertools.combinations(range(1, 7), 4))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    doc = getattr(getattr(item, "function", None), "__doc__", None)
    outcome.get_result().criterion = (doc or item.name).strip().splitlines()[0]


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when == "call" and "test_acceptance.py" in rep.nodeid:
                rows.append((getattr(rep, "criterion", rep.nodeid), outcome))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for text, outcome in sorted(rows):
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  criterion {text}")
