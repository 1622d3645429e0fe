import itertools

import pytest


def brute_energies(h):
    """Independent energy table: evaluate each term as a product of +-1 spins."""
    out = {}
    for bits in itertools.product((0, 1), repeat=h.n_spins):
        s = [1 - 2 * b for b in bits]
        e = 0.0
        for subset, c in h.items():
            p = c
            for k in subset:
                p *= s[k]
            e += p
        out["".join(map(str, bits))] = e
    return out


def brute_ground(h, tol=1e-9):
    e = brute_energies(h)
    m = min(e.values())
    return m, {b for b, v in e.items() if v <= m + tol}


@pytest.fixture
def rng():
    import numpy as np
    return np.random.default_rng(12345)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
