from __future__ import annotations

import itertools

import numpy as np
import pytest

from griesmer.constructions import corpus


@pytest.fixture(scope="session")
def codes():
    return corpus()


@pytest.fixture(scope="session")
def griesmer_codes(codes):
    return [c for c in codes if c.is_griesmer()]


def brute_force_words(code):
    """All codewords by summing scalar multiples of the rows with plain loops."""
    f = code.field
    words = []
    for msg in itertools.product(range(f.q), repeat=code.k):
        w = [0] * code.n
        for coef, row in zip(msg, code.gen):
            for j, x in enumerate(row):
                w[j] = f.add(w[j], f.mul(coef, int(x)))
        words.append(tuple(w))
    return words


def brute_force_distribution(code):
    dist = {}
    for w in brute_force_words(code):
        wt = sum(1 for x in w if x)
        dist[wt] = dist.get(wt, 0) + 1
    return dict(sorted(dist.items()))


def brute_force_rank(field, m):
    """log_q of the number of distinct vectors in the row span."""
    m = np.asarray(m, dtype=np.int64)
    span = set()
    for coefs in itertools.product(range(field.q), repeat=m.shape[0]):
        v = [0] * m.shape[1]
        for c, row in zip(coefs, m):
            for j, x in enumerate(row):
                v[j] = field.add(v[j], field.mul(c, int(x)))
        span.add(tuple(v))
    r = 0
    while field.q ** r < len(span):
        r += 1
    assert field.q ** r == len(span)
    return r


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    results = test_acceptance.RESULTS
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        title, ok = results[number]
        terminalreporter.write_line(f"criterion {number:2d} {'PASS' if ok else 'FAIL'}: {title}")
