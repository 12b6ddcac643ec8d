"""Slow, independent reference computations used only by the tests."""

import itertools

import numpy as np


def span(vectors, q):
    n = len(vectors[0])
    out = set()
    for coeffs in itertools.product(range(q), repeat=len(vectors)):
        out.add(tuple(sum(c * v[i] for c, v in zip(coeffs, vectors)) % q for i in range(n)))
    return frozenset(out)


def count_subspaces(n, r, q):
    """Distinct r-dimensional spans of r-tuples of vectors in F_q^n."""
    vectors = list(itertools.product(range(q), repeat=n))
    seen = set()
    for combo in itertools.combinations(vectors, r):
        sp = span(list(combo), q)
        if len(sp) == q**r:
            seen.add(sp)
    return len(seen)


def rank_by_span(matrix, q):
    """rank = log_q |row space|, by brute-force enumeration."""
    rows = [tuple(int(x) % q for x in row) for row in np.asarray(matrix)]
    size = len(span(rows, q)) if rows else 1
    rank = 0
    while q**rank < size:
        rank += 1
    assert q**rank == size
    return rank
