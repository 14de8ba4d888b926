"""Shared fixtures: reference objects and brute-force helpers.

The reference tableaux/hives are the worked examples exercised throughout
the test suite; the helpers here are deliberately naive so they can serve as
independent oracles for the library's algorithms.
"""

from __future__ import annotations

import itertools

import pytest

from lrhive.hive import Hive
from lrhive.lrcalc import sweep_triples
from lrhive.tableaux import SkewTableau

# 5-row skew example: shape (9,9,6,4,1)/(7,5,3), weight (7,5,2)
REF_T5 = SkewTableau(
    (
        (0, 0, 0, 0, 0, 0, 0, 1, 1),
        (0, 0, 0, 0, 0, 1, 1, 2, 2),
        (0, 0, 0, 1, 1, 2),
        (1, 2, 2, 3),
        (3,),
    )
)

# Result of deleting the corner of row 4 from REF_T5
REF_T5_DELETED = SkewTableau(
    (
        (0, 0, 0, 0, 0, 0, 1, 1, 1),
        (0, 0, 0, 0, 0, 1, 2, 2, 2),
        (0, 0, 0, 1, 1, 3),
        (1, 2, 2),
        (3,),
    )
)

# 4-row example: shape (8,6,5,4)/(6,5,2), weight (5,4,1), and its partner
REF_T4 = SkewTableau(
    (
        (0, 0, 0, 0, 0, 0, 1, 1),
        (0, 0, 0, 0, 0, 1),
        (0, 0, 1, 2, 2),
        (1, 2, 2, 3),
    )
)
REF_S4 = SkewTableau(
    (
        (0, 0, 0, 0, 0, 1, 1, 1),
        (0, 0, 0, 0, 1, 2),
        (0, 1, 2, 2, 2),
        (1, 2, 3, 3),
    )
)

# The corresponding 4-hives
REF_H4 = Hive(4, (8, 6, 5, 4), (6, 5, 2, 0), (5, 4, 1, 0), ((1,), (1, 2), (1, 2, 1)))
REF_K4 = Hive(4, (8, 6, 5, 4), (5, 4, 1, 0), (6, 5, 2, 0), ((1,), (1, 3), (1, 1, 2)))

# 5-hive matching REF_T5
REF_H5 = Hive(
    5,
    (9, 9, 6, 4, 1),
    (7, 5, 3, 0, 0),
    (7, 5, 2, 0, 0),
    ((2,), (2, 1), (1, 2, 1), (0, 0, 1, 0)),
)

# Vertex labels of REF_H5, row i of the triangle listed for j = i..5
REF_H5_VERTICES = {
    (0, 0): 0, (0, 1): 7, (0, 2): 12, (0, 3): 15, (0, 4): 15, (0, 5): 15,
    (1, 1): 9, (1, 2): 16, (1, 3): 21, (1, 4): 22, (1, 5): 22,
    (2, 2): 18, (2, 3): 24, (2, 4): 27, (2, 5): 27,
    (3, 3): 24, (3, 4): 28, (3, 5): 29,
    (4, 4): 28, (4, 5): 29,
    (5, 5): 29,
}


def brute_force_lr(lam, mu, nu, max_letter=None):
    """All LR fillings by trying every letter in every cell; oracle only."""
    from lrhive.shapes import canonical, padded
    from lrhive.tableaux import is_lattice, is_semistandard

    lam = canonical(lam)
    mu_p = padded(canonical(mu), len(lam)) if lam else ()
    nu = canonical(nu)
    if max_letter is None:
        max_letter = max(len(lam), len(nu), 1)
    cells = [(i, j) for i in range(len(lam)) for j in range(mu_p[i], lam[i])]
    results = []
    for fill in itertools.product(range(1, max_letter + 1), repeat=len(cells)):
        rows = [[0] * lam[i] for i in range(len(lam))]
        for (i, j), v in zip(cells, fill):
            rows[i][j] = v
        try:
            t = SkewTableau(tuple(tuple(r) for r in rows))
        except ValueError:
            continue
        if is_semistandard(t) and is_lattice(t) and t.weight() == nu:
            results.append(t)
    return results


def all_ssyt(shape, max_letter):
    """Straight-shape semistandard fillings with letters <= max_letter."""
    from lrhive.shapes import canonical

    shape = canonical(shape)
    rows = [[0] * w for w in shape]
    out = []

    def fill(i, j):
        if i == len(shape):
            out.append(SkewTableau(tuple(tuple(r) for r in rows)))
            return
        ni, nj = (i, j + 1) if j + 1 < shape[i] else (i + 1, 0)
        lo = 1
        if j > 0:
            lo = max(lo, rows[i][j - 1])
        if i > 0:
            lo = max(lo, rows[i - 1][j] + 1)
        for v in range(lo, max_letter + 1):
            rows[i][j] = v
            fill(ni, nj)
        rows[i][j] = 0

    if not shape:
        return [SkewTableau(())]
    fill(0, 0)
    return out


@pytest.fixture(scope="session")
def small_sweep():
    """Triples with |lam| <= 8, at most 3 rows, plus their LR tableaux."""
    from lrhive.lrcalc import enumerate_lr

    data = []
    for lam, mu, nu in sweep_triples(8, 3):
        tabs = enumerate_lr(lam, mu, nu, max(len(lam), 1))
        if tabs:
            data.append((lam, mu, nu, tabs))
    return data


@pytest.fixture(scope="session")
def acceptance_sweep():
    """The full verification corpus: |lam| <= 12, at most 4 rows."""
    from lrhive.lrcalc import enumerate_hives, enumerate_lr

    data = []
    for lam, mu, nu in sweep_triples(12, 4):
        n = max(len(lam), 1)
        tabs = enumerate_lr(lam, mu, nu, n)
        hives = enumerate_hives(lam, mu, nu, n)
        if tabs or hives:
            data.append((lam, mu, nu, n, tabs, hives))
    return data
