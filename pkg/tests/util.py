"""Shared generators for randomized test corpora."""

from __future__ import annotations

import numpy as np

from stabkit.f2 import BitMatrix
from stabkit.pauli import PauliVec
from stabkit.qc_ldpc import ExponentEntry, ExponentMatrix


def random_bitmatrix(rng, rows, cols, density=0.5) -> BitMatrix:
    return BitMatrix.from_rows((rng.random((rows, cols)) < density).astype(int))


def random_pauli_list(rng, count, n) -> list[PauliVec]:
    out = []
    for _ in range(count):
        z = int(rng.integers(0, 1 << n))
        x = int(rng.integers(0, 1 << n))
        out.append(PauliVec(n, z, x))
    return out


def random_exponent_matrix(rng, r_max=32) -> ExponentMatrix:
    r = int(rng.integers(2, r_max + 1))
    J = int(rng.integers(1, 5))
    L = int(rng.integers(2, 9))
    grid = []
    for _ in range(J):
        row = []
        for _ in range(L):
            kind = rng.random()
            if kind < 0.15:
                row.append(ExponentEntry.zero())
            elif kind < 0.55 and r >= 2:
                e1, e2 = rng.choice(r, size=2, replace=False)
                row.append(ExponentEntry.binomial(int(e1), int(e2)))
            else:
                row.append(ExponentEntry.monomial(int(rng.integers(r))))
        grid.append(tuple(row))
    return ExponentMatrix(r, J, L, tuple(grid))


def random_tree_check_matrix(rng, n_bits, n_checks) -> BitMatrix:
    """Random acyclic bipartite check matrix (every check non-empty)."""
    edges = []
    bits = [0]
    checks = []
    for c in range(n_checks):
        edges.append((c, int(rng.choice(bits))))
        checks.append(c)
        if len(bits) < n_bits:
            nb = len(bits)
            bits.append(nb)
            edges.append((c, nb))
    while len(bits) < n_bits:
        nb = len(bits)
        bits.append(nb)
        edges.append((int(rng.choice(checks)), nb))
    rows = [0] * n_checks
    for c, b in edges:
        rows[c] |= 1 << b
    return BitMatrix(n_checks, n_bits, tuple(rows))
