import itertools

import numpy as np
import pytest

from stabkit import f2, gf4, sgs
from stabkit.codes import css_sp_matrix, hamming_matrix, q15_matrix
from stabkit.gf4 import (
    F4_0,
    F4_1,
    F4_ELEMENTS,
    F4_W,
    F4_WBAR,
    F4Matrix,
    f4_add,
    f4_mul,
    gamma,
    trace_inner,
)
from stabkit.pauli import PauliVec, symplectic_product, weight


def test_gamma_table():
    assert gamma(F4_0) == (0, 0)
    assert gamma(F4_WBAR) == (0, 1)
    assert gamma(F4_1) == (1, 1)
    assert gamma(F4_W) == (1, 0)


def test_gamma_additive_all_pairs():
    for a, b in itertools.product(F4_ELEMENTS, repeat=2):
        za, xa = gamma(a)
        zb, xb = gamma(b)
        assert gamma(f4_add(a, b)) == (za ^ zb, xa ^ xb)


def test_field_axioms_exhaustive():
    for a, b in itertools.product(F4_ELEMENTS, repeat=2):
        assert f4_add(a, b) == f4_add(b, a)
        assert f4_mul(a, b) == f4_mul(b, a)
    for a, b, c in itertools.product(F4_ELEMENTS, repeat=3):
        assert f4_mul(a, f4_mul(b, c)) == f4_mul(f4_mul(a, b), c)
        assert f4_add(a, f4_add(b, c)) == f4_add(f4_add(a, b), c)
        assert f4_mul(a, f4_add(b, c)) == f4_add(f4_mul(a, b), f4_mul(a, c))
    # W = w^2 and 1 + w + w^2 = 0
    assert f4_mul(F4_W, F4_W) == F4_WBAR
    assert f4_add(F4_1, f4_add(F4_W, F4_WBAR)) == F4_0
    assert f4_mul(F4_W, F4_WBAR) == F4_1


def test_trace_inner_values():
    assert trace_inner(F4_WBAR, F4_1) == 1
    for a in F4_ELEMENTS:
        assert trace_inner(a, a) == 0
        assert trace_inner(F4_0, a) == 0


def test_trace_inner_matches_symplectic_product():
    for a, b in itertools.product(F4_ELEMENTS, repeat=2):
        za, xa = gamma(a)
        zb, xb = gamma(b)
        u = PauliVec(1, za, xa)
        v = PauliVec(1, zb, xb)
        assert trace_inner(a, b) == symplectic_product(u, v)


def test_weight_preserved_random_vectors():
    rng = np.random.default_rng(0)
    for _ in range(50):
        n = int(rng.integers(1, 12))
        vec = [int(rng.integers(4)) for _ in range(n)]
        wt4 = sum(1 for e in vec if e != F4_0)
        z = sum(gamma(e)[0] << i for i, e in enumerate(vec))
        x = sum(gamma(e)[1] << i for i, e in enumerate(vec))
        assert weight(PauliVec(n, z, x)) == wt4


def test_f4_to_symplectic_single_entry():
    m = gf4.f4_to_symplectic(F4Matrix.from_rows([[F4_1]]))
    assert m.rows == 2 and m.cols == 2
    assert m.row_list(0) == [1, 0]   # gamma(w * 1) = gamma(w) = (1|0)
    assert m.row_list(1) == [0, 1]   # gamma(W * 1) = (0|1)


def test_f4_to_symplectic_hamming_self_orthogonal():
    h = hamming_matrix()
    h4 = F4Matrix.from_rows([[F4_1 if b else F4_0 for b in h.row_list(i)]
                             for i in range(h.rows)])
    hsp = gf4.f4_to_symplectic(h4)
    assert (hsp.rows, hsp.cols) == (6, 14)
    vecs = [PauliVec.from_packed(hsp.row(i), 7) for i in range(6)]
    for a, b in itertools.combinations_with_replacement(vecs, 2):
        assert symplectic_product(a, b) == 0
    # a binary code seen over GF(4) reproduces the CSS block layout
    css = css_sp_matrix(h)
    assert sorted(hsp.bits) == sorted(css.bits)


def test_f4_to_symplectic_q15_shape_and_ebits():
    hsp = gf4.f4_to_symplectic(q15_matrix())
    assert (hsp.rows, hsp.cols) == (10, 30)
    vecs = [PauliVec.from_packed(hsp.row(i), 15) for i in range(10)]
    assert sgs.symp_dim(vecs) == 4


def test_parse_format_round_trip():
    m = q15_matrix()
    assert gf4.parse_f4(gf4.format_f4(m)) == m


def test_parse_rejects_bad_symbols():
    with pytest.raises(ValueError):
        gf4.parse_f4("1 2\n0 q")
    with pytest.raises(ValueError):
        gf4.parse_f4("")
    with pytest.raises(ValueError):
        gf4.parse_f4("2 2\n0 1")
