from collections import Counter

import numpy as np
import pytest

from stabkit import f2, qc_ldpc
from stabkit.f2 import BitMatrix
from stabkit.qc_ldpc import (
    CircPoly,
    ExponentEntry,
    ExponentMatrix,
    block_shift,
    circ_rank,
    dual_containing_qc,
    expand,
    expansion_rank_poly,
    girth_exact,
    girth_ge_6,
    hermitian_corank_poly,
    hermitian_poly_product,
    hermitian_rank_poly,
    is_multiplicity_even,
    is_multiplicity_free,
    make_ex1,
    make_ex2,
    make_ex_hi,
    make_ex_mackay,
    parse_exponent,
    format_exponent,
    poly_deg,
    poly_gcd,
    qc_f2_rank,
    rank_bound,
    row_difference,
)

from util import random_bitmatrix, random_exponent_matrix


def _type_i_intro():
    # r=16 (3,8)-regular all-monomial example with a multiplicity-even
    # row difference
    return ExponentMatrix.from_lists(16, [
        [1, 1, 1, 1, 1, 1, 1, 1],
        [2, 5, 3, 5, 2, 5, 3, 5],
        [2, 3, 4, 5, 6, 7, 8, 9],
    ])


def _type_ii_intro():
    # r=16 (3,4) example with binomial and zero entries
    return ExponentMatrix.from_lists(16, [
        [(1, 4), None, (7, 10), None],
        [5, 6, 11, 12],
        [None, (2, 9), None, (7, 13)],
    ])


# -- circulant polynomials ---------------------------------------------------

def test_circ_rank_zero_and_identity():
    assert circ_rank(CircPoly(8, 0)) == 0
    assert circ_rank(CircPoly(8, 1)) == 8


def test_circ_rank_even_support_matches_elimination():
    p = CircPoly.from_exponents(16, [2 * k for k in range(8)])
    assert circ_rank(p) == f2.rank(p.to_matrix()) == 2


def test_rank_theorem_spaced_support():
    # support at multiples of p gives rank p
    for p_, q_ in ((2, 3), (2, 8), (4, 4), (3, 5)):
        r = p_ * q_
        poly = CircPoly.from_exponents(r, [p_ * i for i in range(q_)])
        assert circ_rank(poly) == p_
        assert f2.rank(poly.to_matrix()) == p_


def test_rank_theorem_initial_run():
    # support on 0..p-1 gives rank r - p + 1
    for p_, q_ in ((2, 3), (4, 4), (2, 8)):
        r = p_ * q_
        poly = CircPoly.from_exponents(r, list(range(p_)))
        assert circ_rank(poly) == r - p_ + 1
        assert f2.rank(poly.to_matrix()) == r - p_ + 1


def test_divisor_rank_upper_bound():
    """A weight-w divisor of X^r - 1 has rank at most r - w + 1 (its
    degree is at least w - 1)."""
    cases = [
        CircPoly.from_exponents(16, [0, 8]),                # X^8 + 1
        CircPoly.from_exponents(16, [2 * k for k in range(8)]),
        CircPoly.from_exponents(12, [0, 1, 2]),
        CircPoly.from_exponents(6, [0, 3]),
    ]
    for p in cases:
        modulus = (1 << p.r) | 1
        assert qc_ldpc.poly_mod(modulus, p.coeffs) == 0 or \
            poly_gcd(p.coeffs, modulus) == p.coeffs  # really a divisor
        w = bin(p.coeffs).count("1")
        assert circ_rank(p) <= p.r - w + 1


def test_poly_ring_isomorphism_random():
    """Adding/multiplying circulant polynomials agrees with bit-matrix
    arithmetic under expansion."""
    rng = np.random.default_rng(2)
    for _ in range(100):
        r = int(rng.integers(2, 33))
        a = CircPoly(r, int(rng.integers(1 << r)))
        b = CircPoly(r, int(rng.integers(1 << r)))
        ma, mb = a.to_matrix(), b.to_matrix()
        sum_bits = tuple(x ^ y for x, y in zip(ma.bits, mb.bits))
        assert (a + b).to_matrix().bits == sum_bits
        assert (a * b).to_matrix().bits == f2.mat_mul(ma, mb).bits


def test_transpose_matches_matrix_transpose():
    rng = np.random.default_rng(3)
    for _ in range(20):
        r = int(rng.integers(2, 20))
        p = CircPoly(r, int(rng.integers(1 << r)))
        assert p.transpose().to_matrix().bits == p.to_matrix().transpose().bits


# -- expansion -----------------------------------------------------------------

def test_expand_monomial_zero_is_identity():
    e = ExponentMatrix.from_lists(3, [[0]])
    assert expand(e).bits == BitMatrix.identity(3).bits


def test_expand_type_i_regular():
    h = expand(_type_i_intro())
    assert (h.rows, h.cols) == (48, 128)
    arr = h.to_array()
    assert (arr.sum(axis=0) == 3).all()
    assert (arr.sum(axis=1) == 8).all()


def test_expand_type_ii_layer_one_has_4cycles():
    e = _type_ii_intro()
    h = expand(e)
    layer1 = h.submatrix(range(16))
    assert (layer1.to_array().sum(axis=1) == 4).all()
    assert girth_exact(layer1) == 4


# -- row differences and multiplicity -------------------------------------------

def test_row_difference_type_i():
    e = _type_i_intro()
    d21 = row_difference(e, 1, 0)
    assert [c[0] for c in d21.columns] == [1, 4, 2, 4, 1, 4, 2, 4]
    d31 = row_difference(e, 2, 0)
    assert [c[0] for c in d31.columns] == [1, 2, 3, 4, 5, 6, 7, 8]
    assert is_multiplicity_even(d21)
    assert not is_multiplicity_even(d31)
    assert is_multiplicity_free(d31)
    d32 = row_difference(e, 2, 1)
    assert [c[0] for c in d32.columns] == [0, 14, 1, 0, 4, 2, 5, 4]
    assert not is_multiplicity_even(d32)


def test_row_difference_type_ii():
    e = _type_ii_intro()
    d32 = row_difference(e, 2, 1)
    assert [Counter(c) for c in d32.columns] == [
        Counter(), Counter((12, 3)), Counter(), Counter((11, 1))]
    assert is_multiplicity_free(d32)
    d22 = row_difference(e, 1, 1)
    assert [c for c in d22.columns] == [(0,), (0,), (0,), (0,)]
    d11 = row_difference(e, 0, 0)
    assert [Counter(c) for c in d11.columns] == [
        Counter((0, 3, 13, 0)), Counter(), Counter((0, 3, 13, 0)), Counter()]
    assert is_multiplicity_even(d11)
    d31 = row_difference(e, 2, 0)
    assert all(c == () for c in d31.columns)
    assert is_multiplicity_even(d31) and is_multiplicity_free(d31)


def test_empty_difference_vector():
    e = ExponentMatrix.from_lists(4, [[None, None]])
    d = row_difference(e, 0, 0)
    assert is_multiplicity_even(d) and is_multiplicity_free(d)


# -- girth ------------------------------------------------------------------------

def test_girth_predicate_examples():
    assert girth_ge_6(make_ex1())
    assert not girth_ge_6(_type_ii_intro())  # layer 1 is multiplicity even
    assert girth_ge_6(make_ex2())


def test_girth_exact_small_cases():
    assert girth_exact(BitMatrix.from_rows([[1, 1], [1, 1]])) == 4
    assert girth_exact(BitMatrix.from_rows([[1, 1]])) == float("inf")


def test_girth_exact_ex1():
    assert girth_exact(expand(make_ex1())) == 6


def test_girth_exact_ex2_is_six():
    """The printed Type-II example expands with an explicit 6-cycle
    (rows 0, 1 of layer one and row 12 of layer two), so its true girth
    is 6 even though girth >= 6 holds."""
    h = expand(make_ex2())
    arr = h.to_array()
    for i, j in [(0, 2), (1, 2), (1, 34), (28, 34), (28, 1), (0, 1)]:
        assert arr[i, j] == 1
    assert girth_exact(h) == 6


def test_girth_predicate_agrees_with_exact_on_random_corpus():
    rng = np.random.default_rng(9)
    checked = 0
    while checked < 100:
        e = random_exponent_matrix(rng)
        h = expand(e)
        if h.is_zero():
            continue
        assert girth_ge_6(e) == (girth_exact(h) >= 6), format_exponent(e)
        checked += 1


def test_no_dual_containing_with_girth_6_on_corpus():
    rng = np.random.default_rng(10)
    for _ in range(100):
        e = random_exponent_matrix(rng)
        assert not (dual_containing_qc(e) and girth_ge_6(e))


def test_dual_containing_matches_bit_level():
    rng = np.random.default_rng(11)
    for _ in range(60):
        e = random_exponent_matrix(rng)
        h = expand(e)
        hhT = f2.mat_mul(h, h.transpose())
        assert dual_containing_qc(e) == hhT.is_zero()


# -- Hermitian products and ranks ----------------------------------------------

def test_hermitian_product_ex1():
    e = make_ex1()
    hat = hermitian_poly_product(e)
    expect_a = CircPoly.from_exponents(16, range(8))
    expect_b = CircPoly.from_exponents(16, [2 * k for k in range(8)])
    for i in range(3):
        assert hat[i][i].is_zero()
    assert hat[1][0] == expect_a
    assert hat[2][1] == expect_a
    assert hat[2][0] == expect_b


def test_hermitian_product_ex2():
    hat = hermitian_poly_product(make_ex2())
    assert hat[1][1].is_zero()
    assert hat[0][0] == CircPoly.from_exponents(16, [1 + 2 * k for k in range(8)])


def test_hermitian_grid_matches_bit_product():
    rng = np.random.default_rng(12)
    mats = [make_ex1(), make_ex2()] + [random_exponent_matrix(rng, r_max=12)
                                       for _ in range(20)]
    for e in mats:
        h = expand(e)
        hhT = f2.mat_mul(h, h.transpose())
        hat = hermitian_poly_product(e)
        grid_rows = []
        for i in range(e.J):
            blocks = [p.to_matrix() for p in hat[i]]
            row = blocks[0]
            for b in blocks[1:]:
                row = row.hstack(b)
            grid_rows.append(row)
        stacked = grid_rows[0]
        for rowm in grid_rows[1:]:
            stacked = stacked.vstack(rowm)
        assert stacked.bits == hhT.bits


def test_rank_bound_examples():
    assert rank_bound(make_ex2()) == 27
    assert rank_bound(make_ex1()) == 27
    zero = ExponentMatrix.from_lists(4, [[None, None], [None, None]])
    assert rank_bound(zero) == 0


def test_rank_bound_dominates_actual():
    for e in (make_ex1(), make_ex2()):
        h = expand(e)
        actual = f2.rank(f2.mat_mul(h, h.transpose()))
        assert actual <= rank_bound(e)


def test_ebit_pipelines_agree_on_examples():
    for e in (make_ex1(), make_ex2()):
        h = expand(e)
        bits = f2.rank(f2.mat_mul(h, h.transpose()))
        assert bits == hermitian_rank_poly(e) == 18
        assert hermitian_corank_poly(e) == 3 * 16 - 18 == 30
        assert expansion_rank_poly(e) == f2.rank(h)


def test_qc_f2_rank_random_grids():
    rng = np.random.default_rng(13)
    for _ in range(40):
        e = random_exponent_matrix(rng, r_max=10)
        assert expansion_rank_poly(e) == f2.rank(expand(e))


def test_qc_shift_preserves_nullspace():
    rng = np.random.default_rng(14)
    found = 0
    while found < 10:
        e = random_exponent_matrix(rng, r_max=8)
        h = expand(e)
        ns = f2.nullspace(h)
        if ns is None:
            continue
        found += 1
        for i in range(min(ns.rows, 6)):
            shifted = block_shift(ns.row(i), e.r, e.L)
            assert f2.mat_mul(
                h, BitMatrix(1, h.cols, (shifted,)).transpose()
            ).is_zero()


# -- named constructions ----------------------------------------------------------

def test_make_ex1_literal():
    e = make_ex1()
    assert (e.r, e.J, e.L) == (16, 3, 8)
    assert e.is_type_i
    assert [x.exponents[0] for x in e.entries[0]] == [1] * 8
    assert [x.exponents[0] for x in e.entries[1]] == list(range(1, 9))
    assert [x.exponents[0] for x in e.entries[2]] == list(range(1, 17, 2))


def test_make_ex2_literal():
    e = make_ex2()
    assert not e.is_type_i
    assert e.entries[0][0].exponents == (1, 2)
    assert e.entries[1][0].exponents == (5,)
    assert e.entries[2][1].exponents == (1, 2)
    assert e.entries[0][1].is_zero


def test_make_ex_hi_rows():
    hc, hd = make_ex_hi(3, 8, 15, 2, 3)
    def row(e, i):
        return [x.exponents[0] for x in e.entries[i]]
    assert row(hc, 0) == [1, 2, 4, 8, 6, 12, 9, 3]
    assert row(hc, 1) == [8, 1, 2, 4, 12, 9, 3, 6]
    assert row(hc, 2) == [4, 8, 1, 2, 9, 3, 6, 12]
    assert row(hd, 0) == [9, 3, 6, 12, 14, 13, 11, 7]
    assert row(hd, 1) == [12, 9, 3, 6, 13, 11, 7, 14]
    assert row(hd, 2) == [6, 12, 9, 3, 11, 7, 14, 13]


def test_make_ex_hi_css_compatible():
    hc, hd = make_ex_hi()
    a, b = expand(hc), expand(hd)
    assert a.cols == b.cols == 120
    assert f2.mat_mul(a, b.transpose()).is_zero()


def test_make_ex_hi_validation():
    with pytest.raises(ValueError):
        make_ex_hi(3, 8, 15, 3, 3)   # gcd(3, 15) != 1
    with pytest.raises(ValueError):
        make_ex_hi(3, 6, 15, 2, 3)   # ord(2) = 4 != L/2 = 3
    with pytest.raises(ValueError):
        make_ex_hi(5, 8, 15, 2, 3)   # J > L/2


def test_make_ex_mackay():
    h = make_ex_mackay(128, 48, 8, seed=0)
    assert (h.rows, h.cols) == (48, 128)
    arr = h.to_array()
    assert (arr.sum(axis=1) == 8).all()
    assert f2.mat_mul(h, h.transpose()).is_zero()
    assert girth_exact(h) == 4
    # deterministic for a fixed seed
    assert make_ex_mackay(128, 48, 8, seed=0).bits == h.bits
    assert make_ex_mackay(128, 48, 8, seed=1).bits != h.bits


def test_make_ex_mackay_reject_4cycles_small():
    h = make_ex_mackay(12, 3, 4, seed=0, reject_4cycles=True)
    assert girth_exact(h) >= 6


def test_exponent_text_round_trip():
    for e in (make_ex1(), make_ex2(), _type_ii_intro()):
        assert parse_exponent(format_exponent(e)) == e


def test_exponent_parse_errors():
    with pytest.raises(ValueError):
        parse_exponent("")
    with pytest.raises(ValueError):
        parse_exponent("4 1 2\n0")
    with pytest.raises(ValueError):
        parse_exponent("4 1 2\n0 5")  # exponent out of range


def test_entry_validation():
    with pytest.raises(ValueError):
        ExponentEntry.binomial(3, 3)
    with pytest.raises(ValueError):
        ExponentEntry((1, 2, 3))
