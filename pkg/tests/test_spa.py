import numpy as np
import pytest

from stabkit import qc_ldpc, spa
from stabkit.codes import hamming_matrix
from stabkit.f2 import BitMatrix
from stabkit.spa import SpaGraph, SpaWorkspace, decode, exact_marginals

from util import random_tree_check_matrix


def test_zero_syndrome_decodes_to_zero_first_iteration():
    h = hamming_matrix()
    for f in (0.01, 0.2, 0.45):
        res = decode(h, np.zeros(3, dtype=np.uint8), f)
        assert res.converged
        assert res.iterations == 1
        assert not res.estimate.any()


def test_all_hamming_syndromes_converge_and_satisfy():
    h = hamming_matrix()
    arr = h.to_array()
    for f in (0.01, 0.05, 0.1):
        for pattern in range(128):
            e = np.array([(pattern >> i) & 1 for i in range(7)], dtype=np.uint8)
            s = (arr @ e) % 2
            res = decode(h, s, f)
            assert res.converged
            assert ((arr @ res.estimate) % 2 == s).all()


def test_single_bit_recovery_matches_map_oracle():
    """Exact-marginal MAP recovers every single-bit error; the SPA with
    its early-stop rule agrees except on the all-checks column, where
    the first tentative estimate already satisfies the syndrome."""
    h = hamming_matrix()
    arr = h.to_array()
    spa_exact = 0
    for q in range(7):
        e = np.zeros(7, dtype=np.uint8)
        e[q] = 1
        s = (arr @ e) % 2
        marg = exact_marginals(h, s, 0.01)
        assert ((marg > 0.5).astype(np.uint8) == e).all()
        res = decode(h, s, 0.01)
        assert res.converged
        assert ((arr @ res.estimate) % 2 == s).all()
        spa_exact += (res.estimate == e).all()
    assert spa_exact == 6
    # the exception is the column that sits in every check
    assert (arr[:, 6] == 1).all()


def test_exact_marginals_zero_syndrome_small_prior():
    h = hamming_matrix()
    marg = exact_marginals(h, np.zeros(3, dtype=np.uint8), 1e-6)
    assert (marg < 1e-5).all()


def test_exact_marginals_symmetry():
    h = BitMatrix.from_rows([[1, 1]])
    marg = exact_marginals(h, [1], 0.1)
    assert marg == pytest.approx([0.5, 0.5])


def test_exact_marginals_unreachable_syndrome():
    h = BitMatrix.from_rows([[1, 1], [1, 1]])
    with pytest.raises(ValueError):
        exact_marginals(h, [1, 0], 0.1)


def test_exact_marginals_size_cap():
    h = BitMatrix.zeros(1, 25)
    with pytest.raises(ValueError):
        exact_marginals(h, [0], 0.1)


def test_edge_normalization_invariant():
    h = qc_ldpc.expand(qc_ldpc.make_ex2())
    rng = np.random.default_rng(0)
    s = rng.integers(0, 2, size=h.rows).astype(np.uint8)
    g = SpaGraph(h)
    ws = SpaWorkspace(g, s, 0.05)
    for _ in range(5):
        ws.horizontal_step()
        ws.vertical_step()
        assert np.abs(ws.q0 + ws.q1 - 1.0).max() < 1e-12
        post = ws.pseudoposteriors()
        assert ((post >= 0) & (post <= 1)).all()


def test_converged_satisfies_is_asserted():
    h = hamming_matrix()
    arr = h.to_array()
    rng = np.random.default_rng(1)
    for _ in range(50):
        e = (rng.random(7) < 0.15).astype(np.uint8)
        s = (arr @ e) % 2
        res = decode(h, s, 0.1)
        if res.converged:
            assert ((arr @ res.estimate) % 2 == s).all()


def test_tree_marginals_match_exact():
    worst = 0.0
    for t in range(20):
        rng = np.random.default_rng(100 + t)
        n_bits = int(rng.integers(6, 16))
        n_checks = int(rng.integers(2, 6))
        h = random_tree_check_matrix(rng, n_bits, n_checks)
        assert qc_ldpc.girth_exact(h) == float("inf")
        e = (rng.random(n_bits) < 0.2).astype(np.uint8)
        s = (h.to_array() @ e) % 2
        exact = exact_marginals(h, s, 0.1)
        ws = SpaWorkspace(SpaGraph(h), s, 0.1)
        for _ in range(n_bits + n_checks):
            ws.horizontal_step()
            ws.vertical_step()
        worst = max(worst, float(np.abs(ws.pseudoposteriors() - exact).max()))
    assert worst < 1e-9


def test_single_error_success_rate_on_girth6_code():
    h = qc_ldpc.expand(qc_ldpc.make_ex1())
    arr = h.to_array()
    graph = SpaGraph(h)
    rng = np.random.default_rng(5)
    successes = 0
    trials = 1000
    for _ in range(trials):
        e = np.zeros(128, dtype=np.uint8)
        e[rng.integers(128)] = 1
        s = (arr @ e) % 2
        res = decode(graph, s, 0.01)
        successes += res.converged and (res.estimate == e).all()
    assert successes / trials >= 0.99


def test_decode_validation():
    h = hamming_matrix()
    with pytest.raises(ValueError):
        decode(h, [0, 0, 0], 0.0)
    with pytest.raises(ValueError):
        decode(h, [0, 0, 0], 1.0)
    with pytest.raises(ValueError):
        decode(h, [0, 0], 0.1)
    with pytest.raises(ValueError):
        decode(h, [0, 0, 0], 0.1, max_iter=0)


def test_failure_reported_when_unsatisfiable():
    # an all-ones 2x2 H cannot produce syndrome (1, 0)
    h = BitMatrix.from_rows([[1, 1], [1, 1]])
    res = decode(h, [1, 0], 0.1, max_iter=5)
    assert not res.converged
    assert res.iterations == 5
