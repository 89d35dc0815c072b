"""Sum-product (belief propagation) syndrome decoding.

Messages live in the probability domain.  One iteration is a horizontal
step (every check updates its edges), a vertical step (every bit
renormalizes its edges), a pseudoposterior pass and a tentative
decode; the loop stops as soon as the tentative estimate reproduces the
syndrome, or fails after ``max_iter`` rounds.

The horizontal step uses the parity identity: with dq = q0 - q1 per
incoming edge, the probability that the other bits of a check have even
parity is (1 + prod dq) / 2, which equals the configuration sum over
satisfying assignments.

``exact_marginals`` is the brute-force oracle: true per-bit posteriors
by enumerating every error pattern consistent with the syndrome.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .f2 import BitMatrix

__all__ = ["SpaGraph", "SpaWorkspace", "DecodeResult", "decode", "exact_marginals"]

_FLOOR = 1e-300


def _padded_slots(groups: np.ndarray, count: int, n_edges: int) -> np.ndarray:
    """[count, dmax] array of edge ids per group, padded with n_edges
    (a sentinel slot holding the multiplicative identity)."""
    deg = np.bincount(groups, minlength=count)
    dmax = int(deg.max()) if count else 0
    order = np.argsort(groups, kind="stable")
    starts = np.zeros(count, dtype=np.int64)
    starts[1:] = np.cumsum(deg)[:-1]
    pos = np.arange(n_edges) - starts[groups[order]]
    slots = np.full((count, max(dmax, 1)), n_edges, dtype=np.int64)
    slots[groups[order], pos] = order
    return slots


def _loo_prod(padded: np.ndarray) -> np.ndarray:
    """Leave-one-out product along axis 1 via exclusive prefix/suffix
    products (no division, so exact zeros are harmless)."""
    pref = np.ones_like(padded)
    pref[:, 1:] = np.cumprod(padded, axis=1)[:, :-1]
    suff = np.ones_like(padded)
    suff[:, :-1] = np.cumprod(padded[:, ::-1], axis=1)[:, ::-1][:, 1:]
    return pref * suff


class SpaGraph:
    """Reusable Tanner-graph indexing of a parity check matrix."""

    def __init__(self, h: BitMatrix):
        self.h = h
        arr = h.to_array()
        self.arr = arr
        self.m, self.n = arr.shape
        rows, cols = np.nonzero(arr)
        self.edge_check = rows.astype(np.int64)
        self.edge_bit = cols.astype(np.int64)
        self.n_edges = len(rows)
        self.check_slots = _padded_slots(self.edge_check, self.m, self.n_edges)
        self.bit_slots = _padded_slots(self.edge_bit, self.n, self.n_edges)


class SpaWorkspace:
    """Message state for a single decoding run (single-use)."""

    def __init__(self, graph: SpaGraph, syndrome, prior_flip: float):
        if not 0.0 < prior_flip < 1.0:
            raise ValueError(f"prior flip probability must be in (0, 1), got {prior_flip}")
        syndrome = np.asarray(syndrome, dtype=np.uint8).ravel() & 1
        if syndrome.size != graph.m:
            raise ValueError(
                f"syndrome length {syndrome.size} != check count {graph.m}"
            )
        self.g = graph
        self.syndrome = syndrome
        self.sign = 1.0 - 2.0 * syndrome.astype(np.float64)  # (-1)^z per check
        self.p1 = prior_flip
        self.p0 = 1.0 - prior_flip
        e = graph.n_edges
        self.q0 = np.full(e, self.p0)
        self.q1 = np.full(e, self.p1)
        self.r0 = np.zeros(e)
        self.r1 = np.zeros(e)

    def horizontal_step(self):
        """Check-to-bit messages from the parity convolution."""
        g = self.g
        dq = np.append(self.q0 - self.q1, 1.0)
        loo = _loo_prod(dq[g.check_slots])
        dr = self.sign[:, None] * loo
        flat = np.empty(g.n_edges)
        mask = g.check_slots < g.n_edges
        flat[g.check_slots[mask]] = dr[mask]
        self.r0 = np.maximum((1.0 + flat) / 2.0, _FLOOR)
        self.r1 = np.maximum((1.0 - flat) / 2.0, _FLOOR)

    def vertical_step(self):
        """Bit-to-check messages, renormalized so q0 + q1 = 1 per edge."""
        g = self.g
        ext0 = np.append(self.r0, 1.0)
        ext1 = np.append(self.r1, 1.0)
        loo0 = self.p0 * _loo_prod(ext0[g.bit_slots])
        loo1 = self.p1 * _loo_prod(ext1[g.bit_slots])
        norm = np.maximum(loo0 + loo1, _FLOOR)
        q0 = loo0 / norm
        q1 = loo1 / norm
        flat0 = np.empty(g.n_edges)
        flat1 = np.empty(g.n_edges)
        mask = g.bit_slots < g.n_edges
        flat0[g.bit_slots[mask]] = q0[mask]
        flat1[g.bit_slots[mask]] = q1[mask]
        self.q0 = np.maximum(flat0, _FLOOR)
        self.q1 = np.maximum(flat1, _FLOOR)

    def pseudoposteriors(self) -> np.ndarray:
        """Per-bit flip probability from all incident checks."""
        g = self.g
        ext0 = np.append(self.r0, 1.0)
        ext1 = np.append(self.r1, 1.0)
        tot0 = self.p0 * np.prod(ext0[g.bit_slots], axis=1)
        tot1 = self.p1 * np.prod(ext1[g.bit_slots], axis=1)
        return tot1 / np.maximum(tot0 + tot1, _FLOOR)

    def tentative(self) -> np.ndarray:
        """Hard decision: flip where the posterior strictly exceeds 1/2
        (ties favor the lower-weight error)."""
        return (self.pseudoposteriors() > 0.5).astype(np.uint8)

    def satisfies(self, estimate: np.ndarray) -> bool:
        return bool(np.array_equal((self.g.arr @ estimate) % 2, self.syndrome))


@dataclass(frozen=True)
class DecodeResult:
    estimate: np.ndarray
    converged: bool
    iterations: int

    def __post_init__(self):
        object.__setattr__(self, "estimate", np.asarray(self.estimate, dtype=np.uint8))


def decode(h: BitMatrix | SpaGraph, syndrome, prior_flip: float,
           max_iter: int = 100) -> DecodeResult:
    """Flooding-schedule sum-product decoding of a syndrome.

    Returns the first tentative estimate reproducing the syndrome, or
    the last estimate with ``converged=False`` after ``max_iter``
    rounds.
    """
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")
    graph = h if isinstance(h, SpaGraph) else SpaGraph(h)
    ws = SpaWorkspace(graph, syndrome, prior_flip)
    estimate = np.zeros(graph.n, dtype=np.uint8)
    for it in range(1, max_iter + 1):
        ws.horizontal_step()
        ws.vertical_step()
        estimate = ws.tentative()
        if ws.satisfies(estimate):
            return DecodeResult(estimate, True, it)
    return DecodeResult(estimate, False, max_iter)


def exact_marginals(h: BitMatrix, syndrome, prior_flip: float) -> np.ndarray:
    """True posteriors P(n_i = 1 | syndrome) by full enumeration.

    Sums the i.i.d. flip prior over all 2^n error patterns consistent
    with the syndrome; n is capped at 24.
    """
    n = h.cols
    if n > 24:
        raise ValueError(f"exact enumeration capped at n = 24, got {n}")
    if not 0.0 < prior_flip < 1.0:
        raise ValueError("prior flip probability must be in (0, 1)")
    arr = h.to_array()
    syndrome = np.asarray(syndrome, dtype=np.uint8).ravel() & 1
    if syndrome.size != h.rows:
        raise ValueError("syndrome length mismatch")
    num = np.zeros(n)
    den = 0.0
    chunk = 1 << 20
    for start in range(0, 1 << n, chunk):
        stop = min(start + chunk, 1 << n)
        idx = np.arange(start, stop, dtype=np.int64)
        bits = ((idx[:, None] >> np.arange(n)) & 1).astype(np.uint8)
        ok = np.all((bits @ arr.T) % 2 == syndrome, axis=1)
        if not ok.any():
            continue
        sel = bits[ok]
        w = sel.sum(axis=1)
        weights = prior_flip ** w * (1.0 - prior_flip) ** (n - w)
        den += float(weights.sum())
        num += weights @ sel
    if den == 0.0:
        raise ValueError("syndrome is not reachable from any error pattern")
    return num / den
