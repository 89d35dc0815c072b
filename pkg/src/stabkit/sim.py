"""Monte Carlo block-error-rate estimation on the depolarizing channel.

Errors are sampled i.i.d. per qubit (X, Y, Z each with probability
p/3), the syndrome is decoded CSS-split by two independent sum-product
runs with marginal flip prior 2p/3 (an X flip arises from Pauli X or Y,
a Z flip from Z or Y), and the residual is scored either strictly
(must vanish) or degenerately (must lie in the span of the isotropic
and gauge generators).

Every trial draws from its own generator seeded by the tuple
(seed, p_index, trial), so results are bit-identical for any worker
count or execution order.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .codes import QuantumCode
from .f2 import _echelon
from .pauli import PauliVec, symplectic_product
from .spa import SpaGraph, decode

__all__ = [
    "SimConfig",
    "SimPoint",
    "SimResult",
    "sample_depolarizing",
    "syndrome",
    "run_point",
    "sweep",
    "wilson_interval",
]


@dataclass(frozen=True)
class SimConfig:
    code: QuantumCode
    p_grid: tuple[float, ...]
    trials: int
    seed: int = 0
    max_iter: int = 100
    success_mode: str = "degenerate"
    workers: int = 1

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        for p in self.p_grid:
            if not 0.0 <= p < 1.0:
                raise ValueError(f"depolarizing probability {p} outside [0, 1)")
        if self.success_mode not in ("strict", "degenerate"):
            raise ValueError(f"unknown success mode {self.success_mode!r}")
        if self.code.css is None:
            raise ValueError("simulation needs a code with classical CSS structure")


@dataclass(frozen=True)
class SimPoint:
    p: float
    trials: int
    block_errors: int
    wer: float
    ci_lo: float
    ci_hi: float


@dataclass(frozen=True)
class SimResult:
    points: tuple[SimPoint, ...] = field(default_factory=tuple)

    def to_csv(self) -> str:
        lines = ["p,trials,block_errors,wer,ci_lo,ci_hi"]
        for pt in self.points:
            lines.append(
                f"{pt.p:.10g},{pt.trials},{pt.block_errors},"
                f"{pt.wer:.10g},{pt.ci_lo:.10g},{pt.ci_hi:.10g}"
            )
        return "\n".join(lines) + "\n"


def wilson_interval(hits: int, trials: int, z: float = 1.959963984540054) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion (95% default)."""
    if trials < 1:
        raise ValueError("trials must be positive")
    phat = hits / trials
    z2 = z * z
    denom = 1.0 + z2 / trials
    center = (phat + z2 / (2 * trials)) / denom
    half = z * math.sqrt(phat * (1 - phat) / trials + z2 / (4 * trials * trials)) / denom
    return max(0.0, center - half), min(1.0, center + half)


def sample_depolarizing(n: int, p: float, rng: np.random.Generator) -> PauliVec:
    """i.i.d. depolarizing noise: identity w.p. 1-p, X/Y/Z each w.p. p/3."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability {p} outside [0, 1]")
    u = rng.random(n)
    x_flip = u < 2.0 * p / 3.0                       # Pauli X or Y
    z_flip = (u >= p / 3.0) & (u < p)                # Pauli Y or Z
    z = 0
    for i in np.flatnonzero(z_flip):
        z |= 1 << int(i)
    x = 0
    for i in np.flatnonzero(x_flip):
        x |= 1 << int(i)
    return PauliVec(n, z, x)


def syndrome(code: QuantumCode, error: PauliVec) -> np.ndarray:
    """Symplectic product of the error against every measured generator.

    Receiver-side halves of the entanglement pairs never see the
    channel, so the syndrome is exactly these sender-side products; for
    a CSS code this is (H e_x, H e_z) up to row bookkeeping.
    """
    if error.n != code.n:
        raise ValueError("error length differs from code length")
    gens = code.measured_gens()
    return np.array([symplectic_product(g, error) for g in gens], dtype=np.uint8)


class _TrialRunner:
    """Per-code state shared by all trials of a sweep."""

    def __init__(self, config: SimConfig):
        self.config = config
        code = config.code
        self.n = code.n
        self.graph_z = SpaGraph(code.css.hz)   # Z-type checks detect X errors
        self.graph_x = SpaGraph(code.css.hx)   # X-type checks detect Z errors
        self.hz_arr = self.graph_z.arr
        self.hx_arr = self.graph_x.arr
        passive = code.passive_gens()
        if passive:
            rows, _ = _echelon([g.packed() for g in passive], 2 * code.n)
            self.passive_echelon = rows
        else:
            self.passive_echelon = []

    def _residual_harmless(self, rz: int, rx: int) -> bool:
        v = rz | (rx << self.n)
        for row in self.passive_echelon:
            low = (row & -row).bit_length() - 1
            if (v >> low) & 1:
                v ^= row
        return v == 0

    def run_trial(self, p: float, p_idx: int, trial: int) -> bool:
        """True when the trial ends in a block error."""
        cfg = self.config
        rng = np.random.default_rng((cfg.seed, p_idx, trial))
        err = sample_depolarizing(self.n, p, rng)
        ex = np.array([(err.x >> i) & 1 for i in range(self.n)], dtype=np.uint8)
        ez = np.array([(err.z >> i) & 1 for i in range(self.n)], dtype=np.uint8)
        if p == 0.0:
            return False
        f = 2.0 * p / 3.0
        sz = (self.hz_arr @ ex) % 2
        sx = (self.hx_arr @ ez) % 2
        dec_x = decode(self.graph_z, sz, f, cfg.max_iter)
        dec_z = decode(self.graph_x, sx, f, cfg.max_iter)
        rx = ex ^ dec_x.estimate
        rz = ez ^ dec_z.estimate
        rx_i = 0
        for i in np.flatnonzero(rx):
            rx_i |= 1 << int(i)
        rz_i = 0
        for i in np.flatnonzero(rz):
            rz_i |= 1 << int(i)
        if cfg.success_mode == "strict":
            return not (rx_i == 0 and rz_i == 0)
        return not self._residual_harmless(rz_i, rx_i)


def run_point(config: SimConfig, p: float, p_idx: int = 0) -> SimPoint:
    """Monte Carlo at a single depolarizing probability."""
    runner = _TrialRunner(config)
    errors = _count_errors(runner, p, p_idx)
    lo, hi = wilson_interval(errors, config.trials)
    return SimPoint(p, config.trials, errors, errors / config.trials, lo, hi)


def _count_errors(runner: _TrialRunner, p: float, p_idx: int) -> int:
    cfg = runner.config
    trials = cfg.trials
    if cfg.workers <= 1:
        return sum(runner.run_trial(p, p_idx, t) for t in range(trials))
    chunk = max(1, math.ceil(trials / (cfg.workers * 4)))
    spans = [(a, min(a + chunk, trials)) for a in range(0, trials, chunk)]

    def work(span):
        a, b = span
        return sum(runner.run_trial(p, p_idx, t) for t in range(a, b))

    with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
        return sum(pool.map(work, spans))


def sweep(config: SimConfig) -> SimResult:
    """run_point over the whole probability grid, in grid order."""
    runner = _TrialRunner(config)
    points = []
    for p_idx, p in enumerate(config.p_grid):
        errors = _count_errors(runner, p, p_idx)
        lo, hi = wilson_interval(errors, config.trials)
        points.append(SimPoint(p, config.trials, errors, errors / config.trials, lo, hi))
    return SimResult(tuple(points))
