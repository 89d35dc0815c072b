"""Quantum code construction and analysis.

A :class:`QuantumCode` is a partitioned generator set: commuting
isotropic generators ``gens_i``, anticommuting entanglement pairs
``gens_e`` (one pre-shared ebit each) and gauge pairs ``gens_g``
(passively corrected degrees of freedom).  With s = len(gens_i),
c = len(gens_e), r = len(gens_g) the logical count is
k = n - s - c - r.

Codes are built from classical binary or quaternary parity checks by
expanding to a binary symplectic matrix and running the symplectic
Gram-Schmidt decomposition; the pair count of the decomposition is the
ebit cost.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field, replace

from . import f2, gf4, sgs
from .f2 import BitMatrix
from .gf4 import F4Matrix
from .pauli import (
    PauliVec,
    format_pauli,
    parse_pauli,
    paulis_to_matrix,
    symplectic_product,
)

__all__ = [
    "QuantumCode",
    "CodeReport",
    "VerificationBudgetError",
    "css_sp_matrix",
    "build_from_sp",
    "build_eaqecc_binary",
    "build_eaqecc_gf4",
    "from_stabilizer_table",
    "to_stabilizer_table",
    "is_dual_containing",
    "verify_distance",
    "find_distance_violator",
    "singleton_check",
    "hamming_check",
    "extend_code",
    "puncture_code",
    "gauge_move",
    "ungauge",
    "builtin",
    "BUILTIN_NAMES",
    "make_report",
    "format_report",
]


class VerificationBudgetError(Exception):
    """Distance enumeration exceeds the configured budget: the claim is
    unverifiable at desk scale, which is not the same as false."""


@dataclass(frozen=True)
class CssPair:
    """Classical structure of a CSS-form code.

    ``hz`` rows are the z-parts of the pure-Z generators (they detect X
    errors), ``hx`` the x-parts of the pure-X generators (detect Z).
    """

    hz: BitMatrix
    hx: BitMatrix


@dataclass(frozen=True)
class QuantumCode:
    n: int
    gens_i: tuple[PauliVec, ...] = ()
    gens_e: tuple[tuple[PauliVec, PauliVec], ...] = ()
    gens_g: tuple[tuple[PauliVec, PauliVec], ...] = ()
    d_claimed: int | None = None
    logicals: tuple[tuple[PauliVec, PauliVec], ...] = ()
    css: CssPair | None = field(default=None, compare=False)
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        gens = self._all_gens()
        for g in gens:
            if g.n != self.n:
                raise ValueError("generator qubit count differs from code length")
        if gens and f2.rank(paulis_to_matrix(gens)) != len(gens):
            raise ValueError("generators are linearly dependent; k would be miscounted")
        self._check_commutation()

    # -- derived parameters ---------------------------------------------

    @property
    def s(self) -> int:
        return len(self.gens_i)

    @property
    def c(self) -> int:
        return len(self.gens_e)

    @property
    def r(self) -> int:
        return len(self.gens_g)

    @property
    def k(self) -> int:
        return self.n - self.s - self.c - self.r

    @property
    def params(self) -> str:
        d = f",{self.d_claimed}" if self.d_claimed is not None else ""
        tail = f";{self.r},{self.c}" if self.r else f";{self.c}"
        return f"[[{self.n},{self.k}{d}{tail}]]"

    def _all_gens(self) -> list[PauliVec]:
        out = list(self.gens_i)
        for u, v in self.gens_e:
            out += [u, v]
        for u, v in self.gens_g:
            out += [u, v]
        return out

    def generator_matrix(self) -> BitMatrix:
        """All generators (isotropic + both pair halves) as (z|x) rows."""
        return paulis_to_matrix(self._all_gens())

    def measured_gens(self) -> list[PauliVec]:
        """Generators whose eigenvalues the receiver extracts: the
        isotropic set plus both halves of every entanglement pair."""
        out = list(self.gens_i)
        for u, v in self.gens_e:
            out += [u, v]
        return out

    def passive_gens(self) -> list[PauliVec]:
        """Generators of the harmless group: isotropic set plus both
        halves of every gauge pair."""
        out = list(self.gens_i)
        for u, v in self.gens_g:
            out += [u, v]
        return out

    def _check_commutation(self):
        sp = symplectic_product
        gens = self._all_gens()
        if not gens:
            return
        # map each generator to its pair partner index, if any
        partner = {}
        idx = len(self.gens_i)
        for _ in self.gens_e + self.gens_g:
            partner[idx] = idx + 1
            partner[idx + 1] = idx
            idx += 2
        for a in range(len(gens)):
            for b in range(a + 1, len(gens)):
                want = 1 if partner.get(a) == b else 0
                if sp(gens[a], gens[b]) != want:
                    raise ValueError(
                        f"generator commutation broken between #{a} and #{b}: "
                        f"{format_pauli(gens[a])} vs {format_pauli(gens[b])}"
                    )
        for zbar, xbar in self.logicals:
            if sp(zbar, xbar) != 1:
                raise ValueError("logical pair must anticommute")
            for g in gens:
                if sp(zbar, g):
                    raise ValueError("logical Z does not commute with a generator")
                if sp(xbar, g):
                    raise ValueError("logical X does not commute with a generator")


# -- constructions --------------------------------------------------------


def css_sp_matrix(h: BitMatrix) -> BitMatrix:
    """Block-diagonal (z|x) matrix [h 0; 0 h] of a binary parity check."""
    m, n = h.rows, h.cols
    rows = [h.row(i) for i in range(m)]                 # Z-type: (h_i | 0)
    rows += [h.row(i) << n for i in range(m)]           # X-type: (0 | h_i)
    return BitMatrix(2 * m, 2 * n, tuple(rows))


def build_from_sp(
    hsp: BitMatrix,
    css: CssPair | None = None,
    d_claimed: int | None = None,
    name: str | None = None,
) -> QuantumCode:
    """Quantum code from a binary symplectic parity check ((z|x) rows).

    Rows may be dependent and need not commute: the symplectic
    Gram-Schmidt decomposition splits their span into hyperbolic pairs
    (entanglement subgroup, one ebit each) and a commuting remainder
    (the stabilizer).
    """
    if hsp.cols % 2:
        raise ValueError("symplectic matrix needs an even column count")
    n = hsp.cols // 2
    vecs = [PauliVec.from_packed(hsp.row(i), n) for i in range(hsp.rows)]
    dec = sgs.decompose(vecs, n=n)
    return QuantumCode(
        n=n,
        gens_i=dec.isotropic,
        gens_e=dec.pairs,
        d_claimed=d_claimed,
        css=css,
        name=name,
    )


def build_eaqecc_binary(h: BitMatrix, d_claimed: int | None = None,
                        name: str | None = None) -> QuantumCode:
    """CSS-form entanglement-assisted code from any binary parity check.

    The ebit count equals rank(h h^T) over GF(2); dual-containing
    inputs give c = 0 (a standard stabilizer code).
    """
    return build_from_sp(
        css_sp_matrix(h), css=CssPair(hz=h, hx=h), d_claimed=d_claimed, name=name
    )


def build_eaqecc_gf4(h4: F4Matrix, d_claimed: int | None = None,
                     name: str | None = None) -> QuantumCode:
    """Entanglement-assisted code from a quaternary parity check.

    Parameters come out as [[n, 2k - n + c; c]] where k is the
    classical GF(4) dimension; c = 0 recovers a standard code.
    """
    return build_from_sp(gf4.f4_to_symplectic(h4), d_claimed=d_claimed, name=name)


def from_stabilizer_table(text: str, d_claimed: int | None = None) -> QuantumCode:
    """Quantum code from a stabilizer table (one Pauli string per line).

    The listed generators need not commute; the symplectic
    Gram-Schmidt split decides which become entanglement pairs.
    """
    from .pauli import load_stabilizer_table

    gens = load_stabilizer_table(text)
    if not gens:
        raise ValueError("stabilizer table holds no generators")
    return build_from_sp(paulis_to_matrix(gens), d_claimed=d_claimed)


def to_stabilizer_table(code: QuantumCode) -> str:
    """All generators of a code, one Pauli string per line."""
    from .pauli import format_stabilizer_table

    return format_stabilizer_table(code._all_gens())


def is_dual_containing(hsp: BitMatrix) -> bool:
    """True iff every pair of rows is symplectically orthogonal."""
    if hsp.cols % 2:
        raise ValueError("symplectic matrix needs an even column count")
    n = hsp.cols // 2
    vecs = [PauliVec.from_packed(hsp.row(i), n) for i in range(hsp.rows)]
    return all(
        symplectic_product(vecs[a], vecs[b]) == 0
        for a in range(len(vecs))
        for b in range(a, len(vecs))
    )


# -- distance -------------------------------------------------------------

_LETTERS = ((0, 1), (1, 0), (1, 1))  # X, Z, Y as (z, x) bits


def _enumeration_budget(n: int, d: int) -> int:
    return sum(math.comb(n, w) * 3 ** w for w in range(1, d))


def find_distance_violator(
    code: QuantumCode, d: int, mode: str = "strict", budget: int = 10 ** 8
) -> PauliVec | None:
    """First error of weight < d violating the distance criterion.

    strict mode: a violator is any nonzero error commuting with every
    generator (isotropic, entanglement and gauge alike) -- the
    non-degeneracy criterion.  degenerate mode: errors commuting with
    the measured generators are excused when they lie in the span of
    the isotropic and gauge generators.

    Errors are enumerated by ascending weight, ascending support, X < Z
    < Y per position, so the reported violator is deterministic.
    """
    if mode not in ("strict", "degenerate"):
        raise ValueError(f"unknown mode {mode!r}")
    if d < 1:
        raise ValueError("distance must be positive")
    total = _enumeration_budget(code.n, d)
    if total > budget:
        raise VerificationBudgetError(
            f"distance-{d} check on n={code.n} needs {total} candidates "
            f"(> budget {budget}): unverifiable at desk scale"
        )

    n = code.n
    test_gens = code._all_gens() if mode == "strict" else code.measured_gens()
    # syndrome mask of the single-qubit letter (z,x) at qubit q: bit t is
    # the symplectic product against generator t
    masks = [[0] * 3 for _ in range(n)]
    packed = [[0] * 3 for _ in range(n)]
    for q in range(n):
        for li, (zb, xb) in enumerate(_LETTERS):
            m = 0
            for t, g in enumerate(test_gens):
                bit = (zb & (g.x >> q)) ^ (xb & (g.z >> q))
                m |= (bit & 1) << t
            masks[q][li] = m
            packed[q][li] = (zb << q) | (xb << (q + n))

    harmless = None
    if mode == "degenerate":
        passive = code.passive_gens()
        if passive:
            harmless = paulis_to_matrix(passive)

    for w in range(1, d):
        for support in itertools.combinations(range(n), w):
            for letters in itertools.product(range(3), repeat=w):
                syndrome = 0
                vec = 0
                for q, li in zip(support, letters):
                    syndrome ^= masks[q][li]
                    vec ^= packed[q][li]
                if syndrome:
                    continue
                if harmless is not None and f2.in_rowspace(harmless, vec):
                    continue
                return PauliVec.from_packed(vec, n)
    return None


def verify_distance(code: QuantumCode, d: int, mode: str = "strict",
                    budget: int = 10 ** 8) -> bool:
    """True when no error of weight < d violates the chosen criterion."""
    return find_distance_violator(code, d, mode, budget) is None


# -- bounds ---------------------------------------------------------------


def _effective_d(code: QuantumCode, d: int | None) -> int:
    if d is None:
        d = code.d_claimed
    if d is None:
        raise ValueError("distance unknown: pass d or set d_claimed")
    return d


def singleton_check(code: QuantumCode, d: int | None = None) -> bool:
    """Entanglement-assisted Singleton bound n - (k - c) >= 2(d - 1)."""
    d = _effective_d(code, d)
    return code.n - (code.k - code.c) >= 2 * (d - 1)


def hamming_check(code: QuantumCode, d: int | None = None) -> bool:
    """Quantum Hamming bound; meaningful for non-degenerate codes only."""
    d = _effective_d(code, d)
    t = (d - 1) // 2
    lhs = sum(3 ** j * math.comb(code.n, j) for j in range(t + 1))
    return lhs <= 2 ** (code.n - code.k)


# -- derived codes --------------------------------------------------------


def extend_code(code: QuantumCode) -> QuantumCode:
    """Lengthen by one qubit, appending an overall parity check.

    Every existing generator gains an identity on the new qubit, and two
    new rows are added: all-Z-ones and all-X-ones across all n+1 qubits.
    The net yield k - c drops by one and the distance cannot decrease.
    """
    old = code.generator_matrix()
    n = code.n
    rows = []
    for i in range(old.rows):
        packed = old.row(i)
        z = packed & ((1 << n) - 1)
        x = packed >> n
        rows.append(z | (x << (n + 1)))
    all_ones = (1 << (n + 1)) - 1
    rows.append(all_ones)                 # all-Z row
    rows.append(all_ones << (n + 1))      # all-X row
    hsp = BitMatrix(len(rows), 2 * (n + 1), tuple(rows))
    return build_from_sp(hsp)


def puncture_code(code: QuantumCode) -> QuantumCode:
    """Drop the first qubit, classical-puncturing style.

    The centralizer of the generators is punctured in its first Z and X
    coordinate and the new generator space is its symplectic dual; one
    extra logical appears and the distance drops by at most one.
    Intended for non-degenerate codes of length at least 2.
    """
    if code.n < 2:
        raise ValueError("cannot puncture a single-qubit code")
    n = code.n
    gens = code.generator_matrix()
    # centralizer = ordinary nullspace of the half-swapped matrix
    swapped = BitMatrix(
        gens.rows,
        2 * n,
        tuple((row >> n) | ((row & ((1 << n) - 1)) << n) for row in gens.bits),
    )
    cent = f2.nullspace(swapped)
    if cent is None:
        raise ValueError("trivial centralizer; nothing to puncture")
    nn = n - 1
    punctured = []
    for i in range(cent.rows):
        row = cent.row(i)
        z = (row & ((1 << n) - 1)) >> 1
        x = (row >> (n + 1))
        punctured.append(z | (x << nn))
    cmat = BitMatrix(len(punctured), 2 * nn, tuple(punctured))
    swapped_c = BitMatrix(
        cmat.rows,
        2 * nn,
        tuple((row >> nn) | ((row & ((1 << nn) - 1)) << nn) for row in cmat.bits),
    )
    new_checks = f2.nullspace(swapped_c)
    if new_checks is None:
        return QuantumCode(n=nn)  # no checks left: bare qubits
    return build_from_sp(new_checks)


def gauge_move(code: QuantumCode, pair_index: int) -> QuantumCode:
    """Reclassify one entanglement pair as gauge: c drops, r grows,
    n and k are untouched."""
    if not 0 <= pair_index < len(code.gens_e):
        raise IndexError(f"pair index {pair_index} out of range")
    moved = code.gens_e[pair_index]
    rest = tuple(p for i, p in enumerate(code.gens_e) if i != pair_index)
    return replace(code, gens_e=rest, gens_g=code.gens_g + (moved,))


def ungauge(code: QuantumCode) -> QuantumCode:
    """Halve every gauge pair into the stabilizer: the first member of
    each pair joins the isotropic set, the partner is discarded."""
    if not code.gens_g:
        raise ValueError("code has no gauge pairs")
    new_iso = code.gens_i + tuple(u for u, _ in code.gens_g)
    return replace(code, gens_i=new_iso, gens_g=())


# -- builtin codes --------------------------------------------------------

_SHOR_TABLE = """
ZZIIIIIII
IZZIIIIII
IIIZZIIII
IIIIZZIII
IIIIIIZZI
IIIIIIIZZ
XXXIIIXXX
XXXXXXIII
"""

_STEANE_TABLE = """
IIIZZZZ
IZZIIZZ
ZIZIZIZ
IIIXXXX
IXXIIXX
XIXIXIX
"""

_HAMMING_H = (
    (0, 0, 0, 1, 1, 1, 1),
    (0, 1, 1, 0, 0, 1, 1),
    (1, 0, 1, 0, 1, 0, 1),
)

_EA8_ISO = ["ZZIIIIII", "ZIZIIIII", "IIIZZIII", "IIIZIZII", "IIIIIIZZ", "XXXXXXII"]
_EA8_PAIR = ("IIIIIIIZ", "XXXIIIXX")
_EA8_LOGICALS = ("ZIIZIIIZ", "IIIXXXII")

_EAOQ8_ISO = ["ZZIZZIII", "ZIZZIZII", "IIIIIIZZ", "XXXXXXII"]
_EAOQ8_PAIR = ("IIIIIIIZ", "XXXIIIXX")
_EAOQ8_GAUGE = (("ZZIIIIII", "IXIIXIII"), ("IIIZIZII", "IIXIIXII"))

_FIVEQUBIT_GENS = ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]

# [15,10,4] quaternary parity check; W denotes the conjugate w^2
_Q15_H4 = """5 15
1 0 0 0 1 1 W 0 1 W 0 w W 1 0
0 1 0 0 1 0 w W 1 w 0 0 1 w 1
0 0 1 0 w W 1 w 1 0 0 w 1 W w
0 0 0 1 1 W 0 1 W w 0 W 1 0 W
0 0 0 0 0 0 0 0 0 0 1 0 0 0 0
"""

# searched gauge trade of the [[15,9,4;4]] code: one symplectic pair of
# its entanglement group reclassified as gauge (first hit of an
# exhaustive search over the 2^8 - span for a pair whose trade leaves
# degenerate distance exactly 3), the rest recombined into three pairs
_Q15_TRADED_E = (
    ("ZXXIIIXXZIIZYYZ", "XZXXXXZXIIIZIZY"),
    ("ZIZIYXXXIYIIXXX", "XYXZYIXIIXIYZXY"),
    ("IIIIIIIIIIZIIII", "IIIIIIIIIIXIIII"),
)
_Q15_TRADED_G = (("IZIYXXXIYYIXXXY", "ZXYXIXYXZYIXIIX"),)
_Q15_TRADED_I = ("ZZYIZYXXYZIYZZI", "XXZIXZYYZXIZXXI")

BUILTIN_NAMES = ("shor9", "steane7", "ea8", "eaoq8", "bch63", "q15", "fivequbit")

#: parameters reported in the source tables for each builtin, for
#: claimed-vs-computed comparison in reports
BUILTIN_CLAIMS = {
    "shor9": "[[9,1,3;0]]",
    "steane7": "[[7,1,3;0]]",
    "ea8": "[[8,1,3;1]]",
    "eaoq8": "[[8,1,3;2,1]]",
    "bch63": "[[63,21,9;6]]",
    "q15": "[[15,9,4;4]]",
    "fivequbit": "[[5,1,3;0]]",
}


def hamming_matrix() -> BitMatrix:
    """Parity check of the dual-containing [7,4,3] Hamming code."""
    return BitMatrix.from_rows(_HAMMING_H)


def _pure_type_css(gens) -> CssPair | None:
    """Derive classical CSS structure when every generator is pure Z or
    pure X."""
    z_rows, x_rows = [], []
    n = gens[0].n
    for g in gens:
        if g.x == 0:
            z_rows.append(g.z)
        elif g.z == 0:
            x_rows.append(g.x)
        else:
            return None
    if not z_rows or not x_rows:
        return None
    return CssPair(
        hz=BitMatrix(len(z_rows), n, tuple(z_rows)),
        hx=BitMatrix(len(x_rows), n, tuple(x_rows)),
    )


def _table_code(table: str, logicals: tuple[str, str], d: int, name: str) -> QuantumCode:
    gens = [parse_pauli(ln) for ln in table.split()]
    zbar, xbar = parse_pauli(logicals[0]), parse_pauli(logicals[1])
    return QuantumCode(
        n=gens[0].n,
        gens_i=tuple(gens),
        d_claimed=d,
        logicals=((zbar, xbar),),
        css=_pure_type_css(gens),
        name=name,
    )


def bch63_matrix() -> BitMatrix:
    """24 x 63 binary parity check of the [63,39,9] BCH code.

    Rows are the binary expansions of the GF(2^6) power rows for
    exponents 1, 3, 5, 7 (6 bits per symbol, low bit first); the field
    is built modulo a^6 + a + 1.
    """
    modulus = 0b1000011  # a^6 + a + 1

    def gf64_mul(a: int, b: int) -> int:
        acc = 0
        while b:
            if b & 1:
                acc ^= a
            b >>= 1
            a <<= 1
            if a & 0b1000000:
                a ^= modulus
        return acc

    def gf64_pow(a: int, e: int) -> int:
        out = 1
        base = a
        while e:
            if e & 1:
                out = gf64_mul(out, base)
            base = gf64_mul(base, base)
            e >>= 1
        return out

    alpha = 0b10
    rows = []
    for j in (1, 3, 5, 7):
        symbols = [gf64_pow(alpha, (j * i) % 63) for i in range(63)]
        for bit in range(6):
            rows.append([(s >> bit) & 1 for s in symbols])
    return BitMatrix.from_rows(rows)


def q15_matrix() -> F4Matrix:
    """The [15,10,4] quaternary parity check."""
    return gf4.parse_f4(_Q15_H4)


def q15_traded() -> QuantumCode:
    """Gauge-traded variant of the q15 code: a searched symplectic pair
    moved from the entanglement to the gauge subgroup, trading one ebit
    for a gauge qubit at the cost of one unit of distance."""
    return QuantumCode(
        n=15,
        gens_i=tuple(parse_pauli(s) for s in _Q15_TRADED_I),
        gens_e=tuple((parse_pauli(a), parse_pauli(b)) for a, b in _Q15_TRADED_E),
        gens_g=tuple((parse_pauli(a), parse_pauli(b)) for a, b in _Q15_TRADED_G),
        d_claimed=3,
        name="q15_traded",
    )


def builtin(name: str) -> QuantumCode:
    """Construct one of the named example codes."""
    if name == "shor9":
        return _table_code(_SHOR_TABLE, ("ZZZZZZZZZ", "XXXXXXXXX"), 3, name)
    if name == "steane7":
        return _table_code(_STEANE_TABLE, ("ZZZZZZZ", "XXXXXXX"), 3, name)
    if name == "ea8":
        iso = tuple(parse_pauli(s) for s in _EA8_ISO)
        pair = (parse_pauli(_EA8_PAIR[0]), parse_pauli(_EA8_PAIR[1]))
        logs = ((parse_pauli(_EA8_LOGICALS[0]), parse_pauli(_EA8_LOGICALS[1])),)
        gens = list(iso) + [pair[0], pair[1]]
        return QuantumCode(n=8, gens_i=iso, gens_e=(pair,), d_claimed=3,
                           logicals=logs, css=_pure_type_css(gens), name=name)
    if name == "eaoq8":
        iso = tuple(parse_pauli(s) for s in _EAOQ8_ISO)
        pair = (parse_pauli(_EAOQ8_PAIR[0]), parse_pauli(_EAOQ8_PAIR[1]))
        gauge = tuple(
            (parse_pauli(a), parse_pauli(b)) for a, b in _EAOQ8_GAUGE
        )
        logs = ((parse_pauli(_EA8_LOGICALS[0]), parse_pauli(_EA8_LOGICALS[1])),)
        measured = list(iso) + [pair[0], pair[1]]
        return QuantumCode(n=8, gens_i=iso, gens_e=(pair,), gens_g=gauge,
                           d_claimed=3, logicals=logs,
                           css=_pure_type_css(measured), name=name)
    if name == "bch63":
        return build_eaqecc_binary(bch63_matrix(), d_claimed=9, name=name)
    if name == "q15":
        return build_eaqecc_gf4(q15_matrix(), d_claimed=4, name=name)
    if name == "fivequbit":
        gens = tuple(parse_pauli(s) for s in _FIVEQUBIT_GENS)
        logs = ((parse_pauli("ZZZZZ"), parse_pauli("XXXXX")),)
        return QuantumCode(n=5, gens_i=gens, d_claimed=3, logicals=logs, name=name)
    raise KeyError(f"unknown builtin {name!r}; choose from {BUILTIN_NAMES}")


# -- reports --------------------------------------------------------------


@dataclass(frozen=True)
class CodeReport:
    params: str
    dual_containing: bool
    singleton_ok: bool
    hamming_ok: bool | None
    verified_d: int | None


def make_report(code: QuantumCode, budget: int = 10 ** 6) -> CodeReport:
    """Analyze a code: bounds plus a distance verification attempt.

    The distance claim is verified in degenerate mode when the
    enumeration fits the budget; strict verification upgrades
    ``hamming_ok`` from None to a real answer (the bound only applies
    to non-degenerate codes).
    """
    verified = None
    hamming_ok = None
    d = code.d_claimed
    if d is not None:
        try:
            if verify_distance(code, d, "degenerate", budget):
                verified = d
                try:
                    if verify_distance(code, d, "strict", budget):
                        hamming_ok = hamming_check(code, d)
                except VerificationBudgetError:
                    pass
        except VerificationBudgetError:
            pass
    # with no distance claim there is nothing for the bound to violate
    singleton = singleton_check(code) if d is not None else True
    return CodeReport(
        params=code.params,
        dual_containing=(code.c == 0 and code.r == 0),
        singleton_ok=singleton,
        hamming_ok=hamming_ok,
        verified_d=verified,
    )


def format_report(code: QuantumCode, report: CodeReport | None = None,
                  claimed: str | None = None) -> str:
    """Text report: parameter line, checks, generator table.

    Entanglement pairs are shown with their receiver-side extension
    after a ``|``: the first pair member gets Z on its ebit, the second
    gets X.
    """
    if report is None:
        report = make_report(code)
    if claimed is None and code.name:
        claimed = BUILTIN_CLAIMS.get(code.name)
    lines = [f"computed: {report.params}"]
    if claimed:
        lines.append(f"claimed:  {claimed}")
    lines.append(f"dual-containing: {'yes' if report.dual_containing else 'no'}")
    lines.append(f"singleton: {'ok' if report.singleton_ok else 'VIOLATED'}")
    if report.hamming_ok is not None:
        lines.append(f"hamming: {'ok' if report.hamming_ok else 'VIOLATED'}")
    if report.verified_d is not None:
        lines.append(f"verified distance: {report.verified_d}")
    c = code.c

    def bob(idx: int | None, kind: str) -> str:
        if c == 0:
            return ""
        side = ["I"] * c
        if idx is not None:
            side[idx] = kind
        return "|" + "".join(side)

    for label, rows in (("S_I", [(g, None, "") for g in code.gens_i]),):
        if rows:
            lines.append(f"{label}:")
            for g, _, _ in rows:
                lines.append(f"  {format_pauli(g)}{bob(None, 'I')}")
    if code.gens_e:
        lines.append("S_E:")
        for j, (u, v) in enumerate(code.gens_e):
            lines.append(f"  {format_pauli(u)}{bob(j, 'Z')}")
            lines.append(f"  {format_pauli(v)}{bob(j, 'X')}")
    if code.gens_g:
        lines.append("S_G:")
        for u, v in code.gens_g:
            lines.append(f"  {format_pauli(u)}{bob(None, 'I')}")
            lines.append(f"  {format_pauli(v)}{bob(None, 'I')}")
    if code.logicals:
        lines.append("logicals:")
        for zbar, xbar in code.logicals:
            lines.append(f"  {format_pauli(zbar)}{bob(None, 'I')}")
            lines.append(f"  {format_pauli(xbar)}{bob(None, 'I')}")
    return "\n".join(lines) + "\n"
