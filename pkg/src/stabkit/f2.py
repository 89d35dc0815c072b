"""Dense GF(2) linear algebra on bit-packed matrices.

Rows are stored as Python integers (bit ``j`` of a row integer is the
entry in column ``j``), so row operations are single big-int XORs.
Gaussian elimination always searches pivot columns left to right, which
makes echelon forms, ranks and nullspace bases deterministic.

Also provides the two text formats used throughout: a dense
``"ROWS COLS"``-headed 0/1 format and the MacKay "alist" sparse format.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "BitMatrix",
    "rank",
    "mat_mul",
    "in_rowspace",
    "nullspace",
    "row_echelon",
    "parse_dense",
    "format_dense",
    "parse_alist",
    "format_alist",
]


@dataclass(frozen=True)
class BitMatrix:
    """Dense matrix over GF(2) with bit-packed rows.

    ``bits[i]`` holds row ``i``; bit ``j`` of that integer is entry
    ``(i, j)``.  Instances are immutable and safe to share.
    """

    rows: int
    cols: int
    bits: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"matrix dimensions must be positive, got {self.rows}x{self.cols}")
        if len(self.bits) != self.rows:
            raise ValueError("row count does not match bit data")
        mask = (1 << self.cols) - 1
        for r in self.bits:
            if r & ~mask:
                raise ValueError("row has bits set beyond the declared column count")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rows(cls, rows, cols=None) -> "BitMatrix":
        """Build from an iterable of 0/1 row sequences (or a numpy array)."""
        arr = np.asarray(rows, dtype=np.uint8) & 1
        if arr.ndim != 2:
            raise ValueError("expected a 2-D array of bits")
        m, n = arr.shape
        if cols is not None and cols != n:
            raise ValueError(f"declared cols {cols} != data cols {n}")
        packed = tuple(int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")
                       for row in arr)
        return cls(m, n, packed)

    @classmethod
    def from_ints(cls, bits, cols) -> "BitMatrix":
        return cls(len(tuple(bits)), cols, tuple(int(b) for b in bits))

    @classmethod
    def zeros(cls, rows, cols) -> "BitMatrix":
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def circulant(cls, first_row, r=None) -> "BitMatrix":
        """r x r circulant: row i is the first row cyclically shifted right i times."""
        arr = np.asarray(first_row, dtype=np.uint8) & 1
        n = r if r is not None else arr.size
        if arr.size != n:
            raise ValueError("first row length must equal the circulant size")
        base = int.from_bytes(np.packbits(arr, bitorder="little").tobytes(), "little")
        mask = (1 << n) - 1
        rows = []
        v = base
        for _ in range(n):
            rows.append(v)
            v = ((v << 1) | (v >> (n - 1))) & mask
        return cls(n, n, tuple(rows))

    # -- element / row access ------------------------------------------

    def get(self, i, j) -> int:
        return (self.bits[i] >> j) & 1

    def row(self, i) -> int:
        return self.bits[i]

    def row_list(self, i) -> list[int]:
        b = self.bits[i]
        return [(b >> j) & 1 for j in range(self.cols)]

    def to_array(self) -> np.ndarray:
        out = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for i, b in enumerate(self.bits):
            raw = np.frombuffer(b.to_bytes((self.cols + 7) // 8, "little"), dtype=np.uint8)
            out[i] = np.unpackbits(raw, bitorder="little")[: self.cols]
        return out

    # -- shape manipulation --------------------------------------------

    def transpose(self) -> "BitMatrix":
        cols = []
        for j in range(self.cols):
            v = 0
            for i, b in enumerate(self.bits):
                v |= ((b >> j) & 1) << i
            cols.append(v)
        return BitMatrix(self.cols, self.rows, tuple(cols))

    def vstack(self, other: "BitMatrix") -> "BitMatrix":
        if other.cols != self.cols:
            raise ValueError("column mismatch in vstack")
        return BitMatrix(self.rows + other.rows, self.cols, self.bits + other.bits)

    def hstack(self, other: "BitMatrix") -> "BitMatrix":
        if other.rows != self.rows:
            raise ValueError("row mismatch in hstack")
        merged = tuple(a | (b << self.cols) for a, b in zip(self.bits, other.bits))
        return BitMatrix(self.rows, self.cols + other.cols, merged)

    def submatrix(self, row_idx) -> "BitMatrix":
        rows = tuple(self.bits[i] for i in row_idx)
        return BitMatrix(len(rows), self.cols, rows)

    def is_zero(self) -> bool:
        return all(b == 0 for b in self.bits)

    def __str__(self) -> str:
        return format_dense(self)


# -- elimination core ---------------------------------------------------


def _echelon(rows: list[int], cols: int) -> tuple[list[int], list[int]]:
    """In-place forward elimination; returns (reduced rows, pivot columns).

    Pivots are searched column by column in ascending order, and the
    pivot row is fully reduced against (reduced row-echelon form), so the
    output is unique for a given row space.
    """
    rows = list(rows)
    pivots: list[int] = []
    level = 0
    for col in range(cols):
        pivot = None
        for i in range(level, len(rows)):
            if (rows[i] >> col) & 1:
                pivot = i
                break
        if pivot is None:
            continue
        rows[level], rows[pivot] = rows[pivot], rows[level]
        for i in range(len(rows)):
            if i != level and (rows[i] >> col) & 1:
                rows[i] ^= rows[level]
        pivots.append(col)
        level += 1
        if level == len(rows):
            break
    return rows[:level], pivots


def row_echelon(m: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Reduced row echelon form of ``m`` (input is never mutated)."""
    reduced, pivots = _echelon(list(m.bits), m.cols)
    if not reduced:
        return BitMatrix.zeros(1, m.cols), pivots
    return BitMatrix(len(reduced), m.cols, tuple(reduced)), pivots


def rank(m: BitMatrix) -> int:
    """Dimension of the GF(2) row space."""
    _, pivots = _echelon(list(m.bits), m.cols)
    return len(pivots)


def mat_mul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Matrix product over GF(2)."""
    if a.cols != b.rows:
        raise ValueError(f"dimension mismatch: {a.rows}x{a.cols} times {b.rows}x{b.cols}")
    out = []
    for ra in a.bits:
        acc = 0
        v = ra
        while v:
            j = (v & -v).bit_length() - 1
            acc ^= b.bits[j]
            v &= v - 1
        out.append(acc)
    return BitMatrix(a.rows, b.cols, tuple(out))


def in_rowspace(m: BitMatrix, v) -> bool:
    """True iff ``v`` is a GF(2) combination of the rows of ``m``.

    ``v`` may be a packed integer or a 0/1 sequence of length ``m.cols``.
    """
    w = _pack_vector(v, m.cols)
    reduced, pivots = _echelon(list(m.bits), m.cols)
    for row, col in zip(reduced, pivots):
        if (w >> col) & 1:
            w ^= row
    return w == 0


def nullspace(m: BitMatrix) -> BitMatrix | None:
    """Basis of ``{v : m v^T = 0}`` as matrix rows.

    Returns ``None`` when the nullspace is trivial (an empty basis);
    otherwise a ``(cols - rank)`` x ``cols`` matrix.
    """
    reduced, pivots = _echelon(list(m.bits), m.cols)
    pivot_set = set(pivots)
    free_cols = [c for c in range(m.cols) if c not in pivot_set]
    if not free_cols:
        return None
    basis = []
    for f in free_cols:
        v = 1 << f
        for row, col in zip(reduced, pivots):
            if (row >> f) & 1:
                v |= 1 << col
        basis.append(v)
    return BitMatrix(len(basis), m.cols, tuple(basis))


def _pack_vector(v, cols: int) -> int:
    if isinstance(v, (int, np.integer)):
        w = int(v)
        if w < 0 or w >> cols:
            raise ValueError("packed vector has bits outside the column range")
        return w
    seq = np.asarray(v, dtype=np.uint8).ravel() & 1
    if seq.size != cols:
        raise ValueError(f"vector length {seq.size} != column count {cols}")
    return int.from_bytes(np.packbits(seq, bitorder="little").tobytes(), "little")


# -- text formats --------------------------------------------------------


def parse_dense(text: str) -> BitMatrix:
    """Parse the dense format: line 1 ``"ROWS COLS"``, then ROWS lines of 0/1."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix text")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"bad dense header: {lines[0]!r}")
    m, n = int(header[0]), int(header[1])
    if len(lines) - 1 < m:
        raise ValueError(f"expected {m} matrix rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1 : 1 + m]:
        compact = ln.replace(" ", "")
        if len(compact) != n or any(ch not in "01" for ch in compact):
            raise ValueError(f"bad dense row: {ln!r}")
        rows.append([int(ch) for ch in compact])
    return BitMatrix.from_rows(rows)


def format_dense(m: BitMatrix) -> str:
    lines = [f"{m.rows} {m.cols}"]
    for i in range(m.rows):
        lines.append("".join(str(b) for b in m.row_list(i)))
    return "\n".join(lines) + "\n"


def parse_alist(text: str) -> BitMatrix:
    """Parse MacKay's alist format (1-based indices, N M header)."""
    tokens_per_line = [[int(t) for t in ln.split()] for ln in text.splitlines() if ln.strip()]
    if len(tokens_per_line) < 4:
        raise ValueError("alist file too short")
    n, m = tokens_per_line[0]
    if n < 1 or m < 1:
        raise ValueError("alist dimensions must be positive")
    col_deg = tokens_per_line[2]
    if len(col_deg) != n:
        raise ValueError("alist column-degree list has wrong length")
    rows = [0] * m
    for j in range(n):
        entries = tokens_per_line[4 + j][: col_deg[j]]
        for i in entries:
            if i == 0:
                continue
            if not 1 <= i <= m:
                raise ValueError(f"alist row index {i} out of range")
            rows[i - 1] |= 1 << j
    return BitMatrix(m, n, tuple(rows))


def format_alist(m: BitMatrix) -> str:
    """Serialize to alist (N M header, per-column then per-row 1-based lists)."""
    arr = m.to_array()
    col_idx = [list(np.flatnonzero(arr[:, j]) + 1) for j in range(m.cols)]
    row_idx = [list(np.flatnonzero(arr[i, :]) + 1) for i in range(m.rows)]
    cmax = max((len(c) for c in col_idx), default=0)
    rmax = max((len(r) for r in row_idx), default=0)
    lines = [f"{m.cols} {m.rows}", f"{cmax} {rmax}"]
    lines.append(" ".join(str(len(c)) for c in col_idx))
    lines.append(" ".join(str(len(r)) for r in row_idx))
    for c in col_idx:
        lines.append(" ".join(str(i) for i in c + [0] * (cmax - len(c))))
    for r in row_idx:
        lines.append(" ".join(str(i) for i in r + [0] * (rmax - len(r))))
    return "\n".join(lines) + "\n"
