"""Command-line front end.

Subcommands: construct, analyze, qcldpc, simulate, builtin, sgs.
All randomness flows from --seed; exit codes are 0 (success),
1 (usage error), 2 (parse error), 3 (verification budget exceeded).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import codes, f2, gf4, qc_ldpc, sgs, sim
from .codes import (
    BUILTIN_NAMES,
    VerificationBudgetError,
    build_eaqecc_binary,
    build_eaqecc_gf4,
    builtin,
    css_sp_matrix,
    format_report,
    is_dual_containing,
    make_report,
)
from .f2 import BitMatrix
from .pauli import PauliVec, format_pauli

_EXAMPLE_NAMES = ("ex1", "ex2", "mackay", "hi")

_EXAMPLE_CLAIMS = {
    "ex1": "[[128,48,6;18]]",
    "ex2": "[[128,48,6;18]]",
    "hi": "[[120,38,4]]",
}


class _CliParser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _read_text(path: str) -> str:
    p = Path(path)
    if not p.exists():
        raise ValueError(f"no such file: {path}")
    return p.read_text()


def _load_matrix_gf2(path: str) -> BitMatrix:
    text = _read_text(path)
    head = text.lstrip().splitlines()[0].split() if text.strip() else []
    # alist starts "N M" followed by a weights line; dense rows are 0/1 strings
    try:
        return f2.parse_dense(text)
    except ValueError:
        if len(head) == 2:
            return f2.parse_alist(text)
        raise


def _qc_css_code(hc, hd) -> codes.QuantumCode:
    """CSS code from a pair of classical checks (Z side, X side)."""
    hc_x = qc_ldpc.expand(hc)
    hd_x = qc_ldpc.expand(hd)
    n = hc_x.cols
    rows = [hc_x.row(i) for i in range(hc_x.rows)]
    rows += [hd_x.row(i) << n for i in range(hd_x.rows)]
    hsp = BitMatrix(len(rows), 2 * n, tuple(rows))
    return codes.build_from_sp(hsp, css=codes.CssPair(hz=hc_x, hx=hd_x))


def _resolve_code(spec: str, field: str) -> tuple[codes.QuantumCode, str | None]:
    if spec in BUILTIN_NAMES:
        return builtin(spec), codes.BUILTIN_CLAIMS.get(spec)
    if spec in _EXAMPLE_NAMES:
        claim = _EXAMPLE_CLAIMS.get(spec)
        if spec == "ex1":
            h = qc_ldpc.expand(qc_ldpc.make_ex1())
        elif spec == "ex2":
            h = qc_ldpc.expand(qc_ldpc.make_ex2())
        elif spec == "mackay":
            h = qc_ldpc.make_ex_mackay()
        else:
            return _qc_css_code(*qc_ldpc.make_ex_hi()), claim
        return build_eaqecc_binary(h, name=spec), claim
    if field == "gf4":
        return build_eaqecc_gf4(gf4.parse_f4(_read_text(spec))), None
    return build_eaqecc_binary(_load_matrix_gf2(spec)), None


def _cmd_construct(args) -> int:
    if args.field == "gf4":
        h4 = gf4.parse_f4(_read_text(args.input))
        code = build_eaqecc_gf4(h4, d_claimed=args.claimed_d)
        hsp = gf4.f4_to_symplectic(h4)
    else:
        h = _load_matrix_gf2(args.input)
        code = build_eaqecc_binary(h, d_claimed=args.claimed_d)
        hsp = css_sp_matrix(h)
    report = make_report(code)
    report = codes.CodeReport(
        params=report.params,
        dual_containing=is_dual_containing(hsp),
        singleton_ok=report.singleton_ok,
        hamming_ok=report.hamming_ok,
        verified_d=report.verified_d,
    )
    sys.stdout.write(format_report(code, report))
    return 0


def _cmd_analyze(args) -> int:
    if args.field == "gf4":
        h4 = gf4.parse_f4(_read_text(args.input))
        code = build_eaqecc_gf4(h4)
        hsp = gf4.f4_to_symplectic(h4)
        print(f"gf4 matrix: {h4.rows} x {h4.cols}")
        print(f"symplectic expansion: {hsp.rows} x {hsp.cols}, rank {f2.rank(hsp)}")
        print(f"dual-containing: {'yes' if is_dual_containing(hsp) else 'no'}")
        print(f"ebits: {code.c}")
    else:
        h = _load_matrix_gf2(args.input)
        code = build_eaqecc_binary(h)
        print(f"gf2 matrix: {h.rows} x {h.cols}, rank {f2.rank(h)}")
        hhT = f2.mat_mul(h, h.transpose())
        print(f"rank(H H^T): {f2.rank(hhT)}")
        print(f"girth: {qc_ldpc.girth_exact(h)}")
        print(f"dual-containing: {'yes' if hhT.is_zero() else 'no'}")
    print(f"computed: {code.params}")
    if args.distance:
        ok = codes.verify_distance(code, args.distance, args.mode)
        print(f"distance {args.distance} ({args.mode}): {'verified' if ok else 'REFUTED'}")
    return 0


def _qcldpc_exponents(args):
    if args.example == "ex1":
        return [("ex1", qc_ldpc.make_ex1())]
    if args.example == "ex2":
        return [("ex2", qc_ldpc.make_ex2())]
    if args.example == "hi":
        hc, hd = qc_ldpc.make_ex_hi()
        return [("hi_C", hc), ("hi_D", hd)]
    if args.exponent:
        e = qc_ldpc.parse_exponent(_read_text(args.exponent))
        if args.r and args.r != e.r:
            raise ValueError(f"--r {args.r} conflicts with file circulant size {e.r}")
        return [(args.exponent, e)]
    raise ValueError("qcldpc needs --example or --exponent")


def _cmd_qcldpc(args) -> int:
    if args.example == "mackay":
        h = qc_ldpc.make_ex_mackay(n=args.n, m=args.m, L=args.L, seed=args.seed)
        if args.emit == "matrix":
            out = f2.format_alist(h) if args.format == "alist" else f2.format_dense(h)
            sys.stdout.write(out)
            return 0
        code = build_eaqecc_binary(h, name="mackay")
        print(f"girth: {qc_ldpc.girth_exact(h)}")
        print(f"rank(H H^T): {f2.rank(f2.mat_mul(h, h.transpose()))}")
        print(f"computed: {code.params}")
        return 0

    named = _qcldpc_exponents(args)
    if args.emit == "matrix":
        for _, e in named:
            h = qc_ldpc.expand(e)
            out = f2.format_alist(h) if args.format == "alist" else f2.format_dense(h)
            sys.stdout.write(out)
        return 0

    for name, e in named:
        h = qc_ldpc.expand(e)
        print(f"== {name}: r={e.r} J={e.J} L={e.L} "
              f"type-{'I' if e.is_type_i else 'II'} n={h.cols}")
        print(f"girth (exact): {qc_ldpc.girth_exact(h)}")
        print(f"girth >= 6 (multiplicity-free): {qc_ldpc.girth_ge_6(e)}")
        print(f"dual-containing: {qc_ldpc.dual_containing_qc(e)}")
        print("row differences:")
        for i in range(e.J):
            for j in range(i, e.J):
                d = qc_ldpc.row_difference(e, i, j)
                print(f"  d[{i + 1}][{j + 1}] = {list(d.columns)} "
                      f"even={qc_ldpc.is_multiplicity_even(d)} "
                      f"free={qc_ldpc.is_multiplicity_free(d)}")
        hhT = f2.mat_mul(h, h.transpose())
        c_bits = f2.rank(hhT)
        c_poly = qc_ldpc.hermitian_rank_poly(e)
        print(f"rank(H H^T): {c_bits} (polynomial pipeline: {c_poly}, "
              f"bound: {qc_ldpc.rank_bound(e)})")

    if args.example in ("ex1", "ex2"):
        code = build_eaqecc_binary(qc_ldpc.expand(named[0][1]), name=args.example)
        print(f"computed: {code.params}")
        print(f"claimed:  {_EXAMPLE_CLAIMS[args.example]}")
    elif args.example == "hi":
        code = _qc_css_code(named[0][1], named[1][1])
        print(f"computed: {code.params}")
        print(f"claimed:  {_EXAMPLE_CLAIMS['hi']}")
    else:
        code = build_eaqecc_binary(qc_ldpc.expand(named[0][1]))
        print(f"computed: {code.params}")
    return 0


def _cmd_simulate(args) -> int:
    code, _ = _resolve_code(args.code, args.field)
    try:
        p_grid = tuple(float(t) for t in args.p.split(",") if t != "")
    except ValueError as exc:
        raise ValueError(f"bad probability list {args.p!r}") from exc
    config = sim.SimConfig(
        code=code,
        p_grid=p_grid,
        trials=args.trials,
        seed=args.seed,
        max_iter=args.max_iter,
        success_mode=args.mode,
        workers=args.workers,
    )
    sys.stdout.write(sim.sweep(config).to_csv())
    return 0


def _cmd_builtin(args) -> int:
    code = builtin(args.name)
    sys.stdout.write(format_report(code, claimed=codes.BUILTIN_CLAIMS.get(args.name)))
    return 0


def _cmd_sgs(args) -> int:
    m = _load_matrix_gf2(args.input)
    if m.cols % 2:
        raise ValueError("sgs input must have an even column count ((z|x) rows)")
    n = m.cols // 2
    vecs = [PauliVec.from_packed(m.row(i), n) for i in range(m.rows)]
    dec = sgs.decompose(vecs, n=n)
    print(f"n={dec.n} c={dec.c} ell={dec.ell}")
    for i, (u, v) in enumerate(dec.pairs):
        print(f"pair {i + 1}: {format_pauli(u)}  {format_pauli(v)}")
    for u in dec.isotropic:
        print(f"isotropic: {format_pauli(u)}")
    return 0


def _build_parser() -> _CliParser:
    parser = _CliParser(prog="stabkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="quantum code from a classical parity check")
    p.add_argument("--input", required=True)
    p.add_argument("--field", choices=("gf2", "gf4"), default="gf2")
    p.add_argument("--claimed-d", type=int, default=None)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("analyze", help="ranks, girth, dual-containment, distance")
    p.add_argument("--input", required=True)
    p.add_argument("--field", choices=("gf2", "gf4"), default="gf2")
    p.add_argument("--distance", type=int, default=None)
    p.add_argument("--mode", choices=("strict", "degenerate"), default="strict")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("qcldpc", help="quasi-cyclic LDPC families")
    p.add_argument("--example", choices=_EXAMPLE_NAMES, default=None)
    p.add_argument("--exponent", default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--emit", choices=("matrix", "report"), default="report")
    p.add_argument("--format", choices=("dense", "alist"), default="dense")
    p.add_argument("--n", type=int, default=128)
    p.add_argument("--m", type=int, default=48)
    p.add_argument("--L", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_qcldpc)

    p = sub.add_parser("simulate", help="depolarizing-channel Monte Carlo, CSV output")
    p.add_argument("--code", required=True)
    p.add_argument("--field", choices=("gf2", "gf4"), default="gf2")
    p.add_argument("--p", required=True, help="comma-separated probabilities")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-iter", type=int, default=100)
    p.add_argument("--mode", choices=("strict", "degenerate"), default="degenerate")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("builtin", help="report on a named example code")
    p.add_argument("name", choices=BUILTIN_NAMES)
    p.set_defaults(func=_cmd_builtin)

    p = sub.add_parser("sgs", help="symplectic Gram-Schmidt on a (z|x) matrix file")
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_sgs)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except VerificationBudgetError as exc:
        print(f"stabkit: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError, OSError) as exc:
        print(f"stabkit: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
