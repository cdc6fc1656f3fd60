"""Command-line front end.

Exit codes: 0 success, 1 usage or grammar error, 2 contract violation
(for instance a charge outside the fundamental domain).
"""
from __future__ import annotations

import argparse
import json
import sys

from . import abacus as ab
from .crystal import Step, crystal_component, export_graph, highest_weight, max_nodes_default, node_key
from .decomposition import (decompose, enumerate_flotw, flotw_reason, iota,
                            is_finite_dim_label)
from .fock import FockVector, chevalley_e, chevalley_f
from .heisenberg import (b_minus_sigma, b_minus_sigma_dual, b_plus_sigma, b_plus_sigma_dual,
                         depth, heis_op, kappa, kappa_pair, attached_dhw)
from .partitions import (ChargedMultipartition, GrammarError, all_charged, format_charge,
                         format_multipartition, format_partition, parse_charge,
                         parse_charged, parse_partition)
from .periods import strip_periods, is_trivial
from .selfcheck import format_report, run_suite


class UsageError(Exception):
    pass


class ContractViolation(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _cmp_json(v: ChargedMultipartition) -> dict:
    return {"mp": format_multipartition(v.parts), "charge": list(v.charge), "rank": v.rank}


def _emit(args, text: str, data) -> str:
    if args.format == "json":
        return json.dumps(data, indent=2, sort_keys=True) + "\n"
    return text if text.endswith("\n") else text + "\n"


def _vertex(args) -> ChargedMultipartition:
    v = parse_charged(args.mp.strip(), args.charge)
    if getattr(args, "l", None) is not None and args.l != v.level:
        raise UsageError(f"--l {args.l} does not match the level {v.level} of {args.mp!r}")
    return v


def _maybe(v) -> str:
    return "0" if v is None else str(v)


# -- commands ------------------------------------------------------------------

def cmd_convert(args) -> str:
    v = parse_charged(args.mp.strip(), args.charge)
    if args.inverse:
        if args.l is None:
            raise UsageError("convert --inverse needs --l")
        tv = ab.TripleVertex.from_e(v, args.l)
        out = tv.l_view
    else:
        if args.e is None:
            raise UsageError("convert needs --e")
        tv = ab.TripleVertex.from_l(v, args.e)
        out = {"e": tv.e_view, "one": tv.one_view, "l": tv.l_view}[args.to]
    text = str(out)
    if args.abacus:
        text += "\n" + ab.abacus_from_charged(out).render(ascii=args.ascii)
    data = {"l_view": _cmp_json(tv.l_view), "one_view": _cmp_json(tv.one_view),
            "e_view": _cmp_json(tv.e_view), "e": tv.e, "l": tv.l}
    return _emit(args, text, data)


def cmd_crystal(args) -> str:
    v = _vertex(args)
    g = crystal_component(v, args.kind, args.e, args.rank, args.max_nodes or max_nodes_default())
    if args.format in ("dot", "json"):
        return export_graph(g, args.format).decode()
    lines = [str(n) for n in g.sorted_nodes()]
    lines.append(f"{len(g.nodes)} vertices, {len(g.edges)} arrows" + (" (partial)" if g.partial else ""))
    return "\n".join(lines) + "\n"


def _path_text(path) -> str:
    return " ".join(f"{s.kind}{s.color}" for s in path) or "(none)"


def cmd_hw(args) -> str:
    v = _vertex(args)
    if args.kind == "both":
        top, path = attached_dhw(v, args.e)
    else:
        top, path = highest_weight(v, args.kind, args.e)
    text = f"{top}\nraising path: {_path_text(path)}"
    if args.abacus:
        text += "\n" + _render_periods(top, args.e, args.ascii)
    data = {"hw": _cmp_json(top), "path": [{"kind": s.kind, "color": s.color} for s in path]}
    return _emit(args, text, data)


def _render_periods(v: ChargedMultipartition, e: int, ascii: bool) -> str:
    a = ab.abacus_from_charged(v)
    strip = strip_periods(a, e)
    marks = {}
    for k, p in enumerate(strip.periods, 1):
        if not is_trivial(p, a):
            for bead in p:
                marks[bead] = str(k % 10)
    lo = min([c for _, c in strip.periods[-1]] if strip.periods else [a.window_low]) - 1
    return a.extended(lo).render(lo=lo, ascii=ascii, marks=marks)


def cmd_heis(args) -> str:
    v = _vertex(args)
    e = args.e
    if args.heis_cmd == "kappa":
        top, _ = attached_dhw(v, e)
        k, kd = kappa_pair(top, e)
        text = f"kappa: {format_partition(k)}\nkappa-dot: {format_partition(kd)}\ndoubly hw vertex: {top}"
        return _emit(args, text, {"kappa": list(k), "kappa_dot": list(kd), "doubly_hw": _cmp_json(top)})
    if args.heis_cmd == "depth":
        d = depth(v, e)
        return _emit(args, str(d), {"depth": d})
    op = args.op
    sigma = parse_partition(args.sigma) if args.sigma else ()
    if op.startswith("b1,"):
        try:
            c = int(op[3:])
        except ValueError:
            raise UsageError(f"bad diagonal in --op {op!r}") from None
        out = heis_op(v, c, e)
    elif op in ("b-sigma", "b+sigma"):
        if args.sigma is None:
            raise UsageError(f"--op {op} needs --sigma")
        table = {("b-sigma", False): b_minus_sigma, ("b+sigma", False): b_plus_sigma,
                 ("b-sigma", True): b_minus_sigma_dual, ("b+sigma", True): b_plus_sigma_dual}
        out = table[(op, args.dual)](v, sigma, e)
    else:
        raise UsageError(f"unknown --op {op!r} (expected b1,<c>, b-sigma or b+sigma)")
    return _emit(args, _maybe(out), {"result": None if out is None else _cmp_json(out)})


def cmd_decompose(args) -> str:
    v = _vertex(args)
    d = decompose(v, args.e)
    text = (f"e_path: {' '.join(map(str, d.e_path)) or '(none)'}\n"
            f"sigma: {format_partition(d.sigma)}\n"
            f"l_path: {' '.join(map(str, d.l_path)) or '(none)'}\n"
            f"base charge: {format_charge(d.base_charge)}")
    data = {"e_path": list(d.e_path), "sigma": list(d.sigma), "l_path": list(d.l_path),
            "base_charge": list(d.base_charge)}
    return _emit(args, text, data)


def cmd_iota(args) -> str:
    v = _vertex(args)
    lab = iota(v, args.e)
    text = f"{lab.flotw_l}\n{format_partition(lab.sigma)}\n{lab.flotw_e}"
    data = {"flotw_l": _cmp_json(lab.flotw_l), "sigma": list(lab.sigma), "flotw_e": _cmp_json(lab.flotw_e)}
    return _emit(args, text, data)


def _list_args(args) -> tuple[int, tuple[int, ...], int]:
    if args.charge is None or args.rank is None:
        raise UsageError("list needs --charge and --rank")
    s = parse_charge(args.charge)
    if args.l is not None and args.l != len(s):
        raise UsageError(f"--l {args.l} does not match the charge {args.charge}")
    return args.e, s, args.rank


def cmd_flotw(args) -> str:
    if args.flotw_cmd == "check":
        v = parse_charged(args.mp.strip(), args.charge)
        reason = flotw_reason(v, args.e)
        text = "true" if reason == "ok" else f"false ({reason})"
        return _emit(args, text, {"flotw": reason == "ok", "reason": reason})
    e, s, n = _list_args(args)
    try:
        out = enumerate_flotw(e, s, n)
    except ValueError as exc:
        raise ContractViolation(str(exc)) from None
    return _emit(args, "\n".join(map(str, out)), [_cmp_json(v) for v in out])


def cmd_finite_dim(args) -> str:
    if args.fd_cmd == "check":
        v = parse_charged(args.mp.strip(), args.charge)
        ok = is_finite_dim_label(v, args.e)
        return _emit(args, "true" if ok else "false", {"finite_dim": ok})
    e, s, n = _list_args(args)
    out = sorted((v for v in all_charged(s, n) if v.rank == n and is_finite_dim_label(v, e)), key=node_key)
    return _emit(args, "\n".join(map(str, out)), [_cmp_json(v) for v in out])


def cmd_selfcheck(args) -> str:
    res = run_suite(args.profile, args.seed)
    report = format_report(res)
    if not all(r.passed for r in res):
        raise ContractViolation(report)
    return report


def cmd_fock(args) -> str:
    v = _vertex(args)
    basis = FockVector.basis(v)
    lines = []
    for i in ([args.i] if args.i is not None else range(args.e)):
        lines.append(f"f_{i} = {chevalley_f(i, basis, args.e)}")
        lines.append(f"e_{i} = {chevalley_e(i, basis, args.e)}")
    return "\n".join(lines) + "\n"


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--e", type=int, help="modulus e of the quantum-group crystal")
    common.add_argument("--l", type=int, help="level l")
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--ascii", action="store_true", help="ASCII abacus rendering")

    def vertex_args(p, need_e=True):
        p.add_argument("mp", help='multipartition, e.g. "5.1|3.1|1"')
        p.add_argument("charge", help='charge, e.g. "(0,-1,1)"')

    parser = _Parser(prog="fockcrystal", description="Crystals, abacus periods and Heisenberg maps on Fock spaces.")
    sub = parser.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("convert", parents=[common], help="switch between l-, 1- and e-views")
    vertex_args(p)
    p.add_argument("--to", choices=("e", "one", "l"), default="e")
    p.add_argument("--inverse", action="store_true", help="input is an e-view; needs --l")
    p.add_argument("--abacus", action="store_true")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("crystal", parents=[common], help="connected component by BFS")
    vertex_args(p)
    p.add_argument("--kind", choices=("e", "l"), default="e")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--max-nodes", type=int, default=None)
    p.set_defaults(func=cmd_crystal)

    p = sub.add_parser("hw", parents=[common], help="highest weight vertex and raising path")
    vertex_args(p)
    p.add_argument("--kind", choices=("e", "l", "both"), default="e")
    p.add_argument("--abacus", action="store_true")
    p.set_defaults(func=cmd_hw)

    p = sub.add_parser("heis", parents=[common], help="Heisenberg crystal")
    hs = p.add_subparsers(dest="heis_cmd", required=True, parser_class=_Parser)
    for name in ("kappa", "depth", "apply"):
        q = hs.add_parser(name, parents=[common])
        vertex_args(q)
        if name == "apply":
            q.add_argument("--op", required=True, help="b1,<c> | b-sigma | b+sigma")
            q.add_argument("--sigma")
            q.add_argument("--dual", action="store_true", help="primed maps on the e-view")
    p.set_defaults(func=cmd_heis)

    for name, func, hlp in (("decompose", cmd_decompose, "triple decomposition of a vertex"),
                           ("iota", cmd_iota, "label by (FLOTW, sigma, FLOTW)")):
        p = sub.add_parser(name, parents=[common], help=hlp)
        vertex_args(p)
        p.set_defaults(func=func)

    for name, func, dest, hlp in (("flotw", cmd_flotw, "flotw_cmd", "check or list FLOTW multipartitions"),
                                  ("finite-dim", cmd_finite_dim, "fd_cmd", "finite-dimensionality labels")):
        p = sub.add_parser(name, parents=[common], help=hlp)
        ss = p.add_subparsers(dest=dest, required=True, parser_class=_Parser)
        q = ss.add_parser("check", parents=[common])
        vertex_args(q)
        q = ss.add_parser("list", parents=[common])
        q.add_argument("--charge")
        q.add_argument("--rank", type=int)
        p.set_defaults(func=func)

    p = sub.add_parser("selfcheck", parents=[common], help="run the invariant suites")
    p.add_argument("--profile", choices=("quick", "full"), default="quick")
    p.set_defaults(func=cmd_selfcheck)

    p = sub.add_parser("fock", parents=[common], help="debug: Chevalley generators on a basis vector")
    fs = p.add_subparsers(dest="fock_cmd", required=True, parser_class=_Parser)
    q = fs.add_parser("debug", parents=[common])
    vertex_args(q)
    q.add_argument("--i", type=int)
    p.set_defaults(func=cmd_fock)
    return parser


_NEEDS_E = {"crystal", "hw", "heis", "decompose", "iota", "flotw", "finite-dim", "fock"}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    # "-|1" would otherwise be read as an option; a leading space is stripped by the grammar
    argv = [" " + a if a.startswith("-|") else a for a in argv]
    try:
        args = build_parser().parse_args(argv)
        if args.cmd in _NEEDS_E and args.e is None:
            raise UsageError(f"{args.cmd} needs --e")
        if args.e is not None and args.e < 2:
            raise UsageError("--e must be at least 2")
        out.write(args.func(args))
        return 0
    except (UsageError, GrammarError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    except ContractViolation as exc:
        err.write(f"contract violation: {exc}\n")
        return 2
    except ValueError as exc:
        err.write(f"contract violation: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
