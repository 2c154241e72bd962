"""Command-line front end.

Exit codes: 0 for a true verdict or a passing check, 1 for false or a failing
check, 2 for usage and parse errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import epsilon as E
from .checks import SUITES
from .correspondence import seq_to_tree, tree_to_seq
from .oracle import TREE_CAP
from .qo import QO, height, load_qo, otype, width
from .sequences import embeds, format_seq, is_indecomposable, parse_seq
from .trees import eps_to_tree, format_tree, g_type, le_k, le_t, parse_tree, two_plus_omega

DEFAULT_QO = "anti3"

# per-suite defaults for --cases and --max-size
CHECK_DEFAULTS = {
    "trees": (None, 5),
    "sequences": (1000, 3),
    "correspondence": (500, 3),
    "epsilon": (None, 4),
}


class UsageError(Exception):
    pass


def _qo(args) -> QO:
    return load_qo(args.qo or DEFAULT_QO)


def _verdict(ok: bool) -> int:
    print("true" if ok else "false")
    return 0 if ok else 1


def cmd_qo_stats(args) -> int:
    q = _qo(args)
    print(f"elements: {q.n}")
    print(f"classes: {len(q.classes())}")
    print(f"otype: {otype(q)}")
    print(f"height: {height(q)}")
    print(f"width: {width(q)}")
    return 0


def cmd_tree_cmp(args) -> int:
    q = _qo(args)
    s, t = parse_tree(args.left, q), parse_tree(args.right, q)
    return _verdict((le_k if args.kruskal else le_t)(q, s, t))


def cmd_seq_cmp(args) -> int:
    q = _qo(args)
    return _verdict(embeds(q, parse_seq(args.left, q), parse_seq(args.right, q)))


def cmd_convert(args) -> int:
    q = _qo(args)
    if args.direction == "tree2seq":
        print(format_seq(tree_to_seq(parse_tree(args.expr, q)), q))
    else:
        s = parse_seq(args.expr, q)
        if not is_indecomposable(s):
            raise UsageError("seq2tree needs an indecomposable sequence (a single component)")
        print(format_tree(seq_to_tree(s, q), q))
    return 0


def cmd_otype(args) -> int:
    o = otype(_qo(args))
    print(o if args.target == "qo" else g_type(o))
    return 0


def cmd_eps_cmp(args) -> int:
    omega = E.OmegaOrder(args.omega)
    c = E.cmp(E.parse_term(args.left, omega), E.parse_term(args.right, omega), omega)
    print({-1: "less", 0: "equal", 1: "greater"}[c])
    return 0


def cmd_eps_totree(args) -> int:
    omega = E.OmegaOrder(args.omega)
    t = eps_to_tree(E.parse_term(args.term, omega), omega)
    print(format_tree(t, two_plus_omega(omega)))
    return 0


def cmd_check(args) -> int:
    default_cases, default_size = CHECK_DEFAULTS[args.suite]
    size = default_size if args.max_size is None else args.max_size
    cases = default_cases if args.cases is None else args.cases
    if size < 1:
        raise UsageError("--max-size must be positive")
    if cases is not None and cases < 0:
        raise UsageError("--cases must be non-negative")
    qos = None if args.qo is None else [load_qo(args.qo)]
    if args.suite == "trees":
        if size > TREE_CAP:
            raise UsageError(f"--max-size for trees is capped at {TREE_CAP} vertices")
        res = SUITES["trees"](qos, max_vertices=size)
    elif args.suite == "sequences":
        res = SUITES["sequences"](qos, cases=cases, seed=args.seed, max_depth=size)
    elif args.suite == "correspondence":
        res = SUITES["correspondence"](qos, cases=cases, seed=args.seed, max_height=size)
    else:
        if args.omega < 0:
            raise UsageError("--omega must be non-negative")
        res = SUITES["epsilon"](omega_size=args.omega, max_nodes=size)
    for line in res.lines():
        print(line)
    return 0 if res.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wqokit", description="well-quasi-order workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    qo_opt = argparse.ArgumentParser(add_help=False)
    qo_opt.add_argument("--qo", metavar="PATH|NAME", help=f"quasi-order file or built-in name (default: {DEFAULT_QO})")
    omega_opt = argparse.ArgumentParser(add_help=False)
    omega_opt.add_argument("--omega", type=int, default=1, metavar="N", help="size of the index chain (default: 1)")

    qo = sub.add_parser("qo", help="quasi-order invariants").add_subparsers(dest="action", required=True)
    qo.add_parser("stats", parents=[qo_opt]).set_defaults(func=cmd_qo_stats)

    tree = sub.add_parser("tree", help="compare trees").add_subparsers(dest="action", required=True)
    p = tree.add_parser("cmp", parents=[qo_opt], help="is LEFT below RIGHT?")
    p.add_argument("--kruskal", action="store_true", help="use the infimum-preserving order")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_tree_cmp)

    seq = sub.add_parser("seq", help="compare sequences").add_subparsers(dest="action", required=True)
    p = seq.add_parser("cmp", parents=[qo_opt], help="does LEFT embed into RIGHT?")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_seq_cmp)

    p = sub.add_parser("convert", parents=[qo_opt], help="map between trees and sequences")
    p.add_argument("direction", choices=["tree2seq", "seq2tree"])
    p.add_argument("expr")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("otype", parents=[qo_opt], help="maximal order type")
    p.add_argument("target", choices=["qo", "tf", "seq"])
    p.set_defaults(func=cmd_otype)

    eps = sub.add_parser("eps", help="epsilon notation").add_subparsers(dest="action", required=True)
    p = eps.add_parser("cmp", parents=[omega_opt], help="compare two terms")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_eps_cmp)
    p = eps.add_parser("totree", parents=[omega_opt], help="tree of a term")
    p.add_argument("term")
    p.set_defaults(func=cmd_eps_totree)

    p = sub.add_parser("check", parents=[qo_opt, omega_opt], help="run a randomized or exhaustive property suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--seed", type=int, default=0, metavar="N")
    p.add_argument("--cases", type=int, metavar="N")
    p.add_argument("--max-size", type=int, metavar="N")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
