"""Command line interface.

Exit codes: 0 success / property holds, 1 property fails, 2 usage, parse or
schema error, 3 resource limit. ``FILE`` may also be ``fixture:NAME`` to use
a bundled machine.
"""

import argparse
import os
import sys
from unittest.mock import patch

from . import analysis, behavior, domino, io
from .errors import AlcaError, ResourceLimit
from .fixtures import fixture_bytes
from .machine import Lasso, lasso_member, parse_word, trim

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


def _load(path):
    if path.startswith("fixture:"):
        return io.parse_machine(fixture_bytes(path.split(":", 1)[1]))
    return io.read_machine(path)


def _load_trim(path):
    return trim(_load(path))


def _emit(data, out):
    if out in (None, "-"):
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        with open(out, "wb") as f:
            f.write(data)


def _print_verdict(v, alphabet):
    print("holds" if v.holds else "fails")
    if v.witness is not None:
        print(v.witness.text(alphabet))


def _words_line(head, ws, alphabet):
    words = " ".join(ws.texts(alphabet))
    return f"{head}: {words}" if words else f"{head}:"


def cmd_validate(args):
    m = _load(args.file)
    print(f"ok: {m.kind}, {len(m.states)} states, {len(m.transitions)} transitions")
    return EXIT_OK


def cmd_trim(args):
    _emit(io.serialize_machine(_load_trim(args.file)), args.output)
    return EXIT_OK


def cmd_dominoes(args):
    m = _load_trim(args.file)
    if args.window:
        t1, t2 = args.window
        print(_words_line(f"t=[{t1},{t2}]", domino.restrict(m, t1, t2), m.alphabet))
        return EXIT_OK
    profile = domino.domino_profile(m, args.l)
    for t, ws in enumerate(profile.prefix_sets):
        print(_words_line(f"t={t}", ws, m.alphabet))
    for i, ws in enumerate(profile.cycle_sets):
        t = profile.start + i
        label = f"t>={t} (mod {profile.period} ≡ {t % profile.period})"
        print(_words_line(label, ws, m.alphabet))
    return EXIT_OK


def cmd_approximate(args):
    m = _load_trim(args.file)
    result = analysis.approximation(m, args.l, args.kind)
    _emit(io.serialize_machine(result), args.output)
    if args.dot:
        _emit(io.export_dot(result), args.dot)
    return EXIT_OK


def cmd_check(args):
    m = _load_trim(args.file)
    report = (analysis.is_sync_l_complete if args.kind == "sync"
              else analysis.is_async_l_complete)(m, args.l)
    print(f"{args.kind} {args.l}-complete: {'holds' if report.holds else 'fails'}")
    if report.witness is not None:
        print(report.witness.text(m.alphabet))
    return EXIT_OK if report.holds else EXIT_FAIL


def cmd_minimal_l(args):
    m = _load_trim(args.file)
    found = analysis.minimal_l(m, args.kind, args.max)
    if found is None:
        print(f"none ≤ {args.max}")
        return EXIT_FAIL
    print(found)
    return EXIT_OK


def cmd_invariance(args):
    m = _load_trim(args.file)
    check = behavior.is_strictly_time_invariant if args.strict else behavior.is_time_invariant
    v = check(m)
    _print_verdict(v, m.alphabet)
    return EXIT_OK if v.holds else EXIT_FAIL


def cmd_compare(args):
    a = _load_trim(args.file1)
    b = _load_trim(args.file2)
    # --inclusion asks whether behavior(FILE1) ⊆ behavior(FILE2)
    v = behavior.equivalent(a, b) if args.equivalence else behavior.includes(b, a)
    _print_verdict(v, a.alphabet)
    return EXIT_OK if v.holds else EXIT_FAIL


def cmd_member(args):
    m = _load_trim(args.file)
    w = Lasso(parse_word(args.prefix, m.alphabet), parse_word(args.cycle, m.alphabet))
    holds = lasso_member(m, w)
    print("member" if holds else "not a member")
    return EXIT_OK if holds else EXIT_FAIL


def cmd_export_dot(args):
    _emit(io.export_dot(_load(args.file)), args.output)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="alca", description=__doc__.splitlines()[0])
    parser.add_argument("--node-budget", type=int, default=None,
                        help="product node budget for inclusion checks (env ALCA_NODE_BUDGET)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate a machine file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("trim", help="write the trimmed machine")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_trim)

    p = sub.add_parser("dominoes", help="print the domino profile t -> B|[t,t+l]")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--window", type=int, nargs=2, metavar=("T1", "T2"))
    p.add_argument("file")
    p.set_defaults(func=cmd_dominoes)

    p = sub.add_parser("approximate", help="build the strongest l-complete approximation")
    p.add_argument("--kind", choices=analysis.KINDS, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.add_argument("--dot")
    p.set_defaults(func=cmd_approximate)

    p = sub.add_parser("check", help="decide l-completeness")
    p.add_argument("--kind", choices=analysis.KINDS, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("minimal-l", help="least l for which the behavior is l-complete")
    p.add_argument("--kind", choices=analysis.KINDS, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_minimal_l)

    p = sub.add_parser("invariance", help="decide (strict) time invariance")
    p.add_argument("--strict", action="store_true")
    p.add_argument("file")
    p.set_defaults(func=cmd_invariance)

    p = sub.add_parser("compare", help="behavior inclusion FILE1 ⊆ FILE2 or equivalence")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--inclusion", action="store_true")
    mode.add_argument("--equivalence", action="store_true")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("member", help="lasso membership prefix·cycle^ω")
    p.add_argument("--prefix", default="")
    p.add_argument("--cycle", required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("export-dot", help="write a Graphviz rendering")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    env = {} if args.node_budget is None else {"ALCA_NODE_BUDGET": str(args.node_budget)}
    try:
        with patch.dict(os.environ, env):
            return args.func(args)
    except ResourceLimit as exc:
        print(f"alca: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (AlcaError, OSError, KeyError, ValueError) as exc:
        print(f"alca: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
