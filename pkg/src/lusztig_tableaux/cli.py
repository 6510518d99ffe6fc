"""Command-line interface.

Every verb reads JSON from standard input (or ``--input``) and writes JSON to
standard output (or ``--output``).  Errors are reported as ``{"error": ...}``
on standard error with exit status 2.
"""
from __future__ import annotations

import argparse
import json
import sys

from .crystalgraph import (
    DatumFamily,
    GraphTooLarge,
    TableauFamily,
    highest_weight_graph,
    infinity_graph,
    to_dot,
    to_json,
)
from .embedding import embed, transition
from .lusztig import LusztigDatum, Quiver, apply_direct, apply_tensor
from .rsk import BiwordMatrix, skew_rsk, skew_rsk_inverse
from .tableaux import UNBARRED, Alphabet, Tableau
from .verify import run_suites


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    """Reports argument errors as JSON, like every other failure."""

    def error(self, message):
        _report(message, "UsageError")
        sys.exit(2)


def _report(message: str, kind: str) -> None:
    print(json.dumps({"error": message, "type": kind}), file=sys.stderr)


def _quiver(text: str) -> Quiver:
    try:
        return Quiver.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _partition(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}") from None


def _read(args):
    src = open(args.input) if args.input else sys.stdin
    try:
        return json.load(src)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON input: {exc}") from None
    finally:
        if args.input:
            src.close()


def _write(args, payload) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _tableau_input(data, n: int) -> Tableau:
    """A tableau JSON object, or a bare list of rows over ``[n]``."""
    if isinstance(data, list):
        return Tableau.normal(data, Alphabet(UNBARRED, n)).validate()
    if not isinstance(data, dict):
        raise UsageError("expected a tableau object or a list of rows")
    return Tableau.from_json(data)


def _datum_input(data, quiver: Quiver | None = None) -> LusztigDatum:
    if not isinstance(data, dict) or "c" not in data:
        raise UsageError('expected a datum object {"n", "sink", "c"}')
    c = LusztigDatum.from_json(data)
    if quiver is not None and c.quiver != quiver:
        raise UsageError(f"datum belongs to quiver {c.quiver}, not {quiver}")
    return c


def cmd_embed(args):
    S = _tableau_input(_read(args), args.quiver.n)
    _write(args, embed(S, args.quiver, args.d).to_json())
    return 0


def cmd_transition(args):
    data = _read(args)
    if isinstance(data, dict) and "sink" not in data:
        data = {**data, "n": args.source.n, "sink": args.source.sink}
    c = _datum_input(data, args.source)
    if args.target.n != c.n:
        raise UsageError("source and target quivers have different n")
    _write(args, transition(c, args.target).to_json())
    return 0


def cmd_lusztig_op(args):
    c = _datum_input(_read(args))
    op = apply_tensor if args.route == "tensor" else apply_direct
    out = op(c, args.i, args.dir)
    _write(args, None if out is None else out.to_json())
    return 0


def cmd_rsk(args):
    data = _read(args)
    if not isinstance(data, dict):
        raise UsageError("expected a JSON object")
    if args.inverse:
        P, Q = Tableau.from_json(data["P"]), Tableau.from_json(data["Q"])
        T, M = skew_rsk_inverse(P, Q)
        _write(args, {"T": T.to_json(), "M": M.to_json()})
    else:
        T, M = Tableau.from_json(data["T"]), BiwordMatrix.from_json(data["M"])
        P, Q = skew_rsk(T, M)
        _write(args, {"P": P.to_json(), "Q": Q.to_json()})
    return 0


def cmd_graph(args):
    if args.quiver is not None:
        if args.depth is None:
            raise UsageError("--depth is required with --quiver")
        fam = DatumFamily(args.quiver, args.route)
        g = infinity_graph(args.quiver, args.depth, args.route, max_nodes=args.max_nodes)
    else:
        if args.shape is None or args.n is None:
            raise UsageError("give --lambda and --n, or --quiver and --depth")
        fam = TableauFamily(args.n)
        g = highest_weight_graph(args.shape, args.n, max_nodes=args.max_nodes)
    _write(args, to_dot(g, fam) if args.format == "dot" else to_json(g, fam))
    return 0


def cmd_verify(args):
    results = run_suites(args.suite)
    lines = [r.line() for r in results]
    for r in results:
        lines.extend("    " + f for f in r.failures)
    _write(args, "\n".join(lines))
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lusztig-tableaux",
                description="Tableau crystals and Lusztig data for single-sink quivers.")
    sub = p.add_subparsers(dest="verb", required=True)

    def io(sp):
        sp.add_argument("--input", help="read JSON from this file instead of stdin")
        sp.add_argument("--output", help="write to this file instead of stdout")

    sp = sub.add_parser("embed", help="Lusztig datum of a tableau")
    sp.add_argument("--quiver", type=_quiver, required=True, metavar="N,R")
    sp.add_argument("--d", type=int, default=None, help="box width (default: first row length)")
    io(sp)
    sp.set_defaults(func=cmd_embed)

    sp = sub.add_parser("transition", help="change the quiver of a datum")
    sp.add_argument("--from", dest="source", type=_quiver, required=True, metavar="N,R")
    sp.add_argument("--to", dest="target", type=_quiver, required=True, metavar="N,R")
    io(sp)
    sp.set_defaults(func=cmd_transition)

    sp = sub.add_parser("lusztig-op", help="apply a raising or lowering operator")
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--dir", choices=("raise", "lower"), required=True)
    sp.add_argument("--route", choices=("direct", "tensor"), default="direct")
    io(sp)
    sp.set_defaults(func=cmd_lusztig_op)

    sp = sub.add_parser("rsk", help="skew RSK on {T, M}, or its inverse on {P, Q}")
    sp.add_argument("--inverse", action="store_true")
    io(sp)
    sp.set_defaults(func=cmd_rsk)

    sp = sub.add_parser("graph", help="crystal graph of B(lambda) or truncated B(infinity)")
    sp.add_argument("--lambda", dest="shape", type=_partition)
    sp.add_argument("--n", type=int)
    sp.add_argument("--quiver", type=_quiver, metavar="N,R")
    sp.add_argument("--depth", type=int)
    sp.add_argument("--route", choices=("direct", "tensor"), default="direct")
    sp.add_argument("--format", choices=("dot", "json"), default="json")
    sp.add_argument("--max-nodes", type=int, default=None)
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_graph, input=None)

    sp = sub.add_parser("verify", help="run property suites")
    sp.add_argument("--suite", nargs="+", default=["all"],
                    choices=("operators", "embedding", "rsk", "transition", "axioms", "all", "thm44", "thm54"),
                    help="thm44 and thm54 are aliases of operators and embedding")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_verify, input=None)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, TypeError, GraphTooLarge, OSError) as exc:
        msg = str(exc) if not isinstance(exc, KeyError) else f"missing field {exc}"
        _report(msg, type(exc).__name__)
        return 2


if __name__ == "__main__":
    sys.exit(main())
