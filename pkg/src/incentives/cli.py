"""Command-line front door.

Commands map one-to-one onto library operations; output is plain text by
default with --format=json (and =dot for trees) as machine forms.  Exit
status 0 means success, 1 a domain error (reported in one line on
standard error) or a failed verification, 2 a usage error.  All output
for a fixed command line is byte-deterministic.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from typing import IO

from .closure import (
    MULTIPLE,
    TRIVIAL,
    ClosureResult,
    closure_membership,
    closure_msg,
    is_admissible,
    is_incentive,
    theta,
)
from .errors import DomainError
from .monoid import MAX_INPUT, membership
from .sequences import SequenceModel, invoice, m_ab_membership, m_ab_set, verify_theorem5
from .tree import (
    MAX_DEPTH,
    MAX_FROBENIUS,
    MAX_GENUS,
    EnumerationBound,
    IncentiveTree,
    brute_force_family,
    decompose,
    enumerate_tree,
)


def parse_set(literal: str) -> tuple[int, ...]:
    """Comma-separated integers -> sorted deduplicated tuple."""
    vals = set()
    for tok in literal.split(","):
        try:
            v = int(tok.strip())
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {tok.strip()!r}")
        if abs(v) > MAX_INPUT:
            raise argparse.ArgumentTypeError(f"magnitude above 2**31: {v}")
        vals.add(v)
    return tuple(sorted(vals))


def parse_seq(literal: str) -> tuple[int, ...]:
    """Comma-separated integers kept in order with repeats (for sequences)."""
    out = []
    for tok in literal.split(","):
        try:
            v = int(tok.strip())
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {tok.strip()!r}")
        if abs(v) > MAX_INPUT:
            raise argparse.ArgumentTypeError(f"magnitude above 2**31: {v}")
        out.append(v)
    return tuple(out)


def _positive_int(literal: str) -> int:
    try:
        v = int(literal)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {literal!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {v}")
    return v


def _bounded_int(literal: str) -> int:
    try:
        v = int(literal)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {literal!r}")
    if abs(v) > MAX_INPUT:
        raise argparse.ArgumentTypeError(f"magnitude above 2**31: {v}")
    return v


def _nonneg_int(literal: str) -> int:
    v = _bounded_int(literal)
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {v}")
    return v


def _add_bound_flags(sp: argparse.ArgumentParser) -> None:
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--max-frobenius", type=_nonneg_int, default=None)
    group.add_argument("--max-genus", type=_nonneg_int, default=None)
    group.add_argument("--max-depth", type=_nonneg_int, default=None)


def _bound_from(ns: argparse.Namespace) -> EnumerationBound:
    if ns.max_frobenius is not None:
        return EnumerationBound(MAX_FROBENIUS, ns.max_frobenius)
    if ns.max_depth is not None:
        return EnumerationBound(MAX_DEPTH, ns.max_depth)
    return EnumerationBound(MAX_GENUS, ns.max_genus if ns.max_genus is not None else 20)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="incentives",
        description="Monoids of invoice totals under adjustment constraints.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("theta", help="offset threshold of a constraint set")
    sp.add_argument("--c", type=parse_set, required=True)

    sp = sub.add_parser("admissible", help="can any qualifying monoid contain the seeds?")
    sp.add_argument("--c", type=parse_set, required=True)
    sp.add_argument("--x", type=parse_set, required=True)

    sp = sub.add_parser("check-incentive", help="does the monoid of --gens honour --c?")
    sp.add_argument("--gens", type=parse_set, required=True)
    sp.add_argument("--c", type=parse_set, required=True)

    sp = sub.add_parser("closure", help="smallest qualifying monoid containing the seeds")
    sp.add_argument("--c", type=parse_set, required=True)
    sp.add_argument("--x", type=parse_set, required=True)
    sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("membership", help="membership of --n in a monoid or closure")
    sp.add_argument("--n", type=_bounded_int, required=True)
    sp.add_argument("--gens", type=parse_set)
    sp.add_argument("--c", type=parse_set)
    sp.add_argument("--x", type=parse_set)

    sp = sub.add_parser("tree", help="tree of numerical semigroups honouring --c")
    sp.add_argument("--c", type=parse_set, required=True)
    sp.add_argument("--x", type=parse_set)
    _add_bound_flags(sp)
    sp.add_argument("--format", choices=("text", "json", "dot"), default="text")
    sp.add_argument("--threads", type=_positive_int, default=1)
    sp.add_argument("--debug-checks", action="store_true")

    sp = sub.add_parser("decompose", help="slice all qualifying monoids by gcd divisor")
    sp.add_argument("--c", type=parse_set, required=True)
    sp.add_argument("--x", type=parse_set)
    _add_bound_flags(sp)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--threads", type=_positive_int, default=1)
    sp.add_argument("--debug-checks", action="store_true")

    mab = sub.add_parser("mab", help="purchase/adjustment sequence model")
    mabsub = mab.add_subparsers(dest="action", required=True)
    sp = mabsub.add_parser("invoice", help="total of one sequence")
    sp.add_argument("--a", type=parse_set, required=True)
    sp.add_argument("--b", type=parse_set, required=True)
    sp.add_argument("--seq", type=parse_seq, required=True)
    sp = mabsub.add_parser("member", help="is --n an achievable total?")
    sp.add_argument("--a", type=parse_set, required=True)
    sp.add_argument("--b", type=parse_set, required=True)
    sp.add_argument("--n", type=_bounded_int, required=True)
    sp = mabsub.add_parser("set", help="achievable totals up to --bound")
    sp.add_argument("--a", type=parse_set, required=True)
    sp.add_argument("--b", type=parse_set, required=True)
    sp.add_argument("--bound", type=_nonneg_int, required=True)
    sp.add_argument("--format", choices=("text", "json"), default="text")

    ver = sub.add_parser("verify", help="cross-checks between independent engines")
    versub = ver.add_subparsers(dest="action", required=True)
    sp = versub.add_parser("theorem5", help="sequence totals equal the closure")
    sp.add_argument("--a", type=parse_set, required=True)
    sp.add_argument("--b", type=parse_set, required=True)
    sp.add_argument("--bound", type=_nonneg_int, required=True)
    sp = versub.add_parser("tree", help="tree enumeration equals brute force")
    sp.add_argument("--c", type=parse_set, required=True)
    sp.add_argument("--max-frobenius", type=_nonneg_int, required=True)
    sp = versub.add_parser("closure-agreement", help="both closure engines agree")
    sp.add_argument("--c", type=parse_set, required=True)
    sp.add_argument("--x", type=parse_set, required=True)
    sp.add_argument("--bound", type=_nonneg_int, required=True)

    return p


def _fmt_vals(vals) -> str:
    return ",".join(str(v) for v in vals)


def _bool_text(v: bool) -> str:
    return "true" if v else "false"


def _closure_text(r: ClosureResult) -> str:
    if r.kind == TRIVIAL:
        return "trivial: {0}"
    sg = r.semigroup
    head = f"msg: {_fmt_vals(r.msg.elements)}"
    if r.kind == MULTIPLE:
        return (
            f"{head} | scale: {r.scale} | reduced msg: {_fmt_vals(sg.msg.elements)}"
            f" | reduced frobenius: {sg.frobenius} | reduced genus: {sg.genus}"
        )
    return f"{head} | frobenius: {sg.frobenius} | genus: {sg.genus}"


def _closure_json(r: ClosureResult) -> dict:
    sg = r.semigroup
    return {
        "kind": r.kind,
        "scale": r.scale,
        "msg": list(r.msg.elements) if r.msg else None,
        "reduced": None
        if sg is None
        else {
            "msg": list(sg.msg.elements),
            "frobenius": sg.frobenius,
            "genus": sg.genus,
        },
    }


def _tree_text(tree: IncentiveTree) -> str:
    kids: dict[int, list] = {}
    for n in tree.nodes[1:]:
        kids.setdefault(id(n.parent), []).append(n)
    lines = []
    if tree.root is not None:
        stack = [(tree.root, 0)]
        while stack:
            n, depth = stack.pop()
            sg = n.semigroup
            label = f"{sg} frobenius={sg.frobenius} genus={sg.genus}"
            if n.removed_generator is not None:
                label = f"remove {n.removed_generator} -> {label}"
            lines.append("  " * depth + label)
            for child in reversed(kids.get(id(n), [])):
                stack.append((child, depth + 1))
    lines.append(f"nodes={tree.node_count} truncated={_bool_text(tree.truncated)}")
    return "\n".join(lines)


def _print_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _dispatch(ns: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    cmd = ns.command

    if cmd == "theta":
        print(theta(ns.c))
        return 0

    if cmd == "admissible":
        print(_bool_text(is_admissible(ns.x, ns.c)))
        return 0

    if cmd == "check-incentive":
        print(_bool_text(is_incentive(ns.gens, ns.c)))
        return 0

    if cmd == "closure":
        r = closure_msg(ns.x, ns.c)
        if ns.format == "json":
            _print_json(_closure_json(r))
        else:
            print(_closure_text(r))
        return 0

    if cmd == "membership":
        if ns.gens is not None:
            if ns.c is not None or ns.x is not None:
                parser.error("membership takes either --gens or --c with --x, not both")
            print(_bool_text(membership(ns.gens, ns.n)))
        else:
            if ns.c is None or ns.x is None:
                parser.error("membership needs --gens, or --c together with --x")
            print(_bool_text(closure_membership(ns.x, ns.c, ns.n)))
        return 0

    if cmd == "tree":
        tree = enumerate_tree(
            ns.c, ns.x, _bound_from(ns), threads=ns.threads, debug=ns.debug_checks
        )
        if ns.format == "json":
            print(tree.to_json())
        elif ns.format == "dot":
            print(tree.to_dot(), end="")
        else:
            print(_tree_text(tree))
        return 0

    if cmd == "decompose":
        dec = decompose(
            ns.c, ns.x, _bound_from(ns), threads=ns.threads, debug=ns.debug_checks
        )
        if ns.format == "json":
            _print_json(
                {
                    "includes_trivial": dec.includes_trivial,
                    "slices": {str(d): t.to_json_dict() for d, t in dec.trees.items()},
                }
            )
        else:
            print(f"includes trivial monoid: {_bool_text(dec.includes_trivial)}")
            for d in sorted(dec.trees):
                print(f"divisor {d}:")
                for line in _tree_text(dec.trees[d]).splitlines():
                    print("  " + line)
        return 0

    if cmd == "mab":
        model = SequenceModel.of(ns.a, ns.b)
        if ns.action == "invoice":
            print(invoice(model, list(ns.seq)))
        elif ns.action == "member":
            print(_bool_text(m_ab_membership(model, ns.n)))
        else:
            vals = m_ab_set(model, ns.bound)
            if ns.format == "json":
                _print_json(vals)
            else:
                print(_fmt_vals(vals))
        return 0

    if cmd == "verify":
        if ns.action == "theorem5":
            ok = verify_theorem5(SequenceModel.of(ns.a, ns.b), ns.bound)
        elif ns.action == "tree":
            tree = enumerate_tree(
                ns.c, None, EnumerationBound(MAX_FROBENIUS, ns.max_frobenius)
            )
            ok = {n.semigroup.msg.elements for n in tree.nodes} == set(
                brute_force_family(ns.c, ns.max_frobenius)
            )
        else:
            ok = all(
                closure_membership(ns.x, ns.c, n) == closure_msg(ns.x, ns.c).member(n)
                for n in range(ns.bound + 1)
            )
        print(f"verified: {_bool_text(ok)}")
        return 0 if ok else 1

    parser.error(f"unknown command {cmd!r}")
    return 2


def run(argv: list[str], stdout: IO[str] | None = None, stderr: IO[str] | None = None) -> int:
    """Parse and execute one command line; returns the exit status."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        parser = build_parser()
        try:
            ns = parser.parse_args(argv)
        except SystemExit as exc:
            return exc.code if isinstance(exc.code, int) else 2
        try:
            return _dispatch(ns, parser)
        except SystemExit as exc:
            return exc.code if isinstance(exc.code, int) else 2
        except DomainError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
