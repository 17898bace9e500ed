"""Command line interface.  Output is tab-delimited; vertices and positions print 1-based."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import exclusion as ex
from .core import (
    FAMILY_KINDS,
    InternalError,
    InvalidArgument,
    Tournament,
    all_labelled,
    make_family,
    members,
    read_tournaments,
    to_mask,
)
from .growth import grow_by_one, grow_by_two
from .harness import SUITES, enumerate_canonical, verify
from .homog import decompose, find_nontrivial_module, is_prime
from .matching import find_matching_ordering, is_minimal_non_matching, matching_report
from .triangles import cyclic_triangles, is_triangle_connected, triangle_components

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _one_based(vs: Sequence[int]) -> str:
    return ",".join(str(v + 1) for v in vs)


def _read(path: str) -> list[Tournament]:
    try:
        if path == "-":
            return list(read_tournaments(sys.stdin))
        with open(path) as fh:
            return list(read_tournaments(fh))
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from e


def _parse_indices(text: str, n: int) -> int:
    try:
        idx = [int(x) - 1 for x in text.split(",") if x.strip()]
    except ValueError as e:
        raise UsageError(f"bad index list {text!r}") from e
    if any(not 0 <= i < n for i in idx):
        raise UsageError(f"indices must lie in 1..{n}")
    return to_mask(idx)


def _plot_dir(path: str | None) -> Path | None:
    if path is None:
        return None
    d = Path(path)
    d.mkdir(parents=True, exist_ok=True)
    return d


# ---------------------------------------------------------------- commands

def cmd_gen(args, out) -> int:
    if args.family:
        out.write(make_family(args.family, args.n).to_line() + "\n")
        return EXIT_OK
    if args.canonical:
        ts = enumerate_canonical(args.n)
    else:
        if args.n > 7:
            raise UsageError("labelled generation is limited to n <= 7; use --canonical")
        ts = all_labelled(args.n)
    for t in ts:
        out.write(t.to_line() + "\n")
    return EXIT_OK


def cmd_prime(args, out) -> int:
    for t in _read(args.input):
        if is_prime(t):
            out.write(f"{t}\tprime\t-\n")
        else:
            out.write(f"{t}\tdecomposable\t{_one_based(members(find_nontrivial_module(t)))}\n")
    return EXIT_OK


def cmd_decompose(args, out) -> int:
    for t in _read(args.input):
        out.write(f"{t}\t{decompose(t).to_text(base=1)}\n")
    return EXIT_OK


def cmd_grow(args, out) -> int:
    for t in _read(args.input):
        h = _parse_indices(args.h, t.n)
        if args.by_one:
            s = grow_by_one(t, h)
        else:
            u, v = grow_by_two(t, h)
            s = h | 1 << u | 1 << v
        out.write(f"{t}\t{_one_based(members(s))}\n")
    return EXIT_OK


def cmd_triangles(args, out) -> int:
    for t in _read(args.input):
        comps = triangle_components(t)
        verdict = "connected" if is_triangle_connected(t) else "not-connected"
        out.write(f"{t}\t{len(cyclic_triangles(t))}\t{len(comps)}\t{verdict}\n")
    return EXIT_OK


def cmd_matching(args, out) -> int:
    plots = _plot_dir(args.plot)
    for k, t in enumerate(_read(args.input)):
        shown = None
        if args.find:
            o = find_matching_ordering(t)
            out.write(f"{t}\t{_one_based(o) if o else 'none'}\n")
            shown = o
        elif args.count:
            out.write(f"{t}\t{matching_report(t, limit=0).count}\n")
        elif args.enumerate:
            rep = matching_report(t, limit=10 ** 6)
            out.write(f"{t}\t{rep.count}\n")
            for o in rep.witnesses:
                out.write(f"\t{_one_based(o)}\n")
            shown = list(rep.witnesses[0]) if rep.witnesses else None
        else:
            out.write(f"{t}\t{'minimal' if is_minimal_non_matching(t) else 'not-minimal'}\n")
        if plots is not None and shown:
            from .plotting import plot_backedges

            plot_backedges(t, shown, plots / f"matching_{k + 1}.png", title=t.to_line())
    return EXIT_OK


def cmd_exclude(args, out) -> int:
    kind = ex.PatternKind(args.pattern, args.size)
    for t in _read(args.input):
        if args.check:
            w = ex.has_pattern(t, kind)
            out.write(f"{t}\t{kind}\t{'absent' if w is None else _one_based(members(w))}\n")
        elif args.order:
            if kind.kind is not ex.Pattern.J:
                raise UsageError("--order needs --pattern J")
            order, length = ex.bounded_backedge_ordering(t, args.size)
            out.write(f"{t}\t{_one_based(order)}\t{length}\n")
        else:
            d = ex.kn_free_decompose(t)
            parts = "\t".join(_one_based(members(p)) for p in d.parts)
            out.write(f"{t}\t{d}\t{parts}\n")
            if kind.kind is not ex.Pattern.J:
                r = ex.noKn_construct(t, args.size, threshold=args.threshold)
                fields = ["", "construction", r.reason, f"r={r.r}"]
                fields += [_one_based(members(b)) for b in r.layout()]
                out.write("\t".join(fields) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    ids = list(SUITES) if args.theorem == "all" else [args.theorem]
    plots = _plot_dir(args.plot)
    status = EXIT_OK
    for i, tid in enumerate(ids):
        rep = verify(tid, args.max_n, jobs=args.jobs)
        if i:
            out.write("\n")
        out.write(rep.to_text() + "\n")
        if plots is not None:
            from .plotting import plot_report

            plot_report(rep, plots / f"{tid}.png")
        if not rep.passed:
            status = EXIT_FAIL
    return status


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tournaments", description="Exact computations on small tournaments.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write tournament lines")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--canonical", action="store_true", help="one line per isomorphism class")
    g.add_argument("--family", choices=FAMILY_KINDS, help="write the named family member instead")
    g.set_defaults(func=cmd_gen)

    def with_input(name, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--in", dest="input", required=True, help="file of tournament lines, '-' for stdin")
        return sp

    with_input("prime", "primality and a smallest nontrivial module").set_defaults(func=cmd_prime)
    with_input("decompose", "substitution decomposition trees").set_defaults(func=cmd_decompose)

    gr = with_input("grow", "grow a prime subtournament")
    gr.add_argument("--h", required=True, help="comma-separated 1-based vertices")
    mode = gr.add_mutually_exclusive_group()
    mode.add_argument("--by-one", action="store_true")
    mode.add_argument("--by-two", action="store_true")
    gr.set_defaults(func=cmd_grow)

    with_input("triangles", "cyclic triangle counts and components").set_defaults(func=cmd_triangles)

    m = with_input("matching", "matching orderings")
    mm = m.add_mutually_exclusive_group(required=True)
    for flag in ("--find", "--count", "--enumerate", "--minimal"):
        mm.add_argument(flag, action="store_true")
    m.add_argument("--plot", metavar="DIR", help="also draw the ordering's backedges")
    m.set_defaults(func=cmd_matching)

    e = with_input("exclude", "J/K/K* patterns and the structures they force")
    e.add_argument("--pattern", choices=[k.value for k in ex.Pattern], required=True)
    e.add_argument("--size", type=int, required=True)
    e.add_argument("--threshold", type=int, default=4, help="size threshold exponent for the weave construction")
    em = e.add_mutually_exclusive_group(required=True)
    for flag in ("--check", "--order", "--structure"):
        em.add_argument(flag, action="store_true")
    e.set_defaults(func=cmd_exclude)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--theorem", required=True, choices=list(SUITES) + ["all"], metavar="ID")
    v.add_argument("--max-n", type=int, default=None)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--plot", metavar="DIR", help="write a per-size bar chart for each report")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args, out)
    except (UsageError, InvalidArgument) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except InternalError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
