"""Command-line front end: ``hyperlat {orientations,check,export,fiber,verify}``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import config
from .hypergraph import Hypergraph, HypergraphError, as_interval
from .hyperlattice import (
    acyclic_orientations,
    flip_graph,
    pair_index_orientation,
    pair_indices,
    poset_of,
)
from .io import graph_to_dot, load_hypergraph, parse_compact_hypergraph, poset_to_obj
from .orientations import OrientationError, is_acyclic, parse_orientation
from .poset import PosetError
from .verify import ALL_CHECKS, RunReport, check_instance, run_verify
from .weak_order import (
    fiber,
    fiber_bounds,
    format_permutation,
    inversions,
    orient,
    parse_permutation,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class CliError(Exception):
    pass


def _hypergraph(args: argparse.Namespace) -> Hypergraph:
    if args.input and args.hypergraph:
        raise CliError("give either --input or --hypergraph, not both")
    if args.input:
        return load_hypergraph(args.input)
    if args.hypergraph:
        return parse_compact_hypergraph(args.hypergraph)
    raise CliError("a hypergraph is required (--input PATH or --hypergraph EDGES)")


def _emit(text: str, out: str | None = None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _yes_no(value: object) -> str:
    if isinstance(value, bool):
        return "YES" if value else "NO"
    return str(value)


def _report_text(report: RunReport) -> str:
    lines = [f"instance: {report.instance}"]
    for c in report.checks:
        lines.append(f"{c.name}: {_yes_no(c.oracle)} (oracle) / {_yes_no(c.characterization)} "
                     f"(characterization) {'MATCH' if c.match else 'MISMATCH'}")
    if report.ms is not None:
        lines.append(f"time: {report.ms} ms")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# subcommands


def cmd_orientations(args: argparse.Namespace) -> int:
    H = _hypergraph(args)
    elems = acyclic_orientations(H)
    if args.format == "json":
        _emit(json.dumps({"instance": H.describe(), "count": len(elems),
                          "orientations": [list(O.choice) for O in elems]}) + "\n")
    else:
        body = "".join(f"{O}\n" for O in elems)
        _emit(f"{len(elems)} acyclic orientation{'s' if len(elems) != 1 else ''}\n{body}")
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    H = _hypergraph(args)
    if as_interval(H) is None:
        # criteria are stated for interval hypergraphs only
        sys.stderr.write("warning: not an interval hypergraph; reporting oracle verdicts only\n")
        P = poset_of(H, "flips")
        lattice = P.is_lattice()
        verdicts = {"lattice": lattice}
        if lattice:
            verdicts.update(distributive=P.is_distributive(),
                            **{"join-semidistributive": P.is_join_semidistributive(),
                               "meet-semidistributive": P.is_meet_semidistributive()})
        if args.format == "json":
            _emit(json.dumps({"instance": H.describe(), "oracle": verdicts}) + "\n")
        else:
            lines = [f"instance: {H.describe()}"]
            lines += [f"{k}: {_yes_no(v)} (oracle)" for k, v in verdicts.items()]
            _emit("\n".join(lines) + "\n")
        return EXIT_OK
    report = check_instance(H, samples=args.samples, seed=args.seed, timing=args.timing)
    if args.format == "json":
        _emit(json.dumps(report.to_obj()) + "\n")
    else:
        _emit(_report_text(report))
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_export(args: argparse.Namespace) -> int:
    H = _hypergraph(args)
    if args.target == "flipgraph":
        elems, arcs = flip_graph(H)
        labels = [str(O) for O in elems]
        edges = [(a, b) for a, b, _, _ in arcs]
        if args.format == "json":
            text = json.dumps({"elements": labels, "arcs": [[a, b, i, j] for a, b, i, j in arcs]}, indent=2) + "\n"
        else:
            text = graph_to_dot(labels, edges, name="flips", edge_labels=[f"{i}->{j}" for _, _, i, j in arcs])
    else:
        P = poset_of(H)
        if args.target == "irreducibles":
            if not P.is_lattice():
                raise CliError(f"the poset of {H.describe()} is not a lattice")
            sub = P.subposet(P.join_irreducibles())
            if as_interval(H) is not None:
                names = {pair_index_orientation(H, p): f"pair({p.i},{p.j})={pair_index_orientation(H, p)}"
                         for p in pair_indices(H)}
                sub = type(sub)(sub.leq, sub.elements, [names.get(e, str(e)) for e in sub.elements])
            P = sub
        if args.format == "json":
            text = json.dumps(poset_to_obj(P), indent=2) + "\n"
        else:
            text = graph_to_dot(P.labels, P.covers(), name=args.target)
    _emit(text, args.output)
    return EXIT_OK


def _weak_extremes(perms: Sequence[tuple[int, ...]]) -> tuple[str, str]:
    invs = [inversions(p) for p in perms]
    lows = [p for p, s in zip(perms, invs) if all(s <= t for t in invs)]
    highs = [p for p, s in zip(perms, invs) if all(t <= s for t in invs)]
    return (format_permutation(lows[0]) if lows else "none",
            format_permutation(highs[0]) if highs else "none")


def cmd_fiber(args: argparse.Namespace) -> int:
    H = _hypergraph(args)
    text = args.target.strip()
    given_perm = not text.startswith("(")
    A = orient(parse_permutation(text), H) if given_perm else parse_orientation(H, text)
    if not is_acyclic(A):
        raise CliError(f"{A} is cyclic; its fiber is empty")
    members = fiber(A)
    if as_interval(H) is not None:
        lo, hi = (format_permutation(p) for p in fiber_bounds(A))
    else:
        lo, hi = _weak_extremes(members)
    if args.format == "json":
        _emit(json.dumps({"orientation": list(A.choice), "fiber": [format_permutation(p) for p in members],
                          "min": lo, "max": hi}) + "\n")
    else:
        lines = [f"orientation: {A}", f"fiber: {len(members)} permutation{'s' if len(members) != 1 else ''}"]
        lines += [format_permutation(p) for p in members]
        lines += [f"min: {lo}", f"max: {hi}"]
        _emit("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    checks = ALL_CHECKS if not args.checks else tuple(c.strip() for c in args.checks.split(",") if c.strip())
    unknown = set(checks) - set(ALL_CHECKS)
    if unknown:
        raise CliError(f"unknown checks {sorted(unknown)}; choose from {', '.join(ALL_CHECKS)}")
    total = mismatched = 0
    for report in run_verify(args.nmax, nmin=args.nmin, jobs=args.jobs, checks=checks, seed=args.seed,
                             samples=args.samples, allow_large=args.allow_large, timing=args.timing):
        total += 1
        bad = report.mismatches()
        mismatched += bool(bad)
        if args.format == "json":
            sys.stdout.write(json.dumps(report.to_obj()) + "\n")
        elif bad or args.verbose:
            sys.stdout.write(_report_text(report))
    summary = f"{total} instances, {mismatched} with mismatches"
    if args.format == "json":
        sys.stderr.write(summary + "\n")
    else:
        sys.stdout.write(summary + "\n")
    return EXIT_MISMATCH if mismatched else EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperlat", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("--input", metavar="PATH", help='hypergraph JSON file ("-" for stdin)')
        p.add_argument("--hypergraph", metavar="EDGES", help='inline hypergraph such as "4:123,134"')

    p = sub.add_parser("orientations", help="list acyclic orientations")
    with_input(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_orientations)

    p = sub.add_parser("check", help="lattice property verdicts, oracle against characterization")
    with_input(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, help="sample permutation pairs in the morphism checks")
    p.add_argument("--samples", type=int, help="number of sampled pairs (default all pairs)")
    p.add_argument("--timing", action="store_true", help="report elapsed milliseconds")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("export", help="write the poset, flip graph or irreducibles as DOT or JSON")
    with_input(p)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--target", choices=("poset", "flipgraph", "irreducibles"), default="poset")
    p.add_argument("--output", metavar="PATH", help="write here instead of stdout")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("fiber", help="permutations mapping to an orientation")
    with_input(p)
    p.add_argument("target", help='orientation like "(2,4)" or permutation like 4132')
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_fiber)

    p = sub.add_parser("verify", help="exhaustive cross-check over all interval hypergraphs")
    p.add_argument("--nmax", type=int, default=config.EXHAUSTIVE_MAX_N)
    p.add_argument("--nmin", type=int, help="smallest ground set (default: only n = nmax)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, help="sample pairs in the morphism checks with this seed")
    p.add_argument("--samples", type=int, help="sampled pairs per morphism check (default 2000 with --seed)")
    p.add_argument("--allow-large", action="store_true", help=f"permit n up to {config.EXHAUSTIVE_HARD_MAX_N}")
    p.add_argument("--checks", metavar="LIST", help="comma-separated subset of: " + ",".join(ALL_CHECKS))
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--timing", action="store_true")
    p.add_argument("--verbose", action="store_true", help="print every instance, not only mismatches")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CliError, HypergraphError, OrientationError, PosetError, ValueError, OSError) as exc:
        sys.stderr.write(f"hyperlat: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
