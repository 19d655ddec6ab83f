"""
ToughCycles - Command line

    python -m src.cli classify --graph6 'F~{~w'
    python -m src.cli sweep --n 7 --t 1 --theorem edges_2_1 --workers 8
    geng -c 9 | python -m src.cli scan - --t 1 --theorem rho_2_2

Exit codes: 0 nothing refuted, 1 counterexample or refuted claim, 2 usage or input error.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, TextIO

from . import config
from .catalog import build, check_entry, entry_ids, get_entry
from .closure import bondy_chvatal_closure, hamiltonicity_via_closure
from .degseq import realize
from .errors import ToughCyclesError
from .graph_core import DegreeSequence, Graph, graph6_decode, graph6_encode, read_edgelist, write_edgelist
from .probe import GraphProbe
from .schemas import PropositionId, PropositionStatus, TheoremId, TheoremVerdict
from .spectral import (
    QMode,
    adjacency_spectral_radius,
    q_edge_bound,
    rho_edge_bound,
    signless_laplacian_radius,
    threshold_rows,
    thresholds_csv,
)
from .toughness import find_toughness_violation, parse_fraction, toughness_with_witness, vertex_connectivity
from .verifier import (
    check_supporting_prop,
    classify,
    evaluate_theorem,
    exhaustive_sweep,
    proposition_sweep,
    scan_graph6,
    verify_degree_family,
)

logger = logging.getLogger("toughcycles.cli")

EXIT_OK = 0
EXIT_FOUND = 1
EXIT_USAGE = 2

THEOREM_CHOICES = ["edges_2_1", "rho_2_2", "q_2_3", "ham_rho_2_6", *[t.value for t in TheoremId]]


class UsageError(Exception):
    pass


# ============ Input ============

def _add_graph_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6", help="graph6 string, or '-' to read one from stdin")
    src.add_argument("--edgelist", type=Path, help="edge-list file ('n m' header, one 'u v' per line)")
    src.add_argument("--id", dest="catalog_id", help="catalog entry id")
    src.add_argument("--degrees", help="degree sequence such as '8^11,16^6'; uses its canonical realization")
    p.add_argument("--n", type=int, help="order for parameterized catalog entries")
    p.add_argument("--cycles", help="cycle partition of the 2-factor in P v K_6 entries, e.g. '5,6'")
    p.add_argument("--allow-large", action="store_true", help="lift the toughness size guard")


def _parse_cycles(text: Optional[str]) -> Optional[List[int]]:
    if not text:
        return None
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"--cycles must be comma-separated integers, got {text!r}")


def load_graph(args: argparse.Namespace, stdin: TextIO) -> Graph:
    if args.graph6 is not None:
        text = stdin.readline() if args.graph6 == "-" else args.graph6
        return graph6_decode(text)
    if args.edgelist is not None:
        try:
            return read_edgelist(args.edgelist.read_text())
        except OSError as exc:
            raise UsageError(f"cannot read {args.edgelist}: {exc}")
    if args.catalog_id is not None:
        return build(args.catalog_id, args.n, _parse_cycles(args.cycles))
    return realize(DegreeSequence.parse(args.degrees))


def _theorem(name: str, q_mode: str) -> TheoremId:
    if name == "q_2_3":
        return TheoremId.Q_2_3_PRINTED if QMode(q_mode) is QMode.PRINTED else TheoremId.Q_2_3_CORRECTED
    return TheoremId(name)


def _emit(args: argparse.Namespace, document: dict, out: TextIO) -> None:
    """Write the JSON document to --report and/or stdout (--json)."""
    text = json.dumps(document, indent=2, default=str)
    if getattr(args, "report", None):
        Path(args.report).write_text(text + "\n")
        logger.info(f"report written to {args.report}")
    if getattr(args, "json", False):
        out.write(text + "\n")


def _store(args: argparse.Namespace, report) -> None:
    if not getattr(args, "store", False):
        return
    from .database import archive_session, prepare_archive
    from .helpers import save_report

    prepare_archive()
    with archive_session() as db:
        record = save_report(db, report)
        logger.info(f"report archived as scan #{record.id}")


# ============ Commands ============

def cmd_classify(args, out, stdin) -> int:
    report = classify(load_graph(args, stdin), args.t, args.tol, args.allow_large)
    if args.json or args.report:
        _emit(args, report.model_dump(mode="json"), out)
    if not args.json:
        out.write(f"n={report.n} m={report.m} toughness={report.toughness} delta={report.delta} kappa={report.kappa}\n")
        out.write(f"rho={report.rho.value:.10f} q={report.q.value:.10f} bipartite={report.bipartite}\n")
        out.write(f"hamiltonian={report.hamiltonian} pancyclic={report.pancyclic} cycles={report.cycle_spectrum}\n")
        out.write(f"P({report.t}) holds={report.predicate_p_holds}\n")
        for check in report.theorems:
            out.write(f"  {check.theorem.value:16s} {check.verdict.value:16s} {check.reason or ''}\n")
    found = any(c.verdict is TheoremVerdict.COUNTEREXAMPLE for c in report.theorems)
    return EXIT_FOUND if found else EXIT_OK


def cmd_toughness(args, out, stdin) -> int:
    g = load_graph(args, stdin)
    value, witness = toughness_with_witness(g, args.allow_large)
    out.write(f"toughness {value}\n")
    if witness is not None:
        out.write(f"witness cutset {list(witness)}\n")
    out.write(f"connectivity {vertex_connectivity(g)}\n")
    if args.t is not None:
        t = parse_fraction(args.t)
        violation = find_toughness_violation(g, t, args.allow_large)
        if violation is None:
            out.write(f"{t}-tough: yes\n")
        else:
            out.write(f"{t}-tough: no, cutset {list(violation)}\n")
    return EXIT_OK


def cmd_closure(args, out, stdin) -> int:
    g = load_graph(args, stdin)
    if args.certify is not None:
        cert = hamiltonicity_via_closure(g, args.certify, args.exact_fallback, args.allow_large)
        out.write(f"{cert.verdict.value} via {cert.rule}\n")
        result = cert.closure
    else:
        if args.k is None:
            raise UsageError("closure needs --k or --certify")
        result = bondy_chvatal_closure(g, args.k)
    out.write(f"{result.k}-closure: {len(result.added_edges)} edges added, complete={result.is_complete}\n")
    out.write(graph6_encode(result.graph) + "\n")
    return EXIT_OK


def cmd_spectrum(args, out, stdin) -> int:
    g = load_graph(args, stdin)
    rho = adjacency_spectral_radius(g, args.tol)
    q = signless_laplacian_radius(g, args.tol)
    out.write(f"rho {rho.value:.12f} in [{rho.lower:.12f}, {rho.upper:.12f}] ({rho.iterations} iterations)\n")
    out.write(f"q   {q.value:.12f} in [{q.lower:.12f}, {q.upper:.12f}] ({q.iterations} iterations)\n")
    if g.n >= 2:
        out.write(f"edge bounds: rho <= {rho_edge_bound(g.n, g.m):.12f}, q <= {q_edge_bound(g.n, g.m):.12f}\n")
    return EXIT_OK


def cmd_construct(args, out, stdin) -> int:
    g = build(args.catalog_id, args.n, _parse_cycles(args.cycles))
    out.write(graph6_encode(g) + "\n" if args.format == "graph6" else write_edgelist(g))
    return EXIT_OK


def cmd_verify(args, out, stdin) -> int:
    g = load_graph(args, stdin)
    which = _theorem(args.theorem, args.q_mode)
    check = evaluate_theorem(GraphProbe(g, args.tol, args.allow_large), args.t, which)
    if args.json or args.report:
        _emit(args, check.model_dump(mode="json"), out)
    if not args.json:
        out.write(f"{which.value} t={args.t}: {check.verdict.value}" + (f" ({check.reason})" if check.reason else "") + "\n")
    return EXIT_FOUND if check.verdict is TheoremVerdict.COUNTEREXAMPLE else EXIT_OK


def _summarize_scan(report, out: TextIO) -> None:
    c = report.counts
    out.write(
        f"examined={c.examined} connected={c.connected} hypothesis_met={c.hypothesis_met} "
        f"confirmed={c.confirmed} counterexamples={c.counterexamples} boundary={c.boundary}\n"
    )
    if report.first_counterexample_graph6:
        where = f" (line {report.first_counterexample_line})" if report.first_counterexample_line else ""
        out.write(f"first counterexample{where}: {report.first_counterexample_graph6}\n")
    if report.diagnostics:
        out.write(f"{len(report.diagnostics)} diagnostics\n")


def cmd_sweep(args, out, stdin) -> int:
    report = exhaustive_sweep(args.n, args.t, _theorem(args.theorem, args.q_mode), args.workers, args.tol)
    _emit(args, report.document(), out)
    if not args.json:
        _summarize_scan(report, out)
    _store(args, report)
    return EXIT_FOUND if report.counts.counterexamples else EXIT_OK


def cmd_scan(args, out, stdin) -> int:
    which = _theorem(args.theorem, args.q_mode)
    if args.source == "-":
        report = scan_graph6(stdin, args.t, which, args.workers, args.skip, args.tol, seed=args.seed)
    else:
        try:
            with open(args.source, "r", encoding="ascii", errors="replace") as handle:
                report = scan_graph6(handle, args.t, which, args.workers, args.skip, args.tol, seed=args.seed)
        except OSError as exc:
            raise UsageError(f"cannot read {args.source}: {exc}")
    _emit(args, report.document(), out)
    if not args.json:
        _summarize_scan(report, out)
    _store(args, report)
    return EXIT_FOUND if report.counts.counterexamples else EXIT_OK


def cmd_thresholds(args, out, stdin) -> int:
    text = thresholds_csv(threshold_rows(args.t, args.n_min, args.n_max))
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_catalog(args, out, stdin) -> int:
    if args.catalog_id is None and not args.all:
        for entry_id in entry_ids():
            entry = get_entry(entry_id)
            size = f"n >= {entry.n_floor}" if entry.parameterized else f"n = {entry.default_n}"
            out.write(f"{entry_id:24s} {size:9s} {entry.title}\n")
        return EXIT_OK
    ids = entry_ids() if args.all else [args.catalog_id]
    reports = [check_entry(entry_id, args.n if not args.all else None, _parse_cycles(args.cycles)) for entry_id in ids]
    refuted = 0
    for report in reports:
        refuted += len(report.refuted)
        if not args.json:
            out.write(f"{report.id} (n={report.n}, m={report.m}) {report.degree_sequence}\n")
            for fact in report.facts:
                note = f" [{fact.reason}]" if fact.reason else ""
                out.write(f"  {fact.verdict.value:9s} {fact.claim} (observed {fact.observed}){note}\n")
        _store(args, report)
    if args.json or args.report:
        _emit(args, {"entries": [r.model_dump(mode="json") for r in reports]}, out)
    return EXIT_FOUND if refuted else EXIT_OK


def cmd_sample(args, out, stdin) -> int:
    seq = DegreeSequence.parse(args.degrees)
    report = verify_degree_family(seq, args.t, args.k, args.samples, args.seed, args.allow_large)
    _emit(args, report.model_dump(mode="json"), out)
    if not args.json:
        out.write(
            f"{report.degree_sequence}: {report.examined} realizations, {report.t_tough} {report.t}-tough, "
            f"{report.closure_complete} with complete {report.k}-closure, {report.pancyclic} pancyclic, "
            f"{report.violations} violations\n"
        )
    _store(args, report)
    return EXIT_FOUND if report.violations else EXIT_OK


def cmd_props(args, out, stdin) -> int:
    props = [PropositionId(args.prop)] if args.prop else list(PropositionId)
    if args.sweep_n is not None:
        violated = 0
        for prop in props:
            report = proposition_sweep(args.sweep_n, prop, args.t, args.workers)
            violated += report.counts.violated
            out.write(f"{prop.value}: {report.counts.model_dump()}\n")
            if report.first_violation_graph6:
                out.write(f"  first violation: {report.first_violation_graph6}\n")
        return EXIT_FOUND if violated else EXIT_OK
    if not any(getattr(args, a) is not None for a in ("graph6", "edgelist", "catalog_id", "degrees")):
        raise UsageError("props needs a graph (--graph6/--edgelist/--id/--degrees) or --sweep-n")
    g = load_graph(args, stdin)
    violated = 0
    for prop in props:
        result = check_supporting_prop(g, prop, args.t, args.allow_large)
        violated += result.status is PropositionStatus.VIOLATED
        out.write(f"{prop.value}: {result.status.value}" + (f" ({result.detail})" if result.detail else "") + "\n")
    return EXIT_FOUND if violated else EXIT_OK


# ============ Parser ============

def _add_theorem_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--t", type=int, default=1, choices=[1, 2, 3])
    p.add_argument("--theorem", default="edges_2_1", choices=THEOREM_CHOICES)
    p.add_argument("--q-mode", default=QMode.CORRECTED.value, choices=[m.value for m in QMode])
    p.add_argument("--tol", type=float, default=config.DEFAULT_TOL)


def _add_report_args(p: argparse.ArgumentParser, store: bool = True) -> None:
    p.add_argument("--json", action="store_true", help="print the JSON report document")
    p.add_argument("--report", help="also write the JSON report to this file")
    if store:
        p.add_argument("--store", action="store_true", help="archive the report in DATABASE_URL")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toughcycles", description="Toughness and pancyclicity verification")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    parser.add_argument("--version", action="version", version=f"%(prog)s {config.__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="every measurement plus all theorem verdicts")
    _add_graph_args(p)
    p.add_argument("--t", type=int, default=1, choices=[1, 2, 3])
    p.add_argument("--tol", type=float, default=config.DEFAULT_TOL)
    _add_report_args(p, store=False)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("toughness", help="exact toughness with a witness cutset")
    _add_graph_args(p)
    p.add_argument("--t", help="also test t-toughness (p/q or integer)")
    p.set_defaults(func=cmd_toughness)

    p = sub.add_parser("closure", help="k-closure or a closure-based Hamiltonicity certificate")
    _add_graph_args(p)
    p.add_argument("--k", type=int)
    p.add_argument("--certify", type=int, metavar="T", help="certify Hamiltonicity for toughness level T")
    p.add_argument("--exact-fallback", action="store_true", help="search the closure when it is not complete")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("spectrum", help="certified rho(G) and q(G)")
    _add_graph_args(p)
    p.add_argument("--tol", type=float, default=config.DEFAULT_TOL)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("construct", help="emit a catalog graph")
    p.add_argument("--id", dest="catalog_id", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--cycles")
    p.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="one theorem on one graph")
    _add_graph_args(p)
    _add_theorem_args(p)
    _add_report_args(p, store=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="one theorem on every labeled graph of order n")
    p.add_argument("--n", type=int, required=True)
    _add_theorem_args(p)
    p.add_argument("--workers", type=int, default=config.DEFAULT_WORKERS)
    _add_report_args(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("scan", help="one theorem on a graph6 stream")
    p.add_argument("source", nargs="?", default="-", help="graph6 file, or '-' for stdin")
    _add_theorem_args(p)
    p.add_argument("--workers", type=int, default=config.DEFAULT_WORKERS)
    p.add_argument("--skip", type=int, default=0, help="resume after this many input lines")
    p.add_argument("--seed", type=int, default=config.DEFAULT_SEED, help="power iteration restart seed")
    _add_report_args(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("thresholds", help="CSV of edge, rho and q thresholds")
    p.add_argument("--t", type=int, default=1, choices=[1, 2, 3])
    p.add_argument("--n-min", type=int, default=7)
    p.add_argument("--n-max", type=int, default=40)
    p.add_argument("--out", help="write to this file instead of stdout")
    p.set_defaults(func=cmd_thresholds)

    p = sub.add_parser("catalog", help="list catalog ids, or check an entry's claimed facts")
    p.add_argument("--id", dest="catalog_id")
    p.add_argument("--all", action="store_true", help="check every entry at its default order")
    p.add_argument("--n", type=int)
    p.add_argument("--cycles")
    _add_report_args(p)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("sample", help="seeded edge-switch sampling of a degree-sequence family")
    p.add_argument("--degrees", required=True)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--k", type=int, help="closure parameter (default n-1)")
    p.add_argument("--samples", type=int, default=config.DEFAULT_SAMPLES)
    p.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    p.add_argument("--allow-large", action="store_true")
    _add_report_args(p)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("props", help="supporting propositions on one graph, or exhaustively at order n")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--graph6")
    src.add_argument("--edgelist", type=Path)
    src.add_argument("--id", dest="catalog_id")
    src.add_argument("--degrees")
    p.add_argument("--n", type=int)
    p.add_argument("--cycles")
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--prop", choices=[prop.value for prop in PropositionId])
    p.add_argument("--t", type=int)
    p.add_argument("--sweep-n", type=int, help="check every labeled graph of this order instead")
    p.add_argument("--workers", type=int, default=config.DEFAULT_WORKERS)
    p.set_defaults(func=cmd_props)

    return parser


def main(argv: Optional[List[str]] = None, out: TextIO = sys.stdout, stdin: TextIO = sys.stdin) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # --help and --version exit 0; argparse usage errors exit 2
        return int(exc.code or 0)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else config.LOG_LEVEL,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args, out, stdin)
    except (ToughCyclesError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
