#!/usr/bin/env python3
"""CLI entry point for hlindex package.

Usage:
    hlindex eigs <graph> [--format graph6|edgelist] [--output json|text]
    hlindex median <graph>
    hlindex inertia <graph> [--threshold p/q] [--method elimination|sturm]
    hlindex charpoly <graph>
    hlindex imbalance <graph> [--a 0,2,4] [--swap]
    hlindex find-set <graph> [--v0 V] [--radius R] [--max-size K] [--budget B]
    hlindex pipeline <graph> [--separation S] [--radius R] [--workers W]
    hlindex replay <graph> --certificate FILE
    hlindex verify-catalog [--entry NAME ...] [--from DIR] [--provenance P] [--workers W]
    hlindex verify-theorem [<graph>] [--exhaustive --nmax N --start-n N] [--random C --seed S]
    hlindex gen --n N [--count C] [--seed S] [--girth G] [--exhaustive]
    hlindex export-catalog <dir>
    hlindex init-config [--output hlindex.toml]

<graph> is a file path, ``-`` for stdin, or ``builtin:<name>`` where name is
``heawood``, ``c<n>``, ``p<n>``, ``k<p>_<q>`` or a catalog entry.

Exit status: 0 on success, 1 when a checked claim fails, 2 on bad input.
"""

import argparse
import json
import logging
import re
import sys
from fractions import Fraction

EXIT_VIOLATION = 1
EXIT_USAGE = 2


def main(argv: list[str] | None = None):
    parser = argparse.ArgumentParser(
        prog="hlindex",
        description="Median eigenvalues, imbalance and certificates for bipartite subcubic graphs.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")
    parser.add_argument("--config", default="", help="Path to hlindex.toml config file")
    sub = parser.add_subparsers(dest="command")

    # --- spectra ---
    eigs_parser = sub.add_parser("eigs", help="Float eigenvalues, descending")
    _add_graph_args(eigs_parser)

    median_parser = sub.add_parser("median", help="Median eigenvalues and exact R <= 1 test")
    _add_graph_args(median_parser)

    inertia_parser = sub.add_parser("inertia", help="Exact eigenvalue counts around a threshold")
    _add_graph_args(inertia_parser)
    inertia_parser.add_argument(
        "--threshold", type=_rational, default=Fraction(1), help="Rational threshold as p/q"
    )
    inertia_parser.add_argument(
        "--method", choices=["elimination", "sturm"], default="elimination", help="Exact engine"
    )

    charpoly_parser = sub.add_parser("charpoly", help="Integer characteristic polynomial")
    _add_graph_args(charpoly_parser)

    # --- imbalance ---
    imb_parser = sub.add_parser("imbalance", help="Imbalance and median bound of a partition")
    _add_graph_args(imb_parser)
    imb_parser.add_argument("--a", default="", help="Comma-separated first side (default: bipartition)")
    imb_parser.add_argument("--swap", action="store_true", help="Use (B, A) instead of (A, B)")

    find_parser = sub.add_parser("find-set", help="Search for an imbalance-increasing set")
    _add_graph_args(find_parser)
    find_parser.add_argument("--v0", type=int, default=0, help="Start vertex")
    _add_search_args(find_parser)
    find_parser.add_argument(
        "--strategy", action="append", default=None, help="Restrict to these rungs (repeatable)"
    )

    pipe_parser = sub.add_parser("pipeline", help="Positive-fraction pipeline")
    _add_graph_args(pipe_parser)
    _add_search_args(pipe_parser)
    pipe_parser.add_argument("--separation", type=int, default=None, help="Start-vertex separation")
    pipe_parser.add_argument("--workers", type=int, default=None, help="Worker processes")

    replay_parser = sub.add_parser("replay", help="Recompute a JSON certificate")
    _add_graph_args(replay_parser)
    replay_parser.add_argument("--certificate", required=True, help="Certificate JSON file, - for stdin")

    # --- catalog ---
    vc_parser = sub.add_parser("verify-catalog", help="Verify catalog entries")
    vc_parser.add_argument("--entry", action="append", default=None, help="Entry name (repeatable)")
    vc_parser.add_argument("--from", dest="from_dir", default="", help="Verify exported catalog files")
    vc_parser.add_argument(
        "--provenance", choices=["text_pinned", "reconstructed"], default=None, help="Filter entries"
    )
    vc_parser.add_argument("--workers", type=int, default=None, help="Worker processes")
    _add_output_arg(vc_parser)

    vt_parser = sub.add_parser("verify-theorem", help="Check R <= 1 over a corpus")
    vt_parser.add_argument("graph", nargs="?", default=None, help="graph6 lines: path or -")
    vt_parser.add_argument("--exhaustive", action="store_true", help="Enumerate all graphs up to --nmax")
    vt_parser.add_argument("--nmax", type=int, default=None, help="Largest order enumerated")
    vt_parser.add_argument("--start-n", type=int, default=1, help="Skip orders below this")
    vt_parser.add_argument("--random", type=int, default=0, help="Number of random graphs")
    vt_parser.add_argument("--seed", type=int, default=0, help="Random seed")
    vt_parser.add_argument("--n-min", type=int, default=15, help="Smallest random order")
    vt_parser.add_argument("--n-max", type=int, default=200, help="Largest random order")
    vt_parser.add_argument("--workers", type=int, default=None, help="Worker processes")

    gen_parser = sub.add_parser("gen", help="Generate bipartite subcubic graphs as graph6")
    gen_parser.add_argument("--n", type=int, required=True, help="Number of vertices")
    gen_parser.add_argument("--count", type=int, default=1, help="Random graphs to emit")
    gen_parser.add_argument("--seed", type=int, default=0, help="Random seed")
    gen_parser.add_argument("--girth", type=int, default=None, help="Minimum girth")
    gen_parser.add_argument("--disconnected", action="store_true", help="Allow several components")
    gen_parser.add_argument("--exhaustive", action="store_true", help="Every connected graph of order n")

    export_parser = sub.add_parser("export-catalog", help="Write catalog.g6, catalog.jsonl, manifest.yaml")
    export_parser.add_argument("output_dir", help="Directory to write")

    config_parser = sub.add_parser("init-config", help="Write a default hlindex.toml")
    config_parser.add_argument("--output", default="hlindex.toml", help="Config file output path")

    args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )

    if args.command is None:
        parser.print_help()
        sys.exit(EXIT_USAGE)

    from hlindex.errors import HLIndexError

    handlers = {
        "eigs": _handle_eigs,
        "median": _handle_median,
        "inertia": _handle_inertia,
        "charpoly": _handle_charpoly,
        "imbalance": _handle_imbalance,
        "find-set": _handle_find_set,
        "pipeline": _handle_pipeline,
        "replay": _handle_replay,
        "verify-catalog": _handle_verify_catalog,
        "verify-theorem": _handle_verify_theorem,
        "gen": _handle_gen,
        "export-catalog": _handle_export_catalog,
        "init-config": _handle_init_config,
    }
    try:
        code = handlers[args.command](args)
    except (HLIndexError, OSError, json.JSONDecodeError) as exc:
        print(f"Error: {exc}", file=sys.stderr)
        sys.exit(EXIT_USAGE)
    sys.exit(code or 0)


# ---------------------------------------------------------------------------
# Argument helpers
# ---------------------------------------------------------------------------


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational p/q: {text!r}") from exc


def _add_output_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", choices=["json", "text"], default="json", help="Output style")


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", help="Path, - for stdin, or builtin:<name>")
    p.add_argument("--format", choices=["graph6", "edgelist"], default=None, help="Input format")
    _add_output_arg(p)


def _add_search_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--radius", type=int, default=None, help="Search ball radius")
    p.add_argument("--max-size", type=int, default=None, help="Largest candidate set")
    p.add_argument("--budget", type=int, default=None, help="Candidates per side")


def _config(args):
    from hlindex.config import load_config

    return load_config(args.config or None)


def _builtin(name: str):
    from hlindex.catalog.constructions import complete_bipartite, cycle_graph, heawood, path_graph
    from hlindex.catalog.entries import get_entry

    if name == "heawood":
        return heawood()
    if m := re.fullmatch(r"c(\d+)", name):
        return cycle_graph(int(m.group(1)))
    if m := re.fullmatch(r"p(\d+)", name):
        return path_graph(int(m.group(1)))
    if m := re.fullmatch(r"k(\d+)_(\d+)", name):
        return complete_bipartite(int(m.group(1)), int(m.group(2)))
    return get_entry(name).graph


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    with open(source, encoding="utf-8") as f:
        return f.read()


def _read_graphs(args) -> list:
    from hlindex.core.codec import parse_graphs

    if args.graph.startswith("builtin:"):
        return [_builtin(args.graph[len("builtin:"):])]
    return parse_graphs(_read_text(args.graph), args.format)


def _read_graph(args):
    from hlindex.errors import GraphError

    graphs = _read_graphs(args)
    if len(graphs) != 1:
        raise GraphError(f"expected exactly one graph, got {len(graphs)}")
    return graphs[0]


def _emit(args, data: dict) -> None:
    """JSON, or one ``key: value`` line per field with nested values as JSON."""
    if getattr(args, "output", "json") == "json":
        print(json.dumps(data, indent=2))
        return
    for key, value in data.items():
        shown = json.dumps(value) if isinstance(value, dict | list) else value
        print(f"{key}: {shown}")


# ---------------------------------------------------------------------------
# Spectra
# ---------------------------------------------------------------------------


def _handle_eigs(args):
    from hlindex.spectra.numeric import eigenvalues

    g = _read_graph(args)
    _emit(args, {"n": g.n, **eigenvalues(g).to_dict()})


def _handle_median(args):
    from hlindex.spectra.report import median_at_most_sqrt2, median_report
    from hlindex.core.graph import bipartition

    g = _read_graph(args)
    data = median_report(g).to_dict()
    if bipartition(g) is not None:
        data["at_most_sqrt2"] = median_at_most_sqrt2(g)
    _emit(args, data)


def _handle_inertia(args):
    from hlindex.spectra.exact import inertia

    g = _read_graph(args)
    cfg = _config(args)
    _emit(args, inertia(g, args.threshold, method=args.method, max_n=cfg.char_poly_max_n).to_dict())


def _handle_charpoly(args):
    from hlindex.spectra.exact import char_poly

    g = _read_graph(args)
    _emit(args, char_poly(g, _config(args).char_poly_max_n).to_dict())


# ---------------------------------------------------------------------------
# Imbalance
# ---------------------------------------------------------------------------


def _handle_imbalance(args):
    from hlindex.analysis.imbalance import imbalance, median_bound
    from hlindex.core.graph import VertexSet, bipartition
    from hlindex.errors import PartitionError

    g = _read_graph(args)
    if args.a:
        try:
            a = VertexSet.of(g.n, (int(tok) for tok in args.a.split(",") if tok.strip()))
        except ValueError as exc:
            raise PartitionError(f"bad vertex list {args.a!r}") from exc
        b = a.complement()
    else:
        bip = bipartition(g)
        if bip is None:
            raise PartitionError("graph is not bipartite; pass --a")
        a, b = bip.a_side, bip.b_side
    if args.swap:
        a, b = b, a
    data = {"a": a.to_list(), "b": b.to_list(), **imbalance(g, a, b).to_dict()}
    data["median_bound"] = median_bound(g, a, b).to_dict()
    _emit(args, data)


def _handle_find_set(args):
    from hlindex.analysis.search import search_increasing_set
    from hlindex.core.graph import bipartition
    from hlindex.errors import PartitionError, SearchRefused
    from hlindex.models import IncreaseCertificate

    g = _read_graph(args)
    cfg = _config(args)
    bip = bipartition(g)
    if bip is None:
        raise PartitionError("graph is not bipartite")
    try:
        outcome = search_increasing_set(
            g,
            bip,
            args.v0,
            radius=args.radius if args.radius is not None else cfg.search_radius,
            max_size=args.max_size if args.max_size is not None else cfg.max_size,
            budget=args.budget if args.budget is not None else cfg.budget,
            strategies=args.strategy,
        )
    except SearchRefused as exc:
        _emit(args, {"v0": args.v0, "refused": str(exc)})
        return EXIT_VIOLATION
    if isinstance(outcome, IncreaseCertificate):
        _emit(args, {**outcome.to_dict(), "strategy": outcome.strategy})
        return 0
    _emit(args, {"exhausted": outcome.to_dict()})
    return EXIT_VIOLATION


def _handle_pipeline(args):
    from hlindex.analysis.pipeline import fraction_pipeline

    g = _read_graph(args)
    cfg = _config(args)
    report = fraction_pipeline(
        g,
        separation=args.separation if args.separation is not None else cfg.separation,
        radius=args.radius if args.radius is not None else cfg.search_radius,
        max_size=args.max_size if args.max_size is not None else cfg.max_size,
        budget=args.budget if args.budget is not None else cfg.budget,
        workers=args.workers if args.workers is not None else cfg.workers,
    )
    _emit(args, report.to_dict())
    return 0 if report.consistent else EXIT_VIOLATION


def _handle_replay(args):
    from hlindex.analysis.imbalance import replay_certificate

    g = _read_graph(args)
    data = json.loads(_read_text(args.certificate))
    problems = replay_certificate(g, data)
    _emit(args, {"valid": not problems, "problems": problems})
    return EXIT_VIOLATION if problems else 0


# ---------------------------------------------------------------------------
# Catalog and corpora
# ---------------------------------------------------------------------------


def _handle_verify_catalog(args):
    from concurrent.futures import ProcessPoolExecutor

    from hlindex.catalog.entries import catalog, get_entry
    from hlindex.catalog.verify import verify_entry
    from hlindex.export_catalog import load_catalog

    cfg = _config(args)
    if args.from_dir:
        entries = load_catalog(args.from_dir)
        if args.entry:
            entries = [e for e in entries if e.name in set(args.entry)]
    elif args.entry:
        entries = [get_entry(name) for name in args.entry]
    else:
        entries = list(catalog())
    if args.provenance:
        entries = [e for e in entries if e.provenance.value == args.provenance]

    workers = args.workers if args.workers is not None else cfg.workers
    if workers > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(verify_entry, entries))
    else:
        reports = [verify_entry(e) for e in entries]

    failed = [r.name for r in reports if not r.passed]
    if args.output == "json":
        print(json.dumps({
            "entries": [r.to_dict() for r in reports],
            "passed": len(reports) - len(failed),
            "failed": failed,
        }, indent=2))
    else:
        for r in reports:
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<12} {r.provenance.value}")
            for c in r.checks:
                if not c.passed:
                    print(f"      {c.name}: {c.detail}")
        print(f"\n{len(reports) - len(failed)}/{len(reports)} entries pass")
    return EXIT_VIOLATION if failed else 0


def _verdicts(graphs: list, workers: int) -> list:
    from concurrent.futures import ProcessPoolExecutor

    from hlindex.spectra.report import theorem_verdict

    if workers > 1 and len(graphs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            verdicts = list(pool.map(theorem_verdict, graphs, chunksize=16))
    else:
        verdicts = [theorem_verdict(g) for g in graphs]
    return sorted(verdicts, key=lambda v: (v.n, v.graph6))


def _handle_verify_theorem(args):
    from itertools import groupby

    from hlindex.catalog.generators import enumerate_bipartite_subcubic, random_corpus
    from hlindex.core.codec import parse_graphs
    from hlindex.errors import GeneratorError

    cfg = _config(args)
    workers = args.workers if args.workers is not None else cfg.workers
    batches: list[list] = []
    if args.exhaustive:
        nmax = args.nmax if args.nmax is not None else cfg.nmax
        stream = enumerate_bipartite_subcubic(nmax, n_min=args.start_n, limit=cfg.nmax_limit)
        batches.extend(list(group) for _, group in groupby(stream, key=lambda g: g.n))
    if args.random:
        batches.append(list(random_corpus(args.random, args.n_min, args.n_max, seed=args.seed)))
    if args.graph is not None:
        batches.append(parse_graphs(_read_text(args.graph), "graph6"))
    if not batches:
        raise GeneratorError("nothing to verify: pass a graph6 source, --exhaustive or --random")

    checked = violations = 0
    for batch in batches:
        # one order at a time so long exhaustive runs stream and can resume with --start-n
        for v in _verdicts(batch, workers):
            checked += 1
            if v.violates:
                violations += 1
                logging.getLogger(__name__).warning("R > 1 on %s", v.graph6)
            print(json.dumps(v.to_dict()))
        sys.stdout.flush()
    print(f"{checked} graphs checked, {violations} violations", file=sys.stderr)
    return EXIT_VIOLATION if violations else 0


def _handle_gen(args):
    from hlindex.catalog.generators import enumerate_bipartite_subcubic, random_bipartite_subcubic
    from hlindex.core.codec import graph6_encode
    from hlindex.models import GeneratorConfig

    cfg = _config(args)
    if args.exhaustive:
        for g in enumerate_bipartite_subcubic(args.n, n_min=args.n, limit=cfg.nmax_limit):
            print(graph6_encode(g))
        return 0
    for i in range(args.count):
        gen_cfg = GeneratorConfig(
            n=args.n, seed=args.seed + i, connected=not args.disconnected, girth=args.girth
        )
        print(graph6_encode(random_bipartite_subcubic(gen_cfg)))
    return 0


def _handle_export_catalog(args):
    from hlindex.catalog.entries import catalog
    from hlindex.export_catalog import export_catalog

    entries = catalog()
    out = export_catalog(entries, args.output_dir)
    print(f"Wrote {len(entries)} entries to {out}")
    return 0


def _handle_init_config(args):
    from hlindex.config import generate_config

    path = generate_config(args.output)
    print(f"Config written to {path}")
    print("Edit this file to change search bounds, pipeline separation and worker counts.")
    return 0
