"""``mlap`` command line.

Exit status is 0 on success, 1 when a verification or synthesis check fails
and 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import census, fd_coeffs, graphs, spectra, synthesis, verify
from .laplacians import MAX_M, classic_matrix, integer_scaled, m_laplacian
from .paths import open_path_matrix

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

FAMILIES = {
    "complete": graphs.complete, "K": graphs.complete,
    "cycle": graphs.cycle, "C": graphs.cycle,
    "path": graphs.path_graph, "P": graphs.path_graph,
    "star": graphs.star_graph,
    "empty": graphs.empty_graph,
    "prism": graphs.prism,
    "moebius": graphs.moebius_ladder,
    "antiprism": graphs.antiprism,
}


class UsageError(ValueError):
    pass


def fmt_rat(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def fmt_float(x: float, scale: float = 1.0) -> str:
    if abs(x) < 1e-12 * max(1.0, scale):
        return "0"
    return f"{x:.12g}"


def fmt_matrix(mat) -> str:
    cells = [[fmt_rat(x) for x in row] for row in np.asarray(mat, dtype=object)]
    if not cells:
        return ""
    width = max(len(c) for row in cells for c in row)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def parse_ints(text: str) -> list[int]:
    """``"16,32,64"`` or a range ``"4-7"`` (inclusive)."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part[1:]:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise UsageError(f"expected a list of integers, got {text!r}")
    return out


def resolve_graphs(spec: str) -> list[graphs.SimpleGraph]:
    """A graph6 or edge-list file, a family such as ``complete:18`` or
    ``circulant:8:1,3`` (or ``petersen``), or a literal graph6 string."""
    path = Path(spec)
    if path.is_file():
        return graphs.load_graphs(path)
    if spec == "petersen":
        return [graphs.petersen()]
    name, _, rest = spec.partition(":")
    if rest:
        args = rest.split(":")
        try:
            if name == "circulant" and len(args) == 2:
                return [graphs.circulant(int(args[0]), parse_ints(args[1]))]
            if name in ("bipartite", "Kab") and len(args) == 2:
                return [graphs.complete_bipartite(int(args[0]), int(args[1]))]
            if name in FAMILIES and len(args) == 1:
                return [FAMILIES[name](int(args[0]))]
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        raise UsageError(f"unknown graph family {spec!r}")
    try:
        return [graphs.parse_graph6(spec)]
    except graphs.Graph6Error as exc:
        raise UsageError(f"{spec!r} is neither a file, a family spec, nor graph6: {exc}") from exc


def _graph_header(gs, i, g, out):
    if len(gs) > 1:
        print(f"# graph {i + 1}: {graphs.write_graph6(g)}", file=out)


def _kind_matrix(g, kind: str, m: int):
    if kind == "mlap":
        return m_laplacian(g, m)
    return classic_matrix(g, {"lap": "laplacian", "signless": "signless_laplacian", "adj": "adjacency"}[kind])


# ---------------------------------------------------------------------------
# subcommands

def cmd_coeffs(args, out):
    ms = range(1, args.m + 1) if args.table else [args.m]
    for m in ms:
        print(", ".join(f"a_{{{k},{m}}} = {fmt_rat(a)}" for k, a in enumerate(fd_coeffs.coeffs(m), start=1)), file=out)
    return EXIT_OK


def cmd_stencil_demo(args, out):
    grids = parse_ints(args.grids)
    dtype = np.float64 if args.float64 else np.longdouble
    hs, errs, slope = fd_coeffs.convergence_study(args.m, grids, dtype=dtype, func=args.test_func)
    print(f"{'n':>6} {'h':>14} {'max error':>14}", file=out)
    for n, h, e in zip(grids, hs, errs):
        print(f"{n:>6} {h:>14.6e} {e:>14.6e}", file=out)
    print(f"fitted slope = {slope:.4f} (expected {2 * args.m})", file=out)
    return EXIT_OK


def cmd_paths(args, out):
    gs = resolve_graphs(args.graph)
    for i, g in enumerate(gs):
        _graph_header(gs, i, g, out)
        print(fmt_matrix(open_path_matrix(g, args.k)), file=out)
    return EXIT_OK


def cmd_matrix(args, out):
    gs = resolve_graphs(args.graph)
    for i, g in enumerate(gs):
        _graph_header(gs, i, g, out)
        mat = _kind_matrix(g, args.kind, args.m)
        if args.scaled:
            ints, scale = integer_scaled(mat, args.m)
            print(f"scale = {scale}", file=out)
            mat = ints
        print(fmt_matrix(mat), file=out)
    return EXIT_OK


def cmd_spectrum(args, out):
    gs = resolve_graphs(args.graph)
    for i, g in enumerate(gs):
        _graph_header(gs, i, g, out)
        mat = _kind_matrix(g, args.kind, args.m)
        approx = spectra.eig_symmetric(mat)
        scale = float(np.abs(approx).max(initial=0.0))
        if args.float:
            print("spectrum: " + ", ".join(fmt_float(x, scale) for x in approx), file=out)
            continue
        key = spectra.char_poly_exact(mat)
        roots, rest = spectra.certified_rational_roots(key, approx)
        print(f"charpoly: {key}", file=out)
        words = [fmt_rat(r) for r in roots]
        if rest:
            exact = sorted(roots)
            leftover = list(approx)
            for r in exact:
                leftover.pop(int(np.argmin([abs(x - float(r)) for x in leftover])))
            words += [f"~{fmt_float(x, scale)}" for x in leftover]
        print("spectrum: " + ", ".join(words), file=out)
    return EXIT_OK


def _census_corpus(args):
    if args.corpus is None:
        return None, None
    p = Path(args.corpus)
    return (p, None) if p.is_dir() else (None, p)


def cmd_census(args, out):
    kinds = [census.normalize_kind(k) for k in args.kind.split(",")]
    corpus_dir, corpus_file = _census_corpus(args)
    if args.table1 or args.table3:
        ns = parse_ints(args.n) if args.n else list(range(1, graphs.MAX_BUILTIN_N + 1))
        if not args.kind_given:
            kinds = ["A", "L", "|L|", "L2"] + ([] if args.table3 else ["L3"])
        print(census.census_table(ns, kinds, corpus_dir, args.jobs, proportions=args.table3,
                                  csv=args.output == "csv"), end="", file=out)
        return EXIT_OK
    if not args.n:
        raise UsageError("census needs --n (or --table1/--table3)")
    for n in parse_ints(args.n):
        if corpus_file is not None:
            stream = graphs.load_graphs(corpus_file)
            if stream and stream[0].n != n:
                raise UsageError(f"{corpus_file} holds graphs on {stream[0].n} vertices, not {n}")
            want = graphs.GRAPH_COUNTS.get(n)
            if want is not None and len(stream) != want:
                raise UsageError(f"{corpus_file} holds {len(stream)} graphs, expected {want} for n={n}")
        else:
            stream = census.load_corpus(n, corpus_dir)
        for kind in kinds:
            rep = census.count_cospectral_mates(stream, kind, jobs=args.jobs)
            if args.output == "csv":
                print(rep.csv_line(), file=out)
            else:
                print(f"n = {rep.n}, kind = {rep.kind}, total = {rep.total}, mates = {rep.mates}, "
                      f"proportion = {rep.proportion_str()} ({fmt_rat(rep.proportion)}), "
                      f"classes = {len(rep.classes)}", file=out)
                if rep.note:
                    print(f"  note: {rep.note}", file=out)
            print(f"[{rep.kind} n={rep.n}: {rep.elapsed:.2f} s]", file=sys.stderr)
    return EXIT_OK


def cmd_synth(args, out):
    if args.embed is not None:
        vals = [float(x) for x in args.embed.split(",")]
        emb = synthesis.embed_spectrum(vals)
        print(f"containment via {emb.interpretation}", file=out)
        print("spectrum: " + ", ".join(f"{x:.12g}" for x in emb.spectrum), file=out)
        if args.report:
            print("weights:\n" + "\n".join(" ".join(f"{x:12.6g}" for x in row) for row in emb.graph.weights),
                  file=out)
        return EXIT_OK
    if args.spectrum is None:
        raise UsageError("synth needs --spectrum or --embed")
    target = synthesis.TargetSpectrum.from_multiset([float(x) for x in args.spectrum.split(",")])
    if args.even != target.even:
        raise UsageError(f"spectrum has the {'even' if target.even else 'odd'} shape; "
                         f"{'add' if target.even else 'drop'} --even")
    syn = synthesis.synthesize(target)
    print("c = [" + ", ".join(f"{x:.12g}" for x in syn.jump_weights) + "]", file=out)
    print(f"residual = {syn.residual:.3e}", file=out)
    if args.report:
        scale = float(np.abs(syn.spectrum).max(initial=0.0))
        print(f"n = {target.n}, m = {target.m}, convention = {'4Zc' if syn.convention > 0 else '-4Zc'}", file=out)
        print("target:        " + ", ".join(f"{x:.12g}" for x in target.multiset()), file=out)
        print("reconstructed: " + ", ".join(fmt_float(x, scale) for x in syn.spectrum), file=out)
    return EXIT_OK


def cmd_verify(args, out):
    if args.what == "closed-forms":
        checks = verify.closed_forms(args.n_max, args.m_max)
    else:
        checks = verify.run_all()
    for c in checks:
        print(c.line(), file=out)
    failed = sum(not c.passed for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed", file=out)
    return EXIT_FAIL if failed else EXIT_OK


# ---------------------------------------------------------------------------

def _m_arg(text: str) -> int:
    m = int(text)
    if not 1 <= m <= MAX_M:
        raise argparse.ArgumentTypeError(f"m must be in 1..{MAX_M}")
    return m


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mlap", description="m-Laplacians of graphs: coefficients, matrices, spectra, census.")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="worker processes for the census")
    p.add_argument("--output", choices=("text", "csv"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("coeffs", help="exact stencil coefficients")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--table", action="store_true", help="all orders 1..m")
    s.set_defaults(handler=cmd_coeffs)

    s = sub.add_parser("stencil-demo", help="convergence order of the periodic stencil")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--func", dest="test_func", choices=sorted(fd_coeffs.TEST_FUNCTIONS), default="sin")
    s.add_argument("--grids", default="16,32,64,128,256")
    s.add_argument("--float64", action="store_true", help="sample in double instead of extended precision")
    s.set_defaults(handler=cmd_stencil_demo)

    s = sub.add_parser("paths", help="open-path count matrix")
    s.add_argument("--graph", required=True)
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(handler=cmd_paths)

    s = sub.add_parser("matrix", help="exact graph matrix")
    s.add_argument("--graph", required=True)
    s.add_argument("--m", type=_m_arg, default=2)
    s.add_argument("--kind", choices=("mlap", "lap", "signless", "adj"), default="mlap")
    s.add_argument("--scaled", action="store_true", help="print scale * matrix as integers")
    s.set_defaults(handler=cmd_matrix)

    s = sub.add_parser("spectrum", help="spectrum of a graph matrix")
    s.add_argument("--graph", required=True)
    s.add_argument("--m", type=_m_arg, default=2)
    s.add_argument("--kind", choices=("mlap", "lap", "signless", "adj"), default="mlap")
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="charpoly and certified rational roots (default)")
    mode.add_argument("--float", action="store_true", help="floating eigenvalues only")
    s.set_defaults(handler=cmd_spectrum)

    s = sub.add_parser("census", help="count graphs with cospectral mates")
    s.add_argument("--n", help="vertex count, list or range (e.g. 7 or 1-7)")
    s.add_argument("--kind", default=None, help="A, L, |L|, L2, L3 (comma separated)")
    s.add_argument("--corpus", help=f"graph6 file or corpus directory (default ${census.CORPUS_ENV})")
    s.add_argument("--jobs", type=int, default=argparse.SUPPRESS)
    s.add_argument("--output", choices=("text", "csv"), default=argparse.SUPPRESS)
    tab = s.add_mutually_exclusive_group()
    tab.add_argument("--table1", action="store_true", help="mate counts table")
    tab.add_argument("--table3", action="store_true", help="mate proportions table")
    s.set_defaults(handler=cmd_census)

    s = sub.add_parser("synth", help="weighted circulant with a prescribed Laplacian spectrum")
    s.add_argument("--spectrum", help='target multiset, e.g. "0,1,1,2,2"')
    s.add_argument("--even", action="store_true", help="target has the even shape (one unpaired value)")
    s.add_argument("--embed", help="values to embed in a 2m-vertex spectrum instead (use --embed=-1,2 for negatives)")
    s.add_argument("--report", action="store_true")
    s.set_defaults(handler=cmd_synth)

    s = sub.add_parser("verify", help="run the identity and closed-form checks")
    s.add_argument("what", choices=("closed-forms", "all"))
    s.add_argument("--n-max", type=int, default=15)
    s.add_argument("--m-max", type=int, default=3)
    s.set_defaults(handler=cmd_verify)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "census":
        args.kind_given = args.kind is not None
        args.kind = args.kind or "L2"
    try:
        return args.handler(args, out)
    except (synthesis.SpectrumMismatchError, synthesis.IllConditionedError) as exc:
        print(f"mlap: check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, ValueError, FileNotFoundError, graphs.CapabilityError) as exc:
        print(f"mlap: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
