"""
Main entry point for the forest Turán toolkit.

Subcommands: formula, construct, embed, brute, scan, brute-spectral, spectral, verify.
Results go to stdout (tables by default, --json for the stable schema); logs and
progress bars go to stderr.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel

# Load environment variables from .env file
load_dotenv()

from config import OracleBudget, configure_logging, get_budget
from constructions.families import build_family
from embedding.forest_embed import contains_forest, verify_certificate
from errors import BudgetExceededError, DomainError, ForestTuranError, Graph6ParseError, GraphConstructionError
from formulas.turan import (
    FormulaResult,
    ex_forest_bipartite,
    ex_forest_general,
    ex_path_general,
    ex_path_upper,
    spectral_bound,
    spectral_least_bound,
)
from graphs.forest_spec import LinearForestSpec, parse_spec
from graphs.io import AnyGraph, from_edgelist, graph_to_json, read_graph6, to_edgelist, write_graph6
from oracle.brute import OracleReport, brute_ex_bipartite, brute_ex_general
from oracle.spectral_search import brute_spectral_max
from oracle.threshold import threshold_scan
from reporting import fields, fmt_float, table, to_json
from spectral.power import spectral_bound_check, spectral_radius
from workflow import run_verify

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_ERROR = 2


class SpectralBounds(BaseModel):
    spec: str
    n: int
    lambda_max_bound: float
    lambda_min_bound: float


class EmbedResult(BaseModel):
    spec: str
    contains: bool
    paths: list[str]


def _budget(args: argparse.Namespace) -> OracleBudget:
    return get_budget(
        max_cells=getattr(args, "max_cells", None),
        max_nodes=getattr(args, "max_nodes", None),
        embed_steps=getattr(args, "embed_steps", None),
        spectral_tol=getattr(args, "tol", None),
        workers=getattr(args, "workers", None),
    )


def _single_path(spec: LinearForestSpec) -> int:
    if spec.ell != 1:
        raise DomainError(f"this mode needs a single path, got {spec}")
    return spec.parts[0]


def _load_graph(text: str) -> AnyGraph:
    """graph6 (optionally with the "m n" sidecar) or a 1-indexed edge list."""
    try:
        return read_graph6(text)
    except (Graph6ParseError, GraphConstructionError) as g6_error:
        try:
            return from_edgelist(text)
        except GraphConstructionError:
            raise g6_error


def _graph_from_args(args: argparse.Namespace) -> AnyGraph:
    if args.construct:
        name, *params = args.construct
        try:
            values = [int(v) for v in params]
        except ValueError as e:
            raise DomainError(f"construction parameters must be integers, got {params}") from e
        return build_family((name, values))
    if args.graph:
        return _load_graph(Path(args.graph).read_text(encoding="utf-8"))
    if args.g6:
        return _load_graph(args.g6.replace("\\n", "\n"))
    raise DomainError("give a graph with --graph FILE, an inline graph6 string, or --construct FAMILY PARAMS...")


def _emit(model, args: argparse.Namespace, text: Optional[str] = None) -> None:
    if args.json:
        print(to_json(model))
    else:
        print(text if text is not None else fields(model))


# ---------------------------------------------------------------- subcommands


def cmd_formula(args: argparse.Namespace) -> int:
    spec = parse_spec(args.spec)
    if args.spectral is not None:
        n = args.spectral
        upper, lower = spectral_bound(n, spec), spectral_least_bound(n, spec)
        if args.json:
            print(to_json(SpectralBounds(spec=str(spec), n=n, lambda_max_bound=upper, lambda_min_bound=lower)))
        else:
            print(f"lambda_max <= {fmt_float(upper)}\nlambda_min >= {fmt_float(lower)}")
        return EXIT_OK

    if args.general is not None:
        result = ex_forest_general(args.general, spec)
    elif args.eg is not None:
        result = ex_path_general(args.eg, _single_path(spec))
    else:
        if args.m is None or args.n is None:
            raise DomainError("bipartite formulas need M and N (or use --general/--eg/--spectral)")
        if args.upper:
            value = ex_path_upper(args.m, args.n, _single_path(spec))
            result = FormulaResult(value=value, case_label="Cor1.3", validity="upper_bound")
        else:
            result = _oriented_forest(args.m, args.n, spec)
    _emit(result, args)
    return EXIT_OK


def _oriented_forest(m: int, n: int, spec: LinearForestSpec) -> FormulaResult:
    if m <= n:
        return ex_forest_bipartite(m, n, spec)
    result = ex_forest_bipartite(n, m, spec)
    return result.model_copy(update={"case_label": result.case_label + " [swapped]"})


def cmd_construct(args: argparse.Namespace) -> int:
    g = build_family((args.family, args.params))
    if args.check:
        spec = parse_spec(args.check)
        cert = contains_forest(g, spec, _budget(args).embed_steps)
        status = "free" if cert is None else "contains " + " ".join(cert.render(g))
        print(f"# {spec}: {status}", file=sys.stderr)
    if args.format == "graph6":
        sys.stdout.write(write_graph6(g).decode("ascii"))
    elif args.format == "edgelist":
        sys.stdout.write(to_edgelist(g))
    else:
        print(json.dumps(graph_to_json(g), indent=2))
    return EXIT_OK


def cmd_embed(args: argparse.Namespace) -> int:
    g = _graph_from_args(args)
    spec = parse_spec(args.spec)
    cert = contains_forest(g, spec, _budget(args).embed_steps)
    if args.json:
        payload = EmbedResult(spec=str(spec), contains=cert is not None, paths=cert.render(g) if cert else [])
        print(to_json(payload))
    elif cert is None:
        print("free")
    else:
        if not verify_certificate(g, spec, cert):
            raise DomainError("internal error: certificate failed verification")
        for label in cert.render(g):
            print(label)
    return EXIT_OK


def _print_oracle(report: OracleReport, args: argparse.Namespace) -> None:
    # wall time goes to the Oracle logger only; stdout must not change between runs
    _emit(report, args, fields(report, skip=("elapsed",)))


def cmd_brute(args: argparse.Namespace) -> int:
    spec = parse_spec(args.spec)
    budget = _budget(args)
    progress = not args.quiet
    try:
        if args.general:
            if len(args.sizes) != 1:
                raise DomainError("--general takes a single order N")
            report = brute_ex_general(args.sizes[0], spec, budget, args.workers, progress)
        else:
            if len(args.sizes) != 2:
                raise DomainError("bipartite brute force takes M N")
            report = brute_ex_bipartite(args.sizes[0], args.sizes[1], spec, budget, args.workers, progress)
    except BudgetExceededError as e:
        if e.partial is not None:
            _print_oracle(e.partial, args)
        raise
    _print_oracle(report, args)
    return EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    spec = parse_spec(args.spec)
    scan = threshold_scan(args.m, spec, args.nmax, _budget(args), args.workers, not args.quiet)
    threshold = "none" if scan.threshold is None else str(scan.threshold)
    text = table(row.model_dump() for row in scan.rows) + f"\nthreshold: {threshold}"
    _emit(scan, args, text)
    return EXIT_OK


def cmd_brute_spectral(args: argparse.Namespace) -> int:
    spec = parse_spec(args.spec)
    budget = _budget(args)
    report = brute_spectral_max(args.n, spec, not args.general, budget, budget.spectral_tol, not args.quiet)
    _emit(report, args)
    return EXIT_OK


def cmd_spectral(args: argparse.Namespace) -> int:
    g = _graph_from_args(args)
    tol = _budget(args).spectral_tol
    if args.spec:
        _emit(spectral_bound_check(g, parse_spec(args.spec), tol), args)
        return EXIT_OK
    result = spectral_radius(g, tol)
    _emit(result, args)
    return EXIT_OK


def _verify_overrides(args: argparse.Namespace) -> dict:
    """Map verify flags onto the grid keys of data/verify_grids.json."""
    theorem = args.theorem.lower()
    overrides: dict = {
        "max_mn": args.max_mn,
        "n": args.n,
        "p": args.p,
        "p_prime": args.p_prime,
        "m_extra": args.m_extra,
        "limit": args.limit,
        "max_order": args.max_order,
        "n_max": args.nmax,
    }
    if args.k:
        overrides["k"] = args.k
    elif args.kmax is not None:
        overrides["k"] = list(range(2, args.kmax + 1))
    if args.spec and theorem == "thm1.5":
        m = args.m if args.m is not None else parse_spec(args.spec).p + 1
        overrides["scans"] = [{"spec": args.spec, "m": m, "n_max": args.nmax or 8}]
    elif args.spec:
        overrides["specs"] = [args.spec]
    if args.m is not None and theorem == "lemma2.2":
        overrides["m"] = [args.m]
    return {k: v for k, v in overrides.items() if v is not None}


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_verify(args.theorem, _verify_overrides(args), _budget(args), args.workers, not args.quiet)
    if args.json:
        print(to_json(report))
    else:
        print(f"theorem: {report.theorem}\nsummary: {report.summary}\nchecked: {report.checked}\nfailures: {report.failures}")
        print(table(row.model_dump() for row in report.rows))
        for note in report.notes:
            print(f"note: {note}")
    return EXIT_OK if report.passed else EXIT_DISAGREE


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO logs, -vv for DEBUG")
    common.add_argument("--quiet", action="store_true", help="no progress bars")
    common.add_argument("--json", action="store_true", help="emit the stable JSON schema")

    oracle = argparse.ArgumentParser(add_help=False)
    oracle.add_argument("--workers", type=int, default=None, help="worker processes for the oracle")
    oracle.add_argument("--max-cells", type=int, default=None, help="largest m*n for the bipartite oracle")
    oracle.add_argument("--max-nodes", type=int, default=None, help="search-tree node budget")
    oracle.add_argument("--embed-steps", type=int, default=None, help="path-extension budget per containment test")

    def graph_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("g6", nargs="?", help="inline graph6 string (use \\n after an 'm n' sidecar)")
        p.add_argument("--graph", help="file with graph6 (+ optional 'm n' line) or an edge list")
        p.add_argument("--construct", nargs="+", metavar="FAMILY", help="family name followed by its parameters")

    parser = argparse.ArgumentParser(prog="forest-turan", description="Bipartite Turán numbers and spectral extrema for linear forests")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("formula", parents=[common], help="closed-form Turán numbers")
    p.add_argument("spec", help='linear forest, e.g. "5,3" or "P5+P3"')
    p.add_argument("m", nargs="?", type=int)
    p.add_argument("n", nargs="?", type=int)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--general", type=int, metavar="N", help="ex(N, F) for general graphs")
    mode.add_argument("--eg", type=int, metavar="N", help="Erdős–Gallai bound for a single path")
    mode.add_argument("--upper", action="store_true", help="max{m, p'(m+n-1)} for a single path")
    mode.add_argument("--spectral", type=int, metavar="N", help="spectral bounds sqrt(p(N-p))")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("construct", parents=[common], help="build an extremal family member")
    p.add_argument("family")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--format", choices=["graph6", "edgelist", "json"], default="graph6")
    p.add_argument("--check", metavar="SPEC", help="also report F-freeness on stderr")
    p.add_argument("--embed-steps", type=int, default=None)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("embed", parents=[common], help="find a linear forest in a graph")
    p.add_argument("spec")
    graph_input(p)
    p.add_argument("--embed-steps", type=int, default=None)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("brute", parents=[common, oracle], help="exhaustive ex(m,n;F) or ex(n,F)")
    p.add_argument("spec")
    p.add_argument("sizes", nargs="+", type=int, metavar="SIZE", help="M N, or N with --general")
    p.add_argument("--general", action="store_true")
    p.set_defaults(func=cmd_brute)

    p = sub.add_parser("scan", parents=[common, oracle], help="oracle vs formula for n = m..nmax")
    p.add_argument("spec")
    p.add_argument("m", type=int)
    p.add_argument("nmax", type=int)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("brute-spectral", parents=[common, oracle], help="spectral extremum over F-free graphs")
    p.add_argument("spec")
    p.add_argument("n", type=int)
    p.add_argument("--general", action="store_true", help="least eigenvalue over all graphs")
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=cmd_brute_spectral)

    p = sub.add_parser("spectral", parents=[common], help="lambda_max and lambda_min of a graph")
    graph_input(p)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--spec", help="also compare lambda_max with sqrt(p(n-p))")
    p.set_defaults(func=cmd_spectral)

    p = sub.add_parser("verify", parents=[common, oracle], help="check a theorem against the oracle")
    p.add_argument("theorem", help="thm1.1 thm1.2 thm1.4 thm1.5 thm1.6 thm1.7 cor1.8 lemma2.1 lemma2.2 constructions")
    p.add_argument("--max-mn", type=int)
    p.add_argument("--kmax", type=int)
    p.add_argument("--k", type=int, nargs="+")
    p.add_argument("--spec")
    p.add_argument("--m", type=int)
    p.add_argument("--nmax", type=int)
    p.add_argument("--n", type=int, nargs="+")
    p.add_argument("--p", type=int, nargs="+")
    p.add_argument("--p-prime", type=int, nargs="+")
    p.add_argument("--limit", type=int)
    p.add_argument("--m-extra", type=int, nargs="+")
    p.add_argument("--max-order", type=int)
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    """Run one subcommand and return its exit status."""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    try:
        return args.func(args)
    except ForestTuranError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
