"""Command line front end.

Exit codes: 0 pass, 1 usage or parse error, 2 verification failure,
3 flagged / inconclusive, 4 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import verify as V
from .bounds import delta_plus_one_check, largest_real_root, merris_bound, poly_F, poly_f2, poly_f3, poly_fk, thm31_bound
from .enumeration import EnumSpec, enumerate_graphs, rank_by_index
from .errors import C4SpectraError, NumericalError
from .graphio import parse_graph, read_graph_file, to_graph6
from .spectral import dominant_eigenpair, laplacian, signless_laplacian

EXIT_OK, EXIT_USAGE, EXIT_FAIL, EXIT_FLAGGED, EXIT_NUMERIC = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def int_range(text: str) -> list[int]:
    """``"6"``, ``"6..9"`` or ``"6,8,10"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer range {text!r}") from None


def graph_arg(text: str):
    try:
        return text, parse_graph(text)
    except C4SpectraError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _fmt(x: float) -> str:
    return repr(round(float(x), 12))


def _graph_sources(args):
    out = list(args.graph or [])
    for path in args.graph_file or []:
        out.append((path, read_graph_file(path)))
    if not out:
        raise C4SpectraError("give at least one --graph or --graph-file")
    return out


def run_compute(args) -> int:
    records = []
    for label, g in _graph_sources(args):
        rec = {"graph": label, "n": g.n, "m": g.m, "max_degree": g.max_degree}
        for which, matrix in (("q", signless_laplacian), ("mu", laplacian)):
            if args.index in (which, "both"):
                res = dominant_eigenpair(matrix(g), args.tol)
                rec[which] = res.value
                rec[f"residual_{which}"] = res.residual
        records.append(rec)
    _emit(records, args.format)
    return EXIT_OK


def run_bound(args) -> int:
    if args.thm31:
        if args.n is None or args.k is None:
            raise C4SpectraError("--thm31 needs --n and --k")
        _emit([{"bound": "thm31", "n": args.n, "k": args.k, "value": thm31_bound(args.n, args.k)}], args.format)
        return EXIT_OK
    records = []
    for label, g in _graph_sources(args):
        rec = {"graph": label}
        if args.which in ("merris", "all"):
            b = merris_bound(g)
            rec.update(merris=b.value, achieving_vertex=b.achieving_vertex, equality_class=b.equality_class)
        if args.which in ("delta", "all"):
            d = delta_plus_one_check(g)
            rec.update(delta_plus_one=d.delta + 1, q=d.q, mu=d.mu, q_lower_ok=d.q_lower_ok,
                       mu_lower_ok=d.mu_lower_ok, q_equality=d.q_equality, mu_equality=d.mu_equality)
        records.append(rec)
    _emit(records, args.format)
    return EXIT_OK


POLYS = {
    "fk": lambda a: poly_fk(a.n, a.k),
    "f2": lambda a: poly_f2(a.n),
    "f3": lambda a: poly_f3(a.n),
    "F": lambda a: poly_F(a.n),
}


def run_root(args) -> int:
    if args.poly == "fk" and args.k is None:
        raise C4SpectraError("fk needs --k")
    p = POLYS[args.poly](args)
    lo = args.lo if args.lo is not None else (args.n if args.poly == "fk" else args.n - 1)
    hi = args.hi if args.hi is not None else 2 * (args.n - 1)
    root = largest_real_root(p, lo, hi, args.tol or 1e-12)
    _emit([{"poly": str(p), "lo": lo, "hi": hi, "root": root}], args.format)
    return EXIT_OK


def run_enumerate(args) -> int:
    spec = EnumSpec(args.n, args.k, c4_free=args.c4free, max_degree=args.max_degree, min_degree=args.min_degree)
    result = enumerate_graphs(spec, workers=args.workers)
    if args.rank:
        ranking = rank_by_index(result, args.rank, args.top)
        lines = [f"{to_graph6(g)},{_fmt(v)}" for g, v in ranking.entries]
    else:
        graphs = result.graphs[: args.top] if args.top else result.graphs
        lines = [to_graph6(g) for g in graphs]
    text = "".join(line + "\n" for line in lines)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _reports_for(args) -> list:
    claim = args.claim
    ns = args.n
    which = args.index
    if claim == "thm3.1":
        if ns is None or args.k is None:
            raise C4SpectraError("thm3.1 needs --n and --k")
        return [V.verify_thm31(n, k, which, args.workers) for n in ns for k in args.k]
    if claim == "thm3.2":
        return [V.verify_thm32(n, which, not args.all_unicyclic, args.workers) for n in ns or range(6, 10)]
    if claim == "thm3.3":
        return [V.verify_thm33(n, which, True, args.workers, allow_small=args.allow_small) for n in ns or (8, 9)]
    if claim == "lem2.1":
        lo, hi = (min(ns), max(ns)) if ns else (5, 9)
        return [V.verify_lemma21_random(args.trials or 500, (lo, hi), args.seed)]
    if claim in ("lem2.2", "lem2.3", "proof3.1-edgecount"):
        n_max = args.n_max or (max(ns) if ns else 7)
        fn = {"lem2.2": V.verify_degree_sum_bound, "lem2.3": V.verify_delta_plus_one, "proof3.1-edgecount": V.verify_edgecount}[claim]
        return [fn(n_max)]
    if claim == "lem2.4":
        return [V.verify_polynomial_agreement(ns or (6, 10, 20, 50, 100, 200))]
    if claim == "rem3.4":
        return [V.verify_remark34(args.n_max or 10, workers=args.workers)]
    if claim == "proof3.2-F":
        lo, hi = (min(ns), max(ns)) if ns else (6, 50)
        return [V.verify_F_positivity((lo, hi), args.trials or 1000, args.seed)]
    raise C4SpectraError(f"unknown claim {claim!r}")


def run_verify(args) -> int:
    if args.margin is not None:
        V.MARGIN = args.margin
    if args.tol is not None:
        V.MATCH_TOL = args.tol
    reports = _reports_for(args)
    for r in reports:
        print(r.summary())
    if args.out:
        text = V.reports_to_csv(reports) if args.format == "csv" else V.reports_to_json(reports) + "\n"
        Path(args.out).write_text(text)
    status = V.combine(r.status for r in reports)
    return {V.PASS: EXIT_OK, V.FAIL: EXIT_FAIL, V.FLAGGED: EXIT_FLAGGED}[status]


def _emit(records: list[dict], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(records, indent=2, sort_keys=True))
    elif fmt == "csv":
        keys = list(records[0])
        print(",".join(keys))
        for rec in records:
            print(",".join(_fmt(rec[k]) if isinstance(rec[k], float) else str(rec[k]) for k in keys))
    else:
        for rec in records:
            print(" ".join(f"{k}={_fmt(v) if isinstance(v, float) else v}" for k, v in rec.items()))


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="c4spectra", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_opts(sp):
        sp.add_argument("--graph", action="append", type=graph_arg,
                        help="constructor spec: path:4 star:5 cycle:6 complete:4 gnk:7,2 u2:6,A b2:8,B g6:<str>")
        sp.add_argument("--graph-file", action="append", help="'n m' header then one 'u v' edge per line")
        sp.add_argument("--format", choices=("plain", "json", "csv"), default="plain")

    c = sub.add_parser("compute", help="spectral indices of graphs")
    graph_opts(c)
    c.add_argument("--index", choices=("q", "mu", "both"), default="both")
    c.add_argument("--tol", type=float, default=None, help="residual tolerance (default 1e-10 * n)")
    c.set_defaults(func=run_compute)

    b = sub.add_parser("bound", help="degree bounds of graphs, or the extremal value")
    graph_opts(b)
    b.add_argument("--which", choices=("merris", "delta", "all"), default="all")
    b.add_argument("--thm31", action="store_true", help="largest root of f_k for --n, --k")
    b.add_argument("--n", type=int)
    b.add_argument("--k", type=int)
    b.set_defaults(func=run_bound)

    r = sub.add_parser("root", help="largest real root of a polynomial family")
    r.add_argument("--poly", choices=tuple(POLYS), required=True)
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--k", type=int)
    r.add_argument("--lo", type=float)
    r.add_argument("--hi", type=float)
    r.add_argument("--tol", type=float)
    r.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    r.set_defaults(func=run_root)

    e = sub.add_parser("enumerate", help="connected k-cyclic graphs as graph6 lines")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--c4free", action="store_true")
    e.add_argument("--max-degree", type=int)
    e.add_argument("--min-degree", type=int)
    e.add_argument("--rank", choices=("q", "mu"))
    e.add_argument("--top", type=int)
    e.add_argument("--out")
    e.add_argument("--workers", type=int, default=1)
    e.set_defaults(func=run_enumerate)

    v = sub.add_parser("verify", help="verify a claim and write a report")
    v.add_argument("--claim", choices=V.CLAIMS, required=True)
    v.add_argument("--n", type=int_range, help="order(s): 6, 6..9 or 6,8")
    v.add_argument("--k", type=int_range)
    v.add_argument("--n-max", type=int)
    v.add_argument("--index", choices=("q", "mu"), default="q")
    v.add_argument("--trials", type=int)
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--all-unicyclic", action="store_true", help="thm3.2 over all unicyclic graphs, not only C4-free")
    v.add_argument("--allow-small", action="store_true", help="admit the n = 7 probe for thm3.3")
    v.add_argument("--margin", type=float, help="strict-inequality margin (default 1e-8)")
    v.add_argument("--tol", type=float, help="value-agreement tolerance (default 1e-8)")
    v.add_argument("--out")
    v.add_argument("--format", choices=("json", "csv"), default="json")
    v.add_argument("--workers", type=int, default=1)
    v.set_defaults(func=run_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (C4SpectraError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
