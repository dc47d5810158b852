"""Command-line surface: solve, verify, generate, benchmark.

Verbs: cover, cycle-cover, top-cover, iso-cover, exact, verify, gen, bench.
Solver verbs read a graph (edge-list by default, graph6 with --format),
re-verify their own witness before printing it as JSON with a bounds
object, and exit 3 if the self-check fails (a bug, not bad input).  Exit
codes: 0 success, 1 invalid input or failed verification, 2 I/O error,
3 internal invariant breach.  bench emits one JSON line per instance and
honors ODDCOVER_THREADS for parallel workers.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .core import (
    Graph,
    InternalInvariantError,
    degree_profile,
    lower_bound,
    verify_cover,
)
from .families import FAMILIES, counterexample, generate, walecki_cycles
from .io import emit_edge_list, load_witness, parse_edge_list, parse_graph6, witness_json
from .oracle import MAX_ORACLE_N, exact_c2, exact_p2
from .solver import cycle_odd_cover, iso_cover_general, path_odd_cover
from .systems import topological_cover


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_graph(args: argparse.Namespace) -> Graph:
    text = _read_text(args.input)
    if args.format == "graph6":
        return parse_graph6(text)
    return parse_edge_list(text)


def _bounds(g: Graph, upper: int, method: str) -> dict:
    with_density = g.n <= 12
    return {
        "lower": lower_bound(g, with_density=with_density),
        "upper": upper,
        "method": method,
    }


def _emit_cover(args, cover, bounds, extra=None) -> int:
    report = verify_cover(cover)
    if not report.valid:
        raise InternalInvariantError("solver output failed verification")
    doc = witness_json(cover, bounds=bounds, extra=extra)
    _write_text(getattr(args, "output", None), json.dumps(doc, indent=2) + "\n")
    return 0


def _cmd_cover(args) -> int:
    g = _load_graph(args)
    cover = path_odd_cover(g)
    delta, v_odd, _ = degree_profile(g)
    upper = max(v_odd // 2, 2 * -(-delta // 2))
    return _emit_cover(args, cover, _bounds(g, upper, "degree-pipeline"))


def _cmd_cycle_cover(args) -> int:
    g = _load_graph(args)
    cover = cycle_odd_cover(g)
    delta, _, _ = degree_profile(g)
    bounds = {"lower": delta // 2, "upper": delta, "method": "layer-closing"}
    return _emit_cover(args, cover, bounds)


def _cmd_top_cover(args) -> int:
    g = _load_graph(args)
    h, cover, chains = topological_cover(g)
    delta, v_odd, _ = degree_profile(g)
    k = max(v_odd // 2, -(-delta // 2))
    extra = {
        "subdivision": {f"{u},{v}": chain for (u, v), chain in sorted(chains.items())},
        "target_edges": [list(e) for e in sorted(h.edges)],
    }
    bounds = {"lower": k, "upper": k, "method": "subdivision-system"}
    return _emit_cover(args, cover, bounds, extra)


def _cmd_iso_cover(args) -> int:
    g = _load_graph(args)
    cover, branch = iso_cover_general(g)
    delta, v_odd, _ = degree_profile(g)
    bounds = {
        "lower": lower_bound(g) if g.n > 12 else lower_bound(g, with_density=True),
        "upper": cover.count,
        "method": f"iso/{branch}",
    }
    extra = {"added_vertices": cover.target.n - g.n}
    return _emit_cover(args, cover, bounds, extra)


def _cmd_exact(args) -> int:
    g = _load_graph(args)
    if g.n > MAX_ORACLE_N:
        raise ValueError(f"exact search needs n <= {MAX_ORACLE_N}")
    solve = exact_c2 if args.kind == "cycle" else exact_p2
    res = solve(g, args.max_k)
    if res is None:
        doc = {"k": None, "exceeded": True, "max_k": args.max_k}
        _write_text(args.output, json.dumps(doc, indent=2) + "\n")
        return 0
    k, cover = res
    bounds = _bounds(g, k, "exhaustive")
    return _emit_cover(args, cover, bounds, extra={"k": k})


def _cmd_verify(args) -> int:
    g = parse_edge_list(_read_text(args.graph))
    cover = load_witness(_read_text(args.witness), g)
    report = verify_cover(cover)
    doc = {
        "valid": report.valid,
        "count": cover.count,
        "member_errors": report.member_errors,
        "missing_edges": [list(e) for e in report.missing_edges],
        "excess_edges": [list(e) for e in report.excess_edges],
    }
    _write_text(args.output, json.dumps(doc, indent=2) + "\n")
    return 0 if report.valid else 1


def _family_params(args) -> dict:
    params = {}
    for key in ("n", "k", "len", "seed"):
        val = getattr(args, key.replace("len", "length"), None)
        if val is not None:
            params[key] = val
    if args.p is not None:
        params["p"] = args.p
    return params


def _cmd_gen(args) -> int:
    g = generate(args.family, **_family_params(args))
    comments = []
    if args.family == "walecki":
        for cyc in walecki_cycles(args.k):
            comments.append("cycle " + " ".join(str(v) for v in cyc))
    if args.family == "counterexample":
        _, paths, forests, cert = counterexample(args.k)
        for p in paths:
            comments.append("path " + " ".join(str(v) for v in p))
        comments.append(f"certificate {json.dumps(cert)}")
    _write_text(args.output, emit_edge_list(g, comments))
    return 0


def _bench_instance(job: tuple) -> dict:
    index, family, params, verb = job
    g = generate(family, **params)
    t0 = time.perf_counter()
    if verb == "cycle-cover":
        cover = cycle_odd_cover(g)
        delta, _, _ = degree_profile(g)
        bound = delta
    else:
        cover = path_odd_cover(g)
        delta, v_odd, _ = degree_profile(g)
        bound = max(v_odd // 2, 2 * -(-delta // 2))
    elapsed = time.perf_counter() - t0
    return {
        "instance": index,
        "n": g.n,
        "m": g.m,
        "verb": verb,
        "count": cover.count,
        "bound": bound,
        "valid": verify_cover(cover).valid,
        "seconds": round(elapsed, 6),
    }


def _cmd_bench(args) -> int:
    jobs = []
    for i in range(args.count):
        params = _family_params(args)
        if "seed" in params or args.family in ("gnp", "eulerian-random"):
            params["seed"] = (args.seed or 0) + i
        jobs.append((i, args.family, params, args.verb))
    workers = int(os.environ.get("ODDCOVER_THREADS", "1"))
    results = []
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            for res in pool.map(_bench_instance, jobs):
                results.append(res)
                if not args.ordered:
                    sys.stdout.write(json.dumps(res) + "\n")
    else:
        for job in jobs:
            res = _bench_instance(job)
            results.append(res)
            if not args.ordered:
                sys.stdout.write(json.dumps(res) + "\n")
    if args.ordered:
        for res in sorted(results, key=lambda r: r["instance"]):
            sys.stdout.write(json.dumps(res) + "\n")
    bad = [r for r in results if not r["valid"] or r["count"] > r["bound"]]
    if bad:
        raise InternalInvariantError(f"{len(bad)} bench instances failed")
    return 0


def _add_graph_input(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("input", nargs="?", default="-", help="graph file or - for stdin")
    sub.add_argument(
        "--format", choices=("edge-list", "graph6"), default="edge-list"
    )
    sub.add_argument("-o", "--output", default=None, help="output file (default stdout)")


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="oddcover",
        description="Constructive path and cycle odd-covers with verified witnesses.",
    )
    sub = ap.add_subparsers(dest="verb", required=True)

    for verb, fn in (
        ("cover", _cmd_cover),
        ("cycle-cover", _cmd_cycle_cover),
        ("top-cover", _cmd_top_cover),
        ("iso-cover", _cmd_iso_cover),
    ):
        sp = sub.add_parser(verb)
        _add_graph_input(sp)
        sp.set_defaults(fn=fn)

    sp = sub.add_parser("exact")
    _add_graph_input(sp)
    sp.add_argument("--max-k", type=int, default=None)
    sp.add_argument("--kind", choices=("path", "cycle"), default="path")
    sp.set_defaults(fn=_cmd_exact)

    sp = sub.add_parser("verify")
    sp.add_argument("graph", help="edge-list graph file")
    sp.add_argument("witness", help="witness JSON file")
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(fn=_cmd_verify)

    sp = sub.add_parser("gen")
    sp.add_argument("--family", choices=FAMILIES, required=True)
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--length", "--len", dest="length", type=int, default=None)
    sp.add_argument("--p", type=float, default=None)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(fn=_cmd_gen)

    sp = sub.add_parser("bench")
    sp.add_argument("--family", choices=FAMILIES, required=True)
    sp.add_argument("--count", type=int, default=10)
    sp.add_argument("--verb", choices=("cover", "cycle-cover"), default="cover")
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--length", "--len", dest="length", type=int, default=None)
    sp.add_argument("--p", type=float, default=None)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--ordered", action="store_true")
    sp.set_defaults(fn=_cmd_bench)

    return ap


def main(argv: list[str] | None = None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.fn(args)
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except (OSError, IOError) as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
