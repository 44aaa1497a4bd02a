"""Command-line entry point.  JSON goes to stdout, logs to stderr.

Exit codes: 0 success, 1 a verification check failed, 2 usage or parse
error, 3 capacity limit exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .errors import CapacityError, InputError
from .formats import format_dimacs, parse_cnf, parse_graph
from .fvs import fvs_above_degeneracy, fvs_decide
from .oracles import (
    brute_cluster_deletion_number,
    brute_distance_to_kr_free,
    brute_max_independent_set,
    brute_min_fvs,
    brute_min_vertex_cover,
)
from .params import clique_number, degeneracy, degree_profile, h_index, treewidth_exact
from .planar import vc_above_treewidth_planar
from .reductions import (
    REDUCTIONS,
    clique_to_vc_complement,
    fvs_to_fvs_below_vc,
    is_to_vc_above_krfree,
    sat3_to_vc_above_cvd,
    vc_to_fvs_triangles,
)
from .vc import vc_above_h_index, vc_decide
from .verify import SUITES, run_suite

log = logging.getLogger("aboveguarantee")

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3

ABOVE_MODES = {"vc": ("h-index", "treewidth-planar"), "fvs": ("degeneracy",)}


class _UsageError(Exception):
    pass


def _read(path: str) -> tuple[str, str]:
    data = Path(path).read_bytes()
    return data.decode(), hashlib.sha256(data).hexdigest()


def _emit(payload: dict, digest: str | None) -> None:
    out = {"version": __version__, "input_sha256": digest}
    out.update(payload)
    json.dump(out, sys.stdout, indent=2)
    sys.stdout.write("\n")


def cmd_params(args) -> int:
    text, digest = _read(args.file)
    G = parse_graph(text)
    out = {"n": G.n, "m": G.edge_count}
    if G.n:
        out["min_degree"], out["max_degree"] = degree_profile(G)
    else:
        out["min_degree"] = out["max_degree"] = None
    out.update(h_index=h_index(G), degeneracy=degeneracy(G), clique_number=clique_number(G))
    try:
        out["treewidth"] = treewidth_exact(G)
    except CapacityError as exc:
        log.warning("treewidth omitted: %s", exc)
    _emit(out, digest)
    return EXIT_OK


def cmd_solve(args) -> int:
    if args.above and args.above not in ABOVE_MODES[args.problem]:
        raise _UsageError(f"--above {args.above} is not available for {args.problem}")
    text, digest = _read(args.file)
    G = parse_graph(text)
    k = args.k
    parameter = {"k": k}
    if args.problem == "vc":
        if args.above == "h-index":
            res = vc_above_h_index(G, k)
            parameter.update(h=res.stats["h"], ell=k - res.stats["h"])
        elif args.above == "treewidth-planar":
            res, report = vc_above_treewidth_planar(G, k)
            parameter.update(report.to_json())
        else:
            res = vc_decide(G, k)
    else:
        if args.above == "degeneracy":
            res = fvs_above_degeneracy(G, k)
            parameter.update(d=res.stats["d"], ell=k - res.stats["d"])
        else:
            res = fvs_decide(G, k)
    out = res.to_json()
    out.update(problem=args.problem, mode=args.above or "plain", parameter=parameter)
    _emit(out, digest)
    return EXIT_OK


def cmd_reduce(args) -> int:
    text, digest = _read(args.input)

    def need_k() -> int:
        if args.k is None:
            raise _UsageError(f"reduction {args.name} needs -k")
        return args.k

    if args.name in ("sat-cvd", "sat-cvd-extended"):
        art = sat3_to_vc_above_cvd(parse_cnf(text), extended=args.name == "sat-cvd-extended")
    else:
        G = parse_graph(text)
        if args.name == "clique-complement":
            art = clique_to_vc_complement(G, need_k())
        elif args.name == "vc-fvs-triangle":
            art = vc_to_fvs_triangles(G, need_k())
        elif args.name == "is-krfree":
            art = is_to_vc_above_krfree(G, need_k(), args.r)
        else:
            art = fvs_to_fvs_below_vc(G, need_k())

    sidecar = art.sidecar()
    dimacs = format_dimacs(art.graph, [f"{art.name} {art.budget_name}={art.budget}"])
    if args.output:
        out_path = Path(args.output)
        out_path.write_text(dimacs)
        side_path = out_path.with_name(out_path.name + ".json")
        side_path.write_text(json.dumps(sidecar, indent=2) + "\n")
        log.info("wrote %s and %s", out_path, side_path)
        sidecar = dict(sidecar, output=str(out_path), sidecar=str(side_path))
    else:
        sidecar = dict(sidecar, dimacs=dimacs)
    _emit(sidecar, digest)
    return EXIT_OK


def cmd_oracle(args) -> int:
    text, digest = _read(args.file)
    G = parse_graph(text)
    if args.param == "vc":
        res = brute_min_vertex_cover(G)
    elif args.param == "is":
        res = brute_max_independent_set(G)
    elif args.param == "fvs":
        res = brute_min_fvs(G)
    elif args.param == "cvd":
        res = brute_cluster_deletion_number(G)
    else:
        res = brute_distance_to_kr_free(G, args.r)
    _emit(res.to_json(), digest)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_suite(args.suite, seed=args.seed, count=args.count, index=args.index)
    token = f"{args.suite}:{args.seed}:{report.count}:{args.index}"
    for check in report.by_status("fail"):
        replay = f"verify {args.suite} --seed {args.seed}"
        if check.index is not None:
            replay += f" --index {check.index}"
        log.error("FAIL %s (replay: %s): %s", check.check_id, replay, check.detail)
    _emit(report.to_json(), hashlib.sha256(token.encode()).hexdigest())
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aboveguarantee",
        description="Vertex Cover and Feedback Vertex Set above structural guarantees.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="structural parameters of a graph")
    p.add_argument("file", help="DIMACS or edge-list graph")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("solve", help="decide vc(G) <= k or fvs(G) <= k")
    p.add_argument("problem", choices=sorted(ABOVE_MODES))
    p.add_argument("file")
    p.add_argument("-k", type=int, required=True, help="solution size budget")
    p.add_argument(
        "--above",
        choices=["h-index", "degeneracy", "treewidth-planar"],
        help="branch above a guarantee (vc: h-index, treewidth-planar; fvs: degeneracy)",
    )
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("reduce", help="build a reduction instance with certificates")
    p.add_argument("name", choices=REDUCTIONS)
    p.add_argument("input", help="graph file, or DIMACS CNF for sat-cvd*")
    p.add_argument("-k", type=int, help="clique size, budget or independent set size")
    p.add_argument("-r", type=int, default=3, help="clique order for is-krfree (default 3)")
    p.add_argument("-o", "--output", help="DIMACS output path; the sidecar goes to OUTPUT.json")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("oracle", help="brute-force parameter value with a witness")
    p.add_argument("param", choices=["vc", "is", "fvs", "cvd", "dist-kr"])
    p.add_argument("file")
    p.add_argument("-r", type=int, default=3, help="clique order for dist-kr (default 3)")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="run a randomized verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, help="number of instances (suite default if omitted)")
    p.add_argument("--index", type=int, help="replay a single instance")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InputError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())
