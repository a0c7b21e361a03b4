"""
Command-line entry for Hypertrans.
Results go to standard output, notices and errors to standard error.

Exit status: 0 on success, 1 on usage errors, 2 on input errors.
"""

import argparse
import logging
import sys
from typing import Iterable, Optional, Sequence

from app.algorithms.enumeration import Algorithm, Backend, iter_algorithm, run_algorithm
from app.algorithms.fdinfer import (
    concise_cover,
    conditional_cover,
    format_attribute_groups,
    load_relation,
    minimal_cover,
)
from app.algorithms.genbench import (
    RNG_NAME,
    bench_run,
    bench_to_csv,
    gen_random,
    gen_worst_case,
    load_instances,
    random_spec,
)
from app.algorithms.hypergraph import (
    load_hypergraph,
    min_reduce,
    parse_hypergraph,
    profile,
    serialize_hypergraph,
    sperner_bound_holds,
)
from app.algorithms.irredundant import (
    expand_mts,
    format_generalized_nodes,
    imt_extract,
    iter_expand,
    parse_generalized_nodes,
)
from app.algorithms.localgen import decompose, format_decomposition
from app.algorithms.multimember import TmmMode, extract_tmm
from app.algorithms.transversality import minimum_traverse, transversality_report
from app.core.config import settings
from app.core.errors import HypergraphError
from app.core.logging import get_logger, setup_logging
from app.models.hypergraph import Hypergraph, MtSet
from app.utils.helpers import format_context, format_sets, split_list

logger = get_logger(__name__)

USAGE_ERROR = 1
INPUT_ERROR = 2


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit status 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _write(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") or not text else text + "\n")


def _write_stream(sets: Iterable[Iterable[int]]) -> int:
    """One line per set as it arrives; returns how many were written."""
    count = 0
    for s in sets:
        sys.stdout.write(" ".join(str(v) for v in s) + "\n")
        count += 1
    return count


def _notice(text: str) -> None:
    sys.stderr.write(f"# {text}\n")


def _load_reduced(path: str) -> Hypergraph:
    h = load_hypergraph(path)
    reduced = min_reduce(h)
    if reduced is not h:
        _notice(f"input is not simple; reduced from {h.m} to {reduced.m} edges")
    return reduced


def cmd_mt(args) -> int:
    h = _load_reduced(args.file)
    if args.show_parts:
        _write(format_decomposition(decompose(h, minimum_traverse(h))))
    if args.stream:
        _write(f"# count: {_write_stream(iter_algorithm(h, args.algo))}")
    else:
        _write(format_sets(run_algorithm(h, args.algo)))
    return 0


def cmd_tau(args) -> int:
    report = transversality_report(load_hypergraph(args.file))
    _write(f"{report.greedy_k} {report.exact_tau} {'true' if report.tight else 'false'}")
    return 0


def cmd_tmm(args) -> int:
    result = extract_tmm(load_hypergraph(args.file), args.mode)
    _write(str(result.tau))
    _write(format_sets(result.tmms))
    _write(f"# coverage: {result.best_coverage}")
    return 0


def cmd_irr(args) -> int:
    h = _load_reduced(args.file)
    result = imt_extract(h, args.backend)
    _write("# groups")
    _write("\n".join(format_generalized_nodes(result.generalized)))
    _write("# irredundant hypergraph")
    _write(serialize_hypergraph(result.irredundant_h))
    _write("# irredundant minimal traverses")
    _write(format_sets(result.irredundant_mts))
    if args.expand:
        _write("# minimal traverses")
        _write_stream(iter_expand(result.irredundant_mts, result.generalized))
        _write(f"# theta: {result.with_compaction().compaction}")
    return 0


def cmd_expand(args) -> int:
    with open(args.mtfile, encoding="utf-8") as handle:
        mts = MtSet.from_sets(parse_hypergraph(handle).edges)
    with open(args.gnfile, encoding="utf-8") as handle:
        gn = parse_generalized_nodes(handle.read())
    _write(format_sets(expand_mts(mts, gn)))
    return 0


def cmd_fd_cover(args) -> int:
    r = load_relation(args.csv)
    _write(f"# attributes: {' '.join(f'{name}={i}' for i, name in enumerate(r.attributes))}")
    if not (args.concise or args.conditional):
        _write("\n".join(minimal_cover(r, args.backend).lines()))
        return 0

    concise = concise_cover(r, args.backend)
    cover = concise if args.concise else minimal_cover(r, args.backend)
    _write("\n".join(cover.lines()))
    if args.concise:
        for a, gn in (concise.per_attribute_gn or {}).items():
            lines = format_attribute_groups(r.attributes, gn)
            if lines:
                _write(f"# groups {a}")
                _write("\n".join(lines))
    if args.conditional:
        _write("# conditional")
        for found in conditional_cover(r, concise).values():
            for c in found:
                _write(c.line())
    return 0


def cmd_gen(args) -> int:
    if args.random is not None:
        n, m, p_l, p_u = int(args.random[0]), int(args.random[1]), float(args.random[2]), float(args.random[3])
        seed = int(args.random[4]) if len(args.random) == 5 else None
        spec = random_spec(n, m, p_l, p_u, seed)
        h = gen_random(spec)
        header = f"# rng: {RNG_NAME}\n# seed: {spec.seed}\n"
    else:
        h = gen_worst_case(*args.worst)
        header = ""
    text = header + serialize_hypergraph(h)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
        logger.info(f"Wrote {h.m} edges to {args.output}")
    else:
        _write(text)
    return 0


def cmd_bench(args) -> int:
    instances = load_instances(args.dir)
    algorithms = [Algorithm(name) for name in split_list(args.algos)]
    rows = bench_run([h for _, h in instances], algorithms, with_irr=args.irr)
    metadata = {"rng": RNG_NAME, "seed": settings.seed, "warmup": settings.BENCH_WARMUP}
    _write(bench_to_csv(rows, metadata))
    if args.store:
        from app.services.bench_service import bench_service
        _notice(f"stored run {bench_service.store_rows(rows)}")
    return 0


def cmd_stats(args) -> int:
    h = load_hypergraph(args.file)
    p = profile(h)
    report = transversality_report(h)
    _write(format_context({
        "n": p.n,
        "m": p.m,
        "rank": p.rank,
        "antirank": p.antirank,
        "simple": str(p.simple).lower(),
        "sperner_bound": str(sperner_bound_holds(min_reduce(h))).lower(),
        "greedy_k": report.greedy_k,
        "tau": report.exact_tau,
    }))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hypertrans", description="Minimal traverses of hypergraphs and their applications.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress on standard error")
    sub = parser.add_subparsers(dest="command", required=True)
    backends = [b.value for b in Backend]

    p = sub.add_parser("mt", help="enumerate minimal traverses")
    p.add_argument("file")
    p.add_argument("--algo", choices=[a.value for a in Algorithm], default=settings.default_backend)
    p.add_argument("--stream", action="store_true", help="print in discovery order, then a count")
    p.add_argument("--show-parts", action="store_true", help="dump the decomposition first")
    p.set_defaults(handler=cmd_mt)

    p = sub.add_parser("tau", help="greedy and exact transversality number")
    p.add_argument("file")
    p.set_defaults(handler=cmd_tau)

    p = sub.add_parser("tmm", help="multi-member minimal traverses")
    p.add_argument("file")
    p.add_argument("--mode", choices=[m.value for m in TmmMode], default=TmmMode.OM2D.value)
    p.set_defaults(handler=cmd_tmm)

    p = sub.add_parser("irr", help="irredundant minimal traverses")
    p.add_argument("file")
    p.add_argument("--backend", choices=backends, default=settings.default_backend)
    p.add_argument("--expand", action="store_true", help="also print every minimal traverse and theta")
    p.set_defaults(handler=cmd_irr)

    p = sub.add_parser("expand", help="expand irredundant traverses with a group file")
    p.add_argument("mtfile")
    p.add_argument("gnfile")
    p.set_defaults(handler=cmd_expand)

    p = sub.add_parser("fd-cover", help="functional dependency cover of a CSV relation")
    p.add_argument("csv")
    p.add_argument("--backend", choices=backends, default=settings.default_backend)
    p.add_argument("--concise", action="store_true")
    p.add_argument("--conditional", action="store_true")
    p.set_defaults(handler=cmd_fd_cover)

    p = sub.add_parser("gen", help="generate an instance")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--random", nargs="+", metavar="N M PL PU [SEED]")
    group.add_argument("--worst", nargs=2, type=int, metavar=("M", "BLOCK"))
    p.add_argument("-o", "--output", help="write to a file instead of standard output")
    p.set_defaults(handler=cmd_gen)

    p = sub.add_parser("bench", help="benchmark algorithms over a directory of .dat files")
    p.add_argument("--dir", required=True)
    p.add_argument("--algos", default=settings.default_backend, help="comma-separated algorithm names")
    p.add_argument("--irr", action="store_true", help="add irredundant counts and theta")
    p.add_argument("--store", action="store_true", help="also store the rows in the database")
    p.set_defaults(handler=cmd_bench)

    p = sub.add_parser("stats", help="profile and transversality of an instance")
    p.add_argument("file")
    p.set_defaults(handler=cmd_stats)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "bench":
            for name in split_list(args.algos):
                if name not in {a.value for a in Algorithm}:
                    parser.error(f"unknown algorithm {name!r}")
        if args.command == "gen" and args.random is not None and len(args.random) not in (4, 5):
            parser.error(f"--random takes N M PL PU [SEED], got {len(args.random)} values")
    except SystemExit as e:
        return USAGE_ERROR if e.code not in (0, None) else 0

    setup_logging(logging.INFO if args.verbose else None)
    try:
        return args.handler(args)
    except (HypergraphError, OSError, ValueError) as e:
        sys.stderr.write(f"error: {getattr(e, 'message', None) or e}\n")
        return INPUT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
