"""Command-line entry point.

Exit codes: 0 success, 1 verification failure / no coloring / counterexample
found, 2 usage or parse error, 3 infeasible instance, 4 budget or overflow.
"""

import argparse
import json
import resource
import sys
import time
from fractions import Fraction

from . import baselines, engine, generators, oracle, verify
from .exceptions import (CyclicGraphError, InfeasibleInstanceError, OracleBudgetExceeded,
                         RankOverflowError)
from .graph import Digraph, UndirectedGraph
from .instance import ListInstance, RankedInstance
from .io import format_coloring, format_instance, parse_coloring, parse_instance
from .rational import format_rational, parse_rational

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INFEASIBLE, EXIT_BUDGET = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _fraction(text):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _graph_of(obj):
    return obj if isinstance(obj, (Digraph, UndirectedGraph)) else obj.graph


def _digraph(obj):
    graph = _graph_of(obj)
    if not isinstance(graph, Digraph):
        raise UsageError("this command needs a directed instance ('e' edges)")
    return graph


def _lists(obj):
    if not isinstance(obj, (ListInstance, RankedInstance)):
        raise UsageError("instance has no color lists ('l' records)")
    return obj.lists


def cmd_gen(args):
    p = args.p if args.p is not None else Fraction(1, 2)
    if args.kind == "digraph":
        graph = generators.gen_random_digraph(args.n, p, args.seed)
    elif args.kind == "tournament":
        graph = generators.gen_random_tournament(args.n, args.seed)
    elif args.kind == "dag":
        graph = generators.gen_random_dag(args.n, p, args.seed)
    else:
        graph = generators.gen_random_graph(args.n, p, args.seed)
    obj = graph
    if args.list_size is not None:
        palette = args.palette if args.palette is not None else args.list_size
        obj = ListInstance(graph, generators.gen_random_lists(args.n, palette, args.list_size, args.seed + 1))
    _write(args.output, format_instance(obj))
    return EXIT_OK


def cmd_color(args):
    if args.trace and args.output in (None, "-"):
        raise UsageError("--trace needs -o so the trace can be written beside the coloring")
    obj = parse_instance(_read(args.instance))
    D = _digraph(obj)
    if args.mode == "majority4":
        inst = engine.build_majority4_instance(D, _lists(obj))
    elif args.mode == "twothirds3":
        eps = args.epsilon if args.epsilon is not None else engine.DEFAULT_EPSILON
        inst = engine.build_twothirds3_instance(D, _lists(obj), eps)
    else:
        if not isinstance(obj, RankedInstance):
            raise UsageError("custom mode needs rank ('r') records")
        inst = obj
    coloring, trace = engine.color_with_ranks(inst, t=args.t, strategy=args.strategy, trace=args.trace)
    _write(args.output, format_coloring(coloring))
    if trace is not None:
        _write(args.output + ".trace", trace.to_text())
    return EXIT_OK


def cmd_verify(args):
    obj = parse_instance(_read(args.instance))
    graph = _graph_of(obj)
    coloring = parse_coloring(_read(args.coloring), graph.n)
    if args.ranks:
        if not isinstance(obj, RankedInstance):
            raise UsageError("--ranks needs rank ('r') records")
        report = verify.verify_rank_coloring(obj, coloring)
    elif args.k is not None:
        if not isinstance(graph, UndirectedGraph):
            raise UsageError("--k needs an undirected instance ('u' edges)")
        report = verify.verify_undirected_fraction(graph, coloring, args.k)
    else:
        frac = args.fraction if args.fraction is not None else Fraction(1, 2)
        report = verify.verify_majority_fraction(_digraph(obj), coloring, frac.numerator, frac.denominator)
    for line in report.lines():
        print(line)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_baseline(args):
    obj = parse_instance(_read(args.instance))
    if args.method == "lovasz":
        graph = _graph_of(obj)
        if not isinstance(graph, UndirectedGraph):
            raise UsageError("lovasz needs an undirected instance ('u' edges)")
        coloring = baselines.lovasz_kcolor(graph, args.k).coloring
    elif args.method == "acyclic2":
        coloring = baselines.greedy_acyclic_2color(_digraph(obj))
    else:
        D = _digraph(obj)
        order = None
        if args.order_seed is not None:
            order = generators.make_rng(args.order_seed).permutation(D.n).tolist()
        coloring = baselines.split_product_4color(D, order)
    _write(args.output, format_coloring(coloring))
    return EXIT_OK


def cmd_oracle(args):
    obj = parse_instance(_read(args.instance))
    D = _digraph(obj)
    if args.ranks:
        if not isinstance(obj, RankedInstance):
            raise UsageError("--ranks needs rank ('r') records")
        constraint = oracle.RankConstraint.from_instance(obj)
    else:
        frac = args.fraction if args.fraction is not None else Fraction(1, 2)
        constraint = oracle.FractionConstraint(frac.numerator, frac.denominator)
    lists = _lists(obj)
    if args.count:
        print(oracle.count_valid_colorings(D, lists, constraint, args.budget))
        return EXIT_OK
    res = oracle.search_list_coloring(D, lists, constraint, args.budget)
    if res.coloring is None:
        _write(args.output, format_instance(obj) + f"UNSAT after {res.candidates} candidates\n")
        return EXIT_FAIL
    _write(args.output, format_coloring(res.coloring))
    return EXIT_OK


def cmd_search(args):
    res = oracle.search_majority3_counterexample(
        args.trials, args.n_max, args.seed, family=args.family, p=args.p,
        palette=args.palette, budget=args.budget, workers=args.workers)
    if res.found:
        _write(args.output, res.counterexample.certificate())
        print(f"counterexample at trial {res.counterexample.trial}", file=sys.stderr)
        return EXIT_FAIL
    print(f"no counterexample in {res.trials} trials ({len(res.skipped)} skipped); "
          "this is evidence, not proof")
    return EXIT_OK


def bench_once(n, p, seed, palette=8):
    """Time majority-4 coloring of a random digraph; generation is not timed."""
    D = generators.gen_random_digraph(n, p, seed)
    lists = generators.gen_random_lists(n, palette, 4, seed + 1)
    start = time.perf_counter()
    inst = engine.build_majority4_instance(D, lists)
    coloring, _ = engine.color_with_ranks(inst)
    elapsed = time.perf_counter() - start
    ok = verify.verify_majority_fraction(D, coloring, 1, 2).ok
    return {"n": n, "m": D.m, "seconds": elapsed, "ok": ok}


def cmd_bench(args):
    result = bench_once(args.n, args.p, args.seed)
    result["p"] = format_rational(args.p)
    result["peak_rss_mb"] = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss / 1024
    print(json.dumps(result))
    return EXIT_OK if result["ok"] else EXIT_FAIL


def build_parser():
    parser = argparse.ArgumentParser(prog="majcolor", description="List colorings of digraphs under rank budgets.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a random instance")
    g.add_argument("kind", choices=["digraph", "tournament", "dag", "undirected"])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--p", type=_fraction, help="edge probability as P/Q (default 1/2)")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--palette", type=int)
    g.add_argument("--list-size", type=int, help="also emit random lists of this size")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("color", help="color an instance with the rank engine")
    c.add_argument("instance")
    c.add_argument("--mode", choices=["majority4", "twothirds3", "custom"], default="majority4")
    c.add_argument("--t", type=int, default=2)
    c.add_argument("--strategy", choices=engine.STRATEGIES, default="ascending")
    c.add_argument("--epsilon", type=_fraction)
    c.add_argument("--trace", action="store_true")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_color)

    v = sub.add_parser("verify", help="check a coloring")
    v.add_argument("instance")
    v.add_argument("coloring")
    vg = v.add_mutually_exclusive_group()
    vg.add_argument("--fraction", type=_fraction)
    vg.add_argument("--ranks", action="store_true")
    vg.add_argument("--k", type=int)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("baseline", help="run a non-list baseline")
    b.add_argument("method", choices=["acyclic2", "product4", "lovasz"])
    b.add_argument("instance")
    b.add_argument("--k", type=int, default=2)
    b.add_argument("--order-seed", type=int)
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_baseline)

    o = sub.add_parser("oracle", help="exhaustive list-coloring search")
    o.add_argument("instance")
    og = o.add_mutually_exclusive_group()
    og.add_argument("--fraction", type=_fraction)
    og.add_argument("--ranks", action="store_true")
    o.add_argument("--count", action="store_true")
    o.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    o.add_argument("-o", "--output")
    o.set_defaults(func=cmd_oracle)

    s = sub.add_parser("search", help="look for a majority 3-choosability counterexample")
    s.add_argument("--trials", type=int, default=500)
    s.add_argument("--n-max", type=int, default=6)
    s.add_argument("--seed", type=int, default=1)
    s.add_argument("--family", choices=oracle.FAMILIES, default="mixed")
    s.add_argument("--p", type=_fraction, default=Fraction(1, 2))
    s.add_argument("--palette", type=int, default=5)
    s.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_search)

    be = sub.add_parser("bench", help="time majority-4 coloring of a random digraph")
    be.add_argument("--n", type=int, required=True)
    be.add_argument("--p", type=_fraction, required=True)
    be.add_argument("--seed", type=int, default=0)
    be.set_defaults(func=cmd_bench)
    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (InfeasibleInstanceError, CyclicGraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (RankOverflowError, OracleBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())
