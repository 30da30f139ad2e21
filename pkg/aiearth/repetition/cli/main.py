"""``aie-rt`` command line.

Exit codes: 0 the property holds or the object was found, 1 a violation was
found or no object exists, 2 inconclusive, 3 usage, format or IO errors.
"""
import argparse
import json
import sys

from .. import __version__
from ..constructions import (
    H_TABLES,
    TreeColoringParams,
    color_cp2,
    color_cp3,
    color_cp3_5letters,
    color_cp3_ternary,
    color_tree3,
)
from ..exception import BudgetExhausted, FormatError, RepetitionException
from ..graphs import check_colored, dumps_graph, loads_graph, to_dot
from ..graphs.structures import CaterpillarSpec
from ..job import Table1Job, render_table
from ..search import FAMILIES, SearchProblem, find_coloring, get_family, prove_unavoidable, rt_bracket
from ..search.families import parse_pattern
from ..utils import load_profile, set_log_level
from ..words import FreenessSpec, GenRequest, GenStatus, Word, max_exponent, pansiot_code, search_word, violates


EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INCONCLUSIVE = 2
EXIT_ERROR = 3


class UsageError(RepetitionException):
    pass


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, "%s: error: %s\n" % (self.prog, message))


def _exp(text):
    try:
        return FreenessSpec.parse(text)
    except (FormatError, ValueError) as e:
        raise argparse.ArgumentTypeError(str(e))


def _params(items):
    params = {}
    for item in items or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError("--param expects key=value, got %r" % item)
        params[key] = value
    return params


def _read_text(path):
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as f:
        return f.read()


def _write_text(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        return
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)


def _emit_graph(g, args):
    _write_text(args.out, dumps_graph(g, indent=None))
    if args.dot:
        _write_text(args.dot, to_dot(g))


def cmd_word_gen(args):
    cfg = load_profile(args.profile)
    budget = args.budget if args.budget is not None else cfg.word.node_budget
    req = GenRequest(args.k, args.len, args.exp, budget, args.seed)
    result = search_word(req, threads=args.threads or cfg.threads)
    if result.status == GenStatus.found:
        print(result.word)
        return EXIT_OK
    if result.status == GenStatus.impossible:
        print("no %s word of length %d over %d letters (%d nodes)"
              % (args.exp, args.len, args.k, result.nodes_visited), file=sys.stderr)
        return EXIT_VIOLATION
    print("budget of %d nodes exhausted" % budget, file=sys.stderr)
    return EXIT_INCONCLUSIVE


def cmd_word_check(args):
    text = _read_text(args.file)
    lines = [(i, line) for i, line in enumerate(text.splitlines(), 1) if line.strip()]
    status = EXIT_OK
    for lineno, line in lines:
        if args.symbols:
            word, _ = Word.parse(line, symbols=True, line=lineno)
        else:
            word = Word.parse(line, args.k, line=lineno)
        if not len(word):
            print("line %d: empty word" % lineno)
            continue
        exponent, witness = max_exponent(word)
        out = {"line": lineno, "length": len(word), "max_exponent": str(exponent),
               "start": witness.start, "total_length": witness.total_length, "period": witness.period}
        if args.exp is not None:
            bad = violates(word, args.exp)
            out["spec"] = str(args.exp)
            out["free"] = bad is None
            if bad is not None:
                out["violation"] = {"start": bad.start, "total_length": bad.total_length,
                                    "period": bad.period, "exponent": str(bad.exponent)}
                status = EXIT_VIOLATION
        print(json.dumps(out))
    return status


def cmd_code_pansiot(args):
    text = _read_text(args.file)
    for lineno, line in enumerate(text.splitlines(), 1):
        if line.strip():
            print(pansiot_code(Word.parse(line, 5, line=lineno)))
    return EXIT_OK


def _pendants(args, n):
    if not args.pendants:
        return None
    return CaterpillarSpec.cyclic(n, parse_pattern(args.pendants)).pendant_counts


def cmd_color(args):
    if args.family == "cp2":
        g = color_cp2(args.n, _pendants(args, args.n))
    elif args.family == "cp3":
        g = color_cp3_ternary(args.n, _pendants(args, args.n))
    elif args.family == "cp35":
        if args.dump_tables:
            for (bit, part), row in sorted(H_TABLES.items()):
                print("h%d%d %s" % (bit, part, row))
            return EXIT_OK
        g = color_cp3_5letters(args.blocks, node_budget=args.budget)
    elif args.family == "cpk":
        g = color_cp3(args.k, args.n, node_budget=args.budget)
    else:
        g = color_tree3(TreeColoringParams(args.t, args.depth), node_budget=args.budget)
    _emit_graph(g, args)
    return EXIT_OK


def cmd_check(args):
    g = loads_graph(_read_text(args.graph))
    witness = check_colored(g, args.exp, args.max_len, threads=args.threads)
    out = {"spec": str(args.exp), "vertex_count": g.vertex_count, "max_factor_length": args.max_len,
           "free": witness is None}
    if witness is not None:
        out["witness"] = witness.to_dict()
    print(json.dumps(out))
    return EXIT_OK if witness is None else EXIT_VIOLATION


def cmd_search(args):
    cfg = load_profile(args.profile)
    budget = args.budget if args.budget is not None else cfg.search.node_budget
    threads = args.threads or cfg.threads
    params = _params(args.param)
    family = get_family(args.family)
    max_len = "auto" if args.max_len is None else (None if args.max_len <= 0 else args.max_len)

    if args.mode == "unavoidable" and args.n_start is not None:
        evidence = rt_bracket(family, args.k, args.exp, args.n_start, args.n, budget, max_len, threads,
                              confirm_next=args.confirm_next, **params)
        out = evidence.to_dict()
        out["node_budget"] = budget
        out["threads"] = threads
        out["version"] = __version__
        out["invocation"] = " ".join(sys.argv)
        print(json.dumps(out))
        if evidence.certified:
            return EXIT_VIOLATION
        return EXIT_INCONCLUSIVE

    problem = SearchProblem(
        family.build(args.n, **params),
        args.k,
        args.exp,
        node_budget=budget,
        max_factor_length=max_len,
        symmetry_breaking=not args.no_symmetry,
        progress_interval=cfg.search.progress_interval,
    )
    if args.mode == "unavoidable":
        outcome = prove_unavoidable(problem, threads)
    else:
        outcome = find_coloring(problem, seed=args.seed)
    out = outcome.to_dict()
    out["problem"] = problem.describe()
    out["version"] = __version__
    out["invocation"] = " ".join(sys.argv)
    print(json.dumps(out))
    return {"colorable": EXIT_OK, "unavoidable": EXIT_VIOLATION}.get(outcome.verdict, EXIT_INCONCLUSIVE)


def cmd_table1(args):
    job = Table1Job(args.profile, threads=args.threads, budget=args.budget, seed=args.seed,
                    invocation=" ".join(sys.argv))
    report = job.run(progress=not args.no_progress)
    if args.out:
        _write_text(args.out, json.dumps(report, indent=2))
    print(render_table(report))
    statuses = {c["status"] for c in report["cells"]}
    return EXIT_INCONCLUSIVE if "incomplete" in statuses else EXIT_OK


def build_parser():
    parser = ArgumentParser(prog="aie-rt", description="repetition thresholds of paths, caterpillars and trees")
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, ...")
    parser.add_argument("--log-file", default=None)
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    def common(p, budget=True):
        p.add_argument("--profile", default=None, help="bundled profile name or YAML path")
        p.add_argument("--threads", type=int, default=None)
        if budget:
            p.add_argument("--budget", type=int, default=None, help="node budget")

    word = sub.add_parser("word").add_subparsers(dest="action")
    word.required = True
    p = word.add_parser("gen")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--exp", type=_exp, required=True)
    p.add_argument("--seed", type=int, default=None, help="shuffle letters and restart")
    common(p)
    p.set_defaults(func=cmd_word_gen)
    p = word.add_parser("check")
    p.add_argument("file", nargs="?", default=None)
    p.add_argument("--exp", type=_exp, default=None)
    p.add_argument("--k", type=int, default=None, help="alphabet size")
    p.add_argument("--symbols", action="store_true", help="map arbitrary tokens to letters")
    p.set_defaults(func=cmd_word_check)

    code = sub.add_parser("code").add_subparsers(dest="action")
    code.required = True
    p = code.add_parser("pansiot")
    p.add_argument("file", nargs="?", default=None)
    p.set_defaults(func=cmd_code_pansiot)

    color = sub.add_parser("color").add_subparsers(dest="family")
    color.required = True
    for name in ("cp2", "cp3", "cp35", "cpk", "tree3"):
        p = color.add_parser(name)
        p.add_argument("--out", default=None)
        p.add_argument("--dot", default=None)
        p.add_argument("--budget", type=int, default=None, help="node budget for the underlying word")
        if name in ("cp2", "cp3"):
            p.add_argument("--n", type=int, required=True)
            p.add_argument("--pendants", default=None, help="pendant counts repeated along the backbone, e.g. 2,0,1")
        elif name == "cp35":
            p.add_argument("--blocks", type=int, default=1)
            p.add_argument("--dump-tables", action="store_true")
        elif name == "cpk":
            p.add_argument("--k", type=int, required=True)
            p.add_argument("--n", type=int, required=True)
        else:
            p.add_argument("--t", type=int, default=4)
            p.add_argument("--depth", type=int, required=True)
        p.set_defaults(func=cmd_color)

    p = sub.add_parser("check")
    p.add_argument("--graph", default=None, help="graph JSON, stdin when omitted")
    p.add_argument("--exp", type=_exp, required=True)
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_check)

    search = sub.add_parser("search").add_subparsers(dest="mode")
    search.required = True
    for mode in ("unavoidable", "exists"):
        p = search.add_parser(mode)
        p.add_argument("--family", choices=sorted(FAMILIES), required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--exp", type=_exp, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--param", action="append", help="family parameter key=value")
        p.add_argument("--max-len", type=int, default=None, help="0 for no limit")
        p.add_argument("--no-symmetry", action="store_true")
        common(p)
        if mode == "unavoidable":
            p.add_argument("--n-start", type=int, default=None, help="bracket from this size up to --n")
            p.add_argument("--confirm-next", action="store_true")
        else:
            p.add_argument("--seed", type=int, default=None)
        p.set_defaults(func=cmd_search)

    p = sub.add_parser("table1")
    p.add_argument("--out", default=None, help="JSON report path")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--no-progress", action="store_true")
    common(p)
    p.set_defaults(func=cmd_table1)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.log_level or args.log_file:
        set_log_level(args.log_level or "WARNING", args.log_file)
    try:
        return args.func(args)
    except BudgetExhausted as e:
        print("inconclusive: %s" % e, file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except (RepetitionException, ValueError, KeyError, OSError) as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
