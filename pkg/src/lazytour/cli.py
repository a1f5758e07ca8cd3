"""Command-line front end: ``lazytour <command> ...``.

Exit codes: 0 success, 1 usage or parse error, 2 verification failure,
3 resource bound exceeded.
"""

import argparse
import json
import sys
import time
from multiprocessing import Pool

from . import kapranov, multidegrees as md, parking, tournament, trees, verify

EXIT_OK, EXIT_USAGE, EXIT_FAILED, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _composition_arg(text):
    try:
        return md.parse_composition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _size(args):
    if args.k is not None:
        if args.n is not None and args.n != len(args.k):
            raise UsageError(f"--k has {len(args.k)} parts but --n is {args.n}")
        return len(args.k)
    if args.n is None:
        raise UsageError("give --n or --k")
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    return args.n


def _render_prefix(args):
    root, n, k, fmt = args
    lines = []
    for r in trees.extend_roots(root, n, require_ab_adjacent=True):
        t = trees.LabeledTree(r)
        if fmt == "json":
            tr = tournament.run_tournament(t)
            if k is None or tr.win_counts == k:
                lines.append(tr.to_json())
        elif k is None or tournament.win_counts_of_root(r, n) == k:
            lines.append(t.to_text())
    return lines


def cmd_enumerate(args, out):
    n = _size(args)
    trees.check_size(n)
    work = [(p, n, args.k, args.format)
            for p in trees.prefixes(n, require_ab_adjacent=True, depth=3)]
    count = 0

    def emit(lines):
        nonlocal count
        for line in lines:
            out.write(line + "\n")
        count += len(lines)

    if args.jobs > 1:
        with Pool(args.jobs) as pool:
            for lines in pool.imap(_render_prefix, work):
                emit(lines)
    else:
        for item in work:
            emit(_render_prefix(item))
    print(f"count: {count}", file=sys.stderr)
    return EXIT_OK


def cmd_multidegree(args, out):
    n = _size(args)
    if args.k is not None:
        out.write(f"{md.multidegree(args.k)}\n")
        return EXIT_OK
    table = md.multidegree_table(n)
    if args.format == "json":
        out.write(json.dumps({md.format_composition(k): v for k, v in table.items()}) + "\n")
        return EXIT_OK
    out.write("k,multidegree\n")
    for k, v in table.items():
        out.write(f"{md.format_composition(k, ';')},{v}\n")
    out.write(f"total,{sum(table.values())}\n")
    return EXIT_OK


def cmd_classify(args, out):
    for text in args.trees:
        t = trees.parse_tree(text)
        if args.transcript:
            out.write(tournament.run_tournament(t).to_json() + "\n")
        else:
            out.write(md.format_composition(tournament.classify(t)) + "\n")
    return EXIT_OK


def cmd_bijection(args, out):
    if args.direction == "to-pf":
        out.write(parking.tau(trees.parse_tree(args.value)).to_text() + "\n")
    else:
        out.write(parking.tau_inverse(parking.ParkingFunction.from_text(args.value)).to_text() + "\n")
    return EXIT_OK


def cmd_coords(args, out):
    if (args.tree is None) == (args.point is None):
        raise UsageError("give either a tree or --point")
    if args.tree is not None:
        emb = kapranov.embed_boundary(trees.parse_tree(args.tree))
    else:
        emb = kapranov.embed_interior_all(kapranov.parse_configuration(args.point))
    out.write((emb.to_json() if args.format == "json" else emb.to_csv()) + "\n")
    return EXIT_OK


def cmd_verify(args, out):
    start = time.perf_counter()
    report = verify.run_suite(args.suite, args.n_max, args.jobs)
    out.write(json.dumps(report, indent=2) + "\n")
    print(f"{'pass' if report['passed'] else 'FAIL'} in {time.perf_counter() - start:.1f}s",
          file=sys.stderr)
    return EXIT_OK if report["passed"] else EXIT_FAILED


def build_parser():
    p = _Parser(prog="lazytour", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("enumerate", help="list ab-adjacent trees, or Tour(k)")
    e.add_argument("--n", type=int)
    e.add_argument("--k", type=_composition_arg)
    e.add_argument("--format", choices=("text", "json"), default="text")
    e.add_argument("--jobs", type=int, default=1)
    e.set_defaults(func=cmd_enumerate)

    m = sub.add_parser("multidegree", help="one multidegree, or the table for n")
    m.add_argument("--n", type=int)
    m.add_argument("--k", type=_composition_arg)
    m.add_argument("--format", choices=("csv", "json"), default="csv")
    m.set_defaults(func=cmd_multidegree)

    c = sub.add_parser("classify", help="composition (or transcript) of trees")
    c.add_argument("trees", nargs="+")
    c.add_argument("--transcript", action="store_true")
    c.set_defaults(func=cmd_classify)

    b = sub.add_parser("bijection", help="tree <-> column-restricted parking function")
    b.add_argument("direction", choices=("to-pf", "to-tree"))
    b.add_argument("value")
    b.set_defaults(func=cmd_bijection)

    k = sub.add_parser("coords", help="coordinates under the iterated Kapranov map")
    k.add_argument("tree", nargs="?")
    k.add_argument("--point", help="interior point, e.g. a=0,b=1,c=2,1=1/2,2=inf")
    k.add_argument("--format", choices=("json", "csv"), default="json")
    k.set_defaults(func=cmd_coords)

    v = sub.add_parser("verify", help="exhaustive property suites")
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--suite", choices=("all",) + verify.SUITES, default="all")
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args, out)
    except trees.ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except parking.NotColumnRestrictedError as exc:
        print(f"error: jam: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
