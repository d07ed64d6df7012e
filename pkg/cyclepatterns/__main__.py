# -*- coding: utf-8 -*-
"""
Command line interface: ``python -m cyclepatterns <command> ...``.

Data goes to stdout, progress to stderr.
"""
from __future__ import with_statement, print_function, absolute_import

import argparse
import json
import logging
import sys

from cyclepatterns.enumeration import CYCLE_MODES, MODES, cycle_table, enumerate_refined, refined_table
from cyclepatterns.exceptions import CyclePatternsError
from cyclepatterns.formulas import FORMULA_IDS, resolve_formula
from cyclepatterns.pattern import PatternSet
from cyclepatterns.util import Config, setup_logging
from cyclepatterns.verify import SUITES, errata, run_suite

_logger = logging.getLogger("cyclepatterns")

FORMATS = ("text", "json", "csv")


def _dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _add_patterns(parser):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--pattern", help="a single pattern, e.g. 3142")
    group.add_argument("--patterns", help="comma-separated patterns of one length, e.g. 123,321")


def _patterns(args):
    return PatternSet.parse(args.pattern if args.pattern is not None else args.patterns)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=None, help="worker processes for enumeration")
    common.add_argument("--config", default=None, help="JSON file with max_n, max_cycle, order, jobs")
    common.add_argument("--format", choices=FORMATS, default="text")
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("--quiet", action="store_true", help="no progress on stderr")
    verbosity.add_argument("--verbose", action="store_true", help="debug output on stderr")

    parser = argparse.ArgumentParser(prog="cyclepatterns",
                                     description="Pattern statistics in the cycle structure of permutations")
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    count = commands.add_parser("count", parents=[common], help="one refined count over S_n")
    _add_patterns(count)
    count.add_argument("--mode", choices=MODES, required=True)
    count.add_argument("--n", type=int, required=True)

    table = commands.add_parser("table", parents=[common], help="refined counts for n = 0..max-n")
    _add_patterns(table)
    table.add_argument("--mode", choices=MODES, required=True)
    table.add_argument("--max-n", type=int, required=True)

    cycles = commands.add_parser("cycles", parents=[common], help="cycle counts for m = 0..max-n")
    _add_patterns(cycles)
    cycles.add_argument("--mode", choices=CYCLE_MODES, required=True)
    cycles.add_argument("--max-n", type=int, required=True)

    series = commands.add_parser("series", parents=[common], help="evaluate a formula by id",
                                 epilog="ids: " + ", ".join(name for name, _ in FORMULA_IDS))
    series.add_argument("--id", required=True, dest="formula")
    series.add_argument("--order", type=int, default=None)

    check = commands.add_parser("check", parents=[common], help="run a check suite")
    check.add_argument("--suite", choices=SUITES, default="all")
    check.add_argument("--max-n", type=int, default=None)
    check.add_argument("--order", type=int, default=None)
    check.add_argument("--timings", action="store_true", help="include elapsed times in the report")

    commands.add_parser("errata", parents=[common], help="print the corrected published statements")
    return parser


def _count(args, config):
    patterns = _patterns(args)
    poly = enumerate_refined(args.n, patterns, args.mode, config)
    if args.format == "json":
        return _dumps({"patterns": str(patterns), "mode": args.mode, "n": args.n,
                       "count": str(poly.at_ones()), "poly": poly.to_json()})
    if args.format == "csv":
        return "n,count\n%d,%d\n" % (args.n, poly.at_ones())
    return "%d\n%s\n" % (poly.at_ones(), poly)


def _table(args, config, build):
    result = build(_patterns(args), args.mode, args.max_n, config)
    if args.format == "json":
        return _dumps(result.to_json())
    if args.format == "csv":
        return result.to_csv()
    return "".join("%d %d %s\n" % (n, count, result[n])
                   for n, count in enumerate(result.scalars()))


def _series(args, config):
    order = config.order if args.order is None else args.order
    seq = resolve_formula(args.formula, order, config)
    if args.format == "json":
        return _dumps({"id": args.formula, "order": order, "terms": seq.to_json()})
    if args.format == "csv":
        return "n,count\n" + "".join("%d,%d\n" % item for item in enumerate(seq.scalars()))
    return "".join("%d: %s\n" % (n, term) for n, term in enumerate(seq))


def _errata(args):
    entries = errata()
    if args.format == "json":
        return _dumps([e.to_json() for e in entries])
    lines = []
    for e in entries:
        lines.append("%s: %s" % (e.key, e.topic))
        lines.append("  published: %s" % e.published)
        lines.append("  corrected: %s" % e.corrected)
        if e.check:
            lines.append("  confirmed by: %s" % e.check)
    return "\n".join(lines) + "\n"


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(quiet=args.quiet, verbose=args.verbose)
    try:
        config = Config(jobs=args.jobs, config_file=args.config)
        if args.command == "count":
            out = _count(args, config)
        elif args.command == "table":
            out = _table(args, config, refined_table)
        elif args.command == "cycles":
            out = _table(args, config, cycle_table)
        elif args.command == "series":
            out = _series(args, config)
        elif args.command == "check":
            report = run_suite(args.suite, args.max_n, args.order, config)
            out = report.to_text() if args.format == "text" else report.dumps(args.timings) + "\n"
            sys.stdout.write(out)
            return 0 if report.passed else 1
        else:
            out = _errata(args)
    except CyclePatternsError as e:
        _logger.error("%s", e)
        return e.exit_code
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
