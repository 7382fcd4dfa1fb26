"""
Command line interface: ``heckemod <command> [options]``

Exit codes: 0 success, 1 usage or invalid arguments, 2 computation
error, 3 a checked mathematical claim failed.
"""

import argparse
import logging
import sys
from dataclasses import dataclass
import sympy.ntheory as snt
import heckemod as hm
from heckemod.cli.cache import PolyCache
from heckemod.cli.config import FORMATS, RunConfig, resolve_cache_dir
from heckemod.cli.output import format_sequence, write_csv, write_json, write_text
from heckemod.cli.workers import prefetch
from heckemod.errors import FalsificationError, HeckeModError, InexactDivision

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COMPUTATION = 2
EXIT_FALSIFIED = 3

LOG_FORMAT = "%(asctime)s %(name)s %(levelname)s %(message)s"


@dataclass
class Report:
    """Result of one command in all three output formats"""

    payload: dict
    header: list
    rows: list
    lines: list
    status: int = EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "{0}: error: {1}\n".format(self.prog, message))


def _prime(text):
    value = int(text)
    if not snt.isprime(value):
        raise argparse.ArgumentTypeError("{0} is not prime".format(text))
    return value


def _even(text):
    value = int(text)
    if value % 2:
        raise argparse.ArgumentTypeError("weight {0} is odd".format(text))
    return value


def _check_even(k):
    if k % 2:
        raise ValueError("weight {0} is odd".format(k))


def cmd_charpoly(args, config, cache):
    p, k, ell = args.prime, args.weight, args.ell
    _check_even(k)
    poly = hm.modfactor.charpoly_int(p, k, cache)
    dim = hm.hecke.dim_cusp(k)
    text = str(poly) if dim else "1 (dim 0)"
    payload = {"p": p, "k": k, "dim": dim, "charpoly": poly.to_json()}
    factorization = ""
    if ell is not None:
        fact = hm.gfpoly.factor(hm.modfactor.charpoly_mod(p, k, ell, cache), seed=config.seed)
        factorization = str(fact)
        text = "{0} over F_{1}".format(fact, ell)
        payload.update(ell=ell, factorization=fact.to_dict(), roots=fact.roots())
    return Report(
        payload,
        ["p", "k", "ell", "dim", "charpoly", "factorization"],
        [[p, k, "" if ell is None else ell, dim, str(poly), factorization]],
        [text],
    )


def _table_tasks(ell, max_weight, single_period):
    tasks = []
    for p, kclass in hm.modfactor.paper_table(ell):
        top = max_weight
        if top is None:
            top = hm.modfactor.default_max_weight(ell, kclass, single_period)
        tasks.extend((p, kk) for kk in hm.modfactor.class_weights(ell, kclass, top))
    return tasks


def _table_text(ell, table):
    if ell == 13:
        return [
            "k = {0} mod 12: {1}".format(kclass, format_sequence(hm.modfactor.table_sequence(seq)))
            for (_, kclass), seq in table.items()
        ]
    columns = sorted({kclass for _, kclass in table})
    head = "p    " + "".join(
        "| k = {0} mod {1}".format(cc, ell - 1).ljust(24) for cc in columns
    )
    lines = [head.rstrip()]
    for row in dict.fromkeys(p for p, _ in table):
        cells = "".join(
            "| {0}".format(format_sequence(hm.modfactor.table_sequence(table[(row, cc)]))).ljust(24)
            for cc in columns
        )
        lines.append((str(row).ljust(5) + cells).rstrip())
    return lines


def cmd_table(args, config, cache):
    ell = args.ell
    if args.single_period and ell != 13:
        raise ValueError("--single-period applies to --ell 13 only")
    prefetch(cache, _table_tasks(ell, args.max_weight, args.single_period), config.jobs)
    hm.tic()
    if ell == 13:
        table = hm.modfactor.table_theorem2b(args.single_period, args.max_weight, cache)
    else:
        table = hm.modfactor.table_theorem2a(ell, args.max_weight, cache)
    hm.toc("table for ell={0}".format(ell))
    mismatches = hm.modfactor.compare_with_paper(table, ell)
    rows = []
    cells = []
    for (p, kclass), seq in table.items():
        printed = hm.modfactor.table_sequence(seq)
        matches = printed == hm.modfactor.paper_table(ell)[(p, kclass)]
        rows.append(
            [
                ell,
                p,
                p % ell,
                kclass,
                format_sequence(printed),
                "" if seq.period is None else seq.period,
                seq.verified_weight,
                "yes" if matches else "no",
            ]
        )
        cell = seq.to_dict()
        cell.update(printed=list(printed), matches=matches)
        cells.append(cell)
    lines = _table_text(ell, table)
    for item in mismatches:
        lines.append(
            "mismatch p={p} kclass={kclass}: expected {expected}, computed {computed}".format(**item)
        )
    return Report(
        {"ell": ell, "cells": cells, "mismatches": mismatches},
        ["ell", "p", "p_mod_ell", "kclass", "sequence", "period", "verified_weight", "matches"],
        rows,
        lines,
        status=EXIT_FALSIFIED if mismatches else EXIT_OK,
    )


def cmd_trace(args, config, cache):
    value = hm.traceformula.trace(args.n, args.weight)
    return Report(
        {"n": args.n, "k": args.weight, "trace": value},
        ["n", "k", "trace"],
        [[args.n, args.weight, value]],
        [str(value)],
    )


def cmd_period(args, config, cache):
    p, ell, kclass = args.prime, args.ell, args.kclass
    top = hm.modfactor.default_max_weight(ell, kclass)
    prefetch(cache, [(p, kk) for kk in hm.modfactor.class_weights(ell, kclass, top)], config.jobs)
    seq = hm.modfactor.root_sequence(p, ell, kclass, source=cache)
    trace_period = hm.traceformula.trace_mod_periodicity(p, ell, kclass)
    bound = hm.traceformula.a_j_period_bound(ell)
    lines = [
        str(seq.period),
        "roots {0}".format(format_sequence(seq.one_period())),
        "trace period in k {0}".format(trace_period),
        "(ell^2 - 1)/12 = {0}".format(bound),
    ]
    return Report(
        {
            "sequence": seq.to_dict(),
            "period": seq.period,
            "trace_period": trace_period,
            "a_j_period_bound": bound,
        },
        ["p", "ell", "kclass", "period", "trace_period", "a_j_period_bound"],
        [[p, ell, kclass, seq.period, trace_period, bound]],
        lines,
    )


def _describe(item):
    if isinstance(item, hm.galois.Certificate):
        status = (
            "conditional on: " + "; ".join(item.assumptions)
            if item.conditional
            else "unconditional"
        )
        text = "T_{{{0}}}: {1} by {2}, {3}".format(
            ",".join(str(ss) for ss in item.subject), item.claim, item.rule, status
        )
        return [text] + [
            "  ell={0}: {1}{2}".format(
                ev.ell,
                ev.factorization,
                "" if ev.cycle_type is None else " cycle type " + str(ev.cycle_type),
            )
            for ev in item.evidence
        ]
    if isinstance(item, hm.galois.NotFound):
        return [
            "T_{{{0}}}: no certificate with ell <= {1} ({2})".format(
                ",".join(str(ss) for ss in item.subject), item.bound, item.reason
            )
        ]
    return ["T_{{{0},{1}}}: {2} not applicable".format(item.p, item.k, item.rule)]


def cmd_certify(args, config, cache):
    _check_even(args.weight)
    if args.irreducible_only:
        result = hm.galois.certify_irreducible(args.prime, args.weight, args.bound, cache)
    else:
        result = hm.galois.certify_full_symmetric(args.prime, args.weight, args.bound, cache)
    found = isinstance(result, hm.galois.Certificate)
    return Report(
        result.to_dict(),
        ["p", "k", "bound", "found", "claim", "rule", "ells"],
        [
            [
                args.prime,
                args.weight,
                args.bound,
                "yes" if found else "no",
                result.claim if found else "",
                result.rule if found else "",
                " ".join(str(ev.ell) for ev in result.evidence) if found else "",
            ]
        ],
        _describe(result),
    )


def _deduce_row(item, k):
    if isinstance(item, hm.galois.Certificate):
        ev = item.evidence[0]
        return [
            item.subject[0],
            k,
            item.rule,
            "yes",
            item.claim,
            "yes" if item.conditional else "no",
            ev.ell,
            format_sequence(ev.factorization.roots()),
        ]
    return [item.p, k, item.rule, "no", "", "", "", ""]


def cmd_deduce(args, config, cache):
    k = args.weight
    _check_even(k)
    primes = args.target_prime or [int(pp) for pp in snt.primerange(2, 100)]
    tasks = [(p, k) for p in primes]
    if args.bound is not None:
        tasks.append((2, k))
    prefetch(cache, tasks, config.jobs)
    result = hm.galois.deduce(k, primes, bound=args.bound, source=cache, seed=config.seed)
    lines = []
    if result.base is not None:
        lines.extend(_describe(result.base))
    rows = []
    for item in result.theorem1 + result.corollary:
        lines.extend(_describe(item))
        rows.append(_deduce_row(item, k))
    return Report(
        result.to_dict(),
        ["p", "k", "rule", "applicable", "claim", "conditional", "ell", "roots"],
        rows,
        lines,
    )


def cmd_lemma1(args, config, cache):
    top = args.kmax + max(args.ells) - 1
    tasks = [
        (p, kk)
        for p in args.primes
        for kk in range(12, top + 1, 2)
    ]
    prefetch(cache, tasks, config.jobs)
    checks = hm.modfactor.lemma1_sweep(args.primes, args.ells, args.kmax, cache)
    return Report(
        {"primes": args.primes, "ells": args.ells, "kmax": args.kmax, "checks": checks},
        ["primes", "ells", "kmax", "checks"],
        [[" ".join(map(str, args.primes)), " ".join(map(str, args.ells)), args.kmax, checks]],
        ["{0} divisibility checks passed".format(checks)],
    )


def build_parser():
    parser = _Parser(
        prog="heckemod",
        description="Hecke characteristic polynomials, their factorizations mod ell, "
        "and Galois certificates at level 1",
    )
    parser.add_argument("--cache-dir", help="polynomial cache directory (HECKE_MOD_CACHE overrides)")
    parser.add_argument("--no-cache", action="store_true", help="keep the cache in memory only")
    parser.add_argument("--seed", type=int, default=0, help="seed of the equal-degree splitting")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes")
    parser.add_argument("--format", dest="fmt", choices=FORMATS, default="text")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    cp = sub.add_parser("charpoly", help="T_{p,k}(x), optionally factored mod ell")
    cp.add_argument("--prime", type=_prime, required=True)
    cp.add_argument("--weight", type=int, required=True)
    cp.add_argument("--ell", type=_prime)
    cp.set_defaults(handler=cmd_charpoly)

    tb = sub.add_parser("table", help="periodic root tables mod 5, 7 or 13")
    tb.add_argument("--ell", type=int, choices=(5, 7, 13), required=True)
    tb.add_argument("--max-weight", type=_even)
    tb.add_argument("--single-period", action="store_true")
    tb.set_defaults(handler=cmd_table)

    tr = sub.add_parser("trace", help="trace of T_n on S_k(1)")
    tr.add_argument("--n", type=int, required=True)
    tr.add_argument("--weight", type=int, required=True)
    tr.set_defaults(handler=cmd_trace)

    pr = sub.add_parser("period", help="period of the root sequence of one class")
    pr.add_argument("--prime", type=_prime, required=True)
    pr.add_argument("--ell", type=int, choices=(5, 7, 13), required=True)
    pr.add_argument("--kclass", type=_even, required=True)
    pr.set_defaults(handler=cmd_period)

    ce = sub.add_parser("certify", help="irreducibility and full symmetric group")
    ce.add_argument("--prime", type=_prime, required=True)
    ce.add_argument("--weight", type=int, required=True)
    ce.add_argument("--bound", type=int, default=200)
    ce.add_argument("--irreducible-only", action="store_true")
    ce.set_defaults(handler=cmd_certify)

    de = sub.add_parser("deduce", help="carry a T_2 certificate to other primes")
    de.add_argument("--weight", type=int, required=True)
    de.add_argument("--target-prime", type=_prime, action="append")
    de.add_argument("--bound", type=int, help="ell bound for certifying T_{2,k}; conditional if omitted")
    de.set_defaults(handler=cmd_deduce)

    lm = sub.add_parser("lemma1", help="divisibility of T_{p,k+ell-1} by T_{p,k} mod ell")
    lm.add_argument("--primes", type=_prime, nargs="+", default=[2, 3, 5, 7, 11])
    lm.add_argument("--ells", type=_prime, nargs="+", default=[5, 7, 13])
    lm.add_argument("--kmax", type=_even, default=120)
    lm.set_defaults(handler=cmd_lemma1)
    return parser


def _configure_logging(verbose):
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)


def _emit(report, fmt, stream):
    if fmt == "json":
        write_json(report.payload, stream)
    elif fmt == "csv":
        write_csv(report.header, report.rows, stream)
    else:
        write_text(report.lines, stream)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    try:
        config = RunConfig(
            cache_dir=resolve_cache_dir(args.cache_dir, args.no_cache),
            seed=args.seed,
            jobs=args.jobs,
            fmt=args.fmt,
            verbose=args.verbose,
        )
        cache = PolyCache(config.cache_dir)
        report = args.handler(args, config, cache)
    except (FalsificationError, InexactDivision) as err:
        print("heckemod: falsified: {0}".format(err), file=sys.stderr)
        return EXIT_FALSIFIED
    except HeckeModError as err:
        print("heckemod: {0}".format(err), file=sys.stderr)
        return EXIT_COMPUTATION
    except ValueError as err:
        print("heckemod: error: {0}".format(err), file=sys.stderr)
        return EXIT_USAGE
    logger.debug("cache hits %d, misses %d", cache.hits, cache.misses)
    _emit(report, config.fmt, sys.stdout)
    return report.status


def run():
    sys.exit(main())
