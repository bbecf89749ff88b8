"""Command-line front end: matrices, expansions, products and verification suites.

Exit codes: 0 when no report fails (a discrepancy, i.e. a stated identity
found false and adjudicated, does not fail), 1 when a check fails, 2 on usage
errors and refused sizes.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .compositions import Composition, ResourceLimitError, compositions_of
from .report import FAIL, PASS, Report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _composition(text: str) -> Composition:
    try:
        I = Composition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc
    if not I:
        raise argparse.ArgumentTypeError("empty composition")
    return I


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("NCSF_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError as exc:
        raise UsageError(f"NCSF_SEED must be an integer, got {env!r}") from exc


# --- rendering --------------------------------------------------------------

def _expansion_rows(expansion: dict, letter: str) -> list:
    order = {}
    for K in expansion:
        order.setdefault(K.n, compositions_of(K.n))
    keys = sorted(expansion, key=lambda K: (K.n, order[K.n].index(K)))
    return [(f"{letter}_{K.key()}", str(expansion[K])) for K in keys]


def _render_rows(rows, fmt: str, header=("basis", "coefficient")) -> str:
    if fmt == "json":
        return json.dumps(dict(rows), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue()
    terms = [f"\\left({c.replace('*', ' ')}\\right) {b.split('_')[0]}_{{{b.split('_', 1)[1]}}}"
             for b, c in rows]
    return " \\\\\n+ ".join(terms) + "\n" if terms else "0\n"


def _render_reports(reports, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.to_json() for r in reports], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(("suite", "status", "checked", "witnesses", "notes"))
        for r in reports:
            writer.writerow((r.suite, r.status, r.checked, len(r.witnesses), " | ".join(r.notes)))
        return buf.getvalue()
    return "\n".join(str(r) for r in reports) + "\n"


def _exit_code(reports) -> int:
    return EXIT_FAIL if any(r.status == FAIL for r in reports) else EXIT_OK


# --- subcommands ------------------------------------------------------------

def cmd_kostka(args):
    from .parambases import inverse_kostka, kostka_matrix

    M = inverse_kostka(args.n, args.family) if args.inverse else kostka_matrix(args.n, args.family)
    if args.format == "json":
        return json.dumps(M.to_json(), indent=2) + "\n", EXIT_OK
    return (M.to_csv() if args.format == "csv" else M.to_latex()), EXIT_OK


def cmd_expand(args):
    from .parambases import basis_element, dual_element

    I = args.comp
    elem = dual_element(I, args.family) if args.dual else basis_element(I, args.family)
    return _render_rows(_expansion_rows(elem.ribbon_expansion(), "R"), args.format), EXIT_OK


def cmd_product(args):
    from .parambases import product_in_basis

    coeffs = product_in_basis(args.left, args.right, args.family)
    letter = "P" if args.family == "generic" else "H"
    return _render_rows(_expansion_rows(coeffs, letter), args.format), EXIT_OK


def cmd_nabla(args):
    from .nabla import nabla_lambda, nabla_ribbon

    if args.comp is None and args.lambda_n is None:
        raise UsageError("nabla needs --comp I or --lambda N")
    out = nabla_lambda(args.lambda_n) if args.comp is None else nabla_ribbon(args.comp)
    return _render_rows(_expansion_rows(out, "R"), args.format), EXIT_OK


def cmd_quasidet(args):
    from .quasidet import factor_binomials, factoring_family, r_expansion, render_factored, ribbon_pair, \
        s_expansion

    I = args.comp
    pair = ribbon_pair(I.n) if args.pair == "ribbon" else factoring_family(I.n)
    if args.basis == "S":
        rows = _expansion_rows(s_expansion(pair, I), "S")
    else:
        expansion = r_expansion(pair, I)
        rows = []
        for name, c in _expansion_rows(expansion, "R"):
            if args.factored:
                J = Composition.parse(name[2:])
                fact = factor_binomials(expansion[J])
                c = render_factored(*fact) if fact is not None else c
            rows.append((name, c))
    return _render_rows(rows, args.format), EXIT_OK


def cmd_hookcheck(args):
    from .comsym import hook_checks

    if not 0 <= args.k < args.n:
        raise UsageError("hookcheck needs 0 <= k < n")
    report = hook_checks(args.n, args.k, args.mode)
    return _render_reports([report], args.format), _exit_code([report])


def cmd_verify(args):
    from . import suites

    names = suites.SUITE_NAMES if args.suite == "all" else (args.suite,)
    reports = []
    for name in names:
        reports.extend(suites.run_suite(name, args.max_n, _seed(args)))
    summary = Report(f"verify[{args.suite}, max-n={args.max_n}]")
    for r in reports:
        summary.merge(r)
    summary.witnesses = []
    summary.notes = []
    summary.data["suites"] = {r.suite: r.status for r in reports}
    reports.append(summary)
    return _render_reports(reports, args.format), _exit_code(reports)


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    from .suites import SUITE_NAMES

    parser = _Parser(prog="ncsf", description="Multiparameter noncommutative symmetric functions.")
    parser.add_argument("--seed", type=int, default=None, help="seed for random-point checks (else NCSF_SEED)")
    parser.add_argument("--format", choices=("json", "csv", "latex"), default="json")
    parser.add_argument("--out", help="write output to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    families = ("generic", "qt", "bz", "hlt")

    p = sub.add_parser("kostka", help="Kostka matrix K_n (or its inverse)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", choices=families, default="qt")
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(func=cmd_kostka)

    p = sub.add_parser("expand", help="ribbon expansion of a basis element")
    p.add_argument("--comp", type=_composition, required=True)
    p.add_argument("--family", choices=families, default="qt")
    p.add_argument("--dual", action="store_true", help="expand the dual basis element instead")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("product", help="product of two basis elements in the same basis")
    p.add_argument("--left", type=_composition, required=True)
    p.add_argument("--right", type=_composition, required=True)
    p.add_argument("--family", choices=families, default="qt")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("nabla", help="nabla on a ribbon or on Lambda_n")
    p.add_argument("--comp", type=_composition)
    p.add_argument("--lambda", dest="lambda_n", type=int)
    p.set_defaults(func=cmd_nabla)

    p = sub.add_parser("quasidet", help="H'_I(U, V) for the ribbon or factoring pair")
    p.add_argument("--comp", type=_composition, required=True)
    p.add_argument("--pair", choices=("ribbon", "factoring"), default="factoring")
    p.add_argument("--basis", choices=("S", "R"), default="R")
    p.add_argument("--factored", action="store_true", help="print R coefficients as binomial products")
    p.set_defaults(func=cmd_quasidet)

    p = sub.add_parser("hookcheck", help="commutative image of H'_(n-k,1^k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=("macdonald", "transform"), default="macdonald")
    p.set_defaults(func=cmd_hookcheck)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=("all",) + SUITE_NAMES, default="all")
    p.add_argument("--max-n", type=int, default=4)
    p.set_defaults(func=cmd_verify)
    return parser


def _common_options_anywhere(argv):
    """Let ``--seed/--format/--out`` appear after the subcommand too."""
    head, tail = [], []
    it = iter(argv)
    for tok in it:
        name = tok.split("=", 1)[0]
        if name in ("--seed", "--format", "--out"):
            head.append(tok)
            if "=" not in tok:
                head.append(next(it, ""))
        else:
            tail.append(tok)
    return head + tail


def run(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_common_options_anywhere(argv))
        text, code = args.func(args)
    except UsageError as exc:
        print(f"ncsf: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, KeyError, ResourceLimitError) as exc:
        print(f"ncsf: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
