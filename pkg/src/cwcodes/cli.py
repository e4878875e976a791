"""Command-line front end.

Exit codes: 0 success / positive verdict, 1 negative verdict, 2 input error,
3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import autgroup
from .construct import canonical_code
from .equivalence import NotConstantWeight, equivalence_permutation, permute_code, render_cycles
from .gf2 import CapExceeded, format_code, parse_rows, span_basis
from .supports import admissible_params, check_characterization

OK, NEGATIVE, INPUT_ERROR, INCONSISTENT = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load_rows(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_rows(fh.read())
    except (OSError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def cmd_construct(args) -> int:
    if args.k < 1 or args.m < 1 or args.n < 1:
        raise InputError("k, m and n must be positive")
    verdict = admissible_params(args.k, (1 << (args.k - 1)) * args.m, args.n)
    if not verdict:
        raise InputError(verdict.reason)
    code = canonical_code(args.k, args.m, args.n)
    text = format_code(code)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    if args.json:
        rows = [format(r, f"0{code.length}b") for r in code.rows]
        print(json.dumps({"n": code.length, "k": code.dimension, "rows": rows}))
    elif not args.output:
        sys.stdout.write(text)
    return OK


def cmd_verify(args) -> int:
    rows = _load_rows(args.file)
    verdict = check_characterization(rows)
    text = verdict.summary()
    if verdict:
        text += "\n" + verdict.partition.render()
    _emit(args, verdict.to_json(), text)
    return OK if verdict else NEGATIVE


def cmd_partition(args) -> int:
    rows = _load_rows(args.file)
    verdict = check_characterization(rows)
    _emit(args, verdict.partition.to_json(), verdict.partition.render())
    return OK


def cmd_equiv(args) -> int:
    a = span_basis(_load_rows(args.file_a))
    b = span_basis(_load_rows(args.file_b))
    try:
        sigma = equivalence_permutation(a, b)
    except NotConstantWeight as exc:
        print(f"not constant weight: {exc}", file=sys.stderr)
        return NEGATIVE
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return NEGATIVE
    if permute_code(sigma, a) != b:
        return INCONSISTENT
    cycles = render_cycles(sigma)
    _emit(args, {"n": a.length, "permutation": cycles}, cycles)
    return OK


def _constant_weight_code(path):
    code = span_basis(_load_rows(path))
    verdict = check_characterization(code)
    return code, verdict


def _report_text(rep: autgroup.PAutReport, with_generators: bool) -> str:
    lines = [
        f"order ({rep.method}): {rep.order}",
        "orbits: " + " ".join("{" + ",".join(map(str, o)) + "}" for o in rep.orbits),
        f"transitive: {'yes' if rep.transitive else 'no'}",
    ]
    if with_generators:
        lines += ["generators:"] + [f"  {render_cycles(g)}" for g in rep.generators]
    return "\n".join(lines)


def cmd_paut(args) -> int:
    code, verdict = _constant_weight_code(args.file)
    if not verdict or verdict.k < 2:
        print(f"not a constant weight code of dimension >= 2: {verdict.reason or 'k = 1'}", file=sys.stderr)
        return NEGATIVE
    formula = autgroup.paut_order_formula(verdict.k, verdict.m, code.length)
    if args.brute_force:
        rep = autgroup.brute_force_paut(code, args.cap)
        if rep.order != formula:
            print(f"brute-force order {rep.order} != formula {formula}", file=sys.stderr)
            return INCONSISTENT
    else:
        rep = autgroup.formula_report(code)
    if args.json:
        payload = rep.to_json(with_generators=args.generators)
        if args.brute_force:
            payload["formula_order"] = str(formula)
        print(json.dumps(payload))
    else:
        text = f"order (formula): {formula}\n" if args.brute_force else ""
        print(text + _report_text(rep, args.generators))
    return OK


def cmd_count(args) -> int:
    if args.k < 2 or args.m < 1 or args.n < 1:
        raise InputError("count needs k >= 2, m >= 1, n >= 1")
    verdict = admissible_params(args.k, (1 << (args.k - 1)) * args.m, args.n)
    if not verdict:
        raise InputError(verdict.reason)
    rep = autgroup.census_count(args.k, args.m, args.n) if args.exhaustive else autgroup.count_report(args.k, args.m, args.n)
    if args.exhaustive and rep.count != autgroup.code_count_formula(args.k, args.m, args.n):
        return INCONSISTENT
    _emit(args, rep.to_json(), str(rep.count))
    return OK


def cmd_feasible(args) -> int:
    code = span_basis(_load_rows(args.file))
    verdict = autgroup.group_code_necessary(code, args.cap)
    text = "possible" if verdict else "impossible: PAut not transitive"
    _emit(args, {"possible": verdict.possible, "orbits": verdict.orbits}, text)
    return OK if verdict else NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cwcodes", description="Binary linear constant weight codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("construct", cmd_construct, "emit the canonical code for (k, m, n)")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-o", "--output")

    p = add("verify", cmd_verify, "certify constant weight via the support partition")
    p.add_argument("file")

    p = add("partition", cmd_partition, "print the support partition of the file's basis")
    p.add_argument("file")

    p = add("equiv", cmd_equiv, "print a permutation mapping code A onto code B")
    p.add_argument("file_a")
    p.add_argument("file_b")

    p = add("paut", cmd_paut, "automorphism group order and orbits")
    p.add_argument("file")
    p.add_argument("--brute-force", action="store_true")
    p.add_argument("--generators", action="store_true")
    p.add_argument("--cap", type=int, default=autgroup.BRUTE_FORCE_CAP)

    p = add("count", cmd_count, "number of distinct codes with the given parameters")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--exhaustive", action="store_true", help="also run the census")

    p = add("feasible", cmd_feasible, "group-code necessary condition (PAut transitivity)")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=autgroup.BRUTE_FORCE_CAP)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    try:
        return args.func(args)
    except (InputError, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except RuntimeError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
