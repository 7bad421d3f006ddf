"""Command line front end.

    catalan-groebner gen --n 2 --m 5 --format latex
    catalan-groebner gb --r 3
    catalan-groebner gen --r 3 | catalan-groebner gb --input -
    catalan-groebner closed-form --r 4 --format text
    catalan-groebner verify --r 1 --r 2 --format json
    catalan-groebner catalan --max 10

Variables are written C1, C2, ... for C_{-1}, C_{-2}, ...; y is always the
smallest variable.  Exit status: 0 on success, 1 if a verification check
fails, 2 on invalid arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import exactnum as xn
from .groebner import BuchbergerOptions, RunLog, reduced_groebner_basis
from .laurent import SystemSpec, build_general_system, build_special_system
from .serialize import (
    basis_from_json,
    basis_to_json,
    basis_to_latex,
    basis_to_text,
    dumps,
    system_to_json,
)
from .verify import closed_form_basis, verify_all


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="catalan-groebner",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt="text"):
        sp.add_argument("--format", choices=("json", "latex", "text"), default=fmt)
        sp.add_argument("--output", "-o", default="-", help="output path ('-' for stdout)")

    g = sub.add_parser("gen", help="generate an equation system")
    g.add_argument("--r", type=_positive, help="special system with n=2, m=2r+1")
    g.add_argument("--n", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--q-weights", help="comma separated rationals lambda_0..lambda_{m+n-2}")
    common(g)

    b = sub.add_parser("gb", help="reduced Groebner basis of a system")
    b.add_argument("--input", "-i", help="system/basis JSON file ('-' for stdin)")
    b.add_argument("--r", type=_positive)
    b.add_argument("--n", type=int)
    b.add_argument("--m", type=int)
    b.add_argument("--q-weights")
    b.add_argument("--strategy", choices=("normal", "fifo"), default="normal")
    b.add_argument("--no-coprime", action="store_true", help="disable the coprime-leading-monomial criterion")
    common(b)

    c = sub.add_parser("closed-form", help="the closed-form basis G_{2r+1}")
    c.add_argument("--r", type=_positive, required=True)
    c.add_argument("--reduced", action="store_true", help="emit the interreduced form")
    common(c)

    v = sub.add_parser("verify", help="check every claim for the given r values")
    v.add_argument("--r", type=_positive, action="append", required=True)
    v.add_argument("--seed", type=int, help="shuffle the raw equations before the Buchberger recomputation")
    common(v)

    k = sub.add_parser("catalan", help="Catalan / lambda identity table")
    k.add_argument("--max", type=int, default=xn.J_MAX, dest="bound")
    common(k)
    return p


def _spec_from_args(args) -> SystemSpec | None:
    has_nm = args.n is not None or args.m is not None
    if args.r is not None and has_nm:
        raise UsageError("give either --r or --n/--m, not both")
    if args.r is not None:
        if args.q_weights:
            raise UsageError("--q-weights needs --n/--m")
        return SystemSpec(2, 2 * args.r + 1)
    if has_nm:
        if args.n is None or args.m is None:
            raise UsageError("--n and --m go together")
        weights = tuple(xn.parse_rational(w) for w in args.q_weights.split(",")) if args.q_weights else ()
        try:
            return SystemSpec(args.n, args.m, weights)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return None


def _system(args):
    spec = _spec_from_args(args)
    if spec is None:
        return None, None
    if args.r is not None:
        return spec, build_special_system(args.r)
    return spec, build_general_system(spec)


def _emit(args, text: str):
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _render_basis(args, basis, payload, symbol="E"):
    if args.format == "json":
        return dumps(payload)
    if args.format == "latex":
        return basis_to_latex(basis, symbol)
    return basis_to_text(basis, symbol)


def cmd_gen(args) -> int:
    spec, basis = _system(args)
    if basis is None:
        raise UsageError("gen needs --r or --n/--m")
    _emit(args, _render_basis(args, basis, system_to_json(basis, spec)))
    return 0


def cmd_gb(args) -> int:
    if args.input is not None:
        if args.r is not None or args.n is not None or args.m is not None:
            raise UsageError("--input excludes --r/--n/--m")
        fh = sys.stdin if args.input == "-" else open(args.input, encoding="utf-8")
        with fh:
            basis = basis_from_json(json.load(fh))
    else:
        _, basis = _system(args)
        if basis is None:
            raise UsageError("gb needs --input, --r or --n/--m")
    opts = BuchbergerOptions(use_coprime_criterion=not args.no_coprime, pair_strategy=args.strategy)
    log = RunLog()
    gb = reduced_groebner_basis(basis, opts, log)
    _emit(args, _render_basis(args, gb, basis_to_json(gb, log.to_json()), symbol="G"))
    if args.format != "json":
        print(f"# {json.dumps(log.to_json())}", file=sys.stderr)
    return 0


def cmd_closed_form(args) -> int:
    from .groebner import interreduce

    basis = closed_form_basis(args.r)
    if args.reduced:
        basis = interreduce(basis)
    _emit(args, _render_basis(args, basis, basis_to_json(basis), symbol="\\tilde{E}" if args.format == "latex" else "E~"))
    return 0


def cmd_verify(args) -> int:
    reports = [verify_all(r, seed=args.seed) for r in sorted(set(args.r))]
    ok = all(rep.passed for rep in reports)
    if args.format == "json":
        text = dumps({"passed": ok, "reports": [rep.to_json() for rep in reports]})
    elif args.format == "latex":
        text = "".join(basis_to_latex(rep.reduced_basis, "G", f"reduced basis, r = {rep.r}") for rep in reports if rep.reduced_basis)
    else:
        text = "\n".join(rep.summary() for rep in reports) + "\n"
    _emit(args, text)
    return 0 if ok else 1


def cmd_catalan(args) -> int:
    if args.bound < 0:
        raise UsageError("--max must be nonnegative")
    rows = []
    for j in range(args.bound + 1):
        rows.append(
            {
                "j": j,
                "catalan": xn.catalan(j),
                "lambda": xn.format_rational(xn.lambda_j(j)),
                "link": xn.catalan_lambda_link(j),
                "recursion": xn.lambda_j(j) == xn.lambda_recursive(j) and xn.catalan(j) == xn.catalan_recursive(j),
                "identity": xn.catalan_identity(j),
                "lambda_identity": xn.lambda_identity(j),
            }
        )
    ok = all(row[k] for row in rows for k in ("link", "recursion", "identity", "lambda_identity"))
    if args.format == "json":
        text = dumps({"passed": ok, "rows": rows})
    elif args.format == "latex":
        body = "\\\\\n".join(
            f"{row['j']} & {row['catalan']} & {_latex_frac(xn.lambda_j(row['j']))}" for row in rows
        )
        text = "\\begin{tabular}{rrr}\nj & c_j & \\lambda_j\\\\\n\\hline\n" + body + "\n\\end{tabular}\n"
    else:
        text = "".join(
            f"c_{row['j']} = {row['catalan']}  lambda_{row['j']} = {row['lambda']}  "
            f"identity {'holds' if row['identity'] and row['lambda_identity'] else 'FAILS'}\n"
            for row in rows
        )
    _emit(args, text)
    return 0 if ok else 1


def _latex_frac(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


COMMANDS = {
    "gen": cmd_gen,
    "gb": cmd_gb,
    "closed-form": cmd_closed_form,
    "verify": cmd_verify,
    "catalan": cmd_catalan,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.error(str(exc))  # exits with status 2


if __name__ == "__main__":
    sys.exit(main())
