"""Command-line front end: ``bettibound <command> [options] [input]``."""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Optional

from .betti import (
    BettiTable,
    format_betti_diagram,
    is_self_dual,
    parse_betti_diagram,
    table_from_json,
    table_to_json,
)
from .bounds import bound_e0, bound_ej, check_sym_pure_bound
from .decomp import (
    check_symmetric_invariants,
    decompose,
    reconstruct,
    symmetric_decompose,
)
from .errors import BettiError
from .exact import DEFAULT_DIGITS, format_decimal, format_rational
from .explorer import SearchSpec, fuzz, koszul_table
from .hilbert import coefficient_nu, coefficients_oracle, h_polynomial, numerator

COMMANDS = ("coeffs", "decompose", "sym-decompose", "bound", "verify", "fuzz", "koszul")
CHECK_ALIASES = {"prop": "proposition", "lemma": "lemma", "conj": "conjecture",
                 "theorem": "theorem", "proposition": "proposition",
                 "conjecture": "conjecture"}

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2


@dataclass
class CliConfig:
    command: str
    input: Optional[str] = None
    format: str = "diagram"
    output: str = "json"
    l: int = 2
    j: int = 1
    bound: str = "e1"
    codim: Optional[int] = None
    decimal_digits: int = DEFAULT_DIGITS
    reference_f: Optional[int] = None
    n: int = 2
    search: SearchSpec = field(default_factory=SearchSpec)
    workers: int = 1


def _load_table(config: CliConfig, data: bytes) -> BettiTable:
    text = data.decode("utf-8")
    fmt = config.format
    if fmt == "auto":
        fmt = "json" if text.lstrip().startswith("{") else "diagram"
    if fmt == "json":
        return table_from_json(text)
    return parse_betti_diagram(text)


def _rat(q, digits):
    return {"value": format_rational(q), "decimal": format_decimal(q, digits)}


def _coeffs(config, table):
    s = table.length if config.codim is None else config.codim
    K = numerator(table)
    Q = h_polynomial(K, s)
    oracle = coefficients_oracle(Q, config.l)
    via_nu = [coefficient_nu(table, s, l, max_l=max(config.l, 6)) for l in range(config.l + 1)]
    if list(oracle) != via_nu:
        raise ArithmeticError(f"power-sum route {via_nu} disagrees with h-polynomial {oracle}")
    return {
        "codim": s,
        "numerator": [format_rational(c) for c in K],
        "h_poly": [format_rational(c) for c in Q],
        "coefficients": {f"e{l}": format_rational(v) for l, v in enumerate(via_nu)},
        "decimal": {f"e{l}": format_decimal(v, config.decimal_digits)
                    for l, v in enumerate(via_nu)},
    }, EXIT_OK


def _bound(config, table):
    if config.bound == "e0":
        rep = bound_e0(table)
    else:
        j = 1 if config.bound == "e1" else config.j
        rep = bound_ej(table, j, reference_f=config.reference_f)
    return rep.to_json(config.decimal_digits), EXIT_OK


def _verify(config, table):
    """Theorem checks exit 2 on failure; conjecture failures are only listed."""
    digits = config.decimal_digits
    checks = {}
    sd = is_self_dual(table)
    checks["self_dual"] = sd is not None
    s = table.length if config.codim is None else config.codim
    K = numerator(table)
    Q = h_polynomial(K, s)
    L = max(config.l, 2)
    oracle = coefficients_oracle(Q, L)
    via_nu = tuple(coefficient_nu(table, s, l, max_l=max(L, 6)) for l in range(L + 1))
    checks["coefficient_routes_agree"] = oracle == via_nu
    dec = decompose(table)
    checks["decomposition_round_trip"] = reconstruct(dec) == table
    report = {"s": s, "coefficients": {f"e{l}": format_rational(v) for l, v in enumerate(via_nu)}}
    violations = []
    if sd is not None:
        sym = symmetric_decompose(table)
        checks["symmetric_round_trip"] = reconstruct(sym) == table
        problems = check_symmetric_invariants(sym, generated_in_degree=0)
        checks["symmetric_invariants"] = not problems
        report["symmetric_problems"] = problems
        e0 = bound_e0(table)
        e1 = bound_ej(table, 1)
        checks["bound_e0"] = e0.holds
        checks["bound_e1"] = e1.holds
        report["bound_e0"] = _rat(e0.bound, digits)
        report["bound_e1"] = _rat(e1.bound, digits)
        prop = [check_sym_pure_bound(d) for _, d in sym.parts]
        checks["sym_pure_bound_parts"] = all(ok for *_, ok in prop)
        for j in range(2, L + 1):
            rep = bound_ej(table, j)
            if not rep.holds:
                violations.append({"check": "conjecture", "j": j,
                                   "e": format_rational(rep.e_value),
                                   "bound": format_rational(rep.bound)})
    report["checks"] = checks
    report["violations"] = violations
    return report, EXIT_OK if all(checks.values()) else EXIT_VIOLATION


def run(config: CliConfig, data: bytes = b"") -> tuple:
    """Execute one command; returns ``(exit_code, report_bytes)``."""
    try:
        if config.command == "koszul":
            table = koszul_table(config.n)
            if config.output == "text":
                return EXIT_OK, format_betti_diagram(table).encode()
            return EXIT_OK, _dump(table_to_json(table), config)
        if config.command == "fuzz":
            rep = fuzz(config.search, workers=config.workers)
            out = rep.to_json()
            code = EXIT_VIOLATION if rep.theorem_violations else EXIT_OK
            return code, _dump(out, config)
        table = _load_table(config, data)
        if config.command == "coeffs":
            out, code = _coeffs(config, table)
        elif config.command == "decompose":
            out, code = decompose(table).to_json(), EXIT_OK
        elif config.command == "sym-decompose":
            out, code = symmetric_decompose(table).to_json(), EXIT_OK
        elif config.command == "bound":
            out, code = _bound(config, table)
        elif config.command == "verify":
            out, code = _verify(config, table)
        else:
            raise BettiError(f"unknown command {config.command!r}")
    except (BettiError, UnicodeDecodeError, ValueError) as exc:
        return EXIT_INPUT, _dump({"error": type(exc).__name__, "message": str(exc)}, config)
    return code, _dump(out, config)


def _dump(obj, config: CliConfig) -> bytes:
    if config.output == "text":
        return (_text(obj) + "\n").encode()
    return (json.dumps(obj, sort_keys=True, indent=2) + "\n").encode()


def _text(obj, prefix="") -> str:
    lines = []
    if isinstance(obj, dict):
        for key in sorted(obj):
            value = obj[key]
            if isinstance(value, list) and not any(isinstance(v, (dict, list)) for v in value):
                lines.append(f"{prefix}{key}: [{', '.join(map(str, value))}]")
            elif isinstance(value, (dict, list)) and value:
                lines.append(f"{prefix}{key}:")
                lines.append(_text(value, prefix + "  "))
            else:
                lines.append(f"{prefix}{key}: {json.dumps(value) if not isinstance(value, str) else value}")
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, (dict, list)):
                lines.append(f"{prefix}-")
                lines.append(_text(item, prefix + "  "))
            else:
                lines.append(f"{prefix}- {item}")
    else:
        lines.append(f"{prefix}{obj}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bettibound",
                                     description="Hilbert coefficients, decompositions and "
                                                 "bounds for graded Betti tables.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "text"), default="json")
    common.add_argument("--digits", type=int, default=None,
                        help="decimal places in renderings (env BETTI_DECIMAL_DIGITS)")
    table_args = argparse.ArgumentParser(add_help=False)
    table_args.add_argument("input", nargs="?", default="-",
                            help="Betti diagram or JSON table; '-' reads stdin")
    table_args.add_argument("--format", choices=("diagram", "json", "auto"), default="auto")
    table_args.add_argument("--codim", type=int, default=None)

    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("coeffs", parents=[common, table_args], help="Hilbert coefficients")
    p.add_argument("--l", type=int, default=2, help="highest coefficient index")
    sub.add_parser("decompose", parents=[common, table_args],
                   help="Boij-Soederberg decomposition")
    sub.add_parser("sym-decompose", parents=[common, table_args],
                   help="decomposition into symmetrized pure tables")
    p = sub.add_parser("bound", parents=[common, table_args], help="upper bound for e_j")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--e0", dest="bound", action="store_const", const="e0")
    g.add_argument("--e1", dest="bound", action="store_const", const="e1")
    g.add_argument("--ej", dest="j", type=int, default=None, metavar="J")
    p.add_argument("--reference-f", type=int, default=None,
                   help="externally quoted f_j factor to compare against")
    p = sub.add_parser("verify", parents=[common, table_args],
                       help="run all checks on one table (exit 2 on a theorem failure)")
    p.add_argument("--l", type=int, default=2)
    p = sub.add_parser("fuzz", parents=[common], help="exhaustive search over degree sequences")
    p.add_argument("--s-min", type=int, default=1)
    p.add_argument("--s-max", type=int, default=4)
    p.add_argument("--ds-max", type=int, default=10)
    p.add_argument("--check", action="append", choices=sorted(CHECK_ALIASES), default=None)
    p.add_argument("--j", type=int, action="append", default=None)
    p.add_argument("--constraint", choices=("all", "dominated_by_dual", "lemma_pairs"),
                   default="dominated_by_dual")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--no-guardrails", action="store_true")
    p = sub.add_parser("koszul", parents=[common], help="emit the Koszul table on N variables")
    p.add_argument("n", type=int)
    return parser


def config_from_args(args: argparse.Namespace) -> CliConfig:
    digits = args.digits
    if digits is None:
        digits = int(os.environ.get("BETTI_DECIMAL_DIGITS", DEFAULT_DIGITS))
    cfg = CliConfig(command=args.command, output=args.output, decimal_digits=digits)
    if hasattr(args, "input"):
        cfg.input, cfg.format, cfg.codim = args.input, args.format, args.codim
    if args.command in ("coeffs", "verify"):
        cfg.l = args.l
    if args.command == "bound":
        if args.j is not None:
            cfg.bound, cfg.j = "ej", args.j
        else:
            cfg.bound = args.bound or "e1"
        cfg.reference_f = args.reference_f
    if args.command == "fuzz":
        checks = tuple(dict.fromkeys(CHECK_ALIASES[c] for c in (args.check or ["prop"])))
        cfg.search = SearchSpec(args.s_min, args.s_max, args.ds_max, args.constraint,
                                checks, tuple(args.j or [2]), not args.no_guardrails)
        cfg.workers = args.workers
    if args.command == "koszul":
        cfg.n = args.n
    return cfg


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = config_from_args(args)
    data = b""
    if config.input is not None:
        try:
            if config.input == "-":
                data = sys.stdin.buffer.read()
            else:
                with open(config.input, "rb") as fh:
                    data = fh.read()
        except OSError as exc:
            print(f"bettibound: {exc}", file=sys.stderr)
            return EXIT_INPUT
    code, out = run(config, data)
    stream = sys.stdout if code != EXIT_INPUT else sys.stderr
    stream.buffer.write(out)
    stream.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
