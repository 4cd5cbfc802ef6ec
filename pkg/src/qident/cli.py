"""Command line entry point: ``qident list | verify | eval``."""
from __future__ import annotations

import argparse
import dataclasses
import sys

from . import arithfn, qgamma, qseries, qtrig, theta
from .kernel import Branch, DomainError, TruncationPolicy, nome_from_q, nome_from_tau
from .verify import REGISTRY, SUITE_POLICY, ConfigError, SuiteConfig, emit_report, load_config, run_suite

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


def format_value(v) -> str:
    """15 significant digits; the imaginary part only when nonzero."""
    v = complex(v)
    if v.imag == 0:
        return format(v.real, ".15g")
    return f"{format(v.real, '.15g')}{format(v.imag, '+.15g')}j"


def _complex_arg(text: str) -> complex:
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")


def _tau_arg(text: str) -> complex:
    try:
        re, im = (float(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"--tau expects RE,IM, got {text!r}")
    return complex(re, im)


def _cmd_list(args) -> int:
    for case in REGISTRY.values():
        print(f"{case.id}\t{case.category.value}\t{case.description}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    try:
        config = load_config(args.config) if args.config else SuiteConfig()
        if args.seed is not None:
            config = dataclasses.replace(config, seed=args.seed)
        if args.eps is not None:
            config = dataclasses.replace(config, policy=TruncationPolicy(args.eps, config.policy.max_terms))
        if args.tol is not None:
            config = dataclasses.replace(config, tolerances={**config.tolerances, "default": args.tol})
        ids = [i.strip() for i in args.ids.split(",") if i.strip()] if args.ids else list(REGISTRY)
        report = run_suite(ids, config)
    except (ConfigError, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    data = emit_report(report, args.format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    for s in report.summaries:
        status = "PASS" if s.ok else "FAIL"
        print(f"{status} {s.case_id} {s.passed}/{s.total}", file=sys.stderr)
        for note in s.notes:
            print(f"     {note}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FAIL


EVAL_ARITY = {"theta1": 1, "qgamma": 1, "sinq": 1, "psi": 0, "pq": 1, "lambdaq": 1}


def _evaluate(name: str, values: list, n, policy=SUITE_POLICY) -> complex:
    if name == "theta1":
        return theta.theta1(values[0], n, policy)
    if name == "qgamma":
        return qgamma.q_gamma(values[0], n, policy)
    if name == "sinq":
        return qtrig.sin_q_theta(values[0], n, policy)
    if name == "psi":
        return qseries.ramanujan_psi(n, policy)
    m = int(values[0].real)
    if m != values[0] or m < 1:
        raise DomainError(f"{name} needs a positive integer, got {values[0]}")
    if name == "pq":
        return arithfn.pq_direct(m, n, policy)
    return arithfn.q_von_mangoldt(m, n, policy)


def _cmd_eval(args) -> int:
    if len(args.args) != EVAL_ARITY[args.function]:
        print(f"{args.function} takes {EVAL_ARITY[args.function]} argument(s)", file=sys.stderr)
        return EXIT_CONFIG
    try:
        values = [_complex_arg(a) for a in args.args]
        if args.tau is not None:
            n = nome_from_tau(args.tau)
        elif args.q is not None:
            n = nome_from_q(args.q, Branch(args.branch.replace("-", "_")))
        else:
            print("one of --q or --tau is required", file=sys.stderr)
            return EXIT_CONFIG
        print(format_value(_evaluate(args.function, values, n)))
    except (DomainError, ValueError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qident", description="q-series identity checker")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="print registry ids and descriptions").set_defaults(func=_cmd_list)

    v = sub.add_parser("verify", help="run identity checks and write a report")
    v.add_argument("--ids", help="comma separated registry ids (default: all)")
    v.add_argument("--config", help="JSON config file")
    v.add_argument("--format", choices=["csv", "markdown"], default="csv")
    v.add_argument("--out", help="output path (default: stdout)")
    v.add_argument("--seed", type=int)
    v.add_argument("--eps", type=float, help="truncation epsilon")
    v.add_argument("--tol", type=float, help="tolerance for every case except expected-fail ones")
    v.set_defaults(func=_cmd_verify)

    e = sub.add_parser("eval", help="evaluate one function")
    e.add_argument("function", choices=sorted(EVAL_ARITY))
    e.add_argument("args", nargs="*", help="z for theta1/qgamma/sinq, n for pq/lambdaq")
    nome = e.add_mutually_exclusive_group()
    nome.add_argument("--q", type=_complex_arg)
    nome.add_argument("--tau", type=_tau_arg, help="RE,IM")
    e.add_argument("--branch", choices=["principal", "real-root"], default="principal")
    e.set_defaults(func=_cmd_eval)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
