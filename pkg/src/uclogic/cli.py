"""Command-line front end.

Exit codes: 0 affirmative verdict, 1 negative verdict, 2 usage or parse
error, 3 gate-count guard violation.  With --json a single object is written
to stdout; rationals render exactly as "p/q", decimals only as annotations
at the configured eps.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction
from typing import Any, Optional

from . import algorithms
from .algebraic import AlgebraicNumber
from .errors import GateLimitError, ParseError, UCLError
from .formulas import format_cformula, parse_cformula, variables
from .polynomials import format_polynomial
from .roots import Interval
from .semantics import (
    DEFAULT_MAX_GATES,
    Interpretation,
    outcomes,
    parse_ambition,
    satisfies,
    success_polynomial,
)

EXIT_YES = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_GUARD = 3


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _parse_valuation(text: str) -> dict[str, bool]:
    out: dict[str, bool] = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        name, sep, value = item.partition("=")
        if not sep:
            raise ParseError(f"valuation entry {item!r} is not name=value")
        value = value.strip().lower()
        if value in ("1", "t", "true"):
            out[name.strip()] = True
        elif value in ("0", "f", "false"):
            out[name.strip()] = False
        else:
            raise ParseError(f"valuation value {value!r} must be 0/1/T/F")
    return out


def _interval_json(iv: Interval) -> dict[str, Any]:
    return {
        "lo": str(iv.lo),
        "hi": str(iv.hi),
        "lo_open": iv.lo_open,
        "hi_open": iv.hi_open,
    }


def _algebraic_json(a: AlgebraicNumber, eps: Fraction) -> dict[str, Any]:
    if a.is_rational:
        return {"kind": "rational", "value": str(a.rational_value)}
    return {
        "kind": "algebraic",
        "defining": format_polynomial(a.defining),
        "interval": _interval_json(a.interval),
        "approx": str(float(a.approximate(eps))),
    }


def _valuation_json(v) -> dict[str, bool]:
    return {name: bool(val) for name, val in sorted(v.items())}


class _Runner:
    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.eps: Fraction = args.eps
        self.max_gates = args.max_gates
        if self.max_gates is None:
            env = os.environ.get("UCL_MAX_GATES")
            self.max_gates = int(env) if env else DEFAULT_MAX_GATES

    def formula(self):
        return parse_cformula(self.args.formula)

    def run(self) -> tuple[int, int, dict[str, Any], list[str]]:
        """Returns (exit_code, verdict, payload, human lines)."""
        return getattr(self, "cmd_" + self.args.command.replace("-", "_"))()

    def cmd_entails(self):
        psi = self.formula()
        gamma = tuple(parse_ambition(g) for g in self.args.gamma)
        verdict = algorithms.enta(
            algorithms.EntaQuery(psi, gamma), max_gates=self.max_gates
        )
        lines = [
            "entailed" if verdict else "not entailed: some interpretation "
            "satisfies the ambition formulas but not the circuit formula"
        ]
        return (EXIT_YES if verdict else EXIT_NO, int(verdict),
                {"formula": format_cformula(psi),
                 "gamma": [str(g) for g in gamma]}, lines)

    def cmd_witness(self):
        psi = self.formula()
        start = (
            _parse_valuation(self.args.start_valuation)
            if self.args.start_valuation
            else None
        )
        result = algorithms.pmc(
            psi,
            mode=self.args.mode,
            start_valuation=start,
            max_gates=self.max_gates,
        )
        if result.found:
            payload = {
                "found": True,
                "witness": {
                    "valuation": _valuation_json(result.valuation),
                    "nu": str(result.nu),
                    "mu": str(result.mu),
                },
                "mode": self.args.mode,
            }
            val = " ".join(
                f"{n}={'T' if b else 'F'}"
                for n, b in sorted(result.valuation.items())
            )
            lines = [
                "satisfiable",
                f"  valuation: {val if val else '(no variables)'}",
                f"  nu = {result.nu}  (~{float(result.nu):.6g})",
                f"  mu = {result.mu}  (~{float(result.mu):.6g})",
            ]
            return EXIT_YES, 1, payload, lines
        return (EXIT_NO, 0, {"found": False, "mode": self.args.mode},
                ["unsatisfiable: no interpretation satisfies the formula"])

    def cmd_sat(self):
        verdict = algorithms.sat(self.formula(), max_gates=self.max_gates)
        return (EXIT_YES if verdict else EXIT_NO, int(verdict), {},
                ["satisfiable" if verdict else "unsatisfiable"])

    def cmd_abduce(self):
        result = algorithms.arr(
            self.formula(), self.args.mu, self.args.k, max_gates=self.max_gates
        )
        payload = {
            "mu": str(self.args.mu),
            "k": self.args.k,
            "intervals": [_interval_json(iv) for iv in result.intervals],
        }
        if result.intervals:
            lines = ["reliability intervals guaranteeing the target rate:"]
            lines += [f"  {iv}" for iv in result.intervals]
            return EXIT_YES, 1, payload, lines
        return (EXIT_NO, 0, payload,
                ["no grid interval guarantees the target success rate"])

    def cmd_decide_rate(self):
        verdict = algorithms.rrd(
            self.formula(), self.args.mu, max_gates=self.max_gates
        )
        lines = [
            "yes: some reliability rate achieves the target under every valuation"
            if verdict
            else "no: no single reliability rate achieves the target"
        ]
        return (EXIT_YES if verdict else EXIT_NO, int(verdict),
                {"mu": str(self.args.mu)}, lines)

    def cmd_optimize(self):
        opt = algorithms.osc(self.formula(), eps=self.eps, max_gates=self.max_gates)
        payload: dict[str, Any] = {
            "feasible": opt.feasible,
            "attained": opt.attained,
            "nu_star": _algebraic_json(opt.nu_star, self.eps) if opt.nu_star else None,
            "mu_star": _algebraic_json(opt.mu_star, self.eps) if opt.mu_star else None,
            "certified_pair": (
                {"nu": str(opt.certified_pair[0]), "mu": str(opt.certified_pair[1])}
                if opt.certified_pair
                else None
            ),
            "diagnostic": opt.diagnostic,
        }
        if opt.feasible:
            lines = [
                "feasible",
                f"  nu* = {opt.nu_star}",
                f"  mu* = {opt.mu_star}",
                f"  certified rational pair: nu = {opt.certified_pair[0]}, "
                f"mu = {opt.certified_pair[1]}",
            ]
            return EXIT_YES, 1, payload, lines
        return EXIT_NO, 0, payload, [opt.diagnostic]

    def cmd_eval(self):
        psi = self.formula()
        valuation = _parse_valuation(self.args.assign or "")
        missing = sorted(variables(psi) - valuation.keys())
        if missing:
            raise ParseError(f"valuation misses variables: {missing}")
        interp = Interpretation(valuation, self.args.nu, self.args.mu)
        p = success_polynomial(psi, valuation, max_gates=self.max_gates)
        verdict = satisfies(interp, psi, max_gates=self.max_gates)
        value = p(interp.nu)
        payload = {
            "satisfied": verdict,
            "success_polynomial": format_polynomial(p),
            "value": str(value),
        }
        lines = [
            f"success polynomial: {format_polynomial(p)}",
            f"value at nu = {interp.nu}: {value} (~{float(value):.6g})",
            "satisfied" if verdict else
            f"not satisfied: {value} < mu = {interp.mu}",
        ]
        return (EXIT_YES if verdict else EXIT_NO, int(verdict), payload, lines)

    def cmd_outcomes(self):
        psi = self.formula()
        rows = []
        total = None
        lines = ["pattern | outcome | probability"]
        for o in outcomes(psi, max_gates=self.max_gates):
            bits = "".join("1" if b else "0" for b in o.pattern)
            rows.append(
                {
                    "pattern": bits,
                    "formula": format_cformula(o.formula),
                    "probability": format_polynomial(o.probability),
                }
            )
            lines.append(
                f"{bits or '-':>7} | {format_cformula(o.formula)} | "
                f"{format_polynomial(o.probability)}"
            )
            total = o.probability if total is None else total + o.probability
        lines.append(f"total probability: {format_polynomial(total)}")
        payload = {"rows": rows, "total": format_polynomial(total)}
        return EXIT_YES, 1, payload, lines


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ucl",
        description="Exact reasoner for circuits with unreliable gates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("-f", "--formula", required=True, help="circuit formula")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--eps", type=_fraction, default=Fraction(1, 10**6),
                       help="approximation tolerance for decimal annotations")
        p.add_argument("--max-gates", type=int, default=None,
                       help="unreliable-gate limit (default 24; env UCL_MAX_GATES)")

    p = sub.add_parser("entails", help="ambition-constrained validity")
    common(p)
    p.add_argument("--gamma", action="append", default=[],
                   help="ambition formula 'mu <= P' (repeatable)")

    p = sub.add_parser("witness", help="construct a satisfying interpretation")
    common(p)
    p.add_argument("--mode", choices=("faithful", "fast"), default="faithful")
    p.add_argument("--start-valuation", default=None,
                   help="valuation examined first, e.g. 'x=1,y=0'")

    p = sub.add_parser("sat", help="satisfiability")
    common(p)

    p = sub.add_parser("abduce", help="reliability-rate interval abduction")
    common(p)
    p.add_argument("--mu", type=_fraction, required=True,
                   help="target success rate in (1/2, 1]")
    p.add_argument("--k", type=int, required=True, help="grid resolution")

    p = sub.add_parser("decide-rate", help="single-rate achievability")
    common(p)
    p.add_argument("--mu", type=_fraction, required=True,
                   help="target success rate in (1/2, 1]")

    p = sub.add_parser("optimize", help="maximum achievable success rate")
    common(p)

    p = sub.add_parser("eval", help="check one interpretation against the formula")
    common(p)
    p.add_argument("--assign", required=True, help="valuation, e.g. 'x1=1,x2=0'")
    p.add_argument("--nu", type=_fraction, required=True)
    p.add_argument("--mu", type=_fraction, required=True)

    p = sub.add_parser("outcomes", help="enumerate outcomes and probabilities")
    common(p)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        code, verdict, payload, lines = _Runner(args).run()
    except GateLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    if args.json:
        print(
            json.dumps(
                {
                    "command": args.command,
                    "verdict": verdict,
                    "payload": payload,
                    "eps": str(args.eps),
                    "elapsed_ms": elapsed_ms,
                }
            )
        )
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
