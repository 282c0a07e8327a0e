"""The five reasoning procedures for circuits with unreliable gates.

Each procedure builds per-valuation success polynomials and dispatches
univariate sign queries to the exact kernel.  The required success rate mu
never reaches the kernel: it is bounded only from below by strict terms and
from above by non-strict terms, so it is eliminated symbolically (see enta).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Mapping, Optional, Sequence

from .algebraic import AlgebraicNumber
from .decide import SignCondition, exists_sat, lower_envelope_max
from .formulas import CFormula, variables
from .polynomials import ONE, Polynomial, simplest_between
from .roots import Interval
from .semantics import (
    DEFAULT_MAX_GATES,
    AmbitionFormula,
    canonical_valuations,
    success_table,
)

HALF = Fraction(1, 2)
_HALF_OPEN_UNIT = Interval(HALF, 1, lo_open=True, hi_open=False)
_OPEN_UNIT = Interval(HALF, 1, lo_open=True, hi_open=True)


@dataclass(frozen=True)
class EntaQuery:
    psi: CFormula
    gamma: tuple[AmbitionFormula, ...] = ()


@dataclass(frozen=True)
class WitnessResult:
    found: bool
    valuation: Optional[Mapping[str, bool]] = None
    nu: Optional[Fraction] = None
    mu: Optional[Fraction] = None


@dataclass(frozen=True)
class AbductionResult:
    intervals: tuple[Interval, ...]


@dataclass(frozen=True)
class Optimum:
    feasible: bool
    mu_star: Optional[AlgebraicNumber] = None
    nu_star: Optional[AlgebraicNumber] = None
    attained: bool = False
    certified_pair: Optional[tuple[Fraction, Fraction]] = None
    diagnostic: str = ""


def enta(query: EntaQuery, max_gates: int = DEFAULT_MAX_GATES) -> bool:
    """Is psi entailed by the ambition formulas, over every interpretation?

    Per valuation v, a countermodel exists iff some nu in (1/2, 1] admits a
    mu with  max(1/2, P_v(nu)) < mu <= min(1, min_g G(nu)).  The lower bounds
    on mu are strict and the upper ones are not, so mu exists exactly when
    every upper bound strictly exceeds every lower bound; that is a single
    conjunction of sign conditions in nu alone.
    """
    bounds = [g.bound for g in query.gamma]
    for _, p in success_table(query.psi, max_gates=max_gates):
        conds = [SignCondition(ONE - p, ">")]
        for b in bounds:
            conds.append(SignCondition(b - p, ">"))
            conds.append(SignCondition(b - Polynomial.constant(HALF), ">"))
        found, _ = exists_sat(conds, _HALF_OPEN_UNIT)
        if found:
            return False
    return True


def _valuation_order(
    psi: CFormula,
    start_valuation: Optional[Mapping[str, bool]],
) -> list[dict[str, bool]]:
    order = list(canonical_valuations(sorted(variables(psi))))
    if start_valuation is None:
        return order
    names = sorted(variables(psi))
    missing = [n for n in names if n not in start_valuation]
    if missing:
        raise ValueError(f"start valuation misses variables: {missing}")
    first = {n: bool(start_valuation[n]) for n in names}
    return [first] + [v for v in order if v != first]


def pmc(
    psi: CFormula,
    mode: str = "faithful",
    start_valuation: Optional[Mapping[str, bool]] = None,
    max_gates: int = DEFAULT_MAX_GATES,
) -> WitnessResult:
    """Construct a satisfying interpretation, or report that none exists.

    Faithful mode returns the witness produced by checking nu = 1 first and
    then enumerating fractions nu1/nu2 by growing denominator; fast mode
    returns the kernel's cell witness directly.
    """
    if mode not in ("faithful", "fast"):
        raise ValueError(f"unknown mode {mode!r}")
    table = success_table(psi, max_gates=max_gates)
    by_val = {tuple(sorted(v.items())): p for v, p in table}
    for v in _valuation_order(psi, start_valuation):
        p = by_val[tuple(sorted(v.items()))]
        at_one = p(1)
        if at_one > HALF:
            return WitnessResult(True, v, Fraction(1), at_one)
        conds = [
            SignCondition(p - Polynomial.constant(HALF), ">"),
            SignCondition(ONE - p, ">"),
        ]
        found, witness = exists_sat(conds, _OPEN_UNIT)
        if not found:
            continue
        if mode == "fast":
            assert witness is not None  # strict conditions: open satisfying set
            return WitnessResult(True, v, witness, p(witness))
        den = 3
        while True:
            for num in range(ceil((den + 1) / 2), den):
                nu = Fraction(num, den)
                if p(nu) > HALF:
                    return WitnessResult(True, v, nu, p(nu))
            den += 1
    return WitnessResult(False)


def sat(psi: CFormula, max_gates: int = DEFAULT_MAX_GATES) -> bool:
    """Satisfiability: some valuation passes the nu = 1 test or the interior
    query 1/2 < P_v(nu) < 1 for some nu in (1/2, 1)."""
    for _, p in success_table(psi, max_gates=max_gates):
        if p(1) > HALF:
            return True
        conds = [
            SignCondition(p - Polynomial.constant(HALF), ">"),
            SignCondition(ONE - p, ">"),
        ]
        found, _ = exists_sat(conds, _OPEN_UNIT)
        if found:
            return True
    return False


def _check_mu(mu_bar: Fraction) -> Fraction:
    mu_bar = Fraction(mu_bar)
    if not HALF < mu_bar <= 1:
        raise ValueError(f"target success rate must lie in (1/2, 1], got {mu_bar}")
    return mu_bar


def arr(
    psi: CFormula,
    mu_bar: Fraction,
    k: int,
    max_gates: int = DEFAULT_MAX_GATES,
) -> AbductionResult:
    """Grid intervals of reliability rates that guarantee success rate mu_bar.

    The grid cell (1/2 + j/2k, 1/2 + (j+1)/2k] is kept iff for every
    valuation the counterexample query exists nu in the cell with
    mu_bar > P_v(nu) is unsatisfiable.
    """
    mu_bar = _check_mu(mu_bar)
    if k < 1:
        raise ValueError("k must be a positive natural number")
    table = success_table(psi, max_gates=max_gates)
    kept: list[Interval] = []
    for j in range(k):
        cell = Interval(
            HALF + Fraction(j, 2 * k),
            HALF + Fraction(j + 1, 2 * k),
            lo_open=True,
            hi_open=False,
        )
        excluded = False
        for _, p in table:
            cond = SignCondition(Polynomial.constant(mu_bar) - p, ">")
            found, _ = exists_sat([cond], cell)
            if found:
                excluded = True
                break
        if not excluded:
            kept.append(cell)
    return AbductionResult(tuple(kept))


def rrd(
    psi: CFormula, mu_bar: Fraction, max_gates: int = DEFAULT_MAX_GATES
) -> bool:
    """Is there one reliability rate giving success rate mu_bar under every
    valuation?"""
    mu_bar = _check_mu(mu_bar)
    conds = [
        SignCondition(p - Polynomial.constant(mu_bar), ">=")
        for _, p in success_table(psi, max_gates=max_gates)
    ]
    found, _ = exists_sat(conds, _HALF_OPEN_UNIT)
    return found


def osc(
    psi: CFormula,
    eps: Fraction = Fraction(1, 10**6),
    max_gates: int = DEFAULT_MAX_GATES,
) -> Optimum:
    """Maximize the circuit success rate over reliability rates in (1/2, 1].

    The best achievable rate at nu is g(nu) = min over valuations of
    P_v(nu), capped at 1; the optimum is the maximum of this lower envelope.
    Feasible means the maximum exceeds 1/2 and is attained inside the
    half-open interval; a supremum only approached at the excluded boundary
    admits no witnessing interpretation.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    table = success_table(psi, max_gates=max_gates)
    polys = [p for _, p in table] + [ONE]
    sup, argmax, attained = lower_envelope_max(polys, _HALF_OPEN_UNIT)
    half_alg = AlgebraicNumber.from_rational(HALF)
    above_half = sup.compare(half_alg) > 0
    if not above_half:
        return Optimum(
            False,
            mu_star=sup,
            nu_star=argmax,
            attained=attained,
            diagnostic=(
                f"infeasible: supremum {_render(sup, eps)} of the success rate "
                "is <= 1/2, below every admissible ambition"
            ),
        )
    if not attained:
        return Optimum(
            False,
            mu_star=sup,
            nu_star=argmax,
            attained=False,
            diagnostic=(
                f"infeasible: supremum {_render(sup, eps)} is not attained "
                f"(open boundary at nu = {_render(argmax, eps)})"
            ),
        )
    pair = _certified_pair(polys, argmax, sup, eps, _HALF_OPEN_UNIT)
    return Optimum(True, mu_star=sup, nu_star=argmax, attained=True,
                   certified_pair=pair)


def _render(a: AlgebraicNumber, eps: Fraction) -> str:
    if a.is_rational:
        return str(a.rational_value)
    return f"~{float(a.approximate(eps)):.10g}"


def _envelope_value(polys: Sequence[Polynomial], x: Fraction) -> Fraction:
    return min(p(x) for p in polys)


def _certified_pair(
    polys: Sequence[Polynomial],
    argmax: AlgebraicNumber,
    sup: AlgebraicNumber,
    eps: Fraction,
    iv: Interval,
) -> tuple[Fraction, Fraction]:
    """Rational (nu, mu) with mu <= g(nu) exactly and sup - mu <= eps."""
    if argmax.is_rational:
        nu_hat = argmax.rational_value
        return nu_hat, _envelope_value(polys, nu_hat)
    a = argmax
    while True:
        a = a.refined()
        lo, hi = a.interval.lo, a.interval.hi
        for nu_hat in (simplest_between(lo, hi), lo, hi):
            if not iv.contains(nu_hat):
                continue
            mu_hat = _envelope_value(polys, nu_hat)
            if mu_hat <= HALF:
                continue
            # sup - mu_hat <= eps, decided exactly
            if sup.compare(AlgebraicNumber.from_rational(mu_hat + eps)) <= 0:
                return nu_hat, mu_hat
