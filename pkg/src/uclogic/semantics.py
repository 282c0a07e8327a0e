"""Outcome enumeration, probability polynomials, and satisfaction.

The reliability rate of a single gate is the polynomial variable ``nu``; a
misfire pattern of width m with l correct gates has probability
nu^l (1-nu)^(m-l), stored in expanded dense form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator, Mapping, Sequence, Union

from .errors import GateLimitError, ParseError
from .formulas import CFormula, apply_pattern, eval_pl, fau, variables
from .polynomials import Polynomial, parse_polynomial

DEFAULT_MAX_GATES = 24


@dataclass(frozen=True)
class Outcome:
    pattern: tuple[bool, ...]
    formula: CFormula
    probability: Polynomial


def pattern_probability(pattern: Sequence[bool]) -> Polynomial:
    """Expanded nu^l (1-nu)^(m-l) where l = number of False (correct) bits."""
    m = len(pattern)
    l = sum(1 for b in pattern if not b)
    coeffs = [Fraction(0)] * (m + 1)
    for j in range(m - l + 1):
        coeffs[l + j] += comb(m - l, j) * (-1) ** j
    return Polynomial(coeffs)


def outcome_probability(psi: CFormula, pattern: Sequence[bool]) -> Polynomial:
    if len(pattern) != len(fau(psi)):
        raise ValueError("pattern length does not match the unreliable gate count")
    return pattern_probability(pattern)


def outcomes(
    psi: CFormula, max_gates: int = DEFAULT_MAX_GATES
) -> Iterator[Outcome]:
    """All 2^m outcomes in pattern-lexicographic order (False < True)."""
    m = len(fau(psi))
    if m > max_gates:
        raise GateLimitError(m, max_gates)
    for bits in itertools.product((False, True), repeat=m):
        yield Outcome(bits, apply_pattern(psi, bits), pattern_probability(bits))


def success_polynomial(
    psi: CFormula,
    valuation: Mapping[str, bool],
    max_gates: int = DEFAULT_MAX_GATES,
) -> Polynomial:
    """Aggregated probability of the outcomes of psi satisfied by the valuation."""
    acc = Polynomial()
    for o in outcomes(psi, max_gates=max_gates):
        if eval_pl(o.formula, valuation):
            acc = acc + o.probability
    return acc


def canonical_valuations(names: Sequence[str]) -> Iterator[dict[str, bool]]:
    """Valuations over sorted names, lexicographic with False < True."""
    names = sorted(names)
    for bits in itertools.product((False, True), repeat=len(names)):
        yield dict(zip(names, bits))


def success_table(
    psi: CFormula, max_gates: int = DEFAULT_MAX_GATES
) -> list[tuple[dict[str, bool], Polynomial]]:
    """Success polynomial per valuation, canonical order, outcomes shared."""
    outs = list(outcomes(psi, max_gates=max_gates))
    table = []
    for v in canonical_valuations(sorted(variables(psi))):
        acc = Polynomial()
        for o in outs:
            if eval_pl(o.formula, v):
                acc = acc + o.probability
        table.append((v, acc))
    return table


@dataclass(frozen=True)
class AmbitionFormula:
    """mu <= P, with P a polynomial in nu only."""

    bound: Polynomial

    def __str__(self) -> str:
        from .polynomials import format_polynomial

        return f"mu <= {format_polynomial(self.bound)}"


def parse_ambition(text: str) -> AmbitionFormula:
    head, sep, rest = text.partition("<=")
    if not sep or head.strip() != "mu":
        raise ParseError("ambition formula must have the form 'mu <= P'")
    if "mu" in rest:
        raise ParseError("mu may not occur in the bound of an ambition formula")
    return AmbitionFormula(parse_polynomial(rest))


@dataclass(frozen=True)
class OutcomeFormula:
    """An o-formula: the outcomes in `members` of `target` carry probability
    at least `bound`."""

    members: tuple[CFormula, ...]
    bound: Polynomial
    target: CFormula


@dataclass(frozen=True)
class Interpretation:
    valuation: Mapping[str, bool]
    nu: Fraction
    mu: Fraction

    def __post_init__(self):
        object.__setattr__(self, "nu", Fraction(self.nu))
        object.__setattr__(self, "mu", Fraction(self.mu))
        if not Fraction(1, 2) < self.nu <= 1:
            raise ValueError(f"nu must lie in (1/2, 1], got {self.nu}")
        if not Fraction(1, 2) < self.mu <= 1:
            raise ValueError(f"mu must lie in (1/2, 1], got {self.mu}")


UCLFormula = Union[CFormula, OutcomeFormula, AmbitionFormula]


def satisfies(
    interp: Interpretation,
    formula: UCLFormula,
    max_gates: int = DEFAULT_MAX_GATES,
) -> bool:
    """Exact rational satisfaction check for c-, o-, and a-formulas."""
    if isinstance(formula, AmbitionFormula):
        return interp.mu <= formula.bound(interp.nu)
    if isinstance(formula, OutcomeFormula):
        by_formula = {
            o.formula: o.probability
            for o in outcomes(formula.target, max_gates=max_gates)
        }
        total = Polynomial()
        for member in formula.members:
            try:
                total = total + by_formula[member]
            except KeyError:
                from .formulas import format_cformula

                raise ValueError(
                    f"{format_cformula(member)} is not an outcome of the target"
                ) from None
        return formula.bound(interp.nu) <= total(interp.nu)
    p = success_polynomial(formula, interp.valuation, max_gates=max_gates)
    return interp.mu <= p(interp.nu)
