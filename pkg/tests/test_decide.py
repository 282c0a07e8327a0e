import random
from fractions import Fraction as F

import numpy as np
import pytest

from uclogic.algebraic import AlgebraicNumber, evaluate_poly_at
from uclogic.decide import SignCondition, exists_sat, lower_envelope_max
from uclogic.polynomials import Polynomial
from uclogic.roots import Interval


def poly(*coeffs):
    return Polynomial([F(c) for c in coeffs])


HALF_OPEN = Interval(F(1, 2), F(1), lo_open=True)
OPEN = Interval(F(1, 2), F(1), lo_open=True, hi_open=True)


def test_sign_condition_relations():
    c = SignCondition(poly(-1, 2), ">")  # 2nu - 1 > 0
    assert c.holds_at(F(3, 4)) and not c.holds_at(F(1, 2))
    assert SignCondition(poly(0), "==").holds_at(F(7))
    with pytest.raises(ValueError):
        SignCondition(poly(1), "~")


def test_exists_sat_known_instances():
    # 2nu^2 - 2nu + 1 < 7/10 somewhere in (1/2, 1): yes (min is 1/2 at 3/4)
    found, w = exists_sat([SignCondition(poly(F(3, 10), -2, 2), "<")], HALF_OPEN)
    assert found and F(1, 2) < w <= 1
    assert 2 * w * w - 2 * w + 1 < F(7, 10)
    # nu > 1 on (1/2, 1]: no
    found, w = exists_sat([SignCondition(poly(-1, 1), ">")], HALF_OPEN)
    assert not found and w is None
    # nu >= 1 on (1/2, 1]: only the closed right endpoint
    found, w = exists_sat([SignCondition(poly(-1, 1), ">=")], HALF_OPEN)
    assert found and w == 1
    # ... but not on the open interval
    found, _ = exists_sat([SignCondition(poly(-1, 1), ">=")], OPEN)
    assert not found


def test_exists_sat_zero_poly_shortcut():
    found, w = exists_sat([SignCondition(Polynomial(), ">")], HALF_OPEN)
    assert not found
    found, w = exists_sat([SignCondition(Polynomial(), "==")], HALF_OPEN)
    assert found and F(1, 2) < w <= 1


def test_exists_sat_equality_at_irrational():
    # nu^2 = 1/2 holds only at 1/sqrt(2), an interior point of (1/2, 1)
    found, _ = exists_sat([SignCondition(poly(F(-1, 2), 0, 1), "==")], OPEN)
    assert found


def test_exists_sat_witness_is_simple():
    found, w = exists_sat([SignCondition(poly(-1, 2), ">")], HALF_OPEN)
    assert found
    assert w.denominator <= 4  # widest cell is all of (1/2, 1]


def test_exists_sat_grid_completeness():
    """If a dense float grid finds a clearly satisfying point, the exact
    procedure must agree; and every claimed witness must verify exactly."""
    rng = random.Random(99)
    grid = np.linspace(0.0, 1.0, 100_001)
    for _ in range(12):
        conds = []
        for _k in range(rng.randint(1, 3)):
            deg = rng.randint(1, 6)
            coeffs = [F(rng.randint(-8, 8)) for _ in range(deg + 1)]
            rel = rng.choice([">", "<", ">=", "<="])
            conds.append(SignCondition(Polynomial(coeffs), rel))
        found, w = exists_sat(conds, Interval(F(0), F(1)))
        if found:
            assert w is not None and all(c.holds_at(w) for c in conds)
        vals = np.ones_like(grid, dtype=bool)
        for c in conds:
            arr = np.polyval([float(x) for x in reversed(c.poly.coeffs)], grid)
            if c.relation in (">", ">="):
                vals &= arr > 1e-6
            elif c.relation in ("<", "<="):
                vals &= arr < -1e-6
            else:
                vals &= np.abs(arr) < 1e-12
        if vals.any():
            assert found, f"grid found a point but exists_sat said no: {conds}"


def test_envelope_single_poly():
    # max of nu(1-nu) on [0, 1] is 1/4 at 1/2
    sup, argmax, attained = lower_envelope_max([poly(0, 1, -1)], Interval(F(0), F(1)))
    assert sup.is_rational and sup.rational_value == F(1, 4)
    assert argmax.is_rational and argmax.rational_value == F(1, 2)
    assert attained


def test_envelope_crossing_pair():
    # min(nu, 1 - nu) peaks where they cross, at 1/2
    sup, argmax, attained = lower_envelope_max(
        [poly(0, 1), poly(1, -1)], Interval(F(0), F(1))
    )
    assert sup.rational_value == F(1, 2) and argmax.rational_value == F(1, 2)
    assert attained


def test_envelope_open_boundary_not_attained():
    # min(1 - nu^3, 1 - (1-nu)^3) has its sup 7/8 at the excluded left end
    polys = [poly(1, 0, 0, -1), poly(0, 3, -3, 1)]
    sup, argmax, attained = lower_envelope_max(polys, OPEN)
    assert sup.is_rational and sup.rational_value == F(7, 8)
    assert argmax.is_rational and argmax.rational_value == F(1, 2)
    assert not attained


def test_envelope_point_interval():
    sup, argmax, attained = lower_envelope_max(
        [poly(0, 1), poly(2, -1)], Interval.point(F(1, 3))
    )
    assert sup.rational_value == F(1, 3) and attained


def test_envelope_against_grid():
    rng = random.Random(4242)
    grid = np.linspace(0.0, 1.0, 100_001)
    for _ in range(15):
        polys = []
        for _k in range(rng.randint(1, 5)):
            deg = rng.randint(0, 8)
            polys.append(Polynomial([F(rng.randint(-10, 10)) for _ in range(deg + 1)]))
        sup, argmax, _ = lower_envelope_max(polys, Interval(F(0), F(1)))
        envelope = np.min(
            [np.polyval([float(x) for x in reversed(p.coeffs)], grid) for p in polys],
            axis=0,
        )
        grid_max = float(envelope.max())
        sup_f = float(sup.approximate(F(1, 10**12)))
        # sup dominates every sample; and the envelope value at the argmax
        # approximation reproduces sup to high accuracy
        assert sup_f >= grid_max - 1e-9
        x_hat = argmax.approximate(F(1, 10**10))
        x_hat = min(max(x_hat, F(0)), F(1))
        g_at = min(p(x_hat) for p in polys)
        assert abs(float(g_at) - sup_f) <= 1e-6


def test_envelope_sup_is_algebraic_when_needed():
    # min(nu^2, 1 - nu) peaks where nu^2 = 1 - nu, at the golden-ratio conjugate
    sup, argmax, attained = lower_envelope_max(
        [poly(0, 0, 1), poly(1, -1)], Interval(F(0), F(1))
    )
    assert attained and not sup.is_rational
    # argmax satisfies nu^2 + nu - 1 = 0; sup equals the shared value there
    assert argmax.sign_of_poly_at(poly(-1, 1, 1)) == 0
    assert sup.equals(evaluate_poly_at(poly(1, -1), argmax))
