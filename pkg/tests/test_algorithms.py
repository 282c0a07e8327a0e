import random
from fractions import Fraction as F

import pytest

from formula_gen import pl_corpus, random_cformula, truth_table_sat, truth_table_valid
from uclogic.algorithms import EntaQuery, arr, enta, osc, pmc, rrd, sat
from uclogic.formulas import parse_cformula, variables
from uclogic.polynomials import simplest_between
from uclogic.semantics import (
    Interpretation,
    canonical_valuations,
    parse_ambition,
    satisfies,
)


def test_enta_on_reliable_formulas_matches_truth_tables():
    samples = [
        ("(or x (not x))", True),
        ("(and x (not x))", False),
        ("(imp (and x y) x)", True),
        ("(iff x y)", False),
        ("T", True),
        ("F", False),
    ]
    for text, valid in samples:
        assert enta(EntaQuery(parse_cformula(text))) == valid


def test_enta_with_matching_ambition():
    # success rate is nu under every valuation, so mu <= nu entails the circuit
    psi = parse_cformula("(iff (or? x1 x2) (or x1 x2))")
    gamma = (parse_ambition("mu <= nu"),)
    assert enta(EntaQuery(psi, gamma))
    assert not enta(EntaQuery(psi))


def test_enta_unreliable_tautology_is_not_valid():
    # even a tautology fails unconstrained entailment once its gates can
    # misfire: some interpretation drops the success rate below mu
    assert not enta(EntaQuery(parse_cformula("(or? x (not? x))")))


def test_enta_more_ambitions_never_hurt():
    rng = random.Random(11)
    g = parse_ambition("mu <= nu")
    for _ in range(25):
        psi = random_cformula(rng, max_gates=4)
        base = enta(EntaQuery(psi))
        with_g = enta(EntaQuery(psi, (g,)))
        if base:
            assert with_g


def test_pmc_witness_satisfies_formula():
    rng = random.Random(5)
    for _ in range(40):
        psi = random_cformula(rng, max_gates=6)
        res = pmc(psi)
        assert res.found == sat(psi)
        if res.found:
            interp = Interpretation(res.valuation, res.nu, res.mu)
            assert satisfies(interp, psi)
            assert res.mu > F(1, 2)


def test_pmc_modes_agree_on_found():
    rng = random.Random(6)
    for _ in range(25):
        psi = random_cformula(rng, max_gates=5)
        a = pmc(psi, mode="faithful")
        b = pmc(psi, mode="fast")
        assert a.found == b.found
        if a.found:
            assert a.valuation == b.valuation
            assert satisfies(Interpretation(b.valuation, b.nu, b.mu), psi)


def test_pmc_start_valuation_both_branches():
    # triple inverter checked against a tautology: P is 1-(1-nu)^3 at x=F
    # (instant hit at nu=1) and 1-nu^3 at x=T (fraction enumeration)
    psi = parse_cformula(
        "(iff (or (or (not? x) (not? x)) (not? x)) (or x (not x)))"
    )
    hit = pmc(psi, start_valuation={"x": False})
    assert (hit.found, hit.valuation, hit.nu, hit.mu) == (
        True, {"x": False}, F(1), F(1)
    )
    slow = pmc(psi, start_valuation={"x": True})
    assert (slow.found, slow.valuation, slow.nu, slow.mu) == (
        True, {"x": True}, F(2, 3), F(19, 27)
    )
    with pytest.raises(ValueError):
        pmc(psi, start_valuation={"y": True})
    with pytest.raises(ValueError):
        pmc(psi, mode="quick")


def test_sat_on_reliable_formulas_matches_truth_tables():
    for text, expected in [
        ("(and x (not x))", False),
        ("(or x y)", True),
        ("(iff (xor x y) (iff x y))", False),
    ]:
        assert sat(parse_cformula(text)) == expected


def test_arr_published_example():
    psi = parse_cformula("(or? x (not? x))")
    r3 = arr(psi, F(7, 10), 3)
    assert [str(iv) for iv in r3.intervals] == ["(5/6, 1]"]
    r4 = arr(psi, F(7, 10), 4)
    assert [str(iv) for iv in r4.intervals] == ["(7/8, 1]"]


def test_arr_validates_inputs():
    psi = parse_cformula("x")
    with pytest.raises(ValueError):
        arr(psi, F(1, 2), 3)
    with pytest.raises(ValueError):
        arr(psi, F(3, 4), 0)


def test_arr_monotone_in_target_rate():
    rng = random.Random(17)
    for _ in range(10):
        psi = random_cformula(rng, max_gates=4)
        strict = {iv for iv in arr(psi, F(4, 5), 4).intervals}
        loose = {iv for iv in arr(psi, F(3, 5), 4).intervals}
        assert strict <= loose


def test_arr_intervals_are_sound():
    rng = random.Random(18)
    mu_bar = F(7, 10)
    for _ in range(15):
        psi = random_cformula(rng, max_gates=4)
        for iv in arr(psi, mu_bar, 3).intervals:
            nu = simplest_between(iv.lo, iv.hi)
            for v in canonical_valuations(sorted(variables(psi))):
                assert satisfies(Interpretation(v, nu, mu_bar), psi)


def test_rrd_published_example():
    psi = parse_cformula("(or? x (not? x))")
    assert rrd(psi, F(7, 10))
    assert rrd(psi, F(1))  # nu = 1 is admissible and achieves rate 1
    # a contingency never reaches any admissible rate under v(x) = F
    assert not rrd(parse_cformula("x"), F(7, 10))
    # the triple inverter peaks strictly below 7/8 on admissible rates
    psi3 = parse_cformula(
        "(iff (or (or (not? x) (not? x)) (not? x)) (or x (not x)))"
    )
    assert not rrd(psi3, F(7, 8))
    assert rrd(psi3, F(3, 5))


def test_rrd_and_enta_separate():
    # one rate (e.g. nu = 1) achieves mu = 7/10 under every valuation, yet
    # the constant ambition does not entail the formula: at v(x) = T the
    # success rate is nu, which can fall below 7/10
    psi = parse_cformula("(or? x (not? x))")
    assert rrd(psi, F(7, 10))
    assert not enta(EntaQuery(psi, (parse_ambition("mu <= 7/10"),)))


def test_osc_feasible_example():
    opt = osc(parse_cformula("(or? x (not? x))"))
    assert opt.feasible and opt.attained
    assert opt.mu_star.rational_value == 1
    assert opt.nu_star.rational_value == 1
    nu_hat, mu_hat = opt.certified_pair
    assert (nu_hat, mu_hat) == (F(1), F(1))


def test_osc_open_boundary_infeasible():
    # envelope of 1 - nu^3 and 1 - (1-nu)^3 peaks at the excluded rate 1/2
    psi = parse_cformula(
        "(iff (or (or (not? x) (not? x)) (not? x)) (or x (not x)))"
    )
    opt = osc(psi)
    assert not opt.feasible
    assert opt.mu_star.rational_value == F(7, 8)
    assert opt.nu_star.rational_value == F(1, 2)
    assert not opt.attained
    assert "not attained" in opt.diagnostic and "1/2" in opt.diagnostic


def test_osc_never_above_half_infeasible():
    opt = osc(parse_cformula("(and x (not x))"))
    assert not opt.feasible
    assert opt.mu_star.rational_value == 0
    assert "below every admissible ambition" in opt.diagnostic


def test_osc_certified_pair_is_sound():
    rng = random.Random(29)
    eps = F(1, 10**6)
    for _ in range(20):
        psi = random_cformula(rng, max_gates=4)
        opt = osc(psi, eps=eps)
        if not opt.feasible:
            continue
        nu_hat, mu_hat = opt.certified_pair
        assert F(1, 2) < nu_hat <= 1 and mu_hat > F(1, 2)
        for v in canonical_valuations(sorted(variables(psi))):
            assert satisfies(Interpretation(v, nu_hat, mu_hat), psi)
        gap = opt.mu_star.approximate(F(1, 10**12)) - mu_hat
        assert gap <= eps + F(2, 10**12)


def test_osc_rejects_bad_eps():
    with pytest.raises(ValueError):
        osc(parse_cformula("x"), eps=F(0))


def test_pl_corpus_sample_equivalence():
    """Spot-check of the exhaustive corpus (the full sweep runs in the
    acceptance suite)."""
    rng = random.Random(3)
    corpus = pl_corpus()
    for f in rng.sample(corpus, 150):
        assert enta(EntaQuery(f)) == truth_table_valid(f)
        assert sat(f) == truth_table_sat(f)
