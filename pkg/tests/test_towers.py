import json
import math
import random

import pytest

from graph_iwasawa import (
    TowerSpec,
    build_tower_report,
    cayley_serre,
    cyc_int,
    derived_cover,
    epsilon,
    invariants,
    kappa_exact,
    level_norm,
    level_valuation,
    mu_lambda,
    ord_int,
    ord_kappa,
    p_poly,
    q_poly,
    report_from_json,
    report_to_csv,
    report_to_json,
    spanning_tree_count,
    stabilization_level,
    verify_bounds,
)
from graph_iwasawa.cyclotomic import BudgetExceededError, euler_phi_prime_power
from graph_iwasawa.towers import _jump_poly
from graph_iwasawa import cyclotomic


def test_p_poly_table():
    assert p_poly(0) == []
    assert p_poly(1) == [0, 1]
    assert p_poly(2) == [0, 4, -1]
    assert p_poly(3) == [0, 9, -6, 1]
    assert p_poly(4) == [0, 16, -20, 8, -1]
    assert p_poly(5) == [0, 25, -50, 35, -10, 1]


@pytest.mark.parametrize("a", range(1, 13))
def test_p_poly_properties(a):
    p = p_poly(a)
    assert len(p) - 1 == a
    assert p[0] == 0
    assert p[1] == a * a
    assert p[-1] == (-1) ** (a + 1)


def test_p_poly_evaluates_to_epsilon():
    # P_a(eps(1)) = eps(a) inside every prime-power cyclotomic ring
    for ell, imax in ((2, 3), (3, 3), (5, 2)):
        for i in range(1, imax + 1):
            eps1 = epsilon(ell, i, 1)
            for a in range(0, 13):
                acc = cyc_int(ell, i, 0)
                for c in reversed(p_poly(a)):
                    acc = cyclotomic.cyc_mul(acc, eps1)
                    acc = cyclotomic.cyc_add(acc, cyc_int(ell, i, c))
                assert acc == epsilon(ell, i, a), (ell, i, a)


def test_q_poly_examples():
    assert q_poly(TowerSpec(2, (1, 1))) == [0, 2]
    assert q_poly(TowerSpec(2, (3, 5))) == [0, 34, -56, 36, -10, 1]
    q = q_poly(TowerSpec(3, (1, 4, 20)))
    assert len(q) - 1 == 20
    assert q[1:4] == [417, -13320, 175568]
    assert q[-1] == -1


def test_q_poly_uses_magnitudes():
    assert q_poly(TowerSpec(2, (-3, 5))) == q_poly(TowerSpec(2, (3, 5)))


def test_spec_validation():
    with pytest.raises(ValueError, match="prime"):
        TowerSpec(4, (1, 1))
    with pytest.raises(ValueError, match="coprime"):
        TowerSpec(2, (2, 4))
    with pytest.raises(ValueError, match="generator"):
        TowerSpec(2, ())
    spec = TowerSpec(2, (1, 0))
    assert spec.zero_generator_indices == (1,)
    assert spec.q == 3 and spec.t == 2


def test_mu_lambda_examples():
    assert mu_lambda(q_poly(TowerSpec(2, (1, 1))), 2) == (1, 1)
    assert mu_lambda(q_poly(TowerSpec(2, (3, 5))), 2) == (0, 9)
    assert mu_lambda(q_poly(TowerSpec(3, (1, 4, 20))), 3) == (0, 5)
    with pytest.raises(ValueError):
        mu_lambda([], 2)
    # zero coefficients never attain the minimum
    assert mu_lambda([0, 8, 0, 2], 2) == (1, 5)


def test_stabilization_examples():
    assert stabilization_level(q_poly(TowerSpec(2, (1, 1))), 2) == 1
    assert stabilization_level(q_poly(TowerSpec(2, (3, 5))), 2) == 5
    assert stabilization_level(q_poly(TowerSpec(3, (1, 4, 20))), 3) == 2
    # l not dividing c_1 forces j* = 1 and immediate domination
    assert stabilization_level(q_poly(TowerSpec(3, (1, 1))), 3) == 1


def test_level_valuation_examples():
    spec = TowerSpec(2, (3, 5))
    assert level_valuation(spec, 1) == 3  # Q(4) = 8
    ones = TowerSpec(2, (1, 1))
    for i in range(1, 7):
        assert level_valuation(ones, i) == euler_phi_prime_power(2, i) + 2


def test_level_valuation_affine_past_stabilization():
    for spec in (TowerSpec(2, (1, 1)), TowerSpec(2, (3, 5)),
                 TowerSpec(3, (1, 4, 20))):
        q = q_poly(spec)
        mu, lam = mu_lambda(q, spec.ell)
        istar = stabilization_level(q, spec.ell)
        for i in (istar, istar + 1):
            expected = mu * euler_phi_prime_power(spec.ell, i) + lam + 1
            assert level_valuation(spec, i) == expected


def test_jump_poly_zero_generator_drops_out():
    assert _jump_poly(TowerSpec(2, (1, 0))) == _jump_poly(TowerSpec(2, (1,)))


def test_kappa_examples():
    ones = TowerSpec(2, (1, 1))
    for n in range(0, 9):
        assert kappa_exact(ones, n) == 2 ** (2 ** n + n - 1)
    spec2 = TowerSpec(2, (3, 5))
    table = [1, 2 ** 2, 2 ** 5, 2 ** 10, 2 ** 25, 2 ** 34 * 577 ** 2]
    for n, expected in enumerate(table):
        assert kappa_exact(spec2, n) == expected
    spec3 = TowerSpec(3, (1, 4, 20))
    assert kappa_exact(spec3, 0) == 1
    assert kappa_exact(spec3, 1) == 3 ** 3
    assert kappa_exact(spec3, 2) == 2 ** 6 * 3 ** 8
    assert kappa_exact(spec3, 3) == 2 ** 6 * 3 ** 13 * 176417 ** 2


def test_level_norm_matches_valuation():
    for spec in (TowerSpec(2, (3, 5)), TowerSpec(3, (1, 4, 20)),
                 TowerSpec(5, (2, 5))):
        for i in range(1, 4):
            assert ord_int(level_norm(spec, i), spec.ell) \
                == level_valuation(spec, i)


def test_ord_kappa_examples_and_consistency():
    ones = TowerSpec(2, (1, 1))
    for n in range(0, 8):
        assert ord_kappa(ones, n) == 2 ** n + n - 1
    spec2 = TowerSpec(2, (3, 5))
    for n in range(4, 8):
        assert ord_kappa(spec2, n) == 9 * n - 11
    spec3 = TowerSpec(3, (1, 4, 20))
    for n in range(1, 5):
        assert ord_kappa(spec3, n) == 5 * n - 2
    rng = random.Random(8)
    for _ in range(8):
        ell = rng.choice((2, 3, 5))
        gens = tuple(rng.randint(-6, 6) for _ in range(rng.randint(1, 3)))
        if not any(g and math.gcd(g, ell) == 1 for g in gens):
            continue
        spec = TowerSpec(ell, gens)
        for n in range(0, 4):
            assert ord_kappa(spec, n) == ord_int(kappa_exact(spec, n), ell)


def test_invariants_examples():
    inv = invariants(TowerSpec(2, (1, 1)))
    assert (inv.mu, inv.lam, inv.nu, inv.n0_observed) == (1, 1, -1, 1)
    inv = invariants(TowerSpec(2, (3, 5)))
    assert (inv.mu, inv.lam, inv.nu) == (0, 9, -11)
    assert inv.n0_certified == 5 and inv.n0_observed == 4
    inv = invariants(TowerSpec(3, (1, 4, 20)))
    assert (inv.mu, inv.lam, inv.nu, inv.n0_observed) == (0, 5, -2, 1)


def test_invariants_coprime_sum_corollary():
    # l not dividing sum of squares: mu = 0, lambda = 1, nu = 0, ord = n
    for ell in (3, 5, 7):
        spec = TowerSpec(ell, (1, 1))
        inv = invariants(spec)
        assert (inv.mu, inv.lam, inv.nu) == (0, 1, 0)
        for n in range(1, 5):
            assert ord_kappa(spec, n) == n


def test_cycle_tower():
    spec = TowerSpec(2, (1,))
    assert spec.is_cycle_tower
    inv = invariants(spec)
    assert inv.cycle_case
    assert (inv.mu, inv.lam, inv.nu) == (0, 1, 0)
    for n in range(0, 6):
        assert kappa_exact(spec, n) == 2 ** n
        cover = derived_cover(cayley_serre(2 ** n, (1,)))
        assert spanning_tree_count(cover) == 2 ** n


def test_zero_generator_unaffects_kappa():
    with_zero = TowerSpec(2, (1, 0))
    without = TowerSpec(2, (1,))
    for n in range(0, 5):
        assert kappa_exact(with_zero, n) == kappa_exact(without, n)
    inv = invariants(with_zero)
    assert (inv.mu, inv.lam, inv.nu) == (0, 1, 0)
    assert not inv.cycle_case


def test_oracle_equivalence_small():
    rng = random.Random(12)
    for _ in range(6):
        ell = rng.choice((2, 3))
        gens = tuple(rng.randint(-5, 5) for _ in range(2))
        if not any(g and math.gcd(g, ell) == 1 for g in gens):
            continue
        spec = TowerSpec(ell, gens)
        for n in range(0, 4):
            cover = derived_cover(cayley_serre(ell ** n, gens))
            assert spanning_tree_count(cover) == kappa_exact(spec, n)


def test_verify_bounds():
    rpt = verify_bounds(TowerSpec(2, (1, 1)), 4)
    assert rpt.ok and rpt.failures == []
    rpt = verify_bounds(TowerSpec(2, (3, 5)), 5)
    assert rpt.ok
    rpt = verify_bounds(TowerSpec(2, (1,)), 3)  # cycle tower skips (a)
    assert rpt.ok


def test_upper_bound_spec_example():
    # l=2, a=(1,1), n=3: 8 * kappa_3 against the closed-form right side
    spec = TowerSpec(2, (1, 1))
    kappa3 = kappa_exact(spec, 3)
    q = spec.q
    lhs = 4 * (spec.t - 1) * (q + 1) * 2 ** 3 * kappa3
    rhs = (q - 1) * (2 * (q + 1)) ** (2 ** 3)
    assert lhs <= rhs


def test_divisibility_along_tower():
    spec = TowerSpec(2, (3, 5))
    assert kappa_exact(spec, 4) % kappa_exact(spec, 3) == 0


def test_budget_enforced():
    spec = TowerSpec(2, (3, 5))
    with pytest.raises(BudgetExceededError):
        kappa_exact(spec, 12, budget_bits=64)


def test_level_bounds_rejected():
    spec = TowerSpec(2, (3, 5))
    with pytest.raises(ValueError):
        kappa_exact(spec, -1)
    with pytest.raises(ValueError):
        ord_kappa(spec, -1)
    with pytest.raises(ValueError):
        level_valuation(spec, 0)
    with pytest.raises(ValueError):
        build_tower_report(spec, -1)
    with pytest.raises(ValueError):
        verify_bounds(spec, 0)


def test_report_and_serialization():
    spec = TowerSpec(2, (3, 5))
    report = build_tower_report(spec, 6)
    assert report.consistency_ok and report.fit_ok
    assert [rec.kappa for rec in report.levels[:6]] == [
        1, 4, 32, 1024, 2 ** 25, 2 ** 34 * 577 ** 2]
    assert [rec.fit for rec in report.levels[4:]] == [True, True, True]
    data = report_to_json(report)
    assert data["invariants"]["lambda"] == "9"
    assert data["levels"][5]["kappa"] == str(2 ** 34 * 577 ** 2)
    again = report_from_json(json.loads(json.dumps(data)))
    assert report_to_json(again) == data
    csv = report_to_csv(report)
    lines = csv.strip().splitlines()
    assert lines[0] == "n,ord_kappa,fit"
    assert lines[6] == "5,34,true"


def test_report_parallel_identical():
    spec = TowerSpec(3, (1, 4, 20))
    seq = report_to_json(build_tower_report(spec, 3, parallel=False))
    par = report_to_json(build_tower_report(spec, 3, parallel=True))
    assert json.dumps(seq) == json.dumps(par)
