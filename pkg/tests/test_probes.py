"""Nilpotency probes, bounded NI checks, ideal faces, Armendariz bounds."""

import pytest

from skewpbw import (
    Ideal,
    bounded_NI_check,
    bounded_skew_armendariz,
    coefficient_criterion_member,
    enumerate_bounded_polys,
    extended_ideal_closure_report,
    extended_ideal_membership,
    nilpotency_probe,
    nilpotent_set,
    quasi_regularity_witness,
)
from skewpbw.errors import BudgetExceeded, NotAnIdeal, NotProvedNilpotent
from skewpbw.probes import (
    NICheckResult,
    STABILIZED_POWER,
    UNIT_LEADING_CHAIN,
    BoundedScan,
    coefficient_agreement,
    replay_violation,
)


# ---------------------------------------------------------------------------
# probes
# ---------------------------------------------------------------------------


def test_probe_swap_nilpotent(swap_entry):
    A = swap_entry.presentation
    f = A.scalar(swap_entry.ring.el([1, 0])) * A.variable(1)
    res = nilpotency_probe(f, 8)
    assert res.proved_nilpotent and res.index == 2


def test_probe_unit_leading_chain(swap_entry):
    res = nilpotency_probe(swap_entry.presentation.variable(1), 8)
    assert res.proved_not_nilpotent and res.reason == UNIT_LEADING_CHAIN


def test_probe_stabilized_power(weyl2):
    A = weyl2.presentation
    f = A.variable(1) * A.scalar(weyl2.ring.el([0, 1]))  # yx + 1
    res = nilpotency_probe(f, 8)
    assert res.proved_not_nilpotent and res.reason == STABILIZED_POWER


def test_probe_zero_and_unknown(weyl2):
    A = weyl2.presentation
    assert nilpotency_probe(A.zero_poly(), 4).index == 1
    # x in a derivation-type extension: powers keep growing, no certificate
    res = nilpotency_probe(A.variable(1), 6)
    assert res.status == "unknown" and res.cap == 6


# ---------------------------------------------------------------------------
# quasi-regularity
# ---------------------------------------------------------------------------


def test_quasi_regularity_euler(euler2):
    A = euler2.presentation
    f = A.scalar(euler2.ring.el([0, 1])) * A.variable(1)  # yx
    g = quasi_regularity_witness(f, 8)
    one = A.one_poly()
    assert (one + f) * g == one
    assert g == one + f  # characteristic 2, f^2 = 0


def test_quasi_regularity_zero(euler2):
    A = euler2.presentation
    assert quasi_regularity_witness(A.zero_poly(), 4) == A.one_poly()


def test_quasi_regularity_swap(swap_entry):
    A = swap_entry.presentation
    f = A.scalar(swap_entry.ring.el([1, 0])) * A.variable(1)
    g = quasi_regularity_witness(f, 8)
    assert (A.one_poly() + f) * g == A.one_poly()


def test_quasi_regularity_requires_proof(weyl2):
    with pytest.raises(NotProvedNilpotent):
        quasi_regularity_witness(weyl2.presentation.variable(1), 4)


# ---------------------------------------------------------------------------
# coefficient criterion
# ---------------------------------------------------------------------------


def test_coefficient_criterion(euler2):
    A = euler2.presentation
    y = euler2.ring.el([0, 1])
    assert coefficient_criterion_member(A.scalar(y) * A.variable(1))
    assert not coefficient_criterion_member(A.variable(1))
    assert coefficient_criterion_member(A.zero_poly())


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def test_enumeration_counts(euler2):
    polys = enumerate_bounded_polys(euler2.presentation, 2, 3)
    # 3 monomials, 3 nonzero coefficients: 3*3 + 3*9 + 1*27
    assert len(polys) == 63
    assert len({hash(f) for f in polys}) == 63


def test_enumeration_budget_guard(euler2):
    with pytest.raises(BudgetExceeded):
        enumerate_bounded_polys(euler2.presentation, 2, 3, budget=10)


# ---------------------------------------------------------------------------
# bounded NI check
# ---------------------------------------------------------------------------


def test_bounded_ni_euler_consistent(euler2):
    res = bounded_NI_check(euler2.presentation, 2, 3, 8)
    assert res.status == NICheckResult.CONSISTENT
    assert res.stats["closure_unknown"] == 0


def test_bounded_ni_weyl_violation_canonical_witness(weyl2):
    res = bounded_NI_check(weyl2.presentation, 2, 2, 8)
    assert res.status == NICheckResult.VIOLATION
    w = res.witness
    assert w["kind"] == "left_product"
    y = weyl2.ring.el([0, 1])
    A = weyl2.presentation
    assert w["f"] == A.scalar(y)          # the nilpotent y
    assert w["g"] == A.variable(1)        # multiplied by x
    assert w["result"] == A.variable(1) * A.scalar(y)  # = yx + 1, idempotent
    assert replay_violation(w)


def test_bounded_ni_swap_violation(swap_entry):
    res = bounded_NI_check(swap_entry.presentation, 2, 2, 8)
    assert res.status == NICheckResult.VIOLATION
    w = res.witness
    assert w["kind"] == "sum"
    A = swap_entry.presentation
    ring = swap_entry.ring
    pair = {w["f"], w["g"]}
    assert pair == {
        A.scalar(ring.el([1, 0])) * A.variable(1),
        A.scalar(ring.el([0, 1])) * A.variable(1),
    }
    assert w["result"] == A.variable(1)
    assert replay_violation(w)


def test_bounded_ni_budget_exceeded(euler3):
    with pytest.raises(BudgetExceeded):
        bounded_NI_check(euler3.presentation, 2, 3, 8, pair_budget=10**4)


def test_agreement_euler_zero_mismatches(euler2):
    scan = BoundedScan(euler2.presentation, 2, 3, 8)
    agr = coefficient_agreement(scan)
    assert agr.holds and agr.unknown == 0
    # cross-check by hand: proved nilpotent <=> all coefficients in N(R)
    nil = nilpotent_set(euler2.ring)
    for f in scan.polys:
        member = all(c in nil for c in f.coefficients().values())
        assert member == scan.status[f].proved_nilpotent


def test_agreement_weyl_fails_exactly(weyl2):
    scan = BoundedScan(weyl2.presentation, 2, 2, 8)
    agr = coefficient_agreement(scan)
    assert not agr.holds and agr.exact_failure
    # yx has nilpotent coefficients but is a nonzero idempotent
    f = agr.witness["f"]
    assert agr.witness["direction"] == "criterion->probe"
    assert coefficient_criterion_member(f)


# ---------------------------------------------------------------------------
# extended ideals
# ---------------------------------------------------------------------------


def test_extended_ideal_membership(euler2):
    A = euler2.presentation
    ring = euler2.ring
    nil = Ideal(ring, nilpotent_set(ring))
    y = ring.el([0, 1])
    assert extended_ideal_membership(nil, A.scalar(y) * A.variable(1))
    assert not extended_ideal_membership(nil, A.variable(1))
    zero_ideal = Ideal(ring, [ring.zero])
    assert extended_ideal_membership(zero_ideal, A.zero_poly())
    assert not extended_ideal_membership(zero_ideal, A.one_poly())


def test_extended_ideal_membership_wrong_ring(euler2, weyl2):
    nil = Ideal(weyl2.ring, nilpotent_set(weyl2.ring))
    with pytest.raises(NotAnIdeal):
        extended_ideal_membership(nil, euler2.presentation.one_poly())


def test_extended_ideal_closure_biconditional(weyl2, euler2):
    # Weyl: x*y = yx + 1 has coefficient 1 outside (y); invariance agrees
    nil_w = Ideal(weyl2.ring, nilpotent_set(weyl2.ring))
    rep = extended_ideal_closure_report(nil_w, weyl2.presentation, degree_cap=2)
    assert not rep.holds and rep.delta_invariant is False and rep.agrees

    nil_e = Ideal(euler2.ring, nilpotent_set(euler2.ring))
    rep = extended_ideal_closure_report(nil_e, euler2.presentation, degree_cap=2)
    assert rep.holds and rep.delta_invariant is True and rep.agrees


# ---------------------------------------------------------------------------
# Armendariz bounds
# ---------------------------------------------------------------------------


def test_armendariz_over_domain(quasi_z3):
    res = bounded_skew_armendariz(quasi_z3.presentation, 1, 2)
    assert res.holds  # extensions of a domain are domains: fg = 0 never fires


def test_armendariz_swap_fails(swap_entry):
    # f = (1,0) + (1,0)x and g = (0,1) + (1,0)x multiply to zero, but the
    # cross product a_0 * b_1 = (1,0)(1,0) is nonzero
    res = bounded_skew_armendariz(swap_entry.presentation, 1, 2)
    assert not res.holds
    f, g = res.witness["f"], res.witness["g"]
    assert (f * g).is_zero


def test_armendariz_z4_holds(poly_z4):
    res = bounded_skew_armendariz(poly_z4.presentation, 2, 2)
    assert res.holds


def test_weak_armendariz_shape(swap_entry):
    res = bounded_skew_armendariz(swap_entry.presentation, 1, 2, weak=True)
    assert res.weak
    if not res.holds:
        f = res.witness["f"]
        assert f.degree <= 1
