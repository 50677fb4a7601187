"""Bounded searches over skew polynomials: nilpotency, NI closure, ideals.

Nilpotency in A is only semi-decidable by power iteration, so probes return a
three-valued verdict instead of a boolean:

  * nilpotent(k)      -- f^k = 0 was computed, k minimal within the cap;
  * not_nilpotent     -- a sound certificate was found, either a stabilized
                         power f^m = f^{2m} != 0 (then f^{cm} = f^m for all c)
                         or, in quasi-commutative bijective presentations, a
                         unit leading coefficient whose chain never vanishes;
  * unknown(cap)      -- the budget ran out.

Enumeration order for all bounded searches is graded lexicographic on
(degree, support size, coefficient vectors), so witnesses are reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .errors import BudgetExceeded, NotAnIdeal, NotProvedNilpotent
from .extension import ExtensionPresentation, SkewPolynomial
from .rings import Ideal

DEFAULT_EXPONENT_CAP = 16
DEFAULT_PAIR_BUDGET = 10**6

NILPOTENT = "nilpotent"
NOT_NILPOTENT = "not_nilpotent"
UNKNOWN = "unknown"

STABILIZED_POWER = "stabilized_power"
UNIT_LEADING_CHAIN = "unit_leading_chain"


@dataclass
class ProbeResult:
    status: str
    index: Optional[int] = None   # nilpotency index when status == nilpotent
    reason: Optional[str] = None  # certificate when status == not_nilpotent
    cap: Optional[int] = None

    @property
    def proved_nilpotent(self) -> bool:
        return self.status == NILPOTENT

    @property
    def proved_not_nilpotent(self) -> bool:
        return self.status == NOT_NILPOTENT


def _leading_coefficient_is_unit(f: SkewPolynomial) -> bool:
    alpha = max(f.terms, key=lambda a: (sum(a), a))
    return bool(f.ext.base.units_mask[f.terms[alpha]])


def nilpotency_probe(f: SkewPolynomial, exponent_cap: int = DEFAULT_EXPONENT_CAP) -> ProbeResult:
    """Power iteration with stabilization detection, see module docstring."""
    A = f.ext
    A._require_verified()
    if f.is_zero:
        return ProbeResult(NILPOTENT, index=1)
    if A.quasi_commutative and A.bijective and _leading_coefficient_is_unit(f):
        # the leading monomial of f^k carries a product of units: never zero
        return ProbeResult(NOT_NILPOTENT, reason=UNIT_LEADING_CHAIN)
    powers = {1: f}
    current = f
    for k in range(2, exponent_cap + 1):
        current = current * f
        if current.is_zero:
            return ProbeResult(NILPOTENT, index=k)
        powers[k] = current
        if k % 2 == 0 and powers[k // 2] == current:
            return ProbeResult(NOT_NILPOTENT, reason=STABILIZED_POWER)
    return ProbeResult(UNKNOWN, cap=exponent_cap)


def quasi_regularity_witness(f: SkewPolynomial, exponent_cap: int = DEFAULT_EXPONENT_CAP) -> SkewPolynomial:
    """For proved-nilpotent f, the finite geometric inverse of 1 + f.

    Returns g = sum_{j<k} (-f)^j and checks (1+f)g = g(1+f) = 1 by
    multiplication; raises NotProvedNilpotent otherwise.
    """
    probe = nilpotency_probe(f, exponent_cap)
    if not probe.proved_nilpotent:
        raise NotProvedNilpotent(f"{f} was not proved nilpotent within cap {exponent_cap}")
    A = f.ext
    g = A.zero_poly()
    term = A.one_poly()
    minus_f = -f
    for _ in range(probe.index):
        g = g + term
        term = term * minus_f
    one_plus_f = A.one_poly() + f
    if one_plus_f * g != A.one_poly() or g * one_plus_f != A.one_poly():
        raise NotProvedNilpotent("witness verification failed")  # engine bug if ever hit
    return g


def coefficient_criterion_member(f: SkewPolynomial) -> bool:
    """True iff every coefficient of f lies in N(R): membership in N(R)<x_1..x_n>."""
    nil = f.ext.base.nilpotent_mask
    return all(bool(nil[c]) for c in f.terms.values())


# ---------------------------------------------------------------------------
# bounded enumeration
# ---------------------------------------------------------------------------


def _monomials_up_to(n: int, degree_cap: int) -> list[tuple]:
    out = []
    for total in range(degree_cap + 1):
        for alpha in itertools.product(range(total + 1), repeat=n):
            if sum(alpha) == total:
                out.append(alpha)
    return out


def count_bounded_polys(A: ExtensionPresentation, degree_cap: int, support_cap: int) -> int:
    M = len(_monomials_up_to(A.n, degree_cap))
    nz = A.base.size - 1
    return sum(_comb(M, s) * nz**s for s in range(1, support_cap + 1))


def enumerate_bounded_polys(
    A: ExtensionPresentation,
    degree_cap: int,
    support_cap: int,
    budget: int = DEFAULT_PAIR_BUDGET,
) -> list[SkewPolynomial]:
    """All nonzero f with degree <= degree_cap and <= support_cap terms."""
    A._require_verified()
    monos = _monomials_up_to(A.n, degree_cap)
    nz = A.base.size - 1
    total = sum(_comb(len(monos), s) * nz**s for s in range(1, support_cap + 1))
    if total > budget:
        raise BudgetExceeded(total, budget, "bounded polynomial enumeration")
    coeffs = list(range(1, A.base.size))
    out = []
    for s in range(1, support_cap + 1):
        for combo in itertools.combinations(monos, s):
            for cs in itertools.product(coeffs, repeat=s):
                out.append(SkewPolynomial(A, dict(zip(combo, cs))))
    return out


def _comb(n: int, k: int) -> int:
    import math

    return math.comb(n, k)


# ---------------------------------------------------------------------------
# bounded NI check
# ---------------------------------------------------------------------------


class BoundedScan:
    """Probe results for every bounded polynomial; shared by the harness checks."""

    def __init__(
        self,
        A: ExtensionPresentation,
        degree_cap: int,
        support_cap: int,
        exponent_cap: int = DEFAULT_EXPONENT_CAP,
        pair_budget: int = DEFAULT_PAIR_BUDGET,
    ):
        self.A = A
        self.degree_cap = degree_cap
        self.support_cap = support_cap
        self.exponent_cap = exponent_cap
        self.pair_budget = pair_budget
        self.polys = enumerate_bounded_polys(A, degree_cap, support_cap, pair_budget)
        self.status: dict[SkewPolynomial, ProbeResult] = {}
        for f in self.polys:
            self.status[f] = nilpotency_probe(f, exponent_cap)
        self.proved_nilpotent = [f for f in self.polys if self.status[f].proved_nilpotent]
        self.scan_unknown = sum(1 for r in self.status.values() if r.status == UNKNOWN)
        self.ni_result: Optional["NICheckResult"] = None
        self.agreement: Optional["AgreementResult"] = None

    def probe(self, f: SkewPolynomial) -> ProbeResult:
        if f not in self.status:
            self.status[f] = nilpotency_probe(f, self.exponent_cap)
        return self.status[f]


@dataclass
class NICheckResult:
    status: str  # "consistent" | "violation" | "inconclusive"
    witness: Optional[dict] = None
    stats: dict = field(default_factory=dict)

    CONSISTENT = "consistent"
    VIOLATION = "violation"
    INCONCLUSIVE = "inconclusive"


def bounded_NI_check(
    A: ExtensionPresentation,
    degree_cap: int,
    support_cap: int,
    exponent_cap: int = DEFAULT_EXPONENT_CAP,
    pair_budget: int = DEFAULT_PAIR_BUDGET,
    scan: Optional[BoundedScan] = None,
) -> NICheckResult:
    """Is the set of proved-nilpotent elements closed under + and *, at bounds?

    A proved-nilpotent pair whose sum or product is proved NOT nilpotent is a
    genuine witness that N(A) is not an ideal, hence that A is not NI.
    """
    if scan is None:
        scan = BoundedScan(A, degree_cap, support_cap, exponent_cap, pair_budget)
    if scan.ni_result is not None:
        return scan.ni_result
    pn = scan.proved_nilpotent
    ops = len(scan.polys) + len(pn) * len(pn) + 2 * len(pn) * len(scan.polys)
    if ops > pair_budget:
        raise BudgetExceeded(ops, pair_budget, "NI closure check")
    unknown_checks = 0
    checks = 0
    # products first: the canonical witnesses (x*y on the Weyl-like fixture)
    # live in the multiplication face, and enumeration order is deterministic
    for f in pn:
        for h in scan.polys:
            for kind, p in (("left_product", h * f), ("right_product", f * h)):
                if p.is_zero:
                    continue
                checks += 1
                r = scan.probe(p)
                if r.proved_not_nilpotent:
                    scan.ni_result = NICheckResult(
                        NICheckResult.VIOLATION,
                        witness={"kind": kind, "f": f, "g": h, "result": p, "probe": r},
                        stats=_scan_stats(scan, checks, unknown_checks),
                    )
                    return scan.ni_result
                if r.status == UNKNOWN:
                    unknown_checks += 1
    for i, f in enumerate(pn):
        for g in pn[i:]:
            s = f + g
            if s.is_zero:
                continue
            checks += 1
            r = scan.probe(s)
            if r.proved_not_nilpotent:
                scan.ni_result = NICheckResult(
                    NICheckResult.VIOLATION,
                    witness={"kind": "sum", "f": f, "g": g, "result": s, "probe": r},
                    stats=_scan_stats(scan, checks, unknown_checks),
                )
                return scan.ni_result
            if r.status == UNKNOWN:
                unknown_checks += 1
    status = NICheckResult.CONSISTENT if unknown_checks == 0 else NICheckResult.INCONCLUSIVE
    scan.ni_result = NICheckResult(status, stats=_scan_stats(scan, checks, unknown_checks))
    return scan.ni_result


def _scan_stats(scan: BoundedScan, checks: int, unknown_checks: int) -> dict:
    return {
        "enumerated": len(scan.polys),
        "proved_nilpotent": len(scan.proved_nilpotent),
        "scan_unknown": scan.scan_unknown,
        "closure_checks": checks,
        "closure_unknown": unknown_checks,
    }


def replay_violation(witness: dict) -> bool:
    """Re-evaluate a Violation witness with the engine; True if it reproduces."""
    f, g, result = witness["f"], witness["g"], witness["result"]
    kind = witness["kind"]
    if kind == "sum":
        recomputed = f + g
    elif kind == "left_product":
        recomputed = g * f
    else:
        recomputed = f * g
    if recomputed != result:
        return False
    pf = nilpotency_probe(f, DEFAULT_EXPONENT_CAP)
    pg = nilpotency_probe(g, DEFAULT_EXPONENT_CAP) if kind == "sum" else None
    pr = nilpotency_probe(recomputed, DEFAULT_EXPONENT_CAP)
    if not pf.proved_nilpotent or not pr.proved_not_nilpotent:
        return False
    return pg is None or pg.proved_nilpotent


# ---------------------------------------------------------------------------
# coefficient-criterion agreement (the computable face of N(A) = N(R)<x>)
# ---------------------------------------------------------------------------


@dataclass
class AgreementResult:
    holds: bool
    exact_failure: bool = False
    witness: Optional[dict] = None
    unknown: int = 0

    def __bool__(self) -> bool:
        return self.holds


def coefficient_agreement(scan: BoundedScan) -> AgreementResult:
    """Probe vs coefficient criterion, both directions over the enumerated set.

    A proved-nilpotent f with a coefficient outside N(R) exactly disproves
    N(A) <= N(R)<x>; an N(R)-coefficient f proved not nilpotent exactly
    disproves the reverse inclusion.  Unknown probes on N(R)-coefficient
    polynomials leave the agreement undecided at this budget.
    """
    if scan.agreement is not None:
        return scan.agreement
    unknown = 0
    result = None
    for f in scan.polys:
        member = coefficient_criterion_member(f)
        r = scan.status[f]
        if r.proved_nilpotent and not member:
            result = AgreementResult(False, exact_failure=True, witness={"direction": "probe->criterion", "f": f})
            break
        if member and r.proved_not_nilpotent:
            result = AgreementResult(False, exact_failure=True, witness={"direction": "criterion->probe", "f": f})
            break
        if member and r.status == UNKNOWN:
            unknown += 1
    if result is None:
        result = AgreementResult(True, unknown=unknown)
    scan.agreement = result
    return scan.agreement


# ---------------------------------------------------------------------------
# extended ideals
# ---------------------------------------------------------------------------


def extended_ideal_membership(ideal: Ideal, f: SkewPolynomial) -> bool:
    """f in I<x_1..x_n>: every coefficient of f lies in I."""
    if ideal.ring is not f.ext.base:
        raise NotAnIdeal("ideal does not live in the base ring of f")
    return all(bool(ideal.mask[c]) for c in f.terms.values())


@dataclass
class IdealClosureReport:
    holds: bool
    witness: Optional[dict] = None
    delta_invariant: Optional[bool] = None
    agrees: Optional[bool] = None  # closure outcome vs the invariance criterion


def extended_ideal_closure_report(
    ideal: Ideal, A: ExtensionPresentation, degree_cap: int = 2
) -> IdealClosureReport:
    """Bounded check that I<x> absorbs generator and base-element products.

    For a derivation-type A this is the executable face of: I<x_1..x_n> is an
    ideal of A iff I is a Delta-invariant ideal of R.
    """
    from .maps import DELTA_INVARIANT, invariance

    if ideal.ring is not A.base:
        raise NotAnIdeal("ideal does not live in the base ring")
    A._require_verified()
    monos = _monomials_up_to(A.n, degree_cap)
    members = [
        A.monomial(alpha, coeff=r)
        for alpha in monos
        for r in ideal.sorted_elements()
        if not r.is_zero
    ]
    multipliers = [A.variable(i) for i in range(1, A.n + 1)]
    multipliers += [A.scalar(r) for r in A.base.elements() if not r.is_zero]
    holds = True
    witness = None
    for f in members:
        for h in multipliers:
            for kind, p in (("left", h * f), ("right", f * h)):
                if not extended_ideal_membership(ideal, p):
                    holds = False
                    witness = {"kind": kind, "member": f, "multiplier": h, "product": p}
                    break
            if witness:
                break
        if witness:
            break
    inv = invariance(ideal, A.system, DELTA_INVARIANT)
    return IdealClosureReport(
        holds=holds,
        witness=witness,
        delta_invariant=inv.holds,
        agrees=(holds == inv.holds) if A.derivation_type else None,
    )


# ---------------------------------------------------------------------------
# bounded Armendariz checks
# ---------------------------------------------------------------------------


@dataclass
class ArmendarizResult:
    holds: bool
    witness: Optional[dict] = None
    degree_cap: int = 0
    support_cap: int = 0
    weak: bool = False


def bounded_skew_armendariz(
    A: ExtensionPresentation,
    degree_cap: int,
    support_cap: int,
    pair_budget: int = DEFAULT_PAIR_BUDGET,
    weak: bool = False,
) -> ArmendarizResult:
    """fg = 0 must force every cross-product a_i sigma^{alpha_i}(b_j) = 0.

    The weak variant restricts both factors to the shape a_0 + a_1 x_1 + ... +
    a_n x_n and uses sigma_i in place of sigma^{alpha_i}.
    """
    A._require_verified()
    if weak:
        monos = [A._zero_exp] + [
            tuple(1 if t == i else 0 for t in range(A.n)) for i in range(A.n)
        ]
        polys = _polys_over_monomials(A, monos, min(support_cap, len(monos)))
    else:
        polys = enumerate_bounded_polys(A, degree_cap, support_cap, pair_budget)
    if len(polys) ** 2 > pair_budget:
        raise BudgetExceeded(len(polys) ** 2, pair_budget, "Armendariz pair enumeration")
    base = A.base
    mul, _, _ = base.index_rows()
    sigma_pow: dict[tuple, list] = {}

    def sp(alpha: tuple) -> list:
        if alpha not in sigma_pow:
            sigma_pow[alpha] = A.system.sigma_power(alpha).tolist()
        return sigma_pow[alpha]

    for f in polys:
        for g in polys:
            if not (f * g).is_zero:
                continue
            for alpha, a in f.terms.items():
                for beta, b in g.terms.items():
                    if weak:
                        # sigma_i for the x_i term, identity for the constant
                        nz = [t for t in range(A.n) if alpha[t]]
                        img = A.system.sigmas[nz[0]].index_list[b] if nz else b
                    else:
                        img = sp(alpha)[b]
                    if mul[a][img]:
                        return ArmendarizResult(
                            False,
                            witness={"f": f, "g": g, "alpha": alpha, "beta": beta},
                            degree_cap=degree_cap,
                            support_cap=support_cap,
                            weak=weak,
                        )
    return ArmendarizResult(True, degree_cap=degree_cap, support_cap=support_cap, weak=weak)


def _polys_over_monomials(A: ExtensionPresentation, monos: list, support_cap: int) -> list:
    coeffs = list(range(1, A.base.size))
    out = []
    for s in range(1, support_cap + 1):
        for combo in itertools.combinations(monos, s):
            for cs in itertools.product(coeffs, repeat=s):
                out.append(SkewPolynomial(A, dict(zip(combo, cs))))
    return out
