"""Eulerian-form candidates N = q^k * n^2 and the constraint checks that a
hypothetical odd perfect number of that shape would have to satisfy.

Candidates are purely syntactic: perfection is never assumed.  Every
conditional inequality is evaluated exactly and reported as hold/violate,
so the reports double as consistency audits for non-perfect inputs.

Check ids use these shorthands for the recurring mixed sums:

    s2    = q^k/n + n/q^k                      (component ratio sum)
    t     = s(q^k)/s(n) + s(n)/s(q^k)          (sigma ratio sum)
    s1    = s(q^k)/n + s(n)/q^k                (cross ratio sum)
    isum  = I(q^k) + I(n)                      (abundancy sum)

where s is the divisor sum and I(x) = s(x)/x.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import (
    DEFAULT_EFFORT,
    Factorization,
    factor,
    is_prime,
    primes_one_mod_four,
    sigma,
    sigma_prime_power,
)
from .radicals import BoundExpr, Ordering, compare, from_rational, nth_root, sqrt

__all__ = [
    "AdmissibleShift",
    "CandidateError",
    "CaseReport",
    "ChainReport",
    "Check",
    "ConjectureObservations",
    "CorollaryReport",
    "EulerPrimeBracket",
    "EulerianCandidate",
    "EvenPartError",
    "InequalityReport",
    "KResidueError",
    "LemmaSumsReport",
    "OutlawAnchors",
    "QNotPrimeError",
    "QResidueError",
    "SharedFactorError",
    "Theorem1Report",
    "Theorem5Table",
    "classify_case",
    "corollary_bounds",
    "lemma3_bracket",
    "lemma_sums",
    "remark_chains",
    "theorem1_vector",
    "theorem5_analyze",
    "theorem6_admissible",
    "validate",
]

# Magnitude floors for a genuine odd perfect number: total size, the
# non-Euler part, and the Euler factor (the latter two depending on which
# component is larger).  Desk-scale candidates sit below all of them, so
# falling short is reported as a warning, never an error.
N_PART_FLOOR = 10**375
N_PART_FLOOR_LARGE = 10**500
EULER_FACTOR_FLOOR = 10**500
TOTAL_FLOOR = 10**1500

WARN_N_PART = "n_le_1e375"
WARN_N_PART_LARGE = "n_le_1e500"
WARN_EULER_FACTOR = "qk_le_1e500"
WARN_TOTAL = "total_le_1e1500"
FLAG_TRIVIAL_N = "n_equals_1_fatal_for_theorems"


class CandidateError(ValueError):
    """A (q, k, n) triple that is not in Eulerian form."""

    code = "invalid"


class QNotPrimeError(CandidateError):
    code = "q_not_prime"


class QResidueError(CandidateError):
    code = "q_not_1_mod_4"


class KResidueError(CandidateError):
    code = "k_not_1_mod_4"


class SharedFactorError(CandidateError):
    code = "q_divides_n"


class EvenPartError(CandidateError):
    code = "n_even"


@dataclass(frozen=True)
class EulerianCandidate:
    """Syntactic Eulerian form: q prime, q = k = 1 (mod 4), gcd(q, n) = 1,
    n odd.  Divisor sums of both components are precomputed exactly."""

    q: int
    k: int
    n: int
    qk: int
    total: int
    sigma_qk: int
    n_factors: Factorization
    sigma_n: int
    warnings: tuple[str, ...]

    @property
    def abundancy_qk(self) -> Fraction:
        return Fraction(self.sigma_qk, self.qk)

    @property
    def abundancy_n(self) -> Fraction:
        return Fraction(self.sigma_n, self.n)

    @property
    def fatal_for_theorems(self) -> bool:
        return self.n == 1

    @property
    def qk_less_than_n(self) -> bool:
        return self.qk < self.n


def validate(q: int, k: int, n: int, *, factor_budget: int = DEFAULT_EFFORT) -> EulerianCandidate:
    """Check the Eulerian-form invariants and build a candidate.

    Raises a distinct CandidateError subclass per violated invariant.
    Candidates smaller than the known magnitude floors get non-fatal
    warnings attached; n = 1 is accepted but flagged, since the theorem
    predicates all require n > 1.
    """
    if n < 1:
        raise CandidateError(f"n must be >= 1, got {n}")
    if not is_prime(q):
        raise QNotPrimeError(f"q = {q} is not prime")
    if q % 4 != 1:
        raise QResidueError(f"q = {q} is not 1 (mod 4)")
    if k < 1 or k % 4 != 1:
        raise KResidueError(f"k = {k} is not a positive integer 1 (mod 4)")
    if gcd(q, n) != 1:
        raise SharedFactorError(f"gcd(q, n) = {gcd(q, n)} != 1")
    if n % 2 == 0:
        raise EvenPartError(f"n = {n} is even")
    qk = q**k
    total = qk * n * n
    n_factors = factor(n, budget=factor_budget)
    warnings = []
    if n <= N_PART_FLOOR:
        warnings.append(WARN_N_PART)
    if total <= TOTAL_FLOOR:
        warnings.append(WARN_TOTAL)
    if n < qk and qk <= EULER_FACTOR_FLOOR:
        warnings.append(WARN_EULER_FACTOR)
    if qk < n and n <= N_PART_FLOOR_LARGE:
        warnings.append(WARN_N_PART_LARGE)
    if n == 1:
        warnings.append(FLAG_TRIVIAL_N)
    return EulerianCandidate(
        q=q,
        k=k,
        n=n,
        qk=qk,
        total=total,
        sigma_qk=sigma_prime_power(q, k),
        n_factors=n_factors,
        sigma_n=sigma(n_factors),
        warnings=tuple(warnings),
    )


_HOLDS = {
    "<": (Ordering.LESS,),
    "<=": (Ordering.LESS, Ordering.EQUAL),
    ">": (Ordering.GREATER,),
    ">=": (Ordering.GREATER, Ordering.EQUAL),
    "==": (Ordering.EQUAL,),
    "!=": (Ordering.LESS, Ordering.GREATER),
}


@dataclass(frozen=True)
class Check:
    """One evaluated inequality: exact verdict of lhs against rhs plus the
    relation claimed for a genuine odd perfect number."""

    check_id: str
    lhs: Fraction
    rhs: Fraction | BoundExpr
    verdict: Ordering
    claimed: str
    holds: bool


def _check(check_id: str, lhs: Fraction, rhs, claimed: str) -> Check:
    if isinstance(rhs, BoundExpr):
        verdict = compare(from_rational(lhs), rhs)
    else:
        rhs = Fraction(rhs)
        verdict = Ordering.of_sign(lhs - rhs)
    return Check(check_id, Fraction(lhs), rhs, verdict, claimed,
                 verdict in _HOLDS[claimed])


def _violations(checks) -> tuple[str, ...]:
    return tuple(c.check_id for c in checks if not c.holds)


@dataclass(frozen=True)
class InequalityReport:
    section: str
    checks: tuple[Check, ...]
    notes: tuple[str, ...] = ()

    def by_id(self, check_id: str) -> Check:
        for c in self.checks:
            if c.check_id == check_id:
                return c
        raise KeyError(check_id)

    @property
    def violations(self) -> tuple[str, ...]:
        return _violations(self.checks)

    @property
    def all_hold(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class Theorem1Report(InequalityReport):
    """The four conditions tied to q^k < n.

    Their pairwise equivalence is a consequence of perfection; for a
    syntactic candidate they can disagree even when the abundancy
    hypothesis I(q^k) < I(n) holds (e.g. q^k = 5^5, n = 3003), so the
    report records the hypothesis verdict and whether the four agree."""

    hypothesis: Check = None  # type: ignore[assignment]
    conditions_agree: bool = False

    @property
    def condition_verdicts(self) -> tuple[bool, ...]:
        return tuple(c.verdict == Ordering.LESS for c in self.checks)


def _require_nontrivial(c: EulerianCandidate) -> None:
    if c.fatal_for_theorems:
        raise ValueError("theorem predicates require n > 1")


def theorem1_vector(c: EulerianCandidate) -> Theorem1Report:
    """Evaluate the four conditions exactly and report whether their
    verdicts are mutually equal, along with the abundancy hypothesis
    I(q^k) < I(n).  What IS forced without any perfection assumption:
    under the hypothesis, q^k < n implies both sigma inequalities.
    """
    _require_nontrivial(c)
    qk, n, sq, sn = c.qk, c.n, c.sigma_qk, c.sigma_n
    s2 = Fraction(qk, n) + Fraction(n, qk)
    t = Fraction(sq, sn) + Fraction(sn, sq)
    checks = (
        _check("t1.qk_lt_n", Fraction(qk), Fraction(n), "<"),
        _check("t1.sigma_qk_lt_sigma_n", Fraction(sq), Fraction(sn), "<"),
        _check("t1.cross_ratio", Fraction(sq, n), Fraction(sn, qk), "<"),
        _check("t1.s2_lt_t", s2, t, "<"),
    )
    hypothesis = _check("t1.abundancy_hypothesis", c.abundancy_qk, c.abundancy_n, "<")
    verdicts = {ch.verdict for ch in checks}
    return Theorem1Report(
        section="theorem1",
        checks=checks,
        hypothesis=hypothesis,
        conditions_agree=len(verdicts) == 1,
    )


@dataclass(frozen=True)
class ChainReport(InequalityReport):
    chain_id: str = ""
    identities: tuple[Check, ...] = ()


def remark_chains(c: EulerianCandidate) -> ChainReport:
    """Per-link evaluation of the strict ordering chain matching the
    candidate's (size order, k) shape.

    k = 1 uses the two-link chains (s2 < t < s1, or t < s2 < s1); k > 1
    inserts the abundancy sum, giving s2 < t < isum < s1 for q^k < n and
    t < s2 < isum <= s1 otherwise.  The abundancy sum is also recomputed
    along two routes and checked for exact equality.
    """
    _require_nontrivial(c)
    qk, n, sq, sn = c.qk, c.n, c.sigma_qk, c.sigma_n
    s2 = Fraction(qk, n) + Fraction(n, qk)
    t = Fraction(sq, sn) + Fraction(sn, sq)
    s1 = Fraction(sq, n) + Fraction(sn, qk)
    isum = Fraction(sq, qk) + Fraction(sn, n)
    identities = (
        _check("chain.isum_identity", c.abundancy_qk + c.abundancy_n, isum, "=="),
        _check(
            "chain.s1_identity",
            Fraction(qk, n) * c.abundancy_qk + Fraction(n, qk) * c.abundancy_n,
            s1,
            "==",
        ),
    )
    if c.qk_less_than_n:
        if c.k == 1:
            chain_id = "qk_lt_n_k1"
            checks = (
                _check("chain.s2_lt_t", s2, t, "<"),
                _check("chain.t_lt_s1", t, s1, "<"),
            )
        else:
            chain_id = "qk_lt_n_kgt1"
            checks = (
                _check("chain.s2_lt_t", s2, t, "<"),
                _check("chain.t_lt_isum", t, isum, "<"),
                _check("chain.isum_lt_s1", isum, s1, "<"),
            )
    else:
        if c.k == 1:
            chain_id = "n_lt_qk_k1"
            checks = (
                _check("chain.t_lt_s2", t, s2, "<"),
                _check("chain.s2_lt_s1", s2, s1, "<"),
            )
        else:
            chain_id = "n_lt_qk_kgt1"
            checks = (
                _check("chain.t_lt_s2", t, s2, "<"),
                _check("chain.s2_lt_isum", s2, isum, "<"),
                _check("chain.isum_le_s1", isum, s1, "<="),
            )
    return ChainReport(
        section="chains", checks=checks, chain_id=chain_id, identities=identities
    )


@dataclass(frozen=True)
class CaseReport:
    """Which of the four (k, size-order) shapes the candidate has, and the
    per-link verdicts of that shape's full ordering chain."""

    sorli_k_equals_1: bool
    size_order: str  # "qk_less_n" | "n_less_qk"
    theorem2_case: int  # 1..4
    chain_checks: tuple[Check, ...]
    magnitude_flags: tuple[str, ...]

    @property
    def violations(self) -> tuple[str, ...]:
        return _violations(self.chain_checks)


def classify_case(c: EulerianCandidate) -> CaseReport:
    """Select the candidate's shape among the four cases and check the full
    stated ordering chain for it; q^k = n cannot occur (gcd(q, n) = 1)."""
    _require_nontrivial(c)
    if c.qk == c.n:
        raise AssertionError("q^k = n impossible for a valid candidate")
    k1 = c.k == 1
    qk_less = c.qk_less_than_n
    q, qk, n = Fraction(c.q), Fraction(c.qk), Fraction(c.n)
    sq, sn = Fraction(c.sigma_qk), Fraction(c.sigma_n)
    if k1 and qk_less:
        case = 1
        checks = (
            _check("case.q_lt_sigma_qk", q, sq, "<"),
            _check("case.sigma_qk_eq_q_plus_1", sq, q + 1, "=="),
            _check("case.sigma_qk_lt_n", sq, n, "<"),
            _check("case.n_lt_sigma_n", n, sn, "<"),
        )
    elif not k1 and qk_less:
        case = 2
        checks = (
            _check("case.q_lt_qk", q, qk, "<"),
            _check("case.qk_lt_n", qk, n, "<"),
            _check("case.n_lt_sigma_qk", n, sq, "<"),
            _check("case.sigma_qk_lt_sigma_n", sq, sn, "<"),
        )
    elif k1:
        case = 3
        checks = (
            _check("case.n_lt_sigma_n", n, sn, "<"),
            _check("case.sigma_n_lt_qk", sn, qk, "<"),
            _check("case.qk_lt_sigma_qk", qk, sq, "<"),
            _check("case.sigma_qk_eq_q_plus_1", sq, q + 1, "=="),
        )
    else:
        case = 4
        checks = (
            _check("case.q_lt_n", q, n, "<"),
            _check("case.n_lt_qk", n, qk, "<"),
            _check("case.qk_lt_sigma_n", qk, sn, "<"),
            _check("case.sigma_n_lt_sigma_qk", sn, sq, "<"),
        )
    return CaseReport(
        sorli_k_equals_1=k1,
        size_order="qk_less_n" if qk_less else "n_less_qk",
        theorem2_case=case,
        chain_checks=checks,
        magnitude_flags=c.warnings,
    )


@dataclass(frozen=True)
class ConjectureObservations:
    """Divisibility facts behind the integer-ratio conjecture: checked and
    reported, never assumed."""

    q_divides_sigma_n: bool
    sigma_n_over_q: int | None
    sigma_n_ratio_in_2_3: bool | None
    n_divides_sigma_qk: bool
    sigma_qk_over_n: int | None
    sigma_qk_ratio_is_2: bool | None


@dataclass(frozen=True)
class CorollaryReport(InequalityReport):
    corollary: int = 0  # 1 for k > 1, 2 for k = 1
    remark3: Check = None  # type: ignore[assignment]
    remark3_bounds: tuple[Check, ...] = ()
    conjecture: ConjectureObservations = None  # type: ignore[assignment]


def corollary_bounds(c: EulerianCandidate) -> CorollaryReport:
    """Bracket placements for the two cross ratios s(q^k)/n and s(n)/q^k.

    For k > 1 the inner ratio is placed against (1, 5/4) and the outer
    against (sqrt(8/5), 2); for k = 1 against (1/2, 1) and (sqrt(5/3), 4),
    or (sqrt(1/3), 1) and (sqrt(5/3), 2*sqrt(3)) when n is the smaller
    component.  Also evaluates the parity dichotomy I(q^k) vs q^k/n, which
    can never be Equal (equality would force n * s(q^k) = q^(2k), an even
    number equal to an odd one), and the divisor-ratio observations.
    """
    _require_nontrivial(c)
    ratio_qk = Fraction(c.sigma_qk, c.n)  # s(q^k)/n
    ratio_n = Fraction(c.sigma_n, c.qk)  # s(n)/q^k
    notes: list[str] = []
    if c.k > 1:
        corollary = 1
        if c.qk_less_than_n:
            checks = (
                _check("c1.sigma_qk_over_n_gt_1", ratio_qk, 1, ">"),
                _check("c1.sigma_qk_over_n_lt_5_4", ratio_qk, Fraction(5, 4), "<"),
                _check("c1.sigma_n_over_qk_gt_sqrt_8_5", ratio_n, sqrt(Fraction(8, 5)), ">"),
                _check("c1.sigma_n_over_qk_lt_2", ratio_n, 2, "<"),
            )
        else:
            checks = (
                _check("c1.sigma_n_over_qk_gt_1", ratio_n, 1, ">"),
                _check("c1.sigma_n_over_qk_lt_5_4", ratio_n, Fraction(5, 4), "<"),
                _check("c1.sigma_qk_over_n_gt_sqrt_8_5", ratio_qk, sqrt(Fraction(8, 5)), ">"),
                _check("c1.sigma_qk_over_n_lt_2", ratio_qk, 2, "<"),
            )
    else:
        corollary = 2
        if c.qk_less_than_n:
            checks = (
                _check("c2.sigma_q_over_n_gt_1_2", ratio_qk, Fraction(1, 2), ">"),
                _check("c2.sigma_q_over_n_lt_1", ratio_qk, 1, "<"),
                _check("c2.sigma_n_over_q_gt_sqrt_5_3", ratio_n, sqrt(Fraction(5, 3)), ">"),
                _check("c2.sigma_n_over_q_lt_4", ratio_n, 4, "<"),
            )
        else:
            checks = (
                _check("c2.sigma_n_over_q_gt_sqrt_1_3", ratio_n, sqrt(Fraction(1, 3)), ">"),
                _check("c2.sigma_n_over_q_lt_1", ratio_n, 1, "<"),
                _check("c2.sigma_q_over_n_gt_sqrt_5_3", ratio_qk, sqrt(Fraction(5, 3)), ">"),
                _check("c2.sigma_q_over_n_lt_two_sqrt_3", ratio_qk, 2 * sqrt(3), "<"),
            )
    remark3 = _check(
        "r3.abundancy_qk_vs_component_ratio",
        c.abundancy_qk,
        Fraction(c.qk, c.n),
        "!=",
    )
    remark3_bounds: tuple[Check, ...] = ()
    if not c.qk_less_than_n and c.k > 1:
        notes.append("direction of I(q^k) vs q^k/n is open for n < q^k, k > 1")
        if remark3.verdict == Ordering.GREATER:
            remark3_bounds = (
                _check("r3.n_over_qk_gt_4_5", Fraction(c.n, c.qk), Fraction(4, 5), ">"),
                _check("r3.qk_over_n_lt_5_4", Fraction(c.qk, c.n), Fraction(5, 4), "<"),
            )
    q_div, rem_q = divmod(c.sigma_n, c.q)
    n_div, rem_n = divmod(c.sigma_qk, c.n)
    conjecture = ConjectureObservations(
        q_divides_sigma_n=rem_q == 0,
        sigma_n_over_q=q_div if rem_q == 0 else None,
        sigma_n_ratio_in_2_3=(q_div in (2, 3)) if rem_q == 0 else None,
        n_divides_sigma_qk=rem_n == 0,
        sigma_qk_over_n=n_div if rem_n == 0 else None,
        sigma_qk_ratio_is_2=(n_div == 2) if rem_n == 0 else None,
    )
    return CorollaryReport(
        section="corollaries",
        checks=checks,
        notes=tuple(notes),
        corollary=corollary,
        remark3=remark3,
        remark3_bounds=remark3_bounds,
        conjecture=conjecture,
    )


@dataclass(frozen=True)
class LemmaSumsReport(InequalityReport):
    cross_sum: Fraction = Fraction(0)  # s1
    component_sum: Fraction = Fraction(0)  # s2
    geometric_mean: BoundExpr = None  # type: ignore[assignment]


def lemma_sums(c: EulerianCandidate) -> LemmaSumsReport:
    """Bracket the two mixed sums and check the arithmetic-geometric link.

    s1 is placed against (2*(8/5)^(1/4), 3); s2 against (2, 41/20) when
    q^k < n, else against ((128/125)^(1/4) + (125/128)^(1/4), 5/2).  The
    brackets hypothesize k > 1, so k = 1 candidates normally violate them;
    the AM-GM check 2*sqrt(I(q^k) I(n)) <= s1 holds for every candidate,
    with equality exactly when s(q^k)/n = s(n)/q^k.
    """
    _require_nontrivial(c)
    s1 = Fraction(c.sigma_qk, c.n) + Fraction(c.sigma_n, c.qk)
    s2 = Fraction(c.qk, c.n) + Fraction(c.n, c.qk)
    geo = 2 * sqrt(c.abundancy_qk * c.abundancy_n)
    checks = [
        _check("l1.s1_gt_twice_quarter_root_8_5", s1, 2 * nth_root(Fraction(8, 5), 4), ">"),
        _check("l1.s1_lt_3", s1, 3, "<"),
    ]
    if c.qk_less_than_n:
        checks.append(_check("l2.s2_gt_2", s2, 2, ">"))
        checks.append(_check("l2.s2_lt_41_20", s2, Fraction(41, 20), "<"))
    else:
        quarter_sum = nth_root(Fraction(128, 125), 4) + nth_root(Fraction(125, 128), 4)
        checks.append(_check("l2.s2_gt_quarter_sum_128_125", s2, quarter_sum, ">"))
        checks.append(_check("l2.s2_lt_5_2", s2, Fraction(5, 2), "<"))
    checks.append(_check("amgm.s1_ge_geometric_mean", s1, geo, ">="))
    notes = ("brackets hypothesize k > 1",) if c.k == 1 else ()
    return LemmaSumsReport(
        section="lemmas",
        checks=tuple(checks),
        notes=notes,
        cross_sum=s1,
        component_sum=s2,
        geometric_mean=geo,
    )


@dataclass(frozen=True)
class EulerPrimeBracket:
    """Anchors of the abundancy bracket under an Euler-prime cap Q:

        (Q+1)/Q <= I(q) <= I(q^k) < q/(q-1) <= 5/4 < sqrt(8/5)
                 < I(n) < 2q/(q+1) <= 2Q/(Q+1)

    with endpoint facts: 2Q/(Q+1) >= 5/3, equality exactly at Q = 5, and
    2Q/(Q+1) < 2 always."""

    q_cap: int
    iq_lower: Fraction  # (Q+1)/Q
    iqk_upper: Fraction  # 5/4, uniform over q >= 5
    in_lower: BoundExpr  # sqrt(8/5)
    in_upper: Fraction  # 2Q/(Q+1)
    in_upper_infimum: Fraction = Fraction(5, 3)
    in_upper_supremum: Fraction = Fraction(2)
    endpoint_checks: tuple[Check, ...] = ()

    def iqk_upper_at(self, q: int) -> Fraction:
        """Per-prime bound q/(q-1) on I(q^k)."""
        return Fraction(q, q - 1)

    def in_upper_at(self, q: int) -> Fraction:
        """Per-prime bound 2q/(q+1) on I(n)."""
        return Fraction(2 * q, q + 1)

    def as_tuple(self):
        return (self.iq_lower, self.iqk_upper, self.in_lower, self.in_upper,
                self.in_upper_supremum)


def lemma3_bracket(q_cap: int) -> EulerPrimeBracket:
    """Bracket anchors for all Euler primes q <= q_cap; q_cap >= 5 since no
    Euler prime exists below 5."""
    if q_cap < 5:
        raise ValueError(f"no Euler prime exists below 5; got cap {q_cap}")
    in_upper = Fraction(2 * q_cap, q_cap + 1)
    endpoint_checks = (
        _check("l3.in_upper_ge_5_3", in_upper, Fraction(5, 3), ">="),
        _check("l3.in_upper_lt_2", in_upper, 2, "<"),
    )
    return EulerPrimeBracket(
        q_cap=q_cap,
        iq_lower=Fraction(q_cap + 1, q_cap),
        iqk_upper=Fraction(5, 4),
        in_lower=sqrt(Fraction(8, 5)),
        in_upper=in_upper,
        endpoint_checks=endpoint_checks,
    )


@dataclass(frozen=True)
class OutlawAnchors:
    """The four excluded abundancy targets for one Euler prime q, and the
    consistency fact (2q-1)/q > 2q/(q+1) that resolves the second case."""

    q: int
    case_a: Fraction  # (q+2)/q
    case_b: Fraction  # (2q-1)/q
    case_c: Fraction  # (3q+1)/(2q)
    case_d: Fraction  # (3q-1)/(2q)
    case_b_consistency: Check

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.case_a, self.case_b, self.case_c, self.case_d)


@dataclass(frozen=True)
class Theorem5Table:
    """Anchor table for the four exclusion cases, materializing the low
    branch of case A (I(n) < (q+2)/q <= 7/5 forces q < 50) and the resolved
    upper bound of case B (I(n) < (2q-1)/q, the opposite branch being
    contradictory for q >= 5)."""

    q_cap: int | None
    rows: tuple[OutlawAnchors, ...]
    case_a_low_branch_primes: tuple[int, ...]
    case_a_q_limit: int = 50
    case_a_in_square_upper: Fraction = Fraction(49, 25)
    case_a_iqk_lower: Fraction = Fraction(50, 49)
    case_c_low_anchor: Fraction = Fraction(8, 5)
    case_c_high_floor: Fraction = Fraction(3, 2)
    case_d_low_ceiling: Fraction = Fraction(3, 2)
    case_d_high_floor: Fraction = Fraction(7, 5)
    case_a_high_floor: Fraction | None = None  # (Q+2)/Q when capped
    case_b_upper: Fraction | None = None  # (2Q-1)/Q when capped
    case_c_high_floor_capped: Fraction | None = None  # (3Q+1)/(2Q) when capped


def _outlaw_anchors(q: int) -> OutlawAnchors:
    return OutlawAnchors(
        q=q,
        case_a=Fraction(q + 2, q),
        case_b=Fraction(2 * q - 1, q),
        case_c=Fraction(3 * q + 1, 2 * q),
        case_d=Fraction(3 * q - 1, 2 * q),
        case_b_consistency=_check(
            "t5.case_b_gt_in_upper", Fraction(2 * q - 1, q), Fraction(2 * q, q + 1), ">"
        ),
    )


def theorem5_analyze(q_cap: int | None = None) -> Theorem5Table:
    """Exclusion anchors per Euler prime, for q <= q_cap when a cap is
    given, else for the case-A low-branch set {5, 13, 17, 29, 37, 41}."""
    if q_cap is not None and q_cap < 5:
        raise ValueError(f"no Euler prime exists below 5; got cap {q_cap}")
    low_branch = tuple(primes_one_mod_four(50))
    qs = tuple(primes_one_mod_four(q_cap + 1)) if q_cap is not None else low_branch
    rows = tuple(_outlaw_anchors(q) for q in qs)
    table = Theorem5Table(
        q_cap=q_cap,
        rows=rows,
        case_a_low_branch_primes=low_branch,
    )
    if q_cap is not None:
        table = Theorem5Table(
            q_cap=q_cap,
            rows=rows,
            case_a_low_branch_primes=low_branch,
            case_a_high_floor=Fraction(q_cap + 2, q_cap),
            case_b_upper=Fraction(2 * q_cap - 1, q_cap),
            case_c_high_floor_capped=Fraction(3 * q_cap + 1, 2 * q_cap),
        )
    return table


@dataclass(frozen=True)
class AdmissibleShift:
    """Shift values s for which I(n) = (q+s)/(q-1) survives the residue
    argument: s = 3 (mod 4) and 3 <= s <= q-6, bracketing I(n) inside
    [(q+3)/(q-1), (2q-6)/(q-1)].  An empty or inverted bracket excludes the
    prime q outright (as happens for q = 5)."""

    q: int
    shifts: tuple[int, ...]
    bracket_lo: Fraction
    bracket_hi: Fraction
    contradictory: bool


def theorem6_admissible(q: int) -> AdmissibleShift:
    if not is_prime(q) or q % 4 != 1:
        raise ValueError(f"q = {q} is not a prime 1 (mod 4)")
    shifts = tuple(range(3, q - 5, 4))
    lo = Fraction(q + 3, q - 1)
    hi = Fraction(2 * q - 6, q - 1)
    return AdmissibleShift(
        q=q,
        shifts=shifts,
        bracket_lo=lo,
        bracket_hi=hi,
        contradictory=lo > hi or hi <= 1,
    )
