"""opnlab: exact-arithmetic audits of the Eulerian-form constraint system
for odd perfect numbers N = q^k * n^2."""

from .arith import (
    DEFAULT_EFFORT,
    DeficiencyClass,
    FactorBudgetError,
    Factorization,
    abundancy,
    classify_deficiency,
    factor,
    is_prime,
    primes_below,
    primes_one_mod_four,
    sigma,
    sigma_prime_power,
    value,
)
from .radicals import (
    BoundExpr,
    ConstantRecord,
    Ordering,
    PrecisionBudgetError,
    RadicalTerm,
    RationalInterval,
    compare,
    enclose,
    from_rational,
    nth_root,
    paper_constants,
    sqrt,
)
from .eulerian import (
    AdmissibleShift,
    CandidateError,
    CaseReport,
    ChainReport,
    Check,
    ConjectureObservations,
    CorollaryReport,
    EulerPrimeBracket,
    EulerianCandidate,
    EvenPartError,
    InequalityReport,
    KResidueError,
    LemmaSumsReport,
    OutlawAnchors,
    QNotPrimeError,
    QResidueError,
    SharedFactorError,
    Theorem1Report,
    Theorem5Table,
    classify_case,
    corollary_bounds,
    lemma3_bracket,
    lemma_sums,
    remark_chains,
    theorem1_vector,
    theorem5_analyze,
    theorem6_admissible,
    validate,
)
from .search import (
    Census,
    EquationSolution,
    MemoryBudgetError,
    ScanConfig,
    ScanInvariantError,
    SieveResult,
    SigmaChainNode,
    abundancy_ratio_solutions,
    sieve_scan,
    sigma_chain,
    theorem4_scan,
    theorem6_scan,
)

__version__ = "0.1.0"
