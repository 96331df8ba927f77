"""Exact integer arithmetic: primality, factorization, and the divisor-sum
function sigma with its abundancy ratio I(x) = sigma(x)/x.

Everything here is pure integer / rational arithmetic.  No verdict anywhere
in this module (or its callers) is ever derived from a floating-point value.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, isqrt

__all__ = [
    "DEFAULT_EFFORT",
    "DeficiencyClass",
    "FactorBudgetError",
    "Factorization",
    "abundancy",
    "classify_deficiency",
    "factor",
    "is_prime",
    "primes_below",
    "primes_one_mod_four",
    "sigma",
    "sigma_prime_power",
    "value",
]

# Factoring effort budget, in "iteration equivalents": one trial division or
# one rho step costs one unit.  Overridable per call; the CLI maps the
# OPNLAB_EFFORT environment variable onto this parameter.
DEFAULT_EFFORT = 10**9

# Trial division strips primes below this bound before handing the cofactor
# to Brent's rho.  Rho finds factors in this range faster than continued
# trial division would, so the bound is kept small.
_TRIAL_BOUND = 10_000

# Deterministic Miller-Rabin witness set, valid for all n < 3_317_044_064_679_887_385_961_981
# (comfortably past 2**64).
_DETERMINISTIC_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981

# Above the deterministic range: 64 rounds at error < 4**-64 = 2**-128 per
# composite.  Bases are drawn from a PRNG seeded by the input itself, so
# results are reproducible across runs and processes.
_PROBABILISTIC_ROUNDS = 64
_WITNESS_SEED_SALT = 0x5F3A_11C9


class FactorBudgetError(RuntimeError):
    """Factoring effort budget exhausted before a full factorization."""

    def __init__(self, n: int, budget: int):
        self.n = n
        self.budget = budget
        super().__init__(
            f"factoring budget of {budget} iteration-equivalents exhausted on {n}"
        )


class DeficiencyClass(Enum):
    DEFICIENT = "deficient"
    PERFECT = "perfect"
    ABUNDANT = "abundant"


_small_primes: list[int] | None = None


def primes_below(bound: int) -> list[int]:
    """Ascending primes p < bound, by Eratosthenes."""
    if bound <= 2:
        return []
    sieve = bytearray([1]) * bound
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(bound - 1) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, bound, p)))
    return [i for i in range(bound) if sieve[i]]


def _trial_primes() -> list[int]:
    # Built once, read-only afterwards; rebuilding is idempotent, so the
    # unsynchronized check is safe under concurrent first use.
    global _small_primes
    if _small_primes is None:
        _small_primes = primes_below(_TRIAL_BOUND)
    return _small_primes


def primes_one_mod_four(bound: int) -> list[int]:
    """Ascending primes p < bound with p = 1 (mod 4).

    These are the only possible Euler primes below the bound.
    """
    return [p for p in primes_below(bound) if p % 4 == 1]


def _miller_rabin_composite_witness(n: int, a: int, d: int, r: int) -> bool:
    # n - 1 = d * 2**r with d odd; True means a proves n composite.
    a %= n
    if a in (0, 1, n - 1):
        return False
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(r - 1):
        x = (x * x) % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    """Primality test, exact below 2**64 and far beyond.

    Witness policy: for n < 3.317e24 the fixed witness set {2, 3, ..., 37}
    is a proof, so the answer is deterministic and correct (this covers all
    of 2**64).  For larger n, 64 Miller-Rabin rounds are run with bases from
    ``random.Random(n ^ salt)``; a composite survives with probability below
    4**-64 = 2**-128, and the seeding makes every run reproducible.
    """
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    if n < _DETERMINISTIC_LIMIT:
        bases = _DETERMINISTIC_WITNESSES
    else:
        rng = random.Random(n ^ _WITNESS_SEED_SALT)
        bases = tuple(rng.randrange(2, n - 1) for _ in range(_PROBABILISTIC_ROUNDS))
    return not any(_miller_rabin_composite_witness(n, a, d, r) for a in bases)


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ((prime, exponent), ...) with primes strictly
    increasing, exponents >= 1, and every prime certified by is_prime.

    The empty tuple represents 1 (empty product).
    """

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prev = 1
        for p, e in self.factors:
            if p <= prev:
                raise ValueError(f"primes not strictly increasing at {p}")
            if e < 1:
                raise ValueError(f"exponent {e} < 1 for prime {p}")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            prev = p

    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def to_json(self) -> list[list]:
        # Primes as decimal strings: JSON numbers lose precision past 2**53.
        return [[str(p), e] for p, e in self.factors]

    @classmethod
    def from_json(cls, data: list) -> "Factorization":
        return cls(tuple((int(p), int(e)) for p, e in data))


def value(f: Factorization) -> int:
    return f.value()


def sigma_prime_power(p: int, e: int) -> int:
    """sigma(p^e) = (p^(e+1) - 1) / (p - 1), the geometric series 1 + p + ... + p^e."""
    return (p ** (e + 1) - 1) // (p - 1)


def sigma(f: Factorization) -> int:
    """Sum of divisors, multiplicative over the coprime prime powers."""
    out = 1
    for p, e in f.factors:
        out *= sigma_prime_power(p, e)
    return out


def abundancy(f: Factorization) -> Fraction:
    """I(x) = sigma(x)/x in lowest terms."""
    return Fraction(sigma(f), f.value())


def classify_deficiency(f: Factorization) -> DeficiencyClass:
    """Exact comparison of sigma(x) against 2x."""
    s, two_n = sigma(f), 2 * f.value()
    if s < two_n:
        return DeficiencyClass.DEFICIENT
    if s == two_n:
        return DeficiencyClass.PERFECT
    return DeficiencyClass.ABUNDANT


class _EffortMeter:
    __slots__ = ("left", "n", "budget")

    def __init__(self, n: int, budget: int):
        self.left = budget
        self.n = n
        self.budget = budget

    def spend(self, units: int) -> None:
        self.left -= units
        if self.left < 0:
            raise FactorBudgetError(self.n, self.budget)


def _introot(n: int, k: int) -> int:
    """Floor k-th root of n >= 0."""
    if n < 2 or k == 1:
        return n
    if k == 2:
        return isqrt(n)
    x = 1 << (-(-n.bit_length() // k))  # upper start
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x**k > n:
        x -= 1
    return x


def _perfect_power(n: int) -> tuple[int, int] | None:
    """(base, k) with base**k == n and k >= 2, or None."""
    for k in (2, 3, 5, 7, 11, 13, 17, 19):
        if (1 << k) > n:
            break
        r = _introot(n, k)
        if r**k == n:
            return r, k
    return None


def _brent_rho(n: int, meter: _EffortMeter) -> int:
    """Nontrivial factor of composite odd n via Brent's cycle variant.

    The (seed, offset) schedule is fixed, so factorizations are reproducible.
    """
    if n % 2 == 0:
        return 2
    for attempt in range(1, 100):
        y, c, m = 2 + attempt, 1 + attempt * attempt, 128
        g, r, q = 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                steps = min(m, r - k)
                for _ in range(steps):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                meter.spend(steps)
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                meter.spend(1)
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise FactorBudgetError(n, meter.budget)


def factor(n: int, budget: int = DEFAULT_EFFORT) -> Factorization:
    """Full prime factorization of n >= 1; factor(1) is the empty product.

    Strategy: trial division by primes below 10**4, then Miller-Rabin plus
    Brent rho on what remains, with perfect-power peeling.  Raises
    FactorBudgetError once the effort budget (iteration equivalents) is spent.
    """
    if n < 1:
        raise ValueError("factor requires n >= 1")
    meter = _EffortMeter(n, budget)
    out: dict[int, int] = {}
    for p in _trial_primes():
        if p * p > n:
            break
        meter.spend(1)
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n > 1:
        stack = [(n, 1)]
        while stack:
            m, mult = stack.pop()
            if m == 1:
                continue
            if is_prime(m):
                out[m] = out.get(m, 0) + mult
                continue
            pw = _perfect_power(m)
            if pw is not None:
                stack.append((pw[0], mult * pw[1]))
                continue
            d = _brent_rho(m, meter)
            stack.append((d, mult))
            stack.append((m // d, mult))
    return Factorization(tuple(sorted(out.items())))
