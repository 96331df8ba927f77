"""Brute-force oracles and bounded explorations: abundancy-equation scans,
perfect-number sieving, abundancy-target searches, and the sigma-chain
constraint tree for Euler factors.

Scan arithmetic runs on exact int64 divisor sums produced by a segmented
sieve (cross-checked against factorization on demand); every verdict is an
integer comparison.  Scans iterate a contiguous n-range, optionally split
into disjoint shards whose results union to the unsharded output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from pathlib import Path
from typing import Iterator

import numpy as np

from .arith import (
    DEFAULT_EFFORT,
    factor,
    is_prime,
    primes_one_mod_four,
    sigma,
    sigma_prime_power,
)

__all__ = [
    "Census",
    "EquationSolution",
    "MemoryBudgetError",
    "ScanConfig",
    "ScanInvariantError",
    "SieveResult",
    "SigmaChainNode",
    "abundancy_ratio_solutions",
    "load_checkpoint",
    "save_checkpoint",
    "sieve_scan",
    "sigma_chain",
    "sigma_segments",
    "theorem4_scan",
    "theorem6_scan",
]

# Sieve segment length: bounds peak memory at ~33 MB of int64 per segment.
SEGMENT = 1 << 22

# Sieving past this bound requires explicit opt-in (hours of work and a
# guarantee that int64 divisor sums stay exact, which holds to ~1e17).
LARGE_SIEVE_OPT_IN = 10**9


class MemoryBudgetError(RuntimeError):
    """Requested sieve bound exceeds the memory/effort opt-in threshold."""


class ScanInvariantError(RuntimeError):
    """A scan produced data violating an invariant it is supposed to
    guarantee (sieve/factorization disagreement, impossible residue, ...)."""


@dataclass(frozen=True)
class ScanConfig:
    """Bounds and filters for equation scans.

    shard = (index, count) restricts the scan to the index-th of count
    contiguous blocks of the n-range; the union over all indices is exactly
    the unsharded result.
    """

    n_bound: int
    q_bound: int = 0
    parity: str = "odd"  # "odd" | "all"
    coprime_only: bool = True
    exclude_n_equals_1: bool = True
    shard: tuple[int, int] | None = None

    def __post_init__(self):
        if self.n_bound < 1:
            raise ValueError("n_bound must be >= 1")
        if self.q_bound < 0:
            raise ValueError("q_bound must be >= 0")
        if self.parity not in ("odd", "all"):
            raise ValueError(f"parity must be 'odd' or 'all', got {self.parity!r}")
        if self.shard is not None:
            idx, count = self.shard
            if count < 1 or not 0 <= idx < count:
                raise ValueError(f"bad shard spec {self.shard}")

    def n_range(self) -> tuple[int, int]:
        """Inclusive (lo, hi) n-range for this shard; may be empty."""
        if self.shard is None:
            return 1, self.n_bound
        idx, count = self.shard
        block = -(-self.n_bound // count)
        return 1 + idx * block, min(self.n_bound, (idx + 1) * block)

    def admits(self, n: int) -> bool:
        if self.parity == "odd" and n % 2 == 0:
            return False
        if self.exclude_n_equals_1 and n == 1:
            return False
        return True


@dataclass(frozen=True)
class EquationSolution:
    """One exact solution of a scan equation; lhs and rhs are the two sides
    of the integer form and must agree."""

    n: int
    q: int
    parameter: int
    lhs: int
    rhs: int

    def __post_init__(self):
        if self.lhs != self.rhs:
            raise ValueError(f"not a solution: {self.lhs} != {self.rhs}")

    def sort_key(self):
        return (self.n, self.q, self.parameter)


def sigma_segments(lo: int, hi: int, segment: int = SEGMENT) -> Iterator[tuple[int, np.ndarray]]:
    """Yield (seg_lo, sigma_values) covering n in [lo, hi] inclusive.

    Divisor sums come from the paired-divisor sieve: for every d <= sqrt(m)
    the pair (d, m/d) is added at m, the square root only once.  No
    factorization involved.
    """
    for seg_lo in range(lo, hi + 1, segment):
        seg_hi = min(hi, seg_lo + segment - 1)
        out = np.zeros(seg_hi - seg_lo + 1, dtype=np.int64)
        for d in range(1, isqrt(seg_hi) + 1):
            start = max(d * d, ((seg_lo + d - 1) // d) * d)
            if start > seg_hi:
                continue
            idx = np.arange(start, seg_hi + 1, d, dtype=np.int64)
            contrib = idx // d + d
            if idx[0] == d * d:
                contrib[0] = d
            out[idx - seg_lo] += contrib
        yield seg_lo, out


def _scan_events(cfg: ScanConfig, per_n, start_after: int = 0):
    """Drive a per-n solver across the (sharded) range, yielding
    ("solution", EquationSolution) and ("progress", n_done) events."""
    lo, hi = cfg.n_range()
    lo = max(lo, start_after + 1)
    if lo > hi:
        yield ("progress", hi)
        return
    for seg_lo, sig in sigma_segments(lo, hi):
        seg_hi = seg_lo + len(sig) - 1
        for n in range(seg_lo, seg_hi + 1):
            if not cfg.admits(n):
                continue
            for sol in per_n(n, int(sig[n - seg_lo])):
                yield ("solution", sol)
        yield ("progress", seg_hi)


def _euler_primes_upto(q_bound: int) -> list[int]:
    return primes_one_mod_four(q_bound + 1)


def iter_theorem4_scan(cfg: ScanConfig, start_after: int = 0):
    """Event form of theorem4_scan, for streaming and checkpointing."""
    qs = _euler_primes_upto(cfg.q_bound)

    def per_n(n: int, s: int):
        # q*sigma(n) = (q+r)*n with integer 0 <= r <= q demands
        # n/gcd(n, sigma(n)) | q; for prime q that means the reduced part
        # is 1 (any q works) or q itself.
        m = n // gcd(n, s)
        if m == 1:
            if s <= 2 * n:  # r = q*(s-n)/n <= q iff sigma(n) <= 2n
                for q in qs:
                    if cfg.coprime_only and n % q == 0:
                        continue
                    r = q * (s - n) // n
                    yield EquationSolution(n, q, r, q * s, (q + r) * n)
        elif m <= cfg.q_bound and m % 4 == 1 and is_prime(m):
            q = m
            if not (cfg.coprime_only and n % q == 0):
                r = q * (s - n) // n
                if 0 <= r <= q:
                    yield EquationSolution(n, q, r, q * s, (q + r) * n)

    yield from _scan_events(cfg, per_n, start_after)


def theorem4_scan(cfg: ScanConfig, start_after: int = 0) -> list[EquationSolution]:
    """All (n, q, r) with q*sigma(n) = (q+r)*n, q an Euler prime <= q_bound,
    0 <= r <= q, n <= n_bound, under the config filters.

    With the odd/coprime/n>1 filters every solution forces n | sigma(n), so
    none can have deficient n; at desk scale the list is empty.
    """
    return sorted(
        (ev for kind, ev in iter_theorem4_scan(cfg, start_after) if kind == "solution"),
        key=EquationSolution.sort_key,
    )


def iter_theorem6_scan(cfg: ScanConfig, start_after: int = 0):
    """Event form of theorem6_scan, for streaming and checkpointing."""
    qs = _euler_primes_upto(cfg.q_bound)

    def per_n(n: int, s: int):
        # (q-1)*sigma(n) = n*(q+s) demands n/gcd(n, sigma(n)) | q-1.
        m = n // gcd(n, s)
        for q in qs:
            if (q - 1) % m:
                continue
            if cfg.coprime_only and n % q == 0:
                continue
            shift = (q - 1) * s // n - q
            if -1 <= shift <= q - 2:
                sol = EquationSolution(n, q, shift, (q - 1) * s, n * (q + shift))
                if n > 1 and n % 2 == 1 and 1 <= shift < q - 2:
                    _verify_interior_shift(sol, s)
                yield sol

    yield from _scan_events(cfg, per_n, start_after)


def _verify_interior_shift(sol: EquationSolution, s: int) -> None:
    # For odd n the residue argument forces shift = 3 (mod 4) and pins
    # I(n) inside [(q+3)/(q-1), (2q-6)/(q-1)]; a violation is a bug.
    q, n, shift = sol.q, sol.n, sol.parameter
    if shift % 4 != 3:
        raise ScanInvariantError(f"interior shift {shift} != 3 (mod 4) at {sol}")
    if not ((q + 3) * n <= (q - 1) * s <= (2 * q - 6) * n):
        raise ScanInvariantError(f"abundancy outside admissible bracket at {sol}")


def theorem6_scan(cfg: ScanConfig, start_after: int = 0) -> list[EquationSolution]:
    """All (n, q, s) with (q-1)*sigma(n) = n*(q+s), q an Euler prime
    <= q_bound, -1 <= s <= q-2, under the config filters.

    Interior solutions (1 <= s < q-2) with odd n > 1 are re-verified at
    scan time: s = 3 (mod 4) and I(n) within [(q+3)/(q-1), (2q-6)/(q-1)].
    """
    return sorted(
        (ev for kind, ev in iter_theorem6_scan(cfg, start_after) if kind == "solution"),
        key=EquationSolution.sort_key,
    )


@dataclass(frozen=True)
class Census:
    deficient: int
    perfect: int
    abundant: int


@dataclass(frozen=True)
class SieveResult:
    bound: int
    perfect: tuple[int, ...]
    odd_perfect_count: int
    census: Census
    samples_checked: int


def sieve_scan(
    bound: int,
    *,
    allow_large: bool = False,
    samples: int = 10_000,
    seed: int = 0,
    factor_budget: int = DEFAULT_EFFORT,
) -> SieveResult:
    """Classify every n <= bound by divisor sum via the segmented sieve.

    Returns the perfect numbers, the odd-perfect count (raising if it were
    ever nonzero), and a deficient/perfect/abundant census.  A deterministic
    random sample of sieve values is cross-checked against the
    factorization route before returning.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if bound > LARGE_SIEVE_OPT_IN and not allow_large:
        raise MemoryBudgetError(
            f"sieve bound {bound} exceeds {LARGE_SIEVE_OPT_IN}; pass allow_large=True"
        )
    import random

    rng = random.Random(seed)
    sample_ns = sorted(rng.sample(range(1, bound + 1), min(samples, bound)))
    sample_iter = iter(sample_ns)
    next_sample = next(sample_iter, None)

    perfect: list[int] = []
    odd_perfect = 0
    deficient = 0
    abundant = 0
    for seg_lo, sig in sigma_segments(1, bound):
        ns = np.arange(seg_lo, seg_lo + len(sig), dtype=np.int64)
        doubled = 2 * ns
        deficient += int(np.count_nonzero(sig < doubled))
        abundant += int(np.count_nonzero(sig > doubled))
        hits = ns[sig == doubled]
        for n in hits.tolist():
            perfect.append(n)
            if n % 2 == 1:
                odd_perfect += 1
        while next_sample is not None and next_sample < seg_lo + len(sig):
            n = next_sample
            expected = sigma(factor(n, budget=factor_budget))
            got = int(sig[n - seg_lo])
            if expected != got:
                raise ScanInvariantError(
                    f"sieve sigma({n}) = {got} but factorization gives {expected}"
                )
            next_sample = next(sample_iter, None)
    if odd_perfect:
        raise ScanInvariantError(f"odd perfect number reported below {bound}: {perfect}")
    return SieveResult(
        bound=bound,
        perfect=tuple(perfect),
        odd_perfect_count=odd_perfect,
        census=Census(deficient, len(perfect), abundant),
        samples_checked=len(sample_ns),
    )


VALID_CHAIN_STATUS = ("open", "closed-by-depth", "closed-by-bound", "contradiction")


@dataclass(frozen=True)
class SigmaChainNode:
    """Node of the Euler-factor constraint tree.

    Each node hypothesizes an exact component p^e of the hypothetical
    perfect number; its children are the odd primes dividing sigma(p^e),
    which must themselves divide the number.  The abundancy product over
    the distinct primes on the path can never exceed 2, so crossing 2 marks
    the branch contradictory.
    """

    prime: int
    exponent: int
    sigma_value: int
    status: str
    abundancy_product: Fraction
    children: tuple["SigmaChainNode", ...]

    def __post_init__(self):
        if self.status not in VALID_CHAIN_STATUS:
            raise ValueError(f"bad status {self.status!r}")

    def walk(self) -> Iterator[tuple[int, "SigmaChainNode"]]:
        """(depth, node) pairs in depth-first order."""
        stack = [(0, self)]
        while stack:
            d, node = stack.pop()
            yield d, node
            stack.extend((d + 1, ch) for ch in reversed(node.children))


def sigma_chain(
    q: int,
    k: int,
    depth: int,
    magnitude_bound: int,
    *,
    exponent_set: tuple[int, ...] = (2, 4),
    factor_budget: int = DEFAULT_EFFORT,
) -> SigmaChainNode:
    """Constraint tree rooted at the Euler factor q^k.

    Expansion: a node p^e contributes the odd prime factors of sigma(p^e)
    as children.  Non-root primes belong to the square part, so they get
    trial exponents from exponent_set (even numbers); a prime already
    hypothesized on the path keeps its exponent and adds no new abundancy.
    Nodes stop expanding at the depth limit, when p^e exceeds the magnitude
    bound, or when the accumulated abundancy product provably exceeds 2.
    """
    if not is_prime(q) or q % 4 != 1:
        raise ValueError(f"q = {q} is not a prime 1 (mod 4)")
    if k < 1 or k % 4 != 1:
        raise ValueError(f"k = {k} is not a positive integer 1 (mod 4)")
    if depth < 0:
        raise ValueError("depth must be >= 0")
    if magnitude_bound < 1:
        raise ValueError("magnitude_bound must be >= 1")
    if not exponent_set or any(e < 2 or e % 2 for e in exponent_set):
        raise ValueError("exponent_set must contain even integers >= 2")

    def build(p: int, e: int, product_before: Fraction, path: dict[int, int], level: int) -> SigmaChainNode:
        pe = p**e
        sv = sigma_prime_power(p, e)
        product = product_before
        if p not in path:
            product = product * Fraction(sv, pe)
        if product > 2:
            return SigmaChainNode(p, e, sv, "contradiction", product, ())
        if pe > magnitude_bound:
            return SigmaChainNode(p, e, sv, "closed-by-bound", product, ())
        if level >= depth:
            return SigmaChainNode(p, e, sv, "closed-by-depth", product, ())
        child_path = dict(path)
        child_path[p] = e
        odd_primes = [pp for pp, _ in factor(sv, budget=factor_budget).factors if pp != 2]
        kids = []
        for pp in odd_primes:
            if sv % pp != 0:
                raise ScanInvariantError(f"{pp} does not divide sigma({p}^{e}) = {sv}")
            exponents = (child_path[pp],) if pp in child_path else tuple(exponent_set)
            for ee in exponents:
                kids.append(build(pp, ee, product, child_path, level + 1))
        return SigmaChainNode(p, e, sv, "open", product, tuple(kids))

    return build(q, k, Fraction(1), {}, 0)


def abundancy_ratio_solutions(
    target: Fraction,
    bound: int,
    filters: ScanConfig | None = None,
) -> list[int]:
    """All n <= bound with sigma(n)/n equal to the target exactly.

    In lowest terms target = a/b forces b | n, so only multiples of b are
    visited.  An optional ScanConfig contributes parity, n = 1 exclusion,
    and shard filters (its own bounds are ignored; coprimality has no
    meaning without a q).
    """
    target = Fraction(target)
    if target <= 0:
        raise ValueError("target must be positive")
    a, b = target.numerator, target.denominator
    lo, hi = 1, bound
    if filters is not None:
        shard_cfg = ScanConfig(
            n_bound=bound,
            parity=filters.parity,
            coprime_only=False,
            exclude_n_equals_1=filters.exclude_n_equals_1,
            shard=filters.shard,
        )
        lo, hi = shard_cfg.n_range()
        admits = shard_cfg.admits
    else:
        admits = lambda n: True
    out: list[int] = []
    if lo > hi:
        return out
    first = max(lo, b)
    first += (-first) % b  # round up to a multiple of b
    if first > hi:
        return out
    for seg_lo, sig in sigma_segments(first, hi):
        seg_hi = seg_lo + len(sig) - 1
        start = seg_lo + (-seg_lo) % b
        for n in range(start, seg_hi + 1, b):
            if not admits(n):
                continue
            if int(sig[n - seg_lo]) * b == a * n:
                out.append(n)
    return out


def save_checkpoint(path: str | Path, shard: tuple[int, int] | None, n_done: int) -> None:
    """Record scan progress as JSON {shard, n_done}."""
    Path(path).write_text(
        json.dumps({"shard": list(shard) if shard else None, "n_done": n_done}) + "\n"
    )


def load_checkpoint(path: str | Path) -> tuple[tuple[int, int] | None, int]:
    data = json.loads(Path(path).read_text())
    shard = tuple(data["shard"]) if data.get("shard") else None
    return shard, int(data["n_done"])
