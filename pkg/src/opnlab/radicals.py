"""Exact radical expressions (sums of rational multiples of square, fourth
and eighth roots of rationals) with decidable comparison.

Values are compared through shrinking rational enclosures; an Equal verdict
is only ever produced from a symbolic certificate, never from two intervals
that merely look alike.  Nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, isqrt

from .arith import primes_below

__all__ = [
    "BoundExpr",
    "ConstantRecord",
    "DEFAULT_COMPARE_ROUNDS",
    "Ordering",
    "PrecisionBudgetError",
    "RadicalTerm",
    "RationalInterval",
    "compare",
    "enclose",
    "from_rational",
    "nth_root",
    "paper_constants",
    "sqrt",
]

ROOT_INDICES = (1, 2, 4, 8)

# Separation budget for compare(): each refinement round at least halves
# every root bracket, and the narrowest gap the constant registry needs to
# resolve is about 3.5e-5, so 256 rounds is a very deep safety margin.
DEFAULT_COMPARE_ROUNDS = 256

# Radicands are reduced to m-th-power-free form as far as trial division by
# primes below this bound (plus exact perfect-power checks) can certify.
_EXTRACTION_TRIAL_BOUND = 10_000
_extraction_primes: list[int] | None = None


class PrecisionBudgetError(RuntimeError):
    """Enclosures failed to separate within the round budget and no equality
    certificate applies: the operands are suspected equal and would need a
    symbolic extension to decide."""


class Ordering(Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"

    @property
    def symbol(self) -> str:
        return {"less": "<", "equal": "=", "greater": ">"}[self.value]

    @staticmethod
    def of_sign(x) -> "Ordering":
        if x < 0:
            return Ordering.LESS
        if x > 0:
            return Ordering.GREATER
        return Ordering.EQUAL


@dataclass(frozen=True)
class RationalInterval:
    """Closed interval [lo, hi] with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"interval endpoints out of order: {self.lo} > {self.hi}")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def is_subset_of(self, other: "RationalInterval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi


@dataclass(frozen=True)
class RadicalTerm:
    """One summand: coefficient * base**(1/root_index).

    Canonical terms keep an integer-valued base (the radicand), never a
    perfect square when the index is even, so the root is certifiably
    irrational; rational summands carry base 1, index 1.
    """

    coefficient: Fraction
    base: Fraction
    root_index: int

    def __post_init__(self):
        if self.root_index not in ROOT_INDICES:
            raise ValueError(f"root index {self.root_index} not in {ROOT_INDICES}")
        if self.base <= 0:
            raise ValueError("radical base must be positive")

    @property
    def is_rational(self) -> bool:
        return self.root_index == 1

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.coefficient * self.base)
        root = {2: "sqrt", 4: "root4", 8: "root8"}[self.root_index]
        body = f"{root}({self.base})"
        if self.coefficient == 1:
            return body
        c = self.coefficient
        cs = str(c) if c.denominator == 1 else f"({c})"
        return f"{cs}*{body}"


def _trial_primes() -> list[int]:
    global _extraction_primes
    if _extraction_primes is None:
        _extraction_primes = primes_below(_EXTRACTION_TRIAL_BOUND)
    return _extraction_primes


def _canonical_parts(coefficient: Fraction, base: Fraction, root_index: int):
    """Normalize one term to (coefficient, integer radicand, index).

    Steps, repeated to a fixed point: clear the denominator into the
    coefficient, halve the index while the radicand is a perfect square,
    and pull m-th-power divisors (found by bounded trial division) out of
    the radicand.  Deterministic, value-preserving, and complete whenever
    the square part of the radicand has no prime factor above the trial
    bound.
    """
    if coefficient == 0 or root_index == 1:
        return (coefficient * base if coefficient else Fraction(0), Fraction(1), 1)
    m = root_index
    radicand = base.numerator * base.denominator ** (m - 1)
    coeff = coefficient / base.denominator
    while True:
        while m % 2 == 0:
            s = isqrt(radicand)
            if s * s == radicand:
                radicand = s
                m //= 2
            else:
                break
        if m == 1:
            return (coeff * radicand, Fraction(1), 1)
        if radicand == 1:
            return (coeff, Fraction(1), 1)
        extracted = 1
        rem = radicand
        for p in _trial_primes():
            if p * p > rem:
                break
            if rem % p:
                continue
            v = 0
            while rem % p == 0:
                rem //= p
                v += 1
            extracted *= p ** (v // m)
        if extracted == 1:
            return (coeff, Fraction(radicand), m)
        coeff *= extracted
        radicand //= extracted**m


def _canonical_term(coefficient: Fraction, base: Fraction, root_index: int) -> RadicalTerm:
    c, b, m = _canonical_parts(coefficient, base, root_index)
    return RadicalTerm(c, b, m)


def _as_fraction(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floating-point inputs are not accepted; pass Fraction or int")
    return Fraction(x)


@dataclass(frozen=True)
class BoundExpr:
    """Sum of radical terms, normalized: terms with the same (base, index)
    are merged, zero terms dropped, and a value of zero is kept as a single
    rational zero term so the sum is never empty."""

    terms: tuple[RadicalTerm, ...]

    def __post_init__(self):
        if not self.terms:
            raise ValueError("BoundExpr requires at least one term")

    @staticmethod
    def build(terms) -> "BoundExpr":
        merged: dict[tuple[int, Fraction], Fraction] = {}
        for t in terms:
            canon = _canonical_term(t.coefficient, t.base, t.root_index)
            if canon.coefficient == 0:
                continue
            key = (canon.root_index, canon.base)
            merged[key] = merged.get(key, Fraction(0)) + canon.coefficient
        out = [
            RadicalTerm(c, base, m)
            for (m, base), c in sorted(merged.items())
            if c != 0
        ]
        if not out:
            out = [RadicalTerm(Fraction(0), Fraction(1), 1)]
        return BoundExpr(tuple(out))

    @property
    def rational_part(self) -> Fraction:
        return sum(
            (t.coefficient * t.base for t in self.terms if t.is_rational),
            Fraction(0),
        )

    @property
    def radical_terms(self) -> tuple[RadicalTerm, ...]:
        return tuple(t for t in self.terms if not t.is_rational)

    @property
    def is_rational(self) -> bool:
        return not self.radical_terms

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return self.rational_part

    def __add__(self, other) -> "BoundExpr":
        return BoundExpr.build(self.terms + _to_expr(other).terms)

    __radd__ = __add__

    def __neg__(self) -> "BoundExpr":
        return BoundExpr.build(
            RadicalTerm(-t.coefficient, t.base, t.root_index) for t in self.terms
        )

    def __sub__(self, other) -> "BoundExpr":
        return self + (-_to_expr(other))

    def __rsub__(self, other) -> "BoundExpr":
        return _to_expr(other) + (-self)

    def __mul__(self, scalar) -> "BoundExpr":
        s = _as_fraction(scalar)
        return BoundExpr.build(
            RadicalTerm(t.coefficient * s, t.base, t.root_index) for t in self.terms
        )

    __rmul__ = __mul__

    def __str__(self) -> str:
        parts = []
        for i, t in enumerate(self.terms):
            s = str(t)
            if i == 0:
                parts.append(s)
            elif s.startswith("-"):
                parts.append(f"- {s[1:]}")
            else:
                parts.append(f"+ {s}")
        return " ".join(parts)


def _to_expr(x) -> BoundExpr:
    if isinstance(x, BoundExpr):
        return x
    return from_rational(_as_fraction(x))


def from_rational(x) -> BoundExpr:
    x = _as_fraction(x)
    return BoundExpr((RadicalTerm(x, Fraction(1), 1),))


def nth_root(base, root_index: int) -> BoundExpr:
    """base**(1/root_index) as an expression; root_index in {1, 2, 4, 8}."""
    return BoundExpr.build([RadicalTerm(Fraction(1), _as_fraction(base), root_index)])


def sqrt(base) -> BoundExpr:
    return nth_root(base, 2)


def _introot(n: int, k: int) -> int:
    if n < 2 or k == 1:
        return n
    if k == 2:
        return isqrt(n)
    x = 1 << (-(-n.bit_length() // k))
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x**k > n:
        x -= 1
    return x


class _RootBracket:
    """Bisection state for radicand**(1/m): a shrinking [lo, hi] with
    lo**m <= radicand <= hi**m, starting from the integer floor root."""

    __slots__ = ("radicand", "m", "lo", "hi")

    def __init__(self, radicand: int, m: int):
        r = _introot(radicand, m)
        self.radicand = radicand
        self.m = m
        self.lo = Fraction(r)
        self.hi = Fraction(r + 1)

    def refine(self, width: Fraction) -> None:
        while self.hi - self.lo > width:
            mid = (self.lo + self.hi) / 2
            if mid**self.m <= self.radicand:
                self.lo = mid
            else:
                self.hi = mid

    def step(self) -> None:
        mid = (self.lo + self.hi) / 2
        if mid**self.m <= self.radicand:
            self.lo = mid
        else:
            self.hi = mid


def _term_brackets(e: BoundExpr) -> list[tuple[Fraction, _RootBracket]]:
    return [
        (t.coefficient, _RootBracket(t.base.numerator, t.root_index))
        for t in e.radical_terms
    ]


def _sum_interval(rational: Fraction, brackets) -> RationalInterval:
    lo = hi = rational
    for coeff, br in brackets:
        if coeff >= 0:
            lo += coeff * br.lo
            hi += coeff * br.hi
        else:
            lo += coeff * br.hi
            hi += coeff * br.lo
    return RationalInterval(lo, hi)


def enclose(e: BoundExpr, eps) -> RationalInterval:
    """Rational interval around the value of e with width <= eps.

    Deterministic bisection from the integer floor root, so a smaller eps
    always yields an interval nested inside a larger one.  Rational
    expressions enclose exactly for any eps.
    """
    eps = _as_fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    brackets = _term_brackets(e)
    if brackets:
        share = eps / len(brackets)
        for coeff, br in brackets:
            br.refine(share / abs(coeff))
    return _sum_interval(e.rational_part, brackets)


def _power_raise_sign(pos: tuple[Fraction, Fraction, int], neg: tuple[Fraction, Fraction, int]):
    """Exact sign of a*ta**(1/ma) - b*tb**(1/mb) for positive a, b by raising
    both sides to lcm(ma, mb); the map x -> x**M is strictly increasing on
    positives, so the order survives."""
    a, ta, ma = pos
    b, tb, mb = neg
    lcm = ma * mb // gcd(ma, mb)
    left = a**lcm * ta ** (lcm // ma)
    right = b**lcm * tb ** (lcm // mb)
    return Ordering.of_sign(left - right)


def compare(lhs, rhs, *, max_rounds: int = DEFAULT_COMPARE_ROUNDS) -> Ordering:
    """Exact ordering of two values (Fraction, int, or BoundExpr).

    Decision path: the difference is normalized; a vanishing difference or
    a one- or two-term difference is decided symbolically (sign analysis
    plus raising to the root index), which is where every Equal verdict
    comes from.  Anything larger falls back to interval refinement, and if
    the brackets cannot separate the operands within max_rounds a
    PrecisionBudgetError is raised rather than guessing.
    """
    d = _to_expr(lhs) - _to_expr(rhs)
    rat = d.rational_part
    rads = d.radical_terms
    if not rads:
        return Ordering.of_sign(rat)
    signs = {1 if t.coefficient > 0 else -1 for t in rads}
    if rat:
        signs.add(1 if rat > 0 else -1)
    if len(signs) == 1:
        return Ordering.GREATER if signs.pop() > 0 else Ordering.LESS
    if len(rads) == 1 and rat != 0:
        t = rads[0]
        if t.coefficient > 0:
            return _power_raise_sign(
                (t.coefficient, t.base, t.root_index), (-rat, Fraction(1), 1)
            )
        return _power_raise_sign(
            (rat, Fraction(1), 1), (-t.coefficient, t.base, t.root_index)
        )
    if len(rads) == 2 and rat == 0:
        t1, t2 = rads
        if t1.coefficient > 0 > t2.coefficient:
            return _power_raise_sign(
                (t1.coefficient, t1.base, t1.root_index),
                (-t2.coefficient, t2.base, t2.root_index),
            )
        if t2.coefficient > 0 > t1.coefficient:
            return _power_raise_sign(
                (t2.coefficient, t2.base, t2.root_index),
                (-t1.coefficient, t1.base, t1.root_index),
            )
    brackets = _term_brackets(d)
    for _ in range(max_rounds):
        iv = _sum_interval(rat, brackets)
        if iv.lo > 0:
            return Ordering.GREATER
        if iv.hi < 0:
            return Ordering.LESS
        for _, br in brackets:
            br.step()
    raise PrecisionBudgetError(
        f"could not separate {lhs} and {rhs} within {max_rounds} rounds; "
        "suspected equal without a certificate"
    )


@dataclass(frozen=True)
class ConstantRecord:
    """One registry constant: its exact expression, the decimal printed for
    it in the source analysis, and the verification that the printed value
    is accurate to half an ulp of its last digit."""

    name: str
    expr: BoundExpr
    printed: str
    eps: Fraction
    enclosure: RationalInterval
    verified: bool

    @property
    def printed_digits(self) -> int:
        return len(self.printed.split(".")[1])


def _registry_specs() -> list[tuple[str, BoundExpr, str]]:
    F = Fraction
    return [
        ("sqrt_8_5", sqrt(F(8, 5)), "1.264911"),
        ("twice_quarter_root_8_5", 2 * nth_root(F(8, 5), 4), "2.2493653"),
        ("lemma1_lower",
         F(5, 4) + sqrt(F(8, 5)) - sqrt(10) + 2 * nth_root(F(8, 5), 4),
         "1.60199870466"),
        ("three_over_sqrt_2", 3 * nth_root(F(1, 2), 2), "2.12132"),
        ("sqrt_108_125", sqrt(F(108, 125)), "0.929516"),
        ("quarter_sum_125_108",
         nth_root(F(125, 108), 4) + nth_root(F(108, 125), 4),
         "2.00133573154771263"),
        ("sqrt_125_128", sqrt(F(125, 128)), "0.9882117688"),
        ("quarter_sum_128_125",
         nth_root(F(128, 125), 4) + nth_root(F(125, 128), 4),
         "2.0000351547"),
        ("sqrt_5_3", sqrt(F(5, 3)), "1.2909944487358"),
        ("sqrt_1_3", sqrt(F(1, 3)), "0.5773502691896257645"),
        ("two_sqrt_3", 2 * sqrt(3), "3.464101615137754587"),
    ]


def paper_constants() -> tuple[ConstantRecord, ...]:
    """The registry of printed radical constants, each enclosed at
    eps = 10**-(digits+2) and checked against the printed decimal.

    The printed values carry no stated rounding mode, so "accurate" is
    taken as: the enclosure (hence the true value) lies within half an ulp
    of the last printed digit.
    """
    out = []
    for name, expr, printed in _registry_specs():
        digits = len(printed.split(".")[1])
        eps = Fraction(1, 10 ** (digits + 2))
        enclosure = enclose(expr, eps)
        half_ulp = Fraction(1, 2 * 10**digits)
        printed_value = Fraction(printed)
        band = RationalInterval(printed_value - half_ulp, printed_value + half_ulp)
        out.append(
            ConstantRecord(name, expr, printed, eps, enclosure,
                           enclosure.is_subset_of(band))
        )
    return tuple(out)
