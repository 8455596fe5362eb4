"""Radix expansion of fractions through the multiply-by-B residue graph.

The pipeline behind expand():

1. split off the integer part and reduce k/m to lowest terms,
2. factor_out_base strips the primes of B from the denominator; the stripped
   part contributes exactly `shift` digits after the point (the preperiod),
3. reduce_coprime rescales the remaining tail k''/m' (gcd(m', B) = 1) to a
   fraction with denominator M = B*n - 1 by multiplying through with the
   unique c in [1, B-1] such that c*m' = -1 mod B,
4. the period digits are then read off the cycle of c*k'' in the
   multiply-by-B graph mod M: each remainder's rightmost base-B digit, in
   order, is the repeating block.

long_division_oracle computes the same expansion by schoolbook remainder
tracking and shares no code with the pipeline; run_oracle_sweep compares the
two over a grid of inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import NamedTuple

from .digits import DigitString, to_digit_string, from_digit_string
from .errors import CapacityError, NotAUnitError, ValidationError, ZeroDenominatorError
from .graph import GraphParams, cycle_length_of
from .numtheory import FACTORIZATION_CAP, factorize, mod_inverse


@dataclass(frozen=True)
class Fraction:
    """A nonnegative fraction, not necessarily in lowest terms."""

    numerator: int
    denominator: int

    def __post_init__(self) -> None:
        if self.denominator == 0:
            raise ZeroDenominatorError(f"{self.numerator}/0 is not a fraction")
        if self.numerator < 0 or self.denominator < 0:
            raise ValidationError(
                f"expected nonnegative numerator and denominator, got {self.numerator}/{self.denominator}"
            )

    def reduced(self) -> "Fraction":
        g = math.gcd(self.numerator, self.denominator)
        return Fraction(self.numerator // g, self.denominator // g)

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


@dataclass(frozen=True)
class ReductionTrace:
    """Intermediate quantities produced while reducing a fraction.

    shift is the number of digits the point moves (the preperiod length),
    preperiod_value those digits read as one integer, and
    tail_numerator/tail_denominator the leftover fraction whose denominator
    is coprime to the base. For a nonterminating expansion, multiplier is
    the c with multiplier * tail_denominator = base * graph_n - 1, and the
    period is read from the cycle of multiplier * tail_numerator in the
    graph mod that modulus.
    """

    shift: int
    integer_part: int
    preperiod_value: int
    tail_numerator: int
    tail_denominator: int
    multiplier: int | None = None
    graph_n: int | None = None


@dataclass(frozen=True)
class RadixExpansion:
    """Positional expansion integer_part . preperiod (period repeating)."""

    base: int
    integer_part: DigitString
    preperiod: DigitString
    period: DigitString

    def __post_init__(self) -> None:
        for part in (self.integer_part, self.preperiod, self.period):
            if part.base != self.base:
                raise ValidationError(f"component base {part.base} != expansion base {self.base}")


class TraceStep(NamedTuple):
    index: int
    remainder: int
    digit: int


@dataclass(frozen=True)
class PeriodTrace:
    """Remainder walk around one cycle, with the digit read at each stop."""

    params: GraphParams
    start: int
    steps: tuple[TraceStep, ...]
    right_to_left: bool = False

    @property
    def remainders(self) -> tuple[int, ...]:
        return tuple(s.remainder for s in self.steps)

    @property
    def digits(self) -> tuple[int, ...]:
        return tuple(s.digit for s in self.steps)

    def __len__(self) -> int:
        return len(self.steps)


def period_digits(k: int, params: GraphParams) -> PeriodTrace:
    """Period of k/M as the rightmost digits along the cycle of k.

    The i-th step holds remainder B^i * k mod M; its rightmost base-B digit
    is the i-th period digit. The walk ends back at k.
    """
    m = params.modulus
    if not 0 <= k < m:
        raise ValidationError(f"numerator {k} out of range [0, {m})")
    base = params.base
    steps = []
    r = k
    for i in range(1, cycle_length_of(params, k) + 1):
        r = r * base % m
        steps.append(TraceStep(i, r, r % base))
    return PeriodTrace(params, k, tuple(steps))


def period_digits_reversed(k: int, params: GraphParams) -> PeriodTrace:
    """Same cycle walked backwards (multiply by n), digits right to left.

    The i-th step holds remainder n^(i-1) * k mod M starting at k itself;
    reading the digit column bottom-up reproduces period_digits(k).
    """
    m = params.modulus
    if not 0 <= k < m:
        raise ValidationError(f"numerator {k} out of range [0, {m})")
    base = params.base
    steps = []
    r = k
    for i in range(1, cycle_length_of(params, k) + 1):
        steps.append(TraceStep(i, r, r % base))
        r = r * params.n % m
    return PeriodTrace(params, k, tuple(steps), right_to_left=True)


def reduce_coprime(k: int, m: int, base: int) -> tuple[int, int, int]:
    """Rescale k/m with gcd(m, base) = 1 onto a modulus of the form base*n - 1.

    Returns (c, n, c*k) where c in [1, base-1] is chosen so that
    c*m = base*n - 1. Then k/m = c*k / (base*n - 1) and the period can be
    read from the graph with parameters (base, n).
    """
    if base < 2:
        raise ValidationError(f"base must be >= 2, got {base}")
    if m < 2 or not 1 <= k < m:
        raise ValidationError(f"expected 1 <= k < m with m >= 2, got k={k}, m={m}")
    if math.gcd(m, base) != 1:
        raise NotAUnitError(f"denominator {m} shares a factor with base {base}")
    c = (-mod_inverse(m, base)) % base
    n = (c * m + 1) // base
    return c, n, c * k


def factor_out_base(k: int, m: int, base: int) -> ReductionTrace:
    """Strip the primes of the base from the denominator of k/m (lowest terms).

    Finds the least shift e such that base^e clears every base-prime from m,
    then splits base^e * k/m as preperiod_value + tail_numerator/tail_denominator
    with 0 <= tail_numerator < tail_denominator and gcd(tail_denominator, base) = 1.
    """
    if base < 2:
        raise ValidationError(f"base must be >= 2, got {base}")
    if m < 1 or not 1 <= k < m:
        raise ValidationError(f"expected 1 <= k < m, got k={k}, m={m}")
    if math.gcd(k, m) != 1:
        raise ValidationError(f"{k}/{m} is not in lowest terms")
    base_factors = factorize(base).factors
    m_exponents = factorize(m).as_dict()
    shift = 0
    m_prime = m
    for p, bp in base_factors:
        ep = m_exponents.get(p, 0)
        if ep:
            m_prime //= p**ep
            shift = max(shift, -(-ep // bp))
    scaled = k
    for p, bp in base_factors:
        scaled *= p ** (shift * bp - m_exponents.get(p, 0))
    pre_value, tail_num = divmod(scaled, m_prime)
    return ReductionTrace(
        shift=shift,
        integer_part=0,
        preperiod_value=pre_value,
        tail_numerator=tail_num,
        tail_denominator=m_prime,
    )


def expand(f: Fraction, base: int) -> tuple[RadixExpansion, ReductionTrace]:
    """Expansion of f in the given base, plus the reduction that produced it.

    The preperiod always has exactly `shift` digits (leading zeros kept) and
    the period, when present, is the primitive repeating block.
    """
    if base < 2:
        raise ValidationError(f"base must be >= 2, got {base}")
    whole, rest = divmod(f.numerator, f.denominator)
    g = math.gcd(rest, f.denominator)
    k, m = rest // g, f.denominator // g
    integer_digits = to_digit_string(whole, base)
    empty = DigitString(base, ())
    if k == 0:
        trace = ReductionTrace(0, whole, 0, 0, 1)
        return RadixExpansion(base, integer_digits, empty, empty), trace

    red = factor_out_base(k, m, base)
    red = replace(red, integer_part=whole)
    preperiod = to_digit_string(red.preperiod_value, base, red.shift) if red.shift else empty
    if red.tail_numerator == 0 or red.tail_denominator == 1:
        return RadixExpansion(base, integer_digits, preperiod, empty), red

    c, n, scaled = reduce_coprime(red.tail_numerator, red.tail_denominator, base)
    red = replace(red, multiplier=c, graph_n=n)
    if base * n - 1 > FACTORIZATION_CAP:
        raise CapacityError(f"period modulus {base * n - 1} exceeds cap {FACTORIZATION_CAP}")
    period = DigitString(base, period_digits(scaled, GraphParams(base, n)).digits)
    return RadixExpansion(base, integer_digits, preperiod, period), red


def long_division_oracle(f: Fraction, base: int) -> RadixExpansion:
    """Schoolbook long division with first-repeated-remainder detection.

    Fully independent of the graph pipeline; used as the reference in tests
    and sweeps.
    """
    if base < 2:
        raise ValidationError(f"base must be >= 2, got {base}")
    whole, r = divmod(f.numerator, f.denominator)
    m = f.denominator
    digits: list[int] = []
    seen: dict[int, int] = {}
    while r and r not in seen:
        seen[r] = len(digits)
        r *= base
        digits.append(r // m)
        r %= m
    if r == 0:
        while digits and digits[-1] == 0:
            digits.pop()
        pre, per = digits, []
    else:
        cut = seen[r]
        pre, per = digits[:cut], digits[cut:]
    return RadixExpansion(
        base,
        to_digit_string(whole, base),
        DigitString(base, tuple(pre)),
        DigitString(base, tuple(per)),
    )


def value_of(x: RadixExpansion) -> Fraction:
    """Exact value of an expansion as a fraction in lowest terms."""
    base = x.base
    pre_len = len(x.preperiod)
    per_len = len(x.period)
    if per_len:
        den = base**pre_len * (base**per_len - 1)
        num = from_digit_string(x.preperiod) * (base**per_len - 1) + from_digit_string(x.period)
    else:
        den = base**pre_len
        num = from_digit_string(x.preperiod)
    num += from_digit_string(x.integer_part) * den
    g = math.gcd(num, den)
    return Fraction(num // g, den // g)


@dataclass(frozen=True)
class SweepMismatch:
    base: int
    numerator: int
    denominator: int
    expanded: RadixExpansion
    oracle: RadixExpansion


@dataclass(frozen=True)
class SweepResult:
    cases: int
    mismatch: SweepMismatch | None

    @property
    def ok(self) -> bool:
        return self.mismatch is None


def run_oracle_sweep(max_m: int, bases: tuple[int, ...] = (10,)) -> SweepResult:
    """Compare expand against the oracle for every base in `bases`,
    every m in [1, max_m] and every k in [0, 2m]. Stops at the first mismatch.
    """
    if max_m < 1:
        raise ValidationError(f"max_m must be >= 1, got {max_m}")
    cases = 0
    for base in bases:
        for m in range(1, max_m + 1):
            for k in range(2 * m + 1):
                f = Fraction(k, m)
                got, _ = expand(f, base)
                want = long_division_oracle(f, base)
                cases += 1
                if got != want:
                    return SweepResult(cases, SweepMismatch(base, k, m, got, want))
    return SweepResult(cases, None)
