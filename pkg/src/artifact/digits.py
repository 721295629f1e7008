"""Eventually periodic digit streams and the base-n facts read off them.

A DigitSequence is an infinite stream d_0, d_1, d_2, ... of base-n digits
given by a finite preperiod and a repeating block.  One structure serves two
readings: as the fractional expansion 0.d_0 d_1 d_2 ... (value()), or as a
grid digit row whose integer partial sums sum(d_i * n^i, i < j) drive the
coarse-generation anchors (partial_sum()).

A SignedDigitSequence is the componentwise difference of two rows.  Its
normalized partial sums x_j = partial_sum(j) / n^j stay inside (-1, 1), and
their subsequential limits (periodic_limit_points) are what the coarse-scale
compatibility checks compare against 0 and 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def _check_base(base: int) -> None:
    if not isinstance(base, int) or base < 2:
        raise ValueError(f"base must be an integer >= 2, got {base!r}")


def _primitive(period: tuple[int, ...]) -> tuple[int, ...]:
    p = len(period)
    for length in range(1, p):
        if p % length == 0 and period == period[:length] * (p // length):
            return period[:length]
    return period


def _normalize(
    preperiod: tuple[int, ...], period: tuple[int, ...]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # Canonical form: primitive period, and no preperiod digit that merely
    # repeats the tail of the cycle (absorbed by rotating the period).
    period = _primitive(period)
    while preperiod and preperiod[-1] == period[-1]:
        period = period[-1:] + period[:-1]
        preperiod = preperiod[:-1]
    return preperiod, period


@dataclass(frozen=True)
class DigitSequence:
    """Eventually periodic stream of base-n digits, stored canonically."""

    base: int
    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_base(self.base)
        if not self.period:
            raise ValueError("period must be nonempty")
        pre, per = _normalize(tuple(self.preperiod), tuple(self.period))
        for digit in (*pre, *per):
            if not isinstance(digit, int) or not 0 <= digit < self.base:
                raise ValueError(f"digit {digit!r} out of range for base {self.base}")
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    def digit(self, i: int) -> int:
        if i < 0:
            raise ValueError("digit index must be >= 0")
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def take(self, count: int) -> tuple[int, ...]:
        return tuple(self.digit(i) for i in range(count))

    def partial_sum(self, j: int) -> int:
        """sum(d_i * base^i for i < j): the digit-row reading."""
        total = 0
        power = 1
        for i in range(j):
            total += self.digit(i) * power
            power *= self.base
        return total

    def value(self) -> Fraction:
        """Value of 0.d_0 d_1 d_2 ... in base n; always in [0, 1]."""
        n = self.base
        pre, per = self.preperiod, self.period
        head = sum(d * n ** (len(pre) - 1 - i) for i, d in enumerate(pre))
        tail = Fraction(
            sum(d * n ** (len(per) - 1 - t) for t, d in enumerate(per)),
            n ** len(per) - 1,
        )
        return (head + tail) / n ** len(pre)


@dataclass(frozen=True)
class SignedDigitSequence:
    """Eventually periodic stream of integers in [-(n-1), n-1]."""

    base: int
    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_base(self.base)
        if not self.period:
            raise ValueError("period must be nonempty")
        pre, per = _normalize(tuple(self.preperiod), tuple(self.period))
        for digit in (*pre, *per):
            if not isinstance(digit, int) or not -self.base < digit < self.base:
                raise ValueError(f"entry {digit!r} out of range for base {self.base}")
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    @classmethod
    def difference(cls, a: DigitSequence, b: DigitSequence) -> "SignedDigitSequence":
        """Componentwise a_i - b_i, aligned past both preperiods."""
        if a.base != b.base:
            raise ValueError("cannot subtract digit streams over different bases")
        start = max(len(a.preperiod), len(b.preperiod))
        span = math.lcm(len(a.period), len(b.period))
        pre = tuple(a.digit(i) - b.digit(i) for i in range(start))
        per = tuple(a.digit(start + t) - b.digit(start + t) for t in range(span))
        return cls(a.base, pre, per)

    def digit(self, i: int) -> int:
        if i < 0:
            raise ValueError("digit index must be >= 0")
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def partial_sum(self, j: int) -> int:
        total = 0
        power = 1
        for i in range(j):
            total += self.digit(i) * power
            power *= self.base
        return total

    def ratio(self, j: int) -> Fraction:
        """x_j = partial_sum(j) / n^j, the normalized reading."""
        return Fraction(self.partial_sum(j), self.base**j)


def base_n_expansion(x: Fraction, n: int) -> DigitSequence:
    """Base-n expansion of x in [0, 1) by long division.

    Remainders are tracked in a dict; the first repeated remainder closes the
    cycle, which already yields the minimal preperiod and a primitive period.
    Terminating expansions come back with period (0,).
    """
    _check_base(n)
    x = Fraction(x)
    if not 0 <= x < 1:
        raise ValueError(f"expansion needs 0 <= x < 1, got {x}")
    den = x.denominator
    digits: list[int] = []
    seen: dict[int, int] = {}
    rem = x.numerator
    while rem != 0 and rem not in seen:
        seen[rem] = len(digits)
        rem *= n
        digits.append(rem // den)
        rem %= den
    if rem == 0:
        return DigitSequence(n, tuple(digits), (0,))
    start = seen[rem]
    return DigitSequence(n, tuple(digits[:start]), tuple(digits[start:]))


def tie_length(x: Fraction, n: int) -> int | float:
    """Longest run of digit 0 or digit n-1 in the base-n expansion of x.

    Returns math.inf exactly when the expansion terminates (x is a fraction
    k/n^m), since the trailing zeros form an infinite run.  Otherwise no run
    exceeds preperiod + period - 1 digits (a full period of equal digits
    would force a constant period), so the preperiod followed by four period
    copies contains an uncut copy of every run.
    """
    seq = base_n_expansion(x, n)
    if seq.period == (0,):
        return math.inf
    window = seq.preperiod + seq.period * 4
    best = 0
    run_digit: int | None = None
    run_len = 0
    for digit in window:
        if digit in (0, n - 1) and digit == run_digit:
            run_len += 1
        elif digit in (0, n - 1):
            run_digit = digit
            run_len = 1
        else:
            run_digit = None
            run_len = 0
        best = max(best, run_len)
    return best


def is_n_far(x: Fraction, n: int) -> tuple[bool, Fraction | None]:
    """Whether x keeps a uniform scaled distance from every fraction k/n^m.

    For rational x = p/q in lowest terms: |x - k/n^m| = |p n^m - k q|/(q n^m),
    and the numerator is a nonzero integer for every (k, m) exactly when q
    divides no power of n.  In that case C = 1/q is a valid constant; when q
    does divide a power of n, x itself is a grid point at that scale and the
    distance collapses to 0.
    """
    _check_base(n)
    x = Fraction(x)
    q = x.denominator
    stripped = q
    while (g := math.gcd(stripped, n)) > 1:
        stripped //= g
    if stripped == 1:
        return False, None
    return True, Fraction(1, q)


def periodic_limit_points(seq: SignedDigitSequence) -> tuple[Fraction, ...]:
    """Sorted subsequential limits of x_j = seq.partial_sum(j) / n^j.

    Along j in a fixed residue class mod p (past the preperiod) the digits
    feeding the top of the sum form a fixed rotation of the period, so
    x_j -> (reversed rotation read as a signed base-n word) / (n^p - 1);
    concretely, with r the class of (j - preperiod) mod p,

        limit_r = sum(period[(r - t) % p] * n^(p - t), t = 1..p) / (n^p - 1).

    Preperiod digits sit at weight n^(i - j) <= n^(preperiod - j) and vanish
    in the limit.  Distinct classes may share a limit; duplicates are merged.
    """
    return tuple(sorted(set(phase_limits(seq))))


def phase_limits(seq: SignedDigitSequence) -> tuple[Fraction, ...]:
    """limit of x_j along j == preperiod + r (mod p), indexed by r."""
    n = seq.base
    per = seq.period
    p = len(per)
    denom = n**p - 1
    out = []
    for r in range(p):
        num = sum(per[(r - t) % p] * n ** (p - t) for t in range(1, p + 1))
        out.append(Fraction(num, denom))
    return tuple(out)
