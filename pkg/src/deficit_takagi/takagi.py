"""Exact evaluation of the Takagi (blancmange) function.

The function is the limit of sawtooth sums

    tau(x) = sum_{i >= 0} s(2^i * x) / 2^i,

where s(y) is the distance from y to the nearest integer.  Although tau is
nowhere differentiable, it takes exactly representable values at every
rational point, and three exact evaluation strategies are provided here:

* dyadic arguments p/2^e: 2^i * x is an integer for i >= e, so the series
  terminates after e summands (:func:`takagi_dyadic`);
* general rational arguments p/q: the doubling orbit frac(2^i * x) is
  eventually periodic, so the series splits into a finite head plus a
  geometric tail that sums in closed form (:func:`takagi_rational`);
* arbitrary points: a rigorous interval enclosure built from a partial sum
  and the sawtooth tail bound (:func:`takagi_enclosure`).

All arithmetic is exact; no floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Dyadic",
    "Interval",
    "dist_to_nearest_int",
    "takagi_dyadic",
    "takagi_rational",
    "takagi_enclosure",
    "check_functional_equations",
    "tau_upper_bound_check",
]

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Dyadic:
    """Exact rational num / 2^exp, canonicalized on construction.

    Canonical form: ``num`` is odd, or ``exp`` is 0 (integers keep their
    plain value, zero is stored as 0/2^0).  Two Dyadics are equal iff they
    have equal value, so dataclass equality/hashing is by value.
    """

    num: int
    exp: int

    def __post_init__(self) -> None:
        if self.exp < 0:
            raise ValueError(f"exponent must be nonnegative, got {self.exp}")
        num, exp = self.num, self.exp
        if num == 0:
            exp = 0
        else:
            shift = min(exp, (num & -num).bit_length() - 1)
            num >>= shift
            exp -= shift
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "exp", exp)

    @classmethod
    def from_fraction(cls, value: Fraction) -> "Dyadic":
        """Convert an exact fraction whose denominator is a power of two."""
        den = value.denominator
        if den & (den - 1):
            raise ValueError(f"{value} is not a dyadic rational")
        return cls(value.numerator, den.bit_length() - 1)

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, 1 << self.exp)

    def __str__(self) -> str:
        return str(self.as_fraction())


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi] with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty interval: lo={self.lo} > hi={self.hi}")

    def __contains__(self, value: Fraction) -> bool:
        return self.lo <= value <= self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


def dist_to_nearest_int(x: Fraction) -> Fraction:
    """Distance from x to the nearest integer, always in [0, 1/2]."""
    frac = x - (x.numerator // x.denominator)
    return min(frac, 1 - frac)


def _check_unit_interval(value: Fraction) -> None:
    if not 0 <= value <= 1:
        raise ValueError(f"argument must lie in [0, 1], got {value}")


def takagi_dyadic(x: Dyadic) -> Dyadic:
    """Evaluate tau at a dyadic point, exactly.

    For x = p/2^e the sawtooth s(2^i * x) vanishes for i >= e, so the sum
    has exactly ``e`` nonzero candidates.  Every partial distance has
    denominator 2^e once rescaled by 2^i, hence the result is a dyadic
    with exponent at most e.
    """
    _check_unit_interval(x.as_fraction())
    p, e = x.num, x.exp
    total = 0
    for i in range(e):
        mod = 1 << (e - i)
        r = p & (mod - 1)
        total += min(r, mod - r)
    return Dyadic(total, e)


def takagi_rational(x: Fraction) -> Fraction:
    """Evaluate tau at any rational in [0, 1], exactly.

    Walks the doubling orbit r -> 2r mod q of the numerator.  The orbit is
    eventually periodic (it lives on at most q residues), so the series is
    a finite head plus a periodic tail summed as a geometric series:

        tau(p/q) = head + cycle_sum * 2^L / (2^L - 1) / 2^pre

    with pre the head length and L the cycle length.  The orbit map keys
    visited residues to their step index; memory is O(q) in the worst case.
    """
    _check_unit_interval(x)
    q = x.denominator
    r = x.numerator % q
    seen: dict[int, int] = {}
    dists: list[int] = []
    while r not in seen:
        seen[r] = len(dists)
        dists.append(min(r, q - r))
        r = (r << 1) % q
    pre = seen[r]
    cycle_len = len(dists) - pre
    head = 0
    for u in dists[:pre]:
        head = (head << 1) + u
    cycle = 0
    for u in dists[pre:]:
        cycle = (cycle << 1) + u
    # head = head_acc / (q * 2^(pre-1)), tail = 2 * cycle_acc / (q * 2^pre * (2^L - 1))
    scale = (1 << cycle_len) - 1
    return Fraction(2 * (head * scale + cycle), (q << pre) * scale)


def takagi_enclosure(x: Fraction, terms: int) -> Interval:
    """Rigorous interval containing tau(x), from an N-term partial sum.

    Every summand is bounded by 2^(-i-1), so the discarded tail is at most
    2^(1-N); the true value lies in [partial, partial + 2^(1-N)].
    """
    _check_unit_interval(x)
    if terms < 1:
        raise ValueError(f"need at least one term, got {terms}")
    q = x.denominator
    r = x.numerator % q
    acc = 0
    for _ in range(terms):
        acc = (acc << 1) + min(r, q - r)
        r = (r << 1) % q
    partial = Fraction(acc, q << (terms - 1))
    return Interval(partial, partial + Fraction(1, 1 << (terms - 1)))


def check_functional_equations(x: Dyadic, m: int) -> bool:
    """Exactly verify the functional equations of tau at a dyadic point.

    Checks, with t = tau(x):

    * scale-shift:  tau((x+1) / 2^m) == (m*(x+1) - 2x + t) / 2^m
    * reflection:   tau(1 - x) == t
    * halving:      tau(x/2) == x/2 + t/2
    * half-shift:   tau(x + 1/2) == 1/2 - 2x + t   (only when x <= 1/2)

    Requires x in [0, 1] and m >= 1; returns the conjunction of the
    applicable equalities.
    """
    if m < 1:
        raise ValueError(f"scale depth must be positive, got {m}")
    xf = x.as_fraction()
    _check_unit_interval(xf)
    t = takagi_dyadic(x).as_fraction()

    def tau_at(value: Fraction) -> Fraction:
        return takagi_dyadic(Dyadic.from_fraction(value)).as_fraction()

    ok = tau_at((xf + 1) / (1 << m)) * (1 << m) == m * (xf + 1) - 2 * xf + t
    ok = ok and tau_at(1 - xf) == t
    ok = ok and tau_at(xf / 2) == xf / 2 + t / 2
    if xf <= _HALF:
        ok = ok and tau_at(xf + _HALF) == _HALF - 2 * xf + t
    return ok


def tau_upper_bound_check(num: int, exp: int) -> bool:
    """Check tau(num/2^exp) <= (num/2^exp + 1)/2 - 2^(-exp-1), exactly.

    The bound depends on the representation's exponent, not the canonical
    one, so the raw pair is accepted; non-canonical representations give a
    weaker (larger) right-hand side.  The value must lie in [0, 1].
    """
    if exp < 0:
        raise ValueError(f"exponent must be nonnegative, got {exp}")
    if not 0 <= num <= (1 << exp):
        raise ValueError(f"{num}/2^{exp} lies outside [0, 1]")
    t = takagi_dyadic(Dyadic(num, exp)).as_fraction()
    return t <= Fraction(num + (1 << exp) - 1, 1 << (exp + 1))
