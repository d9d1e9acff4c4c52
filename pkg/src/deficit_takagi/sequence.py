"""The cumulated deficient binary digit sum, by four independent algorithms.

Term n of the sequence (OEIS A268289) is the running difference between the
number of 1 digits and the number of 0 digits in the binary expansions of
1, 2, ..., n.  Four algorithms compute it:

* :func:`cumulative_naive` - direct O(n) summation of per-integer deficits;
* :func:`set_cardinality` - O(n) count of a residue-window membership test
  over m = 1..n (an entirely different characterization of the sequence);
* :func:`cumulative_recurrence` - O(log n) descent that strips the most
  significant bit at each step;
* :func:`cumulative_closed_form` / :func:`cumulative_takagi` - O(log n)
  closed forms in terms of the Takagi function evaluated exactly at a
  dyadic point.

The algorithms share no code paths, which is the point: they must agree
exactly, and the test suite sweeps them against each other.

Indices are capped at 2^60.  Floor-log2 is always taken via bit length;
floating-point log2 misrounds near powers of two.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .takagi import Dyadic, takagi_dyadic

__all__ = [
    "INDEX_LIMIT",
    "METHODS",
    "floor_log2",
    "deficient_digit_sum",
    "cumulative_naive",
    "cumulative_naive_range",
    "naive_range",
    "set_membership",
    "set_cardinality",
    "cumulative_recurrence",
    "recurrence_applications",
    "cumulative_closed_form",
    "cumulative_takagi",
    "compute",
    "compute_all",
]

INDEX_LIMIT = 1 << 60


def _check_index(n: int) -> None:
    if not 0 <= n <= INDEX_LIMIT:
        raise ValueError(f"index must be in [0, 2^60], got {n}")


def floor_log2(n: int) -> int:
    """Position of the most significant set bit of n >= 1."""
    if n < 1:
        raise ValueError(f"floor_log2 needs n >= 1, got {n}")
    return n.bit_length() - 1


def deficient_digit_sum(m: int) -> int:
    """(#ones - #zeros) in the binary expansion of m >= 1, no leading zeros."""
    if m < 1:
        raise ValueError(f"binary expansion undefined for {m}")
    _check_index(m)
    return 2 * m.bit_count() - m.bit_length()


def cumulative_naive(n: int) -> int:
    """Sum of deficient_digit_sum(m) for m = 1..n; 0 for n = 0.  O(n)."""
    _check_index(n)
    return sum(2 * m.bit_count() - m.bit_length() for m in range(1, n + 1))


def cumulative_naive_range(limit: int) -> list[int]:
    """All terms 0..limit as one incremental prefix-sum pass."""
    _check_index(limit)
    out = [0] * (limit + 1)
    acc = 0
    for m in range(1, limit + 1):
        acc += 2 * m.bit_count() - m.bit_length()
        out[m] = acc
    return out


def naive_range(start: int, stop: int) -> Iterator[tuple[int, int]]:
    """Stream (n, term) for n in [start, stop]: O(start) warm-up, O(1) steps."""
    _check_index(start)
    _check_index(stop)
    acc = cumulative_naive(start - 1) if start > 0 else 0
    for n in range(start, stop + 1):
        if n > 0:
            acc += 2 * n.bit_count() - n.bit_length()
        yield n, acc


def set_membership(m: int, n: int) -> bool:
    """Whether m is counted for index n in the set-based characterization.

    m belongs iff (n - m) mod 2^(floor_log2(m)+1) < 2^floor_log2(m), i.e.
    the residue of n - m falls in the lower half of the modulus attached
    to m's bit length.  Requires 1 <= m <= n.
    """
    _check_index(n)
    if not 1 <= m <= n:
        raise ValueError(f"membership needs 1 <= m <= n, got m={m}, n={n}")
    half = 1 << (m.bit_length() - 1)
    return ((n - m) & (2 * half - 1)) < half


def set_cardinality(n: int) -> int:
    """Count of members m in 1..n, by direct membership testing.  O(n).

    The per-m test is evaluated for every m, vectorized over blocks of
    constant bit length (within a block the modulus is a fixed constant).
    Memory is O(n); the CLI guards calls above 2^26.
    """
    _check_index(n)
    if n == 0:
        return 0
    dtype = np.int32 if n < (1 << 30) else np.int64
    total = 0
    lo = 1
    while lo <= n:
        hi = min(lo << 1, n + 1)  # m in [lo, hi) share floor_log2 = log2(lo)
        residues = np.arange(n - lo, n - hi, -1, dtype=dtype)
        residues &= (lo << 1) - 1
        total += int(np.count_nonzero(residues < lo))
        lo <<= 1
    return total


def _descend(n: int) -> tuple[int, int]:
    """Strip the MSB until a base case; returns (term, applications)."""
    total = 0
    steps = 0
    while n:
        steps += 1
        k = n.bit_length() - 1
        rest = n - (1 << k)
        if rest == 0:
            return total + (1 << k) - k, steps
        j = rest.bit_length() - 1
        total += (rest + 1) * (j - k + 2) + (1 << k) - (1 << (j + 1))
        n = rest
    return total, steps


def cumulative_recurrence(n: int) -> int:
    """Term n via MSB-strip descent: writing n = rest + 2^k with
    1 <= rest < 2^k, the increment over term(rest) is the affine expression

        (rest + 1) * (floor_log2(rest) - k + 2) + 2^k - 2^(floor_log2(rest)+1),

    with base cases term(0) = 0 and term(2^k) = 2^k - k.  Runs in
    O(popcount(n)) arithmetic steps.
    """
    _check_index(n)
    return _descend(n)[0]


def recurrence_applications(n: int) -> int:
    """Number of descent steps used for index n (at most floor_log2(n)+1)."""
    _check_index(n)
    return _descend(n)[1]


def cumulative_closed_form(n: int) -> int:
    """Term n from the Takagi closed form

        (n+1)*(m - k + 1) - (2 + tau(xi)) * 2^m + 2^(k+1) - 1

    with k = floor_log2(n), m = floor_log2(n+1) and xi = (n+1)/2^m - 1
    evaluated exactly as a dyadic.  The tau product is computed in integer
    arithmetic as num(tau) << (m - exp(tau)); exp(tau) <= m always, and the
    shift is asserted so a non-integer result can never be returned.
    """
    _check_index(n)
    if n == 0:
        return 0
    k = n.bit_length() - 1
    m = (n + 1).bit_length() - 1
    tau = takagi_dyadic(Dyadic(n + 1 - (1 << m), m))
    assert tau.exp <= m, f"tau denominator exceeds 2^{m} at n={n}"
    scaled = (2 << m) + (tau.num << (m - tau.exp))
    return (n + 1) * (m - k + 1) - scaled + (1 << (k + 1)) - 1


def cumulative_takagi(n: int) -> int:
    """Term n as n - 2^k * tau((n+1)/2^k - 1) with k = floor_log2(n).

    The tau argument lies in (0, 1] and has exponent at most k, so the
    product is an exact integer shift (asserted).
    """
    _check_index(n)
    if n == 0:
        return 0
    k = n.bit_length() - 1
    tau = takagi_dyadic(Dyadic(n + 1 - (1 << k), k))
    assert tau.exp <= k, f"tau denominator exceeds 2^{k} at n={n}"
    return n - (tau.num << (k - tau.exp))


METHODS = {
    "naive": cumulative_naive,
    "sets": set_cardinality,
    "recurrence": cumulative_recurrence,
    "lemma2": cumulative_closed_form,
    "takagi": cumulative_takagi,
}


def compute(n: int, method: str = "recurrence") -> int:
    """Term n by the named method (see METHODS)."""
    try:
        fn = METHODS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {sorted(METHODS)}") from None
    return fn(n)


def compute_all(n: int) -> dict[str, int]:
    """Term n by every method, in METHODS order."""
    return {name: fn(n) for name, fn in METHODS.items()}
