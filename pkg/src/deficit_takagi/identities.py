"""Catalog of exact identities satisfied by the sequence, plus a sweep driver.

Each :class:`Identity` describes one equation or inequality relating
sequence terms (and, for some entries, Takagi values) at affine index
expressions in the sweep parameters.  :func:`verify` exhaustively sweeps
the parameters, evaluates both sides exactly, and reports every violation.

Sweep limits come in two profiles: ``full`` (the sizes the project is
accepted at) and ``ci`` (a fast profile, k <= 8).  The active profile is
selected by the DEFICIT_TAKAGI_PROFILE environment variable and defaults
to ``full``; explicit kmax/mmax arguments override either.

The module also generates the special index sequences tied to the
sequence's minima: the half-value indices (A026644), the Lichtenberg
sequence (A000975), per-interval minima, and the 4^m fixed points.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from .sequence import (
    INDEX_LIMIT,
    cumulative_recurrence as A,
    set_cardinality,
)
from .takagi import Dyadic, takagi_dyadic, takagi_rational

__all__ = [
    "Identity",
    "IdentityReport",
    "CATALOG",
    "PROFILES",
    "active_profile",
    "verify",
    "verify_all",
    "corrupted",
    "half_value_indices",
    "a026644_recurrence",
    "lichtenberg",
    "interval_minimum",
    "IntervalMinimum",
    "power4_fixed_points",
]

PROFILES = ("ci", "full")

Params = dict[str, int]
Pair = tuple[object, object]


def active_profile() -> str:
    """Profile from DEFICIT_TAKAGI_PROFILE; defaults to ``full``."""
    profile = os.environ.get("DEFICIT_TAKAGI_PROFILE", "full")
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}; expected one of {PROFILES}")
    return profile


@dataclass(frozen=True)
class Identity:
    """One catalog entry: a parametrized exact relation.

    ``pairs`` maps a parameter assignment to (lhs, rhs) value pairs, all
    of which must satisfy ``relation`` ("eq", "le" or "lt").  ``sweep``
    yields parameter assignments for given (kmax, mmax) limits; entries
    whose natural parameter is n alone interpret kmax as n <= 2^kmax.
    ``defaults`` holds the per-profile (kmax, mmax) limits.
    """

    id: str
    description: str
    relation: str
    sweep: Callable[[int, int], Iterator[Params]]
    pairs: Callable[[Params], list[Pair]]
    ranges: Callable[[int, int], dict[str, str]]
    defaults: dict[str, tuple[int, int]]
    boundary: Callable[[Params], bool] = field(default=lambda params: False)


@dataclass
class IdentityReport:
    """Outcome of sweeping one identity over a parameter range."""

    id: str
    ranges: dict[str, str]
    cases: int
    passed: bool
    counterexamples: list[dict]

    @property
    def empty_sweep(self) -> bool:
        """True when the constraint set admitted no cases at these limits."""
        return self.cases == 0

    def to_json_dict(self) -> dict:
        return {
            "id": self.id,
            "ranges": self.ranges,
            "cases": self.cases,
            "pass": self.passed,
            "counterexamples": self.counterexamples,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def _holds(relation: str, lhs, rhs) -> bool:
    if relation == "eq":
        return lhs == rhs
    if relation == "le":
        return lhs <= rhs
    if relation == "lt":
        return lhs < rhs
    raise ValueError(f"unknown relation {relation!r}")


# --- sweep generators --------------------------------------------------------

def _sweep_kn(k_lo: int = 0, n_lo: int = 0, n_drop: int = 0):
    """k in [k_lo, kmax], n in [n_lo, 2^k - n_drop] (boundaries included)."""

    def gen(kmax: int, mmax: int) -> Iterator[Params]:
        for k in range(k_lo, kmax + 1):
            for n in range(n_lo, (1 << k) + 1 - n_drop):
                yield {"k": k, "n": n}

    return gen


def _sweep_knm(kmax: int, mmax: int) -> Iterator[Params]:
    for k in range(0, kmax + 1):
        for n in range((1 << k) + 1):
            for m in range(mmax + 1):
                yield {"k": k, "n": n, "m": m}


def _sweep_digit0(kmax: int, mmax: int) -> Iterator[Params]:
    # index 2^k + n qualifies for the half-power shift only while n < 2^(k-1)
    for k in range(1, kmax + 1):
        for n in range(1 << (k - 1)):
            yield {"k": k, "n": n}


def _sweep_n(n_lo: int = 0):
    def gen(kmax: int, mmax: int) -> Iterator[Params]:
        for n in range(n_lo, (1 << kmax) + 1):
            yield {"n": n}

    return gen


def _sweep_minor(kmax: int, mmax: int) -> Iterator[Params]:
    for n in range(2, (1 << kmax) + 1):
        if n >= 3 << (n.bit_length() - 2):
            yield {"n": n}


def _sweep_half_value(kmax: int, mmax: int) -> Iterator[Params]:
    # n = 2 is excluded: it attains the bound 3*2^(k-1) - 1 = 2 exactly
    # (the lone even boundary case) and is handled by the sequence tests.
    for n in range(3, (1 << kmax) + 1):
        if 2 * A(n) == n:
            yield {"n": n}


def _sweep_xi_m(kmax: int, mmax: int) -> Iterator[Params]:
    for j in range((1 << kmax) + 1):
        for m in range(mmax + 1):
            yield {"j": j, "m": m, "e": kmax}


# --- range descriptions -------------------------------------------------------

def _ranges_kn(k_lo: int = 0, n_desc: str = "0..2^k"):
    def describe(kmax: int, mmax: int) -> dict[str, str]:
        return {"k": f"{k_lo}..{kmax}", "n": n_desc}

    return describe


def _ranges_knm(kmax: int, mmax: int) -> dict[str, str]:
    return {"k": f"0..{kmax}", "n": "0..2^k", "m": f"0..{mmax}"}


def _ranges_n(n_lo: int = 0, note: str = ""):
    def describe(kmax: int, mmax: int) -> dict[str, str]:
        return {"n": f"{n_lo}..2^{kmax}{note}"}

    return describe


def _ranges_xi_m(kmax: int, mmax: int) -> dict[str, str]:
    return {"xi": f"j/2^{kmax}, j=0..2^{kmax}", "m": f"0..{mmax}"}


# --- value helpers ------------------------------------------------------------

def _tau_kn(n: int, k: int) -> Fraction:
    return takagi_dyadic(Dyadic(n, k)).as_fraction()


def _pow4_third(m: int) -> int:
    """(4^m - 1) / 3, asserting the divisibility that makes it an index."""
    num = (1 << (2 * m)) - 1
    assert num % 3 == 0
    return num // 3


def _boundary_kn(params: Params) -> bool:
    return params["n"] in (0, 1 << params["k"])


# --- the catalog --------------------------------------------------------------

def _p_lemma1(p: Params) -> list[Pair]:
    k, n = p["k"], p["n"]
    j = n.bit_length() - 1
    step = (n + 1) * (j - k + 2) + (1 << k) - (1 << (j + 1))
    return [(A(n + (1 << k)), A(n) + step)]


def _p_lemma3(p: Params) -> list[Pair]:
    k, n = p["k"], p["n"]
    j = n.bit_length() - 1
    step = (n + 1) * (j - k + 2) + (1 << k) - (1 << (j + 1))
    return [(set_cardinality(n + (1 << k)), set_cardinality(n) + step)]


def _p_digit0(p: Params) -> list[Pair]:
    k, n = p["k"], p["n"]
    idx = (1 << k) + n
    return [(A(idx + (1 << (k - 1))), A(idx) + 2 * (idx + 1) - (1 << (k + 1)))]


def _p_majorlink2(p: Params) -> list[Pair]:
    k, n = p["k"], p["n"]
    rhs = 1 + Fraction(n, 1 << k) - Fraction(1 + A(n + (1 << k) - 1), 1 << k)
    return [(_tau_kn(n, k), rhs)]


def _p_initial_identity(p: Params) -> list[Pair]:
    n = p["n"]
    m = (n + 1).bit_length() - 1
    tau = takagi_dyadic(Dyadic(n + 1 - (1 << m), m))
    assert tau.exp <= m
    return [(A(n + (1 << (m + 1))), 2 * n - (tau.num << (m - tau.exp)) + 1)]


def _p_majorlink(p: Params) -> list[Pair]:
    k, n = p["k"], p["n"]
    idx = (1 << (k + 1)) + (1 << k) + n - 1
    rhs = 2 + Fraction(2 * n, 1 << k) - Fraction(1 + A(idx), 1 << k)
    return [(_tau_kn(n, k), rhs)]


def _p_oeis1(p: Params) -> list[Pair]:
    k, n = p["k"], p["n"]
    return [(A((1 << (k + 2)) - n - 1),
             (1 << (k + 1)) - 4 * n + A((1 << (k + 1)) + (1 << k) + n - 1))]


def _p_oeis2(p: Params) -> list[Pair]:
    k, n = p["k"], p["n"]
    return [(A((1 << (k + 2)) + (1 << (k + 1)) + n - 1),
             (1 << (k + 1)) - n + A((1 << (k + 1)) + (1 << k) + n - 1))]


def _p_oeis4(p: Params) -> list[Pair]:
    k, n = p["k"], p["n"]
    return [(A((1 << (k + 1)) - n - 1), (1 << k) - 2 * n + A((1 << k) + n - 1))]


def _p_oeis5(p: Params) -> list[Pair]:
    k, n = p["k"], p["n"]
    return [(A((1 << (k + 1)) + n - 1), (1 << k) - n + A((1 << k) + n - 1))]


def _p_oeis6(p: Params) -> list[Pair]:
    k, n = p["k"], p["n"]
    return [(A((1 << (k + 1)) + n - 1), n + A((1 << (k + 1)) - n - 1))]


def _p_oeis7(p: Params) -> list[Pair]:
    k, n = p["k"], p["n"]
    return [(A((1 << (k + 1)) + (1 << k) + n - 1), 2 * n + A((1 << (k + 1)) + n - 1))]


def _p_oeis3(p: Params) -> list[Pair]:
    k, n = p["k"], p["n"]
    return [(A((1 << (k + 1)) + (1 << k) + n - 1), 3 * n + A((1 << (k + 1)) - n - 1))]


def _p_oeis8(p: Params) -> list[Pair]:
    k, n = p["k"], p["n"]
    return [(A((1 << (k + 2)) + (1 << k) - n - 1),
             (1 << k) + n + A((1 << (k + 1)) + n - 1))]


def _p_oeis9(p: Params) -> list[Pair]:
    k, n = p["k"], p["n"]
    return [(A((1 << (k + 3)) + (1 << k) + n - 1),
             (1 << (k + 2)) + A((1 << (k + 1)) + n - 1))]


def _p_oeis11(p: Params) -> list[Pair]:
    k, n = p["k"], p["n"]
    return [(A((1 << (k + 3)) - (1 << k) - n - 1),
             3 * (1 << k) + A((1 << (k + 1)) - n - 1))]


def _p_oeis10sum(p: Params) -> list[Pair]:
    k, n, m = p["k"], p["n"], p["m"]
    q = _pow4_third(m)
    return [(A((1 << (k + 2 * m + 1)) + (1 << k) * q + n - 1),
             (1 << (k + 2)) * q + A((1 << (k + 1)) + n - 1))]


def _p_oeis12sum(p: Params) -> list[Pair]:
    k, n, m = p["k"], p["n"], p["m"]
    q = _pow4_third(m)
    return [(A((1 << (k + 2 * m + 1)) - (1 << k) * q - n - 1),
             (1 << k) * ((1 << (2 * m)) - 1) + A((1 << (k + 1)) - n - 1))]


def _p_oeis14sum(p: Params) -> list[Pair]:
    k, n, m = p["k"], p["n"], p["m"]
    return [(A((1 << (k + m)) + n - 1),
             (1 << k) * ((1 << m) - 1) - m * n + A((1 << k) + n - 1))]


def _p_oeis13sum(p: Params) -> list[Pair]:
    k, n, m = p["k"], p["n"], p["m"]
    return [(A((1 << (k + m + 1)) + (1 << (k + m)) + n - 1),
             (1 << (k + 1)) * ((1 << m) - 1) - m * n
             + A((1 << (k + 1)) + (1 << k) + n - 1))]


def _p_tau_scale_1(p: Params) -> list[Pair]:
    xi = Fraction(p["j"], 1 << p["e"])
    m = p["m"]
    pow4 = 1 << (2 * m)
    lhs = 1 - 2 * takagi_rational(Fraction(1, 6) + (3 * xi - 1) / (6 * pow4))
    mid = Fraction(1 - 2 * takagi_rational(xi / 2), pow4)
    rhs = Fraction(1 - xi - takagi_rational(xi), pow4)
    return [(lhs, mid), (mid, rhs)]


def _p_tau_scale_2(p: Params) -> list[Pair]:
    xi = Fraction(p["j"], 1 << p["e"])
    m = p["m"]
    pow4 = 1 << (2 * m)
    third = Fraction(1, 3)
    lhs = 2 * third - takagi_rational(2 * third + (third - xi) / pow4)
    rhs = Fraction(2 * third - takagi_rational(1 - xi), pow4)
    return [(lhs, rhs)]


def _p_encadrement(p: Params) -> list[Pair]:
    n = p["n"]
    value = A(n)
    return [(Fraction(n, 2), value), (value, n)]


def _p_tau_major(p: Params) -> list[Pair]:
    k, n = p["k"], p["n"]
    return [(_tau_kn(n, k), Fraction(n + (1 << k) - 1, 1 << (k + 1)))]


def _p_minor(p: Params) -> list[Pair]:
    n = p["n"]
    k = n.bit_length() - 1
    return [(1 + Fraction(3 * (n - (1 << k)), 2), A(n))]


def _p_lemma_half(p: Params) -> list[Pair]:
    n = p["n"]
    return [(n, 3 * (1 << (n.bit_length() - 2)) - 1)]


def _identity(id: str, description: str, relation: str, sweep, pairs, ranges,
              full: tuple[int, int], ci: tuple[int, int],
              boundary=None) -> Identity:
    kwargs = {} if boundary is None else {"boundary": boundary}
    return Identity(id=id, description=description, relation=relation,
                    sweep=sweep, pairs=pairs, ranges=ranges,
                    defaults={"full": full, "ci": ci}, **kwargs)


_CATALOG_ENTRIES = [
    _identity("lemma1", "MSB-strip step: term(n + 2^k) - term(n) is affine in n",
              "eq", _sweep_kn(1, 1, 1), _p_lemma1,
              _ranges_kn(1, "1..2^k-1"), (12, 0), (8, 0)),
    _identity("lemma3", "same MSB-strip step with the set count on both sides",
              "eq", _sweep_kn(1, 1, 1), _p_lemma3,
              _ranges_kn(1, "1..2^k-1"), (12, 0), (8, 0)),
    _identity("digit0", "half-power shift: term(i + 2^(k-1)) - term(i) = 2(i+1) - 2^(k+1) for i = 2^k + n, n < 2^(k-1)",
              "eq", _sweep_digit0, _p_digit0,
              _ranges_kn(1, "0..2^(k-1)-1 (index 2^k+n)"), (12, 0), (8, 0)),
    _identity("majorlink2", "tau(n/2^k) from the term at index n + 2^k - 1",
              "eq", _sweep_kn(), _p_majorlink2, _ranges_kn(),
              (12, 0), (8, 0), _boundary_kn),
    _identity("initial_identity", "term(n + 2^(m+1)) = 2n - 2^m tau((n+1)/2^m - 1) + 1",
              "eq", _sweep_n(), _p_initial_identity, _ranges_n(),
              (12, 0), (8, 0)),
    _identity("majorlink", "tau(n/2^k) from the term at index 2^(k+1) + 2^k + n - 1",
              "eq", _sweep_kn(), _p_majorlink, _ranges_kn(),
              (12, 0), (8, 0), _boundary_kn),
    _identity("oeis1", "index reflection 2^(k+2)-n-1 vs 2^(k+1)+2^k+n-1",
              "eq", _sweep_kn(), _p_oeis1, _ranges_kn(),
              (12, 0), (8, 0), _boundary_kn),
    _identity("oeis2", "index shift 2^(k+2)+2^(k+1)+n-1 vs 2^(k+1)+2^k+n-1",
              "eq", _sweep_kn(), _p_oeis2, _ranges_kn(),
              (12, 0), (8, 0), _boundary_kn),
    _identity("oeis4", "index reflection 2^(k+1)-n-1 vs 2^k+n-1",
              "eq", _sweep_kn(), _p_oeis4, _ranges_kn(),
              (12, 0), (8, 0), _boundary_kn),
    _identity("oeis5", "index shift 2^(k+1)+n-1 vs 2^k+n-1",
              "eq", _sweep_kn(), _p_oeis5, _ranges_kn(),
              (12, 0), (8, 0), _boundary_kn),
    _identity("oeis6", "term(2^(k+1)+n-1) = n + term(2^(k+1)-n-1)",
              "eq", _sweep_kn(), _p_oeis6, _ranges_kn(),
              (12, 0), (8, 0), _boundary_kn),
    _identity("oeis7", "term(2^(k+1)+2^k+n-1) = 2n + term(2^(k+1)+n-1)",
              "eq", _sweep_kn(), _p_oeis7, _ranges_kn(),
              (12, 0), (8, 0), _boundary_kn),
    _identity("oeis3", "term(2^(k+1)+2^k+n-1) = 3n + term(2^(k+1)-n-1)",
              "eq", _sweep_kn(), _p_oeis3, _ranges_kn(),
              (12, 0), (8, 0), _boundary_kn),
    _identity("oeis8", "term(2^(k+2)+2^k-n-1) = 2^k + n + term(2^(k+1)+n-1)",
              "eq", _sweep_kn(), _p_oeis8, _ranges_kn(),
              (12, 0), (8, 0), _boundary_kn),
    _identity("oeis9", "double iteration: term(2^(k+3)+2^k+n-1) = 2^(k+2) + term(2^(k+1)+n-1)",
              "eq", _sweep_kn(), _p_oeis9, _ranges_kn(),
              (8, 0), (8, 0), _boundary_kn),
    _identity("oeis11", "double iteration: term(2^(k+3)-2^k-n-1) = 3*2^k + term(2^(k+1)-n-1)",
              "eq", _sweep_kn(), _p_oeis11, _ranges_kn(),
              (8, 0), (8, 0), _boundary_kn),
    _identity("oeis10sum", "m-fold iteration with 2^k(4^m-1)/3 offset, additive form",
              "eq", _sweep_knm, _p_oeis10sum, _ranges_knm,
              (8, 6), (6, 3), _boundary_kn),
    _identity("oeis12sum", "m-fold iteration with 2^k(4^m-1)/3 offset, subtractive form",
              "eq", _sweep_knm, _p_oeis12sum, _ranges_knm,
              (8, 6), (6, 3), _boundary_kn),
    _identity("oeis14sum", "m-fold shift iteration from index 2^k+n-1",
              "eq", _sweep_knm, _p_oeis14sum, _ranges_knm,
              (8, 6), (6, 3), _boundary_kn),
    _identity("oeis13sum", "m-fold shift iteration from index 2^(k+1)+2^k+n-1",
              "eq", _sweep_knm, _p_oeis13sum, _ranges_knm,
              (8, 6), (6, 3), _boundary_kn),
    _identity("tau_scale_1", "self-similarity of 1 - 2*tau around 1/6 at scale 4^-m",
              "eq", _sweep_xi_m, _p_tau_scale_1, _ranges_xi_m,
              (10, 6), (6, 3)),
    _identity("tau_scale_2", "self-similarity of 2/3 - tau around 2/3 at scale 4^-m",
              "eq", _sweep_xi_m, _p_tau_scale_2, _ranges_xi_m,
              (10, 6), (6, 3)),
    _identity("encadrement", "n/2 <= term(n) <= n",
              "le", _sweep_n(), _p_encadrement, _ranges_n(),
              (16, 0), (10, 0)),
    _identity("tau_major", "tau(n/2^k) <= (n/2^k + 1)/2 - 2^(-k-1)",
              "le", _sweep_kn(), _p_tau_major, _ranges_kn(),
              (12, 0), (8, 0), _boundary_kn),
    _identity("minor", "term(n) >= 1 + 3(n - 2^k)/2 for n >= 3*2^(k-1), k = floor_log2(n)",
              "le", _sweep_minor, _p_minor,
              _ranges_n(2, " (n >= 3*2^(k-1) only)"), (14, 0), (10, 0)),
    _identity("lemma_half", "half-value indices n >= 3 satisfy n < 3*2^(k-1) - 1",
              "lt", _sweep_half_value, _p_lemma_half,
              _ranges_n(3, " (half-value indices only)"), (16, 0), (10, 0)),
]

CATALOG: dict[str, Identity] = {entry.id: entry for entry in _CATALOG_ENTRIES}


def corrupted(identity: Identity) -> Identity:
    """Negative control: same identity with +1 added to every rhs."""

    def bad_pairs(params: Params) -> list[Pair]:
        return [(lhs, rhs + 1) for lhs, rhs in identity.pairs(params)]

    return Identity(id=identity.id, description=identity.description + " (corrupted)",
                    relation=identity.relation, sweep=identity.sweep, pairs=bad_pairs,
                    ranges=identity.ranges, defaults=identity.defaults,
                    boundary=identity.boundary)


def verify(identity: Identity | str, kmax: int | None = None,
           mmax: int | None = None, profile: str | None = None) -> IdentityReport:
    """Exhaustively sweep one identity and record every violation.

    Counterexamples are listed in ascending parameter order, each with both
    side values and a flag marking sweep-boundary cases (n = 0 or n = 2^k).
    A sweep whose constraint set is empty yields cases = 0, which callers
    must surface (see :attr:`IdentityReport.empty_sweep`), not treat as a
    silent pass.
    """
    if isinstance(identity, str):
        try:
            identity = CATALOG[identity]
        except KeyError:
            raise KeyError(f"unknown identity {identity!r}") from None
    prof = profile if profile is not None else active_profile()
    if prof not in PROFILES:
        raise ValueError(f"unknown profile {prof!r}; expected one of {PROFILES}")
    default_k, default_m = identity.defaults[prof]
    kk = default_k if kmax is None else kmax
    mm = default_m if mmax is None else mmax
    cases = 0
    counterexamples: list[dict] = []
    for params in identity.sweep(kk, mm):
        cases += 1
        for lhs, rhs in identity.pairs(params):
            if not _holds(identity.relation, lhs, rhs):
                counterexamples.append({
                    "params": dict(params),
                    "lhs": str(lhs),
                    "rhs": str(rhs),
                    "boundary": identity.boundary(params),
                })
                break
    return IdentityReport(
        id=identity.id,
        ranges=identity.ranges(kk, mm),
        cases=cases,
        passed=not counterexamples,
        counterexamples=counterexamples,
    )


def verify_all(ids: Iterable[str] | None = None, kmax: int | None = None,
               mmax: int | None = None, profile: str | None = None,
               corrupt: bool = False) -> list[IdentityReport]:
    """Run :func:`verify` over the named identities (default: whole catalog)."""
    names = list(CATALOG) if ids is None else list(ids)
    reports = []
    for name in names:
        identity = CATALOG.get(name)
        if identity is None:
            raise KeyError(f"unknown identity {name!r}")
        if corrupt:
            identity = corrupted(identity)
        reports.append(verify(identity, kmax=kmax, mmax=mmax, profile=profile))
    return reports


# --- special index sequences ---------------------------------------------------

@dataclass(frozen=True)
class IntervalMinimum:
    """Minimum of the sequence on [2^k, 2^(k+1)).

    ``argmin`` is the largest index attaining the minimum (the cataloged
    claim is that no index past the half-value index does); all attaining
    indices are kept in ``argmins`` in ascending order.
    """

    k: int
    argmin: int
    value: int
    argmins: tuple[int, ...]


def half_value_indices(limit: int) -> list[int]:
    """All n in [1, limit] whose term equals exactly n/2, by direct scan."""
    if not 0 <= limit <= (1 << 24):
        raise ValueError(f"scan limit must be in [0, 2^24], got {limit}")
    # only even n can satisfy term(n) = n/2
    return [n for n in range(2, limit + 1, 2) if 2 * A(n) == n]


def a026644_recurrence(count: int) -> list[int]:
    """First ``count`` terms of a_j = a_(j-1) + 2*a_(j-2) + 2 from 2, 4."""
    if count < 1:
        raise ValueError(f"need count >= 1, got {count}")
    terms = [2, 4]
    while len(terms) < count:
        terms.append(terms[-1] + 2 * terms[-2] + 2)
    return terms[:count]


def lichtenberg(count: int) -> list[int]:
    """First ``count`` terms of the Lichtenberg sequence (half of A026644)."""
    return [term // 2 for term in a026644_recurrence(count)]


def interval_minimum(k: int) -> IntervalMinimum:
    """Scan [2^k, 2^(k+1)) for the minimum term and where it is attained."""
    if not 1 <= k <= 22:
        raise ValueError(f"interval exponent must be in [1, 22], got {k}")
    best: int | None = None
    argmins: list[int] = []
    for n in range(1 << k, 1 << (k + 1)):
        value = A(n)
        if best is None or value < best:
            best = value
            argmins = [n]
        elif value == best:
            argmins.append(n)
    return IntervalMinimum(k=k, argmin=argmins[-1], value=best, argmins=tuple(argmins))


def power4_fixed_points(m_max: int) -> list[tuple[int, int]]:
    """Terms at indices (5*4^m - 2)/3 for m = 0..m_max.

    Returns (index, term) pairs; the expected fixed-point value is 4^m, and
    callers compare rather than this function raising, so a violation shows
    up as a reportable counterexample.  The index is always integral
    (asserted) and must stay within the index cap.
    """
    if m_max < 0:
        raise ValueError(f"need m_max >= 0, got {m_max}")
    if (5 * (1 << (2 * m_max)) - 2) // 3 > INDEX_LIMIT:
        raise ValueError(f"index (5*4^{m_max} - 2)/3 exceeds the 2^60 cap")
    out = []
    for m in range(m_max + 1):
        num = 5 * (1 << (2 * m)) - 2
        assert num % 3 == 0
        out.append((num // 3, A(num // 3)))
    return out
