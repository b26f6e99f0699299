"""Exact values and certified bounds for symmetric-group conjugacy statistics.

Central quantities, all exact rationals:

* ``kappa(n)``   probability that two independent uniform permutations of n
                 points are conjugate; evaluated as a sum of squared class
                 sizes over the partitions of n.
* ``s(k, n)``    probability that a uniform permutation of n points has all
                 cycles of length strictly less than k.
* ``r(l)``       probability that a uniform permutation of l points is
                 regular (all cycles the same length).
* ``rho(n)``     probability that two independent uniform permutations of n
                 points have conjugates that commute (delegated to
                 :mod:`conjprob.commuting`).

On top of the exact values sit recursive upper/lower bounds, a certified
uniform-bound chain ``n**2 * stat(n) <= C`` with the best constants
``C_kappa = 13**2 * kappa(13)`` and ``C_rho = 10**2 * rho(10)``, and interval
enclosures for the series sums of ``kappa`` and ``rho``.  Irrational
constants (e, log) only ever enter on the large side of an inequality and
are replaced by certified rational bounds, so every assertion made here is
an exact rational comparison.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable, Literal, TextIO

from conjprob.partitions import class_size_power_sums

__all__ = [
    "E_LOWER",
    "E_UPPER",
    "CeilingExceededError",
    "MissingBoundError",
    "BoundRecord",
    "StatsCache",
    "default_cache",
    "kappa_sn",
    "s_small_cycles",
    "s_small_cycles_oracle",
    "r_regular",
    "c_kappa",
    "c_rho",
    "kappa_upper_bound",
    "kappa_lower_bound",
    "rho_upper_bound",
    "rho_lower_bound",
    "verify_uniform_bound",
    "nsk_monotonicity_check",
    "small_cycles_inequalities",
    "regular_probability_bounds_check",
    "pfrac_inequality_check",
    "a_kappa_interval",
    "a_rho_interval",
    "theorem_proof_constants",
    "log_bounds",
    "decimal_string",
    "decimal_value",
]

# Certified rational enclosure of e = 2.718281828459...
E_LOWER = Fraction(2718281828, 10**9)
E_UPPER = Fraction(2718281829, 10**9)


class CeilingExceededError(RuntimeError):
    """An exact computation was requested beyond the configured ceiling."""


class MissingBoundError(LookupError):
    """A recursive bound needed a value that is neither exact nor bounded."""


# ---------------------------------------------------------------------------
# Certified rational bounds for logarithms and decimal rendering
# ---------------------------------------------------------------------------


def log_bounds(x: Fraction | int, terms: int = 24) -> tuple[Fraction, Fraction]:
    """Certified rational enclosure ``lo <= ln(x) <= hi`` for ``x >= 1``.

    Uses ``ln(x) = 2 atanh((x-1)/(x+1))``; the argument is first reduced to
    (1, 2] by halving so the series ratio is at most 1/3.  The truncation
    error is absorbed into ``hi`` via the geometric tail bound, so both ends
    are exact rationals bracketing the true value.
    """
    x = Fraction(x)
    if x < 1:
        raise ValueError("log_bounds requires x >= 1")
    halvings = 0
    while x > 2:
        x /= 2
        halvings += 1

    def atanh_series(y: Fraction) -> tuple[Fraction, Fraction]:
        # 2 * sum y^(2j+1)/(2j+1); partial sums from below, tail geometric.
        total = Fraction(0)
        ypow = y
        ysq = y * y
        for j in range(terms):
            total += ypow / (2 * j + 1)
            ypow *= ysq
        tail = ypow / ((2 * terms + 1) * (1 - ysq))
        return 2 * total, 2 * (total + tail)

    lo, hi = atanh_series((x - 1) / (x + 1)) if x > 1 else (Fraction(0), Fraction(0))
    if halvings:
        ln2_lo, ln2_hi = atanh_series(Fraction(1, 3))
        lo += halvings * ln2_lo
        hi += halvings * ln2_hi
    return lo, hi


RoundingMode = Literal["half_up", "floor", "ceiling"]


def decimal_value(value: Fraction, digits: int, mode: RoundingMode = "half_up") -> Fraction:
    """``value`` rounded to ``digits`` decimal places, as an exact rational.

    ``half_up`` rounds halves away from zero; ``floor`` and ``ceiling`` are
    the directed modes used when a claim needs one-sided rounding.
    """
    if digits < 0:
        raise ValueError("digits must be nonnegative")
    if mode == "half_up" and value < 0:
        return -decimal_value(-value, digits, mode)
    scale = 10**digits
    num, den = value.numerator * scale, value.denominator
    q, r = divmod(num, den)
    if mode == "half_up":
        if 2 * r >= den:
            q += 1
    elif mode == "ceiling":
        if r:
            q += 1
    elif mode != "floor":
        raise ValueError(f"unknown rounding mode {mode!r}")
    return Fraction(q, scale)


def decimal_string(value: Fraction, digits: int, mode: RoundingMode = "half_up") -> str:
    """Decimal rendering of an exact rational (display only, never stored)."""
    rounded = decimal_value(value, digits, mode)
    scaled = rounded.numerator * (10**digits) // rounded.denominator
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    whole, frac = divmod(scaled, 10**digits)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


# ---------------------------------------------------------------------------
# The cache of exact values and certified bound records
# ---------------------------------------------------------------------------


@dataclass
class BoundRecord:
    """Certified upper bound on ``n**2``-normalised statistic at ``n``.

    ``method == "exact"`` means ``value`` is the exact statistic;
    ``method == "recursive"`` means ``value`` came from the recursive bound
    with the recorded ``chosen_k`` (the strongest k among those scanned).
    """

    n: int
    value: Fraction
    method: Literal["exact", "recursive"]
    chosen_k: int | None = None

    def __post_init__(self) -> None:
        if self.method == "recursive":
            if self.chosen_k is None or not (2 <= self.chosen_k <= self.n):
                raise ValueError("recursive record needs 2 <= chosen_k <= n")
        elif self.chosen_k is not None:
            raise ValueError("exact record must not carry chosen_k")


@dataclass
class StatsCache:
    """Memo store for kappa, s_k, r, rho and uniform-bound records.

    Every cached value is reproducible from scratch; presence or absence of
    cache entries never changes a result (tests enforce this).  Exact
    evaluation is guarded by the two ceilings, since the partition sweep for
    kappa and the commuting-class relation for rho dominate the runtime.
    """

    kappa_ceiling: int = 80
    rho_ceiling: int = 30
    kappa_exact: dict[int, Fraction] = field(default_factory=dict)
    rho_exact: dict[int, Fraction] = field(default_factory=dict)
    s_k_table: dict[tuple[int, int], Fraction] = field(default_factory=dict)
    r_table: dict[int, Fraction] = field(default_factory=dict)
    kappa_bounds: dict[int, BoundRecord] = field(default_factory=dict)
    rho_bounds: dict[int, BoundRecord] = field(default_factory=dict)

    _kappa_max: int = field(default=-1, repr=False)
    _s_lists: dict[int, list[Fraction]] = field(default_factory=dict, repr=False)
    _commute_table: object = field(default=None, repr=False)

    # -- kappa ---------------------------------------------------------

    def ensure_kappa(self, n: int) -> None:
        """Populate exact ``kappa(m)`` for all ``m <= n`` (one sweep)."""
        if n > self.kappa_ceiling:
            raise CeilingExceededError(
                f"kappa({n}) exceeds the enumeration ceiling {self.kappa_ceiling}"
            )
        if n <= self._kappa_max:
            return
        sums = class_size_power_sums(n, power=2)
        fact = 1
        for m in range(n + 1):
            if m:
                fact *= m
            self.kappa_exact[m] = Fraction(sums[m], fact * fact)
        self._kappa_max = n

    def kappa(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("n must be nonnegative")
        if n not in self.kappa_exact:
            self.ensure_kappa(n)
        return self.kappa_exact[n]

    # -- s_k -----------------------------------------------------------

    def s_list(self, k: int, n: int) -> list[Fraction]:
        """Exact ``s_k(0..n)`` via the cycle-of-a-point recurrence
        ``s_k(n) = (1/n) * sum_{j=1}^{k-1} s_k(n-j)`` with ``s_k(n) = 1``
        for ``n <= k - 1``."""
        if k < 2:
            raise ValueError("k must be at least 2")
        one = Fraction(1)
        values = self._s_lists.setdefault(k, [one] * min(k, n + 1))
        while len(values) <= n:
            m = len(values)
            if m <= k - 1:
                values.append(one)
            else:
                values.append(sum(values[m - k + 1 : m], Fraction(0)) / m)
        return values

    def s(self, k: int, n: int) -> Fraction:
        if n < 0:
            raise ValueError("n must be nonnegative")
        key = (k, n)
        if key not in self.s_k_table:
            self.s_k_table[key] = self.s_list(k, n)[n]
        return self.s_k_table[key]

    # -- r ---------------------------------------------------------------

    def r(self, length: int) -> Fraction:
        """Probability a uniform permutation of ``length`` points is regular:
        ``sum over m | length of m**m / (length**m * m!)``."""
        if length < 1:
            raise ValueError("length must be positive")
        if length not in self.r_table:
            total = Fraction(0)
            for m in range(1, length + 1):
                if length % m == 0:
                    total += Fraction(m**m, length**m * factorial(m))
            self.r_table[length] = total
        return self.r_table[length]

    # -- rho -------------------------------------------------------------

    def commute_table(self):
        if self._commute_table is None:
            from conjprob.commuting import CommuteTable

            self._commute_table = CommuteTable()
        return self._commute_table

    def rho(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("n must be nonnegative")
        if n > self.rho_ceiling:
            raise CeilingExceededError(
                f"rho({n}) exceeds the commuting-classes ceiling {self.rho_ceiling}"
            )
        if n not in self.rho_exact:
            self.rho_exact[n] = self.commute_table().rho(n)
        return self.rho_exact[n]

    # -- values available to the recursive bounds -------------------------

    def _bounded_value(self, stat: str, m: int) -> Fraction:
        exact = self.kappa_exact if stat == "kappa" else self.rho_exact
        bounds = self.kappa_bounds if stat == "kappa" else self.rho_bounds
        if m in exact:
            return exact[m]
        ceiling = self.kappa_ceiling if stat == "kappa" else self.rho_ceiling
        if m <= ceiling:
            return self.kappa(m) if stat == "kappa" else self.rho(m)
        if m in bounds:
            return bounds[m].value
        raise MissingBoundError(
            f"no exact value or certified bound for {stat}({m})"
        )

    # -- on-disk memo ------------------------------------------------------

    def save(self, stream: TextIO) -> None:
        """Write cached exact values, one ``<stat> <args> <num>/<den>`` line."""
        for n in sorted(self.kappa_exact):
            v = self.kappa_exact[n]
            stream.write(f"kappa {n} {v.numerator}/{v.denominator}\n")
        for n in sorted(self.rho_exact):
            v = self.rho_exact[n]
            stream.write(f"rho {n} {v.numerator}/{v.denominator}\n")
        for (k, n) in sorted(self.s_k_table):
            v = self.s_k_table[(k, n)]
            stream.write(f"s {k} {n} {v.numerator}/{v.denominator}\n")
        for length in sorted(self.r_table):
            v = self.r_table[length]
            stream.write(f"r {length} {v.numerator}/{v.denominator}\n")

    _LINE_RE = re.compile(
        r"^(kappa|rho|r) (\d+) (-?\d+)/(\d+)$|^(s) (\d+) (\d+) (-?\d+)/(\d+)$"
    )

    def load(self, stream: TextIO) -> int:
        """Read records written by :meth:`save`; returns the number loaded.

        Malformed lines are rejected with a ``ValueError`` naming the line
        number.  Loaded values are normalised through ``Fraction`` so they
        are stored in lowest terms regardless of how they were written.
        """
        count = 0
        for line_no, raw in enumerate(stream, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            match = self._LINE_RE.match(line)
            if not match:
                raise ValueError(f"line {line_no}: malformed record {line!r}")
            if match.group(1):
                stat, arg = match.group(1), int(match.group(2))
                value = Fraction(int(match.group(3)), int(match.group(4)))
                if stat == "kappa":
                    self.kappa_exact[arg] = value
                elif stat == "rho":
                    self.rho_exact[arg] = value
                else:
                    self.r_table[arg] = value
            else:
                k, n = int(match.group(6)), int(match.group(7))
                value = Fraction(int(match.group(8)), int(match.group(9)))
                self.s_k_table[(k, n)] = value
            count += 1
        return count


_DEFAULT_CACHE = StatsCache()


def default_cache() -> StatsCache:
    return _DEFAULT_CACHE


def _cache(cache: StatsCache | None) -> StatsCache:
    return cache if cache is not None else _DEFAULT_CACHE


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------


def kappa_sn(n: int, cache: StatsCache | None = None) -> Fraction:
    """Exact probability that two uniform elements of S_n are conjugate."""
    return _cache(cache).kappa(n)


def s_small_cycles(k: int, n: int, cache: StatsCache | None = None) -> Fraction:
    """Exact probability that a uniform permutation of ``n`` points has all
    cycles of length strictly less than ``k`` (recurrence evaluation)."""
    return _cache(cache).s(k, n)


def s_small_cycles_oracle(k: int, n: int, cache: StatsCache | None = None) -> Fraction:
    """Independent evaluation of :func:`s_small_cycles` as a partition sum:
    the sum of ``1/z(lam)`` over partitions of ``n`` with all parts < k."""
    if k < 2:
        raise ValueError("k must be at least 2")
    c = _cache(cache)
    if n > c.kappa_ceiling:
        raise CeilingExceededError(
            f"oracle at n={n} exceeds the enumeration ceiling {c.kappa_ceiling}"
        )
    sums = class_size_power_sums(n, power=1, max_part=k - 1)
    return Fraction(sums[n], factorial(n))


def r_regular(length: int, cache: StatsCache | None = None) -> Fraction:
    """Exact probability that a uniform permutation of ``length`` points is
    regular."""
    return _cache(cache).r(length)


def c_kappa(cache: StatsCache | None = None) -> Fraction:
    """The sharp uniform-bound constant ``13**2 * kappa(13)``."""
    return 169 * _cache(cache).kappa(13)


def c_rho(cache: StatsCache | None = None) -> Fraction:
    """The sharp uniform-bound constant ``10**2 * rho(10)``."""
    return 100 * _cache(cache).rho(10)


def kappa_upper_bound(n: int, k: int, cache: StatsCache | None = None) -> Fraction:
    """Certified upper bound ``s_k(n)**2 + sum_{l=k}^{n} kappa(n-l)/l**2``.

    Exact ``kappa`` values are used where available; beyond the ceiling the
    certified upper-bound records are substituted, which keeps the result an
    upper bound because every coefficient is positive.
    """
    if not 2 <= k <= n:
        raise ValueError("need 2 <= k <= n")
    c = _cache(cache)
    total = c.s(k, n) ** 2
    for length in range(k, n + 1):
        total += c._bounded_value("kappa", n - length) / (length * length)
    return total


def kappa_lower_bound(n: int, k: int, cache: StatsCache | None = None) -> Fraction:
    """Certified lower bound ``sum_{l=k}^{n} kappa(n-l)/l**2`` for k > n/2.

    Valid because a permutation has at most one cycle longer than n/2, so
    the underlying events are disjoint.  Uses exact values only.
    """
    if not (2 * k > n and k <= n):
        raise ValueError("need n/2 < k <= n")
    c = _cache(cache)
    total = Fraction(0)
    for length in range(k, n + 1):
        total += c.kappa(n - length) / (length * length)
    return total


def rho_upper_bound(n: int, k: int, cache: StatsCache | None = None) -> Fraction:
    """Certified upper bound ``s_k(n)**2 + sum_{l=k}^{n} r(l)**2 rho(n-l)``."""
    if not 2 <= k <= n:
        raise ValueError("need 2 <= k <= n")
    c = _cache(cache)
    total = c.s(k, n) ** 2
    for length in range(k, n + 1):
        total += c.r(length) ** 2 * c._bounded_value("rho", n - length)
    return total


def rho_lower_bound(n: int, k: int, cache: StatsCache | None = None) -> Fraction:
    """Certified lower bound ``sum_{l=k}^{n} rho(n-l)/l**2`` for k > n/2."""
    if not (2 * k > n and k <= n):
        raise ValueError("need n/2 < k <= n")
    c = _cache(cache)
    total = Fraction(0)
    for length in range(k, n + 1):
        total += c.rho(n - length) / (length * length)
    return total


@dataclass
class UniformBoundReport:
    """Outcome of a uniform-bound chain ``n**2 * bound(n) <= C``."""

    stat: str
    constant: Fraction
    n_max: int
    exact_cutoff: int
    records: list[BoundRecord]
    passed: bool
    failing_n: int | None = None
    failing_value: Fraction | None = None
    failing_k: int | None = None


def verify_uniform_bound(
    stat: str,
    n_max: int,
    exact_cutoff: int,
    cache: StatsCache | None = None,
    k_max: int = 60,
) -> UniformBoundReport:
    """Certify ``n**2 * stat(S_n) <= C`` for every ``1 <= n <= n_max``.

    Exact values are used up to ``exact_cutoff``; above it, the recursive
    upper bound is evaluated for every ``k`` from 2 to ``min(n, k_max)`` and
    the strongest (smallest) bound is recorded together with its k.  The
    chain stops at the first failing n and reports it rather than raising.
    """
    if stat not in ("kappa", "rho"):
        raise ValueError("stat must be 'kappa' or 'rho'")
    c = _cache(cache)
    ceiling = c.kappa_ceiling if stat == "kappa" else c.rho_ceiling
    if exact_cutoff > ceiling:
        raise ValueError("exact_cutoff must not exceed the exact-value ceiling")
    constant = c_kappa(c) if stat == "kappa" else c_rho(c)
    records_map = c.kappa_bounds if stat == "kappa" else c.rho_bounds
    exact_fn = c.kappa if stat == "kappa" else c.rho

    values: list[Fraction] = []  # certified value (exact or bound) per m
    records: list[BoundRecord] = []
    if stat == "kappa":
        c.ensure_kappa(min(n_max, exact_cutoff))
    for n in range(0, n_max + 1):
        if n <= exact_cutoff:
            value = exact_fn(n)
            record = BoundRecord(n=n, value=value, method="exact")
        else:
            # One backward pass gives all suffix sums of the weighted
            # series, so the scan over k costs one squaring of s_k(n) each.
            suffix: dict[int, Fraction] = {n + 1: Fraction(0)}
            for length in range(n, 1, -1):
                weight = (
                    Fraction(1, length * length)
                    if stat == "kappa"
                    else c.r(length) ** 2
                )
                suffix[length] = suffix[length + 1] + weight * values[n - length]
            best: Fraction | None = None
            best_k = None
            for k in range(2, min(n, k_max) + 1):
                candidate = c.s(k, n) ** 2 + suffix[k]
                if best is None or candidate < best:
                    best, best_k = candidate, k
            assert best is not None and best_k is not None
            value = best
            record = BoundRecord(n=n, value=value, method="recursive", chosen_k=best_k)
        if n >= 1 and n * n * value > constant:
            return UniformBoundReport(
                stat=stat,
                constant=constant,
                n_max=n_max,
                exact_cutoff=exact_cutoff,
                records=records,
                passed=False,
                failing_n=n,
                failing_value=value,
                failing_k=record.chosen_k,
            )
        values.append(value)
        records.append(record)
        records_map[n] = record
    return UniformBoundReport(
        stat=stat,
        constant=constant,
        n_max=n_max,
        exact_cutoff=exact_cutoff,
        records=records,
        passed=True,
    )


@dataclass
class MonotonicityReport:
    k: int
    n_lo: int
    n_hi: int
    passed: bool
    failures: list[int]


def nsk_monotonicity_check(
    k: int, n_lo: int, n_hi: int, cache: StatsCache | None = None
) -> MonotonicityReport:
    """Exact check that ``n * s_k(n) >= (n+1) * s_k(n+1)`` on a range.

    Once this holds on a window of k-1 consecutive n it holds for all larger
    n, which is how the tail of the uniform-bound chains is controlled.
    """
    if n_lo < k - 1:
        raise ValueError("need n_lo >= k - 1")
    c = _cache(cache)
    s = c.s_list(k, n_hi + 1)
    failures = [n for n in range(n_lo, n_hi + 1) if n * s[n] < (n + 1) * s[n + 1]]
    return MonotonicityReport(k, n_lo, n_hi, not failures, failures)


@dataclass
class SmallCyclesReport:
    k: int
    n: int
    t: int
    s_value: Fraction
    factorial_bound: Fraction
    exponential_bound: Fraction
    passed: bool


def small_cycles_inequalities(
    k: int, n: int, cache: StatsCache | None = None
) -> SmallCyclesReport:
    """Exact check of ``s_k(n) <= 1/t!`` and ``s_k(n) <= (e/t)**t`` with
    ``t = floor(n / (k-1))``, the e replaced by its rational upper bound.

    For ``t == 0`` both right-hand sides degenerate to 1 and the check is
    trivial.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    c = _cache(cache)
    s_value = c.s(k, n)
    t = n // (k - 1)
    factorial_bound = Fraction(1, factorial(t))
    exponential_bound = (E_UPPER / t) ** t if t > 0 else Fraction(1)
    passed = s_value <= factorial_bound and s_value <= exponential_bound
    return SmallCyclesReport(k, n, t, s_value, factorial_bound, exponential_bound, passed)


def regular_probability_bounds_check(
    length: int, cache: StatsCache | None = None, exact_below: int = 64
) -> bool:
    """Certify ``1/l <= r(l) <= 1/l + 2/l**2 + c/l**3`` at ``l = length``,
    with ``c = e**3 / (1 - e/3)`` over-approximated rationally.

    The lower bound is immediate (the l-cycle term alone is 1/l).  For the
    upper bound the divisor terms up to ``exact_below`` are summed exactly
    and the remaining divisors m are over-approximated by the geometric tail
    ``sum_{m >= m0} (e/l)**m``, which keeps the certificate sound without
    manipulating the astronomically sized exact terms.
    """
    c = _cache(cache)
    c_upper = E_UPPER**3 / (1 - E_UPPER / 3)
    l = length
    if l <= exact_below:
        value = c.r(l)
        head, tail = value, Fraction(0)
    else:
        head = Fraction(0)
        for m in range(1, exact_below + 1):
            if l % m == 0:
                head += Fraction(m**m, l**m * factorial(m))
        # m! >= (m/e)**m turns each remaining term into at most (e/l)**m
        ratio = E_UPPER / l
        m0 = exact_below + 1
        tail = ratio**m0 / (1 - ratio)
    lower_ok = Fraction(1, l) <= head
    upper_ok = head + tail <= Fraction(1, l) + Fraction(2, l * l) + c_upper / l**3
    return lower_ok and upper_ok


def pfrac_inequality_check(n: int, k: int) -> bool:
    """Certify ``sum_{l=ceil(n/2)}^{n-k-1} 1/(l**2 (n-l)**2)
    <= 1/(n**2 k) + 2 log(n/k)/n**3`` for ``0 < k < n/2``.

    The left side is summed exactly; the logarithm is replaced by its
    certified rational lower bound, so success certifies the true
    inequality.  An empty sum passes trivially.
    """
    if not 0 < k < Fraction(n, 2):
        raise ValueError("need 0 < k < n/2")
    lhs = Fraction(0)
    for length in range((n + 1) // 2, n - k):
        lhs += Fraction(1, length * length * (n - length) * (n - length))
    log_lo, _ = log_bounds(Fraction(n, k))
    rhs_floor = Fraction(1, n * n * k) + 2 * log_lo / n**3
    return lhs <= rhs_floor


def a_kappa_interval(
    n_cut: int, cache: StatsCache | None = None
) -> tuple[Fraction, Fraction]:
    """Exact enclosure of ``sum_{n>=0} kappa(S_n)``, the limit of
    ``n**2 * kappa(S_n)``.

    The n = 0 (empty permutation) term is included: the recursive lower
    bound with k = floor(3n/4) converges to exactly this normalisation, and
    it is the constant the scaled probabilities approach (4.26340...).
    ``lo`` is the exact partial sum to ``n_cut``; the tail is bounded by
    ``C_kappa * sum_{n > n_cut} 1/n**2 < C_kappa / n_cut``.
    """
    c = _cache(cache)
    c.ensure_kappa(n_cut)
    lo = sum((c.kappa(n) for n in range(0, n_cut + 1)), Fraction(0))
    return lo, lo + c_kappa(c) / n_cut


def a_rho_interval(
    n_cut: int, cache: StatsCache | None = None
) -> tuple[Fraction, Fraction]:
    """Exact enclosure of ``sum_{n>=0} rho(S_n)``, the limit of
    ``n**2 * rho(S_n)`` (normalised like :func:`a_kappa_interval`).

    The tail over n > n_cut is bounded by ``C_rho / n_cut``.
    """
    c = _cache(cache)
    lo = sum((c.rho(n) for n in range(0, n_cut + 1)), Fraction(0))
    return lo, lo + c_rho(c) / n_cut


@dataclass
class ProofChainReport:
    """Recomputation of one inductive-step constant chain.

    ``summands`` are exact rationals that upper-bound the three pieces of
    the induction step (small-cycles square, head of the series, certified
    tail); their renderings at five decimal places and the comparison of the
    exact total against the sharp constant are what the induction needs.
    """

    which: str
    summands: list[Fraction]
    rendered: list[str]
    total: Fraction
    constant: Fraction
    total_below_constant: bool


def theorem_proof_constants(
    which: str, cache: StatsCache | None = None
) -> ProofChainReport:
    """Recompute the three-summand induction chain for the uniform bound.

    ``which`` is ``"kappa"`` (chain closing below ``C_kappa``, base n = 300,
    k = 15) or ``"rho"`` (chain closing at or below ``C_rho``, base n = 180,
    k = 30).  Logarithms and e enter only through certified rational upper
    bounds, so each summand is a sound upper bound and the chain comparison
    is exact.
    """
    c = _cache(cache)
    if which == "kappa":
        constant = c_kappa(c)
        k, base = 15, 300
        # n * s_15(n) is eventually dominated by its value at n = 60
        s_peak = 60 * c.s(15, 60)
        summand1 = s_peak * s_peak
        head = sum((c.kappa(m) for m in range(0, 16)), Fraction(0))
        summand2 = Fraction(base, base - k) ** 2 * head
        log_hi = log_bounds(Fraction(base, k))[1]
        summand3 = constant * (
            Fraction(2, k) + 4 * log_hi / base + Fraction(base**2, k**2 * (base - k) ** 2)
        )
    elif which == "rho":
        constant = c_rho(c)
        k, base = 30, 180
        s_peak = 180 * c.s(30, 180)
        summand1 = s_peak * s_peak
        c_upper = E_UPPER**3 / (1 - E_UPPER / 3)

        def r_envelope(length: int) -> Fraction:
            # R(l) with r(l) <= R(l)/l; decreasing in l
            return 1 + Fraction(2, length) + c_upper / length**2

        head = sum((c.rho(m) for m in range(0, 31)), Fraction(0))
        summand2 = Fraction(base, base - k) ** 2 * r_envelope(base - k) ** 2 * head
        log_hi = log_bounds(Fraction(base, k))[1]
        summand3 = (
            r_envelope(k) ** 2
            * constant
            * (Fraction(2, k) + 4 * log_hi / base + Fraction(base**2, k**2 * (base - k) ** 2))
        )
    else:
        raise ValueError("which must be 'kappa' or 'rho'")
    summands = [summand1, summand2, summand3]
    total = sum(summands, Fraction(0))
    ok = total < constant if which == "kappa" else total <= constant
    return ProofChainReport(
        which=which,
        summands=summands,
        rendered=[decimal_string(s, 5) for s in summands],
        total=total,
        constant=constant,
        total_below_constant=ok,
    )
