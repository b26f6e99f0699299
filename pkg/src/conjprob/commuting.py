"""Commuting conjugacy classes of symmetric groups.

Two conjugacy classes of S_n *commute* when they contain permutations that
commute; equivalently, representatives of the two classes have conjugates
that commute.  Because the relation only depends on cycle types, it is
decided here on partitions.

Decision procedure (``classes_commute``): if two permutations commute, the
orbit of the abelian group they generate that contains a longest cycle is a
set on which both act regularly.  Stripping that orbit from both sides
leaves a smaller commuting pair.  Concretely, with ``m`` the largest part
over both partitions: for each partition attaining ``m`` (the host), for
each count ``a >= 1`` of m-parts stripped from the host (``l = a * m``) and
each divisor ``e`` of ``l`` such that the other partition has at least
``l/e`` parts equal to ``e``, remove those parts and recurse.  The pair
commutes iff some branch empties both partitions.  Sufficiency of a branch
rests on the fact that all regular permutations of an l-set are conjugate
into a single cyclic regular group; that step is validated exhaustively
against the brute-force oracle below for n <= 7 (and spot checks at n = 8)
by the test suite, which gates every rho value computed here.

``rho_sn`` sums ``1/(z(lam) z(mu))`` over the commuting ordered pairs.  The
``CommuteTable`` engine fills one boolean matrix per weight bottom-up, so
deciding a pair at weight n only ever looks up finished matrices of smaller
weight.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import IO, Iterator

from conjprob.partitions import (
    CycleType,
    centralizer_order,
    encode_cycle_type,
    enumerate_partitions,
    validate_cycle_type,
)

__all__ = [
    "CommutePair",
    "classes_commute",
    "CommuteTable",
    "rho_sn",
    "export_commute_matrix",
    "brute_force_classes_commute",
    "brute_force_commute_matrix",
    "regular_subset_probability_check",
    "cycle_statistics_check",
    "clear_memo",
]

BRUTE_FORCE_MAX_DEGREE = 8


@dataclass(frozen=True)
class CommutePair:
    """A canonically ordered pair of cycle types of the same weight."""

    left: CycleType
    right: CycleType

    @classmethod
    def of(cls, lam: CycleType, mu: CycleType) -> "CommutePair":
        if sum(lam) != sum(mu):
            raise ValueError(
                f"cycle types have different weights: {sum(lam)} != {sum(mu)}"
            )
        return cls(lam, mu) if lam <= mu else cls(mu, lam)

    @property
    def n(self) -> int:
        return sum(self.left)


def _runs(parts: CycleType) -> list[tuple[int, int]]:
    out = []
    i = 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        out.append((parts[i], j - i))
        i = j
    return out


def _strip(parts: CycleType, value: int, count: int) -> CycleType:
    """Remove ``count`` copies of ``value`` from a weakly decreasing tuple."""
    pos = 0
    while parts[pos] != value:
        pos += 1
    return parts[:pos] + parts[pos + count :]


def _sub_pairs(lam: CycleType, mu: CycleType) -> Iterator[tuple[CycleType, CycleType]]:
    """Candidate reduced pairs after one strip of the decision procedure."""
    m = max(lam[0], mu[0])
    hosts: list[tuple[CycleType, CycleType]] = []
    if lam[0] == m:
        hosts.append((lam, mu))
    if mu[0] == m and mu != lam:
        hosts.append((mu, lam))
    for host, other in hosts:
        host_mult = 0
        while host_mult < len(host) and host[host_mult] == m:
            host_mult += 1
        other_runs = _runs(other)
        for a in range(1, host_mult + 1):
            total = a * m
            sub_host = host[a:]
            for e, mult in other_runs:
                need, rem = divmod(total, e)
                if rem == 0 and mult >= need:
                    yield sub_host, _strip(other, e, need)


_MEMO: dict[tuple[CycleType, CycleType], bool] = {}


def clear_memo() -> None:
    _MEMO.clear()


def classes_commute(
    lam: CycleType,
    mu: CycleType,
    memo: dict[tuple[CycleType, CycleType], bool] | None = None,
) -> bool:
    """Decide whether the classes of cycle types ``lam`` and ``mu`` commute.

    Raises ``ValueError`` when the weights differ.  Results are memoized on
    the canonically ordered pair (the relation is symmetric); pass ``memo``
    to isolate the memo store.
    """
    lam, mu = tuple(lam), tuple(mu)
    validate_cycle_type(lam)
    validate_cycle_type(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"cycle types have different weights: {sum(lam)} != {sum(mu)}")
    if memo is None:
        memo = _MEMO
    return _decide(lam, mu, memo)


def _decide(lam, mu, memo) -> bool:
    if not lam:
        return True
    key = (lam, mu) if lam <= mu else (mu, lam)
    cached = memo.get(key)
    if cached is not None:
        return cached
    result = False
    for sub_lam, sub_mu in _sub_pairs(lam, mu):
        if not sub_lam or _decide(sub_lam, sub_mu, memo):
            result = True
            break
    memo[key] = result
    return result


@dataclass
class _Level:
    parts: list[CycleType]
    index: dict[CycleType, int]
    class_sizes: list[int]
    bits: bytearray  # canonical square matrix, filled at (i, j) for i <= j
    rho_numerator: int


class CommuteTable:
    """Bottom-up commute matrices for all weights up to a requested n.

    Building weight n touches every unordered pair of partitions of n once;
    sub-pair lookups land in finished matrices of smaller weight, so there is
    no recursion at query time.  The per-level matrices also provide the CSV
    export and the exact rho values.
    """

    def __init__(self) -> None:
        self.levels: dict[int, _Level] = {}

    def ensure(self, n: int) -> None:
        for m in range(0, n + 1):
            if m not in self.levels:
                self._build(m)

    def commute(self, lam: CycleType, mu: CycleType) -> bool:
        n = sum(lam)
        if sum(mu) != n:
            raise ValueError("cycle types have different weights")
        self.ensure(n)
        level = self.levels[n]
        i, j = level.index[tuple(lam)], level.index[tuple(mu)]
        if i > j:
            i, j = j, i
        return bool(level.bits[i * len(level.parts) + j])

    def rho(self, n: int) -> Fraction:
        """Exact probability that two uniform elements of S_n have
        conjugates that commute."""
        self.ensure(n)
        return Fraction(self.levels[n].rho_numerator, factorial(n) ** 2)

    def matrix(self, n: int) -> tuple[list[CycleType], list[list[bool]]]:
        self.ensure(n)
        level = self.levels[n]
        size = len(level.parts)
        full = [[False] * size for _ in range(size)]
        for i in range(size):
            for j in range(i, size):
                value = bool(level.bits[i * size + j])
                full[i][j] = full[j][i] = value
        return list(level.parts), full

    def _build(self, n: int) -> None:
        parts = list(enumerate_partitions(n))
        size = len(parts)
        index = {p: i for i, p in enumerate(parts)}
        n_fact = factorial(n)
        class_sizes = [n_fact // centralizer_order(p) for p in parts]
        bits = bytearray(size * size)
        if n == 0:
            bits[0] = 1
            self.levels[0] = _Level(parts, index, class_sizes, bits, 1)
            return

        runs = [_runs(p) for p in parts]
        # multiplicity of the leading (largest) part of each partition
        max_mult = []
        for p in parts:
            m = 1
            while m < len(p) and p[m] == p[0]:
                m += 1
            max_mult.append(m)
        levels = self.levels
        # strip caches: results of removing parts repeat across pairs
        host_cache: dict[int, int] = {}  # key i * 64 + a -> sub index
        other_cache: dict[int, int] = {}  # key (i * 64 + e) * 64 + need -> sub index

        rho_num = 0
        for i in range(size):
            lam = parts[i]
            lam_max = lam[0]
            lam_mult = max_mult[i]
            ci = class_sizes[i]
            rho_num += ci * ci  # a class always commutes with itself
            bits[i * size + i] = 1
            row = i * size
            for j in range(i + 1, size):
                mu = parts[j]
                mu_max = mu[0]
                commute = False
                if lam_max >= mu_max:
                    commute = self._try_host(
                        n, i, lam, lam_mult, j, mu, runs[j], host_cache, other_cache
                    )
                if not commute and mu_max >= lam_max:
                    commute = self._try_host(
                        n, j, mu, max_mult[j], i, lam, runs[i], host_cache, other_cache
                    )
                if commute:
                    bits[row + j] = 1
                    rho_num += 2 * ci * class_sizes[j]
        levels[n] = _Level(parts, index, class_sizes, bits, rho_num)

    def _try_host(self, n, hi, host, host_mult, oi, other, other_runs, host_cache, other_cache):
        m = host[0]
        levels = self.levels
        for a in range(1, host_mult + 1):
            rem = n - a * m
            total = a * m
            sub_host_idx = None
            for e, mult in other_runs:
                need, r = divmod(total, e)
                if r or mult < need:
                    continue
                if rem == 0:
                    return True
                if sub_host_idx is None:
                    hkey = hi * 64 + a
                    sub_host_idx = host_cache.get(hkey)
                    if sub_host_idx is None:
                        sub_host_idx = levels[rem].index[host[a:]]
                        host_cache[hkey] = sub_host_idx
                okey = (oi * 64 + e) * 64 + need
                sub_other_idx = other_cache.get(okey)
                if sub_other_idx is None:
                    sub_other_idx = levels[rem].index[_strip(other, e, need)]
                    other_cache[okey] = sub_other_idx
                level = levels[rem]
                x, y = sub_host_idx, sub_other_idx
                if x > y:
                    x, y = y, x
                if level.bits[x * len(level.parts) + y]:
                    return True
        return False


_DEFAULT_TABLE = CommuteTable()


def default_table() -> CommuteTable:
    return _DEFAULT_TABLE


def rho_sn(
    n: int, table: CommuteTable | None = None, ceiling: int = 30
) -> Fraction:
    """Exact probability that two independent uniform elements of S_n have
    conjugates that commute; 1 for n <= 2.

    Guarded by ``ceiling`` (the pair loop is quadratic in the number of
    partitions); raise it explicitly for larger weights.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > ceiling:
        from conjprob.symstats import CeilingExceededError

        raise CeilingExceededError(
            f"rho({n}) exceeds the commuting-classes ceiling {ceiling}"
        )
    return (table or _DEFAULT_TABLE).rho(n)


def export_commute_matrix(n: int, stream: IO[str], table: CommuteTable | None = None) -> None:
    """Write the commute matrix for weight ``n`` as CSV.

    Row and column labels are the canonical run-length encodings of the
    cycle types; cells are 0/1.
    """
    parts, matrix = (table or _DEFAULT_TABLE).matrix(n)
    labels = [encode_cycle_type(p).decode("ascii") for p in parts]
    writer = csv.writer(stream)
    writer.writerow([""] + labels)
    for label, row in zip(labels, matrix):
        writer.writerow([label] + [int(v) for v in row])


# ---------------------------------------------------------------------------
# Brute-force permutation oracles (independent of everything above)
# ---------------------------------------------------------------------------


def _cycle_type_of(perm: tuple[int, ...]) -> CycleType:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        lengths.append(length)
    lengths.sort(reverse=True)
    return tuple(lengths)


def _representative(parts: CycleType) -> tuple[int, ...]:
    # consecutive cycles: (0 1 .. p1-1)(p1 ..) ...
    n = sum(parts)
    perm = list(range(n))
    start = 0
    for p in parts:
        for offset in range(p):
            perm[start + offset] = start + (offset + 1) % p
        start += p
    return tuple(perm)


_BUCKET_CACHE: dict[int, dict[CycleType, list[tuple[int, ...]]]] = {}


def _perms_by_type(n: int) -> dict[CycleType, list[tuple[int, ...]]]:
    if n not in _BUCKET_CACHE:
        buckets: dict[CycleType, list[tuple[int, ...]]] = {}
        for perm in permutations(range(n)):
            buckets.setdefault(_cycle_type_of(perm), []).append(perm)
        _BUCKET_CACHE[n] = buckets
    return _BUCKET_CACHE[n]


def brute_force_classes_commute(lam: CycleType, mu: CycleType) -> bool:
    """Oracle: scan the whole class of ``mu`` for an element commuting with
    a fixed representative of ``lam``.  Exhaustive; degree capped at 8."""
    lam, mu = tuple(lam), tuple(mu)
    n = sum(lam)
    if sum(mu) != n:
        raise ValueError("cycle types have different weights")
    if n > BRUTE_FORCE_MAX_DEGREE:
        raise ValueError(f"brute force capped at degree {BRUTE_FORCE_MAX_DEGREE}")
    if n == 0:
        return True
    sigma = _representative(lam)
    for tau in _perms_by_type(n)[mu]:
        if all(sigma[tau[x]] == tau[sigma[x]] for x in range(n)):
            return True
    return False


def brute_force_commute_matrix(n: int) -> tuple[list[CycleType], list[list[bool]]]:
    """Full oracle matrix over all pairs of cycle types of weight ``n``."""
    parts = list(enumerate_partitions(n))
    size = len(parts)
    matrix = [[False] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            value = brute_force_classes_commute(parts[i], parts[j])
            matrix[i][j] = matrix[j][i] = value
    return parts, matrix


def regular_subset_probability_check(n: int, length: int) -> bool:
    """Exhaustively verify that a uniform permutation of n points acts
    regularly on a fixed ``length``-subset with probability
    ``r(length) / binomial(n, length)``."""
    if not 1 <= length <= n <= BRUTE_FORCE_MAX_DEGREE:
        raise ValueError("need 1 <= length <= n <= 8")
    from conjprob.symstats import r_regular

    fixed = set(range(length))
    count = 0
    for perm in permutations(range(n)):
        if {perm[x] for x in fixed} != fixed:
            continue
        # regular on the subset: all cycles within it of equal length
        sub_lengths = set()
        seen = set()
        for start in fixed:
            if start in seen:
                continue
            x, steps = start, 0
            while x not in seen:
                seen.add(x)
                x = perm[x]
                steps += 1
            sub_lengths.add(steps)
        if len(sub_lengths) == 1:
            count += 1
    binom = factorial(n) // (factorial(length) * factorial(n - length))
    return Fraction(count, factorial(n)) == r_regular(length) / binom


@dataclass
class CycleStatisticsReport:
    n: int
    fixed_set_ok: bool
    expectation_ok: bool
    point_membership_ok: bool

    @property
    def passed(self) -> bool:
        return self.fixed_set_ok and self.expectation_ok and self.point_membership_ok


def cycle_statistics_check(n: int) -> CycleStatisticsReport:
    """Exhaustively verify three cycle statistics for every length l <= n:

    * P(a fixed l-set is a single l-cycle) = (1/l) / binomial(n, l);
    * expected number of l-cycles = 1/l;
    * P(the point 0 lies in an l-cycle) = 1/n.
    """
    if not 1 <= n <= BRUTE_FORCE_MAX_DEGREE:
        raise ValueError("need 1 <= n <= 8")
    n_fact = factorial(n)
    fixed_ok = expect_ok = member_ok = True
    for length in range(1, n + 1):
        fixed = set(range(length))
        on_fixed = 0
        total_cycles = 0
        containing_zero = 0
        for perm in permutations(range(n)):
            # count l-cycles and check the fixed window
            seen = [False] * n
            for start in range(n):
                if seen[start]:
                    continue
                cycle = [start]
                seen[start] = True
                x = perm[start]
                while x != start:
                    seen[x] = True
                    cycle.append(x)
                    x = perm[x]
                if len(cycle) == length:
                    total_cycles += 1
                    if 0 in cycle:
                        containing_zero += 1
                    if set(cycle) == fixed:
                        on_fixed += 1
        binom = n_fact // (factorial(length) * factorial(n - length))
        fixed_ok &= Fraction(on_fixed, n_fact) == Fraction(1, length) / binom
        expect_ok &= Fraction(total_cycles, n_fact) == Fraction(1, length)
        member_ok &= Fraction(containing_zero, n_fact) == Fraction(1, n)
    return CycleStatisticsReport(n, fixed_ok, expect_ok, member_ok)
