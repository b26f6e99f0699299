"""Integer partitions as cycle types of permutations.

A partition of ``n`` is stored as a tuple of weakly decreasing positive
integers summing to ``n``.  It encodes the conjugacy class of the symmetric
group on ``n`` points whose elements have exactly those cycle lengths.  The
centralizer of any permutation of cycle type ``lam`` has order

    z(lam) = prod_i i**m_i * m_i!

where ``m_i`` is the number of parts of ``lam`` equal to ``i``, so the class
contains ``n! / z(lam)`` permutations.  Everything here is exact integer
arithmetic; probabilities are formed by callers as ``fractions.Fraction``.
"""

from __future__ import annotations

from math import factorial
from typing import Iterator

# A cycle type: weakly decreasing tuple of positive parts.
CycleType = tuple[int, ...]

__all__ = [
    "CycleType",
    "enumerate_partitions",
    "count_partitions",
    "centralizer_order",
    "conjugacy_class_size",
    "class_size_power_sums",
    "validate_cycle_type",
    "encode_cycle_type",
    "decode_cycle_type",
]


def validate_cycle_type(parts: CycleType) -> None:
    """Raise ``ValueError`` unless ``parts`` is weakly decreasing and positive."""
    for i, p in enumerate(parts):
        if p < 1:
            raise ValueError(f"part {p!r} is not a positive integer")
        if i > 0 and parts[i - 1] < p:
            raise ValueError(f"parts {parts!r} are not weakly decreasing")


def encode_cycle_type(parts: CycleType) -> bytes:
    """Canonical byte encoding: run-length pairs in decreasing part order.

    The encoding is injective on valid cycle types, so it can serve as a
    memo or file key.  The empty partition encodes to ``b""``.

    >>> encode_cycle_type((3, 1, 1))
    b'3x1.1x2'
    """
    runs = []
    i = 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        runs.append(f"{parts[i]}x{j - i}")
        i = j
    return ".".join(runs).encode("ascii")


def decode_cycle_type(data: bytes) -> CycleType:
    """Inverse of :func:`encode_cycle_type`."""
    if not data:
        return ()
    parts: list[int] = []
    for run in data.decode("ascii").split("."):
        part_str, _, mult_str = run.partition("x")
        part, mult = int(part_str), int(mult_str)
        if part < 1 or mult < 1:
            raise ValueError(f"invalid run {run!r}")
        parts.extend([part] * mult)
    result = tuple(parts)
    validate_cycle_type(result)
    return result


def enumerate_partitions(n: int, max_part: int | None = None) -> Iterator[CycleType]:
    """Yield every partition of ``n`` exactly once, in reverse lexicographic
    order (largest part first), e.g. for ``n = 4``:
    ``(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)``.

    ``max_part`` restricts the enumeration to partitions whose parts are all
    at most that bound.  Memory per step is O(n); the stream is a fresh
    deterministic enumeration on every call.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if max_part is None or max_part >= n:
        yield from _partitions_zs1(n)
    else:
        yield from _partitions_capped(n, max_part)


def _partitions_zs1(n: int) -> Iterator[CycleType]:
    # Zoghbi-Stojmenovic "ZS1": anti-lexicographic order, O(1) amortized step.
    if n == 0:
        yield ()
        return
    x = [1] * n
    x[0] = n
    m = 1  # number of active entries in x
    h = 1  # position (1-based) of the last entry exceeding 1
    yield (n,)
    while x[0] != 1:
        if x[h - 1] == 2:
            m += 1
            x[h - 1] = 1
            h -= 1
        else:
            r = x[h - 1] - 1
            t = m - h + 1
            x[h - 1] = r
            while t >= r:
                h += 1
                x[h - 1] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h - 1] = t
        yield tuple(x[:m])


def _partitions_capped(n: int, cap: int) -> Iterator[CycleType]:
    if n == 0:
        yield ()
        return
    if cap < 1:
        return

    def rec(rem: int, bound: int) -> Iterator[CycleType]:
        if rem == 0:
            yield ()
            return
        for first in range(min(bound, rem), 0, -1):
            for rest in rec(rem - first, first):
                yield (first,) + rest

    yield from rec(n, cap)


_PENTAGONAL_CACHE = [1]


def count_partitions(n: int) -> int:
    """Number of partitions of ``n``, by Euler's pentagonal-number recurrence.

    Deliberately independent of :func:`enumerate_partitions` so the two can
    cross-check each other.

    >>> count_partitions(10)
    42
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    cache = _PENTAGONAL_CACHE
    while len(cache) <= n:
        m = len(cache)
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 == 1 else -1
            total += sign * cache[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * cache[m - g2]
            k += 1
        cache.append(total)
    return cache[n]


def centralizer_order(parts: CycleType) -> int:
    """Order of the centralizer of a permutation with cycle type ``parts``.

    Equals ``prod_i i**m_i * m_i!`` over the part multiplicities; 1 for the
    empty partition.
    """
    z = 1
    i = 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        mult = j - i
        z *= parts[i] ** mult * factorial(mult)
        i = j
    return z


def conjugacy_class_size(parts: CycleType) -> int:
    """Number of permutations of cycle type ``parts``: ``n! / z(parts)``."""
    return factorial(sum(parts)) // centralizer_order(parts)


def class_size_power_sums(
    n_max: int, power: int = 2, max_part: int | None = None
) -> list[int]:
    """Sums of conjugacy-class sizes raised to ``power``, for every weight.

    Returns a list ``sums`` of length ``n_max + 1`` in which ``sums[n]`` is
    the integer

        sum over partitions ``lam`` of ``n`` of ``(n! / z(lam)) ** power``

    restricted, when ``max_part`` is given, to partitions with all parts at
    most ``max_part``.  With ``power == 2`` and no part bound,
    ``sums[n] / n!**2`` is the probability that two independent uniform
    permutations of ``n`` points are conjugate.  With ``power == 1`` and no
    part bound, ``sums[n] == n!`` (the class equation).

    The sweep walks every admissible partition of every weight up to
    ``n_max`` exactly once, in run-length form, updating the class size
    incrementally; cost is one small division and multiplication per
    partition visited.  ``sums[0] == 1`` (empty product convention).
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if power < 1:
        raise ValueError("power must be a positive integer")
    sums = [0] * (n_max + 1)
    sums[0] = 1
    cap = n_max if max_part is None else min(max_part, n_max)
    if n_max == 0 or cap <= 0:
        return sums
    square = power == 2

    # visit(w, bound, q): the current partition has weight w, class size q,
    # and may only be extended by runs of parts <= bound.
    def visit(w: int, bound: int, q: int) -> None:
        top = bound if bound <= n_max - w else n_max - w
        for part in range(top, 0, -1):
            qq = q
            ww = w
            mult = 0
            while ww + part <= n_max:
                mult += 1
                rising = ww + 1
                for j in range(ww + 2, ww + part + 1):
                    rising *= j
                ww += part
                # class size of the extended partition; division is exact
                qq = qq * rising // (part * mult)
                if square:
                    sums[ww] += qq * qq
                elif power == 1:
                    sums[ww] += qq
                else:
                    sums[ww] += qq**power
                if part > 1 and ww < n_max:
                    visit(ww, part - 1, qq)

    visit(0, cap, 1)
    return sums
