"""Finite groups with indexed elements and exact conjugacy statistics.

Groups are represented with elements indexed ``0 .. order-1`` where index 0
is the identity.  Three constructions cover everything needed here:

* :class:`PermutationGroup` -- breadth-first closure of permutation
  generators acting on ``{0, .., degree-1}``;
* :class:`CayleyGroup` -- an explicit multiplication table (validated);
* :class:`DirectProduct` -- componentwise product with packed indices.

Derived data (conjugacy classes, center, the probabilities kappa, rho and
cp) is computed lazily and cached per instance; all values are exact
``fractions.Fraction``.  The composition convention is left-to-right:
``mul(a, b)`` is "apply a, then b" for permutation groups.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "GroupError",
    "ClosureCapError",
    "InvalidPermutationError",
    "NotSubgroupError",
    "NotNormalError",
    "GroupParseError",
    "FiniteGroup",
    "PermutationGroup",
    "CayleyGroup",
    "DirectProduct",
    "ConjugacyTable",
    "conjugacy_table",
    "kappa_g",
    "rho_g",
    "cp_g",
    "commuting_pair_count",
    "center",
    "is_abelian",
    "is_2_engel",
    "subgroup_closure",
    "subgroup_as_group",
    "quotient_group",
    "direct_product",
    "element_orders",
    "verify_lower_gap",
    "verify_upper_gap",
    "verify_frobenius_formula",
    "verify_quotient_monotone",
    "remarks_report",
    "parse_group_file",
    "render_group_file",
    "group_from_text",
    "LowerGapReport",
    "UpperGapReport",
    "FrobeniusReport",
    "QuotientReport",
    "RemarksReport",
]

DEFAULT_CLOSURE_CAP = 100_000
_TABLE_LIMIT = 1024  # materialise a full multiplication table below this order


class GroupError(ValueError):
    """Base class for group construction and verification errors."""


class ClosureCapError(GroupError):
    pass


class InvalidPermutationError(GroupError):
    pass


class NotSubgroupError(GroupError):
    pass


class NotNormalError(GroupError):
    pass


class GroupParseError(GroupError):
    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class FiniteGroup:
    """Base class: indexed elements, index 0 the identity."""

    order: int
    name: str

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def inv(self, a: int) -> int:
        raise NotImplementedError

    def elements(self) -> range:
        return range(self.order)

    def element_name(self, a: int) -> str:
        return str(a)

    # -- lazily cached derived data ------------------------------------

    def _mul_fast(self):
        """Row-indexed multiplication table when the order is small."""
        table = getattr(self, "_table_rows", None)
        if table is None:
            if self.order <= _TABLE_LIMIT:
                mul = self.mul
                table = [
                    [mul(a, b) for b in range(self.order)] for a in range(self.order)
                ]
            else:
                table = False
            self._table_rows = table
        return table

    def generating_indices(self) -> list[int]:
        gens = getattr(self, "_generators", None)
        if gens is None:
            gens = _greedy_generators(self)
            self._generators = gens
        return gens

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name!r} of order {self.order}>"


def _greedy_generators(group: FiniteGroup) -> list[int]:
    generators: list[int] = []
    closed = {0}
    for candidate in range(1, group.order):
        if candidate in closed:
            continue
        generators.append(candidate)
        closed = set(subgroup_closure(group, generators))
        if len(closed) == group.order:
            break
    return generators


# ---------------------------------------------------------------------------
# Concrete constructions
# ---------------------------------------------------------------------------


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # apply p, then q
    return tuple(q[p[x]] for x in range(len(p)))


class PermutationGroup(FiniteGroup):
    """Closure of permutation generators, elements in BFS order.

    The element order is deterministic: breadth-first from the identity,
    multiplying on the right by the generators in the order given.
    """

    def __init__(
        self,
        degree: int,
        generators: Sequence[tuple[int, ...]],
        name: str = "",
        closure_cap: int = DEFAULT_CLOSURE_CAP,
    ) -> None:
        if degree < 0:
            raise InvalidPermutationError("degree must be nonnegative")
        for g in generators:
            if len(g) != degree or sorted(g) != list(range(degree)):
                raise InvalidPermutationError(
                    f"not a permutation of 0..{degree - 1}: {g!r}"
                )
        identity = tuple(range(degree))
        elements: list[tuple[int, ...]] = [identity]
        index: dict[tuple[int, ...], int] = {identity: 0}
        frontier = [identity]
        while frontier:
            next_frontier = []
            for elt in frontier:
                for gen in generators:
                    product = _compose(elt, gen)
                    if product not in index:
                        index[product] = len(elements)
                        elements.append(product)
                        next_frontier.append(product)
                        if len(elements) > closure_cap:
                            raise ClosureCapError(
                                f"closure exceeded the cap of {closure_cap} elements"
                            )
            frontier = next_frontier
        self.degree = degree
        self.perms = elements
        self._index = index
        self.order = len(elements)
        self.name = name or f"perm<{degree}>"
        self.gen_perms = list(generators)
        self._generators = [index[g] for g in generators if g != identity] or [0]

    def mul(self, a: int, b: int) -> int:
        return self._index[_compose(self.perms[a], self.perms[b])]

    def inv(self, a: int) -> int:
        p = self.perms[a]
        out = [0] * self.degree
        for x, y in enumerate(p):
            out[y] = x
        return self._index[tuple(out)]

    def element_name(self, a: int) -> str:
        return _cycle_notation(self.perms[a])


def _cycle_notation(perm: tuple[int, ...]) -> str:
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cycle = [start]
        seen[start] = True
        x = perm[start]
        while x != start:
            seen[x] = True
            cycle.append(x)
            x = perm[x]
        cycles.append("(" + " ".join(str(v + 1) for v in cycle) + ")")
    return "".join(cycles) if cycles else "()"


class CayleyGroup(FiniteGroup):
    """Group given by an explicit multiplication table on 0..n-1.

    Validation checks the identity at index 0, the latin-square property,
    two-sided inverses, and associativity via Light's test over a greedy
    generating set (sufficient for a quasigroup with identity).
    """

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        name: str = "",
        element_names: Sequence[str] | None = None,
        validate: bool = True,
    ) -> None:
        n = len(table)
        self.order = n
        self.table = [list(row) for row in table]
        self.name = name or f"cayley<{n}>"
        self._element_names = list(element_names) if element_names else None
        self._inverse = [0] * n
        if any(len(row) != n for row in self.table):
            raise GroupError("multiplication table is not square")
        for i, row in enumerate(self.table):
            if sorted(row) != list(range(n)):
                raise GroupError(f"row {i} is not a permutation of 0..{n - 1}")
        for j in range(n):
            if sorted(self.table[i][j] for i in range(n)) != list(range(n)):
                raise GroupError(f"column {j} is not a permutation of 0..{n - 1}")
        if any(self.table[0][j] != j for j in range(n)) or any(
            self.table[i][0] != i for i in range(n)
        ):
            raise GroupError("index 0 is not a two-sided identity")
        for i in range(n):
            hits = [j for j in range(n) if self.table[i][j] == 0]
            if len(hits) != 1 or self.table[hits[0]][i] != 0:
                raise GroupError(f"element {i} lacks a two-sided inverse")
            self._inverse[i] = hits[0]
        if validate:
            self._light_associativity_test()

    def _light_associativity_test(self) -> None:
        table = self.table
        for g in self.generating_indices():
            row_g = table[g]
            for a in range(self.order):
                ag = table[a][g]
                row_a = table[a]
                for b in range(self.order):
                    if table[ag][b] != row_a[row_g[b]]:
                        raise GroupError(
                            f"associativity fails at ({a}, {g}, {b})"
                        )

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inverse[a]

    def element_name(self, a: int) -> str:
        if self._element_names:
            return self._element_names[a]
        return str(a)


class DirectProduct(FiniteGroup):
    """Componentwise product; index of (a, b) is ``a * |H| + b``."""

    def __init__(self, g: FiniteGroup, h: FiniteGroup, name: str = "") -> None:
        self.g = g
        self.h = h
        self.order = g.order * h.order
        self.name = name or f"{g.name}x{h.name}"

    def mul(self, a: int, b: int) -> int:
        a1, a2 = divmod(a, self.h.order)
        b1, b2 = divmod(b, self.h.order)
        return self.g.mul(a1, b1) * self.h.order + self.h.mul(a2, b2)

    def inv(self, a: int) -> int:
        a1, a2 = divmod(a, self.h.order)
        return self.g.inv(a1) * self.h.order + self.h.inv(a2)

    def element_name(self, a: int) -> str:
        a1, a2 = divmod(a, self.h.order)
        return f"({self.g.element_name(a1)},{self.h.element_name(a2)})"


def direct_product(g: FiniteGroup, h: FiniteGroup) -> DirectProduct:
    return DirectProduct(g, h)


# ---------------------------------------------------------------------------
# Conjugacy data and probabilities
# ---------------------------------------------------------------------------


@dataclass
class ConjugacyTable:
    """Conjugacy classes of a group; class 0 is the identity's class."""

    class_count: int
    class_of: list[int]
    class_sizes: list[int]
    centralizer_orders: list[int]
    representatives: list[int]


def conjugacy_table(group: FiniteGroup) -> ConjugacyTable:
    cached = getattr(group, "_conjugacy", None)
    if cached is not None:
        return cached
    order = group.order
    gens = group.generating_indices()
    table = group._mul_fast()
    if table:
        mul = lambda a, b: table[a][b]
    else:
        mul = group.mul
    inv = group.inv
    inv_gens = [(g, inv(g)) for g in gens]
    class_of = [-1] * order
    sizes: list[int] = []
    reps: list[int] = []
    for start in range(order):
        if class_of[start] != -1:
            continue
        cls = len(reps)
        reps.append(start)
        class_of[start] = cls
        orbit = [start]
        frontier = [start]
        while frontier:
            new_frontier = []
            for x in frontier:
                for g, gi in inv_gens:
                    y = mul(gi, mul(x, g))
                    if class_of[y] == -1:
                        class_of[y] = cls
                        orbit.append(y)
                        new_frontier.append(y)
            frontier = new_frontier
        sizes.append(len(orbit))
    centralizers = [order // s for s in sizes]
    result = ConjugacyTable(len(reps), class_of, sizes, centralizers, reps)
    group._conjugacy = result
    return result


def kappa_g(group: FiniteGroup) -> Fraction:
    """Probability that two independent uniform elements are conjugate:
    the sum of squared class sizes over the squared order."""
    table = conjugacy_table(group)
    return Fraction(sum(s * s for s in table.class_sizes), group.order**2)


def _class_commute_matrix(group: FiniteGroup) -> list[set[int]]:
    """For each class, the set of classes meeting the centralizer of its
    representative.  Commuting of classes is conjugation-invariant, so one
    representative per class suffices."""
    cached = getattr(group, "_class_commutes", None)
    if cached is not None:
        return cached
    table = conjugacy_table(group)
    mtable = group._mul_fast()
    if mtable:
        mul = lambda a, b: mtable[a][b]
    else:
        mul = group.mul
    out: list[set[int]] = []
    for rep in table.representatives:
        met = set()
        for x in range(group.order):
            if mul(x, rep) == mul(rep, x):
                met.add(table.class_of[x])
        out.append(met)
    group._class_commutes = out
    return out


def rho_g(group: FiniteGroup) -> Fraction:
    """Probability that two independent uniform elements have conjugates
    that commute."""
    table = conjugacy_table(group)
    commutes = _class_commute_matrix(group)
    total = 0
    for c, met in enumerate(commutes):
        for d in met:
            total += table.class_sizes[c] * table.class_sizes[d]
    return Fraction(total, group.order**2)


def cp_g(group: FiniteGroup) -> Fraction:
    """Commuting probability", equals (number of classes) / order."""
    return Fraction(conjugacy_table(group).class_count, group.order)


def commuting_pair_count(group: FiniteGroup) -> int:
    """Directly counted number of ordered commuting pairs."""
    table = group._mul_fast()
    if table:
        return sum(
            1
            for a in range(group.order)
            for b in range(group.order)
            if table[a][b] == table[b][a]
        )
    return sum(
        1
        for a in range(group.order)
        for b in range(group.order)
        if group.mul(a, b) == group.mul(b, a)
    )


def center(group: FiniteGroup) -> list[int]:
    gens = group.generating_indices()
    return [
        x
        for x in range(group.order)
        if all(group.mul(x, g) == group.mul(g, x) for g in gens)
    ]


def is_abelian(group: FiniteGroup) -> bool:
    return len(center(group)) == group.order


def is_2_engel(group: FiniteGroup) -> bool:
    """Exhaustive check of the identity [x, [x, g]] = 1 for all x, g."""
    table = group._mul_fast()
    mul = (lambda a, b: table[a][b]) if table else group.mul
    inv = group.inv
    for x in range(group.order):
        xi = inv(x)
        for g in range(group.order):
            c = mul(mul(xi, inv(g)), mul(x, g))
            if mul(mul(xi, inv(c)), mul(x, c)) != 0:
                return False
    return True


def element_orders(group: FiniteGroup) -> list[int]:
    orders = []
    for x in range(group.order):
        k, y = 1, x
        while y != 0:
            y = group.mul(y, x)
            k += 1
        orders.append(k)
    return orders


# ---------------------------------------------------------------------------
# Subgroups and quotients
# ---------------------------------------------------------------------------


def subgroup_closure(group: FiniteGroup, generators: Iterable[int]) -> list[int]:
    """Elements of the subgroup generated by the given element indices."""
    elements = [0]
    seen = {0}
    frontier = [0]
    gen_list = [g for g in generators]
    while frontier:
        new_frontier = []
        for x in frontier:
            for g in gen_list:
                y = group.mul(x, g)
                if y not in seen:
                    seen.add(y)
                    elements.append(y)
                    new_frontier.append(y)
        frontier = new_frontier
    return sorted(seen)


def _check_subgroup(group: FiniteGroup, subset: Sequence[int]) -> None:
    members = set(subset)
    if 0 not in members:
        raise NotSubgroupError("subset does not contain the identity")
    for a in subset:
        if group.inv(a) not in members:
            raise NotSubgroupError(f"subset not closed under inverse at {a}")
        for b in subset:
            if group.mul(a, b) not in members:
                raise NotSubgroupError(f"subset not closed under product at ({a}, {b})")


def _check_normal(group: FiniteGroup, subset: Sequence[int]) -> None:
    members = set(subset)
    for g in range(group.order):
        gi = group.inv(g)
        for x in subset:
            if group.mul(gi, group.mul(x, g)) not in members:
                raise NotNormalError(f"subset is not normal (conjugation by {g})")


def subgroup_as_group(
    group: FiniteGroup, subset: Sequence[int], name: str = ""
) -> CayleyGroup:
    """The subgroup on the given indices as a group in its own right."""
    _check_subgroup(group, subset)
    members = sorted(set(subset))
    position = {m: i for i, m in enumerate(members)}
    table = [[position[group.mul(a, b)] for b in members] for a in members]
    return CayleyGroup(
        table,
        name=name or f"{group.name}-sub{len(members)}",
        element_names=[group.element_name(m) for m in members],
        validate=False,
    )


def quotient_group(
    group: FiniteGroup, normal_subset: Sequence[int], name: str = ""
) -> CayleyGroup:
    """Quotient by a normal subgroup given as element indices.

    Both the subgroup property and normality are verified exhaustively.
    Cosets are indexed by their minimal element, ascending, which puts the
    identity coset at index 0.
    """
    _check_subgroup(group, normal_subset)
    _check_normal(group, normal_subset)
    members = sorted(set(normal_subset))
    coset_of: dict[int, int] = {}
    coset_reps: list[int] = []
    for g in range(group.order):
        if g in coset_of:
            continue
        rep_id = len(coset_reps)
        coset_reps.append(g)
        for x in members:
            coset_of[group.mul(g, x)] = rep_id
    table = [
        [coset_of[group.mul(a, b)] for b in coset_reps] for a in coset_reps
    ]
    return CayleyGroup(
        table,
        name=name or f"{group.name}/N{len(members)}",
        validate=False,
    )


# ---------------------------------------------------------------------------
# Verification reports
# ---------------------------------------------------------------------------


@dataclass
class LowerGapReport:
    """kappa is at least 7/(4 order) for non-abelian groups, with equality
    exactly when the center has index 4; abelian groups sit at 1/order."""

    group: str
    order: int
    kappa: Fraction
    abelian: bool
    center_index: int
    equality: bool
    passed: bool


def verify_lower_gap(group: FiniteGroup) -> LowerGapReport:
    kappa = kappa_g(group)
    z = len(center(group))
    abelian = z == group.order
    bound = Fraction(7, 4 * group.order)
    if abelian:
        passed = kappa == Fraction(1, group.order)
        equality = False
    else:
        equality = kappa == bound
        passed = kappa >= bound and (equality == (group.order // z == 4))
    return LowerGapReport(
        group.name, group.order, kappa, abelian, group.order // z, equality, passed
    )


# sorted centralizer-order prefixes that a group with kappa >= 1/4 and
# order > 4 must match (smallest centralizers first)
_PROFILE_CASES = {
    "i": (2,),
    "ii": (3, 3),
    "iii": (3, 4, 4),
    "iv": (3, 4, 5, 5),
}


@dataclass
class UpperGapReport:
    group: str
    order: int
    kappa: Fraction
    ge_quarter: bool
    case: str | None
    involution_formula: bool | None
    passed: bool


def verify_upper_gap(group: FiniteGroup) -> UpperGapReport:
    """Check the centralizer-profile classification of groups with
    ``kappa >= 1/4``.

    For such groups of order > 4 the two smallest centralizer orders must
    match one of four fixed prefixes; in the self-centralizing-involution
    case (smallest centralizer of order 2) the exact value
    ``kappa = 1/4 + 1/order - 1/order**2`` is also asserted.
    """
    kappa = kappa_g(group)
    ge_quarter = kappa >= Fraction(1, 4)
    case = None
    involution_formula = None
    passed = True
    if ge_quarter and group.order > 4:
        profile = sorted(conjugacy_table(group).centralizer_orders)
        for label, prefix in _PROFILE_CASES.items():
            if tuple(profile[: len(prefix)]) == prefix:
                case = label
                break
        passed = case is not None
        if case == "i":
            expected = Fraction(1, 4) + Fraction(1, group.order) - Fraction(
                1, group.order**2
            )
            involution_formula = kappa == expected
            passed = passed and involution_formula
    return UpperGapReport(
        group.name, group.order, kappa, ge_quarter, case, involution_formula, passed
    )


@dataclass
class FrobeniusReport:
    group: str
    kappa: Fraction
    predicted: Fraction
    passed: bool


def verify_frobenius_formula(
    group: FiniteGroup, kernel: Sequence[int], stabiliser: Sequence[int]
) -> FrobeniusReport:
    """Check the kernel/stabiliser decomposition formula

        kappa(G) = 1/|G|**2 + (kappa(K) - 1/|K|**2)/|H| + kappa(H) - 1/|H|**2

    after verifying that (K, H) really is a Frobenius pair: K normal,
    K.H = G, trivial intersection, and no non-identity element of H
    commuting with a non-identity element of K.
    """
    kernel = sorted(set(kernel))
    stabiliser = sorted(set(stabiliser))
    _check_subgroup(group, kernel)
    _check_normal(group, kernel)
    _check_subgroup(group, stabiliser)
    if set(kernel) & set(stabiliser) != {0}:
        raise GroupError("kernel and stabiliser intersect nontrivially")
    if len(kernel) * len(stabiliser) != group.order:
        raise GroupError("kernel and stabiliser do not factor the group")
    for h in stabiliser:
        if h == 0:
            continue
        for k in kernel:
            if k == 0:
                continue
            if group.mul(h, k) == group.mul(k, h):
                raise GroupError(
                    "Frobenius condition fails: commuting non-identity pair"
                )
    k_group = subgroup_as_group(group, kernel, name="kernel")
    h_group = subgroup_as_group(group, stabiliser, name="stabiliser")
    kk, kh = kappa_g(k_group), kappa_g(h_group)
    predicted = (
        Fraction(1, group.order**2)
        + (kk - Fraction(1, len(kernel) ** 2)) / len(stabiliser)
        + (kh - Fraction(1, len(stabiliser) ** 2))
    )
    kappa = kappa_g(group)
    return FrobeniusReport(group.name, kappa, predicted, kappa == predicted)


@dataclass
class QuotientReport:
    group: str
    kappa_group: Fraction
    kappa_quotient: Fraction
    passed: bool


def verify_quotient_monotone(
    group: FiniteGroup, normal_subset: Sequence[int]
) -> QuotientReport:
    """Strict increase of kappa when passing to a proper quotient."""
    if len(set(normal_subset)) <= 1:
        raise GroupError("normal subgroup must be non-trivial")
    quotient = quotient_group(group, normal_subset)
    kg, kq = kappa_g(group), kappa_g(quotient)
    return QuotientReport(group.name, kg, kq, kg < kq)


@dataclass
class RemarksReport:
    group: str
    rho: Fraction
    kappa: Fraction
    cp: Fraction
    abelian: bool
    engel2: bool
    rho_is_one_iff_abelian: bool
    rho_eq_cp_iff_engel2: bool
    rho_ge_kappa: bool
    order_rho_is_integer: bool  # observation only, never asserted

    @property
    def passed(self) -> bool:
        return (
            self.rho_is_one_iff_abelian
            and self.rho_eq_cp_iff_engel2
            and self.rho_ge_kappa
        )


def remarks_report(group: FiniteGroup) -> RemarksReport:
    """Structural facts relating rho, cp and kappa on one group.

    rho = 1 exactly for abelian groups; rho never falls below kappa (a pair
    of conjugates trivially has commuting conjugates); and rho collapses to
    the plain commuting probability cp exactly for groups satisfying the
    second Engel identity [x, [x, g]] = 1, since those are the groups in
    which every centralizer is normal (so commuting with a conjugate already
    implies commuting).  Whether order * rho is an integer is reported as an
    observation, never asserted.
    """
    rho = rho_g(group)
    kappa = kappa_g(group)
    cp = cp_g(group)
    abelian = is_abelian(group)
    engel2 = is_2_engel(group)
    order_rho = group.order * rho
    return RemarksReport(
        group=group.name,
        rho=rho,
        kappa=kappa,
        cp=cp,
        abelian=abelian,
        engel2=engel2,
        rho_is_one_iff_abelian=(rho == 1) == abelian,
        rho_eq_cp_iff_engel2=(rho == cp) == engel2,
        rho_ge_kappa=rho >= kappa,
        order_rho_is_integer=order_rho.denominator == 1,
    )


# ---------------------------------------------------------------------------
# Text format for user-supplied groups
# ---------------------------------------------------------------------------


@dataclass
class ParsedGroup:
    kind: str  # "generators" | "cayley"
    degree: int  # degree for generators, order for cayley
    generators: list[tuple[int, ...]]
    table: list[list[int]]


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_group_file(text: str) -> ParsedGroup:
    """Parse the group description format.

    Either ``degree d`` followed by one generator per line in cycle notation
    with 1-based points, or ``cayley n`` followed by n rows of n indices.
    Parse errors carry 1-based line numbers.
    """
    lines = text.splitlines()
    header_no = 0
    header = ""
    for i, raw in enumerate(lines, start=1):
        if raw.strip() and not raw.strip().startswith("#"):
            header_no, header = i, raw.strip()
            break
    if not header:
        raise GroupParseError(1, "empty group description")
    fields = header.split()
    if len(fields) != 2 or fields[0] not in ("degree", "cayley"):
        raise GroupParseError(header_no, f"expected 'degree d' or 'cayley n', got {header!r}")
    try:
        size = int(fields[1])
    except ValueError:
        raise GroupParseError(header_no, f"not an integer: {fields[1]!r}") from None
    if size < 1:
        raise GroupParseError(header_no, "size must be positive")

    body = [
        (i, raw.strip())
        for i, raw in enumerate(lines, start=1)
        if i > header_no and raw.strip() and not raw.strip().startswith("#")
    ]
    if fields[0] == "degree":
        generators = [_parse_cycles(line, size, line_no) for line_no, line in body]
        if not generators:
            raise GroupParseError(header_no, "no generators given")
        return ParsedGroup("generators", size, generators, [])
    rows = []
    for line_no, line in body:
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise GroupParseError(line_no, f"non-integer entry in {line!r}") from None
        if len(row) != size:
            raise GroupParseError(line_no, f"expected {size} entries, got {len(row)}")
        if any(not 0 <= v < size for v in row):
            raise GroupParseError(line_no, "entry out of range")
        rows.append(row)
    if len(rows) != size:
        raise GroupParseError(
            header_no, f"expected {size} table rows, got {len(rows)}"
        )
    return ParsedGroup("cayley", size, [], rows)


def _parse_cycles(line: str, degree: int, line_no: int) -> tuple[int, ...]:
    stripped = _CYCLE_RE.sub("", line).strip()
    if stripped:
        raise GroupParseError(line_no, f"unexpected text {stripped!r}")
    perm = list(range(degree))
    used: set[int] = set()
    for body in _CYCLE_RE.findall(line):
        points = []
        for token in body.replace(",", " ").split():
            try:
                value = int(token)
            except ValueError:
                raise GroupParseError(line_no, f"bad point {token!r}") from None
            if not 1 <= value <= degree:
                raise GroupParseError(line_no, f"point {value} out of range 1..{degree}")
            if value - 1 in used:
                raise GroupParseError(line_no, f"point {value} repeated")
            used.add(value - 1)
            points.append(value - 1)
        for i, point in enumerate(points):
            perm[point] = points[(i + 1) % len(points)]
    return tuple(perm)


def render_group_file(parsed: ParsedGroup) -> str:
    """Canonical rendering of a parsed description (parse/render round-trips
    to an identical structure)."""
    if parsed.kind == "generators":
        lines = [f"degree {parsed.degree}"]
        lines.extend(_cycle_notation(g) for g in parsed.generators)
        return "\n".join(lines) + "\n"
    lines = [f"cayley {parsed.degree}"]
    lines.extend(" ".join(str(v) for v in row) for row in parsed.table)
    return "\n".join(lines) + "\n"


def group_from_text(text: str, name: str = "", closure_cap: int = DEFAULT_CLOSURE_CAP) -> FiniteGroup:
    parsed = parse_group_file(text)
    if parsed.kind == "generators":
        return PermutationGroup(
            parsed.degree, parsed.generators, name=name or "user-group", closure_cap=closure_cap
        )
    return CayleyGroup(parsed.table, name=name or "user-group")
