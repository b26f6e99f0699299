"""Built-in catalog of named finite groups.

Constructors, not data files: cyclic groups, dihedral and generalized
dihedral groups, the quaternion group, symmetric and alternating groups of
small degree, the Frobenius groups of orders 20 and 21, the simple group of
order 168 acting on the projective line over the 7-element field, and
direct products of any of these (spelled ``axb`` with an ``x``).

``resolve("d8xc3")`` therefore yields the order-24 product.  The catalog
also carries the list of group pairs asserted to share the normalised
conjugacy probability ``kappa * order`` (the order-8 dihedral/quaternion
pair and its products with abelian factors), used by the invariance checks.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce

from conjprob.groups import (
    CayleyGroup,
    DirectProduct,
    FiniteGroup,
    GroupError,
    PermutationGroup,
    direct_product,
    kappa_g,
)

__all__ = [
    "cyclic",
    "dihedral",
    "generalized_dihedral",
    "quaternion8",
    "symmetric_group",
    "alternating_group",
    "psl2_7",
    "frobenius_metacyclic",
    "resolve",
    "catalog_names",
    "SUITE_GROUPS",
    "ISOCLINIC_PAIRS",
    "PRODUCT_PAIRS",
    "verify_isoclinism_invariant",
]


def cyclic(n: int) -> CayleyGroup:
    if n < 1:
        raise GroupError("order must be positive")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return CayleyGroup(table, name=f"c{n}", validate=False)


def generalized_dihedral(abelian: FiniteGroup, name: str = "") -> CayleyGroup:
    """Split extension of an abelian group by the inverting involution.

    Elements are pairs (a, e) with e in {0, 1}; (a, 0)(b, 1) = (a + b, 1)
    and conjugation by (0, 1) inverts the abelian part.  For cyclic input of
    order n this is the dihedral group of order 2n.
    """
    order_a = abelian.order
    size = 2 * order_a

    def pack(a: int, flip: int) -> int:
        return flip * order_a + a

    table = [[0] * size for _ in range(size)]
    for a in range(order_a):
        for e in (0, 1):
            for b in range(order_a):
                for f in (0, 1):
                    bb = abelian.inv(b) if e else b
                    table[pack(a, e)][pack(b, f)] = pack(abelian.mul(a, bb), e ^ f)
    return CayleyGroup(table, name=name or f"dih({abelian.name})", validate=False)


def dihedral(order: int) -> CayleyGroup:
    """Dihedral group of the given (even, >= 2) order."""
    if order % 2 or order < 2:
        raise GroupError("dihedral order must be even and positive")
    g = generalized_dihedral(cyclic(order // 2), name=f"d{order}")
    return g


_Q8_UNITS = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")
_Q8_AXIS = {("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j")}


def quaternion8() -> CayleyGroup:
    def mult(x: str, y: str) -> str:
        sx, ax = (-1 if x.startswith("-") else 1), x.lstrip("-")
        sy, ay = (-1 if y.startswith("-") else 1), y.lstrip("-")
        sign = sx * sy
        if ax == "1":
            axis = ay
        elif ay == "1":
            axis = ax
        elif ax == ay:
            sign, axis = -sign, "1"
        elif (ax, ay) in _Q8_AXIS:
            s, axis = _Q8_AXIS[(ax, ay)]
            sign *= s
        else:
            s, axis = _Q8_AXIS[(ay, ax)]
            sign *= -s
        return axis if sign == 1 else f"-{axis}"

    index = {u: i for i, u in enumerate(_Q8_UNITS)}
    table = [
        [index[mult(a, b)] for b in _Q8_UNITS] for a in _Q8_UNITS
    ]
    return CayleyGroup(table, name="q8", element_names=list(_Q8_UNITS))


def symmetric_group(n: int) -> PermutationGroup:
    if n < 1:
        raise GroupError("degree must be positive")
    if n == 1:
        return PermutationGroup(1, [(0,)], name="s1")
    cycle = tuple(list(range(1, n)) + [0])
    swap = tuple([1, 0] + list(range(2, n)))
    return PermutationGroup(n, [swap, cycle], name=f"s{n}")


def alternating_group(n: int) -> PermutationGroup:
    if n < 3:
        raise GroupError("degree must be at least 3")
    three = tuple([1, 2, 0] + list(range(3, n)))
    if n == 3:
        gens = [three]
    elif n % 2:
        gens = [three, tuple(list(range(1, n)) + [0])]
    else:
        gens = [three, tuple([0] + list(range(2, n)) + [1])]
    return PermutationGroup(n, gens, name=f"a{n}")


def psl2_7() -> PermutationGroup:
    """The simple group of order 168 acting on the 8-point projective line
    over the field with 7 elements (points 0..6 and an eighth for infinity).
    Generators: translation x -> x + 1 and inversion x -> -1/x."""
    infinity = 7
    translation = tuple([(x + 1) % 7 for x in range(7)] + [infinity])
    inversion = [0] * 8
    inversion[0] = infinity
    inversion[infinity] = 0
    for x in range(1, 7):
        inversion[x] = (-pow(x, 5, 7)) % 7
    return PermutationGroup(8, [translation, tuple(inversion)], name="psl27")


def frobenius_metacyclic(p: int, h_order: int, multiplier: int, name: str) -> PermutationGroup:
    """The group of maps x -> m^i x + c on the p-element field, with m of
    multiplicative order ``h_order``; a Frobenius group of order p * h_order."""
    if pow(multiplier, h_order, p) != 1:
        raise GroupError("multiplier order does not divide h_order")
    translation = tuple((x + 1) % p for x in range(p))
    scaling = tuple((multiplier * x) % p for x in range(p))
    group = PermutationGroup(p, [translation, scaling], name=name)
    if group.order != p * h_order:
        raise GroupError("unexpected closure order")
    return group


_ATOMS = {
    "q8": quaternion8,
    "psl27": psl2_7,
    "c7:c3": lambda: frobenius_metacyclic(7, 3, 2, "c7:c3"),
    "f21": lambda: frobenius_metacyclic(7, 3, 2, "c7:c3"),
    "c5:c4": lambda: frobenius_metacyclic(5, 4, 2, "c5:c4"),
    "f20": lambda: frobenius_metacyclic(5, 4, 2, "c5:c4"),
}

_CYCLIC_RE = re.compile(r"^c(\d+)$")
_DIHEDRAL_RE = re.compile(r"^d(\d+)$")
_SYMMETRIC_RE = re.compile(r"^s(\d+)$")
_ALTERNATING_RE = re.compile(r"^a(\d+)$")


def _resolve_atom(name: str) -> FiniteGroup:
    if name in _ATOMS:
        return _ATOMS[name]()
    if m := _CYCLIC_RE.match(name):
        return cyclic(int(m.group(1)))
    if m := _DIHEDRAL_RE.match(name):
        return dihedral(int(m.group(1)))
    if m := _SYMMETRIC_RE.match(name):
        degree = int(m.group(1))
        if degree > 8:
            raise GroupError(f"symmetric degree capped at 8, got {degree}")
        return symmetric_group(degree)
    if m := _ALTERNATING_RE.match(name):
        degree = int(m.group(1))
        if degree > 8:
            raise GroupError(f"alternating degree capped at 8, got {degree}")
        return alternating_group(degree)
    raise GroupError(f"unknown catalog group {name!r}")


def resolve(name: str) -> FiniteGroup:
    """Look up a catalog group; ``x`` builds direct products, e.g. d8xc3."""
    factors = name.strip().lower().split("x")
    if not all(factors):
        raise GroupError(f"malformed catalog name {name!r}")
    groups = [_resolve_atom(f) for f in factors]
    product = reduce(direct_product, groups)
    product.name = name.strip().lower()
    return product


def catalog_names() -> list[str]:
    return sorted(_ATOMS) + ["c<n>", "d<2n>", "s<n<=8>", "a<n<=8>", "<name>x<name>"]


# Groups swept by the verification suites: small abelian groups, dihedral
# groups of twice-odd order (the self-centralizing-involution family),
# everything with kappa >= 1/4, and a few products.
SUITE_GROUPS = [
    "c2",
    "c3",
    "c4",
    "c5",
    "c6",
    "c7",
    "c9",
    "c15",
    "c2xc2",
    "d6",
    "d8",
    "d10",
    "d12",
    "d14",
    "d18",
    "d30",
    "q8",
    "a4",
    "s4",
    "a5",
    "s5",
    "s6",
    "c7:c3",
    "c5:c4",
    "psl27",
    "d8xc3",
    "d8xc5",
    "q8xc3",
    "s3xc2",
]

# Pairs sharing kappa * order (order-8 dihedral vs quaternion, alone and
# against abelian factors).  General detection of this equivalence is out
# of scope; only listed pairs are accepted.
ISOCLINIC_PAIRS = [
    ("d8", "q8"),
    ("d8", "d8xc3"),
    ("d8", "q8xc3"),
    ("d8xc3", "q8xc3"),
    ("d8xc5", "q8xc5"),
    ("d8xc2", "q8xc2"),
]

# Product pairs for the multiplicativity check kappa(G x H) = kappa(G) kappa(H).
PRODUCT_PAIRS = [
    ("c2", "c3"),
    ("c3", "c3"),
    ("d8", "c3"),
    ("d8", "c5"),
    ("q8", "c3"),
    ("s3", "c2"),
    ("s3", "s3"),
    ("a4", "c2"),
    ("d10", "c3"),
    ("q8", "q8"),
]


def verify_isoclinism_invariant(name_g: str, name_h: str) -> tuple[Fraction, Fraction, bool]:
    """Check ``kappa(G) |G| == kappa(H) |H|`` for a listed pair.

    Returns the two normalised values and whether they agree; raises for
    pairs outside the catalog list (identical names pass trivially).
    """
    pair = (name_g, name_h)
    if name_g != name_h and pair not in ISOCLINIC_PAIRS and pair[::-1] not in ISOCLINIC_PAIRS:
        raise GroupError(f"pair {pair!r} is not in the catalog's invariance list")
    g, h = resolve(name_g), resolve(name_h)
    vg, vh = kappa_g(g) * g.order, kappa_g(h) * h.order
    return vg, vh, vg == vh
