from fractions import Fraction

import pytest

from conjprob import catalog
from conjprob.catalog import (
    ISOCLINIC_PAIRS,
    PRODUCT_PAIRS,
    SUITE_GROUPS,
    alternating_group,
    cyclic,
    dihedral,
    frobenius_metacyclic,
    generalized_dihedral,
    psl2_7,
    quaternion8,
    resolve,
    symmetric_group,
    verify_isoclinism_invariant,
)
from conjprob.groups import (
    CayleyGroup,
    ClosureCapError,
    GroupError,
    GroupParseError,
    InvalidPermutationError,
    NotNormalError,
    NotSubgroupError,
    PermutationGroup,
    center,
    commuting_pair_count,
    conjugacy_table,
    cp_g,
    direct_product,
    element_orders,
    group_from_text,
    is_2_engel,
    is_abelian,
    kappa_g,
    parse_group_file,
    quotient_group,
    remarks_report,
    render_group_file,
    rho_g,
    subgroup_closure,
    subgroup_as_group,
    verify_frobenius_formula,
    verify_lower_gap,
    verify_quotient_monotone,
    verify_upper_gap,
)


def double_transpositions(group):
    out = [0]
    for i, p in enumerate(group.perms):
        moved = [x for x in range(len(p)) if p[x] != x]
        if len(moved) == 4 and all(p[p[x]] == x for x in moved):
            out.append(i)
    return out


# -- constructions -----------------------------------------------------


def test_generator_closure_orders():
    assert symmetric_group(3).order == 6
    assert symmetric_group(7).order == 5040
    assert alternating_group(4).order == 12
    assert alternating_group(5).order == 60
    assert alternating_group(6).order == 360
    assert psl2_7().order == 168
    assert frobenius_metacyclic(5, 4, 2, "c5:c4").order == 20
    assert frobenius_metacyclic(7, 3, 2, "c7:c3").order == 21


def test_bfs_order_is_deterministic():
    a = symmetric_group(4)
    b = symmetric_group(4)
    assert a.perms == b.perms
    assert a.perms[0] == (0, 1, 2, 3)


def test_invalid_permutation_rejected():
    with pytest.raises(InvalidPermutationError):
        PermutationGroup(3, [(0, 0, 1)])
    with pytest.raises(InvalidPermutationError):
        PermutationGroup(3, [(0, 1)])


def test_closure_cap():
    with pytest.raises(ClosureCapError):
        symmetric = symmetric_group(7)
        PermutationGroup(7, symmetric.gen_perms, closure_cap=100)


def test_cayley_validation():
    cyclic(5)  # fine
    with pytest.raises(GroupError):
        CayleyGroup([[0, 1], [1, 1]])  # not latin
    with pytest.raises(GroupError):
        CayleyGroup([[1, 0], [0, 1]])  # identity not at 0
    # latin square with identity but not associative (order 5 loop)
    loop = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(GroupError, match="associativity"):
        CayleyGroup(loop)


def test_group_axioms_exhaustively_small():
    for name in ("c6", "d8", "q8", "c7:c3"):
        g = resolve(name)
        for a in range(g.order):
            assert g.mul(0, a) == a == g.mul(a, 0)
            assert g.mul(a, g.inv(a)) == 0 == g.mul(g.inv(a), a)
            for b in range(g.order):
                for c in range(g.order):
                    assert g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))


# -- conjugacy data ----------------------------------------------------


def test_abelian_conjugacy():
    g = cyclic(12)
    table = conjugacy_table(g)
    assert table.class_count == 12
    assert all(size == 1 for size in table.class_sizes)
    assert kappa_g(g) == Fraction(1, 12)
    assert rho_g(g) == 1
    assert cp_g(g) == 1


def test_s4_class_sizes():
    table = conjugacy_table(symmetric_group(4))
    assert sorted(table.class_sizes) == [1, 3, 6, 6, 8]
    assert table.class_sizes[0] == 1  # identity class first


def test_conjugacy_table_invariants():
    for name in ("s4", "a5", "psl27", "d18", "c7:c3"):
        g = resolve(name)
        table = conjugacy_table(g)
        assert sum(table.class_sizes) == g.order
        for size, cent in zip(table.class_sizes, table.centralizer_orders):
            assert size * cent == g.order
        # class closure soundness: conjugating a representative by each
        # generator stays inside the class
        for cls, rep in enumerate(table.representatives):
            for gen in g.generating_indices():
                conj = g.mul(g.inv(gen), g.mul(rep, gen))
                assert table.class_of[conj] == cls


def test_psl27_profile_and_kappa():
    g = psl2_7()
    assert sorted(conjugacy_table(g).centralizer_orders) == [3, 4, 7, 7, 8, 168]
    assert kappa_g(g) == Fraction(3247, 14112)


@pytest.mark.parametrize(
    "name,kappa",
    [
        ("s3", Fraction(7, 18)),
        ("s4", Fraction(73, 288)),
        ("a4", Fraction(7, 24)),
        ("a5", Fraction(457, 1800)),
        ("d8", Fraction(7, 32)),
        ("q8", Fraction(7, 32)),
        ("c7:c3", Fraction(13, 49)),
    ],
)
def test_kappa_known_values(name, kappa):
    assert kappa_g(resolve(name)) == kappa


def test_rho_and_cp_values():
    s3 = resolve("s3")
    assert rho_g(s3) == Fraction(2, 3)
    assert cp_g(s3) == Fraction(1, 2)
    q8 = quaternion8()
    # Q8 is 2-Engel, so rho collapses to the commuting probability
    assert rho_g(q8) == Fraction(5, 8) == cp_g(q8)
    assert is_2_engel(q8)
    d8 = dihedral(8)
    assert cp_g(d8) == Fraction(5, 8)


def test_kappa_at_least_reciprocal_class_count():
    for name in SUITE_GROUPS:
        g = resolve(name)
        k = conjugacy_table(g).class_count
        assert kappa_g(g) >= Fraction(1, k)
        assert (kappa_g(g) == Fraction(1, k)) == is_abelian(g)


def test_cp_equals_commuting_pair_fraction():
    for name in SUITE_GROUPS:
        g = resolve(name)
        if g.order > 500:
            continue
        assert cp_g(g) == Fraction(commuting_pair_count(g), g.order**2)


def test_cross_module_kappa_rho():
    from conjprob.commuting import CommuteTable
    from conjprob.symstats import StatsCache

    cache = StatsCache()
    table = CommuteTable()
    for n in range(1, 8):
        sn = symmetric_group(n)
        assert kappa_g(sn) == cache.kappa(n)
        assert rho_g(sn) == table.rho(n)


# -- subgroups and quotients ---------------------------------------------


def test_subgroup_closure_and_as_group():
    s4 = symmetric_group(4)
    orders = element_orders(s4)
    four_cycle = next(i for i, o in enumerate(orders) if o == 4)
    sub = subgroup_closure(s4, [four_cycle])
    assert len(sub) == 4
    as_group = subgroup_as_group(s4, sub)
    assert as_group.order == 4 and is_abelian(as_group)


def test_subgroup_validation():
    s4 = symmetric_group(4)
    orders = element_orders(s4)
    four_cycle = next(i for i, o in enumerate(orders) if o == 4)
    with pytest.raises(NotSubgroupError):
        quotient_group(s4, [0, four_cycle])  # not closed under product
    transposition = next(
        i
        for i, o in enumerate(orders)
        if o == 2 and i not in double_transpositions(s4)
    )
    h = subgroup_closure(s4, [transposition])
    with pytest.raises(NotNormalError):
        quotient_group(s4, h)


def test_quotient_s4_by_v4():
    s4 = symmetric_group(4)
    v4 = double_transpositions(s4)
    q = quotient_group(s4, v4)
    assert q.order == 6
    assert sorted(conjugacy_table(q).class_sizes) == [1, 2, 3]
    assert kappa_g(q) == Fraction(7, 18)


def test_quotient_by_trivial_is_copy():
    s4 = symmetric_group(4)
    q = quotient_group(s4, [0])
    assert q.order == 24
    assert kappa_g(q) == kappa_g(s4)
    assert sorted(conjugacy_table(q).class_sizes) == sorted(
        conjugacy_table(s4).class_sizes
    )


def test_quotient_q8_by_center():
    q8 = quaternion8()
    q = quotient_group(q8, center(q8))
    assert q.order == 4 and is_abelian(q)


@pytest.mark.parametrize(
    "builder,expected_pair",
    [
        ("s4", (Fraction(73, 288), Fraction(7, 18))),
        ("q8", (Fraction(7, 32), Fraction(1, 4))),
        ("a4", (Fraction(7, 24), Fraction(1, 3))),
    ],
)
def test_quotient_monotone(builder, expected_pair):
    g = resolve(builder)
    if builder == "q8":
        normal = center(g)
    else:
        normal = double_transpositions(g)
    rep = verify_quotient_monotone(g, normal)
    assert rep.passed
    assert (rep.kappa_group, rep.kappa_quotient) == expected_pair


# -- verifiers ------------------------------------------------------------


def test_lower_gap_reports():
    rep = verify_lower_gap(dihedral(8))
    assert rep.passed and rep.equality and rep.center_index == 4
    rep = verify_lower_gap(resolve("s3"))
    assert rep.passed and not rep.equality
    assert rep.kappa == Fraction(7, 18) > Fraction(7, 24)
    rep = verify_lower_gap(resolve("d8xc5"))
    assert rep.passed and rep.equality
    for name in SUITE_GROUPS:
        assert verify_lower_gap(resolve(name)).passed


def test_upper_gap_reports():
    rep = verify_upper_gap(resolve("a4"))
    assert rep.passed and rep.ge_quarter and rep.case == "ii"
    rep = verify_upper_gap(resolve("a5"))
    assert rep.passed and rep.ge_quarter and rep.case == "iv"
    assert rep.kappa == Fraction(457, 1800)
    rep = verify_upper_gap(resolve("s4"))
    assert rep.case == "iii"
    rep = verify_upper_gap(dihedral(18))
    assert rep.passed and rep.case == "i" and rep.involution_formula
    assert rep.kappa == Fraction(1, 4) + Fraction(1, 18) - Fraction(1, 324)
    rep = verify_upper_gap(psl2_7())
    assert rep.passed and not rep.ge_quarter
    for name in SUITE_GROUPS:
        assert verify_upper_gap(resolve(name)).passed


def test_involution_formula_on_dihedral_family():
    for order_a in (3, 5, 7, 9, 15):
        g = dihedral(2 * order_a)
        expected = Fraction(1, 4) + Fraction(1, g.order) - Fraction(1, g.order**2)
        assert kappa_g(g) == expected


def test_generalized_dihedral_noncyclic():
    a = direct_product(cyclic(3), cyclic(3))
    g = generalized_dihedral(a, name="dih(c3xc3)")
    assert g.order == 18
    expected = Fraction(1, 4) + Fraction(1, 18) - Fraction(1, 324)
    assert kappa_g(g) == expected


def test_frobenius_formula():
    for name, kernel_orders, stab_order, kappa in (
        ("s3", (1, 3), 2, Fraction(7, 18)),
        ("c7:c3", (1, 7), 3, Fraction(13, 49)),
        ("c5:c4", (1, 5), 4, Fraction(23, 100)),
    ):
        g = resolve(name)
        orders = element_orders(g)
        kernel = [i for i, o in enumerate(orders) if o in kernel_orders]
        seed = next(i for i, o in enumerate(orders) if o == stab_order)
        stabiliser = subgroup_closure(g, [seed])
        rep = verify_frobenius_formula(g, kernel, stabiliser)
        assert rep.passed and rep.kappa == kappa


def test_frobenius_precondition_rejected():
    # direct product is not Frobenius: everything in one factor commutes
    # with everything in the other
    g = resolve("c2xc2")
    with pytest.raises(GroupError, match="Frobenius"):
        verify_frobenius_formula(g, [0, 1], [0, 2])


def test_frobenius_limit_family():
    for m in (1, 2, 3):
        abelian = cyclic(3)
        for _ in range(m - 1):
            abelian = direct_product(abelian, cyclic(3))
        g = generalized_dihedral(abelian, name=f"dih(c3^{m})")
        order_k = 3**m
        predicted = (
            Fraction(1, g.order**2)
            + Fraction(1, 3) ** m / 2
            - Fraction(1, 2 * order_k**2)
            + Fraction(1, 2)
            - Fraction(1, 4)
        )
        assert kappa_g(g) == predicted


def test_isoclinism_invariant_pairs():
    for name_g, name_h in ISOCLINIC_PAIRS:
        vg, vh, ok = verify_isoclinism_invariant(name_g, name_h)
        assert ok and vg == Fraction(7, 4)
    vg, vh, ok = verify_isoclinism_invariant("s4", "s4")  # trivial pair
    assert ok
    with pytest.raises(GroupError):
        verify_isoclinism_invariant("s4", "a4")


def test_remarks_reports():
    q8 = quaternion8()
    rep = remarks_report(q8)
    assert rep.passed and rep.engel2 and rep.rho == rep.cp
    s3 = resolve("s3")
    rep = remarks_report(s3)
    assert rep.passed and not rep.engel2
    assert rep.rho == Fraction(2, 3) > rep.kappa == Fraction(7, 18)
    assert rep.order_rho_is_integer  # 6 * 2/3 = 4
    rep = remarks_report(dihedral(14))
    assert rep.passed and rep.rho > rep.kappa
    for name in SUITE_GROUPS:
        assert remarks_report(resolve(name)).passed


def test_kappa_multiplicative():
    for name_g, name_h in PRODUCT_PAIRS:
        g, h = resolve(name_g), resolve(name_h)
        assert kappa_g(direct_product(g, h)) == kappa_g(g) * kappa_g(h)


# -- text format -----------------------------------------------------------


def test_parse_generators():
    text = "degree 3\n(1 2 3)\n(1 2)\n"
    parsed = parse_group_file(text)
    assert parsed.kind == "generators" and parsed.degree == 3
    g = group_from_text(text)
    assert g.order == 6
    assert render_group_file(parsed) == text


def test_parse_cayley():
    text = "cayley 2\n0 1\n1 0\n"
    parsed = parse_group_file(text)
    assert parsed.kind == "cayley"
    g = group_from_text(text)
    assert g.order == 2
    assert render_group_file(parsed) == text


def test_parse_roundtrip_stability():
    text = "degree 5\n(1 2 3 4 5)\n(2 3 5 4)\n"
    parsed = parse_group_file(text)
    assert parse_group_file(render_group_file(parsed)) == parsed
    assert group_from_text(text).order == 20


def test_parse_errors_carry_line_numbers():
    with pytest.raises(GroupParseError, match="line 1"):
        parse_group_file("widget 3\n")
    with pytest.raises(GroupParseError, match="line 2"):
        parse_group_file("degree 3\n(1 4)\n")
    with pytest.raises(GroupParseError, match="line 2"):
        parse_group_file("degree 3\n(1 2 2)\n")
    with pytest.raises(GroupParseError, match="line 3"):
        parse_group_file("cayley 2\n0 1\n1 2\n")
    with pytest.raises(GroupParseError, match="line 2"):
        parse_group_file("cayley 2\n0 1 1\n1 0\n")


def test_catalog_product_grammar():
    g = resolve("d8xc3")
    assert g.order == 24
    assert kappa_g(g) == kappa_g(dihedral(8)) * Fraction(1, 3)
    with pytest.raises(GroupError):
        resolve("widget9")
