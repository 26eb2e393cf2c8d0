import pytest
from hypothesis import given, settings, strategies as st

from ingleton_groups.errors import CapExceededError, GroupError
from ingleton_groups.ffield import field_of_order
from ingleton_groups.groups import (
    ProjectivePoint,
    Subgroup,
    alternating_group,
    center,
    closure,
    conjugate,
    cyclic_group,
    dihedral_group,
    domain,
    element_order,
    enumerate_subgroups,
    format_generators,
    general_linear_group,
    intersect,
    is_normal,
    orbit,
    parse_generators,
    parse_group,
    point_stabilizer,
    preimage_subgroup,
    projective_linear_group,
    projective_map,
    quotient,
    set_product,
    set_product_commutes,
    setwise_stabilizer,
    subgroup_lattice,
    symmetric_group,
)
from ingleton_groups.families import gl2_context, gl2_tuple, pgl2_family, pgl2_tuple
from ingleton_groups.ingleton import ingleton_check, order_profile


def test_permutation_convention(s5):
    # GAP convention: (a*b) applies a first, then b
    a, b = s5.parse("(1,2)"), s5.parse("(2,3)")
    ab = s5.mul(a, b)
    assert s5.fmt(ab) == "(1,3,2)"
    assert s5.fmt(s5.parse("(1,2)(3,4,5)")) == "(1,2)(3,4,5)"
    assert s5.fmt(s5.identity) == "()"
    # conjugation x^g = g^-1 x g
    x, g = s5.parse("(1,3,4,2)"), s5.parse("(3,4,5)")
    assert s5.fmt(s5.conj(x, g)) == "(1,4,5,2)"


def test_closure_orders(s5):
    assert closure(s5, [s5.parse("(1,2,3,4,5)"), s5.parse("(1,4,3,5)")]).order == 20
    assert closure(s5, []).order == 1
    d = pgl2_family(5)
    G = d.group
    assert closure(G, [d.A[1], d.B]).order == 20


def test_s5_instance_intersections(s5, s5_tuple):
    G1, G2, G3, G4 = s5_tuple
    assert intersect(G2, G3) == closure(s5, [s5.parse("(1,3,4,2)")])
    assert intersect(G3, G3) == G3
    assert conjugate(G3, s5.parse("(3,4,5)")) == G4
    assert conjugate(G3, s5.identity) == G3
    assert not set_product_commutes(G1, G2)


def test_petals_meet_trivially():
    d = pgl2_family(7)
    H = d.H
    for a in range(1, 7):
        assert intersect(conjugate(H, d.A[a]), H).order == 1


def test_b3_is_conjugate_of_b():
    for q in (5, 7, 9):
        ctx = gl2_context(q)
        G = ctx.group
        B = closure(G, [ctx.mats["B"]])
        assert conjugate(B, ctx.A(1)) == closure(G, [ctx.mats["B3"]])


def test_commuting_products():
    A5 = alternating_group(5)
    S5 = symmetric_group(5)
    N = Subgroup(S5, A5.element_set)
    K = closure(S5, [S5.parse("(1,2)")])
    assert is_normal(N, S5)
    assert set_product_commutes(N, K)
    assert len(set_product(N, K)) == 120
    # instance 15 at p = 3 has G1 G2 = G2 G1
    G1, G2, _, _ = gl2_tuple(9, 15, strict=False)
    assert set_product_commutes(G1, G2)


def test_subgroup_counts():
    assert len(enumerate_subgroups(cyclic_group(6))) == 4
    assert len(enumerate_subgroups(symmetric_group(4))) == 30
    assert len(enumerate_subgroups(dihedral_group(8))) == 10
    assert len(enumerate_subgroups(alternating_group(4))) == 10
    lat = subgroup_lattice(symmetric_group(5))
    assert lat.size == 156 and len(lat.classes()) == 19
    assert len(enumerate_subgroups(alternating_group(5))) == 59
    assert len(enumerate_subgroups(general_linear_group(2, field_of_order(3)))) == 55


def test_lattice_cap():
    with pytest.raises(CapExceededError):
        subgroup_lattice(symmetric_group(5), cap=100)


def test_quotients():
    G = general_linear_group(2, field_of_order(5))
    Z = center(G)
    assert Z.order == 4
    Q = quotient(G, Z)
    assert Q.target.order == 120
    S3 = symmetric_group(3)
    assert quotient(S3, S3.whole()).target.order == 1
    with pytest.raises(GroupError):
        quotient(S3, closure(S3, [S3.parse("(1,2)")]))


def test_pgl2_preimage_still_violates():
    G = general_linear_group(2, field_of_order(5))
    h = projective_map(G)
    pre = [preimage_subgroup(h, Subgroup(h.target, H.element_set)) for H in pgl2_tuple(5)]
    assert ingleton_check(order_profile(pre)).violated


def test_actions_on_projective_line():
    f = field_of_order(5)
    G = projective_linear_group(2, f)
    pts = domain(G)
    assert len(pts) == 6
    for x in pts:
        assert point_stabilizer(G, x).order == 20
        assert set(orbit(G, x)) == set(pts)
    zero, inf = ProjectivePoint.of(f, (0, 1)), ProjectivePoint.of(f, (1, 0))
    D = setwise_stabilizer(G, [zero, inf])
    assert D.order == 8
    assert not D.is_abelian()
    assert {element_order(D, g) for g in D.elements} == {1, 2, 4}


def test_element_orders_and_normality(s5):
    assert element_order(s5, s5.parse("(1,2,3,4,5)")) == 5
    assert is_normal(Subgroup(s5, alternating_group(5).element_set), s5)
    assert not is_normal(closure(s5, [s5.parse("(1,2)")]), s5)


def test_descriptors():
    assert parse_group("sym:4").order == 24
    assert parse_group("alt:5").order == 60
    assert parse_group("gl:2:4").order == 180
    assert parse_group("pgl:2:7").order == 336
    assert parse_group("dih:12").order == 12
    assert parse_group("cyc:2*sym:3").order == 12
    G = parse_group("perm:10:(1,2,3,4,5);(6,7,8,9,10)")
    assert G.order == 25
    with pytest.raises(GroupError):
        parse_group("foo:3")
    S = parse_group("sym:5")
    gens = parse_generators(S, "[(1,2,3);(4,5)]")
    assert format_generators(S, gens) == "[(1,2,3);(4,5)]"
    assert parse_generators(S, "[]") == []
    M = parse_group("gl:2:9")
    g = parse_generators(M, "[[1,21],[0,1]]")
    # extension-field entries print at a fixed width of m digits
    assert M.fmt(g[0]) == "[[01,21],[00,01]]"
    assert parse_generators(M, M.fmt(g[0])) == g
    with pytest.raises(GroupError):
        parse_generators(M, "[[1,0],[0,0]]")  # singular


# -- properties --------------------------------------------------------------

SMALL = ["sym:4", "dih:12", "alt:4", "cyc:2*sym:3", "gl:2:3"]


@st.composite
def group_and_pair(draw):
    G = parse_group(draw(st.sampled_from(SMALL)))
    subs = subgroup_lattice(G).subgroups
    return G, draw(st.sampled_from(subs)), draw(st.sampled_from(subs))


@settings(max_examples=60, deadline=None)
@given(group_and_pair())
def test_product_formula(t):
    G, H, K = t
    assert len(set_product(H, K)) * intersect(H, K).order == H.order * K.order
    assert G.order % H.order == 0


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["sym:4", "sym:5", "pgl:2:5", "dih:10"]), st.data())
def test_orbit_stabilizer(desc, data):
    G = parse_group(desc)
    x = data.draw(st.sampled_from(domain(G)))
    assert len(orbit(G, x)) * point_stabilizer(G, x).order == G.order


@settings(max_examples=40, deadline=None)
@given(group_and_pair(), st.data())
def test_conjugation_preserves_order_and_intersections(t, data):
    G, H, K = t
    g = data.draw(st.sampled_from(G.elements))
    assert conjugate(H, g).order == H.order
    assert conjugate(intersect(H, K), g) == intersect(conjugate(H, g), conjugate(K, g))
