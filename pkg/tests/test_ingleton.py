from fractions import Fraction
from math import log2

import pytest
from hypothesis import given, settings, strategies as st

from ingleton_groups.errors import CapExceededError
from ingleton_groups.families import pgln_points_tuple
from ingleton_groups.groups import (
    closure,
    cyclic_group,
    direct_product,
    parse_group,
    product_subgroup,
    subgroup_lattice,
    symmetric_group,
)
from ingleton_groups.ingleton import (
    OrderProfile,
    all_alphas,
    alpha_key,
    alpha_str,
    delta,
    entropy_oracle,
    ingleton_check,
    ingleton_delta_form,
    ingleton_entropy_form,
    ingleton_gap_bits,
    oracle_agrees,
    order_profile,
)

S5_PROFILE = {
    "1": 6, "2": 20, "3": 8, "4": 8,
    "12": 2, "13": 2, "14": 2, "23": 4, "24": 4, "34": 1,
    "123": 1, "124": 1, "134": 1, "234": 1, "1234": 1,
}


def test_s5_profile(s5_tuple):
    prof = order_profile(s5_tuple)
    assert prof.group_order == 120
    assert {alpha_str(a): prof[a] for a in prof.keys()} == S5_PROFILE
    rep = ingleton_check(prof)
    assert (rep.lhs, rep.rhs, rep.violated) == (120, 128, True)
    assert rep.ratio == Fraction(16, 15)
    assert ingleton_delta_form(prof)
    assert ingleton_entropy_form(prof)
    assert ingleton_gap_bits(prof) == pytest.approx(log2(15 / 16))


def test_trivial_profiles(s5):
    G = s5.whole()
    prof = order_profile([G] * 4)
    assert all(prof[a] == 120 for a in prof.keys())
    assert ingleton_check(prof).ratio == 1
    one = s5.trivial()
    rep = ingleton_check(order_profile([one] * 4))
    assert (rep.lhs, rep.rhs, rep.violated) == (1, 1, False)


def test_pgl33_independent_points_ratio_one():
    assert ingleton_check(order_profile(pgln_points_tuple(3, 3))).ratio == 1


def test_alpha_keys():
    assert alpha_key("123") == (1, 2, 3)
    assert alpha_key("G") == ()
    assert alpha_key("3,1") == (1, 3)
    assert alpha_str((1, 2, 3, 4)) == "1234"
    assert alpha_str((2, 11)) == "2,11"
    assert len(all_alphas(4)) == 15


def test_profile_text_round_trip(s5_tuple):
    prof = order_profile(s5_tuple)
    text = prof.to_text()
    assert text.splitlines()[0] == "1=6"
    assert text.splitlines()[-1] == "G=120"
    assert OrderProfile.parse(text) == prof
    assert prof["G"] == 120 and prof[()] == 120


def test_delta_of_nested_sets_is_trivial(s5_tuple):
    prof = order_profile(s5_tuple)
    assert delta(prof, "1", "12") == 1
    assert delta(prof, "13", "134") == 1


def test_oracle_counts_s3():
    S3 = symmetric_group(3)
    G1 = closure(S3, [S3.parse("(1,2)")])
    G2 = closure(S3, [S3.parse("(1,2,3)")])
    assert entropy_oracle(S3, [G1, G2]) == {(1,): 3, (2,): 2, (1, 2): 6}
    assert entropy_oracle(S3, [S3.whole()]) == {(1,): 1}


def test_oracle_s5(s5, s5_tuple):
    counts = entropy_oracle(s5, s5_tuple)
    assert all(counts[alpha_key(a)] * v == 120 for a, v in S5_PROFILE.items())


def test_oracle_cap(s5, s5_tuple):
    with pytest.raises(CapExceededError):
        entropy_oracle(s5, s5_tuple, cap=100)


# -- properties --------------------------------------------------------------

GROUPS = ["sym:4", "dih:12", "alt:4", "gl:2:3", "sym:5", "cyc:2*sym:3"]


@st.composite
def four_subgroups(draw):
    G = parse_group(draw(st.sampled_from(GROUPS)))
    subs = subgroup_lattice(G).subgroups
    return G, [draw(st.sampled_from(subs)) for _ in range(4)]


@settings(max_examples=80, deadline=None)
@given(four_subgroups())
def test_three_routes_agree(t):
    """Order form, delta form and entropy form of Ingleton give one verdict."""
    G, subs = t
    prof = order_profile(subs)
    v = ingleton_check(prof).violated
    assert ingleton_delta_form(prof) == v
    assert ingleton_entropy_form(prof) == v


@settings(max_examples=80, deadline=None)
@given(four_subgroups())
def test_submodularity(t):
    G, subs = t
    prof = order_profile(subs)
    alphas = all_alphas(4)
    for a in alphas[:8]:
        for b in alphas:
            assert delta(prof, a, b) >= 1


@settings(max_examples=30, deadline=None)
@given(four_subgroups())
def test_oracle_matches_profile(t):
    G, subs = t
    assert oracle_agrees(G, subs)


@settings(max_examples=25, deadline=None)
@given(four_subgroups(), st.integers(2, 4))
def test_ratio_invariant_under_product_with_cyclic(t, k):
    """G x Z_k with H_i x Z_k or H_i x 1: both sides of Ingleton scale alike."""
    G, subs = t
    Z = cyclic_group(k)
    P = direct_product(G, Z)
    base = ingleton_check(order_profile(subs))
    full = [product_subgroup(P, [H, Z.whole()]) for H in subs]
    thin = [product_subgroup(P, [H, Z.trivial()]) for H in subs]
    for tup in (full, thin):
        rep = ingleton_check(order_profile(tup))
        assert rep.ratio == base.ratio
        assert rep.violated == base.violated
