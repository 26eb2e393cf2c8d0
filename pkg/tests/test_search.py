import pytest
from hypothesis import given, settings, strategies as st

from ingleton_groups.errors import CapExceededError
from ingleton_groups.groups import closure, cyclic_group, parse_group, subgroup_lattice, symmetric_group
from ingleton_groups.ingleton import ingleton_check, order_profile
from ingleton_groups.search import (
    PruneConfig,
    canonical,
    condition_screen,
    conjugacy_classes_of_tuples,
    screen_all_tuples,
    search_group,
    tuple_from_subgroups,
)


@pytest.fixture(scope="module")
def s5_result():
    return search_group(symmetric_group(5))


def test_s5_records(s5_result, s5_tuple):
    assert len(s5_result) == 60
    assert s5_result.ordered_count == 240
    assert len(s5_result.classes) == 1
    assert all(r.report.violated for r in s5_result)
    lat = s5_result.lattice
    assert tuple_from_subgroups(lat, s5_tuple) in {r.indices for r in s5_result}


def test_s5_conjugacy_classes(s5_result):
    classes = conjugacy_classes_of_tuples(s5_result.group, s5_result.records)
    assert [len(c) for c in classes] == [60]
    assert len(conjugacy_classes_of_tuples(s5_result.group, s5_result.records[:1])) == 1


def test_s5_determinism_across_jobs(s5_result):
    G = symmetric_group(5)
    for jobs in (2, 8):
        other = search_group(G, jobs=jobs)
        assert [r.indices for r in other] == [r.indices for r in s5_result]
        assert other.classes == s5_result.classes


@pytest.mark.parametrize("desc", ["sym:4", "alt:5", "dih:8", "cyc:2*sym:3", "alt:4", "dih:12"])
def test_negative_controls(desc):
    assert len(search_group(parse_group(desc))) == 0
    assert len(search_group(parse_group(desc), PruneConfig.none())) == 0


def test_condition_examples(s5, s5_tuple):
    G1, G2, G3, G4 = s5_tuple
    assert condition_screen(s5, [G3, G3, G1, G2]) == 5
    H = closure(s5, [s5.parse("(1,2,3)")])
    K = closure(s5, [s5.parse("(4,5)")])
    assert condition_screen(s5, [H, K, G3, G4]) == 6
    Z12 = cyclic_group(12)
    subs = subgroup_lattice(Z12).subgroups
    assert condition_screen(Z12, subs[1:5]) == 1
    assert condition_screen(s5, s5_tuple) is None


def test_symmetry_canonical(s5_result):
    for r in s5_result:
        a, b, c, d = r.indices
        for t in [(b, a, c, d), (a, b, d, c), (b, a, d, c)]:
            assert canonical(t) == r.indices


@pytest.mark.parametrize("desc", ["dih:8", "alt:4", "cyc:2*sym:3"])
def test_screens_are_sound(desc):
    G = parse_group(desc)
    for t, cond, rep in screen_all_tuples(G):
        if cond is not None:
            assert not rep.violated, (t, cond)


@pytest.mark.parametrize("cond", range(1, 8))
def test_single_condition_removal_keeps_results(s5_result, cond):
    res = search_group(symmetric_group(5), PruneConfig.all().without(cond))
    assert [r.indices for r in res] == [r.indices for r in s5_result]


def test_unpruned_equals_pruned(s5_result):
    res = search_group(symmetric_group(5), PruneConfig.none())
    assert [r.indices for r in res] == [r.indices for r in s5_result]


def test_enumeration_cap():
    with pytest.raises(CapExceededError):
        search_group(parse_group("gl:2:5"))


@pytest.mark.slow
def test_gl25_fifteen_classes():
    res = search_group(parse_group("gl:2:5"), cap=500, conjugacy_reduced=True)
    assert len(res) == 15
    assert len(res.classes) == 15


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_screened_tuples_satisfy_ingleton(data):
    G = parse_group(data.draw(st.sampled_from(["sym:4", "sym:5", "gl:2:3"])))
    subs = subgroup_lattice(G).subgroups
    tup = [data.draw(st.sampled_from(subs)) for _ in range(4)]
    if condition_screen(G, tup) is not None:
        assert not ingleton_check(order_profile(tup)).violated
