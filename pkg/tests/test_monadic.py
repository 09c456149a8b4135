import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rigidity.degrees import ind_rig, tetrad
from rigidity.extnat import INF, OMEGA
from rigidity.monadic import (
    AtomClass,
    MonadicProfile,
    ProfileError,
    bounded_index_profile,
    extended_predicates,
    profile_dumps,
    profile_ind,
    profile_loads,
    profile_tetrad,
    realize_pair,
    reextended_predicates,
    truncate,
    validate_profile,
)

EXT = [0, 1, 2, 3, 4, 5, INF]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_extended_predicates(n):
    assert profile_tetrad(extended_predicates(n)).as_tuple() == (0, n, 0, INF)
    assert profile_tetrad(extended_predicates(n, named_only=2)).as_tuple() == (0, n, 0, INF)


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_reextended_predicates(m, n):
    t = profile_tetrad(reextended_predicates(m, n))
    assert t.as_tuple() == (m, m + n, INF, INF)


def test_infinitely_many_new_elements():
    p = MonadicProfile((AtomClass(c=OMEGA, u=OMEGA),))
    assert profile_tetrad(p).as_tuple() == (INF, INF, INF, INF)


def test_infinitely_many_extended_predicates():
    p = MonadicProfile((AtomClass(c=OMEGA, u=1, mult=OMEGA),))
    assert profile_tetrad(p).as_tuple() == (0, INF, 0, INF)


def test_realize_pair_example():
    p = realize_pair(2, 5)
    assert p.classes == (AtomClass(c=OMEGA, u=1, mult=3), AtomClass(c=0, u=3))
    t = profile_tetrad(p)
    assert (t.e_sem, t.e_synt) == (2, 5)


@pytest.mark.parametrize("mu", EXT)
@pytest.mark.parametrize("nu", EXT)
def test_realize_pair_grid(mu, nu):
    if mu > nu:
        with pytest.raises(ProfileError):
            realize_pair(mu, nu)
        return
    t = profile_tetrad(realize_pair(mu, nu))
    assert (t.e_sem, t.e_synt) == (mu, nu)
    assert t.shape() is not None


@pytest.mark.parametrize("lam", [0, 1, 2, 3, 4, 5, 6, OMEGA])
def test_bounded_index(lam):
    assert profile_ind(bounded_index_profile(lam)) == lam


def test_finite_profile_matches_truncation():
    p = MonadicProfile((AtomClass(c=0, u=3),))
    assert profile_tetrad(p).as_tuple() == (2, 2, 2, 2)
    assert tetrad(truncate(p)) == profile_tetrad(p)


def test_truncation_of_infinite_profile_diverges():
    p = MonadicProfile((AtomClass(c=OMEGA, u=1),))
    assert profile_tetrad(p).as_tuple() == (0, 1, 0, INF)
    assert tetrad(truncate(p, {"c": 5})).as_tuple() == (0, 0, 0, 0)


def test_truncate_needs_substitutes():
    with pytest.raises(ProfileError):
        truncate(MonadicProfile((AtomClass(c=OMEGA, u=1),)))


def test_unbounded_family_only_has_index():
    p = bounded_index_profile(OMEGA)
    with pytest.raises(ProfileError):
        profile_tetrad(p)


def test_validation():
    assert validate_profile(MonadicProfile((AtomClass(c=0, u=0),)))
    assert validate_profile(MonadicProfile((AtomClass(u=1, mult=0),)))
    assert validate_profile(MonadicProfile(()))
    with pytest.raises(ProfileError):
        profile_tetrad(MonadicProfile((AtomClass(c=-1, u=1),)))


def test_json_round_trip():
    p = realize_pair(3, INF)
    assert profile_loads(profile_dumps(p)) == p
    q = profile_loads('{"classes": [{"c": "ω", "u": 2}]}')
    assert q.classes == (AtomClass(c=OMEGA, u=2),)


def test_json_errors():
    with pytest.raises(ProfileError, match="line 1"):
        profile_loads("{")
    with pytest.raises(ProfileError, match=r"classes\[0\]"):
        profile_loads(json.dumps({"classes": [{"c": "lots"}]}))
    with pytest.raises(ProfileError, match="definable"):
        profile_loads(json.dumps({"classes": [{"u": 1, "definable": "yes"}]}))


finite_classes = st.lists(
    st.builds(
        AtomClass,
        c=st.integers(0, 2),
        u=st.integers(0, 3),
        mult=st.integers(1, 2),
        definable=st.booleans(),
    ).filter(lambda a: a.c + a.u > 0),
    min_size=1,
    max_size=3,
)

ext = st.one_of(st.integers(0, 3), st.just(INF))
any_classes = st.lists(
    st.builds(AtomClass, c=ext, u=ext, mult=st.one_of(st.integers(1, 2), st.just(INF)), definable=st.booleans()).filter(
        lambda a: not (a.c == 0 and a.u == 0)
    ),
    min_size=1,
    max_size=3,
)


@given(finite_classes)
@settings(max_examples=80, deadline=None)
def test_finite_profiles_agree_with_tier1(classes):
    p = MonadicProfile(tuple(classes))
    s = truncate(p)
    assert tetrad(s) == profile_tetrad(p)
    assert ind_rig(s) == profile_ind(p)


@given(any_classes)
@settings(max_examples=150, deadline=None)
def test_profile_tetrad_shape(classes):
    t = profile_tetrad(MonadicProfile(tuple(classes)))
    assert t.shape() in ("rigid", "finite", "sem_rigid_only", "non_rigid_infinite")
    assert not t.inequality_violations()
