import random

import pytest
from hypothesis import given, settings

from conftest import BruteForce, random_structure, structures
from rigidity.combinators import compose, disjoint_union, rename_apart
from rigidity.degrees import aut, ind_rig, tetrad
from rigidity.structures import FiniteStructure, Signature, StructureError, gen_family, validate


def test_union_of_singletons():
    u, layout = disjoint_union(gen_family("empty", 1), gen_family("empty", 1))
    assert u.n == 2
    assert u.interp["P_1"] == frozenset({(0,)}) and u.interp["P_2"] == frozenset({(1,)})
    assert tetrad(u).as_tuple() == (0, 0, 0, 0)
    assert layout.operand_of(1) == (1, 0)


def test_union_empty2_empty2():
    u, _ = disjoint_union(gen_family("empty", 2), gen_family("empty", 2))
    assert tetrad(u).e_sem == 2


def test_union_renames_shared_symbols():
    u, layout = disjoint_union(gen_family("cycle", 3), gen_family("cycle", 4))
    assert "R_1" in u.sig and "R_2" in u.sig and "R" not in u.sig
    assert layout.renamed == ({"R": "R_1"}, {"R": "R_2"})
    assert aut(u).order == 12


def test_union_markers_avoid_collisions():
    s = FiniteStructure(1, Signature((("P_1", 1),)), {"P_1": {(0,)}})
    u, layout = disjoint_union(s, gen_family("empty", 1))
    assert len(set(layout.markers)) == 2 and validate(u) == []


def test_union_split():
    _, layout = disjoint_union(gen_family("empty", 2), gen_family("empty", 3))
    assert layout.split({0, 3, 4}) == (frozenset({0}), frozenset({1, 2}))


def test_compose_empty2_empty2():
    c, layout = compose(gen_family("empty", 2), gen_family("empty", 2))
    assert c.n == 4 and layout.equivalence == "E"
    assert aut(c).order == 8
    assert tetrad(c).a_sem == 3


def test_compose_singleton_outer():
    n = gen_family("cycle", 4)
    c, _ = compose(gen_family("empty", 1), n)
    assert aut(c).order == aut(n).order
    assert tetrad(c) == tetrad(n)


def test_compose_fresh_equivalence_name():
    c, layout = compose(gen_family("eqrel", [2]), gen_family("empty", 2))
    assert layout.equivalence == "E1"
    assert layout.unpair(3) == (1, 1) and layout.pair(1, 1) == 3


def test_compose_arity_clash():
    m = FiniteStructure(2, Signature((("R", 1),)), {"R": {(0,)}})
    with pytest.raises(StructureError):
        compose(m, gen_family("cycle", 3))


def test_compose_with_constants():
    m = FiniteStructure(2, Signature(()), {}, named=(1,))
    c, _ = compose(m, gen_family("empty", 2))
    # the named copy is fixed as a block but its interior still swaps
    assert aut(c).order == 4


def test_rename_apart():
    r = rename_apart(gen_family("cycle", 3), "_x")
    assert r.sig.names == ("R_x",)


@pytest.mark.parametrize("seed", range(40))
def test_union_group_is_product(seed):
    rng = random.Random(seed)
    s1, s2 = random_structure(rng, max_n=4), random_structure(rng, max_n=4)
    u, _ = disjoint_union(s1, s2)
    assert aut(u).order == aut(s1).order * aut(s2).order
    assert len(BruteForce(u).auts) == aut(u).order


@pytest.mark.parametrize("seed", range(40))
def test_wreath_order_disjoint_languages(seed):
    rng = random.Random(500 + seed)
    m, n = random_structure(rng, max_n=3), random_structure(rng, max_n=3)
    c, _ = compose(rename_apart(m, "_m"), rename_apart(n, "_n"))
    expected = aut(n).order ** m.n * aut(m).order
    assert aut(c).order == expected
    if c.n <= 8:
        assert len(BruteForce(c).auts) == expected


def test_wreath_can_fail_with_shared_reflexive_symbol():
    # E of the outer eqrel is reflexive, so it also relates points inside each copy
    m = gen_family("eqrel", [1, 1])
    n = gen_family("eqrel", [2, 1])
    shared, _ = compose(m, n)
    apart, _ = compose(rename_apart(m, "_m"), rename_apart(n, "_n"))
    assert aut(apart).order == aut(n).order ** 2 * aut(m).order
    assert aut(shared).order != aut(apart).order


@given(structures(max_n=4), structures(max_n=4))
@settings(max_examples=40, deadline=None)
def test_union_index_formula(s1, s2):
    u, layout = disjoint_union(s1, s2)
    rng = random.Random(u.n)
    for _ in range(4):
        a = frozenset(x for x in range(u.n) if rng.random() < 0.4)
        a1, a2 = layout.split(a)
        assert ind_rig(u, a) == max(ind_rig(s1, a1), ind_rig(s2, a2))
