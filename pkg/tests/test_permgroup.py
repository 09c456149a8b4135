import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rigidity.permgroup import (
    PermGroup,
    check_perm,
    compose,
    fixed_points,
    from_cycles,
    group_from_generators,
    identity,
    inverse,
    orbits,
    pointwise_stabilizer,
)


def closure(n, gens):
    elems = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                k = compose(g, h)
                if k not in elems:
                    elems.add(k)
                    nxt.append(k)
        frontier = nxt
    return elems


def random_gens(rng, n, k):
    out = []
    for _ in range(k):
        p = list(range(n))
        rng.shuffle(p)
        out.append(tuple(p))
    return out


def sparse_gens(rng, n, k):
    # products of a couple of transpositions keep groups small and varied
    out = []
    for _ in range(k):
        p = list(range(n))
        for _ in range(rng.randint(1, 2)):
            a, b = rng.sample(range(n), 2)
            p[a], p[b] = p[b], p[a]
        out.append(tuple(p))
    return out


perm_lists = st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.permutations(list(range(n))).map(tuple), max_size=3))
)


def test_compose_applies_right_first():
    p = from_cycles(3, (0, 1))
    q = from_cycles(3, (1, 2))
    assert compose(p, q) == (1, 2, 0)
    assert compose(p, inverse(p)) == identity(3)


def test_check_perm_rejects_non_permutations():
    with pytest.raises(ValueError):
        check_perm((0, 0, 1))
    with pytest.raises(ValueError):
        check_perm((0, 1), 3)


def test_symmetric_orders():
    assert [PermGroup.symmetric(n).order for n in range(1, 7)] == [1, 2, 6, 24, 120, 720]


def test_cyclic_group():
    g = group_from_generators([from_cycles(5, (0, 1, 2, 3, 4))], 5)
    assert g.order == 5
    assert orbits(g) == [[0, 1, 2, 3, 4]]
    assert pointwise_stabilizer(g, [2]).order == 1


def test_stabilizer_of_symmetric_group():
    g = PermGroup.symmetric(5)
    h = g.stabilizer([1, 3])
    assert h.order == 6
    assert fixed_points(h) == [1, 3]
    assert h.orbits() == [[0, 2, 4], [1], [3]]


def test_wrong_degree_generator():
    with pytest.raises(ValueError):
        PermGroup(4, [(1, 0, 2)])


def test_stabilizer_point_out_of_range():
    with pytest.raises(ValueError):
        PermGroup.symmetric(3).stabilizer([5])


def test_elements_enumerates_each_once():
    g = PermGroup(4, [from_cycles(4, (0, 1)), from_cycles(4, (2, 3))])
    elems = list(g.elements())
    assert len(elems) == len(set(elems)) == 4


def test_summary_fields():
    s = PermGroup.symmetric(3).summary()
    assert s["order"] == 6 and len(s["base"]) == 2


@pytest.mark.parametrize("seed", range(60))
def test_against_closure(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 7)
    gens = (random_gens if seed % 2 else sparse_gens)(rng, n, rng.randint(0, 3)) if n > 1 else []
    g = PermGroup(n, gens)
    elems = closure(n, gens)
    assert g.order == len(elems)
    assert set(g.elements()) == elems
    for p in random_gens(rng, n, 5):
        assert g.contains(p) == (p in elems)
    pts = rng.sample(range(n), rng.randint(0, n))
    stab = {e for e in elems if all(e[x] == x for x in pts)}
    h = g.stabilizer(pts)
    assert h.order == len(stab)
    assert set(h.elements()) == stab
    fixed = [x for x in range(n) if all(e[x] == x for e in stab)]
    assert h.fixed_points() == fixed


@given(perm_lists)
@settings(max_examples=60, deadline=None)
def test_orbit_stabilizer(data):
    n, gens = data
    g = PermGroup(n, gens)
    for x in range(n):
        assert g.order == len(g.orbit(x)) * g.stabilizer([x]).order


@given(perm_lists, st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_stabilizer_chain_is_independent_of_order(data, rng):
    n, gens = data
    g = PermGroup(n, gens)
    pts = list(range(n))
    rng.shuffle(pts)
    pts = pts[: rng.randint(0, n)]
    a = g.stabilizer(pts)
    b = g
    for x in reversed(pts):
        b = b.stabilizer([x])
    assert a.order == b.order
    assert a.fixed_points() == b.fixed_points()


@given(perm_lists)
@settings(max_examples=40, deadline=None)
def test_strong_generators_generate(data):
    n, gens = data
    g = PermGroup(n, gens)
    assert PermGroup(n, g.strong_generators).order == g.order
    for s in gens:
        assert s in g
