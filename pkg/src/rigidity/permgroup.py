"""Permutation groups with stabilizer chains.

Permutations are tuples in image notation: ``p[x]`` is the image of ``x``.
``compose(p, q)`` is the map ``x -> p[q[x]]`` (apply ``q`` first).

A :class:`PermGroup` is built by deterministic Schreier-Sims from arbitrary
generators.  Pointwise stabilizers are obtained by a base change on the
existing chain: random elements of the stabilizer are produced from uniform
random group elements and fed to a new chain until its order reaches the
value predicted by orbit-stabilizer, which makes the answer exact.
"""

from __future__ import annotations

import random
from math import prod
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_identity(p: Sequence[int]) -> bool:
    return all(i == x for i, x in enumerate(p))


def compose(p: Perm, q: Perm) -> Perm:
    """``p`` after ``q``."""
    return tuple([p[x] for x in q])


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def check_perm(p: Sequence[int], n: int | None = None) -> Perm:
    p = tuple(p)
    if n is not None and len(p) != n:
        raise ValueError(f"permutation has degree {len(p)}, expected {n}")
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"not a permutation: {list(p)}")
    return p


def from_cycles(n: int, *cycles: Sequence[int]) -> Perm:
    img = list(range(n))
    for cyc in cycles:
        for i, x in enumerate(cyc):
            img[x] = cyc[(i + 1) % len(cyc)]
    return check_perm(img, n)


def moved_points(p: Perm) -> list[int]:
    return [i for i, x in enumerate(p) if i != x]


def fixed_count(p: Perm) -> int:
    return sum(1 for i, x in enumerate(p) if i == x)


class _Level:
    __slots__ = ("point", "gens", "trans")

    def __init__(self, point: int, gens: list[Perm]):
        self.point = point
        self.gens = gens
        self.trans: dict[int, Perm] = {}

    def rebuild(self, n: int) -> None:
        b = self.point
        trans = {b: identity(n)}
        queue = [b]
        for y in queue:
            uy = trans[y]
            for s in self.gens:
                z = s[y]
                if z not in trans:
                    trans[z] = compose(s, uy)
                    queue.append(z)
        self.trans = trans

    def add_gen(self, g: Perm, n: int) -> None:
        """Append ``g`` and grow the orbit without recomputing known points."""
        self.gens.append(g)
        trans = self.trans
        queue = []
        for y in list(trans):
            z = g[y]
            if z not in trans:
                trans[z] = compose(g, trans[y])
                queue.append(z)
        for y in queue:
            uy = trans[y]
            for s in self.gens:
                z = s[y]
                if z not in trans:
                    trans[z] = compose(s, uy)
                    queue.append(z)


class _Chain:
    """Base, strong generators and transversals; mutable only while building."""

    def __init__(self, n: int, base: Sequence[int] = ()):
        self.n = n
        self.base: list[int] = list(base)
        self.strong: list[Perm] = []
        self.levels: list[_Level] = [_Level(b, []) for b in self.base]
        for lvl in self.levels:
            lvl.rebuild(n)

    def _gens_at(self, i: int) -> list[Perm]:
        prefix = self.base[:i]
        return [s for s in self.strong if all(s[b] == b for b in prefix)]

    def _rebuild(self, i: int) -> None:
        lvl = self.levels[i]
        lvl.gens = self._gens_at(i)
        lvl.rebuild(self.n)

    def strip(self, g: Perm, start: int = 0) -> tuple[Perm, int]:
        for i in range(start, len(self.base)):
            lvl = self.levels[i]
            x = g[lvl.point]
            u = lvl.trans.get(x)
            if u is None:
                return g, i
            if x != lvl.point:
                g = compose(inverse(u), g)
        return g, len(self.base)

    def _extend_base(self, g: Perm) -> None:
        b = min(moved_points(g))
        self.base.append(b)
        self.levels.append(_Level(b, []))

    def add_strong(self, g: Perm, j: int, lowest: int = 0) -> None:
        """Record ``g`` (fixing base[:j]) and refresh levels ``lowest..j``."""
        fresh = j == len(self.base)
        if fresh:
            self._extend_base(g)
        self.strong.append(g)
        for i in range(lowest, j + 1):
            if fresh and i == j:
                self._rebuild(i)
            else:
                self.levels[i].add_gen(g, self.n)

    def order(self) -> int:
        return prod(len(lvl.trans) for lvl in self.levels)

    def schreier_sims(self, gens: Iterable[Perm]) -> None:
        seen = set()
        for g in gens:
            if is_identity(g) or g in seen:
                continue
            seen.add(g)
            self.strong.append(g)
            if all(g[b] == b for b in self.base):
                self._extend_base(g)
        for i in range(len(self.base)):
            self._rebuild(i)
        i = len(self.base) - 1
        while i >= 0:
            restart = None
            lvl = self.levels[i]
            for p, up in list(lvl.trans.items()):
                for s in lvl.gens:
                    sp = s[p]
                    h = compose(inverse(lvl.trans[sp]), compose(s, up))
                    if is_identity(h):
                        continue
                    res, j = self.strip(h, i + 1)
                    if not is_identity(res):
                        self.add_strong(res, j, lowest=i + 1)
                        restart = j
                        break
                if restart is not None:
                    break
            i = restart if restart is not None else i - 1

    def sift_in(self, g: Perm) -> bool:
        """Add ``g`` to the chain if it is not yet represented (random Schreier-Sims step)."""
        res, j = self.strip(g)
        if is_identity(res):
            return False
        self.add_strong(res, j)
        return True


class PermGroup:
    """Permutation group of degree ``n`` given by generators."""

    def __init__(self, n: int, gens: Iterable[Sequence[int]] = (), *, _chain: _Chain | None = None):
        gens = [check_perm(g) for g in gens]
        for g in gens:
            if len(g) != n:
                raise ValueError(f"generator of degree {len(g)} in a group of degree {n}")
        self.n = n
        self.generators: list[Perm] = [g for g in dict.fromkeys(gens) if not is_identity(g)]
        if _chain is None:
            _chain = _Chain(n)
            _chain.schreier_sims(self.generators)
        self._chain = _chain
        self.order: int = _chain.order()
        self._stabs: dict[int, PermGroup] = {}
        self._orbits: list[list[int]] | None = None
        self._fixed: list[int] | None = None

    # -- construction ----------------------------------------------------

    @classmethod
    def symmetric(cls, n: int) -> "PermGroup":
        gens = []
        if n >= 2:
            gens.append(from_cycles(n, (0, 1)))
        if n >= 3:
            gens.append(from_cycles(n, tuple(range(n))))
        return cls(n, gens)

    @classmethod
    def trivial(cls, n: int) -> "PermGroup":
        return cls(n, [])

    # -- chain data ------------------------------------------------------

    @property
    def base(self) -> list[int]:
        return list(self._chain.base)

    @property
    def strong_generators(self) -> list[Perm]:
        return list(self._chain.strong)

    def transversal_sizes(self) -> list[int]:
        return [len(lvl.trans) for lvl in self._chain.levels]

    def is_trivial(self) -> bool:
        return self.order == 1

    def contains(self, p: Sequence[int]) -> bool:
        p = tuple(p)
        if len(p) != self.n or sorted(p) != list(range(self.n)):
            return False
        res, _ = self._chain.strip(p)
        return is_identity(res)

    __contains__ = contains

    def elements(self) -> Iterator[Perm]:
        """Every element, once each; only sensible for small orders."""
        levels = self._chain.levels

        def walk(i: int, acc: Perm) -> Iterator[Perm]:
            if i == len(levels):
                yield acc
                return
            for u in levels[i].trans.values():
                yield from walk(i + 1, compose(acc, u))

        yield from walk(0, identity(self.n))

    def random_element(self, rng: random.Random) -> Perm:
        g = identity(self.n)
        for lvl in self._chain.levels:
            g = compose(g, lvl.trans[rng.choice(list(lvl.trans))])
        return g

    # -- orbits ----------------------------------------------------------

    def orbit_transversal(self, x: int) -> dict[int, Perm]:
        gens = self._chain.strong
        trans = {x: identity(self.n)}
        queue = [x]
        for y in queue:
            uy = trans[y]
            for s in gens:
                z = s[y]
                if z not in trans:
                    trans[z] = compose(s, uy)
                    queue.append(z)
        return trans

    def orbit(self, x: int) -> list[int]:
        return sorted(self.orbit_transversal(x))

    def orbits(self) -> list[list[int]]:
        """Orbit partition, each orbit sorted, orbits ordered by least element."""
        if self._orbits is None:
            self._orbits = self._compute_orbits()
        return [list(o) for o in self._orbits]

    def _compute_orbits(self) -> list[list[int]]:
        parent = list(range(self.n))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for g in self._chain.strong:
            for i, x in enumerate(g):
                ra, rb = find(i), find(x)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        groups: dict[int, list[int]] = {}
        for i in range(self.n):
            groups.setdefault(find(i), []).append(i)
        return [groups[k] for k in sorted(groups)]

    def fixed_points(self) -> list[int]:
        if self._fixed is None:
            self._fixed = [x for x in range(self.n) if all(g[x] == x for g in self._chain.strong)]
        return list(self._fixed)

    # -- subgroups -------------------------------------------------------

    def stabilizer(self, points: Iterable[int]) -> "PermGroup":
        """Pointwise stabilizer of ``points``."""
        pts = sorted(set(points))
        for x in pts:
            if not isinstance(x, int) or not 0 <= x < self.n:
                raise ValueError(f"point {x!r} out of range for degree {self.n}")
        group = self
        for x in pts:
            group = group._point_stabilizer(x)
            if group.order == 1:
                break
        return group

    def _point_stabilizer(self, x: int) -> "PermGroup":
        cached = self._stabs.get(x)
        if cached is None:
            cached = self._stabs[x] = self._compute_point_stabilizer(x)
        return cached

    def _compute_point_stabilizer(self, x: int) -> "PermGroup":
        chain = self._chain
        if self.order == 1 or all(g[x] == x for g in chain.strong):
            return self
        if chain.base and chain.base[0] == x:
            return self._tail()
        first = chain.levels[0].trans if chain.levels else {}
        if x in first:
            # G_x = u G_b u^-1 for the transversal element u taking b to x
            return PermGroup._from_chain(self.n, chain, skip=1)._conjugate(first[x])
        trans = self.orbit_transversal(x)
        target = self.order // len(trans)
        new = _Chain(self.n, [x])
        for s in chain.strong:
            if s[x] == x:
                new.sift_in(s)
        rng = random.Random(x * 7919 + self.n)
        while new.order() < target:
            h = self.random_element(rng)
            new.sift_in(compose(inverse(trans[h[x]]), h))
        assert new.order() == target
        return PermGroup._from_chain(self.n, new, skip=1)

    def _conjugate(self, u: Perm) -> "PermGroup":
        """The group u G u^-1, carrying the stabilizer chain along."""
        ui = inverse(u)

        def conj(p: Perm) -> Perm:
            return compose(u, compose(p, ui))

        src = self._chain
        sub = _Chain(self.n)
        sub.base = [u[b] for b in src.base]
        sub.strong = [conj(s) for s in src.strong]
        for lvl in src.levels:
            new = _Level(u[lvl.point], [conj(s) for s in lvl.gens])
            new.trans = {u[y]: conj(t) for y, t in lvl.trans.items()}
            sub.levels.append(new)
        g = PermGroup(self.n, [], _chain=sub)
        g.generators = list(sub.strong)
        return g

    def _tail(self) -> "PermGroup":
        return PermGroup._from_chain(self.n, self._chain, skip=1)

    @classmethod
    def _from_chain(cls, n: int, chain: _Chain, skip: int = 0) -> "PermGroup":
        sub = _Chain(n)
        sub.base = chain.base[skip:]
        sub.levels = chain.levels[skip:]
        prefix = chain.base[:skip]
        sub.strong = [s for s in chain.strong if all(s[b] == b for b in prefix)]
        g = cls(n, [], _chain=sub)
        g.generators = list(sub.strong)
        return g

    def summary(self) -> dict:
        return {
            "order": self.order,
            "base": self.base,
            "generators": [list(g) for g in self.generators],
        }

    def __repr__(self) -> str:
        return f"PermGroup(n={self.n}, order={self.order}, gens={len(self.generators)})"


def group_from_generators(gens: Iterable[Sequence[int]], n: int) -> PermGroup:
    return PermGroup(n, gens)


def pointwise_stabilizer(g: PermGroup, a: Iterable[int]) -> PermGroup:
    return g.stabilizer(a)


def fixed_points(g: PermGroup) -> list[int]:
    return g.fixed_points()


def orbits(g: PermGroup) -> list[list[int]]:
    return g.orbits()
