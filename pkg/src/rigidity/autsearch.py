"""Automorphism groups of finite relational structures.

The search is individualization-refinement over colorings.  A first path
individualizes the least element of the smallest non-singleton cell until the
coloring is discrete; the individualized points form a base.  Levels are then
processed bottom-up: for each candidate image ``y`` of the level's base point
that is not yet in the orbit of the automorphisms found so far, a
refinement-guided backtrack looks for an automorphism fixing the earlier base
points and sending the base point to ``y``.  Every automorphism found prunes
the rest of its level through the growing orbit.
"""

from __future__ import annotations

from itertools import permutations
from operator import itemgetter
from typing import Callable, Sequence

from .permgroup import Perm, PermGroup
from .structures import FiniteStructure, StructureError, check_cap, encode_constants, require_valid

Coloring = list[int]

BRUTE_FORCE_LIMIT = 8


class _Refiner:
    def __init__(self, s: FiniteStructure):
        self.n = s.n
        self.relations = [rel for _, _, rel in s.relations()]
        # per element: (symbol index, position, getter reading the colors of the tuple)
        inc: list[list[tuple[int, int, Callable]]] = [[] for _ in range(s.n)]
        for si, rel in enumerate(self.relations):
            for t in rel:
                get = itemgetter(*t)
                for pos, x in enumerate(t):
                    inc[x].append((si, pos, get))
        self.inc = inc

    def refine(self, colors: Sequence[int]) -> tuple[Coloring, tuple]:
        """Coarsest stable refinement plus a trace that is invariant under isomorphism."""
        colors = list(colors)
        ncolors = len(set(colors))
        trace = []
        while True:
            sigs = []
            for x in range(self.n):
                nb = sorted([(si, pos, get(colors)) for si, pos, get in self.inc[x]])
                sigs.append((colors[x], tuple(nb)))
            keys = sorted(set(sigs))
            index = {k: i for i, k in enumerate(keys)}
            colors = [index[k] for k in sigs]
            trace.append(hash(tuple(keys)))
            if len(keys) == ncolors:
                break
            ncolors = len(keys)
        return colors, tuple(trace)

    def is_automorphism(self, g: Perm) -> bool:
        for rel in self.relations:
            for t in rel:
                if tuple(g[x] for x in t) not in rel:
                    return False
        return True


def _normalize(init: Sequence[int]) -> Coloring:
    order = {c: i for i, c in enumerate(sorted(set(init)))}
    return [order[c] for c in init]


def color_refine(s: FiniteStructure, init: Sequence[int] | None = None) -> Coloring:
    """Coarsest stable refinement of ``init`` (uniform when omitted)."""
    s = encode_constants(s)
    if init is None:
        init = [0] * s.n
    if len(init) != s.n:
        raise StructureError(f"coloring has length {len(init)}, universe has {s.n} elements")
    colors, _ = _Refiner(s).refine(_normalize(init))
    return colors


def _target_cell(colors: Coloring) -> tuple[int, list[int]] | None:
    cells: dict[int, list[int]] = {}
    for x, c in enumerate(colors):
        cells.setdefault(c, []).append(x)
    best = None
    for c in sorted(cells):
        cell = cells[c]
        if len(cell) > 1 and (best is None or len(cell) < len(best[1])):
            best = (c, cell)
    return best


def _individualize(colors: Coloring, v: int) -> Coloring:
    out = list(colors)
    out[v] = max(colors) + 1
    return out


def _orbit_of(x: int, gens: list[Perm]) -> set[int]:
    orb = {x}
    queue = [x]
    for y in queue:
        for g in gens:
            z = g[y]
            if z not in orb:
                orb.add(z)
                queue.append(z)
    return orb


class _Search:
    def __init__(self, s: FiniteStructure):
        self.n = s.n
        self.ref = _Refiner(s)
        colors, trace = self.ref.refine([0] * s.n)
        self.path = [(colors, trace)]
        self.base: list[int] = []
        self.target_colors: list[int] = []
        while True:
            tc = _target_cell(colors)
            if tc is None:
                break
            c, cell = tc
            v = cell[0]
            self.base.append(v)
            self.target_colors.append(c)
            colors, trace = self.ref.refine(_individualize(colors, v))
            self.path.append((colors, trace))
        self.leaf = colors

    def _matches(self, depth: int, colors: Coloring, trace: tuple) -> bool:
        ref_colors, ref_trace = self.path[depth]
        if trace != ref_trace:
            return False
        return sorted(colors) == sorted(ref_colors)

    def _descend(self, depth: int, colors: Coloring) -> Perm | None:
        if depth == len(self.base):
            where = {c: x for x, c in enumerate(colors)}
            g = tuple(where[self.leaf[x]] for x in range(self.n))
            return g if self.ref.is_automorphism(g) else None
        tc = self.target_colors[depth]
        for z in [x for x, c in enumerate(colors) if c == tc]:
            nxt, trace = self.ref.refine(_individualize(colors, z))
            if self._matches(depth + 1, nxt, trace):
                g = self._descend(depth + 1, nxt)
                if g is not None:
                    return g
        return None

    def run(self) -> list[Perm]:
        gens: list[Perm] = []
        for level in reversed(range(len(self.base))):
            colors, _ = self.path[level]
            b = self.base[level]
            cell = [x for x, c in enumerate(colors) if c == self.target_colors[level]]
            orbit = _orbit_of(b, gens)
            for y in cell:
                if y in orbit:
                    continue
                nxt, trace = self.ref.refine(_individualize(colors, y))
                if not self._matches(level + 1, nxt, trace):
                    continue
                g = self._descend(level + 1, nxt)
                if g is not None:
                    gens.append(g)
                    orbit = _orbit_of(b, gens)
        return gens


def automorphism_group(s: FiniteStructure) -> PermGroup:
    """Aut(s) as a permutation group with an exact order."""
    require_valid(s)
    check_cap(s.n)
    s = encode_constants(s)
    gens = _Search(s).run()
    return PermGroup(s.n, gens)


def brute_force_automorphisms(s: FiniteStructure) -> list[Perm]:
    """Every automorphism by exhaustive enumeration, in lexicographic order."""
    require_valid(s)
    if s.n > BRUTE_FORCE_LIMIT:
        raise StructureError(f"brute force refused for n={s.n} > {BRUTE_FORCE_LIMIT}")
    ref = _Refiner(encode_constants(s))
    return [p for p in permutations(range(s.n)) if ref.is_automorphism(p)]
