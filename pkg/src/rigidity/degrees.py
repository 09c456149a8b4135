"""Definable closure, rigidity degrees, witnesses, and the index of rigidity.

On a finite structure the A-automorphisms are the pointwise stabilizer
``Aut(M)_A`` and ``dcl(A)`` is its fixed-point set, so every quantity here is
read off the automorphism group:

* the ∃-degree is the minimum size of a rigidifying set (a base of Aut(M));
* the ∀-degree is one more than the largest non-rigidifying set, i.e.
  ``1 + max |fix(g)|`` over non-identity automorphisms ``g`` (0 when rigid).

Both searches walk the tree of point stabilizers and branch only on orbit
representatives of the current stabilizer, which is sound because rigidity of
a set is invariant under automorphisms fixing what was chosen so far.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Optional

from .autsearch import automorphism_group
from .extnat import INF, ExtNat
from .permgroup import PermGroup
from .structures import FiniteStructure, StructureError, check_cap, check_elements, expand_by_constants

EXISTS = "exists"
FORALL = "forall"
SEM = "sem"
SYNT = "synt"

_QUANTIFIERS = {"exists": EXISTS, "e": EXISTS, "∃": EXISTS, "forall": FORALL, "a": FORALL, "∀": FORALL}
_MODES = {"sem": SEM, "synt": SYNT, "syn": SYNT}


def quantifier(q: str) -> str:
    try:
        return _QUANTIFIERS[q.lower()]
    except KeyError:
        raise ValueError(f"unknown quantifier {q!r}; use 'exists' or 'forall'") from None


def mode(m: str) -> str:
    try:
        return _MODES[m.lower()]
    except KeyError:
        raise ValueError(f"unknown mode {m!r}; use 'sem' or 'synt'") from None


@dataclass(frozen=True)
class WitnessReport:
    degree: ExtNat
    witness: Optional[tuple[int, ...]]
    quantifier: str
    mode: str

    def to_dict(self) -> dict:
        return {
            "degree": "inf" if self.degree is INF else self.degree,
            "witness": None if self.witness is None else list(self.witness),
            "quantifier": self.quantifier,
            "mode": self.mode,
        }


@dataclass(frozen=True)
class Tetrad:
    """(∃-sem, ∃-synt, ∀-sem, ∀-synt)."""

    e_sem: ExtNat
    e_synt: ExtNat
    a_sem: ExtNat
    a_synt: ExtNat

    def as_tuple(self) -> tuple:
        return (self.e_sem, self.e_synt, self.a_sem, self.a_synt)

    def inequality_violations(self) -> list[str]:
        out = []
        if not self.a_sem <= self.a_synt:
            out.append("INEQ_1: a_sem <= a_synt")
        if not self.e_sem <= self.e_synt:
            out.append("INEQ_2: e_sem <= e_synt")
        if not self.e_sem <= self.a_sem:
            out.append("INEQ_3: e_sem <= a_sem")
        if not self.e_synt <= self.a_synt:
            out.append("INEQ_4: e_synt <= a_synt")
        return out

    def shape(self) -> str | None:
        """Which unary-language tetrad shape this is, if any."""
        e_s, e_y, a_s, a_y = self.as_tuple()
        if self.as_tuple() == (0, 0, 0, 0):
            return "rigid"
        if a_s is not INF and e_s == e_y and a_s == a_y and 1 <= e_s <= a_s:
            return "finite"
        if e_s == 0 and a_s == 0 and a_y is INF and e_y != 0:
            return "sem_rigid_only"
        if a_s is INF and a_y is INF and 1 <= e_s <= e_y:
            return "non_rigid_infinite"
        return None

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.as_tuple()) + ")"

    def to_dict(self) -> dict:
        return {k: ("inf" if v is INF else v) for k, v in zip(("e_sem", "e_synt", "a_sem", "a_synt"), self.as_tuple())}


@lru_cache(maxsize=512)
def aut(s: FiniteStructure) -> PermGroup:
    return automorphism_group(s)


# -- rigidity predicates on a stabilizer --------------------------------------


def _sem_rigid(h: PermGroup) -> bool:
    return h.order == 1


def _synt_rigid(h: PermGroup) -> bool:
    return len(h.fixed_points()) == h.n


def _predicate(m: str) -> Callable[[PermGroup], bool]:
    return _sem_rigid if mode(m) == SEM else _synt_rigid


def _orbit_reps(h: PermGroup) -> list[int]:
    return [orb[0] for orb in h.orbits() if len(orb) > 1]


# -- public operations ----------------------------------------------------------


def dcl(s: FiniteStructure, a: Iterable[int] = ()) -> frozenset[int]:
    a = check_elements(s, a)
    return frozenset(aut(s).stabilizer(a).fixed_points())


def is_sem_rigid(s: FiniteStructure, a: Iterable[int] = ()) -> bool:
    a = check_elements(s, a)
    return aut(s).stabilizer(a).order == 1


def is_synt_rigid(s: FiniteStructure, a: Iterable[int] = ()) -> bool:
    return len(dcl(s, a)) == s.n


def min_rigidifying_size(g: PermGroup, m: str = SEM) -> int:
    """Least size of a set whose pointwise stabilizer is rigid (a minimum base)."""
    rigid = _predicate(m)
    if rigid(g):
        return 0
    failed: set[tuple[frozenset, int]] = set()

    def feasible(h: PermGroup, budget: int) -> bool:
        if rigid(h):
            return True
        if budget == 0:
            return False
        biggest = max(len(o) for o in h.orbits())
        if biggest**budget < h.order:
            return False
        key = (frozenset(h.fixed_points()), budget)
        if key in failed:
            return False
        for x in _orbit_reps(h):
            if feasible(h.stabilizer([x]), budget - 1):
                return True
        failed.add(key)
        return False

    k = 1
    while not feasible(g, k):
        k += 1
    return k


def max_failing_size(g: PermGroup, m: str = SEM) -> int:
    """Size of the largest set that does not rigidify (``-1`` if even the empty set does)."""
    rigid = _predicate(m)
    if rigid(g):
        return -1
    n = g.n
    best = [len(g.fixed_points())]
    seen: set[frozenset] = set()

    def visit(h: PermGroup) -> None:
        if best[0] >= n - 2:
            return
        for x in _orbit_reps(h):
            k = h.stabilizer([x])
            if rigid(k):
                continue
            fix = frozenset(k.fixed_points())
            if fix in seen:
                continue
            seen.add(fix)
            best[0] = max(best[0], len(fix))
            visit(k)

    visit(g)
    return best[0]


def _lex_least(n: int, size: int, extendable: Callable[[list[int]], bool]) -> tuple[int, ...]:
    chosen: list[int] = []
    while len(chosen) < size:
        start = chosen[-1] + 1 if chosen else 0
        for z in range(start, n):
            if extendable(chosen + [z]):
                chosen.append(z)
                break
        else:  # pragma: no cover - guarded by the size computation
            raise AssertionError("no extension found")
    return tuple(chosen)


def _group_degree(g: PermGroup, q: str, m: str) -> WitnessReport:
    q, m = quantifier(q), mode(m)
    rigid = _predicate(m)
    if q == EXISTS:
        k = min_rigidifying_size(g, m)
        witness = _lex_least(
            g.n, k, lambda pts: min_rigidifying_size(g.stabilizer(pts), m) <= k - len(pts)
        )
        return WitnessReport(k, witness, q, m)
    largest = max_failing_size(g, m)
    if largest < 0:
        return WitnessReport(0, None, q, m)

    def extendable(pts: list[int]) -> bool:
        h = g.stabilizer(pts)
        return not rigid(h) and max_failing_size(h, m) >= largest

    return WitnessReport(largest + 1, _lex_least(g.n, largest, extendable), q, m)


def deg(s: FiniteStructure, q: str, m: str) -> WitnessReport:
    check_cap(s.n)
    return _group_degree(aut(s), q, m)


def tetrad(s: FiniteStructure) -> Tetrad:
    g = aut(s)
    t = Tetrad(
        _group_degree(g, EXISTS, SEM).degree,
        _group_degree(g, EXISTS, SYNT).degree,
        _group_degree(g, FORALL, SEM).degree,
        _group_degree(g, FORALL, SYNT).degree,
    )
    assert not t.inequality_violations(), t
    assert t.e_sem == t.e_synt and t.a_sem == t.a_synt, t
    return t


def deg_rel(s: FiniteStructure, a: Iterable[int], q: str, m: str) -> WitnessReport:
    """Degree of the expansion of ``s`` by constants naming ``a``."""
    return deg(expand_by_constants(s, a), q, m)


def rigiditize(s: FiniteStructure, a: Iterable[int] = ()) -> tuple[int, ...]:
    """Smallest (then lexicographically least) superset of ``a`` that rigidifies ``s``."""
    a = check_elements(s, a)
    extra = deg_rel(s, a, EXISTS, SEM).witness
    return tuple(sorted(a | set(extra)))


def ind_rig(s: FiniteStructure, a: Iterable[int] = ()) -> int:
    """Largest orbit of the pointwise stabilizer of ``a`` (1 when it is trivial)."""
    a = check_elements(s, a)
    return max(len(o) for o in aut(s).stabilizer(a).orbits())


def degree_from_json(value) -> ExtNat:
    if value == "inf":
        return INF
    if isinstance(value, int):
        return value
    raise StructureError(f"bad degree value {value!r}")
