"""Symbolic structures of unary predicates with possibly infinite parts.

A profile lists atom classes.  Each atom (a realized Venn region of the
predicates) carries ``c`` named elements and ``u`` unnamed ones, and a class
stands for ``mult`` atoms of that shape.  Any of the three counts may be
``OMEGA``.

Automorphisms permute the unnamed elements of each atom freely and fix the
named ones.  The semantic ∃-degree is therefore a sum of ``(u-1)+`` over
atoms.  Syntactically an atom's unnamed elements are only definable as a
block when the atom is definable and carries finitely many constants.
Otherwise their common type is not isolated, and all ``u`` of them must be
named.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .degrees import Tetrad
from .extnat import INF, OMEGA, ExtNat, from_json, is_finite, pos_pred, to_json
from .structures import FiniteStructure, Signature, StructureError, check_cap


class ProfileError(ValueError):
    pass


@dataclass(frozen=True)
class AtomClass:
    c: ExtNat = 0
    u: ExtNat = 0
    mult: ExtNat = 1
    definable: bool = True

    def size(self) -> ExtNat:
        return self.c + self.u

    def to_dict(self) -> dict:
        return {
            "c": to_json(self.c, "omega"),
            "u": to_json(self.u, "omega"),
            "mult": to_json(self.mult, "omega"),
            "definable": self.definable,
        }


@dataclass(frozen=True)
class MonadicProfile:
    classes: tuple[AtomClass, ...] = ()
    unbounded_finite_family: bool = False

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(self.classes))

    def is_finite(self) -> bool:
        if self.unbounded_finite_family:
            return False
        return all(is_finite(x) for a in self.classes for x in (a.c, a.u, a.mult))

    def total_size(self) -> ExtNat:
        if self.unbounded_finite_family:
            return INF
        return sum((a.mult * a.size() for a in self.classes), 0)

    def to_dict(self) -> dict:
        return {"classes": [a.to_dict() for a in self.classes], "unbounded_finite_family": self.unbounded_finite_family}


def validate_profile(p: MonadicProfile) -> list[str]:
    out = []
    if not p.classes and not p.unbounded_finite_family:
        out.append("classes: empty profile without unbounded_finite_family")
    for i, a in enumerate(p.classes):
        for name in ("c", "u", "mult"):
            v = getattr(a, name)
            if v is not INF and (isinstance(v, bool) or not isinstance(v, int) or v < 0):
                out.append(f"classes[{i}].{name}: not an extended natural {v!r}")
        if a.mult == 0:
            out.append(f"classes[{i}].mult: must be >= 1")
        if a.c == 0 and a.u == 0:
            out.append(f"classes[{i}]: atom with no elements (c=0 and u=0)")
    return out


def _require(p: MonadicProfile) -> None:
    problems = validate_profile(p)
    if problems:
        raise ProfileError("; ".join(problems))


def _synt_contribution(a: AtomClass, finite_profile: bool) -> ExtNat:
    # finite structures isolate every type, so definability only matters in the infinite case
    if is_finite(a.c) and (a.definable or finite_profile):
        return pos_pred(a.u)
    return a.u


def profile_tetrad(p: MonadicProfile) -> Tetrad:
    _require(p)
    if p.unbounded_finite_family:
        raise ProfileError("profile_tetrad: unbounded_finite_family profiles only support profile_ind")
    finite = p.is_finite()
    e_sem = sum((a.mult * pos_pred(a.u) for a in p.classes), 0)
    e_synt = sum((a.mult * _synt_contribution(a, finite) for a in p.classes), 0)

    def forall(e: ExtNat) -> ExtNat:
        if e == 0:
            return 0
        return p.total_size() - 1 if finite else INF

    t = Tetrad(e_sem, e_synt, forall(e_sem), forall(e_synt))
    assert not t.inequality_violations(), t
    assert t.shape() is not None, t
    return t


def profile_ind(p: MonadicProfile) -> ExtNat:
    _require(p)
    if p.unbounded_finite_family:
        return OMEGA
    best: ExtNat = 0
    for a in p.classes:
        if a.c != 0:
            best = max(best, 1)
        if is_finite(a.u) and a.u > 0:
            best = max(best, a.u)
    return best


def realize_pair(mu: ExtNat, nu: ExtNat) -> MonadicProfile:
    """A profile whose ∃-sem / ∃-synt degrees are exactly ``(mu, nu)``."""
    if mu > nu:
        raise ProfileError(f"realize_pair: need mu <= nu, got ({mu}, {nu})")
    if mu == 0 and nu == 0:
        return MonadicProfile((AtomClass(c=1, u=0),))
    if mu is INF:
        return MonadicProfile((AtomClass(c=0, u=OMEGA),))
    classes = []
    gap = INF if nu is INF else nu - mu
    if gap != 0:
        classes.append(AtomClass(c=OMEGA, u=1, mult=gap))
    if mu > 0:
        classes.append(AtomClass(c=0, u=mu + 1))
    return MonadicProfile(tuple(classes))


def truncate(p: MonadicProfile, caps: Mapping | None = None) -> FiniteStructure:
    """Finite structure replacing every ``OMEGA`` field by its substitute.

    ``caps`` maps a field name (``"c"``, ``"u"``, ``"mult"``) or a pair
    ``(class_index, field)`` to a natural number.
    """
    _require(p)
    if p.unbounded_finite_family:
        raise ProfileError("truncate: unbounded_finite_family has no finite truncation")
    caps = dict(caps or {})

    def value(i: int, name: str) -> int:
        v = getattr(p.classes[i], name)
        if v is not INF:
            return v
        for key in ((i, name), name):
            if key in caps:
                return int(caps[key])
        raise ProfileError(f"truncate: no finite substitute for classes[{i}].{name} = omega")

    atoms = []
    for i in range(len(p.classes)):
        c, u, mult = value(i, "c"), value(i, "u"), value(i, "mult")
        atoms += [(c, u)] * mult
    n = sum(c + u for c, u in atoms)
    if n == 0:
        raise ProfileError("truncate: substitutes leave an empty universe")
    check_cap(n)
    symbols, interp, named = [], {}, []
    start = 0
    for k, (c, u) in enumerate(atoms):
        members = range(start, start + c + u)
        symbols.append((f"P{k}", 1))
        interp[f"P{k}"] = {(x,) for x in members}
        named += list(range(start, start + c))
        start += c + u
    return FiniteStructure(n, Signature(tuple(symbols)), interp, tuple(named))


# -- JSON ---------------------------------------------------------------------


def profile_from_dict(data) -> MonadicProfile:
    if not isinstance(data, dict):
        raise ProfileError("top level: expected a JSON object")
    raw = data.get("classes", [])
    if not isinstance(raw, list):
        raise ProfileError("field 'classes': expected a list")
    classes = []
    for i, entry in enumerate(raw):
        if not isinstance(entry, dict):
            raise ProfileError(f"field 'classes[{i}]': expected an object")
        try:
            vals = {k: from_json(entry.get(k, d)) for k, d in (("c", 0), ("u", 0), ("mult", 1))}
        except ValueError as exc:
            raise ProfileError(f"field 'classes[{i}]': {exc}") from None
        definable = entry.get("definable", True)
        if not isinstance(definable, bool):
            raise ProfileError(f"field 'classes[{i}].definable': expected a boolean")
        classes.append(AtomClass(definable=definable, **vals))
    flag = data.get("unbounded_finite_family", False)
    if not isinstance(flag, bool):
        raise ProfileError("field 'unbounded_finite_family': expected a boolean")
    p = MonadicProfile(tuple(classes), flag)
    _require(p)
    return p


def profile_loads(text: str) -> MonadicProfile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProfileError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return profile_from_dict(data)


def profile_load(path: str) -> MonadicProfile:
    with open(path, encoding="utf-8") as fh:
        try:
            return profile_loads(fh.read())
        except ProfileError as exc:
            raise ProfileError(f"{path}: {exc}") from None


def profile_dumps(p: MonadicProfile) -> str:
    return json.dumps(p.to_dict())


# -- reference profiles -------------------------------------------------------


def extended_predicates(n: int, named_only: int = 0) -> MonadicProfile:
    """``n`` predicates with infinitely many constants, each extended by one new element.

    ``named_only`` further fully named infinite predicates may be added.
    """
    classes = [AtomClass(c=OMEGA, u=1, mult=n)]
    if named_only:
        classes.append(AtomClass(c=OMEGA, u=0, mult=named_only))
    return MonadicProfile(tuple(classes))


def reextended_predicates(m: int, n: int) -> MonadicProfile:
    """``n`` extended predicates, then ``m`` more new elements spread over them.

    The extra elements go one per predicate round-robin, so the unnamed
    total is ``n + m``.
    """
    if n < 1:
        raise ProfileError("reextended_predicates: need n >= 1")
    extra = [m // n + (1 if i < m % n else 0) for i in range(n)]
    return MonadicProfile(tuple(AtomClass(c=OMEGA, u=1 + e) for e in extra))


def bounded_index_profile(lam: ExtNat) -> MonadicProfile:
    """A profile whose index of rigidity is ``lam``."""
    if lam is INF:
        return MonadicProfile((AtomClass(c=0, u=OMEGA),), unbounded_finite_family=True)
    if lam == 0:
        return MonadicProfile((AtomClass(c=0, u=OMEGA, mult=OMEGA),))
    if lam == 1:
        return MonadicProfile((AtomClass(c=1, u=0), AtomClass(c=0, u=OMEGA)))
    return MonadicProfile((AtomClass(c=0, u=lam, mult=OMEGA), AtomClass(c=0, u=OMEGA)))
