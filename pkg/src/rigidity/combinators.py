"""Disjoint unions and E-definable compositions of finite structures.

The two combinators treat shared symbol names differently on purpose.  A
disjoint union needs disjoint languages, so colliding names are renamed with
operand suffixes.  A composition keeps shared names shared: a symbol in both
languages is interpreted by the "either in M, or inside one copy and in N"
rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .structures import FiniteStructure, Signature, StructureError, check_cap, encode_constants, fresh_name, require_valid


@dataclass(frozen=True)
class UnionLayout:
    offsets: tuple[int, int]
    sizes: tuple[int, int]
    markers: tuple[str, str]
    renamed: tuple[dict, dict]

    def operand_of(self, x: int) -> tuple[int, int]:
        """(operand index 0/1, element inside that operand)."""
        if x < self.offsets[1]:
            return 0, x
        return 1, x - self.offsets[1]

    def split(self, a) -> tuple[frozenset, frozenset]:
        first = frozenset(x for x in a if x < self.offsets[1])
        second = frozenset(x - self.offsets[1] for x in a if x >= self.offsets[1])
        return first, second

    def to_dict(self) -> dict:
        return {
            "offsets": list(self.offsets),
            "sizes": list(self.sizes),
            "markers": list(self.markers),
            "renamed": [dict(r) for r in self.renamed],
        }


@dataclass(frozen=True)
class CompositionLayout:
    outer: int
    inner: int
    equivalence: str

    def pair(self, a: int, b: int) -> int:
        return a * self.inner + b

    def unpair(self, x: int) -> tuple[int, int]:
        return divmod(x, self.inner)

    def to_dict(self) -> dict:
        return {"outer": self.outer, "inner": self.inner, "equivalence": self.equivalence, "pairing": "a*|N|+b"}


def rename_apart(s: FiniteStructure, suffix: str) -> FiniteStructure:
    """Same structure with every symbol renamed ``name + suffix``."""
    s = encode_constants(s)
    sig = Signature(tuple((name + suffix, ar) for name, ar in s.sig.symbols))
    interp = {name + suffix: rel for name, rel in s.interp.items()}
    return FiniteStructure(s.n, sig, interp)


def disjoint_union(s1: FiniteStructure, s2: FiniteStructure) -> tuple[FiniteStructure, UnionLayout]:
    require_valid(s1)
    require_valid(s2)
    s1, s2 = encode_constants(s1), encode_constants(s2)
    n1, n2 = s1.n, s2.n
    check_cap(n1 + n2)
    shared = set(s1.sig.names) & set(s2.sig.names)
    taken = set(s1.sig.names) | set(s2.sig.names)
    ren1 = {name: name for name in s1.sig.names}
    ren2 = {name: name for name in s2.sig.names}
    for name in sorted(shared):
        for ren, suffix in ((ren1, "_1"), (ren2, "_2")):
            ren[name] = fresh_name(name + suffix, taken)
            taken.add(ren[name])
    p1 = fresh_name("P_1", taken)
    taken.add(p1)
    p2 = fresh_name("P_2", taken)
    symbols = [(ren1[name], ar) for name, ar in s1.sig.symbols]
    symbols += [(ren2[name], ar) for name, ar in s2.sig.symbols]
    symbols += [(p1, 1), (p2, 1)]
    interp = {ren1[name]: rel for name, rel in s1.interp.items()}
    for name, rel in s2.interp.items():
        interp[ren2[name]] = frozenset(tuple(x + n1 for x in t) for t in rel)
    interp[p1] = frozenset((x,) for x in range(n1))
    interp[p2] = frozenset((x,) for x in range(n1, n1 + n2))
    u = FiniteStructure(n1 + n2, Signature(tuple(symbols)), interp)
    require_valid(u)
    changed1 = {k: v for k, v in ren1.items() if k != v}
    changed2 = {k: v for k, v in ren2.items() if k != v}
    return u, UnionLayout((0, n1), (n1, n2), (p1, p2), (changed1, changed2))


def compose(m: FiniteStructure, n: FiniteStructure) -> tuple[FiniteStructure, CompositionLayout]:
    """M[N] on M x N with an explicit copy equivalence."""
    require_valid(m)
    require_valid(n)
    m, n = encode_constants(m), encode_constants(n)
    size = m.n * n.n
    check_cap(size)
    k = n.n
    symbols: list[tuple[str, int]] = []
    for name, ar in m.sig.symbols:
        if name in n.sig and n.sig.arity(name) != ar:
            raise StructureError(f"shared symbol {name!r} has arity {ar} in M but {n.sig.arity(name)} in N")
        symbols.append((name, ar))
    symbols += [(name, ar) for name, ar in n.sig.symbols if name not in m.sig]
    interp: dict[str, set] = {name: set() for name, _ in symbols}
    for name, rel in m.interp.items():
        ar = m.sig.arity(name)
        out = interp[name]
        for t in rel:
            for bs in product(range(k), repeat=ar):
                out.add(tuple(a * k + b for a, b in zip(t, bs)))
    for name, rel in n.interp.items():
        out = interp[name]
        for a in range(m.n):
            for t in rel:
                out.add(tuple(a * k + b for b in t))
    e = fresh_name("E", [name for name, _ in symbols])
    symbols.append((e, 2))
    interp[e] = {(a * k + b, a * k + c) for a in range(m.n) for b in range(k) for c in range(k)}
    c = FiniteStructure(size, Signature(tuple(symbols)), interp)
    require_valid(c)
    return c, CompositionLayout(m.n, k, e)
