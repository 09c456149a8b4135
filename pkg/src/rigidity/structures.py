"""Finite relational structures, their JSON form, and fixture families.

A structure has universe ``0..n-1``, a purely relational signature, and an
ordered list of named elements (constants).  Downstream engines only see
relations: :func:`encode_constants` rewrites every constant as a fresh unary
singleton predicate.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping, Sequence

DEFAULT_CAP = 64


class StructureError(ValueError):
    """Raised when a structure (or a file describing one) is malformed."""


def universe_cap() -> int:
    raw = os.environ.get("RIGIDITY_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise StructureError(f"RIGIDITY_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise StructureError(f"RIGIDITY_CAP must be positive, got {cap}")
    return cap


def check_cap(n: int) -> None:
    cap = universe_cap()
    if n > cap:
        raise StructureError(f"universe size {n} exceeds cap {cap}")


@dataclass(frozen=True)
class Signature:
    symbols: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple((str(a), int(b)) for a, b in self.symbols))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.symbols)

    def arity(self, name: str) -> int:
        for sym, ar in self.symbols:
            if sym == name:
                return ar
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(sym == name for sym, _ in self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)


@dataclass(frozen=True)
class FiniteStructure:
    """Finite relational structure on ``0..n-1``.

    ``interp`` maps each symbol name to a frozenset of tuples.  ``named`` lists
    constants in order.  ``constant_symbols`` is filled by
    :func:`encode_constants` and maps the fresh unary symbols back to the
    original constant positions for reporting.
    """

    n: int
    sig: Signature = field(default_factory=Signature)
    interp: Mapping[str, frozenset] = field(default_factory=dict)
    named: tuple[int, ...] = ()
    constant_symbols: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        if not isinstance(self.sig, Signature):
            object.__setattr__(self, "sig", Signature(tuple(self.sig)))
        interp = {name: frozenset(tuple(t) for t in self.interp.get(name, ())) for name in self.sig.names}
        for name in self.interp:
            if name not in interp:
                interp[name] = frozenset(tuple(t) for t in self.interp[name])
        object.__setattr__(self, "interp", interp)
        object.__setattr__(self, "named", tuple(self.named))
        object.__setattr__(self, "constant_symbols", tuple(self.constant_symbols))

    def __hash__(self) -> int:
        return hash((self.n, self.sig, tuple(sorted((k, tuple(sorted(v))) for k, v in self.interp.items())), self.named))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteStructure):
            return NotImplemented
        return (self.n, self.sig, self.interp, self.named) == (other.n, other.sig, other.interp, other.named)

    @property
    def universe(self) -> range:
        return range(self.n)

    def relation(self, name: str) -> frozenset:
        return self.interp[name]

    def relations(self) -> list[tuple[str, int, frozenset]]:
        return [(name, ar, self.interp[name]) for name, ar in self.sig.symbols]

    def num_tuples(self) -> int:
        return sum(len(v) for v in self.interp.values())

    def relabel(self, perm: Sequence[int]) -> "FiniteStructure":
        """Image of the structure under the bijection ``x -> perm[x]``."""
        interp = {name: frozenset(tuple(perm[x] for x in t) for t in rel) for name, rel in self.interp.items()}
        return FiniteStructure(self.n, self.sig, interp, tuple(perm[c] for c in self.named), self.constant_symbols)


def validate(s: FiniteStructure) -> list[str]:
    """Return all invariant violations of ``s``; empty means well formed."""
    out: list[str] = []
    if not isinstance(s.n, int) or s.n < 1:
        out.append(f"n: universe size must be >= 1, got {s.n!r}")
        return out
    seen: set[str] = set()
    for name, ar in s.sig.symbols:
        if name in seen:
            out.append(f"signature: duplicate symbol name {name!r}")
        seen.add(name)
        if ar < 1:
            out.append(f"signature: symbol {name!r} has arity {ar} < 1")
    for name in s.interp:
        if name not in seen:
            out.append(f"relations: symbol {name!r} not in signature")
    for name, ar in s.sig.symbols:
        for t in sorted(s.interp.get(name, ())):
            if len(t) != ar:
                out.append(f"relations.{name}: tuple {list(t)} has length {len(t)}, arity is {ar}")
            elif any(not isinstance(x, int) or not 0 <= x < s.n for x in t):
                out.append(f"relations.{name}: tuple out of range {list(t)} (n={s.n})")
    if len(set(s.named)) != len(s.named):
        dup = sorted({c for c in s.named if s.named.count(c) > 1})
        out.append(f"constants: duplicate constant {dup}")
    for c in s.named:
        if not isinstance(c, int) or not 0 <= c < s.n:
            out.append(f"constants: constant out of range {c!r} (n={s.n})")
    return out


def require_valid(s: FiniteStructure) -> None:
    problems = validate(s)
    if problems:
        raise StructureError("; ".join(problems))


def check_elements(s: FiniteStructure, a: Iterable[int]) -> frozenset[int]:
    a = frozenset(a)
    bad = sorted(x for x in a if not isinstance(x, int) or not 0 <= x < s.n)
    if bad:
        raise StructureError(f"element(s) out of range {bad} for universe of size {s.n}")
    return a


def fresh_name(base: str, taken: Iterable[str]) -> str:
    taken = set(taken)
    if base not in taken:
        return base
    i = 1
    while f"{base}{i}" in taken:
        i += 1
    return f"{base}{i}"


def encode_constants(s: FiniteStructure) -> FiniteStructure:
    """Replace each constant by a fresh unary singleton predicate."""
    if not s.named:
        return s
    taken = set(s.sig.names)
    symbols = list(s.sig.symbols)
    interp = dict(s.interp)
    mapping = list(s.constant_symbols)
    for i, c in enumerate(s.named):
        name = fresh_name(f"c{i}", taken)
        taken.add(name)
        symbols.append((name, 1))
        interp[name] = frozenset({(c,)})
        mapping.append((name, c))
    return FiniteStructure(s.n, Signature(tuple(symbols)), interp, (), tuple(mapping))


def expand_by_constants(s: FiniteStructure, a: Iterable[int]) -> FiniteStructure:
    """Expansion of ``s`` naming every element of ``a``, with constants encoded."""
    a = sorted(check_elements(s, a))
    base = encode_constants(s)
    extra = [x for x in a if x not in base.named]
    return encode_constants(FiniteStructure(base.n, base.sig, base.interp, tuple(extra), base.constant_symbols))


# -- fixture families ---------------------------------------------------------

FAMILIES = ("empty", "cycle", "eqrel", "atoms", "vecspace")


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, int(q**0.5) + 1))


def _positive(family: str, params: Sequence[int]) -> None:
    if not params or any(not isinstance(p, int) or p < 1 for p in params):
        raise StructureError(f"{family}: parameters must be positive integers, got {list(params)}")


def gen_family(name: str, *params) -> FiniteStructure:
    """Build a fixture structure.

    ``empty(n)``, ``cycle(n)``, ``eqrel(sizes...)``, ``atoms(sizes...)`` and
    ``vecspace(q, dim)``; a single list argument is accepted for the two
    size-list families.
    """
    if len(params) == 1 and isinstance(params[0], (list, tuple)):
        params = tuple(params[0])
    if name not in FAMILIES:
        raise StructureError(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")
    _positive(name, params)
    if name == "empty":
        (n,) = params
        check_cap(n)
        return FiniteStructure(n)
    if name == "cycle":
        (n,) = params
        check_cap(n)
        return FiniteStructure(n, Signature((("R", 2),)), {"R": {(i, (i + 1) % n) for i in range(n)}})
    if name in ("eqrel", "atoms"):
        n = sum(params)
        check_cap(n)
        blocks, start = [], 0
        for size in params:
            blocks.append(range(start, start + size))
            start += size
        if name == "eqrel":
            rel = {(x, y) for b in blocks for x in b for y in b}
            return FiniteStructure(n, Signature((("E", 2),)), {"E": rel})
        sig = Signature(tuple((f"A{i}", 1) for i in range(len(blocks))))
        return FiniteStructure(n, sig, {f"A{i}": {(x,) for x in b} for i, b in enumerate(blocks)})
    q, dim = params
    if not _is_prime(q):
        raise StructureError(f"vecspace: field size {q} is not prime")
    n = q**dim
    check_cap(n)
    vecs = list(product(range(q), repeat=dim))

    def code(v) -> int:
        return sum(c * q**i for i, c in enumerate(v))

    add = {(code(x), code(y), code(tuple((a + b) % q for a, b in zip(x, y)))) for x in vecs for y in vecs}
    sig = [("add", 3)] + [(f"smul{lam}", 2) for lam in range(q)]
    interp = {"add": add}
    for lam in range(q):
        interp[f"smul{lam}"] = {(code(x), code(tuple(lam * c % q for c in x))) for x in vecs}
    return FiniteStructure(n, Signature(tuple(sig)), interp)


def parse_family(text: str) -> FiniteStructure:
    """Parse ``"cycle(3)"`` / ``"eqrel(2,3)"`` style family descriptors."""
    text = text.strip()
    if not text.endswith(")") or "(" not in text:
        raise StructureError(f"bad family descriptor {text!r}")
    name, args = text[:-1].split("(", 1)
    try:
        params = [int(x) for x in args.replace("[", "").replace("]", "").split(",") if x.strip()]
    except ValueError:
        raise StructureError(f"bad family descriptor {text!r}") from None
    return gen_family(name.strip(), *params)


# -- JSON ---------------------------------------------------------------------


def to_dict(s: FiniteStructure) -> dict:
    return {
        "n": s.n,
        "signature": [{"name": name, "arity": ar} for name, ar in s.sig.symbols],
        "relations": {name: [list(t) for t in sorted(s.interp[name])] for name in s.sig.names},
        "constants": list(s.named),
    }


def dumps(s: FiniteStructure) -> str:
    return json.dumps(to_dict(s))


def from_dict(data) -> FiniteStructure:
    if not isinstance(data, dict):
        raise StructureError("top level: expected a JSON object")
    if "n" not in data:
        raise StructureError("field 'n': missing")
    n = data["n"]
    if isinstance(n, bool) or not isinstance(n, int):
        raise StructureError(f"field 'n': expected integer, got {n!r}")
    symbols = []
    for i, entry in enumerate(data.get("signature", [])):
        if not isinstance(entry, dict) or "name" not in entry or "arity" not in entry:
            raise StructureError(f"field 'signature[{i}]': expected {{'name', 'arity'}}, got {entry!r}")
        name, ar = entry["name"], entry["arity"]
        if not isinstance(name, str) or isinstance(ar, bool) or not isinstance(ar, int):
            raise StructureError(f"field 'signature[{i}]': bad name/arity {entry!r}")
        symbols.append((name, ar))
    relations = data.get("relations", {})
    if not isinstance(relations, dict):
        raise StructureError("field 'relations': expected an object")
    interp = {}
    for name, tuples in relations.items():
        if not isinstance(tuples, list):
            raise StructureError(f"field 'relations.{name}': expected a list of tuples")
        rel = set()
        for j, t in enumerate(tuples):
            if not isinstance(t, list) or any(isinstance(x, bool) or not isinstance(x, int) for x in t):
                raise StructureError(f"field 'relations.{name}[{j}]': expected a list of integers, got {t!r}")
            rel.add(tuple(t))
        interp[name] = rel
    constants = data.get("constants", [])
    if not isinstance(constants, list) or any(isinstance(c, bool) or not isinstance(c, int) for c in constants):
        raise StructureError(f"field 'constants': expected a list of integers, got {constants!r}")
    s = FiniteStructure(n, Signature(tuple(symbols)), interp, tuple(constants))
    require_valid(s)
    return s


def loads(text: str) -> FiniteStructure:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructureError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return from_dict(data)


def load(path: str) -> FiniteStructure:
    with open(path, encoding="utf-8") as fh:
        try:
            return loads(fh.read())
        except StructureError as exc:
            raise StructureError(f"{path}: {exc}") from None


def save(s: FiniteStructure, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(s) + "\n")
