"""Claim-checking harness over a seeded corpus.

Every claim compares a closed-form prediction against values computed by the
engine.  Claims marked non-gating form the *findings* suite: they are
statements that the computations contradict or could not confirm, and they are
reported without affecting the exit status of ``check``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Iterator, Optional

from .combinators import compose, disjoint_union, rename_apart
from .degrees import EXISTS, FORALL, SEM, SYNT, Tetrad, aut, dcl, deg, deg_rel, ind_rig, is_sem_rigid, is_synt_rigid, rigiditize
from .extnat import INF, OMEGA, is_finite, to_json
from .monadic import (
    AtomClass,
    MonadicProfile,
    bounded_index_profile,
    extended_predicates,
    profile_ind,
    profile_tetrad,
    realize_pair,
    reextended_predicates,
    truncate,
)
from .structures import FiniteStructure, Signature, StructureError, expand_by_constants, gen_family

PASS = "pass"
FAIL = "fail"
NA = "not-applicable"


@dataclass(frozen=True)
class Claim:
    id: str
    quote: str
    group: str
    gating: bool = True


_CLAIM_LIST = [
    # single structures
    Claim("INEQ_1", "deg∀sem(M) <= deg∀synt(M)", "structures"),
    Claim("INEQ_2", "deg∃sem(M) <= deg∃synt(M)", "structures"),
    Claim("INEQ_3", "deg∃sem(M) <= deg∀sem(M)", "structures"),
    Claim("INEQ_4", "deg∃synt(M) <= deg∀synt(M)", "structures"),
    Claim("FINITE_COLLAPSE", "finite M: sem and synt degrees coincide for both quantifiers", "structures"),
    Claim("UPPER_BOUND", "finite degrees <= |M|-1; ∃-degrees <= |M \\ dcl(∅)|-1 for non-rigid M", "structures"),
    Claim("ZERO_EQUIV", "deg∃s(M)=0 iff deg∀s(M)=0 iff M is s-rigid", "structures"),
    Claim("DCL_CLOSURE", "A ⊆ dcl(A), dcl(dcl(A)) = dcl(A), A ⊆ B implies dcl(A) ⊆ dcl(B)", "structures"),
    Claim("IND_MONOTONE", "A ⊆ B implies ind(M/A) >= ind(M/B)", "structures"),
    Claim("PROP_DEGA_1", "A ⊆ dcl(∅) implies degQs_A(M) = degQs(M)", "structures"),
    Claim("PROP_DEGA_2", "A containing an ∃s-witness implies deg∃s_A(M) = 0", "structures"),
    Claim("PROP_DEGA_3", "A ⊆ B implies degQs_A(M) >= degQs_B(M)", "structures"),
    Claim("PROP_DEGA_4", "A an ∃s-witness, A' ⊆ A: deg∃s(M) = deg∃s_A'(M) + deg∃s_(A\\A')(M)", "structures", gating=False),
    Claim("PROP_DEGA_5", "A cofinite implies deg∃s_A(M) is natural", "structures"),
    Claim("PROP_DEGA_6", "A cofinite has a least finite extension A' with M_A' rigid", "structures"),
    Claim("EX_EMPTY", "pure set of size n: every degree equals n-1", "structures"),
    Claim("EX_CYCLE", "directed n-cycle: tetrad (1,1,1,1)", "structures"),
    Claim("EX_VECSPACE", "finite vector space V: deg∃sem(V) = dim(V) unless V is rigid", "structures"),
    Claim("EX_IND_EQREL", "equivalence relation: ind over ∅ is max over k of k * #(classes of size k)", "structures"),
    Claim("FINDING_IND_MAXBLOCK", "equivalence relation: ind over ∅ is the largest class size", "structures", gating=False),
    Claim("FINDING_VEC_FORALL", "dim(V)=n, |F|=m, (n,m) != (1,2): deg∀sem(V) = (n-1)m+1", "structures", gating=False),
    # unary languages
    Claim("COR_SEM_SYNT1", "unary language: tetrad is (0,0,0,0), (m,m,n,n), (0,ν,0,∞) or (μ,ν,∞,∞)", "unary"),
    # disjoint unions
    Claim("THM_DIS_1", "deg∃s(M1⊔M2) = deg∃s(M1) + deg∃s(M2)", "unions"),
    Claim("THM_DIS_2", "deg∀s(M1⊔M2) = 0 iff deg∀s(M1) = deg∀s(M2) = 0", "unions"),
    Claim("THM_DIS_3", "0 < deg∀s(M1⊔M2) < ∞: equals max(|M1|+deg∀s(M2), |M2|+deg∀s(M1))", "unions", gating=False),
    Claim("THM_DIS_3_POS", "deg∀s(M1), deg∀s(M2) > 0: deg∀s(M1⊔M2) = max(|M1|+deg∀s(M2), |M2|+deg∀s(M1))", "unions"),
    Claim("THM_DIS_IND", "ind((M1⊔M2)/A) = max(ind(M1/(A∩M1)), ind(M2/(A∩M2)))", "unions"),
    # compositions
    Claim("PROP_WREATH", "Aut(M[N]) ≅ Aut(N) wr Aut(M): order |Aut N|^|M| * |Aut M|", "compositions"),
    Claim("PROP_WREATH_SHARED", "wreath order identity when M and N share symbol names", "compositions", gating=False),
    Claim("THM_COMP1", "deg∃sem(M[N]) = deg∃sem(M) if N is sem-rigid, else |M| * deg∃sem(N)", "compositions"),
    Claim("THM_COMP2", "deg∃synt(M[N]) = deg∃synt(M) if N = dcl(∅), else |M| * deg∃synt(N)", "compositions"),
    Claim("COR_ZERO", "deg∀s(M[N]) = 0 iff deg∀s(M) = deg∀s(N) = 0", "compositions"),
    Claim("THM_COMP3_a", "finite, deg∀s(N) = 0: deg∀s(M[N]) = (deg∀s(M)-1)|N| + 1", "compositions"),
    Claim("THM_COMP3_b", "finite, deg∀s(N) > 0: deg∀s(M[N]) = (|M|-1)|N| + deg∀s(N)", "compositions"),
    Claim("THM_COMP3_c", "M infinite, deg∀s(M) = 1, deg∀s(N) = 0: deg∀s(M[N]) = 1", "compositions"),
    Claim("THM_COMP3_d", "M a singleton: deg∀s(M[N]) = deg∀s(N)", "compositions"),
    # monadic profiles
    Claim("EX_MONADIC_N", "n extended predicates over named infinite ones: tetrad (0,n,0,∞)", "monadic"),
    Claim("EX_MONADIC_NMN", "m further new elements: deg∃sem = m, deg∃synt = m+n, ∀-degrees ∞", "monadic"),
    Claim("THM_DEG_PAIRS", "every μ <= ν in ω+1 is a (deg∃sem, deg∃synt) pair", "monadic"),
    Claim("PROFILE_TRUNCATION", "finite profile agrees with the degrees of its explicit structure", "monadic"),
    Claim("FINDING_N_PRIME", "infinitely many extended predicates: tetrad printed as (0,n,∞,∞)", "monadic", gating=False),
    Claim("PROP_IND", "every λ in ω+1 is the index of rigidity of some structure", "monadic"),
]

CLAIMS: dict[str, Claim] = {c.id: c for c in _CLAIM_LIST}
GROUPS = sorted({c.group for c in _CLAIM_LIST})


@dataclass(frozen=True)
class CheckReport:
    claim_id: str
    instance: str
    expected: object
    computed: object
    verdict: str
    quote: str = ""
    gating: bool = True

    def to_dict(self) -> dict:
        return {
            "claim": self.claim_id,
            "quote": self.quote,
            "instance": self.instance,
            "expected": self.expected,
            "computed": self.computed,
            "verdict": self.verdict,
        }


def resolve_suite(selector: str | Iterable[str]) -> set[str]:
    """Claim ids named by ``selector``: ``all``, ``gating``, ``findings``, a group, or claim ids."""
    parts = selector.split(",") if isinstance(selector, str) else list(selector)
    out: set[str] = set()
    for raw in parts:
        name = raw.strip()
        if not name:
            continue
        if name == "all":
            out |= set(CLAIMS)
        elif name == "gating":
            out |= {c.id for c in _CLAIM_LIST if c.gating}
        elif name == "findings":
            out |= {c.id for c in _CLAIM_LIST if not c.gating}
        elif name in GROUPS:
            out |= {c.id for c in _CLAIM_LIST if c.group == name}
        elif name in CLAIMS:
            out.add(name)
        elif name.endswith("*") and any(k.startswith(name[:-1]) for k in CLAIMS):
            out |= {k for k in CLAIMS if k.startswith(name[:-1])}
        else:
            raise ValueError(f"unknown suite or claim {name!r}")
    return out


# -- corpus -------------------------------------------------------------------


def _partitions(n: int, largest: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def random_structure(rng: random.Random, max_n: int = 6, max_rels: int = 2) -> FiniteStructure:
    n = rng.randint(1, max_n)
    r = rng.randint(0, max_rels)
    names = [f"R{i}" for i in range(r)]
    interp = {}
    for name in names:
        density = rng.choice((0.1, 0.25, 0.4, 0.6))
        interp[name] = {(x, y) for x in range(n) for y in range(n) if rng.random() < density}
    return FiniteStructure(n, Signature(tuple((name, 2) for name in names)), interp)


def _profile_grid(rng: random.Random) -> list[tuple[str, MonadicProfile]]:
    values = list(range(6)) + [INF]
    out = []
    for mu in values:
        for nu in values:
            if mu <= nu:
                out.append((f"realize_pair({to_json(mu)},{to_json(nu)})", realize_pair(mu, nu)))
    for n in (1, 2, 3):
        out.append((f"N({n})", extended_predicates(n, named_only=1)))
        for m in (1, 2, 3):
            out.append((f"N({m},{n})", reextended_predicates(m, n)))
        omega_extra = (AtomClass(c=OMEGA, u=OMEGA),) + (AtomClass(c=OMEGA, u=1, mult=n - 1),) * (n > 1)
        out.append((f"N(omega,{n})", MonadicProfile(omega_extra)))
    out.append(("N'", MonadicProfile((AtomClass(c=OMEGA, u=1, mult=OMEGA),))))
    for k in (1, 2):
        out.append((f"N'+named({k})", extended_predicates(OMEGA, named_only=k)))
    for i in range(16):
        k = rng.randint(1, 3)
        classes = tuple(
            AtomClass(
                c=rng.randint(0, 2),
                u=rng.randint(0, 3),
                mult=rng.randint(1, 2),
                definable=rng.random() < 0.7,
            )
            for _ in range(k)
        )
        classes = tuple(a if a.c or a.u else AtomClass(c=1, definable=a.definable) for a in classes)
        out.append((f"finite#{i:02d}", MonadicProfile(classes)))
    return out


@dataclass
class Corpus:
    seed: int
    structures: list[tuple[str, FiniteStructure]]
    profiles: list[tuple[str, MonadicProfile]]
    union_pairs: list[tuple[int, int]]
    composition_pairs: list[tuple[int, int]]
    unary: list[tuple[str, FiniteStructure]] = field(default_factory=list)
    union_params: int = 5

    def name(self, i: int) -> str:
        return self.structures[i][0]


# always part of the union suite: the documented examples and a rigid-operand case
_ANCHOR_UNIONS = (("empty(1)", "empty(1)"), ("empty(2)", "empty(2)"), ("cycle(3)", "empty(1)"), ("empty(3)", "cycle(4)"))


def default_corpus(seed: int = 1, n_random: int = 50, n_union_pairs: int = 300, max_product: int = 16) -> Corpus:
    rng = random.Random(seed)
    structures: list[tuple[str, FiniteStructure]] = []

    def add(desc: str, s: FiniteStructure) -> None:
        structures.append((desc, s))

    for n in range(1, 6):
        add(f"empty({n})", gen_family("empty", n))
    for n in range(3, 7):
        add(f"cycle({n})", gen_family("cycle", n))
    for total in range(1, 7):
        for part in _partitions(total):
            add(f"eqrel({','.join(map(str, part))})", gen_family("eqrel", part))
    for total in range(1, 7):
        for part in _partitions(total):
            add(f"atoms({','.join(map(str, part))})", gen_family("atoms", part))
    for q, d in ((2, 1), (2, 2), (3, 1), (3, 2)):
        add(f"vecspace({q},{d})", gen_family("vecspace", q, d))
    for i in range(n_random):
        s = random_structure(rng)
        add(f"random#{i:02d}(n={s.n})", s)

    composition_pairs = [
        (i, j)
        for i in range(len(structures))
        for j in range(len(structures))
        if structures[i][1].n * structures[j][1].n <= max_product
    ]
    index = {desc: i for i, (desc, _) in enumerate(structures)}
    anchors = {(index[a], index[b]) for a, b in _ANCHOR_UNIONS}
    union_pairs = sorted(anchors | set(rng.sample(composition_pairs, min(n_union_pairs, len(composition_pairs)))))
    unary = [(f"unary{sizes}", s) for sizes, s in _unary_with_sizes(6, 2)]
    return Corpus(seed, structures, _profile_grid(rng), union_pairs, composition_pairs, unary)


# -- unary enumeration --------------------------------------------------------


def _unary_with_sizes(k: int, p: int) -> list[tuple[tuple[int, ...], FiniteStructure]]:
    if not 0 <= k <= 10 or not 0 <= p <= 4:
        raise StructureError(f"enumerate_unary: need k <= 10 and p <= 4, got k={k}, p={p}")
    regions = 2**p
    names = [f"P{i}" for i in range(p)]
    out = []
    for total in range(1, k + 1):
        for part in _partitions(total):
            if len(part) > regions:
                continue
            interp: dict[str, set] = {name: set() for name in names}
            x = 0
            for region, size in enumerate(part):
                for bit, name in enumerate(names):
                    if region >> bit & 1:
                        interp[name].update((y,) for y in range(x, x + size))
                x += size
            sig = Signature(tuple((name, 1) for name in names))
            out.append((part, FiniteStructure(total, sig, interp)))
    return out


def enumerate_unary(k: int, p: int) -> list[FiniteStructure]:
    """One structure per isomorphism class of unary structures with <= k elements and <= p predicates.

    A class is determined by the multiset of nonempty atom sizes, realized by
    filling atoms in the order of their predicate bit patterns.
    """
    return [s for _, s in _unary_with_sizes(k, p)]


# -- evaluation ---------------------------------------------------------------


def _j(v):
    if v is INF:
        return "inf"
    if isinstance(v, Tetrad):
        return [_j(x) for x in v.as_tuple()]
    if isinstance(v, (frozenset, set)):
        return sorted(v)
    if isinstance(v, (list, tuple)):
        return [_j(x) for x in v]
    if isinstance(v, dict):
        return {k: _j(x) for k, x in v.items()}
    return v


def raw_tetrad(s: FiniteStructure) -> Tetrad:
    """The four degrees, without the consistency assertions of :func:`tetrad`."""
    return Tetrad(*(deg(s, q, m).degree for q, m in ((EXISTS, SEM), (EXISTS, SYNT), (FORALL, SEM), (FORALL, SYNT))))


def _fmt(a: Iterable[int]) -> str:
    return "{" + ",".join(map(str, sorted(a))) + "}"


class _Run:
    def __init__(self, claims: set[str], corpus: Corpus):
        self.claims = claims
        self.corpus = corpus
        self.reports: list[CheckReport] = []
        self._tetrads: dict[FiniteStructure, Tetrad] = {}

    def wants(self, *ids: str) -> bool:
        return any(i in self.claims for i in ids)

    def tetrad(self, s: FiniteStructure) -> Tetrad:
        t = self._tetrads.get(s)
        if t is None:
            t = self._tetrads[s] = raw_tetrad(s)
        return t

    def check(self, claim_id: str, instance: str, fn: Callable[[], Optional[tuple]]) -> None:
        """Run ``fn`` -> (expected, computed), or None when the side conditions fail."""
        if claim_id not in self.claims:
            return
        claim = CLAIMS[claim_id]
        try:
            res = fn()
        except Exception as exc:  # engine failures become failing reports
            self._emit(claim, instance, None, f"error: {type(exc).__name__}: {exc}", FAIL)
            return
        if res is None:
            self._emit(claim, instance, None, None, NA)
            return
        expected, computed = _j(res[0]), _j(res[1])
        self._emit(claim, instance, expected, computed, PASS if expected == computed else FAIL)

    def _emit(self, claim: Claim, instance, expected, computed, verdict) -> None:
        self.reports.append(CheckReport(claim.id, instance, expected, computed, verdict, claim.quote, claim.gating))


def _subset(rng: random.Random, universe: Iterable[int], p: float = 0.35) -> frozenset[int]:
    return frozenset(x for x in universe if rng.random() < p)


_MODES = ((SEM, "sem"), (SYNT, "synt"))


def _structure_checks(run: _Run, desc: str, s: FiniteStructure, rng: random.Random) -> None:
    t = run.tetrad(s)
    n = s.n
    g = aut(s)
    rigid = g.order == 1

    def ineq(a, b):
        return ("holds", "holds" if a <= b else f"violated: {to_json(a)} > {to_json(b)}")

    run.check("INEQ_1", desc, lambda: ineq(t.a_sem, t.a_synt))
    run.check("INEQ_2", desc, lambda: ineq(t.e_sem, t.e_synt))
    run.check("INEQ_3", desc, lambda: ineq(t.e_sem, t.a_sem))
    run.check("INEQ_4", desc, lambda: ineq(t.e_synt, t.a_synt))
    run.check("FINITE_COLLAPSE", desc, lambda: ([t.e_sem, t.a_sem], [t.e_synt, t.a_synt]))

    def upper():
        bad = [to_json(x) for x in t.as_tuple() if not (is_finite(x) and x <= max(n - 1, 0))]
        free = n - len(dcl(s))
        if not rigid and free > 0:
            bad += [f"e={x} > {free - 1}" for x in (t.e_sem, t.e_synt) if x > free - 1]
        return ("holds", "holds" if not bad else f"violated: {bad}")

    run.check("UPPER_BOUND", desc, upper)
    run.check("ZERO_EQUIV", desc, lambda: ([rigid] * 4, [x == 0 for x in t.as_tuple()]))

    a = _subset(rng, range(n))
    b = a | _subset(rng, range(n))

    def closure():
        da, db = dcl(s, a), dcl(s, b)
        return (
            [True, True, True, True],
            [a <= da, dcl(s, da) == da, da <= db, dcl(s) | a <= da],
        )

    run.check("DCL_CLOSURE", f"{desc} A={_fmt(a)} B={_fmt(b)}", closure)
    run.check("IND_MONOTONE", f"{desc} A={_fmt(a)} B={_fmt(b)}", lambda: ("holds", "holds" if ind_rig(s, a) >= ind_rig(s, b) else [ind_rig(s, a), ind_rig(s, b)]))

    def rel_tetrad(x: Iterable[int]) -> Tetrad:
        return run.tetrad(expand_by_constants(s, x))

    closed = dcl(s)
    for label, part in (("dcl(∅)", closed), ("half", frozenset(sorted(closed)[: (len(closed) + 1) // 2]))):
        run.check("PROP_DEGA_1", f"{desc} A={label}{_fmt(part)}", lambda part=part: (t, rel_tetrad(part)) if part else None)

    for m, tag in _MODES:
        w = deg(s, EXISTS, m).witness
        extra = _subset(rng, range(n), 0.2)
        run.check("PROP_DEGA_2", f"{desc} [{tag}] A={_fmt(set(w) | extra)}", lambda w=w, extra=extra, m=m: (0, deg_rel(s, set(w) | extra, EXISTS, m).degree))

    def monotone():
        ta, tb = rel_tetrad(a), rel_tetrad(b)
        ok = all(x >= y for x, y in zip(ta.as_tuple(), tb.as_tuple()))
        return ("holds", "holds" if ok else f"violated: {ta} vs {tb}")

    run.check("PROP_DEGA_3", f"{desc} A={_fmt(a)} B={_fmt(b)}", monotone)

    for m, tag in _MODES:
        rep = deg(s, EXISTS, m)

        def additivity(rep=rep, m=m):
            w = frozenset(rep.witness)
            if not w:
                return None
            sums = set()
            for r in range(len(w) + 1):
                for sub in combinations(sorted(w), r):
                    sums.add(deg_rel(s, sub, EXISTS, m).degree + deg_rel(s, w - set(sub), EXISTS, m).degree)
            return ([rep.degree], sorted(sums))

        run.check("PROP_DEGA_4", f"{desc} [{tag}] A={_fmt(rep.witness)}", additivity)

    run.check(
        "PROP_DEGA_5",
        f"{desc} A={_fmt(a)}",
        lambda: ([True, True], [is_finite(deg_rel(s, a, EXISTS, m).degree) for m in (SEM, SYNT)]),
    )

    def finite_rig():
        ext = frozenset(rigiditize(s, a))
        need = next(
            k
            for k in range(n + 1)
            if any(is_sem_rigid(s, a | set(c)) for c in combinations(sorted(set(range(n)) - a), k))
        )
        return ([True, True, True, need], [a <= ext, is_sem_rigid(s, ext), is_synt_rigid(s, ext), len(ext - a)])

    run.check("PROP_DEGA_6", f"{desc} A={_fmt(a)}", finite_rig)

    family, _, args = desc.partition("(")
    params = [int(x) for x in args.rstrip(")").split(",")] if family in ("empty", "cycle", "eqrel", "vecspace") else []
    if family == "empty":
        run.check("EX_EMPTY", desc, lambda: ([n - 1] * 4, t))
    if family == "cycle":
        run.check("EX_CYCLE", desc, lambda: ([1, 1, 1, 1], t))
    if family == "eqrel":
        # classes of equal size are interchangeable, so one orbit covers all of them
        by_size = max(k * params.count(k) for k in params)
        run.check("EX_IND_EQREL", desc, lambda: (by_size, ind_rig(s)))
        run.check("FINDING_IND_MAXBLOCK", desc, lambda: (max(params), ind_rig(s)))
    if family == "vecspace":
        q, d = params
        vec_rigid = d == 0 or (q, d) == (2, 1)
        run.check("EX_VECSPACE", desc, lambda: (0 if vec_rigid else d, t.e_sem))
        run.check("FINDING_VEC_FORALL", desc, lambda: None if vec_rigid else ((d - 1) * q + 1, t.a_sem))


def _atom_sizes(s: FiniteStructure) -> list[int]:
    regions: dict[tuple, int] = {}
    unary = [rel for _, ar, rel in s.relations() if ar == 1]
    for x in range(s.n):
        key = tuple((x,) in rel for rel in unary)
        regions[key] = regions.get(key, 0) + 1
    return list(regions.values())


def _expected_unary_tetrad(s: FiniteStructure) -> list:
    m = sum(k - 1 for k in _atom_sizes(s))
    if m == 0:
        return [0, 0, 0, 0]
    return [m, m, s.n - 1, s.n - 1]


def _expected_profile_shape(p: MonadicProfile) -> str:
    sem_rigid = all(a.u is not INF and a.u <= 1 for a in p.classes)
    finite = p.is_finite()
    if finite:
        return "rigid" if sem_rigid else "finite"
    synt_rigid = sem_rigid and all(a.u == 0 or (is_finite(a.c) and a.definable) for a in p.classes)
    if synt_rigid:
        return "rigid"
    return "sem_rigid_only" if sem_rigid else "non_rigid_infinite"


def _unary_checks(run: _Run) -> None:
    c = run.corpus
    for desc, s in c.unary + [(d, s) for d, s in c.structures if d.startswith("atoms(")]:
        run.check("COR_SEM_SYNT1", desc, lambda s=s: (_expected_unary_tetrad(s), run.tetrad(s)))
    for desc, p in c.profiles:
        run.check("COR_SEM_SYNT1", f"profile {desc}", lambda p=p: (_expected_profile_shape(p), profile_tetrad(p).shape()))


def _union_checks(run: _Run) -> None:
    c = run.corpus
    for k, (i, j) in enumerate(c.union_pairs):
        (d1, s1), (d2, s2) = c.structures[i], c.structures[j]
        pair = f"{d1} + {d2}"
        u, layout = disjoint_union(s1, s2)
        t1, t2 = run.tetrad(s1), run.tetrad(s2)
        tu = run.tetrad(u)
        for m, tag in _MODES:
            e = [(t.e_sem if m == SEM else t.e_synt) for t in (t1, t2, tu)]
            a = [(t.a_sem if m == SEM else t.a_synt) for t in (t1, t2, tu)]
            inst = f"{pair} [{tag}]"
            run.check("THM_DIS_1", inst, lambda e=e: (e[0] + e[1], e[2]))
            run.check("THM_DIS_2", inst, lambda a=a: (a[0] == 0 and a[1] == 0, a[2] == 0))
            formula = max(s1.n + a[1], s2.n + a[0])
            run.check("THM_DIS_3", inst, lambda a=a, f=formula: (f, a[2]) if 0 < a[2] < INF else None)
            run.check("THM_DIS_3_POS", inst, lambda a=a, f=formula: (f, a[2]) if a[0] > 0 and a[1] > 0 else None)
        if run.wants("THM_DIS_IND"):
            prng = random.Random(c.seed * 100003 + k)
            params = [frozenset()] + [_subset(prng, range(u.n), p) for p in (0.15, 0.3, 0.5, 0.7)][: c.union_params - 1]
            for a in params:
                a1, a2 = layout.split(a)
                run.check("THM_DIS_IND", f"{pair} A={_fmt(a)}", lambda a=a, a1=a1, a2=a2: (max(ind_rig(s1, a1), ind_rig(s2, a2)), ind_rig(u, a)))


def _composition_checks(run: _Run) -> None:
    c = run.corpus
    for i, j in c.composition_pairs:
        (dm, m0), (dn, n0) = c.structures[i], c.structures[j]
        pair = f"{dm}[{dn}]"
        m, n = rename_apart(m0, "_m"), rename_apart(n0, "_n")
        comp, _ = compose(m, n)
        gm, gn, gc = aut(m), aut(n), aut(comp)
        run.check("PROP_WREATH", pair, lambda: (gn.order**m.n * gm.order, gc.order))
        if run.wants("PROP_WREATH_SHARED") and set(m0.sig.names) & set(n0.sig.names):
            run.check("PROP_WREATH_SHARED", pair, lambda: (aut(n0).order**m0.n * aut(m0).order, aut(compose(m0, n0)[0]).order))
        if not run.wants("THM_COMP1", "THM_COMP2", "COR_ZERO", "THM_COMP3_a", "THM_COMP3_b", "THM_COMP3_c", "THM_COMP3_d"):
            continue
        tm, tn, tc = run.tetrad(m), run.tetrad(n), run.tetrad(comp)
        n_rigid = gn.order == 1
        n_closed = len(dcl(n)) == n.n
        run.check("THM_COMP1", pair, lambda: (tm.e_sem if n_rigid else m.n * tn.e_sem, tc.e_sem))
        run.check("THM_COMP2", pair, lambda: (tm.e_synt if n_closed else m.n * tn.e_synt, tc.e_synt))
        for md, tag in _MODES:
            am, an, ac = [(t.a_sem if md == SEM else t.a_synt) for t in (tm, tn, tc)]
            inst = f"{pair} [{tag}]"
            run.check("COR_ZERO", inst, lambda am=am, an=an, ac=ac: (am == 0 and an == 0, ac == 0))
            run.check("THM_COMP3_a", inst, lambda am=am, an=an, ac=ac: ((am - 1) * n.n + 1, ac) if ac > 0 and an == 0 else None)
            run.check("THM_COMP3_b", inst, lambda an=an, ac=ac: ((m.n - 1) * n.n + an, ac) if ac > 0 and an > 0 else None)
            # case ii needs an infinite outer structure, which finite corpora never supply
            run.check("THM_COMP3_c", inst, lambda: None)
            run.check("THM_COMP3_d", inst, lambda an=an, ac=ac: (an, ac) if ac > 0 and m.n == 1 else None)


def _monadic_checks(run: _Run) -> None:
    c = run.corpus
    for desc, p in c.profiles:
        head, _, args = desc.partition("(")
        args = args.rstrip(")").split(",")
        if head == "N" and len(args) == 1:
            nn = int(args[0])
            run.check("EX_MONADIC_N", desc, lambda p=p, nn=nn: ([0, nn, 0, INF], profile_tetrad(p)))
        if head == "N" and len(args) == 2:
            if args[0] == "omega":
                run.check("EX_MONADIC_NMN", desc, lambda p=p: ([INF] * 4, profile_tetrad(p)))
            else:
                mm, nn = int(args[0]), int(args[1])
                run.check("EX_MONADIC_NMN", desc, lambda p=p, mm=mm, nn=nn: ([mm, mm + nn, INF, INF], profile_tetrad(p)))
        if head == "realize_pair":
            mu, nu = (INF if x == "inf" else int(x) for x in args)
            run.check("THM_DEG_PAIRS", desc, lambda p=p, mu=mu, nu=nu: ([mu, nu], list(profile_tetrad(p).as_tuple()[:2])))
        if desc.startswith("N'"):
            run.check("FINDING_N_PRIME", desc, lambda p=p: ([0, "n", "inf", "inf"], profile_tetrad(p)))
        if p.is_finite():

            def agree(p=p):
                s = truncate(p)
                return ([profile_tetrad(p), profile_ind(p)], [run.tetrad(s), ind_rig(s)])

            run.check("PROFILE_TRUNCATION", desc, agree)
    for lam in list(range(7)) + [OMEGA]:
        run.check("PROP_IND", f"bounded_index_profile({to_json(lam, 'omega')})", lambda lam=lam: (lam, profile_ind(bounded_index_profile(lam))))


def run_suite(suite: str | Iterable[str], corpus: Corpus) -> list[CheckReport]:
    """Every report for the claims in ``suite``, sorted by (claim, instance)."""
    claims = resolve_suite(suite)
    run = _Run(claims, corpus)
    groups = {CLAIMS[k].group for k in claims}
    if "structures" in groups:
        for k, (desc, s) in enumerate(corpus.structures):
            _structure_checks(run, desc, s, random.Random(corpus.seed * 7919 + k))
    if "unary" in groups:
        _unary_checks(run)
    if "unions" in groups:
        _union_checks(run)
    if "compositions" in groups:
        _composition_checks(run)
    if "monadic" in groups:
        _monadic_checks(run)
    return sorted(run.reports, key=lambda r: (r.claim_id, r.instance))


def summarize(reports: Iterable[CheckReport]) -> dict:
    out = {"pass": 0, "fail": 0, "na": 0}
    for r in reports:
        out["na" if r.verdict == NA else r.verdict] += 1
    return out


def report_dict(seed: int, reports: list[CheckReport]) -> dict:
    gating = [r for r in reports if r.gating]
    findings = [r for r in reports if not r.gating]
    return {
        "seed": seed,
        "summary": summarize(gating),
        "reports": [r.to_dict() for r in gating],
        "findings": {"summary": summarize(findings), "reports": [r.to_dict() for r in findings]},
    }


def report_json(seed: int, reports: list[CheckReport]) -> str:
    """Deterministic JSON text with one report per line."""
    d = report_dict(seed, reports)

    def block(rows: list[dict], indent: str) -> str:
        if not rows:
            return "[]"
        inner = ",\n".join(indent + "  " + json.dumps(r, ensure_ascii=False) for r in rows)
        return "[\n" + inner + "\n" + indent + "]"

    f = d["findings"]
    return (
        "{\n"
        f'  "seed": {json.dumps(d["seed"])},\n'
        f'  "summary": {json.dumps(d["summary"])},\n'
        f'  "reports": {block(d["reports"], "  ")},\n'
        f'  "findings": {{\n    "summary": {json.dumps(f["summary"])},\n    "reports": {block(f["reports"], "    ")}\n  }}\n'
        "}\n"
    )


def claim_coverage(reports: Iterable[CheckReport]) -> dict[str, int]:
    """Number of applicable (non-NA) reports per claim."""
    out = {k: 0 for k in CLAIMS}
    for r in reports:
        if r.verdict != NA:
            out[r.claim_id] += 1
    return out
