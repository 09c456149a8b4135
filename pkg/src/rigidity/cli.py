"""Command-line interface.

Structure arguments are JSON files, or family descriptors such as
``cycle(3)`` and ``eqrel(2,3)`` when no file of that name exists.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Sequence

from . import combinators, degrees, harness, monadic
from .extnat import parse as parse_extnat
from .extnat import to_json
from .structures import FiniteStructure, StructureError, load, parse_family, save

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_FAIL = 2


class InputError(Exception):
    pass


def _structure(arg: str) -> FiniteStructure:
    if os.path.exists(arg):
        return load(arg)
    if "(" in arg:
        return parse_family(arg)
    raise InputError(f"{arg}: no such file")


def _profile(arg: str) -> monadic.MonadicProfile:
    if not os.path.exists(arg):
        raise InputError(f"{arg}: no such file")
    return monadic.profile_load(arg)


def _element_set(text: str | None) -> list[int]:
    if text is None or not text.strip():
        return []
    try:
        return [int(x) for x in text.replace("{", "").replace("}", "").split(",") if x.strip()]
    except ValueError:
        raise InputError(f"--set: expected comma-separated integers, got {text!r}") from None


def _fmt_set(xs) -> str:
    return "{" + ",".join(str(x) for x in sorted(xs)) + "}"


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print(text)


def _table(rows: Sequence[tuple]) -> str:
    width = max(len(str(r[0])) for r in rows)
    return "\n".join(f"{str(k).ljust(width)}  {v}" for k, v in rows)


# -- subcommands --------------------------------------------------------------


def cmd_aut(args) -> int:
    g = degrees.aut(_structure(args.file))
    summary = g.summary()
    summary["orbits"] = g.orbits()
    text = _table(
        [
            ("order", g.order),
            ("base", summary["base"]),
            ("generators", len(summary["generators"])),
            ("orbits", " ".join(_fmt_set(o) for o in summary["orbits"])),
        ]
    )
    _emit(args, summary, text)
    return EXIT_OK


def cmd_dcl(args) -> int:
    s = _structure(args.file)
    closure = sorted(degrees.dcl(s, _element_set(args.set)))
    _emit(args, {"dcl": closure}, _fmt_set(closure))
    return EXIT_OK


def cmd_degrees(args) -> int:
    s = _structure(args.file)
    qs = [degrees.quantifier(args.quantifier)] if args.quantifier else [degrees.EXISTS, degrees.FORALL]
    ms = [degrees.mode(args.mode)] if args.mode else [degrees.SEM, degrees.SYNT]
    reports = [degrees.deg(s, q, m) for q in qs for m in ms]
    rows = [
        (f"{r.quantifier}-{r.mode}", f"{to_json(r.degree)}  witness={'-' if r.witness is None else _fmt_set(r.witness)}")
        for r in reports
    ]
    _emit(args, {"degrees": [r.to_dict() for r in reports]}, _table(rows))
    return EXIT_OK


def cmd_tetrad(args) -> int:
    t = degrees.tetrad(_structure(args.file))
    _emit(args, t.to_dict(), str(t))
    return EXIT_OK


def cmd_ind(args) -> int:
    value = degrees.ind_rig(_structure(args.file), _element_set(args.set))
    _emit(args, {"ind": value}, str(value))
    return EXIT_OK


def cmd_dunion(args) -> int:
    u, layout = combinators.disjoint_union(_structure(args.a), _structure(args.b))
    save(u, args.output)
    _emit(args, {"output": args.output, "n": u.n, "layout": layout.to_dict()}, f"wrote {args.output} (n={u.n}, markers={','.join(layout.markers)})")
    return EXIT_OK


def cmd_compose(args) -> int:
    m, n = _structure(args.m), _structure(args.n)
    if args.rename_apart:
        m, n = combinators.rename_apart(m, "_m"), combinators.rename_apart(n, "_n")
    c, layout = combinators.compose(m, n)
    save(c, args.output)
    _emit(args, {"output": args.output, "n": c.n, "layout": layout.to_dict()}, f"wrote {args.output} (n={c.n}, equivalence={layout.equivalence})")
    return EXIT_OK


def cmd_profile_tetrad(args) -> int:
    t = monadic.profile_tetrad(_profile(args.profile))
    payload = t.to_dict()
    payload["shape"] = t.shape()
    _emit(args, payload, f"{t}  {t.shape()}")
    return EXIT_OK


def cmd_profile_ind(args) -> int:
    value = monadic.profile_ind(_profile(args.profile))
    _emit(args, {"ind": to_json(value, "omega")}, str(to_json(value, "omega")))
    return EXIT_OK


def cmd_realize_pair(args) -> int:
    try:
        mu, nu = parse_extnat(args.mu), parse_extnat(args.nu)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    p = monadic.realize_pair(mu, nu)
    # the profile itself is the output in both modes
    print(json.dumps(p.to_dict()))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    structs = harness.enumerate_unary(args.max_size, args.max_preds)
    if args.output_dir:
        os.makedirs(args.output_dir, exist_ok=True)
        for i, s in enumerate(structs):
            save(s, os.path.join(args.output_dir, f"unary_{i:04d}.json"))
    if args.json:
        from .structures import to_dict

        print(json.dumps([to_dict(s) for s in structs]))
    else:
        for i, s in enumerate(structs):
            sizes = sorted(harness._atom_sizes(s), reverse=True)
            print(f"{i:4d}  n={s.n}  atoms={sizes}")
        print(f"{len(structs)} structures")
    return EXIT_OK


def cmd_check(args) -> int:
    try:
        harness.resolve_suite(args.suite)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    start = time.perf_counter()
    corpus = harness.default_corpus(args.seed)
    reports = harness.run_suite(args.suite, corpus)
    text = harness.report_json(args.seed, reports)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text)
    d = harness.report_dict(args.seed, reports)
    if args.json and not args.report:
        sys.stdout.write(text)
    else:
        per_claim: dict[str, dict] = {}
        for r in reports:
            row = per_claim.setdefault(r.claim_id, {"pass": 0, "fail": 0, "na": 0})
            row["na" if r.verdict == harness.NA else r.verdict] += 1
        lines = [f"{'claim':22s} {'pass':>6s} {'fail':>6s} {'na':>6s}"]
        for cid in sorted(per_claim):
            row = per_claim[cid]
            tag = "" if harness.CLAIMS[cid].gating else "  (finding)"
            lines.append(f"{cid:22s} {row['pass']:6d} {row['fail']:6d} {row['na']:6d}{tag}")
        s, f = d["summary"], d["findings"]["summary"]
        lines.append(f"gating: {s['pass']} pass, {s['fail']} fail, {s['na']} n/a")
        lines.append(f"findings: {f['pass']} pass, {f['fail']} fail, {f['na']} n/a")
        lines.append(f"seed {args.seed}, {time.perf_counter() - start:.1f}s")
        print("\n".join(lines))
    return EXIT_FAIL if d["summary"]["fail"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rigidity", description="Degrees of rigidity for finite structures.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
        sp.set_defaults(func=fn)
        return sp

    sp = add("aut", cmd_aut, "automorphism group summary")
    sp.add_argument("file")
    sp = add("dcl", cmd_dcl, "definable closure of a set")
    sp.add_argument("file")
    sp.add_argument("--set", default="", help="elements, e.g. 0,2")
    sp = add("degrees", cmd_degrees, "degrees of rigidity with witnesses")
    sp.add_argument("file")
    sp.add_argument("--quantifier", help="exists | forall (default: both)")
    sp.add_argument("--mode", help="sem | synt (default: both)")
    sp = add("tetrad", cmd_tetrad, "(∃-sem, ∃-synt, ∀-sem, ∀-synt)")
    sp.add_argument("file")
    sp = add("ind", cmd_ind, "index of rigidity over a set")
    sp.add_argument("file")
    sp.add_argument("--set", default="")
    sp = add("dunion", cmd_dunion, "disjoint union of two structures")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("-o", "--output", required=True)
    sp = add("compose", cmd_compose, "E-definable composition M[N]")
    sp.add_argument("m")
    sp.add_argument("n")
    sp.add_argument("-o", "--output", required=True)
    sp.add_argument("--rename-apart", action="store_true", help="suffix symbols so the languages are disjoint")
    sp = add("profile-tetrad", cmd_profile_tetrad, "tetrad of a monadic profile")
    sp.add_argument("profile")
    sp = add("profile-ind", cmd_profile_ind, "index of rigidity of a monadic profile")
    sp.add_argument("profile")
    sp = add("realize-pair", cmd_realize_pair, "profile with given ∃-sem / ∃-synt degrees")
    sp.add_argument("mu")
    sp.add_argument("nu")
    sp = add("enumerate", cmd_enumerate, "unary structures up to isomorphism")
    sp.add_argument("--max-size", type=int, required=True)
    sp.add_argument("--max-preds", type=int, required=True)
    sp.add_argument("--output-dir", help="also write each structure as JSON")
    sp = add("check", cmd_check, "run the claim-checking harness")
    sp.add_argument("--suite", default="all", help="all | gating | findings | group | claim ids, comma-separated")
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--report", help="write the JSON report here")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, StructureError, monadic.ProfileError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
