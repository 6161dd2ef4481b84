"""Command-line front end.

Subcommands
-----------
``parse <ring-file>``
    Parse, validate, round-trip, and summarize each ring block.
``eval <ring-file> <expr> [--ring NAME]``
    Normalize an element expression in one of the file's rings.
``decide {unit,nilpotent,zerodivisor,idempotent} <ring-file> <expr>``
    Run a decision procedure; always prints a JSON certificate.
``oracle <ring-file> --report``
    Exhaustive finite-ring report (cardinality, units, nilpotents,
    idempotents, zero-divisors, primes, radical gradedness).
``spectra <ring-file> --pi0`` | ``spectra laurent --n N`` |
``spectra proj <ring-file> --gens "x,y" [--cap K]``
    Component/prime correspondences and the projective cover test.
``gallery <id|all> [--p P]``
    Curated self-checking examples.

Exit codes: 0 success or decided, 1 usage or semantic error,
2 search cap exceeded, 3 internal cross-check failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import decide as _decide
from .dsl import build_rings, eval_expression, parse_ring_file
from .errors import (CapExceededError, GradedRingError, ParseError,
                     TheoremViolationError)
from .gallery import GALLERY_IDS, run_gallery
from .oracle import FiniteRingTable
from .spectra import laurent_spec_star, pi0_equivalences, proj_quasicompact

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_CAP = 2
EXIT_VIOLATION = 3


def _emit(payload: dict, as_json: bool, lines=None) -> None:
    if as_json or lines is None:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _load_file(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    ast = parse_ring_file(text)
    return ast, build_rings(ast)


def _pick_ring(rings: dict, name):
    if name is None:
        return next(iter(rings.items()))
    if name not in rings:
        raise ValueError(
            f"no ring named {name!r} in file; available: {sorted(rings)}")
    return name, rings[name]


# -- subcommands -------------------------------------------------------------


def _cmd_parse(args) -> int:
    ast, rings = _load_file(args.ringfile)
    reparsed = parse_ring_file(ast.to_text())
    stable = reparsed == ast
    if not stable:
        raise TheoremViolationError("printed form did not re-parse equal")
    summaries = []
    for block, (name, ring) in zip(ast.blocks, rings.items()):
        summaries.append({
            "name": name,
            "base": str(ring.base),
            "grading": str(ring.grading),
            "generators": [g.name for g in ring.gens],
            "relations": len(block.rels),
            "reduction": block.reduction or "auto",
        })
    payload = {"schema": 1, "rings": summaries, "round_trip": stable}
    lines = [f"{len(summaries)} ring(s); round trip ok"]
    for s in summaries:
        gens = ", ".join(s["generators"]) or "(none)"
        lines.append(f"  {s['name']}: base {s['base']}, grading "
                     f"{s['grading']}, gens {gens}, {s['relations']} "
                     f"relation(s), reduction {s['reduction']}")
    _emit(payload, args.json, lines)
    return EXIT_OK


def _cmd_eval(args) -> int:
    _, rings = _load_file(args.ringfile)
    name, ring = _pick_ring(rings, args.ring)
    f = eval_expression(ring, args.expr)
    grades = [str(g) for g in sorted(f.support_grades(),
                                     key=lambda g: g.sort_token())]
    payload = {"schema": 1, "ring": name, "input": args.expr,
               "element": str(f), "homogeneous": f.is_homogeneous(),
               "grades": grades}
    lines = [f"{f}",
             f"  ring: {name}   homogeneous: {f.is_homogeneous()}   "
             f"grades: {', '.join(grades) or '(zero)'}"]
    _emit(payload, args.json, lines)
    return EXIT_OK


def _cmd_decide(args) -> int:
    _, rings = _load_file(args.ringfile)
    name, ring = _pick_ring(rings, args.ring)
    f = eval_expression(ring, args.expr)
    if args.question == "unit":
        cert = _decide.is_unit(f, cap=args.cap or _decide.DEFAULT_POWER_CAP)
    elif args.question == "nilpotent":
        cert = _decide.is_nilpotent(
            f, cap=args.cap or _decide.DEFAULT_POWER_CAP)
    elif args.question == "zerodivisor":
        cert = _decide.is_zero_divisor(f)
    else:
        cert = _decide.check_idempotent_homogeneity(f)
    payload = {"schema": 1, "question": args.question, "ring": name,
               "element": str(f), "verdict": cert.verdict,
               "certificate": cert.to_json(), "verified": True}
    print(json.dumps(payload, sort_keys=True))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    _, rings = _load_file(args.ringfile)
    name, ring = _pick_ring(rings, args.ring)
    table = FiniteRingTable(ring, cap=args.cap) if args.cap \
        else FiniteRingTable(ring)
    rep = table.report()
    rep["ring"] = name
    lines = [
        f"ring {name}: {rep['cardinality']} elements",
        f"  units {rep['units']}   nilpotents {rep['nilpotents']}   "
        f"zero-divisors {rep['zerodivisors']}",
        f"  idempotents: {', '.join(rep['idempotents'])}",
        f"  primes: {len(rep['primes'])} (sizes "
        f"{', '.join(str(s) for s in rep['primes'])})",
        f"  nilradical graded: {rep['nilradical_graded']}   "
        f"Jacobson graded: {rep['jacobson_graded']}",
    ]
    for key in ("nilradical_witness", "jacobson_witness"):
        if key in rep:
            lines.append(f"  {key.replace('_', ' ')}: {rep[key]}")
    _emit(rep, args.json, lines)
    return EXIT_OK


def _cmd_spectra(args) -> int:
    if args.target == "laurent":
        if args.n is None:
            raise ValueError("spectra laurent requires --n")
        data = laurent_spec_star(args.n)
        payload = {"schema": 1, "mode": "laurent", **data}
        lines = [
            f"Laurent ring Z/{args.n}[x, x^-1]: "
            f"{data['count']} homogeneous prime(s)",
        ]
        for item in data["graded_primes"]:
            lines.append(f"  ({item['divisor']})")
        lines.append(f"  prime divisors of {args.n}: "
                     f"{', '.join(str(p) for p in data['prime_divisors'])}")
        _emit(payload, args.json, lines)
        return EXIT_OK

    if args.target == "proj":
        if not args.ringfile:
            raise ValueError("spectra proj requires a ring file")
        if not args.gens:
            raise ValueError("spectra proj requires --gens")
        _, rings = _load_file(args.ringfile)
        name, ring = _pick_ring(rings, args.ring)
        gens = [eval_expression(ring, part.strip())
                for part in args.gens.split(",") if part.strip()]
        data = proj_quasicompact(ring, gens, degree_cap=args.cap or 10)
        payload = {"schema": 1, "mode": "proj", "ring": name, **data}
        if data["verdict"] == "QuasiCompact":
            lines = [f"proj cover by ({args.gens}): quasi-compact"]
            for gname, cert in data["certificates"].items():
                lines.append(f"  {gname}^{cert['exponent']} lies in the "
                             f"ideal ({len(cert['combination'])} term(s))")
        else:
            lines = [f"proj cover by ({args.gens}): unknown at cap "
                     f"{data['cap']}",
                     f"  {data['reason']}"]
        _emit(payload, args.json, lines)
        return EXIT_OK

    if not args.pi0:
        raise ValueError(
            "usage: spectra <ring-file> --pi0 | spectra laurent --n N | "
            "spectra proj <ring-file> --gens ...")
    _, rings = _load_file(args.target)
    name, ring = _pick_ring(rings, args.ring)
    table = FiniteRingTable(ring, cap=args.cap) if args.cap \
        else FiniteRingTable(ring)
    data = pi0_equivalences(table)
    payload = {"schema": 1, "mode": "pi0", "ring": name, **data}
    c = data["counts"]
    lines = [
        f"ring {name}: component counts "
        f"spec={c['spec']} degree-zero={c['spec_degree_zero']} "
        f"graded={c['spec_star']}",
        f"  bijections verified: {data['bijections_verified']}",
    ]
    _emit(payload, args.json, lines)
    return EXIT_OK


def _cmd_gallery(args) -> int:
    if args.item == "all":
        reports = []
        for item in GALLERY_IDS:
            reports.extend(run_gallery(item, args.p if item in (
                "torsion_nilradical", "group_ring_idempotent") else None))
    else:
        reports = run_gallery(args.item, args.p)
    payload = {"schema": 1,
               "reports": [r.to_json() for r in reports],
               "passed": all(r.passed for r in reports)}
    lines = []
    for r in reports:
        lines.append(f"== {r.id}: {r.title}")
        for sent in r.narrative:
            lines.append(f"   {sent}")
        for c in r.checks:
            lines.append(f"   [{'ok' if c['ok'] else 'FAIL'}] {c['name']}")
        lines.append("")
    lines.append(f"{len(reports)} report(s), all checks passed")
    _emit(payload, args.json, lines)
    return EXIT_OK


# -- wiring ------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="gradedrings",
        description="graded-ring decision procedures with certificates")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse and summarize a ring file")
    p.add_argument("ringfile")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_parse)

    p = sub.add_parser("eval", help="normalize an element expression")
    p.add_argument("ringfile")
    p.add_argument("expr")
    p.add_argument("--ring")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("decide", help="run a decision procedure")
    p.add_argument("question",
                   choices=["unit", "nilpotent", "zerodivisor", "idempotent"])
    p.add_argument("ringfile")
    p.add_argument("expr")
    p.add_argument("--ring")
    p.add_argument("--cap", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("oracle", help="exhaustive finite-ring report")
    p.add_argument("ringfile")
    p.add_argument("--report", action="store_true")
    p.add_argument("--ring")
    p.add_argument("--cap", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("spectra", help="component and prime structure")
    p.add_argument("target", help="ring file, or 'laurent', or 'proj'")
    p.add_argument("ringfile", nargs="?")
    p.add_argument("--pi0", action="store_true")
    p.add_argument("--n", type=int)
    p.add_argument("--gens")
    p.add_argument("--ring")
    p.add_argument("--cap", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_spectra)

    p = sub.add_parser("gallery", help="run curated examples")
    p.add_argument("item", choices=list(GALLERY_IDS) + ["all"])
    p.add_argument("--p", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_gallery)

    return top


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except CapExceededError as e:
        print(f"cap exceeded: {e}", file=sys.stderr)
        return EXIT_CAP
    except TheoremViolationError as e:
        print(f"cross-check failure: {e}", file=sys.stderr)
        return EXIT_VIOLATION
    except (GradedRingError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
