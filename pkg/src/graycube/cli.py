"""Command-line front end.

Exit status: 0 when every check passed, 1 when checks ran and found
violations, 2 for malformed input.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import cube as cubes
from .gray import BULLETS, BlockSplit, verify_gray_relations
from .poset import inversions
from .retract import describe, retraction, section, verify_retract
from .theta import ThetaShape, build_theta, shapes_of_dim
from .twocat import category_to_json, check_axioms, functor_to_json, to_jsonable


@dataclass
class CommandResult:
    exit_code: int
    stdout: str


class UsageError(Exception):
    pass


def max_dim() -> int:
    return int(os.environ.get("GRAYCUBE_MAX_DIM", "7"))


def _dim(text) -> int:
    try:
        d = int(text)
    except ValueError:
        raise UsageError(f"not a dimension: {text!r}")
    if d < 0:
        raise UsageError(f"dimension must be nonnegative: {d}")
    if d > max_dim():
        raise UsageError(f"dimension {d} exceeds GRAYCUBE_MAX_DIM={max_dim()}")
    return d


def _shape(text) -> ThetaShape:
    try:
        s = ThetaShape.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc))
    if s.dim > max_dim():
        raise UsageError(f"{s} needs dimension {s.dim} > GRAYCUBE_MAX_DIM={max_dim()}")
    return s


def _bits(text, d):
    try:
        return cubes.parse_bits(text, d)
    except ValueError as exc:
        raise UsageError(str(exc))


def _hom_key(t):
    return (-len(inversions(t)), tuple(t))


def hom_table(d, e, z) -> str:
    h = cubes.hom_poset(d, e, z)
    lines = [f"hom {cubes.bits_str(e)} -> {cubes.bits_str(z)} in cube {d}: {len(h)} cells"]
    for t in sorted(h, key=_hom_key):
        lines.append(f"  {t}")
    lines.append("covers:")
    for lo, hi in sorted(h.cover_pairs(), key=lambda p: (_hom_key(p[0]), _hom_key(p[1]))):
        lines.append(f"  {lo} ⊴ {hi}")
    return "\n".join(lines) + "\n"


def cmd_cube(args, out):
    d = _dim(args.d)
    if args.action == "axioms":
        c = cubes.build_cube(d)
        bad = check_axioms(c)
        if args.format == "json":
            json.dump({"dim": d, "ok": not bad, "violations": [str(v) for v in bad]}, out)
            out.write("\n")
        else:
            n = sum(1 for _ in c.cells())
            out.write(f"cube {d}: {len(c.objects)} objects, {n} 1-cells: "
                      f"{'pass' if not bad else 'FAIL'}\n")
            for v in bad:
                out.write(f"  {v}\n")
        return 1 if bad else 0
    if args.src is None or args.dst is None:
        raise UsageError("cube hom needs <d> <src-bits> <dst-bits>")
    e, z = _bits(args.src, d), _bits(args.dst, d)
    if args.format == "json":
        json.dump(cubes.hom_poset(d, e, z).to_json(to_jsonable), out, ensure_ascii=False)
        out.write("\n")
    else:
        out.write(hom_table(d, e, z))
    return 0


def cmd_theta(args, out):
    s = _shape(args.shape)
    c = build_theta(s)
    bad = check_axioms(c)
    if args.format == "json":
        json.dump(category_to_json(c), out)
        out.write("\n")
        return 1 if bad else 0
    out.write(f"shape {s}: objects 0..{s.n}\n")
    for j in c.objects:
        for k in c.successors(j):
            h = c.hom(j, k)
            cells = " ".join(str(list(f)) for f in h)
            out.write(f"  Hom({j},{k}): {len(h)} cells {cells}\n")
    out.write(f"axioms: {'pass' if not bad else 'FAIL'}\n")
    for v in bad:
        out.write(f"  {v}\n")
    return 1 if bad else 0


def _report_text(r) -> str:
    lines = [f"report for {r.shape}:"]
    for name in ("section_ok", "retraction_ok", "composite_identity", "idempotent_ok"):
        lines.append(f"  {name}: {'pass' if getattr(r, name) else 'FAIL'}")
    lines += [f"  witness: {w}" for w in r.witnesses]
    return "\n".join(lines) + "\n"


def _sweep_one(s: ThetaShape) -> dict:
    return verify_retract(s).to_json()


def cmd_retract(args, out):
    if args.action == "verify":
        if args.shape is None:
            raise UsageError("retract verify needs a shape literal")
        s = _shape(args.shape)
        r = verify_retract(s)
        if args.format == "json":
            json.dump({"report": r.to_json(),
                       "section": functor_to_json(section(s)),
                       "retraction": functor_to_json(retraction(s)) if r.retraction_ok else None},
                      out, ensure_ascii=False)
            out.write("\n")
        else:
            out.write(describe(s) if r.retraction_ok else "")
            out.write("\n" + _report_text(r))
        return 0 if r.ok else 1
    top = _dim(args.max_dim if args.max_dim is not None else max_dim())
    shapes = [s for d in range(top + 1) for s in shapes_of_dim(d)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            reports = list(pool.map(_sweep_one, shapes))
    else:
        reports = [_sweep_one(s) for s in shapes]
    failed = [r for r in reports if not r["ok"]]
    if args.format == "json":
        json.dump({"max_dim": top, "shapes": len(reports), "failed": len(failed),
                   "reports": reports}, out)
        out.write("\n")
    else:
        for r in reports:
            out.write(f"{r['shape']:<16} d={r['d']}  {'pass' if r['ok'] else 'FAIL'}\n")
        out.write(f"{len(reports)} shapes, {len(failed)} failed\n")
    return 1 if failed else 0


def cmd_gray(args, out):
    m, n = _dim(args.m), _dim(args.n)
    if m + n > max_dim():
        raise UsageError(f"m + n = {m + n} exceeds GRAYCUBE_MAX_DIM={max_dim()}")
    r = verify_gray_relations(BlockSplit(m, n))
    if args.format == "json":
        json.dump(r.to_json(), out, ensure_ascii=False)
        out.write("\n")
    else:
        out.write(f"Gray relations in cube {m}+{n}:\n")
        for b in BULLETS:
            bad = [v for v in r.violations if v.kind == b]
            out.write(f"  {'pass' if not bad else 'FAIL'}  {b} ({r.counts[b]} instances)\n")
            for v in bad[:10]:
                out.write(f"      {v}\n")
    return 0 if r.ok else 1


def cmd_export(args, out):
    what, rest = args.what, args.rest
    if args.kind == "dot":
        if what == "cube" and len(rest) == 1:
            out.write(cubes.atom_dot(_dim(rest[0])))
        elif what == "hom" and len(rest) == 3:
            d = _dim(rest[0])
            e, z = _bits(rest[1], d), _bits(rest[2], d)
            out.write(cubes.hasse_dot(cubes.hom_poset(d, e, z),
                                      f"hom_{cubes.bits_str(e)}_{cubes.bits_str(z)}"))
        else:
            raise UsageError("export dot takes: cube <d> | hom <d> <src> <dst>")
        return 0
    if what == "cube" and len(rest) == 1:
        data = category_to_json(cubes.build_cube(_dim(rest[0])))
    elif what == "theta" and len(rest) == 1:
        data = category_to_json(build_theta(_shape(rest[0])))
    elif what == "section" and len(rest) == 1:
        data = functor_to_json(section(_shape(rest[0])))
    elif what == "retraction" and len(rest) == 1:
        data = functor_to_json(retraction(_shape(rest[0])))
    elif what == "hom" and len(rest) == 3:
        d = _dim(rest[0])
        data = cubes.hom_poset(d, _bits(rest[1], d), _bits(rest[2], d)).to_json(to_jsonable)
    else:
        raise UsageError("export json takes: cube <d> | theta <shape> | section <shape> | "
                         "retraction <shape> | hom <d> <src> <dst>")
    json.dump(data, out, ensure_ascii=False)
    out.write("\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(add_help=False)
    top.add_argument("--format", choices=("text", "json"), default="text")
    # accepted after the subcommand too, without clobbering an earlier value
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    p = argparse.ArgumentParser(prog="graycube", parents=[top],
                                description="Gray cubes, Θ₂ shapes and their retractions.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("cube", parents=[common], help="Gray cube constructions")
    c.add_argument("action", choices=("axioms", "hom"))
    c.add_argument("d")
    c.add_argument("src", nargs="?")
    c.add_argument("dst", nargs="?")
    c.set_defaults(func=cmd_cube)

    t = sub.add_parser("theta", parents=[common], help="Θ₂ shapes")
    t.add_argument("action", choices=("build",))
    t.add_argument("shape")
    t.set_defaults(func=cmd_theta)

    r = sub.add_parser("retract", parents=[common], help="section and retraction")
    r.add_argument("action", choices=("verify", "sweep"))
    r.add_argument("shape", nargs="?")
    r.add_argument("--max-dim", dest="max_dim")
    r.add_argument("--jobs", type=int, default=1)
    r.set_defaults(func=cmd_retract)

    g = sub.add_parser("gray", parents=[common], help="Gray tensor relations")
    g.add_argument("action", choices=("verify",))
    g.add_argument("m")
    g.add_argument("n")
    g.set_defaults(func=cmd_gray)

    x = sub.add_parser("export", parents=[common], help="JSON or DOT export")
    x.add_argument("kind", choices=("json", "dot"))
    x.add_argument("what")
    x.add_argument("rest", nargs="*")
    x.set_defaults(func=cmd_export)
    return p


def run(argv: list[str]) -> CommandResult:
    out, err = io.StringIO(), io.StringIO()
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return CommandResult(int(exc.code or 0), out.getvalue() + err.getvalue())
    try:
        code = args.func(args, out)
    except UsageError as exc:
        return CommandResult(2, f"{parser.format_usage()}graycube: error: {exc}\n")
    return CommandResult(code, out.getvalue())


def main(argv=None):
    result = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if result.exit_code != 2 else sys.stderr
    stream.write(result.stdout)
    sys.exit(result.exit_code)


if __name__ == "__main__":
    main()
