"""Command-line entry point: ``crossmpp <command> ...``.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import coherence, flipdyn, mppcore, signlattice, verify
from .crosspoly import Orientation, canonical, normalize, parse_orientation
from .errors import MppError
from .exactlin import format_q, vec_from_json, vec_to_json
from .pathspace import (
    MonotonePath,
    enumerate_paths,
    enumerate_strings,
    format_sign,
    path_is_coherent,
    path_to_signvector,
    string_is_coherent,
)


class UsageError(Exception):
    pass


def _fmt_vec(v, with_float: bool = False) -> str:
    text = "(" + ", ".join(format_q(x) for x in v) + ")"
    if with_float:
        text += "  ~ (" + ", ".join(f"{float(x):.6f}" for x in v) + ")"
    return text


def _emit(args, payload, text_lines) -> None:
    if getattr(args, "json", None) is not None:
        blob = json.dumps(payload, indent=2)
        if args.json == "-":
            print(blob)
        else:
            Path(args.json).write_text(blob + "\n", encoding="utf-8")
            for line in text_lines:
                print(line)
    else:
        for line in text_lines:
            print(line)


def _random_orientation(n: int, seed: int) -> list[Fraction]:
    rng = random.Random(seed)
    mags = rng.sample(range(1, 10 * n + 1), n)
    return [Fraction(m if rng.random() < 0.5 else -m) for m in mags]


def _orientation(args, *, need_n: bool = True) -> Orientation:
    raw = None
    if getattr(args, "a", None):
        raw = parse_orientation(args.a)
    elif getattr(args, "orientation", None):
        data = json.loads(Path(args.orientation).read_text(encoding="utf-8"))
        raw = list(vec_from_json(data["a"]))
        if "n" in data and int(data["n"]) != len(raw):
            raise UsageError(f"orientation file says n={data['n']} but lists {len(raw)} values")
    if raw is not None:
        if getattr(args, "n", None) is not None and args.n != len(raw):
            raise UsageError(f"--n {args.n} does not match {len(raw)} orientation values")
        o, perm = normalize(raw)
        if list(perm) != list(range(1, len(raw) + 1)):
            print(f"note: normalized orientation by signed permutation {list(perm)}", file=sys.stderr)
        return o
    if getattr(args, "n", None) is None:
        raise UsageError("give --n, --a or --orientation")
    if getattr(args, "seed", None) is not None:
        return normalize(_random_orientation(args.n, args.seed))[0]
    return canonical(args.n)


def _parse_path(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise UsageError(f"bad --path {text!r}; expected comma-separated signed integers") from None


# ---------------------------------------------------------------------------
# commands


def cmd_paths(args) -> int:
    n = args.n
    if args.action == "count":
        paths = enumerate_paths(n)
        coh = sum(path_is_coherent(p) for p in paths)
        _emit(args, {"n": n, "count": len(paths), "coherent": coh}, [f"count={len(paths)} coherent={coh}"])
    elif args.action == "list":
        rows, lines = [], []
        for p in enumerate_paths(n):
            coh = path_is_coherent(p)
            sign = format_sign(path_to_signvector(p)) if coh else None
            rows.append({"path": list(p.interior), "coherent": coh, "sign": sign})
            lines.append(f"{str(p):<24} {'coherent' if coh else 'incoherent'}" + (f"  {sign}" if sign else ""))
        _emit(args, rows, lines)
    else:
        rows, lines = [], []
        for s in enumerate_strings(n):
            coh = string_is_coherent(s)
            rows.append({"cells": [list(c) for c in s.cells], "coherent": coh})
            lines.append(f"{str(s):<40} {'coherent' if coh else 'incoherent'}")
        _emit(args, rows, lines)
    return 0


def cmd_coherence(args) -> int:
    o = _orientation(args)
    p = MonotonePath(o.n, _parse_path(args.path))
    v = coherence.verdicts(p, o)
    word = {True: "coherent", False: "incoherent"}
    lines = [
        f"path {p} on n={o.n}, a={_fmt_vec(o.a)}",
        f"antipode criterion: {word[v['fast']]}",
        f"exact LP:           {word[v['lp']]}",
    ]
    if v["lp_witness"] is not None:
        lines.append(f"LP witness:         {_fmt_vec(v['lp_witness'], args.float)}")
    if v["witness"] is not None:
        lines.append(f"constructed witness: {_fmt_vec(v['witness'], args.float)}  (re-checked: {v['witness_ok']})")
    payload = {
        "path": list(p.interior),
        "n": o.n,
        "a": vec_to_json(o.a),
        "fast": v["fast"],
        "lp": v["lp"],
        "lp_witness": vec_to_json(v["lp_witness"]) if v["lp_witness"] is not None else None,
        "witness": vec_to_json(v["witness"]) if v["witness"] is not None else None,
    }
    _emit(args, payload, lines)
    if v["fast"] != v["lp"]:
        return 3
    return 0


def _cs_file(path: str):
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    return [vec_from_json(v) for v in data["vertices"]], vec_from_json(data["ell"])


def cmd_project(args) -> int:
    vs, ell = _cs_file(args.cs_file)
    pts = mppcore.project_cs(vs, ell)
    _emit(args, [vec_to_json(x) for x in pts], [_fmt_vec(x, args.float) for x in pts])
    return 0


def cmd_mpp(args) -> int:
    if args.action == "project":
        if not args.cs_file:
            raise UsageError("mpp project needs --cs-file")
        return cmd_project(args)
    o = _orientation(args)
    if args.action == "vertices":
        rows, lines = [], []
        for s, pt in mppcore.mpp_vertices(o):
            rows.append({"sign": format_sign(s), "point": vec_to_json(pt.coords)})
            lines.append(f"{format_sign(s)}  {_fmt_vec(pt.coords, args.float)}")
        _emit(args, rows, lines)
    else:
        rows, lines = [], []
        for f in mppcore.all_facets(o):
            i, eps = f.label
            rows.append({"i": i, "eps": format_sign(eps), "normal": vec_to_json(f.normal), "rhs": format_q(f.rhs)})
            lines.append(f"i={i} eps={format_sign(eps)}  {_fmt_vec(f.normal)} . x >= {format_q(f.rhs)}")
        _emit(args, rows, lines)
    return 0


def cmd_lattice(args) -> int:
    n = args.n
    if args.action == "fvector":
        fv = signlattice.fvector(n)
        _emit(args, {"n": n, "fvector": fv}, [" ".join(map(str, fv))])
    elif args.action == "diameter":
        d = signlattice.graph_diameter(signlattice.mpp_graph(n))
        _emit(args, {"n": n, "diameter": d}, [str(d) if d is not None else "disconnected"])
    else:
        verts, facets = signlattice.signohedron(n)
        payload = {
            "n": n,
            "vertices": [{"sign": format_sign(s), "point": vec_to_json(x)} for s, x in verts],
            "facets": [
                {"position": f.label[0], "sign": format_sign(f.label[1]), "w": vec_to_json([-c for c in f.normal])}
                for f in facets
            ],
        }
        lines = [f"{format_sign(s)}  {_fmt_vec(x, args.float)}" for s, x in verts]
        lines += [f"{_fmt_vec([-c for c in f.normal])} . x <= 1" for f in facets]
        _emit(args, payload, lines)
    return 0


def cmd_flip(args) -> int:
    n = args.n
    g = flipdyn.flip_graph(n)
    if args.action == "diameter":
        d = flipdyn.diameter(g)
        _emit(args, {"n": n, "diameter": d}, [str(d) if d is not None else "disconnected"])
        return 0
    ecc = g.eccentricities()
    res = flipdyn.dist_to_coherent(n, g)
    lines = [
        f"paths={len(g)} diameter={max(ecc) if min(ecc) >= 0 else 'disconnected'}",
        f"max distance to coherent={res.maximum}",
    ] + [f"  attained by {p}" for p in res.attained_by]
    report = {
        "n": n,
        "paths": [
            {"path": list(p.interior), "eccentricity": e, "dist_to_coherent": res.distance[p]}
            for p, e in zip(g.labels, ecc)
        ],
        "diameter": max(ecc) if min(ecc) >= 0 else None,
        "max_dist_to_coherent": res.maximum,
        "attained_by": [list(p.interior) for p in res.attained_by],
    }
    if args.report:
        Path(args.report).write_text(json.dumps(report, indent=2) + "\n", encoding="utf-8")
    _emit(args, report, lines)
    return 0


def cmd_verify(args) -> int:
    o = _orientation(args)
    checks = verify.verify_all(o)
    lines = [f"verify n={o.n} a={_fmt_vec(o.a)}"]
    lines += [f"{'PASS' if c.ok else 'FAIL'}  {c.name}  {c.detail}".rstrip() for c in checks]
    _emit(args, verify.report_json(o, checks), lines)
    return 0 if all(c.ok for c in checks) else 3


# ---------------------------------------------------------------------------
# parser


def _common(p: argparse.ArgumentParser, *, n: bool = True, orient: bool = False) -> None:
    if n:
        p.add_argument("--n", type=int, help="dimension of the cross-polytope")
    if orient:
        p.add_argument("--a", help="orientation values, comma-separated rationals (e.g. 1,2,3 or 1/2,3,-5)")
        p.add_argument("--orientation", metavar="FILE", help='JSON file {"n": 3, "a": ["1", "2", "3"]}')
        p.add_argument("--seed", type=int, help="draw a random generic orientation with this seed")
    p.add_argument("--json", nargs="?", const="-", metavar="FILE", help="JSON output (stdout if no FILE)")
    p.add_argument("--float", action="store_true", help="add a decimal rendering for humans")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crossmpp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("paths", help="enumerate and count monotone paths / cellular strings")
    p.add_argument("action", choices=["count", "list", "strings"])
    _common(p)
    p.set_defaults(func=cmd_paths, need_n=True)

    p = sub.add_parser("coherence", help="coherence verdicts for one path")
    _common(p, orient=True)
    p.add_argument("--path", required=True, help="interior signed indices, e.g. -3,1,2")
    p.set_defaults(func=cmd_coherence)

    p = sub.add_parser("mpp", help="MPP vertices, facets, projections")
    p.add_argument("action", choices=["vertices", "facets", "project"])
    _common(p, orient=True)
    p.add_argument("--cs-file", help='JSON {"vertices": [["1","0"], ...], "ell": ["1","2"]}')
    p.set_defaults(func=cmd_mpp)

    p = sub.add_parser("project", help="MPP of a centrally symmetric polytope")
    _common(p, n=False)
    p.add_argument("--cs-file", required=True)
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("lattice", help="f-vector, graph diameter, signohedron")
    p.add_argument("action", choices=["fvector", "diameter", "signohedron"])
    _common(p)
    p.set_defaults(func=cmd_lattice, need_n=True)

    p = sub.add_parser("flip", help="flip graph on all monotone paths")
    p.add_argument("action", choices=["diameter", "ecc"])
    _common(p)
    p.add_argument("--report", metavar="FILE", help="write the per-path report as JSON")
    p.set_defaults(func=cmd_flip, need_n=True)

    p = sub.add_parser("verify", help="run every oracle cross-check")
    p.add_argument("action", choices=["all"])
    _common(p, orient=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    # values like "-3,1,2" would otherwise be read as an option
    for k in range(len(argv) - 1):
        if argv[k] in ("--path", "--a") and argv[k + 1].startswith("-"):
            argv[k : k + 2] = [f"{argv[k]}={argv[k + 1]}", ""]
    args = parser.parse_args([x for x in argv if x != ""])
    try:
        if getattr(args, "need_n", False) and (args.n is None or args.n < 2):
            raise UsageError("--n must be given and at least 2")
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"crossmpp: error: {exc}", file=sys.stderr)
        return 2
    except MppError as exc:
        print(f"crossmpp: {exc.code}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
