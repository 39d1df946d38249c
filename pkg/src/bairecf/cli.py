"""Command line front end.

Every leaf command takes --json for a single-line machine-readable payload;
without it a short human-readable text form is printed.  Exit codes: 0 on
success, 1 for bad input or unreadable files, 2 for usage errors, 3 when a
verification command ran and found a violation.

Depth-like arguments (--depth, --bound, --max-level) are capped by the
BAIRECF_MAX_DEPTH environment variable (default 64).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import __version__
from .baire import (
    WHOLE_SPACE,
    Baire2Prefix,
    BairePrefix,
    baire_distance,
    cylinder_of_ball,
    format_point,
    parse_point,
    psi_inverse,
    psi_map,
)
from .cf import convergents, evaluate, expand_rational, expand_surd, format_cf, parse_cf
from .cover import locate, member_of, verify_cover_properties
from .homeo import check_ball_image, phi_forward, phi_inverse
from .rational import parse_rational
from .surd import format_surd, parse_surd
from .ultra import (
    _fmt_set,
    build_cover_sequence,
    covers_from_json,
    sierpinski_embed,
    table_from_json,
    ultrametric_from_covers,
    verify_ball_properties,
    verify_base_equality,
    verify_ultrametric,
)

MAX_DEPTH_ENV = "BAIRECF_MAX_DEPTH"
DEFAULT_MAX_DEPTH = 64


class UsageError(Exception):
    """Command line was not understood."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    out: str = ""
    err: str = ""


@dataclass(frozen=True)
class _Output:
    payload: dict
    text: str
    failed: bool = False  # a verification ran and found a violation


def _max_depth() -> int:
    raw = os.environ.get(MAX_DEPTH_ENV)
    if raw is None:
        return DEFAULT_MAX_DEPTH
    try:
        v = int(raw)
    except ValueError:
        raise UsageError(f"{MAX_DEPTH_ENV} must be an integer, got {raw!r}") from None
    if v < 1:
        raise UsageError(f"{MAX_DEPTH_ENV} must be >= 1, got {v}")
    return v


def _capped(n: int, what: str) -> int:
    cap = _max_depth()
    if n > cap:
        raise ValueError(f"{what} {n} exceeds the configured maximum {cap} ({MAX_DEPTH_ENV})")
    return n


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as e:
            raise ValueError(f"{path}: invalid JSON: {e}") from None


def _render_checks(pairs) -> str:
    lines = []
    for name, check in pairs:
        if check.passed:
            lines.append(f"{name}: pass")
        else:
            lines.append(f"{name}: FAIL ({check.counterexample})")
    return "\n".join(lines)


def _point_class(args) -> type:
    return Baire2Prefix if args.space == "z" else BairePrefix


# --- cf ---


def _cmd_cf_expand(args) -> _Output:
    x = parse_rational(args.value)
    word = expand_rational(x)
    return _Output(
        {"value": str(x), "word": list(word.digits)},
        format_cf(word),
    )


def _cmd_cf_eval(args) -> _Output:
    digits = parse_cf(args.word)
    v = evaluate(digits)
    return _Output({"word": list(digits), "value": str(v)}, str(v))


def _cmd_cf_convergents(args) -> _Output:
    x = parse_rational(args.value)
    word = expand_rational(x)
    cs = convergents(word)
    return _Output(
        {"value": str(x), "word": list(word.digits), "convergents": [str(c) for c in cs]},
        "\n".join(str(c) for c in cs),
    )


# --- surd ---


def _cmd_surd_expand(args) -> _Output:
    s = parse_surd(args.surd)
    depth = _capped(args.depth, "depth")
    word = expand_surd(s, depth)
    return _Output(
        {"surd": format_surd(s), "depth": depth, "word": list(word)},
        format_cf(word),
    )


# --- baire ---


def _cmd_baire_dist(args) -> _Output:
    cls = _point_class(args)
    f = parse_point(args.p, cls)
    g = parse_point(args.q, cls)
    bound = _capped(args.bound, "bound")
    d = baire_distance(f, g, bound)
    return _Output(
        {
            "p": format_point(f),
            "q": format_point(g),
            "bound": bound,
            "kind": d.kind,
            "value": str(d.value),
        },
        str(d),
    )


def _cmd_baire_ball(args) -> _Output:
    cls = _point_class(args)
    f = parse_point(args.point, cls)
    r = parse_rational(args.radius)
    cyl = cylinder_of_ball(f, r)
    if cyl is WHOLE_SPACE:
        return _Output(
            {"point": format_point(f), "radius": str(r), "whole_space": True, "cylinder": None},
            "whole space",
        )
    return _Output(
        {
            "point": format_point(f),
            "radius": str(r),
            "whole_space": False,
            "cylinder": list(cyl),
        },
        format_point(cls(cyl)),
    )


def _cmd_baire_psi(args) -> _Output:
    if args.inverse:
        p = parse_point(args.point, Baire2Prefix)
        out = psi_inverse(p)
        direction = "inverse"
    else:
        p = parse_point(args.point, BairePrefix)
        out = psi_map(p)
        direction = "forward"
    return _Output(
        {"direction": direction, "input": format_point(p), "output": format_point(out)},
        format_point(out),
    )


# --- cover ---


def _cmd_cover_show(args) -> _Output:
    word = parse_cf(args.word)
    m = member_of(word)
    return _Output(
        {
            "word": list(m.word),
            "level": m.level,
            "lo": str(m.interval.lo),
            "hi": str(m.interval.hi),
        },
        f"level {m.level}: {m.interval}",
    )


def _cmd_cover_locate(args) -> _Output:
    s = parse_surd(args.surd)
    level = _capped(args.level, "level")
    word = locate(s, level)
    m = member_of(word)
    return _Output(
        {
            "surd": format_surd(s),
            "level": m.level,
            "word": list(m.word),
            "lo": str(m.interval.lo),
            "hi": str(m.interval.hi),
        },
        f"{format_cf(word)} {m.interval}",
    )


def _cmd_cover_verify(args) -> _Output:
    max_level = _capped(args.max_level, "max level")
    report = verify_cover_properties(max_level, (args.a0_lo, args.a0_hi), args.digit_max)
    checks = [
        ("disjoint", report.disjoint),
        ("refinement", report.refinement),
        ("closure_refinement", report.closure_refinement),
        ("mesh", report.mesh),
    ]
    lines = [_render_checks(checks)]
    for level in sorted(report.max_length_by_level):
        lines.append(f"max_length level {level}: {report.max_length_by_level[level]}")
    lines.append(f"words_checked: {report.words_checked}")
    return _Output(report.as_json(), "\n".join(lines), failed=not report.all_passed)


# --- homeo ---


def _cmd_homeo_fwd(args) -> _Output:
    p = parse_point(args.point, Baire2Prefix)
    depth = _capped(args.depth, "depth")
    ap = phi_forward(p, depth)
    return _Output(
        {
            "point": format_point(p),
            "depth": depth,
            "lo": str(ap.interval.lo),
            "hi": str(ap.interval.hi),
            "midpoint": str(ap.midpoint),
            "width": str(ap.width),
        },
        f"{ap.interval} midpoint {ap.midpoint}",
    )


def _cmd_homeo_inv(args) -> _Output:
    s = parse_surd(args.surd)
    depth = _capped(args.depth, "depth")
    q = phi_inverse(s, depth)
    return _Output(
        {"surd": format_surd(s), "depth": depth, "point": format_point(q)},
        format_point(q),
    )


def _cmd_homeo_ball(args) -> _Output:
    p = parse_point(args.point, Baire2Prefix)
    n = _capped(args.n, "ball index")
    chk = check_ball_image(p, n)
    return _Output(
        {
            "point": format_point(p),
            "n": n,
            "cylinder": list(chk.cylinder),
            "lo": str(chk.interval.lo),
            "hi": str(chk.interval.hi),
            "samples_checked": chk.samples_checked,
            "all_inside": chk.all_inside,
        },
        f"{format_cf(chk.cylinder)} {chk.interval} "
        f"({chk.samples_checked} samples {'inside' if chk.all_inside else 'ESCAPED'})",
        failed=not chk.all_inside,
    )


# --- ultra ---


def _cmd_ultra_build(args) -> _Output:
    space = table_from_json(_load_json(args.space), require_metric=True)
    depth = _capped(args.depth, "depth")
    seq = build_cover_sequence(space, depth)
    table = ultrametric_from_covers(seq, seq.ground)
    lines = []
    for i, blocks in enumerate(seq.levels):
        lines.append(f"level {i}: " + " | ".join(_fmt_set(b) for b in blocks))
    for x, y in table.pairs():
        lines.append(f"d({x}, {y}) = {table.d(x, y)}")
    return _Output(
        {"depth": depth, "covers": seq.as_json()["levels"], "table": table.as_json()},
        "\n".join(lines),
    )


def _cmd_ultra_verify(args) -> _Output:
    table = table_from_json(_load_json(args.table))
    um = verify_ultrametric(table)
    bp = verify_ball_properties(table)
    checks = [
        ("strong_triangle", um.strong_triangle),
        ("isosceles", um.isosceles),
        ("nesting", bp.nesting),
        ("same_radius_coincide", bp.same_radius_coincide),
        ("every_point_centers", bp.every_point_centers),
        ("closed_ball_absorption", bp.closed_ball_absorption),
        ("equal_radius_partition", bp.equal_radius_partition),
    ]
    failed = not (um.all_passed and bp.all_passed)
    return _Output(
        {"ultrametric": um.as_json(), "balls": bp.as_json()},
        _render_checks(checks),
        failed=failed,
    )


def _cmd_ultra_base_eq(args) -> _Output:
    if args.covers:
        seq = covers_from_json(_load_json(args.source))
        depth = seq.depth
    else:
        if args.depth is None:
            raise UsageError("--depth is required when reading a space file")
        space = table_from_json(_load_json(args.source), require_metric=True)
        depth = _capped(args.depth, "depth")
        seq = build_cover_sequence(space, depth)
    table = ultrametric_from_covers(seq, seq.ground)
    rep = verify_base_equality(seq, table)
    lines = [
        _render_checks([("equality", rep.equality)]),
        f"ball_system_size: {rep.ball_system_size}",
        f"base_system_size: {rep.base_system_size}",
    ]
    payload = rep.as_json()
    payload["depth"] = depth
    return _Output(payload, "\n".join(lines), failed=not rep.all_passed)


def _cmd_embed(args) -> _Output:
    space = table_from_json(_load_json(args.space), require_metric=True)
    depth = _capped(args.depth, "depth")
    seq = build_cover_sequence(space, depth)
    emb = sierpinski_embed(seq)
    lines = [f"{x} -> {format_point(p)}" for x, p in emb.items()]
    return _Output(
        {
            "depth": depth,
            "embedding": [[x, list(p.entries)] for x, p in emb.items()],
        },
        "\n".join(lines),
    )


def _add_json(p: _Parser) -> None:
    p.add_argument("--json", action="store_true", help="print a single-line JSON payload")


def _add_space(p: _Parser) -> None:
    p.add_argument(
        "--space",
        choices=("n", "z"),
        default="n",
        help="point space: n = non-negative entries, z = integer head then >= 1",
    )


def build_parser() -> _Parser:
    p = _Parser(prog="bairecf", description="Exact continued-fraction and sequence-space tools.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    cf_p = sub.add_parser("cf", help="finite continued-fraction words")
    cf_sub = cf_p.add_subparsers(dest="subcommand", required=True, metavar="subcommand")
    sp = cf_sub.add_parser("expand", help="canonical word of a rational")
    sp.add_argument("value", help='rational, like "355/113"')
    _add_json(sp)
    sp.set_defaults(handler=_cmd_cf_expand)
    sp = cf_sub.add_parser("eval", help="exact value of a word")
    sp.add_argument("word", help='word, like "[3; 7, 16]"')
    _add_json(sp)
    sp.set_defaults(handler=_cmd_cf_eval)
    sp = cf_sub.add_parser("convergents", help="prefix values of a rational's word")
    sp.add_argument("value", help='rational, like "355/113"')
    _add_json(sp)
    sp.set_defaults(handler=_cmd_cf_convergents)

    surd_p = sub.add_parser("surd", help="quadratic surds")
    surd_sub = surd_p.add_subparsers(dest="subcommand", required=True, metavar="subcommand")
    sp = surd_sub.add_parser("expand", help="digit expansion of a surd")
    sp.add_argument("surd", help='surd, like "(0+1*sqrt(2))/1"')
    sp.add_argument("--depth", type=int, default=10, help="digits after the integer part")
    _add_json(sp)
    sp.set_defaults(handler=_cmd_surd_expand)

    baire_p = sub.add_parser("baire", help="integer sequence space")
    baire_sub = baire_p.add_subparsers(dest="subcommand", required=True, metavar="subcommand")
    sp = baire_sub.add_parser("dist", help="first-difference distance of two points")
    sp.add_argument("p", help='point, like "(1,2,3)" or "(0)~(2,1)"')
    sp.add_argument("q", help="point")
    sp.add_argument("--bound", type=int, default=32, help="indices to scan")
    _add_space(sp)
    _add_json(sp)
    sp.set_defaults(handler=_cmd_baire_dist)
    sp = baire_sub.add_parser("ball", help="cylinder equal to an open ball")
    sp.add_argument("point", help="ball center")
    sp.add_argument("radius", help='rational radius, like "1/3"')
    _add_space(sp)
    _add_json(sp)
    sp.set_defaults(handler=_cmd_baire_ball)
    sp = baire_sub.add_parser("psi", help="recode between the two sequence spaces")
    sp.add_argument("point", help="point to recode")
    sp.add_argument("--inverse", action="store_true", help="map back to non-negative entries")
    _add_json(sp)
    sp.set_defaults(handler=_cmd_baire_psi)

    cover_p = sub.add_parser("cover", help="rational interval family")
    cover_sub = cover_p.add_subparsers(dest="subcommand", required=True, metavar="subcommand")
    sp = cover_sub.add_parser("show", help="interval named by a word")
    sp.add_argument("word", help='word, like "[1; 2]"')
    _add_json(sp)
    sp.set_defaults(handler=_cmd_cover_show)
    sp = cover_sub.add_parser("locate", help="level member holding a surd")
    sp.add_argument("surd", help='surd, like "(0+1*sqrt(2))/1"')
    sp.add_argument("--level", type=int, default=3, help="level to search")
    _add_json(sp)
    sp.set_defaults(handler=_cmd_cover_locate)
    sp = cover_sub.add_parser("verify", help="check the family's properties on a finite slice")
    sp.add_argument("--max-level", type=int, default=3, help="deepest level to enumerate")
    sp.add_argument("--a0-lo", type=int, default=-2, help="smallest head digit")
    sp.add_argument("--a0-hi", type=int, default=2, help="largest head digit")
    sp.add_argument("--digit-max", type=int, default=4, help="largest later digit")
    _add_json(sp)
    sp.set_defaults(handler=_cmd_cover_verify)

    homeo_p = sub.add_parser("homeo", help="sequences <-> irrationals dictionary")
    homeo_sub = homeo_p.add_subparsers(dest="subcommand", required=True, metavar="subcommand")
    sp = homeo_sub.add_parser("fwd", help="interval approximation of a point's value")
    sp.add_argument("point", help='point, like "(1,2,2)~(2)"')
    sp.add_argument("--depth", type=int, default=8, help="digits to use, minus one")
    _add_json(sp)
    sp.set_defaults(handler=_cmd_homeo_fwd)
    sp = homeo_sub.add_parser("inv", help="sequence prefix of a surd")
    sp.add_argument("surd", help='surd, like "(0+1*sqrt(3))/1"')
    sp.add_argument("--depth", type=int, default=8, help="digits to recover, minus one")
    _add_json(sp)
    sp.set_defaults(handler=_cmd_homeo_inv)
    sp = homeo_sub.add_parser("ball", help="match a ball around a point with an interval")
    sp.add_argument("point", help="ball center")
    sp.add_argument("--n", type=int, default=3, help="ball radius is 1/n")
    _add_json(sp)
    sp.set_defaults(handler=_cmd_homeo_ball)

    ultra_p = sub.add_parser("ultra", help="finite metric space laboratory")
    ultra_sub = ultra_p.add_subparsers(dest="subcommand", required=True, metavar="subcommand")
    sp = ultra_sub.add_parser("build", help="covers and ultrametric from a space file")
    sp.add_argument("space", help="JSON file with points and distances")
    sp.add_argument("--depth", type=int, default=4, help="number of cover levels")
    _add_json(sp)
    sp.set_defaults(handler=_cmd_ultra_build)
    sp = ultra_sub.add_parser("verify", help="ultrametric and ball checks on a table file")
    sp.add_argument("table", help="JSON file with points and distances")
    _add_json(sp)
    sp.set_defaults(handler=_cmd_ultra_verify)
    sp = ultra_sub.add_parser("base-eq", help="balls equal blocks plus the whole space")
    sp.add_argument("source", help="JSON space file (or covers file with --covers)")
    sp.add_argument("--depth", type=int, default=None, help="cover levels for a space file")
    sp.add_argument("--covers", action="store_true", help="read a covers file instead")
    _add_json(sp)
    sp.set_defaults(handler=_cmd_ultra_base_eq)

    sp = sub.add_parser("embed", help="isometric digit streams for a space file")
    sp.add_argument("space", help="JSON file with points and distances")
    sp.add_argument("--depth", type=int, default=4, help="number of cover levels")
    _add_json(sp)
    sp.set_defaults(handler=_cmd_embed)

    return p


def run(argv=None) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        return CommandResult(2, err=f"usage error: {e}")
    except SystemExit as e:  # --help and --version print on their own
        return CommandResult(int(e.code or 0))
    try:
        out = args.handler(args)
    except UsageError as e:
        return CommandResult(2, err=f"usage error: {e}")
    except (ValueError, OSError) as e:
        return CommandResult(1, err=f"error: {e}")
    if args.json:
        payload = {"status": "error" if out.failed else "ok", **out.payload}
        body = json.dumps(payload, sort_keys=True)
    else:
        body = out.text
    return CommandResult(3 if out.failed else 0, out=body)


def main(argv=None) -> int:
    res = run(argv)
    if res.out:
        print(res.out)
    if res.err:
        print(res.err, file=sys.stderr)
    return res.exit_code


if __name__ == "__main__":
    sys.exit(main())
