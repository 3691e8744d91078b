"""Command-line entry point.

Exit codes: 0 on success, 1 when a checked property fails, 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import covering as cov
from .foldseq import (AmbiguousWindow, BadResidue, FoldSeq, Lambda, NotFolding, delta_seq,
                      extract_lambda, gen_T, parse_pseq, parse_signs)
from .trilattice import E1, E2, EPoint, HexWindow


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _write(text: str, path: str | None):
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _read_signs(arg: str | None) -> FoldSeq:
    text = arg if arg is not None else sys.stdin.read()
    text = text.strip()
    if text.startswith("{"):
        return FoldSeq.from_json(text)
    try:
        return FoldSeq(parse_signs(text))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _lambda(text: str, length: int | None = None) -> Lambda:
    try:
        if length is not None:
            return cov.lambda_rule(text, length)
        return Lambda.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _point(text: str) -> EPoint:
    try:
        a, b = text.split(",")
        return EPoint(int(a), int(b))
    except ValueError:
        raise UsageError(f"expected a point 'a,b', got {text!r}") from None


def _load_patch(path: str) -> cov.CoveringPatch:
    return cov.CoveringPatch.from_json(Path(path).read_text(encoding="utf-8"))


# -- commands --------------------------------------------------------------------

def cmd_gen(args) -> int:
    s = gen_T(_lambda(args.lam))
    _write((s.to_json() if args.json else str(s)) + "\n", args.out)
    return 0


def cmd_delta(args) -> int:
    s = _read_signs(args.signs)
    try:
        d = delta_seq(s, args.h)
    except BadResidue as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _write((d.to_json() if args.json else str(d)) + "\n", args.out)
    return 0


def cmd_extract(args) -> int:
    s = _read_signs(args.signs)
    try:
        ext = extract_lambda(s, args.k_max)
    except (NotFolding, AmbiguousWindow) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        _write(_dump({"lambda": str(ext.lam), "residues": ext.residues, "stopped": ext.stopped}), args.out)
    else:
        _write(str(ext.lam) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    from . import verify as V
    s = args.suite
    kw: dict = {}
    if s in ("self-avoid", "diameter", "frontier"):
        exhaustive_n = args.n if args.exhaustive else (args.exhaustive_n or 0)
        kw = dict(n=exhaustive_n, exhaustive=exhaustive_n > 0, samples=args.samples or 0,
                  seed=args.seed, n_random=args.n)
    elif s in ("palindrome", "residue", "delta", "coverage"):
        kw = dict(n=args.n)
    elif s == "covering":
        kw = dict(n=args.n, radius=args.radius or 40, samples=args.samples or 10, seed=args.seed)
    elif s == "liso":
        kw = dict(n=args.n, samples=args.samples or 50, seed=args.seed, radius=args.radius)
    rep = V.run_suite(s, **kw)
    _write(_dump(rep), args.report)
    if args.report:
        print(f"{s}: {'pass' if rep['pass'] else 'FAIL'}")
    return 0 if rep["pass"] else 1


def cmd_cover(args) -> int:
    lam = _lambda(args.lam, args.level) if args.level else _lambda(args.lam)
    try:
        chain = cov.XChain.parse(args.chain) if args.chain else cov.XChain((EPoint(0, 0),))
        patch = cov.build_patch(lam, chain, args.orientation,
                                HexWindow(chain[0], args.radius))
        if args.star:
            patch = cov.star_connect(patch, args.star)
    except (cov.BadChain, cov.WindowTooSmall, cov.NoStarPoint, ValueError) as exc:
        raise UsageError(str(exc)) from None
    val = cov.validate(patch)
    report = {"validation": val.to_dict(), "curves": len(patch.curves),
              "guaranteed_radius": patch.guaranteed_radius,
              "lattices": cov.level_lattices(patch).to_dict()}
    if patch.star:
        report["symmetry"] = cov.symmetry_check(patch).to_dict()
    if args.out:
        Path(args.out).write_text(patch.to_json(), encoding="utf-8")
    if args.svg:
        from .render import Style, render_svg
        Path(args.svg).write_text(render_svg(patch, Style(lattice=args.lattice)), encoding="utf-8")
    _write(_dump(report), args.report)
    return 0 if val.covering_ok and val.property_P else 1


def cmd_frontier(args) -> int:
    from .foldseq import gen_T_array
    from .frontier import frontier_law_report, split_LR
    from .tcurve import realize
    lam = _lambda(args.lam)
    c = realize(gen_T_array(lam))
    L, R = split_LR(c)
    out = {"lambda": str(lam), "L": json.loads(L.to_json()), "R": json.loads(R.to_json())}
    code = 0
    if args.check:
        rep = frontier_law_report(c, lam)
        out["check"] = {"ok": rep.ok, "checks": rep.checks, "failures": rep.failures}
        code = 0 if rep.ok else 1
    _write(_dump(out), args.out)
    return code


def cmd_classify(args) -> int:
    horizon = args.horizon
    lam = _lambda(args.lam, horizon + 1)
    pseq = None
    chain = None
    try:
        if args.pseq:
            base = parse_pseq(args.pseq)
            pseq = [base[i % len(base)] for i in range(horizon)]
        if args.chain:
            chain = cov.XChain.parse(args.chain)
        tag = cov.classify(lam, chain, pseq, horizon)
    except cov.InconsistentInput as exc:
        _write(_dump({"case": "InconsistentInput", "detail": str(exc)}), args.out)
        return 1
    except (ValueError, cov.BadChain) as exc:
        raise UsageError(str(exc)) from None
    _write(_dump(tag.to_dict()), args.out)
    return 0


def cmd_liso(args) -> int:
    from .analysis import OutOfRegion, RegionTooSmall, liso_search
    a = _load_patch(args.patch)
    b = _load_patch(args.patch_b) if args.patch_b else a
    try:
        res = liso_search(a, _point(args.x), b, _point(args.y), args.n)
    except (OutOfRegion, RegionTooSmall) as exc:
        raise UsageError(str(exc)) from None
    _write(_dump(res.to_dict()), args.out)
    return 0 if res.found else 1


def cmd_render(args) -> int:
    from .render import Style, figure_three_curves, render_svg
    from .tcurve import TCurve
    style = Style(lattice=args.lattice)
    if args.figure:
        svg = figure_three_curves(args.level or 4)
    elif args.patch:
        svg = render_svg(_load_patch(args.patch), style)
    elif args.curve:
        svg = render_svg([TCurve.from_json(Path(args.curve).read_text(encoding="utf-8"))], style)
    elif args.lam is not None:
        from .foldseq import gen_T_array
        from .tcurve import realize
        svg = render_svg([realize(gen_T_array(_lambda(args.lam)))], style)
    else:
        raise UsageError("render needs --patch, --curve, --lambda or --figure")
    _write(svg, args.out)
    return 0


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="terdragon", description="Triangular folding curves and their coverings.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="folding sequence T_lambda")
    g.add_argument("--lambda", dest="lam", required=True)
    g.add_argument("--json", action="store_true")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    d = sub.add_parser("delta", help="derived sequence (signs from argument or stdin)")
    d.add_argument("signs", nargs="?")
    d.add_argument("--h", type=int, default=0)
    d.add_argument("--json", action="store_true")
    d.add_argument("--out")
    d.set_defaults(func=cmd_delta)

    e = sub.add_parser("extract", help="recover lambda from a window")
    e.add_argument("signs", nargs="?")
    e.add_argument("--k-max", type=int)
    e.add_argument("--json", action="store_true")
    e.add_argument("--out")
    e.set_defaults(func=cmd_extract)

    from .verify import SUITES
    v = sub.add_parser("verify", help="run a property suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--n", type=int, default=4)
    v.add_argument("--exhaustive", action="store_true", help="all lambda of length <= n")
    v.add_argument("--exhaustive-n", type=int, help="exhaustive depth when sampling at a larger n")
    v.add_argument("--samples", type=int)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--radius", type=int)
    v.add_argument("--report")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("cover", help="build a covering patch")
    c.add_argument("--lambda", dest="lam", required=True)
    c.add_argument("--level", type=int, help="expand a lambda rule to this many levels")
    c.add_argument("--chain")
    c.add_argument("--radius", type=int, default=12)
    c.add_argument("--orientation", choices=(E1, E2), default=E1)
    c.add_argument("--star", choices=("+", "-"))
    c.add_argument("--svg")
    c.add_argument("--lattice", action="store_true")
    c.add_argument("--out", help="patch JSON")
    c.add_argument("--report")
    c.set_defaults(func=cmd_cover)

    f = sub.add_parser("frontier", help="left and right frontiers of an n-folding curve")
    f.add_argument("--lambda", dest="lam", required=True)
    f.add_argument("--check", action="store_true")
    f.add_argument("--out")
    f.set_defaults(func=cmd_frontier)

    k = sub.add_parser("classify", help="case of the covering through a segment")
    k.add_argument("--lambda", dest="lam", required=True,
                   help="sign string or rule (alternating:-1, constant:+1, periodic:+-)")
    k.add_argument("--pseq", help="positions I/M/S, repeated to the horizon")
    k.add_argument("--chain")
    k.add_argument("--horizon", type=int, default=8)
    k.add_argument("--out")
    k.set_defaults(func=cmd_classify)

    li = sub.add_parser("liso", help="local isomorphism witness search")
    li.add_argument("--n", type=int, default=1)
    li.add_argument("--x", required=True)
    li.add_argument("--y", required=True)
    li.add_argument("--patch", required=True)
    li.add_argument("--patch-b")
    li.add_argument("--out")
    li.set_defaults(func=cmd_liso)

    r = sub.add_parser("render", help="SVG output")
    r.add_argument("--patch")
    r.add_argument("--curve")
    r.add_argument("--lambda", dest="lam")
    r.add_argument("--figure", action="store_true", help="three curves of a separated covering")
    r.add_argument("--level", type=int)
    r.add_argument("--lattice", action="store_true")
    r.add_argument("--out")
    r.set_defaults(func=cmd_render)
    return p


_SIGN_ONLY = set("+-−")


def _normalize_argv(argv: list[str]) -> list[str]:
    """Let sign strings such as ``-+-`` be used as values and positionals.

    Leading ASCII minus signs would be read as options, so sign-only tokens are
    rewritten with the Unicode minus, which the sign parser also accepts.
    """
    out: list[str] = []
    prev = None
    for tok in argv:
        signs = len(tok) > 1 and set(tok) <= _SIGN_ONLY and tok.startswith("-")
        if signs and (prev == "--lambda" or tok != "--"):
            tok = tok.replace("-", "−")
        out.append(tok)
        prev = tok
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    args = parser.parse_args(_normalize_argv(argv))
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
