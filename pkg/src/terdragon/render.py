"""Deterministic SVG output with slightly rounded corners."""
from __future__ import annotations

import colorsys
import math
from dataclasses import dataclass

from .covering import CoveringPatch, separated_patch
from .tcurve import TCurve
from .trilattice import EPoint, edge_key, hexnorm, step

_PALETTE = ["#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd",
            "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"]
_S3 = math.sqrt(3) / 2


@dataclass
class Style:
    unit: float = 20.0
    corner: float = 0.2          # corner radius as a fraction of the unit side
    stroke_width: float = 2.5
    lattice: bool = False
    margin: float = 1.0


def color(i: int) -> str:
    if i < len(_PALETTE):
        return _PALETTE[i]
    # golden-ratio hue walk keeps later colours distinct and reproducible
    h = (i * 0.6180339887498949) % 1.0
    r, g, b = colorsys.hls_to_rgb(h, 0.45, 0.65)
    return "#{:02x}{:02x}{:02x}".format(round(r * 255), round(g * 255), round(b * 255))


def _xy(p) -> tuple[float, float]:
    return (p[0] + 0.5 * p[1], p[1] * _S3)


def _fmt(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def rounded_path(points, unit: float, corner: float, flip) -> str:
    """Path data through ``points`` with each interior corner cut by a quadratic arc."""
    pts = [_xy(p) for p in points]
    if not pts:
        return ""

    def P(x, y):
        X, Y = flip(x, y)
        return f"{_fmt(X * unit)} {_fmt(Y * unit)}"

    out = [f"M{P(*pts[0])}"]
    for i in range(1, len(pts) - 1):
        (x0, y0), (x1, y1), (x2, y2) = pts[i - 1], pts[i], pts[i + 1]
        l0 = math.hypot(x1 - x0, y1 - y0)
        l2 = math.hypot(x2 - x1, y2 - y1)
        r0 = min(corner, l0 / 2) / l0
        r2 = min(corner, l2 / 2) / l2
        a = (x1 - (x1 - x0) * r0, y1 - (y1 - y0) * r0)
        b = (x1 + (x2 - x1) * r2, y1 + (y2 - y1) * r2)
        out.append(f"L{P(*a)}")
        out.append(f"Q{P(x1, y1)} {P(*b)}")
    if len(pts) > 1:
        out.append(f"L{P(*pts[-1])}")
    return "".join(out)


def _polylines(items) -> list[tuple[int, list]]:
    lines = []
    for item in items:
        if isinstance(item, CoveringPatch):
            for cid, c in sorted(item.curves.items()):
                lines.append((cid, c.vertices()))
        elif isinstance(item, TCurve):
            lines.append((len(lines), [tuple(v) for v in item.vertex_list()]))
        else:
            lines.append((len(lines), [tuple(v) for v in item]))
    return lines


def render_svg(items, style: Style | None = None, colors: dict | None = None) -> str:
    """SVG 1.1 document with one path per curve."""
    style = style or Style()
    if isinstance(items, (CoveringPatch, TCurve)):
        items = [items]
    lines = _polylines(items)
    xs = [_xy(p)[0] for _, ps in lines for p in ps]
    ys = [_xy(p)[1] for _, ps in lines for p in ps]
    if xs:
        x0, x1 = min(xs) - style.margin, max(xs) + style.margin
        y0, y1 = min(ys) - style.margin, max(ys) + style.margin
    else:
        x0 = y0 = 0.0
        x1 = y1 = 1.0

    def flip(x, y):
        return x - x0, y1 - y

    u = style.unit
    w, h = (x1 - x0) * u, (y1 - y0) * u
    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(w)}" height="{_fmt(h)}" '
           f'viewBox="0 0 {_fmt(w)} {_fmt(h)}">']
    if style.lattice and xs:
        segs = []
        pts = {p for _, ps in lines for p in ps}
        seen = set()
        for p in sorted(pts):
            for d in range(3):
                for q in (p, step(p, d + 3)):
                    k = edge_key(q, d)
                    if k in seen:
                        continue
                    seen.add(k)
                    a = flip(*_xy(q))
                    b = flip(*_xy(step(q, d)))
                    segs.append(f"M{_fmt(a[0] * u)} {_fmt(a[1] * u)}L{_fmt(b[0] * u)} {_fmt(b[1] * u)}")
        out.append(f'<path d="{"".join(segs)}" fill="none" stroke="#dddddd" stroke-width="0.5"/>')
    for i, (cid, ps) in enumerate(lines):
        col = (colors or {}).get(cid, color(i))
        d = rounded_path(ps, u, style.corner, flip)
        out.append(f'<path id="c{cid}" d="{d}" fill="none" stroke="{col}" '
                   f'stroke-width="{_fmt(style.stroke_width)}" stroke-linejoin="round" stroke-linecap="round"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def three_curves_near(patch: CoveringPatch, center) -> list[int]:
    """Ids of the first three distinct curves met when scanning outward from ``center``."""
    seen: list[int] = []
    best: dict[int, int] = {}
    for cid, c in patch.curves.items():
        best[cid] = min(hexnorm((v[0] - center[0], v[1] - center[1])) for v in c.vertices())
    for cid in sorted(best, key=lambda k: (best[k], k)):
        seen.append(cid)
        if len(seen) == 3:
            break
    return seen


def figure_three_curves(length: int = 4, first: int = -1, radius: int | None = None) -> str:
    """Render the three curves around the center of a separated covering with
    alternating fold signs starting at ``first``."""
    lam = tuple(first * (-1) ** i for i in range(length))
    from .covering import hex_margin
    radius = radius or 2 * hex_margin(length) + 4
    patch, twice_center = separated_patch(lam, radius)
    c = EPoint(twice_center[0] // 2, twice_center[1] // 2)
    ids = three_curves_near(patch, c)
    sub = [patch.curves[i].vertices() for i in ids]
    return render_svg(sub, Style(lattice=True))
