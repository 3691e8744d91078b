"""Left and right frontiers of folding curves.

The frontier of a curve is the set of unit sides joining two of its vertices
that see exactly one apex on the curve.  Equivalently it is the boundary of the
region made of the unit triangles whose three corners are on the curve; both
routes are computed so each can check the other.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .foldseq import as_lambda, format_signs
from .tcurve import TCurve
from .trilattice import UNIT, EdgeKey, EPoint, apexes, edge_key, in_frame, step, w_contains


class TooShort(ValueError):
    pass


class MismatchWithApexRule(AssertionError):
    pass


class NotSimple(ValueError):
    pass


def _vertex_set(c) -> set[tuple[int, int]]:
    if isinstance(c, TCurve):
        if len(c) < 3:
            raise TooShort("frontiers need at least 3 segments")
        return c.vertex_set()
    return {tuple(p) for p in c}


def frontier_edges(c) -> set[EdgeKey]:
    """Sides with both ends on ``c`` and exactly one apex on ``c`` (apex rule)."""
    vs = _vertex_set(c)
    out = set()
    for p in vs:
        for d in range(3):
            q = step(p, d)
            if q not in vs:
                continue
            left, right = apexes(p, d)
            if (left in vs) != (right in vs):
                out.add(edge_key(p, d))
    return out


# unit triangles: ("U", p) = {p, p+u0, p+u1}, ("D", p) = {p, p+u0, p+u5}
_TRI_CCW = {"U": (0, 2, 4), "D": (5, 1, 3)}


def _triangle_corners(kind, p):
    if kind == "U":
        return (p, step(p, 0), step(p, 1))
    return (p, step(p, 0), step(p, 5))


def region_triangles(c) -> set[tuple[str, tuple[int, int]]]:
    vs = _vertex_set(c)
    tris = set()
    for p in vs:
        for kind in ("U", "D"):
            if all(q in vs for q in _triangle_corners(kind, p)):
                tris.add((kind, p))
    return tris


def _oriented_boundary(tris) -> dict[tuple[int, int], list[int]]:
    """Boundary sides oriented with the region on their left, as start -> dirs."""
    oriented = set()
    for kind, p in tris:
        q = p
        for d in _TRI_CCW[kind]:
            oriented.add((q, d))
            q = step(q, d)
    out: dict = {}
    for q, d in oriented:
        if (step(q, d), (d + 3) % 6) not in oriented:
            out.setdefault(q, []).append(d)
    return out


@dataclass
class Region:
    triangles: set
    boundary: list[EPoint]          # closed walk, counterclockwise, first == last
    boundary_dirs: list[int]


def _trace(out: dict, start, first_dir: int) -> tuple[list[EPoint], list[int]]:
    used = set()
    verts = [EPoint(*start)]
    dirs = []
    q, d = tuple(start), first_dir
    total = sum(len(v) for v in out.values())
    while True:
        used.add((q, d))
        dirs.append(d)
        q = step(q, d)
        verts.append(EPoint(*q))
        if q == tuple(start) and len(used) == total:
            break
        # keep the region on the left: take the leftmost available turn
        cands = [e for e in out.get(q, []) if (q, e) not in used]
        if not cands:
            if q == tuple(start):
                break
            raise NotSimple(f"boundary walk stuck at {q}")
        turn = lambda e: ((e - d + 3) % 6) - 3   # in -3..2; +2 is the sharpest left
        d = max(cands, key=turn)
    return verts, dirs


def region(c: TCurve) -> Region:
    """Unit triangles with all corners on ``c`` and their boundary walk.

    The boundary is cross-checked against :func:`frontier_edges`.
    """
    tris = region_triangles(c)
    out = _oriented_boundary(tris)
    bset = {edge_key(q, d) for q, ds in out.items() for d in ds}
    if bset != frontier_edges(c):
        raise MismatchWithApexRule("region boundary differs from the apex-rule frontier")
    w = c.start
    if tuple(w) not in out:
        raise NotSimple("initial point is not on the region boundary")
    verts, dirs = _trace(out, w, out[tuple(w)][0])
    return Region(tris, verts, dirs)


@dataclass
class FrontierPath:
    side: str
    vertices: list[EPoint]
    angles: list[int]                   # +1: turn +60 degrees at interior vertex i
    split_index: int | None = None

    def __len__(self):
        """Number of edges."""
        return len(self.vertices) - 1

    def alpha(self, i: int) -> int:
        """Angle sign at vertex ``i`` (1 <= i <= len - 1)."""
        return self.angles[i - 1]

    def edges(self) -> set[EdgeKey]:
        return {edge_key(p, UNIT.index((q[0] - p[0], q[1] - p[1])))
                for p, q in zip(self.vertices, self.vertices[1:])}

    def to_json(self) -> str:
        return json.dumps({"side": self.side, "vertices": [list(p) for p in self.vertices],
                           "angles": format_signs(self.angles), "split_index": self.split_index})


def _angles(verts) -> list[int]:
    out = []
    for i in range(1, len(verts) - 1):
        d0 = UNIT.index((verts[i][0] - verts[i - 1][0], verts[i][1] - verts[i - 1][1]))
        d1 = UNIT.index((verts[i + 1][0] - verts[i][0], verts[i + 1][1] - verts[i][1]))
        t = (d1 - d0) % 6
        if t == 1:
            out.append(1)
        elif t == 5:
            out.append(-1)
        else:
            raise NotSimple(f"frontier turns by {t} at {verts[i]}")
    return out


def _boundary_cycle_from(c: TCurve) -> list[EPoint]:
    tris = region_triangles(c)
    out = _oriented_boundary(tris)
    w = tuple(c.start)
    starts = out.get(w, [])
    if len(starts) != 1:
        raise NotSimple(f"initial point has {len(starts)} outgoing boundary sides")
    verts, _ = _trace(out, w, starts[0])
    return verts


def split_LR(c: TCurve) -> tuple[FrontierPath, FrontierPath]:
    """Frontier walks from the initial point w to the terminal point z.

    Walking the region boundary counterclockwise from w, the arc up to z is the
    right frontier; the rest, reversed, is the left frontier.
    """
    cyc = _boundary_cycle_from(c)
    z = c.end
    hits = [i for i, p in enumerate(cyc) if p == z]
    if len(hits) != 1:
        raise NotSimple(f"terminal point met {len(hits)} times on the boundary")
    k = hits[0]
    right = cyc[: k + 1]
    left = list(reversed(cyc[k:]))
    return (FrontierPath("L", left, _angles(left)), FrontierPath("R", right, _angles(right)))


def curve_thirds(c: TCurve) -> tuple[TCurve, TCurve, TCurve]:
    """The three (n-1)-folding pieces C^I, C^M, C^S of an n-folding curve."""
    from .tcurve import realize

    m = len(c) // 3
    if m * 3 != len(c):
        raise ValueError("curve length is not a multiple of 3")
    v = c.vertices
    d = c.dirs
    parts = []
    for j in range(3):
        lo = j * m
        parts.append(realize(c.turns[lo: lo + m - 1], (int(v[lo][0]), int(v[lo][1])), int(d[lo])))
    return tuple(parts)


def decompose(c: TCurve, lam) -> dict:
    """Split indices of F_L and F_R into their I and S parts.

    F_L splits at the terminal point of C^M when the last fold is +1 and at its
    initial point otherwise; F_R the other way round.
    """
    lam = as_lambda(lam)
    n = len(lam)
    if n < 1:
        raise ValueError("n >= 1 required")
    L, R = split_LR(c)
    m = len(c) // 3
    x = EPoint(*c.vertices[m].tolist())
    y = EPoint(*c.vertices[2 * m].tolist())
    lpt, rpt = (y, x) if lam[n - 1] > 0 else (x, y)
    li = L.vertices.index(lpt) if lpt in L.vertices else None
    ri = R.vertices.index(rpt) if rpt in R.vertices else None
    L.split_index, R.split_index = li, ri
    return {"L": L, "R": R, "x": x, "y": y, "split_L": li, "split_R": ri}


def frontier_parts(c: TCurve, lam) -> dict[str, list[EPoint]]:
    """Vertex lists of F_LI, F_LS, F_RI, F_RS."""
    dec = decompose(c, lam)
    L, R = dec["L"], dec["R"]
    li, ri = dec["split_L"], dec["split_R"]
    return {"LI": L.vertices[: li + 1], "LS": L.vertices[li:],
            "RI": R.vertices[: ri + 1], "RS": R.vertices[ri:]}


@dataclass
class FrontierLawReport:
    ok: bool
    failures: list[str] = field(default_factory=list)
    checks: int = 0

    def fail(self, msg):
        self.ok = False
        self.failures.append(msg)


def frontier_law_report(c: TCurve, lam) -> FrontierLawReport:
    """Check counts, anchor signs, the alternating sign law and sublattice membership."""
    lam = as_lambda(lam)
    n = len(lam)
    rep = FrontierLawReport(True)
    try:
        dec = decompose(c, lam)
    except (NotSimple, TooShort) as exc:
        rep.fail(f"frontier extraction failed: {exc}")
        return rep
    L, R = dec["L"], dec["R"]
    half = 2 ** (n - 1)
    for path in (L, R):
        rep.checks += 1
        if len(path) != 2 ** n:
            rep.fail(f"F_{path.side} has {len(path)} edges, expected {2 ** n}")
            return rep
        if path.vertices[0] != c.start or path.vertices[-1] != c.end:
            rep.fail(f"F_{path.side} does not run from w to z")
        rep.checks += 1
        split = dec["split_" + path.side]
        if split != half:
            rep.fail(f"F_{path.side} split at {split}, expected {half}")
    common = set(L.vertices) & set(R.vertices)
    rep.checks += 1
    if common != {c.start, c.end}:
        rep.fail(f"F_L and F_R share {len(common)} vertices")
    if n >= 1:
        rep.checks += 2
        if L.alpha(half) != -1:
            rep.fail(f"alpha_{half} = {L.alpha(half)}, expected -1")
        if R.alpha(half) != 1:
            rep.fail(f"beta_{half} = {R.alpha(half)}, expected +1")
    for k in range(0, n - 1):
        i = 0
        while 2 ** k + 2 ** (k + 1) * i <= 2 ** n - 1:
            idx = 2 ** k + 2 ** (k + 1) * i
            want = (-1) ** i * lam[k + 1]
            for path in (L, R):
                rep.checks += 1
                if path.alpha(idx) != want:
                    rep.fail(f"F_{path.side} sign at {idx} is {path.alpha(idx)}, expected {want}")
            i += 1
    w = c.start
    for path in (L, R):
        for i, p in enumerate(path.vertices):
            for k in range(1, n + 1):
                rep.checks += 1
                if in_frame(w, k, p) != (i % 2 ** k == 0):
                    rep.fail(f"F_{path.side} vertex {i} V_{k} membership wrong")
    return rep


def inside_outside_violations(c: TCurve) -> list[EdgeKey]:
    """Sides strictly inside the region that ``c`` misses, or outside it that ``c`` uses."""
    vs = c.vertex_set()
    tris = region_triangles(c)
    used = set(c.edge_keys())
    tri_edges: dict = {}
    for kind, p in tris:
        corners = _triangle_corners(kind, p)
        for i in range(3):
            a, b = corners[i], corners[(i + 1) % 3]
            e = edge_key(a, UNIT.index((b[0] - a[0], b[1] - a[1])))
            tri_edges[e] = tri_edges.get(e, 0) + 1
    bad = []
    for p in vs:
        for d in range(3):
            q = step(p, d)
            if q not in vs:
                continue
            e = edge_key(p, d)
            count = tri_edges.get(e, 0)
            if count == 2 and e not in used:
                bad.append(e)
            elif count == 0 and e in used:
                bad.append(e)
    return bad


@dataclass
class Cor27Scan:
    ok: bool
    residues: dict[int, int]            # k -> n_k mod 2**k
    failed_levels: list[int] = field(default_factory=list)


def cor27_scan(path: FrontierPath, k_max: int, base=None) -> Cor27Scan:
    """Find, per level k, the class n_k mod 2**k carrying W_k points with alternating signs.

    ``base`` fixes the V_0 chain origin; it defaults to the first vertex, which is
    in every V_k(C) for a frontier of a bounded folding curve.
    """
    base = path.vertices[0] if base is None else base
    L = len(path)
    res: dict[int, int] = {}
    failed: list[int] = []
    for k in range(1, k_max + 1):
        period = 2 ** k
        found = []
        for r in range(period):
            idxs = [i for i in range(r, L, period) if 1 <= i <= L - 1]
            if len(idxs) < 2:
                continue
            if not all(w_contains(base, k, path.vertices[i]) for i in idxs):
                continue
            a0 = path.alpha(idxs[0])
            if all(path.alpha(i) == (-1) ** j * a0 for j, i in enumerate(idxs)):
                found.append(r)
        if len(found) == 1:
            res[k] = found[0]
        else:
            failed.append(k)
    return Cor27Scan(not failed, res, failed)
