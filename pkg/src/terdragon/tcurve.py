"""Lattice realisations of turn sequences.

A curve starts at ``origin`` heading along ``dir0``; turn +1 rotates the heading
by +2 (120 degrees counterclockwise), turn -1 by -2.  Segment vectors are
``theta**scale_exp * u_d`` so that derived curves stay on exact coordinates.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .foldseq import FoldSeq, format_signs, parse_signs
from .trilattice import UNIT, EdgeKey, EPoint, edge_key, mul, norm, theta_pow

_UA = np.array([u[0] for u in UNIT], dtype=np.int64)
_UB = np.array([u[1] for u in UNIT], dtype=np.int64)


class BadLength(ValueError):
    pass


def _turn_array(turns) -> np.ndarray:
    if isinstance(turns, np.ndarray):
        return turns.astype(np.int8, copy=False)
    if isinstance(turns, FoldSeq):
        return np.asarray(turns.signs, dtype=np.int8)
    if isinstance(turns, str):
        return np.asarray(parse_signs(turns), dtype=np.int8)
    return np.asarray(tuple(turns), dtype=np.int8)


@dataclass(frozen=True, eq=False)
class TCurve:
    origin: EPoint
    dir0: int
    turns: np.ndarray
    scale_exp: int = 0
    meta: dict = field(default_factory=dict, compare=False)

    def __len__(self):
        """Number of segments."""
        return len(self.turns) + 1

    @cached_property
    def dirs(self) -> np.ndarray:
        d = np.empty(len(self.turns) + 1, dtype=np.int64)
        d[0] = 0
        np.cumsum(2 * self.turns.astype(np.int64), out=d[1:])
        return (d + self.dir0) % 6

    @cached_property
    def vertices(self) -> np.ndarray:
        """(len + 1, 2) int64 array of exact vertex coordinates."""
        d = self.dirs
        a = np.concatenate(([0], np.cumsum(_UA[d])))
        b = np.concatenate(([0], np.cumsum(_UB[d])))
        if self.scale_exp:
            c, e = theta_pow(self.scale_exp)
            a, b = a * c - b * e, a * e + b * c + b * e
        return np.stack((a + self.origin[0], b + self.origin[1]), axis=1)

    @property
    def start(self) -> EPoint:
        return EPoint(int(self.vertices[0, 0]), int(self.vertices[0, 1]))

    @property
    def end(self) -> EPoint:
        return EPoint(int(self.vertices[-1, 0]), int(self.vertices[-1, 1]))

    def vertex_list(self) -> list[EPoint]:
        return [EPoint(int(a), int(b)) for a, b in self.vertices]

    def vertex_set(self) -> set[tuple[int, int]]:
        return set(map(tuple, self.vertices.tolist()))

    def edge_keys(self) -> list[EdgeKey]:
        if self.scale_exp:
            raise ValueError("edge keys are defined for unit-scale curves only")
        return [edge_key(p, int(d)) for p, d in zip(self.vertices[:-1].tolist(), self.dirs.tolist())]

    def segments(self) -> list[tuple[EPoint, int]]:
        return [(EPoint(*p), int(d)) for p, d in zip(self.vertices[:-1].tolist(), self.dirs.tolist())]

    def to_json(self) -> str:
        return json.dumps({"origin": list(self.origin), "dir": self.dir0,
                           "turns": format_signs(self.turns.tolist()),
                           "scale_exp": self.scale_exp})

    @classmethod
    def from_json(cls, text: str) -> TCurve:
        obj = json.loads(text)
        return realize(obj["turns"], EPoint(*obj["origin"]), obj["dir"], obj.get("scale_exp", 0))


def realize(turns, origin=(0, 0), dir0: int = 0, scale_exp: int = 0) -> TCurve:
    return TCurve(EPoint(*origin), dir0 % 6, _turn_array(turns), scale_exp)


def single_segment(origin=(0, 0), d: int = 0) -> TCurve:
    return realize((), origin, d)


# -- self-avoidance -------------------------------------------------------------

@dataclass
class Collision:
    index: int        # 0-based segment index of the second use
    first: int        # 0-based index of the earlier segment on the same side
    edge: tuple


def _segment_keys(c: TCurve) -> np.ndarray:
    v = c.vertices
    p, q = v[:-1], v[1:]
    # order endpoints lexicographically so both orientations share a key
    swap = (p[:, 0] > q[:, 0]) | ((p[:, 0] == q[:, 0]) & (p[:, 1] > q[:, 1]))
    lo = np.where(swap[:, None], q, p)
    hi = np.where(swap[:, None], p, q)
    off = int(np.abs(v).max()) + 1
    span = 2 * off + 1
    return (((lo[:, 0] + off) * span + (lo[:, 1] + off)) * span + (hi[:, 0] + off)) * span + (hi[:, 1] + off)


def check_self_avoiding(c: TCurve) -> Collision | None:
    """``None`` if no side carries two segments, else the earliest repeat."""
    keys = _segment_keys(c)
    order = np.argsort(keys, kind="stable")
    ks = keys[order]
    dup = np.nonzero(ks[1:] == ks[:-1])[0]
    if len(dup) == 0:
        return None
    seconds = order[dup + 1]
    i = int(seconds.min())
    j = int(np.nonzero(keys[:i] == keys[i])[0][0])
    v = c.vertices
    return Collision(i, j, (tuple(v[i].tolist()), tuple(v[i + 1].tolist())))


# -- derivation -----------------------------------------------------------------

def _as_unit(p) -> int | None:
    try:
        return UNIT.index((int(p[0]), int(p[1])))
    except ValueError:
        return None


def delta_curve(c: TCurve, h: int = 0) -> TCurve:
    """Replace each aligned block of three segments by one segment.

    ``h`` is the index of the first segment of the first block; bounded folding
    curves use ``h = 0`` and need a multiple of three segments.
    """
    from .foldseq import delta_seq  # local: avoid widening the public import surface

    nseg = len(c)
    if h == 0 and nseg % 3:
        raise BadLength(f"{nseg} segments is not a multiple of 3")
    ngroups = (nseg - h) // 3
    if ngroups < 1:
        raise BadLength("fewer than 3 segments to derive")
    v = c.vertices
    first = v[h + 3] - v[h]
    # first block spans theta**(s+1) * u_d' exactly
    c_, e_ = theta_pow(c.scale_exp + 1)
    nrm = c_ * c_ + c_ * e_ + e_ * e_
    # divide by theta**(s+1): multiply by its conjugate and by 1/norm
    conj = (c_ + e_, -e_)
    q = mul((int(first[0]), int(first[1])), conj)
    if q[0] % nrm or q[1] % nrm:
        raise BadLength("first block does not span a derived segment")
    d_new = _as_unit((q[0] // nrm, q[1] // nrm))
    if d_new is None:
        raise BadLength("first block does not span a derived segment")
    # raises BadResidue unless blocks turn (eps, -eps) internally
    delta_seq(FoldSeq(tuple(c.turns[h: h + 3 * ngroups - 1].tolist()), h + 1), h % 3)
    # turn between blocks i-1 and i sits at 1-based position h + 3i
    dturns = c.turns[h + 2: h + 3 * ngroups - 1: 3].copy()
    return TCurve(EPoint(int(v[h][0]), int(v[h][1])), d_new, dturns, c.scale_exp + 1)


def endpoint_norm(c: TCurve) -> int:
    return norm(c.end - c.start)


# -- diameter -----------------------------------------------------------------

def _hull(points: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Andrew's monotone chain; input in affine coordinates, collinear points dropped."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _from_affine(p):
    x, y = p
    return ((x - y) // 2, y)


def diameter_sq(c_or_points) -> int:
    """Exact squared diameter (unit side length) via hull and rotating calipers."""
    if isinstance(c_or_points, TCurve):
        v = c_or_points.vertices
    else:
        v = np.asarray(list(c_or_points), dtype=np.int64).reshape(-1, 2)
    # (a, b) -> (2a + b, b) is linear, so hull and antipodality are preserved
    aff = np.unique(np.stack((2 * v[:, 0] + v[:, 1], v[:, 1]), axis=1), axis=0)
    hull = _hull([tuple(p) for p in aff.tolist()])
    h = [_from_affine(p) for p in hull]
    m = len(h)
    if m == 1:
        return 0
    if m == 2:
        return norm((h[1][0] - h[0][0], h[1][1] - h[0][1]))

    def area2(i, j, k):
        a, b, cc = hull[i], hull[j], hull[k]
        return abs((b[0] - a[0]) * (cc[1] - a[1]) - (b[1] - a[1]) * (cc[0] - a[0]))

    def dist(i, j):
        return norm((h[i][0] - h[j][0], h[i][1] - h[j][1]))

    best = 0
    j = 1
    for i in range(m):
        ni = (i + 1) % m
        while area2(i, ni, (j + 1) % m) > area2(i, ni, j):
            j = (j + 1) % m
        best = max(best, dist(i, j), dist(ni, j))
    return best


def diameter(c) -> int:
    return diameter_sq(c)


class ZSqrt3:
    """p + q*sqrt(3) with integer p, q."""

    __slots__ = ("p", "q")

    def __init__(self, p: int, q: int = 0):
        self.p, self.q = p, q

    def __add__(self, o):
        o = o if isinstance(o, ZSqrt3) else ZSqrt3(o)
        return ZSqrt3(self.p + o.p, self.q + o.q)

    def __sub__(self, o):
        o = o if isinstance(o, ZSqrt3) else ZSqrt3(o)
        return ZSqrt3(self.p - o.p, self.q - o.q)

    def __mul__(self, o):
        o = o if isinstance(o, ZSqrt3) else ZSqrt3(o)
        return ZSqrt3(self.p * o.p + 3 * self.q * o.q, self.p * o.q + self.q * o.p)

    __rmul__ = __mul__

    def __eq__(self, o):
        o = o if isinstance(o, ZSqrt3) else ZSqrt3(o)
        return self.p == o.p and self.q == o.q

    def __hash__(self):
        return hash((self.p, self.q))

    def sign(self) -> int:
        p, q = self.p, self.q
        if p >= 0 and q >= 0:
            return 0 if p == q == 0 else 1
        if p <= 0 and q <= 0:
            return -1
        # opposite signs: compare p**2 with 3 q**2
        s = (p * p > 3 * q * q) - (p * p < 3 * q * q)
        return s if p > 0 else -s

    def __le__(self, o):
        return (self - o).sign() <= 0

    def __lt__(self, o):
        return (self - o).sign() < 0

    def __float__(self):
        return self.p + self.q * 3 ** 0.5

    def __repr__(self):
        return f"ZSqrt3({self.p}, {self.q})"


SQRT3 = ZSqrt3(0, 1)


def rho(n: int) -> ZSqrt3:
    """Diameter bound for n-folding curves: rho_1 = sqrt 3, rho_{n+1} = sqrt(3) rho_n + 1."""
    if n < 1:
        raise ValueError("rho is defined for n >= 1")
    r = SQRT3
    for _ in range(n - 1):
        r = r * SQRT3 + 1
    return r


def rho_sq(n: int) -> ZSqrt3:
    r = rho(n)
    return r * r


def within_rho(diam_sq: int, n: int) -> bool:
    return ZSqrt3(diam_sq) <= rho_sq(n)


# -- triangle coverage ---------------------------------------------------------

def _unit_up(edges, p) -> bool:
    a, b = p
    return ((a, b, 0) in edges and (a, b, 1) in edges and (a + 1, b, 2) in edges)


def _unit_down(edges, p) -> bool:
    # down triangle {p, p + u0, p + u5}
    a, b = p
    return ((a, b, 0) in edges and (a + 1, b - 1, 1) in edges and (a + 1, b - 1, 2) in edges)


def max_covered_triangle(edges) -> tuple[int, tuple | None]:
    """Largest k such that every unit side inside some k-triangle is in ``edges``.

    Returns ``(k, (corner, orientation))`` with orientation "up" (corners p,
    p + k u0, p + k u1) or "down" (corners p, p + k u0, p + k u5); ``(0, None)``
    if no unit triangle is covered.
    """
    es = {tuple(e) for e in edges}
    pts = set()
    for a, b, ax in es:
        pts.add((a, b))
    up: dict = {}
    down: dict = {}
    # up[p] = 1 + min(up[p + u0], up[p + u1]) when the unit up-triangle at p is
    # covered; both neighbours raise a + b, so a descending sweep is topological
    for p in sorted(pts, key=lambda p: p[0] + p[1], reverse=True):
        if _unit_up(es, p):
            up[p] = 1 + min(up.get((p[0] + 1, p[1]), 0), up.get((p[0], p[1] + 1), 0))
    # down-triangles grow towards p + u0 and p + u5, both raising a
    for p in sorted(pts, key=lambda p: p[0], reverse=True):
        if _unit_down(es, p):
            down[p] = 1 + min(down.get((p[0] + 1, p[1]), 0), down.get((p[0] + 1, p[1] - 1), 0))
    best, where = 0, None
    for p in sorted(pts):
        if up.get(p, 0) > best:
            best, where = up[p], (EPoint(*p), "up")
        if down.get(p, 0) > best:
            best, where = down[p], (EPoint(*p), "down")
    return best, where


def triangle_edges(corner, k: int, orientation: str) -> set[EdgeKey]:
    """All unit sides inside the k-triangle at ``corner``."""
    a0, b0 = corner
    out = set()
    second = 1 if orientation == "up" else 5
    closing = 2 if orientation == "up" else 1
    for i in range(k):
        for j in range(k - i):
            p = (a0 + i + j * UNIT[second][0], b0 + j * UNIT[second][1])
            out.add(edge_key(p, 0))
            out.add(edge_key(p, second))
            q = (p[0] + 1, p[1]) if orientation == "up" else (p[0] + 1, p[1] - 1)
            out.add(edge_key(q, closing))
    return out
