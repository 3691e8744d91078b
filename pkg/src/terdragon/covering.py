"""Finite-window coverings of the plane by folding curves.

``build_patch`` runs the level-by-level construction: level 0 is one of the
two (P)-orientation fields, and each pass links triples A, B, C of level-k
curves starting from points of the next sublattice.  Only curves lying wholly
inside the window are kept; anything that would need an edge outside it is
dropped and its edges are reported as truncated.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

from .foldseq import Lambda, PStep, as_lambda, extract_lambda, AmbiguousWindow, NotFolding
from .tcurve import TCurve, ZSqrt3, realize, rho
from .trilattice import (E1, UNIT, EdgeKey, EPoint, HexWindow, edge_key,
                         hex_edges, hexnorm, in_frame, mul, orient_E, step)


class BadChain(ValueError):
    pass


class WindowTooSmall(ValueError):
    pass


class NoStarPoint(ValueError):
    pass


class InconsistentInput(ValueError):
    pass


class CurveTooShort(ValueError):
    pass


# -- chains ----------------------------------------------------------------------

@dataclass(frozen=True)
class XChain:
    points: tuple[EPoint, ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(EPoint(*p) for p in self.points))
        for k in range(len(self.points) - 1):
            if not in_frame(self.points[k], k, self.points[k + 1]):
                raise BadChain(f"x_{k + 1} = {tuple(self.points[k + 1])} is not in V_{k}(x_{k})")

    def __len__(self):
        return len(self.points)

    def __getitem__(self, k):
        return self.points[k]

    def extended(self, n: int) -> XChain:
        """Pad to n + 1 entries by repeating the last point."""
        pts = list(self.points) or [EPoint(0, 0)]
        while len(pts) < n + 1:
            pts.append(pts[-1])
        return XChain(tuple(pts))

    def is_constant_tail(self, upto: int | None = None) -> bool:
        pts = self.points[: (upto + 1) if upto is not None else None]
        return len(pts) >= 2 and pts[-1] == pts[-2]

    @classmethod
    def parse(cls, text: str) -> XChain:
        pts = []
        for item in text.split(";"):
            item = item.strip()
            if item:
                a, b = item.split(",")
                pts.append(EPoint(int(a), int(b)))
        return cls(tuple(pts))

    def __str__(self):
        return ";".join(f"{p.a},{p.b}" for p in self.points)


def folding_displacement(lam, n: int, d: int = 0) -> EPoint:
    """End minus start of an n-folding curve for T_lam with initial direction d."""
    lam = as_lambda(lam)
    D = EPoint(*UNIT[d % 6])
    for k in range(n):
        D = mul(D, (1, 1) if lam[k] > 0 else (2, -1))
    return EPoint(*D)


def _parent(lam, n, s, f, p: PStep):
    """Start and direction of C_{n+1} given C_n = (s, f) placed at position p."""
    l = lam[n]
    if p == PStep.I:
        return s, f
    if p == PStep.M:
        fa = (f - 2 * l) % 6
        return s - folding_displacement(lam, n, fa), fa
    fb = (f + 2 * l) % 6
    sb = s - folding_displacement(lam, n, fb)
    fa = (fb - 2 * l) % 6
    return sb - folding_displacement(lam, n, fa), fa


def chain_from_pseq(lam, pseq, x0=(0, 0), d0: int = 0) -> tuple[XChain, list[tuple[EPoint, int]]]:
    """Chain whose covering nests the segment (x0, d0) as C_n = C_{n+1}^{P_n}.

    Also returns the (start, direction) of every C_n.
    """
    lam = as_lambda(lam)
    s, f = EPoint(*x0), d0 % 6
    pts = [s]
    track = [(s, f)]
    for n, p in enumerate(pseq):
        s, f = _parent(lam, n, s, f, PStep(p))
        pts.append(s)
        track.append((s, f))
    return XChain(tuple(pts)), track


def pseq_from_chain(lam, chain: XChain, n: int, d0: int = 0) -> list[PStep]:
    """Positions P_0 .. P_{n-1} of the curves through the segment (x_0, d0)."""
    lam = as_lambda(lam)
    chain = chain.extended(n)
    s, f = chain[0], d0 % 6
    out = []
    for k in range(n):
        e = s + folding_displacement(lam, k, f)
        if in_frame(chain[k + 1], k + 1, s):
            p = PStep.I
        elif in_frame(chain[k + 1], k + 1, e):
            p = PStep.S
        else:
            p = PStep.M
        out.append(p)
        s, f = _parent(lam, k, s, f, p)
    return out


# -- patches ------------------------------------------------------------------------

@dataclass
class PatchCurve:
    start: EPoint
    dirs: list[int]
    end: EPoint

    def vertices(self) -> list[EPoint]:
        out = [self.start]
        p = self.start
        for d in self.dirs:
            p = step(p, d)
            out.append(p)
        return out

    def turns(self) -> list[int]:
        return [1 if (b - a) % 6 == 2 else -1 for a, b in zip(self.dirs, self.dirs[1:])]

    def to_tcurve(self) -> TCurve:
        return realize(self.turns(), self.start, self.dirs[0])


def hex_margin(n: int) -> int:
    """Hex-norm reach of an n-folding curve: smallest m with m*sqrt(3)/2 >= rho_n."""
    if n == 0:
        return 1
    r2 = rho(n) * 2
    m = math.floor(float(r2) / math.sqrt(3))
    while ZSqrt3(0, m) < r2:
        m += 1
    return m


@dataclass
class CoveringPatch:
    window: HexWindow
    level: int
    lam: Lambda
    orientation: str
    chain: XChain
    curves: dict[int, PatchCurve]
    truncated: int = 0
    star: tuple[EPoint, str] | None = None
    dropped: list[int] = field(default_factory=list)

    @property
    def margin(self) -> int:
        # joining complete curves at the star point leaves coverage unchanged
        return hex_margin(self.level)

    @property
    def guaranteed_radius(self) -> int:
        return self.window.radius - self.margin

    def in_guaranteed(self, p) -> bool:
        return hexnorm((p[0] - self.window.center[0], p[1] - self.window.center[1])) <= self.guaranteed_radius

    @cached_property
    def segment_map(self) -> dict[EdgeKey, tuple[int, int, int]]:
        """EdgeKey -> (direction, curve id, index in curve)."""
        out: dict = {}
        for cid, c in self.curves.items():
            p = c.start
            for i, d in enumerate(c.dirs):
                k = edge_key(p, d)
                if k in out:
                    out.setdefault("__dup__", []).append(k)
                out[k] = (d, cid, i)
                p = step(p, d)
        return out

    def links(self, e: EdgeKey) -> tuple[EdgeKey | None, EdgeKey | None]:
        d, cid, i = self.segment_map[e]
        c = self.curves[cid]
        verts = None
        prev = nxt = None
        if i > 0 or i + 1 < len(c.dirs):
            verts = c.vertices()
        if i > 0:
            prev = edge_key(verts[i - 1], c.dirs[i - 1])
        if i + 1 < len(c.dirs):
            nxt = edge_key(verts[i + 1], c.dirs[i + 1])
        return prev, nxt

    @cached_property
    def pairings(self) -> dict[EPoint, list[tuple[int, int]]]:
        """Vertex -> oriented (incoming dir, outgoing dir) pairs of consecutive segments."""
        out: dict = {}
        for c in self.curves.values():
            p = c.start
            for d0, d1 in zip(c.dirs, c.dirs[1:]):
                p = step(p, d0)
                out.setdefault(p, []).append((d0, d1))
        return out

    @cached_property
    def ends(self) -> dict[EPoint, list[tuple[str, int]]]:
        """Vertex -> curve ends there, as ("in", last dir) or ("out", first dir)."""
        out: dict = {}
        for c in self.curves.values():
            out.setdefault(c.start, []).append(("out", c.dirs[0]))
            out.setdefault(c.end, []).append(("in", c.dirs[-1]))
        return out

    def unoriented_structure(self, v) -> frozenset:
        """Connections at ``v`` as unordered pairs (or singletons for ends) of sides leaving v."""
        items = [frozenset({(a + 3) % 6, b}) for a, b in self.pairings.get(v, ())]
        for kind, d in self.ends.get(v, ()):
            items.append(frozenset({d if kind == "out" else (d + 3) % 6}))
        return frozenset(items)

    def curve_of_vertex(self, v) -> set[int]:
        return {cid for cid, c in self.curves.items() if v in set(c.vertices())}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_dict(self) -> dict:
        return {
            "window": {"center": list(self.window.center), "radius": self.window.radius},
            "level": self.level,
            "lambda": str(self.lam),
            "orientation": self.orientation,
            "chain": [list(p) for p in self.chain.points],
            "star": None if self.star is None else {"center": list(self.star[0]), "mode": self.star[1]},
            "truncated": self.truncated,
            "curves": [{"id": cid, "start": list(c.start), "dirs": "".join(map(str, c.dirs))}
                       for cid, c in sorted(self.curves.items())],
        }

    @classmethod
    def from_json(cls, text: str) -> CoveringPatch:
        obj = json.loads(text)
        curves = {}
        for item in obj["curves"]:
            dirs = [int(ch) for ch in item["dirs"]]
            start = EPoint(*item["start"])
            end = start
            for d in dirs:
                end = step(end, d)
            curves[item["id"]] = PatchCurve(start, dirs, end)
        star = obj.get("star")
        return cls(HexWindow(EPoint(*obj["window"]["center"]), obj["window"]["radius"]),
                   obj["level"], Lambda.parse(obj["lambda"]), obj["orientation"],
                   XChain(tuple(EPoint(*p) for p in obj["chain"])), curves, obj.get("truncated", 0),
                   None if star is None else (EPoint(*star["center"]), star["mode"]))


def build_patch(lam, chain, orientation: str = E1, window: HexWindow | None = None,
                radius: int | None = None) -> CoveringPatch:
    """Level-N approximation of the covering C_N(Lambda_N, X) on a hexagonal window."""
    lam = as_lambda(lam)
    N = len(lam)
    if not isinstance(chain, XChain):
        chain = XChain(tuple(chain))
    chain = chain.extended(N)
    if window is None:
        window = HexWindow(EPoint(*chain[0]), radius if radius is not None else 12)
    if window.radius < 3:
        raise WindowTooSmall("window radius must be at least 3")
    if hex_margin(N) >= window.radius:
        raise WindowTooSmall(f"margin {hex_margin(N)} consumes a radius-{window.radius} window")

    starts: list = []
    ends: list = []
    dirs: list = []
    for e in hex_edges(window):
        s, d = orient_E(e, orientation)
        starts.append(s)
        dirs.append([d])
        ends.append(step(s, d))
    total_edges = len(starts)

    for k in range(N):
        l = lam[k]
        base = chain[k + 1]
        index = {(starts[i], dirs[i][0]): i for i in range(len(starts))}
        n_starts, n_ends, n_dirs = [], [], []
        for i in range(len(starts)):
            if not in_frame(base, k + 1, starts[i]):
                continue
            j = index.get((ends[i], (dirs[i][-1] + 2 * l) % 6))
            if j is None:
                continue
            m = index.get((ends[j], (dirs[j][-1] - 2 * l) % 6))
            if m is None:
                continue
            n_starts.append(starts[i])
            n_ends.append(ends[m])
            n_dirs.append(dirs[i] + dirs[j] + dirs[m])
        starts, ends, dirs = n_starts, n_ends, n_dirs

    curves = {i: PatchCurve(EPoint(*starts[i]), dirs[i], EPoint(*ends[i])) for i in range(len(starts))}
    covered = sum(len(d) for d in dirs)
    return CoveringPatch(window, N, lam, orientation, chain, curves, total_edges - covered)


def star_connect(patch: CoveringPatch, mode: str) -> CoveringPatch:
    """Join the 3 curves ending at the star point to the 3 leaving it.

    Mode "+" continues each incoming curve along the outgoing one just at its
    left (direction +2), mode "-" along the one at its right.
    """
    if mode not in ("+", "-"):
        raise ValueError("mode must be '+' or '-'")
    if not patch.chain.is_constant_tail():
        raise NoStarPoint("chain is not constant at its end")
    x = EPoint(*patch.chain[-1])
    incoming = {cid: c for cid, c in patch.curves.items() if c.end == x}
    outgoing = {c.dirs[0]: cid for cid, c in patch.curves.items() if c.start == x}
    if len(incoming) != 3 or len(outgoing) != 3:
        raise NoStarPoint(f"{len(incoming)} curves end and {len(outgoing)} start at {tuple(x)}")
    turn = 2 if mode == "+" else -2
    curves = dict(patch.curves)
    for cid, c in sorted(incoming.items()):
        oid = outgoing[(c.dirs[-1] + turn) % 6]
        o = curves.pop(oid)
        curves[cid] = PatchCurve(c.start, c.dirs + o.dirs, o.end)
    return CoveringPatch(patch.window, patch.level, patch.lam, patch.orientation, patch.chain,
                         curves, patch.truncated, (x, mode))


def separated_patch(lam, radius: int, x0=(0, 0), d0: int = 0, orientation: str = E1) -> tuple[CoveringPatch, EPoint]:
    """Patch around the nested middle thirds C_n = C_{n+1}^M.

    Returns the patch and twice the common midpoint of all C_n (the center of
    symmetry, in doubled coordinates).
    """
    lam = as_lambda(lam)
    chain, _ = chain_from_pseq(lam, "M" * len(lam), x0, d0)
    patch = build_patch(lam, chain, orientation, HexWindow(EPoint(*x0), radius))
    u = UNIT[d0 % 6]
    twice_center = EPoint(2 * x0[0] + u[0], 2 * x0[1] + u[1])
    return patch, twice_center


# -- validation ------------------------------------------------------------------------

@dataclass
class ValidationReport:
    covering_ok: bool
    property_P: bool
    parity: int | None
    interior_edges: int
    uncovered_interior: int
    duplicates: int
    truncated: int
    bad_turns: int

    def to_dict(self):
        return dict(self.__dict__)


def validate(patch: CoveringPatch) -> ValidationReport:
    """Exact-once coverage and orientation parity on the guaranteed region."""
    segs = patch.segment_map
    dups = len(segs.get("__dup__", ()))
    interior = 0
    uncovered = 0
    parities = set()
    for e in hex_edges(HexWindow(patch.window.center, max(patch.guaranteed_radius, 0))):
        interior += 1
        info = segs.get(e)
        if info is None:
            uncovered += 1
            continue
        parities.add(info[0] % 2)
    bad_turns = 0
    for c in patch.curves.values():
        for a, b in zip(c.dirs, c.dirs[1:]):
            if (b - a) % 6 not in (2, 4):
                bad_turns += 1
    parity = parities.pop() if len(parities) == 1 else None
    return ValidationReport(
        covering_ok=(uncovered == 0 and dups == 0 and bad_turns == 0 and patch.guaranteed_radius >= 0),
        property_P=(len(parities) == 0 and parity is not None),
        parity=parity,
        interior_edges=interior,
        uncovered_interior=uncovered,
        duplicates=dups,
        truncated=patch.truncated,
        bad_turns=bad_turns,
    )


def curve_frames(c: PatchCurve, k_max: int) -> tuple[Lambda, list[EPoint]]:
    """Extracted fold signs and one vertex of each V_1(C) .. V_k(C)."""
    turns = c.turns()
    if len(c.dirs) < 4:
        raise CurveTooShort("need at least 4 segments to fix the mod-3 residue")
    ext = extract_lambda(turns)
    verts = c.vertices()
    bases = []
    for k, h in enumerate(ext.residues[:k_max]):
        # residue at level k marks the vertices of V_{k+1}(C)
        r = h % 3 ** (k + 1)
        bases.append(verts[r])
    return ext.lam, bases


@dataclass
class LatticeReport:
    agree: bool
    levels: int
    curves: int
    excluded: int
    lambdas_agree: bool
    lam: str | None
    matches_chain: bool

    def to_dict(self):
        return dict(self.__dict__)


def level_lattices(patch: CoveringPatch, k: int | None = None) -> LatticeReport:
    """Check that every curve of the patch induces the same V_1 .. V_k and fold signs."""
    k = patch.level if k is None else k
    frames = []
    excluded = 0
    for cid, c in sorted(patch.curves.items()):
        try:
            frames.append(curve_frames(c, k))
        except (CurveTooShort, NotFolding, AmbiguousWindow):
            excluded += 1
    if not frames:
        return LatticeReport(True, 0, 0, excluded, True, None, True)
    lam0, bases0 = frames[0]
    levels = min(len(b) for _, b in frames)
    agree = all(in_frame(bases0[j], j + 1, b[j]) for _, b in frames for j in range(levels))
    lam_agree = all(l.entries[: levels] == lam0.entries[: levels] for l, _ in frames)
    chain = patch.chain.extended(patch.level)
    matches = all(in_frame(chain[j + 1], j + 1, bases0[j]) for j in range(min(levels, patch.level)))
    return LatticeReport(agree, levels, len(frames), excluded, lam_agree, str(lam0), matches)


# -- classification ----------------------------------------------------------------------

class CaseKind(str, Enum):
    ONE_CURVE = "OneCurveCertified"
    STAR = "ThreeStar"
    SEPARATED = "ThreeSeparated"
    UNKNOWN = "Unknown"


@dataclass
class CaseTag:
    kind: CaseKind
    lower_bound: int | None = None
    detail: str = ""

    def to_dict(self):
        return {"case": self.kind.value, "lower_bound": self.lower_bound, "detail": self.detail}


def lambda_rule(spec: str, length: int) -> Lambda:
    """Expand "alternating:-1", "constant:+1", "periodic:+-+" or a literal sign string."""
    if ":" not in spec:
        lam = Lambda.parse(spec)
        if len(lam) < length:
            raise ValueError(f"need {length} fold signs, got {len(lam)}")
        return lam
    kind, arg = spec.split(":", 1)
    if kind == "alternating":
        first = int(arg)
        return Lambda(tuple(first * (-1) ** i for i in range(length)))
    if kind == "constant":
        return Lambda((int(arg),) * length)
    if kind == "periodic":
        pat = Lambda.parse(arg).entries
        return Lambda(tuple(pat[i % len(pat)] for i in range(length)))
    raise ValueError(f"unknown lambda rule {spec!r}")


def eight_pattern_ok(lam, pseq, horizon: int) -> bool:
    """Whether P follows the single-curve pattern on every 8-block inside the horizon."""
    lam = as_lambda(lam)
    blocks = 0
    n = 0
    while 8 * n + 4 <= min(horizon, len(lam)) and 8 * n + 3 < len(pseq):
        b = 8 * n
        want = [PStep.I, PStep.M if lam[b + 1] > 0 else PStep.S,
                PStep.I, PStep.S if lam[b + 3] > 0 else PStep.M]
        if [PStep(p) for p in pseq[b: b + 4]] != want:
            return False
        blocks += 1
        n += 1
    return blocks > 0


def _eventually(seq, pred, horizon) -> bool:
    tail = seq[horizon // 2: horizon]
    return len(tail) > 0 and all(pred(i) for i in range(horizon // 2, min(horizon, len(seq))))


def classify(lam, chain: XChain | None = None, pseq=None, horizon: int = 8) -> CaseTag:
    """Coarse case of the covering through the reference segment.

    Star: the chain is constant up to the horizon.  Separated: P is M and the
    fold signs alternate on the second half of the horizon.  One curve: P
    follows the 8-periodic pattern.  Anything else is Unknown with lower bound
    1, since finitely many levels never certify 2 curves.
    """
    if horizon < 8:
        raise ValueError("horizon must be at least 8")
    lam = as_lambda(lam)
    if chain is not None:
        chain = chain if isinstance(chain, XChain) else XChain(tuple(chain))
        ext = chain.extended(horizon)
        if all(p == ext[horizon // 2] for p in ext.points[horizon // 2: horizon + 1]):
            return CaseTag(CaseKind.STAR, 3, f"chain constant at {tuple(ext[horizon])}")
        if pseq is None:
            if len(lam) < horizon:
                raise ValueError(f"need {horizon} fold signs to follow the chain")
            pseq = pseq_from_chain(lam, chain, horizon)
    if pseq is None:
        raise ValueError("need a chain or a P-sequence")
    P = [PStep(p) for p in pseq]
    if len(P) < horizon:
        raise ValueError(f"P-sequence shorter than horizon {horizon}")
    if _eventually(P, lambda i: P[i] == PStep.I, horizon) or _eventually(P, lambda i: P[i] == PStep.S, horizon):
        raise InconsistentInput("P is eventually constant I or S: the nested curves do not exhaust a complete curve")
    if len(lam) >= horizon and _eventually(P, lambda i: P[i] == PStep.M, horizon) and \
            all(lam[i + 1] == -lam[i] for i in range(horizon // 2, horizon - 1)):
        return CaseTag(CaseKind.SEPARATED, 3, "P eventually M with alternating folds")
    if eight_pattern_ok(lam, P, horizon):
        return CaseTag(CaseKind.ONE_CURVE, 1, "P follows the 8-block pattern")
    return CaseTag(CaseKind.UNKNOWN, 1, "no finite certificate")


# -- symmetry ---------------------------------------------------------------------------------

def rotate_about(center, p, k: int) -> EPoint:
    """Rotate p by k * 60 degrees about center."""
    r = (1, 0)
    for _ in range(k % 6):
        r = mul(r, (0, 1))
    q = mul((p[0] - center[0], p[1] - center[1]), r)
    return EPoint(center[0] + q[0], center[1] + q[1])


def _map_structure(s: frozenset, shift: int) -> frozenset:
    return frozenset(frozenset((d + shift) % 6 for d in item) for item in s)


def structure_mismatches(pa: CoveringPatch, pb: CoveringPatch, fpoint, dir_shift: int,
                         radius: int | None = None, center=None) -> tuple[int, int]:
    """Compare unoriented connections of ``pa`` at v with those of ``pb`` at fpoint(v).

    Only vertices whose images both lie in the guaranteed regions are compared.
    Returns (compared, mismatches).
    """
    center = pa.window.center if center is None else center
    radius = pa.guaranteed_radius if radius is None else radius
    compared = bad = 0
    for v in _points_within(center, radius):
        if not pa.in_guaranteed(v):
            continue
        w = fpoint(v)
        if not pb.in_guaranteed(w):
            continue
        compared += 1
        if _map_structure(pa.unoriented_structure(v), dir_shift) != pb.unoriented_structure(w):
            bad += 1
    return compared, bad


def _points_within(center, r):
    from .trilattice import hex_points
    return hex_points(HexWindow(EPoint(*center), max(r, 0)))


@dataclass
class SymmetryReport:
    kind: str
    compared: int
    mismatches: int

    @property
    def invariant(self) -> bool:
        return self.compared > 0 and self.mismatches == 0

    def to_dict(self):
        return {"kind": self.kind, "compared": self.compared, "mismatches": self.mismatches,
                "invariant": self.invariant}


def symmetry_check(patch: CoveringPatch, twice_center=None) -> SymmetryReport:
    """Star patches: 120-degree rotation about the star point.  Otherwise central
    symmetry about ``twice_center / 2`` (unoriented connections)."""
    if patch.star is not None:
        x = patch.star[0]
        c, bad = structure_mismatches(patch, patch, lambda v: rotate_about(x, v, 2), 2)
        return SymmetryReport("rotation-120", c, bad)
    if twice_center is None:
        return SymmetryReport("none", 0, 0)
    tc = twice_center
    c, bad = structure_mismatches(patch, patch, lambda v: EPoint(tc[0] - v[0], tc[1] - v[1]), 3)
    return SymmetryReport("central", c, bad)


# -- structure around sublattice points ------------------------------------------------------

def curve_ends_alternate(patch: CoveringPatch, x) -> bool:
    """Six curve ends at x, alternating in and out around it."""
    ends = patch.ends.get(EPoint(*x), [])
    if len(ends) != 6:
        return False
    side = {}
    for kind, d in ends:
        side[d if kind == "out" else (d + 3) % 6] = kind
    if len(side) != 6:
        return False
    return all(side[i] != side[(i + 1) % 6] for i in range(6))


def six_curves_clockwise(patch: CoveringPatch, x) -> list[int]:
    """Ids of the 6 curves with endpoint x, clockwise, starting with one ending at x."""
    x = EPoint(*x)
    around = {}
    for cid, c in patch.curves.items():
        if c.end == x:
            around[(c.dirs[-1] + 3) % 6] = cid
        if c.start == x:
            around[c.dirs[0]] = cid
    if len(around) != 6:
        raise ValueError(f"{len(around)} curve ends at {tuple(x)}")
    first_in = next(d for d in range(6) if patch.curves[around[d]].end == x)
    return [around[(first_in - i) % 6] for i in range(6)]


def _path_edges(vs) -> set[EdgeKey]:
    from .trilattice import direction_of
    return {edge_key(p, direction_of(p, q)) for p, q in zip(vs, vs[1:])}


def shared_frontiers(patch: CoveringPatch, x) -> list[bool]:
    """For the 6 curves around x (clockwise, C_1 ending at x), check that
    consecutive curves share exactly one half-side of their frontiers:
    F_LS(C_i) = F_LI(C_{i+1}) for odd i, F_RI(C_i) = F_RS(C_{i+1}) for even i.
    """
    from .frontier import frontier_edges, frontier_parts
    ids = six_curves_clockwise(patch, x)
    lam = patch.lam
    cs = [patch.curves[i].to_tcurve() for i in ids]
    parts = [frontier_parts(c, lam) for c in cs]
    fr = [frontier_edges(c) for c in cs]
    out = []
    for i in range(6):
        j = (i + 1) % 6
        inter = fr[i] & fr[j]
        if i % 2 == 0:
            ok = inter == _path_edges(parts[i]["LS"]) == _path_edges(parts[j]["LI"])
        else:
            ok = inter == _path_edges(parts[i]["RI"]) == _path_edges(parts[j]["RS"])
        out.append(ok)
    return out


def q_triangle_coverage(patch: CoveringPatch, corner, orientation: str = "up") -> int:
    """Side of the largest triangle covered by the level-2 curves joining the
    corners of a unit triangle of the Q = V_2 lattice (sides of length 3)."""
    from .tcurve import max_covered_triangle
    if patch.level != 2:
        raise ValueError("Q triangles are defined on level-2 patches")
    corner = EPoint(*corner)
    d1, d2 = (0, 1) if orientation == "up" else (0, 5)
    pts = {corner, corner + EPoint(*UNIT[d1]) * 3, corner + EPoint(*UNIT[d2]) * 3}
    edges: set = set()
    for c in patch.curves.values():
        if {c.start, c.end} <= pts:
            p = c.start
            for d in c.dirs:
                edges.add(edge_key(p, d))
                p = step(p, d)
    return max_covered_triangle(edges)[0] if edges else 0
