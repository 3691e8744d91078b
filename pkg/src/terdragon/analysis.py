"""Translation-canonical patch codes and local-isomorphism searches."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .covering import CoveringPatch
from .trilattice import EPoint, edge_key, hexnorm, spiral, step


class OutOfRegion(ValueError):
    pass


class RegionTooSmall(ValueError):
    pass


@dataclass(frozen=True)
class PatchCode:
    """Restriction of a patch to the open hexagon of radius ``size`` around a
    center, expressed relative to that center.

    ``segments`` holds (da, db, direction) for every oriented segment with both
    ends strictly inside; ``pairings`` holds (da, db, in_dir, out_dir) for every
    strictly-inside vertex where two consecutive segments of a curve meet.
    Curve ends left unconnected by a finite patch carry no pairing.
    """
    size: int
    segments: tuple[tuple[int, int, int], ...]
    pairings: tuple[tuple[int, int, int, int], ...]


def _inside_offsets(size: int) -> list[tuple[int, int]]:
    r = size - 1
    if r < 0:
        return []
    return [tuple(p) for p in spiral((0, 0), r)]


def _check_region(patch: CoveringPatch, center, size: int):
    c = patch.window.center
    if hexnorm((center[0] - c[0], center[1] - c[1])) + size > patch.guaranteed_radius:
        raise OutOfRegion(f"H({tuple(center)}, {size}) leaves the guaranteed region")


def _code_items(patch: CoveringPatch, center, offsets, inside):
    """Yield code entries in a fixed order; used for lazy comparison."""
    segs = patch.segment_map
    pairs = patch.pairings
    ca, cb = center
    for da, db in offsets:
        p = EPoint(ca + da, cb + db)
        for axis in range(3):
            q = step((da, db), axis)
            if q not in inside:
                continue
            info = segs.get(edge_key(p, axis))
            yield ("s", da, db, axis, None if info is None else info[0])
        for pr in sorted(pairs.get(p, ())):
            yield ("p", da, db) + pr


def patch_code(patch: CoveringPatch, center, n: int) -> PatchCode:
    """Code of the restriction to H*(center, 3**n)."""
    return patch_code_radius(patch, center, 3 ** n if n >= 0 else 0)


def patch_code_radius(patch: CoveringPatch, center, size: int) -> PatchCode:
    """Same as :func:`patch_code` for an arbitrary hexagon size."""
    _check_region(patch, center, size)
    offsets = _inside_offsets(size)
    inside = set(offsets)
    segs, prs = [], []
    for item in _code_items(patch, center, offsets, inside):
        if item[0] == "s":
            if item[4] is not None:
                segs.append((item[1], item[2], item[4]))
        else:
            prs.append(item[1:])
    return PatchCode(size, tuple(sorted(segs)), tuple(sorted(prs)))


@dataclass
class LisoResult:
    witness: EPoint | None
    scanned: int
    bound: int

    @property
    def found(self) -> bool:
        return self.witness is not None

    def to_dict(self):
        return {"witness": None if self.witness is None else list(self.witness),
                "scanned": self.scanned, "bound": self.bound}


def liso_search(patch_a: CoveringPatch, x, patch_b: CoveringPatch, y, n: int,
                bound: int | None = None) -> LisoResult:
    """First z in H(y, 5*3**n), scanned ring by ring, with the restriction of
    ``patch_b`` around z a translate of the restriction of ``patch_a`` around x."""
    size = 3 ** n
    bound = 5 * size if bound is None else bound
    _check_region(patch_a, x, size)
    cb = patch_b.window.center
    if hexnorm((y[0] - cb[0], y[1] - cb[1])) + bound + size > patch_b.guaranteed_radius:
        raise RegionTooSmall(f"H({tuple(y)}, {bound + size}) leaves the guaranteed region of patch B")
    offsets = _inside_offsets(size)
    inside = set(offsets)
    target = list(_code_items(patch_a, x, offsets, inside))
    scanned = 0
    for z in spiral(y, bound):
        scanned += 1
        ok = True
        for want, got in zip(target, _code_items(patch_b, z, offsets, inside)):
            if want != got:
                ok = False
                break
        if ok and sum(1 for _ in _code_items(patch_b, z, offsets, inside)) == len(target):
            return LisoResult(EPoint(*z), scanned, bound)
    return LisoResult(None, scanned, bound)


@dataclass
class LisoReport:
    n: int
    samples: int
    found: int
    seed: int
    max_distance: int
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.found == self.samples

    def to_dict(self):
        return {"n": self.n, "samples": self.samples, "found": self.found, "seed": self.seed,
                "max_distance": self.max_distance, "failures": self.failures, "ok": self.ok}


def sample_centers(patch: CoveringPatch, reach: int, count: int, rng: random.Random) -> list[EPoint]:
    """Uniform lattice points whose hexagon of radius ``reach`` fits the guaranteed region."""
    r = patch.guaranteed_radius - reach
    if r < 0:
        raise RegionTooSmall(f"guaranteed radius {patch.guaranteed_radius} < {reach}")
    c = patch.window.center
    out = []
    while len(out) < count:
        a = rng.randint(-r, r)
        b = rng.randint(-r, r)
        if max(abs(a), abs(b), abs(a + b)) <= r:
            out.append(EPoint(c[0] + a, c[1] + b))
    return out


def lisop_pairs(patch_a: CoveringPatch, patch_b: CoveringPatch, n: int, samples: int,
                seed: int = 0) -> LisoReport:
    """Witness search for ``samples`` random (x, y), x in A and y in B."""
    rng = random.Random(seed)
    size = 3 ** n
    xs = sample_centers(patch_a, size, samples, rng)
    ys = sample_centers(patch_b, 6 * size, samples, rng)
    found = 0
    worst = 0
    failures = []
    for x, y in zip(xs, ys):
        res = liso_search(patch_a, x, patch_b, y, n)
        if res.found:
            found += 1
            w = res.witness
            worst = max(worst, hexnorm((w[0] - y[0], w[1] - y[1])))
        else:
            failures.append({"x": list(x), "y": list(y)})
    return LisoReport(n, samples, found, seed, worst, failures)


def lisop_self(patch: CoveringPatch, n: int, samples: int, seed: int = 0) -> LisoReport:
    return lisop_pairs(patch, patch, n, samples, seed)
