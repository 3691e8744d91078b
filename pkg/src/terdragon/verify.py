"""Property suites behind ``terdragon verify``.

Every suite returns a JSON-ready dict with ``suite``, ``params``, ``pass`` and
suite-specific details.  Reports never contain timings so that reruns with the
same seed are byte-identical.
"""
from __future__ import annotations

import itertools
import random

from .covering import (XChain, build_patch, chain_from_pseq, curve_ends_alternate,
                       level_lattices, separated_patch, shared_frontiers,
                       star_connect, symmetry_check, validate)
from .foldseq import Lambda, bar, delta_seq, extract_lambda, gen_T, gen_T_array
from .frontier import frontier_law_report, region
from .tcurve import (check_self_avoiding, delta_curve, diameter_sq, endpoint_norm,
                     max_covered_triangle, realize, rho_sq, within_rho)
from .trilattice import E1, E2, EPoint, HexWindow, hexnorm

SUITES = ("self-avoid", "palindrome", "residue", "delta", "diameter", "coverage",
          "frontier", "covering", "liso")


def all_lambdas(n: int):
    for t in itertools.product((1, -1), repeat=n):
        yield Lambda(t)


def random_lambda(n: int, rng: random.Random) -> Lambda:
    return Lambda(tuple(rng.choice((1, -1)) for _ in range(n)))


def _report(suite, params, ok, **details):
    return {"suite": suite, "params": params, "pass": bool(ok), **details}


# -- sequences ---------------------------------------------------------------------

def sequence_law_failures(lam: Lambda) -> list[str]:
    s = gen_T(lam).signs
    n = len(lam)
    bad = []
    if len(s) != 3 ** n - 1:
        bad.append("length")
    if n and s[: 3 ** (n - 1) - 1] != gen_T(lam.prefix(n - 1)).signs:
        bad.append("prefix")
    if bar(s).signs != s:
        bad.append("bar-invariance")
    if s.count(1) != s.count(-1):
        bad.append("balance")
    for k in range(n):
        pos = 3 ** k
        i = 0
        while pos + 3 ** (k + 1) * i <= len(s):
            if s[pos + 3 ** (k + 1) * i - 1] != lam[k] * 1:
                bad.append(f"position law k={k}")
                break
            i += 1
    return bad


def suite_palindrome(n: int = 8) -> dict:
    """Length, prefix, bar-invariance, balance and the position law, all Lambda up to n."""
    failures = []
    count = 0
    for m in range(1, n + 1):
        for lam in all_lambdas(m):
            count += 1
            bad = sequence_law_failures(lam)
            if bad:
                failures.append({"lambda": str(lam), "failed": bad})
    return _report("palindrome", {"n": n}, not failures, sequences=count, failures=failures[:20])


def suite_residue(n: int = 6) -> dict:
    """Re-extraction of Lambda from complete sequences and from random windows."""
    failures = []
    count = 0
    for m in range(1, n + 1):
        for lam in all_lambdas(m):
            count += 1
            got = extract_lambda(gen_T(lam)).lam
            if got != lam:
                failures.append({"lambda": str(lam), "got": str(got)})
    return _report("residue", {"n": n}, not failures, sequences=count, failures=failures[:20])


# -- curves ------------------------------------------------------------------------

def _curves(n, exhaustive, samples, seed, n_random):
    """(label, Lambda) pairs: all of length <= n, then ``samples`` random ones of length n_random."""
    if exhaustive:
        for m in range(1, n + 1):
            for lam in all_lambdas(m):
                yield lam
    if samples:
        rng = random.Random(seed)
        for _ in range(samples):
            yield random_lambda(n_random, rng)


def suite_self_avoid(n: int = 8, exhaustive: bool = True, samples: int = 0, seed: int = 0,
                     n_random: int = 12) -> dict:
    collisions = []
    count = 0
    for lam in _curves(n, exhaustive, samples, seed, n_random):
        count += 1
        col = check_self_avoiding(realize(gen_T_array(lam)))
        if col is not None:
            collisions.append({"lambda": str(lam), "index": col.index})
    return _report("self-avoid", {"n": n, "exhaustive": exhaustive, "samples": samples,
                                  "n_random": n_random}, not collisions,
                   seed=seed, curves=count, collisions=collisions[:20])


def delta_failures(lam: Lambda) -> list[str]:
    c = realize(gen_T_array(lam))
    d = delta_curve(c)
    bad = []
    derived = delta_seq(gen_T(lam))
    if d.turns.tolist() != list(derived.signs):
        bad.append("turns")
    if d.vertices.tolist() != c.vertices[::3].tolist():
        bad.append("vertices")
    again = realize(derived.signs, d.origin, d.dir0, d.scale_exp)
    if again.vertices.tolist() != d.vertices.tolist():
        bad.append("realize-commute")
    flat = realize(derived.signs)
    if endpoint_norm(c) != 3 * endpoint_norm(flat):
        bad.append("norm-ratio")
    if endpoint_norm(c) != 3 ** len(lam):
        bad.append("endpoint-norm")
    return bad


def suite_delta(n: int = 8) -> dict:
    failures = []
    count = 0
    for m in range(1, n + 1):
        for lam in all_lambdas(m):
            count += 1
            bad = delta_failures(lam)
            if bad:
                failures.append({"lambda": str(lam), "failed": bad})
    return _report("delta", {"n": n}, not failures, curves=count, failures=failures[:20])


def suite_diameter(n: int = 8, exhaustive: bool = True, samples: int = 0, seed: int = 0,
                   n_random: int = 10) -> dict:
    worst: dict[int, int] = {}
    failures = []
    count = 0
    for lam in _curves(n, exhaustive, samples, seed, n_random):
        count += 1
        d2 = diameter_sq(realize(gen_T_array(lam)))
        m = len(lam)
        worst[m] = max(worst.get(m, 0), d2)
        if not within_rho(d2, m):
            failures.append({"lambda": str(lam), "diameter_sq": d2})
    equality = diameter_sq(realize(gen_T_array((1,)))) == 3 and rho_sq(1) == 3
    bounds = {str(m): {"max_diameter_sq": worst[m], "rho_sq": str(rho_sq(m))} for m in sorted(worst)}
    return _report("diameter", {"n": n, "exhaustive": exhaustive, "samples": samples,
                                "n_random": n_random}, not failures and equality,
                   seed=seed, curves=count, rho1_attained=equality, bounds=bounds,
                   failures=failures[:20])


def suite_coverage(n: int = 3) -> dict:
    """min over Lambda_{2m} of the largest covered triangle, m = 1..n."""
    minima = {}
    for m in range(1, n + 1):
        best = None
        for lam in all_lambdas(2 * m):
            k, _ = max_covered_triangle(set(realize(gen_T_array(lam)).edge_keys()))
            best = k if best is None else min(best, k)
        minima[m] = best
    ok = all(minima[m] >= 2 ** (m - 1) for m in minima)
    ok = ok and minima.get(1) == 1 and (n < 2 or minima[2] >= 3)
    growth = all(minima[m] >= 3 * minima[m - 1] - 3 for m in minima if m > 1)
    return _report("coverage", {"n": n}, ok and growth,
                   minima={str(m): {"min_k": minima[m], "bound": 2 ** (m - 1)} for m in minima},
                   growth_ok=growth)


def suite_frontier(n: int = 7, exhaustive: bool = True, samples: int = 0, seed: int = 0,
                   n_random: int = 9) -> dict:
    failures = []
    count = 0
    for lam in _curves(n, exhaustive, samples, seed, n_random):
        count += 1
        c = realize(gen_T_array(lam))
        rep = frontier_law_report(c, lam)
        try:
            region(c)
            cross = True
        except AssertionError:
            cross = False
        if not rep.ok or not cross:
            failures.append({"lambda": str(lam), "failed": rep.failures[:3], "apex_rule": cross})
    return _report("frontier", {"n": n, "exhaustive": exhaustive, "samples": samples,
                                "n_random": n_random}, not failures,
                   seed=seed, curves=count, failures=failures[:20])


# -- coverings ----------------------------------------------------------------------

def random_chain(n: int, rng: random.Random, spread: int = 3) -> XChain:
    """x_0 random, then x_{k+1} = x_k + theta**k * (small random offset)."""
    from .trilattice import mul, theta_pow
    x = EPoint(rng.randint(-spread, spread), rng.randint(-spread, spread))
    pts = [x]
    for k in range(n):
        off = (rng.randint(-1, 1), rng.randint(-1, 1))
        x = x + mul(theta_pow(k), off)
        pts.append(EPoint(*x))
    return XChain(tuple(pts))


def covering_case(lam: Lambda, chain: XChain, radius: int, orientation: str = E1) -> dict:
    patch = build_patch(lam, chain, orientation, HexWindow(EPoint(0, 0), radius))
    val = validate(patch)
    lat = level_lattices(patch)
    interior = [c for c in patch.curves.values()
                if hexnorm(c.start) <= patch.guaranteed_radius]
    lam_ok = all(extract_lambda(c.turns()).lam == lam for c in interior)
    return {
        "lambda": str(lam), "chain": str(chain), "curves": len(patch.curves),
        "covering_ok": val.covering_ok, "property_P": val.property_P, "parity": val.parity,
        "interior_edges": val.interior_edges, "truncated": val.truncated,
        "lambda_reextracted": lam_ok, "lattices_agree": lat.agree and lat.lambdas_agree,
        "matches_chain": lat.matches_chain,
        "ok": val.covering_ok and val.property_P and lam_ok and lat.agree and lat.lambdas_agree
              and lat.matches_chain,
    }


def suite_covering(n: int = 4, radius: int = 40, samples: int = 10, seed: int = 0) -> dict:
    rng = random.Random(seed)
    cases = []
    for _ in range(samples):
        lam = random_lambda(n, rng)
        chain = random_chain(n, rng)
        cases.append(covering_case(lam, chain, radius))
    return _report("covering", {"n": n, "radius": radius, "samples": samples},
                   all(c["ok"] for c in cases), seed=seed, cases=cases)


def star_and_separated(n: int = 4, radius: int = 40) -> dict:
    """Three curves through a star point with 120-degree symmetry, and the
    centrally symmetric separated covering for alternating fold signs."""
    from .covering import classify
    out = {}
    lam = Lambda(tuple(1 if i % 3 else -1 for i in range(n)))
    base = build_patch(lam, XChain((EPoint(0, 0),) * (n + 1)), E1, HexWindow(EPoint(0, 0), radius))
    for mode in "+-":
        p = star_connect(base, mode)
        through = p.curve_of_vertex(EPoint(0, 0))
        sym = symmetry_check(p)
        out["star" + mode] = {"curves_through_center": len(through), "symmetry": sym.to_dict(),
                              "ok": len(through) == 3 and sym.invariant}
    alt = Lambda(tuple(-(-1) ** i for i in range(max(n, 8))))
    tag = classify(alt, pseq="M" * 8, horizon=8)
    patch, tc = separated_patch(alt.prefix(n), radius)
    sym = symmetry_check(patch, tc)
    val = validate(patch)
    out["separated"] = {"case": tag.kind.value, "symmetry": sym.to_dict(),
                        "covering_ok": val.covering_ok,
                        "ok": tag.kind.value == "ThreeSeparated" and sym.invariant and val.covering_ok}
    ends = curve_ends_alternate(base, EPoint(0, 0))
    shared = shared_frontiers(base, EPoint(0, 0))
    out["around_star_point"] = {"ends_alternate": ends, "shared_frontiers": shared,
                                "ok": ends and all(shared)}
    return out


def suite_liso(n: int = 1, samples: int = 50, seed: int = 0, radius: int | None = None,
               level: int | None = None) -> dict:
    from .analysis import liso_search, lisop_pairs
    level = level or (4 if n == 1 else 6)
    radius = radius or (60 if n == 1 else 200)
    rng = random.Random(seed)
    lam = random_lambda(level, rng)
    win = HexWindow(EPoint(0, 0), radius)
    star_chain = XChain((EPoint(0, 0),) * (level + 1))
    a = build_patch(lam, star_chain, E1, win)
    pseq = "".join(rng.choice("IMS") for _ in range(level))
    b = build_patch(lam, chain_from_pseq(lam, pseq)[0], E1, win)
    sp, sm = star_connect(a, "+"), star_connect(a, "-")
    per = max(1, samples // 3)
    groups = {
        "same-patch": lisop_pairs(a, a, n, per, seed + 1).to_dict(),
        "different-chain": lisop_pairs(a, b, n, per, seed + 2).to_dict(),
        "star-plus-vs-minus": lisop_pairs(sp, sm, n, samples - 2 * per, seed + 3).to_dict(),
    }
    star_pt = liso_search(sp, EPoint(0, 0), sm, EPoint(0, 0), n).to_dict()
    positives = all(g["ok"] for g in groups.values()) and star_pt["witness"] is not None
    flipped = Lambda((-lam[0],) + lam.entries[1:])
    other_lam = build_patch(flipped, star_chain, E1, win)
    other_or = build_patch(lam, star_chain, E2, win)
    neg_lam = lisop_pairs(a, other_lam, n, min(per, 5), seed + 4).to_dict()
    neg_or = lisop_pairs(a, other_or, n, min(per, 5), seed + 5).to_dict()
    negatives = neg_lam["found"] < neg_lam["samples"] and neg_or["found"] == 0
    return _report("liso", {"n": n, "samples": samples, "radius": radius, "level": level},
                   positives and negatives, seed=seed, lambda_=str(lam), pseq=pseq,
                   groups=groups, star_point=star_pt,
                   negative_controls={"different-lambda": neg_lam, "opposite-orientation": neg_or})


def run_suite(name: str, **kw) -> dict:
    fns = {
        "self-avoid": suite_self_avoid, "palindrome": suite_palindrome, "residue": suite_residue,
        "delta": suite_delta, "diameter": suite_diameter, "coverage": suite_coverage,
        "frontier": suite_frontier, "covering": suite_covering, "liso": suite_liso,
    }
    return fns[name](**kw)
