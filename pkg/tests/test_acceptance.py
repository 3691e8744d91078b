"""Acceptance gate. Each test enforces its own wall-clock limit."""
import hashlib
import json
import subprocess
import sys
import time

import pytest

from terdragon import verify as V
from terdragon.foldseq import gen_T
from terdragon.render import figure_three_curves


class Timer:
    def __init__(self, limit):
        self.limit = limit

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0
        return False

    def check(self):
        assert self.elapsed < self.limit, f"took {self.elapsed:.1f} s, limit {self.limit} s"


def _brief(rep):
    return json.dumps({k: v for k, v in rep.items() if k in ("failures", "collisions", "cases")})[:2000]


@pytest.mark.criterion(1, "sequence laws, all Lambda with n <= 8")
def test_sequence_laws():
    with Timer(5) as t:
        rep = V.suite_palindrome(8)
    assert rep["sequences"] == 510
    assert rep["pass"], _brief(rep)
    t.check()


@pytest.mark.criterion(2, "self-avoidance, exhaustive n <= 8 and 200 random at n = 12")
def test_self_avoidance():
    with Timer(60) as t:
        ex = V.suite_self_avoid(8, exhaustive=True)
        rnd = V.suite_self_avoid(12, exhaustive=False, samples=200, seed=2, n_random=12)
    assert ex["curves"] == 510 and rnd["curves"] == 200
    assert ex["pass"] and rnd["pass"], _brief(ex) + _brief(rnd)
    t.check()


@pytest.mark.criterion(3, "derivation commutes with realization, norm ratio 3, n <= 8")
def test_derivation_coherence():
    with Timer(10) as t:
        rep = V.suite_delta(8)
    assert rep["curves"] == 510
    assert rep["pass"], _brief(rep)
    t.check()


@pytest.mark.criterion(4, "diameter bound, exhaustive n <= 8 and random n = 10, equality at n = 1")
def test_diameter():
    with Timer(60) as t:
        ex = V.suite_diameter(8, exhaustive=True)
        rnd = V.suite_diameter(10, exhaustive=False, samples=50, seed=4, n_random=10)
    assert ex["rho1_attained"]
    assert ex["pass"] and rnd["pass"], _brief(ex) + _brief(rnd)
    t.check()


@pytest.mark.criterion(5, "covered triangles of 2n-folding curves, n = 1, 2, 3")
def test_coverage():
    with Timer(120) as t:
        rep = V.suite_coverage(3)
    mins = {int(m): v["min_k"] for m, v in rep["minima"].items()}
    assert mins[1] == 1 and mins[2] >= 3 and mins[3] >= 4
    assert rep["pass"], json.dumps(rep)
    t.check()


@pytest.mark.criterion(6, "frontier laws, exhaustive n <= 7 and random n <= 9")
def test_frontier():
    with Timer(60) as t:
        ex = V.suite_frontier(7, exhaustive=True)
        rnd = [V.suite_frontier(m, exhaustive=False, samples=10, seed=6 + m, n_random=m)
               for m in (8, 9)]
    assert ex["curves"] == 254
    assert ex["pass"] and all(r["pass"] for r in rnd), _brief(ex) + "".join(map(_brief, rnd))
    t.check()


@pytest.mark.criterion(7, "covering validity and (P), N = 4, radius 40, 10 random cases")
def test_covering():
    with Timer(120) as t:
        rep = V.suite_covering(4, 40, 10, seed=7)
    assert len(rep["cases"]) == 10
    for case in rep["cases"]:
        assert case["covering_ok"] and case["property_P"], case
        assert case["lambda_reextracted"] and case["lattices_agree"], case
    assert rep["pass"]
    t.check()


@pytest.mark.criterion(8, "star point with three curves, separated case centrally symmetric")
def test_star_and_separated():
    with Timer(60) as t:
        rep = V.star_and_separated(4, 40)
    for key in ("star+", "star-"):
        assert rep[key]["curves_through_center"] == 3, rep[key]
        assert rep[key]["ok"], rep[key]
    assert rep["separated"]["case"] == "ThreeSeparated"
    assert rep["separated"]["ok"], rep["separated"]
    t.check()


@pytest.mark.criterion(9, "local isomorphism, n = 1 (50 pairs) and n = 2 smoke test")
def test_local_isomorphism():
    with Timer(600) as t:
        one = V.suite_liso(1, samples=50, seed=9)
        two = V.suite_liso(2, samples=5, seed=9, radius=200)
    for rep, n in ((one, 1), (two, 2)):
        assert rep["params"]["n"] == n
        total = sum(g["samples"] for g in rep["groups"].values())
        assert total == (50 if n == 1 else 5)
        for g in rep["groups"].values():
            assert g["found"] == g["samples"], g
            assert g["max_distance"] <= 5 * 3 ** n
        neg = rep["negative_controls"]
        assert neg["opposite-orientation"]["found"] == 0
        assert neg["different-lambda"]["found"] < neg["different-lambda"]["samples"]
        assert rep["pass"]
    assert two["params"]["radius"] == 200
    t.check()


_SNAPSHOT_SCRIPT = """
import json, sys
from terdragon import verify as V
from terdragon.render import figure_three_curves
reps = [V.suite_covering(4, 40, 3, seed=10), V.suite_liso(1, samples=6, seed=10),
        V.suite_self_avoid(6, exhaustive=False, samples=5, seed=10, n_random=6)]
sys.stdout.write(json.dumps(reps, sort_keys=True))
sys.stdout.write(figure_three_curves())
"""


def _digest(env_seed):
    out = subprocess.run([sys.executable, "-c", _SNAPSHOT_SCRIPT], capture_output=True, check=True,
                         env={"PYTHONHASHSEED": env_seed, "PATH": ""}).stdout
    return hashlib.sha256(out).hexdigest()


@pytest.mark.criterion(10, "determinism of reports and SVG snapshots")
def test_determinism():
    with Timer(30) as t:
        first = json.dumps(V.suite_covering(4, 40, 2, seed=3), sort_keys=True)
        again = json.dumps(V.suite_covering(4, 40, 2, seed=3), sort_keys=True)
        svg = figure_three_curves()
        assert svg.startswith("<?xml") and svg.count("<path") >= 3
        assert figure_three_curves() == svg
        assert str(gen_T((1, -1, 1))) == str(gen_T((1, -1, 1)))
        digests = {_digest(s) for s in ("0", "1", "12345")}
    assert first == again
    assert len(digests) == 1
    t.check()
