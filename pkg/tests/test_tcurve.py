import cmath
import itertools
import json
import math

import pytest
from hypothesis import given, settings, strategies as st

from terdragon.foldseq import Lambda, delta_seq, gen_T, gen_T_array
from terdragon.tcurve import (BadLength, TCurve, ZSqrt3, check_self_avoiding, delta_curve,
                              diameter_sq, endpoint_norm, max_covered_triangle, realize, rho,
                              rho_sq, single_segment, triangle_edges, within_rho)
from terdragon.trilattice import norm

W = cmath.exp(1j * math.pi / 3)
turn_lists = st.lists(st.sampled_from((1, -1)), max_size=40)


def turtle(turns, d=0):
    """Complex-number turtle: an independent vertex oracle."""
    z, heading = 0j, W ** d
    pts = [z]
    z += heading
    pts.append(z)
    for t in turns:
        heading *= W ** (2 * t)
        z += heading
        pts.append(z)
    return pts


def to_complex(p):
    return p[0] + p[1] * W


@given(turn_lists, st.integers(0, 5))
def test_realize_matches_turtle(turns, d):
    c = realize(turns, (0, 0), d)
    for p, z in zip(c.vertex_list(), turtle(turns, d)):
        assert abs(to_complex(p) - z) < 1e-6


def test_small_curves():
    assert realize(gen_T("+")).vertex_list() == [(0, 0), (1, 0), (0, 1), (1, 1)]
    s = single_segment()
    assert s.vertex_list() == [(0, 0), (1, 0)] and len(s) == 1


def test_json_round_trip():
    c = realize("+--+", (2, -1), 3, 1)
    back = TCurve.from_json(c.to_json())
    assert back.vertices.tolist() == c.vertices.tolist()
    assert json.loads(c.to_json())["turns"] == "+--+"


def naive_self_avoid(c):
    seen = set()
    for i, (p, q) in enumerate(zip(c.vertex_list(), c.vertex_list()[1:])):
        e = frozenset((p, q))
        if e in seen:
            return i
        seen.add(e)
    return None


@given(turn_lists)
def test_self_avoid_matches_naive(turns):
    c = realize(turns)
    col = check_self_avoiding(c)
    naive = naive_self_avoid(c)
    assert (col is None) == (naive is None)
    if col is not None:
        assert col.index == naive


def test_collision_report():
    col = check_self_avoiding(realize((1, 1, 1, 1)))
    assert col.index == 3 and col.first == 0
    assert set(col.edge) == {(0, 0), (1, 0)}
    assert check_self_avoiding(realize(())) is None


def test_folding_curves_self_avoid_small():
    for n in range(1, 7):
        for t in itertools.product((1, -1), repeat=n):
            assert check_self_avoiding(realize(gen_T_array(t))) is None


def test_endpoint_norm():
    for n in range(1, 7):
        for t in itertools.product((1, -1), repeat=n):
            assert endpoint_norm(realize(gen_T_array(t))) == 3 ** n


def test_delta_examples():
    d = delta_curve(realize(gen_T("+")))
    assert d.vertex_list() == [(0, 0), (1, 1)] and d.scale_exp == 1
    d2 = delta_curve(realize(gen_T("+-")))
    assert d2.turns.tolist() == list(gen_T("-").signs) and d2.scale_exp == 1
    dd = delta_curve(d2)
    assert norm(dd.end - dd.start) == 9
    with pytest.raises(BadLength):
        delta_curve(realize((1, -1, 1)))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.sampled_from((1, -1)), min_size=1, max_size=6), st.integers(0, 5))
def test_delta_commutes_with_realize(lam, d):
    c = realize(gen_T_array(lam), (0, 0), d)
    dc = delta_curve(c)
    derived = delta_seq(gen_T(Lambda(tuple(lam))))
    again = realize(derived.signs, dc.origin, dc.dir0, dc.scale_exp)
    assert again.vertices.tolist() == c.vertices[::3].tolist()


def brute_diameter(points):
    pts = list(points)
    return max(norm((p[0] - q[0], p[1] - q[1])) for p in pts for q in pts)


@given(turn_lists)
def test_diameter_matches_brute_force(turns):
    c = realize(turns)
    assert diameter_sq(c) == brute_diameter(c.vertex_list())


def test_diameter_values():
    assert diameter_sq(realize(gen_T("+"))) == 3
    assert diameter_sq(single_segment()) == 1


def test_rho_exact():
    assert rho(1) == ZSqrt3(0, 1)
    assert rho(2) == ZSqrt3(4, 0)
    assert rho_sq(1) == ZSqrt3(3, 0)
    for n in range(1, 9):
        # closed form [(sqrt3)^(n-1) (4 - sqrt3) - 1] / (sqrt3 - 1)
        s3 = math.sqrt(3)
        closed = (s3 ** (n - 1) * (4 - s3) - 1) / (s3 - 1)
        assert abs(float(rho(n)) - closed) < 1e-9 * closed
    assert within_rho(3, 1) and not within_rho(4, 1)


def brute_triangle(edges):
    """Largest k with some k-triangle covered, by trying every placement."""
    if not edges:
        return 0
    xs = [e.a for e in edges]
    ys = [e.b for e in edges]
    best = 0
    for k in range(1, 12):
        found = False
        for a in range(min(xs) - k, max(xs) + 2):
            for b in range(min(ys) - k, max(ys) + 2):
                for o in ("up", "down"):
                    if triangle_edges((a, b), k, o) <= edges:
                        found = True
        if found:
            best = k
        else:
            break
    return best


def test_max_triangle_matches_brute_force():
    for n in (2, 3, 4):
        for t in itertools.product((1, -1), repeat=n):
            edges = set(realize(gen_T_array(t)).edge_keys())
            assert max_covered_triangle(edges)[0] == brute_triangle(edges)


def test_max_triangle_examples():
    for t in itertools.product((1, -1), repeat=2):
        assert max_covered_triangle(set(realize(gen_T_array(t)).edge_keys()))[0] == 1
    for t in itertools.product((1, -1), repeat=4):
        assert max_covered_triangle(set(realize(gen_T_array(t)).edge_keys()))[0] >= 3
    assert max_covered_triangle(set(single_segment().edge_keys()))[0] == 0
    k, (corner, orient) = max_covered_triangle(triangle_edges((2, 3), 2, "down"))
    assert (k, tuple(corner), orient) == (2, (2, 3), "down")
