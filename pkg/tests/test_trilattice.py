import cmath
import math

import pytest
from hypothesis import given, strategies as st

from terdragon.trilattice import (E1, E2, UNIT, EPoint, HexWindow, THETA, THETA_BAR, apexes,
                                  div_theta, divisible_by_theta, edge_key, edge_points,
                                  hex_edges, hex_points, hex_ring, hexnorm, in_frame, mul, norm,
                                  orient_E, spiral, step, theta_pow, theta_valuation, w_contains)

W = cmath.exp(1j * math.pi / 3)
ints = st.integers(-50, 50)
points = st.tuples(ints, ints)


def as_complex(p):
    return p[0] + p[1] * W


@given(points, points)
def test_product_matches_complex_arithmetic(p, q):
    r = mul(p, q)
    assert abs(as_complex(r) - as_complex(p) * as_complex(q)) < 1e-6


@given(points)
def test_norm_is_squared_modulus(p):
    assert abs(norm(p) - abs(as_complex(p)) ** 2) < 1e-6


def test_units_are_sixth_roots_in_order():
    for d, u in enumerate(UNIT):
        assert abs(as_complex(u) - W ** d) < 1e-12


def test_theta_identities():
    assert mul(THETA, THETA_BAR) == (3, 0)
    assert theta_pow(2) == (0, 3)                 # 3w
    assert mul(THETA, UNIT[5]) == THETA_BAR


@given(points)
def test_theta_divisibility_against_complex_division(p):
    z = as_complex(p) / as_complex(THETA)
    # z is in Z[w] iff its coordinates over {1, w} are integers
    b = z.imag / math.sin(math.pi / 3)
    a = z.real - b / 2
    integral = abs(a - round(a)) < 1e-9 and abs(b - round(b)) < 1e-9
    assert divisible_by_theta(p) == integral
    if integral:
        assert div_theta(p) == (round(a), round(b))


@given(points, points, st.integers(0, 6))
def test_in_frame_matches_valuation(base, z, level):
    diff = (z[0] - base[0], z[1] - base[1])
    assert in_frame(base, level, z) == (theta_valuation(diff) >= level)


def test_w_sets():
    assert w_contains((0, 0), 1, (1, 0))
    assert not w_contains((0, 0), 1, (1, 1))
    with pytest.raises(ValueError):
        w_contains((0, 0), 0, (0, 0))


def test_edge_key_is_orientation_free():
    for d in range(6):
        p = EPoint(3, -2)
        assert edge_key(p, d) == edge_key(step(p, d), d + 3)
        a, b = edge_points(edge_key(p, d))
        assert {a, b} == {p, step(p, d)}


def test_orientation_fields():
    for e in hex_edges(HexWindow(EPoint(0, 0), 3)):
        s1, d1 = orient_E(e, E1)
        s2, d2 = orient_E(e, E2)
        assert d1 % 2 == 0 and d2 % 2 == 1
        assert step(s1, d1) == s2 and step(s2, d2) == s1


def test_apexes_left_then_right():
    left, right = apexes((0, 0), 0)
    assert left == (0, 1) and right == (1, -1)


def test_window_counts():
    for r in range(5):
        w = HexWindow(EPoint(2, 1), r)
        assert len(list(hex_points(w))) == 3 * r * r + 3 * r + 1
        assert len(list(hex_edges(w))) == 9 * r * r + 3 * r
        assert all(hexnorm((p[0] - 2, p[1] - 1)) <= r for p in hex_points(w))


def test_rings_and_spiral():
    assert hex_ring((0, 0), 0) == [(0, 0)]
    assert len(hex_ring((0, 0), 4)) == 24
    assert hex_ring((0, 0), 2) == sorted(hex_ring((0, 0), 2))
    pts = list(spiral((1, 1), 3))
    assert pts[0] == (1, 1) and len(pts) == len(set(pts)) == 37
