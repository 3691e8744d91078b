import itertools

import pytest

from terdragon.foldseq import gen_T_array
from terdragon.frontier import (TooShort, cor27_scan, curve_thirds, decompose, frontier_edges,
                                frontier_parts, inside_outside_violations, frontier_law_report,
                                region, split_LR)
from terdragon.tcurve import realize
from terdragon.trilattice import edge_key, step


def curves(n_max):
    for n in range(1, n_max + 1):
        for lam in itertools.product((1, -1), repeat=n):
            yield lam, realize(gen_T_array(lam))


def triangle_count_oracle(c):
    """Sides between curve vertices lying on exactly one fully-visited triangle."""
    vs = c.vertex_set()
    out = set()
    for p in vs:
        for d in range(3):
            q = step(p, d)
            if q not in vs:
                continue
            full = sum(1 for apex in (step(p, d + 1), step(p, d - 1)) if apex in vs)
            if full == 1:
                out.add(edge_key(p, d))
    return out


def test_one_fold_frontiers():
    L, R = split_LR(realize(gen_T_array((1,))))
    assert L.vertices == [(0, 0), (0, 1), (1, 1)] and L.angles == [-1]
    assert R.vertices == [(0, 0), (1, 0), (1, 1)] and R.angles == [1]


def test_apex_rule_matches_oracle_and_region():
    for lam, c in curves(6):
        edges = frontier_edges(c)
        assert edges == triangle_count_oracle(c)
        reg = region(c)          # raises if the traced boundary disagrees
        L, R = split_LR(c)
        assert L.edges() | R.edges() == edges
        assert len(reg.boundary) == len(L) + len(R) + 1


def test_frontier_laws_exhaustive():
    for lam, c in curves(6):
        rep = frontier_law_report(c, lam)
        assert rep.ok, (lam, rep.failures)


def test_curve_uses_exactly_inside_sides():
    for lam, c in curves(5):
        assert inside_outside_violations(c) == []


def test_parts_meet_at_split_points():
    for lam, c in curves(5):
        parts = frontier_parts(c, lam)
        dec = decompose(c, lam)
        assert parts["LI"][-1] == parts["LS"][0] == dec["L"].vertices[dec["split_L"]]
        assert parts["RI"][-1] == parts["RS"][0]
        assert len(parts["LI"]) - 1 == 2 ** (len(lam) - 1)


def test_thirds_tile_the_curve():
    c = realize(gen_T_array((1, -1, 1)))
    a, b, d = curve_thirds(c)
    assert a.start == c.start and d.end == c.end
    assert a.end == b.start and b.end == d.start
    assert len(a) + len(b) + len(d) == len(c)


def test_w_point_residues_on_frontier():
    for lam, c in curves(6):
        L, R = split_LR(c)
        for path in (L, R):
            scan = cor27_scan(path, len(lam) - 1)
            assert scan.ok, (lam, path.side, scan.failed_levels)


def test_too_short():
    with pytest.raises(TooShort):
        frontier_edges(realize((1,)))
