import json
import random

import pytest

from hivering.excavation import (
    ExcavationError,
    GluingError,
    HivePair,
    Octahedron,
    TetLabeling,
    assemble_bottom,
    assemble_top,
    bottom_pairs,
    excavate,
    excavate_labels,
    fill,
    geometry,
    layer_order,
    octahedra,
    octahedron_step,
    on_bottom,
    on_top,
    tet_points,
    top_pairs,
    verify_star,
)
from hivering.hive import BoundarySpec, boundary_of, enumerate_hives, validate_hive


def test_octahedron_step():
    assert octahedron_step(0, 1, 1, 0, 0) == 1
    assert octahedron_step(3, 2, 2, 2, 2) == 1
    assert octahedron_step(5, 1, 3, 4, 0) == 0


def test_tet_point_counts():
    for n in range(5):
        assert len(tet_points(n)) == (n + 1) * (n + 2) * (n + 3) // 6


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_piece_counts_fill_volume(n):
    geo = geometry(n)
    kinds = [p.kind for p in geo.pieces]
    # unit tetrahedron volume 1, octahedron volume 4
    assert kinds.count("up") + kinds.count("down") + 4 * kinds.count("oct") == n**3
    assert len(octahedra(n)) == kinds.count("oct")


def test_octahedron_geometry():
    o = Octahedron((0, 0, 0, 0))
    assert o.top == (1, 1, 0, 0) and o.bottom == (0, 0, 1, 1)
    assert set(o.equator) == {(1, 0, 1, 0), (0, 1, 0, 1), (1, 0, 0, 1), (0, 1, 1, 0)}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_layer_order_is_admissible(n):
    geo = geometry(n)
    removed = set()
    for piece in layer_order(n):
        assert geo.removable(piece, removed)
        removed.add(piece)
    assert removed == set(geo.pieces)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_random_order_is_admissible(n):
    geo = geometry(n)
    order = geo.order(random.Random(n))
    assert sorted(order) == sorted(geo.pieces)


def test_top_and_bottom_surfaces_cover_everything():
    n = 3
    pts = tet_points(n)
    assert all(on_top(p) or on_bottom(p) or min(p) > 0 for p in pts)
    corner_c = (0, 0, n, 0)
    assert on_top(corner_c) and on_bottom(corner_c)


def _pairs(lam, mu, nu, pi):
    return top_pairs(lam, mu, nu, pi)


def test_minimal_example_round_trip():
    lam = mu = nu = (1, 0)
    pi = (2, 1)
    tops = _pairs(lam, mu, nu, pi)
    assert len(tops) == 2
    for h1, h2 in tops:
        bottom = excavate(assemble_top(h1, h2))
        assert validate_hive(bottom.left) and validate_hive(bottom.right)
        b1, b2 = boundary_of(bottom.left), boundary_of(bottom.right)
        assert (b1.lam, b1.mu) == (mu, nu)
        assert (b2.lam, b2.nu) == (lam, pi)
        assert b1.nu == b2.mu == bottom.shared
        back = fill(bottom, lam, mu, nu, pi)
        assert (back.left, back.right) == (h1, h2)


def test_excavation_lands_in_bottom_set_and_is_injective():
    ws = ((2, 1, 0), (1, 0, 0), (1, 1, 0), (3, 2, 1))
    bottoms = {(g1.values, g2.values) for g1, g2 in bottom_pairs(*ws)}
    images = [excavate(assemble_top(h1, h2)).key() for h1, h2 in top_pairs(*ws)]
    assert len(set(images)) == len(images)
    assert set(images) == bottoms


def test_verify_star_counts():
    rep = verify_star((1, 0), (1, 0), (1, 0), (2, 1))
    assert rep.lhs == rep.rhs == 2 and rep.bijection_ok


def test_verify_star_zero():
    rep = verify_star((1, 0), (1, 0), (1, 0), (3, 1))
    assert rep.lhs == rep.rhs == 0 and rep.bijection_ok


def test_order_independence_and_exposed_rhombi():
    rng = random.Random(11)
    ws = ((2, 1, 0), (1, 1, 0), (2, 0, 0), (4, 3, 1))
    for h1, h2 in top_pairs(*ws):
        t = assemble_top(h1, h2)
        ref = excavate(t, check=True)
        for _ in range(3):
            assert excavate(t, rng=rng, check=True) == ref


def test_trace_records_every_piece():
    (h1, h2) = top_pairs((1, 0), (1, 0), (1, 0), (2, 1))[0]
    trace = []
    excavate(assemble_top(h1, h2), trace=trace)
    assert len(trace) == len(geometry(2).pieces)
    octs = [e for e in trace if e["piece"] == "oct"]
    assert len(octs) == 1 and octs[0]["exposed"] == [0, 0, 1, 1]


def test_gluing_mismatch():
    h1 = enumerate_hives(BoundarySpec((1, 0), (1, 0), (2, 0)))[0]
    h2 = enumerate_hives(BoundarySpec((1, 1), (1, 0), (2, 1)))[0]
    with pytest.raises(GluingError):
        assemble_top(h1, h2)


def test_fill_checks_weights():
    (h1, h2) = top_pairs((1, 0), (1, 0), (1, 0), (2, 1))[0]
    bottom = excavate(assemble_top(h1, h2))
    with pytest.raises(GluingError):
        fill(bottom, lam=(0, 0))


def test_assemble_bottom_rejects_mismatch():
    g1 = enumerate_hives(BoundarySpec((1, 0), (1, 0), (2, 0)))[0]
    g2 = enumerate_hives(BoundarySpec((1, 0), (1, 1), (2, 1)))[0]
    with pytest.raises(GluingError):
        assemble_bottom(g1, g2)


def test_missing_top_label():
    (h1, h2) = top_pairs((1, 0), (1, 0), (1, 0), (2, 1))[0]
    t = assemble_top(h1, h2)
    del t.labels[(1, 1, 0, 0)]
    with pytest.raises(ExcavationError):
        excavate(t)


def test_bad_order_rejected():
    (h1, h2) = top_pairs((1, 0), (1, 0), (1, 0), (2, 1))[0]
    t = assemble_top(h1, h2)
    with pytest.raises(ExcavationError):
        excavate(t, order=list(reversed(layer_order(2))))


def test_labeling_json_round_trip():
    (h1, h2) = top_pairs((1, 0), (1, 0), (1, 0), (2, 1))[0]
    t = excavate_labels(assemble_top(h1, h2))
    data = json.loads(json.dumps(t.to_json()))
    assert TetLabeling.from_json(data).labels == t.labels


def test_hive_pair_key():
    h = enumerate_hives(BoundarySpec((1, 0), (1, 0), (2, 0)))[0]
    assert HivePair(h, h, (2, 0)).key() == (h.values, h.values)
