import json
import xml.etree.ElementTree as ET

import pytest
from hypothesis import given, settings, strategies as st

from hivering.hive import BoundarySpec, Hive, enumerate_hives
from hivering.honeycomb import (
    NE,
    NW,
    S,
    Honeycomb,
    HoneycombEdge,
    HoneycombError,
    boundary_coordinates,
    hive_to_honeycomb,
    render_svg,
    validate_honeycomb,
)


def dominant(n, lo=0, hi=3):
    return st.lists(st.integers(lo, hi), min_size=n, max_size=n).map(lambda xs: tuple(sorted(xs, reverse=True)))


def test_size_one():
    h = Hive.from_labels({(1, 0, 0): 0, (0, 1, 0): 2, (0, 0, 1): 5})
    hc = hive_to_honeycomb(h)
    assert hc.vertices == ((2, 3, -5),)
    assert validate_honeycomb(hc)
    assert boundary_coordinates(hc).weights() == ((2,), (3,), (5,))


def test_tensor_square_honeycombs():
    for h in enumerate_hives(BoundarySpec((2, 1, 0), (2, 1, 0), (3, 2, 1))):
        hc = hive_to_honeycomb(h)
        assert validate_honeycomb(hc)
        assert hc.size == 3
        assert boundary_coordinates(hc).weights() == ((2, 1, 0), (2, 1, 0), (3, 2, 1))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(dominant(n), dominant(n), dominant(n, 0, 4))))
def test_honeycombs_of_random_hives(ws):
    lam, mu, nu = ws
    for h in enumerate_hives(BoundarySpec(lam, mu, nu)):
        hc = hive_to_honeycomb(h)
        verdict = validate_honeycomb(hc)
        assert verdict, verdict.problems
        bd = boundary_coordinates(hc)
        assert len(bd.nw) == len(bd.ne) == len(bd.s) == len(lam)
        assert bd.weights() == (lam, mu, nu)


def test_json_round_trip():
    h = enumerate_hives(BoundarySpec((2, 1, 0), (2, 1, 0), (3, 2, 1)))[0]
    hc = hive_to_honeycomb(h)
    data = json.loads(json.dumps(hc.to_json()))
    assert Honeycomb.from_json(data) == Honeycomb(hc.vertices, hc.edges)


def test_invalid_hive_rejected():
    bad = Hive.from_labels({(2, 0, 0): 0, (1, 1, 0): 1, (0, 2, 0): 1, (0, 1, 1): 2, (0, 0, 2): 2, (1, 0, 1): 0})
    with pytest.raises(HoneycombError):
        hive_to_honeycomb(bad)


def test_validate_catches_tension():
    hc = Honeycomb(((0, 0, 0),), (HoneycombEdge(0, None, NW, 1, 0), HoneycombEdge(0, None, NE, 2, 0), HoneycombEdge(0, None, S, 1, 0)))
    verdict = validate_honeycomb(hc)
    assert not verdict
    assert any("tension" in p for p in verdict.problems)


def test_validate_catches_off_plane_and_bad_direction():
    hc = Honeycomb(((1, 0, 0),), (HoneycombEdge(0, None, (1, 1, -2), 1, 0),))
    problems = validate_honeycomb(hc).problems
    assert any("plane" in p for p in problems)
    assert any("coordinate direction" in p for p in problems)


def test_svg_is_deterministic_xml():
    h = enumerate_hives(BoundarySpec((2, 1, 0), (2, 1, 0), (3, 2, 1)))[1]
    hc = hive_to_honeycomb(h)
    svg = render_svg(hc)
    assert svg == render_svg(hc)
    root = ET.fromstring(svg)
    ns = "{http://www.w3.org/2000/svg}"
    assert len(root.findall(f".//{ns}line")) == len(hc.edges)


def test_svg_multiplicity_labels():
    h = Hive.from_function(2, lambda p: 0)
    hc = hive_to_honeycomb(h)
    assert any(e.mult == 2 for e in hc.edges)
    assert "<text" in render_svg(hc)
