"""Honeycombs dual to hives.

Points live in the plane B = {(a, b, c): a + b + c = 0}.  The coordinate
directions are NW = (0, 1, -1), NE = (-1, 0, 1) and S = (1, -1, 0); along
each of them one coordinate (a, b and c respectively) stays constant.

Each unit edge of the hive gets the constant coordinate "label
counterclockwise of the extra vertex minus label clockwise of it", the extra
vertex being the third corner of the upward triangle on that edge.  With
this rule the Northwest rays carry lam and the Northeast rays carry mu,
while the South rays carry -nu.  Every vertex is a point of B, so the three
constants at a vertex sum to zero.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from xml.sax.saxutils import escape

from .hive import Hive, HiveError, TriPoint, Weight, validate_hive

Point = tuple[int, int, int]

NW: Point = (0, 1, -1)
NE: Point = (-1, 0, 1)
S: Point = (1, -1, 0)
DIRECTIONS = {"NW": NW, "NE": NE, "S": S}
_CONST_AXIS = {NW: 0, NE: 1, S: 2}


class HoneycombError(ValueError):
    pass


@dataclass(frozen=True)
class HoneycombEdge:
    start: int
    end: int | None  # None for an unbounded ray
    direction: Point  # unit vector from start towards end (or along the ray)
    mult: int
    const: int

    @property
    def is_ray(self) -> bool:
        return self.end is None


@dataclass(frozen=True)
class Honeycomb:
    vertices: tuple[Point, ...]
    edges: tuple[HoneycombEdge, ...]
    degenerate_edges: int = 0  # zero-length hive-dual edges absorbed into vertices

    @property
    def size(self) -> int:
        return sum(e.mult for e in self.edges if e.is_ray and e.direction == S)

    def to_json(self) -> dict:
        names = {v: k for k, v in DIRECTIONS.items()}
        edges = []
        for e in self.edges:
            entry = {"from": e.start}
            if e.is_ray:
                entry["ray"] = names.get(e.direction, list(e.direction))
            else:
                entry["to"] = e.end
            entry.update(mult=e.mult, const=e.const)
            edges.append(entry)
        return {"vertices": [list(v) for v in self.vertices], "edges": edges}

    @classmethod
    def from_json(cls, data) -> "Honeycomb":
        vertices = tuple(tuple(v) for v in data["vertices"])
        edges = []
        for e in data["edges"]:
            start = e["from"]
            if "ray" in e:
                ray = e["ray"]
                d = DIRECTIONS[ray] if isinstance(ray, str) else tuple(ray)
                edges.append(HoneycombEdge(start, None, d, e["mult"], e["const"]))
            else:
                end = e["to"]
                diff = tuple(q - p for p, q in zip(vertices[start], vertices[end]))
                g = max(abs(c) for c in diff) or 1
                edges.append(HoneycombEdge(start, end, tuple(c // g for c in diff), e["mult"], e["const"]))
        return cls(vertices, tuple(edges))


def edge_constants(h: Hive) -> dict[frozenset, int]:
    """Constant coordinate of the dual of every unit edge of the hive."""
    out = {}
    n = h.n
    for x in range(n):
        for y in range(n - x):
            z = n - 1 - x - y
            ll, top, lr = (x + 1, y, z), (x, y + 1, z), (x, y, z + 1)
            out[frozenset((ll, top))] = h[top] - h[ll]
            out[frozenset((top, lr))] = h[lr] - h[top]
            out[frozenset((ll, lr))] = h[ll] - h[lr]
    return out


def _up_triangles(n):
    for x in range(n):
        for y in range(n - x):
            z = n - 1 - x - y
            yield (x + 1, y, z), (x, y + 1, z), (x, y, z + 1)


def _down_triangles(n):
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            z = n + 1 - x - y
            if z >= 1:
                # top-left, top-right, bottom
                yield (x, y, z - 1), (x - 1, y, z), (x, y - 1, z)


def hive_to_honeycomb(h: Hive) -> Honeycomb:
    """The honeycomb dual to a valid hive; coinciding vertices are merged."""
    if not validate_hive(h):
        raise HoneycombError("hive_to_honeycomb needs a valid hive")
    n = h.n
    const = edge_constants(h)
    up_pos: dict[tuple, Point] = {}
    for ll, top, lr in _up_triangles(n):
        up_pos[(ll, top, lr)] = (
            const[frozenset((ll, top))],
            const[frozenset((top, lr))],
            const[frozenset((ll, lr))],
        )
    down_pos: dict[tuple, Point] = {}
    for tl, tr, bot in _down_triangles(n):
        # its left side is NE-parallel, right side NW-parallel, top side S-parallel
        p = (const[frozenset((tr, bot))], const[frozenset((tl, bot))], const[frozenset((tl, tr))])
        if sum(p) != 0:
            raise AssertionError(f"dual vertex {p} is off the plane")
        down_pos[(tl, tr, bot)] = p

    # dual of an edge shared by an up and a down triangle, keyed by the edge
    owner_down: dict[frozenset, Point] = {}
    for tri, p in down_pos.items():
        a, b, c = tri
        for e in (frozenset((a, b)), frozenset((b, c)), frozenset((a, c))):
            owner_down[e] = p

    index: dict[Point, int] = {}

    def vid(p: Point) -> int:
        if p not in index:
            index[p] = len(index)
        return index[p]

    mult: Counter = Counter()
    degenerate = 0
    for (ll, top, lr), pu in up_pos.items():
        vid(pu)
        for pair, direction in (((ll, top), NW), ((top, lr), NE), ((ll, lr), S)):
            e = frozenset(pair)
            c = const[e]
            if e not in owner_down:
                mult[(pu, None, direction, c)] += 1
                continue
            pd = owner_down[e]
            vid(pd)
            t = _along(pu, pd, direction)
            if t < 0:
                raise AssertionError("negative edge length in a valid hive")
            if t == 0:
                degenerate += 1
                continue
            mult[(pu, pd, direction, c)] += 1
    vertices = tuple(sorted(index))
    new_index = {p: i for i, p in enumerate(vertices)}
    edges = tuple(
        HoneycombEdge(new_index[a], None if b is None else new_index[b], d, m, c)
        for (a, b, d, c), m in sorted(mult.items(), key=lambda kv: _edge_sort_key(kv[0]))
    )
    return Honeycomb(vertices, edges, degenerate)


def _edge_sort_key(key):
    a, b, d, c = key
    return (a, b is None, b or (0, 0, 0), d, c)


def _along(p: Point, q: Point, d: Point) -> int:
    """t with q - p == t * d; raises if q - p is not parallel to d."""
    diff = tuple(b - a for a, b in zip(p, q))
    k = next(i for i in range(3) if d[i])
    t = diff[k] // d[k]
    if tuple(t * x for x in d) != diff:
        raise AssertionError(f"{p} -> {q} is not along {d}")
    return t


@dataclass(frozen=True)
class HoneycombVerdict:
    valid: bool
    problems: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.valid


def validate_honeycomb(hc: Honeycomb) -> HoneycombVerdict:
    problems = []
    for i, v in enumerate(hc.vertices):
        if sum(v) != 0:
            problems.append(f"vertex {i} = {v} is not in the plane a + b + c = 0")
    pull = {i: [0, 0, 0] for i in range(len(hc.vertices))}
    rays = Counter()
    for k, e in enumerate(hc.edges):
        if e.mult < 1:
            problems.append(f"edge {k} has multiplicity {e.mult}")
        if e.direction not in _CONST_AXIS:
            kind = "ray" if e.is_ray else "edge"
            problems.append(f"{kind} {k} points along {e.direction}, not a coordinate direction")
            continue
        axis = _CONST_AXIS[e.direction]
        start = hc.vertices[e.start]
        if start[axis] != e.const:
            problems.append(f"edge {k} constant {e.const} does not match its start {start}")
        for c in range(3):
            pull[e.start][c] += e.mult * e.direction[c]
        if e.is_ray:
            rays[e.direction] += e.mult
            continue
        end = hc.vertices[e.end]
        diff = tuple(b - a for a, b in zip(start, end))
        k_ = next(i for i in range(3) if e.direction[i])
        t = diff[k_] // e.direction[k_]
        if t <= 0 or tuple(t * d for d in e.direction) != diff:
            problems.append(f"edge {k} from {start} to {end} does not run along {e.direction}")
        for c in range(3):
            pull[e.end][c] -= e.mult * e.direction[c]
    for i, p in pull.items():
        if any(p):
            problems.append(f"nonzero tension {tuple(p)} at vertex {i}")
    counts = {rays[NW], rays[NE], rays[S]}
    if len(counts) != 1:
        problems.append(f"ray counts differ: NW {rays[NW]}, NE {rays[NE]}, S {rays[S]}")
    return HoneycombVerdict(not problems, tuple(problems))


@dataclass(frozen=True)
class HoneycombBoundary:
    nw: tuple[int, ...]
    ne: tuple[int, ...]
    s: tuple[int, ...]

    def weights(self) -> tuple[Weight, Weight, Weight]:
        """(lam, mu, nu) with the South constants negated."""
        return self.nw, self.ne, tuple(sorted((-c for c in self.s), reverse=True))


def boundary_coordinates(hc: Honeycomb) -> HoneycombBoundary:
    """Constant coordinates of the rays in each direction, largest first."""
    out = {NW: [], NE: [], S: []}
    for e in hc.edges:
        if e.is_ray and e.direction in out:
            out[e.direction].extend([e.const] * e.mult)
    nw, ne, s = (tuple(sorted(out[d], reverse=True)) for d in (NW, NE, S))
    if not len(nw) == len(ne) == len(s):
        raise HoneycombError("ray counts differ between directions")
    return HoneycombBoundary(nw, ne, s)


# ---------------------------------------------------------------------------
# SVG
# ---------------------------------------------------------------------------


def _planar(p) -> tuple[float, float]:
    a, b, _ = p
    return (-math.sqrt(3) / 2 * (a + b), (b - a) / 2)


def render_svg(hc: Honeycomb, scale: float = 40.0, ray_length: float = 1.5, margin: float = 20.0) -> str:
    """Draw the honeycomb: one line per edge, multiplicities >= 2 written beside it."""
    segs = []
    for e in hc.edges:
        x0, y0 = _planar(hc.vertices[e.start])
        if e.is_ray:
            dx, dy = _planar(e.direction)
            x1, y1 = x0 + ray_length * dx, y0 + ray_length * dy
        else:
            x1, y1 = _planar(hc.vertices[e.end])
        segs.append(((x0, -y0), (x1, -y1), e.mult))
    xs = [c for (a, b, _) in segs for c in (a[0], b[0])] or [0.0]
    ys = [c for (a, b, _) in segs for c in (a[1], b[1])] or [0.0]
    minx, miny = min(xs), min(ys)
    width = (max(xs) - minx) * scale + 2 * margin
    height = (max(ys) - miny) * scale + 2 * margin

    def tr(pt):
        return (margin + (pt[0] - minx) * scale, margin + (pt[1] - miny) * scale)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.2f}" height="{height:.2f}">',
        '<g stroke="black" stroke-width="2" fill="none">',
    ]
    labels = []
    for a, b, m in segs:
        (x0, y0), (x1, y1) = tr(a), tr(b)
        lines.append(f'<line x1="{x0:.2f}" y1="{y0:.2f}" x2="{x1:.2f}" y2="{y1:.2f}"/>')
        if m >= 2:
            labels.append(
                f'<text x="{(x0 + x1) / 2 + 4:.2f}" y="{(y0 + y1) / 2 - 4:.2f}" '
                f'font-size="12" font-family="sans-serif">{escape(str(m))}</text>'
            )
    lines.append("</g>")
    lines.extend(labels)
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
