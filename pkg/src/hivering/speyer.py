"""Matching formula for the bottom labels of an excavated tetrahedron.

The scatter graph G is the planar dual of the triangulated upper surface
with the unit edges along AB contracted.  Its vertices are the unit
triangles of faces ABC and ABD, except that the two triangles on either side
of an AB unit edge are merged into one 4-valent vertex.  Its edges are the
remaining unit edges, and its faces are the upper-surface points:

* interior points of AB give rhombi (4 edges),
* interior points of ABC and ABD give hexagons (6 edges),
* points on the outline of the square give open, unbounded faces.

For a bottom label b, G_b is spanned by the faces whose points must be dug
out before b is exposed, together with the faces adjoining them.  Summing
the matching monomials over the perfect matchings of G_b reproduces the
octahedron recurrence.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .excavation import (
    Octahedron,
    TetPoint,
    geometry,
    octahedron_below,
    on_top,
    tet_points,
)
from .laurent import LaurentPolynomial, TropicalForm, tropicalize

RHOMBUS, HEXAGON, EXTERIOR = "rhombus", "hexagon", "exterior"

# letter names for the n = 4 example: F is the hexagon whose octahedron sits
# over T' and E', the bottoms of the octahedra under the rhombi T and E
SPEYER_LETTERS_N4: dict[TetPoint, str] = {
    (3, 1, 0, 0): "T",
    (2, 2, 0, 0): "E",
    (2, 1, 0, 1): "F",
    (2, 1, 1, 0): "Γ",
    (3, 0, 1, 0): "Λ",
    (3, 0, 0, 1): "G",
    (1, 2, 1, 0): "Φ",
    (1, 2, 0, 1): "D",
    (1, 1, 0, 2): "L",
    (2, 0, 0, 2): "Q",
}

ENTRY_BELOW_F: TetPoint = (1, 0, 1, 2)


def speyer_name(v) -> str:
    from .laurent import default_name

    return SPEYER_LETTERS_N4.get(v, default_name(v))


def _on_ab(p: TetPoint) -> bool:
    return p[2] == 0 and p[3] == 0


def face_kind(p: TetPoint) -> str:
    if p[0] == 0 or p[1] == 0:
        return EXTERIOR
    return RHOMBUS if _on_ab(p) else HEXAGON


@dataclass(frozen=True)
class ScatterGraph:
    n: int
    faces: dict  # TetPoint -> kind
    vertices: frozenset
    edges: dict  # frozenset {u, v} of upper-surface points -> tuple of 1 or 2 vertices (1 = ray)

    def face_edges(self, p: TetPoint) -> list[frozenset]:
        return [e for e in self.edges if p in e]

    def census(self) -> dict[str, int]:
        out = {RHOMBUS: 0, HEXAGON: 0, EXTERIOR: 0}
        for kind in self.faces.values():
            out[kind] += 1
        return out


@lru_cache(maxsize=None)
def build_scatter_graph(n: int) -> ScatterGraph:
    if n < 2:
        raise ValueError("the scatter graph needs n >= 2")
    triangles = [f for f, (upper, _) in geometry(n).face_sides.items() if upper is None]

    def vertex_of(tri):
        ab = [p for p in tri if _on_ab(p)]
        return ("merged", frozenset(ab)) if len(ab) == 2 else ("tri", tri)

    incident: dict[frozenset, list] = {}
    for tri in triangles:
        pts = sorted(tri)
        for i in range(3):
            for j in range(i + 1, 3):
                edge = frozenset((pts[i], pts[j]))
                if all(_on_ab(p) for p in edge):
                    continue
                incident.setdefault(edge, []).append(vertex_of(tri))
    edges = {e: tuple(vs) for e, vs in incident.items()}
    vertices = frozenset(v for vs in edges.values() for v in vs)
    faces = {p: face_kind(p) for p in tet_points(n) if on_top(p)}
    return ScatterGraph(n, faces, vertices, edges)


def excavation_cone(b: TetPoint) -> set[Octahedron]:
    """Octahedra whose removal is needed before ``b`` is exposed."""
    cone: set[Octahedron] = set()
    stack = [b]
    while stack:
        p = stack.pop()
        if on_top(p):
            continue
        o = octahedron_below(p)
        if o in cone:
            continue
        cone.add(o)
        stack.extend((o.top,) + o.equator)
    return cone


@dataclass(frozen=True)
class EntrySubgraph:
    parent: ScatterGraph
    target: TetPoint
    interior: frozenset  # faces dug out to reach the target
    open_faces: frozenset
    vertices: frozenset
    edges: tuple  # sorted edge keys

    @property
    def is_empty(self) -> bool:
        return not self.interior

    @property
    def faces(self) -> frozenset:
        return self.interior | self.open_faces


def entry_subgraph(g: ScatterGraph, b: TetPoint) -> EntrySubgraph:
    """G_b.  For a label already on the upper surface this is empty."""
    interior = frozenset(o.top for o in excavation_cone(b) if on_top(o.top))
    edges = sorted({e for p in interior for e in g.face_edges(p)}, key=sorted)
    for e in edges:
        if len(g.edges[e]) != 2:
            raise AssertionError(f"G_b for {b} contains the ray dual to {sorted(e)}")
    vertices = frozenset(v for e in edges for v in g.edges[e])
    open_faces = frozenset(p for e in edges for p in e) - interior
    return EntrySubgraph(g, b, interior, open_faces, vertices, tuple(edges))


def enumerate_matchings(s: EntrySubgraph) -> list[frozenset]:
    """Every perfect matching of G_b, as a set of edge keys."""
    ends = {e: s.parent.edges[e] for e in s.edges}
    at: dict = {v: [] for v in s.vertices}
    for e, (u, v) in ends.items():
        at[u].append(e)
        at[v].append(e)
    order = sorted(s.vertices, key=repr)
    out = []
    used: set = set()
    chosen: list = []

    def rec():
        free = next((v for v in order if v not in used), None)
        if free is None:
            out.append(frozenset(chosen))
            return
        for e in at[free]:
            u, v = ends[e]
            other = v if u == free else u
            if other in used or other == free:
                continue
            used.update((u, v))
            chosen.append(e)
            rec()
            chosen.pop()
            used.difference_update((u, v))

    rec()
    return out


def matching_monomial(s: EntrySubgraph, m: frozenset) -> LaurentPolynomial:
    """Product over faces of face^(k - #matched edges on it).

    k is 2 for interior hexagons and 1 for rhombi and open faces.
    """
    exps = {}
    for p in s.faces:
        k = 2 if p in s.interior and s.parent.faces[p] == HEXAGON else 1
        exps[p] = k - sum(1 for e in m if p in e)
    return LaurentPolynomial.monomial(exps)


@dataclass(frozen=True)
class ClosedForm:
    laurent: LaurentPolynomial
    tropical: TropicalForm


def closed_form(g: ScatterGraph, b: TetPoint) -> ClosedForm:
    """The label at ``b`` as a sum over matchings, and its tropical version."""
    if on_top(b):
        poly = LaurentPolynomial.var(b)
    else:
        s = entry_subgraph(g, b)
        poly = LaurentPolynomial()
        for m in enumerate_matchings(s):
            poly = poly + matching_monomial(s, m)
    return ClosedForm(poly, tropicalize(poly))
