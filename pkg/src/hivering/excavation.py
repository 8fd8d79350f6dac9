"""Excavating the size-n tetrahedron with the octahedron rule.

Coordinates: ``tet_n`` is the set of ``(x, y, z, w)`` with nonnegative
entries summing to ``n``.  The corners are A = (n,0,0,0), B = (0,n,0,0),
C = (0,0,n,0), D = (0,0,0,n) and the height of a point is ``x + y``, so the
tetrahedron balances on the bottom edge CD with AB on top.

Seen from above the outline is the square A, C, B, D (clockwise from the
top left).  The upper faces are ABC (w = 0) and ABD (z = 0), the lower faces
BCD (x = 0) and ACD (y = 0).  For weights lam, mu, nu, pi:

* face ABC carries a hive of HIVE(lam, mu; sigma): lower-left A, apex C,
  lower-right B.  Its South side is the top edge AB.
* face ABD carries a hive of HIVE(sigma, nu; pi): lower-left A, apex B,
  lower-right D.
* face BCD carries a hive of HIVE(mu, nu; tau): lower-left C, apex B,
  lower-right D.  Its labels are shifted down by sum(lam), the label at C.
* face ACD carries a hive of HIVE(lam, tau; pi): lower-left A, apex C,
  lower-right D.

Reading AD from D back to A gives the dual of pi, which is why pi* shows up
on the fourth side of the square.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .hive import BoundarySpec, Hive, Weight, as_weight, boundary_of, enumerate_hives, validate_hive
from .ring import candidate_weights

TetPoint = tuple[int, int, int, int]

X, Y, Z, W = range(4)


class GluingError(ValueError):
    """Two hives (or a hive and the tetrahedron) do not share an edge."""


class ExcavationError(RuntimeError):
    pass


def _add(p, *vs) -> TetPoint:
    out = list(p)
    for v in vs:
        out[v] += 1
    return tuple(out)  # type: ignore[return-value]


def tet_points(n: int) -> list[TetPoint]:
    return [
        (x, y, z, n - x - y - z)
        for x in range(n + 1)
        for y in range(n + 1 - x)
        for z in range(n + 1 - x - y)
    ]


def compositions(total: int, parts: int = 4) -> list[tuple[int, ...]]:
    if total < 0:
        return []
    if parts == 1:
        return [(total,)]
    return [(a,) + rest for a in range(total + 1) for rest in compositions(total - a, parts - 1)]


def height(p: TetPoint) -> int:
    return p[X] + p[Y]


def on_top(p: TetPoint) -> bool:
    return p[Z] == 0 or p[W] == 0


def on_bottom(p: TetPoint) -> bool:
    return p[X] == 0 or p[Y] == 0


# ---------------------------------------------------------------------------
# octahedra and the rule
# ---------------------------------------------------------------------------


def octahedron_step(e: int, a: int, b: int, c: int, d: int) -> int:
    """e' = max(a + c, b + d) - e; symmetric in e and e'."""
    return max(a + c, b + d) - e


@dataclass(frozen=True)
class Octahedron:
    """The octahedron at ``base`` (coordinates summing to n - 2).

    ``top`` is the unique highest vertex, ``bottom`` the lowest; the
    equatorial square has opposite pairs (a, c) and (b, d).
    """

    base: tuple[int, ...]

    @property
    def top(self) -> TetPoint:
        return _add(self.base, X, Y)

    @property
    def bottom(self) -> TetPoint:
        return _add(self.base, Z, W)

    @property
    def a(self) -> TetPoint:
        return _add(self.base, X, Z)

    @property
    def c(self) -> TetPoint:
        return _add(self.base, Y, W)

    @property
    def b(self) -> TetPoint:
        return _add(self.base, X, W)

    @property
    def d(self) -> TetPoint:
        return _add(self.base, Y, Z)

    @property
    def equator(self) -> tuple[TetPoint, TetPoint, TetPoint, TetPoint]:
        return self.a, self.b, self.c, self.d

    @property
    def vertices(self) -> tuple[TetPoint, ...]:
        return (self.top,) + self.equator + (self.bottom,)


def octahedra(n: int) -> list[Octahedron]:
    return [Octahedron(b) for b in compositions(n - 2)]


def octahedron_below(p: TetPoint) -> Octahedron:
    """The octahedron whose bottom vertex is ``p`` (needs z, w >= 1)."""
    x, y, z, w = p
    return Octahedron((x, y, z - 1, w - 1))


def octahedron_above(p: TetPoint) -> Octahedron:
    """The octahedron whose top vertex is ``p`` (needs x, y >= 1)."""
    x, y, z, w = p
    return Octahedron((x - 1, y - 1, z, w))


# ---------------------------------------------------------------------------
# pieces and the removal order
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Piece:
    """A unit tetrahedron ("up"), upside-down tetrahedron ("down") or octahedron ("oct")."""

    kind: str
    base: tuple[int, ...]

    @property
    def vertices(self) -> tuple[TetPoint, ...]:
        if self.kind == "up":
            return tuple(_add(self.base, i) for i in range(4))
        if self.kind == "oct":
            return Octahedron(self.base).vertices
        full = tuple(v + 1 for v in self.base)
        return tuple(tuple(v - (k == i) for k, v in enumerate(full)) for i in range(4))  # type: ignore[misc]

    def faces(self) -> list[frozenset]:
        vs = self.vertices
        if self.kind == "oct":
            o = Octahedron(self.base)
            ring = (o.a, o.b, o.c, o.d)
            return [
                frozenset((apex, ring[i], ring[(i + 1) % 4]))
                for apex in (o.top, o.bottom)
                for i in range(4)
            ]
        return [frozenset(vs[:i] + vs[i + 1:]) for i in range(4)]

    @property
    def top_height(self) -> int:
        return max(height(v) for v in self.vertices)


_RANK = {"down": 0, "oct": 1, "up": 2}


def _face_plane(face: frozenset) -> tuple[int, int]:
    """(coordinate, value) of the hyperplane containing a triangular face."""
    pts = list(face)
    for k in range(4):
        if len({p[k] for p in pts}) == 1:
            return k, pts[0][k]
    raise ExcavationError(f"{face} is not a lattice triangle")


def _is_above(face: frozenset, p: TetPoint) -> bool:
    """Whether ``p`` lies on the upper side of the plane of ``face``."""
    k, v = _face_plane(face)
    return p[k] > v if k in (X, Y) else p[k] < v


class Geometry:
    """Pieces of tet_n with, for each, the pieces resting directly on it."""

    def __init__(self, n: int):
        self.n = n
        self.pieces = (
            [Piece("up", b) for b in compositions(n - 1)]
            + [Piece("oct", b) for b in compositions(n - 2)]
            + [Piece("down", b) for b in compositions(n - 3)]
        )
        sides: dict[frozenset, list[Piece]] = {}
        for piece in self.pieces:
            for f in piece.faces():
                sides.setdefault(f, []).append(piece)
        self.above: dict[Piece, list[Piece]] = {p: [] for p in self.pieces}
        self.face_sides: dict[frozenset, tuple[Piece | None, Piece | None]] = {}
        for f, ps in sides.items():
            upper = lower = None
            for piece in ps:
                off = next(v for v in piece.vertices if v not in f)
                if _is_above(f, off):
                    upper = piece
                else:
                    lower = piece
            self.face_sides[f] = (upper, lower)
            if upper is not None and lower is not None:
                self.above[lower].append(upper)

    def removable(self, piece: Piece, removed) -> bool:
        return piece not in removed and all(q in removed for q in self.above[piece])

    def order(self, rng: random.Random | None = None) -> list[Piece]:
        """An admissible removal order.

        Without ``rng`` this is the layer order: highest pieces first and, within
        a layer, upside-down tetrahedra, then octahedra, then unit tetrahedra.
        With ``rng`` each step picks uniformly among the removable pieces.
        """
        removed: set[Piece] = set()
        out = []
        while len(out) < len(self.pieces):
            ready = [p for p in self.pieces if self.removable(p, removed)]
            if not ready:
                raise ExcavationError("no removable piece left")
            if rng is None:
                pick = min(ready, key=lambda p: (-p.top_height, _RANK[p.kind], p.base))
            else:
                pick = rng.choice(sorted(ready))
            removed.add(pick)
            out.append(pick)
        return out


@lru_cache(maxsize=None)
def geometry(n: int) -> Geometry:
    return Geometry(n)


@lru_cache(maxsize=None)
def layer_order(n: int) -> tuple[Piece, ...]:
    return tuple(geometry(n).order())


# ---------------------------------------------------------------------------
# labelings
# ---------------------------------------------------------------------------


@dataclass
class TetLabeling:
    """A partial labelling of tet_n together with the pieces already dug out."""

    n: int
    labels: dict[TetPoint, int]
    removed: set[Piece] = field(default_factory=set)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "labels": [{"p": list(p), "v": self.labels[p]} for p in sorted(self.labels)],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "TetLabeling":
        labels = {tuple(e["p"]): int(e["v"]) for e in data["labels"]}
        return cls(int(data["n"]), labels)  # type: ignore[arg-type]

    def exposed_faces(self) -> list[frozenset]:
        geo = geometry(self.n)
        out = []
        for f, (upper, lower) in geo.face_sides.items():
            if (upper is None or upper in self.removed) and (lower is None or lower not in self.removed):
                out.append(f)
        return out


@dataclass(frozen=True)
class HivePair:
    left: Hive
    right: Hive
    shared: Weight

    def key(self) -> tuple:
        return (self.left.values, self.right.values)


# hive coordinates of each face, as maps TetPoint -> TriPoint
def _abc(p):  # w = 0: lower-left A, apex C, lower-right B
    return (p[X], p[Z], p[Y])


def _abd(p):  # z = 0: lower-left A, apex B, lower-right D
    return (p[X], p[Y], p[W])


def _bcd(p):  # x = 0: lower-left C, apex B, lower-right D
    return (p[Z], p[Y], p[W])


def _acd(p):  # y = 0: lower-left A, apex C, lower-right D
    return (p[X], p[Z], p[W])


def face_points(n: int, face: str) -> list[TetPoint]:
    k = {"ABC": W, "ABD": Z, "BCD": X, "ACD": Y}[face]
    return [p for p in tet_points(n) if p[k] == 0]


def _read_face(n: int, labels, face: str, shift: int = 0) -> Hive:
    to_tri = {"ABC": _abc, "ABD": _abd, "BCD": _bcd, "ACD": _acd}[face]
    return Hive.from_labels({to_tri(p): labels[p] - shift for p in face_points(n, face)}, n)


def _write_face(n: int, labels, h: Hive, face: str, shift: int = 0) -> None:
    to_tri = {"ABC": _abc, "ABD": _abd, "BCD": _bcd, "ACD": _acd}[face]
    for p in face_points(n, face):
        v = h[to_tri(p)] + shift
        if labels.setdefault(p, v) != v:
            raise GluingError(f"hives disagree at {list(p)}")


def assemble_top(h1: Hive, h2: Hive) -> TetLabeling:
    """Glue h1 in HIVE(lam, mu; sigma) and h2 in HIVE(sigma, nu; pi) onto the upper faces."""
    if h1.n != h2.n:
        raise GluingError("hives have different sizes")
    if h1.south_side() != h2.nw_side():
        raise GluingError(
            f"South side of the first hive {h1.south_side()} != NW side of the second {h2.nw_side()}"
        )
    labels: dict[TetPoint, int] = {}
    _write_face(h1.n, labels, h1, "ABC")
    _write_face(h1.n, labels, h2, "ABD")
    return TetLabeling(h1.n, labels)


def top_pair(t: TetLabeling) -> HivePair:
    h1 = _read_face(t.n, t.labels, "ABC")
    h2 = _read_face(t.n, t.labels, "ABD")
    return HivePair(h1, h2, boundary_of(h1).nu)


def bottom_pair(t: TetLabeling) -> HivePair:
    n = t.n
    c = t.labels[(0, 0, n, 0)]
    g1 = _read_face(n, t.labels, "BCD", shift=c)
    g2 = _read_face(n, t.labels, "ACD")
    return HivePair(g1, g2, boundary_of(g1).nu)


def assemble_bottom(g1: Hive, g2: Hive) -> TetLabeling:
    """Glue g1 in HIVE(mu, nu; tau) and g2 in HIVE(lam, tau; pi) onto the lower faces."""
    if g1.n != g2.n:
        raise GluingError("hives have different sizes")
    n = g1.n
    c = g2[(0, n, 0)]
    if [v + c for v in g1.south_side()] != g2.ne_side():
        raise GluingError("South side of the first hive does not match NE side of the second")
    labels: dict[TetPoint, int] = {}
    _write_face(n, labels, g1, "BCD", shift=c)
    _write_face(n, labels, g2, "ACD")
    return TetLabeling(n, labels)


def _surface_rhombi(t: TetLabeling) -> Iterator[tuple[tuple, tuple]]:
    """Unit rhombi (obtuse pair, acute pair) made of two coplanar exposed triangles."""
    faces = t.exposed_faces()
    by_edge: dict[tuple, list[frozenset]] = {}
    for f in faces:
        pts = sorted(f)
        for i in range(3):
            for j in range(i + 1, 3):
                by_edge.setdefault((pts[i], pts[j]), []).append(f)
    for edge, fs in by_edge.items():
        for i in range(len(fs)):
            for j in range(i + 1, len(fs)):
                if _face_plane(fs[i]) == _face_plane(fs[j]):
                    (r,) = fs[i] - set(edge)
                    (s,) = fs[j] - set(edge)
                    yield edge, (r, s)


def check_surface(t: TetLabeling) -> None:
    for (p, q), (r, s) in _surface_rhombi(t):
        lab = t.labels
        if lab[p] + lab[q] < lab[r] + lab[s]:
            raise ExcavationError(f"exposed rhombus {p},{q} | {r},{s} violates its inequality")


def excavate_labels(
    t: TetLabeling,
    order: Sequence[Piece] | None = None,
    rng: random.Random | None = None,
    check: bool = False,
    trace: list | None = None,
) -> TetLabeling:
    """Remove every piece of the tetrahedron, labelling each newly exposed point.

    ``order`` defaults to the layer order, or a random admissible order when
    ``rng`` is given.  With ``check`` every exposed rhombus is verified after
    each octahedron.  ``trace`` collects one event dict per removed piece.
    """
    n = t.n
    geo = geometry(n)
    if order is None:
        order = geo.order(rng) if rng is not None else layer_order(n)
    labels = dict(t.labels)
    for p in tet_points(n):
        if on_top(p) and p not in labels:
            raise ExcavationError(f"top surface is not fully labelled at {list(p)}")
    removed: set[Piece] = set(t.removed)
    state = TetLabeling(n, labels, removed)
    for piece in order:
        if piece in removed:
            continue
        if not geo.removable(piece, removed):
            raise ExcavationError(f"{piece} removed before the pieces above it")
        event = {"piece": piece.kind, "base": list(piece.base)}
        if piece.kind == "oct":
            o = Octahedron(piece.base)
            try:
                e, a, b, c, d = (labels[v] for v in (o.top,) + o.equator)
            except KeyError as exc:
                raise ExcavationError(f"octahedron {o.base} has an unlabelled vertex {exc}") from None
            labels[o.bottom] = octahedron_step(e, a, b, c, d)
            event["exposed"] = list(o.bottom)
            event["value"] = labels[o.bottom]
        removed.add(piece)
        if trace is not None:
            trace.append(event)
        if check and piece.kind == "oct":
            check_surface(state)
    return state


def excavate(t: TetLabeling, **kwargs) -> HivePair:
    """Transport the pair of hives on the upper faces to the lower faces."""
    return bottom_pair(excavate_labels(t, **kwargs))


def _sweep_up(labels: dict, n: int) -> None:
    for o in sorted(octahedra(n), key=lambda o: (height(o.top), o.base)):
        e2 = labels[o.bottom]
        a, b, c, d = (labels[v] for v in o.equator)
        labels[o.top] = octahedron_step(e2, a, b, c, d)


def fill_labels(t: TetLabeling) -> TetLabeling:
    """The excavation run backwards: lower faces in, whole tetrahedron labelled."""
    labels = dict(t.labels)
    _sweep_up(labels, t.n)
    return TetLabeling(t.n, labels)


def fill(bottom: HivePair, lam=None, mu=None, nu=None, pi=None) -> HivePair:
    """Inverse of :func:`excavate`.  Optional weights are checked against the boundary."""
    g1, g2 = bottom.left, bottom.right
    b1, b2 = boundary_of(g1), boundary_of(g2)
    expected = {"lam": (lam, b2.lam), "mu": (mu, b1.lam), "nu": (nu, b1.mu), "pi": (pi, b2.nu)}
    for name, (want, have) in expected.items():
        if want is not None and tuple(want) != have:
            raise GluingError(f"bottom pair has {name} = {have}, expected {tuple(want)}")
    if b1.nu != b2.mu:
        raise GluingError("bottom hives do not share tau")
    return top_pair(fill_labels(assemble_bottom(g1, g2)))


# ---------------------------------------------------------------------------
# the associativity bijection
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StarReport:
    lhs: int
    rhs: int
    bijection_ok: bool
    problems: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs, "bijection_ok": self.bijection_ok}


def top_pairs(lam, mu, nu, pi) -> list[tuple[Hive, Hive]]:
    """Pairs in the union over sigma of HIVE(lam, mu; sigma) x HIVE(sigma, nu; pi)."""
    out = []
    for sigma in candidate_weights(lam, mu):
        firsts = enumerate_hives(BoundarySpec(lam, mu, sigma))
        if not firsts:
            continue
        seconds = enumerate_hives(BoundarySpec(sigma, nu, pi))
        out.extend((h1, h2) for h1 in firsts for h2 in seconds)
    return out


def bottom_pairs(lam, mu, nu, pi) -> list[tuple[Hive, Hive]]:
    """Pairs in the union over tau of HIVE(mu, nu; tau) x HIVE(lam, tau; pi)."""
    out = []
    for tau in candidate_weights(mu, nu):
        firsts = enumerate_hives(BoundarySpec(mu, nu, tau))
        if not firsts:
            continue
        seconds = enumerate_hives(BoundarySpec(lam, tau, pi))
        out.extend((g1, g2) for g1 in firsts for g2 in seconds)
    return out


def verify_star(lam, mu, nu, pi) -> StarReport:
    """Count both sides of the associativity identity and audit the bijection."""
    lam, mu, nu, pi = (as_weight(w) for w in (lam, mu, nu, pi))
    if not len(lam) == len(mu) == len(nu) == len(pi):
        raise ValueError("weights must have equal length")
    tops = top_pairs(lam, mu, nu, pi)
    bottoms = bottom_pairs(lam, mu, nu, pi)
    problems = []
    targets = {(g1.values, g2.values) for g1, g2 in bottoms}
    images = set()
    for h1, h2 in tops:
        image = excavate(assemble_top(h1, h2))
        key = image.key()
        if not (validate_hive(image.left) and validate_hive(image.right)):
            problems.append(f"excavation of {h1.values},{h2.values} is not a pair of hives")
        if key not in targets:
            problems.append(f"excavation of {h1.values},{h2.values} lands outside the bottom set")
        if key in images:
            problems.append(f"excavation is not injective at {key}")
        images.add(key)
        back = fill(image, lam, mu, nu, pi)
        if (back.left, back.right) != (h1, h2):
            problems.append(f"fill does not invert excavation at {h1.values},{h2.values}")
    if images != targets:
        problems.append(f"image has {len(images)} pairs, bottom set has {len(targets)}")
    return StarReport(len(tops), len(bottoms), not problems, tuple(problems))
