"""Hives on the triangular lattice tri_n.

Points of ``tri_n`` are integer triples ``(x, y, z)`` with ``x + y + z == n``.
Drawn in the plane, ``(n, 0, 0)`` is the lower-left corner, ``(0, n, 0)`` the
apex and ``(0, 0, n)`` the lower-right corner.  Boundary differences are
always read left to right: the Northwest side runs from the lower-left
corner up to the apex, the Northeast side from the apex down to the
lower-right corner, and the South side from lower-left to lower-right.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Iterator, Mapping, Sequence

TriPoint = tuple[int, int, int]
Weight = tuple[int, ...]

ORIENTATIONS = (0, 120, 240)


class HiveError(ValueError):
    """Malformed hive or boundary input."""


def as_weight(entries: Iterable[int]) -> Weight:
    """Coerce ``entries`` to a weight, checking it is weakly decreasing."""
    w = tuple(int(e) for e in entries)
    for a, b in zip(w, w[1:]):
        if a < b:
            raise HiveError(f"weight {w} is not weakly decreasing")
    return w


def parse_weight(text: str) -> Weight:
    """Parse ``"2,1,0"`` into ``(2, 1, 0)``.  The empty string is the empty weight."""
    text = text.strip()
    if not text:
        return ()
    try:
        return as_weight(int(part) for part in text.split(","))
    except ValueError as exc:
        raise HiveError(f"bad weight {text!r}: {exc}") from None


def format_weight(w: Sequence[int]) -> str:
    return ",".join(str(e) for e in w)


def differences(values: Sequence[int]) -> Weight:
    return tuple(b - a for a, b in zip(values, values[1:]))


# ---------------------------------------------------------------------------
# the lattice
# ---------------------------------------------------------------------------


def tri_points(n: int) -> list[TriPoint]:
    """All points of tri_n, row by row from the apex down, left to right."""
    if n < 0:
        raise HiveError("size must be nonnegative")
    return [(x, n - k, k - x) for k in range(n + 1) for x in range(k, -1, -1)]


def point_index(n: int, p: TriPoint) -> int:
    """Position of ``p`` in :func:`tri_points` order."""
    x, y, _ = p
    k = n - y
    return k * (k + 1) // 2 + (k - x)


def is_interior(p: TriPoint) -> bool:
    return min(p) >= 1


@dataclass(frozen=True)
class Rhombus:
    """A unit rhombus: two triangles sharing the edge between the obtuse pair."""

    obtuse: tuple[TriPoint, TriPoint]
    acute: tuple[TriPoint, TriPoint]
    orientation: int

    @property
    def points(self) -> tuple[TriPoint, ...]:
        return self.obtuse + self.acute

    def slack(self, h: Mapping[TriPoint, int] | "Hive") -> int:
        """Obtuse sum minus acute sum; nonnegative iff the inequality holds."""
        (p, q), (r, s) = self.obtuse, self.acute
        return h[p] + h[q] - h[r] - h[s]


def _unit(i: int) -> tuple[int, int, int]:
    return tuple(1 if k == i else 0 for k in range(3))  # type: ignore[return-value]


# orientation keyed by the pair of coordinates that change along the shared edge
_EDGE_ORIENTATION = {(0, 1): 0, (1, 2): 120, (0, 2): 240}


def rhombus_list(n: int) -> list[Rhombus]:
    """Every unit rhombus of tri_n, each exactly once.

    Each rhombus is a downward triangle glued to the upward triangle across
    one of its edges, so there are ``3 * C(n, 2)`` of them.
    """
    out = []
    for cx in range(1, n + 1):
        for cy in range(1, n + 2 - cx):
            cz = n + 1 - cx - cy
            if cz < 1:
                continue
            c = (cx, cy, cz)
            for (i, j), orient in _EDGE_ORIENTATION.items():
                (k,) = {0, 1, 2} - {i, j}
                ei, ej, ek = _unit(i), _unit(j), _unit(k)
                p = tuple(a - b for a, b in zip(c, ei))
                q = tuple(a - b for a, b in zip(c, ej))
                r = tuple(a - b for a, b in zip(c, ek))
                s = tuple(a - b - d + e for a, b, d, e in zip(c, ei, ej, ek))
                out.append(Rhombus((p, q), (r, s), orient))  # type: ignore[arg-type]
    return out


# ---------------------------------------------------------------------------
# hives
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Hive:
    """An integer labelling of tri_n, stored in :func:`tri_points` order.

    Validity is not enforced on construction; see :func:`validate_hive`.
    """

    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        expected = (self.n + 1) * (self.n + 2) // 2
        if len(self.values) != expected:
            raise HiveError(f"size {self.n} hive needs {expected} labels, got {len(self.values)}")

    @classmethod
    def from_labels(cls, labels: Mapping[TriPoint, int], n: int | None = None) -> "Hive":
        if n is None:
            if not labels:
                raise HiveError("cannot infer size of an empty labelling")
            n = sum(next(iter(labels)))
        values = []
        for p in tri_points(n):
            if p not in labels:
                raise HiveError(f"missing label at {list(p)}")
            values.append(int(labels[p]))
        return cls(n, tuple(values))

    @classmethod
    def from_function(cls, n: int, f) -> "Hive":
        return cls(n, tuple(int(f(p)) for p in tri_points(n)))

    def __getitem__(self, p: TriPoint) -> int:
        return self.values[point_index(self.n, p)]

    def labels(self) -> dict[TriPoint, int]:
        return dict(zip(tri_points(self.n), self.values))

    def shifted(self, c: int) -> "Hive":
        return Hive(self.n, tuple(v + c for v in self.values))

    def rows(self) -> list[list[int]]:
        out, i = [], 0
        for k in range(self.n + 1):
            out.append(list(self.values[i:i + k + 1]))
            i += k + 1
        return out

    # sides, as label sequences read left to right
    def nw_side(self) -> list[int]:
        return [self[(self.n - i, i, 0)] for i in range(self.n + 1)]

    def ne_side(self) -> list[int]:
        return [self[(0, self.n - j, j)] for j in range(self.n + 1)]

    def south_side(self) -> list[int]:
        return [self[(self.n - k, 0, k)] for k in range(self.n + 1)]

    def to_json(self) -> dict:
        return {"n": self.n, "rows": self.rows()}

    @classmethod
    def from_json(cls, data: Mapping) -> "Hive":
        n = int(data["n"])
        rows = data["rows"]
        if len(rows) != n + 1 or any(len(r) != k + 1 for k, r in enumerate(rows)):
            raise HiveError("hive rows have the wrong shape")
        return cls(n, tuple(int(v) for r in rows for v in r))

    def __str__(self) -> str:
        width = max(len(str(v)) for v in self.values)
        lines = []
        for k, row in enumerate(self.rows()):
            pad = " " * ((self.n - k) * (width + 1) // 2)
            lines.append(pad + " ".join(str(v).rjust(width) for v in row))
        return "\n".join(lines)


@dataclass(frozen=True)
class Verdict:
    valid: bool
    violations: tuple[Rhombus, ...] = ()

    def __bool__(self) -> bool:
        return self.valid


def validate_hive(h: Hive | Mapping[TriPoint, int], n: int | None = None) -> Verdict:
    """Check every rhombus inequality, reporting all violated rhombi."""
    if not isinstance(h, Hive):
        h = Hive.from_labels(h, n)
    bad = tuple(r for r in rhombus_list(h.n) if r.slack(h) < 0)
    return Verdict(not bad, bad)


@dataclass(frozen=True)
class BoundarySpec:
    lam: Weight
    mu: Weight
    nu: Weight
    base: int = 0

    def __post_init__(self):
        object.__setattr__(self, "lam", as_weight(self.lam))
        object.__setattr__(self, "mu", as_weight(self.mu))
        object.__setattr__(self, "nu", as_weight(self.nu))
        if not len(self.lam) == len(self.mu) == len(self.nu):
            raise HiveError("weights must have equal length")

    @property
    def n(self) -> int:
        return len(self.lam)

    def balanced(self) -> bool:
        return sum(self.lam) + sum(self.mu) == sum(self.nu)

    def boundary_labels(self) -> dict[TriPoint, int]:
        """Labels forced on the three sides (requires :meth:`balanced`)."""
        n, base = self.n, self.base
        labels = {}
        for i, v in enumerate(accumulate(self.lam, initial=base)):
            labels[(n - i, i, 0)] = v
        top = base + sum(self.lam)
        for j, v in enumerate(accumulate(self.mu, initial=top)):
            labels[(0, n - j, j)] = v
        for k, v in enumerate(accumulate(self.nu, initial=base)):
            labels[(n - k, 0, k)] = v
        return labels


def boundary_of(h: Hive) -> BoundarySpec:
    return BoundarySpec(
        differences(h.nw_side()),
        differences(h.ne_side()),
        differences(h.south_side()),
        h[(h.n, 0, 0)],
    )


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


class _Plan:
    """Fill order for the interior with, per step, the rhombi it completes.

    Interior points are taken row by row from the top (y descending), left to
    right.  When a point is placed, every rhombus whose last unknown vertex it
    is turns into a bound: an upper bound where the point is acute, a lower
    bound where it is obtuse.  This order always yields both.
    """

    def __init__(self, n: int):
        self.n = n
        self.order = [p for p in tri_points(n) if is_interior(p)]
        pos = {p: i for i, p in enumerate(self.order)}
        self.boundary_rhombi = []
        self.steps = [([], []) for _ in self.order]  # (lower, upper) constraints
        for r in rhombus_list(n):
            last = max(pos.get(p, -1) for p in r.points)
            if last < 0:
                self.boundary_rhombi.append(r)
                continue
            p = self.order[last]
            lower, upper = self.steps[last]
            if p in r.obtuse:
                (other,) = [q for q in r.obtuse if q != p] or [p]
                lower.append((r.acute, other))
            else:
                (other,) = [q for q in r.acute if q != p] or [p]
                upper.append((r.obtuse, other))
        for p, (lower, upper) in zip(self.order, self.steps):
            if not lower or not upper:
                raise AssertionError(f"fill order leaves {p} unbounded")


_PLANS: dict[int, _Plan] = {}


def _plan(n: int) -> _Plan:
    if n not in _PLANS:
        _PLANS[n] = _Plan(n)
    return _PLANS[n]


def _search(b: BoundarySpec) -> Iterator[dict[TriPoint, int]]:
    if not b.balanced():
        return
    plan = _plan(b.n)
    labels = b.boundary_labels()
    if any(r.slack(labels) < 0 for r in plan.boundary_rhombi):
        return
    order, steps = plan.order, plan.steps

    def bounds(i):
        lower, upper = steps[i]
        lo = max(labels[a] + labels[c] - labels[o] for (a, c), o in lower)
        hi = min(labels[a] + labels[c] - labels[o] for (a, c), o in upper)
        return lo, hi

    def rec(i):
        if i == len(order):
            yield labels
            return
        lo, hi = bounds(i)
        p = order[i]
        for v in range(lo, hi + 1):
            labels[p] = v
            yield from rec(i + 1)
        labels.pop(p, None)

    yield from rec(0)


def enumerate_hives(b: BoundarySpec) -> list[Hive]:
    """Every hive with boundary ``b``: the set HIVE(lam, mu; nu) shifted by ``b.base``."""
    n = b.n
    return [Hive.from_labels(labels, n) for labels in _search(b)]


def count_hives(b: BoundarySpec) -> int:
    return sum(1 for _ in _search(b))
