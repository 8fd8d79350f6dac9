"""The hive ring: basis b_lam for dominant weights, products counted by hives."""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Mapping

from .hive import (
    BoundarySpec,
    Hive,
    HiveError,
    Weight,
    as_weight,
    boundary_of,
    count_hives,
    differences,
    validate_hive,
)


class RingElement:
    """A finite integer combination of basis elements b_lam."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Weight, int] | None = None):
        clean: dict[Weight, int] = {}
        for w, c in (terms or {}).items():
            w = as_weight(w)
            if c:
                clean[w] = clean.get(w, 0) + c
                if not clean[w]:
                    del clean[w]
        lengths = {len(w) for w in clean}
        if len(lengths) > 1:
            raise HiveError("all weights in a ring element must have the same length")
        self._terms = clean

    @classmethod
    def basis(cls, w) -> "RingElement":
        return cls({as_weight(w): 1})

    @property
    def terms(self) -> dict[Weight, int]:
        return dict(self._terms)

    def __getitem__(self, w) -> int:
        return self._terms.get(tuple(w), 0)

    def __iter__(self) -> Iterator[Weight]:
        return iter(sorted(self._terms, reverse=True))

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Mapping):
            other = RingElement(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: "RingElement") -> "RingElement":
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, 0) + c
        return RingElement(out)

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + other.scale(-1)

    def scale(self, k: int) -> "RingElement":
        return RingElement({w: k * c for w, c in self._terms.items()})

    def __mul__(self, other: "RingElement") -> "RingElement":
        out = RingElement()
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                out = out + product_expand(w1, w2).scale(c1 * c2)
        return out

    def __repr__(self) -> str:
        inner = ", ".join(f"{w}: {self._terms[w]}" for w in self)
        return f"RingElement({{{inner}}})"

    def to_json(self) -> list[dict]:
        return [{"weight": list(w), "coeff": self._terms[w]} for w in self]

    @classmethod
    def from_json(cls, data) -> "RingElement":
        return cls({tuple(t["weight"]): int(t["coeff"]) for t in data})


def fundamental_weight(n: int, i: int) -> Weight:
    """omega_i^n = (1,...,1,0,...,0) with i ones."""
    if not 0 <= i <= n:
        raise HiveError(f"need 0 <= i <= {n}")
    return (1,) * i + (0,) * (n - i)


def dual_weight(w) -> Weight:
    """The contragredient weight (-w_n, ..., -w_1)."""
    return tuple(-a for a in reversed(as_weight(w)))


def det_shift(w, k: int) -> Weight:
    return tuple(a + k for a in as_weight(w))


def structure_constant(lam, mu, nu) -> int:
    return count_hives(BoundarySpec(lam, mu, nu))


def candidate_weights(lam: Weight, mu: Weight) -> Iterator[Weight]:
    """Dominant nu with the right sum and every entry in [lam_n + mu_n, lam_1 + mu_1]."""
    n = len(lam)
    if n == 0:
        yield ()
        return
    total = sum(lam) + sum(mu)
    lo, hi = lam[-1] + mu[-1], lam[0] + mu[0]

    def rec(prefix, remaining, cap):
        k = n - len(prefix)
        if k == 0:
            if remaining == 0:
                yield tuple(prefix)
            return
        # the remaining k entries lie in [lo, v]
        for v in range(min(cap, remaining - lo * (k - 1)), lo - 1, -1):
            if v * k < remaining:
                break
            prefix.append(v)
            yield from rec(prefix, remaining - v, v)
            prefix.pop()

    yield from rec([], total, hi)


def product_expand(lam, mu) -> RingElement:
    """b_lam * b_mu = sum over nu of #HIVE(lam, mu; nu) b_nu."""
    lam, mu = as_weight(lam), as_weight(mu)
    if len(lam) != len(mu):
        raise HiveError("weights must have equal length")
    terms = {}
    for nu in candidate_weights(lam, mu):
        c = count_hives(BoundarySpec(lam, mu, nu))
        if c:
            terms[nu] = c
    return RingElement(terms)


def pieri_expand(lam, i: int) -> RingElement:
    """Sum of b_{lam + pi} over 0,1-vectors pi with i ones keeping lam + pi dominant."""
    lam = as_weight(lam)
    n = len(lam)
    fundamental_weight(n, i)
    terms = {}
    for ones in combinations(range(n), i):
        w = tuple(a + (k in ones) for k, a in enumerate(lam))
        if all(a >= b for a, b in zip(w, w[1:])):
            terms[w] = 1
    return RingElement(terms)


def fundamental_index(w: Weight) -> int | None:
    """i if ``w`` is omega_i^n, else None."""
    i = sum(1 for a in w if a == 1)
    return i if tuple(w) == fundamental_weight(len(w), i) else None


def peel_strip(h: Hive) -> tuple[Hive, int]:
    """Delete the Northeast strip of a hive whose NE differences are omega_i.

    Returns the size n-1 hive on the points with x >= 1 and the bit telling
    whether its NE differences dropped to omega_{i-1} (1) or stayed omega_i (0).
    """
    if h.n < 1:
        raise HiveError("cannot peel a size 0 hive")
    if not validate_hive(h):
        raise HiveError("peel_strip needs a valid hive")
    b = boundary_of(h)
    i = fundamental_index(b.mu)
    if i is None:
        raise HiveError(f"NE differences {b.mu} are not a fundamental weight")
    n = h.n
    sub = Hive.from_function(n - 1, lambda p: h[(p[0] + 1, p[1], p[2])])
    j = fundamental_index(differences(sub.ne_side()))
    bit = b.nu[-1] - b.lam[-1]
    if j is None or bit not in (0, 1) or j != i - bit:
        raise HiveError("strip does not have the omega_i / omega_{i-1} shape")
    return sub, bit


def peel_all(h: Hive) -> list[int]:
    """Bits from peeling strips until the hive is empty; index k is the step at size n-k."""
    bits = []
    while h.n > 0:
        h, bit = peel_strip(h)
        bits.append(bit)
    return bits
