"""Exact Laurent polynomials, the rational octahedron recurrence, and tropicalization.

A monomial is a tuple of ``(variable, exponent)`` pairs sorted by variable,
with no zero exponents.  Variables may be any mutually comparable hashables;
the symbolic excavation uses tetrahedron points ``(x, y, z, w)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Mapping

from .excavation import TetPoint, height, octahedra, on_bottom, on_top, tet_points

Monomial = tuple[tuple[Hashable, int], ...]


class DivisionError(ArithmeticError):
    """Raised when a Laurent division is not exact."""


class TropicalizationError(ValueError):
    pass


class EvaluationError(KeyError):
    pass


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    exps = dict(m1)
    for v, e in m2:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted((v, e) for v, e in exps.items() if e))


def default_name(v) -> str:
    if isinstance(v, tuple):
        return "h" + "".join(str(c) for c in v) if all(0 <= c < 10 for c in v) else "h" + "_".join(map(str, v))
    return str(v)


class LaurentPolynomial:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self.terms: dict[Monomial, int] = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def var(cls, v, exp: int = 1) -> "LaurentPolynomial":
        return cls({((v, exp),): 1} if exp else {(): 1})

    @classmethod
    def const(cls, c: int) -> "LaurentPolynomial":
        return cls({(): c})

    @classmethod
    def monomial(cls, exps: Mapping, coeff: int = 1) -> "LaurentPolynomial":
        return cls({tuple(sorted((v, e) for v, e in exps.items() if e)): coeff})

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.const(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return LaurentPolynomial(out)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return LaurentPolynomial(out)

    def __truediv__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return exact_divide(self, other)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.format()})"

    def format(self, name: Callable = default_name) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            factors = [name(v) if e == 1 else f"{name(v)}^{e}" for v, e in m]
            if c != 1 or not factors:
                factors.insert(0, str(c))
            parts.append("*".join(factors))
        return " + ".join(parts)

    def to_json(self, name: Callable = default_name) -> list[dict]:
        return [
            {"exp": {name(v): e for v, e in m}, "coeff": self.terms[m]}
            for m in sorted(self.terms)
        ]


def _dense(p: LaurentPolynomial, index: dict) -> dict[tuple[int, ...], int]:
    out = {}
    for m, c in p.terms.items():
        vec = [0] * len(index)
        for v, e in m:
            vec[index[v]] = e
        out[tuple(vec)] = c
    return out


def exact_divide(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    """The Laurent polynomial ``p / q``; raises DivisionError unless it exists.

    Long division by lexicographic leading terms.  Every quotient exponent
    must lie in the box cut out by the per-variable exponent ranges of p and
    q, which bounds the loop.
    """
    if q.is_zero():
        raise DivisionError("division by zero")
    if p.is_zero():
        return LaurentPolynomial()
    if len(q.terms) == 1:
        ((m, c),) = q.terms.items()
        inv = tuple((v, -e) for v, e in m)
        out = {}
        for mp, cp in p.terms.items():
            if cp % c:
                raise DivisionError(f"coefficient {cp} not divisible by {c}")
            out[_mono_mul(mp, inv)] = cp // c
        return LaurentPolynomial(out)
    names = sorted(p.variables() | q.variables())
    index = {v: i for i, v in enumerate(names)}
    dp, dq = _dense(p, index), _dense(q, index)
    k = len(names)
    lo = [min(e[i] for e in dp) - min(e[i] for e in dq) for i in range(k)]
    hi = [max(e[i] for e in dp) - max(e[i] for e in dq) for i in range(k)]
    qlead = max(dq)
    qc = dq[qlead]
    rem = dict(dp)
    quot: dict[tuple[int, ...], int] = {}
    while rem:
        lead = max(rem)
        c = rem[lead]
        t = tuple(a - b for a, b in zip(lead, qlead))
        if c % qc or any(not lo[i] <= t[i] <= hi[i] for i in range(k)):
            raise DivisionError("division is not exact")
        f = c // qc
        quot[t] = quot.get(t, 0) + f
        for e, d in dq.items():
            s = tuple(a + b for a, b in zip(t, e))
            v = rem.get(s, 0) - f * d
            if v:
                rem[s] = v
            else:
                rem.pop(s, None)
    return LaurentPolynomial(
        {tuple((names[i], e) for i, e in enumerate(vec) if e): c for vec, c in quot.items()}
    )


def laurent_arith(op: str, p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    if op == "exact_divide":
        return exact_divide(p, q)
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# the rational octahedron recurrence on tet_n
# ---------------------------------------------------------------------------


def top_variables(n: int) -> list[TetPoint]:
    """One indeterminate per point of the upper surface, in lexicographic order."""
    return sorted(p for p in tet_points(n) if on_top(p))


def symbolic_labels(n: int, allow_large: bool = False) -> dict[TetPoint, LaurentPolynomial]:
    """Label all of tet_n by running E' = (AC + BD) / E from the upper surface."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > 6 and not allow_large:
        raise ValueError("symbolic excavation beyond n = 6 needs allow_large=True")
    labels = {p: LaurentPolynomial.var(p) for p in top_variables(n)}
    for o in sorted(octahedra(n), key=lambda o: (-height(o.top), o.base)):
        e = labels[o.top]
        a, b, c, d = (labels[v] for v in o.equator)
        labels[o.bottom] = exact_divide(a * c + b * d, e)
    return labels


def symbolic_excavate(n: int, allow_large: bool = False) -> dict[TetPoint, LaurentPolynomial]:
    """Bottom-face labels as Laurent polynomials in the upper-surface variables."""
    labels = symbolic_labels(n, allow_large)
    return {p: v for p, v in labels.items() if on_bottom(p)}


# ---------------------------------------------------------------------------
# tropical shadow
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TropicalForm:
    """max over a finite set of (linear form, constant)."""

    forms: frozenset

    def __iter__(self):
        return iter(sorted(self.forms))

    def __len__(self) -> int:
        return len(self.forms)

    def linear_forms(self) -> set[frozenset]:
        return {frozenset(lin) for lin, _ in self.forms}

    def format(self, name: Callable = default_name) -> str:
        parts = []
        for lin, const in self:
            s = ""
            for v, k in lin:
                sign = "-" if k < 0 else ("+" if s else "")
                mag = "" if abs(k) == 1 else str(abs(k))
                s += f"{sign}{mag}{name(v)}"
            if const or not s:
                s += f"{const:+d}" if s else str(const)
            parts.append(s)
        return "max{" + ", ".join(parts) + "}"


def tropicalize(p: LaurentPolynomial) -> TropicalForm:
    """Replace (+, *, /) by (max, +, -): one linear form per monomial."""
    if p.is_zero():
        raise TropicalizationError("the zero polynomial has no tropicalization")
    for m, c in p.terms.items():
        if c <= 0:
            raise TropicalizationError(f"coefficient {c} is not positive")
    return TropicalForm(frozenset((m, 0) for m in p.terms))


def eval_tropical(f: TropicalForm, assignment: Mapping) -> int:
    best = None
    for lin, const in f.forms:
        try:
            v = const + sum(k * assignment[x] for x, k in lin)
        except KeyError as exc:
            raise EvaluationError(f"no value for variable {exc}") from None
        best = v if best is None else max(best, v)
    return best
