"""Brute-force Littlewood-Richardson oracle via Schur polynomials.

Independent of the hive code: Schur polynomials are built from semistandard
tableaux, multiplied monomial by monomial, and the product is decomposed by
repeatedly peeling off the Schur polynomial of the lexicographically largest
exponent.  Only meant for small ``n`` and small entries.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache


class OracleError(RuntimeError):
    pass


def semistandard_tableaux(shape: tuple[int, ...], n: int):
    """Yield SSYT of ``shape`` with entries in ``1..n`` as tuples of rows."""
    rows = [r for r in shape if r > 0]
    cells = [(i, j) for i, r in enumerate(rows) for j in range(r)]
    filling = [[0] * r for r in rows]

    def rec(c):
        if c == len(cells):
            yield tuple(tuple(r) for r in filling)
            return
        i, j = cells[c]
        lo = 1
        if j > 0:
            lo = max(lo, filling[i][j - 1])
        if i > 0:
            lo = max(lo, filling[i - 1][j] + 1)
        for v in range(lo, n + 1):
            filling[i][j] = v
            yield from rec(c + 1)

    yield from rec(0)


@lru_cache(maxsize=None)
def schur_polynomial(lam: tuple[int, ...], n: int) -> dict[tuple[int, ...], int]:
    """s_lam(x_1..x_n) as a map exponent-vector -> coefficient."""
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"{lam} is not weakly decreasing")
    if lam and lam[-1] < 0:
        raise ValueError("negative entries: shift with det_reduce first")
    if len(lam) > n and any(lam[n:]):
        return {}
    poly: Counter = Counter()
    for t in semistandard_tableaux(lam, n):
        content = [0] * n
        for row in t:
            for v in row:
                content[v - 1] += 1
        poly[tuple(content)] += 1
    return dict(poly)


def dimension(lam: tuple[int, ...]) -> int:
    """Number of monomials (with multiplicity) of s_lam in len(lam) variables."""
    shift = max(0, -min(lam, default=0))
    return sum(schur_polynomial(tuple(a + shift for a in lam), len(lam)).values())


def det_reduce(lam, mu, nu):
    """Shift lam by k and mu by j (minimal, so both are nonnegative), nu by k + j."""
    k = max(0, -min(lam, default=0))
    j = max(0, -min(mu, default=0))
    return (
        tuple(a + k for a in lam),
        tuple(a + j for a in mu),
        tuple(a + k + j for a in nu),
        k,
        j,
    )


def _multiply(p, q):
    out: Counter = Counter()
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
    return out


def schur_expand(lam, mu) -> dict[tuple[int, ...], int]:
    """Decompose s_lam * s_mu into Schur polynomials (nonnegative weights only)."""
    return dict(_schur_expand(tuple(lam), tuple(mu)))


@lru_cache(maxsize=4096)
def _schur_expand(lam, mu):
    n = len(lam)
    product = _multiply(schur_polynomial(tuple(lam), n), schur_polynomial(tuple(mu), n))
    product = Counter({e: c for e, c in product.items() if c})
    result = {}
    while product:
        lead = max(product)
        c = product[lead]
        if c < 0 or any(a < b for a, b in zip(lead, lead[1:])):
            raise OracleError(f"peeling hit {c} at non-dominant or negative term {lead}")
        result[lead] = c
        for e, d in schur_polynomial(lead, n).items():
            product[e] -= c * d
            if product[e] == 0:
                del product[e]
    return tuple(result.items())


def lr_coef_oracle(lam, mu, nu) -> int:
    if not len(lam) == len(mu) == len(nu):
        raise ValueError("weights must have equal length")
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    lam, mu, nu, _, _ = det_reduce(tuple(lam), tuple(mu), tuple(nu))
    if nu and min(nu) < 0:
        return 0
    return schur_expand(lam, mu).get(nu, 0)
