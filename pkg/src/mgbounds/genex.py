"""Uniform-rank presentations with generic multidegrees.

Column j gets the Vandermonde coefficients ``(1, t_j, ..., t_j^(r-1))`` and
degree ``1 + K*u_j`` in ``n`` variables, so every r columns are independent
and the join of any set of column degrees remembers the set.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .bounds import IndexCheck, VerificationReport, brt_rank
from .koszul import betti_table
from .linalg import QQ, Field, PrimeField
from .matroid import mask
from .module import Presentation, coefficient_matroid, require_valid


class FieldTooSmall(ValueError):
    pass


class NotUniform(ValueError):
    pass


@dataclass(frozen=True)
class GenexSpec:
    r: int
    n: int
    field: Field = QQ
    spike: int = 1

    def check(self):
        if not 1 <= self.r <= self.n:
            raise ValueError(f"need 1 <= r <= n, got r={self.r}, n={self.n}")
        if self.spike < 1:
            raise ValueError("spike must be a positive integer")
        if isinstance(self.field, PrimeField) and self.field.p <= self.n:
            raise FieldTooSmall(f"GF({self.field.p}) has too few elements for {self.n} distinct nodes")


def _nodes(spec: GenexSpec, seed: int | None) -> list[int]:
    if seed is None:
        return list(range(spec.n))
    rng = random.Random(seed)
    if isinstance(spec.field, PrimeField):
        pool = range(spec.field.p)
    else:
        pool = range(-10 * spec.n, 10 * spec.n + 1)
    return rng.sample(pool, spec.n)


def generic_presentation(spec: GenexSpec, seed: int | None = None) -> Presentation:
    """Presentation with r generators in degree 0 and n spiked, Vandermonde relations.

    With ``seed`` the Vandermonde nodes are drawn at random (distinct) instead
    of 0..n-1.
    """
    spec.check()
    r, n, K = spec.r, spec.n, spec.spike
    nodes = _nodes(spec, seed)
    coeffs = [[t ** k for t in nodes] for k in range(r)]
    cols = [tuple(1 + (K if i == j else 0) for i in range(n)) for j in range(n)]
    return Presentation.build(n, [(0,) * n] * r, cols, coeffs, spec.field)


def is_uniform(P: Presentation) -> bool:
    M = coefficient_matroid(P)
    return all(M.rank(mask(c)) == M.r for c in combinations(range(M.n), M.r))


def verify_sharpness(P: Presentation, jobs: int | None = None) -> VerificationReport:
    """Check that the Betti numbers equal the Buchsbaum-Rim-Taylor ranks in every degree >= 2."""
    require_valid(P)
    if not is_uniform(P):
        raise NotUniform("some r-subset of columns is dependent")
    M = coefficient_matroid(P)
    n, r = M.n, M.r
    lam = n - r + 1
    table = betti_table(P, jobs=jobs)
    top = max(lam, table.length, P.nvars)
    values = [table.total(i) for i in range(top + 1)]
    rep = VerificationReport("sharpness", values=values, require_equality=True,
                             provenance={"n": n, "r": r, "lambda": lam, "rows": P.beta0})
    rep.size_checks = [IndexCheck(0, values[0], P.beta0), IndexCheck(1, values[1], n)]
    for i in range(2, top + 1):
        rep.checks.append(IndexCheck(i, values[i], brt_rank(n, r, i)))
    return rep
