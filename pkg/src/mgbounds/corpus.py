"""Seeded random instances for the verification harness."""

from __future__ import annotations

import random

from .koszul import MinimalityBroken, betti_table
from .linalg import QQ, GF, Field, Matrix
from .module import Presentation, from_monomial_ideal, leq, validate

TEST_PRIME = 10007


def _random_scalar(rng: random.Random, field: Field):
    if field == QQ:
        return rng.choice([1, -1, 2, -2, 3]) if rng.random() < 0.8 else rng.choice(["1/2", "-3/2", "5/3"])
    return rng.randint(1, field.p - 1)


def random_presentation(rng: random.Random, field: Field, max_vars: int = 3, max_rows: int = 3,
                        max_cols: int = 6, max_deg: int = 3, density: float = 0.6) -> Presentation:
    """A random valid presentation (not necessarily minimal in homological degree 1).

    Each column gets its degree first, then nonzero scalars only on rows
    where homogeneity and the no-unit-entry rule allow them.
    """
    m = rng.randint(1, max_vars)
    rows = [tuple(rng.randint(0, min(1, max_deg)) for _ in range(m)) for _ in range(rng.randint(1, max_rows))]
    ncols = rng.randint(1, max_cols) if rng.random() < 0.95 else 0
    cols, columns = [], []
    for _ in range(50 * max(ncols, 1)):
        if len(cols) == ncols:
            break
        e = tuple(rng.randint(0, max_deg) for _ in range(m))
        allowed = [t for t, g in enumerate(rows) if leq(g, e) and g != e]
        if not allowed:
            continue
        hit = [t for t in allowed if rng.random() < density] or [rng.choice(allowed)]
        cols.append(e)
        columns.append([_random_scalar(rng, field) if t in hit else 0 for t in range(len(rows))])
    coeffs = [[col[t] for col in columns] for t in range(len(rows))]
    return Presentation.build(m, rows, cols, Matrix.from_rows(field, coeffs, ncols=len(cols)), field)


def _is_minimal(P: Presentation) -> bool:
    try:
        betti_table(P)
    except MinimalityBroken:
        return False
    return True


def minimal_subpresentation(P: Presentation) -> Presentation:
    """Greedily keep columns while Tor_1 still matches the column count."""
    keep = []
    for j in range(P.beta1):
        trial = keep + [j]
        Q = Presentation.build(P.nvars, P.row_degrees, [P.col_degrees[k] for k in trial],
                               P.coeffs.columns(trial), P.field)
        if _is_minimal(Q):
            keep = trial
    return Presentation.build(P.nvars, P.row_degrees, [P.col_degrees[k] for k in keep],
                              P.coeffs.columns(keep), P.field)


def presentation_corpus(size: int, seed: int = 0, fields=None, **kw) -> list[Presentation]:
    """``size`` valid minimal presentations, alternating over ``fields``."""
    rng = random.Random(seed)
    fields = fields or [QQ, GF(TEST_PRIME)]
    out = []
    while len(out) < size:
        field = fields[len(out) % len(fields)]
        P = random_presentation(rng, field, **kw)
        if validate(P):
            continue
        P = minimal_subpresentation(P)
        assert not validate(P)
        out.append(P)
    return out


def monomial_quotient_corpus(size: int, seed: int = 0, max_vars: int = 3, max_gens: int = 5,
                             max_deg: int = 3) -> list[Presentation]:
    """Presentations of R/I for random nonzero proper monomial ideals."""
    rng = random.Random(seed)
    out = []
    while len(out) < size:
        m = rng.randint(1, max_vars)
        gens = [tuple(rng.randint(0, max_deg) for _ in range(m)) for _ in range(rng.randint(1, max_gens))]
        if any(not any(g) for g in gens):
            continue
        out.append(from_monomial_ideal(m, gens))
    return out


def random_matrix(rng: random.Random, field: Field, rows: int, cols: int, zero_rate: float = 0.4,
                  values=(1, 2, 3)) -> Matrix:
    """Sparse matrix with small entries, so loops, parallel columns and non-uniform matroids show up."""
    data = [[0 if rng.random() < zero_rate else rng.choice(values) for _ in range(cols)] for _ in range(rows)]
    return Matrix.from_rows(field, data, ncols=cols)
