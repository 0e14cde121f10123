"""Finitely presented Z^m-graded modules over k[x_1, ..., x_m].

A presentation ``Phi: E -> G`` is stored as generator degrees (rows),
relation degrees (columns) and a scalar matrix.  The entry in row t,
column j is ``coeffs[t][j] * x^(e_j - g_t)``; homogeneity pins the
monomial, so the scalars are all we keep.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Sequence

from .linalg import QQ, Field, Matrix, QuotientSpace, quotient_space, rank
from .matroid import Matroid, from_matrix

Degree = tuple[int, ...]


class PresentationError(ValueError):
    """Raised for an invalid presentation; ``violations`` holds the details."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class NegativeDegrees(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    kind: str  # Homogeneity | NonMinimal | ZeroColumn | DimensionMismatch
    t: int | None = None
    j: int | None = None
    detail: str = ""

    def __str__(self):
        args = ",".join(str(x) for x in (self.t, self.j) if x is not None)
        s = f"{self.kind}({args})"
        return f"{s}: {self.detail}" if self.detail else s

    def to_json(self):
        return {"kind": self.kind, "t": self.t, "j": self.j, "detail": self.detail}


def leq(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def add(a: Sequence[int], b: Sequence[int]) -> Degree:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> Degree:
    return tuple(x - y for x, y in zip(a, b))


def unit(m: int, j: int) -> Degree:
    return tuple(1 if i == j else 0 for i in range(m))


def join(degrees: Sequence[Sequence[int]], m: int) -> Degree:
    """Componentwise maximum; the join of nothing is 0."""
    out = [0] * m
    for d in degrees:
        out = [max(x, y) for x, y in zip(out, d)]
    return tuple(out)


@dataclass(frozen=True)
class Presentation:
    nvars: int
    field: Field
    row_degrees: tuple
    col_degrees: tuple
    coeffs: Matrix
    _pieces: dict = dc_field(default_factory=dict, compare=False, hash=False, repr=False)

    @classmethod
    def build(cls, nvars: int, row_degrees, col_degrees, coeffs, field: Field = QQ) -> "Presentation":
        rows = tuple(tuple(int(x) for x in d) for d in row_degrees)
        cols = tuple(tuple(int(x) for x in d) for d in col_degrees)
        if isinstance(coeffs, Matrix):
            M = coeffs
        else:
            M = Matrix.from_rows(field, coeffs, ncols=len(cols))
        return cls(nvars, field, rows, cols, M)

    @property
    def beta0(self) -> int:
        return len(self.row_degrees)

    @property
    def beta1(self) -> int:
        return len(self.col_degrees)

    def entry_nonzero(self, t: int, j: int) -> bool:
        return self.coeffs.rows[t][j] != 0


def validate(P: Presentation) -> list[Violation]:
    """Every broken presentation invariant, with coordinates; empty means valid."""
    out = []
    m = P.nvars
    if P.coeffs.shape != (P.beta0, P.beta1):
        out.append(Violation("DimensionMismatch", detail=f"coeffs {P.coeffs.shape} vs degrees ({P.beta0}, {P.beta1})"))
        return out
    for t, g in enumerate(P.row_degrees):
        if len(g) != m:
            out.append(Violation("DimensionMismatch", t=t, detail=f"row degree {g} has length != {m}"))
    for j, e in enumerate(P.col_degrees):
        if len(e) != m:
            out.append(Violation("DimensionMismatch", j=j, detail=f"column degree {e} has length != {m}"))
    if out:
        return out
    if P.coeffs.field != P.field:
        out.append(Violation("DimensionMismatch", detail="coefficient field differs from presentation field"))
    for j, e in enumerate(P.col_degrees):
        nonzero = False
        for t, g in enumerate(P.row_degrees):
            if not P.entry_nonzero(t, j):
                continue
            nonzero = True
            if not leq(g, e):
                out.append(Violation("Homogeneity", t, j, f"e_j={e} is not >= g_t={g}"))
            elif tuple(g) == tuple(e):
                out.append(Violation("NonMinimal", t, j, f"unit entry in degree {e}"))
        if not nonzero:
            out.append(Violation("ZeroColumn", j=j))
    return out


def require_valid(P: Presentation) -> Presentation:
    bad = validate(P)
    if bad:
        raise PresentationError(bad)
    return P


def coefficient_matroid(P: Presentation) -> Matroid:
    """Matroid of the columns of Phi with every variable sent to 1."""
    require_valid(P)
    return from_matrix(P.coeffs)


def fraction_field_rank(P: Presentation) -> int:
    # Phi = diag(x^-g) * coeffs * diag(x^e) over the fraction field
    require_valid(P)
    return rank(P.coeffs)


def module_rank(P: Presentation) -> int:
    return P.beta0 - fraction_field_rank(P)


def determining_degree(P: Presentation) -> Degree:
    """Componentwise max of all generator and relation degrees."""
    require_valid(P)
    degs = P.row_degrees + P.col_degrees
    if any(x < 0 for d in degs for x in d):
        raise NegativeDegrees("degrees must be >= 0; shift the presentation first")
    return join(degs, P.nvars)


def shift(P: Presentation, c: Sequence[int]) -> Presentation:
    c = tuple(c)
    return Presentation(P.nvars, P.field,
                        tuple(add(g, c) for g in P.row_degrees),
                        tuple(add(e, c) for e in P.col_degrees),
                        P.coeffs)


def from_monomial_ideal(m: int, gens: Sequence[Sequence[int]], field: Field = QQ) -> Presentation:
    """Presentation of R/I for the monomial ideal generated by ``x^g``, g in gens.

    Redundant generators are dropped.  If some generator is 0 the ideal is R
    and the zero module (no rows, no columns) comes back.
    """
    gens = [tuple(int(x) for x in g) for g in gens]
    for g in gens:
        if len(g) != m or any(x < 0 for x in g):
            raise ValueError(f"bad generator {g} for {m} variables")
    if any(not any(g) for g in gens):
        return Presentation(m, field, (), (), Matrix.zeros(field, 0, 0))
    mins = minimalize(gens)
    return Presentation.build(m, [(0,) * m], mins, [[1] * len(mins)], field)


def minimalize(gens: Sequence[Sequence[int]]) -> list[Degree]:
    """Drop exponent vectors divisible by another; result sorted lex."""
    uniq = sorted(set(tuple(g) for g in gens))
    return [g for g in uniq if not any(h != g and leq(h, g) for h in uniq)]


@dataclass(frozen=True)
class GradedPiece:
    """The degree-b piece of coker(Phi).

    ``labels`` lists the ambient basis as (generator t, exponent b - g_t);
    ``space`` presents the quotient by the relation images.
    """

    degree: Degree
    labels: tuple
    space: QuotientSpace

    @property
    def dim(self) -> int:
        return self.space.dim


def graded_piece(P: Presentation, b: Sequence[int]) -> GradedPiece:
    b = tuple(b)
    try:
        return P._pieces[b]
    except KeyError:
        pass
    F = P.field
    labels = tuple((t, sub(b, g)) for t, g in enumerate(P.row_degrees) if leq(g, b))
    gens = [t for t, _ in labels]
    rel = [j for j, e in enumerate(P.col_degrees) if leq(e, b)]
    # column j lands on generator t with coefficient coeffs[t][j]
    R = Matrix(F, len(gens), len(rel), tuple(tuple(P.coeffs.rows[t][j] for j in rel) for t in gens))
    piece = GradedPiece(b, labels, quotient_space(R))
    P._pieces[b] = piece
    return piece


def multiplication_map(P: Presentation, b: Sequence[int], j: int) -> Matrix:
    """Matrix of x_j: L_b -> L_{b+u_j} in the canonical bases."""
    b = tuple(b)
    src = graded_piece(P, b)
    dst = graded_piece(P, add(b, unit(P.nvars, j)))
    F = P.field
    pos = {t: i for i, (t, _) in enumerate(dst.labels)}
    # source basis vector k is the ambient label src.labels[src.space.pivot_tags[k]]
    cols = []
    proj = dst.space.projection
    for k in src.space.pivot_tags:
        t = src.labels[k][0]
        cols.append(proj.column(pos[t]))
    return Matrix(F, dst.dim, src.dim, tuple(tuple(c[i] for c in cols) for i in range(dst.dim)))


def degree_box(lo: Sequence[int], hi: Sequence[int]):
    """All integer vectors in [lo, hi], lexicographically."""
    return product(*(range(l, h + 1) for l, h in zip(lo, hi)))


def _leibniz_det(entries, F):
    # entries[i][j] is a {exponent: coefficient} polynomial
    from itertools import permutations
    n = len(entries)
    total: dict = {}
    for perm in permutations(range(n)):
        inversions = sum(1 for a in range(n) for c in range(a + 1, n) if perm[a] > perm[c])
        coef = F.one if inversions % 2 == 0 else F.reduce(-F.one)
        expo = None
        for i, j in enumerate(perm):
            poly = entries[i][j]
            if not poly:
                coef = None
                break
            (e, c), = poly.items()
            coef = F.reduce(coef * c)
            expo = e if expo is None else add(expo, e)
        if coef is None:
            continue
        total[expo] = F.reduce(total.get(expo, F.zero) + coef)
    return {e: c for e, c in total.items() if c != 0}


def fraction_field_rank_by_minors(P: Presentation, max_cols: int = 6) -> int:
    """Rank of Phi from Leibniz expansion of its monomial-entry minors.

    Slow cross-check for :func:`fraction_field_rank`; needs cols <= max_cols.
    """
    from itertools import combinations
    require_valid(P)
    if P.beta1 > max_cols:
        raise ValueError(f"minor expansion limited to {max_cols} columns")
    F = P.field
    entries = [[{sub(e, g): P.coeffs.rows[t][j]} if P.coeffs.rows[t][j] != 0 else {}
                for j, e in enumerate(P.col_degrees)]
               for t, g in enumerate(P.row_degrees)]
    best = 0
    for k in range(1, min(P.beta0, P.beta1) + 1):
        found = False
        for T in combinations(range(P.beta0), k):
            for J in combinations(range(P.beta1), k):
                if _leibniz_det([[entries[t][j] for j in J] for t in T], F):
                    found = True
                    break
            if found:
                break
        if not found:
            break
        best = k
    return best
