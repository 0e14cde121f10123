"""Exact dense linear algebra over the rationals and prime fields.

Matrices are small and immutable.  Everything is exact: rationals are
``fractions.Fraction`` values, prime-field elements are plain ints reduced
into ``[0, p)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence


class Field:
    """Base class for the two supported coefficient fields."""

    tag: str

    def __call__(self, x):
        return self.coerce(x)

    def coerce(self, x):
        raise NotImplementedError

    def reduce(self, x):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def parse(self, s):
        raise NotImplementedError

    def format(self, x) -> str:
        raise NotImplementedError


class Rationals(Field):
    tag = "q"

    def coerce(self, x):
        if isinstance(x, str):
            return self.parse(x)
        return Fraction(x)

    def reduce(self, x):
        return x

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / x

    def parse(self, s):
        return Fraction(str(s).strip())

    def format(self, x) -> str:
        return str(x)

    def to_json(self):
        return "q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("q")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    def __init__(self, p: int):
        p = int(p)
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.tag = f"fp{p}"

    def coerce(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def reduce(self, x):
        return x % self.p

    def inv(self, x):
        if x % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def parse(self, s):
        return self.coerce(Fraction(str(s).strip()))

    def format(self, x) -> str:
        return str(x)

    def to_json(self):
        return {"fp": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def field_from_json(obj) -> Field:
    if obj is None or obj == "q":
        return QQ
    if isinstance(obj, dict) and "fp" in obj:
        return GF(int(obj["fp"]))
    if isinstance(obj, (int, str)) and str(obj).isdigit():
        return GF(int(obj))
    raise ValueError(f"unknown field {obj!r}")


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix over ``field``.

    ``rows`` is a tuple of row tuples; a 0 x n matrix keeps ``ncols``
    explicitly since it has no rows to measure.
    """

    field: Field
    nrows: int
    ncols: int
    rows: tuple

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Sequence], ncols: int | None = None) -> "Matrix":
        rows = tuple(tuple(field.coerce(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != ncols:
                raise ValueError("ragged matrix")
        return cls(field, len(rows), ncols, rows)

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        z = field.zero
        return cls(field, nrows, ncols, tuple((z,) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.rows)

    def columns(self, idx: Iterable[int]) -> "Matrix":
        idx = list(idx)
        return Matrix(self.field, self.nrows, len(idx), tuple(tuple(row[j] for j in idx) for row in self.rows))

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.ncols, self.nrows,
                      tuple(tuple(self.rows[i][j] for i in range(self.nrows)) for j in range(self.ncols)))

    T = property(transpose)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        F = self.field
        cols = [other.column(j) for j in range(other.ncols)]
        out = []
        for row in self.rows:
            out.append(tuple(F.reduce(sum((a * b for a, b in zip(row, col) if a and b), F.zero))
                             for col in cols))
        return Matrix(F, self.nrows, other.ncols, tuple(out))

    def scale(self, c) -> "Matrix":
        F = self.field
        c = F.coerce(c)
        return Matrix(F, self.nrows, self.ncols, tuple(tuple(F.reduce(c * x) for x in row) for row in self.rows))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def tolist(self) -> list:
        return [list(row) for row in self.rows]

    def __repr__(self):
        body = "; ".join(" ".join(self.field.format(x) for x in row) for row in self.rows)
        return f"Matrix<{self.field!r} {self.nrows}x{self.ncols}>[{body}]"


def block_matrix(field: Field, row_dims: Sequence[int], col_dims: Sequence[int], blocks: dict) -> Matrix:
    """Assemble a matrix from ``blocks[(bi, bj)] -> Matrix``; missing blocks are zero."""
    row_off = [0]
    for d in row_dims:
        row_off.append(row_off[-1] + d)
    col_off = [0]
    for d in col_dims:
        col_off.append(col_off[-1] + d)
    out = [[field.zero] * col_off[-1] for _ in range(row_off[-1])]
    for (bi, bj), blk in blocks.items():
        if blk.shape != (row_dims[bi], col_dims[bj]):
            raise ValueError(f"block {(bi, bj)} has shape {blk.shape}")
        r0, c0 = row_off[bi], col_off[bj]
        for i, row in enumerate(blk.rows):
            dst = out[r0 + i]
            for j, x in enumerate(row):
                if x:
                    dst[c0 + j] = x
    return Matrix(field, row_off[-1], col_off[-1], tuple(tuple(r) for r in out))


def rref(M: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns, leftmost pivots first."""
    F = M.field
    A = [list(row) for row in M.rows]
    pivots = []
    r = 0
    for c in range(M.ncols):
        if r == M.nrows:
            break
        p = next((i for i in range(r, M.nrows) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = F.inv(A[r][c])
        A[r] = [F.reduce(x * inv) for x in A[r]]
        for i in range(M.nrows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [F.reduce(x - f * y) for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return Matrix(F, M.nrows, M.ncols, tuple(tuple(row) for row in A)), tuple(pivots)


def _bareiss_rank(rows: list[list[int]], ncols: int) -> int:
    # fraction-free elimination on an integer matrix; entries stay integral
    A = [row[:] for row in rows]
    n = len(A)
    rank = 0
    prev = 1
    for c in range(ncols):
        p = next((i for i in range(rank, n) if A[i][c] != 0), None)
        if p is None:
            continue
        A[rank], A[p] = A[p], A[rank]
        piv = A[rank][c]
        for i in range(rank + 1, n):
            a = A[i][c]
            row = A[i]
            prow = A[rank]
            A[i] = [(piv * row[k] - a * prow[k]) // prev for k in range(ncols)]
        prev = piv
        rank += 1
        if rank == n:
            break
    return rank


def rank(M: Matrix) -> int:
    """Rank over ``M.field``; Bareiss elimination over Q, Gauss over GF(p)."""
    if M.nrows == 0 or M.ncols == 0:
        return 0
    if isinstance(M.field, Rationals):
        rows = []
        for row in M.rows:
            d = lcm(*(x.denominator for x in row))
            rows.append([int(x * d) for x in row])
        return _bareiss_rank(rows, M.ncols)
    return len(rref(M)[1])


def kernel_basis(M: Matrix) -> Matrix:
    """Right null space basis as columns.

    One column per free variable of the RREF, with a 1 in the free
    coordinate and zeros in the other free coordinates.
    """
    F = M.field
    R, pivots = rref(M)
    free = [c for c in range(M.ncols) if c not in pivots]
    cols = []
    for f in free:
        v = [F.zero] * M.ncols
        v[f] = F.one
        for i, pc in enumerate(pivots):
            v[pc] = F.reduce(-R.rows[i][f])
        cols.append(v)
    return Matrix(F, M.ncols, len(cols), tuple(tuple(c[i] for c in cols) for i in range(M.ncols)))


@dataclass(frozen=True)
class QuotientSpace:
    """Canonical presentation of ``ambient / colspace(relations)``.

    ``pivot_tags`` are the ambient coordinates kept as the quotient basis;
    they are the non-pivot columns of the RREF of ``relations^T``.
    """

    ambient_dim: int
    dim: int
    projection: Matrix
    section: Matrix
    pivot_tags: tuple[int, ...]

    def project(self, v: Sequence) -> tuple:
        return tuple(sum_products(row, v, self.projection.field) for row in self.projection.rows)


def sum_products(a: Sequence, b: Sequence, F: Field):
    return F.reduce(sum((x * y for x, y in zip(a, b) if x and y), F.zero))


def quotient_space(relations: Matrix) -> QuotientSpace:
    F = relations.field
    n = relations.nrows
    R, pivots = rref(relations.transpose())
    keep = tuple(c for c in range(n) if c not in pivots)
    # coordinate k of the reduced vector v - sum_p v[p] * row_p
    proj = []
    for k in keep:
        row = [F.zero] * n
        row[k] = F.one
        for i, p in enumerate(pivots):
            row[p] = F.reduce(-R.rows[i][k])
        proj.append(tuple(row))
    projection = Matrix(F, len(keep), n, tuple(proj))
    section = Matrix(F, n, len(keep),
                     tuple(tuple(F.one if i == k else F.zero for k in keep) for i in range(n)))
    return QuotientSpace(n, len(keep), projection, section, keep)
