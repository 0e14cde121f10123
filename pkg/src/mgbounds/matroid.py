"""Matrix-representable matroids: rank oracle, circuits, flats, duals, T-flats.

Subsets of the ground set ``{0, ..., n-1}`` are int bitmasks.  Lists of
subsets come back in canonical order: by cardinality, then by the sorted
index tuple.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Iterable

from .linalg import Matrix, rank as matrix_rank

MAX_ENUM = 20


class GroundSetTooLarge(ValueError):
    pass


def mask(indices: Iterable[int]) -> int:
    out = 0
    for i in indices:
        out |= 1 << i
    return out


def members(A: int) -> tuple[int, ...]:
    out = []
    i = 0
    while A:
        if A & 1:
            out.append(i)
        A >>= 1
        i += 1
    return tuple(out)


def popcount(A: int) -> int:
    return bin(A).count("1")


def canonical_key(A: int):
    return (popcount(A), members(A))


def sort_subsets(subsets: Iterable[int]) -> list[int]:
    return sorted(set(subsets), key=canonical_key)


class Matroid:
    """A matroid on ``range(n)`` given by a rank oracle.

    Represented matroids keep their backing matrix (columns = ground set);
    formal duals have ``backing=None`` and derive rank from the primal.
    """

    def __init__(self, n: int, rank_fn: Callable[[int], int], backing: Matrix | None = None):
        self.n = n
        self.backing = backing
        self._rank_fn = rank_fn
        self._cache: dict[int, int] = {}
        self.full = (1 << n) - 1
        self.r = self.rank(self.full)

    def rank(self, A: int) -> int:
        if A < 0 or A > self.full:
            raise IndexError(f"subset {A:#b} not inside a ground set of size {self.n}")
        try:
            return self._cache[A]
        except KeyError:
            v = self._rank_fn(A)
            self._cache[A] = v
            return v

    def closure(self, A: int) -> int:
        rA = self.rank(A)
        out = A
        for x in range(self.n):
            bit = 1 << x
            if not A & bit and self.rank(A | bit) == rA:
                out |= bit
        return out

    def __repr__(self):
        kind = "represented" if self.backing is not None else "oracle"
        return f"Matroid(n={self.n}, r={self.r}, {kind})"


def from_matrix(M: Matrix) -> Matroid:
    """Column matroid of ``M``: a set of columns is independent iff its rank equals its size."""
    return Matroid(M.ncols, lambda A: matrix_rank(M.columns(members(A))), backing=M)


def uniform_matroid(r: int, n: int, field=None) -> Matroid:
    """U_{r,n} realized by Vandermonde columns with nodes 0..n-1."""
    from .linalg import QQ
    field = field or QQ
    rows = [[t ** k for t in range(n)] for k in range(r)]
    return from_matrix(Matrix.from_rows(field, rows, ncols=n))


def rank_of(M: Matroid, A: int) -> int:
    return M.rank(A)


def dual(M: Matroid) -> Matroid:
    """Dual matroid via ``r*(A) = |A| - r(S) + r(S \\ A)``."""
    full, r = M.full, M.r
    return Matroid(M.n, lambda A: popcount(A) - r + M.rank(full ^ A))


def level(M: Matroid, A: int) -> int:
    return popcount(A) - M.rank(A) - 1


def is_flat(M: Matroid, F: int) -> bool:
    rF = M.rank(F)
    for x in range(M.n):
        bit = 1 << x
        if not F & bit and M.rank(F | bit) != rF + 1:
            return False
    return True


def is_tflat(M: Matroid, A: int) -> bool:
    comp = M.full ^ A
    if comp == M.full:
        return False
    return is_flat(_dual_cached(M), comp)


def _dual_cached(M: Matroid) -> Matroid:
    D = getattr(M, "_dual", None)
    if D is None:
        D = M._dual = dual(M)
    return D


def _check_size(M: Matroid):
    if M.n > MAX_ENUM:
        raise GroundSetTooLarge(f"exhaustive enumeration capped at n <= {MAX_ENUM}, got {M.n}")


def _subsets_of_size(n: int, k: int):
    for c in combinations(range(n), k):
        yield mask(c)


def circuits(M: Matroid) -> list[int]:
    _check_size(M)
    out = []
    for size in range(1, M.r + 2):
        for C in _subsets_of_size(M.n, size):
            if M.rank(C) != size - 1:
                continue
            if all(M.rank(C ^ (1 << x)) == size - 1 for x in members(C)):
                out.append(C)
    return sort_subsets(out)


def flats_of_rank(M: Matroid, rho: int) -> list[int]:
    """All flats of rank ``rho``, found as closures of independent ``rho``-sets."""
    _check_size(M)
    if rho < 0 or rho > M.r:
        return []
    found = set()
    for A in _subsets_of_size(M.n, rho):
        if M.rank(A) == rho:
            found.add(M.closure(A))
    return sort_subsets(found)


def tflats_of_level(M: Matroid, k: int) -> list[int]:
    """T-flats of level ``k``: complements of proper flats of the dual, with |A| - r(A) - 1 = k."""
    _check_size(M)
    if k < 0:
        raise ValueError("level must be non-negative")
    D = _dual_cached(M)
    out = []
    # level k forces k+1 <= |A| <= r+k+1
    for size in range(k + 1, min(M.r + k + 1, M.n) + 1):
        for A in _subsets_of_size(M.n, size):
            if level(M, A) != k:
                continue
            comp = M.full ^ A
            if comp != M.full and is_flat(D, comp):
                out.append(A)
    return sort_subsets(out)
