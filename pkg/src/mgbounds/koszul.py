"""Multigraded Betti and Bass numbers by degreewise Koszul (co)homology.

``beta_{i,b}(L) = dim H_i(L (x) K)_b`` where ``(L (x) K)_i`` in degree b is
the sum of ``L_{b - eps_J}`` over i-subsets J of the variables.

``mu_i(p_A, L)`` localizes at the variables outside A by clamping their
coordinates at the determining degree, then sums the dimensions of the
Koszul cohomology ``H^i Hom(K_A, L')_b`` over the box ``b_j in [-1, a_j]``.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .linalg import block_matrix, rank
from .matroid import mask, members
from .module import (Degree, Presentation, add, degree_box, determining_degree,
                     graded_piece, multiplication_map, require_valid,
                     sub)

MAX_BASS_VARS = 6


class MinimalityBroken(ValueError):
    pass


class TooManyVariables(ValueError):
    pass


@dataclass
class BettiTable:
    entries: dict = field(default_factory=dict)  # i -> {degree: multiplicity}

    def add(self, i: int, b: Degree, mult: int):
        if mult:
            self.entries.setdefault(i, {})[tuple(b)] = mult

    @property
    def length(self) -> int:
        return max(self.entries, default=-1)

    def total(self, i: int) -> int:
        return sum(self.entries.get(i, {}).values())

    def totals(self) -> list[int]:
        return [self.total(i) for i in range(self.length + 1)]

    def degrees(self, i: int) -> dict:
        return dict(sorted(self.entries.get(i, {}).items()))

    def get(self, i: int, b: Sequence[int]) -> int:
        return self.entries.get(i, {}).get(tuple(b), 0)


@dataclass
class BassTable(BettiTable):
    prime: int = 0  # variable mask A of the prime p_A


@dataclass
class Complex:
    """A finite complex of vector spaces; ``maps[i]`` goes from term i to term i-1 (chain)
    or from term i to term i+1 (cochain)."""

    dims: list
    maps: dict
    cochain: bool = False

    def homology(self, i: int) -> int:
        if self.cochain:
            out_map, in_map = self.maps.get(i), self.maps.get(i - 1)
        else:
            out_map, in_map = self.maps.get(i), self.maps.get(i + 1)
        r_out = rank(out_map) if out_map is not None else 0
        r_in = rank(in_map) if in_map is not None else 0
        return self.dims[i] - r_out - r_in

    def squares(self) -> list:
        """Composites of consecutive differentials; all should be zero."""
        out = []
        step = 1 if self.cochain else -1
        for i, d in self.maps.items():
            nxt = self.maps.get(i + step)
            if nxt is not None:
                out.append(nxt @ d)
        return out


def _sign(k: int):
    return 1 if k % 2 == 0 else -1


def koszul_complex(P: Presentation, b: Sequence[int]) -> Complex:
    """Degree-b strand of L (x) K over all m variables."""
    m = P.nvars
    F = P.field
    b = tuple(b)
    subsets = [list(combinations(range(m), i)) for i in range(m + 1)]
    pieces = {J: graded_piece(P, sub(b, _eps(J, m))) for i in range(m + 1) for J in subsets[i]}
    dims = [sum(pieces[J].dim for J in subsets[i]) for i in range(m + 1)]
    maps = {}
    for i in range(1, m + 1):
        index = {J: k for k, J in enumerate(subsets[i - 1])}
        blocks = {}
        for cj, J in enumerate(subsets[i]):
            src = sub(b, _eps(J, m))
            for pos, j in enumerate(J):
                K = J[:pos] + J[pos + 1:]
                mat = multiplication_map(P, src, j)
                blocks[(index[K], cj)] = mat if pos % 2 == 0 else mat.scale(-1)
        maps[i] = block_matrix(F, [pieces[K].dim for K in subsets[i - 1]],
                               [pieces[J].dim for J in subsets[i]], blocks)
    return Complex(dims, maps)


def _eps(J: Iterable[int], m: int) -> Degree:
    out = [0] * m
    for j in J:
        out[j] += 1
    return tuple(out)


def clamp(b: Sequence[int], A: Sequence[int], a: Sequence[int]) -> Degree:
    """Replace coordinates outside A by the matching coordinates of a."""
    Aset = set(A)
    return tuple(x if j in Aset else a[j] for j, x in enumerate(b))


def dual_koszul_complex(P: Presentation, A: Sequence[int], b: Sequence[int], a: Sequence[int] | None = None) -> Complex:
    """Degree-b strand of Hom(K_A, L') with L' the localization clamped at a."""
    m = P.nvars
    F = P.field
    A = tuple(sorted(A))
    a = tuple(a) if a is not None else determining_degree(P)
    b = clamp(b, A, a)
    subsets = [list(combinations(A, i)) for i in range(len(A) + 1)]
    pieces = {J: graded_piece(P, add(b, _eps(J, m))) for i in range(len(A) + 1) for J in subsets[i]}
    dims = [sum(pieces[J].dim for J in subsets[i]) for i in range(len(A) + 1)]
    maps = {}
    for i in range(len(A)):
        index = {J: k for k, J in enumerate(subsets[i + 1])}
        blocks = {}
        for cj, J in enumerate(subsets[i]):
            src = add(b, _eps(J, m))
            for j in A:
                if j in J:
                    continue
                K = tuple(sorted(J + (j,)))
                mat = multiplication_map(P, src, j)
                blocks[(index[K], cj)] = mat if K.index(j) % 2 == 0 else mat.scale(-1)
        maps[i] = block_matrix(F, [pieces[K].dim for K in subsets[i + 1]],
                               [pieces[J].dim for J in subsets[i]], blocks)
    return Complex(dims, maps, cochain=True)


def _jobs(jobs: int | None) -> int:
    if jobs is None:
        jobs = int(os.environ.get("MGBOUNDS_JOBS", "1"))
    return max(1, jobs)


def _betti_at(args):
    P, b = args
    C = koszul_complex(P, b)
    return b, [C.homology(i) for i in range(len(C.dims))]


def betti_table(P: Presentation, margin: int = 0, check_minimal: bool = True,
                jobs: int | None = None) -> BettiTable:
    """Multigraded Betti numbers of coker(Phi) over the box [0, a] (widened by ``margin``)."""
    require_valid(P)
    a = determining_degree(P)
    lo = tuple(-margin for _ in a)
    hi = tuple(x + margin for x in a)
    degrees = list(degree_box(lo, hi))
    tasks = [(P, b) for b in degrees]
    n = _jobs(jobs)
    if n > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=n) as ex:
            results = list(ex.map(_betti_at, tasks, chunksize=16))
    else:
        results = [_betti_at(t) for t in tasks]
    table = BettiTable()
    for b, hs in results:
        for i, h in enumerate(hs):
            table.add(i, b, h)
    if check_minimal and (table.total(0) != P.beta0 or table.total(1) != P.beta1):
        raise MinimalityBroken(
            f"computed beta0={table.total(0)}, beta1={table.total(1)} but the presentation "
            f"has {P.beta0} rows and {P.beta1} columns")
    return table


def _bass_at(args):
    P, A, b, a = args
    C = dual_koszul_complex(P, A, b, a)
    return b, [C.homology(i) for i in range(len(C.dims))]


def bass_at_prime(P: Presentation, A: Iterable[int] | int, margin: int = 0,
                  jobs: int | None = None) -> BassTable:
    """Bass numbers mu_i(p_A, L) with their degrees (zero outside A)."""
    require_valid(P)
    if isinstance(A, int):
        A = members(A)
    A = tuple(sorted(set(A)))
    if any(j < 0 or j >= P.nvars for j in A):
        raise ValueError(f"prime variables {A} out of range for {P.nvars} variables")
    a = determining_degree(P)
    lo = [0] * P.nvars
    hi = [0] * P.nvars
    for j in A:
        lo[j] = -1 - margin
        hi[j] = a[j] + margin
    tasks = [(P, A, b, a) for b in degree_box(lo, hi)]
    n = _jobs(jobs)
    if n > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=n) as ex:
            results = list(ex.map(_bass_at, tasks, chunksize=16))
    else:
        results = [_bass_at(t) for t in tasks]
    table = BassTable(prime=mask(A))
    for b, hs in results:
        for i, h in enumerate(hs):
            table.add(i, b, h)
    return table


def all_primes(m: int, positive: bool = False) -> list[tuple[int, ...]]:
    out = []
    for k in range(0 if not positive else 1, m + 1):
        out.extend(combinations(range(m), k))
    return out


def total_bass(P: Presentation, positive: bool = False, margin: int = 0,
               jobs: int | None = None) -> list[int]:
    """Total multigraded Bass numbers, summed over every multigraded prime.

    The zero prime is included unless ``positive`` is set.
    """
    require_valid(P)
    if P.nvars > MAX_BASS_VARS:
        raise TooManyVariables(f"the prime loop is capped at m <= {MAX_BASS_VARS}")
    totals = [0] * (P.nvars + 1)
    for A in all_primes(P.nvars, positive):
        t = bass_at_prime(P, A, margin=margin, jobs=jobs)
        for i in range(P.nvars + 1):
            totals[i] += t.total(i)
    return totals


def bass_tables(P: Presentation, positive: bool = False, jobs: int | None = None) -> list[BassTable]:
    require_valid(P)
    if P.nvars > MAX_BASS_VARS:
        raise TooManyVariables(f"the prime loop is capped at m <= {MAX_BASS_VARS}")
    return [bass_at_prime(P, A, jobs=jobs) for A in all_primes(P.nvars, positive)]


def euler_characteristic(table: BettiTable) -> int:
    return sum((-1) ** i * v for i, v in enumerate(table.totals()))


def betti_totals(P: Presentation, **kw) -> list[int]:
    """Betti totals padded to length m + 1."""
    t = betti_table(P, **kw)
    return [t.total(i) for i in range(max(P.nvars, t.length) + 1)]
