"""Alexander duality for monomial ideals and a Betti/Bass duality probe."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from typing import Sequence

from .koszul import bass_at_prime, betti_table
from .matroid import mask, members
from .module import (Degree, Presentation, degree_box, join, leq, minimalize,
                     require_valid, sub)

MAX_BOX = 10 ** 6


class ConstraintViolated(ValueError):
    pass


class GeneratorExceedsA(ValueError):
    pass


@dataclass(frozen=True)
class MonomialIdeal:
    nvars: int
    gens: tuple

    @classmethod
    def of(cls, nvars: int, gens: Sequence[Sequence[int]]) -> "MonomialIdeal":
        gens = [tuple(int(x) for x in g) for g in gens]
        for g in gens:
            if len(g) != nvars or any(x < 0 for x in g):
                raise ValueError(f"bad generator {g} for {nvars} variables")
        return cls(nvars, tuple(minimalize(gens)))

    def contains(self, b: Sequence[int]) -> bool:
        return any(leq(g, b) for g in self.gens)

    def to_json(self):
        return {"vars": self.nvars, "gens": [list(g) for g in self.gens]}


def support(b: Sequence[int]) -> int:
    """Mask of the coordinates with b_j >= 1."""
    return mask(j for j, x in enumerate(b) if x >= 1)


def complement_degree(a: Sequence[int], b: Sequence[int]) -> Degree:
    """``a \\ b``: a_j + 1 - b_j where b_j >= 1, else 0."""
    if len(a) != len(b):
        raise ConstraintViolated("a and b have different lengths")
    out = []
    for aj, bj in zip(a, b):
        if bj < 0 or (bj >= 1 and bj > aj):
            raise ConstraintViolated(f"need 0 <= b <= a on supp(b); a={tuple(a)}, b={tuple(b)}")
        out.append(aj + 1 - bj if bj >= 1 else 0)
    return tuple(out)


def _check_box(a: Sequence[int]):
    if prod(x + 1 for x in a) > MAX_BOX:
        raise ValueError(f"box [0, a] exceeds {MAX_BOX} points")


def alexander_dual(I: MonomialIdeal, a: Sequence[int], cross_check: bool = True) -> MonomialIdeal:
    """I^[a] from the box rule: for 0 <= b <= a, x^b is in I^[a] iff x^(a-b) is not in I."""
    a = tuple(a)
    if len(a) != I.nvars:
        raise ValueError("a has the wrong length")
    for g in I.gens:
        if not leq(g, a):
            raise GeneratorExceedsA(f"generator {g} does not divide x^{a}")
    _check_box(a)
    inside = [b for b in degree_box((0,) * len(a), a) if not I.contains(sub(a, b))]
    out = MonomialIdeal(I.nvars, tuple(minimalize(inside)))
    if cross_check:
        other = alexander_dual_by_intersection(I, a)
        if other != out:
            raise AssertionError(f"box rule gives {out.gens}, intersection gives {other.gens}")
    return out


def alexander_dual_by_intersection(I: MonomialIdeal, a: Sequence[int]) -> MonomialIdeal:
    """Intersection over generators b of (x_j^((a\\b)_j) : j in supp(b))."""
    m = I.nvars
    current = [(0,) * m]  # the unit ideal
    for g in I.gens:
        c = complement_degree(a, g)
        powers = [tuple(c[j] if i == j else 0 for i in range(m)) for j in members(support(g))]
        current = minimalize(join([x, y], m) for x in current for y in powers)
    return MonomialIdeal(m, tuple(minimalize(current)))


@dataclass
class ProbeMismatch:
    i: int
    b: Degree | None
    betti: int
    bass_degree: Degree
    bass: int
    prime: int

    def to_json(self):
        return {"i": self.i, "b": list(self.b) if self.b is not None else None,
                "betti": self.betti, "bass_degree": list(self.bass_degree), "bass": self.bass,
                "prime": list(members(self.prime))}


@dataclass
class ProbeReport:
    a: Degree
    compared: int = 0
    matches: int = 0
    mismatches: list = field(default_factory=list)
    betti_totals: list = field(default_factory=list)
    bass_totals: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    @property
    def totals_agree(self) -> bool:
        n = max(len(self.betti_totals), len(self.bass_totals))
        pad = lambda v: list(v) + [0] * (n - len(v))
        return pad(self.betti_totals) == pad(self.bass_totals)

    def to_json(self):
        return {"a": list(self.a), "compared": self.compared, "matches": self.matches,
                "mismatches": [x.to_json() for x in self.mismatches],
                "betti_totals": self.betti_totals, "bass_totals": self.bass_totals,
                "totals_agree": self.totals_agree, "pass": self.passed}


def duality_probe(P: Presentation, Q: Presentation, a: Sequence[int]) -> ProbeReport:
    """Compare beta_{i,b}(Q) with mu_{i,(a\\b)-supp(b)}(p_supp(b), coker P) degreewise.

    Every b in [0, a] is compared, plus any Betti degree of Q outside the
    box.  Bass entries of coker P that no b reaches are reported as
    mismatches with ``b=None``.
    """
    require_valid(P)
    require_valid(Q)
    a = tuple(a)
    m = P.nvars
    if Q.nvars != m or len(a) != m:
        raise ValueError("P, Q and a must share the number of variables")
    _check_box(a)
    betti = betti_table(Q, check_minimal=False)
    bass = {}
    for k in range(m + 1):
        for A in _subsets(m, k):
            bass[mask(A)] = bass_at_prime(P, A)
    rep = ProbeReport(a)
    top = max(m, betti.length)
    reached = set()
    degrees = set(degree_box((0,) * m, a))
    for i in range(top + 1):
        degrees.update(betti.entries.get(i, {}))
    for b in sorted(degrees):
        inside = all(0 <= x for x in b) and leq(b, a)
        for i in range(top + 1):
            beta = betti.get(i, b)
            if not inside:
                if beta:
                    rep.mismatches.append(ProbeMismatch(i, b, beta, (), 0, 0))
                    rep.compared += 1
                continue
            s = support(b)
            deg = sub(complement_degree(a, b), [1 if x >= 1 else 0 for x in b])
            mu = bass[s].get(i, deg)
            reached.add((s, i, deg))
            rep.compared += 1
            if mu == beta:
                rep.matches += 1
            else:
                rep.mismatches.append(ProbeMismatch(i, b, beta, deg, mu, s))
    for s, table in sorted(bass.items()):
        for i, entries in sorted(table.entries.items()):
            for deg, mu in sorted(entries.items()):
                if (s, i, deg) not in reached:
                    rep.mismatches.append(ProbeMismatch(i, None, 0, deg, mu, s))
    rep.betti_totals = [betti.total(i) for i in range(top + 1)]
    rep.bass_totals = [sum(t.total(i) for t in bass.values()) for i in range(m + 1)]
    return rep


def _subsets(m: int, k: int):
    from itertools import combinations
    return combinations(range(m), k)
