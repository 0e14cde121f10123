"""Closed-form Betti/Bass upper bounds and the verification harness."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .koszul import betti_table, total_bass
from .module import Presentation, fraction_field_rank, require_valid


class IndexTooSmall(ValueError):
    pass


def binom(a: int, b: int) -> int:
    """C(a, b), zero unless 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def symmetric_power_dim(r: int, k: int) -> int:
    """dim S_k(V) for dim V = r."""
    if r == 0:
        return 1 if k == 0 else 0
    return binom(r + k - 1, k)


def betti_bound(beta0: int, beta1: int, rank: int, i: int) -> int:
    if i < 2:
        raise IndexTooSmall(f"the bound needs i >= 2, got {i}")
    if rank > beta0:
        raise ValueError("module rank exceeds beta0")
    rbar = beta0 - rank
    return binom(beta1, rbar + i - 1) * binom(rbar + i - 3, i - 2)


def brt_rank(n: int, r: int, i: int) -> int:
    """Rank of the i-th free module of the Buchsbaum-Rim-Taylor complex."""
    if i < 2:
        raise IndexTooSmall(f"defined for i >= 2, got {i}")
    if r > n:
        raise ValueError("r must not exceed n")
    return binom(n, r + i - 1) * binom(r + i - 3, i - 2)


def bass_bound(mu0: int, mu1: int, i: int, d: int = 0) -> int:
    if d < 0:
        raise ValueError("d must be >= 0")
    if i < 2 + d:
        raise IndexTooSmall(f"the bound needs i >= 2 + d = {2 + d}, got {i}")
    return betti_bound(mu0, mu1, 0, i - d)


@dataclass
class IndexCheck:
    i: int
    computed: int
    bound: int
    passed: bool = field(init=False)
    equal: bool = field(init=False)

    def __post_init__(self):
        self.passed = self.computed <= self.bound
        self.equal = self.computed == self.bound

    @property
    def slack(self) -> int:
        return self.bound - self.computed

    def to_json(self):
        return {"i": self.i, "computed": self.computed, "bound": self.bound,
                "slack": self.slack, "pass": self.passed, "equal": self.equal}


@dataclass
class VerificationReport:
    kind: str
    checks: list = field(default_factory=list)
    size_checks: list = field(default_factory=list)
    values: list = field(default_factory=list)
    provenance: dict = field(default_factory=dict)
    require_equality: bool = False

    @property
    def passed(self) -> bool:
        ok = all(c.passed for c in self.checks) and all(c.equal for c in self.size_checks)
        if self.require_equality:
            ok = ok and all(c.equal for c in self.checks)
        return ok

    def to_json(self):
        return {
            "kind": self.kind,
            "values": self.values,
            "checks": [c.to_json() for c in self.checks],
            "size_checks": [c.to_json() for c in self.size_checks],
            "provenance": self.provenance,
            "pass": self.passed,
        }


def verify_betti(P: Presentation, jobs: int | None = None) -> VerificationReport:
    require_valid(P)
    table = betti_table(P, jobs=jobs)
    rank_L = P.beta0 - fraction_field_rank(P)
    # report up to the length of the T-flat resolution as well
    lam = P.beta1 - (P.beta0 - rank_L) + 1
    top = max(P.nvars, table.length, lam)
    values = [table.total(i) for i in range(top + 1)]
    rep = VerificationReport(
        "betti", values=values,
        provenance={"beta0": P.beta0, "beta1": P.beta1, "rank": rank_L, "nvars": P.nvars})
    rep.size_checks = [IndexCheck(0, values[0], P.beta0), IndexCheck(1, values[1] if top >= 1 else 0, P.beta1)]
    for i in range(2, top + 1):
        rep.checks.append(IndexCheck(i, values[i], betti_bound(P.beta0, P.beta1, rank_L, i)))
    return rep


def verify_bass(P: Presentation, positive: bool = False, jobs: int | None = None) -> VerificationReport:
    require_valid(P)
    mu = total_bass(P, positive=positive, jobs=jobs)
    rep = VerificationReport("bass", values=mu,
                             provenance={"nvars": P.nvars, "primes": "positive" if positive else "all"})
    for i in range(2, len(mu)):
        rep.checks.append(IndexCheck(i, mu[i], bass_bound(mu[0], mu[1], i)))
    return rep
