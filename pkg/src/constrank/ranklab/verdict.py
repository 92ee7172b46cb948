"""Rank profiles of equivariant matrix spaces and the corank-one classification check."""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional

from .. import cartan
from ..cartan import RootSystem, Weight, sub
from ..irrep import DEFAULT_GUARD, GuardExceeded, build_irrep
from ..linalg import rank_exact
from ..tensor import (HomModule, LinearMatrixSpace, equivariant_map_space, primitive_space,
                      random_combination, sym_primitive_vanishing)


class VerdictKind(str, Enum):
    CERTIFIED_NOT_CONSTANT = "CertifiedNotConstant"
    CONSTANT_CORANK_ONE = "ConstantCorankOneCertified"
    PROBABLY_CONSTANT = "ProbablyConstant"


@dataclass(frozen=True)
class RankConfig:
    samples: int = 5
    bound: int = 10
    seed: int = 42
    guard: int = DEFAULT_GUARD
    # random combinations tried on top of the primitive basis when a summand repeats
    extra_combinations: int = 2

    def __post_init__(self):
        if self.samples < 1 or self.bound < 1 or self.guard < 1:
            raise ValueError("samples, bound and guard must all be >= 1")


@dataclass
class RankVerdict:
    kind: VerdictKind
    min_rank_witness: tuple[list, int]
    max_rank_witness: tuple[list, int]
    samples: int
    seed: int
    sampled_ranks: list[int] = field(default_factory=list)

    @property
    def common_rank(self) -> Optional[int]:
        if self.kind is VerdictKind.CERTIFIED_NOT_CONSTANT:
            return None
        return self.min_rank_witness[1]

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "min_rank_witness": {"u": [str(x) for x in self.min_rank_witness[0]], "rank": self.min_rank_witness[1]},
            "max_rank_witness": {"u": [str(x) for x in self.max_rank_witness[0]], "rank": self.max_rank_witness[1]},
            "samples": self.samples,
            "seed": self.seed,
            "sampled_ranks": list(self.sampled_ranks),
        }


class SemicontinuityError(AssertionError):
    pass


def rank_at_closed_orbit(L: LinearMatrixSpace) -> int:
    """Rank at the highest-weight vector, i.e. the minimum over all nonzero u."""
    u = [1] + [0] * (L.param_dim - 1)
    return rank_exact(L.evaluate(u))


def _sample_vector(dim: int, bound: int, rng: random.Random) -> list[int]:
    while True:
        u = [rng.randint(-bound, bound) for _ in range(dim)]
        if any(u):
            return u


def sample_ranks(L: LinearMatrixSpace, samples: int, bound: int, rng: random.Random) -> list[tuple[list[int], int]]:
    out = []
    for _ in range(samples):
        u = _sample_vector(L.param_dim, bound, rng)
        out.append((u, rank_exact(L.evaluate(u))))
    return out


def generic_rank_estimate(L: LinearMatrixSpace, samples: int = 5, bound: int = 10, seed=42) -> tuple[int, list[int]]:
    """Largest rank seen over ``samples`` random integer points; deterministic in ``seed``."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    u, r = max(sample_ranks(L, samples, bound, rng), key=lambda t: t[1])
    return r, u


@dataclass
class TheoremConditions:
    holds: bool
    i: Optional[int] = None
    d: Optional[int] = None

    def to_dict(self) -> dict:
        return asdict(self)


def _positive_multiple(big: Weight, small: Weight) -> Optional[int]:
    """d >= 1 with big == d * small, else None."""
    if not any(small):
        return None
    d = None
    for b, s in zip(big, small):
        if s == 0:
            if b != 0:
                return None
            continue
        if b % s:
            return None
        q = b // s
        if d is None:
            d = q
        elif q != d:
            return None
    return d if d and d >= 1 else None


def theorem_conditions(rs: RootSystem, nu: Weight, mu: Weight, lam: Weight) -> TheoremConditions:
    """Is there i with lam = nu + mu - alpha_i, mu = d nu (d >= 1) and mu a positive multiple of omega_i?"""
    nu, mu, lam = tuple(nu), tuple(mu), tuple(lam)
    for i in range(rs.rank):
        if cartan.add(lam, rs.simple_root(i)) != cartan.add(nu, mu):
            continue
        d = _positive_multiple(mu, nu)
        if d is None:
            continue
        if mu[i] > 0 and all(c == 0 for j, c in enumerate(mu) if j != i):
            return TheoremConditions(True, i, d)
    return TheoremConditions(False)


def verdict(L: LinearMatrixSpace, mu_dim: int, conditions: TheoremConditions,
            cfg: RankConfig = RankConfig(), rng: Optional[random.Random] = None) -> RankVerdict:
    if L.is_degenerate():
        raise ValueError("degenerate matrix space: every matrix is zero")
    rng = rng or random.Random(cfg.seed)
    e0 = [1] + [0] * (L.param_dim - 1)
    closed = rank_at_closed_orbit(L)
    sampled = sample_ranks(L, cfg.samples, cfg.bound, rng)
    for u, r in sampled:
        if r < closed:
            raise SemicontinuityError(f"rank {r} at {u} is below the closed-orbit rank {closed}")
    u_max, generic = max(sampled, key=lambda t: t[1])
    ranks = [r for _, r in sampled]
    if generic != closed:
        kind = VerdictKind.CERTIFIED_NOT_CONSTANT
    elif conditions.holds and closed == mu_dim - 1:
        kind = VerdictKind.CONSTANT_CORANK_ONE
    else:
        kind = VerdictKind.PROBABLY_CONSTANT
    return RankVerdict(kind, (e0, closed), (u_max, generic), cfg.samples, cfg.seed, ranks)


@dataclass
class CandidateReport:
    label: str
    verdict: RankVerdict

    def to_dict(self) -> dict:
        return {"label": self.label, **self.verdict.to_dict()}


@dataclass
class PipelineReport:
    root_system: str
    nu: Weight
    mu: Weight
    lam: Weight
    dim_nu: int
    dim_mu: int
    dim_lam: int
    multiplicity: int
    conditions: TheoremConditions
    candidates: list[CandidateReport]
    # symmetrisation obstruction check for theorem cases (None if not applicable or over guard)
    sym_vanishing: Optional[bool]
    consistent: bool
    problems: list[str]
    seed: int

    @property
    def kinds(self) -> list[VerdictKind]:
        return [c.verdict.kind for c in self.candidates]

    def to_dict(self) -> dict:
        return {
            "root_system": self.root_system,
            "nu": list(self.nu), "mu": list(self.mu), "lambda": list(self.lam),
            "dim_nu": self.dim_nu, "dim_mu": self.dim_mu, "dim_lambda": self.dim_lam,
            "multiplicity": self.multiplicity,
            "conditions": self.conditions.to_dict(),
            "candidates": [c.to_dict() for c in self.candidates],
            "sym_vanishing": self.sym_vanishing,
            "consistent": self.consistent,
            "problems": list(self.problems),
            "seed": self.seed,
        }


def corank1_pipeline(rs: RootSystem, nu: Weight, mu: Weight, lam: Weight,
                     cfg: RankConfig = RankConfig()) -> PipelineReport:
    nu, mu, lam = tuple(nu), tuple(mu), tuple(lam)
    for w in (nu, mu, lam):
        if len(w) != rs.rank or not cartan.is_dominant(w):
            raise ValueError(f"{w} is not a dominant weight of {rs}")
    Vmu = build_irrep(rs, mu, cfg.guard)
    Vlam = build_irrep(rs, lam, cfg.guard)
    Vnu = build_irrep(rs, nu, cfg.guard)
    hom = HomModule(Vmu, Vlam)
    prim = primitive_space(hom, nu)
    conditions = theorem_conditions(rs, nu, mu, lam)
    rng = random.Random(cfg.seed)

    cands: list[tuple[str, dict]] = [(f"basis[{k}]", v) for k, v in enumerate(prim.vectors)]
    if prim.dim > 1:
        cands += [(f"random[{k}]", random_combination(prim.vectors, rng))
                  for k in range(cfg.extra_combinations)]
    reports = []
    for label, W0 in cands:
        L = equivariant_map_space(rs, nu, W0, hom, cfg.guard)
        reports.append(CandidateReport(label, verdict(L, Vmu.dim, conditions, cfg, rng)))

    sym_ok = None
    if conditions.holds:
        try:
            sym_ok = sym_primitive_vanishing(rs, nu, conditions.d + 1, conditions.i, cfg.guard)
        except GuardExceeded:
            sym_ok = None

    problems = []
    applies = Vmu.dim <= Vlam.dim
    if conditions.holds and applies:
        if prim.dim == 0:
            problems.append("theorem conditions hold but nu is not a summand")
        for c in reports:
            if c.verdict.kind is not VerdictKind.CONSTANT_CORANK_ONE:
                problems.append(f"{c.label}: theorem conditions hold but verdict is {c.verdict.kind.value}")
    if sym_ok is False:
        problems.append("symmetric power contains a primitive vector of weight (d+1)nu - alpha_i")
    for c in reports:
        if c.verdict.kind is VerdictKind.CERTIFIED_NOT_CONSTANT and conditions.holds and applies:
            problems.append(f"{c.label}: non-constant rank certified although conditions hold")

    return PipelineReport(str(rs), nu, mu, lam, Vnu.dim, Vmu.dim, Vlam.dim, prim.dim, conditions,
                          reports, sym_ok, not problems, problems, cfg.seed)


def corank(report: PipelineReport, cand: CandidateReport) -> Optional[int]:
    r = cand.verdict.common_rank
    if r is None:
        return None
    return min(report.dim_mu, report.dim_lam) - r
