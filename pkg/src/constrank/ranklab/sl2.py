"""Explicit sl2 summand matrices and the sl2 scan of constant-rank candidates."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .. import cartan
from ..irrep import WeightModule, build_sl2
from ..linalg import rank_exact
from ..tensor import HomModule, TensorModule, is_primitive
from .verdict import RankConfig, VerdictKind, corank1_pipeline


def sl2_summand_matrix(m: int, n: int, k: int) -> tuple[list[list[int]], list[list[int]]]:
    """Highest and lowest weight vectors of V(n-m+2k) in Hom(V(m), V(n)), as (m+1) x (n+1) arrays.

    Row r and column c stand for the binary forms x^r y^(m-r) and x^c y^(n-c).
    The highest one carries (-1)^i binom(m-k, i) at (m-i, n-m+k+i), with the
    bottom-left entry of the band equal to 1; the lowest is its 180 degree rotation.
    """
    if not 0 <= k <= m <= n:
        raise ValueError(f"need 0 <= k <= m <= n, got m={m} n={n} k={k}")
    high = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(m - k + 1):
        high[m - i][n - m + k + i] = (-1) ** i * comb(m - k, i)
    low = [[high[m - r][n - c] for c in range(n + 1)] for r in range(m + 1)]
    return high, low


def corank_of(A) -> int:
    return len(A) - rank_exact(A)


def binary_forms(m: int) -> WeightModule:
    """V(m) on x^r y^(m-r) (index r): e = x d/dy, f = y d/dx."""
    rs = cartan.build_root_system("A1")
    E = {r: {r + 1: Fraction(m - r)} for r in range(m)}
    F = {r: {r - 1: Fraction(r)} for r in range(1, m + 1)}
    return WeightModule(rs, [(2 * r - m,) for r in range(m + 1)], [E], [F], highest_weight=(m,),
                        label=f"binary forms of degree {m}")


def display_as_tensor(M) -> dict:
    return {(r, c): Fraction(v) for r, row in enumerate(M) for c, v in enumerate(row) if v}


def display_as_hom(m: int, n: int, M) -> dict:
    """Matrix in Hom(build_sl2(m), build_sl2(n)) corresponding to the display M.

    Uses the invariant pairing <x^r y^(m-r), x^(m-r) y^r> = (-1)^r / binom(m, r)
    on V(m) and v_{m-2j} = m!/(m-j)! x^(m-j) y^j.
    """
    T = {}
    for b in range(m + 1):
        eps = Fraction((-1) ** b, comb(m, b))
        for a in range(n + 1):
            v = M[b][n - a]
            if v:
                T[(a, b)] = Fraction(factorial(m), factorial(m - b)) * eps * v * Fraction(factorial(n - a), factorial(n))
    return T


def summand_matrix_checks(m: int, n: int, k: int) -> dict:
    high, low = sl2_summand_matrix(m, n, k)
    tens = TensorModule(binary_forms(m), binary_forms(n))
    t = display_as_tensor(high)
    hom = HomModule(build_sl2(m), build_sl2(n))
    T = display_as_hom(m, n, high)
    both = [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(high, low)]
    return {
        "weight_ok": all(tens.weight_of(key) == (n - m + 2 * k,) for key in t),
        "primitive_in_tensor": is_primitive(tens, t),
        "primitive_in_hom": is_primitive(hom, T) and all(hom.weight_of(key) == (n - m + 2 * k,) for key in T),
        "corank_high": corank_of(high),
        "corank_sum": corank_of(both),
    }


CSV_FIELDS = ["m", "n", "k", "nu", "mult", "rank_closed_orbit", "rank_generic", "verdict", "seed"]


@dataclass
class ScanRow:
    m: int
    n: int
    k: int
    nu: int
    mult: int
    rank_closed_orbit: int
    rank_generic: int
    verdict: str
    seed: int
    flagged: bool = False
    consistent: bool = True
    witnesses: tuple = ()

    def csv_row(self) -> list:
        return [self.m, self.n, self.k, self.nu, self.mult, self.rank_closed_orbit,
                self.rank_generic, self.verdict, self.seed]

    def to_dict(self) -> dict:
        d = dict(zip(CSV_FIELDS, self.csv_row()))
        d["flagged"] = self.flagged
        d["consistent"] = self.consistent
        d["witnesses"] = [[str(x) for x in u] for u in self.witnesses]
        return d


@dataclass
class ScanResult:
    max_n: int
    rows: list[ScanRow]
    truncated: bool

    @property
    def flagged(self) -> list[ScanRow]:
        return [r for r in self.rows if r.flagged]

    @property
    def inconsistent(self) -> list[ScanRow]:
        return [r for r in self.rows if not r.consistent]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for r in self.rows:
            w.writerow(r.csv_row())
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({"max_n": self.max_n, "truncated": self.truncated,
                           "flagged": len(self.flagged), "rows": [r.to_dict() for r in self.rows]},
                          sort_keys=True)


def scan_cell(m: int, n: int, k: int, cfg: RankConfig) -> ScanRow:
    rs = cartan.build_root_system("A1")
    nu = n - m + 2 * k
    rep = corank1_pipeline(rs, (nu,), (m,), (n,), cfg)
    (cand,) = rep.candidates
    v = cand.verdict
    closed, generic = v.min_rank_witness[1], v.max_rank_witness[1]
    # constant with corank >= 2 would be a new example beyond the classification
    flagged = v.kind is VerdictKind.PROBABLY_CONSTANT and (m + 1) - closed >= 2
    return ScanRow(m, n, k, nu, rep.multiplicity, closed, generic, v.kind.value, cfg.seed,
                   flagged, rep.consistent, (v.min_rank_witness[0], v.max_rank_witness[0]))


def sl2_scan(max_n: int, cfg: RankConfig = RankConfig(), budget_seconds: float = 600.0) -> ScanResult:
    """All (m, n, k) with m <= n <= max_n, 0 <= k <= m, ordered by (m, n, k)."""
    start = time.monotonic()
    rows = []
    truncated = False
    for n in range(max_n + 1):
        for m in range(n + 1):
            if time.monotonic() - start > budget_seconds:
                truncated = True
                break
            for k in range(m + 1):
                rows.append(scan_cell(m, n, k, cfg))
        if truncated:
            break
    rows.sort(key=lambda r: (r.m, r.n, r.k))
    return ScanResult(max_n, rows, truncated)
