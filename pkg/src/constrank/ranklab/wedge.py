"""The GL(V)-equivariant space Lambda^k V -> Hom(Lambda^r V, Lambda^(r+k) V)."""

from __future__ import annotations

from itertools import combinations
from math import comb

from ..linalg import rank_exact
from ..tensor import LinearMatrixSpace


def wedge_sign(S: tuple[int, ...], T: tuple[int, ...]) -> int:
    """Sign of e_S ^ e_T = sign * e_(S u T), 0 if they overlap."""
    if set(S) & set(T):
        return 0
    inversions = sum(1 for s in S for t in T if s > t)
    return -1 if inversions % 2 else 1


def wedge_theta(n: int, r: int, k: int) -> LinearMatrixSpace:
    """Matrices of w -> e_S ^ w for every k-subset S, in lexicographic subset bases."""
    if r < 1 or k < 1 or r + k >= n:
        raise ValueError(f"need r, k >= 1 and r + k < n, got n={n} r={r} k={k}")
    src = list(combinations(range(n), r))
    tgt = {T: j for j, T in enumerate(combinations(range(n), r + k))}
    mats = []
    for S in combinations(range(n), k):
        mat = {}
        for c, T in enumerate(src):
            s = wedge_sign(S, T)
            if s:
                mat[(tgt[tuple(sorted(S + T))], c)] = s
        mats.append(mat)
    return LinearMatrixSpace((comb(n, r + k), comb(n, r)), mats)


def wedge_kernel_compare(n: int, r: int, k: int) -> tuple[int, int]:
    """(dim ker E, dim ker (E + E')) for E = theta(e_1..k), E' = theta(e_(n-k+1)..n)."""
    L = wedge_theta(n, r, k)
    first = [1] + [0] * (L.param_dim - 1)
    last = [0] * (L.param_dim - 1) + [1]
    both = [a + b for a, b in zip(first, last)]
    ncols = L.shape[1]
    return ncols - rank_exact(L.evaluate(first)), ncols - rank_exact(L.evaluate(both))


def wedge_claim_holds(n: int, r: int, k: int) -> bool:
    kerE, kerSum = wedge_kernel_compare(n, r, k)
    return kerE > kerSum if k >= 2 else kerE == kerSum
