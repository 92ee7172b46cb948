"""Exact linear algebra over the rationals.

Matrices are plain lists of rows whose entries are ``int`` or ``Fraction``.
Sparse vectors are dicts mapping a hashable key to a non-zero ``Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Hashable, Iterable, Sequence

Matrix = Sequence[Sequence]
SparseVec = dict


def _integer_rows(A: Matrix) -> list[list[int]]:
    rows = []
    for row in A:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
            elif not isinstance(x, int):
                raise TypeError(f"exact entries only (int or Fraction), got {type(x).__name__}")
        rows.append([int(x * den) for x in row])
    return rows


def rank_exact(A: Matrix) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination.

    Each row is first scaled by the lcm of its denominators, which leaves the
    rank unchanged and keeps every intermediate value an integer.
    """
    M = [r for r in _integer_rows(A) if any(r)]
    if not M:
        return 0
    nrows, ncols = len(M), len(M[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((r for r in range(rank, nrows) if M[r][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        p = M[rank][col]
        prow = M[rank]
        for r in range(rank + 1, nrows):
            row = M[r]
            a = row[col]
            for c in range(col + 1, ncols):
                row[c] = (p * row[c] - a * prow[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
    return rank


def rank_gauss(A: Matrix) -> int:
    """Rank by ordinary Gaussian elimination on Fractions (reference path)."""
    M = [[Fraction(x) for x in row] for row in A]
    if not M:
        return 0
    nrows, ncols = len(M), len(M[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if M[r][col] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for r in range(nrows):
            if r != rank and M[r][col] != 0:
                f = M[r][col] / M[rank][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def nullspace(A: Matrix) -> list[list[Fraction]]:
    """Basis of {x : A x = 0} from the reduced row echelon form.

    Basis vectors have a 1 in their free column, so the result is canonical.
    """
    M = [[Fraction(x) for x in row] for row in A]
    ncols = len(M[0]) if M else 0
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(M)) if M[r][col] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = 1 / M[rank][col]
        M[rank] = [x * inv for x in M[rank]]
        for r in range(len(M)):
            if r != rank and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -M[r][fc]
        basis.append(v)
    return basis


def sparse_nullspace(columns: Sequence[SparseVec]) -> list[list[Fraction]]:
    """Null space of the matrix whose j-th column is the sparse vector ``columns[j]``."""
    keys = sorted({k for col in columns for k in col}, key=repr)
    if not keys:
        return [[Fraction(int(i == j)) for i in range(len(columns))] for j in range(len(columns))]
    row_of = {k: r for r, k in enumerate(keys)}
    A = [[Fraction(0)] * len(columns) for _ in keys]
    for j, col in enumerate(columns):
        for k, v in col.items():
            A[row_of[k]][j] = v
    return nullspace(A)


class Echelon:
    """Incremental echelon basis of sparse vectors.

    ``insert`` either accepts a vector as a new basis element or returns its
    coordinates on the already accepted elements. Coordinates refer to the
    order of acceptance.
    """

    def __init__(self) -> None:
        # pivot key -> (reduced vector, combination of accepted vectors)
        self._rows: dict[Hashable, tuple[SparseVec, dict[int, Fraction]]] = {}
        self._order: list[Hashable] = []
        self.size = 0

    def reduce(self, vec: SparseVec) -> tuple[SparseVec, dict[int, Fraction]]:
        """Return (residual, c) with vec = residual + sum_j c[j] * accepted_j."""
        v = {k: Fraction(x) for k, x in vec.items() if x}
        comb: dict[int, Fraction] = {}
        for pk in self._order:
            a = v.get(pk)
            if not a:
                continue
            row, rcomb = self._rows[pk]
            for k, x in row.items():
                y = v.get(k, 0) - a * x
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
            for j, x in rcomb.items():
                y = comb.get(j, 0) + a * x
                if y:
                    comb[j] = y
                else:
                    comb.pop(j, None)
        return v, comb

    def insert(self, vec: SparseVec) -> tuple[bool, dict[int, Fraction]]:
        resid, comb = self.reduce(vec)
        if not resid:
            return False, comb
        pk = min(resid, key=repr)
        inv = 1 / resid[pk]
        row = {k: x * inv for k, x in resid.items()}
        # row = (vec - sum comb_j acc_j) / resid[pk]; vec is the new accepted element
        rcomb = {j: -x * inv for j, x in comb.items()}
        rcomb[self.size] = inv
        # keep existing rows reduced w.r.t. the new pivot
        for opk in self._order:
            orow, ocomb = self._rows[opk]
            a = orow.get(pk)
            if a:
                for k, x in row.items():
                    y = orow.get(k, 0) - a * x
                    if y:
                        orow[k] = y
                    else:
                        orow.pop(k, None)
                for j, x in rcomb.items():
                    y = ocomb.get(j, 0) - a * x
                    if y:
                        ocomb[j] = y
                    else:
                        ocomb.pop(j, None)
        self._rows[pk] = (row, rcomb)
        self._order.append(pk)
        self.size += 1
        return True, {self.size - 1: Fraction(1)}

    def contains(self, vec: SparseVec) -> bool:
        resid, _ = self.reduce(vec)
        return not resid


def dense(sparse_cols: dict[int, SparseVec], nrows: int, ncols: int) -> list[list[Fraction]]:
    """Dense row-major matrix from a column-indexed sparse operator."""
    A = [[Fraction(0)] * ncols for _ in range(nrows)]
    for c, col in sparse_cols.items():
        for r, v in col.items():
            A[r][c] = v
    return A


def matmul(A: Matrix, B: Matrix) -> list[list]:
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def add_into(acc: SparseVec, vec: SparseVec, scale=1) -> SparseVec:
    """acc += scale * vec, dropping zeros. Returns acc."""
    for k, v in vec.items():
        y = acc.get(k, 0) + scale * v
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)
    return acc


def lin_comb(pairs: Iterable[tuple]) -> SparseVec:
    out: SparseVec = {}
    for c, vec in pairs:
        if c:
            add_into(out, vec, c)
    return out
