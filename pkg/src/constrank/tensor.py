"""Tensor and Hom modules, primitive vectors, decompositions, equivariant maps.

Every ambient object exposes the same small surface used by
``primitive_space`` and ``decompose``: ``rs``, ``dim``, ``index`` (weight ->
basis keys), ``basis_at(gamma)`` and ``raise_(i, key)`` returning a sparse
vector.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import cartan
from .cartan import RootSystem, Weight, add, sub
from .irrep import (DEFAULT_GUARD, WeightModule, build_irrep, dual_module, symmetric_power_module,
                    weyl_dim)
from .linalg import Echelon, add_into, sparse_nullspace


class EquivarianceError(AssertionError):
    pass


class TensorModule:
    """M (x) N with keys (a, b)."""

    def __init__(self, M: WeightModule, N: WeightModule):
        if M.rs.spec != N.rs.spec:
            raise ValueError("factors belong to different root systems")
        self.rs, self.M, self.N = M.rs, M, N
        index: dict[Weight, list] = {}
        for wa, As in M.index.items():
            for wb, Bs in N.index.items():
                index.setdefault(add(wa, wb), []).extend((a, b) for a in As for b in Bs)
        self.index = {w: sorted(ks) for w, ks in index.items()}

    @property
    def dim(self) -> int:
        return self.M.dim * self.N.dim

    def basis_at(self, gamma: Weight) -> list:
        return self.index.get(tuple(gamma), [])

    def weight_of(self, key) -> Weight:
        return add(self.M.weights[key[0]], self.N.weights[key[1]])

    def raise_(self, i: int, key) -> dict:
        a, b = key
        out = {(c, b): v for c, v in self.M.E[i].get(a, {}).items()}
        for c, v in self.N.E[i].get(b, {}).items():
            add_into(out, {(a, c): v})
        return out

    def __repr__(self):
        return f"TensorModule({self.M.label} (x) {self.N.label})"


class HomModule:
    """Hom(source, target) as matrices; key (a, b) is the unit sending source b to target a.

    Generators act by commutators: x.T = X_target T - T X_source.
    """

    def __init__(self, source: WeightModule, target: WeightModule):
        if source.rs.spec != target.rs.spec:
            raise ValueError("modules belong to different root systems")
        self.rs, self.source, self.target = source.rs, source, target
        index: dict[Weight, list] = {}
        for wt, As in target.index.items():
            for ws, Bs in source.index.items():
                index.setdefault(sub(wt, ws), []).extend((a, b) for a in As for b in Bs)
        self.index = {w: sorted(ks) for w, ks in index.items()}

    @property
    def dim(self) -> int:
        return self.source.dim * self.target.dim

    @property
    def shape(self) -> tuple[int, int]:
        return self.target.dim, self.source.dim

    def basis_at(self, gamma: Weight) -> list:
        return self.index.get(tuple(gamma), [])

    def weight_of(self, key) -> Weight:
        return sub(self.target.weights[key[0]], self.source.weights[key[1]])

    def _act(self, T_op, S_rows, key) -> dict:
        a, b = key
        out = {(r, b): v for r, v in T_op.get(a, {}).items()}
        for c, v in S_rows.get(b, {}).items():
            add_into(out, {(a, c): v}, -1)
        return out

    def raise_(self, i: int, key) -> dict:
        return self._act(self.target.E[i], self.source.E_rows[i], key)

    def lower_(self, i: int, key) -> dict:
        return self._act(self.target.F[i], self.source.F_rows[i], key)

    def act_E(self, i: int, T: dict) -> dict:
        out: dict = {}
        for key, c in T.items():
            add_into(out, self.raise_(i, key), c)
        return out

    def act_F(self, i: int, T: dict) -> dict:
        out: dict = {}
        for key, c in T.items():
            add_into(out, self.lower_(i, key), c)
        return out

    def __repr__(self):
        return f"HomModule({self.source.label} -> {self.target.label})"


def transpose_matrix(T: dict) -> dict:
    """Transpose of a sparse matrix {(row, col): value}."""
    return {(b, a): v for (a, b), v in T.items()}


def tensor_weight_space(M: WeightModule, N: WeightModule, gamma: Weight) -> list[tuple[int, int]]:
    out = []
    for wa, As in M.index.items():
        Bs = N.basis_at(sub(gamma, wa))
        out.extend((a, b) for a in As for b in Bs)
    return sorted(out)


@dataclass
class PrimitiveBasis:
    ambient: str
    weight: Weight
    vectors: list[dict] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.vectors)


def primitive_space(ambient, gamma: Weight) -> PrimitiveBasis:
    """Joint kernel of all raising operators on the gamma weight space."""
    gamma = tuple(gamma)
    keys = ambient.basis_at(gamma)
    if not keys:
        return PrimitiveBasis(repr(ambient), gamma, [])
    columns = []
    for key in keys:
        col: dict = {}
        for i in range(ambient.rs.rank):
            for k, v in ambient.raise_(i, key).items():
                col[(i, k)] = v
        columns.append(col)
    null = sparse_nullspace(columns)
    vectors = [{keys[j]: x for j, x in enumerate(v) if x} for v in null]
    return PrimitiveBasis(repr(ambient), gamma, vectors)


def is_primitive(ambient, vec: dict) -> bool:
    for i in range(ambient.rs.rank):
        out: dict = {}
        for key, c in vec.items():
            add_into(out, ambient.raise_(i, key), c)
        if out:
            return False
    return True


def decompose(ambient) -> list[tuple[Weight, int]]:
    """Irreducible summands (highest weight, multiplicity), largest weights first."""
    rs = ambient.rs
    summands = []
    for gamma in ambient.index:
        if cartan.is_dominant(gamma):
            m = primitive_space(ambient, gamma).dim
            if m:
                summands.append((gamma, m))
    summands.sort(key=lambda s: (-sum(s[0]), tuple(-c for c in s[0])))
    total = sum(m * weyl_dim(rs, g) for g, m in summands)
    if total != ambient.dim:
        raise AssertionError(f"summand dimensions add up to {total}, ambient has {ambient.dim}")
    return summands


def decomposition_json(rs: RootSystem, summands: Sequence[tuple[Weight, int]]) -> list[dict]:
    return [{"weight": list(g), "multiplicity": m, "dim": weyl_dim(rs, g)} for g, m in summands]


def dumps_decomposition(rs: RootSystem, summands) -> str:
    return json.dumps(decomposition_json(rs, summands), sort_keys=True)


@dataclass(eq=False)
class LinearMatrixSpace:
    """One matrix per basis vector of the parameter space; matrices are sparse {(row, col): value}."""

    shape: tuple[int, int]
    matrices: list[dict]
    rs: Optional[RootSystem] = None
    nu: Optional[Weight] = None
    param_module: Optional[WeightModule] = None
    hom: Optional[HomModule] = None

    @property
    def param_dim(self) -> int:
        return len(self.matrices)

    def evaluate(self, u: Sequence) -> list[list[Fraction]]:
        if len(u) != self.param_dim:
            raise ValueError(f"expected {self.param_dim} coordinates, got {len(u)}")
        rows, cols = self.shape
        A = [[0] * cols for _ in range(rows)]
        for c, mat in zip(u, self.matrices):
            if c:
                for (r, s), v in mat.items():
                    A[r][s] += c * v
        return A

    def is_degenerate(self) -> bool:
        return not any(self.matrices)


def equivariant_map_space(rs: RootSystem, nu: Weight, W0: dict, hom: HomModule,
                          guard: int = DEFAULT_GUARD, check: bool = True) -> LinearMatrixSpace:
    """Copy of V(nu) generated by the primitive matrix W0 of weight nu.

    Basis vector f_i1 ... f_ik v_nu of V(nu) is sent to act_F(i1) ... act_F(ik) W0.
    """
    nu = tuple(nu)
    if not W0:
        raise ValueError("W0 is zero")
    if any(hom.weight_of(k) != nu for k in W0):
        raise ValueError(f"W0 is not homogeneous of weight {nu}")
    if not is_primitive(hom, W0):
        raise ValueError("W0 is not primitive")
    V = build_irrep(rs, nu, guard)
    mats: list[dict] = [dict(W0)]
    for b in range(1, V.dim):
        i, p = V.parents[b]
        mats.append(hom.act_F(i, mats[p]))
    L = LinearMatrixSpace(hom.shape, mats, rs=rs, nu=nu, param_module=V, hom=hom)
    if check:
        check_equivariance(L)
    return L


def check_equivariance(L: LinearMatrixSpace) -> None:
    V, hom = L.param_module, L.hom
    for i in range(L.rs.rank):
        for b in range(V.dim):
            for act, op in ((hom.act_E, V.E[i]), (hom.act_F, V.F[i])):
                lhs = act(i, L.matrices[b])
                rhs: dict = {}
                for c, v in op.get(b, {}).items():
                    add_into(rhs, L.matrices[c], v)
                if lhs != rhs:
                    raise EquivarianceError(f"equivariance fails for generator {i} at basis vector {b}")


def random_combination(vectors: Sequence[dict], rng: random.Random, bound: int = 10) -> dict:
    while True:
        coeffs = [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in vectors]
        out: dict = {}
        for c, v in zip(coeffs, vectors):
            add_into(out, v, c)
        if out:
            return out


def sym_primitive_vanishing(rs: RootSystem, nu: Weight, r: int, i: int, guard: int = DEFAULT_GUARD) -> bool:
    """No primitive vector of weight r*nu - alpha_i in Sym^r V(nu)."""
    V = build_irrep(rs, nu, guard)
    S = symmetric_power_module(V, r, guard)
    gamma = sub(cartan.scale(r, tuple(nu)), rs.simple_root(i))
    return primitive_space(S, gamma).dim == 0


def b_generation_check(rs: RootSystem, mu: Weight, guard: int = DEFAULT_GUARD) -> bool:
    """In V(mu)*, the weight spaces at -mu + alpha_i generate everything above -mu under raising."""
    D = dual_module(build_irrep(rs, mu, guard))
    lowest = tuple(-c for c in mu)
    order = sorted(D.support(), key=lambda g: rs.height(rs.to_simple_coords(sub(g, lowest))))
    spans: dict[Weight, Echelon] = {}
    vecs: dict[Weight, list[dict]] = {}
    for i in range(rs.rank):
        g = add(lowest, rs.simple_root(i))
        for b in D.basis_at(g):
            v = {b: Fraction(1)}
            if spans.setdefault(g, Echelon()).insert(v)[0]:
                vecs.setdefault(g, []).append(v)
    for g in order:
        for v in vecs.get(g, []):
            for j in range(rs.rank):
                w = D.apply(D.E[j], v)
                if not w:
                    continue
                tgt = add(g, rs.simple_root(j))
                if spans.setdefault(tgt, Echelon()).insert(w)[0]:
                    vecs.setdefault(tgt, []).append(w)
    for g, keys in D.index.items():
        expected = 0 if g == lowest else len(keys)
        got = spans[g].size if g in spans else 0
        if got != expected:
            return False
    return True


@dataclass
class PRVCandidate:
    word: list[int]
    weight: Weight
    tag: str = ""


def prv_candidates(rs: RootSystem, lam: Weight, mu: Weight, cap: int = 120) -> list[PRVCandidate]:
    """Dominant representatives of mu - w lam over the Weyl group (summands of Hom(V(lam), V(mu)))."""
    words = cartan.weyl_group_words(rs, cap)
    out = []
    for k, word in enumerate(words):
        ext = sub(tuple(mu), cartan.apply_word(rs, word, tuple(lam)))
        dom, _ = cartan.dominant_representative(rs, ext)
        tag = "smallest" if k == 0 else ("biggest" if k == len(words) - 1 else "")
        out.append(PRVCandidate(word, dom, tag))
    return out
